//! Parser for the sliced-diagram file format.
//!
//! One slice per line, bottom first. Tokens are space-separated from
//! {id, x+, x-, cupl, cupr, capl, capr, coupon:NAME}; `#` starts a comment.
//! Boundary counts must match between consecutive slices and strand
//! orientations must be consistent with every cup, cap and coupon.

use thiserror::Error;

use super::ast::{CouponSignatures, ElementaryPiece, SlicedDiagram};
use crate::rep::Sign;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ParseError {
    #[error("line {line}, col {col}: unknown token `{token}`")]
    UnknownToken { line: usize, col: usize, token: String },
    #[error("line {line}, col {col}: unknown coupon `{name}`")]
    UnknownCoupon { line: usize, col: usize, name: String },
    #[error("line {line}: boundary mismatch: slice consumes {expected} strands but {got} are present")]
    BoundaryMismatch { line: usize, expected: usize, got: usize },
    #[error("diagram has open {0} boundary ({1} strands)")]
    OpenBoundary(&'static str, usize),
    #[error("line {line}, col {col}: orientation mismatch at `{token}`")]
    OrientationMismatch { line: usize, col: usize, token: String },
    #[error("line {line}, col {col}: coupon `{name}` boundary does not fit the slice")]
    CouponArity { line: usize, col: usize, name: String },
}

struct Located {
    piece: ElementaryPiece,
    line: usize,
    col: usize,
}

/// Parse a closed diagram (empty top and bottom boundary).
pub fn parse_diagram(text: &str) -> Result<SlicedDiagram, ParseError> {
    parse_with_coupons(text, &CouponSignatures::new())
}

pub fn parse_with_coupons(
    text: &str,
    coupons: &CouponSignatures,
) -> Result<SlicedDiagram, ParseError> {
    let d = parse_open(text, coupons)?;
    if d.levels.first() != Some(&0) {
        return Err(ParseError::OpenBoundary("bottom", *d.levels.first().unwrap()));
    }
    if d.levels.last() != Some(&0) {
        return Err(ParseError::OpenBoundary("top", *d.levels.last().unwrap()));
    }
    Ok(d)
}

/// Parse without requiring a closed boundary; unresolved orientations
/// default to `+` (downward).
pub fn parse_open(
    text: &str,
    coupons: &CouponSignatures,
) -> Result<SlicedDiagram, ParseError> {
    let mut slices: Vec<Vec<Located>> = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = lineno + 1;
        let content = match raw.find('#') {
            Some(i) => &raw[..i],
            None => raw,
        };
        let mut pieces = Vec::new();
        let mut col = 0;
        for chunk in content.split_inclusive(char::is_whitespace) {
            let token = chunk.trim_end();
            let start_col = col + 1;
            col += chunk.len();
            if token.is_empty() {
                continue;
            }
            let piece = match token {
                "id" => ElementaryPiece::Id,
                "x+" => ElementaryPiece::XPos,
                "x-" => ElementaryPiece::XNeg,
                "cupl" => ElementaryPiece::CupL,
                "cupr" => ElementaryPiece::CupR,
                "capl" => ElementaryPiece::CapL,
                "capr" => ElementaryPiece::CapR,
                _ => {
                    if let Some(name) = token.strip_prefix("coupon:") {
                        let sig = coupons.get(name).ok_or(ParseError::UnknownCoupon {
                            line,
                            col: start_col,
                            name: name.to_string(),
                        })?;
                        ElementaryPiece::Coupon {
                            name: name.to_string(),
                            inputs: sig.domain.len(),
                            outputs: sig.codomain.len(),
                        }
                    } else {
                        return Err(ParseError::UnknownToken {
                            line,
                            col: start_col,
                            token: token.to_string(),
                        });
                    }
                }
            };
            pieces.push(Located { piece, line, col: start_col });
        }
        if !pieces.is_empty() {
            slices.push(pieces);
        }
    }

    // boundary bookkeeping
    let bottom = slices
        .first()
        .map(|s| s.iter().map(|p| p.piece.inputs()).sum())
        .unwrap_or(0);
    let mut levels = vec![bottom];
    for slice in &slices {
        let need: usize = slice.iter().map(|p| p.piece.inputs()).sum();
        let have = *levels.last().unwrap();
        if need != have {
            return Err(ParseError::BoundaryMismatch {
                line: slice[0].line,
                expected: need,
                got: have,
            });
        }
        levels.push(slice.iter().map(|p| p.piece.outputs()).sum());
    }

    let orientations = resolve_orientations(&slices, &levels, coupons)?;
    Ok(SlicedDiagram {
        slices: slices
            .into_iter()
            .map(|s| s.into_iter().map(|l| l.piece).collect())
            .collect(),
        levels,
        orientations,
    })
}

/// Fixed-point propagation of orientation constraints.
fn resolve_orientations(
    slices: &[Vec<Located>],
    levels: &[usize],
    coupons: &CouponSignatures,
) -> Result<Vec<Vec<Sign>>, ParseError> {
    let mut orient: Vec<Vec<Option<Sign>>> = levels.iter().map(|n| vec![None; *n]).collect();
    type Slot = (usize, usize); // (level, position)

    loop {
        let mut changed = false;
        for (si, slice) in slices.iter().enumerate() {
            let mut bot = 0usize;
            let mut top = 0usize;
            for located in slice {
                let piece = &located.piece;
                let mut equal: Vec<(Slot, Slot)> = Vec::new();
                let mut fixed: Vec<(Slot, Sign)> = Vec::new();
                match piece {
                    ElementaryPiece::Id => equal.push(((si, bot), (si + 1, top))),
                    ElementaryPiece::XPos | ElementaryPiece::XNeg => {
                        equal.push(((si, bot), (si + 1, top + 1)));
                        equal.push(((si, bot + 1), (si + 1, top)));
                    }
                    ElementaryPiece::CupL => {
                        fixed.push(((si + 1, top), Sign::Plus));
                        fixed.push(((si + 1, top + 1), Sign::Minus));
                    }
                    ElementaryPiece::CupR => {
                        fixed.push(((si + 1, top), Sign::Minus));
                        fixed.push(((si + 1, top + 1), Sign::Plus));
                    }
                    ElementaryPiece::CapL => {
                        fixed.push(((si, bot), Sign::Plus));
                        fixed.push(((si, bot + 1), Sign::Minus));
                    }
                    ElementaryPiece::CapR => {
                        fixed.push(((si, bot), Sign::Minus));
                        fixed.push(((si, bot + 1), Sign::Plus));
                    }
                    ElementaryPiece::Coupon { name, .. } => {
                        let sig = &coupons[name];
                        for (off, (_, s)) in sig.domain.iter().enumerate() {
                            fixed.push(((si, bot + off), *s));
                        }
                        for (off, (_, s)) in sig.codomain.iter().enumerate() {
                            fixed.push(((si + 1, top + off), *s));
                        }
                    }
                }
                let conflict = || ParseError::OrientationMismatch {
                    line: located.line,
                    col: located.col,
                    token: piece.token(),
                };
                for ((la, pa), (lb, pb)) in equal {
                    match (orient[la][pa], orient[lb][pb]) {
                        (Some(x), Some(y)) if x != y => return Err(conflict()),
                        (Some(x), None) => {
                            orient[lb][pb] = Some(x);
                            changed = true;
                        }
                        (None, Some(y)) => {
                            orient[la][pa] = Some(y);
                            changed = true;
                        }
                        _ => {}
                    }
                }
                for ((l, p), s) in fixed {
                    match orient[l][p] {
                        Some(x) if x != s => return Err(conflict()),
                        None => {
                            orient[l][p] = Some(s);
                            changed = true;
                        }
                        _ => {}
                    }
                }
                bot += piece.inputs();
                top += piece.outputs();
            }
        }
        if !changed {
            break;
        }
    }
    Ok(orient
        .into_iter()
        .map(|lvl| lvl.into_iter().map(|s| s.unwrap_or(Sign::Plus)).collect())
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unknot_parses() {
        let d = parse_diagram("cupl\ncapl").unwrap();
        assert_eq!(d.num_slices(), 2);
        assert!(d.is_closed());
        assert_eq!(d.levels, vec![0, 2, 0]);
        assert_eq!(d.orientations[1], vec![Sign::Plus, Sign::Minus]);
    }

    #[test]
    fn comments_and_blank_lines() {
        let d = parse_diagram("# the unknot\ncupl # create\n\ncapl\n").unwrap();
        assert_eq!(d.num_slices(), 2);
    }

    #[test]
    fn open_crossing_is_rejected() {
        match parse_diagram("x+") {
            Err(ParseError::OpenBoundary(which, 2)) => assert_eq!(which, "bottom"),
            other => panic!("expected open-boundary error, got {other:?}"),
        }
    }

    #[test]
    fn unknown_token_position() {
        match parse_diagram("cupl\ncapz") {
            Err(ParseError::UnknownToken { line: 2, col: 1, token }) => {
                assert_eq!(token, "capz")
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn boundary_mismatch_detected() {
        match parse_diagram("cupl\nid id id") {
            Err(ParseError::BoundaryMismatch { line: 2, expected: 3, got: 2 }) => {}
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn orientation_conflict_detected() {
        // cupl produces (+,-) but capr wants (-,+)
        match parse_diagram("cupl\ncapr") {
            Err(ParseError::OrientationMismatch { .. }) => {}
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn trefoil_pattern_roundtrip() {
        let text = "cupl cupr\nid x- id\nid x- id\nid x- id\ncapl capr";
        let d = parse_diagram(text).unwrap();
        assert_eq!(d.levels, vec![0, 4, 4, 4, 4, 0]);
        let printed = d.to_text();
        let d2 = parse_diagram(&printed).unwrap();
        assert_eq!(d, d2);
    }
}
