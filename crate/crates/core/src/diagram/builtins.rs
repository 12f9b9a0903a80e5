//! Built-in surgery presentations. The diagrams are stored as source text and
//! round-trip through the parser.

use std::collections::BTreeMap;

use thiserror::Error;

use super::ast::SlicedDiagram;
use super::link::{components, ComponentColor, FramedLinkPresentation};
use super::parse::parse_diagram;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum BuiltinError {
    #[error("unknown builtin `{0}`")]
    Unknown(String),
    #[error("bad arguments in `{0}`: expected {1} integer(s)")]
    BadArguments(String, usize),
}

pub const UNKNOT_TEXT: &str = "cupl\ncapl";
pub const HOPF_TEXT: &str = "cupl cupr\nid x+ id\nid x+ id\ncapl capr";
pub const TREFOIL_LEFT_TEXT: &str = "cupl cupr\nid x- id\nid x- id\nid x- id\ncapl capr";
pub const TREFOIL_RIGHT_TEXT: &str = "cupl cupr\nid x+ id\nid x+ id\nid x+ id\ncapl capr";
pub const TWO_UNKNOTS_TEXT: &str = "cupl cupl\ncapl capl";

fn all_surgery(diagram: SlicedDiagram, framings: Vec<i64>) -> FramedLinkPresentation {
    let n = components(&diagram).expect("builtin diagrams are closed").count;
    assert_eq!(n, framings.len(), "framing count");
    FramedLinkPresentation {
        diagram,
        framings: framings.into_iter().enumerate().collect(),
        coloring: (0..n).map(|c| (c, ComponentColor::Surgery)).collect(),
    }
}

/// Names: unknot(f), hopf(f1,f2), trefoil_left(f), trefoil_right(f),
/// poincare, brieskorn, s1xs2, s3_empty, s3_stab_pm. Bare `unknot`,
/// `hopf`, `trefoil_*` default to framing 0.
pub fn builtin(name: &str) -> Result<FramedLinkPresentation, BuiltinError> {
    let (base, args) = split_args(name)?;
    let need = |n: usize| -> Result<Vec<i64>, BuiltinError> {
        if args.len() == n {
            Ok(args.clone())
        } else if args.is_empty() {
            Ok(vec![0; n])
        } else {
            Err(BuiltinError::BadArguments(name.to_string(), n))
        }
    };
    let p = match base.as_str() {
        "unknot" => all_surgery(parse_diagram(UNKNOT_TEXT).unwrap(), need(1)?),
        "hopf" => all_surgery(parse_diagram(HOPF_TEXT).unwrap(), need(2)?),
        "trefoil_left" => all_surgery(parse_diagram(TREFOIL_LEFT_TEXT).unwrap(), need(1)?),
        "trefoil_right" => all_surgery(parse_diagram(TREFOIL_RIGHT_TEXT).unwrap(), need(1)?),
        "poincare" => {
            no_args(name, &args)?;
            all_surgery(parse_diagram(TREFOIL_LEFT_TEXT).unwrap(), vec![-1])
        }
        "brieskorn" => {
            no_args(name, &args)?;
            all_surgery(parse_diagram(TREFOIL_RIGHT_TEXT).unwrap(), vec![-1])
        }
        "s1xs2" => {
            no_args(name, &args)?;
            all_surgery(parse_diagram(UNKNOT_TEXT).unwrap(), vec![0])
        }
        "s3_empty" | "empty" => {
            no_args(name, &args)?;
            all_surgery(parse_diagram("").unwrap(), vec![])
        }
        "s3_stab_pm" => {
            no_args(name, &args)?;
            all_surgery(parse_diagram(TWO_UNKNOTS_TEXT).unwrap(), vec![1, -1])
        }
        _ => return Err(BuiltinError::Unknown(name.to_string())),
    };
    Ok(p)
}

pub fn builtin_names() -> &'static [&'static str] {
    &[
        "unknot(f)",
        "hopf(f1,f2)",
        "trefoil_left(f)",
        "trefoil_right(f)",
        "poincare",
        "brieskorn",
        "s1xs2",
        "s3_empty",
        "s3_stab_pm",
    ]
}

fn no_args(name: &str, args: &[i64]) -> Result<(), BuiltinError> {
    if args.is_empty() {
        Ok(())
    } else {
        Err(BuiltinError::BadArguments(name.to_string(), 0))
    }
}

fn split_args(name: &str) -> Result<(String, Vec<i64>), BuiltinError> {
    match name.find('(') {
        None => Ok((name.trim().to_string(), Vec::new())),
        Some(i) => {
            let base = name[..i].trim().to_string();
            let rest = name[i..]
                .strip_prefix('(')
                .and_then(|s| s.strip_suffix(')'))
                .ok_or_else(|| BuiltinError::Unknown(name.to_string()))?;
            let mut args = Vec::new();
            if !rest.trim().is_empty() {
                for part in rest.split(',') {
                    args.push(
                        part.trim()
                            .parse::<i64>()
                            .map_err(|_| BuiltinError::BadArguments(name.to_string(), 0))?,
                    );
                }
            }
            Ok((base, args))
        }
    }
}

/// Stack two presentations vertically (disjoint union); components of `other`
/// are renumbered after those of `self`.
pub fn disjoint_union(
    a: &FramedLinkPresentation,
    b: &FramedLinkPresentation,
) -> FramedLinkPresentation {
    let na = components(&a.diagram).expect("closed").count;
    let mut slices = a.diagram.slices.clone();
    slices.extend(b.diagram.slices.iter().cloned());
    let mut levels = a.diagram.levels.clone();
    // shared empty boundary level between the stacks
    levels.pop();
    levels.extend(b.diagram.levels.iter().cloned());
    let mut orientations = a.diagram.orientations.clone();
    orientations.pop();
    orientations.extend(b.diagram.orientations.iter().cloned());
    let diagram = SlicedDiagram { slices, levels, orientations };
    let mut framings: BTreeMap<usize, i64> = a.framings.clone();
    let mut coloring: BTreeMap<usize, ComponentColor> = a.coloring.clone();
    for (c, f) in &b.framings {
        framings.insert(c + na, *f);
    }
    for (c, col) in &b.coloring {
        coloring.insert(c + na, *col);
    }
    FramedLinkPresentation { diagram, framings, coloring }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::link::linking_matrix;

    #[test]
    fn poincare_is_minus_one_left_trefoil() {
        let p = builtin("poincare").unwrap();
        assert_eq!(p.framings.get(&0), Some(&-1));
        assert_eq!(p.diagram.to_text(), TREFOIL_LEFT_TEXT);
        let link = linking_matrix(&p).unwrap();
        assert_eq!(link.matrix, vec![vec![-1]]);
    }

    #[test]
    fn s1xs2_is_zero_framed_unknot() {
        let p = builtin("s1xs2").unwrap();
        assert_eq!(p.framings.get(&0), Some(&0));
        assert_eq!(p.diagram.to_text(), UNKNOT_TEXT);
    }

    #[test]
    fn empty_presentation() {
        let p = builtin("s3_empty").unwrap();
        assert_eq!(p.diagram.num_slices(), 0);
        assert!(p.framings.is_empty());
    }

    #[test]
    fn parametrized_names() {
        let p = builtin("unknot(-1)").unwrap();
        assert_eq!(p.framings.get(&0), Some(&-1));
        let h = builtin("hopf(2,-3)").unwrap();
        assert_eq!(h.framings.get(&0), Some(&2));
        assert_eq!(h.framings.get(&1), Some(&-3));
        assert!(builtin("wild").is_err());
        assert!(builtin("hopf(1)").is_err());
    }

    #[test]
    fn stab_pm_framings() {
        let p = builtin("s3_stab_pm").unwrap();
        let link = linking_matrix(&p).unwrap();
        assert_eq!(link.matrix, vec![vec![1, 0], vec![0, -1]]);
        assert_eq!((link.sigma_plus, link.sigma_minus), (1, 1));
    }

    #[test]
    fn union_renumbers_components() {
        let a = builtin("unknot(1)").unwrap();
        let b = builtin("hopf(0,0)").unwrap();
        let u = disjoint_union(&a, &b);
        let comps = components(&u.diagram).unwrap();
        assert_eq!(comps.count, 3);
        assert_eq!(u.framings.get(&0), Some(&1));
        assert_eq!(u.framings.get(&1), Some(&0));
        let link = linking_matrix(&u).unwrap();
        assert_eq!(link.matrix[0], vec![1, 0, 0]);
        assert_eq!(link.matrix[1][2], 1);
        // round trip through the printer keeps everything parseable
        let text = u.diagram.to_text();
        let re = crate::diagram::parse::parse_diagram(&text).unwrap();
        assert_eq!(re, u.diagram);
    }

    #[test]
    fn all_builtins_roundtrip() {
        for name in ["unknot", "hopf", "trefoil_left", "trefoil_right",
                     "poincare", "brieskorn", "s1xs2", "s3_empty", "s3_stab_pm"] {
            let p = builtin(name).unwrap();
            let text = p.diagram.to_text();
            let re = crate::diagram::parse::parse_diagram(&text).unwrap();
            assert_eq!(re, p.diagram, "{name}");
        }
    }
}
