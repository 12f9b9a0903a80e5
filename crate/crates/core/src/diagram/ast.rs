//! Sliced (Morse) presentations of ribbon graphs: slices of elementary
//! pieces read bottom to top.

use std::collections::BTreeMap;

use crate::rep::Sign;

/// One elementary tangle piece inside a slice.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum ElementaryPiece {
    Id,
    /// positive crossing: the strand entering bottom-left exits top-right, over
    XPos,
    /// negative crossing
    XNeg,
    /// cup 1 -> V (x) V* (left strand oriented down)
    CupL,
    /// cup 1 -> V* (x) V
    CupR,
    /// cap V (x) V* -> 1
    CapL,
    /// cap V* (x) V -> 1
    CapR,
    Coupon {
        name: String,
        inputs: usize,
        outputs: usize,
    },
}

impl ElementaryPiece {
    pub fn inputs(&self) -> usize {
        match self {
            ElementaryPiece::Id => 1,
            ElementaryPiece::XPos | ElementaryPiece::XNeg => 2,
            ElementaryPiece::CupL | ElementaryPiece::CupR => 0,
            ElementaryPiece::CapL | ElementaryPiece::CapR => 2,
            ElementaryPiece::Coupon { inputs, .. } => *inputs,
        }
    }

    pub fn outputs(&self) -> usize {
        match self {
            ElementaryPiece::Id => 1,
            ElementaryPiece::XPos | ElementaryPiece::XNeg => 2,
            ElementaryPiece::CupL | ElementaryPiece::CupR => 2,
            ElementaryPiece::CapL | ElementaryPiece::CapR => 0,
            ElementaryPiece::Coupon { outputs, .. } => *outputs,
        }
    }

    pub fn token(&self) -> String {
        match self {
            ElementaryPiece::Id => "id".into(),
            ElementaryPiece::XPos => "x+".into(),
            ElementaryPiece::XNeg => "x-".into(),
            ElementaryPiece::CupL => "cupl".into(),
            ElementaryPiece::CupR => "cupr".into(),
            ElementaryPiece::CapL => "capl".into(),
            ElementaryPiece::CapR => "capr".into(),
            ElementaryPiece::Coupon { name, .. } => format!("coupon:{name}"),
        }
    }
}

/// Declared boundary data of a coupon: domain read at the bottom, codomain at
/// the top, as (color, sign) letters.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CouponSignature {
    pub domain: Vec<(u64, Sign)>,
    pub codomain: Vec<(u64, Sign)>,
}

pub type CouponSignatures = BTreeMap<String, CouponSignature>;

/// A validated sliced diagram. `levels[l]` is the strand count at boundary
/// level l (level 0 below the first slice); `orientations[l][p]` the resolved
/// orientation of position p there.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SlicedDiagram {
    pub slices: Vec<Vec<ElementaryPiece>>,
    pub levels: Vec<usize>,
    pub orientations: Vec<Vec<Sign>>,
}

impl SlicedDiagram {
    pub fn num_slices(&self) -> usize {
        self.slices.len()
    }

    pub fn is_closed(&self) -> bool {
        self.levels.first() == Some(&0) && self.levels.last() == Some(&0)
    }

    /// Render back to the file syntax; one slice per line.
    pub fn to_text(&self) -> String {
        self.slices
            .iter()
            .map(|slice| {
                slice
                    .iter()
                    .map(|p| p.token())
                    .collect::<Vec<_>>()
                    .join(" ")
            })
            .collect::<Vec<_>>()
            .join("\n")
    }
}
