//! Chord diagrams on ordered strands and circles.

use thiserror::Error;

use crate::rep::Sign;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ChordError {
    #[error("chord endpoint {0} appears more than once")]
    DuplicateEndpoint(usize),
    #[error("chord endpoints must be distinct, got ({0}, {0})")]
    DegenerateChord(usize),
    #[error("point {0} is not marked on any component")]
    UnknownPoint(usize),
    #[error("point {0} is marked but not paired by a chord")]
    UnpairedPoint(usize),
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ComponentKind {
    /// An open strand with an orientation sign (+ downward).
    Strand(Sign),
    Circle,
}

#[derive(Clone, Debug)]
pub struct ChordComponent {
    pub kind: ComponentKind,
    /// marked points in order along the orientation
    pub points: Vec<usize>,
}

/// An (a, b)-style chord diagram: open strands in order, closed circles, and
/// chords as unordered pairs of marked points.
#[derive(Clone, Debug)]
pub struct ChordDiagram {
    pub components: Vec<ChordComponent>,
    pub chords: Vec<(usize, usize)>,
}

impl ChordDiagram {
    pub fn new(
        components: Vec<ChordComponent>,
        chords: Vec<(usize, usize)>,
    ) -> Result<Self, ChordError> {
        let mut seen = std::collections::BTreeSet::new();
        for c in &components {
            for &p in &c.points {
                if !seen.insert(p) {
                    return Err(ChordError::DuplicateEndpoint(p));
                }
            }
        }
        let mut paired = std::collections::BTreeSet::new();
        for &(a, b) in &chords {
            if a == b {
                return Err(ChordError::DegenerateChord(a));
            }
            for p in [a, b] {
                if !seen.contains(&p) {
                    return Err(ChordError::UnknownPoint(p));
                }
                if !paired.insert(p) {
                    return Err(ChordError::DuplicateEndpoint(p));
                }
            }
        }
        if let Some(&p) = seen.difference(&paired).next() {
            return Err(ChordError::UnpairedPoint(p));
        }
        Ok(ChordDiagram { components, chords })
    }

    pub fn num_strands(&self) -> usize {
        self.components
            .iter()
            .filter(|c| matches!(c.kind, ComponentKind::Strand(_)))
            .count()
    }

    /// A diagram with no chords at all on the given skeleton.
    pub fn chordless(components: Vec<ChordComponent>) -> Result<Self, ChordError> {
        for c in &components {
            if !c.points.is_empty() {
                return Err(ChordError::UnpairedPoint(c.points[0]));
            }
        }
        Ok(ChordDiagram { components, chords: Vec::new() })
    }
}
