//! Strand connectivity, writhe, linking matrices and their exact inertia.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use thiserror::Error;

use super::ast::{ElementaryPiece, SlicedDiagram};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum LinkError {
    #[error("diagram must be closed for component analysis")]
    NotClosed,
    #[error("odd signed crossing count {count} between components {a} and {b}")]
    OddCrossingCount { a: usize, b: usize, count: i64 },
    #[error("component C{0} has no framing or coloring role assigned")]
    UnassignedComponent(usize),
}

/// How a component participates in an invariant computation.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ComponentColor {
    /// Uncolored; summed over the alcove in the surgery formula.
    Surgery,
    /// Fixed alcove color n, part of the embedded graph.
    Color(u64),
}

/// A sliced diagram with per-component framings and coloring roles.
#[derive(Clone, Debug)]
pub struct FramedLinkPresentation {
    pub diagram: SlicedDiagram,
    pub framings: BTreeMap<usize, i64>,
    pub coloring: BTreeMap<usize, ComponentColor>,
}

/// Connectivity data for a closed diagram. Ports are (level, position)
/// pairs; components are numbered in discovery order scanning levels bottom
/// to top, left to right.
#[derive(Clone, Debug)]
pub struct Components {
    pub count: usize,
    port_component: BTreeMap<(usize, usize), usize>,
    /// per-component geometric self-writhe
    pub writhe: Vec<i64>,
    /// signed crossing counts between distinct components (i < j)
    pub inter_counts: BTreeMap<(usize, usize), i64>,
}

impl Components {
    pub fn component_of(&self, level: usize, pos: usize) -> usize {
        self.port_component[&(level, pos)]
    }
}

struct UnionFind(Vec<usize>);

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind((0..n).collect())
    }
    fn find(&mut self, x: usize) -> usize {
        if self.0[x] != x {
            let r = self.find(self.0[x]);
            self.0[x] = r;
        }
        self.0[x]
    }
    fn union(&mut self, a: usize, b: usize) {
        let ra = self.find(a);
        let rb = self.find(b);
        if ra != rb {
            self.0[ra] = rb;
        }
    }
}

/// Trace strand continuations through pieces and group ports into components.
pub fn components(diagram: &SlicedDiagram) -> Result<Components, LinkError> {
    if !diagram.is_closed() {
        return Err(LinkError::NotClosed);
    }
    components_any(diagram)
}

/// Connectivity for possibly-open diagrams (boundary strands allowed).
pub(crate) fn components_any(diagram: &SlicedDiagram) -> Result<Components, LinkError> {
    // flatten ports: offsets per level
    let mut offset = Vec::with_capacity(diagram.levels.len());
    let mut total = 0usize;
    for n in &diagram.levels {
        offset.push(total);
        total += n;
    }
    let port = |level: usize, pos: usize| offset[level] + pos;
    let mut uf = UnionFind::new(total);

    for (si, slice) in diagram.slices.iter().enumerate() {
        let mut bot = 0usize;
        let mut top = 0usize;
        for piece in slice {
            match piece {
                ElementaryPiece::Id => uf.union(port(si, bot), port(si + 1, top)),
                ElementaryPiece::XPos | ElementaryPiece::XNeg => {
                    uf.union(port(si, bot), port(si + 1, top + 1));
                    uf.union(port(si, bot + 1), port(si + 1, top));
                }
                ElementaryPiece::CupL | ElementaryPiece::CupR => {
                    uf.union(port(si + 1, top), port(si + 1, top + 1));
                }
                ElementaryPiece::CapL | ElementaryPiece::CapR => {
                    uf.union(port(si, bot), port(si, bot + 1));
                }
                ElementaryPiece::Coupon { .. } => {} // bands terminate at coupons
            }
            bot += piece.inputs();
            top += piece.outputs();
        }
    }

    // discovery-order numbering
    let mut ids: BTreeMap<usize, usize> = BTreeMap::new();
    let mut port_component = BTreeMap::new();
    for level in 0..diagram.levels.len() {
        for pos in 0..diagram.levels[level] {
            let root = uf.find(port(level, pos));
            let next = ids.len();
            let id = *ids.entry(root).or_insert(next);
            port_component.insert((level, pos), id);
        }
    }
    let count = ids.len();

    // crossing signs: token sign times the orientation factor
    let mut writhe = vec![0i64; count];
    let mut inter_counts: BTreeMap<(usize, usize), i64> = BTreeMap::new();
    for (si, slice) in diagram.slices.iter().enumerate() {
        let mut bot = 0usize;
        for piece in slice {
            if matches!(piece, ElementaryPiece::XPos | ElementaryPiece::XNeg) {
                let token_sign = if matches!(piece, ElementaryPiece::XPos) { 1 } else { -1 };
                let o1 = diagram.orientations[si][bot];
                let o2 = diagram.orientations[si][bot + 1];
                let orient_factor = if o1 == o2 { 1 } else { -1 };
                let sign = token_sign * orient_factor;
                let c1 = port_component[&(si, bot)];
                let c2 = port_component[&(si, bot + 1)];
                if c1 == c2 {
                    writhe[c1] += sign;
                } else {
                    let key = (c1.min(c2), c1.max(c2));
                    *inter_counts.entry(key).or_insert(0) += sign;
                }
            }
            bot += piece.inputs();
        }
    }
    Ok(Components { count, port_component, writhe, inter_counts })
}

/// The symmetric linking matrix with inertia.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinkingData {
    /// surgery component ids, in ascending order, indexing the matrix
    pub surgery_components: Vec<usize>,
    pub matrix: Vec<Vec<i64>>,
    pub sigma_plus: usize,
    pub sigma_minus: usize,
    pub nullity: usize,
}

impl LinkingData {
    pub fn size(&self) -> usize {
        self.matrix.len()
    }

    pub fn signature(&self) -> i64 {
        self.sigma_plus as i64 - self.sigma_minus as i64
    }

    /// Determinant of the linking matrix (exact).
    pub fn determinant(&self) -> BigInt {
        det_bigint(&self.matrix)
    }
}

/// Build the linking matrix of the surgery sublink: diagonal from declared
/// framings, off-diagonal from half the signed inter-component crossing count.
pub fn linking_matrix(pres: &FramedLinkPresentation) -> Result<LinkingData, LinkError> {
    let comps = components(&pres.diagram)?;
    let surgery: Vec<usize> = (0..comps.count)
        .filter(|c| matches!(pres.coloring.get(c), Some(ComponentColor::Surgery)))
        .collect();
    let m = surgery.len();
    let mut matrix = vec![vec![0i64; m]; m];
    for (i, &ci) in surgery.iter().enumerate() {
        matrix[i][i] = *pres.framings.get(&ci).unwrap_or(&0);
        for (j, &cj) in surgery.iter().enumerate().skip(i + 1) {
            let key = (ci.min(cj), ci.max(cj));
            let count = *comps.inter_counts.get(&key).unwrap_or(&0);
            if count.rem_euclid(2) != 0 {
                return Err(LinkError::OddCrossingCount { a: ci, b: cj, count });
            }
            matrix[i][j] = count / 2;
            matrix[j][i] = count / 2;
        }
    }
    let (sigma_plus, sigma_minus, nullity) = inertia(&matrix);
    Ok(LinkingData { surgery_components: surgery, matrix, sigma_plus, sigma_minus, nullity })
}

/// First Betti number of the surgered manifold: the nullity of the linking matrix.
pub fn betti1(pres: &FramedLinkPresentation) -> Result<usize, LinkError> {
    Ok(linking_matrix(pres)?.nullity)
}

/// Exact inertia of a symmetric integer matrix by rational symmetric
/// elimination (Sylvester's law). Diagonal pivots are taken first, smallest
/// index winning; a hyperbolic 2x2 block contributes (+1, -1).
pub fn inertia(matrix: &[Vec<i64>]) -> (usize, usize, usize) {
    let n = matrix.len();
    let mut a: Vec<Vec<BigRational>> = (0..n)
        .map(|i| (0..n).map(|j| BigRational::from(BigInt::from(matrix[i][j]))).collect())
        .collect();
    let mut active: Vec<usize> = (0..n).collect();
    let mut plus = 0usize;
    let mut minus = 0usize;
    while !active.is_empty() {
        if let Some(&k) = active.iter().find(|&&k| !a[k][k].is_zero()) {
            let pivot = a[k][k].clone();
            if pivot.is_positive() {
                plus += 1;
            } else {
                minus += 1;
            }
            active.retain(|&x| x != k);
            for &i in &active {
                for &j in &active {
                    let upd = &a[i][k] * &a[k][j] / &pivot;
                    a[i][j] -= upd;
                }
            }
            continue;
        }
        // all-zero diagonal: look for a hyperbolic pair
        let mut pair = None;
        'outer: for (x, &i) in active.iter().enumerate() {
            for &j in active.iter().skip(x + 1) {
                if !a[i][j].is_zero() {
                    pair = Some((i, j));
                    break 'outer;
                }
            }
        }
        match pair {
            Some((i, j)) => {
                let b = a[i][j].clone();
                plus += 1;
                minus += 1;
                active.retain(|&x| x != i && x != j);
                for &u in &active {
                    for &w in &active {
                        let upd = (&a[u][i] * &a[j][w] + &a[u][j] * &a[i][w]) / &b;
                        a[u][w] -= upd;
                    }
                }
            }
            None => {
                // remaining block is zero
                return (plus, minus, active.len());
            }
        }
    }
    (plus, minus, 0)
}

/// Exact determinant by Bareiss fraction-free elimination.
pub fn det_bigint(matrix: &[Vec<i64>]) -> BigInt {
    let n = matrix.len();
    if n == 0 {
        return BigInt::from(1);
    }
    let mut a: Vec<Vec<BigInt>> = matrix
        .iter()
        .map(|row| row.iter().map(|&x| BigInt::from(x)).collect())
        .collect();
    let mut sign = BigInt::from(1);
    let mut prev = BigInt::from(1);
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                Some(i) => {
                    a.swap(k, i);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                a[i][j] = num / &prev;
            }
        }
        prev = a[k][k].clone();
    }
    sign * a[n - 1][n - 1].clone()
}
