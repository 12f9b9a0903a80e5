//! The sl2 weight system on chord diagrams.
//!
//! Each chord carries the invariant tensor sum_i x_i (x) x^i over dual bases
//! of sl2 with respect to the Killing form: with {E, F, H} this is
//! (E,F/4), (F,E/4), (H,H/8). Insertions multiply along each component in
//! orientation order; circles are traced in the classical module V_n. Dual
//! bases keep every entry rational.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::rep::Sign;

use super::chord::{ChordDiagram, ComponentKind};

/// Dense matrix over exact rationals.
#[derive(Clone, Debug, PartialEq)]
pub struct RatMatrix {
    pub rows: usize,
    pub cols: usize,
    entries: Vec<BigRational>,
}

impl RatMatrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        RatMatrix { rows, cols, entries: vec![BigRational::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n, n);
        for i in 0..n {
            m.set(i, i, BigRational::one());
        }
        m
    }

    pub fn scalar(value: BigRational) -> Self {
        let mut m = Self::zero(1, 1);
        m.set(0, 0, value);
        m
    }

    pub fn get(&self, i: usize, j: usize) -> &BigRational {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: BigRational) {
        self.entries[i * self.cols + j] = v;
    }

    pub fn mul(&self, other: &RatMatrix) -> RatMatrix {
        assert_eq!(self.cols, other.rows);
        let mut out = RatMatrix::zero(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let cur = out.get(i, j) + a * b;
                    out.set(i, j, cur);
                }
            }
        }
        out
    }

    pub fn add(&self, other: &RatMatrix) -> RatMatrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let mut out = self.clone();
        for (a, b) in out.entries.iter_mut().zip(other.entries.iter()) {
            *a += b;
        }
        out
    }

    pub fn scale(&self, s: &BigRational) -> RatMatrix {
        RatMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|e| e * s).collect(),
        }
    }

    pub fn tensor(&self, other: &RatMatrix) -> RatMatrix {
        let mut out = RatMatrix::zero(self.rows * other.rows, self.cols * other.cols);
        for i1 in 0..self.rows {
            for j1 in 0..self.cols {
                let a = self.get(i1, j1);
                if a.is_zero() {
                    continue;
                }
                for i2 in 0..other.rows {
                    for j2 in 0..other.cols {
                        let b = other.get(i2, j2);
                        if b.is_zero() {
                            continue;
                        }
                        out.set(i1 * other.rows + i2, j1 * other.cols + j2, a * b);
                    }
                }
            }
        }
        out
    }

    pub fn trace(&self) -> BigRational {
        assert_eq!(self.rows, self.cols);
        let mut t = BigRational::zero();
        for i in 0..self.rows {
            t += self.get(i, i);
        }
        t
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|e| e.is_zero())
    }
}

/// Classical sl2 generators on V_n (dim 2n+1): E e_j = (2n-j+1) e_{j-1},
/// F e_j = (j+1) e_{j+1}, H e_j = (2n-2j) e_j; on the dual, minus transpose.
fn classical_generator(gen: usize, n: u64, dual: bool) -> RatMatrix {
    let d = (2 * n + 1) as usize;
    let mut m = RatMatrix::zero(d, d);
    let int = |x: i64| BigRational::from(BigInt::from(x));
    match gen {
        0 => {
            // E
            for j in 1..d {
                m.set(j - 1, j, int(2 * n as i64 - j as i64 + 1));
            }
        }
        1 => {
            // F
            for j in 0..d - 1 {
                m.set(j + 1, j, int(j as i64 + 1));
            }
        }
        _ => {
            // H
            for j in 0..d {
                m.set(j, j, int(2 * n as i64 - 2 * j as i64));
            }
        }
    }
    if dual {
        // (x . f)(v) = f(S(x) v), S(x) = -x classically
        let mut t = RatMatrix::zero(d, d);
        for i in 0..d {
            for j in 0..d {
                t.set(j, i, -m.get(i, j).clone());
            }
        }
        t
    } else {
        m
    }
}

/// The dual-basis partner scaling: E pairs with F/4, F with E/4, H with H/8
/// under the Killing form of sl2.
fn partner(gen: usize) -> (usize, BigRational) {
    let q = |num: i64, den: i64| BigRational::new(BigInt::from(num), BigInt::from(den));
    match gen {
        0 => (1, q(1, 4)),
        1 => (0, q(1, 4)),
        _ => (2, q(1, 8)),
    }
}

/// State-sum weight of a chord diagram with a uniform color n on every
/// component. Returns the matrix on the tensor product of the strand modules
/// (dimension (2n+1)^m), the closed circles contributing traced scalars.
pub fn weight_sl2(diagram: &ChordDiagram, color: u64) -> RatMatrix {
    weight_sl2_colored(diagram, &vec![color; diagram.components.len()])
}

/// Per-component colors, in component order.
pub fn weight_sl2_colored(diagram: &ChordDiagram, colors: &[u64]) -> RatMatrix {
    assert_eq!(colors.len(), diagram.components.len());
    let strand_dims: Vec<usize> = diagram
        .components
        .iter()
        .zip(colors)
        .filter(|(c, _)| matches!(c.kind, ComponentKind::Strand(_)))
        .map(|(_, n)| (2 * n + 1) as usize)
        .collect();
    let total_dim: usize = strand_dims.iter().product();
    let num_chords = diagram.chords.len();
    let mut total = RatMatrix::zero(total_dim, total_dim);

    // iterate over all states: each chord picks a basis element index
    let num_states = 3usize.pow(num_chords as u32);
    for state in 0..num_states {
        // assignment per point: (generator index, scale)
        let mut insertion: std::collections::BTreeMap<usize, (usize, BigRational)> =
            std::collections::BTreeMap::new();
        let mut rest = state;
        for &(a, b) in &diagram.chords {
            let gen = rest % 3;
            rest /= 3;
            let (first, second) = if a < b { (a, b) } else { (b, a) };
            let (pgen, pscale) = partner(gen);
            insertion.insert(first, (gen, BigRational::one()));
            insertion.insert(second, (pgen, pscale));
        }
        // per component: product of insertions in orientation order
        let mut scalar = BigRational::one();
        let mut strand_matrices: Vec<RatMatrix> = Vec::new();
        for (comp, &n) in diagram.components.iter().zip(colors) {
            let dual = matches!(comp.kind, ComponentKind::Strand(Sign::Minus));
            let d = (2 * n + 1) as usize;
            let mut m = RatMatrix::identity(d);
            // first point along the orientation acts first
            for &p in &comp.points {
                let (gen, sc) = &insertion[&p];
                let g = classical_generator(*gen, n, dual).scale(sc);
                m = g.mul(&m);
            }
            match comp.kind {
                ComponentKind::Circle => scalar *= m.trace(),
                ComponentKind::Strand(_) => strand_matrices.push(m),
            }
        }
        if scalar.is_zero() {
            continue;
        }
        let mut term = RatMatrix::scalar(scalar);
        for m in &strand_matrices {
            term = term.tensor(m);
        }
        // RatMatrix::scalar is 1x1; tensoring with it preserves dimensions
        total = total.add(&term);
    }
    total
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::analysis::chord::{ChordComponent, ChordDiagram, ComponentKind};

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn chordless_is_identity() {
        for m in 1..=3usize {
            let comps = (0..m)
                .map(|_| ChordComponent { kind: ComponentKind::Strand(Sign::Plus), points: vec![] })
                .collect();
            let d = ChordDiagram::chordless(comps).unwrap();
            let w = weight_sl2(&d, 1);
            assert_eq!(w, RatMatrix::identity(3usize.pow(m as u32)));
        }
    }

    #[test]
    fn single_chord_on_circle_is_casimir_trace() {
        // (2n+1) * c_n with c_n = n(n+1)/2 the Killing-normalized Casimir value
        for n in 0..=3u64 {
            let d = ChordDiagram::new(
                vec![ChordComponent { kind: ComponentKind::Circle, points: vec![0, 1] }],
                vec![(0, 1)],
            )
            .unwrap();
            let w = weight_sl2(&d, n);
            assert_eq!(w.rows, 1);
            let expect = rat((2 * n as i64 + 1) * (n as i64) * (n as i64 + 1), 2);
            assert_eq!(*w.get(0, 0), expect, "n={n}");
        }
    }

    #[test]
    fn mixed_casimir_on_two_strands() {
        // one chord joining two strands: sum_i x_i (x) x^i, a 9x9 matrix at n=1
        let d = ChordDiagram::new(
            vec![
                ChordComponent { kind: ComponentKind::Strand(Sign::Plus), points: vec![0] },
                ChordComponent { kind: ComponentKind::Strand(Sign::Plus), points: vec![1] },
            ],
            vec![(0, 1)],
        )
        .unwrap();
        let w = weight_sl2(&d, 1);
        // hand-built: E(x)F/4 + F(x)E/4 + H(x)H/8 on V_1 (x) V_1
        let e = classical_generator(0, 1, false);
        let f = classical_generator(1, 1, false);
        let h = classical_generator(2, 1, false);
        let expect = e
            .tensor(&f)
            .scale(&rat(1, 4))
            .add(&f.tensor(&e).scale(&rat(1, 4)))
            .add(&h.tensor(&h).scale(&rat(1, 8)));
        assert_eq!(w, expect);
    }

    #[test]
    fn commutes_with_classical_action() {
        // the mixed Casimir commutes with the diagonal action x (x) 1 + 1 (x) x
        let d = ChordDiagram::new(
            vec![
                ChordComponent { kind: ComponentKind::Strand(Sign::Plus), points: vec![0] },
                ChordComponent { kind: ComponentKind::Strand(Sign::Plus), points: vec![1] },
            ],
            vec![(0, 1)],
        )
        .unwrap();
        for n in 1..=2u64 {
            let w = weight_sl2(&d, n);
            let dim = (2 * n + 1) as usize;
            for gen in 0..3 {
                let g = classical_generator(gen, n, false);
                let diag = g
                    .tensor(&RatMatrix::identity(dim))
                    .add(&RatMatrix::identity(dim).tensor(&g));
                assert_eq!(w.mul(&diag), diag.mul(&w), "gen {gen} n={n}");
            }
        }
    }

    #[test]
    fn stacking_multiplicativity() {
        // two one-chord diagrams stacked along a single strand = one
        // two-chord diagram with sequential points
        let one = ChordDiagram::new(
            vec![
                ChordComponent { kind: ComponentKind::Strand(Sign::Plus), points: vec![0] },
                ChordComponent { kind: ComponentKind::Circle, points: vec![1] },
            ],
            vec![(0, 1)],
        )
        .unwrap();
        let w1 = weight_sl2(&one, 1);
        let two = ChordDiagram::new(
            vec![
                ChordComponent { kind: ComponentKind::Strand(Sign::Plus), points: vec![0, 2] },
                ChordComponent { kind: ComponentKind::Circle, points: vec![1] },
                ChordComponent { kind: ComponentKind::Circle, points: vec![3] },
            ],
            vec![(0, 1), (2, 3)],
        )
        .unwrap();
        let w2 = weight_sl2(&two, 1);
        assert_eq!(w2, w1.mul(&w1));
    }
}
