//! Alcove-colored sl2 modules over Z[v, v^-1] in the divided-power basis,
//! together with the antipode-induced actions on duals.
//!
//! V_n has basis b_0 .. b_{2n} with wt(b_j) = (n-j) alpha and
//!   E b_j = [2n-j+1] b_{j-1},   F b_j = [j+1] b_{j+1},   K b_j = v^{2(n-j)} b_j.
//! The divided powers E^{(t)}, F^{(t)} stay integral: their matrix entries are
//! Gaussian binomials.

use super::matrix::MorphismMatrix;
use super::object::{ObjectWord, StrandObject};
use crate::exact::LaurentPoly;

/// One application step of a divided power: coefficient and target basis index.
pub(crate) fn e_div_entry(obj: StrandObject, t: u64, j: usize) -> Option<(LaurentPoly, usize)> {
    let n = obj.color;
    let two_n = 2 * n as usize;
    if t == 0 {
        return Some((LaurentPoly::one(), j));
    }
    if !obj.is_dual() {
        // E^{(t)} b_j = qbinom(2n-j+t, t) b_{j-t}
        if j < t as usize {
            return None;
        }
        let m = (two_n - j) as u64 + t;
        Some((LaurentPoly::gauss_binomial(m, t), j - t as usize))
    } else {
        // E^{(t)} b^j = (-1)^t v^{t(t-1) - 2t(n-j-1)} qbinom(2n-j, t) b^{j+t}
        let jp = j + t as usize;
        if jp > two_n {
            return None;
        }
        let qb = LaurentPoly::gauss_binomial((two_n - j) as u64, t);
        if qb.is_zero() {
            return None;
        }
        let ti = t as i64;
        let exp = ti * (ti - 1) - 2 * ti * (n as i64 - j as i64 - 1);
        let sign = if t.is_multiple_of(2) { 1 } else { -1 };
        Some((&LaurentPoly::monomial(exp, sign) * &qb, jp))
    }
}

pub(crate) fn f_div_entry(obj: StrandObject, t: u64, j: usize) -> Option<(LaurentPoly, usize)> {
    let n = obj.color;
    let two_n = 2 * n as usize;
    if t == 0 {
        return Some((LaurentPoly::one(), j));
    }
    if !obj.is_dual() {
        // F^{(t)} b_j = qbinom(j+t, t) b_{j+t}
        let jp = j + t as usize;
        if jp > two_n {
            return None;
        }
        Some((LaurentPoly::gauss_binomial(jp as u64, t), jp))
    } else {
        // F^{(t)} b^j = (-1)^t v^{2t(n-j) + t(t-1)} qbinom(j, t) b^{j-t}
        if j < t as usize {
            return None;
        }
        let qb = LaurentPoly::gauss_binomial(j as u64, t);
        if qb.is_zero() {
            return None;
        }
        let ti = t as i64;
        let exp = 2 * ti * (n as i64 - j as i64) + ti * (ti - 1);
        let sign = if t.is_multiple_of(2) { 1 } else { -1 };
        Some((&LaurentPoly::monomial(exp, sign) * &qb, j - t as usize))
    }
}

/// K^{+-1} acts diagonally by v^{+-2 wt(j)}.
pub(crate) fn k_entry(obj: StrandObject, j: usize, inverse: bool) -> LaurentPoly {
    let e = 2 * obj.weight(j);
    LaurentPoly::monomial(if inverse { -e } else { e }, 1)
}

/// The generator matrices of a strand object as morphisms of the one-letter word.
pub fn generator_matrix(obj: StrandObject, gen: Generator) -> MorphismMatrix {
    let word = ObjectWord::single(obj);
    let mut m = MorphismMatrix::zero(word.clone(), word);
    for j in 0..obj.dim() {
        match gen {
            Generator::E => {
                if let Some((c, jp)) = e_div_entry(obj, 1, j) {
                    m.set(jp, j, c);
                }
            }
            Generator::F => {
                if let Some((c, jp)) = f_div_entry(obj, 1, j) {
                    m.set(jp, j, c);
                }
            }
            Generator::K => m.set(j, j, k_entry(obj, j, false)),
            Generator::KInv => m.set(j, j, k_entry(obj, j, true)),
        }
    }
    m
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Generator {
    E,
    F,
    K,
    KInv,
}

/// The simple module V_{n alpha} with verified quantum sl2 relations.
#[derive(Clone, Debug)]
pub struct IrrepModule {
    pub color: u64,
    pub e: MorphismMatrix,
    pub f: MorphismMatrix,
    pub k: MorphismMatrix,
}

impl IrrepModule {
    pub fn dim(&self) -> usize {
        2 * self.color as usize + 1
    }

    pub fn weight(&self, j: usize) -> i64 {
        self.color as i64 - j as i64
    }
}

/// Construct V_{n alpha}; the relation EF - FE = (K - K^{-1})/(v - v^{-1})
/// is checked on the constructed matrices.
pub fn irrep(n: u64) -> IrrepModule {
    let obj = StrandObject::module(n);
    let e = generator_matrix(obj, Generator::E);
    let f = generator_matrix(obj, Generator::F);
    let k = generator_matrix(obj, Generator::K);
    let m = IrrepModule { color: n, e, f, k };
    debug_assert!(relations_hold(obj));
    m
}

/// EF - FE = (K - K^{-1})/(v - v^{-1}) as matrices; the right side is the
/// diagonal of signed quantum integers [2 wt(j)].
pub fn relations_hold(obj: StrandObject) -> bool {
    let e = generator_matrix(obj, Generator::E);
    let f = generator_matrix(obj, Generator::F);
    let lhs = e
        .compose(&f)
        .unwrap()
        .sub(&f.compose(&e).unwrap())
        .unwrap();
    let word = ObjectWord::single(obj);
    let mut rhs = MorphismMatrix::zero(word.clone(), word);
    for j in 0..obj.dim() {
        rhs.set(j, j, LaurentPoly::quantum_int_signed(2 * obj.weight(j)));
    }
    // K E = v^2 E K
    let k = generator_matrix(obj, Generator::K);
    let ke = k.compose(&e).unwrap();
    let ek = e.compose(&k).unwrap().scale(&LaurentPoly::monomial(2, 1));
    lhs == rhs && ke == ek
}
