//! Braiding, twist and duality morphisms of the sl2 ribbon layer.
//!
//! The braiding is c = P Psi Thetabar with Psi the weight-pairing operator
//! v^{(nu|mu)} and the quasi-R-matrix tail
//!
//!   Thetabar = sum_t v^{t(t-1)/2} (v - v^{-1})^t / [t]!  E^t (x) F^t,
//!
//! a finite sum by nilpotency. In divided powers the t-th coefficient is
//! gamma_t = v^{t(t-1)/2} prod_{i<=t} (v^i - v^{-i}), so every entry stays in
//! Z[v, v^-1]. The same closed form acts on dual objects through the antipode
//! actions, so mixed-orientation crossings need no special casing.

use super::matrix::MorphismMatrix;
use super::module::{e_div_entry, f_div_entry, generator_matrix, k_entry, Generator};
use super::object::{ObjectWord, StrandObject};
use crate::exact::LaurentPoly;

/// gamma_t = v^{t(t-1)/2} prod_{i=1}^{t} (v^i - v^{-i})
pub(crate) fn theta_coeff(t: u64) -> LaurentPoly {
    let ti = t as i64;
    let mut g = LaurentPoly::monomial(ti * (ti - 1) / 2, 1);
    for i in 1..=ti {
        g = &g * &(&LaurentPoly::monomial(i, 1) - &LaurentPoly::monomial(-i, 1));
    }
    g
}

/// delta_t = (-1)^t v^{-t(t-1)/2} prod_{i=1}^{t} (v^i - v^{-i})
pub(crate) fn theta_inv_coeff(t: u64) -> LaurentPoly {
    let ti = t as i64;
    let sign = if t.is_multiple_of(2) { 1 } else { -1 };
    let mut g = LaurentPoly::monomial(-ti * (ti - 1) / 2, sign);
    for i in 1..=ti {
        g = &g * &(&LaurentPoly::monomial(i, 1) - &LaurentPoly::monomial(-i, 1));
    }
    g
}

/// The braiding c_{A,B}: A (x) B -> B (x) A.
pub fn braiding_objects(a: StrandObject, b: StrandObject) -> MorphismMatrix {
    let domain = ObjectWord(vec![a, b]);
    let codomain = ObjectWord(vec![b, a]);
    let mut m = MorphismMatrix::zero(domain.clone(), codomain.clone());
    let tmax = (a.dim().min(b.dim())) as u64;
    for i in 0..a.dim() {
        for j in 0..b.dim() {
            let col = domain.index(&[i, j]);
            for t in 0..=tmax {
                let (ce, ip) = match e_div_entry(a, t, i) {
                    Some(x) => x,
                    None => continue,
                };
                let (cf, jp) = match f_div_entry(b, t, j) {
                    Some(x) => x,
                    None => continue,
                };
                let psi = LaurentPoly::monomial(2 * a.weight(ip) * b.weight(jp), 1);
                let coeff = &(&theta_coeff(t) * &ce) * &(&cf * &psi);
                let row = codomain.index(&[jp, ip]);
                m.add_to(row, col, &coeff);
            }
        }
    }
    m
}

/// The inverse braiding (c_{B,A})^{-1}: A (x) B -> B (x) A.
pub fn braiding_inverse_objects(a: StrandObject, b: StrandObject) -> MorphismMatrix {
    let domain = ObjectWord(vec![a, b]);
    let codomain = ObjectWord(vec![b, a]);
    let mut m = MorphismMatrix::zero(domain.clone(), codomain.clone());
    let tmax = (a.dim().min(b.dim())) as u64;
    for i in 0..a.dim() {
        for j in 0..b.dim() {
            let col = domain.index(&[i, j]);
            // flip first, then Psi^{-1} on the flipped pair, then Thetabar^{-1}
            let psi = LaurentPoly::monomial(-2 * b.weight(j) * a.weight(i), 1);
            for t in 0..=tmax {
                let (ce, jp) = match e_div_entry(b, t, j) {
                    Some(x) => x,
                    None => continue,
                };
                let (cf, ip) = match f_div_entry(a, t, i) {
                    Some(x) => x,
                    None => continue,
                };
                let coeff = &(&theta_inv_coeff(t) * &ce) * &(&cf * &psi);
                let row = codomain.index(&[jp, ip]);
                m.add_to(row, col, &coeff);
            }
        }
    }
    m
}

/// Braiding of the underlying modules V_m (x) V_n -> V_n (x) V_m.
pub fn braiding(m: u64, n: u64) -> MorphismMatrix {
    braiding_objects(StrandObject::module(m), StrandObject::module(n))
}

pub fn braiding_inverse(m: u64, n: u64) -> MorphismMatrix {
    braiding_inverse_objects(StrandObject::module(m), StrandObject::module(n))
}

/// The ribbon twist acts on V_{n alpha} by v^{(n alpha + 2 rho | n alpha)} = v^{2n^2+2n}.
pub fn twist_scalar(n: u64) -> LaurentPoly {
    let ni = n as i64;
    LaurentPoly::monomial(2 * ni * ni + 2 * ni, 1)
}

pub fn twist_scalar_power(n: u64, e: i64) -> LaurentPoly {
    let ni = n as i64;
    LaurentPoly::monomial((2 * ni * ni + 2 * ni) * e, 1)
}

/// Which side of a duality morphism.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Chirality {
    /// cup: 1 -> V (x) V*, cap: V (x) V* -> 1
    Left,
    /// cup: 1 -> V* (x) V, cap: V* (x) V -> 1
    Right,
}

/// Coevaluation. Left: sum_j b_j (x) b^j. Right: sum_j b^j (x) K^{-1} b_j.
pub fn cup(n: u64, side: Chirality) -> MorphismMatrix {
    let v = StrandObject::module(n);
    let vd = StrandObject::dual(n);
    let codomain = match side {
        Chirality::Left => ObjectWord(vec![v, vd]),
        Chirality::Right => ObjectWord(vec![vd, v]),
    };
    let mut m = MorphismMatrix::zero(ObjectWord::empty(), codomain.clone());
    for j in 0..v.dim() {
        let row = codomain.index(&[j, j]);
        let amp = match side {
            Chirality::Left => LaurentPoly::one(),
            Chirality::Right => k_entry(v, j, true),
        };
        m.set(row, 0, amp);
    }
    m
}

/// Evaluation. Left: x (x) f -> f(K x) (the K_{2rho}-twisted pairing giving
/// the quantum trace on closure). Right: f (x) x -> f(x).
pub fn cap(n: u64, side: Chirality) -> MorphismMatrix {
    let v = StrandObject::module(n);
    let vd = StrandObject::dual(n);
    let domain = match side {
        Chirality::Left => ObjectWord(vec![v, vd]),
        Chirality::Right => ObjectWord(vec![vd, v]),
    };
    let mut m = MorphismMatrix::zero(domain.clone(), ObjectWord::empty());
    for j in 0..v.dim() {
        let col = domain.index(&[j, j]);
        let amp = match side {
            Chirality::Left => k_entry(v, j, false),
            Chirality::Right => LaurentPoly::one(),
        };
        m.set(0, col, amp);
    }
    m
}

/// Action of a generator on a tensor word via the iterated coproduct
///   Delta(E) = E (x) K + 1 (x) E,  Delta(F) = F (x) 1 + K^{-1} (x) F,
/// with the antipode action already baked into dual factors.
pub fn tensor_action(gen: Generator, word: &ObjectWord) -> MorphismMatrix {
    assert!(!word.is_empty(), "tensor_action needs a nonempty word");
    match gen {
        Generator::K | Generator::KInv => {
            let mut m = generator_matrix(word.0[0], gen);
            for obj in &word.0[1..] {
                m = m.tensor(&generator_matrix(*obj, gen));
            }
            m
        }
        Generator::E => {
            let mut total = MorphismMatrix::zero(word.clone(), word.clone());
            for slot in 0..word.len() {
                let mut m: Option<MorphismMatrix> = None;
                for (idx, obj) in word.0.iter().enumerate() {
                    let factor = if idx == slot {
                        generator_matrix(*obj, Generator::E)
                    } else if idx > slot {
                        generator_matrix(*obj, Generator::K)
                    } else {
                        MorphismMatrix::identity(ObjectWord::single(*obj))
                    };
                    m = Some(match m {
                        None => factor,
                        Some(acc) => acc.tensor(&factor),
                    });
                }
                total = total.add(&m.unwrap()).unwrap();
            }
            total
        }
        Generator::F => {
            let mut total = MorphismMatrix::zero(word.clone(), word.clone());
            for slot in 0..word.len() {
                let mut m: Option<MorphismMatrix> = None;
                for (idx, obj) in word.0.iter().enumerate() {
                    let factor = if idx == slot {
                        generator_matrix(*obj, Generator::F)
                    } else if idx < slot {
                        generator_matrix(*obj, Generator::KInv)
                    } else {
                        MorphismMatrix::identity(ObjectWord::single(*obj))
                    };
                    m = Some(match m {
                        None => factor,
                        Some(acc) => acc.tensor(&factor),
                    });
                }
                total = total.add(&m.unwrap()).unwrap();
            }
            total
        }
    }
}

/// Quantum trace of an endomorphism.
pub fn quantum_trace(f: &MorphismMatrix) -> Result<LaurentPoly, super::matrix::MorphismError> {
    f.quantum_trace()
}
