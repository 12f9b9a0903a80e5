//! Dense morphism matrices between tensor words, over Z[v, v^-1].

use thiserror::Error;

use super::object::ObjectWord;
use crate::exact::LaurentPoly;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum MorphismError {
    #[error("domain/codomain mismatch: {0} vs {1}")]
    Mismatch(String, String),
    #[error("quantum trace requires equal domain and codomain")]
    NotSquare,
}

/// A linear map codomain <- domain, entries in row-major order
/// (rows indexed by the codomain).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MorphismMatrix {
    pub domain: ObjectWord,
    pub codomain: ObjectWord,
    entries: Vec<LaurentPoly>,
}

impl MorphismMatrix {
    pub fn zero(domain: ObjectWord, codomain: ObjectWord) -> Self {
        let n = domain.dim() * codomain.dim();
        MorphismMatrix {
            domain,
            codomain,
            entries: vec![LaurentPoly::zero(); n],
        }
    }

    pub fn identity(word: ObjectWord) -> Self {
        let mut m = Self::zero(word.clone(), word);
        for i in 0..m.domain.dim() {
            m.set(i, i, LaurentPoly::one());
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.codomain.dim()
    }

    pub fn cols(&self) -> usize {
        self.domain.dim()
    }

    pub fn get(&self, row: usize, col: usize) -> &LaurentPoly {
        &self.entries[row * self.cols() + col]
    }

    pub fn set(&mut self, row: usize, col: usize, value: LaurentPoly) {
        let c = self.cols();
        self.entries[row * c + col] = value;
    }

    pub fn add_to(&mut self, row: usize, col: usize, value: &LaurentPoly) {
        let c = self.cols();
        self.entries[row * c + col] += value;
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|e| e.is_zero())
    }

    /// self o other (apply `other` first).
    pub fn compose(&self, other: &MorphismMatrix) -> Result<MorphismMatrix, MorphismError> {
        if self.domain != other.codomain {
            return Err(MorphismError::Mismatch(
                self.domain.to_string(),
                other.codomain.to_string(),
            ));
        }
        let mut out = MorphismMatrix::zero(other.domain.clone(), self.codomain.clone());
        let inner = self.cols();
        for i in 0..self.rows() {
            for k in 0..inner {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols() {
                    let b = other.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    out.add_to(i, j, &(a * b));
                }
            }
        }
        Ok(out)
    }

    /// Tensor product, left factor most significant.
    pub fn tensor(&self, other: &MorphismMatrix) -> MorphismMatrix {
        let domain = self.domain.concat(&other.domain);
        let codomain = self.codomain.concat(&other.codomain);
        let mut out = MorphismMatrix::zero(domain, codomain);
        for i1 in 0..self.rows() {
            for j1 in 0..self.cols() {
                let a = self.get(i1, j1);
                if a.is_zero() {
                    continue;
                }
                for i2 in 0..other.rows() {
                    for j2 in 0..other.cols() {
                        let b = other.get(i2, j2);
                        if b.is_zero() {
                            continue;
                        }
                        out.set(
                            i1 * other.rows() + i2,
                            j1 * other.cols() + j2,
                            a * b,
                        );
                    }
                }
            }
        }
        out
    }

    pub fn scale(&self, s: &LaurentPoly) -> MorphismMatrix {
        MorphismMatrix {
            domain: self.domain.clone(),
            codomain: self.codomain.clone(),
            entries: self.entries.iter().map(|e| e * s).collect(),
        }
    }

    pub fn add(&self, other: &MorphismMatrix) -> Result<MorphismMatrix, MorphismError> {
        if self.domain != other.domain || self.codomain != other.codomain {
            return Err(MorphismError::Mismatch(
                self.domain.to_string(),
                other.domain.to_string(),
            ));
        }
        let mut out = self.clone();
        for (a, b) in out.entries.iter_mut().zip(other.entries.iter()) {
            *a += b;
        }
        Ok(out)
    }

    pub fn sub(&self, other: &MorphismMatrix) -> Result<MorphismMatrix, MorphismError> {
        let neg = other.scale(&LaurentPoly::monomial(0, -1));
        self.add(&neg)
    }

    /// Quantum trace tr(K_{2rho} f); for sl2, K_{2rho} = K acts on basis
    /// vector j of each factor by v^{2 wt}.
    pub fn quantum_trace(&self) -> Result<LaurentPoly, MorphismError> {
        if self.domain != self.codomain {
            return Err(MorphismError::NotSquare);
        }
        let mut tr = LaurentPoly::zero();
        for i in 0..self.rows() {
            let d = self.get(i, i);
            if d.is_zero() {
                continue;
            }
            let digits = self.domain.digits(i);
            let mut wt2 = 0i64;
            for (slot, obj) in self.domain.0.iter().enumerate() {
                wt2 += 2 * obj.weight(digits[slot]);
            }
            tr += &(d * &LaurentPoly::monomial(wt2, 1));
        }
        Ok(tr)
    }

    /// Ordinary matrix trace.
    pub fn trace(&self) -> Result<LaurentPoly, MorphismError> {
        if self.rows() != self.cols() {
            return Err(MorphismError::NotSquare);
        }
        let mut tr = LaurentPoly::zero();
        for i in 0..self.rows() {
            tr += self.get(i, i);
        }
        Ok(tr)
    }

    /// Entrywise substitution v -> v^k (k = -1 is the mirror map).
    pub fn substitute_power(&self, k: i64) -> MorphismMatrix {
        MorphismMatrix {
            domain: self.domain.clone(),
            codomain: self.codomain.clone(),
            entries: self.entries.iter().map(|e| e.substitute_power(k)).collect(),
        }
    }
}
