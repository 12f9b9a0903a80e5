//! Per-prime evaluation context: alcove colors, the normalizers F+-,
//! kappa^2 = F_-/F_+, and the zeta-order bookkeeping.

use std::sync::Arc;

use crate::exact::{
    specialize_power, CycRational, CyclotomicInteger, KappaScalar, LaurentPoly, Valuation,
};
use crate::lie::CartanDatum;
use crate::rep::twist_scalar_power;

use super::InvariantError;

/// Immutable context for sl2 invariants at an odd prime r. The optional
/// Galois embedding exponent a replaces the standard specialization v -> xi
/// by v -> xi^a throughout.
#[derive(Clone, Debug)]
pub struct InvariantContext {
    pub r: u64,
    pub embedding: u64,
    /// alcove colors 0, 1, ..., (r-3)/2
    pub alcove: Vec<u64>,
    pub f_plus: CyclotomicInteger,
    pub f_minus: CyclotomicInteger,
    pub kappa_sq: Arc<CycRational>,
    pub zeta_order: u64,
}

impl InvariantContext {
    pub fn new(r: u64) -> Result<Self, InvariantError> {
        Self::with_embedding(r, 1)
    }

    pub fn with_embedding(r: u64, embedding: u64) -> Result<Self, InvariantError> {
        let datum = CartanDatum::sl2();
        datum.validate_r(r)?;
        assert!(!embedding.is_multiple_of(r) && embedding > 0, "embedding prime to r");
        let alcove: Vec<u64> = (0..=(r - 3) / 2).collect();
        let f_plus = f_pm(r, embedding, &alcove, 1);
        let f_minus = f_pm(r, embedding, &alcove, -1);
        // F_+- must have (xi-1)-valuation exactly (r l - dim g)/2 = (r-3)/2
        let expected = (r - 3) / 2;
        for (name, f) in [("F+", &f_plus), ("F-", &f_minus)] {
            let (val, _) = f.valuation_at_one_minus_xi();
            if val != Valuation::Finite(expected) {
                return Err(InvariantError::ContextValuation {
                    which: name,
                    expected,
                    got: val,
                });
            }
        }
        let kappa_sq = CycRational::from_integer(f_minus.clone())
            .div_cyc(&f_plus)
            .expect("F+ is nonzero");
        // sl2 has odd rank and sn(w0) = -1: order(zeta) is r when
        // -r = 1 mod 4, i.e. r = 3 mod 4, and 4r otherwise.
        let zeta_order = if r % 4 == 3 { r } else { 4 * r };
        Ok(InvariantContext {
            r,
            embedding,
            alcove,
            f_plus,
            f_minus,
            kappa_sq: Arc::new(kappa_sq),
            zeta_order,
        })
    }

    pub fn level(&self) -> u64 {
        self.r - 2
    }

    pub fn alcove_contains(&self, n: u64) -> bool {
        n <= (self.r - 3) / 2
    }

    /// Specialize a symbolic value with this context's embedding.
    pub fn specialize(&self, p: &LaurentPoly) -> CyclotomicInteger {
        specialize_power(p, self.r, self.embedding)
    }

    /// Quantum dimension [2n+1] at xi.
    pub fn qdim(&self, n: u64) -> CyclotomicInteger {
        self.specialize(&LaurentPoly::quantum_int(2 * n + 1))
    }

    /// Twist scalar power at xi.
    pub fn twist_pow(&self, n: u64, e: i64) -> CyclotomicInteger {
        self.specialize(&twist_scalar_power(n, e))
    }

    pub fn kappa(&self, c: CycRational, e_raw: i64) -> KappaScalar {
        KappaScalar::new(c, e_raw, Arc::clone(&self.kappa_sq))
    }

    /// eta^{-1} = kappa / F_-.
    pub fn eta_inverse(&self) -> KappaScalar {
        let c = CycRational::one(self.r)
            .div_cyc(&self.f_minus)
            .expect("F- is nonzero");
        self.kappa(c, 1)
    }
}

/// F_+- = sum over alcove colors of [2n+1]^2 theta_n^{+-1} at xi^a.
fn f_pm(r: u64, embedding: u64, alcove: &[u64], sign: i64) -> CyclotomicInteger {
    let mut total = CyclotomicInteger::zero(r);
    for &n in alcove {
        let q = LaurentPoly::quantum_int(2 * n + 1);
        let term = &(&q * &q) * &twist_scalar_power(n, sign);
        total = &total + &specialize_power(&term, r, embedding);
    }
    total
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn context_valuations() {
        for r in [5u64, 7, 11, 13] {
            let ctx = InvariantContext::new(r).unwrap();
            let (vp, _) = ctx.f_plus.valuation_at_one_minus_xi();
            assert_eq!(vp, Valuation::Finite((r - 3) / 2));
            assert_eq!(ctx.f_minus, ctx.f_plus.conjugate());
        }
    }

    #[test]
    fn gauss_identity() {
        // sum of qdim^2 over the alcove equals F+ F-
        for r in [5u64, 7, 11] {
            let ctx = InvariantContext::new(r).unwrap();
            let mut s = CyclotomicInteger::zero(r);
            for &n in &ctx.alcove {
                let q = ctx.qdim(n);
                s = &s + &(&q * &q);
            }
            assert_eq!(s, &ctx.f_plus * &ctx.f_minus);
        }
    }

    #[test]
    fn kappa_is_root_of_unity() {
        // (kappa^2)^{2r} = 1, i.e. F_-^{2r} = F_+^{2r}
        for r in [5u64, 7] {
            let ctx = InvariantContext::new(r).unwrap();
            assert_eq!(ctx.f_minus.pow(2 * r), ctx.f_plus.pow(2 * r));
        }
    }

    #[test]
    fn zeta_orders() {
        assert_eq!(InvariantContext::new(5).unwrap().zeta_order, 20);
        assert_eq!(InvariantContext::new(7).unwrap().zeta_order, 7);
        assert_eq!(InvariantContext::new(11).unwrap().zeta_order, 11);
        assert_eq!(InvariantContext::new(13).unwrap().zeta_order, 52);
    }

    #[test]
    fn r_three_is_degenerate_but_valid() {
        let ctx = InvariantContext::new(3).unwrap();
        assert_eq!(ctx.alcove, vec![0]);
        assert!(ctx.f_plus.is_one());
        assert!(ctx.f_minus.is_one());
    }

    #[test]
    fn embedding_is_galois_twist() {
        let ctx1 = InvariantContext::new(5).unwrap();
        let ctx2 = InvariantContext::with_embedding(5, 2).unwrap();
        assert_eq!(ctx1.f_plus.galois(2), ctx2.f_plus);
        assert_eq!(ctx1.f_minus.galois(2), ctx2.f_minus);
    }
}
