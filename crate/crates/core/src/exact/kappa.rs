//! The quadratic extension Q(xi)[kappa] with kappa^2 = F_-/F_+.
//!
//! Values of the surgery invariant live here: c * kappa^e with e in {0, 1}.
//! Powers of kappa reduce through kappa^2, which the constructor receives
//! from the invariant context. eta is never stored separately; it is kappa*F_+
//! (forced by kappa*eta = F_- and kappa^2 = F_-/F_+).

use std::fmt;
use std::sync::Arc;

use super::rational::CycRational;

#[derive(Clone)]
pub struct KappaScalar {
    c: CycRational,
    e: u8, // 0 or 1
    kappa_sq: Arc<CycRational>,
}

impl KappaScalar {
    /// Build c * kappa^e_raw, reducing e_raw mod 2 via kappa^2 = F_-/F_+.
    /// Negative exponents divide by kappa^2 accordingly.
    pub fn new(c: CycRational, e_raw: i64, kappa_sq: Arc<CycRational>) -> Self {
        let e = e_raw.rem_euclid(2) as u8;
        let q = (e_raw - e as i64) / 2; // e_raw = 2q + e
        let mut c = c;
        if q >= 0 {
            for _ in 0..q {
                c = &c * &kappa_sq;
            }
        } else {
            for _ in 0..(-q) {
                c = &c / &kappa_sq;
            }
        }
        KappaScalar { c, e, kappa_sq }
    }

    pub fn coefficient(&self) -> &CycRational {
        &self.c
    }

    pub fn kappa_exponent(&self) -> u8 {
        self.e
    }

    pub fn kappa_sq(&self) -> &CycRational {
        &self.kappa_sq
    }

    pub fn mul(&self, other: &KappaScalar) -> Self {
        Self::new(
            &self.c * &other.c,
            self.e as i64 + other.e as i64,
            Arc::clone(&self.kappa_sq),
        )
    }

    pub fn is_zero(&self) -> bool {
        self.c.is_zero()
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "r": self.c.r(),
            "kappa_exp": self.e,
            "coeffs": self.c.num().coeffs().iter().map(|x| x.to_string()).collect::<Vec<_>>(),
            "den": self.c.den().to_string(),
        })
    }
}

impl PartialEq for KappaScalar {
    fn eq(&self, other: &Self) -> bool {
        // A zero coefficient makes the kappa power irrelevant.
        (self.is_zero() && other.is_zero()) || (self.e == other.e && self.c == other.c)
    }
}

impl Eq for KappaScalar {}

impl fmt::Debug for KappaScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for KappaScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.e == 0 {
            write!(f, "{}", self.c)
        } else {
            write!(f, "({}) * kappa", self.c)
        }
    }
}
