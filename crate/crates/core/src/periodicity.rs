//! Periodicity obstruction reports: an r-periodic integral homology sphere
//! must satisfy tau^P(xi) = xi^s conj(tau^P(xi)) mod r for some s, so an
//! empty witness set rules the period out. A nonempty set is only
//! "consistent": the congruence is one-directional.

use num_traits::Signed;
use serde_json::json;
use thiserror::Error;

use crate::diagram::linking_matrix;
use crate::exact::CyclotomicInteger;
use crate::invariant::{
    congruence_test, projective_invariant, CouponTable, ExtendedManifold, InvariantContext,
    InvariantError,
};

#[derive(Debug, Error)]
pub enum PeriodicityError {
    #[error("not an integral homology sphere: |det(linking matrix)| = {0}, need 1")]
    NonHomologySphere(String),
    #[error("projective invariant has kappa exponent 1; scan needs beta1 + w even")]
    OddKappaExponent,
    #[error(transparent)]
    Invariant(#[from] InvariantError),
    #[error(transparent)]
    Link(#[from] crate::diagram::LinkError),
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Verdict {
    ConsistentWithPeriodicity,
    Obstructed,
}

impl std::fmt::Display for Verdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Verdict::ConsistentWithPeriodicity => write!(f, "consistent-with-periodicity"),
            Verdict::Obstructed => write!(f, "obstructed"),
        }
    }
}

#[derive(Clone, Debug)]
pub struct PrimeEntry {
    pub r: u64,
    pub invariant: CyclotomicInteger,
    pub witnesses: Vec<u64>,
    pub verdict: Verdict,
}

#[derive(Clone, Debug)]
pub struct PeriodicityReport {
    pub manifold: String,
    pub entries: Vec<PrimeEntry>,
}

impl PeriodicityReport {
    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "manifold": self.manifold,
            "entries": self.entries.iter().map(|e| json!({
                "r": e.r,
                "invariant": e.invariant.to_json(),
                "witnesses": e.witnesses,
                "verdict": e.verdict.to_string(),
            })).collect::<Vec<_>>(),
        })
    }
}

/// Run the congruence scan over the given primes. The manifold must be an
/// integral homology sphere (|det B| = 1, hence beta_1 = 0).
pub fn periodicity_scan(
    name: &str,
    manifold: &ExtendedManifold,
    primes: &[u64],
    coupons: &CouponTable,
) -> Result<PeriodicityReport, PeriodicityError> {
    let link = linking_matrix(&manifold.presentation)?;
    let det = link.determinant();
    if det.abs() != 1.into() {
        return Err(PeriodicityError::NonHomologySphere(det.to_string()));
    }
    let mut entries = Vec::new();
    for &r in primes {
        let ctx = InvariantContext::new(r)?;
        let value = projective_invariant(manifold, &ctx, coupons)?;
        if value.kappa_exponent() != 0 {
            return Err(PeriodicityError::OddKappaExponent);
        }
        let invariant = value
            .coefficient()
            .as_integer()
            .expect("projective invariant is integral")
            .clone();
        let witnesses = congruence_test(&invariant);
        let verdict = if witnesses.is_empty() {
            Verdict::Obstructed
        } else {
            Verdict::ConsistentWithPeriodicity
        };
        entries.push(PrimeEntry { r, invariant, witnesses, verdict });
    }
    Ok(PeriodicityReport { manifold: name.to_string(), entries })
}
