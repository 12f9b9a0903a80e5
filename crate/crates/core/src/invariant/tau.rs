//! The surgery invariant tau(M) and its eta-normalized projective form,
//! with divisibility certificates.
//!
//! For a surgery presentation L of m components with inertia
//! (sigma_+, sigma_-, beta_1) and weight w,
//!
//!   tau(M) = F_{(L,Omega)} / (F_-^{sigma_- + beta_1} F_+^{sigma_+})
//!            * eta^{-1} kappa^{beta_1 + w},
//!
//! computed as F * kappa^{beta_1+w+1} / (F_-^{sigma_-+beta_1+1} F_+^{sigma_+})
//! through eta^{-1} = kappa/F_-; the kappa exponent then reduces mod 2 via
//! kappa^2 = F_-/F_+. The quotient by the F-powers is exact in Z[xi]
//! (a divisibility failure signals a bug, not a rounding problem).

use serde_json::json;

use crate::diagram::{linking_matrix, FramedLinkPresentation};
use crate::exact::{CycRational, CyclotomicInteger, KappaScalar, Valuation};

use super::context::InvariantContext;
use super::eval::CouponTable;
use super::fvalue::f_value;
use super::InvariantError;

/// A closed extended 3-manifold: surgery presentation plus colored graph
/// (carried by the same diagram) and an integer weight.
#[derive(Clone, Debug)]
pub struct ExtendedManifold {
    pub presentation: FramedLinkPresentation,
    pub weight: i64,
}

impl ExtendedManifold {
    pub fn new(presentation: FramedLinkPresentation) -> Self {
        ExtendedManifold { presentation, weight: 0 }
    }

    pub fn with_weight(presentation: FramedLinkPresentation, weight: i64) -> Self {
        ExtendedManifold { presentation, weight }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DivisibilityCertificate {
    pub required: u64,
    pub actual: Valuation,
    pub pass: bool,
}

#[derive(Clone, Debug)]
pub struct TauResult {
    pub value: KappaScalar,
    pub m: usize,
    pub sigma_plus: usize,
    pub sigma_minus: usize,
    pub betti1: usize,
    pub weight: i64,
    pub divisibility: DivisibilityCertificate,
}

impl TauResult {
    pub fn to_json(&self) -> serde_json::Value {
        let c = self.value.coefficient();
        json!({
            "r": c.r(),
            "kappa_exp": self.value.kappa_exponent(),
            "coeffs": c.num().coeffs().iter().map(|x| x.to_string()).collect::<Vec<_>>(),
            "den": c.den().to_string(),
            "m": self.m,
            "sigma": [self.sigma_plus, self.sigma_minus],
            "betti1": self.betti1,
            "valuation": {
                "required": self.divisibility.required,
                "actual": self.divisibility.actual.to_string(),
            },
        })
    }
}

/// Certificate data for the (xi-1)-divisibility of a color sum.
pub fn divisibility_certificate(
    pres: &FramedLinkPresentation,
    ctx: &InvariantContext,
    coupons: &CouponTable,
) -> Result<(DivisibilityCertificate, CyclotomicInteger), InvariantError> {
    let link = linking_matrix(pres)?;
    let f = f_value(pres, ctx, coupons)?;
    let required = link.size() as u64 * (ctx.r - 3) / 2;
    let (actual, _) = f.valuation_at_one_minus_xi();
    let pass = actual.at_least(required);
    Ok((DivisibilityCertificate { required, actual, pass }, f))
}

/// The exactly-divided quotient F / (F_-^{sigma_- + beta_1} F_+^{sigma_+}),
/// which is the coefficient of the projective invariant.
fn normalized_quotient(
    manifold: &ExtendedManifold,
    ctx: &InvariantContext,
    coupons: &CouponTable,
) -> Result<(CyclotomicInteger, usize, usize, usize, DivisibilityCertificate), InvariantError> {
    let link = linking_matrix(&manifold.presentation)?;
    let (cert, f) = divisibility_certificate(&manifold.presentation, ctx, coupons)?;
    let mut denom = CyclotomicInteger::one(ctx.r);
    for _ in 0..(link.sigma_minus + link.nullity) {
        denom = &denom * &ctx.f_minus;
    }
    for _ in 0..link.sigma_plus {
        denom = &denom * &ctx.f_plus;
    }
    let q = f.div_exact(&denom).ok_or(InvariantError::DivisibilityShortfall {
        required: cert.required,
        actual: cert.actual,
    })?;
    Ok((q, link.sigma_plus, link.sigma_minus, link.nullity, cert))
}

/// tau(M) as an element of Q(xi)[kappa].
pub fn tau(
    manifold: &ExtendedManifold,
    ctx: &InvariantContext,
    coupons: &CouponTable,
) -> Result<TauResult, InvariantError> {
    let (q, sigma_plus, sigma_minus, betti1, divisibility) =
        normalized_quotient(manifold, ctx, coupons)?;
    let c = CycRational::from_integer(q)
        .div_cyc(&ctx.f_minus)
        .expect("F- is nonzero");
    let e_raw = betti1 as i64 + manifold.weight + 1;
    let value = ctx.kappa(c, e_raw);
    Ok(TauResult {
        value,
        m: sigma_plus + sigma_minus + betti1,
        sigma_plus,
        sigma_minus,
        betti1,
        weight: manifold.weight,
        divisibility,
    })
}

/// The projective invariant eta * tau(M); its coefficient must be a
/// cyclotomic integer (almost integrality).
pub fn projective_invariant(
    manifold: &ExtendedManifold,
    ctx: &InvariantContext,
    coupons: &CouponTable,
) -> Result<KappaScalar, InvariantError> {
    let (q, _, _, betti1, _) = normalized_quotient(manifold, ctx, coupons)?;
    let e_raw = betti1 as i64 + manifold.weight;
    let value = ctx.kappa(CycRational::from_integer(q), e_raw);
    if !value.coefficient().is_integral() {
        return Err(InvariantError::IntegralityFailure(format!(
            "eta*tau has non-integral coefficient {}",
            value.coefficient()
        )));
    }
    Ok(value)
}

/// Report of the almost-integrality check for one manifold.
#[derive(Clone, Debug)]
pub struct IntegralityReport {
    pub value: KappaScalar,
    pub kappa_exp: u8,
    pub zeta_order: u64,
    /// (kappa^2)^{2r} = 1 verified in this context
    pub kappa_power_identity: bool,
}

/// Assert that eta * tau(M) lies in Z[xi, kappa] and report the kappa data.
pub fn almost_integrality_check(
    manifold: &ExtendedManifold,
    ctx: &InvariantContext,
    coupons: &CouponTable,
) -> Result<IntegralityReport, InvariantError> {
    let value = projective_invariant(manifold, ctx, coupons)?;
    let kappa_power_identity = ctx.f_minus.pow(2 * ctx.r) == ctx.f_plus.pow(2 * ctx.r);
    if !kappa_power_identity {
        return Err(InvariantError::IntegralityFailure(
            "kappa^2 is not a root of unity of order dividing 2r".into(),
        ));
    }
    Ok(IntegralityReport {
        kappa_exp: value.kappa_exponent(),
        value,
        zeta_order: ctx.zeta_order,
        kappa_power_identity,
    })
}
