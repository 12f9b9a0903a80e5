//! The surgery color sum F_{(L, Omega)} = sum over alcove colorings mu of
//! the surgery components of  prod_i qdim(mu_i) * J of the fully colored
//! diagram, specialized at xi.

use std::collections::BTreeMap;

use rayon::prelude::*;

use crate::diagram::{components, ComponentColor, FramedLinkPresentation};
use crate::exact::CyclotomicInteger;

use super::context::InvariantContext;
use super::eval::{evaluate_j, CouponTable, JOutput, RingMode};
use super::InvariantError;

/// Surgery components of a presentation, ascending by component id.
pub fn surgery_components(pres: &FramedLinkPresentation) -> Result<Vec<usize>, InvariantError> {
    let comps = components(&pres.diagram)?;
    let mut surgery = Vec::new();
    for c in 0..comps.count {
        match pres.coloring.get(&c) {
            Some(ComponentColor::Surgery) => surgery.push(c),
            Some(ComponentColor::Color(_)) => {}
            None => return Err(InvariantError::UncoloredComponent(c)),
        }
    }
    Ok(surgery)
}

/// Exact color sum over (C_k cap Y)^m. The terms are independent; they are
/// evaluated in parallel and summed in index order, so the result does not
/// depend on the worker count.
pub fn f_value(
    pres: &FramedLinkPresentation,
    ctx: &InvariantContext,
    coupons: &CouponTable,
) -> Result<CyclotomicInteger, InvariantError> {
    let surgery = surgery_components(pres)?;
    // fixed colors of the graph part, validated against the alcove
    let mut base_colors: BTreeMap<usize, u64> = BTreeMap::new();
    for (c, col) in &pres.coloring {
        if let ComponentColor::Color(n) = col {
            if !ctx.alcove_contains(*n) {
                return Err(InvariantError::NonAlcoveColor {
                    color: *n,
                    max: (ctx.r - 3) / 2,
                });
            }
            base_colors.insert(*c, *n);
        }
    }
    let m = surgery.len();
    let alcove_size = ctx.alcove.len();
    let total: u64 = (alcove_size as u64).pow(m as u32);
    let mode = RingMode::Specialized { r: ctx.r, embedding: ctx.embedding };
    let terms: Result<Vec<CyclotomicInteger>, InvariantError> = (0..total)
        .into_par_iter()
        .map(|flat| {
            // decompose the flat index into the color tuple, last component
            // fastest, matching lexicographic order over tuples
            let mut colors = base_colors.clone();
            let mut rest = flat;
            let mut qdim_product = CyclotomicInteger::one(ctx.r);
            for &comp in surgery.iter().rev() {
                let n = ctx.alcove[(rest % alcove_size as u64) as usize];
                rest /= alcove_size as u64;
                colors.insert(comp, n);
            }
            for &comp in &surgery {
                qdim_product = &qdim_product * &ctx.qdim(colors[&comp]);
            }
            let j = evaluate_j(&pres.diagram, &colors, &pres.framings, mode, coupons)?;
            match j {
                JOutput::ClosedSpecialized(c) => Ok(&qdim_product * &c),
                _ => unreachable!("surgery presentations are closed"),
            }
        })
        .collect();
    let mut sum = CyclotomicInteger::zero(ctx.r);
    for t in terms? {
        sum = &sum + &t;
    }
    Ok(sum)
}
