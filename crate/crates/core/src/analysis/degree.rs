//! Degree-bound checks: the coefficient of h^i in the expansion of J at
//! v = e^{h/2}, as a function of the colors, is a polynomial of total degree
//! at most 2i + m (one positive root for sl2). Verified by exact finite
//! differences over the color grid.

use std::collections::BTreeMap;

use num_rational::BigRational;
use num_traits::Zero;
use thiserror::Error;

use crate::diagram::{components, FramedLinkPresentation, LinkError};
use crate::invariant::{evaluate_j_hseries, EvalError};

#[derive(Debug, Error)]
pub enum AnalysisError {
    #[error(transparent)]
    Link(#[from] LinkError),
    #[error(transparent)]
    Eval(#[from] EvalError),
    #[error("degree check supports 1 or 2 components, diagram has {0}")]
    UnsupportedComponents(usize),
    #[error("need at least {need} colors to certify degree <= {bound} (got {got})")]
    GridTooSmall { need: u64, bound: usize, got: u64 },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeOrderReport {
    pub order: usize,
    /// None when the coefficient vanishes identically on the grid.
    pub measured: Option<usize>,
    pub bound: usize,
    pub pass: bool,
}

#[derive(Clone, Debug)]
pub struct DegreeReport {
    pub num_components: usize,
    pub max_color: u64,
    pub orders: Vec<DegreeOrderReport>,
}

impl DegreeReport {
    pub fn all_pass(&self) -> bool {
        self.orders.iter().all(|o| o.pass)
    }
}

/// Evaluate J over the color grid (every component colored by a parameter
/// running over 0..=max_color), h-expand to `order`, and certify per-order
/// polynomial degrees by finite differences.
pub fn degree_bound_check(
    pres: &FramedLinkPresentation,
    max_color: u64,
    order: usize,
) -> Result<DegreeReport, AnalysisError> {
    let comps = components(&pres.diagram)?;
    let m = comps.count;
    // the certificate needs bound + 2 samples
    let worst_bound = 2 * order + m;
    if (max_color as usize) + 1 < worst_bound + 2 {
        return Err(AnalysisError::GridTooSmall {
            need: (worst_bound + 1) as u64,
            bound: worst_bound,
            got: max_color,
        });
    }
    match m {
        1 => degree_check_one(pres, max_color, order),
        2 => degree_check_two(pres, max_color, order),
        other => Err(AnalysisError::UnsupportedComponents(other)),
    }
}

fn degree_check_one(
    pres: &FramedLinkPresentation,
    max_color: u64,
    order: usize,
) -> Result<DegreeReport, AnalysisError> {
    let samples = (max_color + 1) as usize;
    // rows[i][n] = coefficient of h^i at color n
    let mut rows = vec![vec![BigRational::zero(); samples]; order + 1];
    for n in 0..=max_color {
        let colors: BTreeMap<usize, u64> = [(0usize, n)].into();
        let h = evaluate_j_hseries(&pres.diagram, &colors, &pres.framings, order)?;
        for (i, c) in h.into_iter().enumerate() {
            rows[i][n as usize] = c;
        }
    }
    let orders = rows
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let measured = univariate_degree(row);
            let bound = 2 * i + 1;
            DegreeOrderReport {
                order: i,
                measured,
                bound,
                pass: measured.is_none_or(|d| d <= bound),
            }
        })
        .collect();
    Ok(DegreeReport { num_components: 1, max_color, orders })
}

fn degree_check_two(
    pres: &FramedLinkPresentation,
    max_color: u64,
    order: usize,
) -> Result<DegreeReport, AnalysisError> {
    let samples = (max_color + 1) as usize;
    let mut grids = vec![vec![vec![BigRational::zero(); samples]; samples]; order + 1];
    for n1 in 0..=max_color {
        for n2 in 0..=max_color {
            let colors: BTreeMap<usize, u64> = [(0usize, n1), (1usize, n2)].into();
            let h = evaluate_j_hseries(&pres.diagram, &colors, &pres.framings, order)?;
            for (i, c) in h.into_iter().enumerate() {
                grids[i][n1 as usize][n2 as usize] = c;
            }
        }
    }
    let orders = grids
        .iter()
        .enumerate()
        .map(|(i, grid)| {
            let measured = bivariate_total_degree(grid);
            let bound = 2 * i + 2;
            DegreeOrderReport {
                order: i,
                measured,
                bound,
                pass: measured.is_none_or(|d| d <= bound),
            }
        })
        .collect();
    Ok(DegreeReport { num_components: 2, max_color, orders })
}

/// Forward difference in place semantics: returns Delta f on a shorter grid.
fn forward_diff(row: &[BigRational]) -> Vec<BigRational> {
    row.windows(2).map(|w| &w[1] - &w[0]).collect()
}

/// Largest d with Delta^d f nonzero somewhere; None for the zero function.
/// Exact over the rationals: Delta^{d+1} f = 0 on d+2 or more samples
/// certifies degree <= d for polynomial f.
pub fn univariate_degree(row: &[BigRational]) -> Option<usize> {
    let mut cur = row.to_vec();
    let mut last_nonzero = None;
    let mut d = 0usize;
    while !cur.is_empty() {
        if cur.iter().any(|c| !c.is_zero()) {
            last_nonzero = Some(d);
        }
        cur = forward_diff(&cur);
        d += 1;
    }
    last_nonzero
}

/// Largest a+b with Delta_1^a Delta_2^b f nonzero somewhere.
pub fn bivariate_total_degree(grid: &[Vec<BigRational>]) -> Option<usize> {
    let n = grid.len();
    let mut best: Option<usize> = None;
    // D[a] = Delta_1^a applied along the first axis
    let mut along1: Vec<Vec<Vec<BigRational>>> = vec![grid.to_vec()];
    for a in 1..n {
        let prev = &along1[a - 1];
        let next: Vec<Vec<BigRational>> = (0..prev.len() - 1)
            .map(|i| {
                (0..prev[0].len())
                    .map(|j| &prev[i + 1][j] - &prev[i][j])
                    .collect()
            })
            .collect();
        along1.push(next);
    }
    for (a, d1) in along1.iter().enumerate() {
        if d1.is_empty() || d1[0].is_empty() {
            continue;
        }
        // difference along the second axis
        let mut cur: Vec<Vec<BigRational>> = d1.clone();
        let mut b = 0usize;
        while !cur[0].is_empty() {
            if cur.iter().any(|row| row.iter().any(|c| !c.is_zero())) {
                best = Some(best.map_or(a + b, |x: usize| x.max(a + b)));
            }
            cur = cur.iter().map(|row| forward_diff(row)).collect();
            b += 1;
        }
    }
    best
}
