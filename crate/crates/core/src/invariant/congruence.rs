//! The mod-r congruence witness search: all s with
//! x = xi^s conj(x) mod r in Z[xi].

use crate::exact::CyclotomicInteger;

/// Exhaustive search over s in {0, ..., r-1}.
pub fn congruence_test(x: &CyclotomicInteger) -> Vec<u64> {
    let r = x.r();
    let conj = x.conjugate();
    let mut out = Vec::new();
    for s in 0..r {
        let shifted = &conj * &CyclotomicInteger::xi_pow(r, s as i64);
        let diff = x - &shifted;
        if diff.mod_r_reduce().is_zero() {
            out.push(s);
        }
    }
    out
}
