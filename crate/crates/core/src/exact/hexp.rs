//! Taylor expansion of Laurent polynomials under v = e^{h/2}.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::laurent::LaurentPoly;

/// Coefficients of h^0 .. h^order in the expansion of p(e^{h/2}),
/// as exact rationals: coeff_i = sum_k c_k k^i / (2^i i!).
pub fn h_expand(p: &LaurentPoly, order: usize) -> Vec<BigRational> {
    let mut out = vec![BigRational::zero(); order + 1];
    let mut denom = BigInt::one(); // 2^i * i!
    for i in 0..=order {
        if i > 0 {
            denom = &denom * BigInt::from(2 * i);
        }
        let mut num = BigInt::zero();
        for (e, c) in p.terms() {
            let k = BigInt::from(e);
            num += c * k.pow(i as u32);
        }
        out[i] = BigRational::new(num, denom.clone());
    }
    out
}
