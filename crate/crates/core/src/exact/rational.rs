//! Elements of the fraction field Q(xi) with rational-integer denominators.
//!
//! Every quantity in scope has this shape: numerator in Z[xi], denominator a
//! positive integer, reduced so no rational prime divides both.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::cyclotomic::CyclotomicInteger;

#[derive(Clone, PartialEq, Eq)]
pub struct CycRational {
    num: CyclotomicInteger,
    den: BigInt, // > 0
}

impl CycRational {
    pub fn new(num: CyclotomicInteger, den: BigInt) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        let mut z = CycRational { num, den };
        z.reduce();
        z
    }

    pub fn from_integer(num: CyclotomicInteger) -> Self {
        CycRational { num, den: BigInt::one() }
    }

    pub fn zero(r: u64) -> Self {
        Self::from_integer(CyclotomicInteger::zero(r))
    }

    pub fn one(r: u64) -> Self {
        Self::from_integer(CyclotomicInteger::one(r))
    }

    pub fn r(&self) -> u64 {
        self.num.r()
    }

    pub fn num(&self) -> &CyclotomicInteger {
        &self.num
    }

    pub fn den(&self) -> &BigInt {
        &self.den
    }

    fn reduce(&mut self) {
        if self.den.is_negative() {
            self.den = -&self.den;
            self.num = -&self.num;
        }
        if self.num.is_zero() {
            self.den = BigInt::one();
            return;
        }
        let mut g = self.den.clone();
        for c in self.num.coeffs() {
            g = g.gcd(c);
            if g.is_one() {
                return;
            }
        }
        if !g.is_one() {
            let coeffs = self.num.coeffs().iter().map(|c| c / &g).collect();
            self.num = CyclotomicInteger::from_coeffs(self.num.r(), coeffs);
            self.den /= &g;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.den.is_one() && self.num.is_one()
    }

    /// Integral means: lies in Z[xi], i.e. reduced denominator 1. Z[xi] is the
    /// full ring of integers of Q(xi), so this is equivalent to being an
    /// algebraic integer.
    pub fn is_integral(&self) -> bool {
        self.den.is_one()
    }

    pub fn as_integer(&self) -> Option<&CyclotomicInteger> {
        if self.den.is_one() {
            Some(&self.num)
        } else {
            None
        }
    }

    pub fn mul_cyc(&self, x: &CyclotomicInteger) -> Self {
        Self::new(&self.num * x, self.den.clone())
    }

    pub fn div_cyc(&self, x: &CyclotomicInteger) -> Option<Self> {
        if x.is_zero() {
            return None;
        }
        let adj = x.adjugate();
        let n = x.norm();
        Some(Self::new(&self.num * &adj, &self.den * &n))
    }

    pub fn pow(&self, e: u64) -> Self {
        let mut acc = Self::one(self.r());
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    pub fn galois(&self, a: u64) -> Self {
        CycRational { num: self.num.galois(a), den: self.den.clone() }
    }

    pub fn conjugate(&self) -> Self {
        CycRational { num: self.num.conjugate(), den: self.den.clone() }
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "r": self.r(),
            "coeffs": self.num.coeffs().iter().map(|c| c.to_string()).collect::<Vec<_>>(),
            "den": self.den.to_string(),
        })
    }
}

impl std::ops::Mul<&CycRational> for &CycRational {
    type Output = CycRational;
    fn mul(self, rhs: &CycRational) -> CycRational {
        CycRational::new(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

impl std::ops::Add<&CycRational> for &CycRational {
    type Output = CycRational;
    fn add(self, rhs: &CycRational) -> CycRational {
        CycRational::new(
            &self.num.scale(&rhs.den) + &rhs.num.scale(&self.den),
            &self.den * &rhs.den,
        )
    }
}

impl std::ops::Sub<&CycRational> for &CycRational {
    type Output = CycRational;
    fn sub(self, rhs: &CycRational) -> CycRational {
        CycRational::new(
            &self.num.scale(&rhs.den) - &rhs.num.scale(&self.den),
            &self.den * &rhs.den,
        )
    }
}

impl std::ops::Div<&CycRational> for &CycRational {
    type Output = CycRational;
    fn div(self, rhs: &CycRational) -> CycRational {
        assert!(!rhs.is_zero(), "division by zero");
        let adj = rhs.num.adjugate();
        let n = rhs.num.norm();
        CycRational::new((&self.num * &adj).scale(&rhs.den), &self.den * &n)
    }
}

impl fmt::Debug for CycRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for CycRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / {}", self.num, self.den)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reduction() {
        let x = CycRational::new(
            CyclotomicInteger::from_coeffs(5, vec![6.into(), 4.into(), 2.into(), 0.into()]),
            4.into(),
        );
        assert_eq!(*x.den(), 2.into());
        let y = CycRational::new(CyclotomicInteger::from_int(5, 10), (-5).into());
        assert_eq!(*y.den(), 1.into());
        assert_eq!(y.num().as_rational_int().unwrap(), (-2).into());
    }

    #[test]
    fn field_ops() {
        let r = 7;
        let a = CycRational::from_integer(CyclotomicInteger::xi_pow(r, 3));
        let b = CycRational::new(
            &CyclotomicInteger::xi_pow(r, 1) - &CyclotomicInteger::from_int(r, 2),
            3.into(),
        );
        let q = &(&a * &b) / &b;
        assert_eq!(q, a);
        let s = &(&a + &b) - &b;
        assert_eq!(s, a);
    }

    #[test]
    fn integrality_detection() {
        // (xi-1)^4 / 5 is integral at r=5 up to a unit; here just check that a
        // non-integral value is flagged.
        let r = 5;
        let x = CycRational::new(CyclotomicInteger::xi_pow(r, 1), 2.into());
        assert!(!x.is_integral());
        let y = x.mul_cyc(&CyclotomicInteger::from_int(r, 2));
        assert!(y.is_integral());
    }
}
