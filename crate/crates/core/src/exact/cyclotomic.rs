//! The cyclotomic ring Z[xi_r] for odd prime r, in the power basis
//! {1, xi, ..., xi^{r-2}} with xi^{r-1} rewritten as -(1 + xi + ... + xi^{r-2}).

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::laurent::LaurentPoly;

/// An element of Z[xi_r], xi a primitive r-th root of unity, r an odd prime.
/// The representation in the power basis is unique.
#[derive(Clone, PartialEq, Eq)]
pub struct CyclotomicInteger {
    r: u64,
    coeffs: Vec<BigInt>, // length r-1
}

/// The (xi - 1)-adic valuation of a cyclotomic integer.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Valuation {
    Finite(u64),
    Infinite,
}

impl Valuation {
    pub fn at_least(&self, k: u64) -> bool {
        match self {
            Valuation::Finite(v) => *v >= k,
            Valuation::Infinite => true,
        }
    }
}

impl fmt::Display for Valuation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Valuation::Finite(v) => write!(f, "{v}"),
            Valuation::Infinite => write!(f, "inf"),
        }
    }
}

impl CyclotomicInteger {
    pub fn zero(r: u64) -> Self {
        debug_assert!(r >= 3 && r % 2 == 1);
        CyclotomicInteger {
            r,
            coeffs: vec![BigInt::zero(); (r - 1) as usize],
        }
    }

    pub fn one(r: u64) -> Self {
        Self::from_int(r, BigInt::one())
    }

    pub fn from_int(r: u64, n: impl Into<BigInt>) -> Self {
        let mut z = Self::zero(r);
        z.coeffs[0] = n.into();
        z
    }

    pub fn xi_pow(r: u64, e: i64) -> Self {
        let mut z = Self::zero(r);
        z.add_xi_pow(e, &BigInt::one());
        z
    }

    pub fn from_coeffs(r: u64, coeffs: Vec<BigInt>) -> Self {
        assert_eq!(coeffs.len(), (r - 1) as usize);
        CyclotomicInteger { r, coeffs }
    }

    pub fn r(&self) -> u64 {
        self.r
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Add a*xi^e in place, reducing into the power basis.
    pub fn add_xi_pow(&mut self, e: i64, a: &BigInt) {
        if a.is_zero() {
            return;
        }
        let e = e.rem_euclid(self.r as i64) as usize;
        if e < (self.r - 1) as usize {
            self.coeffs[e] += a;
        } else {
            for c in self.coeffs.iter_mut() {
                *c -= a;
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0].is_one() && self.coeffs[1..].iter().all(|c| c.is_zero())
    }

    /// Some(n) when the element is the rational integer n.
    pub fn as_rational_int(&self) -> Option<BigInt> {
        if self.coeffs[1..].iter().all(|c| c.is_zero()) {
            Some(self.coeffs[0].clone())
        } else {
            None
        }
    }

    pub fn scale(&self, m: &BigInt) -> Self {
        CyclotomicInteger {
            r: self.r,
            coeffs: self.coeffs.iter().map(|c| c * m).collect(),
        }
    }

    pub fn pow(&self, e: u64) -> Self {
        let mut acc = Self::one(self.r);
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// The Galois map xi -> xi^a for gcd(a, r) = 1.
    pub fn galois(&self, a: u64) -> Self {
        assert!(!a.is_multiple_of(self.r), "galois exponent must be prime to r");
        let mut z = Self::zero(self.r);
        for (i, c) in self.coeffs.iter().enumerate() {
            z.add_xi_pow((a as i64) * (i as i64), c);
        }
        z
    }

    /// Complex conjugation xi -> xi^{r-1} = xi^{-1}.
    pub fn conjugate(&self) -> Self {
        self.galois(self.r - 1)
    }

    pub fn coeff_sum(&self) -> BigInt {
        self.coeffs.iter().sum()
    }

    /// Coefficient-wise reduction into {0, ..., r-1}.
    pub fn mod_r_reduce(&self) -> Self {
        let r = BigInt::from(self.r);
        CyclotomicInteger {
            r: self.r,
            coeffs: self.coeffs.iter().map(|c| c.mod_floor(&r)).collect(),
        }
    }

    /// Largest k with (xi-1)^k dividing self, together with the exact quotient.
    /// x = 0 has infinite valuation (quotient reported as 0).
    ///
    /// x is divisible by (xi - 1) iff its coefficient sum is 0 mod r; the
    /// exact division subtracts (c/r)*Phi_r and divides synthetically by (v-1).
    pub fn valuation_at_one_minus_xi(&self) -> (Valuation, CyclotomicInteger) {
        if self.is_zero() {
            return (Valuation::Infinite, self.clone());
        }
        let r = self.r as usize;
        let mut x = self.clone();
        let mut k = 0u64;
        loop {
            let s = x.coeff_sum();
            let (m, rem) = s.div_rem(&BigInt::from(self.r));
            if !rem.is_zero() {
                return (Valuation::Finite(k), x);
            }
            // p = x - (s/r) * Phi_r, as a degree r-1 integer polynomial
            let mut p: Vec<BigInt> = x.coeffs.clone();
            p.push(BigInt::zero());
            for c in p.iter_mut() {
                *c -= &m;
            }
            // synthetic division by (v - 1)
            let mut q = vec![BigInt::zero(); r - 1];
            q[r - 2] = p[r - 1].clone();
            for i in (1..r - 1).rev() {
                q[i - 1] = &p[i] + &q[i];
            }
            debug_assert!((&p[0] + &q[0]).is_zero());
            x = CyclotomicInteger { r: self.r, coeffs: q };
            k += 1;
        }
    }

    /// Product of the nontrivial Galois conjugates; x * adjugate(x) = norm(x).
    pub fn adjugate(&self) -> Self {
        let mut adj = Self::one(self.r);
        for a in 2..self.r {
            adj = &adj * &self.galois(a);
        }
        adj
    }

    /// The field norm down to Z.
    pub fn norm(&self) -> BigInt {
        let n = self * &self.adjugate();
        n.as_rational_int().expect("norm must be a rational integer")
    }

    /// Exact division in Z[xi]; None when not divisible (or dividing by zero).
    pub fn div_exact(&self, d: &Self) -> Option<Self> {
        assert_eq!(self.r, d.r);
        if d.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(Self::zero(self.r));
        }
        let adj = d.adjugate();
        let n = (d * &adj).as_rational_int().expect("norm is rational");
        let num = self * &adj;
        let mut q = Vec::with_capacity(num.coeffs.len());
        for c in num.coeffs.iter() {
            let (qc, rem) = c.div_rem(&n);
            if !rem.is_zero() {
                return None;
            }
            q.push(qc);
        }
        Some(CyclotomicInteger { r: self.r, coeffs: q })
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "r": self.r,
            "coeffs": self.coeffs.iter().map(|c| c.to_string()).collect::<Vec<_>>(),
        })
    }

    pub fn from_json(value: &serde_json::Value) -> Option<Self> {
        let r = value.get("r")?.as_u64()?;
        let arr = value.get("coeffs")?.as_array()?;
        if arr.len() != (r - 1) as usize {
            return None;
        }
        let mut coeffs = Vec::with_capacity(arr.len());
        for c in arr {
            coeffs.push(c.as_str()?.parse().ok()?);
        }
        Some(CyclotomicInteger { r, coeffs })
    }
}

/// Specialize a Laurent polynomial under v -> xi_r.
pub fn specialize(p: &LaurentPoly, r: u64) -> CyclotomicInteger {
    specialize_power(p, r, 1)
}

/// Specialize under v -> xi_r^a (the Galois twist of the standard embedding).
pub fn specialize_power(p: &LaurentPoly, r: u64, a: u64) -> CyclotomicInteger {
    let mut z = CyclotomicInteger::zero(r);
    for (e, c) in p.terms() {
        z.add_xi_pow((a as i64) * e, c);
    }
    z
}

impl fmt::Debug for CyclotomicInteger {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for CyclotomicInteger {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if first {
                first = false;
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let a = c.abs();
            match (i, a.is_one()) {
                (0, _) => write!(f, "{a}")?,
                (1, true) => write!(f, "x")?,
                (1, false) => write!(f, "{a}*x")?,
                (_, true) => write!(f, "x^{i}")?,
                (_, false) => write!(f, "{a}*x^{i}")?,
            }
        }
        Ok(())
    }
}

macro_rules! cyc_binop {
    ($trait:ident, $method:ident) => {
        impl std::ops::$trait<&CyclotomicInteger> for &CyclotomicInteger {
            type Output = CyclotomicInteger;
            fn $method(self, rhs: &CyclotomicInteger) -> CyclotomicInteger {
                CyclotomicInteger::$method(self, rhs)
            }
        }
    };
}

impl CyclotomicInteger {
    fn add(&self, rhs: &Self) -> Self {
        assert_eq!(self.r, rhs.r);
        CyclotomicInteger {
            r: self.r,
            coeffs: self
                .coeffs
                .iter()
                .zip(rhs.coeffs.iter())
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    fn sub(&self, rhs: &Self) -> Self {
        assert_eq!(self.r, rhs.r);
        CyclotomicInteger {
            r: self.r,
            coeffs: self
                .coeffs
                .iter()
                .zip(rhs.coeffs.iter())
                .map(|(a, b)| a - b)
                .collect(),
        }
    }

    fn mul(&self, rhs: &Self) -> Self {
        assert_eq!(self.r, rhs.r);
        let mut z = Self::zero(self.r);
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                z.add_xi_pow((i + j) as i64, &(a * b));
            }
        }
        z
    }
}

cyc_binop!(Add, add);
cyc_binop!(Sub, sub);
cyc_binop!(Mul, mul);

impl std::ops::Neg for &CyclotomicInteger {
    type Output = CyclotomicInteger;
    fn neg(self) -> CyclotomicInteger {
        CyclotomicInteger {
            r: self.r,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}
