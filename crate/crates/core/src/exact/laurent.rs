//! Laurent polynomials over Z, the ring Z[v, v^-1].

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// An element of Z[v, v^-1] in canonical sparse form: no stored
/// coefficient is zero.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct LaurentPoly {
    coeffs: BTreeMap<i64, BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(0, BigInt::one())
    }

    pub fn monomial(exp: i64, coeff: impl Into<BigInt>) -> Self {
        let c = coeff.into();
        let mut coeffs = BTreeMap::new();
        if !c.is_zero() {
            coeffs.insert(exp, c);
        }
        LaurentPoly { coeffs }
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (i64, BigInt)>) -> Self {
        let mut p = Self::zero();
        for (e, c) in terms {
            p.add_term(e, &c);
        }
        p
    }

    /// The quantum integer [m] = (v^m - v^-m)/(v - v^-1) for m >= 0.
    pub fn quantum_int(m: u64) -> Self {
        let mut coeffs = BTreeMap::new();
        for j in 0..m {
            coeffs.insert(m as i64 - 1 - 2 * j as i64, BigInt::one());
        }
        LaurentPoly { coeffs }
    }

    /// [m] for m of either sign; [-m] = -[m].
    pub fn quantum_int_signed(m: i64) -> Self {
        if m >= 0 {
            Self::quantum_int(m as u64)
        } else {
            -&Self::quantum_int((-m) as u64)
        }
    }

    /// Gaussian binomial coefficient, the q-Pascal recursion keeps all
    /// intermediate values in Z[v, v^-1].
    pub fn gauss_binomial(m: u64, t: u64) -> Self {
        if t > m {
            return Self::zero();
        }
        if t == 0 || t == m {
            return Self::one();
        }
        let mut prev: Vec<LaurentPoly> = vec![Self::one()];
        for row in 1..=m {
            let top = row.min(t);
            let mut cur = Vec::with_capacity(top as usize + 1);
            for j in 0..=top {
                if j == 0 || j == row {
                    cur.push(Self::one());
                } else {
                    // qb(row, j) = v^j qb(row-1, j) + v^{j-row} qb(row-1, j-1)
                    let mut term = if (j as usize) < prev.len() {
                        &Self::monomial(j as i64, 1) * &prev[j as usize]
                    } else {
                        Self::zero()
                    };
                    term += &(&Self::monomial(j as i64 - row as i64, 1) * &prev[j as usize - 1]);
                    cur.push(term);
                }
            }
            prev = cur;
        }
        prev[t as usize].clone()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs.get(&0).is_some_and(|c| c.is_one())
    }

    pub fn coeff(&self, exp: i64) -> BigInt {
        self.coeffs.get(&exp).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigInt)> {
        self.coeffs.iter().map(|(e, c)| (*e, c))
    }

    pub fn num_terms(&self) -> usize {
        self.coeffs.len()
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.coeffs.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.coeffs.keys().next_back().copied()
    }

    pub fn add_term(&mut self, exp: i64, c: &BigInt) {
        if c.is_zero() {
            return;
        }
        let entry = self.coeffs.entry(exp).or_insert_with(BigInt::zero);
        *entry += c;
        if entry.is_zero() {
            self.coeffs.remove(&exp);
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Substitute v -> v^k. k = -1 is the mirror map (bar involution on exponents).
    pub fn substitute_power(&self, k: i64) -> Self {
        Self::from_terms(self.coeffs.iter().map(|(e, c)| (e * k, c.clone())))
    }

    /// Value at v = 1, i.e. the classical specialization.
    pub fn eval_at_one(&self) -> BigInt {
        self.coeffs.values().sum()
    }

    /// Invariance under v -> v^-1.
    pub fn is_palindromic(&self) -> bool {
        *self == self.substitute_power(-1)
    }

    /// Exact division; returns None when `d` does not divide `self` in Z[v, v^-1].
    pub fn div_exact(&self, d: &Self) -> Option<Self> {
        if d.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(Self::zero());
        }
        // Shift both to ordinary polynomials with nonzero constant term; the
        // unit factor v^k is restored at the end.
        let s_min = self.min_exp().unwrap();
        let d_min = d.min_exp().unwrap();
        let mut rem = self * &Self::monomial(-s_min, 1);
        let dd = d * &Self::monomial(-d_min, 1);
        let dd_deg = dd.max_exp().unwrap();
        let dd_lead = dd.coeff(dd_deg);
        let mut quot = Self::zero();
        while !rem.is_zero() {
            let r_deg = rem.max_exp().unwrap();
            if r_deg < dd_deg {
                return None;
            }
            let (q, m) = num_integer::Integer::div_rem(&rem.coeff(r_deg), &dd_lead);
            if m.is_zero() {
                let term = Self::monomial(r_deg - dd_deg, q);
                rem -= &(&term * &dd);
                quot += &term;
            } else {
                return None;
            }
        }
        Some(&quot * &Self::monomial(s_min - d_min, 1))
    }

    /// Serialize as sorted [[exp, coeff-as-decimal-string], ...].
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::Value::Array(
            self.coeffs
                .iter()
                .map(|(e, c)| serde_json::json!([e, c.to_string()]))
                .collect(),
        )
    }

    pub fn from_json(value: &serde_json::Value) -> Option<Self> {
        let arr = value.as_array()?;
        let mut p = Self::zero();
        for pair in arr {
            let pair = pair.as_array()?;
            let e = pair.first()?.as_i64()?;
            let c: BigInt = pair.get(1)?.as_str()?.parse().ok()?;
            p.add_term(e, &c);
        }
        Some(p)
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in self.coeffs.iter().rev() {
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
            match (*e, a.is_one()) {
                (0, _) => write!(f, "{a}")?,
                (1, true) => write!(f, "v")?,
                (1, false) => write!(f, "{a}*v")?,
                (_, true) => write!(f, "v^{e}")?,
                (_, false) => write!(f, "{a}*v^{e}")?,
            }
        }
        Ok(())
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident) => {
        impl std::ops::$trait<&LaurentPoly> for &LaurentPoly {
            type Output = LaurentPoly;
            fn $method(self, rhs: &LaurentPoly) -> LaurentPoly {
                LaurentPoly::$method(self, rhs)
            }
        }
    };
}

impl LaurentPoly {
    fn add(&self, rhs: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in rhs.coeffs.iter() {
            out.add_term(*e, c);
        }
        out
    }

    fn sub(&self, rhs: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in rhs.coeffs.iter() {
            out.add_term(*e, &(-c));
        }
        out
    }

    fn mul(&self, rhs: &Self) -> Self {
        let mut out = Self::zero();
        for (e1, c1) in self.coeffs.iter() {
            for (e2, c2) in rhs.coeffs.iter() {
                out.add_term(e1 + e2, &(c1 * c2));
            }
        }
        out
    }
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);

impl std::ops::Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            coeffs: self.coeffs.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }
}

impl std::ops::AddAssign<&LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, rhs: &LaurentPoly) {
        for (e, c) in rhs.coeffs.iter() {
            self.add_term(*e, c);
        }
    }
}

impl std::ops::SubAssign<&LaurentPoly> for LaurentPoly {
    fn sub_assign(&mut self, rhs: &LaurentPoly) {
        for (e, c) in rhs.coeffs.iter() {
            self.add_term(*e, &(-c));
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn quantum_ints() {
        assert_eq!(LaurentPoly::quantum_int(0), LaurentPoly::zero());
        assert_eq!(LaurentPoly::quantum_int(1), LaurentPoly::one());
        let q2 = LaurentPoly::quantum_int(2);
        assert_eq!(q2, LaurentPoly::from_terms([(1, 1.into()), (-1, 1.into())]));
        let q3 = LaurentPoly::quantum_int(3);
        assert!(q3.is_palindromic());
        assert_eq!(q3.eval_at_one(), 3.into());
    }

    #[test]
    fn gauss_binomials_match_product_formula() {
        // qb(m, t) * [t]! * [m-t]! == [m]!
        let fact = |m: u64| {
            let mut f = LaurentPoly::one();
            for i in 1..=m {
                f = &f * &LaurentPoly::quantum_int(i);
            }
            f
        };
        for m in 0..=8u64 {
            for t in 0..=m {
                let lhs = &(&LaurentPoly::gauss_binomial(m, t) * &fact(t)) * &fact(m - t);
                assert_eq!(lhs, fact(m), "m={m} t={t}");
            }
        }
    }

    #[test]
    fn exact_division() {
        let q6 = LaurentPoly::quantum_int(6);
        let q2 = LaurentPoly::quantum_int(2);
        let q = q6.div_exact(&q2).unwrap();
        assert_eq!(&q * &q2, q6);
        // [3] does not divide [4]
        assert!(LaurentPoly::quantum_int(4)
            .div_exact(&LaurentPoly::quantum_int(3))
            .is_none());
    }

    #[test]
    fn display_roundtrip_json() {
        let p = LaurentPoly::from_terms([(3, 2.into()), (-1, (-5).into())]);
        let j = p.to_json();
        assert_eq!(LaurentPoly::from_json(&j).unwrap(), p);
    }
}
