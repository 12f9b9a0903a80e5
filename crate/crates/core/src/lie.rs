//! Cartan data for simple Lie algebras, the invariant bilinear form, the
//! fundamental alcove at an odd prime level, and quantum Weyl dimensions.
//!
//! Invariant evaluation elsewhere in the crate is sl2-only; the tables here
//! cover A1..A3, B2, G2 so alcove enumeration and admissibility checks are
//! exercised beyond rank one.

use thiserror::Error;

use crate::exact::LaurentPoly;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum LieError {
    #[error("unknown algebra `{0}`")]
    UnknownAlgebra(String),
    #[error("rank mismatch: expected {expected}, got {got}")]
    RankMismatch { expected: usize, got: usize },
    #[error("r = {0} is not prime")]
    NonPrime(u64),
    #[error("r = {0} is even")]
    EvenR(u64),
    #[error("r = {r} is below the admissible bound d*h_dual = {min}")]
    TooSmall { r: u64, min: u64 },
    #[error("r = {r} divides det(a_ij) = {det}")]
    DividesDeterminant { r: u64, det: u64 },
    #[error("weight is not dominant")]
    NonDominant,
}

/// An element of the root lattice Y, as coefficients in the simple roots.
#[derive(Clone, PartialEq, Eq, Debug, Hash, PartialOrd, Ord)]
pub struct RootVector(pub Vec<i64>);

impl RootVector {
    pub fn zero(rank: usize) -> Self {
        RootVector(vec![0; rank])
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }
}

impl std::fmt::Display for RootVector {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let strs: Vec<String> = self.0.iter().map(|c| c.to_string()).collect();
        write!(f, "{}", strs.join(","))
    }
}

/// Cartan data of a simple Lie algebra with the normalized form
/// (alpha_i | alpha_j) = d_i a_ij, short roots of square length 2.
#[derive(Clone, Debug)]
pub struct CartanDatum {
    pub name: String,
    pub rank: usize,
    pub cartan: Vec<Vec<i64>>,
    pub symmetrizers: Vec<i64>,
    pub form: Vec<Vec<i64>>,
    pub positive_roots: Vec<RootVector>,
    /// 2*rho in the simple-root basis (always integral).
    pub rho_twice: Vec<i64>,
    pub alpha0: RootVector,
    pub d_max: u64,
    pub dual_coxeter: u64,
    pub dim_g: u64,
    pub det_cartan: u64,
}

impl CartanDatum {
    pub fn by_name(name: &str) -> Result<CartanDatum, LieError> {
        match name {
            "sl2" | "a1" | "A1" => Ok(Self::series_a(1)),
            "sl3" | "a2" | "A2" => Ok(Self::series_a(2)),
            "sl4" | "a3" | "A3" => Ok(Self::series_a(3)),
            "so5" | "b2" | "B2" => Ok(Self::b2()),
            "g2" | "G2" => Ok(Self::g2()),
            other => Err(LieError::UnknownAlgebra(other.to_string())),
        }
    }

    pub fn sl2() -> CartanDatum {
        Self::series_a(1)
    }

    pub fn series_a(rank: usize) -> CartanDatum {
        assert!((1..=3).contains(&rank));
        let mut cartan = vec![vec![0i64; rank]; rank];
        for i in 0..rank {
            cartan[i][i] = 2;
            if i + 1 < rank {
                cartan[i][i + 1] = -1;
                cartan[i + 1][i] = -1;
            }
        }
        // positive roots alpha_i + ... + alpha_j for i <= j
        let mut positive = Vec::new();
        for i in 0..rank {
            for j in i..rank {
                let mut v = vec![0i64; rank];
                for c in v.iter_mut().take(j + 1).skip(i) {
                    *c = 1;
                }
                positive.push(RootVector(v));
            }
        }
        let alpha0 = RootVector(vec![1; rank]);
        Self::build(
            format!("A{rank}"),
            cartan,
            vec![1; rank],
            positive,
            alpha0,
        )
    }

    pub fn b2() -> CartanDatum {
        // alpha_1 short (d=1), alpha_2 long (d=2)
        let cartan = vec![vec![2, -2], vec![-1, 2]];
        let positive = vec![
            RootVector(vec![1, 0]),
            RootVector(vec![0, 1]),
            RootVector(vec![1, 1]),
            RootVector(vec![2, 1]),
        ];
        Self::build(
            "B2".into(),
            cartan,
            vec![1, 2],
            positive,
            RootVector(vec![1, 1]),
        )
    }

    pub fn g2() -> CartanDatum {
        // alpha_1 short (d=1), alpha_2 long (d=3)
        let cartan = vec![vec![2, -3], vec![-1, 2]];
        let positive = vec![
            RootVector(vec![1, 0]),
            RootVector(vec![0, 1]),
            RootVector(vec![1, 1]),
            RootVector(vec![2, 1]),
            RootVector(vec![3, 1]),
            RootVector(vec![3, 2]),
        ];
        Self::build(
            "G2".into(),
            cartan,
            vec![1, 3],
            positive,
            RootVector(vec![2, 1]),
        )
    }

    fn build(
        name: String,
        cartan: Vec<Vec<i64>>,
        symmetrizers: Vec<i64>,
        positive_roots: Vec<RootVector>,
        alpha0: RootVector,
    ) -> CartanDatum {
        let rank = cartan.len();
        let form: Vec<Vec<i64>> = (0..rank)
            .map(|i| (0..rank).map(|j| symmetrizers[i] * cartan[i][j]).collect())
            .collect();
        for i in 0..rank {
            for j in 0..rank {
                assert_eq!(form[i][j], form[j][i], "form must be symmetric");
            }
            assert_eq!(form[i][i], 2 * symmetrizers[i]);
        }
        let mut rho_twice = vec![0i64; rank];
        for root in &positive_roots {
            for (acc, c) in rho_twice.iter_mut().zip(root.0.iter()) {
                *acc += c;
            }
        }
        let pair = |a: &[i64], b: &[i64]| -> i64 {
            let mut s = 0;
            for i in 0..rank {
                for j in 0..rank {
                    s += a[i] * form[i][j] * b[j];
                }
            }
            s
        };
        // (rho | alpha_i) = d_i, so (2rho | alpha_i) = 2 d_i
        for i in 0..rank {
            let mut e = vec![0i64; rank];
            e[i] = 1;
            assert_eq!(pair(&rho_twice, &e), 2 * symmetrizers[i]);
        }
        // (rho | alpha) integral for every positive root
        for root in &positive_roots {
            assert_eq!(pair(&rho_twice, &root.0).rem_euclid(2), 0);
        }
        let d_max = *symmetrizers.iter().max().unwrap() as u64;
        // dual Coxeter number: 1 + max (alpha|rho)/d over positive roots
        let m = positive_roots
            .iter()
            .map(|a| pair(&a.0, &rho_twice) / 2)
            .max()
            .unwrap();
        assert_eq!(m % d_max as i64, 0);
        let dual_coxeter = (1 + m / d_max as i64) as u64;
        let dim_g = (rank + 2 * positive_roots.len()) as u64;
        let det_cartan = det_int(&cartan).unsigned_abs();
        CartanDatum {
            name,
            rank,
            cartan,
            symmetrizers,
            form,
            positive_roots,
            rho_twice,
            alpha0,
            d_max,
            dual_coxeter,
            dim_g,
            det_cartan,
        }
    }

    /// Bilinear pairing of two root-lattice vectors.
    pub fn pairing(&self, a: &RootVector, b: &RootVector) -> Result<i64, LieError> {
        if a.rank() != self.rank || b.rank() != self.rank {
            return Err(LieError::RankMismatch {
                expected: self.rank,
                got: a.rank().max(b.rank()),
            });
        }
        let mut s = 0;
        for i in 0..self.rank {
            for j in 0..self.rank {
                s += a.0[i] * self.form[i][j] * b.0[j];
            }
        }
        Ok(s)
    }

    /// (rho | mu), asserted integral.
    pub fn rho_pairing(&self, mu: &RootVector) -> Result<i64, LieError> {
        let p = self.pairing(&RootVector(self.rho_twice.clone()), mu)?;
        assert_eq!(p % 2, 0, "(rho|mu) must be integral on Y");
        Ok(p / 2)
    }

    /// Admissibility of r: odd prime, at least d*h_dual, prime to det(a_ij).
    pub fn validate_r(&self, r: u64) -> Result<(), LieError> {
        if r.is_multiple_of(2) {
            return Err(LieError::EvenR(r));
        }
        if !is_prime(r) {
            return Err(LieError::NonPrime(r));
        }
        let min = self.d_max * self.dual_coxeter;
        if r < min {
            return Err(LieError::TooSmall { r, min });
        }
        if self.det_cartan.is_multiple_of(r) {
            return Err(LieError::DividesDeterminant {
                r,
                det: self.det_cartan,
            });
        }
        Ok(())
    }

    /// Level k = r - 1 - (rho | alpha_0).
    pub fn level_k(&self, r: u64) -> Result<u64, LieError> {
        self.validate_r(r)?;
        let p = self.rho_pairing(&self.alpha0.clone())?;
        Ok(r - 1 - p as u64)
    }

    pub fn is_dominant(&self, mu: &RootVector) -> Result<bool, LieError> {
        for i in 0..self.rank {
            let mut e = vec![0i64; self.rank];
            e[i] = 1;
            if self.pairing(mu, &RootVector(e))? < 0 {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// All mu in Y with (mu|alpha_i) >= 0 and (mu|alpha_0) <= k, in
    /// lexicographic order of simple-root coefficients.
    pub fn alcove_colors(&self, r: u64) -> Result<Vec<RootVector>, LieError> {
        let k = self.level_k(r)? as i64;
        // Dominant vectors have nonnegative root coefficients and, for the
        // built-in tables, coefficients bounded by 2k.
        let bound = 2 * k + 1;
        let mut out = Vec::new();
        let mut coeffs = vec![0i64; self.rank];
        loop {
            let mu = RootVector(coeffs.clone());
            if self.is_dominant(&mu)? && self.pairing(&mu, &self.alpha0)? <= k {
                out.push(mu);
            }
            // odometer over [0, bound]^rank, most significant digit first
            let mut pos = self.rank;
            loop {
                if pos == 0 {
                    out.sort();
                    return Ok(out);
                }
                pos -= 1;
                if coeffs[pos] < bound {
                    coeffs[pos] += 1;
                    for c in coeffs.iter_mut().skip(pos + 1) {
                        *c = 0;
                    }
                    break;
                }
            }
        }
    }

    /// Quantum Weyl dimension: prod over positive roots of
    /// [(lambda+rho|alpha)] / [(rho|alpha)], a palindromic Laurent polynomial.
    pub fn quantum_dimension_poly(&self, lambda: &RootVector) -> Result<LaurentPoly, LieError> {
        if !self.is_dominant(lambda)? {
            return Err(LieError::NonDominant);
        }
        let mut num = LaurentPoly::one();
        let mut den = LaurentPoly::one();
        for alpha in &self.positive_roots {
            let rho_a = self.rho_pairing(alpha)?;
            let lam_a = self.pairing(lambda, alpha)?;
            num = &num * &LaurentPoly::quantum_int((lam_a + rho_a) as u64);
            den = &den * &LaurentPoly::quantum_int(rho_a as u64);
        }
        let q = num.div_exact(&den).expect("Weyl quotient is polynomial");
        debug_assert!(q.is_palindromic());
        Ok(q)
    }
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut i = 2;
    while i * i <= n {
        if n.is_multiple_of(i) {
            return false;
        }
        i += 1;
    }
    true
}

fn det_int(m: &[Vec<i64>]) -> i64 {
    let n = m.len();
    if n == 1 {
        return m[0][0];
    }
    // cofactor expansion along the first row; matrices here are tiny
    let mut det = 0;
    for j in 0..n {
        if m[0][j] == 0 {
            continue;
        }
        let minor: Vec<Vec<i64>> = m[1..]
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|(c, _)| *c != j)
                    .map(|(_, v)| *v)
                    .collect()
            })
            .collect();
        let sign = if j % 2 == 0 { 1 } else { -1 };
        det += sign * m[0][j] * det_int(&minor);
    }
    det
}

/// sl2 convenience: the color n means V_{n alpha}.
pub fn sl2_color_root(n: u64) -> RootVector {
    RootVector(vec![n as i64])
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sl2_pairings() {
        let d = CartanDatum::sl2();
        let a = RootVector(vec![1]);
        assert_eq!(d.pairing(&a, &a).unwrap(), 2);
        assert_eq!(d.pairing(&RootVector::zero(1), &a).unwrap(), 0);
        assert_eq!(
            d.pairing(&RootVector(vec![2]), &RootVector(vec![3])).unwrap(),
            12
        );
        assert!(d
            .pairing(&RootVector(vec![1, 0]), &a)
            .is_err());
    }

    #[test]
    fn levels() {
        let d = CartanDatum::sl2();
        assert_eq!(d.level_k(5).unwrap(), 3);
        assert_eq!(d.level_k(3).unwrap(), 1);
        assert_eq!(d.level_k(7).unwrap(), 5);
    }

    #[test]
    fn r_validation() {
        let d = CartanDatum::sl2();
        assert_eq!(d.validate_r(9), Err(LieError::NonPrime(9)));
        assert_eq!(d.validate_r(2), Err(LieError::EvenR(2)));
        assert!(d.validate_r(5).is_ok());
        assert!(d.validate_r(3).is_ok());
        // A2: det = 3, so r = 3 is excluded
        let a2 = CartanDatum::series_a(2);
        assert_eq!(
            a2.validate_r(3),
            Err(LieError::DividesDeterminant { r: 3, det: 3 })
        );
    }

    #[test]
    fn alcoves_sl2() {
        let d = CartanDatum::sl2();
        assert_eq!(
            d.alcove_colors(5).unwrap(),
            vec![RootVector(vec![0]), RootVector(vec![1])]
        );
        assert_eq!(
            d.alcove_colors(7).unwrap(),
            vec![
                RootVector(vec![0]),
                RootVector(vec![1]),
                RootVector(vec![2])
            ]
        );
        assert_eq!(d.alcove_colors(3).unwrap(), vec![RootVector(vec![0])]);
        for r in [3u64, 5, 7, 11, 13] {
            assert_eq!(d.alcove_colors(r).unwrap().len() as u64, (r - 1) / 2);
        }
    }

    #[test]
    fn alcove_boundary_is_sharp() {
        let d = CartanDatum::sl2();
        for r in [5u64, 7, 11] {
            let k = d.level_k(r).unwrap() as i64;
            let colors = d.alcove_colors(r).unwrap();
            for mu in &colors {
                assert!(d.pairing(mu, &d.alpha0).unwrap() <= k);
            }
            let max = colors.last().unwrap();
            let bumped = RootVector(vec![max.0[0] + 1]);
            assert!(d.pairing(&bumped, &d.alpha0).unwrap() > k);
        }
    }

    #[test]
    fn alcove_other_types() {
        // counts are small and fixed by the level constraint
        let b2 = CartanDatum::b2();
        assert!(b2.validate_r(7).is_ok());
        let colors = b2.alcove_colors(7).unwrap();
        assert!(!colors.is_empty());
        for mu in &colors {
            assert!(b2.is_dominant(mu).unwrap());
        }
        let g2 = CartanDatum::g2();
        assert!(g2.validate_r(13).is_ok());
        assert!(g2.validate_r(7).is_err()); // d*h_dual = 12
        let colors = g2.alcove_colors(13).unwrap();
        for mu in &colors {
            assert!(g2.pairing(mu, &g2.alpha0).unwrap() <= g2.level_k(13).unwrap() as i64);
        }
    }

    #[test]
    fn quantum_dimensions() {
        let d = CartanDatum::sl2();
        assert!(d
            .quantum_dimension_poly(&RootVector::zero(1))
            .unwrap()
            .is_one());
        assert_eq!(
            d.quantum_dimension_poly(&RootVector(vec![1])).unwrap(),
            LaurentPoly::quantum_int(3)
        );
        for n in 0..6u64 {
            let q = d
                .quantum_dimension_poly(&sl2_color_root(n))
                .unwrap();
            assert_eq!(q, LaurentPoly::quantum_int(2 * n + 1));
            assert_eq!(q.eval_at_one(), (2 * n as i64 + 1).into());
        }
        assert_eq!(
            d.quantum_dimension_poly(&RootVector(vec![-1])),
            Err(LieError::NonDominant)
        );
    }

    #[test]
    fn weyl_dimension_other_types() {
        // A2 adjoint V_{alpha1+alpha2}: dim 8
        let a2 = CartanDatum::series_a(2);
        let q = a2
            .quantum_dimension_poly(&RootVector(vec![1, 1]))
            .unwrap();
        assert_eq!(q.eval_at_one(), 8.into());
        assert!(q.is_palindromic());
        // G2 adjoint V_{alpha0_long}: highest root 3a1+2a2, dim 14
        let g2 = CartanDatum::g2();
        let q = g2
            .quantum_dimension_poly(&RootVector(vec![3, 2]))
            .unwrap();
        assert_eq!(q.eval_at_one(), 14.into());
    }

    #[test]
    fn datum_constants() {
        let g2 = CartanDatum::g2();
        assert_eq!(g2.dual_coxeter, 4);
        assert_eq!(g2.dim_g, 14);
        assert_eq!(g2.det_cartan, 1);
        let b2 = CartanDatum::b2();
        assert_eq!(b2.dual_coxeter, 3);
        assert_eq!(b2.dim_g, 10);
        assert_eq!(b2.det_cartan, 2);
        let a3 = CartanDatum::series_a(3);
        assert_eq!(a3.dual_coxeter, 4);
        assert_eq!(a3.dim_g, 15);
        assert_eq!(a3.det_cartan, 4);
    }
}
