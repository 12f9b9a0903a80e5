//! Property tests for the exact-arithmetic layer and the linking analysis.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use proptest::prelude::*;

use wrt::diagram::{builtin, inertia};
use wrt::exact::{
    h_expand, specialize, CycRational, CyclotomicInteger, LaurentPoly, Valuation,
};
use wrt::invariant::{evaluate_j, f_value, InvariantContext, JOutput, RingMode};

fn arb_laurent() -> impl Strategy<Value = LaurentPoly> {
    prop::collection::vec((-12i64..=12, -9i64..=9), 0..6).prop_map(|terms| {
        LaurentPoly::from_terms(terms.into_iter().map(|(e, c)| (e, BigInt::from(c))))
    })
}

fn arb_cyc(r: u64) -> impl Strategy<Value = CyclotomicInteger> {
    prop::collection::vec(-20i64..=20, (r - 1) as usize).prop_map(move |cs| {
        CyclotomicInteger::from_coeffs(r, cs.into_iter().map(BigInt::from).collect())
    })
}

proptest! {
    #[test]
    fn specialize_is_ring_homomorphism(p in arb_laurent(), q in arb_laurent()) {
        for r in [5u64, 7] {
            let lhs = specialize(&(&p * &q), r);
            let rhs = &specialize(&p, r) * &specialize(&q, r);
            prop_assert_eq!(&lhs, &rhs);
            let lhs = specialize(&(&p + &q), r);
            let rhs = &specialize(&p, r) + &specialize(&q, r);
            prop_assert_eq!(&lhs, &rhs);
        }
    }

    #[test]
    fn valuation_reconstructs_exactly(x in arb_cyc(7)) {
        let (val, quot) = x.valuation_at_one_minus_xi();
        match val {
            Valuation::Infinite => prop_assert!(x.is_zero()),
            Valuation::Finite(k) => {
                let ximinus1 = &CyclotomicInteger::xi_pow(7, 1) - &CyclotomicInteger::one(7);
                let mut rebuilt = quot.clone();
                for _ in 0..k {
                    rebuilt = &rebuilt * &ximinus1;
                }
                prop_assert_eq!(&rebuilt, &x);
                // the quotient is not further divisible
                let (vq, _) = quot.valuation_at_one_minus_xi();
                prop_assert_eq!(vq, Valuation::Finite(0));
            }
        }
    }

    #[test]
    fn conjugation_is_a_ring_involution(x in arb_cyc(5), y in arb_cyc(5)) {
        prop_assert_eq!(&x.conjugate().conjugate(), &x);
        prop_assert_eq!(
            &(&x * &y).conjugate(),
            &(&x.conjugate() * &y.conjugate())
        );
        prop_assert_eq!(
            &(&x + &y).conjugate(),
            &(&x.conjugate() + &y.conjugate())
        );
    }

    #[test]
    fn mod_r_difference_divisible(x in arb_cyc(5)) {
        let reduced = x.mod_r_reduce();
        let diff = &x - &reduced;
        for c in diff.coeffs() {
            prop_assert!((c % BigInt::from(5u64)).bits() == 0);
        }
    }

    #[test]
    fn h_expansion_respects_products(p in arb_laurent(), q in arb_laurent()) {
        let order = 4;
        let hp = h_expand(&p, order);
        let hq = h_expand(&q, order);
        let hpq = h_expand(&(&p * &q), order);
        for i in 0..=order {
            let mut s = num_rational::BigRational::from(BigInt::from(0));
            for j in 0..=i {
                s += &hp[j] * &hq[i - j];
            }
            prop_assert_eq!(&s, &hpq[i], "order {}", i);
        }
    }

    #[test]
    fn kappa_multiplication_laws(
        ca in prop::collection::vec(-6i64..=6, 4),
        cb in prop::collection::vec(-6i64..=6, 4),
        ea in 0i64..6,
        eb in -4i64..4,
    ) {
        let ctx = InvariantContext::new(5).unwrap();
        let mk = |cs: &[i64], e: i64| {
            ctx.kappa(
                CycRational::from_integer(CyclotomicInteger::from_coeffs(
                    5,
                    cs.iter().map(|&c| BigInt::from(c)).collect(),
                )),
                e,
            )
        };
        let a = mk(&ca, ea);
        let b = mk(&cb, eb);
        let c = mk(&[1, 2, 0, -1], 1);
        prop_assert!(a.mul(&b) == b.mul(&a));
        prop_assert!(a.mul(&b).mul(&c) == a.mul(&b.mul(&c)));
        prop_assert!(a.kappa_exponent() <= 1);
    }
}

// ---------------------------------------------------------------------------
// exact inertia under unimodular congruence

fn random_unimodular(n: usize, seed: &[i8]) -> Vec<Vec<i64>> {
    // product of elementary row additions and swaps driven by the seed
    let mut s = vec![vec![0i64; n]; n];
    for (i, row) in s.iter_mut().enumerate() {
        row[i] = 1;
    }
    let mut k = 0;
    for &step in seed {
        let i = (step.unsigned_abs() as usize) % n;
        let j = (k + 1) % n;
        k += 1;
        if i == j {
            continue;
        }
        let c = (step % 3) as i64;
        for col in 0..n {
            s[i][col] += c * s[j][col];
        }
    }
    s
}

fn congruence_transform(b: &[Vec<i64>], s: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let n = b.len();
    let mut sb = vec![vec![0i64; n]; n];
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                sb[i][j] += s[k][i] * b[k][j]; // S^T B
            }
        }
    }
    let mut out = vec![vec![0i64; n]; n];
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                out[i][j] += sb[i][k] * s[k][j]; // (S^T B) S
            }
        }
    }
    out
}

proptest! {
    #[test]
    fn inertia_is_congruence_invariant(
        entries in prop::collection::vec(-5i64..=5, 10),
        seed in prop::collection::vec(-8i8..=8, 8),
    ) {
        // symmetric 4x4 from 10 free entries
        let n = 4;
        let mut b = vec![vec![0i64; n]; n];
        let mut it = entries.into_iter();
        for i in 0..n {
            for j in i..n {
                let v = it.next().unwrap();
                b[i][j] = v;
                b[j][i] = v;
            }
        }
        let s = random_unimodular(n, &seed);
        let b2 = congruence_transform(&b, &s);
        prop_assert_eq!(inertia(&b), inertia(&b2));
    }
}

// ---------------------------------------------------------------------------
// color-sum reassociation

#[test]
fn f_value_is_reassociation_invariant() {
    // the color sum must not depend on enumeration order: recompute the
    // Hopf sum by hand over the reversed tuple order
    let r = 7;
    let ctx = InvariantContext::new(r).unwrap();
    let pres = builtin("hopf(1,-2)").unwrap();
    let fast = f_value(&pres, &ctx, &Default::default()).unwrap();
    let mut tuples = Vec::new();
    for n1 in &ctx.alcove {
        for n2 in &ctx.alcove {
            tuples.push((*n1, *n2));
        }
    }
    tuples.reverse();
    let mut slow = CyclotomicInteger::zero(r);
    for (n1, n2) in tuples {
        let colors: BTreeMap<usize, u64> = [(0, n1), (1, n2)].into();
        let j = match evaluate_j(
            &pres.diagram,
            &colors,
            &pres.framings,
            RingMode::Specialized { r, embedding: 1 },
            &Default::default(),
        )
        .unwrap()
        {
            JOutput::ClosedSpecialized(c) => c,
            other => panic!("{other:?}"),
        };
        slow = &slow + &(&(&ctx.qdim(n1) * &ctx.qdim(n2)) * &j);
    }
    assert_eq!(fast, slow);
}
