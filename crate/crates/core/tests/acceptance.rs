//! Acceptance suite. Each test exercises one gate criterion at its stated
//! scale and tolerance (always exact arithmetic) and prints one line.
//!
//! Run with `cargo test --test acceptance -- --nocapture` to see the lines.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;

use wrt::analysis::{
    weight_sl2, ChordComponent, ChordDiagram, ComponentKind, RatMatrix,
};
use wrt::diagram::{builtin, disjoint_union, parse_diagram, ComponentColor};
use wrt::exact::{LaurentPoly, Valuation};
use wrt::invariant::{
    almost_integrality_check, divisibility_certificate, evaluate_j, f_value,
    projective_invariant, tau, CouponTable, ExtendedManifold, InvariantContext, JOutput,
    RingMode,
};
use wrt::lie::{sl2_color_root, CartanDatum, RootVector};
use wrt::periodicity::{periodicity_scan, Verdict};
use wrt::rep::{
    braiding, cap, cup, relations_hold, tensor_action, twist_scalar, Chirality, Generator,
    MorphismMatrix, ObjectWord, Sign, StrandObject,
};

fn pass(n: u32, what: &str) {
    println!("criterion {n:02} PASS - {what}");
}

fn no_coupons() -> CouponTable {
    CouponTable::new()
}

#[test]
fn criterion_01_algebraic_layer() {
    // quantum sl2 relations
    for n in 0..=6 {
        assert!(relations_hold(StrandObject::module(n)), "relations V_{n}");
        assert!(relations_hold(StrandObject::dual(n)), "relations V_{n}*");
    }
    // Yang-Baxter on V_a (x) V_b (x) V_c, a,b,c <= 2, exact over Z[v,v^-1]
    let id = |n: u64| MorphismMatrix::identity(ObjectWord::single(StrandObject::module(n)));
    for a in 0..=2u64 {
        for b in 0..=2u64 {
            for c in 0..=2u64 {
                let lhs = braiding(b, c)
                    .tensor(&id(a))
                    .compose(&id(b).tensor(&braiding(a, c)))
                    .unwrap()
                    .compose(&braiding(a, b).tensor(&id(c)))
                    .unwrap();
                let rhs = id(c)
                    .tensor(&braiding(a, b))
                    .compose(&braiding(a, c).tensor(&id(b)))
                    .unwrap()
                    .compose(&id(a).tensor(&braiding(b, c)))
                    .unwrap();
                assert_eq!(lhs, rhs, "YBE a={a} b={b} c={c}");
            }
        }
    }
    // zig-zag identities
    for n in 0..=4u64 {
        let v = StrandObject::module(n);
        let idv = MorphismMatrix::identity(ObjectWord::single(v));
        let z1 = idv
            .tensor(&cap(n, Chirality::Right))
            .compose(&cup(n, Chirality::Left).tensor(&idv))
            .unwrap();
        let z2 = cap(n, Chirality::Left)
            .tensor(&idv)
            .compose(&idv.tensor(&cup(n, Chirality::Right)))
            .unwrap();
        assert_eq!(z1, idv, "zigzag n={n}");
        assert_eq!(z2, idv, "twisted zigzag n={n}");
    }
    // braiding naturality
    for (m, n) in [(1u64, 1u64), (1, 2), (2, 3), (3, 3)] {
        let dom = ObjectWord(vec![StrandObject::module(m), StrandObject::module(n)]);
        let cod = ObjectWord(vec![StrandObject::module(n), StrandObject::module(m)]);
        let c = braiding(m, n);
        for gen in [Generator::E, Generator::F, Generator::K] {
            let lhs = c.compose(&tensor_action(gen, &dom)).unwrap();
            let rhs = tensor_action(gen, &cod).compose(&c).unwrap();
            assert_eq!(lhs, rhs, "naturality {gen:?} ({m},{n})");
        }
    }
    // twist-braiding compatibility: c_{N,M} c_{M,N} annihilated by the twist
    // ratios over the fusion range, multiplicities pinned by two traces
    for m in 0..=2u64 {
        for n in 0..=2u64 {
            let double = braiding(n, m).compose(&braiding(m, n)).unwrap();
            let word = double.domain.clone();
            let idw = MorphismMatrix::identity(word);
            let tm = twist_scalar(m);
            let tn = twist_scalar(n);
            let mut ann = idw.clone();
            let mut tr1 = LaurentPoly::zero();
            let mut tr2 = LaurentPoly::zero();
            for lp in (m.abs_diff(n))..=(m + n) {
                // eigenvalue theta_{l'} / (theta_m theta_n)
                let ratio_exp =
                    (2 * lp * lp + 2 * lp) as i64 - (2 * m * m + 2 * m) as i64 - (2 * n * n + 2 * n) as i64;
                let ev = LaurentPoly::monomial(ratio_exp, 1);
                ann = ann
                    .compose(&double.sub(&idw.scale(&ev)).unwrap())
                    .unwrap();
                let mult = LaurentPoly::monomial(0, 2 * lp as i64 + 1);
                tr1 += &(&mult * &ev);
                tr2 += &(&mult * &(&ev * &ev));
            }
            assert!(ann.is_zero(), "annihilator m={m} n={n}");
            assert_eq!(double.trace().unwrap(), tr1, "trace m={m} n={n}");
            let quad = double.compose(&double).unwrap();
            assert_eq!(quad.trace().unwrap(), tr2, "trace^2 m={m} n={n}");
            let _ = (tm, tn);
        }
    }
    pass(1, "sl2 relations, Yang-Baxter, zig-zags, naturality, twist compatibility (exact)");
}

#[test]
fn criterion_02_unknot_normalization() {
    let datum = CartanDatum::sl2();
    for n in 0..=5u64 {
        let d = parse_diagram("cupl\ncapl").unwrap();
        let colors: BTreeMap<usize, u64> = [(0, n)].into();
        let framings: BTreeMap<usize, i64> = [(0, 0)].into();
        let j = match evaluate_j(&d, &colors, &framings, RingMode::Symbolic, &no_coupons()) {
            Ok(JOutput::ClosedSymbolic(p)) => p,
            other => panic!("{other:?}"),
        };
        let qdim = datum.quantum_dimension_poly(&sl2_color_root(n)).unwrap();
        assert_eq!(j, qdim, "J(unknot, {n}) vs quantum dimension");
        // independent oracle: quantum-trace closure of the identity tangle
        let id = MorphismMatrix::identity(ObjectWord::single(StrandObject::module(n)));
        assert_eq!(id.quantum_trace().unwrap(), j, "tr_q closure n={n}");
    }
    pass(2, "J(0-framed unknot, n) = [2n+1] for n <= 5, against the trace-closure oracle");
}

#[test]
fn criterion_03_alcove_counts() {
    let datum = CartanDatum::sl2();
    for r in [3u64, 5, 7, 11, 13] {
        let colors = datum.alcove_colors(r).unwrap();
        assert_eq!(colors.len() as u64, (r - 1) / 2, "count at r={r}");
    }
    assert_eq!(
        datum.alcove_colors(5).unwrap(),
        vec![RootVector(vec![0]), RootVector(vec![1])]
    );
    pass(3, "|C_k cap Y| = (r-1)/2 at r in {3,5,7,11,13}; r=5 gives {0, alpha}");
}

#[test]
fn criterion_04_valuation_exactness() {
    for r in [5u64, 7, 11] {
        let ctx = InvariantContext::new(r).unwrap();
        for (name, f) in [("F+", &ctx.f_plus), ("F-", &ctx.f_minus)] {
            let (v, unit) = f.valuation_at_one_minus_xi();
            assert_eq!(v, Valuation::Finite((r - 3) / 2), "{name} at r={r}");
            // the cofactor must not be divisible further
            let (vu, _) = unit.valuation_at_one_minus_xi();
            assert_eq!(vu, Valuation::Finite(0));
        }
    }
    pass(4, "valuation(F+-) = (r-3)/2 exactly at r in {5,7,11}");
}

#[test]
fn criterion_05_divisibility_at_desk_scale() {
    let omega = {
        let mut p = builtin("unknot").unwrap();
        p.coloring.insert(0, ComponentColor::Color(1));
        p
    };
    for r in [5u64, 7] {
        let ctx = InvariantContext::new(r).unwrap();
        for link_name in ["unknot(1)", "unknot(-1)", "hopf(0,0)", "trefoil_left(-1)"] {
            let l = builtin(link_name).unwrap();
            for with_omega in [false, true] {
                let pres = if with_omega {
                    disjoint_union(&l, &omega)
                } else {
                    l.clone()
                };
                let (cert, _) = divisibility_certificate(&pres, &ctx, &no_coupons()).unwrap();
                assert!(
                    cert.pass,
                    "{link_name} omega={with_omega} r={r}: required {}, actual {}",
                    cert.required, cert.actual
                );
            }
        }
    }
    pass(5, "valuation(F_(L,Omega)) >= m(r-3)/2 for the desk-scale L, Omega at r in {5,7}");
}

#[test]
fn criterion_06_surgery_invariance() {
    for r in [5u64, 7] {
        let ctx = InvariantContext::new(r).unwrap();
        let t_empty = tau(
            &ExtendedManifold::new(builtin("s3_empty").unwrap()),
            &ctx,
            &no_coupons(),
        )
        .unwrap();
        let t_pair = tau(
            &ExtendedManifold::new(builtin("s3_stab_pm").unwrap()),
            &ctx,
            &no_coupons(),
        )
        .unwrap();
        assert_eq!(t_empty.value, t_pair.value, "S^3 presentations at r={r}");
        assert_eq!(t_empty.value, ctx.eta_inverse(), "tau(S^3) = eta^-1 at r={r}");
        for base in ["s1xs2", "poincare", "hopf(1,-1)"] {
            let b = builtin(base).unwrap();
            let t0 = tau(&ExtendedManifold::new(b.clone()), &ctx, &no_coupons()).unwrap();
            for stab in ["unknot(1)", "unknot(-1)"] {
                let stabbed = disjoint_union(&b, &builtin(stab).unwrap());
                let t1 = tau(&ExtendedManifold::new(stabbed), &ctx, &no_coupons()).unwrap();
                assert_eq!(t0.value, t1.value, "{base} + {stab} at r={r}");
            }
        }
        let t_s1s2 = tau(
            &ExtendedManifold::new(builtin("s1xs2").unwrap()),
            &ctx,
            &no_coupons(),
        )
        .unwrap();
        assert_eq!(t_s1s2.value.kappa_exponent(), 0);
        assert!(t_s1s2.value.coefficient().is_one(), "tau(S1xS2) at r={r}");
    }
    pass(6, "tau(S^3) agrees across presentations and stabilizations; tau(S1xS2) = 1 exactly");
}

#[test]
fn criterion_07_almost_integrality() {
    for r in [5u64, 7] {
        let ctx = InvariantContext::new(r).unwrap();
        for name in [
            "unknot(1)", "unknot(-1)", "unknot(2)", "hopf(0,0)", "hopf(1,-1)",
            "trefoil_left(-1)", "trefoil_right(-1)", "poincare", "brieskorn",
            "s1xs2", "s3_empty", "s3_stab_pm",
        ] {
            let m = ExtendedManifold::new(builtin(name).unwrap());
            let report = almost_integrality_check(&m, &ctx, &no_coupons()).unwrap();
            assert!(report.value.coefficient().is_integral(), "{name} r={r}");
            assert!(report.kappa_exp <= 1, "{name} r={r}");
            assert!(report.kappa_power_identity, "(kappa^2)^(2r) = 1 at r={r}");
        }
    }
    pass(7, "eta*tau integral with kappa exponent in {0,1} for all builtins at r in {5,7}; (kappa^2)^(2r) = 1");
}

#[test]
fn criterion_08_periodicity_obstruction() {
    let m = ExtendedManifold::new(builtin("poincare").unwrap());
    let report = periodicity_scan("poincare", &m, &[5, 7, 11, 13], &no_coupons()).unwrap();
    let by_r: BTreeMap<u64, _> = report.entries.iter().map(|e| (e.r, e)).collect();
    assert!(
        !by_r[&5].witnesses.is_empty(),
        "Poincare sphere is 5-periodic: witness required at r=5"
    );
    assert_eq!(by_r[&5].verdict, Verdict::ConsistentWithPeriodicity);
    for r in [7u64, 11, 13] {
        assert!(by_r[&r].witnesses.is_empty(), "witnesses at r={r}");
        assert_eq!(by_r[&r].verdict, Verdict::Obstructed, "r={r}");
    }
    pass(8, "Poincare congruence witness exists at r=5 and is ruled out at r in {7,11,13}");
}

#[test]
fn criterion_09_degree_bounds() {
    for name in ["unknot", "trefoil_left"] {
        let pres = builtin(name).unwrap();
        let report = wrt::analysis::degree_bound_check(&pres, 10, 4).unwrap();
        for o in &report.orders {
            assert!(
                o.pass,
                "{name} order {}: measured {:?} > bound {}",
                o.order, o.measured, o.bound
            );
        }
    }
    pass(9, "h-order <= 4 coefficients of the unknot/trefoil families have color-degree <= 2i+1 (n <= 10)");
}

#[test]
fn criterion_10_weight_system() {
    // chordless diagrams give the identity
    for m in 1..=3usize {
        let comps = (0..m)
            .map(|_| ChordComponent { kind: ComponentKind::Strand(Sign::Plus), points: vec![] })
            .collect();
        let d = ChordDiagram::chordless(comps).unwrap();
        for n in 0..=2u64 {
            let w = weight_sl2(&d, n);
            let dim = (2 * n + 1).pow(m as u32) as usize;
            assert_eq!(w, RatMatrix::identity(dim), "chordless m={m} n={n}");
        }
    }
    // single self-chord on a circle: brute-force matrix oracle
    // sum_i tr(x_i x^i) with explicit classical matrices
    fn brute_force_casimir_trace(n: u64) -> BigRational {
        let d = (2 * n + 1) as usize;
        let mut e = vec![vec![0i64; d]; d];
        let mut f = vec![vec![0i64; d]; d];
        let mut h = vec![vec![0i64; d]; d];
        for j in 0..d {
            if j > 0 {
                e[j - 1][j] = 2 * n as i64 - j as i64 + 1;
            }
            if j + 1 < d {
                f[j + 1][j] = j as i64 + 1;
            }
            h[j][j] = 2 * n as i64 - 2 * j as i64;
        }
        let mul = |a: &Vec<Vec<i64>>, b: &Vec<Vec<i64>>| -> Vec<Vec<i64>> {
            let mut out = vec![vec![0i64; d]; d];
            for i in 0..d {
                for k in 0..d {
                    for j in 0..d {
                        out[i][j] += a[i][k] * b[k][j];
                    }
                }
            }
            out
        };
        let tr = |a: &Vec<Vec<i64>>| -> i64 { (0..d).map(|i| a[i][i]).sum() };
        // E F/4 + F E/4 + H H/8, traced
        let num = 2 * tr(&mul(&e, &f)) + 2 * tr(&mul(&f, &e)) + tr(&mul(&h, &h));
        BigRational::new(BigInt::from(num), BigInt::from(8))
    }
    for n in [1u64, 2] {
        let d = ChordDiagram::new(
            vec![ChordComponent { kind: ComponentKind::Circle, points: vec![0, 1] }],
            vec![(0, 1)],
        )
        .unwrap();
        let w = weight_sl2(&d, n);
        assert_eq!(w.rows, 1);
        let oracle = brute_force_casimir_trace(n);
        assert_eq!(*w.get(0, 0), oracle, "Casimir trace n={n}");
        // and the closed form (2n+1) * n(n+1)/2
        let closed = BigRational::new(
            BigInt::from((2 * n as i64 + 1) * n as i64 * (n as i64 + 1)),
            BigInt::from(2),
        );
        assert_eq!(oracle, closed);
    }
    pass(10, "chordless diagrams act as identity; self-chord trace matches the 3x3/5x5 matrix oracle");
}

#[test]
fn criterion_11_determinism_and_galois() {
    // identical outputs across worker counts
    let ctx = InvariantContext::new(7).unwrap();
    let pres = builtin("trefoil_left(-1)").unwrap();
    let mut results = Vec::new();
    for threads in [1usize, 4] {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build()
            .unwrap();
        let f = pool.install(|| f_value(&pres, &ctx, &no_coupons()).unwrap());
        results.push(f);
    }
    assert_eq!(results[0], results[1], "F across worker counts");
    // Galois equivariance at r=5 under xi -> xi^2
    let r = 5;
    let a = 2;
    let ctx1 = InvariantContext::new(r).unwrap();
    let ctx2 = InvariantContext::with_embedding(r, a).unwrap();
    for name in ["unknot(1)", "hopf(0,0)", "poincare", "brieskorn"] {
        let p = builtin(name).unwrap();
        let f1 = f_value(&p, &ctx1, &no_coupons()).unwrap();
        let f2 = f_value(&p, &ctx2, &no_coupons()).unwrap();
        assert_eq!(f1.galois(a), f2, "{name}");
    }
    let m = ExtendedManifold::new(builtin("poincare").unwrap());
    let v1 = projective_invariant(&m, &ctx1, &no_coupons()).unwrap();
    let v2 = projective_invariant(&m, &ctx2, &no_coupons()).unwrap();
    assert_eq!(
        v1.coefficient().as_integer().unwrap().galois(a),
        v2.coefficient().as_integer().unwrap().clone()
    );
    pass(11, "outputs independent of worker count; xi -> xi^2 Galois-transforms all outputs (r=5)");
}
