use std::sync::Arc;

use grassmann_dirac::clifford::{build_gamma_rep, clifford_mat, SIGN};
use grassmann_dirac::flat_dirac::{apply_flat_2dirac, PolySpinorField};
use grassmann_dirac::graded_algebra::{bracket, levi_bracket, Blocks, GradedElement};
use grassmann_dirac::matrix::{ComplexMatrix, RationalMatrix};
use grassmann_dirac::rank::{exact_rank, float_rank};
use grassmann_dirac::report::{render_report, run_suite, Format, NRange, RunConfig, RunManifest, Suite};
use grassmann_dirac::sampling::sample_rng;
use grassmann_dirac::scalar::{gauss, rat, rational_to_f64, real, GaussianRational, Rational};
use grassmann_dirac::spin_groups::{rho_n, rho_n_c, spinc_equal, SpinCElement, SpinElement};
use grassmann_dirac::stiefel_contact::{levi_form_h, Frame2, StiefelTangent};
use grassmann_dirac::symbol_complex::{sigma1, sigma2, sigma3, Covector, Mode, SymbolTriple};
use proptest::prelude::*;

fn rats(v: &[i64]) -> Vec<Rational> {
    v.iter().map(|&x| rat(x)).collect()
}

fn int_matrix(rows: usize, cols: usize, e: &[i64]) -> RationalMatrix {
    RationalMatrix::from_fn(rows, cols, |i, j| rat(e[i * cols + j]))
}

fn graded(n: usize, e: &[i64]) -> GradedElement {
    let mut it = e.iter().copied();
    let mut take = |r: usize, c: usize| {
        let v: Vec<i64> = (0..r * c).map(|_| it.next().unwrap()).collect();
        int_matrix(r, c, &v)
    };
    let skew = |m: RationalMatrix| &m - &m.transpose();
    let a = take(2, 2);
    let b = skew(take(n, n));
    let x = take(n, 2);
    let y = skew(take(2, 2));
    let z = take(n, 2);
    let w = skew(take(2, 2));
    GradedElement::new(n, Blocks { a, b, x, y, z, w }).unwrap()
}

fn graded_entries(n: usize) -> impl Strategy<Value = Vec<i64>> {
    proptest::collection::vec(-3i64..=3, 4 + n * n + 2 * n + 4 + 2 * n + 4)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn clifford_square_is_sign_norm(v in proptest::collection::vec(-5i64..=5, 5)) {
        let rep = build_gamma_rep(5).unwrap();
        let m = clifford_mat(&rep, &rats(&v)).unwrap();
        let n2: i64 = v.iter().map(|x| x * x).sum();
        prop_assert_eq!(&m * &m, ComplexMatrix::scalar_identity(rep.spinor_dim(), gauss(SIGN * n2, 0)));
    }

    #[test]
    fn clifford_mat_is_linear(a in proptest::collection::vec(-5i64..=5, 4), b in proptest::collection::vec(-5i64..=5, 4), c in -4i64..=4) {
        let rep = build_gamma_rep(4).unwrap();
        let combo: Vec<i64> = a.iter().zip(&b).map(|(x, y)| c * x + y).collect();
        let lhs = clifford_mat(&rep, &rats(&combo)).unwrap();
        let rhs = &clifford_mat(&rep, &rats(&a)).unwrap().scale(&gauss(c, 0)) + &clifford_mat(&rep, &rats(&b)).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn rho_is_a_homomorphism(seed in any::<u64>(), n in 2usize..=5) {
        let rep = Arc::new(build_gamma_rep(n).unwrap());
        let mut rng = sample_rng(seed, 0);
        let a = SpinElement::random(&rep, &mut rng);
        let b = SpinElement::random(&rep, &mut rng);
        prop_assert_eq!(rho_n(&a.mul(&b)).unwrap(), rho_n(&a).unwrap().compose(&rho_n(&b).unwrap()));
        prop_assert_eq!(rho_n(&a.inverse()).unwrap(), rho_n(&a).unwrap().inverse());
        prop_assert!(rho_n(&a.neg()).unwrap() == rho_n(&a).unwrap());
    }

    #[test]
    fn spinc_class_relation(seed in any::<u64>()) {
        let rep = Arc::new(build_gamma_rep(3).unwrap());
        let mut rng = sample_rng(seed, 1);
        let x = SpinCElement::random(&rep, &mut rng);
        let y = SpinCElement::random(&rep, &mut rng);
        prop_assert!(spinc_equal(&x.flip().mul(&y), &x.mul(&y.flip())));
        prop_assert_eq!(rho_n_c(&x.flip()).unwrap(), rho_n_c(&x).unwrap());
    }

    #[test]
    fn bracket_is_antisymmetric_and_jacobi(e in graded_entries(3), f in graded_entries(3), g in graded_entries(3)) {
        let (e, f, g) = (graded(3, &e), graded(3, &f), graded(3, &g));
        prop_assert_eq!(bracket(&e, &f).unwrap(), bracket(&f, &e).unwrap().scale(&rat(-1)));
        let j = bracket(&e, &bracket(&f, &g).unwrap()).unwrap()
            .add(&bracket(&f, &bracket(&g, &e).unwrap()).unwrap())
            .add(&bracket(&g, &bracket(&e, &f).unwrap()).unwrap());
        prop_assert!(j.is_zero());
    }

    #[test]
    fn levi_bracket_is_skew_bilinear(a in proptest::collection::vec(-4i64..=4, 8), b in proptest::collection::vec(-4i64..=4, 8)) {
        let (x1, x2) = (int_matrix(4, 2, &a), int_matrix(4, 2, &b));
        let y = levi_bracket(&x1, &x2).unwrap();
        prop_assert!(y.is_skew());
        prop_assert_eq!(levi_bracket(&x2, &x1).unwrap(), -y);
        prop_assert!(levi_bracket(&x1, &x1).unwrap().is_zero());
    }

    #[test]
    fn symbols_form_a_complex(x1 in proptest::collection::vec(-9i64..=9, 4), x2 in proptest::collection::vec(-9i64..=9, 4)) {
        let rep = build_gamma_rep(4).unwrap();
        let x = Covector::new(rats(&x1), rats(&x2)).unwrap();
        let t = SymbolTriple::new(&rep, &x).unwrap();
        prop_assert!(t.is_complex());
        if !x.is_zero() {
            prop_assert_eq!(t.ranks(Mode::Exact), [4, 4, 4]);
        }
    }

    #[test]
    fn symbols_are_homogeneous(x1 in proptest::collection::vec(-9i64..=9, 3), x2 in proptest::collection::vec(-9i64..=9, 3), t in -5i64..=5) {
        let rep = build_gamma_rep(3).unwrap();
        let x = Covector::new(rats(&x1), rats(&x2)).unwrap();
        let tx = x.scale(&rat(t));
        let tz = gauss(t, 0);
        prop_assert_eq!(sigma1(&rep, &tx).unwrap(), sigma1(&rep, &x).unwrap().scale(&tz));
        prop_assert_eq!(sigma2(&rep, &tx).unwrap(), sigma2(&rep, &x).unwrap().scale(&gauss(t * t, 0)));
        prop_assert_eq!(sigma3(&rep, &tx).unwrap(), sigma3(&rep, &x).unwrap().scale(&tz));
    }

    #[test]
    fn exact_and_float_ranks_agree(e in proptest::collection::vec((-3i64..=3, -3i64..=3), 30), kill in 0usize..5) {
        // 5 x 6 with some rows forced dependent
        let mut rows: Vec<Vec<GaussianRational>> = e.chunks(6).map(|r| r.iter().map(|&(a, b)| gauss(a, b)).collect()).collect();
        for k in 0..kill.min(4) {
            rows[k + 1] = rows[0].iter().zip(&rows[k]).map(|(a, b)| a.clone() + b.clone()).collect();
        }
        let m = ComplexMatrix::from_rows(rows);
        prop_assert_eq!(exact_rank(&m), float_rank(&m));
    }

    #[test]
    fn flat_operator_is_linear(
        e1 in proptest::collection::vec(0u32..=2, 6),
        e2 in proptest::collection::vec(0u32..=2, 6),
        c in (-3i64..=3, -3i64..=3),
    ) {
        let rep = build_gamma_rep(3).unwrap();
        let f = PolySpinorField::monomial(3, e1, vec![gauss(1, 0), gauss(2, -1)]).unwrap();
        let g = PolySpinorField::monomial(3, e2, vec![gauss(0, 1), gauss(-1, 0)]).unwrap();
        let a = gauss(c.0, c.1);
        let lhs = apply_flat_2dirac(&rep, &f.scale(&a).add(&g).unwrap()).unwrap();
        let rhs = apply_flat_2dirac(&rep, &f).unwrap().scale(&a).add(&apply_flat_2dirac(&rep, &g).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn degree_one_scalar_fields_are_not_annihilated(c in proptest::collection::vec(-3i64..=3, 6)) {
        // ℓ(x)ψ with ψ ≠ 0 lies in the kernel only for ℓ = 0
        let rep = build_gamma_rep(3).unwrap();
        let psi = vec![gauss(1, 1), gauss(0, 2)];
        let mut f = PolySpinorField::zero(3, 2);
        for (k, &ck) in c.iter().enumerate() {
            let mut e = vec![0; 6];
            e[k] = 1;
            let term = PolySpinorField::monomial(3, e, psi.clone()).unwrap().scale(&real(rat(ck)));
            f = f.add(&term).unwrap();
        }
        let zero = c.iter().all(|&x| x == 0);
        prop_assert_eq!(apply_flat_2dirac(&rep, &f).unwrap().is_zero(), zero);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    /// `levi_form_h = -dα`, with `dα` from central differences of the
    /// ambient one-form `A_p(u) = -⟨u_1, p_2⟩` along constant fields.
    #[test]
    fn levi_form_matches_finite_difference_of_alpha(seed in any::<u64>(), a in proptest::collection::vec(-3i64..=3, 6), b in proptest::collection::vec(-3i64..=3, 6)) {
        let n = 3;
        let m = n + 2;
        let f = Frame2::random(&mut sample_rng(seed, 0), m);
        let u = f.complement_basis();
        let t1 = StiefelTangent::from_coordinates(&f, &u, &int_matrix(n, 2, &a)).unwrap();
        let t2 = StiefelTangent::from_coordinates(&f, &u, &int_matrix(n, 2, &b)).unwrap();

        let fl = |v: &[Rational]| v.iter().map(rational_to_f64).collect::<Vec<f64>>();
        let p: Vec<f64> = [fl(f.v1()), fl(f.v2())].concat();
        let x: Vec<f64> = [fl(t1.w1()), fl(t1.w2())].concat();
        let y: Vec<f64> = [fl(t2.w1()), fl(t2.w2())].concat();
        let form = |p: &[f64], u: &[f64]| -> f64 { -(0..m).map(|k| u[k] * p[m + k]).sum::<f64>() };
        let h = 1e-5;
        let shifted = |p: &[f64], d: &[f64], s: f64| p.iter().zip(d).map(|(a, b)| a + s * b).collect::<Vec<f64>>();
        let dir = |d: &[f64], u: &[f64]| (form(&shifted(&p, d, h), u) - form(&shifted(&p, d, -h), u)) / (2.0 * h);
        let d_alpha = dir(&x, &y) - dir(&y, &x);

        let exact = rational_to_f64(&levi_form_h(&t1, &t2).unwrap());
        prop_assert!((exact + d_alpha).abs() < 1e-6 * (1.0 + exact.abs()), "{} vs {}", exact, d_alpha);
    }

    #[test]
    fn manifests_are_deterministic_and_round_trip(seed in 0u64..1000) {
        let cfg = RunConfig { n: NRange::single(3), samples: 3, seed, mode: Mode::Exact };
        let a = run_suite(Suite::Contact, &cfg).unwrap();
        let b = run_suite(Suite::Contact, &cfg).unwrap();
        prop_assert_eq!(a.without_timings(), b.without_timings());
        let json = render_report(&a, Format::Json, false).unwrap();
        let back: RunManifest = serde_json::from_str(&json).unwrap();
        prop_assert_eq!(back, a);
    }
}
