//! Acceptance run: one PASS/FAIL line per criterion, non-zero exit on any
//! failure. Every comparison is exact.

use std::process::{Command, ExitCode};
use std::sync::Arc;
use std::time::Instant;

use grassmann_dirac::clifford::build_gamma_rep;
use grassmann_dirac::flat_dirac::symbol_cross_check;
use grassmann_dirac::graded_algebra::{
    grading_closure_violations, heisenberg_gram, levi_bracket, standard_x_basis, GradeIndex,
};
use grassmann_dirac::matrix::{ComplexMatrix, RationalMatrix};
use grassmann_dirac::report::{flat_dirac_triple, render_report, run_suite, Format, NRange, RunConfig, Suite};
use grassmann_dirac::sampling::sample_rng;
use grassmann_dirac::scalar::{gauss, rat};
use grassmann_dirac::spin_groups::{
    block_projection, gamma_c_act, hc_forward, hc_inverse, hsharp_forward, hsharp_inverse, iota_embed, rho_n, rho_n_c,
    so2_spin_equal, so2_spinc_equal, varsigma_n, Phase, SpinCElement, SpinElement, StabilizerClass,
};
use grassmann_dirac::stiefel_contact::{
    center_rotate, contact_alpha, levi_form_h, levi_form_matrix, quotient_q, reeb_field, tangent_and_kernel_dims,
    Frame2, StiefelTangent,
};
use grassmann_dirac::symbol_complex::{
    degenerate_family, dimension_pairings, ellipticity_scan, symbol_index, Covector, Mode, SymbolTriple,
};
use num_traits::{One, Zero};
use rand::Rng;

type Outcome = Result<(), String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Outcome {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn err(e: impl std::fmt::Display) -> String {
    e.to_string()
}

fn ellipticity() -> Outcome {
    for n in 3..=6 {
        let scan = ellipticity_scan(n, 1000, 42, Mode::Exact).map_err(err)?;
        ensure(scan.passed(), || {
            format!(
                "n={n}: {} complex, {} exactness, {} float failures",
                scan.complex_failures.len(),
                scan.exactness_failures.len(),
                scan.mode_disagreements.len()
            )
        })?;
        ensure(scan.tested >= 1000 + degenerate_family(n, 42).len(), || format!("n={n}: too few covectors"))?;
    }
    Ok(())
}

fn complex_property() -> Outcome {
    for n in 3..=6 {
        let rep = build_gamma_rep(n).map_err(err)?;
        let mut inputs: Vec<Covector> = (0..1000).map(|i| Covector::random(&mut sample_rng(9, i), n)).collect();
        inputs.extend(degenerate_family(n, 9));
        inputs.push(Covector::zero(n));
        for x in &inputs {
            let t = SymbolTriple::new(&rep, x).map_err(err)?;
            ensure(t.is_complex(), || format!("n={n}, X={x}"))?;
        }
    }
    Ok(())
}

fn index_zero() -> Outcome {
    for n in 3..=12 {
        ensure(symbol_index(n) == 0, || format!("index({n}) = {}", symbol_index(n)))?;
        ensure(dimension_pairings(n) == (true, true), || format!("pairings fail at n={n}"))?;
    }
    Ok(())
}

fn contact_grading() -> Outcome {
    for n in 3..=8 {
        let leaks = grading_closure_violations(n);
        ensure(leaks.is_empty(), || format!("n={n}: {leaks:?}"))?;
        let basis = standard_x_basis(n);
        let y = levi_bracket(&basis[0], &basis[n]).map_err(err)?;
        ensure(!y.is_zero() && y.is_skew(), || format!("n={n}: bracket does not span g_-2"))?;
        let det = heisenberg_gram(n, &basis).map_err(err)?.determinant();
        ensure(!det.is_zero(), || format!("n={n}: degenerate Heisenberg form"))?;
        ensure(GradeIndex::ALL.len() * GradeIndex::ALL.len() == 25, || "grade pairs".into())?;
    }
    Ok(())
}

fn covering_identities() -> Outcome {
    for n in 2..=6 {
        let rep = Arc::new(build_gamma_rep(n).map_err(err)?);
        let minus = SpinElement::minus_one(&rep);
        let minus_id = ComplexMatrix::scalar_identity(rep.spinor_dim(), gauss(-1, 0));
        ensure(minus.spinor_mat() == &minus_id, || format!("n={n}: -1 does not act as -Id"))?;
        for k in 0..100 {
            let mut rng = sample_rng(5, k);
            let a = SpinElement::random(&rep, &mut rng);
            let b = SpinElement::random(&rep, &mut rng);
            let tag = || format!("n={n}, sample {k}");
            ensure(rho_n(&a.mul(&b)).map_err(err)? == rho_n(&a).map_err(err)?.compose(&rho_n(&b).map_err(err)?), tag)?;
            ensure(rho_n(&a.neg()).map_err(err)? == rho_n(&a).map_err(err)?, tag)?;

            let x = SpinCElement::random(&rep, &mut rng);
            let y = SpinCElement::random(&rep, &mut rng);
            let f = x.flip();
            ensure(rho_n_c(&f).map_err(err)? == rho_n_c(&x).map_err(err)?, tag)?;
            ensure(varsigma_n(&f) == varsigma_n(&x), tag)?;
            ensure(varsigma_n(&x.mul(&y)) == varsigma_n(&x).mul(&varsigma_n(&y)), tag)?;
            let psi: Vec<_> = (0..rep.spinor_dim()).map(|_| gauss(rng.gen_range(-3..=3), rng.gen_range(-3..=3))).collect();
            ensure(gamma_c_act(&f, &psi).map_err(err)? == gamma_c_act(&x, &psi).map_err(err)?, tag)?;

            if n <= 5 {
                let big = Arc::new(build_gamma_rep(n + 2).map_err(err)?);
                let got = rho_n(&iota_embed(&x, &big).map_err(err)?).map_err(err)?;
                let (r2, rn) = block_projection(&x).map_err(err)?;
                let mut diag = RationalMatrix::zeros(n + 2, n + 2);
                diag.set_block(0, 0, r2.matrix());
                diag.set_block(2, 2, rn.matrix());
                ensure(got.matrix() == &diag, || format!("n={n}, sample {k}: not block diagonal"))?;
            }
        }
    }
    let rep2 = Arc::new(build_gamma_rep(2).map_err(err)?);
    for k in 0..20 {
        let p = Phase::random(&mut sample_rng(6, k));
        let rot = rho_n(&SpinElement::from_plane_phase(&rep2, &p)).map_err(err)?;
        ensure(rot.matrix() == &p.square().rotation_matrix(), || format!("double angle fails at {p}"))?;
    }
    Ok(())
}

fn stabilizer_isomorphisms() -> Outcome {
    for n in 2..=5 {
        let rep = Arc::new(build_gamma_rep(n).map_err(err)?);
        for k in 0..50 {
            let mut rng = sample_rng(8, k);
            let tag = || format!("n={n}, class {k}");
            let hsharp = |rng: &mut rand_chacha::ChaCha8Rng| {
                let s = Phase::random(rng);
                let t = if k % 2 == 0 { s.clone() } else { s.neg() };
                StabilizerClass::new(t, s, SpinElement::random(&rep, rng))
            };
            let (x, y) = (hsharp(&mut rng), hsharp(&mut rng));
            let (fx, fy) = (hsharp_forward(&x).map_err(err)?, hsharp_forward(&y).map_err(err)?);
            let fxy = hsharp_forward(&x.mul(&y)).map_err(err)?;
            ensure(so2_spin_equal(&fxy, &(fx.0.mul(&fy.0), fx.1.mul(&fy.1))), tag)?;
            ensure(hsharp_inverse(&fx.0, &fx.1).map_err(err)?.same_class(&x), tag)?;
            let u = Phase::random_with_root(&mut rng);
            let a = SpinElement::random(&rep, &mut rng);
            let back = hsharp_forward(&hsharp_inverse(&u, &a).map_err(err)?).map_err(err)?;
            ensure(so2_spin_equal(&back, &(u, a)), tag)?;

            let hc = |rng: &mut rand_chacha::ChaCha8Rng| StabilizerClass::new(Phase::random(rng), Phase::random(rng), SpinElement::random(&rep, rng));
            let (x, y) = (hc(&mut rng), hc(&mut rng));
            let (fx, fy) = (hc_forward(&x), hc_forward(&y));
            ensure(so2_spinc_equal(&hc_forward(&x.mul(&y)), &(fx.0.mul(&fy.0), fx.1.mul(&fy.1))), tag)?;
            ensure(hc_inverse(&fx.0, &fx.1).map_err(err)?.same_class(&x), tag)?;
            let u = Phase::random_with_root(&mut rng);
            let z = SpinCElement::random(&rep, &mut rng);
            ensure(so2_spinc_equal(&hc_forward(&hc_inverse(&u, &z).map_err(err)?), &(u, z)), tag)?;
        }
    }
    Ok(())
}

fn contact_geometry() -> Outcome {
    let mut global_sign: Option<bool> = None;
    for k in 0..100u64 {
        let n = 3 + (k % 4) as usize;
        let m = n + 2;
        let mut rng = sample_rng(11, k);
        let f = Frame2::random(&mut rng, m);
        let tag = || format!("frame {k} (n={n})");
        ensure(tangent_and_kernel_dims(&f) == (2 * m - 3, 2 * n), tag)?;
        let u = f.complement_basis();
        // ker α is exactly the horizontal space: dimensions agree and the
        // horizontal basis lies in it
        for ua in &u {
            let z = vec![rat(0); m];
            for (w1, w2) in [(ua.clone(), z.clone()), (z, ua.clone())] {
                let t = StiefelTangent::new(f.clone(), w1, w2).map_err(err)?;
                ensure(contact_alpha(&t).is_zero() && t.is_horizontal(), tag)?;
            }
        }
        ensure(contact_alpha(&reeb_field(&f)).is_one(), tag)?;
        for _ in 0..3 {
            let g = center_rotate(&f, &Phase::random(&mut rng)).map_err(err)?;
            ensure(quotient_q(&g) == quotient_q(&f), tag)?;
        }
        ensure(!levi_form_matrix(&f).determinant().is_zero(), tag)?;
        let coords = |rng: &mut rand_chacha::ChaCha8Rng| {
            RationalMatrix::from_fn(n, 2, |_, _| rat(rng.gen_range(-4..=4)))
        };
        let (x1, x2) = (coords(&mut rng), coords(&mut rng));
        let t1 = StiefelTangent::from_coordinates(&f, &u, &x1).map_err(err)?;
        let t2 = StiefelTangent::from_coordinates(&f, &u, &x2).map_err(err)?;
        let lf = levi_form_h(&t1, &t2).map_err(err)?;
        let lb = levi_bracket(&x1, &x2).map_err(err)?[(0, 1)].clone();
        if lb.is_zero() {
            ensure(lf.is_zero(), tag)?;
            continue;
        }
        let positive = lf == lb;
        ensure(positive || lf == -lb.clone(), || format!("{}: {lf} vs {lb}", tag()))?;
        match global_sign {
            None => global_sign = Some(positive),
            Some(s) => ensure(s == positive, || format!("{}: sign flipped", tag()))?,
        }
    }
    Ok(())
}

fn flat_operator() -> Outcome {
    for k in 0..200u64 {
        let n = 3 + (k % 3) as usize;
        let rep = build_gamma_rep(n).map_err(err)?;
        let (xi, deg, psi) = flat_dirac_triple(&mut sample_rng(13, k), n, rep.spinor_dim());
        ensure(symbol_cross_check(&rep, &xi, deg, &psi).map_err(err)?, || format!("xi={xi}, k={deg}"))?;
    }
    Ok(())
}

fn determinism_and_exit_codes() -> Outcome {
    let cfg = RunConfig { n: NRange::single(3), samples: 100, seed: 7, mode: Mode::Exact };
    let strip = |s: String| -> String {
        s.lines().filter(|l| !l.contains("\"elapsed_ms\"")).collect::<Vec<_>>().join("\n")
    };
    let a = run_suite(Suite::All, &cfg).map_err(err)?;
    let b = run_suite(Suite::All, &cfg).map_err(err)?;
    ensure(a.overall_pass, || "run failed".into())?;
    let ja = strip(render_report(&a, Format::Json, false).map_err(err)?);
    let jb = strip(render_report(&b, Format::Json, false).map_err(err)?);
    ensure(ja == jb, || "library JSON differs between runs".into())?;

    let bin = env!("CARGO_BIN_EXE_gdirac");
    let run = |args: &[&str]| Command::new(bin).args(args).output().map_err(err);
    let args = ["verify", "all", "--n", "3", "--samples", "100", "--seed", "7", "--mode", "exact", "--format", "json"];
    let (o1, o2) = (run(&args)?, run(&args)?);
    ensure(o1.status.code() == Some(0), || format!("exit {:?}", o1.status.code()))?;
    let s1 = strip(String::from_utf8_lossy(&o1.stdout).into_owned());
    let s2 = strip(String::from_utf8_lossy(&o2.stdout).into_owned());
    ensure(s1 == s2 && s1 == ja, || "CLI JSON not byte-identical modulo elapsed_ms".into())?;

    for bad in [&["verify", "nonsense"][..], &["verify", "symbols", "--n", "2"], &["verify", "spin", "--n", "5..3"], &["verify", "spin", "--mode", "fast"], &["dims", "--format", "xml"]] {
        let o = run(bad)?;
        ensure(o.status.code() == Some(2), || format!("{bad:?} exited {:?}", o.status.code()))?;
    }
    let o = run(&["index", "--n", "3..8", "--format", "json"])?;
    ensure(o.status.code() == Some(0), || "index exit".into())?;
    Ok(())
}

fn main() -> ExitCode {
    let criteria: [Criterion; 9] = [
        ("1 ellipticity (n=3..6, 1000 samples + degenerate, exact)", ellipticity),
        ("2 complex property (incl. zero and degenerate)", complex_property),
        ("3 index zero and dimension pairings (n=3..12)", index_zero),
        ("4 contact grading (n=3..8)", contact_grading),
        ("5 covering identities (100 samples, 20 circle points)", covering_identities),
        ("6 stabilizer isomorphisms (50 classes)", stabilizer_isomorphisms),
        ("7 contact geometry (100 frames)", contact_geometry),
        ("8 flat operator vs symbol (200 triples)", flat_operator),
        ("9 determinism and exit codes", determinism_and_exit_codes),
    ];
    let mut all = true;
    for (name, f) in criteria {
        let start = Instant::now();
        let res = f();
        let ms = start.elapsed().as_millis();
        match res {
            Ok(()) => println!("PASS  criterion {name}  [{ms} ms]"),
            Err(e) => {
                all = false;
                println!("FAIL  criterion {name}  [{ms} ms]: {e}");
            }
        }
    }
    if all {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
