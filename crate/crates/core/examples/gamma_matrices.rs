// Gamma matrices of `Cl(n)` and Clifford multiplication on spinors.
//
// Run with `cargo run --example gamma_matrices`.

use std::error::Error;

use grassmann_dirac::clifford::{build_gamma_rep, clifford_act, clifford_mat, SIGN};
use grassmann_dirac::matrix::ComplexMatrix;
use grassmann_dirac::scalar::{fmt_gauss, gauss, rat};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    for n in 2..=7 {
        let rep = build_gamma_rep(n)?;
        let s = rep.spinor_dim();
        let sign_id = ComplexMatrix::scalar_identity(s, gauss(2 * SIGN, 0));
        let ok = (0..n).all(|a| {
            (0..n).all(|b| {
                let ac = rep.gamma(a).anticommutator(rep.gamma(b));
                if a == b { ac == sign_id } else { ac.is_zero() }
            })
        });
        println!("n={n}: spinor dim {s}, Clifford relations hold: {ok}");
    }

    let rep = build_gamma_rep(3)?;
    let v = vec![rat(1), rat(2), rat(-2)];
    let m = clifford_mat(&rep, &v)?;
    // v.v = SIGN |v|² Id
    assert_eq!(&m * &m, ComplexMatrix::scalar_identity(2, gauss(SIGN * 9, 0)));
    let psi = vec![gauss(1, 0), gauss(0, 1)];
    let out = clifford_act(&rep, &v, &psi)?;
    let shown: Vec<String> = out.iter().map(fmt_gauss).collect();
    println!("(1,2,-2).(1, i) = ({})", shown.join(", "));
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
