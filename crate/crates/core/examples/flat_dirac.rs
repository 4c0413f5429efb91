// The flat 2-Dirac operator on polynomial spinor fields and its principal
// symbol.
//
// Run with `cargo run --example flat_dirac`.

use std::error::Error;

use grassmann_dirac::clifford::build_gamma_rep;
use grassmann_dirac::flat_dirac::{apply_flat_2dirac, symbol_cross_check, Polynomial, PolySpinorField};
use grassmann_dirac::scalar::gauss;
use grassmann_dirac::symbol_complex::int_covector;

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let rep = build_gamma_rep(3)?;
    let psi = vec![gauss(1, 0), gauss(0, -1)];

    // f = x_{11} x_{22}² ψ
    let f = PolySpinorField::monomial(3, vec![1, 0, 0, 0, 2, 0], psi.clone())?;
    let d = apply_flat_2dirac(&rep, &f)?;
    println!("D(x11 x22^2 psi): {} + {} terms", d.p1.terms().count(), d.p2.terms().count());

    let xi = int_covector(&[2, -1, 0], &[0, 1, 3])?;
    let g = PolySpinorField::from_polynomial(3, &Polynomial::linear_form(&xi).pow(3), &psi)?;
    println!("<x,xi>^3 psi has degrees {:?}", g.degree_range());
    println!("D g has degrees {:?}", apply_flat_2dirac(&rep, &g)?.p1.degree_range());
    for k in 1..=5 {
        println!("k={k}: D(<x,xi>^k psi) = k <x,xi>^(k-1) sigma1(xi) psi: {}", symbol_cross_check(&rep, &xi, k, &psi)?);
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
