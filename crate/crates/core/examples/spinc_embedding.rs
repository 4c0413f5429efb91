// `Spin^c(n)`, its embedding into `Spin(n+2)`, and the two descriptions
// of the stabilizer subgroups.
//
// Run with `cargo run --example spinc_embedding`.

use std::error::Error;
use std::sync::Arc;

use grassmann_dirac::clifford::build_gamma_rep;
use grassmann_dirac::matrix::RationalMatrix;
use grassmann_dirac::sampling::sample_rng;
use grassmann_dirac::spin_groups::{
    block_projection, hc_forward, hc_inverse, iota_embed, rho_n, spinc_equal, varsigma_n, Phase, SpinCElement,
    SpinElement, StabilizerClass,
};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let n = 3;
    let rep = Arc::new(build_gamma_rep(n)?);
    let big = Arc::new(build_gamma_rep(n + 2)?);
    let mut rng = sample_rng(5, 0);

    let x = SpinCElement::random(&rep, &mut rng);
    println!("x and its flip (-p, -a) are the same class: {}", spinc_equal(&x, &x.flip()));
    println!("varsigma(x) = {}", varsigma_n(&x));

    let ix = iota_embed(&x, &big)?;
    let (r2, rn) = block_projection(&x)?;
    let mut diag = RationalMatrix::zeros(n + 2, n + 2);
    diag.set_block(0, 0, r2.matrix());
    diag.set_block(2, 2, rn.matrix());
    println!("rho_(n+2)(iota x) is block diagonal: {}", rho_n(&ix)?.matrix() == &diag);
    println!("iota(flip x) = iota(x): {}", iota_embed(&x.flip(), &big)? == ix);

    let class = StabilizerClass::new(Phase::random(&mut rng), Phase::random(&mut rng), SpinElement::random(&rep, &mut rng));
    let (u, y) = hc_forward(&class);
    println!("H^c -> SO(2) x Spin^c(n): u = {u}, phase part {}", y.phase);
    println!("inverse recovers the class: {}", hc_inverse(&u, &y)?.same_class(&class));
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
