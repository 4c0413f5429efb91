// The double cover `Spin(n) → SO(n)` on exact rational words.
//
// Run with `cargo run --example spin_cover`.

use std::error::Error;
use std::sync::Arc;

use grassmann_dirac::clifford::build_gamma_rep;
use grassmann_dirac::sampling::sample_rng;
use grassmann_dirac::scalar::ratio;
use grassmann_dirac::spin_groups::{rho_n, Phase, SpinElement};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let rep = Arc::new(build_gamma_rep(4)?);
    let mut rng = sample_rng(0, 0);
    let a = SpinElement::random(&rep, &mut rng);
    let b = SpinElement::random(&rep, &mut rng);

    let rab = rho_n(&a.mul(&b))?;
    println!("rho(ab) = rho(a) rho(b): {}", rab == rho_n(&a)?.compose(&rho_n(&b)?));
    println!("rho(-a) = rho(a):        {}", rho_n(&a.neg())? == rho_n(&a)?);
    println!("-1 is central, rho(-1) = Id: {}", rho_n(&SpinElement::minus_one(&rep))?.is_identity());
    println!("rho(a) =\n{:?}", rho_n(&a)?.matrix());

    // e^{it} ∈ Spin(2) rotates the plane by 2t
    let rep2 = Arc::new(build_gamma_rep(2)?);
    let p = Phase::new(ratio(3, 5), ratio(4, 5))?;
    let rot = rho_n(&SpinElement::from_plane_phase(&rep2, &p))?;
    println!("rho_2({p}) = rotation by {}: {}", p.square(), rot.matrix() == &p.square().rotation_matrix());
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
