// Contact structure on the Stiefel variety of orthonormal 2-frames.
//
// Run with `cargo run --example stiefel_contact`.

use std::error::Error;

use grassmann_dirac::graded_algebra::levi_bracket;
use grassmann_dirac::matrix::RationalMatrix;
use grassmann_dirac::sampling::sample_rng;
use grassmann_dirac::scalar::rat;
use grassmann_dirac::spin_groups::Phase;
use grassmann_dirac::stiefel_contact::{
    center_rotate, contact_alpha, frame_to_isotropic, h_form, levi_form_h, levi_form_matrix, quotient_q, reeb_field,
    tangent_and_kernel_dims, Frame2, StiefelTangent,
};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let n = 3;
    let mut rng = sample_rng(1, 0);
    let f = Frame2::random(&mut rng, n + 2);
    println!("frame v1 = {:?}", f.v1().iter().map(|x| x.to_string()).collect::<Vec<_>>());

    let (b1, b2) = frame_to_isotropic(&f);
    println!("isotropic lift: h(b1,b1) = {}, h(b1,b2) = {}", h_form(&b1, &b1), h_form(&b1, &b2));
    println!("(dim T, dim ker alpha) = {:?}", tangent_and_kernel_dims(&f));
    println!("alpha(reeb) = {}", contact_alpha(&reeb_field(&f)));

    let g = center_rotate(&f, &Phase::random(&mut rng))?;
    println!("center orbit stays in one fiber of q: {}", quotient_q(&g) == quotient_q(&f));
    println!("Levi form determinant: {}", levi_form_matrix(&f).determinant());

    let u = f.complement_basis();
    let x1 = RationalMatrix::from_rows(vec![vec![rat(1), rat(0)], vec![rat(2), rat(-1)], vec![rat(0), rat(3)]]);
    let x2 = RationalMatrix::from_rows(vec![vec![rat(0), rat(1)], vec![rat(1), rat(1)], vec![rat(-2), rat(0)]]);
    let t1 = StiefelTangent::from_coordinates(&f, &u, &x1)?;
    let t2 = StiefelTangent::from_coordinates(&f, &u, &x2)?;
    println!("levi_form_h = {}, Heisenberg bracket = {}", levi_form_h(&t1, &t2)?, levi_bracket(&x1, &x2)?[(0, 1)]);
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
