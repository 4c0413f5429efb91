// The contact grading `g_-2 ⊕ g_-1 ⊕ g_0 ⊕ g_1 ⊕ g_2` of `so(2, n+2)`.
//
// Run with `cargo run --example contact_grading`.

use std::error::Error;

use grassmann_dirac::graded_algebra::{
    assemble, bracket, grade_basis, grading_closure_violations, heisenberg_gram, levi_bracket, standard_x_basis,
    GradeIndex,
};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    for n in 3..=6 {
        let leaks = grading_closure_violations(n);
        let dims: Vec<usize> = GradeIndex::ALL.iter().map(|&i| grade_basis(n, i).len()).collect();
        println!("n={n}: spanning-set sizes {dims:?}, grade pairs leaking: {}", leaks.len());
    }

    let n = 3;
    let basis = standard_x_basis(n);
    let y = levi_bracket(&basis[0], &basis[n])?;
    println!("[(e1|0), (0|e1)] = {y:?}");
    let gram = heisenberg_gram(n, &basis)?;
    println!("Heisenberg Gram determinant: {}", gram.determinant());

    let x1 = grade_basis(n, GradeIndex::new(-1).unwrap());
    let e = bracket(&x1[0], &x1[1])?;
    println!("bracket support: {:?}", e.support().iter().map(|g| g.value()).collect::<Vec<_>>());
    println!("assembled size: {:?}", assemble(&e).shape());
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
