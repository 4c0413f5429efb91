// Symbols of the descended complex: complex property, exactness at every
// nonzero covector, and the vanishing index.
//
// Run with `cargo run --example symbol_ellipticity`.

use std::error::Error;

use grassmann_dirac::clifford::build_gamma_rep;
use grassmann_dirac::symbol_complex::{
    ellipticity_scan, exactness_report, int_covector, symbol_index, weight_table, Mode, SymbolTriple,
};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let rep = build_gamma_rep(4)?;
    let x = int_covector(&[1, 1, 0, 0], &[0, 0, 1, 0])?;
    let t = SymbolTriple::new(&rep, &x)?;
    println!("X = {x}: complex property {}", t.is_complex());
    let e = exactness_report(&rep, &x, Mode::Exact)?;
    println!("ranks ({}, {}, {}), exact everywhere: {}", e.rank1, e.rank2, e.rank3, e.all_exact());

    for n in 3..=5 {
        let scan = ellipticity_scan(n, 100, 42, Mode::Exact)?;
        println!("n={n}: {} covectors, elliptic: {}", scan.tested, scan.passed());
    }

    for n in 3..=6 {
        let w = weight_table(n)?;
        let weights: Vec<String> = (0..4).map(|k| w.format_weight(k)).collect();
        println!("n={n}: dims {:?}, weights {}, index {}", w.fiber_dims, weights.join(" "), symbol_index(n));
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
