// Running the verification suites programmatically and emitting a report.
//
// Run with `cargo run --example verification_report`.

use std::error::Error;

use grassmann_dirac::report::{render_report, run_suite, Format, NRange, RunConfig, RunManifest, Suite};
use grassmann_dirac::symbol_complex::Mode;

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let cfg = RunConfig { n: NRange::single(3), samples: 10, seed: 7, mode: Mode::Exact };
    let manifest = run_suite(Suite::All, &cfg)?;
    print!("{}", render_report(&manifest, Format::Text, false)?);

    let json = render_report(&manifest, Format::Json, false)?;
    let back: RunManifest = serde_json::from_str(&json)?;
    println!("JSON round trip: {}", back == manifest);
    println!("exit code would be {}", manifest.exit_code());
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
