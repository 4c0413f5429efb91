use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use grassmann_dirac::report::{
    dims_table, emit_report, index_table, render_table, run_suite, Format, NRange, RunConfig, Suite,
};
use grassmann_dirac::symbol_complex::Mode;

/// Exact verification harness for the 2-Dirac symbol complex and its
/// supporting group theory and contact geometry.
#[derive(Parser)]
#[command(name = "gdirac", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run a verification suite: grading, heisenberg, spin, spinc, embedding,
    /// contact, symbols, flat-dirac, index, dims or all.
    Verify {
        suite: Suite,
        #[command(flatten)]
        opts: Opts,
    },
    /// Alternating sum of fiber dimensions.
    Index {
        #[arg(long, default_value = "3..8")]
        n: NRange,
        #[command(flatten)]
        out: Output,
    },
    /// Fiber dimensions, weights and operator orders.
    Dims {
        #[arg(long, default_value = "3..6")]
        n: NRange,
        #[command(flatten)]
        out: Output,
    },
}

#[derive(Args)]
struct Opts {
    /// Dimension `n` or inclusive range `a..b`.
    #[arg(long, default_value = "3")]
    n: NRange,
    #[arg(long, default_value_t = 500)]
    samples: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value = "exact")]
    mode: Mode,
    #[command(flatten)]
    out: Output,
}

#[derive(Args)]
struct Output {
    #[arg(long, default_value = "text")]
    format: Format,
    /// Write to this file instead of standard output.
    #[arg(long)]
    out: Option<PathBuf>,
}

fn write(out: &Output, text: &str) -> std::io::Result<()> {
    match &out.out {
        Some(p) => std::fs::write(p, text),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn run(cli: Cli) -> grassmann_dirac::Result<bool> {
    match cli.command {
        Command::Verify { suite, opts } => {
            let cfg = RunConfig { n: opts.n, samples: opts.samples, seed: opts.seed, mode: opts.mode };
            let manifest = run_suite(suite, &cfg)?;
            emit_report(&manifest, opts.out.format, opts.out.out.as_deref())?;
            Ok(manifest.overall_pass)
        }
        Command::Index { n, out } => {
            let rows = index_table(n)?;
            let header = ["n", "dim V0", "dim V1", "dim V2", "dim V3", "index", "V0=V3", "V1=V2"];
            let text = render_table(
                &rows,
                &header,
                |r| {
                    let d = r.fiber_dims.map(|x| x.to_string());
                    vec![r.n.to_string(), d[0].clone(), d[1].clone(), d[2].clone(), d[3].clone(), r.index.to_string(), r.v0_eq_v3.to_string(), r.v1_eq_v2.to_string()]
                },
                out.format,
            )?;
            write(&out, &text)?;
            Ok(rows.iter().all(|r| r.index == 0 && r.v0_eq_v3 && r.v1_eq_v2))
        }
        Command::Dims { n, out } => {
            let rows = dims_table(n)?;
            let header = ["n", "s", "fiber dims", "lambda0", "lambda1", "lambda2", "lambda3", "orders"];
            let text = render_table(
                &rows,
                &header,
                |r| {
                    let d = r.fiber_dims;
                    let o = r.orders;
                    let mut row = vec![r.n.to_string(), r.s.to_string(), format!("({},{},{},{})", d[0], d[1], d[2], d[3])];
                    row.extend(r.weights.iter().cloned());
                    row.push(format!("({},{},{})", o[0], o[1], o[2]));
                    row
                },
                out.format,
            )?;
            write(&out, &text)?;
            Ok(true)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
