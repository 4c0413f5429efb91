//! Verification suites and their machine-readable reports.
//!
//! Every suite is a pure function of `(n, samples, seed, mode)`. Samples are
//! generated from per-index random streams and evaluated in parallel; results
//! are collected in index order, so reports do not depend on scheduling.

use std::fmt;
use std::io::{IsTerminal, Write};
use std::str::FromStr;
use std::sync::Arc;
use std::time::Instant;

use num_traits::{One, Zero};
use rand::Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::clifford::{build_gamma_rep, GammaRep};
use crate::error::{Error, Result};
use crate::flat_dirac::{apply_flat_2dirac, symbol_cross_check, Polynomial, PolySpinorField};
use crate::graded_algebra::{
    bracket, grade_project, grading_closure_violations, heisenberg_gram, levi_bracket, standard_x_basis, GradeIndex,
    GradedElement,
};
use crate::matrix::RationalMatrix;
use crate::sampling::{nonzero_int_vector, sample_rng};
use crate::scalar::{gauss, GaussianRational, Rational};
use crate::spin_groups::{
    block_projection, gamma_c_act, hc_forward, hc_inverse, hsharp_forward, hsharp_inverse, iota_embed, rho_n, rho_n_c,
    so2_spin_equal, so2_spinc_equal, varsigma_n, Phase, SpinCElement, SpinElement, StabilizerClass,
};
use crate::stiefel_contact::{
    center_rotate, contact_alpha, horizontal_basis, levi_form_h, levi_form_matrix, quotient_q, reeb_field,
    tangent_and_kernel_dims, Frame2, StiefelTangent,
};
use crate::symbol_complex::{
    dimension_pairings, ellipticity_scan, fiber_dims, sigma1_equivariant, symbol_index, weight_table, Covector, Mode,
};

pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Failure {
    pub input: String,
    pub expected: String,
    pub got: String,
}

impl Failure {
    pub fn new(input: impl Into<String>, expected: impl Into<String>, got: impl Into<String>) -> Self {
        Self { input: input.into(), expected: expected.into(), got: got.into() }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckReport {
    pub check_name: String,
    pub n: usize,
    pub samples: usize,
    pub seed: u64,
    pub mode: String,
    pub passed: bool,
    pub failures: Vec<Failure>,
    pub elapsed_ms: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RunManifest {
    pub tool_version: String,
    pub overall_pass: bool,
    pub checks: Vec<CheckReport>,
}

impl RunManifest {
    pub fn new(checks: Vec<CheckReport>) -> Self {
        let overall_pass = checks.iter().all(|c| c.passed);
        Self { tool_version: TOOL_VERSION.to_string(), overall_pass, checks }
    }

    /// Process exit status: 0 when every check passed, 1 otherwise.
    pub fn exit_code(&self) -> i32 {
        if self.overall_pass {
            0
        } else {
            1
        }
    }

    /// Copy with every `elapsed_ms` zeroed, for comparing runs.
    pub fn without_timings(&self) -> Self {
        let mut m = self.clone();
        m.checks.iter_mut().for_each(|c| c.elapsed_ms = 0);
        m
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Suite {
    Grading,
    Heisenberg,
    Spin,
    Spinc,
    Embedding,
    Contact,
    Symbols,
    FlatDirac,
    Index,
    Dims,
    All,
}

impl Suite {
    /// Every concrete suite, in the order `all` runs them.
    pub const CONCRETE: [Suite; 10] = [
        Suite::Grading,
        Suite::Heisenberg,
        Suite::Spin,
        Suite::Spinc,
        Suite::Embedding,
        Suite::Contact,
        Suite::Symbols,
        Suite::FlatDirac,
        Suite::Index,
        Suite::Dims,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Grading => "grading",
            Suite::Heisenberg => "heisenberg",
            Suite::Spin => "spin",
            Suite::Spinc => "spinc",
            Suite::Embedding => "embedding",
            Suite::Contact => "contact",
            Suite::Symbols => "symbols",
            Suite::FlatDirac => "flat-dirac",
            Suite::Index => "index",
            Suite::Dims => "dims",
            Suite::All => "all",
        }
    }

    /// Smallest admissible `n`.
    pub fn min_n(self) -> usize {
        match self {
            Suite::Spin | Suite::Spinc | Suite::Embedding => 2,
            _ => 3,
        }
    }

    fn check(self, n: usize, samples: usize, seed: u64, mode: Mode) -> Result<Vec<Failure>> {
        match self {
            Suite::Grading => check_grading(n, samples, seed),
            Suite::Heisenberg => check_heisenberg(n, samples, seed),
            Suite::Spin => check_spin(n, samples, seed),
            Suite::Spinc => check_spinc(n, samples, seed),
            Suite::Embedding => check_embedding(n, samples, seed),
            Suite::Contact => check_contact(n, samples, seed),
            Suite::Symbols => check_symbols(n, samples, seed, mode),
            Suite::FlatDirac => check_flat_dirac(n, samples, seed),
            Suite::Index => Ok(check_index(n)),
            Suite::Dims => check_dims(n),
            Suite::All => unreachable!("expanded by run_suite"),
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::CONCRETE
            .into_iter()
            .chain([Suite::All])
            .find(|x| x.name() == s)
            .ok_or_else(|| Error::UnknownSuite(s.to_string()))
    }
}

/// Inclusive range of dimensions, written `n` or `a..b`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct NRange {
    pub lo: usize,
    pub hi: usize,
}

impl NRange {
    pub fn single(n: usize) -> Self {
        Self { lo: n, hi: n }
    }

    pub fn iter(self) -> impl Iterator<Item = usize> {
        self.lo..=self.hi
    }
}

impl FromStr for NRange {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidRange(s.to_string());
        let parse = |t: &str| t.trim().parse::<usize>().map_err(|_| bad());
        let r = match s.split_once("..") {
            Some((a, b)) => Self { lo: parse(a)?, hi: parse(b)? },
            None => Self::single(parse(s)?),
        };
        if r.lo > r.hi {
            return Err(bad());
        }
        Ok(r)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RunConfig {
    pub n: NRange,
    pub samples: usize,
    pub seed: u64,
    pub mode: Mode,
}

impl Default for RunConfig {
    fn default() -> Self {
        Self { n: NRange::single(3), samples: 500, seed: 0, mode: Mode::Exact }
    }
}

/// Runs `suite` for every `n` in the range. Fails before running anything if
/// some `n` is below a suite's minimum.
pub fn run_suite(suite: Suite, cfg: &RunConfig) -> Result<RunManifest> {
    let suites: Vec<Suite> = if suite == Suite::All { Suite::CONCRETE.to_vec() } else { vec![suite] };
    for s in &suites {
        if cfg.n.lo < s.min_n() {
            return Err(Error::DimensionTooSmall { got: cfg.n.lo, min: s.min_n() });
        }
    }
    let mut checks = Vec::new();
    for n in cfg.n.iter() {
        for s in &suites {
            let start = Instant::now();
            let failures = s.check(n, cfg.samples, cfg.seed, cfg.mode)?;
            checks.push(CheckReport {
                check_name: s.name().to_string(),
                n,
                samples: cfg.samples,
                seed: cfg.seed,
                mode: cfg.mode.to_string(),
                passed: failures.is_empty(),
                failures,
                elapsed_ms: start.elapsed().as_millis() as u64,
            });
        }
    }
    Ok(RunManifest::new(checks))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Json,
    Csv,
    Text,
}

impl FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "json" => Ok(Format::Json),
            "csv" => Ok(Format::Csv),
            "text" => Ok(Format::Text),
            other => Err(Error::UnknownFormat(other.to_string())),
        }
    }
}

#[derive(Serialize)]
struct CsvRow<'a> {
    check_name: &'a str,
    n: usize,
    samples: usize,
    seed: u64,
    mode: &'a str,
    passed: bool,
    failures: String,
    elapsed_ms: u64,
}

/// Renders the manifest. `color` only affects the text format.
pub fn render_report(m: &RunManifest, format: Format, color: bool) -> Result<String> {
    match format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(m).map_err(|e| Error::Io(e.to_string()))?;
            s.push('\n');
            Ok(s)
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            for c in &m.checks {
                let failures = c
                    .failures
                    .iter()
                    .map(|f| format!("{} | expected {} | got {}", f.input, f.expected, f.got))
                    .collect::<Vec<_>>()
                    .join("; ");
                w.serialize(CsvRow {
                    check_name: &c.check_name,
                    n: c.n,
                    samples: c.samples,
                    seed: c.seed,
                    mode: &c.mode,
                    passed: c.passed,
                    failures,
                    elapsed_ms: c.elapsed_ms,
                })
                .map_err(|e| Error::Io(e.to_string()))?;
            }
            if m.checks.is_empty() {
                w.write_record(["check_name", "n", "samples", "seed", "mode", "passed", "failures", "elapsed_ms"])
                    .map_err(|e| Error::Io(e.to_string()))?;
            }
            let bytes = w.into_inner().map_err(|e| Error::Io(e.to_string()))?;
            String::from_utf8(bytes).map_err(|e| Error::Io(e.to_string()))
        }
        Format::Text => Ok(render_text(m, color)),
    }
}

fn render_text(m: &RunManifest, color: bool) -> String {
    let tag = |ok: bool| match (ok, color) {
        (true, true) => "\x1b[32mPASS\x1b[0m",
        (false, true) => "\x1b[31mFAIL\x1b[0m",
        (true, false) => "PASS",
        (false, false) => "FAIL",
    };
    let mut out = format!("gdirac {}\n", m.tool_version);
    for c in &m.checks {
        out += &format!(
            "{}  {:<11} n={:<3} samples={} seed={} mode={} ({} ms)\n",
            tag(c.passed),
            c.check_name,
            c.n,
            c.samples,
            c.seed,
            c.mode,
            c.elapsed_ms
        );
        for f in c.failures.iter().take(10) {
            out += &format!("      {}: expected {}, got {}\n", f.input, f.expected, f.got);
        }
        if c.failures.len() > 10 {
            out += &format!("      ... {} more\n", c.failures.len() - 10);
        }
    }
    let failed = m.checks.iter().filter(|c| !c.passed).count();
    out += &format!("{} {} checks, {} failed\n", tag(m.overall_pass), m.checks.len(), failed);
    out
}

/// Writes the report to `path`, or to standard output when `path` is `None`.
/// Text output is colored only on a terminal and when `NO_COLOR` is unset.
pub fn emit_report(m: &RunManifest, format: Format, path: Option<&std::path::Path>) -> Result<()> {
    match path {
        Some(p) => {
            std::fs::write(p, render_report(m, format, false)?)?;
        }
        None => {
            let stdout = std::io::stdout();
            let color = stdout.is_terminal() && std::env::var_os("NO_COLOR").is_none();
            stdout.lock().write_all(render_report(m, format, color)?.as_bytes())?;
        }
    }
    Ok(())
}

/// One row of the `dims` table.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DimsRow {
    pub n: usize,
    pub s: usize,
    pub fiber_dims: [usize; 4],
    pub weights: [String; 4],
    pub orders: [usize; 3],
}

/// One row of the `index` table.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IndexRow {
    pub n: usize,
    pub fiber_dims: [usize; 4],
    pub index: i64,
    pub v0_eq_v3: bool,
    pub v1_eq_v2: bool,
}

pub fn dims_table(range: NRange) -> Result<Vec<DimsRow>> {
    range
        .iter()
        .map(|n| {
            let w = weight_table(n)?;
            Ok(DimsRow {
                n,
                s: w.fiber_dims[0],
                fiber_dims: w.fiber_dims,
                weights: [0, 1, 2, 3].map(|k| w.format_weight(k)),
                orders: w.orders,
            })
        })
        .collect()
}

pub fn index_table(range: NRange) -> Result<Vec<IndexRow>> {
    if range.lo < 3 {
        return Err(Error::DimensionTooSmall { got: range.lo, min: 3 });
    }
    Ok(range
        .iter()
        .map(|n| {
            let (a, b) = dimension_pairings(n);
            IndexRow { n, fiber_dims: fiber_dims(n), index: symbol_index(n), v0_eq_v3: a, v1_eq_v2: b }
        })
        .collect())
}

/// Renders a table of serializable rows in the requested format.
pub fn render_table<R: Serialize>(rows: &[R], header: &[&str], cells: impl Fn(&R) -> Vec<String>, format: Format) -> Result<String> {
    match format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(rows).map_err(|e| Error::Io(e.to_string()))?;
            s.push('\n');
            Ok(s)
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            let io = |e: csv::Error| Error::Io(e.to_string());
            w.write_record(header).map_err(io)?;
            for r in rows {
                w.write_record(cells(r)).map_err(io)?;
            }
            let bytes = w.into_inner().map_err(|e| Error::Io(e.to_string()))?;
            String::from_utf8(bytes).map_err(|e| Error::Io(e.to_string()))
        }
        Format::Text => {
            let body: Vec<Vec<String>> = rows.iter().map(&cells).collect();
            let widths: Vec<usize> = (0..header.len())
                .map(|j| body.iter().map(|r| r[j].len()).chain([header[j].len()]).max().unwrap_or(0))
                .collect();
            let line = |cols: Vec<String>| {
                cols.iter().zip(&widths).map(|(c, w)| format!("{c:<w$}")).collect::<Vec<_>>().join("  ").trim_end().to_string() + "\n"
            };
            let mut out = line(header.iter().map(|h| h.to_string()).collect());
            for r in body {
                out += &line(r);
            }
            Ok(out)
        }
    }
}

// ---------------------------------------------------------------------------
// suites

/// Runs `f` on sample indices `0..samples` in parallel, concatenating the
/// failures in index order.
fn per_sample<F>(samples: usize, f: F) -> Result<Vec<Failure>>
where
    F: Fn(u64) -> Result<Vec<Failure>> + Send + Sync,
{
    let results: Vec<Result<Vec<Failure>>> = (0..samples as u64).into_par_iter().map(f).collect();
    let mut out = Vec::new();
    for r in results {
        out.extend(r?);
    }
    Ok(out)
}

fn expect(ok: bool, input: impl FnOnce() -> String, expected: &str, got: impl FnOnce() -> String) -> Vec<Failure> {
    if ok {
        Vec::new()
    } else {
        vec![Failure::new(input(), expected, got())]
    }
}

fn rep(n: usize) -> Result<Arc<GammaRep>> {
    Ok(Arc::new(build_gamma_rep(n)?))
}

fn small_int_matrix(rng: &mut impl Rng, rows: usize, cols: usize) -> RationalMatrix {
    RationalMatrix::from_fn(rows, cols, |_, _| Rational::from_integer(rng.gen_range(-4i64..=4).into()))
}

fn random_graded(rng: &mut impl Rng, n: usize) -> Result<GradedElement> {
    let skew = |rng: &mut _, k: usize| {
        let m = small_int_matrix(rng, k, k);
        &m - &m.transpose()
    };
    GradedElement::new(
        n,
        crate::graded_algebra::Blocks {
            a: small_int_matrix(rng, 2, 2),
            b: skew(rng, n),
            x: small_int_matrix(rng, n, 2),
            y: skew(rng, 2),
            z: small_int_matrix(rng, n, 2),
            w: skew(rng, 2),
        },
    )
}

fn check_grading(n: usize, samples: usize, seed: u64) -> Result<Vec<Failure>> {
    let mut out: Vec<Failure> = grading_closure_violations(n)
        .into_iter()
        .map(|(i, j)| Failure::new(format!("[g_{i}, g_{j}]"), format!("inside g_{}", i.value() + j.value()), "leaks"))
        .collect();
    // bilinear consistency of the bracket with the grading on random elements
    out.extend(per_sample(samples, |k| {
        let mut rng = sample_rng(seed, k);
        let e = random_graded(&mut rng, n)?;
        let f = random_graded(&mut rng, n)?;
        let whole = bracket(&e, &f)?;
        let mut sum = GradedElement::zero(n);
        for i in GradeIndex::ALL {
            for j in GradeIndex::ALL {
                if let Some(ij) = GradeIndex::new(i.value() + j.value()) {
                    let b = bracket(&grade_project(&e, i), &grade_project(&f, j))?;
                    sum = sum.add(&grade_project(&b, ij));
                }
            }
        }
        Ok(expect(sum == whole, || format!("sample {k}"), "[e,f] = Σ [e_i,f_j]_{i+j}", || "mismatch".into()))
    })?);
    Ok(out)
}

fn check_heisenberg(n: usize, samples: usize, seed: u64) -> Result<Vec<Failure>> {
    let mut out = Vec::new();
    let g = heisenberg_gram(n, &standard_x_basis(n))?;
    let det = g.determinant();
    out.extend(expect(!det.is_zero(), || format!("n={n}"), "det heisenberg_gram != 0", || det.to_string()));
    let e1 = standard_x_basis(n);
    let y = levi_bracket(&e1[0], &e1[n])?;
    out.extend(expect(!y.is_zero() && y.is_skew(), || "(e1|0), (0|e1)".into(), "nonzero skew bracket spanning g_-2", || format!("{y:?}")));
    out.extend(per_sample(samples, |k| {
        let mut rng = sample_rng(seed, k);
        let x1 = small_int_matrix(&mut rng, n, 2);
        let x2 = small_int_matrix(&mut rng, n, 2);
        let lb = levi_bracket(&x1, &x2)?;
        let full = bracket(&GradedElement::from_x(x1.clone())?, &GradedElement::from_x(x2.clone())?)?;
        let mut v = expect(&lb == full.y(), || format!("sample {k}"), "levi_bracket = Y-block of commutator", || format!("{lb:?}"));
        let swapped = levi_bracket(&x2, &x1)?;
        v.extend(expect(swapped == -lb, || format!("sample {k}"), "antisymmetry", || "symmetric part".into()));
        Ok(v)
    })?);
    Ok(out)
}

fn check_spin(n: usize, samples: usize, seed: u64) -> Result<Vec<Failure>> {
    let r = rep(n)?;
    let minus = SpinElement::minus_one(&r);
    let mut out = expect(
        is_minus_identity(minus.spinor_mat()),
        || "-1".into(),
        "-Id on spinors",
        || format!("{:?}", minus.spinor_mat()),
    );
    out.extend(per_sample(samples, |k| {
        let mut rng = sample_rng(seed, k);
        let a = SpinElement::random(&r, &mut rng);
        let b = SpinElement::random(&r, &mut rng);
        let (ra, rb) = (rho_n(&a)?, rho_n(&b)?);
        let mut v = expect(rho_n(&a.mul(&b))? == ra.compose(&rb), || format!("sample {k}"), "rho(ab) = rho(a) rho(b)", || "mismatch".into());
        v.extend(expect(rho_n(&a.neg())? == ra, || format!("sample {k}"), "rho(-a) = rho(a)", || "mismatch".into()));
        v.extend(expect(a.mul(&a.inverse()).is_identity(), || format!("sample {k}"), "a a^-1 = 1", || "mismatch".into()));
        Ok(v)
    })?);
    // double-angle law on Spin(2)
    let r2 = rep(2)?;
    for k in 0..20u64 {
        let p = Phase::random(&mut sample_rng(seed, 1_000_000 + k));
        let rot = rho_n(&SpinElement::from_plane_phase(&r2, &p))?;
        out.extend(expect(
            rot.matrix() == &p.square().rotation_matrix(),
            || format!("phase {p}"),
            "rho_2(e^it) = e^2it",
            || format!("{:?}", rot.matrix()),
        ));
    }
    Ok(out)
}

fn is_minus_identity(m: &crate::matrix::ComplexMatrix) -> bool {
    m == &crate::matrix::ComplexMatrix::scalar_identity(m.rows(), gauss(-1, 0))
}

fn spinor(rng: &mut impl Rng, s: usize) -> Vec<GaussianRational> {
    loop {
        let v: Vec<GaussianRational> = (0..s).map(|_| gauss(rng.gen_range(-3..=3), rng.gen_range(-3..=3))).collect();
        if v.iter().any(|z| !z.is_zero()) {
            return v;
        }
    }
}

fn check_spinc(n: usize, samples: usize, seed: u64) -> Result<Vec<Failure>> {
    let r = rep(n)?;
    per_sample(samples, |k| {
        let mut rng = sample_rng(seed, k);
        let x = SpinCElement::random(&r, &mut rng);
        let y = SpinCElement::random(&r, &mut rng);
        let psi = spinor(&mut rng, r.spinor_dim());
        let tag = || format!("sample {k}");
        let mut v = expect(rho_n_c(&x.mul(&y))? == rho_n_c(&x)?.compose(&rho_n_c(&y)?), tag, "rho^c homomorphism", || "mismatch".into());
        v.extend(expect(varsigma_n(&x.mul(&y)) == varsigma_n(&x).mul(&varsigma_n(&y)), tag, "varsigma homomorphism", || "mismatch".into()));
        let f = x.flip();
        v.extend(expect(rho_n_c(&f)? == rho_n_c(&x)?, tag, "rho^c(-p,-a) = rho^c(p,a)", || "mismatch".into()));
        v.extend(expect(varsigma_n(&f) == varsigma_n(&x), tag, "varsigma(-p,-a) = varsigma(p,a)", || "mismatch".into()));
        v.extend(expect(gamma_c_act(&f, &psi)? == gamma_c_act(&x, &psi)?, tag, "gamma^c well defined", || "mismatch".into()));
        Ok(v)
    })
}

fn check_embedding(n: usize, samples: usize, seed: u64) -> Result<Vec<Failure>> {
    let r = rep(n)?;
    let big = rep(n + 2)?;
    let mut out = per_sample(samples, |k| {
        let mut rng = sample_rng(seed, k);
        let x = SpinCElement::random(&r, &mut rng);
        let y = SpinCElement::random(&r, &mut rng);
        let tag = || format!("sample {k}");
        let ix = iota_embed(&x, &big)?;
        let mut v = expect(iota_embed(&x.mul(&y), &big)? == ix.mul(&iota_embed(&y, &big)?), tag, "iota homomorphism", || "mismatch".into());
        v.extend(expect(iota_embed(&x.flip(), &big)? == ix, tag, "iota(-p,-a) = iota(p,a)", || "mismatch".into()));
        let (r2, rn) = block_projection(&x)?;
        let mut diag = RationalMatrix::zeros(n + 2, n + 2);
        diag.set_block(0, 0, r2.matrix());
        diag.set_block(2, 2, rn.matrix());
        let got = rho_n(&ix)?;
        v.extend(expect(got.matrix() == &diag, tag, "rho_{n+2}(iota x) = diag(rho_2(p), rho_n(a))", || format!("{:?}", got.matrix())));
        Ok(v)
    })?;
    out.extend(check_stabilizers(&r, samples.min(50), seed)?);
    Ok(out)
}

fn random_hsharp(r: &Arc<GammaRep>, rng: &mut impl Rng) -> StabilizerClass {
    let s = Phase::random(rng);
    let t = if rng.gen_bool(0.5) { s.clone() } else { s.neg() };
    StabilizerClass::new(t, s, SpinElement::random(r, rng))
}

fn random_hc(r: &Arc<GammaRep>, rng: &mut impl Rng) -> StabilizerClass {
    StabilizerClass::new(Phase::random(rng), Phase::random(rng), SpinElement::random(r, rng))
}

fn check_stabilizers(r: &Arc<GammaRep>, samples: usize, seed: u64) -> Result<Vec<Failure>> {
    per_sample(samples, |k| {
        let mut rng = sample_rng(seed, 2_000_000 + k);
        let tag = || format!("class {k}");
        let mut v = Vec::new();

        let (x, y) = (random_hsharp(r, &mut rng), random_hsharp(r, &mut rng));
        let fx = hsharp_forward(&x)?;
        let fy = hsharp_forward(&y)?;
        let fxy = hsharp_forward(&x.mul(&y))?;
        v.extend(expect(so2_spin_equal(&fxy, &(fx.0.mul(&fy.0), fx.1.mul(&fy.1))), tag, "H# forward homomorphism", || "mismatch".into()));
        v.extend(expect(hsharp_inverse(&fx.0, &fx.1)?.same_class(&x), tag, "H# inverse(forward(x)) = x", || "mismatch".into()));
        let u = Phase::random_with_root(&mut rng);
        let a = SpinElement::random(r, &mut rng);
        let back = hsharp_forward(&hsharp_inverse(&u, &a)?)?;
        v.extend(expect(so2_spin_equal(&back, &(u, a)), tag, "H# forward(inverse(u,a)) = (u,a)", || "mismatch".into()));

        let (x, y) = (random_hc(r, &mut rng), random_hc(r, &mut rng));
        let (fx, fy) = (hc_forward(&x), hc_forward(&y));
        let prod = (fx.0.mul(&fy.0), fx.1.mul(&fy.1));
        v.extend(expect(so2_spinc_equal(&hc_forward(&x.mul(&y)), &prod), tag, "H^c forward homomorphism", || "mismatch".into()));
        v.extend(expect(hc_inverse(&fx.0, &fx.1)?.same_class(&x), tag, "H^c inverse(forward(x)) = x", || "mismatch".into()));
        let u = Phase::random_with_root(&mut rng);
        let z = SpinCElement::random(r, &mut rng);
        let back = hc_forward(&hc_inverse(&u, &z)?);
        v.extend(expect(so2_spinc_equal(&back, &(u, z)), tag, "H^c forward(inverse(u,x)) = (u,x)", || "mismatch".into()));
        Ok(v)
    })
}

fn check_contact(n: usize, samples: usize, seed: u64) -> Result<Vec<Failure>> {
    let m = n + 2;
    per_sample(samples, |k| {
        let mut rng = sample_rng(seed, k);
        let f = Frame2::random(&mut rng, m);
        let tag = || format!("frame {k}");
        let mut v = Vec::new();
        let dims = tangent_and_kernel_dims(&f);
        v.extend(expect(dims == (2 * m - 3, 2 * n), tag, "(dim T, dim ker alpha) = (2m-3, 2n)", || format!("{dims:?}")));
        let basis = horizontal_basis(&f);
        v.extend(expect(
            basis.iter().all(|t| t.is_horizontal() && contact_alpha(t).is_zero()),
            tag,
            "horizontal basis lies in ker alpha",
            || "nonzero alpha".into(),
        ));
        v.extend(expect(contact_alpha(&reeb_field(&f)).is_one(), tag, "alpha(reeb) = 1", || contact_alpha(&reeb_field(&f)).to_string()));
        let p = Phase::random(&mut rng);
        let g = center_rotate(&f, &p)?;
        v.extend(expect(quotient_q(&g) == quotient_q(&f), tag, "q constant on center orbits", || "moved".into()));
        let lm = levi_form_matrix(&f);
        v.extend(expect(!lm.determinant().is_zero(), tag, "levi form nondegenerate", || "degenerate".into()));
        // identification with the Heisenberg bracket, global sign +1
        let u = f.complement_basis();
        let x1 = small_int_matrix(&mut rng, n, 2);
        let x2 = small_int_matrix(&mut rng, n, 2);
        let t1 = StiefelTangent::from_coordinates(&f, &u, &x1)?;
        let t2 = StiefelTangent::from_coordinates(&f, &u, &x2)?;
        let lf = levi_form_h(&t1, &t2)?;
        let lb = levi_bracket(&x1, &x2)?[(0, 1)].clone();
        v.extend(expect(lf == lb, tag, "levi_form_h = levi_bracket_12", || format!("{lf} vs {lb}")));
        Ok(v)
    })
}

fn check_symbols(n: usize, samples: usize, seed: u64, mode: Mode) -> Result<Vec<Failure>> {
    let scan = ellipticity_scan(n, samples, seed, mode)?;
    let mut out: Vec<Failure> = scan
        .complex_failures
        .into_iter()
        .chain(scan.exactness_failures)
        .chain(scan.mode_disagreements)
        .map(|f| Failure::new(f.input, f.expected, f.got))
        .collect();
    let r = rep(n)?;
    out.extend(per_sample(samples.min(20), |k| {
        let mut rng = sample_rng(seed, 3_000_000 + k);
        let g = SpinCElement::random(&r, &mut rng);
        let x = Covector::random(&mut rng, n);
        Ok(expect(sigma1_equivariant(&r, &g, &x)?, || format!("{x}"), "sigma1 Spin^c-equivariant", || "mismatch".into()))
    })?);
    Ok(out)
}

fn check_flat_dirac(n: usize, samples: usize, seed: u64) -> Result<Vec<Failure>> {
    let r = rep(n)?;
    let s = r.spinor_dim();
    let mut out = per_sample(samples, |k| {
        let mut rng = sample_rng(seed, k);
        let (xi, deg, psi) = flat_dirac_triple(&mut rng, n, s);
        let ok = symbol_cross_check(&r, &xi, deg, &psi)?;
        Ok(expect(ok, || format!("xi={xi}, k={deg}"), "D(<x,xi>^k psi) = k <x,xi>^(k-1) sigma1(xi) psi", || "mismatch".into()))
    })?;
    // ℓ(x)ψ with ψ ≠ 0 is annihilated only when ℓ = 0
    let mut rng = sample_rng(seed, 4_000_000);
    let xi = Covector::random(&mut rng, n);
    let f = PolySpinorField::from_polynomial(n, &Polynomial::linear_form(&xi), &spinor(&mut rng, s))?;
    out.extend(expect(!apply_flat_2dirac(&r, &f)?.is_zero(), || format!("{xi}"), "nonzero image of a linear field", || "zero".into()));
    Ok(out)
}

/// A seeded `(ξ, k, ψ_0)` with `ξ ≠ 0`, `1 ≤ k ≤ 5`, `ψ_0 ≠ 0`.
pub fn flat_dirac_triple(rng: &mut impl Rng, n: usize, s: usize) -> (Covector, u32, Vec<GaussianRational>) {
    let v = nonzero_int_vector(rng, 2 * n, 3);
    let xi = Covector::new(v[..n].to_vec(), v[n..].to_vec()).expect("equal halves");
    let k = rng.gen_range(1..=5);
    (xi, k, spinor(rng, s))
}

fn check_index(n: usize) -> Vec<Failure> {
    let idx = symbol_index(n);
    let (a, b) = dimension_pairings(n);
    let mut out = expect(idx == 0, || format!("n={n}"), "index 0", || idx.to_string());
    out.extend(expect(a && b, || format!("n={n}"), "dim V0 = dim V3, dim V1 = dim V2", || format!("{:?}", fiber_dims(n))));
    out
}

fn check_dims(n: usize) -> Result<Vec<Failure>> {
    let w = weight_table(n)?;
    let s = build_gamma_rep(n)?.spinor_dim();
    let d = w.fiber_dims;
    let mut out = expect(d == [s, 2 * s, 2 * s, s], || format!("n={n}"), "fiber dims (s, 2s, 2s, s)", || format!("{d:?}"));
    let alt = d[0] as i64 - d[1] as i64 + d[2] as i64 - d[3] as i64;
    out.extend(expect(alt == 0, || format!("n={n}"), "alternating sum 0", || alt.to_string()));
    out.extend(expect(w.orders == [1, 2, 1], || format!("n={n}"), "orders (1, 2, 1)", || format!("{:?}", w.orders)));
    Ok(out)
}
