//! Principal symbols of the descended 2-Dirac complex
//! `V_0 → V_1 → V_2 → V_3` with fibers `S, S², S², S`.
//!
//! A covector is a pair `X = (X_1, X_2)` of vectors in `R^n`; writing
//! `M_i` for Clifford multiplication by `X_i`, the symbols are
//!
//! ```text
//! σ_1 = [M_1; M_2]    σ_2 = [[-M_2 M_1, M_1 M_1], [-M_2 M_2, M_1 M_2]]    σ_3 = [-M_2, M_1]
//! ```
//!
//! Ellipticity means the sequence is exact at every nonzero covector.

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use num_traits::Zero;
use rand::Rng;
use rayon::prelude::*;

use crate::clifford::{build_gamma_rep, clifford_mat, GammaRep};
use crate::error::{Error, Result};
use crate::matrix::{basis_vec, dot, scale_vec, sub_vec, ComplexMatrix};
use crate::rank::{exact_rank, float_rank};
use crate::sampling::{nonzero_int_vector, sample_rng};
use crate::scalar::{ratio, Rational};
use crate::spin_groups::{rho_n_c, SpinCElement};

/// Rank computation backend.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Exact,
    Float,
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Mode::Exact => "exact",
            Mode::Float => "float",
        })
    }
}

impl FromStr for Mode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "exact" => Ok(Mode::Exact),
            "float" => Ok(Mode::Float),
            other => Err(Error::UnknownMode(other.to_string())),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Covector {
    x1: Vec<Rational>,
    x2: Vec<Rational>,
}

impl Covector {
    pub fn new(x1: Vec<Rational>, x2: Vec<Rational>) -> Result<Self> {
        if x1.len() != x2.len() {
            return Err(Error::LengthMismatch { expected: x1.len(), got: x2.len() });
        }
        Ok(Self { x1, x2 })
    }

    pub fn zero(n: usize) -> Self {
        Self { x1: vec![Rational::zero(); n], x2: vec![Rational::zero(); n] }
    }

    /// Nonzero covector with integer entries in `[-9, 9]`.
    pub fn random(rng: &mut impl Rng, n: usize) -> Self {
        let v = nonzero_int_vector(rng, 2 * n, 9);
        Self { x1: v[..n].to_vec(), x2: v[n..].to_vec() }
    }

    pub fn n(&self) -> usize {
        self.x1.len()
    }

    pub fn x1(&self) -> &[Rational] {
        &self.x1
    }

    pub fn x2(&self) -> &[Rational] {
        &self.x2
    }

    pub fn is_zero(&self) -> bool {
        self.x1.iter().chain(&self.x2).all(Zero::is_zero)
    }

    pub fn scale(&self, t: &Rational) -> Self {
        Self { x1: scale_vec(t, &self.x1), x2: scale_vec(t, &self.x2) }
    }
}

impl fmt::Display for Covector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |v: &[Rational]| v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",");
        write!(f, "([{}], [{}])", join(&self.x1), join(&self.x2))
    }
}

fn check(rep: &GammaRep, x: &Covector) -> Result<(ComplexMatrix, ComplexMatrix)> {
    Ok((clifford_mat(rep, &x.x1)?, clifford_mat(rep, &x.x2)?))
}

/// `σ(D_1, X)ψ = (X_1.ψ, X_2.ψ)`
pub fn sigma1(rep: &GammaRep, x: &Covector) -> Result<ComplexMatrix> {
    let (m1, m2) = check(rep, x)?;
    Ok(m1.vstack(&m2))
}

/// `σ(D_2, X)(ψ_1, ψ_2) = (-X_2.X_1.ψ_1 + X_1.X_1.ψ_2, -X_2.X_2.ψ_1 + X_1.X_2.ψ_2)`
pub fn sigma2(rep: &GammaRep, x: &Covector) -> Result<ComplexMatrix> {
    let (m1, m2) = check(rep, x)?;
    Ok(ComplexMatrix::from_blocks(&[
        vec![&-(&m2 * &m1), &(&m1 * &m1)],
        vec![&-(&m2 * &m2), &(&m1 * &m2)],
    ]))
}

/// `σ(D_3, X)(φ_1, φ_2) = -X_2.φ_1 + X_1.φ_2`
pub fn sigma3(rep: &GammaRep, x: &Covector) -> Result<ComplexMatrix> {
    let (m1, m2) = check(rep, x)?;
    Ok((-m2).hstack(&m1))
}

#[derive(Clone, Debug, PartialEq)]
pub struct SymbolTriple {
    pub s1: ComplexMatrix,
    pub s2: ComplexMatrix,
    pub s3: ComplexMatrix,
}

impl SymbolTriple {
    pub fn new(rep: &GammaRep, x: &Covector) -> Result<Self> {
        Ok(Self { s1: sigma1(rep, x)?, s2: sigma2(rep, x)?, s3: sigma3(rep, x)? })
    }

    /// `σ_2 σ_1 = 0` and `σ_3 σ_2 = 0`.
    pub fn is_complex(&self) -> bool {
        (&self.s2 * &self.s1).is_zero() && (&self.s3 * &self.s2).is_zero()
    }

    pub fn ranks(&self, mode: Mode) -> [usize; 3] {
        let r = match mode {
            Mode::Exact => exact_rank,
            Mode::Float => float_rank,
        };
        [r(&self.s1), r(&self.s2), r(&self.s3)]
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ExactnessReport {
    pub rank1: usize,
    pub rank2: usize,
    pub rank3: usize,
    pub exact_at_0: bool,
    pub exact_at_1: bool,
    pub exact_at_2: bool,
    pub exact_at_3: bool,
}

impl ExactnessReport {
    fn from_ranks(s: usize, [rank1, rank2, rank3]: [usize; 3]) -> Self {
        Self {
            rank1,
            rank2,
            rank3,
            exact_at_0: rank1 == s,
            exact_at_1: rank1 + rank2 == 2 * s,
            exact_at_2: rank2 + rank3 == 2 * s,
            exact_at_3: rank3 == s,
        }
    }

    pub fn all_exact(&self) -> bool {
        self.exact_at_0 && self.exact_at_1 && self.exact_at_2 && self.exact_at_3
    }
}

pub fn exactness_report(rep: &GammaRep, x: &Covector, mode: Mode) -> Result<ExactnessReport> {
    if x.is_zero() {
        return Err(Error::ZeroCovector);
    }
    let t = SymbolTriple::new(rep, x)?;
    Ok(ExactnessReport::from_ranks(rep.spinor_dim(), t.ranks(mode)))
}

/// Deterministic degenerate covectors: `(v,0), (0,v), (v,v), (v,-v), (v,w)`
/// with `w ⊥ v`, for every basis vector `v` and a few seeded random ones.
pub fn degenerate_family(n: usize, seed: u64) -> Vec<Covector> {
    let zero = vec![Rational::zero(); n];
    let mut vs: Vec<(Vec<Rational>, Vec<Rational>)> =
        (0..n).map(|k| (basis_vec(n, k), basis_vec(n, (k + 1) % n))).collect();
    for k in 0..3 {
        // streams counted down from the top never collide with sample indices
        let mut rng = sample_rng(seed, u64::MAX - k);
        let v = nonzero_int_vector(&mut rng, n, 9);
        let w = loop {
            let u = nonzero_int_vector(&mut rng, n, 9);
            // w = |v|² u - ⟨u, v⟩ v
            let w = sub_vec(&scale_vec(&dot(&v, &v), &u), &scale_vec(&dot(&u, &v), &v));
            if w.iter().any(|c| !c.is_zero()) {
                break w;
            }
        };
        vs.push((v, w));
    }
    let neg = |v: &[Rational]| scale_vec(&ratio(-1, 1), v);
    vs.into_iter()
        .flat_map(|(v, w)| {
            [
                (v.clone(), zero.clone()),
                (zero.clone(), v.clone()),
                (v.clone(), v.clone()),
                (v.clone(), neg(&v)),
                (v, w),
            ]
        })
        .map(|(a, b)| Covector { x1: a, x2: b })
        .collect()
}

/// One problem found by [`ellipticity_scan`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScanFailure {
    pub input: String,
    pub expected: String,
    pub got: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScanReport {
    pub n: usize,
    pub tested: usize,
    /// Covectors where `σ_2σ_1` or `σ_3σ_2` is nonzero.
    pub complex_failures: Vec<ScanFailure>,
    /// Nonzero covectors where some exactness flag fails.
    pub exactness_failures: Vec<ScanFailure>,
    /// Covectors where exact and floating-point ranks differ (exact mode only).
    pub mode_disagreements: Vec<ScanFailure>,
}

impl ScanReport {
    pub fn passed(&self) -> bool {
        self.complex_failures.is_empty() && self.exactness_failures.is_empty() && self.mode_disagreements.is_empty()
    }
}

/// Checks `samples` seeded covectors plus [`degenerate_family`] (and the zero
/// covector for the complex property). In exact mode the floating-point ranks
/// are computed as well and must agree.
pub fn ellipticity_scan(n: usize, samples: usize, seed: u64, mode: Mode) -> Result<ScanReport> {
    if n < 3 {
        return Err(Error::DimensionTooSmall { got: n, min: 3 });
    }
    let rep = Arc::new(build_gamma_rep(n)?);
    let s = rep.spinor_dim();
    let mut inputs: Vec<Covector> = (0..samples as u64)
        .map(|i| Covector::random(&mut sample_rng(seed, i), n))
        .collect();
    inputs.extend(degenerate_family(n, seed));
    inputs.push(Covector::zero(n));

    let outcomes: Vec<[Option<ScanFailure>; 3]> = inputs
        .par_iter()
        .map(|x| {
            let t = SymbolTriple::new(&rep, x).expect("covector matches the representation");
            let mut out: [Option<ScanFailure>; 3] = [None, None, None];
            if !t.is_complex() {
                out[0] = Some(ScanFailure {
                    input: x.to_string(),
                    expected: "s2*s1 = 0, s3*s2 = 0".into(),
                    got: "nonzero composite".into(),
                });
            }
            if x.is_zero() {
                return out;
            }
            let ranks = t.ranks(mode);
            if !ExactnessReport::from_ranks(s, ranks).all_exact() {
                out[1] = Some(ScanFailure {
                    input: x.to_string(),
                    expected: format!("ranks ({s}, {s}, {s})"),
                    got: format!("ranks {ranks:?}"),
                });
            }
            if mode == Mode::Exact {
                let float = t.ranks(Mode::Float);
                if float != ranks {
                    out[2] = Some(ScanFailure {
                        input: x.to_string(),
                        expected: format!("float ranks {ranks:?}"),
                        got: format!("float ranks {float:?}"),
                    });
                }
            }
            out
        })
        .collect();

    let mut report = ScanReport {
        n,
        tested: inputs.len(),
        complex_failures: Vec::new(),
        exactness_failures: Vec::new(),
        mode_disagreements: Vec::new(),
    };
    for [a, b, c] in outcomes {
        report.complex_failures.extend(a);
        report.exactness_failures.extend(b);
        report.mode_disagreements.extend(c);
    }
    Ok(report)
}

/// Checks `σ_1(RX) · U = diag(U, U) · σ_1(X)` for `U = γ^c(g)` and
/// `R = ρ^c_n(g)`.
pub fn sigma1_equivariant(rep: &GammaRep, g: &SpinCElement, x: &Covector) -> Result<bool> {
    let r = rho_n_c(g)?;
    let u = g.spin.spinor_mat().scale(g.phase.value());
    let rx = Covector { x1: r.matrix().mul_vec(&x.x1), x2: r.matrix().mul_vec(&x.x2) };
    let zero = ComplexMatrix::zeros(u.rows(), u.cols());
    let uu = ComplexMatrix::from_blocks(&[vec![&u, &zero], vec![&zero, &u]]);
    Ok(&sigma1(rep, &rx)? * &u == &uu * &sigma1(rep, x)?)
}

/// Fiber dimensions `(s, 2s, 2s, s)` of `V_0, …, V_3`, `s = 2^⌊n/2⌋`.
pub fn fiber_dims(n: usize) -> [usize; 4] {
    let s = 1usize << (n / 2);
    [s, 2 * s, 2 * s, s]
}

/// Alternating sum `dim V_0 - dim V_1 + dim V_2 - dim V_3`.
pub fn symbol_index(n: usize) -> i64 {
    let d = fiber_dims(n).map(|x| x as i64);
    d[0] - d[1] + d[2] - d[3]
}

/// `(dim V_0 = dim V_3, dim V_1 = dim V_2)`, the pairing behind the
/// vanishing index.
pub fn dimension_pairings(n: usize) -> (bool, bool) {
    let d = fiber_dims(n);
    (d[0] == d[3], d[1] == d[2])
}

/// Highest weights, fiber dimensions and operator orders of the complex.
#[derive(Clone, Debug, PartialEq)]
pub struct WeightTable {
    pub n: usize,
    pub lambda: [[Rational; 2]; 4],
    pub fiber_dims: [usize; 4],
    pub orders: [usize; 3],
}

impl WeightTable {
    /// Weight `λ_k` as `[a,b]`, with halves written as fractions.
    pub fn format_weight(&self, k: usize) -> String {
        let [a, b] = &self.lambda[k];
        format!("[{a},{b}]")
    }
}

pub fn weight_table(n: usize) -> Result<WeightTable> {
    if n < 3 {
        return Err(Error::DimensionTooSmall { got: n, min: 3 });
    }
    let n = n as i64;
    let half = |a: i64, b: i64| [ratio(a, 2), ratio(b, 2)];
    Ok(WeightTable {
        n: n as usize,
        lambda: [half(n - 1, n - 1), half(n + 1, n - 1), half(n + 3, n + 1), half(n + 3, n + 3)],
        fiber_dims: fiber_dims(n as usize),
        orders: [1, 2, 1],
    })
}

/// Convenience: the covector `(x1, x2)` over the integers.
pub fn int_covector(x1: &[i64], x2: &[i64]) -> Result<Covector> {
    let r = |v: &[i64]| v.iter().map(|&a| ratio(a, 1)).collect();
    Covector::new(r(x1), r(x2))
}
