//! Complex spinor module of the Clifford algebra `Cl(n)`.
//!
//! Gamma matrices are built by tensor doubling from the 2-dimensional base
//! case. Every matrix is monomial with entries in `{0, ±1, ±i}`, so all
//! products stay exact and cheap.
//!
//! Convention: `γ_α γ_β + γ_β γ_α = 2·SIGN·δ_{αβ}·Id` with `SIGN = -1`, i.e.
//! `v·v·ψ = -|v|² ψ`.

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::matrix::ComplexMatrix;
use crate::scalar::{gauss, imag_unit, real, GaussianRational, Rational};

/// Sign in the Clifford relation `v·v = SIGN·|v|²`.
pub const SIGN: i64 = -1;

#[derive(Clone, Debug, PartialEq)]
pub struct GammaRep {
    n: usize,
    s: usize,
    gammas: Vec<ComplexMatrix>,
}

impl GammaRep {
    pub fn n(&self) -> usize {
        self.n
    }

    /// Spinor dimension `2^⌊n/2⌋`.
    pub fn spinor_dim(&self) -> usize {
        self.s
    }

    pub fn gammas(&self) -> &[ComplexMatrix] {
        &self.gammas
    }

    /// `γ_{k+1}` (0-based index).
    pub fn gamma(&self, k: usize) -> &ComplexMatrix {
        &self.gammas[k]
    }

    fn check_vector(&self, v: &[Rational]) -> Result<()> {
        if v.len() != self.n {
            return Err(Error::LengthMismatch { expected: self.n, got: v.len() });
        }
        Ok(())
    }

    fn check_spinor(&self, psi: &[GaussianRational]) -> Result<()> {
        if psi.len() != self.s {
            return Err(Error::LengthMismatch { expected: self.s, got: psi.len() });
        }
        Ok(())
    }

    /// Recovers `v` from a matrix of the form `Σ v_α γ_α` with real rational
    /// coefficients, or `None` if the matrix lies outside that span.
    pub fn vector_part(&self, m: &ComplexMatrix) -> Option<Vec<Rational>> {
        if m.shape() != (self.s, self.s) {
            return None;
        }
        // tr(γ_β γ_α) = SIGN·s·δ_{αβ}
        let norm = gauss(SIGN * self.s as i64, 0);
        let mut coeffs = Vec::with_capacity(self.n);
        for g in &self.gammas {
            let c = (g * m).trace() / norm.clone();
            if !c.im.is_zero() {
                return None;
            }
            coeffs.push(c.re);
        }
        (clifford_mat_unchecked(self, &coeffs) == *m).then_some(coeffs)
    }
}

/// Builds the gamma matrices of `Cl(n)` acting on `C^{2^⌊n/2⌋}`.
pub fn build_gamma_rep(n: usize) -> Result<GammaRep> {
    if n < 2 {
        return Err(Error::DimensionTooSmall { got: n, min: 2 });
    }
    let i = imag_unit();
    let o = GaussianRational::one();
    let z = GaussianRational::zero();
    let sigma1 = ComplexMatrix::from_rows(vec![vec![z.clone(), o.clone()], vec![o.clone(), z.clone()]]);
    let i_sigma1 = sigma1.scale(&i);
    // i·σ2
    let i_sigma2 = ComplexMatrix::from_rows(vec![vec![z.clone(), o.clone()], vec![-o.clone(), z.clone()]]);
    let sigma3 = ComplexMatrix::from_rows(vec![vec![o.clone(), z.clone()], vec![z, -o]]);

    let mut gammas = vec![i_sigma1.clone(), i_sigma2.clone()];
    while gammas.len() + 2 <= n {
        let d = gammas[0].rows();
        let id = ComplexMatrix::identity(d);
        let mut next: Vec<ComplexMatrix> = gammas.iter().map(|g| kron(&sigma3, g)).collect();
        next.push(kron(&i_sigma1, &id));
        next.push(kron(&i_sigma2, &id));
        gammas = next;
    }
    if n % 2 == 1 {
        gammas.push(chirality(&gammas));
    }
    let s = gammas[0].rows();
    debug_assert_eq!(s, 1 << (n / 2));
    Ok(GammaRep { n, s, gammas })
}

/// `c·γ_1⋯γ_m`, with the phase `c ∈ {1, i}` chosen so the result squares to
/// `SIGN·Id`. It anticommutes with every `γ_α` because `m` is even.
fn chirality(gammas: &[ComplexMatrix]) -> ComplexMatrix {
    let d = gammas[0].rows();
    let prod = gammas.iter().fold(ComplexMatrix::identity(d), |acc, g| &acc * g);
    let target = ComplexMatrix::scalar_identity(d, gauss(SIGN, 0));
    if &prod * &prod == target {
        prod
    } else {
        prod.scale(&imag_unit())
    }
}

fn kron(a: &ComplexMatrix, b: &ComplexMatrix) -> ComplexMatrix {
    let (ar, ac) = a.shape();
    let (br, bc) = b.shape();
    ComplexMatrix::from_fn(ar * br, ac * bc, |i, j| {
        a[(i / br, j / bc)].clone() * b[(i % br, j % bc)].clone()
    })
}

fn clifford_mat_unchecked(rep: &GammaRep, v: &[Rational]) -> ComplexMatrix {
    let mut out = ComplexMatrix::zeros(rep.s, rep.s);
    for (c, g) in v.iter().zip(&rep.gammas) {
        if c.is_zero() {
            continue;
        }
        out = &out + &g.scale(&real(c.clone()));
    }
    out
}

/// Clifford multiplication by `v` as a matrix: `Σ_α v_α γ_α`.
pub fn clifford_mat(rep: &GammaRep, v: &[Rational]) -> Result<ComplexMatrix> {
    rep.check_vector(v)?;
    Ok(clifford_mat_unchecked(rep, v))
}

/// `v.ψ`
pub fn clifford_act(rep: &GammaRep, v: &[Rational], psi: &[GaussianRational]) -> Result<Vec<GaussianRational>> {
    rep.check_spinor(psi)?;
    Ok(clifford_mat(rep, v)?.mul_vec(psi))
}
