//! The flat 2-Dirac operator on `R^{2n} = R^2 ⊗ R^n`.
//!
//! Coordinates are `x_{iα}` with `i ∈ {1, 2}`, `α ∈ {1..n}`, stored at
//! variable index `(i-1)·n + (α-1)`. Fields are polynomials with spinor
//! coefficients, so the operator
//!
//! ```text
//! D ψ = ( Σ_α γ_α ∂_{1α} ψ,  Σ_α γ_α ∂_{2α} ψ )
//! ```
//!
//! is evaluated by exact differentiation.

use std::collections::BTreeMap;

use num_traits::{One, Zero};

use crate::clifford::GammaRep;
use crate::error::{Error, Result};
use crate::matrix::ComplexMatrix;
use crate::scalar::{real, GaussianRational, Rational};
use crate::symbol_complex::{sigma1, Covector};

type Exponents = Vec<u32>;

/// Scalar polynomial in the `2n` coordinates.
#[derive(Clone, Debug, PartialEq, Default)]
pub struct Polynomial {
    vars: usize,
    terms: BTreeMap<Exponents, Rational>,
}

impl Polynomial {
    pub fn zero(vars: usize) -> Self {
        Self { vars, terms: BTreeMap::new() }
    }

    pub fn one(vars: usize) -> Self {
        let mut p = Self::zero(vars);
        p.terms.insert(vec![0; vars], Rational::one());
        p
    }

    /// `⟨x, ξ⟩ = Σ ξ_{iα} x_{iα}`
    pub fn linear_form(xi: &Covector) -> Self {
        let n = xi.n();
        let mut p = Self::zero(2 * n);
        for (k, c) in xi.x1().iter().chain(xi.x2()).enumerate() {
            if !c.is_zero() {
                let mut e = vec![0; 2 * n];
                e[k] = 1;
                p.terms.insert(e, c.clone());
            }
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.vars, other.vars);
        let mut out = Self::zero(self.vars);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let e: Exponents = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                let entry = out.terms.entry(e).or_insert_with(Rational::zero);
                *entry += ca * cb;
            }
        }
        out.terms.retain(|_, c| !c.is_zero());
        out
    }

    pub fn pow(&self, k: u32) -> Self {
        (0..k).fold(Self::one(self.vars), |acc, _| acc.mul(self))
    }
}

/// Polynomial map `R^{2n} → C^s`.
#[derive(Clone, Debug, PartialEq)]
pub struct PolySpinorField {
    n: usize,
    s: usize,
    coeffs: BTreeMap<Exponents, Vec<GaussianRational>>,
}

impl PolySpinorField {
    pub fn zero(n: usize, s: usize) -> Self {
        Self { n, s, coeffs: BTreeMap::new() }
    }

    pub fn constant(n: usize, psi: Vec<GaussianRational>) -> Self {
        Self::monomial(n, vec![0; 2 * n], psi).expect("arity matches")
    }

    pub fn monomial(n: usize, exponents: Vec<u32>, psi: Vec<GaussianRational>) -> Result<Self> {
        if exponents.len() != 2 * n {
            return Err(Error::LengthMismatch { expected: 2 * n, got: exponents.len() });
        }
        let mut f = Self::zero(n, psi.len());
        f.add_term(exponents, psi);
        Ok(f)
    }

    /// `p(x) ψ`
    pub fn from_polynomial(n: usize, p: &Polynomial, psi: &[GaussianRational]) -> Result<Self> {
        if p.vars != 2 * n {
            return Err(Error::LengthMismatch { expected: 2 * n, got: p.vars });
        }
        let mut f = Self::zero(n, psi.len());
        for (e, c) in &p.terms {
            let c = real(c.clone());
            f.add_term(e.clone(), psi.iter().map(|z| c.clone() * z.clone()).collect());
        }
        Ok(f)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn spinor_dim(&self) -> usize {
        self.s
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[u32], &[GaussianRational])> {
        self.coeffs.iter().map(|(e, c)| (e.as_slice(), c.as_slice()))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Total degrees of the nonzero terms, or `None` for the zero field.
    pub fn degree_range(&self) -> Option<(u32, u32)> {
        let degs = self.coeffs.keys().map(|e| e.iter().sum::<u32>());
        degs.fold(None, |acc, d| match acc {
            None => Some((d, d)),
            Some((lo, hi)) => Some((lo.min(d), hi.max(d))),
        })
    }

    fn add_term(&mut self, e: Exponents, c: Vec<GaussianRational>) {
        assert_eq!(c.len(), self.s);
        let entry = self.coeffs.entry(e.clone()).or_insert_with(|| vec![GaussianRational::zero(); c.len()]);
        for (a, b) in entry.iter_mut().zip(c) {
            *a += b;
        }
        if entry.iter().all(Zero::is_zero) {
            self.coeffs.remove(&e);
        }
    }

    fn check_compatible(&self, other: &Self) -> Result<()> {
        if self.n != other.n {
            return Err(Error::LengthMismatch { expected: self.n, got: other.n });
        }
        if self.s != other.s {
            return Err(Error::LengthMismatch { expected: self.s, got: other.s });
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        let mut out = self.clone();
        for (e, c) in &other.coeffs {
            out.add_term(e.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn scale(&self, c: &GaussianRational) -> Self {
        let mut out = Self::zero(self.n, self.s);
        for (e, v) in &self.coeffs {
            out.add_term(e.clone(), v.iter().map(|z| c.clone() * z.clone()).collect());
        }
        out
    }

    /// `∂ f / ∂ x_{var}`
    pub fn partial(&self, var: usize) -> Self {
        let mut out = Self::zero(self.n, self.s);
        for (e, v) in &self.coeffs {
            if e[var] == 0 {
                continue;
            }
            let k = real(Rational::from_integer(e[var].into()));
            let mut d = e.clone();
            d[var] -= 1;
            out.add_term(d, v.iter().map(|z| k.clone() * z.clone()).collect());
        }
        out
    }

    /// Pointwise `M f` for a constant `s x s` matrix.
    pub fn apply_matrix(&self, m: &ComplexMatrix) -> Self {
        let mut out = Self::zero(self.n, m.rows());
        for (e, v) in &self.coeffs {
            out.add_term(e.clone(), m.mul_vec(v));
        }
        out
    }
}

/// The two components of `D f`.
#[derive(Clone, Debug, PartialEq)]
pub struct PairField {
    pub p1: PolySpinorField,
    pub p2: PolySpinorField,
}

impl PairField {
    pub fn is_zero(&self) -> bool {
        self.p1.is_zero() && self.p2.is_zero()
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        Ok(Self { p1: self.p1.add(&other.p1)?, p2: self.p2.add(&other.p2)? })
    }

    pub fn scale(&self, c: &GaussianRational) -> Self {
        Self { p1: self.p1.scale(c), p2: self.p2.scale(c) }
    }
}

/// `p_i = Σ_α γ_α ∂_{iα} f`
pub fn apply_flat_2dirac(rep: &GammaRep, f: &PolySpinorField) -> Result<PairField> {
    let n = rep.n();
    if f.n != n {
        return Err(Error::LengthMismatch { expected: n, got: f.n });
    }
    if f.s != rep.spinor_dim() {
        return Err(Error::LengthMismatch { expected: rep.spinor_dim(), got: f.s });
    }
    let component = |i: usize| {
        (0..n).fold(PolySpinorField::zero(n, f.s), |acc, alpha| {
            let term = f.partial(i * n + alpha).apply_matrix(rep.gamma(alpha));
            acc.add(&term).expect("same shape")
        })
    };
    Ok(PairField { p1: component(0), p2: component(1) })
}

/// Checks `D(⟨x,ξ⟩^k ψ_0) = k ⟨x,ξ⟩^{k-1} (X_1.ψ_0, X_2.ψ_0)`, tying the
/// operator to its principal symbol.
pub fn symbol_cross_check(rep: &GammaRep, xi: &Covector, k: u32, psi0: &[GaussianRational]) -> Result<bool> {
    if xi.is_zero() {
        return Err(Error::ZeroCovector);
    }
    if k == 0 {
        return Err(Error::ZeroDegree);
    }
    let s = rep.spinor_dim();
    if psi0.len() != s {
        return Err(Error::LengthMismatch { expected: s, got: psi0.len() });
    }
    let n = rep.n();
    let l = Polynomial::linear_form(xi);
    let lhs = apply_flat_2dirac(rep, &PolySpinorField::from_polynomial(n, &l.pow(k), psi0)?)?;

    let stacked = sigma1(rep, xi)?.mul_vec(psi0);
    let factor = l.pow(k - 1);
    let kk = real(Rational::from_integer(k.into()));
    let rhs = PairField {
        p1: PolySpinorField::from_polynomial(n, &factor, &stacked[..s])?.scale(&kk),
        p2: PolySpinorField::from_polynomial(n, &factor, &stacked[s..])?.scale(&kk),
    };
    Ok(lhs == rhs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::clifford::build_gamma_rep;
    use crate::scalar::{gauss, rat};
    use crate::symbol_complex::int_covector;

    fn basis_spinor(s: usize, k: usize) -> Vec<GaussianRational> {
        (0..s).map(|j| gauss((j == k) as i64, 0)).collect()
    }

    #[test]
    fn constants_are_annihilated() {
        let rep = build_gamma_rep(3).unwrap();
        let f = PolySpinorField::constant(3, vec![gauss(1, 2), gauss(0, -1)]);
        assert!(apply_flat_2dirac(&rep, &f).unwrap().is_zero());
    }

    #[test]
    fn single_variable() {
        let rep = build_gamma_rep(3).unwrap();
        let psi = vec![gauss(2, 0), gauss(0, 1)];
        let f = PolySpinorField::monomial(3, vec![1, 0, 0, 0, 0, 0], psi.clone()).unwrap();
        let d = apply_flat_2dirac(&rep, &f).unwrap();
        assert_eq!(d.p1, PolySpinorField::constant(3, rep.gamma(0).mul_vec(&psi)));
        assert!(d.p2.is_zero());
    }

    #[test]
    fn cross_check_examples() {
        let rep = build_gamma_rep(3).unwrap();
        let psi = basis_spinor(2, 0);
        let xi = int_covector(&[1, 0, 0], &[0, 1, 0]).unwrap();
        assert!(symbol_cross_check(&rep, &xi, 1, &psi).unwrap());
        let xi = int_covector(&[0, 1, 0], &[0, 0, 0]).unwrap();
        assert!(symbol_cross_check(&rep, &xi, 4, &basis_spinor(2, 1)).unwrap());
        let xi = int_covector(&[2, -1, 3], &[0, 5, -2]).unwrap();
        assert!(symbol_cross_check(&rep, &xi, 3, &[gauss(1, 1), gauss(-2, 0)]).unwrap());
        assert_eq!(symbol_cross_check(&rep, &Covector::zero(3), 1, &psi), Err(Error::ZeroCovector));
        assert_eq!(symbol_cross_check(&rep, &xi, 0, &psi), Err(Error::ZeroDegree));
    }

    #[test]
    fn lowers_degree_by_one() {
        let rep = build_gamma_rep(4).unwrap();
        let xi = int_covector(&[1, 2, 0, -1], &[3, 0, 1, 1]).unwrap();
        let f = PolySpinorField::from_polynomial(4, &Polynomial::linear_form(&xi).pow(3), &basis_spinor(4, 2)).unwrap();
        assert_eq!(f.degree_range(), Some((3, 3)));
        let d = apply_flat_2dirac(&rep, &f).unwrap();
        assert_eq!(d.p1.degree_range(), Some((2, 2)));
        assert_eq!(d.p2.degree_range(), Some((2, 2)));
    }

    #[test]
    fn linearity() {
        let rep = build_gamma_rep(3).unwrap();
        let f = PolySpinorField::monomial(3, vec![2, 0, 1, 0, 1, 0], vec![gauss(1, 0), gauss(0, 3)]).unwrap();
        let g = PolySpinorField::monomial(3, vec![0, 1, 1, 1, 0, 0], vec![gauss(-1, 1), gauss(2, 0)]).unwrap();
        let (a, b) = (gauss(2, -1), real(rat(3)));
        let combo = f.scale(&a).add(&g.scale(&b)).unwrap();
        let lhs = apply_flat_2dirac(&rep, &combo).unwrap();
        let rhs = apply_flat_2dirac(&rep, &f).unwrap().scale(&a).add(&apply_flat_2dirac(&rep, &g).unwrap().scale(&b)).unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn arity_mismatch() {
        let rep = build_gamma_rep(4).unwrap();
        let f = PolySpinorField::constant(3, basis_spinor(2, 0));
        assert!(apply_flat_2dirac(&rep, &f).is_err());
        assert!(PolySpinorField::monomial(3, vec![1, 0], basis_spinor(2, 0)).is_err());
    }
}
