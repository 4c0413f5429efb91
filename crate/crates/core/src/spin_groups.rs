//! `Spin(n)`, `Spin^c(n)` and the homomorphisms between them.
//!
//! A spin element is an even product of unit vectors inside the Clifford
//! algebra, stored through its action on the spinor module. Phases are exact
//! rational points of the unit circle; when a square root is needed (the
//! inverse isomorphisms of the stabilizer groups) the phase must carry an
//! exact root as a witness.

use std::fmt;
use std::sync::Arc;

use num_traits::{One, Zero};
use rand::Rng;

use crate::clifford::{clifford_mat, GammaRep};
use crate::error::{Error, Result};
use crate::matrix::{basis_vec, neg_vec, norm_sq, ComplexMatrix, RationalMatrix};
use crate::sampling::{circle_point, unit_vector};
use crate::scalar::{gauss, imag_unit, GaussianRational, Rational};

/// Exact unit complex number, optionally with a known square root.
#[derive(Clone, Debug)]
pub struct Phase {
    value: GaussianRational,
    root: Option<GaussianRational>,
}

impl PartialEq for Phase {
    fn eq(&self, other: &Self) -> bool {
        self.value == other.value
    }
}

impl Phase {
    pub fn new(c: Rational, d: Rational) -> Result<Self> {
        if !(&c * &c + &d * &d).is_one() {
            return Err(Error::NotUnitPhase);
        }
        Ok(Self { value: GaussianRational::new(c, d), root: None })
    }

    /// The phase `r²` with `r` recorded as its square root.
    pub fn from_root(r: Phase) -> Self {
        Self { value: r.value.clone() * r.value.clone(), root: Some(r.value) }
    }

    pub fn one() -> Self {
        Self { value: gauss(1, 0), root: Some(gauss(1, 0)) }
    }

    pub fn minus_one() -> Self {
        Self { value: gauss(-1, 0), root: Some(imag_unit()) }
    }

    pub fn i() -> Self {
        Self { value: imag_unit(), root: None }
    }

    pub fn value(&self) -> &GaussianRational {
        &self.value
    }

    pub fn root(&self) -> Option<Phase> {
        self.root.clone().map(|r| Phase { value: r, root: None })
    }

    pub fn is_one(&self) -> bool {
        self.value.is_one()
    }

    pub fn mul(&self, other: &Phase) -> Phase {
        let root = match (&self.root, &other.root) {
            (Some(a), Some(b)) => Some(a.clone() * b.clone()),
            _ => None,
        };
        Phase { value: self.value.clone() * other.value.clone(), root }
    }

    pub fn neg(&self) -> Phase {
        Phase { value: -self.value.clone(), root: self.root.clone().map(|r| r * imag_unit()) }
    }

    /// Inverse, which for a unit complex number is the conjugate.
    pub fn conj(&self) -> Phase {
        Phase { value: self.value.conj(), root: self.root.as_ref().map(|r| r.conj()) }
    }

    /// `p²`; the result remembers `p` as its root.
    pub fn square(&self) -> Phase {
        Phase::from_root(Phase { value: self.value.clone(), root: None })
    }

    /// The rotation matrix `[[c, -d], [d, c]]` of `c + di`.
    pub fn rotation_matrix(&self) -> RationalMatrix {
        let (c, d) = (self.value.re.clone(), self.value.im.clone());
        RationalMatrix::from_rows(vec![vec![c.clone(), -d.clone()], vec![d, c]])
    }

    pub fn random(rng: &mut impl Rng) -> Phase {
        let (c, d) = circle_point(rng);
        Phase { value: GaussianRational::new(c, d), root: None }
    }

    /// Random phase sampled as a square, so it carries a root.
    pub fn random_with_root(rng: &mut impl Rng) -> Phase {
        Phase::random(rng).square()
    }
}

impl fmt::Display for Phase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", crate::scalar::fmt_gauss(&self.value))
    }
}

/// Exact element of `SO(k)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalRotation {
    mat: RationalMatrix,
}

impl RationalRotation {
    pub fn new(mat: RationalMatrix) -> Result<Self> {
        if !mat.is_special_orthogonal() {
            return Err(Error::NotInGroup("matrix is not special orthogonal".into()));
        }
        Ok(Self { mat })
    }

    pub fn identity(k: usize) -> Self {
        Self { mat: RationalMatrix::identity(k) }
    }

    pub fn matrix(&self) -> &RationalMatrix {
        &self.mat
    }

    pub fn dim(&self) -> usize {
        self.mat.rows()
    }

    pub fn compose(&self, other: &Self) -> Self {
        Self { mat: &self.mat * &other.mat }
    }

    pub fn inverse(&self) -> Self {
        Self { mat: self.mat.transpose() }
    }

    pub fn is_identity(&self) -> bool {
        self.mat == RationalMatrix::identity(self.mat.rows())
    }
}

/// Element of `Spin(n)` given by a word of unit vectors.
#[derive(Clone)]
pub struct SpinElement {
    rep: Arc<GammaRep>,
    spinor_mat: ComplexMatrix,
    word: Vec<Vec<Rational>>,
}

impl PartialEq for SpinElement {
    fn eq(&self, other: &Self) -> bool {
        self.spinor_mat == other.spinor_mat
    }
}

impl fmt::Debug for SpinElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("SpinElement")
            .field("n", &self.rep.n())
            .field("word_len", &self.word.len())
            .field("spinor_mat", &self.spinor_mat)
            .finish()
    }
}

/// Product `v_1 · v_2 ⋯ v_{2k}` of unit vectors in the Clifford algebra.
pub fn spin_from_unit_vectors(rep: &Arc<GammaRep>, vs: &[Vec<Rational>]) -> Result<SpinElement> {
    if !vs.len().is_multiple_of(2) {
        return Err(Error::OddWord(vs.len()));
    }
    let mut mat = ComplexMatrix::identity(rep.spinor_dim());
    for v in vs {
        let m = clifford_mat(rep, v)?;
        let n2 = norm_sq(v);
        if !n2.is_one() {
            return Err(Error::NotUnit(n2.to_string()));
        }
        mat = &mat * &m;
    }
    Ok(SpinElement { rep: rep.clone(), spinor_mat: mat, word: vs.to_vec() })
}

impl SpinElement {
    pub fn identity(rep: &Arc<GammaRep>) -> Self {
        Self { rep: rep.clone(), spinor_mat: ComplexMatrix::identity(rep.spinor_dim()), word: Vec::new() }
    }

    /// The central element `-1 = e_1 · e_1`.
    pub fn minus_one(rep: &Arc<GammaRep>) -> Self {
        let e1 = basis_vec(rep.n(), 0);
        spin_from_unit_vectors(rep, &[e1.clone(), e1]).expect("e_1 is a unit vector")
    }

    /// Image of `c + di ∈ U(1) ≅ Spin(2)` acting on the first coordinate
    /// plane: `c + d γ_1 γ_2`, written as the word `(-(c e_1 + d e_2), e_1)`.
    pub fn from_plane_phase(rep: &Arc<GammaRep>, p: &Phase) -> Self {
        let n = rep.n();
        let mut w = vec![Rational::zero(); n];
        w[0] = -p.value().re.clone();
        w[1] = -p.value().im.clone();
        spin_from_unit_vectors(rep, &[w, basis_vec(n, 0)]).expect("phase is a unit vector")
    }

    /// Random word of length `2k`, `k ∈ {1, 2, 3}`.
    pub fn random(rep: &Arc<GammaRep>, rng: &mut impl Rng) -> Self {
        let k = rng.gen_range(1..=3);
        let word: Vec<Vec<Rational>> = (0..2 * k).map(|_| unit_vector(rng, rep.n())).collect();
        spin_from_unit_vectors(rep, &word).expect("sampled vectors are unit")
    }

    pub fn rep(&self) -> &Arc<GammaRep> {
        &self.rep
    }

    pub fn spinor_mat(&self) -> &ComplexMatrix {
        &self.spinor_mat
    }

    pub fn word(&self) -> &[Vec<Rational>] {
        &self.word
    }

    pub fn mul(&self, other: &SpinElement) -> SpinElement {
        let mut word = self.word.clone();
        word.extend(other.word.iter().cloned());
        SpinElement { rep: self.rep.clone(), spinor_mat: &self.spinor_mat * &other.spinor_mat, word }
    }

    /// `-a = (-1)·a`
    pub fn neg(&self) -> SpinElement {
        SpinElement::minus_one(&self.rep).mul(self)
    }

    /// Inverse via the reversed word: `v^{-1} = SIGN·v` for a unit vector and
    /// the signs cancel in pairs.
    pub fn inverse(&self) -> SpinElement {
        let word: Vec<Vec<Rational>> = self.word.iter().rev().cloned().collect();
        spin_from_unit_vectors(&self.rep, &word).expect("word of a valid element")
    }

    pub fn is_identity(&self) -> bool {
        self.spinor_mat == ComplexMatrix::identity(self.rep.spinor_dim())
    }

    /// `±1`
    pub fn is_central(&self) -> bool {
        let id = ComplexMatrix::identity(self.rep.spinor_dim());
        self.spinor_mat == id || self.spinor_mat == -id
    }

    pub fn act(&self, psi: &[GaussianRational]) -> Result<Vec<GaussianRational>> {
        let s = self.rep.spinor_dim();
        if psi.len() != s {
            return Err(Error::LengthMismatch { expected: s, got: psi.len() });
        }
        Ok(self.spinor_mat.mul_vec(psi))
    }
}

/// The covering map `Spin(n) → SO(n)`: column `α` of the result holds the
/// coefficients of `a γ_α a^{-1}` in the basis `γ_1, …, γ_n`.
pub fn rho_n(a: &SpinElement) -> Result<RationalRotation> {
    let rep = &a.rep;
    let inv = a.inverse();
    let mut cols = Vec::with_capacity(rep.n());
    for g in rep.gammas() {
        let conj = &(&a.spinor_mat * g) * &inv.spinor_mat;
        cols.push(rep.vector_part(&conj).ok_or(Error::LeftVectorSpan)?);
    }
    RationalRotation::new(RationalMatrix::from_columns(&cols)).map_err(|_| Error::LeftVectorSpan)
}

/// Class `⟨e^{it}, a⟩ ∈ Spin^c(n) = (U(1) × Spin(n)) / {±(1, 1)}`.
#[derive(Clone, Debug)]
pub struct SpinCElement {
    pub phase: Phase,
    pub spin: SpinElement,
}

impl SpinCElement {
    pub fn new(phase: Phase, spin: SpinElement) -> Self {
        Self { phase, spin }
    }

    pub fn identity(rep: &Arc<GammaRep>) -> Self {
        Self::new(Phase::one(), SpinElement::identity(rep))
    }

    pub fn mul(&self, other: &SpinCElement) -> SpinCElement {
        SpinCElement::new(self.phase.mul(&other.phase), self.spin.mul(&other.spin))
    }

    /// The representative `(-p, -a)` of the same class.
    pub fn flip(&self) -> SpinCElement {
        SpinCElement::new(self.phase.neg(), self.spin.neg())
    }

    pub fn random(rep: &Arc<GammaRep>, rng: &mut impl Rng) -> Self {
        Self::new(Phase::random_with_root(rng), SpinElement::random(rep, rng))
    }

    /// Membership in the `U(1)` subgroup `{⟨p, 1⟩}` (equivalently `⟨p, ±1⟩`).
    pub fn is_in_u1(&self) -> bool {
        self.spin.is_central()
    }

    /// Membership in the `Spin(n)` subgroup `{⟨1, a⟩}` (equivalently `⟨±1, a⟩`).
    pub fn is_in_spin(&self) -> bool {
        self.phase.is_one() || self.phase.neg().is_one()
    }
}

/// Equality of classes: `(p, a) ~ (q, b)` iff `p = q, a = b` or `p = -q, a = -b`.
pub fn spinc_equal(x: &SpinCElement, y: &SpinCElement) -> bool {
    (x.phase == y.phase && x.spin == y.spin) || (x.phase == y.phase.neg() && x.spin == y.spin.neg())
}

/// `ρ^c_n(⟨p, a⟩) = ρ_n(a)`
pub fn rho_n_c(x: &SpinCElement) -> Result<RationalRotation> {
    rho_n(&x.spin)
}

/// `ς_n(⟨p, a⟩) = ρ_2(p) = p²`
pub fn varsigma_n(x: &SpinCElement) -> Phase {
    x.phase.square()
}

/// `γ^c(⟨p, a⟩)ψ = p · γ(a)ψ`
pub fn gamma_c_act(x: &SpinCElement, psi: &[GaussianRational]) -> Result<Vec<GaussianRational>> {
    let p = x.phase.value().clone();
    Ok(x.spin.act(psi)?.into_iter().map(|z| p.clone() * z).collect())
}

/// Embedding `Spin^c(n) → Spin(n+2)`: the phase acts through
/// `U(1) ≅ Spin(2)` on coordinates 1, 2 and the spin part on coordinates
/// 3..n+2. The two factors commute and `(-p, -a)` maps to the same element.
pub fn iota_embed(x: &SpinCElement, big_rep: &Arc<GammaRep>) -> Result<SpinElement> {
    let n = x.spin.rep.n();
    if big_rep.n() != n + 2 {
        return Err(Error::LengthMismatch { expected: n + 2, got: big_rep.n() });
    }
    let shifted: Vec<Vec<Rational>> = x
        .spin
        .word
        .iter()
        .map(|v| {
            let mut w = vec![Rational::zero(), Rational::zero()];
            w.extend(v.iter().cloned());
            w
        })
        .collect();
    let circle = SpinElement::from_plane_phase(big_rep, &x.phase);
    Ok(circle.mul(&spin_from_unit_vectors(big_rep, &shifted)?))
}

/// `(ρ_2(p), ρ_n(a))` for `⟨p, a⟩`, the homomorphism onto `SO(2) × SO(n)`.
pub fn block_projection(x: &SpinCElement) -> Result<(RationalRotation, RationalRotation)> {
    Ok((RationalRotation { mat: x.phase.square().rotation_matrix() }, rho_n(&x.spin)?))
}

/// Class `⟨e^{it}, e^{is}, a⟩` in `U(1) × U(1) × Spin(n)` modulo the
/// subgroup generated by `(-1, -1, 1)` and `(-1, 1, -1)`.
#[derive(Clone, Debug)]
pub struct StabilizerClass {
    pub t: Phase,
    pub s: Phase,
    pub a: SpinElement,
}

impl StabilizerClass {
    pub fn new(t: Phase, s: Phase, a: SpinElement) -> Self {
        Self { t, s, a }
    }

    pub fn mul(&self, other: &Self) -> Self {
        Self::new(self.t.mul(&other.t), self.s.mul(&other.s), self.a.mul(&other.a))
    }

    /// Equality modulo `{(1,1,1), (-1,-1,1), (-1,1,-1), (1,-1,-1)}`.
    pub fn same_class(&self, other: &Self) -> bool {
        let signs = [(false, false, false), (true, true, false), (true, false, true), (false, true, true)];
        signs.iter().any(|&(nt, ns, na)| {
            let t = if nt { other.t.neg() } else { other.t.clone() };
            let s = if ns { other.s.neg() } else { other.s.clone() };
            let a = if na { other.a.neg() } else { other.a.clone() };
            self.t == t && self.s == s && self.a == a
        })
    }

    /// Whether `e^{it} = ±e^{is}`, the defining constraint of `H̃^♯`.
    pub fn in_hsharp(&self) -> bool {
        self.t == self.s || self.t == self.s.neg()
    }

    /// `(ρ_2(e^{is}), ρ_n(a))`
    pub fn project(&self) -> Result<(RationalRotation, RationalRotation)> {
        Ok((RationalRotation { mat: self.s.square().rotation_matrix() }, rho_n(&self.a)?))
    }
}

/// `H̃^♯ → SO(2) × Spin(n)`, `⟨e^{it}, e^{is}, a⟩ ↦ (ρ_2(e^{is}), e^{i(t-s)} a)`.
/// The `SO(2)` factor is returned as the phase `e^{2is}`, carrying `e^{is}`
/// as its root. Under the class constraint `e^{i(t-s)} = ±1`.
pub fn hsharp_forward(x: &StabilizerClass) -> Result<(Phase, SpinElement)> {
    let a = if x.t == x.s {
        x.a.clone()
    } else if x.t == x.s.neg() {
        x.a.neg()
    } else {
        return Err(Error::ClassConstraint("e^{it} must equal ±e^{is}".into()));
    };
    Ok((x.s.square(), a))
}

/// `SO(2) × Spin(n) → H̃^♯`, `(e^{is}, a) ↦ ⟨e^{is/2}, e^{is/2}, a⟩`.
pub fn hsharp_inverse(u: &Phase, a: &SpinElement) -> Result<StabilizerClass> {
    let r = u.root().ok_or(Error::NoHalfAngle)?;
    Ok(StabilizerClass::new(r.clone(), r, a.clone()))
}

/// `H^c → SO(2) × Spin^c(n)`,
/// `⟨e^{it}, e^{is}, a⟩ ↦ (ρ_2(e^{is}), ⟨e^{i(s-t)}, a⟩)`.
pub fn hc_forward(x: &StabilizerClass) -> (Phase, SpinCElement) {
    (x.s.square(), SpinCElement::new(x.s.mul(&x.t.conj()), x.a.clone()))
}

/// `SO(2) × Spin^c(n) → H^c`,
/// `(e^{iu}, ⟨e^{iv}, a⟩) ↦ ⟨e^{i(u/2 - v)}, e^{iu/2}, a⟩`.
pub fn hc_inverse(u: &Phase, x: &SpinCElement) -> Result<StabilizerClass> {
    let r = u.root().ok_or(Error::NoHalfAngle)?;
    Ok(StabilizerClass::new(r.mul(&x.phase.conj()), r, x.spin.clone()))
}

/// Equality in `SO(2) × Spin(n)`.
pub fn so2_spin_equal(x: &(Phase, SpinElement), y: &(Phase, SpinElement)) -> bool {
    x.0 == y.0 && x.1 == y.1
}

/// Equality in `SO(2) × Spin^c(n)`.
pub fn so2_spinc_equal(x: &(Phase, SpinCElement), y: &(Phase, SpinCElement)) -> bool {
    x.0 == y.0 && spinc_equal(&x.1, &y.1)
}

/// `-v`, used to build words such as `(v, -v)`.
pub fn negated(v: &[Rational]) -> Vec<Rational> {
    neg_vec(v)
}
