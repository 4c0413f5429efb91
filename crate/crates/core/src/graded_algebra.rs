//! The contact grading of `so(2, n+2)`.
//!
//! With respect to the basis `τ_1, τ_2, ε_1..ε_n, τ^1, τ^2` of `R^{n+4}` and
//! the form `h(τ_i, τ^j) = δ_ij`, `h(ε_α, ε_β) = δ_αβ`, an element is the
//! block matrix
//!
//! ```text
//! | A   Z^T   W    |
//! | X   B    -Z    |
//! | Y  -X^T  -A^T  |
//! ```
//!
//! with `B ∈ so(n)` and `Y, W` skew. The grading puts `Y` in degree -2, `X`
//! in -1, `(A, B)` in 0, `Z` in +1 and `W` in +2.

use std::fmt;

use num_traits::One;

use crate::error::{Error, Result};
use crate::matrix::RationalMatrix;
use crate::scalar::{rat, Rational};

/// Grade in `{-2, -1, 0, 1, 2}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GradeIndex(i8);

impl GradeIndex {
    pub const ALL: [GradeIndex; 5] = [GradeIndex(-2), GradeIndex(-1), GradeIndex(0), GradeIndex(1), GradeIndex(2)];

    pub fn new(i: i32) -> Option<Self> {
        (-2..=2).contains(&i).then_some(GradeIndex(i as i8))
    }

    pub fn value(self) -> i32 {
        self.0 as i32
    }
}

impl fmt::Display for GradeIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct GradedElement {
    n: usize,
    a: RationalMatrix,
    b: RationalMatrix,
    x: RationalMatrix,
    y: RationalMatrix,
    z: RationalMatrix,
    w: RationalMatrix,
}

/// Bundle of the six blocks, in the order `(A, B, X, Y, Z, W)`.
pub struct Blocks {
    pub a: RationalMatrix,
    pub b: RationalMatrix,
    pub x: RationalMatrix,
    pub y: RationalMatrix,
    pub z: RationalMatrix,
    pub w: RationalMatrix,
}

impl GradedElement {
    pub fn new(n: usize, blocks: Blocks) -> Result<Self> {
        if n < 3 {
            return Err(Error::DimensionTooSmall { got: n, min: 3 });
        }
        let Blocks { a, b, x, y, z, w } = blocks;
        let shapes = [
            ("A", a.shape(), (2, 2)),
            ("B", b.shape(), (n, n)),
            ("X", x.shape(), (n, 2)),
            ("Y", y.shape(), (2, 2)),
            ("Z", z.shape(), (n, 2)),
            ("W", w.shape(), (2, 2)),
        ];
        for (name, got, want) in shapes {
            if got != want {
                return Err(Error::BlockStructure(format!("{name} has shape {got:?}, expected {want:?}")));
            }
        }
        for (name, m) in [("B", &b), ("Y", &y), ("W", &w)] {
            if !m.is_skew() {
                return Err(Error::BlockStructure(format!("{name} is not skew-symmetric")));
            }
        }
        Ok(Self { n, a, b, x, y, z, w })
    }

    pub fn zero(n: usize) -> Self {
        let sq = RationalMatrix::zeros(2, 2);
        let col = RationalMatrix::zeros(n, 2);
        Self { n, a: sq.clone(), b: RationalMatrix::zeros(n, n), x: col.clone(), y: sq.clone(), z: col, w: sq }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn a(&self) -> &RationalMatrix {
        &self.a
    }
    pub fn b(&self) -> &RationalMatrix {
        &self.b
    }
    pub fn x(&self) -> &RationalMatrix {
        &self.x
    }
    pub fn y(&self) -> &RationalMatrix {
        &self.y
    }
    pub fn z(&self) -> &RationalMatrix {
        &self.z
    }
    pub fn w(&self) -> &RationalMatrix {
        &self.w
    }

    pub fn is_zero(&self) -> bool {
        [&self.a, &self.b, &self.x, &self.y, &self.z, &self.w].iter().all(|m| m.is_zero())
    }

    /// Pure grade `-1` element with the given `X` block.
    pub fn from_x(x: RationalMatrix) -> Result<Self> {
        let n = x.rows();
        let mut e = Self::zero(n);
        if x.shape() != (n, 2) {
            return Err(Error::BlockStructure("X must be n x 2".into()));
        }
        e.x = x;
        Ok(e)
    }

    /// Pure grade `+1` element with the given `Z` block.
    pub fn from_z(z: RationalMatrix) -> Result<Self> {
        let n = z.rows();
        let mut e = Self::zero(n);
        if z.shape() != (n, 2) {
            return Err(Error::BlockStructure("Z must be n x 2".into()));
        }
        e.z = z;
        Ok(e)
    }

    /// Pure grade `0` element.
    pub fn from_levi(a: RationalMatrix, b: RationalMatrix) -> Result<Self> {
        let n = b.rows();
        Self::new(
            n,
            Blocks {
                a,
                b,
                x: RationalMatrix::zeros(n, 2),
                y: RationalMatrix::zeros(2, 2),
                z: RationalMatrix::zeros(n, 2),
                w: RationalMatrix::zeros(2, 2),
            },
        )
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.n, other.n);
        Self {
            n: self.n,
            a: &self.a + &other.a,
            b: &self.b + &other.b,
            x: &self.x + &other.x,
            y: &self.y + &other.y,
            z: &self.z + &other.z,
            w: &self.w + &other.w,
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self {
            n: self.n,
            a: self.a.scale(c),
            b: self.b.scale(c),
            x: self.x.scale(c),
            y: self.y.scale(c),
            z: self.z.scale(c),
            w: self.w.scale(c),
        }
    }

    /// Grades with a nonzero component.
    pub fn support(&self) -> Vec<GradeIndex> {
        GradeIndex::ALL.into_iter().filter(|&i| !grade_project(self, i).is_zero()).collect()
    }
}

/// The Gram matrix of `h` in the basis `τ_1, τ_2, ε_1..ε_n, τ^1, τ^2`.
pub fn form_matrix(n: usize) -> RationalMatrix {
    let mut h = RationalMatrix::zeros(n + 4, n + 4);
    h[(0, n + 2)] = Rational::one();
    h[(1, n + 3)] = Rational::one();
    h[(n + 2, 0)] = Rational::one();
    h[(n + 3, 1)] = Rational::one();
    for k in 0..n {
        h[(2 + k, 2 + k)] = Rational::one();
    }
    h
}

/// The `(n+4) x (n+4)` matrix of `e`.
pub fn assemble(e: &GradedElement) -> RationalMatrix {
    let zt = e.z.transpose();
    let neg_z = -&e.z;
    let neg_xt = -e.x.transpose();
    let neg_at = -e.a.transpose();
    RationalMatrix::from_blocks(&[
        vec![&e.a, &zt, &e.w],
        vec![&e.x, &e.b, &neg_z],
        vec![&e.y, &neg_xt, &neg_at],
    ])
}

/// Reads the blocks back from an assembled matrix, rejecting matrices that
/// are not of the block form.
pub fn disassemble(m: &RationalMatrix) -> Result<GradedElement> {
    let (r, c) = m.shape();
    if r != c || r < 7 {
        return Err(Error::BlockStructure(format!("matrix of shape {:?}", m.shape())));
    }
    let n = r - 4;
    let blocks = Blocks {
        a: m.block(0, 0, 2, 2),
        b: m.block(2, 2, n, n),
        x: m.block(2, 0, n, 2),
        y: m.block(n + 2, 0, 2, 2),
        z: -m.block(2, n + 2, n, 2),
        w: m.block(0, n + 2, 2, 2),
    };
    let e = GradedElement::new(n, blocks)?;
    if assemble(&e) != *m {
        return Err(Error::BlockStructure("mirrored blocks do not match".into()));
    }
    Ok(e)
}

/// Keeps the blocks of grade `i` and zeroes the rest.
pub fn grade_project(e: &GradedElement, i: GradeIndex) -> GradedElement {
    let mut out = GradedElement::zero(e.n);
    match i.0 {
        -2 => out.y = e.y.clone(),
        -1 => out.x = e.x.clone(),
        0 => {
            out.a = e.a.clone();
            out.b = e.b.clone();
        }
        1 => out.z = e.z.clone(),
        2 => out.w = e.w.clone(),
        _ => unreachable!("grade index out of range"),
    }
    out
}

/// Lie bracket, computed as the matrix commutator of the assembled forms.
pub fn bracket(e: &GradedElement, f: &GradedElement) -> Result<GradedElement> {
    if e.n != f.n {
        return Err(Error::LengthMismatch { expected: e.n, got: f.n });
    }
    disassemble(&assemble(e).commutator(&assemble(f)))
}

/// The `g_{-2}` block of `[X1, X2]` for grade `-1` elements:
/// `X2^T X1 - X1^T X2`.
pub fn levi_bracket(x1: &RationalMatrix, x2: &RationalMatrix) -> Result<RationalMatrix> {
    if x1.cols() != 2 || x1.shape() != x2.shape() {
        return Err(Error::BlockStructure(format!(
            "levi bracket of {:?} and {:?}",
            x1.shape(),
            x2.shape()
        )));
    }
    Ok(&(&x2.transpose() * x1) - &(&x1.transpose() * x2))
}

/// Standard basis `E_{α,j}` of `M_{n×2}`, ordered column-major (all of
/// column 1 first).
pub fn standard_x_basis(n: usize) -> Vec<RationalMatrix> {
    let mut out = Vec::with_capacity(2 * n);
    for j in 0..2 {
        for alpha in 0..n {
            let mut m = RationalMatrix::zeros(n, 2);
            m[(alpha, j)] = Rational::one();
            out.push(m);
        }
    }
    out
}

/// Gram matrix of the scalar form `(X1, X2) ↦ levi_bracket(X1, X2)_{12}`
/// in the given basis of `M_{n×2}`.
pub fn heisenberg_gram(n: usize, basis: &[RationalMatrix]) -> Result<RationalMatrix> {
    if basis.iter().any(|b| b.shape() != (n, 2)) {
        return Err(Error::BlockStructure("basis elements must be n x 2".into()));
    }
    let flat = RationalMatrix::from_fn(basis.len(), 2 * n, |k, idx| basis[k][(idx / 2, idx % 2)].clone());
    let rank = flat.rank();
    if basis.len() != 2 * n || rank < 2 * n {
        return Err(Error::NotSpanning { rank, expected: 2 * n });
    }
    let mut g = RationalMatrix::zeros(2 * n, 2 * n);
    for (i, bi) in basis.iter().enumerate() {
        for (j, bj) in basis.iter().enumerate() {
            g[(i, j)] = levi_bracket(bi, bj)?[(0, 1)].clone();
        }
    }
    Ok(g)
}

/// Canonical spanning set of `g_i` (one element per free matrix entry).
pub fn grade_basis(n: usize, i: GradeIndex) -> Vec<GradedElement> {
    let unit = |rows: usize, cols: usize, r: usize, c: usize| {
        let mut m = RationalMatrix::zeros(rows, cols);
        m[(r, c)] = Rational::one();
        m
    };
    let skew2 = || {
        let mut m = RationalMatrix::zeros(2, 2);
        m[(0, 1)] = Rational::one();
        m[(1, 0)] = -Rational::one();
        m
    };
    let mut out = Vec::new();
    match i.0 {
        -2 => {
            let mut e = GradedElement::zero(n);
            e.y = skew2();
            out.push(e);
        }
        -1 | 1 => {
            for alpha in 0..n {
                for j in 0..2 {
                    let mut e = GradedElement::zero(n);
                    if i.0 == -1 {
                        e.x = unit(n, 2, alpha, j);
                    } else {
                        e.z = unit(n, 2, alpha, j);
                    }
                    out.push(e);
                }
            }
        }
        0 => {
            for r in 0..2 {
                for c in 0..2 {
                    let mut e = GradedElement::zero(n);
                    e.a = unit(2, 2, r, c);
                    out.push(e);
                }
            }
            for p in 0..n {
                for q in p + 1..n {
                    let mut e = GradedElement::zero(n);
                    e.b = &unit(n, n, p, q) - &unit(n, n, q, p);
                    out.push(e);
                }
            }
        }
        2 => {
            let mut e = GradedElement::zero(n);
            e.w = skew2();
            out.push(e);
        }
        _ => unreachable!("grade index out of range"),
    }
    out
}

/// `tr(assemble(e) · assemble(f))`, the invariant pairing that puts `g_i`
/// in duality with `g_{-i}`.
pub fn trace_pairing(e: &GradedElement, f: &GradedElement) -> Rational {
    (&assemble(e) * &assemble(f)).trace()
}

/// Checks `g^T h g = h` and `det g = 1`; returns `g^{-1} = h g^T h`.
fn orthogonal_inverse(g: &RationalMatrix) -> Result<RationalMatrix> {
    let (r, c) = g.shape();
    if r != c || r < 7 {
        return Err(Error::NotInGroup(format!("shape {:?}", g.shape())));
    }
    let h = form_matrix(r - 4);
    if &(&g.transpose() * &h) * g != h {
        return Err(Error::NotInGroup("g does not preserve h".into()));
    }
    if !g.determinant().is_one() {
        return Err(Error::NotInGroup("det g != 1".into()));
    }
    Ok(&(&h * &g.transpose()) * &h)
}

fn adjoint_images(g: &RationalMatrix) -> Result<Vec<(GradeIndex, GradedElement)>> {
    let g_inv = orthogonal_inverse(g)?;
    let n = g.rows() - 4;
    let mut out = Vec::new();
    for i in GradeIndex::ALL {
        for e in grade_basis(n, i) {
            let ad = &(g * &assemble(&e)) * &g_inv;
            out.push((i, disassemble(&ad)?));
        }
    }
    Ok(out)
}

/// `Ad(g)` preserves the filtration `g^i = ⊕_{j ≥ i} g_j` for every `i`.
pub fn is_parabolic_member(g: &RationalMatrix) -> Result<bool> {
    Ok(adjoint_images(g)?
        .iter()
        .all(|(i, img)| img.support().iter().all(|j| j >= i)))
}

/// `Ad(g)` preserves every `g_i`.
pub fn is_levi_member(g: &RationalMatrix) -> Result<bool> {
    Ok(adjoint_images(g)?
        .iter()
        .all(|(i, img)| img.support().iter().all(|j| j == i)))
}

/// `exp(m)` for a nilpotent rational matrix, `None` if `m` is not nilpotent.
pub fn exp_nilpotent(m: &RationalMatrix) -> Option<RationalMatrix> {
    let d = m.rows();
    let mut out = RationalMatrix::identity(d);
    let mut term = RationalMatrix::identity(d);
    for k in 1..=d {
        term = (&term * m).scale(&(Rational::one() / rat(k as i64)));
        if term.is_zero() {
            return Some(out);
        }
        out = &out + &term;
    }
    (&term * m).is_zero().then_some(out)
}

/// Block-diagonal `diag(C, D, C^{-T})`, the Levi factor `GL(2) × SO(n)`.
pub fn levi_group_element(c: &RationalMatrix, d: &RationalMatrix) -> Result<RationalMatrix> {
    let c_inv = c.inverse().ok_or_else(|| Error::NotInGroup("C is singular".into()))?;
    let c_inv_t = c_inv.transpose();
    let n = d.rows();
    let z2n = RationalMatrix::zeros(2, n);
    let zn2 = RationalMatrix::zeros(n, 2);
    let z22 = RationalMatrix::zeros(2, 2);
    Ok(RationalMatrix::from_blocks(&[
        vec![c, &z2n, &z22],
        vec![&zn2, d, &zn2],
        vec![&z22, &z2n, &c_inv_t],
    ]))
}

/// Grade pairs `(i, j)` whose spanning-set brackets leak outside
/// `g_{i+j}`. Empty means `[g_i, g_j] ⊂ g_{i+j}` for all pairs.
pub fn grading_closure_violations(n: usize) -> Vec<(GradeIndex, GradeIndex)> {
    let mut bad = Vec::new();
    for i in GradeIndex::ALL {
        for j in GradeIndex::ALL {
            let target = GradeIndex::new(i.value() + j.value());
            let ok = grade_basis(n, i).iter().all(|e| {
                grade_basis(n, j).iter().all(|f| match bracket(e, f) {
                    Ok(br) => br.support().iter().all(|k| Some(*k) == target),
                    Err(_) => false,
                })
            });
            if !ok {
                bad.push((i, j));
            }
        }
    }
    bad
}
