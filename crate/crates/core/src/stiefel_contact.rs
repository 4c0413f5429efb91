//! Contact geometry of the Stiefel variety `V_2(R^{n+2})`.
//!
//! A point is an orthonormal 2-frame `(v1, v2)`; a tangent vector is a pair
//! `(w1, w2)` satisfying the linearized orthonormality constraints. The
//! contact form is `α(w1, w2) = -⟨w1, v2⟩`, normalized so that the generator
//! of the in-plane rotation `(v1|v2) ↦ (v1|v2)·A(-t)` has `α = 1`.

use num_traits::{One, Zero};
use rand::Rng;

use crate::error::{Error, Result};
use crate::matrix::{add_vec, dot, neg_vec, norm_sq, outer, scale_vec, RationalMatrix};
use crate::sampling::{complete_frame, rotation};
use crate::scalar::Rational;
use crate::spin_groups::{Phase, RationalRotation};

/// Orthonormal 2-frame in `R^m`, `m = n + 2`.
#[derive(Clone, Debug, PartialEq)]
pub struct Frame2 {
    v1: Vec<Rational>,
    v2: Vec<Rational>,
}

impl Frame2 {
    pub fn new(v1: Vec<Rational>, v2: Vec<Rational>) -> Result<Self> {
        if v1.len() != v2.len() {
            return Err(Error::LengthMismatch { expected: v1.len(), got: v2.len() });
        }
        if v1.len() < 2 {
            return Err(Error::DimensionTooSmall { got: v1.len(), min: 2 });
        }
        if !norm_sq(&v1).is_one() || !norm_sq(&v2).is_one() || !dot(&v1, &v2).is_zero() {
            return Err(Error::InvalidFrame("vectors are not orthonormal".into()));
        }
        Ok(Self { v1, v2 })
    }

    /// The origin `(e_1, e_2)` of `V_2(R^m)`.
    pub fn standard(m: usize) -> Self {
        let e = |k| crate::matrix::basis_vec(m, k);
        Self { v1: e(0), v2: e(1) }
    }

    /// First two columns of a random rational rotation of `R^m`.
    pub fn random(rng: &mut impl Rng, m: usize) -> Self {
        let b = rotation(rng, m);
        Self { v1: b.column(0), v2: b.column(1) }
    }

    pub fn v1(&self) -> &[Rational] {
        &self.v1
    }

    pub fn v2(&self) -> &[Rational] {
        &self.v2
    }

    /// Ambient dimension `n + 2`.
    pub fn ambient_dim(&self) -> usize {
        self.v1.len()
    }

    /// The `m x 2` matrix `(v1 | v2)`.
    pub fn matrix(&self) -> RationalMatrix {
        RationalMatrix::from_columns(&[self.v1.clone(), self.v2.clone()])
    }

    /// Rational orthonormal basis `u_1..u_n` of `[v1, v2]^⊥`.
    pub fn complement_basis(&self) -> Vec<Vec<Rational>> {
        let b = complete_frame(&self.v1, &self.v2);
        (2..self.ambient_dim()).map(|k| b.column(k)).collect()
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct StiefelTangent {
    base: Frame2,
    w1: Vec<Rational>,
    w2: Vec<Rational>,
}

impl StiefelTangent {
    pub fn new(base: Frame2, w1: Vec<Rational>, w2: Vec<Rational>) -> Result<Self> {
        let m = base.ambient_dim();
        for w in [&w1, &w2] {
            if w.len() != m {
                return Err(Error::LengthMismatch { expected: m, got: w.len() });
            }
        }
        if !dot(&w1, &base.v1).is_zero() || !dot(&w2, &base.v2).is_zero() {
            return Err(Error::InvalidTangent("w_i is not orthogonal to v_i".into()));
        }
        if !(dot(&w1, &base.v2) + dot(&base.v1, &w2)).is_zero() {
            return Err(Error::InvalidTangent("⟨w1, v2⟩ + ⟨v1, w2⟩ != 0".into()));
        }
        Ok(Self { base, w1, w2 })
    }

    pub fn base(&self) -> &Frame2 {
        &self.base
    }

    pub fn w1(&self) -> &[Rational] {
        &self.w1
    }

    pub fn w2(&self) -> &[Rational] {
        &self.w2
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        if self.base != other.base {
            return Err(Error::InvalidTangent("tangents at different frames".into()));
        }
        Ok(Self { base: self.base.clone(), w1: add_vec(&self.w1, &other.w1), w2: add_vec(&self.w2, &other.w2) })
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self { base: self.base.clone(), w1: scale_vec(c, &self.w1), w2: scale_vec(c, &self.w2) }
    }

    /// Both components orthogonal to `[v1, v2]`.
    pub fn is_horizontal(&self) -> bool {
        let (v1, v2) = (&self.base.v1, &self.base.v2);
        [&self.w1, &self.w2].iter().all(|w| dot(w, v1).is_zero() && dot(w, v2).is_zero())
    }

    /// Horizontal tangent with coordinates `x` (`n x 2`) in the orthonormal
    /// basis `u` of `[v1, v2]^⊥`: `w_j = Σ_α x[α][j] u_α`.
    pub fn from_coordinates(base: &Frame2, u: &[Vec<Rational>], x: &RationalMatrix) -> Result<Self> {
        let m = base.ambient_dim();
        if x.shape() != (u.len(), 2) {
            return Err(Error::LengthMismatch { expected: u.len(), got: x.rows() });
        }
        let mut w = [vec![Rational::zero(); m], vec![Rational::zero(); m]];
        for (alpha, ua) in u.iter().enumerate() {
            for (j, wj) in w.iter_mut().enumerate() {
                *wj = add_vec(wj, &scale_vec(&x[(alpha, j)], ua));
            }
        }
        let [w1, w2] = w;
        Self::new(base.clone(), w1, w2)
    }

    /// Inverse of [`StiefelTangent::from_coordinates`].
    pub fn coordinates(&self, u: &[Vec<Rational>]) -> RationalMatrix {
        RationalMatrix::from_fn(u.len(), 2, |alpha, j| {
            let w = if j == 0 { &self.w1 } else { &self.w2 };
            dot(w, &u[alpha])
        })
    }
}

/// Point of `G_2^+(R^m)`: orthogonal projector plus orientation 2-form
/// `v1 v2^T - v2 v1^T`.
#[derive(Clone, Debug, PartialEq)]
pub struct OrientedPlane {
    projector: RationalMatrix,
    orientation: RationalMatrix,
}

impl OrientedPlane {
    pub fn projector(&self) -> &RationalMatrix {
        &self.projector
    }

    pub fn orientation(&self) -> &RationalMatrix {
        &self.orientation
    }

    /// Image under `B ∈ SO(m)`.
    pub fn transform(&self, b: &RationalRotation) -> OrientedPlane {
        let bm = b.matrix();
        let bt = bm.transpose();
        OrientedPlane {
            projector: &(bm * &self.projector) * &bt,
            orientation: &(bm * &self.orientation) * &bt,
        }
    }

    /// Symmetric idempotent of trace 2 whose image carries the orientation.
    pub fn is_valid(&self) -> bool {
        let p = &self.projector;
        p.is_symmetric()
            && &(p * p) == p
            && p.trace() == Rational::from_integer(2.into())
            && p * &self.orientation == self.orientation
            && self.orientation.is_skew()
            && self.orientation.rank() == 2
    }
}

/// The symmetric form of signature `(2, m)` in the basis `f1, f2, e_1..e_m`.
pub fn isotropic_form(m: usize) -> RationalMatrix {
    RationalMatrix::from_fn(m + 2, m + 2, |i, j| match (i == j, i < 2) {
        (false, _) => Rational::zero(),
        (true, true) => -Rational::one(),
        (true, false) => Rational::one(),
    })
}

/// `h(x, y)` for the form of [`isotropic_form`].
pub fn h_form(x: &[Rational], y: &[Rational]) -> Rational {
    assert_eq!(x.len(), y.len());
    -(&x[0] * &y[0]) - &x[1] * &y[1] + dot(&x[2..], &y[2..])
}

/// Totally isotropic plane `[f1 + v1, f2 + v2]` of the frame.
pub fn frame_to_isotropic(f: &Frame2) -> (Vec<Rational>, Vec<Rational>) {
    let lift = |k: usize, v: &[Rational]| {
        let mut out = vec![Rational::zero(), Rational::zero()];
        out[k] = Rational::one();
        out.extend(v.iter().cloned());
        out
    };
    (lift(0, &f.v1), lift(1, &f.v2))
}

/// Recovers the frame from any basis of a totally isotropic plane by
/// normalizing the `f`-components to `f1, f2`.
pub fn isotropic_to_frame(b1: &[Rational], b2: &[Rational]) -> Result<Frame2> {
    if b1.len() != b2.len() || b1.len() < 4 {
        return Err(Error::LengthMismatch { expected: b1.len(), got: b2.len() });
    }
    for (x, y) in [(b1, b1), (b1, b2), (b2, b2)] {
        if !h_form(x, y).is_zero() {
            return Err(Error::InvalidFrame("plane is not totally isotropic".into()));
        }
    }
    let basis = RationalMatrix::from_columns(&[b1.to_vec(), b2.to_vec()]);
    let f_part = basis.block(0, 0, 2, 2);
    let inv = f_part
        .inverse()
        .ok_or_else(|| Error::InvalidFrame("plane meets R^m nontrivially".into()))?;
    let normalized = &basis * &inv;
    let m = b1.len() - 2;
    Frame2::new(normalized.block(2, 0, m, 1).column(0), normalized.block(2, 1, m, 1).column(0))
}

/// `(A, B).(v1|v2) = B (v1|v2) A^{-1}`.
pub fn ksharp_act(a: &RationalRotation, b: &RationalRotation, f: &Frame2) -> Result<Frame2> {
    if a.dim() != 2 {
        return Err(Error::NotInGroup(format!("A must lie in SO(2), got dimension {}", a.dim())));
    }
    if b.dim() != f.ambient_dim() {
        return Err(Error::LengthMismatch { expected: f.ambient_dim(), got: b.dim() });
    }
    let moved = &(b.matrix() * &f.matrix()) * &a.matrix().transpose();
    Frame2::new(moved.column(0), moved.column(1))
}

/// Action of the center `Z(K^♯) = SO(2)`: `(v1|v2) ↦ (v1|v2) R(θ)^{-1}`.
pub fn center_rotate(f: &Frame2, p: &Phase) -> Result<Frame2> {
    let a = RationalRotation::new(p.rotation_matrix())?;
    ksharp_act(&a, &RationalRotation::identity(f.ambient_dim()), f)
}

/// `α(w1, w2) = -⟨w1, v2⟩`
pub fn contact_alpha(t: &StiefelTangent) -> Rational {
    -dot(&t.w1, &t.base.v2)
}

/// Generator of the center action, `(w1, w2) = (-v2, v1)`.
pub fn reeb_field(f: &Frame2) -> StiefelTangent {
    StiefelTangent { base: f.clone(), w1: neg_vec(&f.v2), w2: f.v1.clone() }
}

/// `⟨t2.w1, t1.w2⟩ - ⟨t1.w1, t2.w2⟩` on the contact distribution.
pub fn levi_form_h(t1: &StiefelTangent, t2: &StiefelTangent) -> Result<Rational> {
    if t1.base != t2.base {
        return Err(Error::InvalidTangent("tangents at different frames".into()));
    }
    if !contact_alpha(t1).is_zero() || !contact_alpha(t2).is_zero() {
        return Err(Error::NotHorizontal);
    }
    Ok(dot(&t2.w1, &t1.w2) - dot(&t1.w1, &t2.w2))
}

/// `q(v1, v2) = [v1, v2]^+`
pub fn quotient_q(f: &Frame2) -> OrientedPlane {
    OrientedPlane {
        projector: &outer(&f.v1, &f.v1) + &outer(&f.v2, &f.v2),
        orientation: &outer(&f.v1, &f.v2) - &outer(&f.v2, &f.v1),
    }
}

/// Rows are the linear functionals on `(w1, w2) ∈ R^{2m}` cutting out the
/// tangent space, followed by `α`.
fn tangent_constraints(f: &Frame2) -> RationalMatrix {
    let m = f.ambient_dim();
    let z = vec![Rational::zero(); m];
    let cat = |a: &[Rational], b: &[Rational]| {
        let mut r = a.to_vec();
        r.extend(b.iter().cloned());
        r
    };
    RationalMatrix::from_rows(vec![
        cat(&f.v1, &z),
        cat(&z, &f.v2),
        cat(&f.v2, &f.v1),
        cat(&neg_vec(&f.v2), &z),
    ])
}

/// `dim T_f V_2 = 2m - 3` and `dim ker α = 2m - 4 = 2n`.
pub fn tangent_and_kernel_dims(f: &Frame2) -> (usize, usize) {
    let c = tangent_constraints(f);
    let m2 = 2 * f.ambient_dim();
    (m2 - c.block(0, 0, 3, m2).rank(), m2 - c.rank())
}

/// Basis `(u_α, 0), (0, u_α)` of the contact distribution at `f`.
pub fn horizontal_basis(f: &Frame2) -> Vec<StiefelTangent> {
    let u = f.complement_basis();
    let z = vec![Rational::zero(); f.ambient_dim()];
    let mut out: Vec<StiefelTangent> = u
        .iter()
        .map(|ua| StiefelTangent { base: f.clone(), w1: ua.clone(), w2: z.clone() })
        .collect();
    out.extend(u.iter().map(|ua| StiefelTangent { base: f.clone(), w1: z.clone(), w2: ua.clone() }));
    out
}

/// Matrix of [`levi_form_h`] in [`horizontal_basis`].
pub fn levi_form_matrix(f: &Frame2) -> RationalMatrix {
    let basis = horizontal_basis(f);
    RationalMatrix::from_fn(basis.len(), basis.len(), |i, j| {
        levi_form_h(&basis[i], &basis[j]).expect("horizontal basis")
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::basis_vec;
    use crate::sampling::sample_rng;
    use crate::scalar::{rat, ratio};

    #[test]
    fn frame_validation() {
        assert!(Frame2::new(basis_vec(4, 0), basis_vec(4, 0)).is_err());
        assert!(Frame2::new(basis_vec(4, 0), basis_vec(3, 1)).is_err());
        assert!(Frame2::new(basis_vec(4, 0), vec![rat(0), rat(2), rat(0), rat(0)]).is_err());
    }

    #[test]
    fn origin_maps_to_standard_isotropic_plane() {
        let (a, b) = frame_to_isotropic(&Frame2::standard(5));
        assert_eq!(a, vec![rat(1), rat(0), rat(1), rat(0), rat(0), rat(0), rat(0)]);
        assert_eq!(b, vec![rat(0), rat(1), rat(0), rat(1), rat(0), rat(0), rat(0)]);
        assert!(h_form(&a, &a).is_zero());
        assert!(h_form(&a, &b).is_zero());
        assert_eq!(isotropic_form(3), RationalMatrix::from_fn(5, 5, |i, j| {
            if i != j { rat(0) } else if i < 2 { rat(-1) } else { rat(1) }
        }));
    }

    #[test]
    fn stabilizer_of_origin() {
        // (A, diag(A, D)) fixes (e1, e2)
        let p = Phase::new(ratio(3, 5), ratio(4, 5)).unwrap();
        let a = RationalRotation::new(p.rotation_matrix()).unwrap();
        let mut big = RationalMatrix::identity(5);
        big.set_block(0, 0, a.matrix());
        let d = RationalMatrix::from_rows(vec![
            vec![rat(0), rat(0), rat(1)],
            vec![rat(1), rat(0), rat(0)],
            vec![rat(0), rat(1), rat(0)],
        ]);
        big.set_block(2, 2, &d);
        let b = RationalRotation::new(big).unwrap();
        let f = Frame2::standard(5);
        assert_eq!(ksharp_act(&a, &b, &f).unwrap(), f);
        assert_eq!(ksharp_act(&RationalRotation::identity(2), &RationalRotation::identity(5), &f).unwrap(), f);
    }

    #[test]
    fn center_moves_frame_but_not_plane() {
        let f = Frame2::random(&mut sample_rng(8, 0), 5);
        let p = Phase::new(ratio(5, 13), ratio(12, 13)).unwrap();
        let g = center_rotate(&f, &p).unwrap();
        assert_ne!(g, f);
        assert_eq!(quotient_q(&g), quotient_q(&f));
    }

    #[test]
    fn alpha_examples() {
        let f = Frame2::standard(5);
        assert_eq!(contact_alpha(&reeb_field(&f)), rat(1));
        assert_eq!(reeb_field(&f).w1(), &neg_vec(&basis_vec(5, 1))[..]);
        let t = StiefelTangent::new(f.clone(), basis_vec(5, 2), basis_vec(5, 3)).unwrap();
        assert!(contact_alpha(&t).is_zero());
        assert!(t.is_horizontal());
        assert!(!reeb_field(&f).is_horizontal());
    }

    #[test]
    fn tangent_validation() {
        let f = Frame2::standard(4);
        assert!(StiefelTangent::new(f.clone(), basis_vec(4, 0), basis_vec(4, 2)).is_err());
        // ⟨w1, v2⟩ + ⟨v1, w2⟩ = 2
        assert!(StiefelTangent::new(f, basis_vec(4, 1), basis_vec(4, 0)).is_err());
    }

    #[test]
    fn levi_form_examples() {
        let f = Frame2::standard(5);
        let u = basis_vec(5, 3);
        let z = vec![rat(0); 5];
        let t1 = StiefelTangent::new(f.clone(), u.clone(), z.clone()).unwrap();
        let t2 = StiefelTangent::new(f.clone(), z, u).unwrap();
        assert!(levi_form_h(&t1, &t1).unwrap().is_zero());
        assert_eq!(levi_form_h(&t1, &t2).unwrap(), rat(-1));
        assert_eq!(levi_form_h(&t1, &reeb_field(&f)).unwrap_err(), Error::NotHorizontal);
    }

    #[test]
    fn quotient_examples() {
        let f = Frame2::standard(4);
        let q = quotient_q(&f);
        let mut p = RationalMatrix::zeros(4, 4);
        p[(0, 0)] = rat(1);
        p[(1, 1)] = rat(1);
        assert_eq!(q.projector(), &p);
        assert!(q.is_valid());
        let swapped = quotient_q(&Frame2::new(f.v2().to_vec(), f.v1().to_vec()).unwrap());
        assert_eq!(swapped.projector(), q.projector());
        assert_eq!(swapped.orientation(), &-q.orientation().clone());
    }

    #[test]
    fn kernel_dimensions() {
        for m in 5..9 {
            let f = Frame2::random(&mut sample_rng(2, m as u64), m);
            assert_eq!(tangent_and_kernel_dims(&f), (2 * m - 3, 2 * m - 4));
        }
    }

    #[test]
    fn isotropic_round_trip_from_mixed_basis() {
        let f = Frame2::random(&mut sample_rng(6, 0), 6);
        let (a, b) = frame_to_isotropic(&f);
        // another basis of the same plane
        let c1 = add_vec(&scale_vec(&rat(2), &a), &b);
        let c2 = add_vec(&a, &scale_vec(&rat(-3), &b));
        assert_eq!(isotropic_to_frame(&c1, &c2).unwrap(), f);
    }
}
