//! Seeded generators for exact random test inputs.
//!
//! Each sample index gets its own ChaCha stream, so a scan produces the same
//! inputs no matter how the work is split across threads.

use num_traits::{One, Zero};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::matrix::{basis_vec, norm_sq, outer, RationalMatrix};
use crate::scalar::{rat, ratio, Rational};

/// Deterministic generator for sample `index` of a run seeded with `seed`.
pub fn sample_rng(seed: u64, index: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index);
    rng
}

/// Nonzero integer vector with entries in `[-bound, bound]`.
pub fn nonzero_int_vector(rng: &mut impl Rng, len: usize, bound: i64) -> Vec<Rational> {
    loop {
        let v: Vec<i64> = (0..len).map(|_| rng.gen_range(-bound..=bound)).collect();
        if v.iter().any(|&x| x != 0) {
            return v.into_iter().map(rat).collect();
        }
    }
}

/// Rational unit vector of length `len` from inverse stereographic
/// projection of a small integer point, with shuffled coordinates.
pub fn unit_vector(rng: &mut impl Rng, len: usize) -> Vec<Rational> {
    assert!(len >= 1);
    if len == 1 {
        return vec![if rng.gen_bool(0.5) { Rational::one() } else { -Rational::one() }];
    }
    let x: Vec<i64> = (0..len - 1).map(|_| rng.gen_range(-3..=3)).collect();
    let q: i64 = x.iter().map(|a| a * a).sum();
    let den = q + 1;
    let mut v: Vec<Rational> = x.iter().map(|&a| ratio(2 * a, den)).collect();
    v.push(ratio(q - 1, den));
    v.shuffle(rng);
    if rng.gen_bool(0.5) {
        v.iter_mut().for_each(|c| *c = -c.clone());
    }
    v
}

/// Rational point `(c, d)` on the unit circle.
pub fn circle_point(rng: &mut impl Rng) -> (Rational, Rational) {
    let a: i64 = rng.gen_range(-6..=6);
    let b: i64 = rng.gen_range(1..=6);
    // t = a/b, point ((1 - t²), 2t)/(1 + t²)
    let den = b * b + a * a;
    let mut p = (ratio(b * b - a * a, den), ratio(2 * a * b, den));
    if rng.gen_bool(0.5) {
        p = (-p.0, -p.1);
    }
    p
}

/// Reflection `I - 2 v v^T / |v|²` in the hyperplane orthogonal to `v`.
pub fn reflection(v: &[Rational]) -> RationalMatrix {
    let n2 = norm_sq(v);
    assert!(!n2.is_zero(), "reflection in the zero vector");
    let c = rat(2) / n2;
    &RationalMatrix::identity(v.len()) - &outer(v, v).scale(&c)
}

/// Random element of `SO(m)` as a product of an even number of rational
/// reflections.
pub fn rotation(rng: &mut impl Rng, m: usize) -> RationalMatrix {
    let count = if rng.gen_bool(0.5) { 2 } else { 4 };
    (0..count).fold(RationalMatrix::identity(m), |acc, _| {
        let v = nonzero_int_vector(rng, m, 3);
        &acc * &reflection(&v)
    })
}

/// Rational orthogonal completion: an element of `SO(m)` whose first two
/// columns are the given orthonormal pair.
pub fn complete_frame(v1: &[Rational], v2: &[Rational]) -> RationalMatrix {
    let m = v1.len();
    let e1 = basis_vec(m, 0);
    let e2 = basis_vec(m, 1);
    // H1 e1 = v1
    let h1 = reflection_to(&e1, v1);
    let v2p = h1.mul_vec(v2);
    // H2 fixes e1 (both e2 and v2p are orthogonal to it) and maps e2 to v2p
    let h2 = reflection_to(&e2, &v2p);
    let mut b = &h1 * &h2;
    if !b.determinant().is_one() {
        for i in 0..m {
            b[(i, m - 1)] = -b[(i, m - 1)].clone();
        }
    }
    b
}

/// Reflection swapping two unit vectors (identity when they coincide).
fn reflection_to(from: &[Rational], to: &[Rational]) -> RationalMatrix {
    let d: Vec<Rational> = from.iter().zip(to).map(|(a, b)| a - b).collect();
    if d.iter().all(Zero::is_zero) {
        RationalMatrix::identity(from.len())
    } else {
        reflection(&d)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::dot;

    #[test]
    fn unit_vectors_are_exact() {
        let mut rng = sample_rng(3, 0);
        for len in 1..8 {
            for _ in 0..20 {
                assert!(norm_sq(&unit_vector(&mut rng, len)).is_one());
            }
        }
    }

    #[test]
    fn circle_points_are_exact() {
        let mut rng = sample_rng(3, 1);
        for _ in 0..50 {
            let (c, d) = circle_point(&mut rng);
            assert!((&c * &c + &d * &d).is_one());
        }
    }

    #[test]
    fn rotations_are_special_orthogonal() {
        let mut rng = sample_rng(9, 2);
        for m in 2..7 {
            assert!(rotation(&mut rng, m).is_special_orthogonal());
        }
    }

    #[test]
    fn completion_extends_the_frame() {
        let mut rng = sample_rng(1, 5);
        for m in 3..8 {
            let b = rotation(&mut rng, m);
            let (v1, v2) = (b.column(0), b.column(1));
            let c = complete_frame(&v1, &v2);
            assert!(c.is_special_orthogonal());
            assert_eq!(c.column(0), v1);
            assert_eq!(c.column(1), v2);
            assert!(dot(&c.column(2), &v1).is_zero());
        }
    }

    #[test]
    fn streams_are_independent_of_order() {
        let a: Vec<Rational> = unit_vector(&mut sample_rng(42, 7), 4);
        let _ = unit_vector(&mut sample_rng(42, 3), 4);
        assert_eq!(a, unit_vector(&mut sample_rng(42, 7), 4));
    }
}
