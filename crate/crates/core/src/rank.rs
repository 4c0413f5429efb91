//! Rank computations for Gaussian-rational matrices.
//!
//! The exact path clears denominators row by row and runs fraction-free
//! (Bareiss) elimination over the Gaussian integers, where every division
//! is exact. The float path counts singular values above a relative
//! threshold and only serves as an independent cross-check.

use nalgebra::DMatrix;
use num_bigint::BigInt;
use num_complex::Complex;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::matrix::ComplexMatrix;
use crate::scalar::to_complex_f64;

/// Relative singular-value cutoff used by [`float_rank`].
pub const FLOAT_RANK_THRESHOLD: f64 = 1e-9;

type GaussInt = Complex<BigInt>;

/// Exact rank via Bareiss elimination over `Z[i]`.
pub fn exact_rank(m: &ComplexMatrix) -> usize {
    let mut a = to_gaussian_integers(m);
    let rows = a.len();
    let cols = m.cols();
    let mut prev = GaussInt::one();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(p, r);
        let (top, rest) = a.split_at_mut(r + 1);
        let pivot_row = &top[r];
        for row in rest.iter_mut() {
            for j in c + 1..cols {
                let num = &pivot_row[c] * &row[j] - &row[c] * &pivot_row[j];
                row[j] = exact_div(&num, &prev);
            }
            row[c] = GaussInt::zero();
        }
        prev = a[r][c].clone();
        r += 1;
    }
    r
}

/// Scales every row by the lcm of its denominators so all entries become
/// Gaussian integers. Row scaling by a nonzero constant preserves rank.
fn to_gaussian_integers(m: &ComplexMatrix) -> Vec<Vec<GaussInt>> {
    (0..m.rows())
        .map(|i| {
            let row = m.row(i);
            let lcm = row.iter().fold(BigInt::one(), |acc, z| {
                acc.lcm(z.re.denom()).lcm(z.im.denom())
            });
            row.iter()
                .map(|z| {
                    let re = z.re.numer() * (&lcm / z.re.denom());
                    let im = z.im.numer() * (&lcm / z.im.denom());
                    Complex::new(re, im)
                })
                .collect()
        })
        .collect()
}

fn exact_div(a: &GaussInt, b: &GaussInt) -> GaussInt {
    let norm = &b.re * &b.re + &b.im * &b.im;
    let p = a * b.conj();
    let (re, r1) = p.re.div_rem(&norm);
    let (im, r2) = p.im.div_rem(&norm);
    assert!(
        r1.is_zero() && r2.is_zero(),
        "Bareiss step produced an inexact division"
    );
    Complex::new(re, im)
}

/// Numerical rank: singular values above `FLOAT_RANK_THRESHOLD * sigma_max`.
pub fn float_rank(m: &ComplexMatrix) -> usize {
    if m.rows() == 0 || m.cols() == 0 {
        return 0;
    }
    let dm = DMatrix::from_fn(m.rows(), m.cols(), |i, j| to_complex_f64(&m[(i, j)]));
    let sv = dm.singular_values();
    let max = sv.iter().cloned().fold(0.0_f64, f64::max);
    if max == 0.0 {
        return 0;
    }
    sv.iter().filter(|&&x| x > FLOAT_RANK_THRESHOLD * max).count()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{gauss, ratio};

    fn cm(rows: Vec<Vec<Complex<num_rational::BigRational>>>) -> ComplexMatrix {
        ComplexMatrix::from_rows(rows)
    }

    #[test]
    fn agrees_with_field_elimination() {
        let a = cm(vec![
            vec![gauss(1, 1), gauss(2, 0), gauss(0, 3)],
            vec![gauss(0, 2), gauss(2, 2), gauss(-3, 3)],
            vec![gauss(1, 0), gauss(0, 0), gauss(1, 1)],
        ]);
        // second row is (1+i) times the first
        assert_eq!(exact_rank(&a), 2);
        assert_eq!(a.rank(), 2);
        assert_eq!(float_rank(&a), 2);
    }

    #[test]
    fn handles_fractions_and_skipped_columns() {
        let half = Complex::new(ratio(1, 2), ratio(0, 1));
        let a = cm(vec![
            vec![gauss(0, 0), half.clone(), gauss(1, 0)],
            vec![gauss(0, 0), gauss(1, 0), gauss(2, 0)],
            vec![gauss(0, 0), gauss(0, 0), gauss(0, 1)],
        ]);
        assert_eq!(exact_rank(&a), 2);
    }

    #[test]
    fn zero_and_empty() {
        assert_eq!(exact_rank(&ComplexMatrix::zeros(3, 4)), 0);
        assert_eq!(float_rank(&ComplexMatrix::zeros(3, 4)), 0);
        assert_eq!(exact_rank(&ComplexMatrix::identity(5)), 5);
    }
}
