//! Exact scalar fields.
//!
//! Every matrix in this crate lives over either the rationals `Q` or the
//! Gaussian rationals `Q(i)`. Both are fields with decidable equality, so
//! identities are checked with `==` and never with a tolerance.

use std::fmt;
use std::ops::Neg;

use num_bigint::BigInt;
use num_complex::Complex;
use num_rational::BigRational;
use num_traits::{Num, One, Signed, ToPrimitive, Zero};

/// Exact rational number.
pub type Rational = BigRational;

/// Exact complex number with rational real and imaginary parts.
pub type GaussianRational = Complex<BigRational>;

/// Scalars usable as matrix entries.
pub trait Scalar: Clone + fmt::Debug + PartialEq + Num + Neg<Output = Self> {}

impl<T> Scalar for T where T: Clone + fmt::Debug + PartialEq + Num + Neg<Output = T> {}

/// Integer as a rational.
pub fn rat(n: i64) -> Rational {
    BigRational::from_integer(BigInt::from(n))
}

/// `num / den` as a rational. Panics on a zero denominator.
pub fn ratio(num: i64, den: i64) -> Rational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

/// Gaussian rational from integer parts.
pub fn gauss(re: i64, im: i64) -> GaussianRational {
    Complex::new(rat(re), rat(im))
}

/// Embeds a rational as a real Gaussian rational.
pub fn real(x: Rational) -> GaussianRational {
    Complex::new(x, Rational::zero())
}

/// The imaginary unit.
pub fn imag_unit() -> GaussianRational {
    Complex::new(Rational::zero(), Rational::one())
}

pub fn is_real(z: &GaussianRational) -> bool {
    z.im.is_zero()
}

pub fn rational_to_f64(x: &Rational) -> f64 {
    x.to_f64().unwrap_or_else(|| {
        // numerator/denominator too large for a direct conversion
        let n = x.numer().to_f64().unwrap_or(f64::NAN);
        let d = x.denom().to_f64().unwrap_or(f64::NAN);
        n / d
    })
}

pub fn to_complex_f64(z: &GaussianRational) -> Complex<f64> {
    Complex::new(rational_to_f64(&z.re), rational_to_f64(&z.im))
}

/// Compact human-readable rendering, e.g. `3/2`, `-i`, `1+2i`.
pub fn fmt_gauss(z: &GaussianRational) -> String {
    match (z.re.is_zero(), z.im.is_zero()) {
        (_, true) => z.re.to_string(),
        (true, false) => fmt_imag(&z.im),
        (false, false) => {
            let im = fmt_imag(&z.im.abs());
            let sign = if z.im.is_negative() { '-' } else { '+' };
            format!("{}{}{}", z.re, sign, im)
        }
    }
}

fn fmt_imag(x: &Rational) -> String {
    if x.is_one() {
        "i".to_string()
    } else if *x == -Rational::one() {
        "-i".to_string()
    } else {
        format!("{}i", x)
    }
}
