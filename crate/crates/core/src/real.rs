//! Arbitrary-precision binary reals (round-to-nearest) and a minimal complex type.

use dashu_float::round::mode::HalfEven;
use dashu_float::FBig;
use dashu_int::ops::*;
use dashu_int::IBig;
use dashu_ratio::RBig;
use std::ops::{Add, Mul, Neg, Sub};

/// Binary floating point number with round-half-even.
pub type Real = FBig<HalfEven, 2>;

pub fn zero(prec: usize) -> Real {
    Real::ZERO.with_precision(prec).value()
}

pub fn from_int(n: &IBig, prec: usize) -> Real {
    Real::from(n.clone()).with_precision(prec).value()
}

pub fn from_i64(n: i64, prec: usize) -> Real {
    Real::from(n).with_precision(prec).value()
}

pub fn from_ratio(r: &RBig, prec: usize) -> Real {
    let num = from_int(r.numerator(), prec);
    let den = from_int(&IBig::from(r.denominator().clone()), prec);
    num / den
}

/// Exact conversion of an `f64`, then rounded to `prec` bits.
pub fn from_f64(x: f64, prec: usize) -> Real {
    Real::try_from(x)
        .expect("finite f64")
        .with_precision(prec)
        .value()
}

/// Exactly `2^exp`, carried at `prec` bits.
pub fn pow2(exp: isize, prec: usize) -> Real {
    Real::from_parts(IBig::ONE, exp).with_precision(prec).value()
}

pub fn to_f64(x: &Real) -> f64 {
    x.to_f64().value()
}

pub fn is_zero(x: &Real) -> bool {
    x.repr().significand() == &IBig::ZERO
}

pub fn abs(x: &Real) -> Real {
    if x.repr().significand() < &IBig::ZERO {
        -x.clone()
    } else {
        x.clone()
    }
}

/// Nearest integer, ties away from zero.
pub fn round_to_int(x: &Real) -> IBig {
    x.round().to_int().value()
}

/// Smallest integer not below `x`.
pub fn ceil_to_int(x: &Real) -> IBig {
    x.ceil().to_int().value()
}

/// `log2 |x|` as an `f64`, accurate to roughly machine precision even when
/// `|x|` is far outside the `f64` range. Returns `-inf` for zero.
pub fn log2_abs(x: &Real) -> f64 {
    let repr = x.repr();
    if repr.significand() == &IBig::ZERO {
        return f64::NEG_INFINITY;
    }
    let sig = repr.significand().unsigned_abs();
    let exp = repr.exponent() as f64;
    let bits = sig.bit_len();
    if bits <= 60 {
        return sig.to_f64().value().log2() + exp;
    }
    let shift = bits - 60;
    let top = &sig >> shift;
    top.to_f64().value().log2() + shift as f64 + exp
}

/// `log2 |n|` for a big integer.
pub fn log2_int(n: &IBig) -> f64 {
    let mag = n.unsigned_abs();
    let bits = mag.bit_len();
    if bits <= 60 {
        return mag.to_f64().value().log2();
    }
    let shift = bits - 60;
    (&mag >> shift).to_f64().value().log2() + shift as f64
}

/// A real value with a relative error bound attached.
#[derive(Clone, Debug)]
pub struct CertifiedReal {
    pub value: Real,
    pub rel_error: f64,
}

impl CertifiedReal {
    pub fn new(value: Real, rel_error: f64) -> Self {
        Self { value, rel_error }
    }

    pub fn to_f64(&self) -> f64 {
        to_f64(&self.value)
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Complex {
    pub re: Real,
    pub im: Real,
}

impl Complex {
    pub fn new(re: Real, im: Real) -> Self {
        Self { re, im }
    }

    pub fn zero(prec: usize) -> Self {
        Self::new(zero(prec), zero(prec))
    }

    pub fn from_real(re: Real, prec: usize) -> Self {
        Self::new(re, zero(prec))
    }

    pub fn norm_sq(&self) -> Real {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn abs(&self) -> Real {
        self.norm_sq().sqrt()
    }

    pub fn conj(&self) -> Self {
        Self::new(self.re.clone(), -self.im.clone())
    }

    pub fn scale(&self, s: &Real) -> Self {
        Self::new(&self.re * s, &self.im * s)
    }

    pub fn div(&self, other: &Self) -> Self {
        let d = other.norm_sq();
        let num = self * &other.conj();
        Self::new(num.re / &d, num.im / d)
    }

    pub fn with_precision(&self, prec: usize) -> Self {
        Self::new(
            self.re.clone().with_precision(prec).value(),
            self.im.clone().with_precision(prec).value(),
        )
    }

    /// Evaluate a polynomial with real coefficients (constant term first) by Horner's rule.
    pub fn eval_poly(coeffs: &[Real], z: &Complex) -> Complex {
        let prec = z.re.precision();
        let mut acc = Complex::zero(prec);
        for c in coeffs.iter().rev() {
            acc = &acc * z;
            acc.re = acc.re + c;
        }
        acc
    }
}

impl Add for &Complex {
    type Output = Complex;
    fn add(self, rhs: &Complex) -> Complex {
        Complex::new(&self.re + &rhs.re, &self.im + &rhs.im)
    }
}

impl Sub for &Complex {
    type Output = Complex;
    fn sub(self, rhs: &Complex) -> Complex {
        Complex::new(&self.re - &rhs.re, &self.im - &rhs.im)
    }
}

impl Mul for &Complex {
    type Output = Complex;
    fn mul(self, rhs: &Complex) -> Complex {
        Complex::new(
            &self.re * &rhs.re - &self.im * &rhs.im,
            &self.re * &rhs.im + &self.im * &rhs.re,
        )
    }
}

impl Neg for Complex {
    type Output = Complex;
    fn neg(self) -> Complex {
        Complex::new(-self.re, -self.im)
    }
}
