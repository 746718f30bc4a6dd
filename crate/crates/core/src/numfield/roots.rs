use super::field::NumberField;
use crate::error::{Error, Result};
use crate::real::{self, Complex, Real};
use std::cmp::Ordering;

/// Minimum working precision for root computation.
pub const MIN_ROOT_PRECISION: usize = 64;

const SEED_PRECISION: usize = 128;

/// Roots of the defining polynomial in the deterministic embedding order.
#[derive(Clone, Debug, PartialEq)]
pub struct RootSet {
    /// Real roots, ascending.
    pub real: Vec<Real>,
    /// One representative (positive imaginary part) per complex-conjugate pair,
    /// ascending by real part.
    pub pairs: Vec<Complex>,
    /// Radius of each root's isolating disk, same order as `real` then `pairs`.
    pub radii: Vec<Real>,
    pub precision: usize,
}

impl RootSet {
    /// All m roots: reals, then each pair representative followed by its conjugate.
    pub fn all(&self) -> Vec<Complex> {
        let mut out: Vec<Complex> = self
            .real
            .iter()
            .map(|r| Complex::from_real(r.clone(), self.precision))
            .collect();
        for z in &self.pairs {
            out.push(z.clone());
            out.push(z.conj());
        }
        out
    }
}

fn coefficients(field: &NumberField, prec: usize) -> Vec<Real> {
    field
        .polynomial()
        .coeffs()
        .iter()
        .map(|c| real::from_int(c, prec))
        .collect()
}

fn derivative(coeffs: &[Real]) -> Vec<Real> {
    coeffs
        .iter()
        .enumerate()
        .skip(1)
        .map(|(i, c)| c * real::from_i64(i as i64, c.precision()))
        .collect()
}

/// Simultaneous Durand–Kerner iteration seeded on a perturbed circle.
fn durand_kerner(coeffs: &[Real], prec: usize) -> Result<Vec<Complex>> {
    let m = coeffs.len() - 1;
    let bound = 1.0
        + coeffs[..m]
            .iter()
            .map(|c| real::to_f64(c).abs())
            .fold(0.0, f64::max);
    let mut z: Vec<Complex> = (0..m)
        .map(|k| {
            let theta = 2.0 * std::f64::consts::PI * k as f64 / m as f64 + 0.4;
            let r = 0.5 * bound * (1.0 + 0.05 * k as f64);
            Complex::new(
                real::from_f64(r * theta.cos(), prec),
                real::from_f64(r * theta.sin(), prec),
            )
        })
        .collect();
    let tol = real::pow2(24 - prec as isize, prec);
    for _ in 0..2000 {
        let mut max_step = real::zero(prec);
        for i in 0..m {
            let num = Complex::eval_poly(coeffs, &z[i]);
            let mut den = Complex::from_real(real::from_i64(1, prec), prec);
            for j in 0..m {
                if i != j {
                    den = &den * &(&z[i] - &z[j]);
                }
            }
            if real::is_zero(&den.norm_sq()) {
                return Err(Error::PrecisionExhausted(
                    "root iteration collapsed two estimates".into(),
                ));
            }
            let step = num.div(&den);
            let size = step.abs();
            if size > max_step {
                max_step = size;
            }
            z[i] = &z[i] - &step;
        }
        if max_step < tol {
            return Ok(z);
        }
    }
    Err(Error::PrecisionExhausted(
        "simultaneous root iteration did not converge".into(),
    ))
}

fn newton(coeffs: &[Real], deriv: &[Real], mut z: Complex, real_only: bool) -> Complex {
    let prec = z.re.precision();
    let tol = real::pow2(8 - prec as isize, prec);
    for _ in 0..80 {
        let fz = Complex::eval_poly(coeffs, &z);
        let dz = Complex::eval_poly(deriv, &z);
        if real::is_zero(&dz.norm_sq()) {
            break;
        }
        let mut step = fz.div(&dz);
        if real_only {
            step.im = real::zero(prec);
        }
        z = &z - &step;
        let scale = z.abs() + real::from_i64(1, prec);
        if step.abs() <= &tol * &scale {
            break;
        }
    }
    z
}

/// Isolating-disk radius `m |f(z)| / |f'(z)|`: some root of f lies in it.
fn isolation_radius(coeffs: &[Real], deriv: &[Real], z: &Complex) -> Real {
    let prec = z.re.precision();
    let m = real::from_i64((coeffs.len() - 1) as i64, prec);
    let fz = Complex::eval_poly(coeffs, z).abs();
    let dz = Complex::eval_poly(deriv, z).abs();
    m * fz / dz
}

/// All m roots of f to `precision_bits`, certified by pairwise-disjoint
/// isolating disks of radius at most 2^{-precision_bits/2}.
pub fn complex_roots(field: &NumberField, precision_bits: usize) -> Result<RootSet> {
    if precision_bits < MIN_ROOT_PRECISION {
        return Err(Error::DomainError(format!(
            "root precision must be at least {MIN_ROOT_PRECISION} bits"
        )));
    }
    let (s, t) = field.signature();
    let seeds = durand_kerner(&coefficients(field, SEED_PRECISION), SEED_PRECISION)?;
    let mut order: Vec<Complex> = seeds;
    order.sort_by(|a, b| {
        real::abs(&a.im)
            .partial_cmp(&real::abs(&b.im))
            .unwrap_or(Ordering::Equal)
    });
    let prec = precision_bits;
    let coeffs = coefficients(field, prec);
    let deriv = derivative(&coeffs);

    let mut reals: Vec<Real> = order[..s]
        .iter()
        .map(|z| {
            let seed = Complex::new(z.re.clone(), real::zero(SEED_PRECISION)).with_precision(prec);
            newton(&coeffs, &deriv, seed, true).re
        })
        .collect();
    reals.sort_by(|a, b| a.partial_cmp(b).unwrap_or(Ordering::Equal));

    let upper: Vec<&Complex> = order[s..]
        .iter()
        .filter(|z| z.im > real::zero(SEED_PRECISION))
        .collect();
    if upper.len() != t {
        return Err(Error::PrecisionExhausted(format!(
            "expected {t} complex pairs, isolated {}",
            upper.len()
        )));
    }
    let mut pairs: Vec<Complex> = upper
        .into_iter()
        .map(|z| newton(&coeffs, &deriv, z.with_precision(prec), false))
        .collect();
    pairs.sort_by(|a, b| {
        a.re.partial_cmp(&b.re)
            .unwrap_or(Ordering::Equal)
            .then(a.im.partial_cmp(&b.im).unwrap_or(Ordering::Equal))
    });

    let set = RootSet {
        radii: Vec::new(),
        real: reals,
        pairs,
        precision: prec,
    };
    certify(set, &coeffs, &deriv)
}

fn certify(mut set: RootSet, coeffs: &[Real], deriv: &[Real]) -> Result<RootSet> {
    let prec = set.precision;
    let limit = real::pow2(-((prec / 2) as isize), prec);
    let all = set.all();
    let radii: Vec<Real> = all
        .iter()
        .map(|z| isolation_radius(coeffs, deriv, z))
        .collect();
    if let Some(bad) = radii.iter().position(|r| *r > limit) {
        return Err(Error::PrecisionExhausted(format!(
            "root {bad} not certified at {prec} bits"
        )));
    }
    for i in 0..all.len() {
        for j in i + 1..all.len() {
            if (&all[i] - &all[j]).abs() <= &radii[i] + &radii[j] {
                return Err(Error::PrecisionExhausted(format!(
                    "isolating disks of roots {i} and {j} overlap"
                )));
            }
        }
    }
    // radii for the representatives only: reals then pair representatives
    let s = set.real.len();
    set.radii = radii[..s]
        .iter()
        .cloned()
        .chain(radii[s..].iter().step_by(2).cloned())
        .collect();
    Ok(set)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numfield::{define_field, IntPolynomial};

    fn field(c: &[i64]) -> NumberField {
        define_field(IntPolynomial::from_i64s(c)).unwrap()
    }

    #[test]
    fn gaussian_roots() {
        let r = complex_roots(&field(&[1, 0, 1]), 128).unwrap();
        assert!(r.real.is_empty());
        assert_eq!(r.pairs.len(), 1);
        assert!(real::to_f64(&r.pairs[0].re).abs() < 1e-30);
        assert!((real::to_f64(&r.pairs[0].im) - 1.0).abs() < 1e-30);
    }

    #[test]
    fn totally_real_cubic_roots_match_bisection() {
        let k = field(&[-1, -2, 1, 1]);
        let r = complex_roots(&k, 256).unwrap();
        assert_eq!(r.real.len(), 3);
        // independent oracle: bisection on sign changes in f64
        let f = |x: f64| x * x * x + x * x - 2.0 * x - 1.0;
        let bisect = |mut a: f64, mut b: f64| {
            for _ in 0..200 {
                let mid = 0.5 * (a + b);
                if f(a) * f(mid) <= 0.0 {
                    b = mid;
                } else {
                    a = mid;
                }
            }
            0.5 * (a + b)
        };
        let oracle = [bisect(-2.0, -1.0), bisect(-1.0, 0.0), bisect(1.0, 2.0)];
        for (x, o) in r.real.iter().zip(oracle) {
            assert!((real::to_f64(x) - o).abs() < 1e-12);
        }
        assert!((oracle[0] + 1.8019).abs() < 1e-4);
        assert!((oracle[1] + 0.4450).abs() < 1e-4);
        assert!((oracle[2] - 1.2470).abs() < 1e-4);
    }

    #[test]
    fn residual_bound_and_determinism() {
        for c in [&[1i64, 1, -1, -1, 1][..], &[-1, 0, 1, 1], &[1, 0, 0, 1, 0, 0, 1]] {
            let k = field(c);
            let prec = 200;
            let r = complex_roots(&k, prec).unwrap();
            let (s, t) = k.signature();
            assert_eq!((r.real.len(), r.pairs.len()), (s, t));
            let coeffs = coefficients(&k, prec);
            let l1 = real::to_f64(&real::from_int(&k.polynomial().l1_norm(), 64));
            let bound = 2f64.powi(-(prec as i32) / 2) * (1.0 + l1);
            for z in r.all() {
                let v = real::to_f64(&Complex::eval_poly(&coeffs, &z).abs());
                assert!(v <= bound, "residual {v} above {bound}");
            }
            assert_eq!(r, complex_roots(&k, prec).unwrap());
        }
    }

    #[test]
    fn rejects_low_precision() {
        assert!(matches!(
            complex_roots(&field(&[1, 0, 1]), 32),
            Err(Error::DomainError(_))
        ));
    }
}
