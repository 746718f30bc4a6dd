use super::ceilings::Refiner;
use crate::codes::entropy_clamped;
use crate::error::{Error, Result};
use crate::idealarith::PrimeIdealFactor;
use crate::lattice::{ideal_tower, IdealTower, TowerOptions};
use crate::numfield::NumberField;
use crate::real;
use dashu_int::{IBig, UBig};
use std::f64::consts::{E, PI};

pub const DEFAULT_LMAX: usize = 200;
pub const DEEP_LMAX: usize = 1000;
pub const MIN_LMAX: usize = 10;
pub const DEFAULT_CHECKPOINTS: [usize; 4] = [100, 200, 400, 1000];

/// Density-exponent lower bound of the family n_ℓ → ∞ built on one prime.
#[derive(Clone, Debug, PartialEq)]
pub struct AsymptoticReport {
    pub lmax: usize,
    pub q: u64,
    /// log2 n_ℓ for the final level.
    pub log2_n: f64,
    /// Decimal digit count of n_ℓ.
    pub n_digits: usize,
    /// ϱ_i = d_i / n_ℓ for the final ℓ, i = 0..ℓ−1 (0 when below f64 range).
    pub rho: Vec<f64>,
    pub lambda: f64,
    /// (ℓ, λ at ℓ) for each checkpoint up to lmax.
    pub trace: Vec<(usize, f64)>,
    pub precision: usize,
    pub snapped_levels: usize,
}

/// n_ℓ = ⌈(q^{2ℓ}·|D_K|)^{1/m}⌉ exactly.
pub fn family_length(m: usize, q: u64, abs_disc: &UBig, level: usize) -> UBig {
    let x = UBig::from(q).pow(2 * level) * abs_disc;
    let r = x.nth_root(m);
    if r.pow(m) == x {
        r
    } else {
        r + UBig::ONE
    }
}

struct LevelLambda {
    lambda: f64,
    log2_n: f64,
    n_digits: usize,
    rho: Vec<f64>,
    snapped: usize,
}

fn lambda_at(
    k: &NumberField,
    q: u64,
    tower: &IdealTower,
    refiner: &mut Refiner<'_>,
    level: usize,
) -> Result<LevelLambda> {
    let m = k.degree();
    let mf = m as f64;
    let abs_disc = k.abs_discriminant();
    let n = family_length(m, q, &abs_disc, level);
    let log2_n = real::log2_int(&IBig::from(n.clone()));
    let log2_disc = real::log2_int(&IBig::from(abs_disc));
    let mut terms = Vec::with_capacity(level);
    let mut rho = Vec::with_capacity(level);
    let mut snapped = 0;
    for i in 0..level {
        let d = refiner.distance(i, level)?;
        snapped += d.snapped as usize;
        let r = (d.log2 - log2_n).exp2();
        rho.push(r);
        terms.push(entropy_clamped(q, r)?);
    }
    terms.sort_by(|a, b| a.partial_cmp(b).expect("finite entropy"));
    let sum: f64 = terms.iter().sum();
    let log2_min = real::log2_abs(&tower.levels[level].min_sq);
    let lambda = -1.0 - log2_disc / (2.0 * mf) - 0.5 * (mf / (2.0 * PI * E)).log2()
        + 0.5 * log2_min
        - 0.5 * log2_n
        - (q as f64).log2() / mf * sum;
    Ok(LevelLambda {
        lambda,
        log2_n,
        n_digits: n.to_string().len(),
        rho,
        snapped,
    })
}

/// λ lower bound at ℓ = lmax, with the value at each checkpoint ≤ lmax.
pub fn asymptotic_lambda(
    k: &NumberField,
    prime: &PrimeIdealFactor,
    lmax: usize,
    checkpoints: &[usize],
    opts: &TowerOptions,
) -> Result<AsymptoticReport> {
    if lmax < MIN_LMAX {
        return Err(Error::Validation(format!(
            "level count {lmax} is below the minimum {MIN_LMAX}"
        )));
    }
    let q = prime.q_u64();
    let tower = ideal_tower(k, prime, lmax, opts)?;
    let mut refiner = Refiner::new(&tower);
    let mut trace = Vec::new();
    let mut points: Vec<usize> = checkpoints.iter().copied().filter(|&c| c < lmax).collect();
    points.sort_unstable();
    points.dedup();
    for &c in &points {
        if c >= 1 {
            trace.push((c, lambda_at(k, q, &tower, &mut refiner, c)?.lambda));
        }
    }
    let last = lambda_at(k, q, &tower, &mut refiner, lmax)?;
    trace.push((lmax, last.lambda));
    if !last.lambda.is_finite() {
        return Err(Error::PrecisionExhausted("density exponent is not finite".into()));
    }
    Ok(AsymptoticReport {
        lmax,
        q,
        log2_n: last.log2_n,
        n_digits: last.n_digits,
        rho: last.rho,
        lambda: last.lambda,
        trace,
        precision: tower.ctx.precision(),
        snapped_levels: last.snapped,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn family_length_is_a_ceiling_root() {
        let d = UBig::from(117u8);
        // (9^2·117)^{1/4} ≈ 9.87
        assert_eq!(family_length(4, 9, &d, 1), UBig::from(10u8));
        // exact root: (2^4·16)^{1/4} = 4
        assert_eq!(family_length(4, 2, &UBig::from(16u8), 2), UBig::from(4u8));
        assert_eq!(family_length(4, 9, &d, 3), UBig::from(89u8));
    }
}
