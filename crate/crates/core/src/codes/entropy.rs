use crate::error::{Error, Result};
use dashu_int::UBig;

/// q-ary entropy H_q(ϱ) = ϱ·log_q(q−1) − ϱ·log_q ϱ − (1−ϱ)·log_q(1−ϱ).
pub fn entropy(q: u64, rho: f64) -> Result<f64> {
    if q < 2 {
        return Err(Error::DomainError(format!("alphabet size {q} is below 2")));
    }
    if !(rho > 0.0 && rho < 1.0) {
        return Err(Error::DomainError(format!(
            "entropy argument {rho} outside (0, 1)"
        )));
    }
    let lq = (q as f64).ln();
    let v = rho * ((q - 1) as f64).ln() - rho * rho.ln() - (1.0 - rho) * (-rho).ln_1p();
    Ok(v / lq)
}

/// H′_q: equal to H_q below (q−1)/q and to 1 from there on. Zero maps to 0,
/// the limit of H_q at the origin.
pub fn entropy_clamped(q: u64, rho: f64) -> Result<f64> {
    if q < 2 {
        return Err(Error::DomainError(format!("alphabet size {q} is below 2")));
    }
    if rho.is_nan() || rho < 0.0 {
        return Err(Error::DomainError(format!(
            "entropy argument {rho} is negative"
        )));
    }
    if rho == 0.0 {
        return Ok(0.0);
    }
    if rho >= (q - 1) as f64 / q as f64 {
        return Ok(1.0);
    }
    entropy(q, rho)
}

/// Asymptotic Gilbert–Varshamov rate 1 − H_q(ϱ) for 0 < ϱ < (q−1)/q.
pub fn gv_rate(q: u64, rho: f64) -> Result<f64> {
    if q >= 2 && rho >= (q - 1) as f64 / q as f64 {
        return Err(Error::DomainError(format!(
            "relative distance {rho} at or beyond (q-1)/q"
        )));
    }
    Ok(1.0 - entropy(q, rho)?)
}

/// Largest ℓ with q^{2ℓ} ≤ n^m, i.e. ⌊(m/2)·log_q n⌋, in exact arithmetic.
pub fn max_levels(m: usize, q: u64, n: u64) -> usize {
    if n < 2 || q < 2 {
        return 0;
    }
    let target = UBig::from(n).pow(m);
    let q2 = UBig::from(q) * UBig::from(q);
    let mut acc = q2.clone();
    let mut l = 0;
    while acc <= target {
        l += 1;
        acc *= &q2;
    }
    l
}
