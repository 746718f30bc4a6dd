//! Coding-theory side: entropy and Gilbert–Varshamov formulas, required
//! distances, best-known code tables and small explicit codes.

mod demo;
mod entropy;
mod gf;
mod table;

pub use demo::{demo_code, LinearCode, MAX_ENUMERATED};
pub use entropy::{entropy, entropy_clamped, gv_rate, max_levels};
pub use gf::{prime_power, GaloisField, MAX_TABLE_FIELD};
pub use table::{load_code_table, CodeEntry, CodeSpec, CodeTable, BUNDLED_SNAPSHOT};

use crate::error::{Error, Result};
use crate::real::{self, Real};
use dashu_int::IBig;

/// Outcome of one ceiling ⌈min_sq(L_ℓ)/min_sq(L_i)⌉.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Ceiling {
    /// The whole error interval lies strictly between two integers.
    Certified(u64),
    /// The interval contains the integer `k`.
    Straddles(u64),
}

/// ⌈a/b⌉ for positive minima carrying relative error `rel` each. With
/// `rel = 0` the inputs are taken as exact.
pub fn ratio_ceiling(a: &Real, b: &Real, rel: f64) -> Ceiling {
    let prec = a.precision().max(b.precision());
    let r = a / b;
    if rel == 0.0 {
        let c = real::ceil_to_int(&r);
        return Ceiling::Certified(u64::try_from(&c).unwrap_or(u64::MAX));
    }
    let e = real::from_f64(2.0 * rel + 2f64.powi(-((prec / 2) as i32)), prec);
    let one = real::from_i64(1, prec);
    let lo = &r * &(&one - &e);
    let hi = &r * &(&one + &e);
    let clo = real::ceil_to_int(&lo);
    let chi = real::ceil_to_int(&hi);
    let to_u64 = |v: IBig| u64::try_from(&v).unwrap_or(u64::MAX);
    if clo == chi {
        Ceiling::Certified(to_u64(clo))
    } else {
        Ceiling::Straddles(to_u64(clo))
    }
}

/// d_i = ⌈min_sq(L_ℓ)/min_sq(L_i)⌉ for i = 0..ℓ−1.
pub fn required_distances(min_sqs: &[Real], rel: f64) -> Result<Vec<u64>> {
    let Some(last) = min_sqs.last() else {
        return Ok(vec![]);
    };
    min_sqs[..min_sqs.len() - 1]
        .iter()
        .enumerate()
        .map(|(i, m)| match ratio_ceiling(last, m, rel) {
            Ceiling::Certified(d) => Ok(d),
            Ceiling::Straddles(_) => Err(Error::AmbiguousCeiling { level: i }),
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn reals(v: &[f64]) -> Vec<Real> {
        v.iter().map(|&x| real::from_f64(x, 128)).collect()
    }

    #[test]
    fn ceilings() {
        assert_eq!(required_distances(&reals(&[5.0, 5.0, 5.0]), 0.0).unwrap(), vec![1, 1]);
        assert_eq!(
            required_distances(&reals(&[5.0, 5.0]), 1e-30),
            Err(Error::AmbiguousCeiling { level: 0 })
        );
        assert_eq!(required_distances(&reals(&[1.0, 2.5]), 0.0).unwrap(), vec![3]);
        assert_eq!(required_distances(&reals(&[2.0, 4.5, 6.5]), 1e-20).unwrap(), vec![4, 2]);
        assert_eq!(required_distances(&reals(&[7.0]), 1e-20).unwrap(), Vec::<u64>::new());
        assert_eq!(
            ratio_ceiling(&real::from_f64(108.0, 128), &real::from_f64(4.0, 128), 1e-20),
            Ceiling::Straddles(27)
        );
    }
}
