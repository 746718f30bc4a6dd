use super::lll::{gram_schmidt, lll_reduce_with_transform, DEFAULT_DELTA};
use crate::embedding::{squared_norm, LatticeBasis};
use crate::error::{Error, Result};
use crate::real::{self, Real};
use dashu_int::IBig;

pub const MAX_SVP_RANK: usize = 16;
pub const MAX_BRUTE_RANK: usize = 6;
pub const MAX_BRUTE_BOUND: i64 = 10;

/// Relative slack on the enumeration radius; candidates are re-evaluated at
/// full precision afterwards, so this only has to cover double rounding.
const RADIUS_SLACK: f64 = 1e-6;

/// A shortest nonzero vector of a lattice.
#[derive(Clone, Debug)]
pub struct SvpResult {
    /// Squared Euclidean minimum.
    pub min_sq: Real,
    /// Coefficients of the shortest vector with respect to the input basis.
    pub witness: Vec<IBig>,
    /// The shortest vector in the coordinates carried by the basis
    /// (power-basis coordinates for ideal lattices).
    pub coords: Vec<IBig>,
    /// Certified relative error bound on `min_sq`.
    pub rel_error: f64,
}

impl SvpResult {
    pub fn min_sq_f64(&self) -> f64 {
        real::to_f64(&self.min_sq)
    }

    pub fn log2_min_sq(&self) -> f64 {
        real::log2_abs(&self.min_sq)
    }
}

/// Certified relative error carried by minima computed at `precision` bits.
pub fn certified_error(precision: usize) -> f64 {
    2f64.powi(-((precision / 4) as i32))
}

fn combine_rows(rows: &[Vec<Real>], x: &[IBig]) -> Vec<Real> {
    let prec = rows[0][0].precision();
    let dim = rows[0].len();
    let mut v = vec![real::zero(prec); dim];
    for (xi, row) in x.iter().zip(rows) {
        if *xi == IBig::ZERO {
            continue;
        }
        let c = real::from_int(xi, prec);
        for (acc, r) in v.iter_mut().zip(row) {
            *acc += &c * r;
        }
    }
    v
}

fn combine_ints(rows: &[Vec<IBig>], x: &[IBig]) -> Vec<IBig> {
    let dim = rows.first().map_or(0, |r| r.len());
    let mut v = vec![IBig::ZERO; dim];
    for (xi, row) in x.iter().zip(rows) {
        for (acc, r) in v.iter_mut().zip(row) {
            *acc += xi * r;
        }
    }
    v
}

/// Pick the shortest candidate at full precision; exact ties go to the
/// lexicographically smallest coefficient vector.
fn select(rows: &[Vec<Real>], candidates: Vec<Vec<IBig>>) -> (Real, Vec<IBig>) {
    let prec = rows[0][0].precision();
    let tie = real::pow2(-((prec / 2) as isize), prec);
    let mut best: Option<(Real, Vec<IBig>)> = None;
    for x in candidates {
        let n = squared_norm(&combine_rows(rows, &x));
        best = match best {
            None => Some((n, x)),
            Some((bn, bx)) => {
                let close = real::abs(&(&n - &bn)) <= &tie * &bn;
                if (close && x < bx) || (!close && n < bn) {
                    Some((n, x))
                } else {
                    Some((bn, bx))
                }
            }
        };
    }
    best.expect("at least one candidate")
}

/// Schnorr–Euchner enumeration of all nonzero vectors (up to sign) whose
/// squared length is within the shrinking radius; inputs are scaled to f64.
fn enumerate(mu: &[Vec<f64>], bstar: &[f64], radius: f64) -> Vec<(Vec<i64>, f64)> {
    let n = bstar.len();
    let mut found: Vec<(Vec<i64>, f64)> = Vec::new();
    let mut r = radius;
    let mut x = vec![0i64; n];
    fn rec(
        k: usize,
        partial: f64,
        x: &mut [i64],
        mu: &[Vec<f64>],
        bstar: &[f64],
        r: &mut f64,
        found: &mut Vec<(Vec<i64>, f64)>,
    ) {
        let n = x.len();
        let c: f64 = -(k + 1..n).map(|j| x[j] as f64 * mu[j][k]).sum::<f64>();
        let top_zero = x[k + 1..].iter().all(|&v| v == 0);
        let base = c.round() as i64;
        // zig-zag around the center
        let mut step = 0i64;
        let mut misses = 0;
        while misses < 2 {
            let candidates: &[i64] = if step == 0 { &[0] } else { &[1, -1] };
            let mut any = false;
            for &sgn in candidates {
                let xk = base + sgn * step;
                let d = xk as f64 - c;
                let p = partial + d * d * bstar[k];
                if p > *r * (1.0 + RADIUS_SLACK) {
                    continue;
                }
                any = true;
                if top_zero && xk < 0 {
                    continue;
                }
                x[k] = xk;
                if k == 0 {
                    if x.iter().any(|&v| v != 0) {
                        if p < *r {
                            *r = p;
                        }
                        found.push((x.to_vec(), p));
                    }
                } else {
                    rec(k - 1, p, x, mu, bstar, r, found);
                }
            }
            x[k] = 0;
            if any {
                misses = 0;
            } else {
                misses += 1;
            }
            step += 1;
        }
    }
    rec(n - 1, 0.0, &mut x, mu, bstar, &mut r, &mut found);
    let limit = r * (1.0 + RADIUS_SLACK);
    found.retain(|(_, p)| *p <= limit);
    found
}

/// Exact shortest nonzero vector: LLL preprocessing followed by unpruned
/// enumeration, with all surviving candidates compared at full precision.
pub fn shortest_vector(basis: &LatticeBasis) -> Result<SvpResult> {
    let n = basis.rank();
    if n > MAX_SVP_RANK {
        return Err(Error::RankTooLarge {
            rank: n,
            max: MAX_SVP_RANK,
        });
    }
    if n == 0 {
        return Err(Error::DomainError("empty basis".into()));
    }
    let (reduced, u) = lll_reduce_with_transform(basis, DEFAULT_DELTA)?;
    let (mu, bstar) = gram_schmidt(&reduced.rows)?;
    // scale so that ‖b*_0‖² = 1 before dropping to f64
    let scale_exp = -(real::log2_abs(&bstar[0]).floor() as isize);
    let prec = basis.precision;
    let scale = real::pow2(scale_exp, prec);
    let bs: Vec<f64> = bstar.iter().map(|b| real::to_f64(&(b * &scale))).collect();
    if bs.iter().any(|b| !(b.is_finite() && *b > 0.0)) {
        return Err(Error::PrecisionExhausted(
            "Gram-Schmidt norms out of range after scaling".into(),
        ));
    }
    let muf: Vec<Vec<f64>> = mu
        .iter()
        .map(|r| r.iter().map(real::to_f64).collect())
        .collect();
    let first = real::to_f64(&(squared_norm(&reduced.rows[0]) * &scale));
    let found = enumerate(&muf, &bs, first);
    let mut candidates: Vec<Vec<IBig>> = found
        .into_iter()
        .map(|(x, _)| x.into_iter().map(IBig::from).collect())
        .collect();
    candidates.push({
        let mut e = vec![IBig::ZERO; n];
        e[0] = IBig::ONE;
        e
    });
    // map to coefficients over the input basis before tie-breaking
    let in_input: Vec<Vec<IBig>> = candidates.iter().map(|x| combine_ints(&u, x)).collect();
    let (min_sq, witness) = select(&basis.rows, normalize_signs(in_input));
    let coords = combine_ints(&basis.coords, &witness);
    Ok(SvpResult {
        min_sq,
        witness,
        coords,
        rel_error: certified_error(prec),
    })
}

/// Make the first nonzero entry positive so ±v compare equal.
fn normalize_signs(v: Vec<Vec<IBig>>) -> Vec<Vec<IBig>> {
    v.into_iter()
        .map(|x| match x.iter().find(|c| **c != IBig::ZERO) {
            Some(c) if *c < IBig::ZERO => x.iter().map(|c| -c).collect(),
            _ => x,
        })
        .collect()
}

/// Minimum squared length over all nonzero coefficient vectors with entries
/// in `[-bound, bound]`, by exhaustive search.
pub fn brute_force_min(basis: &LatticeBasis, coeff_bound: i64) -> Result<Real> {
    let n = basis.rank();
    if n > MAX_BRUTE_RANK || !(1..=MAX_BRUTE_BOUND).contains(&coeff_bound) {
        return Err(Error::BoundTooLarge(format!(
            "rank {n} with bound {coeff_bound}; limits are rank {MAX_BRUTE_RANK}, bound {MAX_BRUTE_BOUND}"
        )));
    }
    // scan in f64 (rows scaled to unit size), then settle near-ties exactly
    let prec = basis.precision;
    let scale_exp = -(real::log2_abs(&squared_norm(&basis.rows[0])).floor() as isize) / 2;
    let scale = real::pow2(scale_exp, prec);
    let rows: Vec<Vec<f64>> = basis
        .rows
        .iter()
        .map(|r| r.iter().map(|x| real::to_f64(&(x * &scale))).collect())
        .collect();
    let dim = rows[0].len();
    let mut x = vec![-coeff_bound; n];
    let mut scored: Vec<(f64, Vec<i64>)> = Vec::new();
    let mut best = f64::INFINITY;
    loop {
        if x.iter().any(|&v| v != 0) && x.iter().find(|&&v| v != 0).copied().unwrap_or(0) > 0 {
            let mut v = vec![0.0; dim];
            for (xi, row) in x.iter().zip(&rows) {
                if *xi != 0 {
                    for (a, r) in v.iter_mut().zip(row) {
                        *a += *xi as f64 * r;
                    }
                }
            }
            let s: f64 = v.iter().map(|a| a * a).sum();
            if s <= best * (1.0 + RADIUS_SLACK) {
                best = best.min(s);
                scored.push((s, x.clone()));
            }
        }
        // odometer increment
        let mut i = 0;
        loop {
            if i == n {
                let limit = best * (1.0 + RADIUS_SLACK);
                let candidates = scored
                    .into_iter()
                    .filter(|(s, _)| *s <= limit)
                    .map(|(_, x)| x.into_iter().map(IBig::from).collect())
                    .collect();
                return Ok(select(&basis.rows, candidates).0);
            }
            x[i] += 1;
            if x[i] > coeff_bound {
                x[i] = -coeff_bound;
                i += 1;
            } else {
                break;
            }
        }
    }
}

/// Compare two minima within their certified error.
pub fn approx_eq(a: &Real, b: &Real, rel: f64) -> bool {
    let diff = real::to_f64(&real::abs(&(a - b)));
    let size = real::to_f64(&real::abs(a)).max(real::to_f64(&real::abs(b)));
    diff <= rel * size
}

#[cfg(test)]
mod tests {
    use super::*;

    fn basis(rows: &[&[i64]]) -> LatticeBasis {
        let prec = 128;
        LatticeBasis::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| real::from_i64(x, prec)).collect())
                .collect(),
            prec,
        )
    }

    #[test]
    fn identity_and_scaled_identity() {
        let id = basis(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]]);
        assert_eq!(real::to_f64(&brute_force_min(&id, 1).unwrap()), 1.0);
        assert_eq!(shortest_vector(&id).unwrap().min_sq_f64(), 1.0);
        let three = basis(&[&[3, 0, 0], &[0, 3, 0], &[0, 0, 3]]);
        assert_eq!(real::to_f64(&brute_force_min(&three, 2).unwrap()), 9.0);
    }

    #[test]
    fn skewed_basis() {
        let b = basis(&[&[1, 1, 1], &[-1, 0, 2], &[3, 5, 6]]);
        let s = shortest_vector(&b).unwrap();
        assert_eq!(s.min_sq_f64(), 1.0);
        let v = combine_rows(&b.rows, &s.witness);
        assert_eq!(real::to_f64(&squared_norm(&v)), 1.0);
        assert_eq!(real::to_f64(&brute_force_min(&b, 8).unwrap()), 1.0);
    }

    #[test]
    fn limits() {
        let b = basis(&[&[1, 0], &[0, 1]]);
        assert!(matches!(brute_force_min(&b, 11), Err(Error::BoundTooLarge(_))));
        let big = LatticeBasis::from_rows(
            (0..17)
                .map(|i| (0..17).map(|j| real::from_i64((i == j) as i64, 64)).collect())
                .collect(),
            64,
        );
        assert!(matches!(shortest_vector(&big), Err(Error::RankTooLarge { .. })));
    }
}
