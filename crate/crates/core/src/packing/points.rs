//! Explicit points of τ(C_0) + … + τ(C_{ℓ−1}) + L_ℓ^n inside a ball, for
//! checking minimum distances by exhaustion at tiny scale.

use crate::codes::LinearCode;
use crate::embedding::EmbeddingContext;
use crate::error::{Error, Result};
use crate::idealarith::AlphabetSet;
use crate::real;
use dashu_int::IBig;
use std::collections::HashSet;

pub const MAX_POINTS: usize = 100_000;
pub const MAX_DEGREE: usize = 2;
pub const MAX_LENGTH: usize = 4;
pub const MAX_LEVELS: usize = 2;

/// A code used at one level together with the alphabet lifting its symbols.
#[derive(Clone, Debug)]
pub struct LevelCode {
    pub code: LinearCode,
    pub alphabet: AlphabetSet,
}

/// Points as integer power-basis coordinates (n blocks of m), with the
/// integral Gram matrix of the power basis under τ.
#[derive(Clone, Debug)]
pub struct PointSet {
    pub m: usize,
    pub n: usize,
    pub gram: Vec<Vec<i64>>,
    pub points: Vec<Vec<i64>>,
    /// Number of points contributed by each tuple of codewords.
    pub per_shift: Vec<usize>,
}

impl PointSet {
    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    /// ‖τ(x)‖² for a vector of n blocks.
    pub fn squared_length(&self, x: &[i64]) -> i64 {
        squared_length(&self.gram, self.m, x)
    }
}

fn squared_length(gram: &[Vec<i64>], m: usize, x: &[i64]) -> i64 {
    x.chunks(m)
        .map(|b| {
            let mut s = 0;
            for i in 0..m {
                for j in 0..m {
                    s += b[i] * gram[i][j] * b[j];
                }
            }
            s
        })
        .sum()
}

/// Gram matrix ⟨τ(α^i), τ(α^j)⟩, which is integral for degree ≤ 2.
pub fn integral_gram(ctx: &EmbeddingContext) -> Result<Vec<Vec<i64>>> {
    let m = ctx.degree();
    let basis: Vec<Vec<real::Real>> = (0..m)
        .map(|i| {
            let mut c = vec![IBig::ZERO; m];
            c[i] = IBig::ONE;
            ctx.embed_coords(&c)
        })
        .collect();
    let g = crate::embedding::gram(&basis);
    let mut out = vec![vec![0i64; m]; m];
    for i in 0..m {
        for j in 0..m {
            let v = real::to_f64(&g[i][j]);
            let r = v.round();
            if (v - r).abs() > 1e-9 {
                return Err(Error::Unsupported(
                    "the trace form of this field is not integral on the power basis".into(),
                ));
            }
            out[i][j] = r as i64;
        }
    }
    Ok(out)
}

fn to_i64(v: &[IBig]) -> Result<Vec<i64>> {
    v.iter()
        .map(|x| i64::try_from(x).map_err(|_| Error::ScaleTooLarge("coordinate overflow".into())))
        .collect()
}

/// All y ∈ shift + L (L spanned by `basis`, integer coordinates) with
/// ‖τ(y)‖² ≤ radius_sq, found by bounding each coefficient from the inverse
/// Gram matrix of the basis.
fn block_points(gram: &[Vec<i64>], basis: &[Vec<i64>], shift: &[i64], radius_sq: i64) -> Vec<Vec<i64>> {
    let m = basis.len();
    let gf = |a: &[f64], b: &[f64]| -> f64 {
        let mut s = 0.0;
        for i in 0..m {
            for j in 0..m {
                s += a[i] * gram[i][j] as f64 * b[j];
            }
        }
        s
    };
    let bf: Vec<Vec<f64>> = basis.iter().map(|r| r.iter().map(|&x| x as f64).collect()).collect();
    let sf: Vec<f64> = shift.iter().map(|&x| x as f64).collect();
    let gb: Vec<Vec<f64>> = (0..m).map(|i| (0..m).map(|j| gf(&bf[i], &bf[j])).collect()).collect();
    let inv = invert(&gb);
    // center minimizing ‖τ(shift + zB)‖²: z* = −(⟨shift, b_j⟩) · Gb^{-1}
    let rhs: Vec<f64> = (0..m).map(|j| gf(&sf, &bf[j])).collect();
    let center: Vec<f64> = (0..m)
        .map(|t| -(0..m).map(|j| rhs[j] * inv[j][t]).sum::<f64>())
        .collect();
    let r = radius_sq as f64;
    let ranges: Vec<(i64, i64)> = (0..m)
        .map(|t| {
            let w = (r * inv[t][t]).sqrt() + 1e-6;
            ((center[t] - w).ceil() as i64, (center[t] + w).floor() as i64)
        })
        .collect();
    let mut out = Vec::new();
    let mut z: Vec<i64> = ranges.iter().map(|r| r.0).collect();
    if ranges.iter().any(|(lo, hi)| lo > hi) {
        return out;
    }
    loop {
        let mut y = shift.to_vec();
        for (t, zt) in z.iter().enumerate() {
            for (yc, bc) in y.iter_mut().zip(&basis[t]) {
                *yc += zt * bc;
            }
        }
        if squared_length(gram, m, &y) <= radius_sq {
            out.push(y);
        }
        let mut t = 0;
        loop {
            if t == m {
                return out;
            }
            z[t] += 1;
            if z[t] > ranges[t].1 {
                z[t] = ranges[t].0;
                t += 1;
            } else {
                break;
            }
        }
    }
}

fn invert(a: &[Vec<f64>]) -> Vec<Vec<f64>> {
    match a.len() {
        1 => vec![vec![1.0 / a[0][0]]],
        2 => {
            let det = a[0][0] * a[1][1] - a[0][1] * a[1][0];
            vec![
                vec![a[1][1] / det, -a[0][1] / det],
                vec![-a[1][0] / det, a[0][0] / det],
            ]
        }
        _ => unreachable!("degree is at most 2"),
    }
}

/// Points Σ_i τ(lift_i(c_i)) + τ(x), x ∈ (𝔭^ℓ)^n, with squared norm ≤ radius_sq.
/// `lattice_basis` holds integer coordinates of a basis of 𝔭^ℓ.
pub fn enumerate_packing_points(
    ctx: &EmbeddingContext,
    lattice_basis: &[Vec<IBig>],
    codes: &[LevelCode],
    n: usize,
    radius_sq: i64,
) -> Result<PointSet> {
    let m = ctx.degree();
    if m > MAX_DEGREE || n > MAX_LENGTH || codes.len() > MAX_LEVELS {
        return Err(Error::ScaleTooLarge(format!(
            "point enumeration needs m ≤ {MAX_DEGREE}, n ≤ {MAX_LENGTH}, ℓ ≤ {MAX_LEVELS}"
        )));
    }
    if codes.iter().any(|c| c.code.n != n) {
        return Err(Error::DimensionMismatch {
            expected: n,
            got: codes.iter().map(|c| c.code.n).find(|&l| l != n).unwrap_or(n),
        });
    }
    let shifts: u64 = codes.iter().map(|c| c.code.size()).product();
    if shifts > MAX_POINTS as u64 {
        return Err(Error::ScaleTooLarge(format!("{shifts} codeword tuples")));
    }
    let gram = integral_gram(ctx)?;
    let basis: Vec<Vec<i64>> = lattice_basis
        .iter()
        .map(|r| to_i64(r))
        .collect::<Result<_>>()?;
    let alphabets: Vec<Vec<Vec<i64>>> = codes
        .iter()
        .map(|c| {
            (0..c.alphabet.len())
                .map(|j| to_i64(&c.alphabet.coords(j)))
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<_>>()?;

    let mut seen: HashSet<Vec<i64>> = HashSet::new();
    let mut points = Vec::new();
    let mut per_shift = Vec::with_capacity(shifts as usize);
    for idx in 0..shifts {
        // decode the tuple of codewords and sum their lifts
        let mut rest = idx;
        let mut shift = vec![0i64; n * m];
        for (c, alpha) in codes.iter().zip(&alphabets) {
            let size = c.code.size();
            let word = c.code.codeword(rest % size);
            rest /= size;
            for (pos, &sym) in word.iter().enumerate() {
                for t in 0..m {
                    shift[pos * m + t] += alpha[sym][t];
                }
            }
        }
        // combine per-block candidates under the total radius
        let blocks: Vec<Vec<(i64, Vec<i64>)>> = (0..n)
            .map(|pos| {
                block_points(&gram, &basis, &shift[pos * m..(pos + 1) * m], radius_sq)
                    .into_iter()
                    .map(|y| (squared_length(&gram, m, &y), y))
                    .collect()
            })
            .collect();
        let before = points.len();
        let mut stack: Vec<(usize, i64, Vec<i64>)> = vec![(0, 0, Vec::with_capacity(n * m))];
        while let Some((pos, used, acc)) = stack.pop() {
            if pos == n {
                if seen.insert(acc.clone()) {
                    points.push(acc);
                    if points.len() > MAX_POINTS {
                        return Err(Error::ScaleTooLarge(format!(
                            "more than {MAX_POINTS} points in the ball"
                        )));
                    }
                }
                continue;
            }
            for (norm, y) in &blocks[pos] {
                if used + norm <= radius_sq {
                    let mut next = acc.clone();
                    next.extend_from_slice(y);
                    stack.push((pos + 1, used + norm, next));
                }
            }
        }
        per_shift.push(points.len() - before);
    }
    Ok(PointSet {
        m,
        n,
        gram,
        points,
        per_shift,
    })
}

/// Exact minimum squared distance between distinct points; +∞ for fewer than two.
pub fn verify_min_distance(set: &PointSet) -> f64 {
    let mut best = i64::MAX;
    let pts = &set.points;
    let mut diff = vec![0i64; set.n * set.m];
    for i in 0..pts.len() {
        for j in i + 1..pts.len() {
            for (d, (a, b)) in diff.iter_mut().zip(pts[i].iter().zip(&pts[j])) {
                *d = a - b;
            }
            let s = set.squared_length(&diff);
            assert!(s > 0, "duplicate points survived deduplication");
            best = best.min(s);
        }
    }
    if best == i64::MAX {
        f64::INFINITY
    } else {
        best as f64
    }
}

/// One randomly drawn instance of the small-scale concatenation check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TinyInstance {
    /// Coefficients of a quadratic defining polynomial, constant term first.
    pub poly: Vec<i64>,
    pub p: u64,
    pub index: usize,
    pub n: usize,
    pub levels: usize,
    /// Codes violating the distance condition on purpose.
    pub negative: bool,
    pub seed: u64,
}

/// What the enumeration found for a [`TinyInstance`].
#[derive(Clone, Debug)]
pub struct TinyOutcome {
    pub instance: TinyInstance,
    pub q: u64,
    /// min_sq(L_i) for i = 0..=ℓ, exact for these fields.
    pub min_sqs: Vec<i64>,
    pub code_dims: Vec<usize>,
    pub code_distances: Vec<usize>,
    /// d_{C_i}·min_sq(L_i) ≥ min_sq(L_ℓ) at every level.
    pub condition_holds: bool,
    pub points: usize,
    pub shifts: u64,
    pub min_distance: f64,
}

impl TinyOutcome {
    /// Positive instances must hit min_sq(L_ℓ) exactly, negative ones must
    /// find a closer pair.
    pub fn passed(&self) -> bool {
        let top = *self.min_sqs.last().expect("at least one level") as f64;
        if self.condition_holds {
            self.min_distance == top
        } else {
            self.min_distance < top
        }
    }
}

const TINY_FIELDS: [(&[i64], &[u64]); 4] = [
    (&[1, 0, 1], &[2, 5]),
    (&[2, 0, 1], &[2, 3]),
    (&[1, 1, 1], &[2, 3, 7]),
    (&[-2, 0, 1], &[2, 7]),
];

const MAX_SHIFTS: u64 = 20_000;

/// A deterministic family of tiny instances: `positives` satisfying the
/// distance condition followed by `negatives` that break it. Draws whose
/// required distances exceed n are skipped.
pub fn tiny_instances(seed: u64, positives: usize, negatives: usize) -> Vec<TinyInstance> {
    use rand::{Rng, SeedableRng};
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(positives + negatives);
    while out.len() < positives + negatives {
        let (poly, primes) = TINY_FIELDS[rng.gen_range(0..TINY_FIELDS.len())];
        let inst = TinyInstance {
            poly: poly.to_vec(),
            p: primes[rng.gen_range(0..primes.len())],
            index: rng.gen_range(0..2),
            n: rng.gen_range(2..=MAX_LENGTH),
            levels: rng.gen_range(1..=MAX_LEVELS),
            negative: out.len() >= positives,
            seed: rng.gen(),
        };
        let ok = match tiny_minima(&inst) {
            Ok((_, q, mins)) => {
                let top = mins[inst.levels];
                inst.negative
                    || mins[..inst.levels]
                        .iter()
                        .all(|&ms| ((top + ms - 1) / ms) as usize <= inst.n)
                        && q.pow(inst.levels as u32) <= MAX_SHIFTS
            }
            Err(_) => false,
        };
        if ok {
            out.push(inst);
        }
    }
    out
}

type TinySetup = (
    (crate::numfield::NumberField, crate::idealarith::PrimeIdealFactor, crate::lattice::IdealTower),
    u64,
    Vec<i64>,
);

fn tiny_minima(inst: &TinyInstance) -> Result<TinySetup> {
    use crate::idealarith::factor_prime;
    use crate::lattice::{ideal_tower, TowerOptions};
    use crate::numfield::{define_field, IntPolynomial};

    let k = define_field(IntPolynomial::from_i64s(&inst.poly))?;
    let mut factors = factor_prime(&k, inst.p, inst.seed)?;
    let prime = factors.swap_remove(inst.index % factors.len());
    let q = prime.q_u64();
    let tower = ideal_tower(&k, &prime, inst.levels, &TowerOptions::default())?;
    let mins = tower
        .levels
        .iter()
        .map(|l| real::to_f64(&l.min_sq).round() as i64)
        .collect();
    Ok(((k, prime, tower), q, mins))
}

fn random_code<R: rand::Rng>(q: u64, n: usize, d: usize, rng: &mut R) -> Result<LinearCode> {
    use crate::codes::GaloisField;
    let field = GaloisField::new(q)?;
    let d = d.max(1);
    if d > n {
        return Err(Error::Unsupported(format!("no code of length {n} with distance {d}")));
    }
    // largest k that a random search finds, starting at the Singleton bound
    for k in (1..=n + 1 - d).rev() {
        if (q as f64).powi(k as i32) > MAX_SHIFTS as f64 {
            continue;
        }
        for _ in 0..24 {
            let generator: Vec<Vec<usize>> = (0..k)
                .map(|_| (0..n).map(|_| rng.gen_range(0..q as usize)).collect())
                .collect();
            if let Ok(code) = LinearCode::from_generator(field.clone(), generator) {
                if code.d >= d {
                    return Ok(code);
                }
            }
        }
    }
    LinearCode::from_generator(field, vec![vec![1; n]])
}

/// Weight-one code spanned by the first unit vector.
fn unit_code(q: u64, n: usize) -> Result<LinearCode> {
    let field = crate::codes::GaloisField::new(q)?;
    let mut row = vec![0; n];
    row[0] = 1;
    LinearCode::from_generator(field, vec![row])
}

/// Builds the codes for `inst`, enumerates the ball of radius min_sq(L_ℓ)
/// and measures its minimum distance.
pub fn run_tiny_instance(inst: &TinyInstance) -> Result<TinyOutcome> {
    use crate::idealarith::{alphabet_set, ideal_power};
    use rand::SeedableRng;

    let ((k, prime, tower), q, min_sqs) = tiny_minima(inst)?;
    let prime = &prime;
    let top = min_sqs[inst.levels];

    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(inst.seed);
    let mut codes = Vec::with_capacity(inst.levels);
    for i in 0..inst.levels {
        let code = if inst.negative {
            unit_code(q, inst.n)?
        } else {
            let need = ((top + min_sqs[i] - 1) / min_sqs[i]) as usize;
            random_code(q, inst.n, need, &mut rng)?
        };
        codes.push(LevelCode {
            code,
            alphabet: alphabet_set(&k, prime, i)?,
        });
    }
    let condition_holds = codes
        .iter()
        .zip(&min_sqs)
        .all(|(c, &ms)| c.code.d as i64 * ms >= top);
    let shifts: u64 = codes.iter().map(|c| c.code.size()).product();
    if shifts > MAX_SHIFTS {
        return Err(Error::ScaleTooLarge(format!("{shifts} codeword tuples")));
    }

    let top_ideal = ideal_power(&k, &prime.hnf, inst.levels as u64)?;
    let set = enumerate_packing_points(&tower.ctx, top_ideal.rows(), &codes, inst.n, top)?;
    Ok(TinyOutcome {
        instance: inst.clone(),
        q,
        min_sqs,
        code_dims: codes.iter().map(|c| c.code.k).collect(),
        code_distances: codes.iter().map(|c| c.code.d).collect(),
        condition_holds,
        points: set.len(),
        shifts,
        min_distance: verify_min_distance(&set),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::codes::GaloisField;
    use crate::idealarith::{alphabet_set, factor_prime, ideal_power};
    use crate::numfield::{define_field, IntPolynomial};

    fn gaussian_setup(generator: Vec<usize>) -> (EmbeddingContext, Vec<Vec<IBig>>, Vec<LevelCode>) {
        let k = define_field(IntPolynomial::from_i64s(&[1, 0, 1])).unwrap();
        let prime = factor_prime(&k, 2, 0).unwrap().remove(0);
        let ctx = EmbeddingContext::new(&k, 128).unwrap();
        let basis = ideal_power(&k, &prime.hnf, 1).unwrap().rows().to_vec();
        let code = LinearCode::from_generator(GaloisField::new(2).unwrap(), vec![generator]).unwrap();
        let lc = LevelCode {
            code,
            alphabet: alphabet_set(&k, &prime, 0).unwrap(),
        };
        (ctx, basis, vec![lc])
    }

    #[test]
    fn gaussian_gram_is_twice_identity() {
        let k = define_field(IntPolynomial::from_i64s(&[1, 0, 1])).unwrap();
        let ctx = EmbeddingContext::new(&k, 128).unwrap();
        assert_eq!(integral_gram(&ctx).unwrap(), vec![vec![2, 0], vec![0, 2]]);
    }

    #[test]
    fn repetition_code_keeps_the_lattice_minimum() {
        let (ctx, basis, codes) = gaussian_setup(vec![1, 1, 1, 1]);
        let set = enumerate_packing_points(&ctx, &basis, &codes, 4, 4).unwrap();
        assert_eq!(verify_min_distance(&set), 4.0);
    }

    #[test]
    fn weight_one_code_breaks_the_minimum() {
        let (ctx, basis, codes) = gaussian_setup(vec![1, 0, 0, 0]);
        let set = enumerate_packing_points(&ctx, &basis, &codes, 4, 4).unwrap();
        assert!(verify_min_distance(&set) < 4.0);
    }

    #[test]
    fn lattice_only_ball() {
        let (ctx, basis, _) = gaussian_setup(vec![1, 1, 1, 1]);
        // radius below the minimum leaves only the origin
        let set = enumerate_packing_points(&ctx, &basis, &[], 2, 3).unwrap();
        assert_eq!(set.len(), 1);
        assert_eq!(verify_min_distance(&set), f64::INFINITY);
        // at the minimum: origin plus the 4 shortest vectors in each of 2 blocks
        let set = enumerate_packing_points(&ctx, &basis, &[], 2, 4).unwrap();
        assert_eq!(set.len(), 9);
    }

    #[test]
    fn scale_limits() {
        let (ctx, basis, _) = gaussian_setup(vec![1, 1, 1, 1]);
        assert!(matches!(
            enumerate_packing_points(&ctx, &basis, &[], 5, 4),
            Err(Error::ScaleTooLarge(_))
        ));
        let k = define_field(IntPolynomial::from_i64s(&[-1, -2, 1, 1])).unwrap();
        let ctx = EmbeddingContext::new(&k, 128).unwrap();
        assert!(enumerate_packing_points(&ctx, &basis, &[], 2, 4).is_err());
    }

    #[test]
    fn tiny_suite_is_deterministic() {
        assert_eq!(tiny_instances(7, 5, 2), tiny_instances(7, 5, 2));
        assert!(tiny_instances(7, 5, 2)[5].negative);
    }

    #[test]
    fn tiny_suite_passes() {
        for inst in tiny_instances(11, 6, 3) {
            let out = run_tiny_instance(&inst).unwrap();
            assert_eq!(out.condition_holds, !inst.negative, "{out:?}");
            assert!(out.passed(), "{out:?}");
        }
    }
}
