//! Minima of τ(𝔭^i) for i = 0..ℓ, walking the chain 𝔭^i ⊃ 𝔭^{i+1} with
//! reduced bases so that high levels stay cheap.

use super::lll::{lll_reduce, DEFAULT_DELTA};
use super::svp::{shortest_vector, SvpResult};
use crate::embedding::{check_determinant, level_precision, EmbeddingContext, LatticeBasis};
use crate::error::{Error, Result};
use crate::idealarith::{hnf_mod, PrimeIdealFactor};
use crate::linalg;
use crate::numfield::NumberField;
use crate::real::{self, Real};
use dashu_int::IBig;
use dashu_ratio::RBig;

/// Options shared by every tower computation.
#[derive(Clone, Debug)]
pub struct TowerOptions {
    /// Working precision; `None` picks the level-aware default.
    pub precision: Option<usize>,
    pub lll_delta: f64,
    /// Move one root by 2^{-bits} before embedding (testing hook).
    pub root_fault_bits: Option<usize>,
}

impl Default for TowerOptions {
    fn default() -> Self {
        Self {
            precision: None,
            lll_delta: DEFAULT_DELTA,
            root_fault_bits: None,
        }
    }
}

/// Squared minimum of τ(𝔭^i) with the data needed to re-evaluate it.
#[derive(Clone, Debug)]
pub struct LevelMinimum {
    pub level: usize,
    /// N(𝔭^i) = q^i.
    pub norm: IBig,
    pub min_sq: Real,
    /// Power-basis coordinates of a shortest element.
    pub witness: Vec<IBig>,
    pub rel_error: f64,
    /// Relative deviation of |det| from q^i·√|D_K|.
    pub det_rel_error: f64,
}

/// The ideal tower of a prime together with the context used to embed it.
#[derive(Clone, Debug)]
pub struct IdealTower {
    pub ctx: EmbeddingContext,
    pub levels: Vec<LevelMinimum>,
}

impl IdealTower {
    pub fn min_sqs(&self) -> Vec<Real> {
        self.levels.iter().map(|l| l.min_sq.clone()).collect()
    }

    /// Re-evaluate every minimum from its witness at a new precision.
    pub fn reevaluate(&self, precision: usize) -> Result<Vec<Real>> {
        let ctx = EmbeddingContext::new(self.ctx.field(), precision)?;
        Ok(self
            .levels
            .iter()
            .map(|l| ctx.squared_length(&l.witness))
            .collect())
    }
}

/// Lemma-type corridor m·N^{2/m} ≤ min_sq ≤ m·(N·√|D_K|)^{2/m}, checked in log2.
pub fn check_corridor(m: usize, norm: &IBig, abs_disc: &IBig, min_sq: &Real, rel: f64) -> Result<()> {
    let mf = m as f64;
    let log_n = real::log2_int(norm);
    let log_d = real::log2_int(abs_disc);
    let lower = mf.log2() + 2.0 * log_n / mf;
    let upper = mf.log2() + 2.0 * (log_n + 0.5 * log_d) / mf;
    let v = real::log2_abs(min_sq);
    // allow the certified error plus double rounding of the logarithms
    let slack = rel / std::f64::consts::LN_2 + 1e-12 * v.abs().max(1.0);
    if v < lower - slack || v > upper + slack {
        return Err(Error::PrecisionExhausted(format!(
            "minimum outside the bound corridor: log2 min_sq = {v}, corridor [{lower}, {upper}]"
        )));
    }
    Ok(())
}

fn identity(m: usize) -> Vec<Vec<IBig>> {
    (0..m)
        .map(|i| {
            (0..m)
                .map(|j| if i == j { IBig::ONE } else { IBig::ZERO })
                .collect()
        })
        .collect()
}

/// Basis of 𝔭·I from a basis of I: the index-q sublattice spanned by p·b_j
/// and g·b_j, found as an HNF modulo p in the coordinates of the old basis.
fn next_basis(k: &NumberField, basis: &[Vec<IBig>], g: &[IBig], p: &IBig) -> Result<Vec<Vec<IBig>>> {
    let m = k.degree();
    let rat: Vec<Vec<RBig>> = basis
        .iter()
        .map(|r| r.iter().map(|x| RBig::from(x.clone())).collect())
        .collect();
    let inv = linalg::inverse_rat(&rat)
        .ok_or_else(|| Error::PrecisionExhausted("singular ideal basis".into()))?;
    let mut gens = Vec::with_capacity(m);
    for b in basis {
        let gb: Vec<RBig> = k
            .mul_int(b, g)
            .into_iter()
            .map(RBig::from)
            .collect();
        let c = linalg::vec_mat_rat(&gb, &inv);
        let ints = c
            .into_iter()
            .map(|x| {
                let (num, den) = x.into_parts();
                if den != dashu_int::UBig::ONE {
                    return Err(Error::NotIntegral);
                }
                Ok(num)
            })
            .collect::<Result<Vec<IBig>>>()?;
        gens.push(ints);
    }
    let h = hnf_mod(&gens, m, p);
    Ok(linalg::mat_mul_int(&h, basis))
}

/// Minima of τ(𝔭^i), i = 0..=levels.
pub fn ideal_tower(
    k: &NumberField,
    prime: &PrimeIdealFactor,
    levels: usize,
    opts: &TowerOptions,
) -> Result<IdealTower> {
    let m = k.degree();
    let q = prime.q_u64();
    let precision = opts
        .precision
        .unwrap_or_else(|| level_precision(m, q, levels));
    let mut ctx = EmbeddingContext::new(k, precision)?;
    if let Some(bits) = opts.root_fault_bits {
        ctx = ctx.with_root_fault(bits);
    }
    let p = IBig::from(prime.p);
    let g = prime.generator(k).int_coords().expect("integral generator");
    let qi = IBig::from(q);
    let abs_disc = IBig::from(k.abs_discriminant());

    let mut coords = identity(m);
    let mut norm = IBig::ONE;
    let mut out: Vec<LevelMinimum> = Vec::with_capacity(levels + 1);
    for level in 0..=levels {
        if level > 0 {
            coords = next_basis(k, &coords, &g, &p)?;
            norm *= &qi;
            let det = linalg::det_int(&coords);
            if det.clone() * det.clone() != norm.clone() * norm.clone() {
                return Err(Error::Validation(format!(
                    "index of level {level} in level {} is not q",
                    level - 1
                )));
            }
        }
        let basis = LatticeBasis::from_coords(&ctx, coords.clone());
        let reduced = lll_reduce(&basis, opts.lll_delta)?;
        coords = reduced.coords.clone();
        // re-embed from exact coordinates so errors never accumulate
        let mut basis = LatticeBasis::from_coords(&ctx, coords.clone());
        basis.det_rel_error = check_determinant(&ctx, &basis, &norm)?;
        let svp: SvpResult = shortest_vector(&basis)?;
        let min_sq = ctx.squared_length(&svp.coords);
        check_corridor(m, &norm, &abs_disc, &min_sq, svp.rel_error)?;
        if let Some(prev) = out.last() {
            // 1 − 4·rel in working precision; in f64 this rounds to 1
            let tol = real::from_i64(1, precision) - real::from_f64(4.0 * svp.rel_error, precision);
            if min_sq < &prev.min_sq * &tol {
                return Err(Error::PrecisionExhausted(format!(
                    "tower minima decrease from level {} to {level}",
                    level - 1
                )));
            }
        }
        out.push(LevelMinimum {
            level,
            norm: norm.clone(),
            min_sq,
            witness: svp.coords,
            rel_error: svp.rel_error,
            det_rel_error: basis.det_rel_error,
        });
    }
    Ok(IdealTower { ctx, levels: out })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::idealarith::factor_prime;
    use crate::numfield::{define_field, IntPolynomial};

    #[test]
    fn quartic_minima_for_three_levels() {
        let k = define_field(IntPolynomial::from_i64s(&[1, 1, -1, -1, 1])).unwrap();
        let prime = &factor_prime(&k, 3, 0).unwrap()[0];
        let t = ideal_tower(&k, prime, 3, &TowerOptions::default()).unwrap();
        let v: Vec<f64> = t.levels.iter().map(|l| real::to_f64(&l.min_sq)).collect();
        for (got, want) in v.iter().zip([4.0, 12.0, 36.0, 108.0]) {
            assert!((got - want).abs() < 1e-30 * want, "{got} vs {want}");
        }
    }

    #[test]
    fn gaussian_prime_over_two() {
        let k = define_field(IntPolynomial::from_i64s(&[1, 0, 1])).unwrap();
        let prime = &factor_prime(&k, 2, 0).unwrap()[0];
        let t = ideal_tower(&k, prime, 2, &TowerOptions::default()).unwrap();
        let v: Vec<f64> = t.levels.iter().map(|l| real::to_f64(&l.min_sq)).collect();
        assert_eq!(v, vec![2.0, 4.0, 8.0]);
    }
}
