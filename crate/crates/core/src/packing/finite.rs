use super::ceilings::Refiner;
use super::volume::log2_ball_volume;
use crate::codes::{max_levels, CodeTable};
use crate::error::{Error, Result};
use crate::idealarith::PrimeIdealFactor;
use crate::lattice::{ideal_tower, IdealTower, TowerOptions};
use crate::numfield::NumberField;
use crate::real;

/// Everything behind one center-density bound for L_ℓ^n concatenated with codes.
#[derive(Clone, Debug, PartialEq)]
pub struct PackingReport {
    pub polynomial: String,
    pub degree: usize,
    pub abs_discriminant: String,
    pub log2_abs_discriminant: f64,
    pub p: u64,
    pub generators: String,
    pub q: u64,
    pub n: u64,
    pub levels: usize,
    /// min_sq(L_i), i = 0..=ℓ, as f64 (informational).
    pub min_sqs: Vec<f64>,
    /// log2 min_sq(L_ℓ), the only minimum entering the bound.
    pub log2_min_sq: f64,
    pub required_d: Vec<u64>,
    /// Levels whose ceiling was taken as an exact integer ratio.
    pub snapped_levels: Vec<usize>,
    pub code_dims: Vec<u64>,
    pub dimension: u64,
    pub log2_center_density: f64,
    pub log2_volume: f64,
    pub log2_density: f64,
    pub precision: usize,
    pub notes: Vec<String>,
}

/// log2 δ ≥ (mn/2)·log2 min_sq(L_ℓ) − mn − nℓ·log2 q − (n/2)·log2|D_K| + log2 q·Σk_i.
pub fn log2_center_density(
    m: usize,
    n: u64,
    levels: usize,
    q: u64,
    log2_abs_disc: f64,
    log2_min_sq: f64,
    code_dims: &[u64],
) -> f64 {
    let mn = (m as u64 * n) as f64;
    let nf = n as f64;
    let lq = (q as f64).log2();
    let sum_k: u64 = code_dims.iter().sum();
    0.5 * mn * log2_min_sq - mn - nf * levels as f64 * lq - 0.5 * nf * log2_abs_disc
        + lq * sum_k as f64
}

impl PackingReport {
    /// Recompute the bound from the stored fields.
    pub fn recompute(&self) -> f64 {
        log2_center_density(
            self.degree,
            self.n,
            self.levels,
            self.q,
            self.log2_abs_discriminant,
            self.log2_min_sq,
            &self.code_dims,
        )
    }
}

/// Level count, ideal tower and d_i = ⌈min_sq(L_ℓ)/min_sq(L_i)⌉ for length n.
#[derive(Clone, Debug)]
pub struct RequiredDistances {
    pub levels: usize,
    pub tower: IdealTower,
    pub required_d: Vec<u64>,
    /// Levels whose ceiling was taken as an exact integer ratio.
    pub snapped_levels: Vec<usize>,
}

pub fn required_code_distances(
    k: &NumberField,
    prime: &PrimeIdealFactor,
    n: u64,
    opts: &TowerOptions,
) -> Result<RequiredDistances> {
    if n < 1 {
        return Err(Error::Validation("code length must be positive".into()));
    }
    let levels = max_levels(k.degree(), prime.q_u64(), n);
    let tower = ideal_tower(k, prime, levels, opts)?;
    let mut refiner = Refiner::new(&tower);
    let mut required_d = Vec::with_capacity(levels);
    let mut snapped_levels = Vec::new();
    for i in 0..levels {
        let d = refiner.distance(i, levels)?;
        if d.snapped {
            snapped_levels.push(i);
        }
        required_d.push(d.value.unwrap_or(u64::MAX));
    }
    Ok(RequiredDistances {
        levels,
        tower,
        required_d,
        snapped_levels,
    })
}

/// Center-density bound for the concatenation of L_ℓ^n with best known codes,
/// ℓ being the largest level count with q^{2ℓ} ≤ n^m.
pub fn finite_density_report(
    k: &NumberField,
    prime: &PrimeIdealFactor,
    n: u64,
    table: &CodeTable,
    opts: &TowerOptions,
) -> Result<PackingReport> {
    if n < 1 {
        return Err(Error::Validation("code length must be positive".into()));
    }
    let m = k.degree();
    let q = prime.q_u64();
    let RequiredDistances {
        levels,
        tower,
        required_d,
        snapped_levels,
    } = required_code_distances(k, prime, n, opts)?;
    let mut code_dims = Vec::with_capacity(levels);
    let mut notes = Vec::new();
    for &d in &required_d {
        code_dims.push(table.best_dimension(q, n, d)?);
        if let Some(src) = table.provenance(q, n, d) {
            if !src.is_empty() {
                notes.push(format!("d={d}: {src}"));
            }
        }
    }
    if levels == 0 {
        notes.push("n < q^(2/m): no code levels, bare lattice L_0^n".into());
    }
    let abs_disc = dashu_int::IBig::from(k.abs_discriminant());
    let log2_abs_disc = real::log2_int(&abs_disc);
    let log2_min_sq = real::log2_abs(&tower.levels[levels].min_sq);
    let dimension = m as u64 * n;
    let log2_cd = log2_center_density(m, n, levels, q, log2_abs_disc, log2_min_sq, &code_dims);
    let log2_volume = log2_ball_volume(dimension as usize);
    Ok(PackingReport {
        polynomial: k.polynomial().to_string(),
        degree: m,
        abs_discriminant: abs_disc.to_string(),
        log2_abs_discriminant: log2_abs_disc,
        p: prime.p,
        generators: prime.label(k),
        q,
        n,
        levels,
        min_sqs: tower.levels.iter().map(|l| real::to_f64(&l.min_sq)).collect(),
        log2_min_sq,
        required_d,
        snapped_levels,
        code_dims,
        dimension,
        log2_center_density: log2_cd,
        log2_volume,
        log2_density: log2_cd + log2_volume,
        precision: tower.ctx.precision(),
        notes,
    })
}
