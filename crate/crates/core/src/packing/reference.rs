//! Published reference instances: four fields, their chosen primes, and the
//! center-density and exponent values listed for each code length.

use super::finite::log2_center_density;
use crate::codes::max_levels;
use crate::error::Result;
use crate::idealarith::{prime_from_generators, PrimeIdealFactor};
use crate::lattice::{ideal_tower, TowerOptions};
use crate::numfield::{define_field, FieldElement, IntPolynomial, NumberField};
use crate::real;

/// One code length of a reference prime with its published log2 δ.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ReferenceRow {
    pub n: u64,
    pub dimension: u64,
    pub log2_delta: f64,
}

/// A field and prime together with the published values built on it.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ReferencePrime {
    pub table: u8,
    /// Defining polynomial, constant term first.
    pub poly: &'static [i64],
    pub p: u64,
    /// Second ideal generator as power-basis coordinates; empty means (p).
    pub gens: &'static [i64],
    pub q: u64,
    pub lambda: f64,
    pub rows: &'static [ReferenceRow],
}

const fn row(n: u64, dimension: u64, log2_delta: f64) -> ReferenceRow {
    ReferenceRow {
        n,
        dimension,
        log2_delta,
    }
}

const QUARTIC: &[i64] = &[1, 1, -1, -1, 1];
const CUBIC_49: &[i64] = &[-1, -2, 1, 1];
const CUBIC_23: &[i64] = &[-1, 0, 1, 1];
const SEXTIC: &[i64] = &[1, 0, 0, 1, 0, 0, 1];

pub const REFERENCE_PRIMES: &[ReferencePrime] = &[
    ReferencePrime {
        table: 1,
        poly: QUARTIC,
        p: 3,
        gens: &[2, 1, 1],
        q: 9,
        lambda: -1.442,
        rows: &[row(45, 180, 108.52), row(64, 256, 208.09), row(128, 512, 590.52)],
    },
    ReferencePrime {
        table: 1,
        poly: QUARTIC,
        p: 7,
        gens: &[4, 1],
        q: 7,
        lambda: -1.453,
        rows: &[row(64, 256, 190.63), row(100, 400, 410.15)],
    },
    ReferencePrime {
        table: 2,
        poly: CUBIC_49,
        p: 2,
        gens: &[],
        q: 8,
        lambda: -1.628,
        rows: &[row(85, 255, 134.46)],
    },
    ReferencePrime {
        table: 2,
        poly: CUBIC_49,
        p: 7,
        gens: &[5, 1],
        q: 7,
        lambda: -1.585,
        rows: &[row(64, 192, 83.68), row(85, 255, 157.63)],
    },
    ReferencePrime {
        table: 3,
        poly: CUBIC_23,
        p: 2,
        gens: &[],
        q: 8,
        lambda: -1.429,
        rows: &[row(32, 96, 24.70), row(64, 192, 115.40)],
    },
    ReferencePrime {
        table: 3,
        poly: CUBIC_23,
        p: 5,
        gens: &[2, 1],
        q: 5,
        lambda: -1.445,
        rows: &[row(50, 150, 69.47), row(60, 180, 101.01)],
    },
    ReferencePrime {
        table: 3,
        poly: CUBIC_23,
        p: 7,
        gens: &[11, 1],
        q: 7,
        lambda: -1.430,
        rows: &[row(85, 255, 187.32)],
    },
    ReferencePrime {
        table: 4,
        poly: SEXTIC,
        p: 3,
        gens: &[2, 1],
        q: 3,
        lambda: -1.868,
        rows: &[row(30, 180, 109.71), row(32, 192, 122.72)],
    },
];

impl ReferencePrime {
    pub fn field(&self) -> Result<NumberField> {
        define_field(IntPolynomial::from_i64s(self.poly))
    }

    /// The prime ideal (p, gens) of `k`.
    pub fn prime(&self, k: &NumberField, seed: u64) -> Result<PrimeIdealFactor> {
        let mut g = self.gens.to_vec();
        g.resize(k.degree(), 0);
        prime_from_generators(k, self.p, &FieldElement::from_i64s(&g), seed)
    }

    /// Label such as "(3, 2+α+α²)" built from the stored generators.
    pub fn label(&self) -> String {
        if self.gens.is_empty() {
            return format!("({})", self.p);
        }
        let mut terms = Vec::new();
        for (i, &c) in self.gens.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let coeff = if c == 1 && i > 0 { String::new() } else { c.to_string() };
            terms.push(match i {
                0 => coeff,
                1 => format!("{coeff}a"),
                _ => format!("{coeff}a^{i}"),
            });
        }
        format!("({}, {})", self.p, terms.join("+"))
    }
}

/// Σk_i implied by a published log2 δ, given our own minimum of L_ℓ.
/// Published values are rounded to 0.01, so a consistent minimum gives a
/// sum within 0.005/log2 q of an integer.
#[derive(Clone, Debug, PartialEq)]
pub struct ImpliedCodeSum {
    pub levels: usize,
    pub log2_min_sq: f64,
    /// Bound with no code contribution.
    pub base: f64,
    pub sum_k: f64,
}

impl ImpliedCodeSum {
    pub fn distance_to_integer(&self) -> f64 {
        (self.sum_k - self.sum_k.round()).abs()
    }
}

pub fn implied_code_sum(
    k: &NumberField,
    prime: &PrimeIdealFactor,
    n: u64,
    log2_delta: f64,
    opts: &TowerOptions,
) -> Result<ImpliedCodeSum> {
    let m = k.degree();
    let q = prime.q_u64();
    let levels = max_levels(m, q, n);
    let tower = ideal_tower(k, prime, levels, opts)?;
    let log2_min_sq = real::log2_abs(&tower.levels[levels].min_sq);
    let log2_disc = real::log2_int(&dashu_int::IBig::from(k.abs_discriminant()));
    let base = log2_center_density(m, n, levels, q, log2_disc, log2_min_sq, &[]);
    Ok(ImpliedCodeSum {
        levels,
        log2_min_sq,
        base,
        sum_k: (log2_delta - base) / (q as f64).log2(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_reference_prime_resolves() {
        for r in REFERENCE_PRIMES {
            let k = r.field().unwrap();
            let prime = r.prime(&k, 0).unwrap();
            assert_eq!(prime.q_u64(), r.q, "{}", r.label());
            for row in r.rows {
                assert_eq!(row.dimension, k.degree() as u64 * row.n);
            }
        }
    }

    #[test]
    fn labels() {
        assert_eq!(REFERENCE_PRIMES[0].label(), "(3, 2+a+a^2)");
        assert_eq!(REFERENCE_PRIMES[2].label(), "(2)");
    }
}
