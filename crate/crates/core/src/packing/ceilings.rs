use crate::codes::{ratio_ceiling, Ceiling};
use crate::error::Result;
use crate::lattice::IdealTower;
use crate::real::{self, Real};

/// Ratios above this many bits are treated through their logarithm only.
pub const LOG_RATIO_CUTOFF: f64 = 50.0;

/// ⌈min_sq(L_ℓ)/min_sq(L_i)⌉ with the precision-doubling guard.
#[derive(Clone, Debug, PartialEq)]
pub struct Distance {
    /// Exact ceiling when the ratio is below 2^50.
    pub value: Option<u64>,
    /// log2 of the ceiling.
    pub log2: f64,
    /// Interval still contained an integer after doubling the precision; the
    /// ratio is taken to be that integer.
    pub snapped: bool,
}

/// Lazily re-evaluated minima at twice the tower precision.
pub struct Refiner<'a> {
    tower: &'a IdealTower,
    refined: Option<Vec<Real>>,
}

impl<'a> Refiner<'a> {
    pub fn new(tower: &'a IdealTower) -> Self {
        Self {
            tower,
            refined: None,
        }
    }

    fn refined(&mut self) -> Result<&[Real]> {
        if self.refined.is_none() {
            let p = 2 * self.tower.ctx.precision();
            self.refined = Some(self.tower.reevaluate(p)?);
        }
        Ok(self.refined.as_deref().expect("just computed"))
    }

    /// Required distance for level i against level ℓ.
    pub fn distance(&mut self, i: usize, l: usize) -> Result<Distance> {
        let levels = &self.tower.levels;
        let (a, b) = (&levels[l].min_sq, &levels[i].min_sq);
        let log2_ratio = real::log2_abs(a) - real::log2_abs(b);
        if log2_ratio > LOG_RATIO_CUTOFF {
            return Ok(Distance {
                value: None,
                log2: log2_ratio,
                snapped: false,
            });
        }
        let rel = levels[l].rel_error.max(levels[i].rel_error);
        let c = match ratio_ceiling(a, b, rel) {
            Ceiling::Certified(d) => Distance {
                value: Some(d),
                log2: (d as f64).log2(),
                snapped: false,
            },
            Ceiling::Straddles(_) => {
                let refined = self.refined()?;
                let rel2 = rel * rel;
                match ratio_ceiling(&refined[l], &refined[i], rel2) {
                    Ceiling::Certified(d) => Distance {
                        value: Some(d),
                        log2: (d as f64).log2(),
                        snapped: false,
                    },
                    Ceiling::Straddles(k) => Distance {
                        value: Some(k),
                        log2: (k as f64).log2(),
                        snapped: true,
                    },
                }
            }
        };
        Ok(c)
    }
}
