//! Center-density bounds for concatenated packings, the asymptotic density
//! exponent of the family n_ℓ, and exhaustive point checks at tiny scale.
//!
//! Reports describe the point set τ(C_0) + … + τ(C_{ℓ−1}) + L_ℓ^n. Whether
//! that set is itself a lattice depends on the codes and is not asserted.

pub mod asymptotic;
pub mod ceilings;
pub mod finite;
pub mod points;
pub mod reference;
pub mod volume;

pub use asymptotic::{
    asymptotic_lambda, family_length, AsymptoticReport, DEEP_LMAX, DEFAULT_CHECKPOINTS,
    DEFAULT_LMAX, MIN_LMAX,
};
pub use ceilings::{Distance, Refiner, LOG_RATIO_CUTOFF};
pub use finite::{
    finite_density_report, log2_center_density, required_code_distances, PackingReport,
    RequiredDistances,
};
pub use points::{
    enumerate_packing_points, integral_gram, run_tiny_instance, tiny_instances,
    verify_min_distance, LevelCode, PointSet, TinyInstance, TinyOutcome,
};
pub use volume::{log2_ball_volume, log2_ball_volume_stirling};
pub use reference::{implied_code_sum, ImpliedCodeSum, ReferencePrime, ReferenceRow, REFERENCE_PRIMES};
