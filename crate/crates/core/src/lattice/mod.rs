//! LLL reduction, exact shortest vectors and the tower of prime-power lattices.

mod lll;
mod svp;
mod tower;

pub use lll::{gram_schmidt, lll_reduce, lll_reduce_with_transform, DEFAULT_DELTA};
pub use svp::{
    approx_eq, brute_force_min, certified_error, shortest_vector, SvpResult, MAX_BRUTE_BOUND,
    MAX_BRUTE_RANK, MAX_SVP_RANK,
};
pub use tower::{check_corridor, ideal_tower, IdealTower, LevelMinimum, TowerOptions};
