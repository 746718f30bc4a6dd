//! Integral ideals of Z[α]: Hermite normal forms, products and powers, prime
//! decomposition and the alphabet sets used to lift codes.

mod alphabet;
mod hnf;
mod ideal;
mod prime;

pub use alphabet::{alphabet_set, alphabet_set_from_powers, AlphabetSet};
pub use hnf::{hnf_mod, solve_triangular};
pub use ideal::{
    contains, hnf_from_generators, ideal_norm, ideal_power, ideal_product, IdealHNF,
};
pub use prime::{factor_prime, prime_from_generators, PrimeIdealFactor};
