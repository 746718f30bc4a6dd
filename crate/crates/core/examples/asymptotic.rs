//! Asymptotic density exponent of the family built on the quartic field
//! x^4 - x^3 - x^2 + x + 1 and its prime over 3.
//!
//! Usage: cargo run --release --example asymptotic -- [lmax]

use idealpack::idealarith::factor_prime;
use idealpack::lattice::TowerOptions;
use idealpack::numfield::{define_field, IntPolynomial};
use idealpack::packing::{asymptotic_lambda, DEFAULT_CHECKPOINTS, DEFAULT_LMAX};
use std::time::Instant;

fn main() -> idealpack::Result<()> {
    let lmax: usize = std::env::args()
        .nth(1)
        .map(|s| s.parse().expect("lmax must be an integer"))
        .unwrap_or(DEFAULT_LMAX);
    let k = define_field(IntPolynomial::from_i64s(&[1, 1, -1, -1, 1]))?;
    let prime = &factor_prime(&k, 3, 0)?[0];
    let start = Instant::now();
    let report = asymptotic_lambda(&k, prime, lmax, &DEFAULT_CHECKPOINTS, &TowerOptions::default())?;
    for (l, lambda) in &report.trace {
        println!("l = {l:5}  lambda >= {lambda:.9}");
    }
    println!("n_l has {} digits, log2 n_l = {:.3}", report.n_digits, report.log2_n);
    println!("lambda >= {:.9} at l = {}", report.lambda, report.lmax);
    println!("elapsed {:.2?}", start.elapsed());
    Ok(())
}
