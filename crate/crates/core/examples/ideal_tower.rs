//! Squared minima of τ(𝔭^i) along the ideal tower of a prime.
//!
//! Usage: cargo run --release --example ideal_tower -- [levels]

use idealpack::idealarith::factor_prime;
use idealpack::lattice::{ideal_tower, TowerOptions};
use idealpack::numfield::{define_field, IntPolynomial};
use idealpack::real;
use std::time::Instant;

fn main() -> idealpack::Result<()> {
    let levels: usize = std::env::args()
        .nth(1)
        .map(|s| s.parse().expect("levels must be an integer"))
        .unwrap_or(12);
    let k = define_field(IntPolynomial::from_i64s(&[1, 1, -1, -1, 1]))?;
    let prime = &factor_prime(&k, 3, 0)?[0];
    let start = Instant::now();
    let tower = ideal_tower(&k, prime, levels, &TowerOptions::default())?;
    println!("field {}, prime over 3 with q = {}", k.polynomial(), prime.q);
    println!("precision {} bits", tower.ctx.precision());
    let step = (levels / 12).max(1);
    for l in tower.levels.iter().filter(|l| l.level % step == 0 || l.level == levels) {
        println!(
            "level {:5}  log2 min_sq {:14.6}  log2 N {:12.3}",
            l.level,
            real::log2_abs(&l.min_sq),
            real::log2_int(&l.norm)
        );
    }
    println!("elapsed {:.2?}", start.elapsed());
    Ok(())
}
