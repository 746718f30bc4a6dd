//! The 256-dimensional packing: quartic field, prime over 3, codes of length
//! 64 over GF(9) from the bundled table.

use idealpack::codes::CodeTable;
use idealpack::idealarith::factor_prime;
use idealpack::lattice::TowerOptions;
use idealpack::numfield::{define_field, IntPolynomial};
use idealpack::packing::finite_density_report;
use std::time::Instant;

fn main() -> idealpack::Result<()> {
    let start = Instant::now();
    let k = define_field(IntPolynomial::from_i64s(&[1, 1, -1, -1, 1]))?;
    let prime = &factor_prime(&k, 3, 0)?[0];
    let r = finite_density_report(&k, prime, 64, &CodeTable::bundled(), &TowerOptions::default())?;
    println!("field {} with |D| = {}", r.polynomial, r.abs_discriminant);
    println!("prime {} with q = {}", r.generators, r.q);
    println!("levels {}, squared minima {:?}", r.levels, r.min_sqs);
    println!("required distances {:?}", r.required_d);
    println!("code dimensions    {:?}", r.code_dims);
    println!("dimension {}", r.dimension);
    println!("log2 center density >= {:.12}", r.log2_center_density);
    println!("log2 density        >= {:.6}", r.log2_density);
    // Barnes-Wall in dimension 256 has log2 center density 192
    println!("gain over BW256: {:.3} bits", r.log2_center_density - 192.0);
    println!("elapsed {:.2?}", start.elapsed());
    Ok(())
}
