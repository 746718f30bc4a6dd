//! Prime ideals, their powers in Hermite normal form and the alphabet sets.

use idealpack::idealarith::{alphabet_set, factor_prime, ideal_power};
use idealpack::numfield::{define_field, IntPolynomial};

fn main() -> idealpack::Result<()> {
    let k = define_field(IntPolynomial::from_i64s(&[1, 1, -1, -1, 1]))?;
    let prime = &factor_prime(&k, 3, 0)?[0];
    println!("P = (3, {}), e = {}, f = {}, N(P) = {}", prime.generator(&k), prime.e, prime.f_deg, prime.q);
    for i in 0..=3u64 {
        let pi = ideal_power(&k, &prime.hnf, i)?;
        println!("P^{i}: norm {}\n{pi}", pi.norm());
    }
    for i in 0..3 {
        let s = alphabet_set(&k, prime, i)?;
        let shown: Vec<String> = s.elements.iter().take(4).map(|x| x.to_string()).collect();
        println!("S_{i}: {} elements, pi = {}, first: {}", s.len(), s.pi, shown.join(", "));
    }
    Ok(())
}
