//! Invariants of the four reference fields and how small primes split.
//!
//! Usage: cargo run --example field -- [coefficients]
//! e.g.   cargo run --example field -- 1,0,0,1,0,0,1

use idealpack::idealarith::factor_prime;
use idealpack::numfield::{define_field, IntPolynomial};

fn main() -> idealpack::Result<()> {
    let polys: Vec<IntPolynomial> = match std::env::args().nth(1) {
        Some(s) => vec![s.parse()?],
        None => ["1,1,-1,-1,1", "-1,-2,1,1", "-1,0,1,1", "1,0,0,1,0,0,1"]
            .iter()
            .map(|s| s.parse())
            .collect::<idealpack::Result<_>>()?,
    };
    for f in polys {
        let k = define_field(f)?;
        let (s, t) = k.signature();
        println!("K = Q[x]/({})", k.polynomial());
        println!("  m = {}, (s,t) = ({s},{t}), disc = {}", k.degree(), k.discriminant());
        for c in &k.maximality().checks {
            println!("  Dedekind at {}: {}", c.p, if c.maximal { "maximal" } else { "fails" });
        }
        for p in [2u64, 3, 5, 7] {
            let parts: Vec<String> = factor_prime(&k, p, 0)?
                .iter()
                .map(|f| format!("{}^{} [q={}]", f.label(&k), f.e, f.q))
                .collect();
            println!("  {p} = {}", parts.join(" * "));
        }
    }
    Ok(())
}
