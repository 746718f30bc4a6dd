//! Explicit points of a tiny concatenated packing and their minimum distance,
//! followed by a seeded batch of random tiny instances.

use idealpack::codes::{GaloisField, LinearCode};
use idealpack::embedding::EmbeddingContext;
use idealpack::idealarith::{alphabet_set, factor_prime, ideal_power};
use idealpack::numfield::{define_field, IntPolynomial};
use idealpack::packing::{
    enumerate_packing_points, run_tiny_instance, tiny_instances, verify_min_distance, LevelCode,
};

fn main() -> idealpack::Result<()> {
    // Z[i] with the prime (1+i): min_sq(L_0) = 2, min_sq(L_1) = 4
    let k = define_field(IntPolynomial::from_i64s(&[1, 0, 1]))?;
    let prime = factor_prime(&k, 2, 0)?.remove(0);
    let ctx = EmbeddingContext::new(&k, 128)?;
    let basis = ideal_power(&k, &prime.hnf, 1)?.rows().to_vec();
    for generator in [vec![1, 1, 1, 1], vec![1, 0, 0, 0]] {
        let code = LinearCode::from_generator(GaloisField::new(2)?, vec![generator.clone()])?;
        let d = code.d;
        let codes = [LevelCode {
            code,
            alphabet: alphabet_set(&k, &prime, 0)?,
        }];
        let set = enumerate_packing_points(&ctx, &basis, &codes, 4, 4)?;
        println!(
            "code {:?} (d = {d}): {} points in the ball, min squared distance {}",
            generator,
            set.len(),
            verify_min_distance(&set)
        );
    }

    let seed = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(1);
    let mut passed = 0;
    let instances = tiny_instances(seed, 20, 5);
    for inst in &instances {
        let out = run_tiny_instance(inst)?;
        passed += out.passed() as usize;
        println!(
            "f = {:?} p = {} n = {} l = {} q = {} dims {:?} dists {:?} minima {:?} -> {} points, min {} [{}]",
            inst.poly,
            inst.p,
            inst.n,
            inst.levels,
            out.q,
            out.code_dims,
            out.code_distances,
            out.min_sqs,
            out.points,
            out.min_distance,
            if out.condition_holds { "condition holds" } else { "negative control" }
        );
    }
    println!("{passed}/{} instances behave as predicted", instances.len());
    Ok(())
}
