//! Acceptance run: one PASS / FAIL / DATA-MISSING line per criterion.
//!
//! Criterion 3 has a known failure, see KNOWN_FAILURES. Any other failure
//! makes the target exit nonzero.

mod common;

use common::{fields, reference_primes};
use dashu_int::IBig;
use idealpack::codes::{entropy, gv_rate, CodeTable};
use idealpack::embedding::{check_determinant, lattice_basis, EmbeddingContext};
use idealpack::idealarith::{alphabet_set, contains, factor_prime, ideal_power, ideal_product, IdealHNF};
use idealpack::lattice::{
    approx_eq, brute_force_min, check_corridor, ideal_tower, shortest_vector, IdealTower, TowerOptions,
};
use idealpack::numfield::FieldElement;
use idealpack::packing::{
    asymptotic_lambda, finite_density_report, run_tiny_instance, tiny_instances, DEFAULT_CHECKPOINTS,
    REFERENCE_PRIMES,
};
use idealpack::{real, Error};
use rand::{Rng, SeedableRng};
use std::time::{Duration, Instant};

/// λ at ℓ = 1000 for the two totally ramified primes sits above the listed
/// values; the listed ones are what ℓ ≡ 0 (mod 3) gives.
const KNOWN_FAILURES: &[usize] = &[3];

enum Outcome {
    Pass(String),
    Fail(String),
    DataMissing(String),
}

fn check(cond: bool, detail: String) -> Outcome {
    if cond {
        Outcome::Pass(detail)
    } else {
        Outcome::Fail(detail)
    }
}

fn towers_checked(towers: &[(usize, IdealTower)], disc: &[IBig]) -> bool {
    towers.iter().all(|(fi, t)| {
        let m = t.ctx.degree();
        t.levels
            .iter()
            .all(|l| check_corridor(m, &l.norm, &disc[*fi], &l.min_sq, l.rel_error).is_ok())
    })
}

fn headline() -> Outcome {
    let start = Instant::now();
    let k = common::field(common::FIELDS[0]);
    let prime = &factor_prime(&k, 3, 0).unwrap()[0];
    let r = finite_density_report(&k, prime, 64, &CodeTable::bundled(), &TowerOptions::default()).unwrap();
    let t = start.elapsed();
    check(
        (r.log2_center_density - 208.088204).abs() <= 1e-3
            && r.required_d == [27, 9, 3]
            && r.code_dims == [25, 49, 61]
            && r.dimension == 256
            && r.levels == 3
            && t < Duration::from_secs(10),
        format!(
            "log2 delta {:.9}, d {:?}, dims {:?}, dim {}, {:.2?}",
            r.log2_center_density, r.required_d, r.code_dims, r.dimension, t
        ),
    )
}

fn asymptotic() -> Outcome {
    let start = Instant::now();
    let k = common::field(common::FIELDS[0]);
    let prime = &factor_prime(&k, 3, 0).unwrap()[0];
    let deep = asymptotic_lambda(&k, prime, 1000, &DEFAULT_CHECKPOINTS, &TowerOptions::default()).unwrap();
    let t = start.elapsed();
    let short = asymptotic_lambda(&k, prime, 200, &[], &TowerOptions::default()).unwrap();
    check(
        (deep.lambda + 1.442426720).abs() <= 1e-3
            && (short.lambda - deep.lambda).abs() <= 0.02
            && t < Duration::from_secs(600)
            && deep.lambda <= 0.0,
        format!("lambda(1000) = {:.9}, lambda(200) = {:.9}, {:.2?}", deep.lambda, short.lambda, t),
    )
}

fn table_rows() -> Outcome {
    let table = CodeTable::bundled();
    let opts = TowerOptions::default();
    let (mut ok, mut missing, mut bad) = (0, Vec::new(), Vec::new());
    let mut lambda_bad = Vec::new();
    for r in REFERENCE_PRIMES {
        let k = r.field().unwrap();
        let prime = r.prime(&k, 0).unwrap();
        for row in r.rows {
            match finite_density_report(&k, &prime, row.n, &table, &opts) {
                Ok(rep) if (rep.log2_center_density - row.log2_delta).abs() <= 0.01 => ok += 1,
                Ok(rep) => bad.push(format!("dim {} gave {:.4}", row.dimension, rep.log2_center_density)),
                Err(Error::MissingEntry { q, n, d }) => missing.push(format!("({q},{n},{d})")),
                Err(e) => bad.push(e.to_string()),
            }
        }
        let lam = asymptotic_lambda(&k, &prime, 1000, &[], &opts).unwrap();
        if (lam.lambda - r.lambda).abs() > 1e-2 {
            lambda_bad.push(format!("{} {}: {:.4} vs {:.3}", r.table, r.label(), lam.lambda, r.lambda));
        }
    }
    let lambda_cells = REFERENCE_PRIMES.len() - lambda_bad.len();
    let detail = format!(
        "log2 delta: {ok} reproduced, {} data-missing [{}], {} off; lambda: {lambda_cells}/{} within 1e-2{}",
        missing.len(),
        missing.join(" "),
        bad.len(),
        REFERENCE_PRIMES.len(),
        if lambda_bad.is_empty() { String::new() } else { format!(", off: {}", lambda_bad.join("; ")) }
    );
    if !bad.is_empty() || !lambda_bad.is_empty() {
        Outcome::Fail(detail)
    } else if !missing.is_empty() {
        Outcome::DataMissing(detail)
    } else {
        Outcome::Pass(detail)
    }
}

fn determinant_law() -> Outcome {
    let mut worst: f64 = 0.0;
    let mut count = 0;
    let prec = 256;
    for (k, p) in reference_primes() {
        let ctx = EmbeddingContext::new(&k, prec).unwrap();
        for i in 0..=5u64 {
            let pi = ideal_power(&k, &p.hnf, i).unwrap();
            let b = lattice_basis(&ctx, &pi).unwrap();
            match check_determinant(&ctx, &b, &pi.norm()) {
                Ok(rel) => worst = worst.max(rel),
                Err(e) => return Outcome::Fail(e.to_string()),
            }
            count += 1;
        }
    }
    check(
        worst <= 2f64.powi(-(prec as i32) / 4),
        format!("{count} lattices, worst relative error {worst:.3e} at {prec} bits"),
    )
}

fn ring_minimum() -> Outcome {
    let mut detail = Vec::new();
    let mut ok = true;
    for k in fields() {
        let m = k.degree() as f64;
        let ctx = EmbeddingContext::new(&k, 192).unwrap();
        let b = lattice_basis(&ctx, &IdealHNF::unit(&k)).unwrap();
        let s = shortest_vector(&b).unwrap();
        let rel = (s.min_sq_f64() - m).abs() / m;
        let one = ctx.squared_length(&FieldElement::one(k.degree()).int_coords().unwrap());
        ok &= rel <= 1e-12 && (real::to_f64(&one) - m).abs() <= 1e-12 * m;
        detail.push(format!("m={} min_sq={:.3}", k.degree(), s.min_sq_f64()));
    }
    check(ok, detail.join(", "))
}

fn corridor() -> Outcome {
    // runs 1-3 compute these towers; each SVP call inside checks the
    // corridor and the checks are repeated here on the stored minima
    let opts = TowerOptions::default();
    let discs: Vec<IBig> = REFERENCE_PRIMES
        .iter()
        .map(|r| IBig::from(r.field().unwrap().abs_discriminant()))
        .collect();
    let mut towers = Vec::new();
    for (i, (k, p)) in reference_primes().into_iter().enumerate() {
        match ideal_tower(&k, &p, 1000, &opts) {
            Ok(t) => towers.push((i, t)),
            Err(e) => return Outcome::Fail(format!("{}: {e}", REFERENCE_PRIMES[i].label())),
        }
    }
    let calls: usize = towers.iter().map(|(_, t)| t.levels.len()).sum();
    check(towers_checked(&towers, &discs), format!("{calls} minima inside the corridor"))
}

fn oracle() -> Outcome {
    let mut count = 0;
    for (k, p) in reference_primes() {
        if k.degree() > 4 {
            continue;
        }
        let ctx = EmbeddingContext::new(&k, 192).unwrap();
        for i in 0..=3 {
            let b = lattice_basis(&ctx, &ideal_power(&k, &p.hnf, i).unwrap()).unwrap();
            let s = shortest_vector(&b).unwrap();
            let bf = brute_force_min(&b, 8).unwrap();
            if !approx_eq(&s.min_sq, &bf, s.rel_error) {
                return Outcome::Fail(format!("{} level {i}", k.polynomial()));
            }
            count += 1;
        }
    }
    Outcome::Pass(format!("{count} lattices agree"))
}

fn lemma_suite() -> Outcome {
    let start = Instant::now();
    let insts = tiny_instances(2024, 24, 6);
    let outs: Vec<_> = insts.iter().map(|i| run_tiny_instance(i).unwrap()).collect();
    let t = start.elapsed();
    let pos = outs.iter().filter(|o| o.condition_holds).count();
    let neg = outs.len() - pos;
    let passed = outs.iter().filter(|o| o.passed()).count();
    check(
        pos >= 20 && neg > 0 && passed == outs.len() && t < Duration::from_secs(60),
        format!("{pos} positive, {neg} negative, {passed}/{} as predicted, {t:.2?}", outs.len()),
    )
}

fn algebra() -> Outcome {
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(9);
    let fs = fields();
    for k in &fs {
        for p in [2u64, 3, 5, 7, 11, 13] {
            let factors = factor_prime(k, p, 0).unwrap();
            if factors.iter().map(|f| f.e * f.f_deg).sum::<usize>() != k.degree() {
                return Outcome::Fail(format!("sum e*f at {p}"));
            }
            let mut prod = IdealHNF::unit(k);
            for f in &factors {
                prod = ideal_product(k, &prod, &ideal_power(k, &f.hnf, f.e as u64).unwrap()).unwrap();
            }
            let mut pc = vec![IBig::ZERO; k.degree()];
            pc[0] = IBig::from(p);
            if prod != IdealHNF::from_ideal_generators(k, &[pc], &IBig::from(p)) {
                return Outcome::Fail(format!("product of primes over {p} in {}", k.polynomial()));
            }
        }
    }
    for _ in 0..1000 {
        let k = &fs[rng.gen_range(0..fs.len())];
        let m = k.degree();
        let mut pick = || FieldElement::from_i64s(&(0..m).map(|_| rng.gen_range(-50..=50)).collect::<Vec<_>>());
        let (a, b) = (pick(), pick());
        if k.norm(&k.mul(&a, &b).unwrap()).unwrap() != k.norm(&a).unwrap() * k.norm(&b).unwrap() {
            return Outcome::Fail("norm multiplicativity".into());
        }
    }
    for (k, p) in reference_primes() {
        for i in 0..=4 {
            let s = alphabet_set(&k, &p, i).unwrap();
            let here = ideal_power(&k, &p.hnf, i as u64).unwrap();
            let next = ideal_power(&k, &p.hnf, i as u64 + 1).unwrap();
            let ok = s.len() as u64 == p.q_u64()
                && s.elements.iter().all(|x| contains(&here, x).unwrap())
                && s.elements.iter().enumerate().all(|(j, a)| {
                    s.elements[j + 1..].iter().all(|b| !contains(&next, &a.sub(b)).unwrap())
                });
            if !ok {
                return Outcome::Fail(format!("alphabet S_{i} for {}", p.label(&k)));
            }
        }
    }
    Outcome::Pass("fundamental identity, 1000 norm pairs, alphabets i <= 4".into())
}

fn entropy_gv() -> Outcome {
    for q in [2u64, 3, 5, 7, 8, 9] {
        let top = (q - 1) as f64 / q as f64;
        if (entropy(q, top).unwrap() - 1.0).abs() > 1e-12 {
            return Outcome::Fail(format!("H_{q}((q-1)/q) = {}", entropy(q, top).unwrap()));
        }
        let grid: Vec<f64> = (1..=1000).map(|i| top * i as f64 / 1001.0).collect();
        let rates: Vec<f64> = grid.iter().map(|&r| gv_rate(q, r).unwrap()).collect();
        if !rates.windows(2).all(|w| w[1] < w[0]) {
            return Outcome::Fail(format!("gv_rate not decreasing for q = {q}"));
        }
    }
    Outcome::Pass("q in {2,3,5,7,8,9}".into())
}

fn main() {
    let criteria: [(&str, fn() -> Outcome); 10] = [
        ("headline 256-dimensional packing", headline),
        ("asymptotic exponent", asymptotic),
        ("table rows", table_rows),
        ("determinant law", determinant_law),
        ("minimum of O_K", ring_minimum),
        ("bound corridor", corridor),
        ("SVP oracle equivalence", oracle),
        ("concatenation minimum at tiny scale", lemma_suite),
        ("algebraic invariants", algebra),
        ("entropy and GV rate", entropy_gv),
    ];
    let mut unexpected = Vec::new();
    for (i, (name, f)) in criteria.iter().enumerate() {
        let n = i + 1;
        let (tag, detail) = match f() {
            Outcome::Pass(d) => ("PASS", d),
            Outcome::DataMissing(d) => ("DATA-MISSING", d),
            Outcome::Fail(d) => {
                if !KNOWN_FAILURES.contains(&n) {
                    unexpected.push(n);
                }
                ("FAIL", d)
            }
        };
        println!("criterion {n:2} {tag:12} {name}: {detail}");
    }
    if !unexpected.is_empty() {
        eprintln!("unexpected failures: {unexpected:?}");
        std::process::exit(1);
    }
}
