//! Randomized invariants across the number-field, ideal, lattice, code and
//! packing layers.

mod common;

use common::{field, fields, reference_primes, FIELDS};
use dashu_int::IBig;
use dashu_ratio::RBig;
use idealpack::codes::{entropy, gv_rate, required_distances};
use idealpack::embedding::{lattice_basis, EmbeddingContext};
use idealpack::idealarith::{
    alphabet_set, contains, factor_prime, ideal_power, ideal_product, IdealHNF,
};
use idealpack::lattice::{brute_force_min, shortest_vector, approx_eq};
use idealpack::numfield::FieldElement;
use idealpack::packing::{log2_ball_volume, log2_ball_volume_stirling, run_tiny_instance, tiny_instances};
use idealpack::real;
use proptest::prelude::*;

fn elem(m: usize) -> impl Strategy<Value = Vec<i64>> {
    prop::collection::vec(-20i64..=20, m)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn norm_is_multiplicative(fi in 0usize..4, a in elem(6), b in elem(6)) {
        let k = field(FIELDS[fi]);
        let m = k.degree();
        let a = FieldElement::from_i64s(&a[..m]);
        let b = FieldElement::from_i64s(&b[..m]);
        let ab = k.mul(&a, &b).unwrap();
        prop_assert_eq!(k.norm(&ab).unwrap(), k.norm(&a).unwrap() * k.norm(&b).unwrap());
    }

    #[test]
    fn nonzero_integers_have_norm_at_least_one(fi in 0usize..4, a in elem(6)) {
        let k = field(FIELDS[fi]);
        let a = FieldElement::from_i64s(&a[..k.degree()]);
        prop_assume!(!a.is_zero());
        let n = k.norm(&a).unwrap();
        prop_assert!(n.clone() * n.clone() >= RBig::ONE);
    }

    #[test]
    fn length_dominates_norm(fi in 0usize..4, a in elem(6)) {
        // ‖τ(x)‖² ≥ m·|N(x)|^{2/m}
        let k = field(FIELDS[fi]);
        let m = k.degree();
        let c: Vec<IBig> = a[..m].iter().map(|&x| IBig::from(x)).collect();
        let x = FieldElement::from_ints(&c);
        prop_assume!(!x.is_zero());
        let ctx = EmbeddingContext::new(&k, 192).unwrap();
        let len = real::to_f64(&ctx.squared_length(&c));
        let n = k.norm(&x).unwrap();
        let log_n = real::log2_abs(&real::from_ratio(&n, 192));
        let bound = (m as f64).log2() + 2.0 * log_n / m as f64;
        prop_assert!(len.log2() >= bound - 1e-9);
    }

    #[test]
    fn embedding_is_additive(fi in 0usize..4, a in elem(6), b in elem(6)) {
        let k = field(FIELDS[fi]);
        let m = k.degree();
        let ctx = EmbeddingContext::new(&k, 160).unwrap();
        let ai: Vec<IBig> = a[..m].iter().map(|&x| IBig::from(x)).collect();
        let bi: Vec<IBig> = b[..m].iter().map(|&x| IBig::from(x)).collect();
        let si: Vec<IBig> = ai.iter().zip(&bi).map(|(x, y)| x + y).collect();
        let (ea, eb, es) = (ctx.embed_coords(&ai), ctx.embed_coords(&bi), ctx.embed_coords(&si));
        for j in 0..m {
            let diff = real::to_f64(&(&ea[j] + &eb[j] - &es[j])).abs();
            prop_assert!(diff < 1e-30);
        }
    }

    #[test]
    fn ideal_norm_of_powers(pi in 0usize..8, e in 0u64..=8) {
        let (k, p) = &reference_primes()[pi];
        let pe = ideal_power(k, &p.hnf, e).unwrap();
        prop_assert_eq!(pe.norm(), p.q.pow(e as usize));
    }

    #[test]
    fn ideals_are_closed_under_alpha(pi in 0usize..8, e in 0u64..=5) {
        let (k, p) = &reference_primes()[pi];
        let pe = ideal_power(k, &p.hnf, e).unwrap();
        let alpha = FieldElement::generator(k.degree());
        for i in 0..pe.degree() {
            let x = k.mul(&alpha, &pe.row_element(i)).unwrap();
            prop_assert!(contains(&pe, &x).unwrap());
        }
    }

    #[test]
    fn entropy_increases(q in prop::sample::select(vec![2u64, 3, 5, 7, 8, 9]), a in 1u32..999, b in 1u32..999) {
        prop_assume!(a != b);
        let top = (q - 1) as f64 / q as f64;
        let (lo, hi) = (a.min(b) as f64 / 1000.0 * top, a.max(b) as f64 / 1000.0 * top);
        prop_assert!(entropy(q, lo).unwrap() < entropy(q, hi).unwrap());
        prop_assert!(gv_rate(q, lo).unwrap() > gv_rate(q, hi).unwrap());
    }

    #[test]
    fn required_distances_do_not_increase(pi in 0usize..8, levels in 1usize..6) {
        let (k, p) = &reference_primes()[pi];
        let t = idealpack::lattice::ideal_tower(k, p, levels, &Default::default()).unwrap();
        let rel = t.levels.iter().map(|l| l.rel_error).fold(0.0, f64::max);
        if let Ok(d) = required_distances(&t.min_sqs(), rel) {
            prop_assert!(d.windows(2).all(|w| w[0] >= w[1]));
        }
    }

    #[test]
    fn ball_volume_matches_stirling(dim in 180usize..=512) {
        let gap = (log2_ball_volume(dim) - log2_ball_volume_stirling(dim)).abs();
        prop_assert!(gap <= std::f64::consts::LOG2_E / (6.0 * dim as f64) + 1e-9);
    }
}

#[test]
fn degree_splits_into_signature() {
    for k in fields() {
        let (s, t) = k.signature();
        assert_eq!(s + 2 * t, k.degree());
    }
}

#[test]
fn fundamental_identity_for_small_primes() {
    for k in fields() {
        for p in [2u64, 3, 5, 7, 11, 13] {
            let factors = factor_prime(&k, p, 3).unwrap();
            let sum: usize = factors.iter().map(|f| f.e * f.f_deg).sum();
            assert_eq!(sum, k.degree());
            let mut prod = IdealHNF::unit(&k);
            for f in &factors {
                prod = ideal_product(&k, &prod, &ideal_power(&k, &f.hnf, f.e as u64).unwrap()).unwrap();
            }
            let pk = IdealHNF::from_ideal_generators(
                &k,
                &[FieldElement::constant(k.degree(), IBig::from(p)).int_coords().unwrap()],
                &IBig::from(p),
            );
            assert_eq!(prod, pk, "p = {p} in {}", k.polynomial());
        }
    }
}

#[test]
fn chains_are_strict_and_alphabets_valid() {
    for (k, p) in reference_primes() {
        for i in 0..=4u64 {
            let here = ideal_power(&k, &p.hnf, i).unwrap();
            let next = ideal_power(&k, &p.hnf, i + 1).unwrap();
            assert!((0..here.degree()).any(|r| !contains(&next, &here.row_element(r)).unwrap()));
            let s = alphabet_set(&k, &p, i as usize).unwrap();
            assert_eq!(s.len() as u64, p.q_u64());
            assert!(s.elements[0].is_zero());
            for (a_i, a) in s.elements.iter().enumerate() {
                assert!(contains(&here, a).unwrap());
                for b in &s.elements[a_i + 1..] {
                    assert!(!contains(&next, &a.sub(b)).unwrap());
                }
            }
        }
    }
}

#[test]
fn shortest_vector_matches_brute_force() {
    for (k, p) in reference_primes() {
        if k.degree() > 4 {
            continue;
        }
        let ctx = EmbeddingContext::new(&k, 256).unwrap();
        for i in 0..=3 {
            let b = lattice_basis(&ctx, &ideal_power(&k, &p.hnf, i).unwrap()).unwrap();
            let s = shortest_vector(&b).unwrap();
            let bf = brute_force_min(&b, 8).unwrap();
            assert!(approx_eq(&s.min_sq, &bf, s.rel_error));
            // the witness reproduces the minimum
            let again = ctx.squared_length(&s.coords);
            assert!(approx_eq(&again, &s.min_sq, s.rel_error));
        }
    }
}

#[test]
fn lemma_suite_on_several_seeds() {
    for seed in 0..4 {
        for inst in tiny_instances(seed, 10, 3) {
            let out = run_tiny_instance(&inst).unwrap();
            assert!(out.passed(), "{out:?}");
        }
    }
}
