use super::ideal::{hnf_from_generators, IdealHNF};
use crate::arith;
use crate::error::{Error, Result};
use crate::modp::{self, PolyModP};
use crate::numfield::{FieldElement, IntPolynomial, NumberField};
use dashu_int::IBig;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// A prime ideal 𝔭 = (p, g(α)) dividing (p), with its ramification data.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrimeIdealFactor {
    pub p: u64,
    /// Lift of the irreducible factor of f mod p, coefficients in `[0, p)`.
    pub g: IntPolynomial,
    pub e: usize,
    pub f_deg: usize,
    /// Absolute norm p^f_deg.
    pub q: IBig,
    pub hnf: IdealHNF,
}

impl PrimeIdealFactor {
    /// The second generator g(α) as a field element.
    pub fn generator(&self, k: &NumberField) -> FieldElement {
        eval_at_alpha(k, &self.g)
    }

    /// "(p)" for an inert prime, "(p, g(a))" otherwise.
    pub fn label(&self, k: &NumberField) -> String {
        if self.f_deg == k.degree() {
            format!("({})", self.p)
        } else {
            format!("({}, {})", self.p, self.generator(k))
        }
    }

    /// `q` as a machine integer; panics if it does not fit, which cannot
    /// happen for the degrees and primes this crate accepts.
    pub fn q_u64(&self) -> u64 {
        u64::try_from(&self.q).expect("residue field size fits in u64")
    }
}

/// g(α) for a polynomial of degree at most m.
fn eval_at_alpha(k: &NumberField, g: &IntPolynomial) -> FieldElement {
    let m = k.degree();
    // a monic factor of full degree differs from f by lower-order terms
    let g = if g.degree() == m && !g.is_zero() {
        g.sub(k.polynomial())
    } else {
        g.clone()
    };
    let mut c = g.coeffs().to_vec();
    c.resize(m, IBig::ZERO);
    FieldElement::from_ints(&c)
}

/// Prime factorization (p)·O_K = ∏ 𝔭_i^{e_i}, by Dedekind's theorem.
///
/// Factors are ordered by residue degree, then by the lifted polynomial read
/// from its constant term. `seed` drives the randomized splitting mod p; the
/// result does not depend on it.
pub fn factor_prime(k: &NumberField, p: u64, seed: u64) -> Result<Vec<PrimeIdealFactor>> {
    if !arith::is_prime_u64(p) {
        return Err(Error::NotPrime(IBig::from(p)));
    }
    let fbar = PolyModP::from_ints(p, k.polynomial().coeffs());
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut factors = modp::factor(&fbar, &mut rng);
    factors.sort_by(|(a, _), (b, _)| {
        a.degree()
            .cmp(&b.degree())
            .then_with(|| a.canonical_cmp(b))
    });
    let pi = IBig::from(p);
    factors
        .into_iter()
        .map(|(g, e)| {
            let f_deg = g.degree().unwrap_or(0);
            let g = IntPolynomial::new(g.to_ints());
            let hnf = hnf_from_generators(k, &pi, &eval_at_alpha(k, &g))?;
            Ok(PrimeIdealFactor {
                p,
                g,
                e,
                f_deg,
                q: pi.pow(f_deg),
                hnf,
            })
        })
        .collect()
}

/// The prime ideal over `p` whose HNF equals that of `(p, g)`.
pub fn prime_from_generators(
    k: &NumberField,
    p: u64,
    g: &FieldElement,
    seed: u64,
) -> Result<PrimeIdealFactor> {
    let target = hnf_from_generators(k, &IBig::from(p), g)?;
    factor_prime(k, p, seed)?
        .into_iter()
        .find(|f| f.hnf == target)
        .ok_or_else(|| {
            Error::Validation(format!("({p}, {g}) is not a prime ideal of this field"))
        })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::idealarith::{ideal_power, ideal_product};
    use crate::numfield::define_field;

    fn field(c: &[i64]) -> NumberField {
        define_field(IntPolynomial::from_i64s(c)).unwrap()
    }

    #[test]
    fn quartic_over_three() {
        let k = field(&[1, 1, -1, -1, 1]);
        let f = factor_prime(&k, 3, 0).unwrap();
        assert_eq!(f.len(), 1);
        assert_eq!(f[0].g, IntPolynomial::from_i64s(&[2, 1, 1]));
        assert_eq!((f[0].e, f[0].f_deg), (2, 2));
        assert_eq!(f[0].q, IBig::from(9));
        assert_eq!(f[0].hnf.norm(), IBig::from(9));
    }

    #[test]
    fn inert_and_totally_ramified() {
        let f = factor_prime(&field(&[-1, -2, 1, 1]), 2, 0).unwrap();
        assert_eq!(f.len(), 1);
        assert_eq!((f[0].e, f[0].f_deg, f[0].q_u64()), (1, 3, 8));
        let f = factor_prime(&field(&[1, 0, 0, 1, 0, 0, 1]), 3, 0).unwrap();
        assert_eq!(f.len(), 1);
        assert_eq!((f[0].e, f[0].f_deg, f[0].q_u64()), (6, 1, 3));
        assert_eq!(f[0].g, IntPolynomial::from_i64s(&[2, 1]));
    }

    #[test]
    fn fundamental_identity_for_gaussian_primes() {
        let k = field(&[1, 0, 1]);
        for p in [2u64, 3, 5, 13] {
            let fac = factor_prime(&k, p, 7).unwrap();
            let total: usize = fac.iter().map(|f| f.e * f.f_deg).sum();
            assert_eq!(total, 2);
            let mut prod = crate::idealarith::IdealHNF::unit(&k);
            for f in &fac {
                prod = ideal_product(&k, &prod, &ideal_power(&k, &f.hnf, f.e as u64).unwrap())
                    .unwrap();
            }
            let pp = hnf_from_generators(&k, &IBig::from(p), &FieldElement::zero(2)).unwrap();
            assert_eq!(prod, pp);
        }
    }

    #[test]
    fn generator_selection() {
        let k = field(&[-1, 0, 1, 1]);
        // 11 + α and 4 + α generate the same prime over 7
        let a = prime_from_generators(&k, 7, &FieldElement::from_i64s(&[11, 1, 0]), 0).unwrap();
        assert_eq!(a.g, IntPolynomial::from_i64s(&[4, 1]));
        assert!(prime_from_generators(&k, 7, &FieldElement::from_i64s(&[1, 1, 0]), 0).is_err());
        assert!(matches!(factor_prime(&k, 9, 0), Err(Error::NotPrime(_))));
    }
}
