use super::element::FieldElement;
use super::poly::{self, IntPolynomial};
use crate::arith::{self, TrialFactorization};
use crate::error::{Error, Result};
use crate::modp::{self, PolyModP};
use dashu_int::ops::*;
use dashu_int::{IBig, UBig};
use dashu_ratio::RBig;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Largest prime tried when searching for a modular irreducibility certificate.
pub const IRREDUCIBILITY_PRIME_BOUND: u64 = 100;

/// Trial-division bound used to find the primes whose square divides disc(f).
const DISC_TRIAL_BOUND: u64 = 1_000_000;

/// Outcome of Dedekind's criterion at one prime.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DedekindCheck {
    pub p: u64,
    pub maximal: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MaximalityCertificate {
    /// Every prime `p` with `p^2 | disc(f)`, with the criterion's verdict.
    pub checks: Vec<DedekindCheck>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum IrreducibilityCertificate {
    /// `f` is irreducible modulo this prime (which does not divide disc(f)).
    ModularPrime(u64),
    /// Accepted on the caller's explicit override.
    Assumed,
}

#[derive(Clone, Copy, Debug, Default)]
pub struct FieldOptions {
    /// Accept `f` without a modular irreducibility certificate.
    pub assume_irreducible: bool,
    /// Seed for the randomized factorization used by Dedekind's criterion.
    pub seed: u64,
}

/// K = Q[x]/(f) with certified O_K = Z[α].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NumberField {
    f: IntPolynomial,
    s: usize,
    t: usize,
    disc: IBig,
    maximality: MaximalityCertificate,
    irreducibility: IrreducibilityCertificate,
}

pub fn define_field(f: IntPolynomial) -> Result<NumberField> {
    define_field_with(f, FieldOptions::default())
}

pub fn define_field_with(f: IntPolynomial, opts: FieldOptions) -> Result<NumberField> {
    if !f.is_monic() {
        return Err(Error::NotMonic);
    }
    let m = f.degree();
    if m < 2 {
        return Err(Error::DegreeTooSmall(m));
    }
    if let Some(r) = integer_root(&f) {
        return Err(Error::Reducible {
            factor: IntPolynomial::new(vec![-r, IBig::ONE]).to_string(),
        });
    }
    let disc = poly::discriminant(&f);
    if disc == IBig::ZERO {
        return Err(Error::Reducible {
            factor: "repeated factor (zero discriminant)".into(),
        });
    }
    let irreducibility = match modular_certificate(&f, &disc) {
        Some(p) => IrreducibilityCertificate::ModularPrime(p),
        None if opts.assume_irreducible => IrreducibilityCertificate::Assumed,
        None => {
            return Err(Error::IrreducibilityUnknown {
                bound: IRREDUCIBILITY_PRIME_BOUND,
            })
        }
    };
    let maximality = certify_maximal(&f, &disc, opts.seed)?;
    if let Some(bad) = maximality.checks.iter().find(|c| !c.maximal) {
        return Err(Error::NotMaximal {
            p: IBig::from(bad.p),
        });
    }
    let s = poly::count_real_roots(&f);
    let t = (m - s) / 2;
    Ok(NumberField {
        f,
        s,
        t,
        disc,
        maximality,
        irreducibility,
    })
}

/// An integer root of a monic polynomial, if one exists. Integer roots divide
/// the constant term; very large constant terms fall back to the Cauchy bound
/// being too large to scan and are skipped.
fn integer_root(f: &IntPolynomial) -> Option<IBig> {
    let a0 = f.coeffs()[0].clone();
    if a0 == IBig::ZERO {
        return Some(IBig::ZERO);
    }
    let fac = arith::trial_factor(&a0, 1_000_000);
    if !fac.cofactor_is_prime {
        return None;
    }
    let mut primes: Vec<(IBig, u32)> = fac
        .factors
        .iter()
        .map(|&(p, e)| (IBig::from(p), e))
        .collect();
    if fac.cofactor > UBig::ONE {
        primes.push((IBig::from(fac.cofactor.clone()), 1));
    }
    let mut divisors = vec![IBig::ONE];
    for (p, e) in &primes {
        let mut next = Vec::new();
        for d in &divisors {
            let mut pk = IBig::ONE;
            for _ in 0..=*e {
                next.push(d * &pk);
                pk *= p;
            }
        }
        divisors = next;
    }
    divisors.sort();
    divisors
        .into_iter()
        .flat_map(|d| [d.clone(), -d])
        .find(|r| f.eval(r) == IBig::ZERO)
}

fn modular_certificate(f: &IntPolynomial, disc: &IBig) -> Option<u64> {
    arith::primes_up_to(IRREDUCIBILITY_PRIME_BOUND)
        .into_iter()
        .filter(|&p| disc % IBig::from(p) != IBig::ZERO)
        .find(|&p| modp::is_irreducible(&PolyModP::from_ints(p, f.coeffs())))
}

/// Primes whose square divides `disc`. Errors when a large cofactor prevents a
/// complete answer.
pub(crate) fn square_divisor_primes(disc: &IBig) -> Result<Vec<u64>> {
    let TrialFactorization {
        factors,
        cofactor,
        cofactor_is_prime,
        ..
    } = arith::trial_factor(disc, DISC_TRIAL_BOUND);
    let mut out: Vec<u64> = factors
        .iter()
        .filter(|(_, e)| *e >= 2)
        .map(|(p, _)| *p)
        .collect();
    if !cofactor_is_prime {
        let root = cofactor.sqrt();
        let square = &root * &root == cofactor;
        let root_prime = u64::try_from(&root)
            .map(arith::is_prime_u64)
            .unwrap_or(false);
        if square && root_prime {
            out.push(u64::try_from(&root).expect("checked above"));
        } else if square || cofactor > UBig::from(DISC_TRIAL_BOUND).pow(3) {
            return Err(Error::MaximalityUnknown {
                cofactor: IBig::from(cofactor),
            });
        }
        // otherwise the cofactor is below bound^3 with no factor below bound:
        // it is a product of at most two primes, and not a square, so squarefree
    }
    Ok(out)
}

/// Dedekind's criterion: Z[α] is p-maximal iff gcd(F̄, ḡ, h̄) = 1 where
/// f ≡ ∏ g_i^{e_i}, g = ∏ g_i, h = ∏ g_i^{e_i - 1}, F = (f - g h) / p.
pub fn dedekind_criterion(f: &IntPolynomial, p: u64, seed: u64) -> bool {
    let fbar = PolyModP::from_ints(p, f.coeffs());
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ p);
    let factors = modp::factor(&fbar, &mut rng);
    let mut g = PolyModP::one(p);
    let mut h = PolyModP::one(p);
    for (gi, e) in &factors {
        g = g.mul(gi);
        for _ in 1..*e {
            h = h.mul(gi);
        }
    }
    let g_int = IntPolynomial::new(g.to_ints());
    let h_int = IntPolynomial::new(h.to_ints());
    let diff = f.sub(&g_int.mul(&h_int));
    let pb = IBig::from(p);
    let big_f: Vec<IBig> = diff
        .coeffs()
        .iter()
        .map(|c| {
            debug_assert_eq!(c % &pb, IBig::ZERO);
            c / &pb
        })
        .collect();
    let fbar_quot = PolyModP::from_ints(p, &big_f);
    let common = g.gcd(&h);
    if fbar_quot.is_zero() {
        return common.is_one();
    }
    fbar_quot.gcd(&common).is_one()
}

fn certify_maximal(f: &IntPolynomial, disc: &IBig, seed: u64) -> Result<MaximalityCertificate> {
    let checks = square_divisor_primes(disc)?
        .into_iter()
        .map(|p| DedekindCheck {
            p,
            maximal: dedekind_criterion(f, p, seed),
        })
        .collect();
    Ok(MaximalityCertificate { checks })
}

impl NumberField {
    pub fn polynomial(&self) -> &IntPolynomial {
        &self.f
    }

    pub fn degree(&self) -> usize {
        self.f.degree()
    }

    /// Signature `(s, t)`: real embeddings and complex-conjugate pairs.
    pub fn signature(&self) -> (usize, usize) {
        (self.s, self.t)
    }

    pub fn discriminant(&self) -> &IBig {
        &self.disc
    }

    pub fn abs_discriminant(&self) -> UBig {
        self.disc.clone().unsigned_abs()
    }

    pub fn maximality(&self) -> &MaximalityCertificate {
        &self.maximality
    }

    pub fn irreducibility(&self) -> &IrreducibilityCertificate {
        &self.irreducibility
    }

    fn check_dim(&self, a: &FieldElement) -> Result<()> {
        if a.dim() != self.degree() {
            return Err(Error::DimensionMismatch {
                expected: self.degree(),
                got: a.dim(),
            });
        }
        Ok(())
    }

    /// Product in K, reduced modulo f.
    pub fn mul(&self, a: &FieldElement, b: &FieldElement) -> Result<FieldElement> {
        self.check_dim(a)?;
        self.check_dim(b)?;
        let m = self.degree();
        let mut prod = vec![RBig::ZERO; 2 * m - 1];
        for (i, x) in a.coords().iter().enumerate() {
            if *x == RBig::ZERO {
                continue;
            }
            for (j, y) in b.coords().iter().enumerate() {
                prod[i + j] += x * y;
            }
        }
        Ok(FieldElement::new(self.reduce(prod)))
    }

    /// Reduce a coefficient vector of any length modulo the monic f.
    fn reduce(&self, mut c: Vec<RBig>) -> Vec<RBig> {
        let m = self.degree();
        let fc = self.f.coeffs();
        for k in (m..c.len()).rev() {
            let top = std::mem::replace(&mut c[k], RBig::ZERO);
            if top == RBig::ZERO {
                continue;
            }
            // x^k = x^{k-m} * x^m and x^m = -Σ f_j x^j
            for (j, fj) in fc.iter().take(m).enumerate() {
                c[k - m + j] -= &top * RBig::from(fj.clone());
            }
        }
        c.truncate(m);
        c.resize(m, RBig::ZERO);
        c
    }

    /// Exact product of integral elements over Z.
    pub fn mul_int(&self, a: &[IBig], b: &[IBig]) -> Vec<IBig> {
        let m = self.degree();
        let fc = self.f.coeffs();
        let mut c = vec![IBig::ZERO; 2 * m - 1];
        for (i, x) in a.iter().enumerate() {
            if *x == IBig::ZERO {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                c[i + j] += x * y;
            }
        }
        for k in (m..c.len()).rev() {
            let top = std::mem::replace(&mut c[k], IBig::ZERO);
            if top == IBig::ZERO {
                continue;
            }
            for (j, fj) in fc.iter().take(m).enumerate() {
                c[k - m + j] -= &top * fj;
            }
        }
        c.truncate(m);
        c
    }

    /// Norm_{K/Q}(a) = Res(f, a(x)) for monic f.
    pub fn norm(&self, a: &FieldElement) -> Result<RBig> {
        self.check_dim(a)?;
        if a.is_zero() {
            return Ok(RBig::ZERO);
        }
        Ok(poly::resultant(&self.f.to_rational(), a.coords()))
    }

    /// Matrix of multiplication by `a` acting on row vectors: row j is a·α^j.
    pub fn multiplication_matrix(&self, a: &FieldElement) -> Result<Vec<Vec<RBig>>> {
        self.check_dim(a)?;
        let m = self.degree();
        let mut rows = Vec::with_capacity(m);
        let mut cur = a.clone();
        let alpha = FieldElement::generator(m);
        for _ in 0..m {
            rows.push(cur.coords().to_vec());
            cur = self.mul(&cur, &alpha)?;
        }
        Ok(rows)
    }

    pub fn trace(&self, a: &FieldElement) -> Result<RBig> {
        let mat = self.multiplication_matrix(a)?;
        Ok((0..self.degree()).fold(RBig::ZERO, |acc, i| acc + &mat[i][i]))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg;

    fn quartic() -> NumberField {
        define_field(IntPolynomial::from_i64s(&[1, 1, -1, -1, 1])).unwrap()
    }

    #[test]
    fn reference_fields() {
        let k = quartic();
        assert_eq!(k.degree(), 4);
        assert_eq!(k.signature(), (0, 2));
        assert_eq!(k.abs_discriminant(), UBig::from(117u32));
        assert_eq!(k.maximality().checks, vec![DedekindCheck { p: 3, maximal: true }]);

        let c = define_field(IntPolynomial::from_i64s(&[-1, -2, 1, 1])).unwrap();
        assert_eq!(c.signature(), (3, 0));
        assert_eq!(c.abs_discriminant(), UBig::from(49u32));

        let gauss = define_field(IntPolynomial::from_i64s(&[1, 0, 1])).unwrap();
        assert_eq!(gauss.signature(), (0, 1));
        assert_eq!(gauss.abs_discriminant(), UBig::from(4u32));
        assert_eq!(gauss.maximality().checks, vec![DedekindCheck { p: 2, maximal: true }]);

        let cyc = define_field(IntPolynomial::from_i64s(&[1, 0, 0, 1, 0, 0, 1])).unwrap();
        assert_eq!(cyc.signature(), (0, 3));
        assert_eq!(cyc.abs_discriminant(), UBig::from(19683u32));
    }

    #[test]
    fn rejections() {
        assert_eq!(
            define_field(IntPolynomial::from_i64s(&[1, 0, 2])),
            Err(Error::NotMonic)
        );
        assert!(matches!(
            define_field(IntPolynomial::from_i64s(&[-1, 0, 1])),
            Err(Error::Reducible { .. })
        ));
        // x^2 - 5: Z[sqrt 5] has index 2 in the maximal order
        assert_eq!(
            define_field(IntPolynomial::from_i64s(&[-5, 0, 1])),
            Err(Error::NotMaximal { p: IBig::from(2) })
        );
        // x^4 + 1 is irreducible but splits modulo every prime
        assert_eq!(
            define_field(IntPolynomial::from_i64s(&[1, 0, 0, 0, 1])),
            Err(Error::IrreducibilityUnknown { bound: 100 })
        );
        let k = define_field_with(
            IntPolynomial::from_i64s(&[1, 0, 0, 0, 1]),
            FieldOptions {
                assume_irreducible: true,
                seed: 0,
            },
        )
        .unwrap();
        assert_eq!(k.irreducibility(), &IrreducibilityCertificate::Assumed);
    }

    #[test]
    fn element_arithmetic() {
        let gauss = define_field(IntPolynomial::from_i64s(&[1, 0, 1])).unwrap();
        let i = FieldElement::generator(2);
        assert_eq!(gauss.mul(&i, &i).unwrap(), FieldElement::from_i64s(&[-1, 0]));
        assert_eq!(
            gauss.mul(&FieldElement::one(2), &i).unwrap(),
            i
        );
        assert!(matches!(
            gauss.mul(&FieldElement::one(3), &i),
            Err(Error::DimensionMismatch { expected: 2, got: 3 })
        ));
    }

    #[test]
    fn norms() {
        let k = quartic();
        assert_eq!(k.norm(&FieldElement::one(4)).unwrap(), RBig::ONE);
        assert_eq!(k.norm(&FieldElement::zero(4)).unwrap(), RBig::ZERO);
        let n = k.norm(&FieldElement::from_i64s(&[2, 1, 1, 0])).unwrap();
        assert_eq!(n, RBig::from(63));
        assert_eq!(
            k.norm(&FieldElement::constant(4, IBig::from(3))).unwrap(),
            RBig::from(81)
        );
    }

    #[test]
    fn resultant_norm_agrees_with_multiplication_determinant() {
        let k = quartic();
        let a = FieldElement::new(vec![
            RBig::from_parts(IBig::from(3), UBig::from(2u8)),
            RBig::from(-1),
            RBig::ZERO,
            RBig::from(5),
        ]);
        let det = linalg::det_rat(&k.multiplication_matrix(&a).unwrap());
        assert_eq!(k.norm(&a).unwrap(), det);
        assert_eq!(k.trace(&FieldElement::one(4)).unwrap(), RBig::from(4));
    }

    #[test]
    fn dedekind_on_non_monogenic_cubic() {
        // x^3 - x^2 - 2x - 8: Dedekind's classic field, 2 divides the index of Z[α]
        let f = IntPolynomial::from_i64s(&[-8, -2, -1, 1]);
        assert!(!dedekind_criterion(&f, 2, 0));
        assert_eq!(define_field(f), Err(Error::NotMaximal { p: IBig::from(2) }));
    }
}
