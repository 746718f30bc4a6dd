//! Elementary integer helpers: primality, small-prime sieving, trial factoring.

use dashu_int::ops::*;
use dashu_int::{IBig, UBig};

/// Deterministic Miller–Rabin for 64-bit integers.
pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n % p == 0 {
            return n == p;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    let mulmod = |a: u64, b: u64| ((a as u128 * b as u128) % n as u128) as u64;
    let powmod = |mut b: u64, mut e: u64| {
        let mut r = 1u64;
        while e > 0 {
            if e & 1 == 1 {
                r = mulmod(r, b);
            }
            b = mulmod(b, b);
            e >>= 1;
        }
        r
    };
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = powmod(a, d);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mulmod(x, x);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

pub fn primes_up_to(n: u64) -> Vec<u64> {
    (2..=n).filter(|&k| is_prime_u64(k)).collect()
}

/// Result of trial division of `|n|` by all primes up to `bound`.
#[derive(Debug, Clone, PartialEq)]
pub struct TrialFactorization {
    /// `(prime, exponent)` pairs found by trial division, ascending.
    pub factors: Vec<(u64, u32)>,
    /// Unfactored part with no prime divisor up to `bound`.
    pub cofactor: UBig,
    /// True when the cofactor is known to be 1 or a prime (its square root
    /// lies below the trial bound).
    pub cofactor_is_prime: bool,
    pub bound: u64,
}

pub fn trial_factor(n: &IBig, bound: u64) -> TrialFactorization {
    let mut rest = n.unsigned_abs();
    let mut factors = Vec::new();
    let mut p = 2u64;
    let mut exhausted = false;
    while p <= bound {
        let pp = UBig::from(p);
        if &pp * &pp > rest {
            exhausted = true;
            break;
        }
        let mut e = 0;
        while (&rest % &pp) == UBig::ZERO {
            rest /= &pp;
            e += 1;
        }
        if e > 0 {
            factors.push((p, e));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if exhausted && rest > UBig::ONE {
        if let Ok(r) = u64::try_from(&rest) {
            factors.push((r, 1));
            factors.sort();
            rest = UBig::ONE;
        }
    }
    TrialFactorization {
        factors,
        cofactor_is_prime: exhausted || rest == UBig::ONE,
        cofactor: rest,
        bound,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primality() {
        assert!(is_prime_u64(2));
        assert!(is_prime_u64(1_000_000_007));
        assert!(!is_prime_u64(1));
        assert!(!is_prime_u64(561));
        assert_eq!(primes_up_to(20), vec![2, 3, 5, 7, 11, 13, 17, 19]);
    }

    #[test]
    fn trial_division() {
        let t = trial_factor(&IBig::from(-19683), 1000);
        assert_eq!(t.factors, vec![(3, 9)]);
        assert_eq!(t.cofactor, UBig::ONE);
        let t = trial_factor(&IBig::from(117), 1000);
        assert_eq!(t.factors, vec![(3, 2), (13, 1)]);
        let big = IBig::from(1_000_003u64) * IBig::from(1_000_033u64);
        let t = trial_factor(&(big.clone() * 4), 100);
        assert_eq!(t.factors, vec![(2, 2)]);
        assert!(!t.cofactor_is_prime);
        assert_eq!(IBig::from(t.cofactor), big);
    }
}
