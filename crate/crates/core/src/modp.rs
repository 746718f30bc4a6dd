//! Dense univariate polynomials over a prime field F_p and their factorization
//! (squarefree decomposition, distinct-degree and Cantor–Zassenhaus splitting).

use dashu_int::ops::*;
use dashu_int::{IBig, UBig};
use rand::Rng;
use std::cmp::Ordering;

/// Polynomial over F_p, coefficients little-endian, no trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PolyModP {
    p: u64,
    coeffs: Vec<u64>,
}

fn mulmod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn powmod_u64(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1 % p;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = mulmod(r, b, p);
        }
        b = mulmod(b, b, p);
        e >>= 1;
    }
    r
}

pub fn inv_mod(a: u64, p: u64) -> u64 {
    assert!(a % p != 0, "inverse of zero mod {p}");
    powmod_u64(a, p - 2, p)
}

/// Reduce a big integer into `[0, p)`.
pub fn reduce_int(n: &IBig, p: u64) -> u64 {
    let r = n % IBig::from(p);
    let r = if r < IBig::ZERO { r + IBig::from(p) } else { r };
    u64::try_from(&r).expect("residue fits in u64")
}

impl PolyModP {
    pub fn new(p: u64, coeffs: Vec<u64>) -> Self {
        let mut poly = Self {
            p,
            coeffs: coeffs.into_iter().map(|c| c % p).collect(),
        };
        poly.trim();
        poly
    }

    pub fn from_ints(p: u64, coeffs: &[IBig]) -> Self {
        Self::new(p, coeffs.iter().map(|c| reduce_int(c, p)).collect())
    }

    pub fn zero(p: u64) -> Self {
        Self { p, coeffs: vec![] }
    }

    pub fn one(p: u64) -> Self {
        Self::new(p, vec![1])
    }

    /// The monomial `x`.
    pub fn x(p: u64) -> Self {
        Self::new(p, vec![0, 1])
    }

    fn trim(&mut self) {
        while self.coeffs.last() == Some(&0) {
            self.coeffs.pop();
        }
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs == [1]
    }

    /// Degree; the zero polynomial reports `None`.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    fn deg_or_zero(&self) -> usize {
        self.degree().unwrap_or(0)
    }

    pub fn leading(&self) -> u64 {
        self.coeffs.last().copied().unwrap_or(0)
    }

    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let inv = inv_mod(self.leading(), self.p);
        self.scale(inv)
    }

    pub fn scale(&self, s: u64) -> Self {
        Self::new(self.p, self.coeffs.iter().map(|&c| mulmod(c, s, self.p)).collect())
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let c = (0..n)
            .map(|i| {
                let a = self.coeffs.get(i).copied().unwrap_or(0);
                let b = other.coeffs.get(i).copied().unwrap_or(0);
                (a + b) % self.p
            })
            .collect();
        Self::new(self.p, c)
    }

    pub fn sub(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let c = (0..n)
            .map(|i| {
                let a = self.coeffs.get(i).copied().unwrap_or(0);
                let b = other.coeffs.get(i).copied().unwrap_or(0);
                (a + self.p - b) % self.p
            })
            .collect();
        Self::new(self.p, c)
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero(self.p);
        }
        let mut c = vec![0u64; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                c[i + j] = (c[i + j] + mulmod(a, b, self.p)) % self.p;
            }
        }
        Self::new(self.p, c)
    }

    pub fn div_rem(&self, divisor: &Self) -> (Self, Self) {
        assert!(!divisor.is_zero(), "polynomial division by zero");
        let p = self.p;
        let dd = divisor.deg_or_zero();
        let inv = inv_mod(divisor.leading(), p);
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return (Self::zero(p), self.clone());
        }
        let mut quot = vec![0u64; rem.len() - dd];
        for i in (dd..rem.len()).rev() {
            let c = mulmod(rem[i], inv, p);
            if c == 0 {
                continue;
            }
            quot[i - dd] = c;
            for (j, &d) in divisor.coeffs.iter().enumerate() {
                let idx = i - dd + j;
                rem[idx] = (rem[idx] + p - mulmod(c, d, p)) % p;
            }
        }
        (Self::new(p, quot), Self::new(p, rem))
    }

    pub fn rem(&self, divisor: &Self) -> Self {
        self.div_rem(divisor).1
    }

    /// Exact quotient; panics in debug builds when the division leaves a remainder.
    pub fn div_exact(&self, divisor: &Self) -> Self {
        let (q, r) = self.div_rem(divisor);
        debug_assert!(r.is_zero());
        q
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, other: &Self) -> Self {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn derivative(&self) -> Self {
        let c = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, &a)| mulmod(a, i as u64 % self.p, self.p))
            .collect();
        Self::new(self.p, c)
    }

    /// `self^e mod m`.
    pub fn pow_mod(&self, e: &UBig, m: &Self) -> Self {
        let mut result = Self::one(self.p).rem(m);
        let base = self.rem(m);
        for i in (0..e.bit_len()).rev() {
            result = result.mul(&result).rem(m);
            if e.bit(i) {
                result = result.mul(&base).rem(m);
            }
        }
        result
    }

    /// Compose `self(x^p)`-inverse: given a polynomial in `x^p`, return its p-th root.
    fn pth_root(&self) -> Self {
        let p = self.p as usize;
        let c = self.coeffs.iter().step_by(p).copied().collect();
        Self::new(self.p, c)
    }

    pub fn eval(&self, x: u64) -> u64 {
        self.coeffs
            .iter()
            .rev()
            .fold(0, |acc, &c| (mulmod(acc, x, self.p) + c) % self.p)
    }

    /// Lift to integer coefficients in `[0, p)`.
    pub fn to_ints(&self) -> Vec<IBig> {
        self.coeffs.iter().map(|&c| IBig::from(c)).collect()
    }

    /// Total order used to make factor lists deterministic: by degree, then
    /// coefficient sequence read from the constant term upward.
    pub fn canonical_cmp(&self, other: &Self) -> Ordering {
        self.coeffs
            .len()
            .cmp(&other.coeffs.len())
            .then_with(|| self.coeffs.cmp(&other.coeffs))
    }
}

/// Squarefree decomposition of a monic polynomial: pairs `(g, e)` with `f = ∏ g^e`,
/// each `g` squarefree and pairwise coprime.
pub fn squarefree_decomposition(f: &PolyModP) -> Vec<(PolyModP, usize)> {
    let p = f.modulus();
    let mut out = Vec::new();
    let mut i = 1;
    let fp = f.derivative();
    let mut c = f.gcd(&fp);
    let mut w = f.div_exact(&c);
    while !w.is_one() {
        let y = w.gcd(&c);
        let z = w.div_exact(&y);
        if !z.is_one() {
            out.push((z, i));
        }
        i += 1;
        w = y.clone();
        c = c.div_exact(&y);
    }
    if !c.is_one() {
        let root = c.pth_root();
        for (g, e) in squarefree_decomposition(&root) {
            out.push((g, e * p as usize));
        }
    }
    out
}

/// Distinct-degree factorization of a monic squarefree polynomial: pairs `(g, d)`
/// where `g` is the product of all irreducible factors of degree `d`.
pub fn distinct_degree(f: &PolyModP) -> Vec<(PolyModP, usize)> {
    let p = f.modulus();
    let mut out = Vec::new();
    let mut rest = f.clone();
    let x = PolyModP::x(p);
    let mut h = x.rem(&rest);
    let pe = UBig::from(p);
    let mut d = 0;
    while rest.deg_or_zero() >= 2 * (d + 1) {
        d += 1;
        h = h.pow_mod(&pe, &rest);
        let g = rest.gcd(&h.sub(&x));
        if !g.is_one() {
            rest = rest.div_exact(&g);
            h = h.rem(&rest);
            out.push((g, d));
        }
    }
    if rest.deg_or_zero() > 0 {
        let deg = rest.deg_or_zero();
        out.push((rest, deg));
    }
    out
}

fn random_poly<R: Rng>(p: u64, below_degree: usize, rng: &mut R) -> PolyModP {
    PolyModP::new(p, (0..below_degree).map(|_| rng.gen_range(0..p)).collect())
}

/// Equal-degree splitting (Cantor–Zassenhaus) of a monic squarefree product of
/// irreducibles of degree `d`.
pub fn equal_degree<R: Rng>(f: &PolyModP, d: usize, rng: &mut R) -> Vec<PolyModP> {
    let n = f.deg_or_zero();
    if n == d {
        return vec![f.clone()];
    }
    let p = f.modulus();
    loop {
        let a = random_poly(p, n, rng);
        if a.degree().is_none_or(|k| k == 0) {
            continue;
        }
        let b = if p == 2 {
            // trace map a + a^2 + ... + a^(2^(d-1))
            let mut t = a.rem(f);
            let mut acc = t.clone();
            for _ in 1..d {
                t = t.mul(&t).rem(f);
                acc = acc.add(&t);
            }
            acc
        } else {
            let e = (UBig::from(p).pow(d) - UBig::ONE) >> 1;
            a.pow_mod(&e, f).sub(&PolyModP::one(p))
        };
        let g = f.gcd(&b);
        if g.is_one() || g.deg_or_zero() == n {
            continue;
        }
        let h = f.div_exact(&g);
        let mut out = equal_degree(&g, d, rng);
        out.extend(equal_degree(&h, d, rng));
        return out;
    }
}

/// Complete factorization of a monic polynomial into monic irreducibles with
/// multiplicities, sorted by [`PolyModP::canonical_cmp`].
pub fn factor<R: Rng>(f: &PolyModP, rng: &mut R) -> Vec<(PolyModP, usize)> {
    let f = f.monic();
    let mut out = Vec::new();
    for (g, e) in squarefree_decomposition(&f) {
        for (h, d) in distinct_degree(&g) {
            for irr in equal_degree(&h, d, rng) {
                out.push((irr, e));
            }
        }
    }
    out.sort_by(|a, b| a.0.canonical_cmp(&b.0));
    out
}

/// Irreducibility test for a monic polynomial of degree >= 1.
pub fn is_irreducible(f: &PolyModP) -> bool {
    let f = f.monic();
    let Some(n) = f.degree() else { return false };
    if n == 0 {
        return false;
    }
    if !f.gcd(&f.derivative()).is_one() {
        return false;
    }
    let dd = distinct_degree(&f);
    dd.len() == 1 && dd[0].1 == n
}

/// Deterministic choice of modulus for F_{p^k}: the first monic irreducible of
/// degree `k` when the lower coefficients are enumerated as base-`p` counters
/// (constant term least significant).
pub fn first_irreducible(p: u64, k: usize) -> PolyModP {
    let count = p.pow(k as u32);
    for idx in 0..count {
        let mut c = Vec::with_capacity(k + 1);
        let mut v = idx;
        for _ in 0..k {
            c.push(v % p);
            v /= p;
        }
        c.push(1);
        let poly = PolyModP::new(p, c);
        if is_irreducible(&poly) {
            return poly;
        }
    }
    unreachable!("irreducible polynomials exist in every degree")
}
