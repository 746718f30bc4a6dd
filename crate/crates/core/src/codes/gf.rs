use crate::arith;
use crate::error::{Error, Result};
use crate::modp::{first_irreducible, PolyModP};

/// Largest field size handled with full operation tables.
pub const MAX_TABLE_FIELD: u64 = 1024;

/// F_q = F_p[x]/(h) with h the fixed modulus from [`first_irreducible`].
/// Element `j` is the polynomial whose base-p digits (constant term least
/// significant) spell `j`.
#[derive(Clone, Debug)]
pub struct GaloisField {
    p: u64,
    degree: usize,
    modulus: PolyModP,
    add: Vec<Vec<u16>>,
    mul: Vec<Vec<u16>>,
}

impl GaloisField {
    pub fn new(q: u64) -> Result<Self> {
        let (p, degree) = prime_power(q)
            .ok_or_else(|| Error::Validation(format!("{q} is not a prime power")))?;
        if q > MAX_TABLE_FIELD {
            return Err(Error::Unsupported(format!(
                "field size {q} above {MAX_TABLE_FIELD}"
            )));
        }
        let modulus = first_irreducible(p, degree);
        let qs = q as usize;
        let polys: Vec<PolyModP> = (0..q).map(|j| to_poly(p, degree, j)).collect();
        let mut add = vec![vec![0u16; qs]; qs];
        let mut mul = vec![vec![0u16; qs]; qs];
        for a in 0..qs {
            for b in 0..qs {
                add[a][b] = from_poly(p, &polys[a].add(&polys[b])) as u16;
                mul[a][b] = from_poly(p, &polys[a].mul(&polys[b]).rem(&modulus)) as u16;
            }
        }
        Ok(Self {
            p,
            degree,
            modulus,
            add,
            mul,
        })
    }

    pub fn order(&self) -> u64 {
        self.add.len() as u64
    }

    pub fn characteristic(&self) -> u64 {
        self.p
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn modulus(&self) -> &PolyModP {
        &self.modulus
    }

    pub fn add(&self, a: usize, b: usize) -> usize {
        self.add[a][b] as usize
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a][b] as usize
    }

    pub fn pow(&self, a: usize, e: usize) -> usize {
        (0..e).fold(1, |acc, _| self.mul(acc, a))
    }

    /// Base-p digits of element `j`, constant term first.
    pub fn digits(&self, j: usize) -> Vec<u64> {
        let mut v = j as u64;
        (0..self.degree)
            .map(|_| {
                let d = v % self.p;
                v /= self.p;
                d
            })
            .collect()
    }
}

fn to_poly(p: u64, degree: usize, mut j: u64) -> PolyModP {
    let mut c = Vec::with_capacity(degree);
    for _ in 0..degree {
        c.push(j % p);
        j /= p;
    }
    PolyModP::new(p, c)
}

fn from_poly(p: u64, poly: &PolyModP) -> u64 {
    poly.coeffs().iter().rev().fold(0, |acc, &c| acc * p + c)
}

/// `(p, k)` with `q = p^k`, or `None`.
pub fn prime_power(q: u64) -> Option<(u64, usize)> {
    if q < 2 {
        return None;
    }
    let p = (2..=q).find(|d| q % d == 0)?;
    if !arith::is_prime_u64(p) {
        return None;
    }
    let mut k = 0;
    let mut r = q;
    while r % p == 0 {
        r /= p;
        k += 1;
    }
    (r == 1).then_some((p, k))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn field_axioms_small() {
        for q in [2u64, 3, 4, 8, 9] {
            let f = GaloisField::new(q).unwrap();
            let qs = q as usize;
            for a in 1..qs {
                // every nonzero element has an inverse
                assert!((1..qs).any(|b| f.mul(a, b) == 1));
                assert_eq!(f.pow(a, qs - 1), 1);
            }
        }
        assert!(GaloisField::new(6).is_err());
        assert_eq!(GaloisField::new(9).unwrap().modulus().coeffs(), &[1, 0, 1]);
    }
}
