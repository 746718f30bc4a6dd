use super::gf::GaloisField;
use crate::error::{Error, Result};

/// Largest codebook enumerated when checking minimum distance.
pub const MAX_ENUMERATED: u64 = 1_000_000;

/// A small linear code over F_q given by a generator matrix.
#[derive(Clone, Debug)]
pub struct LinearCode {
    pub field: GaloisField,
    pub generator: Vec<Vec<usize>>,
    pub n: usize,
    pub k: usize,
    /// Designed minimum distance.
    pub d: usize,
}

impl LinearCode {
    /// Code spanned by `generator`; the minimum distance is found by
    /// enumerating every codeword.
    pub fn from_generator(field: GaloisField, generator: Vec<Vec<usize>>) -> Result<Self> {
        let k = generator.len();
        let n = generator.first().map_or(0, Vec::len);
        if k == 0 || n == 0 || generator.iter().any(|r| r.len() != n) {
            return Err(Error::Validation("generator must be a nonempty k×n matrix".into()));
        }
        let mut code = Self {
            field,
            generator,
            n,
            k,
            d: 0,
        };
        code.d = code.min_weight()?;
        Ok(code)
    }

    pub fn size(&self) -> u64 {
        self.field.order().pow(self.k as u32)
    }

    /// Codeword for the message whose base-q digits are `index`.
    pub fn codeword(&self, mut index: u64) -> Vec<usize> {
        let q = self.field.order();
        let mut word = vec![0usize; self.n];
        for row in &self.generator {
            let c = (index % q) as usize;
            index /= q;
            if c == 0 {
                continue;
            }
            for (w, &g) in word.iter_mut().zip(row) {
                *w = self.field.add(*w, self.field.mul(c, g));
            }
        }
        word
    }

    pub fn codewords(&self) -> impl Iterator<Item = Vec<usize>> + '_ {
        (0..self.size()).map(|i| self.codeword(i))
    }

    /// Minimum Hamming weight over nonzero codewords, by enumeration.
    pub fn min_weight(&self) -> Result<usize> {
        if self.size() > MAX_ENUMERATED {
            return Err(Error::ScaleTooLarge(format!(
                "{} codewords exceed the enumeration limit {MAX_ENUMERATED}",
                self.size()
            )));
        }
        let w = (1..self.size())
            .map(|i| self.codeword(i).iter().filter(|&&x| x != 0).count())
            .min()
            .unwrap_or(self.n);
        if w == 0 {
            return Err(Error::Validation("generator rows are linearly dependent".into()));
        }
        Ok(w)
    }
}

/// Reed–Solomon code when n ≤ q, repetition code when k = 1.
pub fn demo_code(q: u64, n: usize, k: usize) -> Result<LinearCode> {
    if k == 0 || k > n {
        return Err(Error::Validation(format!("need 1 ≤ k ≤ n, got k={k}, n={n}")));
    }
    let field = GaloisField::new(q)?;
    if n as u64 <= q {
        // evaluation points are the first n field elements, rows are powers
        let generator = (0..k)
            .map(|j| (0..n).map(|x| field.pow(x, j)).collect())
            .collect();
        return Ok(LinearCode {
            field,
            generator,
            n,
            k,
            d: n - k + 1,
        });
    }
    if k == 1 {
        return Ok(LinearCode {
            field,
            generator: vec![vec![1; n]],
            n,
            k,
            d: n,
        });
    }
    Err(Error::Unsupported(format!(
        "no demo code with q={q}, n={n}, k={k}: Reed-Solomon needs n ≤ q, repetition needs k = 1"
    )))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reed_solomon_is_mds() {
        let c = demo_code(9, 8, 3).unwrap();
        assert_eq!(c.d, 6);
        assert_eq!(c.min_weight().unwrap(), 6);
        assert!(c.codeword(0).iter().all(|&x| x == 0));
    }

    #[test]
    fn repetition() {
        let c = demo_code(2, 4, 1).unwrap();
        assert_eq!((c.d, c.min_weight().unwrap()), (4, 4));
        assert!(matches!(demo_code(2, 4, 2), Err(Error::Unsupported(_))));
    }

    #[test]
    fn explicit_generator() {
        let f = GaloisField::new(2).unwrap();
        let c = LinearCode::from_generator(f, vec![vec![1, 0, 0, 0]]).unwrap();
        assert_eq!(c.d, 1);
    }
}
