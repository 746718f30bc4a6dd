use crate::error::{Error, Result};
use crate::linalg;
use dashu_int::ops::*;
use dashu_int::IBig;
use dashu_ratio::RBig;
use std::fmt;
use std::str::FromStr;

/// Integer polynomial, coefficients stored constant term first.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IntPolynomial {
    coeffs: Vec<IBig>,
}

impl IntPolynomial {
    pub fn new(coeffs: Vec<IBig>) -> Self {
        let mut p = Self { coeffs };
        while p.coeffs.last() == Some(&IBig::ZERO) {
            p.coeffs.pop();
        }
        p
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| IBig::from(c)).collect())
    }

    pub fn coeffs(&self) -> &[IBig] {
        &self.coeffs
    }

    /// Degree; the zero polynomial reports 0.
    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn leading(&self) -> IBig {
        self.coeffs.last().cloned().unwrap_or(IBig::ZERO)
    }

    pub fn is_monic(&self) -> bool {
        self.leading() == IBig::ONE
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * IBig::from(i))
                .collect(),
        )
    }

    pub fn eval(&self, x: &IBig) -> IBig {
        self.coeffs
            .iter()
            .rev()
            .fold(IBig::ZERO, |acc, c| acc * x + c)
    }

    /// Sum of absolute values of the coefficients.
    pub fn l1_norm(&self) -> IBig {
        self.coeffs
            .iter()
            .fold(IBig::ZERO, |acc, c| acc + IBig::from(c.unsigned_abs()))
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::new(vec![]);
        }
        let mut c = vec![IBig::ZERO; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                c[i + j] += a * b;
            }
        }
        Self::new(c)
    }

    pub fn sub(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        Self::new(
            (0..n)
                .map(|i| {
                    self.coeffs.get(i).cloned().unwrap_or(IBig::ZERO)
                        - other.coeffs.get(i).cloned().unwrap_or(IBig::ZERO)
                })
                .collect(),
        )
    }

    pub fn to_rational(&self) -> Vec<RBig> {
        self.coeffs.iter().map(|c| RBig::from(c.clone())).collect()
    }
}

/// Resultant of two rational polynomials (constant term first) via the Sylvester matrix.
pub fn resultant(f: &[RBig], g: &[RBig]) -> RBig {
    let f = trim_rat(f);
    let g = trim_rat(g);
    if f.is_empty() || g.is_empty() {
        return RBig::ZERO;
    }
    let m = f.len() - 1;
    let n = g.len() - 1;
    if m == 0 && n == 0 {
        return RBig::ONE;
    }
    if n == 0 {
        return pow_rat(&g[0], m);
    }
    if m == 0 {
        return pow_rat(&f[0], n);
    }
    let size = m + n;
    let mut rows = vec![vec![RBig::ZERO; size]; size];
    // coefficients listed from the leading term down
    for r in 0..n {
        for (k, c) in f.iter().rev().enumerate() {
            rows[r][r + k] = c.clone();
        }
    }
    for r in 0..m {
        for (k, c) in g.iter().rev().enumerate() {
            rows[n + r][r + k] = c.clone();
        }
    }
    linalg::det_rat(&rows)
}

fn trim_rat(p: &[RBig]) -> Vec<RBig> {
    let mut v = p.to_vec();
    while v.last() == Some(&RBig::ZERO) {
        v.pop();
    }
    v
}

fn pow_rat(x: &RBig, e: usize) -> RBig {
    (0..e).fold(RBig::ONE, |acc, _| acc * x)
}

/// Discriminant of a monic integer polynomial, `(-1)^{m(m-1)/2} Res(f, f')`.
pub fn discriminant(f: &IntPolynomial) -> IBig {
    let m = f.degree();
    let res = resultant(&f.to_rational(), &f.derivative().to_rational());
    let (num, den) = res.into_parts();
    debug_assert_eq!(den, dashu_int::UBig::ONE);
    if (m * (m.saturating_sub(1)) / 2) % 2 == 1 {
        -num
    } else {
        num
    }
}

/// Sturm-sequence count of distinct real roots of a squarefree polynomial.
pub fn count_real_roots(f: &IntPolynomial) -> usize {
    let seq = sturm_sequence(f);
    let at_neg = sign_changes(seq.iter().map(|p| {
        let lead = p.last().cloned().unwrap_or(RBig::ZERO);
        if (p.len() - 1) % 2 == 1 {
            -lead
        } else {
            lead
        }
    }));
    let at_pos = sign_changes(seq.iter().map(|p| p.last().cloned().unwrap_or(RBig::ZERO)));
    at_neg - at_pos
}

/// Number of distinct real roots in the half-open interval `(a, b]`.
pub fn count_real_roots_in(f: &IntPolynomial, a: &RBig, b: &RBig) -> usize {
    let seq = sturm_sequence(f);
    let va = sign_changes(seq.iter().map(|p| eval_rat(p, a)));
    let vb = sign_changes(seq.iter().map(|p| eval_rat(p, b)));
    va - vb
}

pub fn eval_rat(p: &[RBig], x: &RBig) -> RBig {
    p.iter().rev().fold(RBig::ZERO, |acc, c| acc * x + c)
}

fn sturm_sequence(f: &IntPolynomial) -> Vec<Vec<RBig>> {
    let mut seq = vec![f.to_rational(), f.derivative().to_rational()];
    loop {
        let n = seq.len();
        let r = rem_rat(&seq[n - 2], &seq[n - 1]);
        if r.is_empty() {
            break;
        }
        seq.push(r.into_iter().map(|c| -c).collect());
    }
    seq
}

fn rem_rat(a: &[RBig], b: &[RBig]) -> Vec<RBig> {
    let mut r = trim_rat(a);
    let b = trim_rat(b);
    let db = b.len() - 1;
    let lead = b[db].clone();
    while r.len() > db {
        let k = r.len() - 1;
        let c = &r[k] / &lead;
        for (j, bj) in b.iter().enumerate() {
            let v = &c * bj;
            r[k - db + j] -= v;
        }
        r.pop();
        r = trim_rat(&r);
    }
    r
}

fn sign_changes(values: impl Iterator<Item = RBig>) -> usize {
    let mut last = 0i8;
    let mut changes = 0;
    for v in values {
        let s = if v > RBig::ZERO {
            1
        } else if v < RBig::ZERO {
            -1
        } else {
            0
        };
        if s != 0 {
            if last != 0 && s != last {
                changes += 1;
            }
            last = s;
        }
    }
    changes
}

impl FromStr for IntPolynomial {
    type Err = Error;

    /// Parses a comma-separated integer coefficient list, constant term first.
    fn from_str(s: &str) -> Result<Self> {
        let coeffs = s
            .split(',')
            .map(|t| {
                IBig::from_str(t.trim()).map_err(|e| Error::ParseError {
                    line: 1,
                    message: format!("bad coefficient {t:?}: {e}"),
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::new(coeffs))
    }
}

impl fmt::Display for IntPolynomial {
    /// Human-readable form such as `x^4 - x^3 - x^2 + x + 1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if *c == IBig::ZERO {
                continue;
            }
            let neg = *c < IBig::ZERO;
            let mag = c.unsigned_abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { "-" } else { "+" })?;
            }
            first = false;
            let show_mag = i == 0 || mag != dashu_int::UBig::ONE;
            if show_mag {
                write!(f, "{mag}")?;
            }
            match i {
                0 => {}
                1 => write!(f, "x")?,
                _ => write!(f, "x^{i}")?,
            }
        }
        Ok(())
    }
}

/// Comma-separated coefficient list, the ingestion format.
pub fn to_coefficient_list(p: &IntPolynomial) -> String {
    p.coeffs
        .iter()
        .map(|c| c.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_display() {
        let f: IntPolynomial = "1, 1, -1, -1, 1".parse().unwrap();
        assert_eq!(f.degree(), 4);
        assert_eq!(f.to_string(), "x^4 - x^3 - x^2 + x + 1");
        assert_eq!(to_coefficient_list(&f), "1,1,-1,-1,1");
        assert!("1,x".parse::<IntPolynomial>().is_err());
    }

    #[test]
    fn discriminants_of_reference_polynomials() {
        assert_eq!(discriminant(&IntPolynomial::from_i64s(&[1, 0, 1])), IBig::from(-4));
        assert_eq!(
            discriminant(&IntPolynomial::from_i64s(&[1, 1, -1, -1, 1])),
            IBig::from(117)
        );
        assert_eq!(
            discriminant(&IntPolynomial::from_i64s(&[-1, -2, 1, 1])),
            IBig::from(49)
        );
        assert_eq!(
            discriminant(&IntPolynomial::from_i64s(&[-1, 0, 1, 1])),
            IBig::from(-23)
        );
        assert_eq!(
            discriminant(&IntPolynomial::from_i64s(&[1, 0, 0, 1, 0, 0, 1])),
            IBig::from(-19683)
        );
    }

    #[test]
    fn sturm_counts() {
        assert_eq!(count_real_roots(&IntPolynomial::from_i64s(&[1, 0, 1])), 0);
        assert_eq!(count_real_roots(&IntPolynomial::from_i64s(&[-1, -2, 1, 1])), 3);
        assert_eq!(count_real_roots(&IntPolynomial::from_i64s(&[-1, 0, 1, 1])), 1);
        assert_eq!(count_real_roots(&IntPolynomial::from_i64s(&[1, 1, -1, -1, 1])), 0);
        let f = IntPolynomial::from_i64s(&[-1, -2, 1, 1]);
        assert_eq!(count_real_roots_in(&f, &RBig::from(-2), &RBig::from(0)), 2);
    }

    #[test]
    fn resultant_of_linear_factors() {
        // Res(x - 2, x - 5) = 2 - 5
        let f = IntPolynomial::from_i64s(&[-2, 1]).to_rational();
        let g = IntPolynomial::from_i64s(&[-5, 1]).to_rational();
        assert_eq!(resultant(&f, &g), RBig::from(-3));
        // constant second argument
        assert_eq!(resultant(&f, &[RBig::from(3)]), RBig::from(3));
    }
}
