use super::hnf::{self, hnf_mod};
use crate::error::{Error, Result};
use crate::numfield::{FieldElement, IntPolynomial, NumberField};
use dashu_int::ops::*;
use dashu_int::IBig;
use std::fmt;

/// Integral ideal of Z[α] as an upper-triangular row HNF over the power basis.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IdealHNF {
    field: IntPolynomial,
    rows: Vec<Vec<IBig>>,
}

impl IdealHNF {
    /// The unit ideal O_K.
    pub fn unit(k: &NumberField) -> Self {
        let m = k.degree();
        let rows = (0..m)
            .map(|i| {
                (0..m)
                    .map(|j| if i == j { IBig::ONE } else { IBig::ZERO })
                    .collect()
            })
            .collect();
        Self {
            field: k.polynomial().clone(),
            rows,
        }
    }

    /// HNF of the ideal generated by integral elements given as coordinate
    /// vectors; `modulus` must be a nonzero integer lying in the ideal.
    pub fn from_ideal_generators(k: &NumberField, gens: &[Vec<IBig>], modulus: &IBig) -> Self {
        let m = k.degree();
        let d = IBig::from(modulus.clone().unsigned_abs());
        // close the generators under multiplication by α
        let mut all = Vec::with_capacity(gens.len() * m);
        let alpha = alpha_coords(m);
        for g in gens {
            let mut cur = g.clone();
            for _ in 0..m {
                all.push(cur.clone());
                cur = k.mul_int(&cur, &alpha);
            }
        }
        Self {
            field: k.polynomial().clone(),
            rows: hnf_mod(&all, m, &d),
        }
    }

    pub fn rows(&self) -> &[Vec<IBig>] {
        &self.rows
    }

    pub fn degree(&self) -> usize {
        self.rows.len()
    }

    /// Basis row `i` as a field element.
    pub fn row_element(&self, i: usize) -> FieldElement {
        FieldElement::from_ints(&self.rows[i])
    }

    pub fn norm(&self) -> IBig {
        self.rows
            .iter()
            .enumerate()
            .fold(IBig::ONE, |acc, (i, r)| acc * &r[i])
    }

    pub fn is_unit(&self) -> bool {
        self.norm() == IBig::ONE
    }

    /// Membership for an integral coordinate vector.
    pub fn contains_coords(&self, x: &[IBig]) -> bool {
        hnf::solve_triangular(&self.rows, x).is_some()
    }

    /// Whether every basis row times α stays in the ideal.
    pub fn is_alpha_closed(&self, k: &NumberField) -> bool {
        let alpha = alpha_coords(self.degree());
        self.rows
            .iter()
            .all(|r| self.contains_coords(&k.mul_int(r, &alpha)))
    }

    fn check_field(&self, k: &NumberField) -> Result<()> {
        if &self.field != k.polynomial() {
            return Err(Error::Validation(
                "ideal belongs to a different number field".into(),
            ));
        }
        Ok(())
    }
}

impl fmt::Display for IdealHNF {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .rows
            .iter()
            .map(|r| {
                let cells: Vec<String> = r.iter().map(|x| x.to_string()).collect();
                format!("[{}]", cells.join(" "))
            })
            .collect();
        write!(f, "{}", rows.join(" "))
    }
}

fn alpha_coords(m: usize) -> Vec<IBig> {
    let mut a = vec![IBig::ZERO; m];
    a[1] = IBig::ONE;
    a
}

/// HNF of the two-generator ideal `(p, g)`.
pub fn hnf_from_generators(k: &NumberField, p: &IBig, g: &FieldElement) -> Result<IdealHNF> {
    let m = k.degree();
    if g.dim() != m {
        return Err(Error::DimensionMismatch {
            expected: m,
            got: g.dim(),
        });
    }
    let gc = g.int_coords().ok_or(Error::NotIntegral)?;
    let modulus = if *p != IBig::ZERO {
        p.clone()
    } else if g.is_zero() {
        return Err(Error::ZeroIdeal);
    } else {
        k.norm(g)?.numerator().clone()
    };
    let mut gens = vec![gc];
    let mut pc = vec![IBig::ZERO; m];
    pc[0] = p.clone();
    gens.push(pc);
    Ok(IdealHNF::from_ideal_generators(k, &gens, &modulus))
}

/// Product of two ideals.
pub fn ideal_product(k: &NumberField, a: &IdealHNF, b: &IdealHNF) -> Result<IdealHNF> {
    a.check_field(k)?;
    b.check_field(k)?;
    let m = k.degree();
    let d = a.norm() * b.norm();
    let mut gens = Vec::with_capacity(m * m);
    for x in &a.rows {
        for y in &b.rows {
            gens.push(k.mul_int(x, y));
        }
    }
    Ok(IdealHNF {
        field: k.polynomial().clone(),
        rows: hnf_mod(&gens, m, &d),
    })
}

/// `I^e` by binary exponentiation; `I^0` is the unit ideal.
pub fn ideal_power(k: &NumberField, ideal: &IdealHNF, e: u64) -> Result<IdealHNF> {
    ideal.check_field(k)?;
    let mut result = IdealHNF::unit(k);
    let mut base = ideal.clone();
    let mut e = e;
    while e > 0 {
        if e & 1 == 1 {
            result = ideal_product(k, &result, &base)?;
        }
        e >>= 1;
        if e > 0 {
            base = ideal_product(k, &base, &base)?;
        }
    }
    Ok(result)
}

/// Absolute norm N(I) = [O_K : I].
pub fn ideal_norm(ideal: &IdealHNF) -> IBig {
    ideal.norm()
}

/// Membership test for an integral element.
pub fn contains(ideal: &IdealHNF, x: &FieldElement) -> Result<bool> {
    if x.dim() != ideal.degree() {
        return Err(Error::DimensionMismatch {
            expected: ideal.degree(),
            got: x.dim(),
        });
    }
    let c = x.int_coords().ok_or(Error::NotIntegral)?;
    Ok(ideal.contains_coords(&c))
}
