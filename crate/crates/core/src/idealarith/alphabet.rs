use super::ideal::{ideal_power, IdealHNF};
use super::prime::PrimeIdealFactor;
use crate::error::{Error, Result};
use crate::numfield::{FieldElement, NumberField};
use dashu_int::IBig;

/// The q representatives S_i ⊂ 𝔭^i of 𝔭^i / 𝔭^{i+1}; `elements[0]` is zero.
#[derive(Clone, Debug, PartialEq)]
pub struct AlphabetSet {
    pub level: usize,
    /// The uniformizing row π_i used to scale the residue representatives.
    pub pi: FieldElement,
    pub elements: Vec<FieldElement>,
}

impl AlphabetSet {
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// Integer coordinates of symbol `j`.
    pub fn coords(&self, j: usize) -> Vec<IBig> {
        self.elements[j]
            .int_coords()
            .expect("alphabet elements are integral")
    }
}

/// Residue representatives h(α) with deg h < f and coefficients in [0, p),
/// indexed by reading the base-p digits of the index from the constant term.
fn residue_representatives(m: usize, p: u64, f_deg: usize) -> Vec<Vec<IBig>> {
    let q = p.pow(f_deg as u32);
    (0..q)
        .map(|mut idx| {
            let mut c = vec![IBig::ZERO; m];
            for slot in c.iter_mut().take(f_deg) {
                *slot = IBig::from(idx % p);
                idx /= p;
            }
            c
        })
        .collect()
}

/// S_i for the prime `prime`, computing the needed powers of 𝔭.
pub fn alphabet_set(k: &NumberField, prime: &PrimeIdealFactor, i: usize) -> Result<AlphabetSet> {
    let pi = ideal_power(k, &prime.hnf, i as u64)?;
    let next = super::ideal::ideal_product(k, &pi, &prime.hnf)?;
    alphabet_set_from_powers(k, prime, i, &pi, &next)
}

/// S_i given HNFs of 𝔭^i and 𝔭^{i+1}.
pub fn alphabet_set_from_powers(
    k: &NumberField,
    prime: &PrimeIdealFactor,
    i: usize,
    power: &IdealHNF,
    next: &IdealHNF,
) -> Result<AlphabetSet> {
    let m = k.degree();
    let pi_row = power
        .rows()
        .iter()
        .find(|r| !next.contains_coords(r))
        .ok_or(Error::DegenerateLevel { level: i })?
        .clone();
    let elements = residue_representatives(m, prime.p, prime.f_deg)
        .into_iter()
        .map(|r| FieldElement::from_ints(&k.mul_int(&pi_row, &r)))
        .collect();
    Ok(AlphabetSet {
        level: i,
        pi: FieldElement::from_ints(&pi_row),
        elements,
    })
}
