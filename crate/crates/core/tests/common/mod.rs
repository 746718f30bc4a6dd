#![allow(dead_code)]

use idealpack::idealarith::PrimeIdealFactor;
use idealpack::numfield::{define_field, IntPolynomial, NumberField};
use idealpack::packing::REFERENCE_PRIMES;

pub const FIELDS: [&[i64]; 4] = [
    &[1, 1, -1, -1, 1],
    &[-1, -2, 1, 1],
    &[-1, 0, 1, 1],
    &[1, 0, 0, 1, 0, 0, 1],
];

pub fn field(c: &[i64]) -> NumberField {
    define_field(IntPolynomial::from_i64s(c)).unwrap()
}

pub fn fields() -> Vec<NumberField> {
    FIELDS.iter().map(|c| field(c)).collect()
}

/// Every reference field with its chosen prime.
pub fn reference_primes() -> Vec<(NumberField, PrimeIdealFactor)> {
    REFERENCE_PRIMES
        .iter()
        .map(|r| {
            let k = r.field().unwrap();
            let p = r.prime(&k, 0).unwrap();
            (k, p)
        })
        .collect()
}
