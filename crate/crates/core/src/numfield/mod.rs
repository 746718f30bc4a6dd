//! Number fields K = Q[x]/(f) with certified ring of integers Z[α].

mod element;
mod field;
mod poly;
mod roots;

pub use element::FieldElement;
pub use field::{
    dedekind_criterion, define_field, define_field_with, DedekindCheck, FieldOptions,
    IrreducibilityCertificate, MaximalityCertificate, NumberField, IRREDUCIBILITY_PRIME_BOUND,
};
pub use poly::{
    count_real_roots, count_real_roots_in, discriminant, resultant, to_coefficient_list,
    IntPolynomial,
};
pub use roots::{complex_roots, RootSet, MIN_ROOT_PRECISION};
