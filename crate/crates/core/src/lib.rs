//! Dense sphere packings built from prime ideals of number fields.
//!
//! An ideal lattice τ(𝔭^ℓ) ⊂ R^m is obtained from the canonical embedding of a
//! prime-ideal power. Codes over the residue field O_K/𝔭 ≅ F_q are lifted level
//! by level through alphabet sets S_i ⊂ 𝔭^i and added to n copies of that
//! lattice, giving packings in R^{mn} with a certified center-density bound.

pub mod arith;
pub mod cli;
pub mod codes;
pub mod embedding;
pub mod error;
pub mod idealarith;
pub mod lattice;
pub mod linalg;
pub mod modp;
pub mod numfield;
pub mod packing;
pub mod real;

pub use error::{Error, Result};
