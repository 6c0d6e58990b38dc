//! Finite-field arithmetic and dense linear algebra over `F_q`.

mod extension;
mod field;
mod matrix;
pub(crate) mod poly;

pub use extension::{ExtElement, ExtensionField};
pub use field::{builtin_modulus, prime_power, Element, FieldSpec, MAX_FIELD_SIZE};
pub use matrix::{mat_add, mat_sub, rank, rref, stack, Echelon, Matrix};
pub(crate) use matrix::{pack_row, rank_bits};

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AlgebraError {
    #[error("{0} is not a prime power")]
    NotPrimePower(u32),
    #[error("{0} is not prime")]
    NotPrime(u32),
    #[error("field of size {0} is too large")]
    FieldTooLarge(u32),
    #[error("bad modulus: {0}")]
    BadModulus(String),
    #[error("modulus is reducible")]
    Reducible,
    #[error("shape mismatch: expected {expected:?}, found {found:?}")]
    ShapeMismatch { expected: (usize, usize), found: (usize, usize) },
    #[error("entry {value} is not an element of F_{q}")]
    EntryOutOfRange { value: u8, q: u32 },
}
