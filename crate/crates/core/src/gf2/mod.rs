//! Exact linear algebra over GF(2).
//!
//! [`BitVector`] and [`BitMatrix`] pack bits into 64-bit words; addition is
//! XOR and multiplication is AND. [`row_reduce`] performs Gauss-Jordan
//! elimination and records the column permutation that moves the pivot
//! columns to the right, which is the shape systematic encoding needs.

mod matrix;
mod reduce;
mod vector;

pub use matrix::BitMatrix;
pub use reduce::{rank, row_reduce, EliminationRecord};
pub use vector::BitVector;

use crate::code::SparseParityCheck;
use crate::error::Result;

/// `H · cᵀ`, computed from the sparse row adjacency of `h`.
///
/// The result is zero exactly when `c` is a codeword.
pub fn syndrome(h: &SparseParityCheck, c: &BitVector) -> Result<BitVector> {
    h.syndrome(c)
}
