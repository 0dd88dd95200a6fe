//! Iterative message-passing decoders over the Tanner graph.
//!
//! [`bit_flip_decode`] works on hard decisions; [`sum_product_decode`] works
//! on channel LLRs. Both test the syndrome after every iteration and stop as
//! soon as it is zero, so a returned [`DecodeStatus::Converged`] always
//! carries a valid codeword and a failure to converge is always reported.

mod bitflip;
mod llr;
mod sum_product;

pub use bitflip::bit_flip_decode;
pub use llr::{boxplus, LlrVector, LLR_CLAMP};
pub use sum_product::{sum_product_decode, SumProductDecoder};

use crate::gf2::BitVector;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DecodeStatus {
    /// All parity checks are satisfied.
    Converged,
    /// The iteration limit was reached with checks still failing.
    MaxIterations,
}

#[derive(Clone, Debug, PartialEq)]
pub struct DecodeResult {
    /// Best codeword estimate, in the column order of `H`.
    pub bits: BitVector,
    pub status: DecodeStatus,
    /// Iterations actually executed; 0 when the input was already a codeword.
    pub iterations: usize,
    /// Final per-bit LLRs (sum-product only).
    pub posterior: Option<Vec<f64>>,
}

impl DecodeResult {
    fn converged(bits: BitVector, iterations: usize, posterior: Option<Vec<f64>>) -> Self {
        DecodeResult {
            bits,
            status: DecodeStatus::Converged,
            iterations,
            posterior,
        }
    }

    pub fn is_converged(&self) -> bool {
        self.status == DecodeStatus::Converged
    }
}
