use super::SparseParityCheck;
use crate::error::{Error, Result};
use crate::gf2::{row_reduce, BitMatrix, BitVector};

/// Systematic encoder derived from `H` by Gauss-Jordan elimination.
///
/// After reordering columns by `col_perm`, `H` is row-equivalent to
/// `[A | I_r]` with `r = rank(H)`, and the generator is `G = [I_k | Aᵀ]`
/// with `k = n - r`. Only the `k × r` block `Aᵀ` is kept; the identity half
/// of `G` is implicit. `Aᵀ` is usually dense even when `H` is sparse.
///
/// Codewords are returned in the original column order of `H`, so decoders
/// never see the permutation.
#[derive(Clone, Debug)]
pub struct SystematicEncoder {
    h: SparseParityCheck,
    rank: usize,
    col_perm: Vec<usize>,
    a_transpose: BitMatrix,
}

/// Derives the systematic encoder of `h`.
///
/// `k` comes from the rank, not from the row count: rows of `H` may be
/// linearly dependent. A full-rank square `H` defines only the zero codeword
/// and is rejected.
pub fn derive_encoder(h: &SparseParityCheck) -> Result<SystematicEncoder> {
    let rec = row_reduce(&h.to_dense());
    let (n, r) = (h.n(), rec.rank);
    if r >= n {
        return Err(Error::ZeroDimension { rank: r, n });
    }
    let k = n - r;
    let mut a_transpose = BitMatrix::zeros(k, r);
    for row in 0..r {
        for col in 0..k {
            if rec.reduced.get(row, col) {
                a_transpose.set(col, row, true);
            }
        }
    }
    Ok(SystematicEncoder {
        h: h.clone(),
        rank: r,
        col_perm: rec.col_perm,
        a_transpose,
    })
}

impl SystematicEncoder {
    /// Message length.
    pub fn k(&self) -> usize {
        self.a_transpose.rows()
    }

    pub fn n(&self) -> usize {
        self.h.n()
    }

    /// Rank of `H` (number of independent parity checks).
    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn parity_check(&self) -> &SparseParityCheck {
        &self.h
    }

    pub fn col_perm(&self) -> &[usize] {
        &self.col_perm
    }

    /// Columns of `H` that carry the message bits, in message order.
    pub fn message_positions(&self) -> &[usize] {
        &self.col_perm[..self.k()]
    }

    /// The `Aᵀ` block of `G = [I_k | Aᵀ]`.
    pub fn a_transpose(&self) -> &BitMatrix {
        &self.a_transpose
    }

    /// Fraction of ones in the `Aᵀ` block.
    pub fn parity_block_density(&self) -> f64 {
        let area = self.a_transpose.rows() * self.a_transpose.cols();
        if area == 0 {
            0.0
        } else {
            self.a_transpose.weight() as f64 / area as f64
        }
    }

    /// `c = m · G`, returned in the original column order of `H`.
    pub fn encode(&self, msg: &BitVector) -> Result<BitVector> {
        if msg.len() != self.k() {
            return Err(Error::LengthMismatch {
                what: "message",
                expected: self.k(),
                found: msg.len(),
            });
        }
        let parity = self.a_transpose.vec_mat(msg)?;
        let mut c = BitVector::zeros(self.n());
        for p in msg.support() {
            c.set(self.col_perm[p], true);
        }
        let k = self.k();
        for j in parity.support() {
            c.set(self.col_perm[k + j], true);
        }
        Ok(c)
    }

    /// Reads the message bits back out of a codeword (or a decoder estimate).
    pub fn extract_message(&self, codeword: &BitVector) -> Result<BitVector> {
        if codeword.len() != self.n() {
            return Err(Error::LengthMismatch {
                what: "codeword",
                expected: self.n(),
                found: codeword.len(),
            });
        }
        Ok(self
            .message_positions()
            .iter()
            .map(|&p| codeword.get(p))
            .collect())
    }
}
