use super::{DecodeResult, DecodeStatus};
use crate::code::SparseParityCheck;
use crate::error::{Error, Result};
use crate::gf2::BitVector;

/// Hard-decision bit-flipping decoder.
///
/// Each iteration evaluates every parity check, counts the unsatisfied checks
/// `u_j` touching each bit, and flips the bits for which `u_j` exceeds half
/// their degree. When no bit has such a majority but some check is still
/// unsatisfied, the bits reaching the largest `u_j` are flipped instead; on
/// even-degree columns a strict majority may otherwise never occur.
///
/// Decoding stops as soon as all checks are satisfied. A word that already
/// satisfies them is returned after zero iterations.
pub fn bit_flip_decode(
    h: &SparseParityCheck,
    received: &BitVector,
    max_iter: usize,
) -> Result<DecodeResult> {
    if received.len() != h.n() {
        return Err(Error::LengthMismatch {
            what: "received word",
            expected: h.n(),
            found: received.len(),
        });
    }
    if max_iter == 0 {
        return Err(Error::InvalidParameters(
            "max_iter must be at least 1".into(),
        ));
    }

    let mut bits = received.clone();
    let mut unsatisfied: Vec<bool> = h.syndrome(&bits)?.iter().collect();
    let mut unsat_count = unsatisfied.iter().filter(|&&u| u).count();
    if unsat_count == 0 {
        return Ok(DecodeResult::converged(bits, 0, None));
    }

    let mut votes = vec![0usize; h.n()];
    let mut to_flip = Vec::new();
    for iteration in 1..=max_iter {
        for (j, v) in votes.iter_mut().enumerate() {
            *v = h.col(j).iter().filter(|&&i| unsatisfied[i]).count();
        }
        to_flip.clear();
        to_flip.extend((0..h.n()).filter(|&j| 2 * votes[j] > h.col(j).len()));
        if to_flip.is_empty() {
            let max = votes.iter().copied().max().unwrap_or(0);
            if max > 0 {
                to_flip.extend((0..h.n()).filter(|&j| votes[j] == max));
            }
        }
        for &j in &to_flip {
            bits.flip(j);
            for &i in h.col(j) {
                unsatisfied[i] = !unsatisfied[i];
                if unsatisfied[i] {
                    unsat_count += 1;
                } else {
                    unsat_count -= 1;
                }
            }
        }
        if unsat_count == 0 {
            return Ok(DecodeResult::converged(bits, iteration, None));
        }
    }
    Ok(DecodeResult {
        bits,
        status: DecodeStatus::MaxIterations,
        iterations: max_iter,
        posterior: None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn hamming_like() -> SparseParityCheck {
        SparseParityCheck::from_rows(
            7,
            vec![vec![0, 1, 2, 4], vec![1, 2, 3, 5], vec![0, 2, 3, 6]],
        )
        .unwrap()
    }

    #[test]
    fn majority_flips_every_qualifying_bit() {
        // bit 2 breaks all three checks, so every other bit also sees a strict
        // majority of failing checks and flips alongside it
        let h = hamming_like();
        let r = bit_flip_decode(&h, &BitVector::from_support(7, &[2]), 1).unwrap();
        assert_eq!(r.bits.support(), vec![0, 1, 3, 4, 5, 6]);
        assert_eq!(r.status, DecodeStatus::MaxIterations);
    }

    #[test]
    fn codeword_needs_no_iterations() {
        let h = hamming_like();
        let r = bit_flip_decode(&h, &BitVector::zeros(7), 5).unwrap();
        assert_eq!(r.status, DecodeStatus::Converged);
        assert_eq!(r.iterations, 0);
    }

    #[test]
    fn bad_inputs() {
        let h = hamming_like();
        assert!(bit_flip_decode(&h, &BitVector::zeros(6), 5).is_err());
        assert!(bit_flip_decode(&h, &BitVector::zeros(7), 0).is_err());
    }

    #[test]
    fn single_check_bit_is_flipped_alone() {
        // bit 4 sits only in check 0; its neighbours see one failing check out
        // of two or three and keep their value
        let h = hamming_like();
        let r = bit_flip_decode(&h, &BitVector::from_support(7, &[4]), 5).unwrap();
        assert_eq!(r.status, DecodeStatus::Converged);
        assert!(r.bits.is_zero());
        assert_eq!(r.iterations, 1);
    }
}
