use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::SparseParityCheck;
use crate::error::{Error, Result};

/// Gallager's banded construction of a regular `(n, wc, wr)` code.
///
/// `H` is split into `wc` bands of `n / wr` rows. In band 0, row `t` covers
/// columns `t·wr .. (t+1)·wr`. Every further band is band 0 with its columns
/// shuffled by an independent permutation drawn from `seed`. Each column
/// therefore gets exactly one one per band (weight `wc`) and each row keeps
/// weight `wr`.
///
/// Repeated column pairs (4-cycles) are not removed; see
/// [`validate`](super::validate) to count them.
pub fn gallager_construct(n: usize, wc: usize, wr: usize, seed: u64) -> Result<SparseParityCheck> {
    if wc < 2 {
        return Err(Error::InvalidParameters(format!(
            "column weight must be at least 2, got {wc}"
        )));
    }
    if wr <= wc {
        return Err(Error::InvalidParameters(format!(
            "row weight ({wr}) must exceed column weight ({wc})"
        )));
    }
    if n == 0 || !n.is_multiple_of(wr) {
        return Err(Error::InvalidParameters(format!(
            "row weight {wr} must divide block length {n}"
        )));
    }

    let band_rows = n / wr;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut rows = Vec::with_capacity(band_rows * wc);
    let mut perm: Vec<usize> = (0..n).collect();
    for band in 0..wc {
        if band > 0 {
            perm.shuffle(&mut rng);
        }
        for t in 0..band_rows {
            rows.push(perm[t * wr..(t + 1) * wr].to_vec());
        }
    }
    SparseParityCheck::from_rows(n, rows)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_regular_code_has_uniform_weights() {
        for seed in 0..20 {
            let h = gallager_construct(8, 2, 4, seed).unwrap();
            assert_eq!((h.m(), h.n()), (4, 8));
            assert!(h.cols().iter().all(|c| c.len() == 2));
            assert!(h.rows().iter().all(|r| r.len() == 4));
        }
    }

    #[test]
    fn first_band_is_the_staircase() {
        let h = gallager_construct(12, 3, 4, 5).unwrap();
        assert_eq!(h.row(0), &[0, 1, 2, 3]);
        assert_eq!(h.row(2), &[8, 9, 10, 11]);
    }

    #[test]
    fn seed_determines_the_code() {
        let a = gallager_construct(60, 3, 6, 11).unwrap();
        assert_eq!(a, gallager_construct(60, 3, 6, 11).unwrap());
        assert_ne!(a, gallager_construct(60, 3, 6, 12).unwrap());
    }

    #[test]
    fn preconditions() {
        assert!(gallager_construct(8, 2, 3, 0).is_err());
        assert!(gallager_construct(8, 4, 4, 0).is_err());
        assert!(gallager_construct(8, 1, 4, 0).is_err());
        assert!(gallager_construct(0, 2, 4, 0).is_err());
    }
}
