#![allow(dead_code)]

use ldpc_core::code::{gallager_construct, validate, SparseParityCheck};
use ldpc_core::gf2::{BitMatrix, BitVector};

/// The 4×8 regular example matrix (wc = 2, wr = 4).
pub const EXAMPLE_H: [[u8; 8]; 4] = [
    [0, 1, 0, 1, 1, 0, 0, 1],
    [1, 1, 1, 0, 0, 1, 0, 0],
    [0, 0, 1, 0, 0, 1, 1, 1],
    [1, 0, 0, 1, 1, 0, 1, 0],
];

pub fn example_dense() -> BitMatrix {
    BitMatrix::from_rows(&EXAMPLE_H).unwrap()
}

pub fn example_h() -> SparseParityCheck {
    SparseParityCheck::from_dense(&example_dense())
}

/// Brute-force null space: every `v` in GF(2)^n with `H·vᵀ = 0`, checked
/// directly from the dense 0/1 entries.
pub fn null_space(rows: &[Vec<u8>], n: usize) -> Vec<u64> {
    assert!(n <= 20);
    (0u64..1 << n)
        .filter(|&v| {
            rows.iter().all(|row| {
                row.iter()
                    .enumerate()
                    .filter(|&(j, &h)| h == 1 && (v >> j) & 1 == 1)
                    .count()
                    % 2
                    == 0
            })
        })
        .collect()
}

pub fn dense_rows(h: &SparseParityCheck) -> Vec<Vec<u8>> {
    (0..h.m())
        .map(|i| (0..h.n()).map(|j| u8::from(h.get(i, j))).collect())
        .collect()
}

/// Packs a short vector into an integer, bit `j` = position `j`.
pub fn pack(v: &BitVector) -> u64 {
    assert!(v.len() <= 64);
    v.iter()
        .enumerate()
        .fold(0, |acc, (j, b)| acc | (u64::from(b) << j))
}

/// Size of the row space, by enumerating all XOR combinations of the rows.
pub fn row_space_size(rows: &[Vec<u8>]) -> usize {
    let packed: Vec<u64> = rows
        .iter()
        .map(|r| r.iter().enumerate().fold(0, |a, (j, &b)| a | (u64::from(b) << j)))
        .collect();
    let mut seen = std::collections::HashSet::new();
    for subset in 0u64..1 << packed.len() {
        let mut acc = 0;
        for (i, &r) in packed.iter().enumerate() {
            if (subset >> i) & 1 == 1 {
                acc ^= r;
            }
        }
        seen.insert(acc);
    }
    seen.len()
}

/// Exact bitwise MAP posteriors `log P(b_j=0|y) / P(b_j=1|y)` for channel
/// LLRs `llr`, by enumerating every codeword of the null space.
pub fn map_posteriors(rows: &[Vec<u8>], llr: &[f64]) -> Vec<f64> {
    let n = llr.len();
    let words = null_space(rows, n);
    (0..n)
        .map(|j| {
            let weight = |c: u64| -> f64 {
                (0..n)
                    .map(|i| if (c >> i) & 1 == 0 { 0.5 * llr[i] } else { -0.5 * llr[i] })
                    .sum()
            };
            let lse = |bit: u64| {
                let ws: Vec<f64> = words
                    .iter()
                    .filter(|&&c| (c >> j) & 1 == bit)
                    .map(|&c| weight(c))
                    .collect();
                let max = ws.iter().copied().fold(f64::NEG_INFINITY, f64::max);
                max + ws.iter().map(|w| (w - max).exp()).sum::<f64>().ln()
            };
            lse(0) - lse(1)
        })
        .collect()
}

/// Seed of a (200, 3, 4) Gallager construction with no 4-cycles, found by
/// scanning seeds upward from 0.
pub const GIRTH6_SEED: u64 = 91_407;

/// A wc = 3 code whose Tanner graph has no 4-cycles (girth at least 6).
pub fn girth6_code() -> SparseParityCheck {
    let h = gallager_construct(200, 3, 4, GIRTH6_SEED).unwrap();
    assert_eq!(validate(&h).four_cycle_count, 0);
    h
}
