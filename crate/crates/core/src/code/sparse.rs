use crate::error::{Error, Result};
use crate::gf2::{BitMatrix, BitVector};

/// Sparse parity-check matrix `H` (m checks × n bits), stored as both row and
/// column adjacency lists, the same layout the alist format uses.
///
/// Adjacency lists are sorted and duplicate-free, and the column lists are
/// always the exact transpose of the row lists.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SparseParityCheck {
    n: usize,
    rows: Vec<Vec<usize>>,
    cols: Vec<Vec<usize>>,
}

impl SparseParityCheck {
    /// Builds `H` from one list of column indices per check row.
    pub fn from_rows(n: usize, rows: Vec<Vec<usize>>) -> Result<Self> {
        let mut rows = rows;
        for (i, row) in rows.iter_mut().enumerate() {
            row.sort_unstable();
            if let Some(w) = row.windows(2).find(|w| w[0] == w[1]) {
                return Err(Error::InvalidParameters(format!(
                    "row {i} lists column {} twice",
                    w[0]
                )));
            }
            if let Some(&j) = row.iter().find(|&&j| j >= n) {
                return Err(Error::InvalidParameters(format!(
                    "row {i} has column {j} out of range for n = {n}"
                )));
            }
        }
        let cols = transpose_lists(&rows, n);
        Ok(SparseParityCheck { n, rows, cols })
    }

    pub fn from_dense(m: &BitMatrix) -> Self {
        let rows = (0..m.rows()).map(|r| m.row(r).support()).collect();
        SparseParityCheck::from_rows(m.cols(), rows).expect("dense rows are always valid")
    }

    pub fn to_dense(&self) -> BitMatrix {
        let mut d = BitMatrix::zeros(self.m(), self.n);
        for (i, row) in self.rows.iter().enumerate() {
            for &j in row {
                d.set(i, j, true);
            }
        }
        d
    }

    /// Block length (number of columns / variable nodes).
    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of parity checks (rows / check nodes).
    #[inline]
    pub fn m(&self) -> usize {
        self.rows.len()
    }

    /// Number of ones in `H`.
    pub fn edge_count(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    /// Column indices with a one in row `i`.
    #[inline]
    pub fn row(&self, i: usize) -> &[usize] {
        &self.rows[i]
    }

    /// Row indices with a one in column `j`.
    #[inline]
    pub fn col(&self, j: usize) -> &[usize] {
        &self.cols[j]
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn cols(&self) -> &[Vec<usize>] {
        &self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> bool {
        self.rows[i].binary_search(&j).is_ok()
    }

    /// `H · cᵀ` over GF(2). Costs one XOR per one in `H`.
    pub fn syndrome(&self, c: &BitVector) -> Result<BitVector> {
        if c.len() != self.n {
            return Err(Error::LengthMismatch {
                what: "syndrome input",
                expected: self.n,
                found: c.len(),
            });
        }
        Ok(self
            .rows
            .iter()
            .map(|row| row.iter().fold(false, |acc, &j| acc ^ c.get(j)))
            .collect())
    }

    /// True when every parity check is satisfied.
    pub fn is_codeword(&self, c: &BitVector) -> Result<bool> {
        Ok(self.syndrome(c)?.is_zero())
    }
}

impl std::fmt::Debug for SparseParityCheck {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("SparseParityCheck")
            .field("n", &self.n)
            .field("m", &self.m())
            .field("rows", &self.rows)
            .finish()
    }
}

pub(crate) fn transpose_lists(lists: &[Vec<usize>], len: usize) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new(); len];
    for (i, list) in lists.iter().enumerate() {
        for &j in list {
            out[j].push(i);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rows_are_sorted_and_transposed() {
        let h = SparseParityCheck::from_rows(4, vec![vec![3, 0], vec![1, 3]]).unwrap();
        assert_eq!(h.row(0), &[0, 3]);
        assert_eq!(h.col(3), &[0, 1]);
        assert!(h.col(2).is_empty());
        assert_eq!(h.edge_count(), 4);
        assert_eq!(SparseParityCheck::from_dense(&h.to_dense()), h);
    }

    #[test]
    fn bad_rows_rejected() {
        assert!(SparseParityCheck::from_rows(3, vec![vec![0, 3]]).is_err());
        assert!(SparseParityCheck::from_rows(3, vec![vec![1, 1]]).is_err());
    }

    #[test]
    fn syndrome_length_checked() {
        let h = SparseParityCheck::from_rows(2, vec![vec![0, 1]]).unwrap();
        assert!(h.syndrome(&BitVector::zeros(3)).is_err());
        assert!(h.is_codeword(&"11".parse().unwrap()).unwrap());
        assert!(!h.is_codeword(&"10".parse().unwrap()).unwrap());
    }
}
