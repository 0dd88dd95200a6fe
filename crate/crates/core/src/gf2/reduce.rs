use super::matrix::BitMatrix;

/// Outcome of Gauss-Jordan elimination over GF(2).
///
/// `reduced` has the same shape as the input. Its first `rank` rows read
/// `[A | I_rank]` once the columns are taken in `col_perm` order; the
/// remaining rows are zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EliminationRecord {
    pub rank: usize,
    /// Pivot columns of the original matrix, in pivot-row order.
    pub pivot_cols: Vec<usize>,
    /// `col_perm[p]` is the original column placed at position `p`:
    /// non-pivot columns ascending, then the pivot columns.
    pub col_perm: Vec<usize>,
    pub reduced: BitMatrix,
}

impl EliminationRecord {
    /// Number of non-pivot (free) columns.
    pub fn free_count(&self) -> usize {
        self.col_perm.len() - self.rank
    }
}

/// Reduced row-echelon form in place. Returns the pivot columns.
///
/// Columns are scanned left to right; the pivot is the first row at or below
/// the current pivot row with a one in that column.
pub(crate) fn rref_in_place(m: &mut BitMatrix) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut pivot_row = 0;
    for col in 0..m.cols() {
        if pivot_row == m.rows() {
            break;
        }
        let Some(found) = (pivot_row..m.rows()).find(|&r| m.get(r, col)) else {
            continue;
        };
        m.swap_rows(pivot_row, found);
        for r in 0..m.rows() {
            if r != pivot_row && m.get(r, col) {
                m.add_row(pivot_row, r);
            }
        }
        pivots.push(col);
        pivot_row += 1;
    }
    pivots
}

/// Gauss-Jordan elimination with back-substitution. An all-zero matrix is
/// not an error: it has rank 0 and comes back unchanged.
pub fn row_reduce(m: &BitMatrix) -> EliminationRecord {
    let mut work = m.clone();
    let pivot_cols = rref_in_place(&mut work);

    let mut is_pivot = vec![false; m.cols()];
    for &c in &pivot_cols {
        is_pivot[c] = true;
    }
    let col_perm: Vec<usize> = (0..m.cols())
        .filter(|&c| !is_pivot[c])
        .chain(pivot_cols.iter().copied())
        .collect();

    EliminationRecord {
        rank: pivot_cols.len(),
        reduced: work.permute_columns(&col_perm),
        pivot_cols,
        col_perm,
    }
}

/// Rank over GF(2).
pub fn rank(m: &BitMatrix) -> usize {
    let mut work = m.clone();
    rref_in_place(&mut work).len()
}
