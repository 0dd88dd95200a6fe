use std::collections::BTreeMap;
use std::fmt;

use super::SparseParityCheck;

/// Node degree across a matrix: a single value when uniform, otherwise a
/// histogram `weight -> how many rows/columns have it`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Degree {
    Uniform(usize),
    Histogram(BTreeMap<usize, usize>),
}

impl Degree {
    fn from_weights(weights: &[usize]) -> Self {
        let mut hist = BTreeMap::new();
        for &w in weights {
            *hist.entry(w).or_insert(0) += 1;
        }
        if hist.len() <= 1 {
            Degree::Uniform(hist.keys().next().copied().unwrap_or(0))
        } else {
            Degree::Histogram(hist)
        }
    }

    pub fn uniform(&self) -> Option<usize> {
        match self {
            Degree::Uniform(w) => Some(*w),
            Degree::Histogram(_) => None,
        }
    }
}

impl fmt::Display for Degree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Degree::Uniform(w) => write!(f, "{w}"),
            Degree::Histogram(h) => {
                let parts: Vec<String> = h.iter().map(|(w, c)| format!("{w}x{c}")).collect();
                write!(f, "{{{}}}", parts.join(", "))
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct RegularityReport {
    pub is_regular: bool,
    /// Column weight `wc`.
    pub wc: Degree,
    /// Row weight `wr`.
    pub wr: Degree,
    pub column_weights: Vec<usize>,
    pub row_weights: Vec<usize>,
    pub edge_count: usize,
    /// `edge_count / (n·m)`.
    pub density: f64,
    /// Column pairs sharing at least two rows.
    pub four_cycle_count: usize,
}

/// Weight statistics, density and 4-cycle count of `h`.
pub fn validate(h: &SparseParityCheck) -> RegularityReport {
    let column_weights: Vec<usize> = h.cols().iter().map(Vec::len).collect();
    let row_weights: Vec<usize> = h.rows().iter().map(Vec::len).collect();
    let wc = Degree::from_weights(&column_weights);
    let wr = Degree::from_weights(&row_weights);
    let edge_count = h.edge_count();
    let area = h.n() * h.m();
    RegularityReport {
        is_regular: wc.uniform().is_some() && wr.uniform().is_some(),
        wc,
        wr,
        column_weights,
        row_weights,
        edge_count,
        density: if area == 0 { 0.0 } else { edge_count as f64 / area as f64 },
        four_cycle_count: count_four_cycles(h),
    }
}

fn count_four_cycles(h: &SparseParityCheck) -> usize {
    let mut shared = vec![0u32; h.n()];
    let mut touched = Vec::new();
    let mut count = 0;
    for c in 0..h.n() {
        for &r in h.col(c) {
            for &other in h.row(r) {
                if other > c {
                    if shared[other] == 0 {
                        touched.push(other);
                    }
                    shared[other] += 1;
                }
            }
        }
        for &t in &touched {
            if shared[t] >= 2 {
                count += 1;
            }
            shared[t] = 0;
        }
        touched.clear();
    }
    count
}
