//! The alist text format for sparse parity-check matrices.
//!
//! ```text
//! n m
//! max_col_weight max_row_weight
//! <n column weights>
//! <m row weights>
//! <n lines: 1-based row indices of each column>
//! <m lines: 1-based column indices of each row>
//! ```
//!
//! Lists shorter than the maximum weight are padded with `0`, which readers
//! ignore.

use std::fmt::Write as _;

use super::SparseParityCheck;
use crate::error::{Error, Result};

/// Serializes `h`. Lines end in `\n`, including the last one.
pub fn save_alist(h: &SparseParityCheck) -> String {
    let col_w: Vec<usize> = h.cols().iter().map(Vec::len).collect();
    let row_w: Vec<usize> = h.rows().iter().map(Vec::len).collect();
    let max_c = col_w.iter().copied().max().unwrap_or(0);
    let max_r = row_w.iter().copied().max().unwrap_or(0);

    let mut out = String::new();
    let _ = writeln!(out, "{} {}", h.n(), h.m());
    let _ = writeln!(out, "{max_c} {max_r}");
    out.push_str(&join(col_w.iter().copied()));
    out.push('\n');
    out.push_str(&join(row_w.iter().copied()));
    out.push('\n');
    for list in h.cols() {
        out.push_str(&padded(list, max_c));
        out.push('\n');
    }
    for list in h.rows() {
        out.push_str(&padded(list, max_r));
        out.push('\n');
    }
    out
}

fn join(values: impl Iterator<Item = usize>) -> String {
    values.map(|v| v.to_string()).collect::<Vec<_>>().join(" ")
}

fn padded(list: &[usize], width: usize) -> String {
    join(
        list.iter()
            .map(|&i| i + 1)
            .chain(std::iter::repeat_n(0, width - list.len())),
    )
}

struct Lines<'a> {
    inner: std::iter::Enumerate<std::str::Lines<'a>>,
    consumed: usize,
}

impl<'a> Lines<'a> {
    /// Next line as `(1-based line number, parsed integers)`.
    fn next_numbers(&mut self, what: &str) -> Result<(usize, Vec<usize>)> {
        let Some((idx, line)) = self.inner.next() else {
            return Err(Error::Alist {
                line: self.consumed + 1,
                message: format!("unexpected end of file while reading {what}"),
            });
        };
        let line_no = idx + 1;
        self.consumed = line_no;
        let nums = line
            .split_whitespace()
            .map(|tok| {
                tok.parse::<usize>().map_err(|_| Error::Alist {
                    line: line_no,
                    message: format!("expected a non-negative integer, found {tok:?}"),
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok((line_no, nums))
    }
}

fn alist_err(line: usize, message: impl Into<String>) -> Error {
    Error::Alist {
        line,
        message: message.into(),
    }
}

fn expect_len(line: usize, nums: &[usize], len: usize, what: &str) -> Result<()> {
    if nums.len() != len {
        return Err(alist_err(
            line,
            format!("expected {len} {what}, found {}", nums.len()),
        ));
    }
    Ok(())
}

/// Reads the adjacency lists of one block (columns or rows).
fn read_lists(
    lines: &mut Lines<'_>,
    weights: &[usize],
    bound: usize,
    kind: &str,
    index_kind: &str,
) -> Result<(Vec<Vec<usize>>, Vec<usize>)> {
    let mut lists = Vec::with_capacity(weights.len());
    let mut line_nos = Vec::with_capacity(weights.len());
    for (i, &w) in weights.iter().enumerate() {
        let (line, nums) = lines.next_numbers(&format!("{kind} {}", i + 1))?;
        let mut list = Vec::with_capacity(w);
        for v in nums.into_iter().filter(|&v| v != 0) {
            if v > bound {
                return Err(alist_err(
                    line,
                    format!("{index_kind} index {v} out of range 1..={bound}"),
                ));
            }
            list.push(v - 1);
        }
        if list.len() != w {
            return Err(alist_err(
                line,
                format!(
                    "{kind} {} declares weight {w} but lists {} entries",
                    i + 1,
                    list.len()
                ),
            ));
        }
        list.sort_unstable();
        if let Some(d) = list.windows(2).find(|d| d[0] == d[1]) {
            return Err(alist_err(
                line,
                format!("{kind} {} lists {index_kind} {} twice", i + 1, d[0] + 1),
            ));
        }
        lists.push(list);
        line_nos.push(line);
    }
    Ok((lists, line_nos))
}

/// Parses an alist document. Errors carry the 1-based line number.
pub fn load_alist(text: &str) -> Result<SparseParityCheck> {
    let mut lines = Lines {
        inner: text.lines().enumerate(),
        consumed: 0,
    };

    let (l1, dims) = lines.next_numbers("the dimensions line")?;
    expect_len(l1, &dims, 2, "values (n m)")?;
    let (n, m) = (dims[0], dims[1]);

    let (l2, maxes) = lines.next_numbers("the maximum weights line")?;
    expect_len(l2, &maxes, 2, "values (max column weight, max row weight)")?;

    let (l3, col_w) = lines.next_numbers("the column weights")?;
    expect_len(l3, &col_w, n, "column weights")?;
    let (l4, row_w) = lines.next_numbers("the row weights")?;
    expect_len(l4, &row_w, m, "row weights")?;

    if col_w.iter().copied().max().unwrap_or(0) != maxes[0] {
        return Err(alist_err(l2, "maximum column weight disagrees with the column weights"));
    }
    if row_w.iter().copied().max().unwrap_or(0) != maxes[1] {
        return Err(alist_err(l2, "maximum row weight disagrees with the row weights"));
    }
    if col_w.iter().sum::<usize>() != row_w.iter().sum::<usize>() {
        return Err(alist_err(l4, "column and row weights have different totals"));
    }

    let (cols, col_lines) = read_lists(&mut lines, &col_w, m, "column", "row")?;
    let (rows, row_lines) = read_lists(&mut lines, &row_w, n, "row", "column")?;

    for (idx, line) in lines.inner {
        if !line.trim().is_empty() {
            return Err(alist_err(idx + 1, "unexpected content after the row lists"));
        }
    }

    // Column lists must be the transpose of the row lists.
    for (j, col) in cols.iter().enumerate() {
        for &i in col {
            if rows[i].binary_search(&j).is_err() {
                return Err(alist_err(
                    col_lines[j],
                    format!(
                        "column {} lists row {} but row {} does not list column {}",
                        j + 1,
                        i + 1,
                        i + 1,
                        j + 1
                    ),
                ));
            }
        }
    }
    for (i, row) in rows.iter().enumerate() {
        for &j in row {
            if cols[j].binary_search(&i).is_err() {
                return Err(alist_err(
                    row_lines[i],
                    format!(
                        "row {} lists column {} but column {} does not list row {}",
                        i + 1,
                        j + 1,
                        j + 1,
                        i + 1
                    ),
                ));
            }
        }
    }

    SparseParityCheck::from_rows(n, rows).map_err(|e| alist_err(0, e.to_string()))
}
