use super::SparseParityCheck;

/// Edge between check node `check` and variable node `var`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Edge {
    pub check: usize,
    pub var: usize,
}

/// Bipartite check/variable view of `H` with stable edge ids.
///
/// Edges are numbered `0..edge_count` in row-major order of `H`, so the
/// edges of check `i` occupy a contiguous id range. Decoders index their
/// per-edge message buffers by these ids.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TannerGraph {
    n: usize,
    edges: Vec<Edge>,
    check_edges: Vec<Vec<usize>>,
    var_edges: Vec<Vec<usize>>,
}

/// Builds the Tanner graph of `h`: one edge per one in the matrix.
pub fn build_tanner(h: &SparseParityCheck) -> TannerGraph {
    let mut edges = Vec::with_capacity(h.edge_count());
    let mut check_edges = Vec::with_capacity(h.m());
    let mut var_edges = vec![Vec::new(); h.n()];
    for (check, row) in h.rows().iter().enumerate() {
        let mut ids = Vec::with_capacity(row.len());
        for &var in row {
            let id = edges.len();
            edges.push(Edge { check, var });
            ids.push(id);
            var_edges[var].push(id);
        }
        check_edges.push(ids);
    }
    TannerGraph {
        n: h.n(),
        edges,
        check_edges,
        var_edges,
    }
}

impl TannerGraph {
    pub fn check_count(&self) -> usize {
        self.check_edges.len()
    }

    pub fn variable_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge(&self, id: usize) -> Edge {
        self.edges[id]
    }

    /// Edge ids incident to check node `i`.
    pub fn check_edges(&self, i: usize) -> &[usize] {
        &self.check_edges[i]
    }

    /// Edge ids incident to variable node `j`.
    pub fn var_edges(&self, j: usize) -> &[usize] {
        &self.var_edges[j]
    }

    pub fn check_degree(&self, i: usize) -> usize {
        self.check_edges[i].len()
    }

    pub fn var_degree(&self, j: usize) -> usize {
        self.var_edges[j].len()
    }

    /// Rebuilds the parity-check matrix from the edge list.
    pub fn to_parity_check(&self) -> SparseParityCheck {
        let mut rows = vec![Vec::new(); self.check_count()];
        for e in &self.edges {
            rows[e.check].push(e.var);
        }
        SparseParityCheck::from_rows(self.n, rows).expect("graph edges are in range")
    }
}
