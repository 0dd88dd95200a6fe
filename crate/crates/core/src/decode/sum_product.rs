use super::llr::{boxplus, clamp_llr, hard_slice, LlrVector, LLR_CLAMP};
use super::{DecodeResult, DecodeStatus};
use crate::code::{build_tanner, SparseParityCheck, TannerGraph};
use crate::error::{Error, Result};

/// Flooding-schedule sum-product decoder in the LLR domain.
///
/// Holds per-edge message buffers, so one instance decodes one frame at a
/// time; create one per worker thread.
#[derive(Clone, Debug)]
pub struct SumProductDecoder {
    h: SparseParityCheck,
    graph: TannerGraph,
    check_to_var: Vec<f64>,
    var_to_check: Vec<f64>,
    posterior: Vec<f64>,
    forward: Vec<f64>,
    backward: Vec<f64>,
}

impl SumProductDecoder {
    pub fn new(h: &SparseParityCheck) -> Self {
        let graph = build_tanner(h);
        let edges = graph.edge_count();
        let max_deg = (0..graph.check_count())
            .map(|i| graph.check_degree(i))
            .max()
            .unwrap_or(0);
        SumProductDecoder {
            h: h.clone(),
            graph,
            check_to_var: vec![0.0; edges],
            var_to_check: vec![0.0; edges],
            posterior: vec![0.0; h.n()],
            forward: vec![0.0; max_deg],
            backward: vec![0.0; max_deg],
        }
    }

    pub fn parity_check(&self) -> &SparseParityCheck {
        &self.h
    }

    fn check_len(&self, llr: &LlrVector) -> Result<()> {
        if llr.len() != self.h.n() {
            return Err(Error::LengthMismatch {
                what: "channel LLR vector",
                expected: self.h.n(),
                found: llr.len(),
            });
        }
        Ok(())
    }

    /// Decodes with early termination once every check is satisfied.
    ///
    /// The channel hard decision is tested before any message passing; if it
    /// is already a codeword the result reports zero iterations.
    pub fn decode(&mut self, llr: &LlrVector, max_iter: usize) -> Result<DecodeResult> {
        self.check_len(llr)?;
        if max_iter == 0 {
            return Err(Error::InvalidParameters(
                "max_iter must be at least 1".into(),
            ));
        }
        let bits = llr.hard_decision();
        if self.h.is_codeword(&bits)? {
            return Ok(DecodeResult::converged(bits, 0, Some(llr.to_vec())));
        }

        self.reset(llr);
        let mut bits = bits;
        for iteration in 1..=max_iter {
            self.iterate(llr);
            bits = hard_slice(&self.posterior);
            if self.h.is_codeword(&bits)? {
                return Ok(DecodeResult::converged(
                    bits,
                    iteration,
                    Some(self.posterior.clone()),
                ));
            }
        }
        Ok(DecodeResult {
            bits,
            status: DecodeStatus::MaxIterations,
            iterations: max_iter,
            posterior: Some(self.posterior.clone()),
        })
    }

    /// Posterior LLRs after exactly `iterations` rounds, without early
    /// termination. On a cycle-free graph these are the exact bitwise MAP
    /// posteriors once `iterations` reaches the graph diameter.
    pub fn posteriors_after(&mut self, llr: &LlrVector, iterations: usize) -> Result<Vec<f64>> {
        self.check_len(llr)?;
        self.reset(llr);
        self.posterior.copy_from_slice(llr);
        for _ in 0..iterations {
            self.iterate(llr);
        }
        Ok(self.posterior.clone())
    }

    fn reset(&mut self, llr: &LlrVector) {
        for (msg, e) in self.var_to_check.iter_mut().zip(self.graph.edges()) {
            *msg = llr[e.var];
        }
        self.check_to_var.fill(0.0);
    }

    fn iterate(&mut self, llr: &LlrVector) {
        self.update_checks();
        self.update_variables(llr);
    }

    /// Each check sends the boxplus of all its other incoming messages,
    /// using forward/backward partial combinations.
    fn update_checks(&mut self) {
        for i in 0..self.graph.check_count() {
            let ids = self.graph.check_edges(i);
            let d = ids.len();
            match d {
                0 => {}
                1 => self.check_to_var[ids[0]] = LLR_CLAMP,
                _ => {
                    // edge ids of one check are contiguous
                    let base = ids[0];
                    let input = &self.var_to_check[base..base + d];
                    self.forward[0] = input[0];
                    for t in 1..d {
                        self.forward[t] = boxplus(self.forward[t - 1], input[t]);
                    }
                    self.backward[d - 1] = input[d - 1];
                    for t in (0..d - 1).rev() {
                        self.backward[t] = boxplus(input[t], self.backward[t + 1]);
                    }
                    let out = &mut self.check_to_var[base..base + d];
                    out[0] = clamp_llr(self.backward[1]);
                    out[d - 1] = clamp_llr(self.forward[d - 2]);
                    for t in 1..d - 1 {
                        out[t] = clamp_llr(boxplus(self.forward[t - 1], self.backward[t + 1]));
                    }
                }
            }
        }
    }

    fn update_variables(&mut self, llr: &LlrVector) {
        for j in 0..self.graph.variable_count() {
            let ids = self.graph.var_edges(j);
            let total = llr[j] + ids.iter().map(|&e| self.check_to_var[e]).sum::<f64>();
            self.posterior[j] = total;
            for &e in ids {
                self.var_to_check[e] = clamp_llr(total - self.check_to_var[e]);
            }
        }
    }
}

/// One-shot sum-product decode. See [`SumProductDecoder`].
pub fn sum_product_decode(
    h: &SparseParityCheck,
    channel_llr: &LlrVector,
    max_iter: usize,
) -> Result<DecodeResult> {
    SumProductDecoder::new(h).decode(channel_llr, max_iter)
}
