//! Monte-Carlo BER/FER estimation over an Eb/N0 sweep.
//!
//! Every frame draws its randomness from a ChaCha stream keyed by
//! `(seed, Eb/N0, frame index)`, and per-point totals are accumulated in
//! frame order. Results therefore depend only on the configuration, never on
//! the number of worker threads.

use std::fmt::Write as _;
use std::path::Path;
use std::sync::Mutex;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::channel::{self, bpsk_modulate, hard_demap, llr_demap, transmit, ChannelSpec};
use crate::code::SystematicEncoder;
use crate::decode::{bit_flip_decode, SumProductDecoder};
use crate::error::{Error, Result};
use crate::gf2::BitVector;

/// Frames evaluated per parallel batch. Fixed so that early stopping lands
/// on the same frame for any worker count.
const BATCH_FRAMES: u64 = 64;

/// CSV header written by [`to_csv`].
pub const CSV_HEADER: &str =
    "ebn0_db,frames,bit_errors,frame_errors,ber,fer,uncoded_ber,theory_uncoded,avg_iterations";

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DecoderKind {
    BitFlip,
    SumProduct,
}

#[derive(Clone, Debug, PartialEq)]
pub struct SweepConfig {
    pub decoder: DecoderKind,
    pub max_iter: usize,
    /// Eb/N0 values in dB, strictly increasing.
    pub ebn0_points: Vec<f64>,
    pub max_frames: u64,
    /// Stop a point once this many coded bit errors have been seen.
    /// Zero disables the early stop.
    pub min_bit_errors: u64,
    pub seed: u64,
    pub workers: usize,
}

impl Default for SweepConfig {
    fn default() -> Self {
        SweepConfig {
            decoder: DecoderKind::SumProduct,
            max_iter: 50,
            ebn0_points: vec![0.0, 1.0, 2.0, 3.0, 4.0],
            max_frames: 100_000,
            min_bit_errors: 200,
            seed: 0,
            workers: 1,
        }
    }
}

impl SweepConfig {
    pub fn validate(&self) -> Result<()> {
        self.validate_limits()?;
        if self.ebn0_points.is_empty() {
            return Err(Error::Config("no Eb/N0 points given".into()));
        }
        if self.ebn0_points.iter().any(|x| !x.is_finite()) {
            return Err(Error::Config("Eb/N0 points must be finite".into()));
        }
        if self.ebn0_points.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::Config(
                "Eb/N0 points must be strictly increasing".into(),
            ));
        }
        Ok(())
    }

    fn validate_limits(&self) -> Result<()> {
        if self.max_frames == 0 {
            return Err(Error::Config("max_frames must be at least 1".into()));
        }
        if self.max_iter == 0 {
            return Err(Error::Config("max_iter must be at least 1".into()));
        }
        if self.workers == 0 {
            return Err(Error::Config("workers must be at least 1".into()));
        }
        Ok(())
    }
}

/// Statistics at one Eb/N0 operating point.
#[derive(Clone, Debug, PartialEq)]
pub struct BerPoint {
    pub ebn0_db: f64,
    pub frames: u64,
    /// Message bits per frame.
    pub k: usize,
    pub bit_errors: u64,
    pub frame_errors: u64,
    pub uncoded_bit_errors: u64,
    pub ber: f64,
    pub fer: f64,
    pub uncoded_ber: f64,
    pub avg_iterations: f64,
    pub theory_uncoded: f64,
}

impl BerPoint {
    /// Message bits observed at this point (`frames · k`).
    pub fn bits(&self) -> u64 {
        self.frames * self.k as u64
    }
}

#[derive(Clone, Copy, Debug, Default)]
struct FrameOutcome {
    bit_errors: u64,
    uncoded_bit_errors: u64,
    iterations: u64,
}

#[derive(Default)]
struct Totals {
    frames: u64,
    bit_errors: u64,
    frame_errors: u64,
    uncoded_bit_errors: u64,
    iterations: u64,
}

/// Per-worker decoding state.
struct Worker<'a> {
    encoder: &'a SystematicEncoder,
    sum_product: Option<SumProductDecoder>,
}

impl<'a> Worker<'a> {
    fn new(encoder: &'a SystematicEncoder, kind: DecoderKind) -> Self {
        let sum_product = match kind {
            DecoderKind::SumProduct => Some(SumProductDecoder::new(encoder.parity_check())),
            DecoderKind::BitFlip => None,
        };
        Worker {
            encoder,
            sum_product,
        }
    }

    fn run_frame(
        &mut self,
        cfg: &SweepConfig,
        coded: &ChannelSpec,
        uncoded: &ChannelSpec,
        frame: u64,
    ) -> Result<FrameOutcome> {
        let mut rng = frame_rng(cfg.seed, coded.ebn0_db, frame);
        let mut uncoded_rng = rng.clone();
        uncoded_rng.set_stream(1);

        let k = self.encoder.k();
        let msg: BitVector = (0..k).map(|_| rng.random::<bool>()).collect();
        let codeword = self.encoder.encode(&msg)?;
        let rx = transmit(coded, &bpsk_modulate(&codeword), &mut rng);
        let result = match &mut self.sum_product {
            Some(dec) => dec.decode(&llr_demap(coded, &rx)?, cfg.max_iter)?,
            None => bit_flip_decode(self.encoder.parity_check(), &hard_demap(&rx), cfg.max_iter)?,
        };
        let decoded = self.encoder.extract_message(&result.bits)?;

        let rx_uncoded = transmit(uncoded, &bpsk_modulate(&msg), &mut uncoded_rng);
        let uncoded_decisions = hard_demap(&rx_uncoded);

        Ok(FrameOutcome {
            bit_errors: decoded.hamming_distance(&msg) as u64,
            uncoded_bit_errors: uncoded_decisions.hamming_distance(&msg) as u64,
            iterations: result.iterations as u64,
        })
    }
}

/// RNG for one frame, keyed by master seed, operating point and frame index.
fn frame_rng(seed: u64, ebn0_db: f64, frame: u64) -> ChaCha8Rng {
    let mut key = [0u8; 32];
    key[..8].copy_from_slice(&seed.to_le_bytes());
    key[8..16].copy_from_slice(&ebn0_db.to_bits().to_le_bytes());
    key[16..24].copy_from_slice(&frame.to_le_bytes());
    ChaCha8Rng::from_seed(key)
}

fn build_pool(workers: usize) -> Result<Option<rayon::ThreadPool>> {
    if workers <= 1 {
        return Ok(None);
    }
    rayon::ThreadPoolBuilder::new()
        .num_threads(workers)
        .build()
        .map(Some)
        .map_err(|e| Error::Config(format!("cannot start {workers} workers: {e}")))
}

fn run_point_in(
    pool: Option<&rayon::ThreadPool>,
    encoder: &SystematicEncoder,
    cfg: &SweepConfig,
    ebn0_db: f64,
) -> Result<BerPoint> {
    let k = encoder.k();
    let rate = k as f64 / encoder.n() as f64;
    let coded = ChannelSpec::new(ebn0_db, rate)?;
    let uncoded = ChannelSpec::new(ebn0_db, 1.0)?;

    // One worker state per pool thread, indexed by rayon's thread index.
    let thread_count = pool.map_or(1, |p| p.current_num_threads());
    let workers: Vec<Mutex<Worker<'_>>> = (0..thread_count)
        .map(|_| Mutex::new(Worker::new(encoder, cfg.decoder)))
        .collect();

    let mut totals = Totals::default();
    let mut next = 0u64;
    'frames: while next < cfg.max_frames {
        let end = (next + BATCH_FRAMES).min(cfg.max_frames);
        let outcomes: Vec<FrameOutcome> = match pool {
            Some(pool) => pool.install(|| {
                (next..end)
                    .into_par_iter()
                    .map(|f| {
                        let idx = rayon::current_thread_index().unwrap_or(0) % thread_count;
                        let mut w = workers[idx].lock().expect("worker state poisoned");
                        w.run_frame(cfg, &coded, &uncoded, f)
                    })
                    .collect::<Result<Vec<_>>>()
            })?,
            None => {
                let mut w = workers[0].lock().expect("worker state poisoned");
                (next..end)
                    .map(|f| w.run_frame(cfg, &coded, &uncoded, f))
                    .collect::<Result<Vec<_>>>()?
            }
        };
        for o in outcomes {
            totals.frames += 1;
            totals.bit_errors += o.bit_errors;
            totals.frame_errors += u64::from(o.bit_errors > 0);
            totals.uncoded_bit_errors += o.uncoded_bit_errors;
            totals.iterations += o.iterations;
            if cfg.min_bit_errors > 0 && totals.bit_errors >= cfg.min_bit_errors {
                break 'frames;
            }
        }
        next = end;
    }

    let bits = (totals.frames * k as u64) as f64;
    Ok(BerPoint {
        ebn0_db,
        frames: totals.frames,
        k,
        bit_errors: totals.bit_errors,
        frame_errors: totals.frame_errors,
        uncoded_bit_errors: totals.uncoded_bit_errors,
        ber: totals.bit_errors as f64 / bits,
        fer: totals.frame_errors as f64 / totals.frames as f64,
        uncoded_ber: totals.uncoded_bit_errors as f64 / bits,
        avg_iterations: totals.iterations as f64 / totals.frames as f64,
        theory_uncoded: channel::uncoded_ber_theory(ebn0_db),
    })
}

/// Simulates one operating point.
///
/// Each frame draws a random message, encodes, modulates and transmits it,
/// then decodes and counts message-bit errors. The same message is also sent
/// uncoded (rate 1, hard decisions) over an independent noise stream. The
/// point stops after `max_frames` frames or once `min_bit_errors` coded bit
/// errors have accumulated.
pub fn run_point(encoder: &SystematicEncoder, cfg: &SweepConfig, ebn0_db: f64) -> Result<BerPoint> {
    cfg.validate_limits()?;
    let pool = build_pool(cfg.workers)?;
    run_point_in(pool.as_ref(), encoder, cfg, ebn0_db)
}

/// Runs every point of `cfg.ebn0_points`, in ascending order.
pub fn run_sweep(encoder: &SystematicEncoder, cfg: &SweepConfig) -> Result<Vec<BerPoint>> {
    cfg.validate()?;
    let pool = build_pool(cfg.workers)?;
    cfg.ebn0_points
        .iter()
        .map(|&e| run_point_in(pool.as_ref(), encoder, cfg, e))
        .collect()
}

/// Renders points as CSV with [`CSV_HEADER`]; floats carry 6 significant
/// digits, lines end in `\n`.
pub fn to_csv(points: &[BerPoint]) -> String {
    let mut out = String::from(CSV_HEADER);
    out.push('\n');
    for p in points {
        let _ = writeln!(
            out,
            "{},{},{},{},{},{},{},{},{}",
            format_g6(p.ebn0_db),
            p.frames,
            p.bit_errors,
            p.frame_errors,
            format_g6(p.ber),
            format_g6(p.fer),
            format_g6(p.uncoded_ber),
            format_g6(p.theory_uncoded),
            format_g6(p.avg_iterations),
        );
    }
    out
}

pub fn write_csv(path: &Path, points: &[BerPoint]) -> Result<()> {
    std::fs::write(path, to_csv(points)).map_err(|source| Error::Io {
        path: path.to_path_buf(),
        source,
    })
}

/// Formats like C's `%.6g`: six significant digits, trailing zeros removed,
/// scientific notation outside `1e-4 <= |x| < 1e6`.
pub fn format_g6(x: f64) -> String {
    const DIGITS: i32 = 6;
    if x == 0.0 {
        return "0".into();
    }
    if !x.is_finite() {
        return if x.is_nan() {
            "nan".into()
        } else if x > 0.0 {
            "inf".into()
        } else {
            "-inf".into()
        };
    }
    let sci = format!("{:.*e}", (DIGITS - 1) as usize, x);
    let (mantissa, exp) = sci.split_once('e').expect("exponent present");
    let exp: i32 = exp.parse().expect("integer exponent");
    if !(-4..DIGITS).contains(&exp) {
        let mantissa = trim_zeros(mantissa);
        let sign = if exp < 0 { '-' } else { '+' };
        format!("{mantissa}e{sign}{:02}", exp.abs())
    } else {
        let decimals = (DIGITS - 1 - exp) as usize;
        trim_zeros(&format!("{x:.decimals$}")).to_string()
    }
}

fn trim_zeros(s: &str) -> &str {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.')
    } else {
        s
    }
}
