use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use ldpc_core::code::{
    code_rate, derive_encoder, gallager_construct, load_alist, save_alist, validate,
    SparseParityCheck, SystematicEncoder,
};
use ldpc_core::decode::{bit_flip_decode, DecodeResult, LlrVector, SumProductDecoder};
use ldpc_core::gf2::{rank, BitVector};
use ldpc_core::sim::{run_sweep, write_csv, DecoderKind, SweepConfig};
use ldpc_core::Error;

/// LDPC code construction, encoding, decoding and BER simulation.
#[derive(Parser)]
#[command(name = "ldpc", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build a regular Gallager parity-check matrix and save it as alist.
    Construct {
        /// Block length.
        #[arg(long)]
        n: usize,
        /// Column weight.
        #[arg(long)]
        wc: usize,
        /// Row weight; must divide n.
        #[arg(long)]
        wr: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: PathBuf,
    },
    /// Report weights, rank, dimension and 4-cycles of an alist matrix.
    Info {
        #[arg(long)]
        h: PathBuf,
    },
    /// Encode messages, one '0'/'1' line per frame.
    Encode {
        #[arg(long)]
        h: PathBuf,
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        out: PathBuf,
    },
    /// Decode received frames and write the recovered messages.
    ///
    /// The bit-flip decoder reads hard decisions from --in. The sum-product
    /// decoder reads whitespace-separated LLRs, one frame per line, from
    /// --llr-file (positive favours 0).
    Decode {
        #[arg(long)]
        h: PathBuf,
        #[arg(long = "in", required_unless_present = "llr_file")]
        input: Option<PathBuf>,
        #[arg(long)]
        out: PathBuf,
        #[arg(long, value_enum, default_value_t = Decoder::Bf)]
        decoder: Decoder,
        #[arg(long, default_value_t = 50)]
        max_iter: usize,
        #[arg(long)]
        llr_file: Option<PathBuf>,
    },
    /// Run a Monte-Carlo BER/FER sweep over Eb/N0 and write CSV.
    Simulate {
        #[arg(long)]
        h: PathBuf,
        #[arg(long, value_enum, default_value_t = Decoder::Sp)]
        decoder: Decoder,
        #[arg(long, default_value_t = 50)]
        max_iter: usize,
        /// Eb/N0 points in dB: a comma list such as `0,1,2.5` or an
        /// inclusive range `start:step:stop` such as `0:0.5:4`.
        #[arg(long)]
        ebn0: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 100_000)]
        max_frames: u64,
        /// Stop a point after this many coded bit errors (0 = never).
        #[arg(long, default_value_t = 200)]
        min_errors: u64,
        #[arg(long, default_value_t = 1)]
        workers: usize,
        #[arg(long)]
        out: PathBuf,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Decoder {
    /// Hard-decision bit flipping.
    Bf,
    /// Soft-decision sum-product.
    Sp,
}

enum Failure {
    /// Bad input or parameters: exit 2.
    Invalid(String),
    /// I/O or other internal failure: exit 1.
    Internal(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Io { .. } => Failure::Internal(e.to_string()),
            _ => Failure::Invalid(e.to_string()),
        }
    }
}

type CliResult<T> = std::result::Result<T, Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Construct { n, wc, wr, seed, out } => construct(n, wc, wr, seed, &out),
        Command::Info { h } => info(&h),
        Command::Encode { h, input, out } => encode(&h, &input, &out),
        Command::Decode {
            h,
            input,
            out,
            decoder,
            max_iter,
            llr_file,
        } => decode(&h, input.as_deref(), &out, decoder, max_iter, llr_file.as_deref()),
        Command::Simulate {
            h,
            decoder,
            max_iter,
            ebn0,
            seed,
            max_frames,
            min_errors,
            workers,
            out,
        } => parse_ebn0(&ebn0).and_then(|points| {
            let cfg = SweepConfig {
                decoder: match decoder {
                    Decoder::Bf => DecoderKind::BitFlip,
                    Decoder::Sp => DecoderKind::SumProduct,
                },
                max_iter,
                ebn0_points: points,
                max_frames,
                min_bit_errors: min_errors,
                seed,
                workers,
            };
            simulate(&h, &cfg, &out)
        }),
    };
    match outcome {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Invalid(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Internal(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}

fn read_text(path: &Path) -> CliResult<String> {
    fs::read_to_string(path).map_err(|e| Failure::Internal(format!("{}: {e}", path.display())))
}

fn write_text(path: &Path, text: &str) -> CliResult<()> {
    fs::write(path, text).map_err(|e| Failure::Internal(format!("{}: {e}", path.display())))
}

fn read_code(path: &Path) -> CliResult<SparseParityCheck> {
    load_alist(&read_text(path)?)
        .map_err(|e| Failure::Invalid(format!("{}: {e}", path.display())))
}

fn rate_string(k: usize, n: usize) -> String {
    code_rate(k, n).map_or_else(|_| "0".to_string(), |r| r.to_string())
}

fn construct(n: usize, wc: usize, wr: usize, seed: u64, out: &Path) -> CliResult<()> {
    let h = gallager_construct(n, wc, wr, seed)?;
    write_text(out, &save_alist(&h))?;
    let report = validate(&h);
    let k = h.n() - rank(&h.to_dense());
    println!("n {}", h.n());
    println!("m {}", h.m());
    println!("k {k}");
    println!("rate {}", rate_string(k, h.n()));
    println!("density {}", report.density);
    println!("four_cycle_count {}", report.four_cycle_count);
    Ok(())
}

fn info(path: &Path) -> CliResult<()> {
    let h = read_code(path)?;
    let report = validate(&h);
    let r = rank(&h.to_dense());
    let k = h.n() - r;
    println!("n {}", h.n());
    println!("m {}", h.m());
    println!("regular {}", if report.is_regular { "yes" } else { "no" });
    println!("wc {}", report.wc);
    println!("wr {}", report.wr);
    println!("rank {r}");
    println!("k {k}");
    println!("rate {}", rate_string(k, h.n()));
    println!("density {}", report.density);
    println!("four_cycle_count {}", report.four_cycle_count);
    if k == 0 {
        eprintln!("warning: zero-dimension code, H has full column rank");
    }
    Ok(())
}

/// Non-empty lines of a frames file, each with its 1-based line number.
fn frames(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty())
}

fn parse_bits(path: &Path, line: usize, text: &str, expected: usize) -> CliResult<BitVector> {
    let bits: BitVector = text
        .parse()
        .map_err(|e| Failure::Invalid(format!("{} line {line}: {e}", path.display())))?;
    if bits.len() != expected {
        return Err(Failure::Invalid(format!(
            "{} line {line}: expected {expected} bits, found {}",
            path.display(),
            bits.len()
        )));
    }
    Ok(bits)
}

fn parse_llrs(path: &Path, line: usize, text: &str, expected: usize) -> CliResult<LlrVector> {
    let bad = |msg: String| Failure::Invalid(format!("{} line {line}: {msg}", path.display()));
    let values = text
        .split_whitespace()
        .map(|tok| tok.parse::<f64>().map_err(|_| bad(format!("not a number: {tok:?}"))))
        .collect::<CliResult<Vec<f64>>>()?;
    if values.len() != expected {
        return Err(bad(format!("expected {expected} LLRs, found {}", values.len())));
    }
    LlrVector::new(values).map_err(|e| bad(e.to_string()))
}

fn encode(h_path: &Path, input: &Path, out: &Path) -> CliResult<()> {
    let enc = derive_encoder(&read_code(h_path)?)?;
    let text = read_text(input)?;
    let mut lines = String::new();
    for (line, frame) in frames(&text) {
        let msg = parse_bits(input, line, frame, enc.k())?;
        lines.push_str(&enc.encode(&msg)?.to_string());
        lines.push('\n');
    }
    write_text(out, &lines)
}

fn decode(
    h_path: &Path,
    input: Option<&Path>,
    out: &Path,
    decoder: Decoder,
    max_iter: usize,
    llr_file: Option<&Path>,
) -> CliResult<()> {
    let h = read_code(h_path)?;
    let enc = derive_encoder(&h)?;
    let n = h.n();
    let results: Vec<DecodeResult> = match (decoder, llr_file, input) {
        (Decoder::Sp, Some(path), _) => {
            let text = read_text(path)?;
            let mut dec = SumProductDecoder::new(&h);
            let mut results = Vec::new();
            for (line, frame) in frames(&text) {
                results.push(dec.decode(&parse_llrs(path, line, frame, n)?, max_iter)?);
            }
            results
        }
        (Decoder::Sp, None, _) => {
            return Err(Failure::Invalid(
                "--decoder sp reads its input from --llr-file".into(),
            ))
        }
        (Decoder::Bf, Some(_), _) => {
            return Err(Failure::Invalid(
                "--llr-file is only used by --decoder sp".into(),
            ))
        }
        (Decoder::Bf, None, Some(path)) => {
            let text = read_text(path)?;
            let mut results = Vec::new();
            for (line, frame) in frames(&text) {
                results.push(bit_flip_decode(&h, &parse_bits(path, line, frame, n)?, max_iter)?);
            }
            results
        }
        (Decoder::Bf, None, None) => return Err(Failure::Invalid("--in is required".into())),
    };
    write_text(out, &messages(&enc, &results)?)?;
    for (i, r) in results.iter().enumerate() {
        let status = if r.is_converged() { "converged" } else { "max-iterations" };
        println!("frame {} {status} iterations {}", i + 1, r.iterations);
    }
    Ok(())
}

fn messages(enc: &SystematicEncoder, results: &[DecodeResult]) -> CliResult<String> {
    let mut text = String::new();
    for r in results {
        text.push_str(&enc.extract_message(&r.bits)?.to_string());
        text.push('\n');
    }
    Ok(text)
}

fn simulate(h_path: &Path, cfg: &SweepConfig, out: &Path) -> CliResult<()> {
    let enc = derive_encoder(&read_code(h_path)?)?;
    let points = run_sweep(&enc, cfg)?;
    write_csv(out, &points)?;
    for p in &points {
        println!(
            "{} dB: frames {} ber {:e} fer {:e} uncoded {:e}",
            p.ebn0_db, p.frames, p.ber, p.fer, p.uncoded_ber
        );
    }
    Ok(())
}

/// `a,b,c` or inclusive `start:step:stop`.
fn parse_ebn0(spec: &str) -> CliResult<Vec<f64>> {
    let num = |s: &str| {
        s.trim()
            .parse::<f64>()
            .map_err(|_| Failure::Invalid(format!("--ebn0: not a number: {s:?}")))
    };
    if spec.contains(':') {
        let parts: Vec<&str> = spec.split(':').collect();
        let [start, step, stop] = parts[..] else {
            return Err(Failure::Invalid("--ebn0 range must be start:step:stop".into()));
        };
        let (start, step, stop) = (num(start)?, num(step)?, num(stop)?);
        if step.is_nan() || step <= 0.0 || !start.is_finite() || !stop.is_finite() || stop < start {
            return Err(Failure::Invalid(
                "--ebn0 range needs a positive step and start <= stop".into(),
            ));
        }
        let count = ((stop - start) / step + 1e-9).floor() as usize + 1;
        Ok((0..count).map(|i| start + i as f64 * step).collect())
    } else {
        spec.split(',').map(num).collect()
    }
}
