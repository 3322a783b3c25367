//! Command-line front end.
//!
//! The binary is a thin wrapper around [`run`]; every command writes to the
//! given streams and returns its exit code so that tests can drive it
//! in-process.
//!
//! | code | meaning |
//! |------|---------|
//! | 0 | success |
//! | 1 | verification mismatch or failed batch line |
//! | 2 | usage or parse error |
//! | 3 | internal invariant violation |

use std::ffi::OsString;
use std::io::Write;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::path::PathBuf;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::oracle::{build_diagram, Evaluator};
use crate::pipeline::{FractionNotation, NotationError, Pipeline};
use crate::ratfunc::{render, RatFunc};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_INTERNAL: i32 = 3;

/// Seed for `verify --samples`.
pub const SAMPLE_SEED: u64 = 0x5eed;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum NotationParseError {
    #[error("syntax error at byte {offset}: {message}")]
    Syntax { offset: usize, message: String },
    #[error(transparent)]
    Invalid(#[from] NotationError),
}

/// Parses `'[' int (',' int)* ']'` with optional whitespace. Both `-` and
/// the Unicode minus sign `−` are accepted.
pub fn parse_notation(text: &str) -> Result<FractionNotation, NotationParseError> {
    let syntax = |offset: usize, message: &str| NotationParseError::Syntax { offset, message: message.to_string() };
    let bytes = text.as_bytes();
    let mut pos = 0;
    let skip_ws = |pos: &mut usize| {
        while let Some(c) = text[*pos..].chars().next().filter(|c| c.is_whitespace()) {
            *pos += c.len_utf8();
        }
    };
    skip_ws(&mut pos);
    if bytes.get(pos) != Some(&b'[') {
        return Err(syntax(pos, "expected `[`"));
    }
    pos += 1;
    let mut entries = Vec::new();
    loop {
        skip_ws(&mut pos);
        let start = pos;
        let mut negative = false;
        if text[pos..].starts_with('-') {
            negative = true;
            pos += 1;
        } else if text[pos..].starts_with('\u{2212}') {
            negative = true;
            pos += '\u{2212}'.len_utf8();
        }
        let digits_start = pos;
        while bytes.get(pos).is_some_and(u8::is_ascii_digit) {
            pos += 1;
        }
        if pos == digits_start {
            return Err(syntax(start, "expected an integer"));
        }
        let magnitude: i64 = text[digits_start..pos].parse().map_err(|_| syntax(start, "integer out of range"))?;
        let value = i32::try_from(if negative { -magnitude } else { magnitude })
            .map_err(|_| syntax(start, "integer out of range"))?;
        entries.push(value);
        skip_ws(&mut pos);
        match bytes.get(pos) {
            Some(b',') => pos += 1,
            Some(b']') => {
                pos += 1;
                break;
            }
            _ => return Err(syntax(pos, "expected `,` or `]`")),
        }
    }
    skip_ws(&mut pos);
    if pos != text.len() {
        return Err(syntax(pos, "unexpected trailing input"));
    }
    Ok(FractionNotation::new(entries)?)
}

/// The canonical text form, e.g. `[-2,1,-2]`.
pub fn render_notation(f: &FractionNotation) -> String {
    f.to_string()
}

/// One computed polynomial as emitted by `compute --format json` and `batch`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct OutputRecord {
    pub notation: String,
    pub value: serde_json::Value,
    pub format: String,
    pub reduced: bool,
    pub elapsed_us: u64,
}

impl OutputRecord {
    fn new(f: &FractionNotation, value: &RatFunc, reduced: bool, elapsed_us: u64) -> Self {
        OutputRecord {
            notation: render_notation(f),
            value: render::to_json(value),
            format: "json".to_string(),
            reduced,
            elapsed_us,
        }
    }

    pub fn to_line(&self) -> String {
        serde_json::to_string(self).expect("records serialize")
    }

    pub fn from_line(line: &str) -> Result<Self, serde_json::Error> {
        serde_json::from_str(line)
    }

    /// The exact rational function carried by the record.
    pub fn ratfunc(&self) -> Result<RatFunc, crate::ratfunc::ArithError> {
        render::from_json(&self.value)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Plain,
    Latex,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum BatchFormat {
    Json,
}

#[derive(Debug, Parser)]
#[command(name = "kauffman", version, about = "Kauffman polynomials of 2-bridge knots and links")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Compute the polynomial of one notation such as "[-2,1,-2]".
    Compute {
        notation: String,
        #[arg(long, value_enum, default_value_t = Format::Plain)]
        format: Format,
        /// Keep the fraction produced by the fraction-free matrix product.
        #[arg(long)]
        no_reduce: bool,
        /// Also check that the mirror notation gives the (α, s) → (α⁻¹, s⁻¹) image.
        #[arg(long)]
        mirror_check: bool,
    },
    /// Compare the matrix pipeline against the brute-force oracle.
    Verify(VerifyOptions),
    /// Compute one notation per line of FILE, writing JSON lines.
    Batch {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = BatchFormat::Json)]
        format: BatchFormat,
    },
}

#[derive(Debug, Clone, clap::Args)]
pub struct VerifyOptions {
    /// Longest notation in the exhaustive sweep (even values round down).
    #[arg(long, default_value_t = 3)]
    pub max_length: usize,
    /// Entries range over ±1..=K.
    #[arg(long, default_value_t = 2)]
    pub entry_range: u32,
    /// Notations with more crossings are skipped; also the oracle limit.
    #[arg(long, default_value_t = crate::oracle::DEFAULT_CROSSING_LIMIT)]
    pub max_crossings: usize,
    /// Extra seeded random notations of length max-length + 2.
    #[arg(long, default_value_t = 0)]
    pub samples: usize,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions { max_length: 3, entry_range: 2, max_crossings: crate::oracle::DEFAULT_CROSSING_LIMIT, samples: 0 }
    }
}

/// Parses `args` (program name first) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() { err.write_all(text.as_bytes()) } else { out.write_all(text.as_bytes()) };
            return code;
        }
    };
    match cli.command {
        Command::Compute { notation, format, no_reduce, mirror_check } => {
            cmd_compute(&notation, format, no_reduce, mirror_check, out, err)
        }
        Command::Verify(opts) => cmd_verify(&opts, Pipeline::standard(), out, err),
        Command::Batch { file, format: BatchFormat::Json } => cmd_batch(&file, out, err),
    }
}

fn guarded<T>(f: impl FnOnce() -> T) -> Result<T, String> {
    catch_unwind(AssertUnwindSafe(f)).map_err(|payload| {
        payload
            .downcast_ref::<String>()
            .cloned()
            .or_else(|| payload.downcast_ref::<&str>().map(|s| s.to_string()))
            .unwrap_or_else(|| "unknown panic".to_string())
    })
}

pub fn cmd_compute(
    notation: &str,
    format: Format,
    no_reduce: bool,
    mirror_check: bool,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> i32 {
    let f = match parse_notation(notation) {
        Ok(f) => f,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            return EXIT_USAGE;
        }
    };
    let started = Instant::now();
    let pipeline = Pipeline::standard();
    let result = match guarded(|| if no_reduce { pipeline.evaluate_raw(&f) } else { pipeline.evaluate(&f) }) {
        Ok(r) => r,
        Err(msg) => {
            let _ = writeln!(err, "internal error: {msg}");
            return EXIT_INTERNAL;
        }
    };
    let elapsed_us = started.elapsed().as_micros() as u64;
    if mirror_check {
        let mirrored = pipeline.evaluate(&f.negated()).value;
        if mirrored != result.value.mirror() {
            let _ = writeln!(err, "internal error: mirror check failed for {f}");
            return EXIT_INTERNAL;
        }
        let _ = writeln!(err, "mirror check passed");
    }
    let text = match format {
        Format::Plain => render::plain(&result.value),
        Format::Latex => render::latex(&result.value),
        Format::Json => OutputRecord::new(&f, &result.value, result.reduced, elapsed_us).to_line(),
    };
    let _ = writeln!(out, "{text}");
    EXIT_OK
}

/// Every notation of odd length `≤ max_length` with entries in `±1..=k`.
pub fn exhaustive_notations(max_length: usize, k: u32) -> Vec<FractionNotation> {
    let values: Vec<i32> = (1..=k as i32).flat_map(|v| [-v, v]).collect();
    let mut out = Vec::new();
    for len in (1..=max_length).step_by(2) {
        let mut idx = vec![0usize; len];
        loop {
            out.push(FractionNotation::new(idx.iter().map(|&i| values[i]).collect()).expect("valid by construction"));
            let mut i = 0;
            while i < len && idx[i] + 1 == values.len() {
                idx[i] = 0;
                i += 1;
            }
            if i == len {
                break;
            }
            idx[i] += 1;
        }
    }
    out
}

/// `count` seeded notations of the given length, entries in `±1..=k`, with at
/// most `max_crossings` crossings. Returns fewer if the bound is unreachable.
pub fn sampled_notations(seed: u64, count: usize, length: usize, k: u32, max_crossings: usize) -> Vec<FractionNotation> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    if k == 0 || length > max_crossings {
        return Vec::new();
    }
    let mut out = Vec::with_capacity(count);
    let mut attempts = 0;
    while out.len() < count && attempts < 1000 * count.max(1) {
        attempts += 1;
        let entries: Vec<i32> = (0..length)
            .map(|_| {
                let v = rng.gen_range(1..=k as i32);
                if rng.gen_bool(0.5) {
                    v
                } else {
                    -v
                }
            })
            .collect();
        let f = FractionNotation::new(entries).expect("valid by construction");
        if f.crossing_count() <= max_crossings {
            out.push(f);
        }
    }
    out
}

/// Samples are one step longer than the longest exhaustive length.
fn sample_length(max_length: usize) -> usize {
    match max_length {
        0 => 1,
        n if n % 2 == 1 => n + 2,
        n => n + 1,
    }
}

enum CaseOutcome {
    Pass,
    Skipped,
    Fail(String),
}

fn check_case(pipeline: &Pipeline, evaluator: &mut Evaluator, f: &FractionNotation, max_crossings: usize) -> CaseOutcome {
    if f.crossing_count() > max_crossings {
        return CaseOutcome::Skipped;
    }
    let outcome = guarded(|| {
        let value = pipeline.evaluate(f).value;
        let brute = match evaluator.evaluate(&build_diagram(f)) {
            Ok(v) => v,
            Err(e) => return CaseOutcome::Fail(format!("oracle error: {e}")),
        };
        if brute != value {
            return CaseOutcome::Fail("pipeline and oracle disagree".to_string());
        }
        if pipeline.evaluate(&f.negated()).value != value.mirror() {
            return CaseOutcome::Fail("mirror property fails".to_string());
        }
        CaseOutcome::Pass
    });
    outcome.unwrap_or_else(|msg| CaseOutcome::Fail(format!("internal error: {msg}")))
}

pub fn cmd_verify(opts: &VerifyOptions, pipeline: &Pipeline, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let mut cases = exhaustive_notations(opts.max_length, opts.entry_range);
    let exhaustive = cases.len();
    cases.extend(sampled_notations(
        SAMPLE_SEED,
        opts.samples,
        sample_length(opts.max_length),
        opts.entry_range,
        opts.max_crossings,
    ));
    let started = Instant::now();
    let outcomes: Vec<CaseOutcome> = cases
        .par_iter()
        .map_init(
            || Evaluator::new().with_crossing_limit(opts.max_crossings),
            |ev, f| check_case(pipeline, ev, f, opts.max_crossings),
        )
        .collect();
    let (mut passed, mut skipped, mut failed) = (0, 0, 0);
    for (f, outcome) in cases.iter().zip(&outcomes) {
        match outcome {
            CaseOutcome::Pass => passed += 1,
            CaseOutcome::Skipped => skipped += 1,
            CaseOutcome::Fail(why) => {
                failed += 1;
                let _ = writeln!(err, "FAIL {f}: {why}");
            }
        }
    }
    let _ = writeln!(
        out,
        "{} cases ({} exhaustive, {} sampled): {passed} passed, {failed} failed, {skipped} skipped in {:.2?}",
        cases.len(),
        exhaustive,
        cases.len() - exhaustive,
        started.elapsed()
    );
    if failed == 0 {
        EXIT_OK
    } else {
        EXIT_FAILURE
    }
}

pub fn cmd_batch(file: &std::path::Path, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let text = match std::fs::read_to_string(file) {
        Ok(t) => t,
        Err(e) => {
            let _ = writeln!(err, "error: cannot read {}: {e}", file.display());
            return EXIT_USAGE;
        }
    };
    let lines: Vec<(usize, &str)> = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty())
        .collect();
    let results: Vec<Result<OutputRecord, String>> = lines
        .par_iter()
        .map(|&(_, line)| {
            let f = parse_notation(line).map_err(|e| e.to_string())?;
            let started = Instant::now();
            let r = guarded(|| Pipeline::standard().evaluate(&f)).map_err(|m| format!("internal error: {m}"))?;
            Ok(OutputRecord::new(&f, &r.value, r.reduced, started.elapsed().as_micros() as u64))
        })
        .collect();
    let mut failed = false;
    for ((lineno, _), r) in lines.iter().zip(results) {
        match r {
            Ok(rec) => {
                let _ = writeln!(out, "{}", rec.to_line());
            }
            Err(e) => {
                failed = true;
                let _ = writeln!(err, "line {lineno}: {e}");
            }
        }
    }
    if failed {
        EXIT_FAILURE
    } else {
        EXIT_OK
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_examples() {
        assert_eq!(parse_notation("[-2,1,-2]").unwrap().entries(), &[-2, 1, -2]);
        assert_eq!(parse_notation(" [ 3 ] ").unwrap().entries(), &[3]);
        assert_eq!(parse_notation("[\u{2212}2, 1, \u{2212}2]").unwrap().entries(), &[-2, 1, -2]);
        assert_eq!(
            parse_notation("[2,0,1]"),
            Err(NotationParseError::Invalid(NotationError::ZeroEntry { index: 1 }))
        );
        assert_eq!(parse_notation("[1,2]"), Err(NotationParseError::Invalid(NotationError::EvenLength(2))));
        assert!(matches!(parse_notation("[2,,3]"), Err(NotationParseError::Syntax { offset: 3, .. })));
        assert!(matches!(parse_notation("2,3"), Err(NotationParseError::Syntax { offset: 0, .. })));
        assert!(matches!(parse_notation("[1] x"), Err(NotationParseError::Syntax { offset: 4, .. })));
        assert!(matches!(parse_notation("[99999999999]"), Err(NotationParseError::Syntax { offset: 1, .. })));
    }

    #[test]
    fn sweep_sizes() {
        assert_eq!(exhaustive_notations(3, 2).len(), 4 + 64);
        assert_eq!(exhaustive_notations(1, 1).len(), 2);
        assert_eq!(exhaustive_notations(4, 1).len(), 2 + 8);
        let s = sampled_notations(1, 20, 5, 3, 10);
        assert_eq!(s.len(), 20);
        assert!(s.iter().all(|f| f.len() == 5 && f.crossing_count() <= 10));
        assert_eq!(s, sampled_notations(1, 20, 5, 3, 10));
    }
}
