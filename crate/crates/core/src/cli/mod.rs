mod campaigns;
mod output;
mod tables;

use std::ffi::OsString;
use std::io::{self, BufRead, BufReader, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::helberg::{helberg_code, HelbergParams};
use crate::space::DEFAULT_MAX_ENUM;
use crate::sphere::deletion_sphere;
use crate::vt::{binary_vt_code, qary_vt_code, BinaryVtParams, QaryVtParams};
use crate::{symbol_map, Codebook, Error, Limits, Word};

pub use output::Format;
use output::{num, Output};

#[derive(Debug, Parser)]
#[command(
    name = "indel-codes",
    version,
    about = "VT and Helberg deletion codes, symbol maps and verification campaigns"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Largest ambient space q^n that may be enumerated.
    #[arg(long, global = true, default_value_t = DEFAULT_MAX_ENUM, value_parser = parse_cap)]
    max_enum: u128,

    /// Worker threads (defaults to the number of cores).
    #[arg(long, global = true)]
    workers: Option<usize>,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Generate a codebook in lexicographic order.
    Gen {
        #[arg(value_enum)]
        kind: GenKind,
        #[command(flatten)]
        params: Params,
    },
    /// Apply a symbol map to words given as arguments, in a file, or on stdin.
    Map {
        /// Map name, e.g. phi8 or perm-5.
        name: String,
        #[arg(value_enum)]
        direction: Direction,
        words: Vec<String>,
        /// Read words from this file, one per line.
        #[arg(long)]
        input: Option<PathBuf>,
    },
    /// List the s-deletion sphere of a word.
    Sphere {
        word: String,
        #[arg(long)]
        s: usize,
        /// Alphabet size; inferred from the digits when omitted.
        #[arg(long)]
        q: Option<u8>,
    },
    /// Run a verification campaign; exits 1 when a property fails.
    Verify {
        #[arg(value_enum)]
        campaign: Campaign,
        #[command(flatten)]
        params: Params,
    },
    /// Emit a recomputed table as CSV, JSON or text.
    Tables {
        /// table1..table15, bounds, reduction or torsion.
        which: String,
        #[command(flatten)]
        params: Params,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum GenKind {
    VtBinary,
    VtQary,
    Helberg,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Direction {
    Forward,
    Inverse,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum Campaign {
    Thm1,
    Thm2,
    Conj1,
    Conj2,
    Reduction,
    Torsion,
    Vt1,
    HelbergSelf,
}

#[derive(Debug, Clone, Default, Args)]
pub struct Params {
    #[arg(long)]
    pub n: Option<usize>,
    #[arg(long)]
    pub q: Option<u8>,
    #[arg(long)]
    pub s: Option<usize>,
    #[arg(long)]
    pub a: Option<u128>,
    #[arg(long)]
    pub b: Option<u64>,
    /// Symbol map name; campaigns that scan several maps accept a comma list.
    #[arg(long)]
    pub map: Option<String>,
    #[arg(long)]
    pub n_min: Option<usize>,
    #[arg(long)]
    pub n_max: Option<usize>,
    /// Deletions to check where a command allows overriding the default.
    #[arg(long)]
    pub deletions: Option<usize>,
}

impl Params {
    pub fn require_n(&self) -> Result<usize, Error> {
        self.n.ok_or_else(|| Error::Usage("--n is required".into()))
    }

    pub fn n_range(&self, lo: usize, hi: usize) -> Result<std::ops::RangeInclusive<usize>, Error> {
        let (lo, hi) = match self.n {
            Some(n) if self.n_min.is_none() && self.n_max.is_none() => (n, n),
            _ => (self.n_min.unwrap_or(lo), self.n_max.unwrap_or(hi)),
        };
        if lo == 0 || lo > hi {
            return Err(Error::Usage(format!("empty length range {lo}..={hi}")));
        }
        Ok(lo..=hi)
    }
}

fn parse_cap(text: &str) -> Result<u128, String> {
    match text.parse::<u128>() {
        Ok(0) => Err("the cap must be at least 1".into()),
        Ok(cap) => Ok(cap),
        Err(e) => Err(e.to_string()),
    }
}

fn exit_code(err: &Error) -> u8 {
    match err {
        Error::Resource { .. } | Error::Overflow(_) => 3,
        Error::Domain(_) | Error::Usage(_) => 2,
    }
}

/// Parses `args` (program name first) and runs the command, writing the
/// report to `out` and diagnostics to `err`. Returns the process exit code.
pub fn execute<I, T>(args: I, out: &mut impl Write, err: &mut impl Write) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 {
                write!(out, "{text}")
            } else {
                write!(err, "{text}")
            };
            return code;
        }
    };
    if let Some(workers) = cli.workers {
        // only fails if a pool already exists, in which case it is reused
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(workers.max(1))
            .build_global();
    }
    let limits = Limits::default().with_max_enum(cli.max_enum);
    match dispatch(cli.command, &limits) {
        Ok(output) => {
            if let Err(e) = output.write(cli.format, out) {
                let _ = writeln!(err, "error: {e}");
                return 2;
            }
            if output.counterexample.is_some() {
                1
            } else {
                0
            }
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    }
}

fn dispatch(command: Command, limits: &Limits) -> Result<Output, Error> {
    match command {
        Command::Gen { kind, params } => cmd_gen(kind, &params, limits),
        Command::Map {
            name,
            direction,
            words,
            input,
        } => cmd_map(&name, direction, words, input),
        Command::Sphere { word, s, q } => cmd_sphere(&word, s, q, limits),
        Command::Verify { campaign, params } => campaigns::run(campaign, &params, limits),
        Command::Tables { which, params } => tables::run(&which, &params, limits),
    }
}

fn codebook_output(code: &Codebook, params: serde_json::Value) -> Output {
    let rows = code.iter().map(|w| vec![w.to_string()]).collect();
    Output::table(&["codeword"], rows).with_json(json!({
        "params": params,
        "size": code.len(),
        "codewords": code,
    }))
}

fn cmd_gen(kind: GenKind, p: &Params, limits: &Limits) -> Result<Output, Error> {
    let n = p.require_n()?;
    match kind {
        GenKind::VtBinary => {
            let a = p.a.unwrap_or(0);
            let params = BinaryVtParams::new(
                n,
                u64::try_from(a).map_err(|_| Error::Domain(format!("residue {a} out of range")))?,
            )?;
            Ok(codebook_output(&binary_vt_code(params, limits)?, json!(params)))
        }
        GenKind::VtQary => {
            let q = p.q.unwrap_or(4);
            let a = p.a.unwrap_or(0);
            let a = u64::try_from(a).map_err(|_| Error::Domain(format!("residue {a} out of range")))?;
            let params = QaryVtParams::new(n, q, a, p.b.unwrap_or(0))?;
            Ok(codebook_output(&qary_vt_code(params, limits)?, json!(params)))
        }
        GenKind::Helberg => {
            let params = HelbergParams::new(n, p.q.unwrap_or(4), p.s.unwrap_or(1), p.a.unwrap_or(0))?;
            let code = helberg_code(&params, limits)?;
            let meta = json!({
                "n": params.n(),
                "q": params.q(),
                "s": params.s(),
                "a": num(params.a()),
                "m": num(params.m()),
                "weights": params.weights().word_weights().iter().map(|&v| num(v)).collect::<Vec<_>>(),
            });
            Ok(codebook_output(&code, meta))
        }
    }
}

fn read_words(words: Vec<String>, input: Option<PathBuf>) -> Result<Vec<String>, Error> {
    if !words.is_empty() {
        return Ok(words);
    }
    let lines: Vec<String> = match input {
        Some(path) => {
            let file =
                std::fs::File::open(&path).map_err(|e| Error::Usage(format!("cannot read {}: {e}", path.display())))?;
            BufReader::new(file).lines().collect::<io::Result<_>>()
        }
        None => io::stdin().lock().lines().collect::<io::Result<_>>(),
    }
    .map_err(|e| Error::Usage(format!("cannot read input: {e}")))?;
    Ok(lines.into_iter().map(|l| l.trim().to_string()).collect())
}

fn cmd_map(name: &str, direction: Direction, words: Vec<String>, input: Option<PathBuf>) -> Result<Output, Error> {
    let map = symbol_map(name)?;
    let mut rows = Vec::new();
    for text in read_words(words, input)? {
        let mapped = match direction {
            Direction::Forward => map.apply(&Word::parse(4, &text)?)?,
            Direction::Inverse => map.invert(&Word::parse(2, &text)?)?,
        };
        rows.push(vec![text, mapped.to_string()]);
    }
    let header = match direction {
        Direction::Forward => ["codeword", "image"],
        Direction::Inverse => ["codeword", "preimage"],
    };
    let mapped: Vec<&str> = rows.iter().map(|r| r[1].as_str()).collect();
    let json = json!({ "map": map.name(), "direction": format!("{direction:?}").to_lowercase(), "words": mapped });
    let mut out = Output::table(&header, rows);
    // text and CSV streams carry mapped words only, one per record
    out.header = vec![header[1].to_string()];
    out.rows = out.rows.into_iter().map(|r| vec![r[1].clone()]).collect();
    Ok(out.with_json(json))
}

fn cmd_sphere(text: &str, s: usize, q: Option<u8>, limits: &Limits) -> Result<Output, Error> {
    let word = match q {
        Some(q) => Word::parse(q, text)?,
        None => text.parse::<Word>()?,
    };
    let sphere = deletion_sphere(&word, s, limits)?;
    let members = sphere.sorted_members();
    let rows = members.iter().map(|w| vec![w.to_string()]).collect();
    Ok(Output::table(&["member"], rows).with_json(json!({
        "center": word,
        "deletions": s,
        "size": members.len(),
        "members": members,
    })))
}
