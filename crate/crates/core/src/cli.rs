//! The `ssa` command line: `build`, `verify` and `bench`.

use std::ffi::OsString;
use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::time::{Duration, Instant};

use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::driver::{
    compute_b_prime, main_algo_report, parameterized_algo_report, quasi_sort_j_start, threshold,
    MainReport, PhaseTimes, RunConfig,
};
use crate::emitter::SsaSlcp;
use crate::error::{Error, Result};
use crate::format::{write_bin, write_csv};
use crate::oracle::naive_ssa_slcp;
use crate::text::{load_positions, load_text, sample_positions, PositionSet, Text};

#[derive(Debug, Parser)]
#[command(
    name = "ssa",
    version,
    about = "Sparse suffix and LCP array construction"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Build SSA/SLCP and write them to a file.
    Build(BuildArgs),
    /// Run an algorithm and the brute-force oracle; exit 1 on any difference.
    Verify(BuildArgs),
    /// Time algorithms on uniformly sampled positions and print a CSV table.
    Bench(BenchArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Algo {
    Main,
    Param,
    Naive,
}

impl Algo {
    pub fn name(self) -> &'static str {
        match self {
            Algo::Main => "main",
            Algo::Param => "param",
            Algo::Naive => "naive",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Bin,
}

#[derive(Debug, Args)]
#[command(group(ArgGroup::new("input").required(true).args(["positions", "b"])))]
pub struct BuildArgs {
    #[arg(long)]
    pub text: PathBuf,
    /// One 1-based position per line.
    #[arg(long)]
    pub positions: Option<PathBuf>,
    /// Sample this many positions uniformly at random.
    #[arg(long, requires = "seed")]
    pub b: Option<usize>,
    /// Master seed for position sampling, fingerprints and hashing.
    #[arg(long)]
    pub seed: Option<u64>,
    #[arg(long, value_enum, default_value_t = Algo::Param)]
    pub algo: Algo,
    /// Fingerprint samples, in [b, n]; defaults to b.
    #[arg(long)]
    pub s: Option<usize>,
    /// Starting exponent of the refinement.
    #[arg(long)]
    pub jstart: Option<u32>,
    /// Output path; standard output when absent. Ignored by `verify`.
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    pub format: Format,
    /// Write a JSON run report here.
    #[arg(long)]
    pub report: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct BenchArgs {
    #[arg(long)]
    pub text: PathBuf,
    #[arg(long, default_value_t = 0.0001)]
    pub b_ratio: f64,
    #[arg(long, default_value_t = 1)]
    pub repeat: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, value_enum, value_delimiter = ',', default_values_t = [Algo::Main, Algo::Param])]
    pub algo: Vec<Algo>,
    /// CSV destination; standard output when absent.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

/// Seeds derived from the single `--seed`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Seeds {
    pub master: u64,
    pub positions: u64,
    pub fingerprint: u64,
    pub hash: u64,
}

impl Seeds {
    pub fn derive(master: u64) -> Self {
        Seeds {
            master,
            positions: splitmix64(master),
            fingerprint: splitmix64(master ^ 0x9e37_79b9_7f4a_7c15),
            hash: splitmix64(master ^ 0x3c6e_f372_fe94_f82b),
        }
    }

    pub fn config(&self, s: Option<usize>, j_start_override: Option<u32>) -> RunConfig {
        RunConfig {
            s,
            j_start_override,
            seed: self.fingerprint,
            hash_seed: self.hash,
        }
    }
}

fn splitmix64(x: u64) -> u64 {
    let mut z = x.wrapping_add(0x9e37_79b9_7f4a_7c15);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

/// Timings and peak logical sizes of one run.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RunReport {
    pub algorithm: &'static str,
    pub n: usize,
    pub b: usize,
    pub seeds: Seeds,
    pub ell: usize,
    pub b_prime: Option<usize>,
    pub preprocess_ms: f64,
    pub refine_ms: f64,
    pub sort_ms: f64,
    pub emit_ms: f64,
    pub merge_ms: f64,
    pub total_ms: f64,
    pub peak_groups: usize,
    pub peak_members: usize,
    pub stack_high_water: usize,
    pub peak_hash_entries: usize,
}

fn ms(d: Duration) -> f64 {
    d.as_secs_f64() * 1e3
}

impl RunReport {
    fn new(algorithm: Algo, n: usize, b: usize, seeds: Seeds) -> Self {
        RunReport {
            algorithm: algorithm.name(),
            n,
            b,
            seeds,
            ell: threshold(quasi_sort_j_start(n, b)),
            b_prime: None,
            preprocess_ms: 0.0,
            refine_ms: 0.0,
            sort_ms: 0.0,
            emit_ms: 0.0,
            merge_ms: 0.0,
            total_ms: 0.0,
            peak_groups: 0,
            peak_members: 0,
            stack_high_water: 0,
            peak_hash_entries: 0,
        }
    }

    fn set_times(&mut self, t: &PhaseTimes) {
        self.preprocess_ms = ms(t.preprocess);
        self.refine_ms = ms(t.refine);
        self.sort_ms = ms(t.sort);
        self.emit_ms = ms(t.emit);
        self.merge_ms = ms(t.merge);
    }

    fn absorb(&mut self, r: &MainReport) {
        self.peak_groups = self.peak_groups.max(r.refine.peak_groups);
        self.peak_members = self.peak_members.max(r.refine.peak_members);
        self.stack_high_water = self.stack_high_water.max(r.emit.stack_high_water);
        self.peak_hash_entries = self.peak_hash_entries.max(r.refine.peak_hash_entries);
    }
}

/// Runs one algorithm and collects its report.
pub fn run_algorithm(
    algo: Algo,
    text: &Text,
    a: &PositionSet,
    seeds: Seeds,
    s: Option<usize>,
    jstart: Option<u32>,
) -> Result<(SsaSlcp, RunReport)> {
    let n = text.len();
    let cfg = seeds.config(s, jstart);
    cfg.validate(n, a.len())?;
    let mut report = RunReport::new(algo, n, a.len(), seeds);
    let start = Instant::now();
    let out = match algo {
        Algo::Main => {
            let (out, r) = main_algo_report(text, a, &cfg, None)?;
            report.set_times(&r.times);
            report.absorb(&r);
            if jstart.is_none() {
                report.b_prime = Some(compute_b_prime(&out.slcp, report.ell));
            }
            out
        }
        Algo::Param => {
            let (out, r) = parameterized_algo_report(text, a, &cfg)?;
            report.set_times(&r.times);
            report.absorb(&r.first);
            if let Some(second) = &r.second {
                report.absorb(second);
            }
            report.ell = r.stats.ell;
            report.b_prime = Some(r.stats.b_prime);
            out
        }
        Algo::Naive => {
            let out = naive_ssa_slcp(text, a);
            report.b_prime = Some(compute_b_prime(&out.slcp, report.ell));
            out
        }
    };
    report.total_ms = ms(start.elapsed());
    Ok((out, report))
}

/// Parses `args` (including the program name) and runs the command, returning
/// the process exit code: 0 on success, 1 on a verification mismatch, 2 on
/// any other error.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return e.exit_code();
        }
    };
    let result = match cli.command {
        Command::Build(args) => cmd_build(&args),
        Command::Verify(args) => cmd_verify(&args),
        Command::Bench(args) => cmd_bench(&args),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            2
        }
    }
}

fn create(path: &Path) -> Result<BufWriter<File>> {
    File::create(path)
        .map(BufWriter::new)
        .map_err(|source| Error::Io {
            path: path.to_path_buf(),
            source,
        })
}

fn io_err(path: Option<&Path>) -> impl FnOnce(io::Error) -> Error + '_ {
    move |source| Error::Io {
        path: path.map_or_else(|| PathBuf::from("<stdout>"), Path::to_path_buf),
        source,
    }
}

fn load_inputs(args: &BuildArgs) -> Result<(Text, PositionSet, Seeds)> {
    let seeds = Seeds::derive(args.seed.unwrap_or(0));
    let text = load_text(&args.text)?;
    let a = match (&args.positions, args.b) {
        (Some(path), _) => load_positions(path, text.len())?,
        (None, Some(0)) => {
            return Err(Error::Usage {
                flag: "--b",
                value: "0".into(),
                reason: "must be at least 1",
            })
        }
        (None, Some(b)) => sample_positions(text.len(), b, seeds.positions)?,
        (None, None) => unreachable!("clap requires --positions or --b"),
    };
    Ok((text, a, seeds))
}

pub fn cmd_build(args: &BuildArgs) -> Result<i32> {
    let (text, a, seeds) = load_inputs(args)?;
    let (out, report) = run_algorithm(args.algo, &text, &a, seeds, args.s, args.jstart)?;

    let write = |w: &mut dyn Write| -> io::Result<()> {
        let mut w = BufWriter::new(w);
        match args.format {
            Format::Csv => write_csv(&out, &mut w)?,
            Format::Bin => write_bin(&out, text.len(), &mut w)?,
        }
        w.flush()
    };
    match &args.out {
        Some(path) => {
            let mut f = create(path)?;
            write(&mut f).map_err(io_err(Some(path)))?;
        }
        None => write(&mut io::stdout().lock()).map_err(io_err(None))?,
    }

    if let Some(path) = &args.report {
        let mut f = create(path)?;
        serde_json::to_writer_pretty(&mut f, &report)
            .map_err(io::Error::from)
            .and_then(|_| f.flush())
            .map_err(io_err(Some(path)))?;
    }
    Ok(0)
}

/// The first rank at which two outputs differ, if any.
pub fn first_difference(got: &SsaSlcp, want: &SsaSlcp) -> Option<usize> {
    (0..got.len().max(want.len()))
        .find(|&i| got.ssa.get(i) != want.ssa.get(i) || got.slcp.get(i) != want.slcp.get(i))
}

pub fn cmd_verify(args: &BuildArgs) -> Result<i32> {
    let (text, a, seeds) = load_inputs(args)?;
    let (out, _) = run_algorithm(args.algo, &text, &a, seeds, args.s, args.jstart)?;
    let expect = naive_ssa_slcp(&text, &a);
    match first_difference(&out, &expect) {
        None => {
            println!(
                "ok: {} matches the oracle on {} suffixes",
                args.algo.name(),
                a.len()
            );
            Ok(0)
        }
        Some(i) => {
            let show = |v: &[usize]| v.get(i).map_or("-".to_string(), |x| x.to_string());
            println!(
                "mismatch at rank {}: ssa {} vs oracle {}, slcp {} vs oracle {}",
                i + 1,
                show(&out.ssa),
                show(&expect.ssa),
                show(&out.slcp),
                show(&expect.slcp),
            );
            Ok(1)
        }
    }
}

#[derive(Debug, Serialize)]
struct BenchRow {
    algorithm: &'static str,
    repeat: usize,
    n: usize,
    b: usize,
    b_prime: Option<usize>,
    ell: usize,
    seed: u64,
    preprocess_ms: f64,
    refine_ms: f64,
    sort_ms: f64,
    emit_ms: f64,
    merge_ms: f64,
    total_ms: f64,
    peak_groups: usize,
    peak_members: usize,
    stack_high_water: usize,
    peak_hash_entries: usize,
}

impl BenchRow {
    fn new(repeat: usize, r: RunReport) -> Self {
        BenchRow {
            algorithm: r.algorithm,
            repeat,
            n: r.n,
            b: r.b,
            b_prime: r.b_prime,
            ell: r.ell,
            seed: r.seeds.master,
            preprocess_ms: r.preprocess_ms,
            refine_ms: r.refine_ms,
            sort_ms: r.sort_ms,
            emit_ms: r.emit_ms,
            merge_ms: r.merge_ms,
            total_ms: r.total_ms,
            peak_groups: r.peak_groups,
            peak_members: r.peak_members,
            stack_high_water: r.stack_high_water,
            peak_hash_entries: r.peak_hash_entries,
        }
    }
}

pub fn cmd_bench(args: &BenchArgs) -> Result<i32> {
    let text = load_text(&args.text)?;
    let n = text.len();
    if !(args.b_ratio > 0.0 && args.b_ratio <= 1.0) {
        return Err(Error::Usage {
            flag: "--b-ratio",
            value: args.b_ratio.to_string(),
            reason: "must lie in (0, 1]",
        });
    }
    let b = (n as f64 * args.b_ratio).floor() as usize;
    if b == 0 {
        return Err(Error::Usage {
            flag: "--b-ratio",
            value: args.b_ratio.to_string(),
            reason: "yields no positions for this text",
        });
    }
    let seeds = Seeds::derive(args.seed);
    let a = sample_positions(n, b, seeds.positions)?;

    let sink: Box<dyn Write> = match &args.out {
        Some(path) => Box::new(create(path)?),
        None => Box::new(io::stdout()),
    };
    let mut csv = csv::Writer::from_writer(sink);
    let csv_err = |e: csv::Error| Error::Io {
        path: args.out.clone().unwrap_or_else(|| "<stdout>".into()),
        source: e.into(),
    };
    for repeat in 1..=args.repeat {
        for &algo in &args.algo {
            let (_, report) = run_algorithm(algo, &text, &a, seeds, None, None)?;
            csv.serialize(BenchRow::new(repeat, report))
                .map_err(csv_err)?;
        }
    }
    csv.flush().map_err(io_err(args.out.as_deref()))?;
    Ok(0)
}
