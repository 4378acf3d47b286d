//! End-to-end pipelines: the full-precision construction and the two-pass
//! variant that first sorts every suffix up to a short threshold and then
//! re-sorts only the suffixes whose neighbours share a longer prefix.

use std::time::{Duration, Instant};

use crate::emitter::{output_arrays, EmitStats, SsaSlcp};
use crate::error::{Error, Result};
use crate::fingerprint::FingerprintIndex;
use crate::grouper::{refine, sort_groups, RefineStats};
use crate::text::{PositionSet, Text};

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct RunConfig {
    /// Fingerprint samples; defaults to the number of suffixes being sorted.
    pub s: Option<usize>,
    /// Replaces the default starting exponent of the refinement.
    pub j_start_override: Option<u32>,
    /// Seeds the fingerprint base.
    pub seed: u64,
    /// Keys the grouping hash table.
    pub hash_seed: u64,
}

/// `floor(log2(x))` for `x >= 1`.
pub fn floor_log2(x: usize) -> u32 {
    assert!(x >= 1, "floor_log2 of zero");
    usize::BITS - 1 - x.leading_zeros()
}

/// `2^(j + 1) - 1`: the largest lcp a refinement starting at `j` can certify.
pub fn threshold(j_start: u32) -> usize {
    1usize
        .checked_shl(j_start + 1)
        .map_or(usize::MAX, |v| v - 1)
}

/// Starting exponent of the quasi-sorting pass, `floor(log2(n / b))`.
pub fn quasi_sort_j_start(n: usize, b: usize) -> u32 {
    floor_log2(n / b)
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct PhaseTimes {
    pub preprocess: Duration,
    pub refine: Duration,
    pub sort: Duration,
    pub emit: Duration,
    pub merge: Duration,
}

impl PhaseTimes {
    pub fn total(&self) -> Duration {
        self.preprocess + self.refine + self.sort + self.emit + self.merge
    }

    fn add(&mut self, other: &PhaseTimes) {
        self.preprocess += other.preprocess;
        self.refine += other.refine;
        self.sort += other.sort;
        self.emit += other.emit;
        self.merge += other.merge;
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct MainReport {
    pub j_start: u32,
    pub s: usize,
    pub refine: RefineStats,
    pub emit: EmitStats,
    pub times: PhaseTimes,
}

pub fn main_algo(
    text: &Text,
    a: &PositionSet,
    cfg: &RunConfig,
    j_start: Option<u32>,
) -> Result<SsaSlcp> {
    main_algo_report(text, a, cfg, j_start).map(|(out, _)| out)
}

/// Full pipeline: preprocess, refine from `j_start` (default `floor(log2 n)`,
/// overridden by `cfg.j_start_override`), sort each group, then emit.
pub fn main_algo_report(
    text: &Text,
    a: &PositionSet,
    cfg: &RunConfig,
    j_start: Option<u32>,
) -> Result<(SsaSlcp, MainReport)> {
    let n = text.len();
    let b = a.len();
    let j_start = cfg
        .j_start_override
        .or(j_start)
        .unwrap_or_else(|| floor_log2(n));
    let s = cfg.s.unwrap_or(b);
    let mut report = MainReport {
        j_start,
        s,
        ..MainReport::default()
    };

    if b == 1 {
        return Ok((
            SsaSlcp {
                ssa: vec![a.get(1)],
                slcp: vec![0],
            },
            report,
        ));
    }

    let t = Instant::now();
    let fpi = FingerprintIndex::preprocess(text, s, cfg.seed)?;
    report.times.preprocess = t.elapsed();

    let t = Instant::now();
    let (mut forest, refine_stats) = refine(a, &fpi, j_start, cfg.hash_seed);
    report.refine = refine_stats;
    report.times.refine = t.elapsed();

    let t = Instant::now();
    sort_groups(&mut forest, text);
    report.times.sort = t.elapsed();

    let t = Instant::now();
    let (out, emit_stats) = output_arrays(&forest, n)?;
    report.emit = emit_stats;
    report.times.emit = t.elapsed();

    Ok((out, report))
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct ParamStats {
    pub ell: usize,
    pub b_prime: usize,
    pub second_pass_ran: bool,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ParamReport {
    pub stats: ParamStats,
    /// Output of the quasi-sorting pass, before the merge.
    pub first_pass: SsaSlcp,
    pub first: MainReport,
    pub second: Option<MainReport>,
    /// 1-based ranks in the first-pass output that were re-sorted.
    pub resorted_ranks: Vec<usize>,
    pub times: PhaseTimes,
}

pub fn parameterized_algo(
    text: &Text,
    a: &PositionSet,
    cfg: &RunConfig,
) -> Result<(SsaSlcp, ParamStats)> {
    parameterized_algo_report(text, a, cfg).map(|(out, report)| (out, report.stats))
}

pub fn parameterized_algo_report(
    text: &Text,
    a: &PositionSet,
    cfg: &RunConfig,
) -> Result<(SsaSlcp, ParamReport)> {
    let n = text.len();
    let b = a.len();
    let j_first = cfg
        .j_start_override
        .unwrap_or_else(|| quasi_sort_j_start(n, b));
    let ell = threshold(j_first);

    let first_cfg = RunConfig {
        j_start_override: None,
        ..*cfg
    };
    let (mut out, first) = main_algo_report(text, a, &first_cfg, Some(j_first))?;
    let first_pass = out.clone();

    let merge_start = Instant::now();
    let mut ranks = Vec::new();
    let mut resort = Vec::new();
    for i in 0..b {
        if out.slcp[i] == ell || (i + 1 < b && out.slcp[i + 1] == ell) {
            ranks.push(i);
            resort.push(out.ssa[i]);
        }
    }
    let mut merge_time = merge_start.elapsed();

    let mut report = ParamReport {
        stats: ParamStats {
            ell,
            b_prime: resort.len(),
            second_pass_ran: false,
        },
        first_pass,
        first,
        second: None,
        resorted_ranks: ranks.iter().map(|r| r + 1).collect(),
        times: first.times,
    };

    if !resort.is_empty() {
        let subset = PositionSet::new(resort, n)?;
        let second_cfg = RunConfig {
            s: Some(cfg.s.unwrap_or(subset.len()).min(n).max(1)),
            j_start_override: None,
            seed: cfg.seed.wrapping_add(1),
            hash_seed: cfg.hash_seed.wrapping_add(1),
        };
        let (sub, second) = main_algo_report(text, &subset, &second_cfg, None)?;

        let t = Instant::now();
        for (i, &rank) in ranks.iter().enumerate() {
            out.ssa[rank] = sub.ssa[i];
            if out.slcp[rank] == ell {
                out.slcp[rank] = sub.slcp[i];
            }
        }
        merge_time += t.elapsed();

        report.stats.second_pass_ran = true;
        report.times.add(&second.times);
        report.second = Some(second);
    }
    report.times.merge = merge_time;
    Ok((out, report))
}

/// Number of ranks `i` with `slcp[i] >= ell` or `slcp[i + 1] >= ell`, i.e.
/// the suffixes a second pass would have to re-sort given exact LCPs.
pub fn compute_b_prime(slcp: &[usize], ell: usize) -> usize {
    (0..slcp.len())
        .filter(|&i| slcp[i] >= ell || slcp.get(i + 1).is_some_and(|&v| v >= ell))
        .count()
}

impl RunConfig {
    /// Checks `s` against `[b, n]`.
    pub fn validate(&self, n: usize, b: usize) -> Result<()> {
        if let Some(s) = self.s {
            if s < b || s > n {
                return Err(Error::Usage {
                    flag: "--s",
                    value: s.to_string(),
                    reason: "must lie in [b, n]",
                });
            }
        }
        Ok(())
    }
}
