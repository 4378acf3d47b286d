//! Depth-first traversal of a sorted group forest into the output arrays.

use crate::error::{Error, Result};
use crate::grouper::GroupForest;

/// Sparse suffix array and sparse LCP array, both of length `b`.
///
/// `ssa` holds 1-based text positions in lexicographic order of their
/// suffixes; `slcp[0]` is always 0.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct SsaSlcp {
    pub ssa: Vec<usize>,
    pub slcp: Vec<usize>,
}

impl SsaSlcp {
    pub fn len(&self) -> usize {
        self.ssa.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ssa.is_empty()
    }
}

/// The traversal state before the first pop and after every pop.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TraceRow {
    /// Stack contents, top first.
    pub stack: Vec<(usize, usize)>,
    pub ssa: Vec<usize>,
    pub slcp: Vec<usize>,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct EmitStats {
    pub pops: usize,
    pub stack_high_water: usize,
}

pub fn output_arrays(forest: &GroupForest, n: usize) -> Result<(SsaSlcp, EmitStats)> {
    emit(forest, n, None)
}

/// Same as [`output_arrays`], also recording a [`TraceRow`] per stack iteration.
pub fn output_arrays_traced(
    forest: &GroupForest,
    n: usize,
) -> Result<(SsaSlcp, EmitStats, Vec<TraceRow>)> {
    let mut trace = Vec::new();
    let (out, stats) = emit(forest, n, Some(&mut trace))?;
    Ok((out, stats, trace))
}

fn emit(
    forest: &GroupForest,
    n: usize,
    mut trace: Option<&mut Vec<TraceRow>>,
) -> Result<(SsaSlcp, EmitStats)> {
    let b = forest.b();
    // any value above n stands for "no lcp seen since the last suffix"
    let unbounded = n + 1;
    let mut out = SsaSlcp {
        ssa: Vec::with_capacity(b),
        slcp: Vec::with_capacity(b),
    };
    let mut stats = EmitStats::default();
    let mut stack: Vec<(usize, usize)> = Vec::with_capacity(b);
    stack.push((forest.root_id(), 0));
    stats.stack_high_water = 1;
    let mut ell = 0;

    let snapshot = |stack: &[(usize, usize)], out: &SsaSlcp| TraceRow {
        stack: stack.iter().rev().copied().collect(),
        ssa: out.ssa.clone(),
        slcp: out.slcp.clone(),
    };
    if let Some(t) = trace.as_deref_mut() {
        t.push(snapshot(&stack, &out));
    }

    while let Some((id, parent_lcp)) = stack.pop() {
        stats.pops += 1;
        if stats.pops > 2 * b {
            return Err(Error::Forest(format!("traversal exceeded {} pops", 2 * b)));
        }
        ell = ell.min(parent_lcp);
        if forest.is_suffix(id) {
            out.ssa.push(forest.witness(id));
            out.slcp.push(ell);
            ell = unbounded;
        } else {
            let group = forest
                .group(id)
                .ok_or_else(|| Error::Forest(format!("dangling member id {id}")))?;
            stack.extend(group.members.iter().rev().map(|&m| (m, group.lcp)));
            stats.stack_high_water = stats.stack_high_water.max(stack.len());
        }
        if let Some(t) = trace.as_deref_mut() {
            t.push(snapshot(&stack, &out));
        }
    }

    if out.ssa.len() != b {
        return Err(Error::Forest(format!(
            "emitted {} suffixes, expected {b}",
            out.ssa.len()
        )));
    }
    Ok((out, stats))
}
