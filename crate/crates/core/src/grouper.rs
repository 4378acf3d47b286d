//! LCP-group refinement and per-group sorting.
//!
//! Ids `1..=b` name suffixes (`A[id]`), ids above `b` name groups. Group ids
//! are handed out by a counter starting at `b + 1` and are never reused. Each
//! group also gets a witness: the start position of one of its suffixes,
//! stored after the `b` input positions so that `witness(id)` works for
//! suffixes and groups alike.

use std::collections::hash_map::DefaultHasher;
use std::fmt::Write as _;
use std::hash::{BuildHasher, Hasher};

use indexmap::IndexMap;

use crate::fingerprint::{Fingerprint, FingerprintIndex};
use crate::text::{PositionSet, Text};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Group {
    pub id: usize,
    pub lcp: usize,
    pub members: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupForest {
    b: usize,
    groups: Vec<Group>,
    witness: Vec<usize>,
}

impl GroupForest {
    /// The initial forest: one root group `(b + 1, 0, (1, ..., b))` witnessed by `A[1]`.
    pub fn new(a: &PositionSet) -> Self {
        let b = a.len();
        let mut witness = Vec::with_capacity(2 * b);
        witness.extend_from_slice(a.as_slice());
        witness.push(a.get(1));
        GroupForest {
            b,
            groups: vec![Group {
                id: b + 1,
                lcp: 0,
                members: (1..=b).collect(),
            }],
            witness,
        }
    }

    /// Assembles a forest from parts, e.g. for feeding a hand-built
    /// hierarchy to the emitter. `witness` must hold one entry per id.
    pub fn from_parts(b: usize, groups: Vec<Group>, witness: Vec<usize>) -> Self {
        GroupForest { b, groups, witness }
    }

    pub fn b(&self) -> usize {
        self.b
    }

    pub fn root_id(&self) -> usize {
        self.b + 1
    }

    pub fn groups(&self) -> &[Group] {
        &self.groups
    }

    pub fn group(&self, id: usize) -> Option<&Group> {
        id.checked_sub(self.b + 1).and_then(|k| self.groups.get(k))
    }

    pub fn is_suffix(&self, id: usize) -> bool {
        (1..=self.b).contains(&id)
    }

    /// Start position of a suffix id, or of the witness suffix of a group id.
    pub fn witness(&self, id: usize) -> usize {
        self.witness[id - 1]
    }

    pub fn witnesses(&self) -> &[usize] {
        &self.witness
    }

    pub fn total_members(&self) -> usize {
        self.groups.iter().map(|g| g.members.len()).sum()
    }

    /// One `(id, lcp, (members...))` line per group, in id order.
    pub fn dump(&self) -> String {
        let mut out = String::new();
        for g in &self.groups {
            let members: Vec<String> = g.members.iter().map(|m| m.to_string()).collect();
            let _ = writeln!(out, "({}, {}, ({}))", g.id, g.lcp, members.join(", "));
        }
        out
    }
}

/// Peak sizes observed during refinement.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct RefineStats {
    pub iterations: usize,
    pub peak_groups: usize,
    pub peak_members: usize,
    pub peak_hash_entries: usize,
    pub fingerprints: usize,
    pub letter_reads: usize,
}

/// Keyed SipHash; the key only perturbs the table layout.
#[derive(Debug, Clone, Copy)]
pub struct SeededState(pub u64);

impl BuildHasher for SeededState {
    type Hasher = DefaultHasher;

    fn build_hasher(&self) -> DefaultHasher {
        let mut h = DefaultHasher::new();
        h.write_u64(self.0);
        h
    }
}

// Key for a member whose suffix has no letters past the group's prefix.
const EXHAUSTED: Fingerprint = Fingerprint {
    value: 0,
    window_len: 0,
};

pub fn refine(
    a: &PositionSet,
    fpi: &FingerprintIndex<'_>,
    j_start: u32,
    hash_seed: u64,
) -> (GroupForest, RefineStats) {
    refine_observed(a, fpi, j_start, hash_seed, |_, _| {})
}

/// Runs the refinement for `j = j_start, ..., 0`, calling `observer(j, forest)`
/// after each iteration.
///
/// In iteration `j`, every group `(i, k, L)` present at the start of the
/// iteration is split by the fingerprint of the `2^j` letters following its
/// prefix. Fingerprint classes are visited in order of first appearance. A
/// class holding every member extends the group's lcp in place; other classes
/// of two or more members become new groups with lcp `k + 2^j`, and
/// singletons go back into `L` ahead of the new group ids.
pub fn refine_observed(
    a: &PositionSet,
    fpi: &FingerprintIndex<'_>,
    j_start: u32,
    hash_seed: u64,
    mut observer: impl FnMut(u32, &GroupForest),
) -> (GroupForest, RefineStats) {
    let n = fpi.text().len();
    let mut forest = GroupForest::new(a);
    let b = forest.b;
    let mut stats = RefineStats {
        peak_groups: 1,
        peak_members: b,
        ..RefineStats::default()
    };
    if b == 1 {
        return (forest, stats);
    }

    let mut table: IndexMap<Fingerprint, Vec<usize>, SeededState> =
        IndexMap::with_hasher(SeededState(hash_seed));
    let mut fresh: Vec<Group> = Vec::new();
    let mut new_ids: Vec<usize> = Vec::new();

    for j in (0..=j_start).rev() {
        let step = 1usize.checked_shl(j).unwrap_or(usize::MAX);
        let existing = forest.groups.len();
        for gi in 0..existing {
            let k = forest.groups[gi].lcp;
            let members = std::mem::take(&mut forest.groups[gi].members);
            let size = members.len();
            table.clear();
            for l in members {
                let start = forest.witness[l - 1].saturating_add(k);
                let key = if start > n {
                    EXHAUSTED
                } else {
                    stats.fingerprints += 1;
                    fpi.window(start, step, &mut stats.letter_reads)
                };
                table.entry(key).or_default().push(l);
            }
            stats.peak_hash_entries = stats.peak_hash_entries.max(table.len());

            new_ids.clear();
            for (_, class) in table.drain(..) {
                let group = &mut forest.groups[gi];
                if class.len() == size {
                    group.lcp = k.saturating_add(step);
                    group.members = class;
                } else if class.len() >= 2 {
                    let id = b + 1 + existing + fresh.len();
                    forest.witness.push(forest.witness[class[0] - 1]);
                    new_ids.push(id);
                    fresh.push(Group {
                        id,
                        lcp: k.saturating_add(step),
                        members: class,
                    });
                } else {
                    group.members.push(class[0]);
                }
            }
            forest.groups[gi].members.extend_from_slice(&new_ids);
        }
        forest.groups.append(&mut fresh);

        stats.iterations += 1;
        stats.peak_groups = stats.peak_groups.max(forest.groups.len());
        stats.peak_members = stats.peak_members.max(forest.total_members());
        observer(j, &forest);
    }
    (forest, stats)
}

/// The letter following a member's certified prefix, `None` once the suffix
/// is exhausted (which orders it first).
#[inline]
fn next_letter(witness: &[usize], text: &Text, member: usize, lcp: usize) -> Option<u8> {
    let pos = witness[member - 1].saturating_add(lcp);
    (pos <= text.len()).then(|| text.at(pos))
}

/// Orders each group's members by the letter right after the group's lcp.
pub fn sort_groups(forest: &mut GroupForest, text: &Text) {
    let witness = &forest.witness;
    for g in forest.groups.iter_mut() {
        let lcp = g.lcp;
        g.members
            .sort_unstable_by_key(|&m| next_letter(witness, text, m, lcp));
    }
}

/// Sort keys of a group's members in their current order.
pub fn sort_keys(forest: &GroupForest, text: &Text, group: &Group) -> Vec<Option<u8>> {
    group
        .members
        .iter()
        .map(|&m| next_letter(&forest.witness, text, m, group.lcp))
        .collect()
}
