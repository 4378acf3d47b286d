#![allow(dead_code)]

use rand::{Rng, RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

use sparse_ssa::grouper::GroupForest;
use sparse_ssa::{PositionSet, SsaSlcp, Text};

pub const ALPHABETS: [usize; 5] = [1, 2, 4, 26, 255];

/// A seeded random text over `sigma` letters. Small alphabets use lowercase
/// letters; the 255-letter one spans bytes 0..=254.
pub fn random_text(rng: &mut impl Rng, n: usize, sigma: usize) -> Text {
    let offset = if sigma <= 26 { b'a' } else { 0 };
    let bytes = (0..n)
        .map(|_| offset + rng.gen_range(0..sigma) as u8)
        .collect();
    Text::new(bytes).unwrap()
}

pub fn uniform_bytes(n: usize, seed: u64) -> Text {
    let mut bytes = vec![0u8; n];
    ChaCha8Rng::seed_from_u64(seed).fill_bytes(&mut bytes);
    Text::new(bytes).unwrap()
}

pub fn random_positions(rng: &mut impl Rng, n: usize, b: usize) -> PositionSet {
    let positions = rand::seq::index::sample(rng, n, b)
        .into_iter()
        .map(|p| p + 1)
        .collect();
    PositionSet::new(positions, n).unwrap()
}

/// The b values exercised for a text of length n.
pub fn b_rules(n: usize) -> [usize; 5] {
    [1, 2.min(n), n.div_ceil(10), n.div_ceil(2), n]
}

pub fn true_lcp(text: &Text, x: usize, y: usize) -> usize {
    text.suffix(x)
        .iter()
        .zip(text.suffix(y))
        .take_while(|(a, b)| a == b)
        .count()
}

/// Checks every pair of suffixes whose lowest common ancestor is a group:
/// the group's lcp must equal `min(true lcp, cap)`. Also checks that the
/// leaves partition `1..=b`.
pub fn check_forest(forest: &GroupForest, text: &Text, cap: usize) -> Result<(), String> {
    let b = forest.b();
    let mut seen = vec![0usize; b + 1];
    for g in forest.groups() {
        for &m in &g.members {
            if forest.is_suffix(m) {
                seen[m] += 1;
            }
        }
    }
    if let Some(id) = (1..=b).find(|&id| seen[id] != 1) {
        return Err(format!("suffix id {id} appears {} times", seen[id]));
    }

    for g in forest.groups() {
        let leaves: Vec<Vec<usize>> = g.members.iter().map(|&m| leaves_of(forest, m)).collect();
        if b >= 2 && leaves.iter().map(Vec::len).sum::<usize>() < 2 {
            return Err(format!("group {} reaches fewer than 2 suffixes", g.id));
        }
        for x in 0..leaves.len() {
            for y in x + 1..leaves.len() {
                for &u in &leaves[x] {
                    for &v in &leaves[y] {
                        let t = true_lcp(text, forest.witness(u), forest.witness(v));
                        if g.lcp != t.min(cap) {
                            return Err(format!(
                                "group {} lcp {} but suffixes {} and {} share {t}",
                                g.id,
                                g.lcp,
                                forest.witness(u),
                                forest.witness(v)
                            ));
                        }
                    }
                }
            }
        }
    }
    Ok(())
}

pub fn leaves_of(forest: &GroupForest, id: usize) -> Vec<usize> {
    if forest.is_suffix(id) {
        return vec![id];
    }
    let mut out = Vec::new();
    let mut stack = vec![id];
    while let Some(x) = stack.pop() {
        if forest.is_suffix(x) {
            out.push(x);
        } else {
            stack.extend(&forest.group(x).unwrap().members);
        }
    }
    out
}

/// Checks a quasi-sorted output against the text: every stored LCP is
/// `min(true lcp, cap)` and every pair with true lcp below `cap` is ordered.
pub fn check_quasi_sorted(
    out: &SsaSlcp,
    text: &Text,
    a: &PositionSet,
    cap: usize,
) -> Result<(), String> {
    let mut sorted_out = out.ssa.clone();
    sorted_out.sort_unstable();
    let mut sorted_in = a.as_slice().to_vec();
    sorted_in.sort_unstable();
    if sorted_out != sorted_in {
        return Err("ssa is not a permutation of the input".into());
    }
    if out.slcp.first() != Some(&0) {
        return Err("slcp[1] != 0".into());
    }
    for i in 1..out.len() {
        let (x, y) = (out.ssa[i - 1], out.ssa[i]);
        let t = true_lcp(text, x, y);
        if out.slcp[i] != t.min(cap) {
            return Err(format!(
                "rank {}: slcp {} but true lcp {t}",
                i + 1,
                out.slcp[i]
            ));
        }
        if t < cap && text.suffix(x) > text.suffix(y) {
            return Err(format!("rank {}: suffixes {x} and {y} out of order", i + 1));
        }
    }
    Ok(())
}
