//! Read-only text and the set of suffix start positions to sort.
//!
//! Every position crossing this module's interface is 1-based.

use std::collections::HashSet;
use std::fs;
use std::path::Path;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};

/// An immutable byte string of length `n >= 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Text {
    bytes: Vec<u8>,
}

impl Text {
    pub fn new(bytes: Vec<u8>) -> Result<Self> {
        if bytes.is_empty() {
            return Err(Error::EmptyText);
        }
        Ok(Text { bytes })
    }

    pub fn len(&self) -> usize {
        self.bytes.len()
    }

    // A Text is never empty; kept for clippy's len_without_is_empty.
    pub fn is_empty(&self) -> bool {
        false
    }

    /// The letter at 1-based position `i`.
    #[inline]
    pub fn at(&self, i: usize) -> u8 {
        self.bytes[i - 1]
    }

    pub fn as_bytes(&self) -> &[u8] {
        &self.bytes
    }

    /// The suffix starting at 1-based position `i`, empty when `i == n + 1`.
    pub fn suffix(&self, i: usize) -> &[u8] {
        &self.bytes[i - 1..]
    }
}

impl TryFrom<&str> for Text {
    type Error = Error;

    fn try_from(s: &str) -> Result<Self> {
        Text::new(s.as_bytes().to_vec())
    }
}

pub fn load_text(path: impl AsRef<Path>) -> Result<Text> {
    let path = path.as_ref();
    let bytes = fs::read(path).map_err(|source| Error::Io {
        path: path.to_path_buf(),
        source,
    })?;
    Text::new(bytes)
}

/// Distinct 1-based suffix start positions, all within `[1, n]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PositionSet {
    positions: Vec<usize>,
}

impl PositionSet {
    pub fn new(positions: Vec<usize>, n: usize) -> Result<Self> {
        if positions.is_empty() {
            return Err(Error::EmptyPositions);
        }
        let mut seen = HashSet::with_capacity(positions.len());
        for &p in &positions {
            if p == 0 || p > n {
                return Err(Error::PositionOutOfRange { value: p, n });
            }
            if !seen.insert(p) {
                return Err(Error::DuplicatePosition(p));
            }
        }
        Ok(PositionSet { positions })
    }

    pub fn len(&self) -> usize {
        self.positions.len()
    }

    pub fn is_empty(&self) -> bool {
        self.positions.is_empty()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.positions
    }

    /// The 1-based `i`-th position, `A[i]`.
    pub fn get(&self, i: usize) -> usize {
        self.positions[i - 1]
    }
}

/// Parses one decimal position per line; blank lines are skipped and CRLF is accepted.
pub fn parse_positions(content: &str, n: usize) -> Result<PositionSet> {
    let mut positions = Vec::new();
    for (idx, line) in content.lines().enumerate() {
        let line = line.trim_end_matches('\r').trim();
        if line.is_empty() {
            continue;
        }
        let value = line.parse::<usize>().map_err(|_| Error::ParsePosition {
            line: idx + 1,
            content: line.to_string(),
        })?;
        positions.push(value);
    }
    PositionSet::new(positions, n)
}

pub fn load_positions(path: impl AsRef<Path>, n: usize) -> Result<PositionSet> {
    let path = path.as_ref();
    let content = fs::read_to_string(path).map_err(|source| Error::Io {
        path: path.to_path_buf(),
        source,
    })?;
    parse_positions(&content, n)
}

/// Draws `b` distinct positions uniformly from `[1, n]`.
pub fn sample_positions(n: usize, b: usize, seed: u64) -> Result<PositionSet> {
    if b == 0 {
        return Err(Error::EmptyPositions);
    }
    if b > n {
        return Err(Error::TooManyPositions { b, n });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let positions = rand::seq::index::sample(&mut rng, n, b)
        .into_iter()
        .map(|p| p + 1)
        .collect();
    PositionSet::new(positions, n)
}
