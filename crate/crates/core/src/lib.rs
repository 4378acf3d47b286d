//! Sparse suffix array (SSA) and sparse LCP array (SLCP) construction for an
//! arbitrary set of suffixes of a read-only text.
//!
//! Suffixes are grouped by Karp-Rabin fingerprints of prefixes of
//! geometrically decreasing length until every group records the exact
//! longest common prefix of its members; a depth-first walk of the resulting
//! hierarchy then yields both arrays. [`driver::parameterized_algo`] first
//! sorts everything up to a short threshold and re-sorts only the suffixes
//! that share longer prefixes.
//!
//! ```
//! use sparse_ssa::{main_algo, PositionSet, RunConfig, Text};
//!
//! let text = Text::try_from("abracadabrarabia").unwrap();
//! let a = PositionSet::new(vec![1, 3, 8, 10, 11, 13], text.len()).unwrap();
//! let out = main_algo(&text, &a, &RunConfig::default(), None).unwrap();
//! assert_eq!(out.ssa, [13, 1, 8, 11, 3, 10]);
//! assert_eq!(out.slcp, [0, 2, 4, 1, 0, 2]);
//! ```
//!
//! All positions are 1-based.

pub mod cli;
pub mod driver;
pub mod emitter;
pub mod error;
pub mod fingerprint;
pub mod format;
pub mod grouper;
pub mod oracle;
pub mod text;

pub use driver::{compute_b_prime, main_algo, parameterized_algo, ParamStats, RunConfig};
pub use emitter::SsaSlcp;
pub use error::{Error, Result};
pub use fingerprint::{Fingerprint, FingerprintIndex};
pub use grouper::{Group, GroupForest};
pub use oracle::naive_ssa_slcp;
pub use text::{load_positions, load_text, sample_positions, PositionSet, Text};
