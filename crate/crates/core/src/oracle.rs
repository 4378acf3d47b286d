//! Brute-force reference: sort suffixes by direct comparison, then scan LCPs.

use crate::emitter::SsaSlcp;
use crate::text::{PositionSet, Text};

/// Length of the longest common prefix of two byte strings.
pub fn lcp(x: &[u8], y: &[u8]) -> usize {
    x.iter().zip(y).take_while(|(a, b)| a == b).count()
}

pub fn naive_ssa_slcp(text: &Text, a: &PositionSet) -> SsaSlcp {
    let mut ssa = a.as_slice().to_vec();
    // slice ordering puts a proper prefix before its extensions
    ssa.sort_unstable_by(|&x, &y| text.suffix(x).cmp(text.suffix(y)));
    let mut slcp = Vec::with_capacity(ssa.len());
    slcp.push(0);
    slcp.extend(
        ssa.windows(2)
            .map(|w| lcp(text.suffix(w[0]), text.suffix(w[1]))),
    );
    SsaSlcp { ssa, slcp }
}
