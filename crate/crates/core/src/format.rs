//! On-disk encodings of an [`SsaSlcp`].
//!
//! CSV: a `ssa,slcp` header, then one `position,lcp` line per rank.
//!
//! Binary: the magic `SSA1`, then `n` and `b` as little-endian `u64`, then
//! `b` pairs of little-endian `u64` `(position, lcp)`.

use std::io::{self, Write};

use crate::emitter::SsaSlcp;
use crate::error::{Error, Result};

pub const CSV_HEADER: &str = "ssa,slcp";
pub const BIN_MAGIC: &[u8; 4] = b"SSA1";

pub fn write_csv(out: &SsaSlcp, w: &mut impl Write) -> io::Result<()> {
    writeln!(w, "{CSV_HEADER}")?;
    for (p, l) in out.ssa.iter().zip(&out.slcp) {
        writeln!(w, "{p},{l}")?;
    }
    Ok(())
}

pub fn read_csv(content: &str) -> Result<SsaSlcp> {
    let mut lines = content.lines();
    match lines.next() {
        Some(h) if h.trim_end_matches('\r') == CSV_HEADER => {}
        other => return Err(Error::Format(format!("bad csv header {other:?}"))),
    }
    let mut out = SsaSlcp::default();
    for (idx, line) in lines.enumerate() {
        let line = line.trim_end_matches('\r');
        let parsed = line
            .split_once(',')
            .and_then(|(p, l)| Some((p.parse::<usize>().ok()?, l.parse::<usize>().ok()?)));
        let (p, l) = parsed.ok_or_else(|| Error::Format(format!("line {}: {line:?}", idx + 2)))?;
        out.ssa.push(p);
        out.slcp.push(l);
    }
    Ok(out)
}

pub fn write_bin(out: &SsaSlcp, n: usize, w: &mut impl Write) -> io::Result<()> {
    w.write_all(BIN_MAGIC)?;
    w.write_all(&(n as u64).to_le_bytes())?;
    w.write_all(&(out.len() as u64).to_le_bytes())?;
    for (&p, &l) in out.ssa.iter().zip(&out.slcp) {
        w.write_all(&(p as u64).to_le_bytes())?;
        w.write_all(&(l as u64).to_le_bytes())?;
    }
    Ok(())
}

/// Returns the recorded text length and the arrays.
pub fn read_bin(bytes: &[u8]) -> Result<(usize, SsaSlcp)> {
    let word = |k: usize| -> Result<usize> {
        let at = 4 + 8 * k;
        bytes
            .get(at..at + 8)
            .map(|s| u64::from_le_bytes(s.try_into().unwrap()) as usize)
            .ok_or_else(|| Error::Format(format!("truncated at byte {at}")))
    };
    if bytes.get(..4) != Some(BIN_MAGIC.as_slice()) {
        return Err(Error::Format("missing SSA1 magic".into()));
    }
    let n = word(0)?;
    let b = word(1)?;
    if bytes.len() != 4 + 16 + 16 * b {
        return Err(Error::Format(format!(
            "expected {} bytes for b={b}, found {}",
            4 + 16 + 16 * b,
            bytes.len()
        )));
    }
    let mut out = SsaSlcp::default();
    for i in 0..b {
        out.ssa.push(word(2 + 2 * i)?);
        out.slcp.push(word(3 + 2 * i)?);
    }
    Ok((n, out))
}
