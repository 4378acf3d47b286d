//! Karp-Rabin fingerprints over a sampled prefix table: how the sample count
//! trades memory for letters read per query.
//!
//! cargo run --example fingerprints

use sparse_ssa::{FingerprintIndex, Text};

fn main() -> sparse_ssa::Result<()> {
    let text = Text::new(b"abracadabra".repeat(10_000))?;
    let n = text.len();
    let period = 11;

    for s in [1, 10, 330, n / 10, n] {
        let idx = FingerprintIndex::preprocess(&text, s, 42)?;
        let mut reads = 0;
        let mut queries = 0;
        for i in (1..n).step_by(997) {
            for len in [1, 8, 64, 4096, n] {
                idx.fingerprint_counted(i, len, &mut reads)?;
                queries += 1;
            }
        }
        // equal fragments one period apart hash equal
        let x = idx.fingerprint(5, 2000)?;
        let y = idx.fingerprint(5 + period, 2000)?;
        assert_eq!(x, y);
        println!(
            "s = {s:>6}  stride = {:>6}  samples = {:>6}  mean letters/query = {:>8.1}",
            idx.stride(),
            idx.sampled_prefix().len(),
            reads as f64 / queries as f64
        );
    }

    let idx = FingerprintIndex::preprocess(&text, 100, 42)?;
    let tail = idx.fingerprint(n - 2, 10)?;
    println!(
        "window clamped at the end of the text: {} letters",
        tail.window_len
    );
    Ok(())
}
