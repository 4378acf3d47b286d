//! The two-pass construction on a repetitive text: the first pass certifies
//! LCPs only up to a threshold, and the suffixes that hit it are re-sorted.
//!
//! cargo run --example parameterized

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use sparse_ssa::driver::{main_algo_report, parameterized_algo_report};
use sparse_ssa::{naive_ssa_slcp, sample_positions, RunConfig, Text};

fn main() -> sparse_ssa::Result<()> {
    // random letters with a long repeated block in the middle
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let mut bytes: Vec<u8> = (0..200_000).map(|_| b"acgt"[rng.gen_range(0..4)]).collect();
    let block = bytes[10_000..30_000].to_vec();
    bytes[120_000..140_000].copy_from_slice(&block);
    let text = Text::new(bytes)?;
    let n = text.len();
    let a = sample_positions(n, 2_000, 3)?;
    let cfg = RunConfig::default();

    let (main, mr) = main_algo_report(&text, &a, &cfg, None)?;
    let (param, pr) = parameterized_algo_report(&text, &a, &cfg)?;
    assert_eq!(main, param);
    assert_eq!(param, naive_ssa_slcp(&text, &a));

    let s = pr.stats;
    println!("n = {n}, b = {}", a.len());
    println!(
        "threshold = {}, re-sorted suffixes b' = {}, second pass: {}",
        s.ell, s.b_prime, s.second_pass_ran
    );
    println!(
        "main:  {:>8.2} ms ({} refinement rounds)",
        mr.times.total().as_secs_f64() * 1e3,
        mr.refine.iterations
    );
    println!(
        "param: {:>8.2} ms (first pass {} rounds)",
        pr.times.total().as_secs_f64() * 1e3,
        pr.first.refine.iterations
    );
    println!("longest lcp: {}", param.slcp.iter().max().unwrap());
    Ok(())
}
