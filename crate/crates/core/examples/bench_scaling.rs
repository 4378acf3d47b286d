//! Times both pipelines on uniformly random texts of growing length with
//! b = 0.01% of n, printing CSV rows.
//!
//! cargo run --release --example bench_scaling [max_n]

use rand::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;
use sparse_ssa::cli::{run_algorithm, Algo, Seeds};
use sparse_ssa::{sample_positions, Text};

fn main() -> sparse_ssa::Result<()> {
    let max_n: usize = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(16_000_000);
    let seeds = Seeds::derive(1);
    println!("algorithm,n,b,b_prime,total_ms,refine_ms,preprocess_ms");
    let mut n = 1_000_000;
    while n <= max_n {
        let mut bytes = vec![0u8; n];
        ChaCha8Rng::seed_from_u64(n as u64).fill_bytes(&mut bytes);
        let text = Text::new(bytes)?;
        let a = sample_positions(n, n / 10_000, seeds.positions)?;
        for algo in [Algo::Main, Algo::Param] {
            let (_, r) = run_algorithm(algo, &text, &a, seeds, None, None)?;
            println!(
                "{},{},{},{},{:.2},{:.2},{:.2}",
                r.algorithm,
                r.n,
                r.b,
                r.b_prime.unwrap_or(0),
                r.total_ms,
                r.refine_ms,
                r.preprocess_ms
            );
        }
        n *= 2;
    }
    Ok(())
}
