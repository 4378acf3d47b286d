//! Cross-checks both pipelines against the brute-force oracle on random
//! instances over several alphabet sizes.
//!
//! cargo run --release --example oracle_check [instances]

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use sparse_ssa::{main_algo, naive_ssa_slcp, parameterized_algo, PositionSet, RunConfig, Text};

fn main() -> sparse_ssa::Result<()> {
    let count: usize = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(300);
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let mut checked = 0;
    for k in 0..count {
        let sigma = [1u8, 2, 4, 26][k % 4];
        let n = rng.gen_range(1..=1500);
        let bytes = (0..n).map(|_| b'a' + rng.gen_range(0..sigma)).collect();
        let text = Text::new(bytes)?;
        let b = rng.gen_range(1..=n);
        let positions = rand::seq::index::sample(&mut rng, n, b)
            .into_iter()
            .map(|p| p + 1)
            .collect();
        let a = PositionSet::new(positions, n)?;
        let cfg = RunConfig {
            seed: k as u64,
            hash_seed: rng.gen(),
            ..RunConfig::default()
        };

        let expect = naive_ssa_slcp(&text, &a);
        let main = main_algo(&text, &a, &cfg, None)?;
        let (param, _) = parameterized_algo(&text, &a, &cfg)?;
        if main != expect || param != expect {
            eprintln!("mismatch on instance {k} (n = {n}, b = {b}, sigma = {sigma})");
            std::process::exit(1);
        }
        checked += 1;
    }
    println!("{checked} instances agree with the oracle");
    Ok(())
}
