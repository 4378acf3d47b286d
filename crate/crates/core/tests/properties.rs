mod common;

use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use sparse_ssa::driver::{
    compute_b_prime, floor_log2, main_algo_report, parameterized_algo_report, quasi_sort_j_start,
    threshold, RunConfig,
};
use sparse_ssa::emitter::output_arrays;
use sparse_ssa::fingerprint::{FingerprintIndex, MODULUS};
use sparse_ssa::grouper::{refine_observed, sort_groups, sort_keys};
use sparse_ssa::{naive_ssa_slcp, PositionSet, Text};

use common::*;

fn poly(text: &Text, base: u64, i: usize, j: usize) -> u64 {
    let p = MODULUS as u128;
    (i..=j).fold(0u128, |h, k| (h * base as u128 + text.at(k) as u128) % p) as u64
}

fn pow(base: u64, e: usize) -> u64 {
    (0..e).fold(1u128, |acc, _| acc * base as u128 % MODULUS as u128) as u64
}

fn instance(seed: u64, n: usize, sigma: usize, b: usize) -> (Text, PositionSet) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let text = random_text(&mut rng, n, sigma);
    let a = random_positions(&mut rng, n, b.clamp(1, n));
    (text, a)
}

fn sigma() -> impl Strategy<Value = usize> {
    prop::sample::select(ALPHABETS.to_vec())
}

proptest! {
    #![proptest_config(ProptestConfig {
        cases: 64,
        failure_persistence: None,
        ..ProptestConfig::default()
    })]

    #[test]
    fn fingerprint_matches_polynomial(
        seed in any::<u64>(), n in 1usize..600, sigma in sigma(), s_frac in 0.0f64..1.0,
        queries in prop::collection::vec((any::<prop::sample::Index>(), 1usize..700), 40),
    ) {
        let (text, _) = instance(seed, n, sigma, 1);
        let s = ((n as f64 * s_frac) as usize).clamp(1, n);
        let idx = FingerprintIndex::preprocess(&text, s, seed).unwrap();
        for (at, len) in queries {
            let i = at.index(n) + 1;
            let mut reads = 0;
            let fp = idx.fingerprint_counted(i, len, &mut reads).unwrap();
            let end = (i + len - 1).min(n);
            prop_assert_eq!(fp.window_len, end - i + 1);
            prop_assert_eq!(fp.value, poly(&text, idx.base(), i, end));
            prop_assert!(reads <= len.min(idx.stride()) + 2);
        }
    }

    #[test]
    fn fingerprint_concatenates(
        seed in any::<u64>(), n in 2usize..400, s in 1usize..50,
        cut in any::<(prop::sample::Index, prop::sample::Index, prop::sample::Index)>(),
    ) {
        let (text, _) = instance(seed, n, 4, 1);
        let idx = FingerprintIndex::preprocess(&text, s.min(n), seed ^ 1).unwrap();
        let mut cuts = [cut.0.index(n) + 1, cut.1.index(n) + 1, cut.2.index(n) + 1];
        cuts.sort_unstable();
        let [i, m, j] = cuts;
        prop_assume!(i <= m && m < j);
        let fp = |x: usize, y: usize| idx.fingerprint(x, y - x + 1).unwrap().value;
        let joined = (fp(i, m) as u128 * pow(idx.base(), j - m) as u128 + fp(m + 1, j) as u128)
            % MODULUS as u128;
        prop_assert_eq!(joined as u64, fp(i, j));
    }

    #[test]
    fn refinement_invariants(
        seed in any::<u64>(), n in 1usize..160, sigma in sigma(), b_frac in 0.0f64..1.0,
        quasi in any::<bool>(),
    ) {
        let b = ((n as f64 * b_frac) as usize).clamp(1, n);
        let (text, a) = instance(seed, n, sigma, b);
        let (j_start, cap) = if quasi {
            let j = quasi_sort_j_start(n, b);
            (j, threshold(j))
        } else {
            (floor_log2(n), usize::MAX)
        };
        let fpi = FingerprintIndex::preprocess(&text, b, seed).unwrap();
        let mut violations = Vec::new();
        let (mut forest, _) = refine_observed(&a, &fpi, j_start, seed, |j, f| {
            if b >= 2 && (f.groups().len() > b - 1 || f.total_members() > 2 * b - 2) {
                violations.push(j);
            }
        });
        prop_assert!(violations.is_empty(), "size bounds broken at j = {:?}", violations);
        check_forest(&forest, &text, cap).map_err(TestCaseError::fail)?;

        sort_groups(&mut forest, &text);
        for g in forest.groups() {
            let keys = sort_keys(&forest, &text, g);
            if g.lcp < cap {
                prop_assert!(keys.windows(2).all(|w| w[0] < w[1]), "group {} not strictly sorted", g.id);
            } else {
                prop_assert!(keys.windows(2).all(|w| w[0] <= w[1]));
            }
        }

        let (out, stats) = output_arrays(&forest, n).unwrap();
        prop_assert!(stats.stack_high_water <= b);
        prop_assert!(stats.pops <= (2 * b - 1).max(2));
        check_quasi_sorted(&out, &text, &a, cap).map_err(TestCaseError::fail)?;
    }

    #[test]
    fn pipelines_agree_with_oracle(
        seed in any::<u64>(), n in 1usize..400, sigma in sigma(), b_frac in 0.0f64..1.0,
    ) {
        let b = ((n as f64 * b_frac) as usize).clamp(1, n);
        let (text, a) = instance(seed, n, sigma, b);
        let cfg = RunConfig { seed, hash_seed: seed.rotate_left(7), ..RunConfig::default() };
        let expect = naive_ssa_slcp(&text, &a);

        let (main, _) = main_algo_report(&text, &a, &cfg, None).unwrap();
        prop_assert_eq!(&main, &expect);

        let (param, report) = parameterized_algo_report(&text, &a, &cfg).unwrap();
        prop_assert_eq!(&param, &expect);
        let ell = report.stats.ell;
        prop_assert_eq!(report.stats.b_prime, compute_b_prime(&expect.slcp, ell));
        prop_assert_ne!(report.stats.b_prime, 1);
        check_quasi_sorted(&report.first_pass, &text, &a, ell).map_err(TestCaseError::fail)?;
        for i in 0..b {
            if !report.resorted_ranks.contains(&(i + 1)) {
                prop_assert_eq!(report.first_pass.ssa[i], param.ssa[i]);
            }
        }
    }
}

#[test]
fn random_text_small_alphabet_matches_oracle() {
    let (text, a) = instance(11, 500, 4, 50);
    let out = sparse_ssa::main_algo(&text, &a, &RunConfig::default(), None).unwrap();
    assert_eq!(out, naive_ssa_slcp(&text, &a));
}

#[test]
fn binary_text_both_pipelines_match_oracle() {
    let (text, a) = instance(12, 4096, 2, 64);
    let cfg = RunConfig::default();
    let expect = naive_ssa_slcp(&text, &a);
    assert_eq!(
        sparse_ssa::main_algo(&text, &a, &cfg, None).unwrap(),
        expect
    );
    assert_eq!(
        sparse_ssa::parameterized_algo(&text, &a, &cfg).unwrap().0,
        expect
    );
}

#[test]
fn periodic_text_needs_second_pass() {
    let text = Text::new(b"abcab".repeat(400)).unwrap();
    let n = text.len();
    let a = PositionSet::new((1..=n).step_by(7).collect(), n).unwrap();
    let (out, report) = parameterized_algo_report(&text, &a, &RunConfig::default()).unwrap();
    assert!(report.stats.second_pass_ran);
    assert!(report.stats.b_prime > 0);
    assert_eq!(out, naive_ssa_slcp(&text, &a));
}

#[test]
fn output_independent_of_seeds() {
    let (text, a) = instance(13, 1500, 2, 300);
    let runs: Vec<_> = (0..4u64)
        .map(|k| {
            let cfg = RunConfig {
                seed: k * 977,
                hash_seed: k * 31 + 5,
                ..RunConfig::default()
            };
            parameterized_algo_report(&text, &a, &cfg).unwrap().0
        })
        .collect();
    assert!(runs.windows(2).all(|w| w[0] == w[1]));
}
