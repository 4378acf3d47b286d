//! Karp-Rabin fingerprints over sampled prefixes.
//!
//! The index stores the prefix fingerprint `phi(1, t * stride)` and the power
//! `r^(t * stride)` for every sample `t`, with `stride = ceil(n / s)`. A
//! fragment fingerprint is either read directly (short windows) or assembled
//! from two prefix fingerprints. Each prefix fingerprint is reached from the
//! nearer of its two surrounding samples, extending forward from the lower one
//! or peeling letters off the upper one, so a query touches at most `stride`
//! letters.
//!
//! Arithmetic is modulo the Mersenne prime `2^61 - 1`.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::text::Text;

pub const MODULUS: u64 = (1 << 61) - 1;

#[inline]
pub(crate) fn mul_mod(a: u64, b: u64) -> u64 {
    let prod = a as u128 * b as u128;
    let lo = (prod as u64) & MODULUS;
    let hi = (prod >> 61) as u64;
    let sum = lo + hi;
    if sum >= MODULUS {
        sum - MODULUS
    } else {
        sum
    }
}

#[inline]
pub(crate) fn add_mod(a: u64, b: u64) -> u64 {
    let sum = a + b;
    if sum >= MODULUS {
        sum - MODULUS
    } else {
        sum
    }
}

#[inline]
pub(crate) fn sub_mod(a: u64, b: u64) -> u64 {
    if a >= b {
        a - b
    } else {
        a + MODULUS - b
    }
}

fn pow_mod(mut base: u64, mut exp: u64) -> u64 {
    let mut acc = 1;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base);
        }
        base = mul_mod(base, base);
        exp >>= 1;
    }
    acc
}

/// A fingerprint together with the number of letters actually hashed.
///
/// Windows that run past the end of the text are clamped, so two
/// fingerprints only compare equal when both value and window length agree.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Fingerprint {
    pub value: u64,
    pub window_len: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FingerprintIndex<'t> {
    text: &'t Text,
    base: u64,
    base_inv: u64,
    stride: usize,
    sampled_prefix: Vec<u64>,
    sampled_power: Vec<u64>,
    // phi(1, n); acts as the final sample when n is not a multiple of stride.
    full_prefix: u64,
}

impl<'t> FingerprintIndex<'t> {
    /// One left-to-right pass over `text`, keeping about `s` samples.
    pub fn preprocess(text: &'t Text, s: usize, seed: u64) -> Result<Self> {
        let n = text.len();
        if s == 0 || s > n {
            return Err(Error::SampleCount { s, n });
        }
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let base = rng.gen_range(1..MODULUS);
        let stride = n.div_ceil(s);
        let samples = n / stride + 1;

        let mut sampled_prefix = Vec::with_capacity(samples);
        let mut sampled_power = Vec::with_capacity(samples);
        sampled_prefix.push(0);
        sampled_power.push(1);
        let mut h = 0u64;
        let mut pw = 1u64;
        for (k, &c) in text.as_bytes().iter().enumerate() {
            h = add_mod(mul_mod(h, base), c as u64);
            pw = mul_mod(pw, base);
            if (k + 1) % stride == 0 {
                sampled_prefix.push(h);
                sampled_power.push(pw);
            }
        }

        Ok(FingerprintIndex {
            text,
            base,
            base_inv: pow_mod(base, MODULUS - 2),
            stride,
            sampled_prefix,
            sampled_power,
            full_prefix: h,
        })
    }

    pub fn text(&self) -> &'t Text {
        self.text
    }

    pub fn base(&self) -> u64 {
        self.base
    }

    pub fn stride(&self) -> usize {
        self.stride
    }

    pub fn sampled_prefix(&self) -> &[u64] {
        &self.sampled_prefix
    }

    pub fn sampled_power(&self) -> &[u64] {
        &self.sampled_power
    }

    /// Fingerprint of `T[i .. min(i + len - 1, n)]`.
    pub fn fingerprint(&self, i: usize, len: usize) -> Result<Fingerprint> {
        let mut reads = 0;
        self.fingerprint_counted(i, len, &mut reads)
    }

    /// Like [`fingerprint`](Self::fingerprint), adding the number of letters
    /// read to `reads`.
    pub fn fingerprint_counted(
        &self,
        i: usize,
        len: usize,
        reads: &mut usize,
    ) -> Result<Fingerprint> {
        let n = self.text.len();
        if i == 0 || i > n {
            return Err(Error::QueryOutOfRange { i, n });
        }
        Ok(self.window(i, len, reads))
    }

    /// Unchecked query used on the hot path; `1 <= i <= n`, `len >= 1`.
    #[inline]
    pub(crate) fn window(&self, i: usize, len: usize, reads: &mut usize) -> Fingerprint {
        let n = self.text.len();
        let end = i.saturating_add(len - 1).min(n);
        let window_len = end - i + 1;
        let value = if window_len <= self.stride {
            self.direct(i, end, reads)
        } else {
            let right = self.prefix(end, reads);
            let left = self.prefix(i - 1, reads);
            sub_mod(right, mul_mod(left, self.power(window_len)))
        };
        Fingerprint { value, window_len }
    }

    // phi(i, j) by Horner's rule; zero for an empty range.
    #[inline]
    fn direct(&self, i: usize, j: usize, reads: &mut usize) -> u64 {
        if j < i {
            return 0;
        }
        *reads += j - i + 1;
        self.text.as_bytes()[i - 1..j]
            .iter()
            .fold(0, |h, &c| add_mod(mul_mod(h, self.base), c as u64))
    }

    // phi(1, x) for 0 <= x <= n.
    fn prefix(&self, x: usize, reads: &mut usize) -> u64 {
        let n = self.text.len();
        let t = x / self.stride;
        let lo = t * self.stride;
        let hi = (lo + self.stride).min(n);
        if x - lo <= hi - x {
            let mut h = self.sampled_prefix[t];
            for &c in &self.text.as_bytes()[lo..x] {
                h = add_mod(mul_mod(h, self.base), c as u64);
            }
            *reads += x - lo;
            h
        } else {
            // phi(1, hi) = phi(1, x) * r^(hi - x) + phi(x + 1, hi)
            let upper = if hi == lo + self.stride {
                self.sampled_prefix[t + 1]
            } else {
                self.full_prefix
            };
            let tail = self.direct(x + 1, hi, reads);
            let mut inv = 1;
            for _ in 0..hi - x {
                inv = mul_mod(inv, self.base_inv);
            }
            mul_mod(sub_mod(upper, tail), inv)
        }
    }

    // r^m from the nearest sampled power and at most stride - 1 multiplications.
    fn power(&self, m: usize) -> u64 {
        let mut pw = self.sampled_power[m / self.stride];
        for _ in 0..m % self.stride {
            pw = mul_mod(pw, self.base);
        }
        pw
    }
}
