//! Positive-entropy constructions: deterministic Bernoulli streams mixed
//! with the Liouville function, and correlation statistics.

use num_complex::Complex64;

use crate::arith::{ArithSeq, SeqTag};
use crate::error::{Error, Result};

/// SplitMix64: identical seed gives an identical stream, bit-exact across
/// platforms.
#[derive(Debug, Clone)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        SplitMix64 { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }

    /// Uniform in `[0, 1)` from the upper 53 bits.
    pub fn next_f64(&mut self) -> f64 {
        (self.next_u64() >> 11) as f64 * (1.0 / 9_007_199_254_740_992.0)
    }
}

/// Independent Bernoulli bits: `y(n) = 1` with probability `p`.
pub fn bernoulli_stream(p: f64, n: u64, seed: u64) -> Result<Vec<u8>> {
    if !(p > 0.0 && p < 1.0) {
        return Err(Error::InvalidArgument(format!("p must lie in (0, 1), got {p}")));
    }
    let mut rng = SplitMix64::new(seed);
    Ok((0..n).map(|_| u8::from(rng.next_f64() < p)).collect())
}

/// Mix a `{-1,+1}` sequence with a mask: output `lambda(n)` where
/// `mask(n) = 1` and `-1` where `mask(n) = 0`.
pub fn mix_with_mask(lambda: &ArithSeq, mask: &[u8]) -> Result<ArithSeq> {
    let n = mask.len() as u64;
    if lambda.len() < n {
        return Err(Error::insufficient("lambda", n, lambda.len()));
    }
    let signs = lambda
        .signs()
        .ok_or_else(|| Error::InvalidArgument("mix input must be +-1 valued".into()))?;
    if signs[..mask.len()].iter().any(|&s| s == 0) {
        return Err(Error::InvalidArgument("mix input must be +-1 valued".into()));
    }
    let mixed: Vec<i8> = mask
        .iter()
        .enumerate()
        .map(|(i, &y)| if y == 1 { signs[i] } else { -1 })
        .collect();
    ArithSeq::from_signs(SeqTag::Custom, mixed)
}

/// The Bernoulli/Liouville mix: `u(n) = lambda(n)` if `y(n) = 1`, else
/// `u(n) = -1`, with `y` a seeded Bernoulli(`p`) stream (`P(y = 1) = p`).
pub fn bernoulli_mix(lambda: &ArithSeq, p: f64, n: u64, seed: u64) -> Result<ArithSeq> {
    let mask = bernoulli_stream(p, n, seed)?;
    mix_with_mask(lambda, &mask)
}

/// `(1/N) sum_{n <= N} u(n) conj(v(n))`.
pub fn correlation(u: &ArithSeq, v: &ArithSeq, n: u64) -> Result<Complex64> {
    if n == 0 {
        return Err(Error::InvalidArgument("range N must be positive".into()));
    }
    if u.len() < n {
        return Err(Error::insufficient("u", n, u.len()));
    }
    if v.len() < n {
        return Err(Error::insufficient("v", n, v.len()));
    }
    let sum = match (u.signs(), v.signs()) {
        (Some(us), Some(vs)) => {
            let mut s = 0i64;
            for i in 0..n as usize {
                s += i64::from(us[i]) * i64::from(vs[i]);
            }
            Complex64::new(s as f64, 0.0)
        }
        _ => {
            let mut s = Complex64::new(0.0, 0.0);
            for i in 0..n as usize {
                s += u.entry(i) * v.entry(i).conj();
            }
            s
        }
    };
    Ok(sum / n as f64)
}

/// `#{n <= N : u(n) = v(n)} / N` for `{-1,+1}`-valued sequences; equals
/// `(1 + correlation) / 2` up to rounding.
pub fn sign_match_freq(u: &ArithSeq, v: &ArithSeq, n: u64) -> Result<f64> {
    if n == 0 {
        return Err(Error::InvalidArgument("range N must be positive".into()));
    }
    if u.len() < n {
        return Err(Error::insufficient("u", n, u.len()));
    }
    if v.len() < n {
        return Err(Error::insufficient("v", n, v.len()));
    }
    if !u.is_pm_one() || !v.is_pm_one() {
        return Err(Error::InvalidArgument("sign matching needs +-1 valued inputs".into()));
    }
    let mut matches = 0u64;
    for i in 0..n as usize {
        if u.entry(i) == v.entry(i) {
            matches += 1;
        }
    }
    Ok(matches as f64 / n as f64)
}
