//! Sieve-based generation of multiplicative arithmetic functions.
//!
//! Arithmetic sequences are realized on `[1, N]` and stored positionally:
//! entry `i` holds the value at `n = i + 1`. The `{-1, 0, +1}`-valued
//! functions (Möbius, Liouville) use one signed byte per index.

mod character;
mod pretentious;

pub use character::{character_seq, dirichlet_characters, dirichlet_characters_with_limit,
                    DirichletCharacter, DEFAULT_Q_MAX};
pub use pretentious::{mrt_default_q, mrt_infimum, pretentious_distance, twist_distance_sq,
                      MrtSearch, DEFAULT_T_POINTS};

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::util::gcd;

/// Above this range the `{-1,0,+1}` sieves switch to segmented scans.
pub const SEGMENT_THRESHOLD: u64 = 10_000_000;
/// Segment size used by the segmented sieves.
pub const SEGMENT_SIZE: usize = 1 << 20;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum SeqTag {
    Mobius,
    Liouville,
    Character,
    Twist,
    Custom,
}

#[derive(Debug, Clone)]
enum SeqData {
    Signs(Vec<i8>),
    Complex(Vec<Complex64>),
}

/// Finite realization of an arithmetic function `u` on `[1, N]`, values in
/// the closed complex unit disc.
#[derive(Debug, Clone)]
pub struct ArithSeq {
    tag: SeqTag,
    data: SeqData,
}

impl ArithSeq {
    /// Build from `{-1, 0, +1}` values; entry `i` is `u(i + 1)`.
    pub fn from_signs(tag: SeqTag, values: Vec<i8>) -> Result<Self> {
        if let Some(bad) = values.iter().find(|v| !matches!(**v, -1 | 0 | 1)) {
            return Err(Error::InvalidArgument(format!(
                "sign sequence entry {bad} is not in {{-1, 0, 1}}"
            )));
        }
        Ok(ArithSeq { tag, data: SeqData::Signs(values) })
    }

    /// Build from complex values of modulus at most 1 (small slack for
    /// rounding); entry `i` is `u(i + 1)`.
    pub fn from_complex(tag: SeqTag, values: Vec<Complex64>) -> Result<Self> {
        if let Some(bad) = values.iter().find(|v| v.norm_sqr() > 1.0 + 1e-9) {
            return Err(Error::InvalidArgument(format!(
                "complex sequence entry {bad} has modulus > 1"
            )));
        }
        Ok(ArithSeq { tag, data: SeqData::Complex(values) })
    }

    pub fn constant_one(len: u64) -> Self {
        ArithSeq { tag: SeqTag::Custom, data: SeqData::Signs(vec![1i8; len as usize]) }
    }

    pub fn tag(&self) -> SeqTag {
        self.tag
    }

    /// Literal index of entry 0; always 1 for arithmetic functions.
    pub fn start(&self) -> u64 {
        1
    }

    pub fn len(&self) -> u64 {
        match &self.data {
            SeqData::Signs(v) => v.len() as u64,
            SeqData::Complex(v) => v.len() as u64,
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Value at the literal argument `n >= 1`. Panics when out of range.
    pub fn eval(&self, n: u64) -> Complex64 {
        assert!(n >= 1 && n <= self.len(), "eval({n}) outside realized range");
        self.entry((n - 1) as usize)
    }

    /// Value at stream position `pos` (so the argument `pos + 1`).
    pub fn entry(&self, pos: usize) -> Complex64 {
        match &self.data {
            SeqData::Signs(v) => Complex64::new(f64::from(v[pos]), 0.0),
            SeqData::Complex(v) => v[pos],
        }
    }

    /// Raw sign storage, when this sequence uses the compact encoding.
    pub fn signs(&self) -> Option<&[i8]> {
        match &self.data {
            SeqData::Signs(v) => Some(v),
            SeqData::Complex(_) => None,
        }
    }

    /// True when every value is exactly +1 or -1.
    pub fn is_pm_one(&self) -> bool {
        match &self.data {
            SeqData::Signs(v) => v.iter().all(|&s| s != 0),
            SeqData::Complex(v) => v
                .iter()
                .all(|z| z.im == 0.0 && (z.re == 1.0 || z.re == -1.0)),
        }
    }
}

fn check_positive(n: u64) -> Result<()> {
    if n == 0 {
        Err(Error::InvalidArgument("range N must be positive".into()))
    } else {
        Ok(())
    }
}

/// Linear sieve of smallest prime factors on `[0, n]`; `spf[p] == 0` marks
/// primes (and 0, 1).
fn linear_spf(n: usize) -> (Vec<u32>, Vec<u32>) {
    let mut spf = vec![0u32; n + 1];
    let mut primes = Vec::new();
    for i in 2..=n {
        if spf[i] == 0 {
            primes.push(i as u32);
        }
        for &p in &primes {
            let ip = i * p as usize;
            if ip > n {
                break;
            }
            spf[ip] = p;
            if i % p as usize == 0 {
                break;
            }
        }
    }
    (spf, primes)
}

/// Möbius function on `[1, N]`.
///
/// Linear sieve up to [`SEGMENT_THRESHOLD`], segmented above it.
pub fn sieve_mobius(n: u64) -> Result<ArithSeq> {
    sieve_mobius_with(n, SEGMENT_THRESHOLD, SEGMENT_SIZE)
}

/// Möbius sieve with explicit segmentation parameters (exposed for tests).
pub fn sieve_mobius_with(n: u64, threshold: u64, segment: usize) -> Result<ArithSeq> {
    check_positive(n)?;
    let values = if n <= threshold {
        mobius_linear(n as usize)
    } else {
        mobius_segmented(n, segment)
    };
    ArithSeq::from_signs(SeqTag::Mobius, values)
}

fn mobius_linear(n: usize) -> Vec<i8> {
    let (spf, _) = linear_spf(n);
    let mut mu = vec![0i8; n + 1];
    mu[1] = 1;
    for i in 2..=n {
        let p = spf[i];
        if p == 0 {
            mu[i] = -1; // prime
        } else {
            let m = i / p as usize;
            mu[i] = if m % p as usize == 0 { 0 } else { -mu[m] };
        }
    }
    mu.drain(0..1);
    mu
}

fn mobius_segmented(n: u64, segment: usize) -> Vec<i8> {
    let root = n.isqrt();
    let small_primes = primes_up_to(root).unwrap_or_default();
    let mut out = Vec::with_capacity(n as usize);
    let mut lo = 1u64;
    while lo <= n {
        let hi = (lo + segment as u64 - 1).min(n);
        let len = (hi - lo + 1) as usize;
        let mut mu = vec![1i8; len];
        let mut rem: Vec<u64> = (lo..=hi).collect();
        for &p in &small_primes {
            let mut m = lo.div_ceil(p) * p;
            while m <= hi {
                let i = (m - lo) as usize;
                mu[i] = -mu[i];
                rem[i] /= p;
                m += p;
            }
            let p2 = p * p;
            let mut m = lo.div_ceil(p2) * p2;
            while m <= hi {
                mu[(m - lo) as usize] = 0;
                m += p2;
            }
        }
        for i in 0..len {
            if rem[i] > 1 {
                // one prime factor above sqrt(n) left
                mu[i] = -mu[i];
            }
        }
        if lo == 1 {
            mu[0] = 1;
        }
        out.extend_from_slice(&mu);
        lo = hi + 1;
    }
    out
}

/// Liouville function `lambda(n) = (-1)^{Omega(n)}` on `[1, N]`.
pub fn sieve_liouville(n: u64) -> Result<ArithSeq> {
    sieve_liouville_with(n, SEGMENT_THRESHOLD, SEGMENT_SIZE)
}

pub fn sieve_liouville_with(n: u64, threshold: u64, segment: usize) -> Result<ArithSeq> {
    check_positive(n)?;
    let values = if n <= threshold {
        liouville_linear(n as usize)
    } else {
        liouville_segmented(n, segment)
    };
    ArithSeq::from_signs(SeqTag::Liouville, values)
}

fn liouville_linear(n: usize) -> Vec<i8> {
    let (spf, _) = linear_spf(n);
    let mut lam = vec![0i8; n + 1];
    lam[1] = 1;
    for i in 2..=n {
        let p = spf[i];
        let m = if p == 0 { 1 } else { i / p as usize };
        lam[i] = -lam[m];
    }
    lam.drain(0..1);
    lam
}

fn liouville_segmented(n: u64, segment: usize) -> Vec<i8> {
    let root = n.isqrt();
    let small_primes = primes_up_to(root).unwrap_or_default();
    let mut out = Vec::with_capacity(n as usize);
    let mut lo = 1u64;
    while lo <= n {
        let hi = (lo + segment as u64 - 1).min(n);
        let len = (hi - lo + 1) as usize;
        let mut lam = vec![1i8; len];
        let mut rem: Vec<u64> = (lo..=hi).collect();
        for &p in &small_primes {
            let mut m = lo.div_ceil(p) * p;
            while m <= hi {
                let i = (m - lo) as usize;
                while rem[i] % p == 0 {
                    rem[i] /= p;
                    lam[i] = -lam[i];
                }
                m += p;
            }
        }
        for i in 0..len {
            if rem[i] > 1 {
                lam[i] = -lam[i];
            }
        }
        out.extend_from_slice(&lam);
        lo = hi + 1;
    }
    out
}

/// `Omega(n)` (prime divisors counted with multiplicity) for `0 <= n <= N`;
/// entry 0 is unused, `Omega(1) = 0`.
pub fn sieve_omega(n: u64) -> Result<Vec<u32>> {
    check_positive(n)?;
    let n = n as usize;
    let (spf, _) = linear_spf(n);
    let mut omega = vec![0u32; n + 1];
    for i in 2..=n {
        let p = spf[i];
        let m = if p == 0 { 1 } else { i / p as usize };
        omega[i] = omega[m] + 1;
    }
    Ok(omega)
}

/// Primality table on `[0, N]`, Eratosthenes; segmented above the threshold.
pub fn prime_sieve(n: u64) -> Result<Vec<bool>> {
    prime_sieve_with(n, SEGMENT_THRESHOLD, SEGMENT_SIZE)
}

pub fn prime_sieve_with(n: u64, threshold: u64, segment: usize) -> Result<Vec<bool>> {
    check_positive(n)?;
    if n <= threshold {
        return Ok(eratosthenes(n as usize));
    }
    let root = n.isqrt();
    let small = eratosthenes(root as usize);
    let small_primes: Vec<u64> = (2..=root).filter(|&p| small[p as usize]).collect();
    let mut is_prime = vec![false; (n + 1) as usize];
    is_prime[..=root as usize].copy_from_slice(&small);
    let mut lo = root + 1;
    while lo <= n {
        let hi = (lo + segment as u64 - 1).min(n);
        let len = (hi - lo + 1) as usize;
        let mut seg = vec![true; len];
        for &p in &small_primes {
            let mut m = lo.div_ceil(p) * p;
            while m <= hi {
                seg[(m - lo) as usize] = false;
                m += p;
            }
        }
        for (i, &flag) in seg.iter().enumerate() {
            is_prime[lo as usize + i] = flag;
        }
        lo = hi + 1;
    }
    Ok(is_prime)
}

fn eratosthenes(n: usize) -> Vec<bool> {
    let mut is_prime = vec![true; n + 1];
    is_prime[0] = false;
    if n >= 1 {
        is_prime[1] = false;
    }
    let mut p = 2usize;
    while p * p <= n {
        if is_prime[p] {
            let mut m = p * p;
            while m <= n {
                is_prime[m] = false;
                m += p;
            }
        }
        p += 1;
    }
    is_prime
}

/// Ascending primes `<= n`.
pub fn primes_up_to(n: u64) -> Result<Vec<u64>> {
    if n == 0 {
        return Ok(Vec::new());
    }
    let table = prime_sieve(n)?;
    Ok((2..=n).filter(|&p| table[p as usize]).collect())
}

pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Smallest-prime-factor table on `[0, N]` backing per-`n` factorization.
#[derive(Debug, Clone)]
pub struct FactorTable {
    limit: u64,
    spf: Vec<u32>,
}

impl FactorTable {
    pub fn new(limit: u64) -> Result<Self> {
        check_positive(limit)?;
        if limit > u32::MAX as u64 {
            return Err(Error::InvalidArgument(format!(
                "factor table limited to u32 range, got {limit}"
            )));
        }
        let (mut spf, _) = linear_spf(limit as usize);
        for i in 2..spf.len() {
            if spf[i] == 0 {
                spf[i] = i as u32; // spf[p] = p for primes
            }
        }
        Ok(FactorTable { limit, spf })
    }

    pub fn limit(&self) -> u64 {
        self.limit
    }

    /// Smallest prime dividing `n >= 2`.
    pub fn spf(&self, n: u64) -> u32 {
        assert!((2..=self.limit).contains(&n));
        self.spf[n as usize]
    }

    pub fn is_prime(&self, n: u64) -> bool {
        n >= 2 && self.spf(n) as u64 == n
    }

    /// Prime factorization as ascending `(p, exponent)` pairs.
    pub fn factor(&self, mut n: u64) -> Vec<(u64, u32)> {
        assert!((1..=self.limit).contains(&n));
        let mut out = Vec::new();
        while n > 1 {
            let p = self.spf[n as usize] as u64;
            let mut e = 0;
            while n % p == 0 {
                n /= p;
                e += 1;
            }
            out.push((p, e));
        }
        out
    }

    pub fn omega(&self, n: u64) -> u32 {
        self.factor(n).iter().map(|&(_, e)| e).sum()
    }

    pub fn mobius(&self, n: u64) -> i8 {
        let f = self.factor(n);
        if f.iter().any(|&(_, e)| e > 1) {
            0
        } else if f.len() % 2 == 0 {
            1
        } else {
            -1
        }
    }

    pub fn is_squarefree(&self, n: u64) -> bool {
        self.factor(n).iter().all(|&(_, e)| e == 1)
    }
}

/// A finite or cofinite set of binary digit positions.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DigitSet {
    /// Listed positions (bit indices, 0 = lowest bit).
    pub positions: Vec<u32>,
    /// When true the set is the complement of `positions`.
    pub complement: bool,
}

impl DigitSet {
    /// All binary positions; `digit_parity` then computes `s_2(n) mod 2`.
    pub fn all() -> Self {
        DigitSet { positions: Vec::new(), complement: true }
    }

    pub fn empty() -> Self {
        DigitSet { positions: Vec::new(), complement: false }
    }

    pub fn finite(positions: Vec<u32>) -> Self {
        DigitSet { positions, complement: false }
    }

    pub fn cofinite(excluded: Vec<u32>) -> Self {
        DigitSet { positions: excluded, complement: true }
    }

    fn mask(&self) -> u64 {
        self.positions
            .iter()
            .filter(|&&p| p < 64)
            .fold(0u64, |m, &p| m | (1u64 << p))
    }
}

/// Parity of the binary digits of `n` at the positions in `set`
/// (the Kakutani digit functional `x_A(n)`).
pub fn digit_parity(n: u64, set: &DigitSet) -> u8 {
    let masked = (n & set.mask()).count_ones() & 1;
    if set.complement {
        ((n.count_ones() & 1) ^ masked) as u8
    } else {
        masked as u8
    }
}

/// `gcd` re-exported for modulus checks in callers.
pub fn gcd_u64(a: u64, b: u64) -> u64 {
    gcd(a, b)
}

#[cfg(test)]
mod tests {
    use super::*;

    const FIRST_MU: [i8; 10] = [1, -1, -1, 0, -1, 1, -1, 0, 0, 1];

    #[test]
    fn mobius_first_values() {
        let mu = sieve_mobius(10).unwrap();
        for (i, &m) in FIRST_MU.iter().enumerate() {
            assert_eq!(mu.eval(i as u64 + 1), Complex64::new(f64::from(m), 0.0));
        }
    }

    #[test]
    fn mobius_of_twelve_is_zero() {
        let mu = sieve_mobius(12).unwrap();
        assert_eq!(mu.eval(12).re, 0.0);
    }

    #[test]
    fn zero_range_rejected() {
        assert!(matches!(sieve_mobius(0), Err(Error::InvalidArgument(_))));
        assert!(matches!(sieve_liouville(0), Err(Error::InvalidArgument(_))));
        assert!(matches!(sieve_omega(0), Err(Error::InvalidArgument(_))));
    }

    #[test]
    fn liouville_small() {
        let lam = sieve_liouville(10).unwrap();
        assert_eq!(lam.eval(1).re, 1.0); // Omega(1) = 0
        assert_eq!(lam.eval(8).re, -1.0); // Omega(8) = 3
        assert!(lam.is_pm_one());
    }

    #[test]
    fn omega_small() {
        let om = sieve_omega(20).unwrap();
        assert_eq!(om[1], 0);
        assert_eq!(om[12], 3); // 12 = 2*2*3
        assert_eq!(om[16], 4);
        assert_eq!(om[19], 1);
    }

    #[test]
    fn omega_one_exactly_on_primes() {
        let n = 2000;
        let om = sieve_omega(n).unwrap();
        let ps = prime_sieve(n).unwrap();
        for k in 2..=n as usize {
            assert_eq!(ps[k], om[k] == 1, "n = {k}");
        }
    }

    #[test]
    fn prime_sieve_tiny() {
        let t = prime_sieve(10).unwrap();
        let primes: Vec<usize> = (2..=10).filter(|&p| t[p]).collect();
        assert_eq!(primes, vec![2, 3, 5, 7]);
        assert!(primes_up_to(1).unwrap().is_empty());
    }

    #[test]
    fn segmented_paths_match_linear() {
        let n = 40_000u64;
        let plain_mu = sieve_mobius(n).unwrap();
        let seg_mu = sieve_mobius_with(n, 1_000, 1 << 10).unwrap();
        assert_eq!(plain_mu.signs().unwrap(), seg_mu.signs().unwrap());

        let plain_lam = sieve_liouville(n).unwrap();
        let seg_lam = sieve_liouville_with(n, 1_000, 1 << 10).unwrap();
        assert_eq!(plain_lam.signs().unwrap(), seg_lam.signs().unwrap());

        let plain_ps = prime_sieve(n).unwrap();
        let seg_ps = prime_sieve_with(n, 1_000, 1 << 10).unwrap();
        assert_eq!(plain_ps, seg_ps);
    }

    #[test]
    fn factor_table_basics() {
        let t = FactorTable::new(1000).unwrap();
        assert_eq!(t.spf(97), 97);
        assert_eq!(t.spf(98), 2);
        assert_eq!(t.factor(360), vec![(2, 3), (3, 2), (5, 1)]);
        assert_eq!(t.omega(360), 6);
        assert_eq!(t.mobius(30), -1);
        assert_eq!(t.mobius(12), 0);
        assert!(t.is_squarefree(30));
    }

    #[test]
    fn digit_parity_cases() {
        let all = DigitSet::all();
        assert_eq!(digit_parity(3, &all), 0); // s_2(3) = 2
        assert_eq!(digit_parity(7, &all), 1);
        let empty = DigitSet::empty();
        for n in 0..32 {
            assert_eq!(digit_parity(n, &empty), 0);
        }
        let lowest = DigitSet::finite(vec![0]);
        for n in 0..32 {
            assert_eq!(u64::from(digit_parity(n, &lowest)), n % 2);
        }
    }

    #[test]
    fn arith_seq_guards() {
        assert!(ArithSeq::from_signs(SeqTag::Custom, vec![2]).is_err());
        let too_big = vec![Complex64::new(1.5, 0.0)];
        assert!(ArithSeq::from_complex(SeqTag::Custom, too_big).is_err());
    }
}
