//! Odometer scales, root rotations on their towers and the rational
//! spectrum.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::symbolic::BlockProduct;
use crate::util::gcd;

/// An odometer scale `n_t = lambda_0 ... lambda_{t-1}`, realized to finite
/// depth (optionally with the last factor repeating).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Odometer {
    lambdas: Vec<u64>,
    repeat_last: bool,
}

impl Odometer {
    pub fn new(lambdas: Vec<u64>, repeat_last: bool) -> Result<Self> {
        if lambdas.is_empty() {
            return Err(Error::InvalidArgument("odometer needs at least one factor".into()));
        }
        if lambdas.iter().any(|&l| l < 2) {
            return Err(Error::InvalidArgument("odometer factors must be >= 2".into()));
        }
        Ok(Odometer { lambdas, repeat_last })
    }

    /// Scale of the odometer under a block product: `lambda_t = |b^t|`.
    pub fn from_block_product(p: &BlockProduct) -> Self {
        Odometer {
            lambdas: p.realized_blocks().iter().map(|b| b.len() as u64).collect(),
            repeat_last: p.repeat_last(),
        }
    }

    /// `n_t = base^t`.
    pub fn from_base(base: u64) -> Result<Self> {
        Odometer::new(vec![base], true)
    }

    pub fn lambda(&self, t: usize) -> Result<u64> {
        if t < self.lambdas.len() {
            Ok(self.lambdas[t])
        } else if self.repeat_last {
            Ok(*self.lambdas.last().expect("nonempty"))
        } else {
            Err(Error::NeedsMoreBlocks { required: t + 1, available: self.lambdas.len() })
        }
    }

    pub fn scale(&self, t: usize) -> Result<u64> {
        let mut n = 1u64;
        for i in 0..t {
            n = n
                .checked_mul(self.lambda(i)?)
                .ok_or_else(|| Error::InvalidArgument(format!("scale n_{t} overflows u64")))?;
        }
        Ok(n)
    }

    pub fn realized_depth(&self) -> usize {
        self.lambdas.len()
    }

    pub fn repeats(&self) -> bool {
        self.repeat_last
    }
}

/// Tower rotation residue `b_t = r / s` in `Z_{n_t}` with its F-norm
/// distance to the nearest exceptional-level anchor `j n_t / k`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RootRotation {
    pub residue: u64,
    /// `min_{0 <= j < k} || b_t - j n_t / k ||` with `||i|| = min(i, n_t - i)`.
    pub margin: u64,
}

/// Modular inverse via the extended Euclid algorithm.
fn mod_inverse(s: u64, n: u64) -> Option<u64> {
    let (mut r0, mut r1) = (n as i128, (s % n) as i128);
    let (mut t0, mut t1) = (0i128, 1i128);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (t0, t1) = (t1, t0 - q * t1);
    }
    if r0 != 1 {
        return None;
    }
    Some(t0.rem_euclid(n as i128) as u64)
}

/// `b_t = r s^{-1} mod n_t` together with the margin of Lemma-style
/// separation from the anchors `j n_t / k`.
pub fn root_rotation(r: u64, s: u64, n_t: u64, k: u64) -> Result<RootRotation> {
    if n_t == 0 {
        return Err(Error::InvalidArgument("tower height must be positive".into()));
    }
    if gcd(s % n_t.max(1), n_t) != 1 {
        return Err(Error::NoInverse { s, modulus: n_t });
    }
    if k == 0 || n_t % k != 0 {
        return Err(Error::InvalidTower { k, n: n_t });
    }
    let inv = mod_inverse(s, n_t).ok_or(Error::NoInverse { s, modulus: n_t })?;
    let residue = ((u128::from(r % n_t) * u128::from(inv)) % u128::from(n_t)) as u64;
    let step = n_t / k;
    let fnorm = |i: u64| i.min(n_t - i);
    let margin = (0..k)
        .map(|j| {
            let anchor = j * step;
            let diff = (residue + n_t - anchor) % n_t;
            fnorm(diff)
        })
        .min()
        .expect("k >= 1");
    Ok(RootRotation { residue, margin })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpectrumReport {
    /// Primes dividing some `n_t`, `1 <= t <= t_max`.
    pub primes: BTreeSet<u64>,
    /// True when the scale continues past the examined depth.
    pub truncated: bool,
}

/// Rational spectrum `Spec(T) = {p prime : p | n_t for some t}`, examined
/// up to depth `t_max`. A repeating last factor adds no primes beyond the
/// realized ones, so only an unexamined explicit factor marks truncation.
pub fn spec_rational(od: &Odometer, t_max: usize) -> SpectrumReport {
    let mut primes = BTreeSet::new();
    let examined = t_max.min(od.realized_depth());
    for t in 0..examined {
        let mut l = od.lambda(t).expect("within realized depth");
        let mut p = 2u64;
        while p * p <= l {
            if l % p == 0 {
                primes.insert(p);
                while l % p == 0 {
                    l /= p;
                }
            }
            p += 1;
        }
        if l > 1 {
            primes.insert(l);
        }
    }
    SpectrumReport { primes, truncated: t_max < od.realized_depth() }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identity_rotation() {
        for n in [4u64, 10, 1024] {
            let rot = root_rotation(1, 1, n, 1).unwrap();
            assert_eq!(rot.residue, 1);
            assert_eq!(rot.margin, 1);
        }
    }

    #[test]
    fn three_fifths_mod_1024() {
        let rot = root_rotation(3, 5, 1024, 1).unwrap();
        assert_eq!(rot.residue, 615);
        assert_eq!(5 * 615 % 1024, 3);
    }

    #[test]
    fn inverse_identity_always_holds() {
        for t in 3..20u32 {
            let n = 2u64.pow(t);
            let rot = root_rotation(3, 5, n, 1).unwrap();
            assert_eq!(
                (u128::from(rot.residue) * 5) % u128::from(n),
                3,
                "s b_t = r mod n_t"
            );
            assert!(rot.margin <= n / 2);
        }
    }

    #[test]
    fn rotation_errors() {
        assert!(matches!(root_rotation(3, 2, 8, 1), Err(Error::NoInverse { .. })));
        assert!(matches!(root_rotation(3, 5, 8, 3), Err(Error::InvalidTower { .. })));
    }

    #[test]
    fn margin_uses_all_anchors() {
        // n = 12, k = 3 anchors {0, 4, 8}; b = 5 -> distances 5, 1, 3
        let rot = root_rotation(5, 1, 12, 3).unwrap();
        assert_eq!(rot.residue, 5);
        assert_eq!(rot.margin, 1);
    }

    #[test]
    fn dyadic_spectrum() {
        let od = Odometer::from_base(2).unwrap();
        let rep = spec_rational(&od, 20);
        assert_eq!(rep.primes, BTreeSet::from([2]));
        assert!(!rep.truncated);
    }

    #[test]
    fn six_adic_spectrum() {
        let od = Odometer::from_base(6).unwrap();
        let rep = spec_rational(&od, 5);
        assert_eq!(rep.primes, BTreeSet::from([2, 3]));
    }

    #[test]
    fn factorial_scale_truncates() {
        // lambda_t = t + 2 gives n_t = (t+1)!; examine 9 of 11 factors
        let od = Odometer::new((2..=12).collect(), false).unwrap();
        let rep = spec_rational(&od, 9);
        assert_eq!(rep.primes, BTreeSet::from([2, 3, 5, 7]));
        assert!(rep.truncated);

        let full = spec_rational(&od, 11);
        assert_eq!(full.primes, BTreeSet::from([2, 3, 5, 7, 11]));
        assert!(!full.truncated);
    }

    #[test]
    fn odometer_scale_divides_next() {
        let p = BlockProduct::new(vec![vec![0, 1], vec![0, 0, 1]], true).unwrap();
        let od = Odometer::from_block_product(&p);
        for t in 0..8 {
            let a = od.scale(t).unwrap();
            let b = od.scale(t + 1).unwrap();
            assert_eq!(b % a, 0);
        }
    }
}
