//! Constant-length substitutions and their column combinatorics.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A substitution `theta: A -> A^q` of constant length `q >= 2` over a
/// finite alphabet with at least two letters. Letters are stored as `u8`
/// indices into `alphabet`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Substitution {
    alphabet: Vec<char>,
    images: Vec<Vec<u8>>,
    length: usize,
}

impl Substitution {
    pub fn new(alphabet: Vec<char>, images: Vec<Vec<u8>>) -> Result<Self> {
        if alphabet.len() < 2 {
            return Err(Error::InvalidArgument("alphabet needs at least 2 letters".into()));
        }
        if alphabet.len() > u8::MAX as usize {
            return Err(Error::InvalidArgument("alphabet too large".into()));
        }
        if images.len() != alphabet.len() {
            return Err(Error::InvalidArgument("one image per letter required".into()));
        }
        let length = images[0].len();
        if length < 2 {
            return Err(Error::InvalidArgument("substitution length must be >= 2".into()));
        }
        for (a, img) in images.iter().enumerate() {
            if img.len() != length {
                return Err(Error::InvalidArgument(format!(
                    "image of letter {} has length {}, expected {length}",
                    alphabet[a],
                    img.len()
                )));
            }
            if let Some(&bad) = img.iter().find(|&&l| l as usize >= alphabet.len()) {
                return Err(Error::InvalidArgument(format!(
                    "image of letter {} uses letter index {bad} outside the alphabet",
                    alphabet[a]
                )));
            }
        }
        Ok(Substitution { alphabet, images, length })
    }

    /// Build from `(letter, image-string)` rules; the alphabet is the rule
    /// letters in order.
    pub fn from_rules(rules: &[(char, &str)]) -> Result<Self> {
        let alphabet: Vec<char> = rules.iter().map(|&(c, _)| c).collect();
        let index = |c: char| -> Result<u8> {
            alphabet
                .iter()
                .position(|&a| a == c)
                .map(|i| i as u8)
                .ok_or_else(|| Error::InvalidArgument(format!("letter {c:?} not in alphabet")))
        };
        let images = rules
            .iter()
            .map(|&(_, img)| img.chars().map(index).collect::<Result<Vec<u8>>>())
            .collect::<Result<Vec<_>>>()?;
        Substitution::new(alphabet, images)
    }

    /// `0 -> 01, 1 -> 10`.
    pub fn thue_morse() -> Self {
        Substitution::from_rules(&[('0', "01"), ('1', "10")]).expect("valid rule")
    }

    /// The standard 4-letter Rudin–Shapiro rule
    /// `a -> ab, b -> ac, c -> db, d -> dc`.
    pub fn rudin_shapiro() -> Self {
        Substitution::from_rules(&[('a', "ab"), ('b', "ac"), ('c', "db"), ('d', "dc")])
            .expect("valid rule")
    }

    pub fn alphabet(&self) -> &[char] {
        &self.alphabet
    }

    pub fn alphabet_size(&self) -> usize {
        self.alphabet.len()
    }

    /// The constant image length `q`.
    pub fn length(&self) -> usize {
        self.length
    }

    pub fn image(&self, letter: u8) -> &[u8] {
        &self.images[letter as usize]
    }

    pub fn letter_index(&self, c: char) -> Option<u8> {
        self.alphabet.iter().position(|&a| a == c).map(|i| i as u8)
    }

    /// Apply the substitution to a word.
    pub fn apply(&self, word: &[u8]) -> Vec<u8> {
        let mut out = Vec::with_capacity(word.len() * self.length);
        for &a in word {
            out.extend_from_slice(self.image(a));
        }
        out
    }

    /// First `n` symbols of `lim theta^t(seed)`; the seed letter must
    /// start its own image for the iteration to converge.
    pub fn fixed_point(&self, seed: u8, n: u64) -> Result<Vec<u8>> {
        if n == 0 {
            return Err(Error::InvalidArgument("prefix length must be positive".into()));
        }
        if seed as usize >= self.alphabet.len() {
            return Err(Error::InvalidArgument(format!("seed letter index {seed} out of range")));
        }
        if self.image(seed)[0] != seed {
            return Err(Error::NotAFixedPointSeed { letter: self.alphabet[seed as usize] });
        }
        let mut word = vec![seed];
        while (word.len() as u64) < n {
            word = self.apply(&word);
        }
        word.truncate(n as usize);
        Ok(word)
    }

    /// True iff some power of the incidence matrix is entrywise positive,
    /// checked up to exponent `#A^2`.
    pub fn is_primitive(&self) -> bool {
        let k = self.alphabet.len();
        let full: u64 = if k == 64 { u64::MAX } else { (1u64 << k) - 1 };
        // rows[a] = set of letters occurring in theta(a)
        let base: Vec<u64> = self
            .images
            .iter()
            .map(|img| img.iter().fold(0u64, |m, &l| m | (1 << l)))
            .collect();
        let mut power = base.clone();
        for _ in 0..k * k {
            if power.iter().all(|&row| row == full) {
                return true;
            }
            power = (0..k)
                .map(|a| {
                    let mut row = 0u64;
                    let mut reach = power[a];
                    while reach != 0 {
                        let b = reach.trailing_zeros() as usize;
                        reach &= reach - 1;
                        row |= base[b];
                    }
                    row
                })
                .collect();
        }
        power.iter().all(|&row| row == full)
    }

    /// True iff every column map `tau_i(a) = theta(a)(i)` permutes the
    /// alphabet.
    pub fn is_bijective(&self) -> bool {
        let k = self.alphabet.len();
        (0..self.length).all(|i| {
            let mut seen = vec![false; k];
            self.images.iter().all(|img| {
                let l = img[i] as usize;
                !std::mem::replace(&mut seen[l], true)
            })
        })
    }

    /// Kamae's column number
    /// `c(theta) = min_{1 <= t <= t_max} min_l #{theta^t(a)(l) : a in A}`,
    /// computed by driving the set system of composed column maps rather
    /// than materializing `theta^t`. The per-level minimum is nonincreasing
    /// in `t`; the search stops early once it reaches 1 or is stable over
    /// two consecutive levels, with `t_max` as the hard cap.
    pub fn column_number(&self, t_max: u32) -> Result<ColumnWitness> {
        if t_max == 0 {
            return Err(Error::InvalidArgument("t_max must be positive".into()));
        }
        let k = self.alphabet.len();
        let q = self.length;
        let full: u64 = if k == 64 { u64::MAX } else { (1u64 << k) - 1 };

        let apply_column = |mask: u64, i: usize| -> u64 {
            let mut out = 0u64;
            let mut rest = mask;
            while rest != 0 {
                let a = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                out |= 1 << self.images[a][i];
            }
            out
        };

        // level state: composed column image sets with their first
        // (smallest) witness position, positions read as base-q digits
        let mut level: BTreeMap<u128, u64> = BTreeMap::new(); // position -> mask
        for i in 0..q {
            level.entry(i as u128).or_insert_with(|| apply_column(full, i));
        }

        let mut best: Option<ColumnWitness> = None;
        let mut prev_min: Option<u32> = None;
        for t in 1..=t_max {
            // deduplicate masks, keeping the smallest witness position
            let mut seen: BTreeMap<u64, u128> = BTreeMap::new();
            let mut level_min = u32::MAX;
            for (&pos, &mask) in &level {
                seen.entry(mask).or_insert(pos);
                let card = mask.count_ones();
                level_min = level_min.min(card);
                if best.map_or(true, |b| card < b.value) {
                    best = Some(ColumnWitness { value: card, t, position: pos });
                }
            }
            // stop on the synchronized case or two stable levels
            if level_min == 1 || prev_min == Some(level_min) {
                break;
            }
            prev_min = Some(level_min);
            if t == t_max {
                break;
            }
            let mut next: BTreeMap<u128, u64> = BTreeMap::new();
            for (&mask, &pos) in &seen {
                for i in 0..q {
                    let new_pos = pos * q as u128 + i as u128;
                    let new_mask = apply_column(mask, i);
                    next.entry(new_pos).or_insert(new_mask);
                }
            }
            level = next;
        }
        Ok(best.expect("at least one level explored"))
    }
}

/// Column-number search result: the minimal column cardinality and the
/// first `(t, position)` attaining it.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ColumnWitness {
    pub value: u32,
    pub t: u32,
    /// Position `l` within `theta^t`, i.e. `0 <= l < q^t`.
    pub position: u128,
}
