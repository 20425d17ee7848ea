//! Adversarial strong-MOMO search: per block, maximize the inner sum over
//! admissible words of the scanned language.
//!
//! The supremum in the strong MOMO definition runs over all point
//! sequences; a finite search only ever certifies a lower bound, and the
//! greedy fallback is a lower bound of the exhaustive maximum in turn.

use std::collections::BTreeSet;

use num_complex::Complex64;

use crate::arith::ArithSeq;
use crate::averages::BlockPartition;
use crate::error::{Error, Result};

/// Chosen word and attained inner sum for one block.
#[derive(Debug, Clone, PartialEq)]
pub struct BlockWitness {
    pub word: Vec<u8>,
    pub inner_abs: f64,
    /// False when this block fell back to the greedy beam search.
    pub exhaustive: bool,
}

#[derive(Debug, Clone, PartialEq)]
pub struct AdversarialReport {
    /// `(1/b_K) sum_k max_w |S_k(w)|`; a lower bound for the supremum over
    /// orbits.
    pub value: f64,
    pub witnesses: Vec<BlockWitness>,
    /// True when every block was searched exhaustively.
    pub exhaustive: bool,
}

/// The classic window observable `f(z) = (-1)^{z(0)}`.
pub fn first_symbol_sign(window: &[u8]) -> Complex64 {
    if window[0] == 0 {
        Complex64::new(1.0, 0.0)
    } else {
        Complex64::new(-1.0, 0.0)
    }
}

/// Maximize `|sum_j f(w[j..j+width]) u(b_k + j)|` per block over words `w`
/// admissible in `text` (length `gap + width - 1`), exhaustively when the
/// factor count fits in `beam`, otherwise by beam search of that width.
pub fn adversarial_strong_momo<F>(
    text: &[u8],
    width: usize,
    f: F,
    u: &ArithSeq,
    cuts: &BlockPartition,
    beam: usize,
) -> Result<AdversarialReport>
where
    F: Fn(&[u8]) -> Complex64,
{
    if width == 0 {
        return Err(Error::InvalidArgument("window width must be positive".into()));
    }
    if beam == 0 {
        return Err(Error::InvalidArgument("beam width must be positive".into()));
    }
    if u.len() < cuts.total() {
        return Err(Error::insufficient("arithmetic sequence", cuts.total(), u.len()));
    }
    let mut witnesses = Vec::with_capacity(cuts.count());
    let mut total = 0.0f64;
    let mut all_exhaustive = true;
    for k in 0..cuts.count() {
        let (lo, hi) = cuts.block(k);
        let gap = (hi - lo) as usize;
        let word_len = gap + width - 1;
        if text.len() < word_len {
            return Err(Error::insufficient("language scan", word_len as u64, text.len() as u64));
        }
        let factors: BTreeSet<&[u8]> = text.windows(word_len).collect();
        let witness = if factors.len() <= beam {
            exhaustive_block(&factors, width, &f, u, lo, gap)
        } else {
            all_exhaustive = false;
            greedy_block(text, word_len, width, &f, u, lo, beam)
        };
        total += witness.inner_abs;
        witnesses.push(witness);
    }
    Ok(AdversarialReport {
        value: total / cuts.total() as f64,
        witnesses,
        exhaustive: all_exhaustive,
    })
}

fn inner_sum<F>(word: &[u8], width: usize, f: &F, u: &ArithSeq, lo: u64, gap: usize) -> Complex64
where
    F: Fn(&[u8]) -> Complex64,
{
    let mut s = Complex64::new(0.0, 0.0);
    for j in 0..gap {
        s += f(&word[j..j + width]) * u.entry(lo as usize + j);
    }
    s
}

fn exhaustive_block<F>(
    factors: &BTreeSet<&[u8]>,
    width: usize,
    f: &F,
    u: &ArithSeq,
    lo: u64,
    gap: usize,
) -> BlockWitness
where
    F: Fn(&[u8]) -> Complex64,
{
    let mut best_word: &[u8] = factors.iter().next().expect("nonempty text window set");
    let mut best_abs = -1.0f64;
    for &w in factors {
        let abs = inner_sum(w, width, f, u, lo, gap).norm();
        if abs > best_abs {
            best_abs = abs;
            best_word = w;
        }
    }
    BlockWitness { word: best_word.to_vec(), inner_abs: best_abs, exhaustive: true }
}

/// One beam-search candidate: a factor of the text tracked through the set
/// of its occurrence positions; the word itself is `text[pos..pos+len]`
/// for any tracked `pos`.
struct Candidate {
    positions: Vec<u32>,
    partial: Complex64,
}

fn greedy_block<F>(
    text: &[u8],
    word_len: usize,
    width: usize,
    f: &F,
    u: &ArithSeq,
    lo: u64,
    beam: usize,
) -> BlockWitness
where
    F: Fn(&[u8]) -> Complex64,
{
    // every full-window start admits the empty prefix
    let mut cands = vec![Candidate {
        positions: (0..(text.len() - word_len + 1) as u32).collect(),
        partial: Complex64::new(0.0, 0.0),
    }];
    for len in 0..word_len {
        let mut next: Vec<Candidate> = Vec::new();
        for cand in &cands {
            // group occurrences by the next symbol
            let mut by_symbol: std::collections::BTreeMap<u8, Vec<u32>> = Default::default();
            for &p in &cand.positions {
                by_symbol.entry(text[p as usize + len]).or_default().push(p);
            }
            for (_, positions) in by_symbol {
                let new_len = len + 1;
                let rep = positions[0] as usize;
                let mut partial = cand.partial;
                if new_len >= width {
                    let j = new_len - width;
                    partial += f(&text[rep + j..rep + j + width]) * u.entry(lo as usize + j);
                }
                next.push(Candidate { positions, partial });
            }
        }
        next.sort_by(|a, b| {
            b.partial
                .norm()
                .total_cmp(&a.partial.norm())
                .then_with(|| {
                    let wa = &text[a.positions[0] as usize..a.positions[0] as usize + len + 1];
                    let wb = &text[b.positions[0] as usize..b.positions[0] as usize + len + 1];
                    wa.cmp(wb)
                })
        });
        next.truncate(beam);
        cands = next;
    }
    let best = &cands[0];
    let rep = best.positions[0] as usize;
    BlockWitness {
        word: text[rep..rep + word_len].to_vec(),
        inner_abs: best.partial.norm(),
        exhaustive: false,
    }
}
