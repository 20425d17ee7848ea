//! Generalized Morse sequences: block products, Toeplitz derivation,
//! Morse-cocycle level values and the Kakutani regrouping witness.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

fn check_bits(name: &str, word: &[u8]) -> Result<()> {
    if word.iter().any(|&b| b > 1) {
        return Err(Error::InvalidArgument(format!("{name} is not a 0/1 word")));
    }
    Ok(())
}

/// Block product `B x C := (B + C(0))(B + C(1)) ... (B + C(|C|-1))`, the
/// addition taken mod 2 coordinatewise. The result has length `|B| * |C|`.
pub fn block_product(b: &[u8], c: &[u8]) -> Result<Vec<u8>> {
    if b.is_empty() || c.is_empty() {
        return Err(Error::InvalidArgument("block product of an empty word".into()));
    }
    check_bits("left factor", b)?;
    check_bits("right factor", c)?;
    let mut out = Vec::with_capacity(b.len() * c.len());
    for &shift in c {
        out.extend(b.iter().map(|&x| x ^ shift));
    }
    Ok(out)
}

/// Adjacent-XOR derivative `x_hat(n) = x(n) + x(n+1) mod 2`; one symbol
/// shorter than the input.
pub fn toeplitz_derive(x: &[u8]) -> Result<Vec<u8>> {
    if x.len() < 2 {
        return Err(Error::InvalidArgument(
            "toeplitz derivative needs at least 2 symbols".into(),
        ));
    }
    check_bits("input", x)?;
    Ok(x.windows(2).map(|w| w[0] ^ w[1]).collect())
}

/// A sequence of `{0,1}` blocks `b^0, b^1, ...` with `b^t(0) = 0` defining
/// the generalized Morse sequence `x = b^0 x b^1 x ...` and the odometer
/// scale `n_t = |b^0| ... |b^{t-1}|`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BlockProduct {
    blocks: Vec<Vec<u8>>,
    /// When set, the last block repeats forever.
    repeat_last: bool,
}

impl BlockProduct {
    pub fn new(blocks: Vec<Vec<u8>>, repeat_last: bool) -> Result<Self> {
        if blocks.is_empty() {
            return Err(Error::InvalidArgument("block product needs at least one block".into()));
        }
        for (t, b) in blocks.iter().enumerate() {
            check_bits("block", b)?;
            if b.len() < 2 {
                return Err(Error::InvalidArgument(format!(
                    "block {t} has length {} < 2",
                    b.len()
                )));
            }
            if b[0] != 0 {
                return Err(Error::InvalidArgument(format!("block {t} does not start with 0")));
            }
        }
        Ok(BlockProduct { blocks, repeat_last })
    }

    /// The Thue–Morse product: `b^t = 01` for every `t`.
    pub fn thue_morse() -> Self {
        BlockProduct { blocks: vec![vec![0, 1]], repeat_last: true }
    }

    pub fn repeat_last(&self) -> bool {
        self.repeat_last
    }

    pub fn realized_blocks(&self) -> &[Vec<u8>] {
        &self.blocks
    }

    pub fn block(&self, t: usize) -> Result<&[u8]> {
        if t < self.blocks.len() {
            Ok(&self.blocks[t])
        } else if self.repeat_last {
            Ok(self.blocks.last().expect("nonempty"))
        } else {
            Err(Error::NeedsMoreBlocks { required: t + 1, available: self.blocks.len() })
        }
    }

    /// `lambda_t = |b^t|`.
    pub fn lambda(&self, t: usize) -> Result<u64> {
        Ok(self.block(t)?.len() as u64)
    }

    /// `n_t = lambda_0 ... lambda_{t-1}` with `n_0 = 1`.
    pub fn scale(&self, t: usize) -> Result<u64> {
        let mut n = 1u64;
        for i in 0..t {
            n = n
                .checked_mul(self.lambda(i)?)
                .ok_or_else(|| Error::InvalidArgument(format!("scale n_{t} overflows u64")))?;
        }
        Ok(n)
    }

    /// Smallest depth `T` with `n_T >= n`.
    pub fn depth_for(&self, n: u64) -> Result<usize> {
        let mut acc = 1u64;
        let mut t = 0usize;
        while acc < n {
            acc = acc
                .checked_mul(self.lambda(t)?)
                .ok_or_else(|| Error::InvalidArgument("scale overflows u64".into()))?;
            t += 1;
        }
        Ok(t)
    }

    /// First `n` symbols of the infinite product; equals the prefix of
    /// `b^0 x ... x b^{T-1}` for the first `T` with `n_T >= n`.
    pub fn prefix(&self, n: u64) -> Result<Vec<u8>> {
        if n == 0 {
            return Err(Error::InvalidArgument("prefix length must be positive".into()));
        }
        let depth = self.depth_for(n)?;
        let mut acc = self.product_to(depth)?;
        acc.truncate(n as usize);
        Ok(acc)
    }

    /// `c_t = b^0 x ... x b^{t-1}` (the length-`n_t` prefix), `c_0 = 0`.
    pub fn product_to(&self, t: usize) -> Result<Vec<u8>> {
        let mut acc = vec![0u8];
        for i in 0..t {
            acc = block_product(&acc, self.block(i)?)?;
        }
        Ok(acc)
    }

    /// Morse-cocycle values on the `n_t` levels of the depth-`t` tower:
    /// level `i < n_t - 1` carries the derived value `c_t_hat(i)`, the top
    /// level is undetermined (`None`). When block `b^t` is available the
    /// report also carries the tower-crossing values
    /// `c_{t+1}_hat(i n_t - 1) = b^t(i-1) + b^t(i) + c_t(n_t - 1)` for
    /// `1 <= i < lambda_t`.
    pub fn cocycle_levels(&self, t: usize) -> Result<CocycleLevels> {
        if t == 0 {
            return Err(Error::InvalidArgument("tower depth t must be >= 1".into()));
        }
        let c_t = self.product_to(t)?;
        let n_t = c_t.len();
        let mut levels: Vec<Option<u8>> = Vec::with_capacity(n_t);
        for i in 0..n_t - 1 {
            levels.push(Some(c_t[i] ^ c_t[i + 1]));
        }
        levels.push(None);
        let crossings = match self.block(t) {
            Ok(b) => {
                let top = c_t[n_t - 1];
                Some((1..b.len()).map(|i| b[i - 1] ^ b[i] ^ top).collect())
            }
            Err(_) => None,
        };
        Ok(CocycleLevels { levels, crossings })
    }

    /// Regroup a prefix of the blocks: `grouping[j]` consecutive original
    /// blocks are multiplied into the new block `j`. Blocks beyond the
    /// grouped prefix are kept as they are; the generated sequence is
    /// unchanged.
    pub fn regroup(&self, grouping: &[usize]) -> Result<BlockProduct> {
        if grouping.iter().any(|&g| g == 0) {
            return Err(Error::InvalidArgument("regrouping with an empty group".into()));
        }
        let needed: usize = grouping.iter().sum();
        if needed > self.blocks.len() {
            return Err(Error::NeedsMoreBlocks { required: needed, available: self.blocks.len() });
        }
        let mut new_blocks = Vec::new();
        let mut pos = 0usize;
        for &g in grouping {
            let mut acc = self.blocks[pos].clone();
            for b in &self.blocks[pos + 1..pos + g] {
                acc = block_product(&acc, b)?;
            }
            new_blocks.push(acc);
            pos += g;
        }
        new_blocks.extend(self.blocks[pos..].iter().cloned());
        BlockProduct::new(new_blocks, self.repeat_last)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CocycleLevels {
    /// One entry per tower level; `None` marks the undetermined top level.
    pub levels: Vec<Option<u8>>,
    /// Tower-crossing values from the next block, when realized.
    pub crossings: Option<Vec<u8>>,
}

/// One regrouped block of the Kakutani pairing together with its derived
/// word and whether that word starts with `101` or `010`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PcWitness {
    /// Inclusive range of original block indices merged into this group.
    pub start_block: usize,
    pub end_block: usize,
    pub product: Vec<u8>,
    pub derived: Vec<u8>,
    pub canonical: bool,
}

/// The regrouping witness for Kakutani products (`b^t` equal to `00` or
/// `01`): walk left to right, each group running from the current block to
/// the next `01`. The two-block groups `01 x 01 = 0110` and
/// `00 x 01 = 0011` derive to `101` / `010` words and are flagged
/// canonical. Trailing blocks with no closing `01` are not reported.
pub fn pc_witness_kakutani(p: &BlockProduct) -> Result<Vec<PcWitness>> {
    let zz = vec![0u8, 0];
    let zo = vec![0u8, 1];
    for (t, b) in p.realized_blocks().iter().enumerate() {
        if *b != zz && *b != zo {
            return Err(Error::InvalidArgument(format!(
                "block {t} is not 00 or 01; the Kakutani pairing does not apply"
            )));
        }
    }
    if !p.realized_blocks().iter().any(|b| *b == zo) {
        return Err(Error::WitnessExhausted(
            "no 01 block in the realized range".into(),
        ));
    }
    let blocks = p.realized_blocks();
    let mut out = Vec::new();
    let mut i = 0usize;
    while i < blocks.len() {
        // find the next 01 at index > i, or at i+1 for the plain pairing
        let close = (i + 1..blocks.len()).find(|&j| blocks[j] == zo);
        let Some(j) = close else { break };
        let mut product = blocks[i].clone();
        for b in &blocks[i + 1..=j] {
            product = block_product(&product, b)?;
        }
        let derived = toeplitz_derive(&product)?;
        let canonical = derived.starts_with(&[1, 0, 1]) || derived.starts_with(&[0, 1, 0]);
        out.push(PcWitness { start_block: i, end_block: j, product, derived, canonical });
        i = j + 1;
    }
    Ok(out)
}
