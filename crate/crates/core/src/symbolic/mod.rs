//! Zero-entropy symbolic systems: generalized Morse sequences, Toeplitz
//! derivatives, constant-length substitutions, odometer scales and the
//! Morse-cocycle combinatorics living over them.

mod language;
mod morse;
mod odometer;
mod substitution;

pub use language::admissible_words;
pub use morse::{block_product, pc_witness_kakutani, toeplitz_derive, BlockProduct,
                CocycleLevels, PcWitness};
pub use odometer::{root_rotation, spec_rational, Odometer, RootRotation, SpectrumReport};
pub use substitution::{ColumnWitness, Substitution};

use crate::error::{Error, Result};

/// Parse a `{0,1}` word from its string form, e.g. `"0110"`.
pub fn parse_bits(s: &str) -> Result<Vec<u8>> {
    s.chars()
        .map(|c| match c {
            '0' => Ok(0u8),
            '1' => Ok(1u8),
            other => Err(Error::InvalidArgument(format!(
                "expected a 0/1 word, found {other:?}"
            ))),
        })
        .collect()
}

pub fn bits_to_string(bits: &[u8]) -> String {
    bits.iter().map(|&b| if b == 0 { '0' } else { '1' }).collect()
}
