//! Factor enumeration by prefix scanning.

use std::collections::BTreeSet;

use crate::error::{Error, Result};

/// All length-`l` factors occurring in `text` (the first `N_scan` symbols
/// of a fixed point or block product). Scanning a finite prefix can miss
/// rare factors; the scan depth is the documented surrogate for the full
/// language.
pub fn admissible_words(text: &[u8], l: usize) -> Result<BTreeSet<Vec<u8>>> {
    if l == 0 {
        return Err(Error::InvalidArgument("factor length must be positive".into()));
    }
    let mut words = BTreeSet::new();
    if l > text.len() {
        return Ok(words);
    }
    for w in text.windows(l) {
        if !words.contains(w) {
            words.insert(w.to_vec());
        }
    }
    Ok(words)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symbolic::BlockProduct;

    #[test]
    fn thue_morse_two_factors() {
        let text = BlockProduct::thue_morse().prefix(1 << 12).unwrap();
        let words = admissible_words(&text, 2).unwrap();
        assert_eq!(words.len(), 4);
    }

    #[test]
    fn thue_morse_is_cube_free_at_length_three() {
        let text = BlockProduct::thue_morse().prefix(1 << 12).unwrap();
        let words = admissible_words(&text, 3).unwrap();
        assert!(!words.contains(&vec![0, 0, 0]));
        assert!(!words.contains(&vec![1, 1, 1]));
        assert_eq!(words.len(), 6);
    }

    #[test]
    fn single_letters_present() {
        let text = BlockProduct::thue_morse().prefix(64).unwrap();
        let words = admissible_words(&text, 1).unwrap();
        assert_eq!(words, BTreeSet::from([vec![0], vec![1]]));
    }

    #[test]
    fn oversized_length_gives_empty_set() {
        let words = admissible_words(&[0, 1, 1], 5).unwrap();
        assert!(words.is_empty());
        assert!(admissible_words(&[0, 1], 0).is_err());
    }
}
