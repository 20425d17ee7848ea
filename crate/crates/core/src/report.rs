//! Named statistic values with the parameters needed to reproduce them.

use num_complex::Complex64;
use serde_json::Value;

/// One computed statistic: its name, value and every parameter needed to
/// recompute it bit-exactly (N, M, H, cuts, seeds, ...). `params` is a
/// JSON object; serde_json keeps object keys sorted, so its string form
/// is deterministic.
#[derive(Debug, Clone, PartialEq)]
pub struct AverageReport {
    pub statistic: String,
    pub value: Complex64,
    pub n_terms: u64,
    pub params: Value,
}

impl AverageReport {
    pub fn real(statistic: impl Into<String>, value: f64, n_terms: u64, params: Value) -> Self {
        AverageReport {
            statistic: statistic.into(),
            value: Complex64::new(value, 0.0),
            n_terms,
            params,
        }
    }

    pub fn complex(
        statistic: impl Into<String>,
        value: Complex64,
        n_terms: u64,
        params: Value,
    ) -> Self {
        AverageReport { statistic: statistic.into(), value, n_terms, params }
    }

    pub fn params_json(&self) -> String {
        self.params.to_string()
    }

    /// FNV-1a hash over the statistic name, parameters and the exact value
    /// bits; equal hashes across runs certify bit-exact reproduction.
    pub fn reproducibility_hash(&self) -> u64 {
        let mut h = Fnv1a::new();
        h.write(self.statistic.as_bytes());
        h.write(self.params_json().as_bytes());
        h.write(&self.value.re.to_bits().to_le_bytes());
        h.write(&self.value.im.to_bits().to_le_bytes());
        h.write(&self.n_terms.to_le_bytes());
        h.finish()
    }
}

struct Fnv1a(u64);

impl Fnv1a {
    fn new() -> Self {
        Fnv1a(0xCBF2_9CE4_8422_2325)
    }

    fn write(&mut self, bytes: &[u8]) {
        for &b in bytes {
            self.0 ^= u64::from(b);
            self.0 = self.0.wrapping_mul(0x0000_0100_0000_01B3);
        }
    }

    fn finish(&self) -> u64 {
        self.0
    }
}
