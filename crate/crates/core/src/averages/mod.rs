//! Orthogonality statistics over block partitions and short intervals.
//!
//! Every statistic pairs its input streams positionally (entry `j` with
//! entry `j`) and accumulates in ascending index order, so results are
//! bit-exactly reproducible. When both inputs carry the compact sign
//! encoding the inner sums are exact integers.

mod adversarial;

pub use adversarial::{adversarial_strong_momo, first_symbol_sign, AdversarialReport,
                      BlockWitness};

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::arith::ArithSeq;
use crate::error::{Error, Result};
use crate::util::unit_phase;

/// Strictly increasing cut points `0 = b_0 < b_1 < ... < b_K` delimiting
/// the moving-orbit blocks.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockPartition {
    cuts: Vec<u64>,
}

impl BlockPartition {
    pub fn new(cuts: Vec<u64>) -> Result<Self> {
        if cuts.len() < 2 {
            return Err(Error::InvalidArgument("partition needs at least one block".into()));
        }
        if cuts[0] != 0 {
            return Err(Error::InvalidArgument("partition must start at b_0 = 0".into()));
        }
        if cuts.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::InvalidArgument("cut points must be strictly increasing".into()));
        }
        Ok(BlockPartition { cuts })
    }

    pub fn cuts(&self) -> &[u64] {
        &self.cuts
    }

    /// Number of blocks `K`.
    pub fn count(&self) -> usize {
        self.cuts.len() - 1
    }

    /// `b_K`, the total length.
    pub fn total(&self) -> u64 {
        *self.cuts.last().expect("nonempty")
    }

    pub fn block(&self, k: usize) -> (u64, u64) {
        (self.cuts[k], self.cuts[k + 1])
    }

    pub fn gaps(&self) -> impl Iterator<Item = u64> + '_ {
        self.cuts.windows(2).map(|w| w[1] - w[0])
    }

    /// `(min gap, max gap)` so tests can assert divergence trends.
    pub fn gap_bounds(&self) -> (u64, u64) {
        let mut min = u64::MAX;
        let mut max = 0;
        for g in self.gaps() {
            min = min.min(g);
            max = max.max(g);
        }
        (min, max)
    }
}

/// Cut-point families realizing `b_{k+1} - b_k -> infinity`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case", deny_unknown_fields)]
pub enum CutSpec {
    /// `b_k = floor(c k^gamma)`, deduplicated; needs `gamma > 1`.
    Power { c: f64, gamma: f64 },
    /// Gaps `b_{k+1} - b_k = c (k + 1)`.
    LinearGrowing { c: u64 },
}

/// Generate cut points up to (at most) `limit`.
pub fn make_cuts(spec: CutSpec, limit: u64) -> Result<BlockPartition> {
    match spec {
        CutSpec::Power { c, gamma } => {
            if gamma <= 1.0 {
                return Err(Error::GapsNotDivergent(format!(
                    "power cuts need gamma > 1, got {gamma}"
                )));
            }
            if !(c >= 1.0) {
                return Err(Error::InvalidArgument(format!("power cuts need c >= 1, got {c}")));
            }
            let mut cuts = vec![0u64];
            let mut k = 1u64;
            loop {
                let value = (c * (k as f64).powf(gamma)).floor();
                if !value.is_finite() || value > limit as f64 {
                    break;
                }
                let v = value as u64;
                if v > *cuts.last().expect("nonempty") {
                    cuts.push(v);
                }
                k += 1;
            }
            BlockPartition::new(cuts)
        }
        CutSpec::LinearGrowing { c } => {
            if c == 0 {
                return Err(Error::InvalidArgument("linear-growing cuts need c >= 1".into()));
            }
            let mut cuts = vec![0u64];
            let mut k = 0u64;
            loop {
                let next = cuts.last().expect("nonempty") + c * (k + 1);
                if next > limit {
                    break;
                }
                cuts.push(next);
                k += 1;
            }
            BlockPartition::new(cuts)
        }
    }
}

#[derive(Debug, Clone)]
enum ObsData {
    Signs(Vec<i8>),
    Complex(Vec<Complex64>),
}

/// A realized observable sequence `f(T^{start + i} x)`, `i < len`, with
/// its sup-norm bound.
#[derive(Debug, Clone)]
pub struct ObservableSeq {
    data: ObsData,
    start: u64,
    sup_bound: f64,
    description: String,
}

impl ObservableSeq {
    pub fn from_signs(values: Vec<i8>, start: u64, description: impl Into<String>) -> Result<Self> {
        if values.iter().any(|v| !matches!(v, -1 | 0 | 1)) {
            return Err(Error::InvalidArgument("sign observable outside {-1,0,1}".into()));
        }
        let sup = if values.iter().any(|&v| v != 0) { 1.0 } else { 0.0 };
        Ok(ObservableSeq {
            data: ObsData::Signs(values),
            start,
            sup_bound: sup,
            description: description.into(),
        })
    }

    pub fn from_complex(
        values: Vec<Complex64>,
        start: u64,
        description: impl Into<String>,
    ) -> Self {
        let sup = values.iter().map(|v| v.norm()).fold(0.0f64, f64::max);
        ObservableSeq {
            data: ObsData::Complex(values),
            start,
            sup_bound: sup,
            description: description.into(),
        }
    }

    pub fn constant(value: Complex64, len: u64, start: u64) -> Self {
        if value.im == 0.0 && (value.re == 0.0 || value.re == 1.0 || value.re == -1.0) {
            let s = value.re as i8;
            ObservableSeq::from_signs(vec![s; len as usize], start, format!("constant {value}"))
                .expect("signs valid")
        } else {
            ObservableSeq::from_complex(vec![value; len as usize], start, format!("constant {value}"))
        }
    }

    /// `(-1)^{bit}` along a 0/1 word.
    pub fn sign_of_bits(bits: &[u8], start: u64, description: impl Into<String>) -> Result<Self> {
        let signs = bits
            .iter()
            .map(|&b| match b {
                0 => Ok(1i8),
                1 => Ok(-1i8),
                other => Err(Error::InvalidArgument(format!("bit {other} in 0/1 word"))),
            })
            .collect::<Result<Vec<i8>>>()?;
        ObservableSeq::from_signs(signs, start, description)
    }

    /// View an arithmetic sequence as the observable it realizes
    /// (start = 1).
    pub fn from_arith(u: &ArithSeq, description: impl Into<String>) -> Self {
        match u.signs() {
            Some(signs) => ObservableSeq::from_signs(signs.to_vec(), 1, description)
                .expect("arith signs valid"),
            None => {
                let values = (0..u.len()).map(|i| u.entry(i as usize)).collect();
                ObservableSeq::from_complex(values, 1, description)
            }
        }
    }

    pub fn len(&self) -> u64 {
        match &self.data {
            ObsData::Signs(v) => v.len() as u64,
            ObsData::Complex(v) => v.len() as u64,
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Literal index of entry 0.
    pub fn start(&self) -> u64 {
        self.start
    }

    pub fn sup_bound(&self) -> f64 {
        self.sup_bound
    }

    pub fn description(&self) -> &str {
        &self.description
    }

    pub fn entry(&self, pos: usize) -> Complex64 {
        match &self.data {
            ObsData::Signs(v) => Complex64::new(f64::from(v[pos]), 0.0),
            ObsData::Complex(v) => v[pos],
        }
    }

    pub fn signs(&self) -> Option<&[i8]> {
        match &self.data {
            ObsData::Signs(v) => Some(v),
            ObsData::Complex(_) => None,
        }
    }

    pub fn is_pm_one(&self) -> bool {
        match &self.data {
            ObsData::Signs(v) => v.iter().all(|&s| s != 0),
            ObsData::Complex(v) => v
                .iter()
                .all(|z| z.im == 0.0 && (z.re == 1.0 || z.re == -1.0)),
        }
    }
}

/// `e^{2 pi i alpha n}` for `n < len`, start index 0.
pub fn rotation_observable(alpha: f64, len: u64) -> ObservableSeq {
    let values: Vec<Complex64> = (0..len).map(|n| unit_phase(alpha, n)).collect();
    ObservableSeq::from_complex(values, 0, format!("rotation alpha={alpha}"))
}

fn need(seq_len: u64, needed: u64, what: &'static str) -> Result<()> {
    if seq_len < needed {
        Err(Error::insufficient(what, needed, seq_len))
    } else {
        Ok(())
    }
}

/// `(1/N) sum_{j < N} a_j u_j` in ascending order.
pub fn sarnak_avg(a: &ObservableSeq, u: &ArithSeq, n: u64) -> Result<Complex64> {
    need(a.len(), n, "observable")?;
    need(u.len(), n, "arithmetic sequence")?;
    let sum = match (a.signs(), u.signs()) {
        (Some(av), Some(uv)) => {
            let mut s = 0i64;
            for j in 0..n as usize {
                s += i64::from(av[j]) * i64::from(uv[j]);
            }
            Complex64::new(s as f64, 0.0)
        }
        _ => {
            let mut s = Complex64::new(0.0, 0.0);
            for j in 0..n as usize {
                s += a.entry(j) * u.entry(j);
            }
            s
        }
    };
    Ok(sum / n as f64)
}

fn check_block_inputs(
    cuts: &BlockPartition,
    blocks: &[ObservableSeq],
    u_len: u64,
    u_need: u64,
) -> Result<()> {
    if blocks.len() != cuts.count() {
        return Err(Error::InvalidArgument(format!(
            "{} block observables supplied for {} blocks",
            blocks.len(),
            cuts.count()
        )));
    }
    need(u_len, u_need, "arithmetic sequence")?;
    for (k, obs) in blocks.iter().enumerate() {
        let (lo, hi) = cuts.block(k);
        need(obs.len(), hi - lo, "block observable")?;
    }
    Ok(())
}

/// Block inner sum `sum_{b_k <= n < b_{k+1}} f_k(n - b_k) u(n)`.
fn block_sum(obs: &ObservableSeq, u: &ArithSeq, lo: u64, hi: u64) -> Complex64 {
    match (obs.signs(), u.signs()) {
        (Some(av), Some(uv)) => {
            let mut s = 0i64;
            for n in lo..hi {
                s += i64::from(av[(n - lo) as usize]) * i64::from(uv[n as usize]);
            }
            Complex64::new(s as f64, 0.0)
        }
        _ => {
            let mut s = Complex64::new(0.0, 0.0);
            for n in lo..hi {
                s += obs.entry((n - lo) as usize) * u.entry(n as usize);
            }
            s
        }
    }
}

/// Block inner sum with `u` sampled along `step * n + offset`.
fn block_sum_progression(
    obs: &ObservableSeq,
    u: &ArithSeq,
    lo: u64,
    hi: u64,
    step: u64,
    offset: u64,
) -> Complex64 {
    match (obs.signs(), u.signs()) {
        (Some(av), Some(uv)) => {
            let mut s = 0i64;
            for n in lo..hi {
                let j = (n - lo) as usize;
                let pos = (step * n + offset) as usize;
                s += i64::from(av[j]) * i64::from(uv[pos]);
            }
            Complex64::new(s as f64, 0.0)
        }
        _ => {
            let mut s = Complex64::new(0.0, 0.0);
            for n in lo..hi {
                let j = (n - lo) as usize;
                let pos = (step * n + offset) as usize;
                s += obs.entry(j) * u.entry(pos);
            }
            s
        }
    }
}

/// The moving-orbit sum
/// `(1/b_K) sum_k sum_{b_k <= n < b_{k+1}} f_k(n - b_k) u(n)`.
pub fn momo_sum(cuts: &BlockPartition, blocks: &[ObservableSeq], u: &ArithSeq) -> Result<Complex64> {
    check_block_inputs(cuts, blocks, u.len(), cuts.total())?;
    let mut total = Complex64::new(0.0, 0.0);
    for k in 0..cuts.count() {
        let (lo, hi) = cuts.block(k);
        total += block_sum(&blocks[k], u, lo, hi);
    }
    Ok(total / cuts.total() as f64)
}

/// Strong MOMO report: the normalized sum of per-block absolute values and
/// the per-block data feeding bad-interval extraction.
#[derive(Debug, Clone, PartialEq)]
pub struct StrongMomo {
    /// `(1/b_K) sum_k |S_k|`.
    pub value: f64,
    /// Raw inner sums `S_k`.
    pub block_sums: Vec<Complex64>,
    /// `z_k = |S_k| / (b_{k+1} - b_k)`, the normalized per-block averages.
    pub per_block_avg: Vec<f64>,
}

/// `(1/b_K) sum_k |sum_{b_k <= n < b_{k+1}} f_k(n - b_k) u(n)|`.
pub fn strong_momo_sum(
    cuts: &BlockPartition,
    blocks: &[ObservableSeq],
    u: &ArithSeq,
) -> Result<StrongMomo> {
    check_block_inputs(cuts, blocks, u.len(), cuts.total())?;
    let k_count = cuts.count();
    let mut block_sums = Vec::with_capacity(k_count);
    let mut per_block_avg = Vec::with_capacity(k_count);
    let mut total = 0.0f64;
    for k in 0..k_count {
        let (lo, hi) = cuts.block(k);
        let s = block_sum(&blocks[k], u, lo, hi);
        let abs = s.norm();
        total += abs;
        per_block_avg.push(abs / (hi - lo) as f64);
        block_sums.push(s);
    }
    Ok(StrongMomo { value: total / cuts.total() as f64, block_sums, per_block_avg })
}

/// The arithmetic-progression variant: `u` sampled along `step * n + offset`
/// (stream positions). With `step = 1`, `offset = 0` the sampled positions
/// coincide with [`strong_momo_sum`] and the results agree bit-exactly.
pub fn ap_strong_momo(
    cuts: &BlockPartition,
    blocks: &[ObservableSeq],
    u: &ArithSeq,
    step: u64,
    offset: u64,
) -> Result<StrongMomo> {
    if step == 0 {
        return Err(Error::InvalidArgument("progression step must be positive".into()));
    }
    if offset >= step {
        return Err(Error::InvalidArgument(format!(
            "offset {offset} must be a residue mod step {step}"
        )));
    }
    let u_need = step * (cuts.total() - 1) + offset + 1;
    check_block_inputs(cuts, blocks, u.len(), u_need)?;
    let k_count = cuts.count();
    let mut block_sums = Vec::with_capacity(k_count);
    let mut per_block_avg = Vec::with_capacity(k_count);
    let mut total = 0.0f64;
    for k in 0..k_count {
        let (lo, hi) = cuts.block(k);
        let s = block_sum_progression(&blocks[k], u, lo, hi, step, offset);
        let abs = s.norm();
        total += abs;
        per_block_avg.push(abs / (hi - lo) as f64);
        block_sums.push(s);
    }
    Ok(StrongMomo { value: total / cuts.total() as f64, block_sums, per_block_avg })
}

/// The three third roots of unity `1, e^{2 pi i/3}, e^{4 pi i/3}`.
pub fn third_roots() -> [Complex64; 3] {
    let half_sqrt3 = 3.0f64.sqrt() / 2.0;
    [
        Complex64::new(1.0, 0.0),
        Complex64::new(-0.5, half_sqrt3),
        Complex64::new(-0.5, -half_sqrt3),
    ]
}

#[derive(Debug, Clone, PartialEq)]
pub struct ConeRotation {
    /// Chosen root of unity per input value.
    pub rotations: Vec<Complex64>,
    /// `e_k c_k`, guaranteed inside the cone `arg in [-pi/3, pi/3]`.
    pub rotated: Vec<Complex64>,
}

/// Rotate each value by a third root of unity into the closed cone around
/// the positive real axis, so `|c| <= 2 Re(e c)`. The rotation maximizing
/// `Re(e c)` is selected; ties keep the smallest index in
/// `{1, e^{2 pi i/3}, e^{4 pi i/3}}`, so boundary cases are deterministic.
pub fn cone_rotate(values: &[Complex64]) -> ConeRotation {
    let roots = third_roots();
    let mut rotations = Vec::with_capacity(values.len());
    let mut rotated = Vec::with_capacity(values.len());
    for &c in values {
        let mut best = 0usize;
        let mut best_re = (roots[0] * c).re;
        for (i, &e) in roots.iter().enumerate().skip(1) {
            let re = (e * c).re;
            if re > best_re {
                best = i;
                best_re = re;
            }
        }
        rotations.push(roots[best]);
        rotated.push(roots[best] * c);
    }
    ConeRotation { rotations, rotated }
}

/// `(1/M) sum_{M <= m < 2M} |(1/H) sum_{m <= h < m+H} a_h u_h|`, every
/// integer window start in `[M, 2M)` (overlapping windows intended).
pub fn short_interval_avg(a: &ObservableSeq, u: &ArithSeq, m: u64, h: u64) -> Result<f64> {
    if m == 0 || h == 0 {
        return Err(Error::InvalidArgument("window parameters must be positive".into()));
    }
    let needed = 2 * m + h - 1;
    need(a.len(), needed, "observable")?;
    need(u.len(), needed, "arithmetic sequence")?;
    let mut acc = 0.0f64;
    match (a.signs(), u.signs()) {
        (Some(av), Some(uv)) => {
            // products are exact integers; prefix sums keep them exact
            let span = (2 * m + h - 1) as usize;
            let mut prefix = vec![0i64; span + 1];
            for j in 0..span {
                prefix[j + 1] = prefix[j] + i64::from(av[j]) * i64::from(uv[j]);
            }
            for start in m..2 * m {
                let inner = prefix[(start + h) as usize] - prefix[start as usize];
                acc += (inner.abs() as f64) / h as f64;
            }
        }
        _ => {
            for start in m..2 * m {
                let mut inner = Complex64::new(0.0, 0.0);
                for j in start..start + h {
                    inner += a.entry(j as usize) * u.entry(j as usize);
                }
                acc += inner.norm() / h as f64;
            }
        }
    }
    Ok(acc / m as f64)
}

/// Short-interval aperiodicity along a progression:
/// `(1/M) sum_{M <= m < 2M} |(1/H) sum_{m <= g < m+H} u(step g + offset)|`
/// (stream positions).
pub fn ap_short_interval(u: &ArithSeq, step: u64, offset: u64, m: u64, window: u64) -> Result<f64> {
    if step == 0 || m == 0 || window == 0 {
        return Err(Error::InvalidArgument("parameters must be positive".into()));
    }
    if offset >= step {
        return Err(Error::InvalidArgument(format!(
            "offset {offset} must be a residue mod step {step}"
        )));
    }
    let last_pos = step * (2 * m + window - 2) + offset;
    need(u.len(), last_pos + 1, "arithmetic sequence")?;
    let mut acc = 0.0f64;
    match u.signs() {
        Some(uv) => {
            let span = (2 * m + window - 1) as usize;
            let mut prefix = vec![0i64; span + 1];
            for g in 0..span {
                prefix[g + 1] = prefix[g] + i64::from(uv[(step * g as u64 + offset) as usize]);
            }
            for start in m..2 * m {
                let inner = prefix[(start + window) as usize] - prefix[start as usize];
                acc += (inner.abs() as f64) / window as f64;
            }
        }
        None => {
            for start in m..2 * m {
                let mut inner = Complex64::new(0.0, 0.0);
                for g in start..start + window {
                    inner += u.entry((step * g + offset) as usize);
                }
                acc += inner.norm() / window as f64;
            }
        }
    }
    Ok(acc / m as f64)
}

/// Per-quadrant deviation averages of Proposition-style window frequencies
/// from 1/4, plus the raw global frequencies over the scanned range.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadrantFreq {
    /// Indexed by `[e][f]` with index 0 for +1 and 1 for -1.
    pub deviations: [[f64; 2]; 2],
    pub global: [[f64; 2]; 2],
    pub m: u64,
    pub h: u64,
}

impl QuadrantFreq {
    pub fn deviation(&self, e: i8, f: i8) -> f64 {
        self.deviations[usize::from(e < 0)][usize::from(f < 0)]
    }

    pub fn global_freq(&self, e: i8, f: i8) -> f64 {
        self.global[usize::from(e < 0)][usize::from(f < 0)]
    }

    pub fn max_deviation(&self) -> f64 {
        self.deviations
            .iter()
            .flatten()
            .fold(f64::NEG_INFINITY, |a, &b| a.max(b))
    }
}

/// `(1/M) sum_{M <= m < 2M} | (1/H) #{m <= h < m+H : x_h = e, u_h = f} - 1/4 |`
/// for each `(e, f)` in `{-1,1}^2`. Window counts slide exactly (integer
/// arithmetic); both inputs must be strictly `{-1,+1}`-valued.
pub fn quadrant_freq(x: &ObservableSeq, u: &ArithSeq, m: u64, h: u64) -> Result<QuadrantFreq> {
    if m == 0 || h == 0 {
        return Err(Error::InvalidArgument("window parameters must be positive".into()));
    }
    if !x.is_pm_one() {
        return Err(Error::InvalidArgument("observable must be +-1 valued".into()));
    }
    if !u.is_pm_one() {
        return Err(Error::InvalidArgument("arithmetic sequence must be +-1 valued".into()));
    }
    let needed = 2 * m + h - 1;
    need(x.len(), needed, "observable")?;
    need(u.len(), needed, "arithmetic sequence")?;

    let quadrant = |pos: usize| -> usize {
        let e_neg = x.entry(pos).re < 0.0;
        let f_neg = u.entry(pos).re < 0.0;
        usize::from(e_neg) * 2 + usize::from(f_neg)
    };

    let mut counts = [0i64; 4];
    for pos in m..m + h {
        counts[quadrant(pos as usize)] += 1;
    }
    let mut dev = [0.0f64; 4];
    for start in m..2 * m {
        for (q, c) in counts.iter().enumerate() {
            dev[q] += (*c as f64 / h as f64 - 0.25).abs();
        }
        if start + 1 < 2 * m {
            counts[quadrant(start as usize)] -= 1;
            counts[quadrant((start + h) as usize)] += 1;
        }
    }
    // raw frequencies over the union of windows [M, 2M + H - 1)
    let mut global = [0i64; 4];
    for pos in m..2 * m + h - 1 {
        global[quadrant(pos as usize)] += 1;
    }
    let span = (m + h - 1) as f64;
    let pack = |arr: [f64; 4]| [[arr[0], arr[1]], [arr[2], arr[3]]];
    let deviations = pack([dev[0] / m as f64, dev[1] / m as f64, dev[2] / m as f64, dev[3] / m as f64]);
    let global_f = pack([
        global[0] as f64 / span,
        global[1] as f64 / span,
        global[2] as f64 / span,
        global[3] as f64 / span,
    ]);
    Ok(QuadrantFreq { deviations, global: global_f, m, h })
}

/// KBSZ cross-correlation `(1/N) sum_{n < N} a(r n) conj(a(s n))` of the
/// prime dilations of an observable.
pub fn kbsz_corr(a: &ObservableSeq, r: u64, s: u64, n: u64) -> Result<Complex64> {
    use crate::arith::is_prime_u64;
    if r == s {
        return Err(Error::InvalidArgument("dilations r and s must differ".into()));
    }
    if !is_prime_u64(r) || !is_prime_u64(s) {
        return Err(Error::InvalidArgument(format!("dilations must be prime, got {r}, {s}")));
    }
    if n == 0 {
        return Err(Error::InvalidArgument("range N must be positive".into()));
    }
    let needed = r.max(s) * (n - 1) + 1;
    need(a.len(), needed, "observable")?;
    let sum = match a.signs() {
        Some(av) => {
            let mut acc = 0i64;
            for j in 0..n {
                acc += i64::from(av[(r * j) as usize]) * i64::from(av[(s * j) as usize]);
            }
            Complex64::new(acc as f64, 0.0)
        }
        None => {
            let mut acc = Complex64::new(0.0, 0.0);
            for j in 0..n {
                acc += a.entry((r * j) as usize) * a.entry((s * j) as usize).conj();
            }
            acc
        }
    };
    Ok(sum / n as f64)
}

/// Blocks whose normalized averages stay above `eps0 / 2`, as intervals,
/// with the empirical density of their union in `[0, b_K)`.
#[derive(Debug, Clone, PartialEq)]
pub struct BadIntervals {
    pub intervals: Vec<(u64, u64)>,
    pub density: f64,
}

/// Extract the bad intervals of the strong-MOMO failure lemma: blocks with
/// `z_k >= eps0 / 2`. The reported density is to be compared against the
/// lemma bound `eps0 / (2 sup-bound)`.
pub fn bad_intervals(
    per_block_avg: &[f64],
    cuts: &BlockPartition,
    eps0: f64,
) -> Result<BadIntervals> {
    if !(eps0 > 0.0) {
        return Err(Error::InvalidArgument("eps0 must be positive".into()));
    }
    if per_block_avg.len() != cuts.count() {
        return Err(Error::InvalidArgument(format!(
            "{} block values for {} blocks",
            per_block_avg.len(),
            cuts.count()
        )));
    }
    let mut intervals = Vec::new();
    let mut covered = 0u64;
    for (k, &z) in per_block_avg.iter().enumerate() {
        if z >= eps0 / 2.0 {
            let (lo, hi) = cuts.block(k);
            covered += hi - lo;
            intervals.push((lo, hi));
        }
    }
    Ok(BadIntervals { intervals, density: covered as f64 / cuts.total() as f64 })
}

#[cfg(test)]
mod tests;
