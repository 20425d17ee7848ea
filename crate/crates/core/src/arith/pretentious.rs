//! Pretentious distance `D(u, v; M)` and the grid-search surrogate for the
//! Matomäki–Radziwiłł–Tao twist infimum.

use num_complex::Complex64;

use crate::arith::{dirichlet_characters, primes_up_to, ArithSeq, DirichletCharacter};
use crate::error::{Error, Result};

/// Default number of points on the `t`-grid. Odd, so the grid contains
/// `t = 0` exactly.
pub const DEFAULT_T_POINTS: usize = 10_001;

/// `D(u, v; M) = (sum_{p <= M} (1 - Re(u(p) conj(v(p)))) / p)^{1/2}`,
/// summed over ascending primes.
pub fn pretentious_distance(u: &ArithSeq, v: &ArithSeq, m: u64) -> Result<f64> {
    if m == 0 {
        return Err(Error::InvalidArgument("prime cutoff M must be positive".into()));
    }
    for (name, seq) in [("u", u), ("v", v)] {
        if seq.len() < m {
            return Err(Error::insufficient(
                if name == "u" { "u" } else { "v" },
                m,
                seq.len(),
            ));
        }
    }
    let mut sum = 0.0f64;
    for p in primes_up_to(m)? {
        let term = 1.0 - (u.eval(p) * v.eval(p).conj()).re;
        sum += term / p as f64;
    }
    Ok(sum.max(0.0).sqrt())
}

/// `D(u, n -> chi(n) n^{it}; M)^2` without materializing the twist: only
/// values at primes enter the sum.
pub fn twist_distance_sq(u: &ArithSeq, chi: &DirichletCharacter, t: f64, m: u64) -> Result<f64> {
    if u.len() < m {
        return Err(Error::insufficient("u", m, u.len()));
    }
    let primes = primes_up_to(m)?;
    Ok(twist_distance_sq_inner(u, chi, t, &primes))
}

fn twist_distance_sq_inner(
    u: &ArithSeq,
    chi: &DirichletCharacter,
    t: f64,
    primes: &[u64],
) -> f64 {
    let mut sum = 0.0f64;
    for &p in primes {
        let angle = t * (p as f64).ln();
        let twist = chi.eval(p) * Complex64::new(angle.cos(), angle.sin());
        sum += (1.0 - (u.eval(p) * twist.conj()).re) / p as f64;
    }
    sum
}

/// The modulus bound `Q = min(log^{1/125} M, log^5 H)` floored to an
/// integer, at least 1.
pub fn mrt_default_q(m: u64, h: u64) -> u64 {
    let lm = (m as f64).ln();
    let lh = (h as f64).ln();
    let q = lm.powf(1.0 / 125.0).min(lh.powi(5));
    (q.floor() as u64).max(1)
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MrtSearch {
    /// Grid minimum of `D(u, n -> chi(n) n^{it}; M)^2`.
    pub value: f64,
    pub t: f64,
    pub q: u64,
    pub character_index: usize,
}

/// Grid-search infimum of `D(u, n -> chi(n) n^{it}; M)^2` over `|t| <= M`
/// (uniform grid of `t_points` values) and all characters of modulus
/// `q <= Q`. A lower-fidelity surrogate for the true infimum: the reported
/// value is the minimum over the grid only.
///
/// Loop order is q ascending, character index ascending, t ascending; ties
/// keep the first minimizer.
pub fn mrt_infimum(
    u: &ArithSeq,
    m: u64,
    h: u64,
    t_points: usize,
    q_override: Option<u64>,
) -> Result<MrtSearch> {
    if t_points == 0 {
        return Err(Error::InvalidArgument("t-grid resolution must be positive".into()));
    }
    if !(10 <= h && h <= m) {
        return Err(Error::InvalidArgument(format!(
            "need 10 <= H <= M, got H = {h}, M = {m}"
        )));
    }
    if u.len() < m {
        return Err(Error::insufficient("u", m, u.len()));
    }
    let q_bound = q_override.unwrap_or_else(|| mrt_default_q(m, h));
    let primes = primes_up_to(m)?;

    let t_at = |i: usize| -> f64 {
        if t_points == 1 {
            0.0
        } else {
            let span = 2.0 * m as f64;
            -(m as f64) + span * i as f64 / (t_points - 1) as f64
        }
    };

    let mut best: Option<MrtSearch> = None;
    for q in 1..=q_bound {
        for chi in dirichlet_characters(q)? {
            for i in 0..t_points {
                let t = t_at(i);
                let value = twist_distance_sq_inner(u, &chi, t, &primes);
                if best.map_or(true, |b| value < b.value) {
                    best = Some(MrtSearch { value, t, q, character_index: chi.index() });
                }
            }
        }
    }
    Ok(best.expect("q = 1 always contributes at least one grid point"))
}
