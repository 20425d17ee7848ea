use num_complex::Complex64;

use super::*;
use crate::arith::{character_seq, dirichlet_characters, sieve_liouville, sieve_mobius, ArithSeq,
                   SeqTag};
use crate::entropy::SplitMix64;
use crate::symbolic::BlockProduct;

fn zero() -> Complex64 {
    Complex64::new(0.0, 0.0)
}

fn one() -> Complex64 {
    Complex64::new(1.0, 0.0)
}

fn tm_sign(len: u64, start: u64) -> ObservableSeq {
    let bits = BlockProduct::thue_morse().prefix(start + len).unwrap();
    ObservableSeq::sign_of_bits(&bits[start as usize..], start, "(-1)^{TM(n)}").unwrap()
}

fn random_signs(rng: &mut SplitMix64, len: usize) -> Vec<i8> {
    (0..len).map(|_| if rng.next_u64() & 1 == 0 { 1i8 } else { -1 }).collect()
}

fn random_complex_unit(rng: &mut SplitMix64, len: usize) -> Vec<Complex64> {
    (0..len)
        .map(|_| {
            let angle = std::f64::consts::TAU * rng.next_f64();
            let radius = rng.next_f64();
            Complex64::new(radius * angle.cos(), radius * angle.sin())
        })
        .collect()
}

// ---- sarnak_avg -----------------------------------------------------------

#[test]
fn sarnak_zero_observable() {
    let u = sieve_mobius(50).unwrap();
    let a = ObservableSeq::constant(zero(), 50, 0);
    assert_eq!(sarnak_avg(&a, &u, 50).unwrap(), zero());
}

#[test]
fn sarnak_first_ten_mobius() {
    // sum of the first ten Mobius values is -1
    let u = sieve_mobius(10).unwrap();
    let a = ObservableSeq::constant(one(), 10, 0);
    assert_eq!(sarnak_avg(&a, &u, 10).unwrap(), Complex64::new(-1.0 / 10.0, 0.0));
}

#[test]
fn sarnak_unimodular_self_correlation() {
    let u = sieve_liouville(64).unwrap();
    let a = ObservableSeq::from_arith(&u, "conj of u");
    assert_eq!(sarnak_avg(&a, &u, 64).unwrap(), one());
}

#[test]
fn sarnak_checks_range() {
    let u = sieve_mobius(10).unwrap();
    let a = ObservableSeq::constant(one(), 5, 0);
    assert!(matches!(
        sarnak_avg(&a, &u, 10),
        Err(Error::InsufficientRange { needed: 10, have: 5, .. })
    ));
}

// ---- momo_sum / strong_momo_sum -------------------------------------------

fn constant_blocks(cuts: &BlockPartition, value: Complex64) -> Vec<ObservableSeq> {
    (0..cuts.count())
        .map(|k| {
            let (lo, hi) = cuts.block(k);
            ObservableSeq::constant(value, hi - lo, 0)
        })
        .collect()
}

#[test]
fn momo_zero_blocks() {
    let cuts = make_cuts(CutSpec::LinearGrowing { c: 1 }, 50).unwrap();
    let u = sieve_mobius(50).unwrap();
    let blocks = constant_blocks(&cuts, zero());
    assert_eq!(momo_sum(&cuts, &blocks, &u).unwrap(), zero());
}

#[test]
fn momo_single_block_is_sarnak() {
    let n = 200u64;
    let cuts = BlockPartition::new(vec![0, n]).unwrap();
    let u = sieve_mobius(n).unwrap();
    let a = tm_sign(n, 0);
    let via_momo = momo_sum(&cuts, std::slice::from_ref(&a), &u).unwrap();
    let direct = sarnak_avg(&a, &u, n).unwrap();
    assert_eq!(via_momo, direct);
}

#[test]
fn momo_matches_naive_double_loop() {
    // identical observable in every block, cuts b_k = k^2
    let cuts = make_cuts(CutSpec::Power { c: 1.0, gamma: 2.0 }, 10_000).unwrap();
    let (_, max_gap) = cuts.gap_bounds();
    let obs = tm_sign(max_gap, 0);
    let blocks: Vec<ObservableSeq> = vec![obs.clone(); cuts.count()];
    let u = sieve_mobius(10_000).unwrap();
    let fast = momo_sum(&cuts, &blocks, &u).unwrap();

    let mut naive = zero();
    for k in 0..cuts.count() {
        let (lo, hi) = cuts.block(k);
        for n in lo..hi {
            naive += obs.entry((n - lo) as usize) * u.eval(n + 1);
        }
    }
    naive /= cuts.total() as f64;
    assert_eq!(fast, naive);
}

#[test]
fn strong_momo_dominates_momo_on_random_cases() {
    let mut rng = SplitMix64::new(2024);
    for case in 0..25 {
        let cuts = BlockPartition::new(vec![0, 7, 20, 41, 70, 110]).unwrap();
        let u = if case % 2 == 0 {
            ArithSeq::from_signs(SeqTag::Custom, random_signs(&mut rng, 110)).unwrap()
        } else {
            ArithSeq::from_complex(SeqTag::Custom, random_complex_unit(&mut rng, 110)).unwrap()
        };
        let blocks: Vec<ObservableSeq> = (0..cuts.count())
            .map(|k| {
                let (lo, hi) = cuts.block(k);
                if case % 3 == 0 {
                    ObservableSeq::from_complex(
                        random_complex_unit(&mut rng, (hi - lo) as usize),
                        0,
                        "random complex",
                    )
                } else {
                    ObservableSeq::from_signs(
                        random_signs(&mut rng, (hi - lo) as usize),
                        0,
                        "random signs",
                    )
                    .unwrap()
                }
            })
            .collect();
        let strong = strong_momo_sum(&cuts, &blocks, &u).unwrap();
        let plain = momo_sum(&cuts, &blocks, &u).unwrap();
        assert!(strong.value >= plain.norm() - 1e-12, "case {case}");
    }
}

#[test]
fn strong_momo_single_block_is_abs_sarnak() {
    let n = 300u64;
    let cuts = BlockPartition::new(vec![0, n]).unwrap();
    let u = sieve_mobius(n).unwrap();
    let a = tm_sign(n, 0);
    let strong = strong_momo_sum(&cuts, std::slice::from_ref(&a), &u).unwrap();
    let direct = sarnak_avg(&a, &u, n).unwrap();
    assert_eq!(strong.value, direct.norm());
    assert_eq!(strong.per_block_avg.len(), 1);
    assert_eq!(strong.per_block_avg[0], strong.value);
}

// ---- cone_rotate -----------------------------------------------------------

#[test]
fn cone_keeps_nonnegative_reals() {
    let values = [zero(), one(), Complex64::new(3.5, 0.0)];
    let rot = cone_rotate(&values);
    for e in rot.rotations {
        assert_eq!(e, one());
    }
}

#[test]
fn cone_rotates_third_root_back() {
    let roots = third_roots();
    let c = roots[1] * 5.0; // 5 e^{2 pi i/3}
    let rot = cone_rotate(&[c]);
    assert_eq!(rot.rotations[0], roots[2]); // e^{4 pi i/3}
    assert!((rot.rotated[0] - Complex64::new(5.0, 0.0)).norm() < 1e-12);
}

#[test]
fn cone_bound_on_random_batch() {
    let mut rng = SplitMix64::new(7);
    let values = random_complex_unit(&mut rng, 2_000);
    let rot = cone_rotate(&values);
    let mut sum_abs = 0.0;
    let mut sum_rotated = zero();
    for (c, (e, r)) in values.iter().zip(rot.rotations.iter().zip(&rot.rotated)) {
        assert!(c.norm() <= 2.0 * (e * c).re + 1e-12);
        sum_abs += c.norm();
        sum_rotated += r;
    }
    assert!(sum_abs <= 2.0 * sum_rotated.re + 1e-9);
}

// ---- short_interval_avg ----------------------------------------------------

#[test]
fn short_interval_zero_u() {
    let u = ArithSeq::from_signs(SeqTag::Custom, vec![0; 400]).unwrap();
    let a = tm_sign(400, 0);
    assert_eq!(short_interval_avg(&a, &u, 100, 10).unwrap(), 0.0);
}

#[test]
fn short_interval_matches_naive_loop() {
    let (m, h) = (100u64, 10u64);
    let u = sieve_liouville(2 * m + h).unwrap();
    let a = ObservableSeq::constant(one(), 2 * m + h, 0);
    let fast = short_interval_avg(&a, &u, m, h).unwrap();

    let mut naive = 0.0f64;
    for start in m..2 * m {
        let mut inner = zero();
        for j in start..start + h {
            inner += a.entry(j as usize) * u.eval(j + 1);
        }
        naive += inner.norm() / h as f64;
    }
    naive /= m as f64;
    assert_eq!(fast, naive);
}

#[test]
fn short_interval_self_is_one() {
    let u = sieve_liouville(500).unwrap();
    let a = ObservableSeq::from_arith(&u, "u itself");
    assert_eq!(short_interval_avg(&a, &u, 100, 25).unwrap(), 1.0);
}

// ---- quadrant_freq ---------------------------------------------------------

fn naive_quadrant(x: &ObservableSeq, u: &ArithSeq, m: u64, h: u64) -> [[f64; 2]; 2] {
    let mut dev = [[0.0f64; 2]; 2];
    for (ei, e) in [1i8, -1].iter().enumerate() {
        for (fi, f) in [1i8, -1].iter().enumerate() {
            let mut acc = 0.0;
            for start in m..2 * m {
                let mut count = 0u64;
                for pos in start..start + h {
                    let xe = x.entry(pos as usize).re;
                    let uf = u.eval(pos + 1).re;
                    if (xe > 0.0) == (*e > 0) && (uf > 0.0) == (*f > 0) {
                        count += 1;
                    }
                }
                acc += (count as f64 / h as f64 - 0.25).abs();
            }
            dev[ei][fi] = acc / m as f64;
        }
    }
    dev
}

#[test]
fn quadrant_matches_naive_oracle() {
    let (m, h) = (50u64, 7u64);
    let u = sieve_liouville(2 * m + h).unwrap();
    let x = tm_sign(2 * m + h, 0);
    let fast = quadrant_freq(&x, &u, m, h).unwrap();
    let naive = naive_quadrant(&x, &u, m, h);
    for e in [1i8, -1] {
        for f in [1i8, -1] {
            assert_eq!(
                fast.deviation(e, f),
                naive[usize::from(e < 0)][usize::from(f < 0)],
                "quadrant ({e}, {f})"
            );
        }
    }
}

#[test]
fn quadrant_perfect_dependence() {
    let u = sieve_liouville(300).unwrap();
    let x = ObservableSeq::from_arith(&u, "same signs");
    let q = quadrant_freq(&x, &u, 60, 12).unwrap();
    // mismatched quadrants are empty, deviation exactly 1/4
    assert_eq!(q.deviation(1, -1), 0.25);
    assert_eq!(q.deviation(-1, 1), 0.25);
    // all deviations lie in [0, 3/4], frequencies sum to 1
    let mut freq_total = 0.0;
    for e in [1i8, -1] {
        for f in [1i8, -1] {
            assert!(q.deviation(e, f) <= 0.75);
            freq_total += q.global_freq(e, f);
        }
    }
    assert!((freq_total - 1.0).abs() < 1e-12);
}

#[test]
fn quadrant_rejects_zeros() {
    let u = sieve_mobius(300).unwrap(); // has zeros
    let x = tm_sign(300, 0);
    assert!(matches!(quadrant_freq(&x, &u, 50, 10), Err(Error::InvalidArgument(_))));
}

// ---- kbsz_corr -------------------------------------------------------------

fn kbsz_closed_form(alpha: f64, r: u64, s: u64, n: u64) -> Complex64 {
    // (1/N) sum z^{(r-s) n} with z = e^{2 pi i alpha}
    let d = r as i64 - s as i64;
    let phase = |m: u64| crate::util::unit_phase(alpha, m);
    let signed = |m: u64| if d < 0 { phase(m).conj() } else { phase(m) };
    let z_d = signed(d.unsigned_abs());
    if (z_d - one()).norm() < 1e-12 {
        return one();
    }
    let z_dn = signed(d.unsigned_abs() * n);
    (z_dn - one()) / (z_d - one()) / n as f64
}

#[test]
fn kbsz_geometric_sum() {
    for &alpha in &[0.3f64, 1.0 / 7.0, (5f64.sqrt() - 1.0) / 2.0] {
        for &(r, s) in &[(3u64, 5u64), (7, 11)] {
            let n = 2_000u64;
            let a = rotation_observable(alpha, r.max(s) * (n - 1) + 1);
            let corr = kbsz_corr(&a, r, s, n).unwrap();
            let closed = kbsz_closed_form(alpha, r, s, n);
            assert!(
                (corr - closed).norm() < 1e-10,
                "alpha={alpha} r={r} s={s}: {corr} vs {closed}"
            );
        }
    }
}

#[test]
fn kbsz_constant_is_one() {
    let a = rotation_observable(0.0, 5 * 99 + 1);
    assert_eq!(kbsz_corr(&a, 3, 5, 100).unwrap(), one());
}

#[test]
fn kbsz_validates_dilations() {
    let a = rotation_observable(0.1, 1_000);
    assert!(kbsz_corr(&a, 4, 5, 10).is_err()); // 4 not prime
    assert!(kbsz_corr(&a, 5, 5, 10).is_err()); // equal
    assert!(matches!(
        kbsz_corr(&a, 3, 5, 500),
        Err(Error::InsufficientRange { .. })
    ));
}

// ---- ap_strong_momo / ap_short_interval ------------------------------------

#[test]
fn ap_with_trivial_progression_is_strong_momo() {
    let cuts = make_cuts(CutSpec::LinearGrowing { c: 2 }, 300).unwrap();
    let mut rng = SplitMix64::new(5);
    let blocks: Vec<ObservableSeq> = (0..cuts.count())
        .map(|k| {
            let (lo, hi) = cuts.block(k);
            ObservableSeq::from_complex(
                random_complex_unit(&mut rng, (hi - lo) as usize),
                0,
                "random",
            )
        })
        .collect();
    let u = sieve_mobius(300).unwrap();
    let plain = strong_momo_sum(&cuts, &blocks, &u).unwrap();
    let ap = ap_strong_momo(&cuts, &blocks, &u, 1, 0).unwrap();
    assert_eq!(plain, ap, "bit-exact agreement required");
}

#[test]
fn ap_zero_on_progression() {
    // u vanishes on the even positions sampled by step 2, offset 0
    let signs: Vec<i8> = (0..200).map(|i| if i % 2 == 0 { 0 } else { 1 }).collect();
    let u = ArithSeq::from_signs(SeqTag::Custom, signs).unwrap();
    let cuts = BlockPartition::new(vec![0, 20, 50, 90]).unwrap();
    let blocks = constant_blocks(&cuts, one());
    let ap = ap_strong_momo(&cuts, &blocks, &u, 2, 0).unwrap();
    assert_eq!(ap.value, 0.0);
}

#[test]
fn ap_strong_momo_matches_naive() {
    // the arithmetic aperiodicity statistic at q = 4, h = 1
    let cuts = make_cuts(CutSpec::Power { c: 1.0, gamma: 2.0 }, 900).unwrap();
    let u = sieve_mobius(4 * 900 + 2).unwrap();
    let blocks = constant_blocks(&cuts, one());
    let fast = ap_strong_momo(&cuts, &blocks, &u, 4, 1).unwrap();

    let mut naive_total = 0.0;
    for k in 0..cuts.count() {
        let (lo, hi) = cuts.block(k);
        let mut inner = zero();
        for n in lo..hi {
            inner += u.eval(4 * n + 1 + 1);
        }
        naive_total += inner.norm();
    }
    let naive = naive_total / cuts.total() as f64;
    assert_eq!(fast.value, naive);
}

#[test]
fn ap_short_interval_character_periods_cancel() {
    let chars = dirichlet_characters(5).unwrap();
    let chi = &chars[1];
    let u = character_seq(chi, 1_000);
    // windows of 10 cover two full periods of the modulus-5 character
    let value = ap_short_interval(&u, 1, 0, 40, 10).unwrap();
    assert!(value <= 5.0 / 10.0 + 1e-12);
    assert_eq!(value, 0.0, "complete periods sum to zero exactly");
}

#[test]
fn ap_short_interval_constant_one() {
    let u = ArithSeq::constant_one(400);
    assert_eq!(ap_short_interval(&u, 1, 0, 80, 20).unwrap(), 1.0);
}

#[test]
fn ap_short_interval_matches_naive() {
    let (m, h) = (50u64, 10u64);
    let u = sieve_mobius(3 * (2 * m + h) + 2).unwrap();
    let fast = ap_short_interval(&u, 3, 1, m, h).unwrap();
    let mut naive = 0.0;
    for start in m..2 * m {
        let mut inner = zero();
        for g in start..start + h {
            inner += u.eval(3 * g + 1 + 1);
        }
        naive += inner.norm() / h as f64;
    }
    naive /= m as f64;
    assert_eq!(fast, naive);
}

// ---- bad_intervals ---------------------------------------------------------

#[test]
fn bad_intervals_cases() {
    let cuts = BlockPartition::new(vec![0, 10, 20, 30, 40]).unwrap();
    let all_zero = bad_intervals(&[0.0; 4], &cuts, 0.1).unwrap();
    assert!(all_zero.intervals.is_empty());
    assert_eq!(all_zero.density, 0.0);

    let all_big = bad_intervals(&[0.1; 4], &cuts, 0.1).unwrap();
    assert_eq!(all_big.intervals.len(), 4);
    assert_eq!(all_big.density, 1.0);

    let alternating = bad_intervals(&[0.1, 0.0, 0.1, 0.0], &cuts, 0.1).unwrap();
    assert_eq!(alternating.intervals, vec![(0, 10), (20, 30)]);
    assert_eq!(alternating.density, 0.5);

    assert!(bad_intervals(&[0.0; 4], &cuts, 0.0).is_err());
    assert!(bad_intervals(&[0.0; 3], &cuts, 0.1).is_err());
}

// ---- rotation_observable / make_cuts ---------------------------------------

#[test]
fn rotation_examples() {
    let flat = rotation_observable(0.0, 8);
    for i in 0..8 {
        assert_eq!(flat.entry(i), one());
    }
    let half = rotation_observable(0.5, 8);
    for i in 0..8 {
        let expect = if i % 2 == 0 { 1.0 } else { -1.0 };
        assert_eq!(half.entry(i), Complex64::new(expect, 0.0));
    }
    let golden = (5f64.sqrt() - 1.0) / 2.0;
    let rot = rotation_observable(golden, 4);
    let direct = Complex64::new(
        (std::f64::consts::TAU * (3.0 * golden).fract()).cos(),
        (std::f64::consts::TAU * (3.0 * golden).fract()).sin(),
    );
    assert!((rot.entry(3) - direct).norm() < 1e-12);
}

#[test]
fn cut_families() {
    let squares = make_cuts(CutSpec::Power { c: 1.0, gamma: 2.0 }, 100).unwrap();
    assert!(squares.cuts().starts_with(&[0, 1, 4, 9, 16, 25]));

    let triangular = make_cuts(CutSpec::LinearGrowing { c: 1 }, 100).unwrap();
    assert!(triangular.cuts().starts_with(&[0, 1, 3, 6, 10, 15]));

    assert!(matches!(
        make_cuts(CutSpec::Power { c: 1.0, gamma: 1.0 }, 100),
        Err(Error::GapsNotDivergent(_))
    ));
}

#[test]
fn power_cut_gaps_trend_upward() {
    let cuts = make_cuts(CutSpec::Power { c: 1.0, gamma: 1.5 }, 1_000_000).unwrap();
    let gaps: Vec<u64> = cuts.gaps().collect();
    let half = gaps.len() / 2;
    let min_front = gaps[..half].iter().min().unwrap();
    let min_back = gaps[half..].iter().min().unwrap();
    assert!(min_back >= min_front);
    let (gmin, gmax) = cuts.gap_bounds();
    assert!(gmin >= 1);
    assert!(gmax > *min_front);
}

#[test]
fn partition_guards() {
    assert!(BlockPartition::new(vec![0]).is_err());
    assert!(BlockPartition::new(vec![1, 2]).is_err());
    assert!(BlockPartition::new(vec![0, 5, 5]).is_err());
}
