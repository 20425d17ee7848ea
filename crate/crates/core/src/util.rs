//! Small numeric helpers shared across modules.

use num_complex::Complex64;

/// Fractional part of `alpha * m` computed with an FMA error term, so the
/// result is accurate to ~1 ulp of the *fraction* even when `alpha * m` is
/// large. Plain `f64` products lose the low bits that the fractional part
/// lives in once the product exceeds ~2^30.
pub(crate) fn frac_mul(alpha: f64, m: u64) -> f64 {
    let mf = m as f64;
    let p = alpha * mf;
    let err = alpha.mul_add(mf, -p);
    let mut frac = (p - p.floor()) + err;
    if frac < 0.0 {
        frac += 1.0;
    } else if frac >= 1.0 {
        frac -= 1.0;
    }
    frac
}

/// `e^{2*pi*i*frac}` with the quarter turns returned exactly, so rational
/// rotations like alpha = 1/2 produce literal +/-1 values.
pub(crate) fn unit_from_fraction(frac: f64) -> Complex64 {
    let quarters = frac * 4.0;
    if quarters == quarters.floor() {
        match quarters as i64 & 3 {
            0 => return Complex64::new(1.0, 0.0),
            1 => return Complex64::new(0.0, 1.0),
            2 => return Complex64::new(-1.0, 0.0),
            _ => return Complex64::new(0.0, -1.0),
        }
    }
    let angle = std::f64::consts::TAU * frac;
    Complex64::new(angle.cos(), angle.sin())
}

/// `e^{2*pi*i*alpha*m}` via [`frac_mul`].
pub(crate) fn unit_phase(alpha: f64, m: u64) -> Complex64 {
    unit_from_fraction(frac_mul(alpha, m))
}

pub(crate) fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

/// `base^exp mod m` for `m <= u64::MAX`, via u128 intermediates.
pub(crate) fn pow_mod(base: u64, mut exp: u64, m: u64) -> u64 {
    if m == 1 {
        return 0;
    }
    let mut base = u128::from(base % m);
    let m = u128::from(m);
    let mut acc: u128 = 1;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % m;
        }
        base = base * base % m;
        exp >>= 1;
    }
    acc as u64
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn frac_mul_matches_small_products_on_the_circle() {
        // fractions may legitimately differ by ~1 near integers (e.g.
        // 0.3 * 10 rounds up to 3.0); compare as points on the circle
        for m in 0..100u64 {
            let direct = (0.3 * m as f64).fract();
            let delta = (frac_mul(0.3, m) - direct).abs();
            let circular = delta.min(1.0 - delta);
            assert!(circular < 1e-12, "m = {m}, delta = {delta}");
        }
    }

    #[test]
    fn frac_mul_half_alpha_alternates() {
        for m in 0..64u64 {
            let expect = if m % 2 == 0 { 0.0 } else { 0.5 };
            assert_eq!(frac_mul(0.5, m), expect);
        }
    }

    #[test]
    fn quarter_phases_are_exact() {
        assert_eq!(unit_from_fraction(0.5), Complex64::new(-1.0, 0.0));
        assert_eq!(unit_from_fraction(0.25), Complex64::new(0.0, 1.0));
        assert_eq!(unit_from_fraction(0.0), Complex64::new(1.0, 0.0));
    }

    #[test]
    fn pow_mod_small() {
        assert_eq!(pow_mod(2, 10, 1_000), 24);
        assert_eq!(pow_mod(5, 0, 7), 1);
        assert_eq!(pow_mod(3, 100, 101), 1); // Fermat
    }
}
