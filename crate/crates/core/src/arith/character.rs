//! Dirichlet characters, constructed via CRT over the prime-power factors
//! of the modulus: primitive roots for odd prime powers, the `{-1, 5}`
//! generation for powers of 2.

use num_complex::Complex64;

use crate::arith::{ArithSeq, SeqTag};
use crate::error::{Error, Result};
use crate::util::{gcd, pow_mod, unit_from_fraction};

/// Default ceiling for the modulus; the MRT bound `Q` is tiny at desk
/// scale, 100 covers all plausible experiments.
pub const DEFAULT_Q_MAX: u64 = 100;

/// One generator of a unit group `(Z/p^e)^*` component together with the
/// discrete logs of every residue with respect to it.
struct Component {
    modulus: u64,
    /// generator orders, one per generator (1 or 2 generators)
    orders: Vec<u64>,
    /// residue -> exponent tuple, indexed by `n mod p^e`; `None` on
    /// non-units
    dlog: Vec<Option<Vec<u64>>>,
}

#[derive(Debug, Clone)]
pub struct DirichletCharacter {
    modulus: u64,
    table: Vec<Complex64>,
    principal: bool,
    index: usize,
}

impl DirichletCharacter {
    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn is_principal(&self) -> bool {
        self.principal
    }

    /// Position in the deterministic enumeration order of
    /// [`dirichlet_characters`]; 0 is the principal character.
    pub fn index(&self) -> usize {
        self.index
    }

    /// Character value at `n`; depends only on `n mod q`, zero on
    /// non-units.
    pub fn eval(&self, n: u64) -> Complex64 {
        self.table[(n % self.modulus) as usize]
    }

    pub fn table(&self) -> &[Complex64] {
        &self.table
    }
}

/// All `phi(q)` Dirichlet characters of modulus `q <= DEFAULT_Q_MAX`.
pub fn dirichlet_characters(q: u64) -> Result<Vec<DirichletCharacter>> {
    dirichlet_characters_with_limit(q, DEFAULT_Q_MAX)
}

pub fn dirichlet_characters_with_limit(q: u64, q_max: u64) -> Result<Vec<DirichletCharacter>> {
    if q == 0 {
        return Err(Error::InvalidArgument("modulus must be positive".into()));
    }
    if q > q_max {
        return Err(Error::UnsupportedModulus { q, max: q_max });
    }
    let components: Vec<Component> = factorize(q)
        .into_iter()
        .map(|(p, e)| unit_group_component(p, e))
        .collect();

    let orders: Vec<u64> = components.iter().flat_map(|c| c.orders.clone()).collect();
    let phi: u64 = orders.iter().product();
    let denom = orders.iter().fold(1u64, |l, &o| l / gcd(l, o) * o).max(1);

    // Character exponents run like a little-endian counter over the
    // generator orders, so the principal character (all zero) comes first.
    let mut characters = Vec::with_capacity(phi as usize);
    let mut exps = vec![0u64; orders.len()];
    for index in 0..phi as usize {
        let mut table = vec![Complex64::new(0.0, 0.0); q as usize];
        for n in 0..q {
            if gcd(n, q) != 1 {
                continue;
            }
            // accumulate the phase numerator over `denom`-ths of a turn
            let mut num = 0u64;
            let mut gen_idx = 0usize;
            for comp in &components {
                let logs = comp.dlog[(n % comp.modulus) as usize]
                    .as_ref()
                    .expect("unit residue must have a discrete log");
                for (j, &x) in logs.iter().enumerate() {
                    let ord = comp.orders[j];
                    num = (num + exps[gen_idx] * x % ord * (denom / ord)) % denom;
                    gen_idx += 1;
                }
            }
            table[n as usize] = unit_from_fraction(num as f64 / denom as f64);
        }
        characters.push(DirichletCharacter {
            modulus: q,
            table,
            principal: exps.iter().all(|&e| e == 0),
            index,
        });
        // increment the exponent counter
        for (e, &o) in exps.iter_mut().zip(&orders) {
            *e += 1;
            if *e < o {
                break;
            }
            *e = 0;
        }
    }
    Ok(characters)
}

/// Realize a character as an arithmetic sequence on `[1, len]`.
pub fn character_seq(chi: &DirichletCharacter, len: u64) -> ArithSeq {
    let values: Vec<Complex64> = (1..=len).map(|n| chi.eval(n)).collect();
    ArithSeq::from_complex(SeqTag::Character, values)
        .expect("character values are on the unit circle or zero")
}

fn factorize(mut q: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut p = 2u64;
    while p * p <= q {
        if q % p == 0 {
            let mut e = 0;
            while q % p == 0 {
                q /= p;
                e += 1;
            }
            out.push((p, e));
        }
        p += 1;
    }
    if q > 1 {
        out.push((q, 1));
    }
    out
}

fn unit_group_component(p: u64, e: u32) -> Component {
    let pe = p.pow(e);
    let generators: Vec<u64> = if p == 2 {
        match e {
            1 => vec![],
            2 => vec![3], // {1, 3}, cyclic of order 2
            _ => vec![pe - 1, 5],
        }
    } else {
        vec![primitive_root(p, e)]
    };
    let orders: Vec<u64> = generators.iter().map(|&g| element_order(g, pe)).collect();

    // Brute-force discrete logs: enumerate all exponent tuples and record
    // the residue each one lands on. The groups here have order <= phi(100).
    let mut dlog: Vec<Option<Vec<u64>>> = vec![None; pe as usize];
    let total: u64 = orders.iter().product::<u64>().max(1);
    let mut exps = vec![0u64; generators.len()];
    for _ in 0..total {
        let mut r = 1u64;
        for (j, &g) in generators.iter().enumerate() {
            r = r * pow_mod(g, exps[j], pe) % pe;
        }
        if dlog[r as usize].is_none() {
            dlog[r as usize] = Some(exps.clone());
        }
        for (x, &o) in exps.iter_mut().zip(&orders) {
            *x += 1;
            if *x < o {
                break;
            }
            *x = 0;
        }
    }
    Component { modulus: pe, orders, dlog }
}

fn element_order(g: u64, m: u64) -> u64 {
    let mut x = g % m;
    let mut ord = 1;
    while x != 1 {
        x = x * g % m;
        ord += 1;
    }
    ord
}

fn euler_phi_prime_power(p: u64, e: u32) -> u64 {
    p.pow(e - 1) * (p - 1)
}

fn primitive_root(p: u64, e: u32) -> u64 {
    let phi_p = p - 1;
    let factors = factorize(phi_p);
    let g = (2..p)
        .find(|&g| factors.iter().all(|&(r, _)| pow_mod(g, phi_p / r, p) != 1))
        .expect("every odd prime has a primitive root");
    if e == 1 {
        return g;
    }
    // g lifts to p^e unless g^{p-1} = 1 mod p^2, in which case g + p does
    let pe = p.pow(e);
    let phi = euler_phi_prime_power(p, e);
    let lift_ok = |cand: u64| {
        factorize(phi)
            .iter()
            .all(|&(r, _)| pow_mod(cand, phi / r, pe) != 1)
    };
    if lift_ok(g) {
        g
    } else {
        g + p
    }
}
