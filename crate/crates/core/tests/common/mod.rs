//! Shared test helpers: a deterministic PRNG, an integer-arithmetic
//! brute-force wall oracle, and a generator of lattice-integral targets.
//!
//! The oracle is deliberately independent of the library: it scans a box
//! of (a, b, c) triples with plain i128 arithmetic and applies the four
//! wall conditions directly to the scaled integer data.

use ku_numerics::{int, rat, B0Char, Rat};

/// xorshift64*; fixed seeds keep every run reproducible.
pub struct Rng(u64);

impl Rng {
    pub fn new(seed: u64) -> Self {
        Rng(seed.max(1))
    }

    pub fn next_u64(&mut self) -> u64 {
        let mut x = self.0;
        x ^= x >> 12;
        x ^= x << 25;
        x ^= x >> 27;
        self.0 = x;
        x.wrapping_mul(0x2545F4914F6CDD1D)
    }

    /// Uniform in [lo, hi] (inclusive).
    pub fn range(&mut self, lo: i64, hi: i64) -> i64 {
        let span = (hi - lo + 1) as u64;
        lo + (self.next_u64() % span) as i64
    }
}

fn gcd(mut a: i128, mut b: i128) -> i128 {
    while b != 0 {
        let r = a % b;
        a = b;
        b = r;
    }
    a.abs()
}

/// Reduced fraction with positive denominator.
fn reduce(num: i128, den: i128) -> (i128, i128) {
    let g = gcd(num, den).max(1);
    let (mut n, mut d) = (num / g, den / g);
    if d < 0 {
        n = -n;
        d = -d;
    }
    (n, d)
}

/// A wall found by the oracle: coefficients and alpha^2 as a reduced
/// integer fraction.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct OracleWall {
    pub alpha_num: i128,
    pub alpha_den: i128,
    pub coeffs: (i64, i64, i64),
}

/// Target in scaled integer form: rank rk (a multiple of 4), c1, and
/// c2 * 8.
#[derive(Debug, Clone, Copy)]
pub struct IntTarget {
    pub rk: i64,
    pub c1: i64,
    pub c2_times_8: i64,
}

impl IntTarget {
    pub fn to_char(self) -> B0Char {
        B0Char::new(
            int(self.rk),
            int(self.c1),
            rat(self.c2_times_8, 8),
            int(-1),
        )
    }
}

/// Scans a ∈ [a_lo, a_hi], b ∈ [1, c1-1], c ∈ [c_lo, c_hi] and keeps the
/// triples satisfying, with exact integer arithmetic:
///   integrality      b ≡ a (mod 2), c ≡ a (mod 8);
///   discriminants    b² - a c ≥ 0 and (B-b)² - (R/4 - a)(C - c) ≥ 0;
///   crossing         alpha² = (C b - c B) / (4 (R b - 4 a B)) is finite
///                    and positive (a zero denominator means the slopes
///                    never cross);
///   subobject side   4 a B > R b (strictly).
pub fn brute_force_walls(
    t: IntTarget,
    a_lo: i64,
    a_hi: i64,
    c_lo: i64,
    c_hi: i64,
) -> Vec<OracleWall> {
    let r = t.rk as i128;
    let big_b = t.c1 as i128;
    let big_c = t.c2_times_8 as i128;
    assert_eq!(t.rk % 4, 0, "oracle targets have rank divisible by 4");
    let r4 = r / 4;

    let mut found = Vec::new();
    for a in a_lo..=a_hi {
        let ai = a as i128;
        for b in 1..t.c1 {
            let bi = b as i128;
            if (b - a).rem_euclid(2) != 0 {
                continue;
            }
            // strict subobject-slope condition
            if 4 * ai * big_b <= r * bi {
                continue;
            }
            for c in c_lo..=c_hi {
                let ci = c as i128;
                if (c - a).rem_euclid(8) != 0 {
                    continue;
                }
                if bi * bi - ai * ci < 0 {
                    continue;
                }
                let qb = big_b - bi;
                if qb * qb - (r4 - ai) * (big_c - ci) < 0 {
                    continue;
                }
                let num = big_c * bi - ci * big_b;
                let den = 4 * (r * bi - 4 * ai * big_b);
                if den == 0 || num.signum() * den.signum() <= 0 {
                    continue;
                }
                let (alpha_num, alpha_den) = reduce(num, den);
                found.push(OracleWall {
                    alpha_num,
                    alpha_den,
                    coeffs: (a, b, c),
                });
            }
        }
    }
    found.sort();
    found
}

/// Converts an enumerator result into the oracle's normal form.
pub fn walls_in_oracle_form(walls: &[ku_numerics::WallSolution]) -> Vec<OracleWall> {
    use num_traits::ToPrimitive;
    let mut out: Vec<OracleWall> = walls
        .iter()
        .map(|w| {
            let num = w.alpha_sq.numer().to_i128().expect("small alpha");
            let den = w.alpha_sq.denom().to_i128().expect("small alpha");
            let (alpha_num, alpha_den) = reduce(num, den);
            OracleWall {
                alpha_num,
                alpha_den,
                coeffs: w.coeffs,
            }
        })
        .collect();
    out.sort();
    out
}

/// Random lattice-integral target with |rk| <= 16, 2 <= c1 <= 10 and c2
/// large enough that the derived search ranges stay inside the oracle box
/// a ∈ [-5, 5], c ∈ [-500, 500].
pub fn random_target(rng: &mut Rng) -> IntTarget {
    loop {
        let x = rng.range(-4, 4);
        let c1 = rng.range(2, 10);
        if (c1 - x).rem_euclid(2) != 0 {
            continue;
        }
        let z = rng.range(3, 6);
        return IntTarget {
            rk: 4 * x,
            c1,
            c2_times_8: x + 8 * z,
        };
    }
}

/// Random rational with numerator in [-9, 9] and denominator in [1, 9].
#[allow(dead_code)] // not every test binary uses every helper
pub fn random_rat(rng: &mut Rng) -> Rat {
    rat(rng.range(-9, 9), rng.range(1, 9))
}

/// Random positive rational (for alpha^2 draws).
#[allow(dead_code)]
pub fn random_positive_rat(rng: &mut Rng) -> Rat {
    rat(rng.range(1, 99), rng.range(1, 16))
}
