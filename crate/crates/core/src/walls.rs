//! Finite enumeration of all numerical walls for a target character at
//! twist -1.
//!
//! A wall is a decomposition target = sub + quot of lattice-integral
//! characters such that
//!   (a) both sides have non-negative discriminant,
//!   (b) both sides are integral combinations of the lattice basis,
//!   (c) the two sides have equal tilt slope at some alpha^2 > 0,
//!   (d) the sub side satisfies the strict subobject-slope inequality
//!       rk(sub)/c1(sub) > rk(target)/c1(target).
//!
//! The search ranges are derived at runtime from (a), (c) and (d): the
//! subobject inequality bounds the rank window below, the discriminant
//! inequalities combined with positivity of alpha^2 bound it above, and
//! for each fixed (rank, c1) cell the same inequalities cut a finite
//! exact interval of admissible c2 values. The derived ranges are used
//! for pruning only; every emitted solution is re-checked against the
//! four conditions with exact arithmetic.

use num_traits::{Signed, ToPrimitive, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::clifford::{
    discriminant, lattice_coords, slope_mu_poly, B0Char, LatticeBasis, SlopeFn,
};
use crate::error::Error;
use crate::rational::{int, rat_to_f64, Rat};

/// Wall-search instance: target character at twist -1, the integral
/// lattice it lives in, the rank divisibility, and the strictness of the
/// subobject-slope condition.
#[derive(Debug, Clone)]
pub struct WallProblem {
    target: B0Char,
    basis: LatticeBasis,
    rank_step: u32,
    strict_subobject_slope: bool,
}

/// One numerical wall: the value of alpha^2 and the two sides of the
/// decomposition, with the sub side recorded as integer coefficients
/// (a, b, c) meaning (rank_step * a, b, c/8).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(into = "WallSolutionWire", try_from = "WallSolutionWire")]
pub struct WallSolution {
    pub alpha_sq: Rat,
    pub sub: B0Char,
    pub quot: B0Char,
    pub coeffs: (i64, i64, i64),
}

#[derive(Serialize, Deserialize)]
struct WallSolutionWire {
    alpha_sq: String,
    alpha_approx: f64,
    sub: B0Char,
    quot: B0Char,
    coeffs: [i64; 3],
}

impl From<WallSolution> for WallSolutionWire {
    fn from(w: WallSolution) -> Self {
        WallSolutionWire {
            alpha_approx: alpha_approx(&w.alpha_sq),
            alpha_sq: w.alpha_sq.to_string(),
            sub: w.sub,
            quot: w.quot,
            coeffs: [w.coeffs.0, w.coeffs.1, w.coeffs.2],
        }
    }
}

impl TryFrom<WallSolutionWire> for WallSolution {
    type Error = Error;
    fn try_from(w: WallSolutionWire) -> Result<Self, Error> {
        Ok(WallSolution {
            alpha_sq: crate::rational::parse_rat(&w.alpha_sq)?,
            sub: w.sub,
            quot: w.quot,
            coeffs: (w.coeffs[0], w.coeffs[1], w.coeffs[2]),
        })
    }
}

/// Decimal rendering of sqrt(alpha^2), rounded to six decimal places.
/// Display only; never used in any comparison.
pub fn alpha_approx(alpha_sq: &Rat) -> f64 {
    (rat_to_f64(alpha_sq).sqrt() * 1e6).round() / 1e6
}

/// A decomposition hitting the subobject-slope boundary exactly: the two
/// sides are rational multiples of the target, so their slopes agree at
/// every alpha and no crossing happens. Reported separately from walls
/// when the non-strict variant is requested, never merged.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundaryCase {
    pub sub: B0Char,
    pub quot: B0Char,
    pub coeffs: [i64; 3],
}

/// Result of an enumeration: the walls, sorted by descending alpha^2 and
/// then lexicographically by (a, b, c), plus any boundary cases (empty in
/// strict mode).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WallEnumeration {
    pub walls: Vec<WallSolution>,
    pub boundary: Vec<BoundaryCase>,
}

impl WallProblem {
    /// Standard problem: given target, default lattice basis, rank step 4,
    /// strict subobject slope.
    pub fn standard(target: B0Char) -> Result<Self, Error> {
        WallProblem::new(target, LatticeBasis::clifford(), 4, true)
    }

    pub fn new(
        target: B0Char,
        basis: LatticeBasis,
        rank_step: u32,
        strict_subobject_slope: bool,
    ) -> Result<Self, Error> {
        if rank_step == 0 {
            return Err(Error::InvalidInput("rank step must be positive".into()));
        }
        let target = target.at_beta(&int(-1));
        // The enumeration walks the lattice in triangular coordinates, so
        // the basis must be lower triangular with the stated rank step and
        // integral rank/c1 rows; c2 entries must live on the 1/8 grid so
        // that the (a, b, c) coefficient contract holds.
        let [v1, v2, v3] = basis.vectors();
        let tri_ok = v1.rk == int(rank_step as i64)
            && v1.c1.is_integer()
            && v2.rk.is_zero()
            && v2.c1.is_integer()
            && v2.c1.is_positive()
            && v3.rk.is_zero()
            && v3.c1.is_zero()
            && v3.c2.is_positive();
        if !tri_ok {
            return Err(Error::InvalidInput(
                "lattice basis must be lower triangular: (rank_step, n, *), (0, m > 0, *), (0, 0, d > 0)"
                    .into(),
            ));
        }
        for v in basis.vectors() {
            if !(&v.c2 * int(8)).is_integer() {
                return Err(Error::InvalidInput(
                    "basis c2 entries must be multiples of 1/8".into(),
                ));
            }
        }
        lattice_coords(&target, &basis)?;
        if !target.c1.is_positive() {
            return Err(Error::InvalidInput(format!(
                "target must have positive c1, got {}",
                target.c1
            )));
        }
        Ok(WallProblem {
            target,
            basis,
            rank_step,
            strict_subobject_slope,
        })
    }

    pub fn target(&self) -> &B0Char {
        &self.target
    }

    pub fn basis(&self) -> &LatticeBasis {
        &self.basis
    }

    pub fn rank_step(&self) -> u32 {
        self.rank_step
    }

    pub fn strict_subobject_slope(&self) -> bool {
        self.strict_subobject_slope
    }

    /// The twist every wall computation happens at. Targets are
    /// normalized to it on construction.
    pub fn working_twist(&self) -> Rat {
        int(-1)
    }
}

/// The unique alpha^2 > 0 at which the two characters (both with positive
/// c1 at twist -1) have equal tilt slope. Returns `None` when no such
/// value exists, including the degenerate case of proportional slope
/// functions, which never define a crossing.
pub fn solve_alpha_sq(sub: &B0Char, quot: &B0Char) -> Option<Rat> {
    let minus_one = int(-1);
    let s = sub.at_beta(&minus_one);
    let q = quot.at_beta(&minus_one);
    if !s.c1.is_positive() || !q.c1.is_positive() {
        return None;
    }
    // (c2s - t/2 rks)/c1s = (c2q - t/2 rkq)/c1q, linear in t = alpha^2.
    let den = &q.rk * &s.c1 - &s.rk * &q.c1;
    if den.is_zero() {
        return None;
    }
    let t = int(2) * (&q.c2 * &s.c1 - &s.c2 * &q.c1) / den;
    if t.is_positive() {
        Some(t)
    } else {
        None
    }
}

/// Enumerates all numerical walls for the problem.
pub fn enumerate_walls(p: &WallProblem) -> Result<WallEnumeration, Error> {
    enumerate_impl(p, 0, 0)
}

/// Enumeration with the derived search ranges blown up (the rank window
/// by `a_pad` steps, each c2 interval by `z_pad_mult` times its own
/// width). Exists to demonstrate that the derived ranges are exhaustive:
/// the output must not change.
#[doc(hidden)]
pub fn enumerate_walls_widened(p: &WallProblem) -> Result<WallEnumeration, Error> {
    enumerate_impl(p, 10, 10)
}

fn rat_floor_i64(r: &Rat) -> i64 {
    r.floor().to_integer().to_i64().expect("window fits i64")
}

fn enumerate_impl(p: &WallProblem, a_pad: i64, z_pad_mult: i64) -> Result<WallEnumeration, Error> {
    let target = p.target();
    let step = int(p.rank_step as i64);
    let r_total = target.rk.clone();
    let c1_total = target.c1.clone();
    let d_total = target.c2.clone();
    let b_max = c1_total
        .to_integer()
        .to_i64()
        .ok_or_else(|| Error::InvalidInput("target c1 exceeds i64".into()))?;
    if b_max < 2 {
        return Ok(WallEnumeration {
            walls: Vec::new(),
            boundary: Vec::new(),
        });
    }

    let (a_lo, a_hi) = rank_window(&r_total, &c1_total, &d_total, &step, p, b_max);
    let a_lo = a_lo - a_pad;
    let a_hi = a_hi + a_pad;

    let cells: Vec<(i64, i64)> = (a_lo..=a_hi)
        .flat_map(|a| (1..b_max).map(move |b| (a, b)))
        .collect();

    let per_cell: Vec<(Vec<WallSolution>, Vec<BoundaryCase>)> = cells
        .par_iter()
        .map(|&(a, b)| scan_cell(p, a, b, z_pad_mult))
        .collect();

    let mut walls = Vec::new();
    let mut boundary = Vec::new();
    for (mut w, mut bd) in per_cell {
        walls.append(&mut w);
        boundary.append(&mut bd);
    }
    walls.sort_by(|x, y| {
        y.alpha_sq
            .cmp(&x.alpha_sq)
            .then_with(|| x.coeffs.cmp(&y.coeffs))
    });
    walls.dedup();
    boundary.sort_by_key(|x| x.coeffs);
    boundary.dedup();
    Ok(WallEnumeration { walls, boundary })
}

/// Derives the rank window [a_lo, a_hi] that the four wall conditions
/// confine any solution to; one extra step of margin on each side.
fn rank_window(
    r_total: &Rat,
    c1_total: &Rat,
    d_total: &Rat,
    step: &Rat,
    p: &WallProblem,
    b_max: i64,
) -> (i64, i64) {
    // Below: (d) forces rk(sub) * c1(target) >= rk(target) * b for some
    // integer b in (0, c1(target)); minimize the right side over b.
    let worst_b = if r_total.is_negative() {
        int(b_max - 1)
    } else {
        int(1)
    };
    let a_lo = rat_floor_i64(&(r_total * worst_b / c1_total / step)) - 1;

    // Above: for a positive-rank sub, the slope-equality value of c2 is
    // pinched between the crossing positivity bound and the discriminant
    // bound, which empties every cell once the rank is large enough. The
    // exact threshold depends on the sign of the target's c2.
    let b_big = int(b_max - 1);
    let case_bound = if d_total.is_positive() {
        &b_big * c1_total / (int(2) * d_total)
    } else if d_total.is_negative() {
        r_total + c1_total * c1_total / (int(2) * -d_total)
    } else {
        // c2(target) = 0: the smallest admissible positive c2 of a sub is
        // bounded below by one over the lattice denominator.
        let lden = p
            .basis()
            .vectors()
            .iter()
            .map(|v| v.c2.denom().clone())
            .fold(num_bigint::BigInt::from(1), num_integer_lcm);
        let lden = Rat::from_integer(lden);
        let r_pos = if r_total.is_positive() {
            r_total.clone()
        } else {
            Rat::zero()
        };
        r_pos + lden * &b_big * &b_big / int(2)
    };
    let mut hi = rat_floor_i64(&(&case_bound / step)) + 1;
    // Cells with non-positive rank and, when the target rank is positive,
    // ranks up to the target's are always inside the window.
    let base = rat_floor_i64(&(r_total / step)).max(0) + 1;
    if hi < base {
        hi = base;
    }
    (a_lo, hi)
}

fn num_integer_lcm(a: num_bigint::BigInt, b: num_bigint::BigInt) -> num_bigint::BigInt {
    let g = gcd_big(a.clone(), b.clone());
    a / g * b
}

fn gcd_big(mut a: num_bigint::BigInt, mut b: num_bigint::BigInt) -> num_bigint::BigInt {
    while !b.is_zero() {
        let r = &a % &b;
        a = std::mem::replace(&mut b, r);
    }
    a.abs()
}

/// Scans one (rank, c1) cell for walls and boundary cases.
fn scan_cell(
    p: &WallProblem,
    a: i64,
    b: i64,
    z_pad_mult: i64,
) -> (Vec<WallSolution>, Vec<BoundaryCase>) {
    let mut walls = Vec::new();
    let mut boundary = Vec::new();
    let target = p.target();
    let [v1, v2, v3] = p.basis().vectors();
    let minus_one = int(-1);

    let r1 = int(p.rank_step as i64) * int(a);
    let b1 = int(b);
    let r2 = &target.rk - &r1;
    let b2 = &target.c1 - &b1;

    // y-integrality of the c1 coordinate in the triangular basis.
    let y_num = &b1 - int(a) * &v1.c1;
    let y = &y_num / &v2.c1;
    if !y.is_integer() {
        return (walls, boundary);
    }

    // Subobject-slope condition (d): rk(sub) c1(target) vs rk(target) b.
    let d_lhs = &r1 * &target.c1 - &target.rk * &b1;
    if d_lhs.is_negative() {
        return (walls, boundary);
    }
    if d_lhs.is_zero() {
        if !p.strict_subobject_slope() {
            if let Some(bc) = boundary_case(p, a, &r1, &b1) {
                boundary.push(bc);
            }
        }
        return (walls, boundary);
    }

    // c2 values available in this cell: offset + z * step, z integral.
    let offset = int(a) * &v1.c2 + &y * &v2.c2;
    let d_step = v3.c2.clone();

    // Exact interval of c2 compatible with conditions (a) and (c).
    // Crossing positivity: c2 > c2(target) * b / c1(target).
    let lower_strict = &target.c2 * &b1 / &target.c1;
    let mut lower_weak: Option<Rat> = None;
    let mut upper_weak: Option<Rat> = None;
    let mut push_lower = |v: Rat| {
        if lower_weak.as_ref().is_none_or(|cur| v > *cur) {
            lower_weak = Some(v);
        }
    };
    let mut push_upper = |v: Rat| {
        if upper_weak.as_ref().is_none_or(|cur| v < *cur) {
            upper_weak = Some(v);
        }
    };
    if r1.is_positive() {
        push_upper(&b1 * &b1 / (int(2) * &r1));
    } else if r1.is_negative() {
        push_lower(&b1 * &b1 / (int(2) * &r1));
    }
    if r2.is_positive() {
        push_lower(&target.c2 - &b2 * &b2 / (int(2) * &r2));
    } else if r2.is_negative() {
        push_upper(&target.c2 - &b2 * &b2 / (int(2) * &r2));
    }
    let upper = match upper_weak {
        Some(u) => u,
        // Unreachable under (d): a cell passing the strict subobject
        // inequality always has rk(sub) > 0 or rk(quot) < 0.
        None => return (walls, boundary),
    };

    // Translate to the z grid.
    let mut z_lo = {
        let strict_bound = (&lower_strict - &offset) / &d_step;
        let mut z = rat_floor_i64(&strict_bound) + 1;
        if let Some(lw) = &lower_weak {
            let weak = (lw - &offset) / &d_step;
            let zc = weak.ceil().to_integer().to_i64().expect("fits i64");
            if zc > z {
                z = zc;
            }
        }
        z
    };
    let mut z_hi = rat_floor_i64(&((&upper - &offset) / &d_step));
    if z_pad_mult > 0 {
        let width = (z_hi - z_lo).max(0) + 1;
        z_lo -= z_pad_mult * width;
        z_hi += z_pad_mult * width;
    }

    for z in z_lo..=z_hi {
        let c2 = &offset + int(z) * &d_step;
        let sub = B0Char::new(r1.clone(), b1.clone(), c2, minus_one.clone());
        let quot = target.sub(&sub);
        // Conditions re-checked exactly; the interval above only prunes.
        if discriminant(&sub).is_negative() || discriminant(&quot).is_negative() {
            continue;
        }
        if lattice_coords(&sub, p.basis()).is_err() {
            continue;
        }
        let Some(alpha_sq) = solve_alpha_sq(&sub, &quot) else {
            continue;
        };
        let c_coeff = &sub.c2 * int(8);
        debug_assert!(c_coeff.is_integer());
        let coeffs = (
            a,
            b,
            c_coeff.to_integer().to_i64().expect("coefficient fits i64"),
        );
        walls.push(WallSolution {
            alpha_sq,
            sub,
            quot,
            coeffs,
        });
    }
    (walls, boundary)
}

/// Constructs the boundary record for a cell on the subobject-slope
/// boundary, when the proportional decomposition lands on the lattice.
fn boundary_case(p: &WallProblem, a: i64, r1: &Rat, b1: &Rat) -> Option<BoundaryCase> {
    let target = p.target();
    // Slopes agree for every alpha only when sub is the b/c1(target)
    // multiple of the target.
    let c2 = &target.c2 * b1 / &target.c1;
    let sub = B0Char::new(r1.clone(), b1.clone(), c2, int(-1));
    let quot = target.sub(&sub);
    if discriminant(&sub).is_negative() || discriminant(&quot).is_negative() {
        return None;
    }
    if lattice_coords(&sub, p.basis()).is_err() {
        return None;
    }
    let c_coeff = &sub.c2 * int(8);
    if !c_coeff.is_integer() {
        return None;
    }
    let b = b1.to_integer().to_i64()?;
    let c = c_coeff.to_integer().to_i64()?;
    Some(BoundaryCase {
        sub,
        quot,
        coeffs: [a, b, c],
    })
}

/// Re-validates a claimed solution from scratch against the four wall
/// conditions, independently of the enumerator's search strategy.
pub fn check_solution(p: &WallProblem, s: &WallSolution) -> bool {
    let target = p.target();
    let minus_one = int(-1);
    let sub = s.sub.at_beta(&minus_one);
    let quot = s.quot.at_beta(&minus_one);

    // Decomposition and coefficient bookkeeping.
    if sub.add(&quot) != *target {
        return false;
    }
    let (a, b, c) = s.coeffs;
    if sub.rk != int(p.rank_step as i64) * int(a)
        || sub.c1 != int(b)
        || &sub.c2 * int(8) != int(c)
    {
        return false;
    }

    // (a) discriminants.
    if discriminant(&sub).is_negative() || discriminant(&quot).is_negative() {
        return false;
    }
    // (b) integrality of both sides.
    if lattice_coords(&sub, p.basis()).is_err() || lattice_coords(&quot, p.basis()).is_err() {
        return false;
    }
    // (c) equal slopes at the recorded alpha^2 > 0, with a genuine
    // crossing (non-proportional slope functions).
    if !s.alpha_sq.is_positive() {
        return false;
    }
    let (ps, pq) = match (slope_mu_poly(&sub, &minus_one), slope_mu_poly(&quot, &minus_one)) {
        (Ok(SlopeFn::Linear(ps)), Ok(SlopeFn::Linear(pq))) => (ps, pq),
        _ => return false,
    };
    if ps == pq {
        return false;
    }
    if ps.eval(&s.alpha_sq) != pq.eval(&s.alpha_sq) {
        return false;
    }
    // (d) subobject slope, strict or not per the problem.
    let lhs = &sub.rk * &target.c1;
    let rhs = &target.rk * &sub.c1;
    if p.strict_subobject_slope() {
        lhs > rhs
    } else {
        lhs >= rhs
    }
}
