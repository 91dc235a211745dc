//! Twisted Chern-character arithmetic for modules over the even Clifford
//! algebra on P^3: modified characters, discriminant, tilt slopes, the
//! reduced central charge, the Kuznetsov-component constraint, and the
//! fixed lattice map from the fourfold's Mukai classes.
//!
//! A [`B0Char`] is the triple (rk, c1, c2) of the modified character
//! truncated in degree two, stored together with the twist at which the
//! components are expressed. The modification subtracts 11/32 of the rank
//! from ch2; retwisting by beta multiplies by exp(-beta h). The working
//! twist throughout is beta = -1.

use std::fmt;

use num_traits::{Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::rational::{int, rat, rat_string, Rat};

/// ch2 modification constant: the modified character is
/// ch(Forg F) * (1 - (11/32) l). Axiomatic input for this lattice.
pub fn ch2_modifier() -> Rat {
    rat(11, 32)
}

/// Degree <= 2 modified character of a Clifford module, expressed at the
/// twist stored in `beta`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct B0Char {
    #[serde(with = "rat_string")]
    pub rk: Rat,
    #[serde(with = "rat_string")]
    pub c1: Rat,
    #[serde(with = "rat_string")]
    pub c2: Rat,
    #[serde(with = "rat_string")]
    pub beta: Rat,
}

impl B0Char {
    pub fn new(rk: Rat, c1: Rat, c2: Rat, beta: Rat) -> Self {
        B0Char { rk, c1, c2, beta }
    }

    pub fn zero(beta: Rat) -> Self {
        B0Char::new(Rat::zero(), Rat::zero(), Rat::zero(), beta)
    }

    /// Re-expresses the same underlying character at a new twist. This is
    /// a group action of (Q, +): twisting there and back is the identity.
    pub fn at_beta(&self, beta_new: &Rat) -> B0Char {
        let delta = beta_new - &self.beta;
        let c1 = &self.c1 - &self.rk * &delta;
        let c2 = &self.c2 - &delta * &self.c1 + &self.rk * &delta * &delta / int(2);
        B0Char::new(self.rk.clone(), c1, c2, beta_new.clone())
    }

    /// True when both sides describe the same character, regardless of the
    /// twist they are stored at.
    pub fn same_class(&self, other: &B0Char) -> bool {
        *self == other.at_beta(&self.beta)
    }

    /// Componentwise sum; the right-hand side is retwisted to match.
    pub fn add(&self, other: &B0Char) -> B0Char {
        let o = other.at_beta(&self.beta);
        B0Char::new(
            &self.rk + o.rk,
            &self.c1 + o.c1,
            &self.c2 + o.c2,
            self.beta.clone(),
        )
    }

    pub fn sub(&self, other: &B0Char) -> B0Char {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> B0Char {
        self.scale(&int(-1))
    }

    pub fn scale(&self, s: &Rat) -> B0Char {
        B0Char::new(&self.rk * s, &self.c1 * s, &self.c2 * s, self.beta.clone())
    }

    /// Slope c1/rk of the untwisted character (the alpha-free slope used
    /// for heart membership of the shifted modules).
    pub fn mu_slope(&self) -> Option<Rat> {
        if self.rk.is_zero() {
            return None;
        }
        let c0 = self.at_beta(&Rat::zero());
        Some(&c0.c1 / &c0.rk)
    }
}

impl fmt::Display for B0Char {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.rk, self.c1, self.c2)
    }
}

/// Tilt parameters (alpha^2, beta) with alpha^2 > 0.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TiltParams {
    alpha_sq: Rat,
    beta: Rat,
}

impl TiltParams {
    pub fn new(alpha_sq: Rat, beta: Rat) -> Result<Self, Error> {
        if !alpha_sq.is_positive() {
            return Err(Error::InvalidInput(format!(
                "alpha^2 must be positive, got {alpha_sq}"
            )));
        }
        Ok(TiltParams { alpha_sq, beta })
    }

    pub fn alpha_sq(&self) -> &Rat {
        &self.alpha_sq
    }

    pub fn beta(&self) -> &Rat {
        &self.beta
    }
}

/// Character of a direct sum of line-bundle twists, as a Clifford-module
/// character at twist zero: for each summand O(k) with multiplicity m,
/// rank m, c1 = m k, ch2 = m k^2/2; then c2 = ch2 - (11/32) rank.
pub fn char_from_bundle(summands: &[(u32, i64)]) -> B0Char {
    let mut rk = Rat::zero();
    let mut c1 = Rat::zero();
    let mut ch2 = Rat::zero();
    for &(mult, k) in summands {
        let m = int(mult as i64);
        rk += &m;
        c1 += &m * int(k);
        ch2 += &m * int(k) * int(k) / int(2);
    }
    let c2 = ch2 - ch2_modifier() * &rk;
    B0Char::new(rk, c1, c2, Rat::zero())
}

/// Character, at twist -1, of the j-th module in the standard sequence:
/// even entries are the rank-4 even Clifford algebra twisted by O(j/2),
/// odd entries the odd part twisted accordingly.
pub fn b_char(j: i64) -> B0Char {
    let m = j.div_euclid(2);
    let summands: Vec<(u32, i64)> = if j.rem_euclid(2) == 0 {
        // even part: O + O(-1) + O(-2)^2, twisted by O(m)
        vec![(1, m), (1, m - 1), (2, m - 2)]
    } else {
        // odd part: O^2 + O(-1) + O(-2), twisted by O(m)
        vec![(2, m), (1, m - 1), (1, m - 2)]
    };
    char_from_bundle(&summands).at_beta(&int(-1))
}

/// Discriminant c1^2 - 2 rk c2; identical at every twist.
pub fn discriminant(c: &B0Char) -> Rat {
    &c.c1 * &c.c1 - int(2) * &c.rk * &c.c2
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Slope {
    Finite(Rat),
    Infinite,
}

/// Tilt slope (c2 - (alpha^2/2) rk) / c1 at the given parameters, with the
/// character retwisted internally. c1 = 0 gives +infinity; c1 < 0 is an
/// error (the object is not in the heart; the caller must pass the shift,
/// i.e. the negated character).
pub fn slope_mu(c: &B0Char, p: &TiltParams) -> Result<Slope, Error> {
    match slope_mu_poly(c, p.beta())? {
        SlopeFn::Infinite => Ok(Slope::Infinite),
        SlopeFn::Linear(poly) => Ok(Slope::Finite(poly.eval(p.alpha_sq()))),
    }
}

/// Tilt slope as an exact linear function of alpha^2.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SlopePoly {
    /// Value at alpha^2 = 0, namely c2/c1.
    pub constant: Rat,
    /// Coefficient of alpha^2, namely -rk/(2 c1).
    pub alpha_sq_coeff: Rat,
}

impl SlopePoly {
    pub fn eval(&self, alpha_sq: &Rat) -> Rat {
        &self.constant + &self.alpha_sq_coeff * alpha_sq
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SlopeFn {
    Linear(SlopePoly),
    Infinite,
}

/// Slope as a function of alpha^2 at the given twist. Wall solving needs
/// the slope symbolically, not numerically.
pub fn slope_mu_poly(c: &B0Char, beta: &Rat) -> Result<SlopeFn, Error> {
    let ct = c.at_beta(beta);
    if ct.c1.is_negative() {
        return Err(Error::NotInHeart(ct.c1));
    }
    if ct.c1.is_zero() {
        return Ok(SlopeFn::Infinite);
    }
    Ok(SlopeFn::Linear(SlopePoly {
        constant: &ct.c2 / &ct.c1,
        alpha_sq_coeff: -&ct.rk / (int(2) * &ct.c1),
    }))
}

/// The reduced central charge on the Kuznetsov side: the pair
/// (Re, Im) = (c1 at twist -1, -rk). Its slope ordering agrees with the
/// tilt slopes on constrained characters.
pub fn reduced_central_charge(c: &B0Char) -> (Rat, Rat) {
    let ct = c.at_beta(&int(-1));
    (ct.c1, -ct.rk)
}

/// Whether the character lies on the Kuznetsov-component line: expressed
/// at twist -1, c2 = -(7/32) rk.
pub fn ku_constraint_holds(c: &B0Char) -> bool {
    let ct = c.at_beta(&int(-1));
    ct.c2 == rat(-7, 32) * &ct.rk
}

/// Image of the first Mukai generator under the Clifford-side lattice
/// identification, at twist -1. Fixed reference value; its derivation is
/// categorical and outside the numerical scope of this crate.
pub fn clifford_image_lambda1() -> B0Char {
    B0Char::new(int(4), int(3), rat(-7, 8), int(-1))
}

/// Image of the second Mukai generator; see [`clifford_image_lambda1`].
pub fn clifford_image_lambda2() -> B0Char {
    B0Char::new(int(-8), int(0), rat(7, 4), int(-1))
}

/// a times the image of the first generator plus b times the image of the
/// second, at twist -1.
pub fn clifford_image(a: &Rat, b: &Rat) -> B0Char {
    clifford_image_lambda1()
        .scale(a)
        .add(&clifford_image_lambda2().scale(b))
}

/// Three characters at twist -1 spanning the integral character lattice.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LatticeBasis {
    vectors: [B0Char; 3],
}

impl LatticeBasis {
    pub fn new(vectors: [B0Char; 3]) -> Result<Self, Error> {
        let minus_one = int(-1);
        for v in &vectors {
            if v.beta != minus_one {
                return Err(Error::InvalidInput(format!(
                    "basis characters must be expressed at twist -1, got {}",
                    v.beta
                )));
            }
        }
        let b = LatticeBasis { vectors };
        if b.det().is_zero() {
            return Err(Error::DegenerateBasis);
        }
        Ok(b)
    }

    /// The standard basis (4, 1, 1/8), (0, 2, 0), (0, 0, 1): the character
    /// of the odd Clifford part together with the visible generators of
    /// the c1 and c2 directions.
    pub fn clifford() -> Self {
        LatticeBasis::new([
            B0Char::new(int(4), int(1), rat(1, 8), int(-1)),
            B0Char::new(int(0), int(2), int(0), int(-1)),
            B0Char::new(int(0), int(0), int(1), int(-1)),
        ])
        .expect("nondegenerate")
    }

    pub fn vectors(&self) -> &[B0Char; 3] {
        &self.vectors
    }

    fn det(&self) -> Rat {
        let [a, b, c] = &self.vectors;
        det3(
            [&a.rk, &b.rk, &c.rk],
            [&a.c1, &b.c1, &c.c1],
            [&a.c2, &b.c2, &c.c2],
        )
    }
}

fn det3(r0: [&Rat; 3], r1: [&Rat; 3], r2: [&Rat; 3]) -> Rat {
    r0[0] * (r1[1] * r2[2] - r1[2] * r2[1]) - r0[1] * (r1[0] * r2[2] - r1[2] * r2[0])
        + r0[2] * (r1[0] * r2[1] - r1[1] * r2[0])
}

/// Rational coordinates of `c` in the given basis (Cramer's rule).
/// The character is retwisted to -1 first.
pub fn lattice_coords_rational(c: &B0Char, basis: &LatticeBasis) -> (Rat, Rat, Rat) {
    let ct = c.at_beta(&int(-1));
    let [a, b, v] = basis.vectors();
    let det = basis.det();
    let dx = det3(
        [&ct.rk, &b.rk, &v.rk],
        [&ct.c1, &b.c1, &v.c1],
        [&ct.c2, &b.c2, &v.c2],
    );
    let dy = det3(
        [&a.rk, &ct.rk, &v.rk],
        [&a.c1, &ct.c1, &v.c1],
        [&a.c2, &ct.c2, &v.c2],
    );
    let dz = det3(
        [&a.rk, &b.rk, &ct.rk],
        [&a.c1, &b.c1, &ct.c1],
        [&a.c2, &b.c2, &ct.c2],
    );
    (dx / &det, dy / &det, dz / &det)
}

/// Integer coordinates of `c` in the basis; a non-integral solution is an
/// error carrying the rational coordinates.
pub fn lattice_coords(c: &B0Char, basis: &LatticeBasis) -> Result<(i64, i64, i64), Error> {
    let (x, y, z) = lattice_coords_rational(c, basis);
    if !(x.is_integer() && y.is_integer() && z.is_integer()) {
        return Err(Error::Integrality(x, y, z));
    }
    let to = |r: &Rat| -> Result<i64, Error> {
        r.to_integer()
            .to_i64()
            .ok_or_else(|| Error::InvalidInput("coordinate exceeds i64".into()))
    };
    Ok((to(&x)?, to(&y)?, to(&z)?))
}
