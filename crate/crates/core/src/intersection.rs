//! Truncated graded-ring arithmetic for cohomology classes generated by the
//! hyperplane class, with Chern/Todd calculus and integration.
//!
//! A [`GradedClass`] on an ambient variety is the vector of exact rational
//! coefficients of 1, H, H^2, ..., H^dim. Products truncate above the
//! ambient dimension, which is the cohomological truth rather than an
//! approximation. Only the hyperplane powers are tracked: primitive cycle
//! classes are rejected at the type level.

use std::fmt;
use std::sync::OnceLock;

use num_traits::{One, Zero};

use crate::error::Error;
use crate::rational::{int, Rat};

/// Ambient variety, identified by its dimension and the degree of H^dim.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum VarietyId {
    P3,
    P5,
    CubicFourfold,
}

impl VarietyId {
    pub fn dim(self) -> usize {
        match self {
            VarietyId::P3 => 3,
            VarietyId::P5 => 5,
            VarietyId::CubicFourfold => 4,
        }
    }

    /// Degree of the top self-intersection of the hyperplane class.
    /// For the cubic fourfold this is the degree 3 of the hypersurface,
    /// a standard derived input (it is what "cubic" means numerically).
    pub fn h_top(self) -> i64 {
        match self {
            VarietyId::P3 | VarietyId::P5 => 1,
            VarietyId::CubicFourfold => 3,
        }
    }
}

impl fmt::Display for VarietyId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            VarietyId::P3 => write!(f, "P3"),
            VarietyId::P5 => write!(f, "P5"),
            VarietyId::CubicFourfold => write!(f, "cubic fourfold"),
        }
    }
}

/// Polynomial in the hyperplane class truncated at the ambient dimension.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradedClass {
    variety: VarietyId,
    coeffs: Vec<Rat>,
}

impl GradedClass {
    pub fn zero(variety: VarietyId) -> Self {
        GradedClass {
            variety,
            coeffs: vec![Rat::zero(); variety.dim() + 1],
        }
    }

    pub fn one(variety: VarietyId) -> Self {
        let mut c = GradedClass::zero(variety);
        c.coeffs[0] = Rat::one();
        c
    }

    /// H^k, truncated to zero above the ambient dimension.
    pub fn h_power(variety: VarietyId, k: usize) -> Self {
        let mut c = GradedClass::zero(variety);
        if k <= variety.dim() {
            c.coeffs[k] = Rat::one();
        }
        c
    }

    /// Builds a class from the coefficients of 1, H, ..., padding with
    /// zeros and truncating above the dimension.
    pub fn from_coeffs<I: IntoIterator<Item = Rat>>(variety: VarietyId, coeffs: I) -> Self {
        let mut c = GradedClass::zero(variety);
        for (k, v) in coeffs.into_iter().enumerate() {
            if k <= variety.dim() {
                c.coeffs[k] = v;
            }
        }
        c
    }

    pub fn variety(&self) -> VarietyId {
        self.variety
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> Rat {
        self.coeffs.get(k).cloned().unwrap_or_else(Rat::zero)
    }

    fn check_same(&self, other: &Self) -> Result<(), Error> {
        if self.variety != other.variety {
            return Err(Error::VarietyMismatch(self.variety, other.variety));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self, Error> {
        self.check_same(other)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a + b)
            .collect();
        Ok(GradedClass {
            variety: self.variety,
            coeffs,
        })
    }

    pub fn sub(&self, other: &Self) -> Result<Self, Error> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        self.scale(&int(-1))
    }

    pub fn scale(&self, s: &Rat) -> Self {
        GradedClass {
            variety: self.variety,
            coeffs: self.coeffs.iter().map(|c| c * s).collect(),
        }
    }

    /// Truncated convolution of coefficient vectors.
    pub fn mul(&self, other: &Self) -> Result<Self, Error> {
        self.check_same(other)?;
        let dim = self.variety.dim();
        let mut coeffs = vec![Rat::zero(); dim + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if i + j > dim {
                    break;
                }
                coeffs[i + j] += a * b;
            }
        }
        Ok(GradedClass {
            variety: self.variety,
            coeffs,
        })
    }

    /// The degree of the top piece: coefficient of H^dim times deg(H^dim).
    pub fn integrate(&self) -> Rat {
        let dim = self.variety.dim();
        &self.coeffs[dim] * int(self.variety.h_top())
    }

    /// Sign flip in odd degrees; the operation behind ch(E^dual).
    pub fn dual(&self) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(k, c)| if k % 2 == 0 { c.clone() } else { -c })
            .collect();
        GradedClass {
            variety: self.variety,
            coeffs,
        }
    }

    /// Multiplicative inverse of a unital class (degree-0 coefficient 1).
    pub fn inverse(&self) -> Result<Self, Error> {
        if !self.coeffs[0].is_one() {
            return Err(Error::NonUnital(self.coeffs[0].clone()));
        }
        let dim = self.variety.dim();
        let mut inv = vec![Rat::zero(); dim + 1];
        inv[0] = Rat::one();
        for k in 1..=dim {
            let mut acc = Rat::zero();
            for j in 1..=k {
                acc += &self.coeffs[j] * &inv[k - j];
            }
            inv[k] = -acc;
        }
        Ok(GradedClass {
            variety: self.variety,
            coeffs: inv,
        })
    }

    /// `(1 + k*H)^n` truncated, with exact binomial expansion.
    pub fn binomial(variety: VarietyId, k: i64, n: u32) -> Self {
        let mut acc = GradedClass::one(variety);
        let lin = GradedClass::from_coeffs(variety, [int(1), int(k)]);
        for _ in 0..n {
            acc = acc.mul(&lin).expect("same variety");
        }
        acc
    }
}

impl fmt::Display for GradedClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coeffs.iter().map(|c| c.to_string()).collect();
        write!(f, "({})", parts.join(", "))
    }
}

/// exp(k*H) = sum (k*H)^n / n!, truncated at the ambient dimension.
/// This is ch of the line bundle O(k*H).
pub fn exp_class(variety: VarietyId, k: &Rat) -> GradedClass {
    let dim = variety.dim();
    let mut coeffs = Vec::with_capacity(dim + 1);
    let mut term = Rat::one();
    coeffs.push(term.clone());
    for n in 1..=dim {
        term = term * k / int(n as i64);
        coeffs.push(term.clone());
    }
    GradedClass::from_coeffs(variety, coeffs)
}

/// Total Chern class of the tangent bundle. For P^n this is (1+H)^(n+1);
/// for the cubic fourfold the Euler sequence of the hypersurface gives
/// (1+H)^6 * (1+3H)^(-1), truncated.
pub fn tangent_chern(variety: VarietyId) -> GradedClass {
    match variety {
        VarietyId::P3 => GradedClass::binomial(variety, 1, 4),
        VarietyId::P5 => GradedClass::binomial(variety, 1, 6),
        VarietyId::CubicFourfold => {
            let ambient = GradedClass::binomial(variety, 1, 6);
            let normal = GradedClass::from_coeffs(variety, [int(1), int(3)]);
            ambient
                .mul(&normal.inverse().expect("unital"))
                .expect("same variety")
        }
    }
}

/// Todd class from a total Chern class, through degree 4:
/// td = 1 + c1/2 + (c1^2+c2)/12 + c1 c2/24 + (-c1^4+4c1^2c2+3c2^2+c1c3-c4)/720.
pub fn todd_from_chern(c: &GradedClass) -> Result<GradedClass, Error> {
    if !c.coeff(0).is_one() {
        return Err(Error::NonUnital(c.coeff(0)));
    }
    if c.variety().dim() > 4 {
        return Err(Error::ToddUnsupported(c.variety()));
    }
    let c1 = c.coeff(1);
    let c2 = c.coeff(2);
    let c3 = c.coeff(3);
    let c4 = c.coeff(4);
    let td1 = &c1 / int(2);
    let td2 = (&c1 * &c1 + &c2) / int(12);
    let td3 = &c1 * &c2 / int(24);
    let c1sq = &c1 * &c1;
    let td4 = (-(&c1sq * &c1sq) + int(4) * &c1sq * &c2 + int(3) * &c2 * &c2 + &c1 * &c3 - &c4)
        / int(720);
    Ok(GradedClass::from_coeffs(
        c.variety(),
        [Rat::one(), td1, td2, td3, td4],
    ))
}

/// Todd class of the variety itself, memoized. Not available on P5,
/// where only character arithmetic is supported.
pub fn todd(variety: VarietyId) -> Result<&'static GradedClass, Error> {
    static TD_P3: OnceLock<GradedClass> = OnceLock::new();
    static TD_Y: OnceLock<GradedClass> = OnceLock::new();
    match variety {
        VarietyId::P3 => Ok(TD_P3.get_or_init(|| {
            todd_from_chern(&tangent_chern(VarietyId::P3)).expect("degree 3")
        })),
        VarietyId::CubicFourfold => Ok(TD_Y.get_or_init(|| {
            todd_from_chern(&tangent_chern(VarietyId::CubicFourfold)).expect("degree 4")
        })),
        VarietyId::P5 => Err(Error::ToddUnsupported(VarietyId::P5)),
    }
}
