//! Euler and Mukai pairings on the cubic fourfold, curve classes, mutation
//! calculus at the level of numerical K-theory, and the projection to the
//! Kuznetsov component.
//!
//! The Euler pairing is computed exclusively through
//! chi(E, F) = integral of ch(E)^dual * ch(F) * td(Y). Curve classes are
//! parameterized by (degree, Euler characteristic) alone: on Y the top
//! Chern piece is determined from chi by inverting the same integral.

use std::fmt;

use crate::error::Error;
use crate::intersection::{exp_class, todd, GradedClass, VarietyId};
use crate::rational::{int, rat, Rat};

const Y: VarietyId = VarietyId::CubicFourfold;

/// Numerical K-theory class on the cubic fourfold, stored as its Chern
/// character.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KClass {
    ch: GradedClass,
}

impl KClass {
    pub fn from_graded(ch: GradedClass) -> Result<Self, Error> {
        if ch.variety() != Y {
            return Err(Error::VarietyMismatch(ch.variety(), Y));
        }
        Ok(KClass { ch })
    }

    pub fn zero() -> Self {
        KClass {
            ch: GradedClass::zero(Y),
        }
    }

    /// [O_Y(n H)].
    pub fn line_bundle(n: i64) -> Self {
        KClass {
            ch: exp_class(Y, &int(n)),
        }
    }

    pub fn structure_sheaf() -> Self {
        KClass::line_bundle(0)
    }

    pub fn ch(&self) -> &GradedClass {
        &self.ch
    }

    /// Raw coefficients of 1, H, H^2, H^3, H^4.
    pub fn components(&self) -> [Rat; 5] {
        [
            self.ch.coeff(0),
            self.ch.coeff(1),
            self.ch.coeff(2),
            self.ch.coeff(3),
            self.ch.coeff(4),
        ]
    }

    /// Display components: the first four entries are coefficients of
    /// 1, H, H^2, H^3; the last entry is the degree of the codimension-4
    /// piece (its coefficient times deg H^4 = 3), which is how these
    /// tuples are conventionally written.
    pub fn display_components(&self) -> [Rat; 5] {
        let mut c = self.components();
        c[4] = &c[4] * int(Y.h_top());
        c
    }

    pub fn add(&self, other: &Self) -> Self {
        KClass {
            ch: self.ch.add(&other.ch).expect("both on Y"),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        KClass {
            ch: self.ch.sub(&other.ch).expect("both on Y"),
        }
    }

    pub fn neg(&self) -> Self {
        KClass { ch: self.ch.neg() }
    }

    pub fn scale(&self, s: &Rat) -> Self {
        KClass {
            ch: self.ch.scale(s),
        }
    }

    pub fn rank(&self) -> Rat {
        self.ch.coeff(0)
    }
}

impl fmt::Display for KClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .display_components()
            .iter()
            .map(|c| c.to_string())
            .collect();
        write!(f, "({})", parts.join(", "))
    }
}

/// Curve input: degree H.C and the Euler characteristic of the given
/// curve sheaf. Genus never enters independently.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CurveData {
    degree: u32,
    euler_char: i64,
}

impl CurveData {
    pub fn new(degree: u32, euler_char: i64) -> Result<Self, Error> {
        if degree == 0 {
            return Err(Error::InvalidInput("curve degree must be >= 1".into()));
        }
        Ok(CurveData { degree, euler_char })
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn euler_char(&self) -> i64 {
        self.euler_char
    }
}

/// chi(E, F) = integral over Y of ch(E)^dual * ch(F) * td(Y).
pub fn euler_pairing(e: &KClass, f: &KClass) -> Rat {
    let td = todd(Y).expect("Todd of the fourfold");
    e.ch()
        .dual()
        .mul(f.ch())
        .and_then(|p| p.mul(td))
        .expect("all on Y")
        .integrate()
}

/// Mukai pairing (e, f) = -chi(e, f); symmetric on the Kuznetsov lattice.
pub fn mukai_pairing(e: &KClass, f: &KClass) -> Rat {
    -euler_pairing(e, f)
}

/// Class of a one-dimensional sheaf of degree d and Euler characteristic
/// chi: d times the line class (H^3/3) plus x times the point class
/// (H^4/3), where x = chi - (3/2) d makes the Euler integral come out to
/// chi.
pub fn curve_class(c: &CurveData) -> KClass {
    let d = int(c.degree as i64);
    let x = int(c.euler_char) - rat(3, 2) * &d;
    let ch = GradedClass::from_coeffs(
        Y,
        [
            Rat::from_integer(0.into()),
            Rat::from_integer(0.into()),
            Rat::from_integer(0.into()),
            &d / int(3),
            &x / int(3),
        ],
    );
    KClass { ch }
}

/// [O_line], the structure sheaf of a line (degree 1, chi = 1).
pub fn line_structure_class() -> KClass {
    curve_class(&CurveData::new(1, 1).expect("degree 1"))
}

/// Numerical left mutation along an exceptional class: [f] - chi(e, f) [e].
/// Exceptionality of `e` is the caller's responsibility; only chi(e,e) = 1
/// is meaningful numerically.
pub fn left_mutation(e: &KClass, f: &KClass) -> KClass {
    f.sub(&e.scale(&euler_pairing(e, f)))
}

/// Numerical right mutation: [f] - chi(f, e) [e].
pub fn right_mutation(e: &KClass, f: &KClass) -> KClass {
    f.sub(&e.scale(&euler_pairing(f, e)))
}

/// The two generators of the A2 sublattice of the Kuznetsov component:
/// lambda_i is the triple left mutation of [O_line(i H)] through O(2H),
/// O(H), O.
pub fn lambda_classes() -> (KClass, KClass) {
    (lambda(1), lambda(2))
}

fn lambda(i: i64) -> KClass {
    let o_l_i = curve_class(&CurveData::new(1, i + 1).expect("line"));
    let step1 = left_mutation(&KClass::line_bundle(2), &o_l_i);
    let step2 = left_mutation(&KClass::line_bundle(1), &step1);
    left_mutation(&KClass::line_bundle(0), &step2)
}

/// Projection to the Kuznetsov component at the K-theory level:
/// right mutation through O(-H) of the right mutation through O(-2H) of
/// the left mutation through O.
pub fn project_to_ku(f: &KClass) -> KClass {
    let step1 = left_mutation(&KClass::line_bundle(0), f);
    let step2 = right_mutation(&KClass::line_bundle(-2), &step1);
    right_mutation(&KClass::line_bundle(-1), &step2)
}

/// The same projection with the mutations reordered (left mutation last).
/// Agrees with [`project_to_ku`] on every class; kept as a second code
/// path and cross-checked in tests.
pub fn project_to_ku_alt(f: &KClass) -> KClass {
    let step1 = right_mutation(&KClass::line_bundle(-2), f);
    let step2 = right_mutation(&KClass::line_bundle(-1), &step1);
    left_mutation(&KClass::line_bundle(0), &step2)
}

/// [I_Gamma(H)] for an elliptic quintic Gamma: [O_Y(H)] minus the class of
/// O_Gamma(H) (degree 5, chi = 5). Its projection is the class of the
/// instanton bundle attached to Gamma.
pub fn quintic_ideal_class() -> KClass {
    let gamma = curve_class(&CurveData::new(5, 5).expect("quintic"));
    KClass::line_bundle(1).sub(&gamma)
}

/// Class of the projected instanton sheaf attached to a smooth conic:
/// 2 [O_Y] - [theta_C(H)] - 2 [O_Y(-H)], where theta_C(H) is the degree-1
/// line bundle on the conic (degree 2, chi = 2).
pub fn conic_instanton_class() -> KClass {
    let theta = curve_class(&CurveData::new(2, 2).expect("conic"));
    KClass::structure_sheaf()
        .scale(&int(2))
        .sub(&theta)
        .sub(&KClass::line_bundle(-1).scale(&int(2)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn disp(k: &KClass) -> [Rat; 5] {
        k.display_components()
    }

    #[test]
    fn euler_pairing_on_twists() {
        let o = KClass::structure_sheaf();
        assert_eq!(euler_pairing(&o, &KClass::line_bundle(1)), int(6));
        assert_eq!(euler_pairing(&o, &o), int(1));
        // dim Sym^2 C^6 = 21.
        assert_eq!(euler_pairing(&o, &KClass::line_bundle(2)), int(21));
    }

    #[test]
    fn curve_classes() {
        let line = line_structure_class();
        assert_eq!(
            line.components(),
            [int(0), int(0), int(0), rat(1, 3), rat(-1, 6)]
        );
        // twists of the line reproduce chi = m + 1 through the pairing
        let o = KClass::structure_sheaf();
        for m in 0..=3 {
            let c = curve_class(&CurveData::new(1, m + 1).unwrap());
            assert_eq!(euler_pairing(&o, &c), int(m + 1));
        }
        let quintic = curve_class(&CurveData::new(5, 5).unwrap());
        assert_eq!(
            quintic.components(),
            [int(0), int(0), int(0), rat(5, 3), rat(-5, 6)]
        );
        let conic = curve_class(&CurveData::new(2, 2).unwrap());
        assert_eq!(
            conic.components(),
            [int(0), int(0), int(0), rat(2, 3), rat(-1, 3)]
        );
        assert!(CurveData::new(0, 1).is_err());
    }

    #[test]
    fn mutation_examples() {
        let o = KClass::structure_sheaf();
        assert_eq!(left_mutation(&o, &o), KClass::zero());

        let o_l_1 = curve_class(&CurveData::new(1, 2).unwrap());
        assert_eq!(euler_pairing(&o, &o_l_1), int(2));
        assert_eq!(
            left_mutation(&o, &o_l_1),
            o_l_1.sub(&o.scale(&int(2)))
        );
        // chi(O(2H), O_line(H)) = chi of O(-1) on P^1 = 0
        assert_eq!(left_mutation(&KClass::line_bundle(2), &o_l_1), o_l_1);

        let om = KClass::line_bundle(-1);
        assert_eq!(right_mutation(&om, &om), KClass::zero());
        // chi(f, e) = 0 leaves f unchanged
        assert_eq!(euler_pairing(&o_l_1, &om), int(0));
        assert_eq!(right_mutation(&om, &o_l_1), o_l_1);
    }

    #[test]
    fn lambda_characters() {
        let (l1, l2) = lambda_classes();
        assert_eq!(
            disp(&l1),
            [int(3), int(-1), rat(-1, 2), rat(1, 6), rat(3, 8)]
        );
        assert_eq!(
            l1.components(),
            [int(3), int(-1), rat(-1, 2), rat(1, 6), rat(1, 8)]
        );
        assert_eq!(disp(&l2), [int(-3), int(2), int(0), rat(-1, 3), int(0)]);
        let v = l1.add(&l2).scale(&int(2));
        assert_eq!(
            disp(&v),
            [int(0), int(2), int(-1), rat(-1, 3), rat(3, 4)]
        );
    }

    #[test]
    fn mukai_gram_matrix() {
        let (l1, l2) = lambda_classes();
        assert_eq!(mukai_pairing(&l1, &l1), int(2));
        assert_eq!(mukai_pairing(&l2, &l2), int(2));
        assert_eq!(mukai_pairing(&l1, &l2), int(-1));
        assert_eq!(mukai_pairing(&l2, &l1), int(-1));
        assert_eq!(mukai_pairing(&KClass::zero(), &l1), int(0));
    }

    #[test]
    fn lambdas_are_orthogonal_to_the_exceptional_collection() {
        let (l1, l2) = lambda_classes();
        for i in 0..=2 {
            let e = KClass::line_bundle(i);
            assert_eq!(euler_pairing(&e, &l1), int(0), "i = {i}");
            assert_eq!(euler_pairing(&e, &l2), int(0), "i = {i}");
        }
    }

    #[test]
    fn projection_of_the_quintic_ideal() {
        let (l1, l2) = lambda_classes();
        let v = l1.add(&l2).scale(&int(2));
        assert_eq!(project_to_ku(&quintic_ideal_class()), v);
    }

    #[test]
    fn projection_of_the_shifted_line() {
        let (l1, l2) = lambda_classes();
        let p_ell = project_to_ku(&line_structure_class().neg());
        assert_eq!(p_ell, l1.add(&l2));
    }

    #[test]
    fn line_ideal_in_a_hyperplane_section() {
        // [I_{line/X}] = [O] - [O(-H)] - [O_line]; it is already
        // orthogonal on the correct sides, so the single right mutation
        // through O(-H) and the full projection agree on it and both
        // land on the primitive class.
        let (l1, l2) = lambda_classes();
        let ideal = KClass::structure_sheaf()
            .sub(&KClass::line_bundle(-1))
            .sub(&line_structure_class());
        let om = KClass::line_bundle(-1);
        assert_eq!(right_mutation(&om, &ideal), l1.add(&l2));
        assert_eq!(project_to_ku(&ideal), l1.add(&l2));
    }

    #[test]
    fn projection_fixes_orthogonal_classes() {
        let (l1, l2) = lambda_classes();
        assert_eq!(project_to_ku(&l1), l1);
        assert_eq!(project_to_ku(&l2), l2);
        let mix = l1.scale(&rat(2, 3)).sub(&l2.scale(&int(5)));
        assert_eq!(project_to_ku(&mix), mix);
    }

    #[test]
    fn projection_orders_agree() {
        for f in [
            KClass::line_bundle(1),
            KClass::line_bundle(-2),
            quintic_ideal_class(),
            line_structure_class(),
            curve_class(&CurveData::new(7, -3).unwrap()),
        ] {
            assert_eq!(project_to_ku(&f), project_to_ku_alt(&f));
        }
    }

    #[test]
    fn conic_instanton_character() {
        let e_c = conic_instanton_class();
        assert_eq!(
            disp(&e_c),
            [int(0), int(2), int(-1), rat(-1, 3), rat(3, 4)]
        );
        assert_eq!(e_c.rank(), int(0));
        let (l1, l2) = lambda_classes();
        assert_eq!(e_c, l1.add(&l2).scale(&int(2)));
        assert_eq!(mukai_pairing(&e_c, &e_c), int(8));
        assert_eq!(mukai_pairing(&l1.add(&l2), &l1.add(&l2)), int(2));
    }
}
