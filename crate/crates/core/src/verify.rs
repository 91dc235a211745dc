//! Regression suite against the published reference values.
//!
//! Every check embeds its expected value as data next to a `paper_ref`
//! label naming the published quantity it reproduces, so coverage can be
//! audited by reading this file top to bottom. Two checks record known
//! internal inconsistencies in the published source: for those the
//! status is `paper_internal_discrepancy`, all published variants are
//! listed alongside the engine's exactly derived value, and the status
//! never flips to pass or fail.

use serde::{Deserialize, Serialize};

use crate::clifford::{
    b_char, clifford_image, discriminant, ku_constraint_holds, reduced_central_charge,
    slope_mu_poly, B0Char, SlopeFn,
};
use crate::rational::int;
use crate::riemann_roch::{
    conic_instanton_class, euler_pairing, lambda_classes, line_structure_class, mukai_pairing,
    project_to_ku, quintic_ideal_class, KClass,
};
use crate::walls::{check_solution, enumerate_walls, WallProblem};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum CheckStatus {
    #[serde(rename = "pass")]
    Pass,
    #[serde(rename = "fail")]
    Fail,
    #[serde(rename = "paper_internal_discrepancy")]
    PaperInternalDiscrepancy,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub paper_ref: String,
    pub expected: String,
    pub computed: String,
    pub status: CheckStatus,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub checks: Vec<Check>,
}

impl VerifyReport {
    pub fn counts(&self) -> (usize, usize, usize) {
        let mut pass = 0;
        let mut fail = 0;
        let mut disc = 0;
        for c in &self.checks {
            match c.status {
                CheckStatus::Pass => pass += 1,
                CheckStatus::Fail => fail += 1,
                CheckStatus::PaperInternalDiscrepancy => disc += 1,
            }
        }
        (pass, fail, disc)
    }

    pub fn has_failures(&self) -> bool {
        self.checks.iter().any(|c| c.status == CheckStatus::Fail)
    }
}

fn tuple5(v: &KClass) -> String {
    let parts: Vec<String> = v
        .display_components()
        .iter()
        .map(|c| c.to_string())
        .collect();
    format!("({})", parts.join(", "))
}

fn slope_poly_string(c: &B0Char) -> String {
    match slope_mu_poly(c, &int(-1)) {
        Ok(SlopeFn::Linear(p)) => format!("{} + {} alpha^2", p.constant, p.alpha_sq_coeff),
        Ok(SlopeFn::Infinite) => "+infinity".to_string(),
        Err(e) => format!("error: {e}"),
    }
}

struct Fixture {
    name: &'static str,
    paper_ref: &'static str,
    expected: String,
    computed: String,
}

/// Runs the full suite, or the subset whose check names start with
/// `filter` when one is given.
pub fn run_verify(filter: Option<&str>) -> VerifyReport {
    let mut checks = Vec::new();
    for f in fixtures() {
        let status = if f.expected == f.computed {
            CheckStatus::Pass
        } else {
            CheckStatus::Fail
        };
        checks.push(Check {
            name: f.name.to_string(),
            paper_ref: f.paper_ref.to_string(),
            expected: f.expected,
            computed: f.computed,
            status,
        });
    }
    checks.extend(discrepancy_checks());
    if let Some(prefix) = filter {
        checks.retain(|c| c.name.starts_with(prefix));
    }
    VerifyReport { checks }
}

fn fixtures() -> Vec<Fixture> {
    let (l1, l2) = lambda_classes();
    let v = l1.add(&l2).scale(&int(2));

    let mut out = Vec::new();
    let mut push = |name: &'static str, paper_ref: &'static str, expected: String, computed: String| {
        out.push(Fixture {
            name,
            paper_ref,
            expected,
            computed,
        });
    };

    // Chern characters of the Mukai generators and the doubled vector.
    push(
        "chern.lambda1",
        "lambda-class character table",
        "(3, -1, -1/2, 1/6, 3/8)".into(),
        tuple5(&l1),
    );
    push(
        "chern.lambda2",
        "lambda-class character table",
        "(-3, 2, 0, -1/3, 0)".into(),
        tuple5(&l2),
    );
    push(
        "chern.2l1+2l2",
        "character of the doubled instanton vector",
        "(0, 2, -1, -1/3, 3/4)".into(),
        tuple5(&v),
    );

    // Mukai Gram matrix on the A2 sublattice.
    push(
        "mukai.l1_l1",
        "Mukai pairing matrix of the lambda classes",
        "2".into(),
        mukai_pairing(&l1, &l1).to_string(),
    );
    push(
        "mukai.l1_l2",
        "Mukai pairing matrix of the lambda classes",
        "-1".into(),
        mukai_pairing(&l1, &l2).to_string(),
    );
    push(
        "mukai.l2_l2",
        "Mukai pairing matrix of the lambda classes",
        "2".into(),
        mukai_pairing(&l2, &l2).to_string(),
    );

    // Orthogonality to the exceptional collection.
    for (name, i) in [
        ("mukai.orth_o", 0),
        ("mukai.orth_oh", 1),
        ("mukai.orth_o2h", 2),
    ] {
        let e = KClass::line_bundle(i);
        push(
            name,
            "lambda classes are orthogonal to O, O(H), O(2H)",
            "(0, 0)".into(),
            format!(
                "({}, {})",
                euler_pairing(&e, &l1),
                euler_pairing(&e, &l2)
            ),
        );
    }

    // Riemann-Roch values on the fourfold and the projective space.
    push(
        "rr.chi_o_oh",
        "dimension of the space of hyperplane sections",
        "6".into(),
        euler_pairing(&KClass::structure_sheaf(), &KClass::line_bundle(1)).to_string(),
    );
    push(
        "rr.chi_o_o2h",
        "dimension of the space of quadric sections",
        "21".into(),
        euler_pairing(&KClass::structure_sheaf(), &KClass::line_bundle(2)).to_string(),
    );
    push(
        "rr.chi_o_o",
        "Euler characteristic of the structure sheaf",
        "1".into(),
        euler_pairing(&KClass::structure_sheaf(), &KClass::structure_sheaf()).to_string(),
    );
    {
        let td = crate::intersection::todd(crate::intersection::VarietyId::P3).unwrap();
        push(
            "rr.p3_coefficients",
            "Riemann-Roch pairing coefficients on P3",
            "(1, 11/6, 2, 1)".into(),
            format!(
                "({}, {}, {}, {})",
                td.coeff(3),
                td.coeff(2),
                td.coeff(1),
                td.coeff(0)
            ),
        );
    }

    // Projection of the instanton inputs into the Kuznetsov component.
    push(
        "proj.quintic_ideal",
        "projected elliptic-quintic ideal has the doubled vector",
        tuple5(&v),
        tuple5(&project_to_ku(&quintic_ideal_class())),
    );
    push(
        "proj.shifted_line",
        "projected shifted line has the primitive vector",
        tuple5(&l1.add(&l2)),
        tuple5(&project_to_ku(&line_structure_class().neg())),
    );

    // Clifford-side lattice values.
    push(
        "clifford.b1",
        "character of the odd Clifford part at twist -1",
        "(4, 1, 1/8)".into(),
        b_char(1).to_string(),
    );
    push(
        "clifford.b1_shift",
        "character of the shifted odd part",
        "(-4, -1, -1/8)".into(),
        b_char(1).neg().to_string(),
    );
    push(
        "clifford.image_lambda1",
        "Clifford image of the first Mukai generator",
        "(4, 3, -7/8)".into(),
        clifford_image(&int(1), &int(0)).to_string(),
    );
    push(
        "clifford.image_lambda2",
        "Clifford image of the second Mukai generator",
        "(-8, 0, 7/4)".into(),
        clifford_image(&int(0), &int(1)).to_string(),
    );
    push(
        "clifford.image_2l1_2l2",
        "Clifford image of the doubled vector",
        "(-8, 6, 7/4)".into(),
        clifford_image(&int(2), &int(2)).to_string(),
    );
    push(
        "clifford.ku_line_lambda1",
        "component images satisfy c2 = -(7/32) rk",
        "true".into(),
        ku_constraint_holds(&clifford_image(&int(1), &int(0))).to_string(),
    );
    push(
        "clifford.ku_line_lambda2",
        "component images satisfy c2 = -(7/32) rk",
        "true".into(),
        ku_constraint_holds(&clifford_image(&int(0), &int(1))).to_string(),
    );
    push(
        "clifford.discriminants",
        "the standard modules have vanishing discriminant",
        "(0, 0, 0, 0, 0, 0)".into(),
        {
            let ds: Vec<String> = (-2..=3).map(|j| discriminant(&b_char(j)).to_string()).collect();
            format!("({})", ds.join(", "))
        },
    );
    push(
        "clifford.reduced_charge_lambda1",
        "reduced central charge of the first image",
        "(3, -4)".into(),
        {
            let (re, im) = reduced_central_charge(&clifford_image(&int(1), &int(0)));
            format!("({re}, {im})")
        },
    );

    // Tilt slopes.
    push(
        "slope.instanton_projection",
        "tilt slope of the projected instanton classes",
        "7/24 + 2/3 alpha^2".into(),
        slope_poly_string(&clifford_image(&int(2), &int(2))),
    );
    push(
        "slope.torsion_case",
        "tilt slope of the (0, 2, 2) wall participant",
        "1 + 0 alpha^2".into(),
        slope_poly_string(&B0Char::new(int(0), int(2), int(2), int(-1))),
    );

    // The wall chart for the doubled vector.
    let problem = WallProblem::standard(clifford_image(&int(2), &int(2))).unwrap();
    let walls = enumerate_walls(&problem).unwrap();
    push(
        "walls.count",
        "number of numerical walls for the doubled vector",
        "5".into(),
        walls.walls.len().to_string(),
    );
    push(
        "walls.alpha_sq_values",
        "wall positions alpha^2, descending",
        "17/16, 5/16, 5/16, 5/16, 1/16".into(),
        walls
            .walls
            .iter()
            .map(|w| w.alpha_sq.to_string())
            .collect::<Vec<_>>()
            .join(", "),
    );
    let expected_rows = [
        ("walls.row1", "17/16; 0,2,16"),
        ("walls.row2", "5/16; -1,5,15"),
        ("walls.row3", "5/16; 0,2,8"),
        ("walls.row4", "5/16; 0,4,16"),
        ("walls.row5", "1/16; 1,3,9"),
    ];
    for (idx, (name, expected)) in expected_rows.iter().enumerate() {
        let computed = walls
            .walls
            .get(idx)
            .map(|w| {
                format!(
                    "{}; {},{},{}",
                    w.alpha_sq, w.coeffs.0, w.coeffs.1, w.coeffs.2
                )
            })
            .unwrap_or_else(|| "missing".to_string());
        push(name, "wall chart for the doubled vector", expected.to_string(), computed);
    }
    push(
        "walls.checker",
        "independent checker accepts every listed wall",
        "true".into(),
        walls
            .walls
            .iter()
            .all(|w| check_solution(&problem, w))
            .to_string(),
    );

    out
}

fn discrepancy_checks() -> Vec<Check> {
    let (l1, l2) = lambda_classes();
    let two_two = tuple5(&l1.add(&l2).scale(&int(2)));
    let two_one = tuple5(&l1.scale(&int(2)).add(&l2));
    let engine_ec = tuple5(&conic_instanton_class());
    let ec = Check {
        name: "discrepancy.conic_instanton_character".to_string(),
        paper_ref: "published statement says 2*lambda1 + 2*lambda2; the proof's final line says 2*lambda1 + lambda2".to_string(),
        expected: format!(
            "statement: {two_two}; proof line: {two_one}"
        ),
        computed: format!(
            "engine evaluates 2[O] - [theta_C(H)] - 2[O(-H)] to {engine_ec} = character of 2*lambda1 + 2*lambda2"
        ),
        status: CheckStatus::PaperInternalDiscrepancy,
    };

    let b0_shift = b_char(0).neg();
    let engine_mu = slope_poly_string(&b0_shift);
    let mu = Check {
        name: "discrepancy.shifted_even_part_slope".to_string(),
        paper_ref: "two published expressions for the tilt slope of the shifted even part disagree"
            .to_string(),
        expected: "published: 2 alpha^2 + 1/8, and (4 alpha^2 - 1)/8".to_string(),
        computed: format!(
            "engine derives {engine_mu} = (16 alpha^2 - 1)/8, matching neither"
        ),
        status: CheckStatus::PaperInternalDiscrepancy,
    };
    vec![ec, mu]
}
