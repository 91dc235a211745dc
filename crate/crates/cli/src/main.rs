//! Command line front end: single-shot character and pairing
//! computations, wall enumeration, and the full regression suite, with
//! machine-readable output.
//!
//! Exit codes: 0 success, 2 usage error, 3 domain error. Identical
//! invocations produce byte-identical output.

use clap::{Parser, Subcommand};
use serde::Serialize;

use ku_numerics::{
    alpha_approx, approx6, b_char, clifford_image, conic_instanton_class, enumerate_walls,
    euler_pairing, int, lambda_classes, lattice_coords, line_structure_class, parse_rat,
    project_to_ku, quintic_ideal_class, run_verify, B0Char, CheckStatus, Error, KClass,
    LatticeBasis, Rat, VerifyReport, WallEnumeration, WallProblem,
};

#[derive(Parser)]
#[command(
    name = "kuwalls",
    about = "Exact lattice invariants of cubic fourfolds: characters, pairings, tilt slopes, and numerical walls",
    disable_version_flag = true
)]
struct Cli {
    /// Emit machine-readable JSON (exact rationals as "p/q" strings)
    #[arg(long, global = true)]
    json: bool,

    /// Add six-significant-digit decimal approximations, marked with "~"
    #[arg(long, global = true)]
    decimal: bool,

    /// Worker threads for wall enumeration (output order is unaffected)
    #[arg(long, global = true, default_value_t = 1)]
    jobs: usize,

    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Print the exact character of a named class
    Chern {
        /// lambda1, lambda2, 2l1+2l2, p_ell, e_gamma, e_c, B<j>, or psi:<a>,<b>
        name: String,
        /// Twist at which to express a Clifford-side character (default -1)
        #[arg(long, allow_hyphen_values = true)]
        twist: Option<String>,
    },
    /// Euler and Mukai pairings of two named classes on the fourfold
    Pairing { class_a: String, class_b: String },
    /// Enumerate all numerical walls for a target character at twist -1
    Walls {
        /// Target as "rk,c1,c2" with exact rationals
        #[arg(long, allow_hyphen_values = true)]
        target: Option<String>,
        /// Target as integer coordinates "x,y,z" in the standard basis
        #[arg(long, allow_hyphen_values = true)]
        coords: Option<String>,
        /// Use the non-strict subobject-slope condition; boundary hits are
        /// listed separately
        #[arg(long)]
        non_strict: bool,
        /// Rank divisibility of the character lattice
        #[arg(long, default_value_t = 4)]
        rank_step: u32,
    },
    /// Run the regression suite against the published reference values
    Verify {
        /// Restrict to checks whose name starts with this prefix
        #[arg(long)]
        only: Option<String>,
    },
}

enum CliError {
    Usage(String),
    Domain(String),
}

impl CliError {
    fn code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Domain(_) => 3,
        }
    }

    fn message(&self) -> &str {
        match self {
            CliError::Usage(m) | CliError::Domain(m) => m,
        }
    }
}

fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

fn domain_err(e: Error) -> CliError {
    CliError::Domain(e.to_string())
}

fn main() {
    // die quietly on a closed pipe, like other line-oriented tools
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    let cli = Cli::parse();
    let jobs = cli.jobs.max(1);
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .expect("thread pool");
    let outcome = pool.install(|| run(&cli));
    match outcome {
        Ok(code) => std::process::exit(code),
        Err(e) => {
            eprintln!("error: {}", e.message());
            std::process::exit(e.code());
        }
    }
}

fn run(cli: &Cli) -> Result<i32, CliError> {
    match &cli.cmd {
        Cmd::Chern { name, twist } => cmd_chern(cli, name, twist.as_deref()),
        Cmd::Pairing { class_a, class_b } => cmd_pairing(cli, class_a, class_b),
        Cmd::Walls {
            target,
            coords,
            non_strict,
            rank_step,
        } => cmd_walls(cli, target.as_deref(), coords.as_deref(), *non_strict, *rank_step),
        Cmd::Verify { only } => cmd_verify(cli, only.as_deref()),
    }
}

/// Named classes on the fourfold side.
fn named_kclass(name: &str) -> Option<KClass> {
    let (l1, l2) = lambda_classes();
    Some(match name {
        "lambda1" => l1,
        "lambda2" => l2,
        "2l1+2l2" => l1.add(&l2).scale(&int(2)),
        "p_ell" => project_to_ku(&line_structure_class().neg()),
        "e_gamma" => project_to_ku(&quintic_ideal_class()),
        "e_c" => conic_instanton_class(),
        "O" => KClass::structure_sheaf(),
        "O(H)" => KClass::line_bundle(1),
        "O(2H)" => KClass::line_bundle(2),
        "O(-H)" => KClass::line_bundle(-1),
        "O(-2H)" => KClass::line_bundle(-2),
        _ => return None,
    })
}

/// Named classes on the Clifford side: B<j> and psi:<a>,<b>.
fn named_b0char(name: &str) -> Result<Option<B0Char>, CliError> {
    if let Some(j) = name.strip_prefix('B') {
        let j: i64 = j
            .parse()
            .map_err(|_| usage(format!("bad module index in {name:?}")))?;
        return Ok(Some(b_char(j)));
    }
    if let Some(ab) = name.strip_prefix("psi:") {
        let parts: Vec<&str> = ab.split(',').collect();
        if parts.len() != 2 {
            return Err(usage(format!(
                "psi:<a>,<b> takes two rationals, got {ab:?}"
            )));
        }
        let a = parse_rat(parts[0]).map_err(|e| usage(e.to_string()))?;
        let b = parse_rat(parts[1]).map_err(|e| usage(e.to_string()))?;
        return Ok(Some(clifford_image(&a, &b)));
    }
    Ok(None)
}

fn rat_tuple_strings(values: &[Rat]) -> Vec<String> {
    values.iter().map(|r| r.to_string()).collect()
}

fn tuple_line(values: &[Rat]) -> String {
    format!("({})", rat_tuple_strings(values).join(", "))
}

fn decimal_line(values: &[Rat]) -> String {
    let parts: Vec<String> = values.iter().map(approx6).collect();
    format!("~ ({})", parts.join(", "))
}

#[derive(Serialize)]
struct ChernKJson {
    name: String,
    /// Coefficients of 1, H, H^2, H^3 and the degree of the top piece.
    ch: Vec<String>,
}

#[derive(Serialize)]
struct ChernB0Json {
    name: String,
    char: B0Char,
}

fn cmd_chern(cli: &Cli, name: &str, twist: Option<&str>) -> Result<i32, CliError> {
    if let Some(k) = named_kclass(name) {
        if twist.is_some() {
            return Err(usage(
                "--twist applies only to Clifford-side characters (B<j>, psi:<a>,<b>)",
            ));
        }
        let comps = k.display_components();
        if cli.json {
            let wire = ChernKJson {
                name: name.to_string(),
                ch: rat_tuple_strings(&comps),
            };
            println!("{}", serde_json::to_string(&wire).expect("json"));
        } else {
            println!("{}", tuple_line(&comps));
            if cli.decimal {
                println!("{}", decimal_line(&comps));
            }
        }
        return Ok(0);
    }
    if let Some(c) = named_b0char(name)? {
        let beta = match twist {
            Some(t) => parse_rat(t).map_err(|e| usage(e.to_string()))?,
            None => int(-1),
        };
        let ct = c.at_beta(&beta);
        if cli.json {
            let wire = ChernB0Json {
                name: name.to_string(),
                char: ct,
            };
            println!("{}", serde_json::to_string(&wire).expect("json"));
        } else {
            let comps = [ct.rk.clone(), ct.c1.clone(), ct.c2.clone()];
            println!("{}", tuple_line(&comps));
            if cli.decimal {
                println!("{}", decimal_line(&comps));
            }
        }
        return Ok(0);
    }
    Err(usage(format!(
        "unknown class {name:?}; known: lambda1, lambda2, 2l1+2l2, p_ell, e_gamma, e_c, O, O(H), O(2H), O(-H), O(-2H), B<j>, psi:<a>,<b>"
    )))
}

#[derive(Serialize)]
struct PairingJson {
    class_a: String,
    class_b: String,
    chi: String,
    mukai: String,
}

fn cmd_pairing(cli: &Cli, a: &str, b: &str) -> Result<i32, CliError> {
    let ka = named_kclass(a).ok_or_else(|| usage(format!("unknown class {a:?}")))?;
    let kb = named_kclass(b).ok_or_else(|| usage(format!("unknown class {b:?}")))?;
    let chi = euler_pairing(&ka, &kb);
    let mukai = -chi.clone();
    if cli.json {
        let wire = PairingJson {
            class_a: a.to_string(),
            class_b: b.to_string(),
            chi: chi.to_string(),
            mukai: mukai.to_string(),
        };
        println!("{}", serde_json::to_string(&wire).expect("json"));
    } else {
        if cli.decimal {
            println!("chi = {chi} ~{}", approx6(&chi));
            println!("mukai = {mukai} ~{}", approx6(&mukai));
        } else {
            println!("chi = {chi}");
            println!("mukai = {mukai}");
        }
    }
    Ok(0)
}

fn parse_target(spec: &str) -> Result<B0Char, CliError> {
    let parts: Vec<&str> = spec.split(',').collect();
    if parts.len() != 3 {
        return Err(usage(format!(
            "--target takes \"rk,c1,c2\", got {spec:?}"
        )));
    }
    let rk = parse_rat(parts[0]).map_err(|e| usage(e.to_string()))?;
    let c1 = parse_rat(parts[1]).map_err(|e| usage(e.to_string()))?;
    let c2 = parse_rat(parts[2]).map_err(|e| usage(e.to_string()))?;
    Ok(B0Char::new(rk, c1, c2, int(-1)))
}

fn parse_coords(spec: &str, basis: &LatticeBasis) -> Result<B0Char, CliError> {
    let parts: Vec<&str> = spec.split(',').collect();
    if parts.len() != 3 {
        return Err(usage(format!("--coords takes \"x,y,z\", got {spec:?}")));
    }
    let mut ints = Vec::new();
    for p in &parts {
        let v: i64 = p
            .trim()
            .parse()
            .map_err(|_| usage(format!("coordinate {p:?} is not an integer")))?;
        ints.push(v);
    }
    let [v1, v2, v3] = basis.vectors();
    Ok(v1
        .scale(&int(ints[0]))
        .add(&v2.scale(&int(ints[1])))
        .add(&v3.scale(&int(ints[2]))))
}

#[derive(Serialize)]
struct WallsJson {
    target: B0Char,
    walls: Vec<ku_numerics::WallSolution>,
    boundary: Vec<ku_numerics::BoundaryCase>,
}

fn cmd_walls(
    cli: &Cli,
    target: Option<&str>,
    coords: Option<&str>,
    non_strict: bool,
    rank_step: u32,
) -> Result<i32, CliError> {
    let basis = LatticeBasis::clifford();
    let target = match (target, coords) {
        (Some(t), None) => parse_target(t)?,
        (None, Some(c)) => parse_coords(c, &basis)?,
        _ => {
            return Err(usage(
                "exactly one of --target or --coords is required",
            ))
        }
    };
    let problem =
        WallProblem::new(target, basis, rank_step, !non_strict).map_err(domain_err)?;
    let result = enumerate_walls(&problem).map_err(domain_err)?;
    if cli.json {
        let wire = WallsJson {
            target: problem.target().clone(),
            walls: result.walls.clone(),
            boundary: result.boundary.clone(),
        };
        println!("{}", serde_json::to_string(&wire).expect("json"));
    } else {
        print_wall_table(cli, &problem, &result);
    }
    Ok(0)
}

fn print_wall_table(cli: &Cli, problem: &WallProblem, result: &WallEnumeration) {
    let t = problem.target();
    let coords = lattice_coords(t, problem.basis()).expect("validated");
    println!(
        "target {t}  coords ({}, {}, {})",
        coords.0, coords.1, coords.2
    );
    if result.walls.is_empty() {
        println!("no numerical walls");
    } else {
        if cli.decimal {
            println!("alpha_sq   ~alpha        a    b     c  sub                  quot");
        } else {
            println!("alpha_sq      a    b     c  sub                  quot");
        }
        for w in &result.walls {
            let (a, b, c) = w.coeffs;
            if cli.decimal {
                println!(
                    "{:<10} {:<10} {:>4} {:>4} {:>5}  {:<20} {}",
                    w.alpha_sq.to_string(),
                    format!("~{:.6}", alpha_approx(&w.alpha_sq)),
                    a,
                    b,
                    c,
                    w.sub.to_string(),
                    w.quot
                );
            } else {
                println!(
                    "{:<10} {:>4} {:>4} {:>5}  {:<20} {}",
                    w.alpha_sq.to_string(),
                    a,
                    b,
                    c,
                    w.sub.to_string(),
                    w.quot
                );
            }
        }
        println!(
            "{} wall{}",
            result.walls.len(),
            if result.walls.len() == 1 { "" } else { "s" }
        );
    }
    if !result.boundary.is_empty() {
        println!("boundary decompositions (equal slope at every alpha):");
        for bc in &result.boundary {
            println!(
                "  a={} b={} c={}  sub {}  quot {}",
                bc.coeffs[0], bc.coeffs[1], bc.coeffs[2], bc.sub, bc.quot
            );
        }
    }
}

#[derive(Serialize)]
struct VerifySummary {
    pass: usize,
    fail: usize,
    paper_internal_discrepancy: usize,
}

#[derive(Serialize)]
struct VerifyJson {
    checks: Vec<ku_numerics::Check>,
    summary: VerifySummary,
}

fn cmd_verify(cli: &Cli, only: Option<&str>) -> Result<i32, CliError> {
    let report: VerifyReport = run_verify(only);
    let (pass, fail, disc) = report.counts();
    if cli.json {
        let wire = VerifyJson {
            checks: report.checks.clone(),
            summary: VerifySummary {
                pass,
                fail,
                paper_internal_discrepancy: disc,
            },
        };
        println!("{}", serde_json::to_string(&wire).expect("json"));
    } else {
        for c in &report.checks {
            match c.status {
                CheckStatus::Pass => println!("[pass]  {}  {}", c.name, c.computed),
                CheckStatus::Fail => {
                    println!("[FAIL]  {}", c.name);
                    println!("    ref:      {}", c.paper_ref);
                    println!("    expected: {}", c.expected);
                    println!("    computed: {}", c.computed);
                }
                CheckStatus::PaperInternalDiscrepancy => {
                    println!("[discrepancy]  {}", c.name);
                    println!("    ref:       {}", c.paper_ref);
                    println!("    published: {}", c.expected);
                    println!("    engine:    {}", c.computed);
                }
            }
        }
        println!("summary: {pass} pass, {fail} fail, {disc} documented discrepancies");
    }
    Ok(if report.has_failures() { 1 } else { 0 })
}
