use std::fmt::Write as _;

use intrinsic_arrangements::arrangement::{build_intrinsic, Arrangement, Label};
use intrinsic_arrangements::combinatorics::{binomial, kostka, IntPartition};
use intrinsic_arrangements::hook::{
    build_c_arrangement, dependency_space, min_cycle_support, product_decomposition, verify_double_and_rank,
};
use intrinsic_arrangements::linalg::Rational;
use intrinsic_arrangements::partition_lattice::{build_sy_lattice, verify_transposition_meets};
use intrinsic_arrangements::specht::SpechtRealization;
use intrinsic_arrangements::verify::{run_suite, Suite};
use intrinsic_arrangements::Error;
use serde::Serialize;
use serde_json::{json, Value};

use crate::args::{Command, Emit, HookCheck};

/// What a verb produced. `ok` is false when a checked property failed.
pub struct Outcome {
    pub text: String,
    pub json: Value,
    pub ok: bool,
}

impl Outcome {
    fn ok(text: String, json: Value) -> Self {
        Outcome { text, json, ok: true }
    }
}

pub enum Failure {
    /// Bad input; exit status 2.
    Usage(String),
    /// Anything else going wrong; exit status 1.
    Internal(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Parse(_)
            | Error::SizeMismatch { .. }
            | Error::OutOfRange(_)
            | Error::HookRequiresK(_)
            | Error::InvalidSetPartition { .. }
            | Error::InvalidPermutation(_) => Failure::Usage(e.to_string()),
            _ => Failure::Internal(e.to_string()),
        }
    }
}

type Result<T> = std::result::Result<T, Failure>;

pub fn run(command: &Command, max_n: usize) -> Result<Outcome> {
    match command {
        Command::Arrangement { lambda, emit } => arrangement(check_n(lambda, max_n)?, *emit),
        Command::CharPoly { lambda } => char_poly(check_n(lambda, max_n)?),
        Command::Kostka { lambda, mu } => kostka_number(check_n(lambda, max_n)?, mu),
        Command::Hook { n, k, check, bound } => {
            ceiling(*n, max_n)?;
            match check {
                None => hook_equations(*n, *k),
                Some(HookCheck::Pi1) => hook_pi1(*n, *k),
                Some(HookCheck::Product) => hook_product(*n, *k),
                Some(HookCheck::Cycles) => hook_cycles(*n, *k, *bound),
            }
        }
        Command::Lattice { lambda } => lattice(check_n(lambda, max_n)?),
        Command::Verify { suite, n } => verify(*suite, *n, max_n),
    }
}

fn ceiling(n: usize, max_n: usize) -> Result<()> {
    if n > max_n {
        return Err(Failure::Usage(format!(
            "n = {n} exceeds the ceiling {max_n}; raise it with --max-n or INTRINSIC_MAX_N"
        )));
    }
    Ok(())
}

fn check_n(lambda: &IntPartition, max_n: usize) -> Result<&IntPartition> {
    ceiling(lambda.n(), max_n)?;
    Ok(lambda)
}

fn vector(v: &[Rational]) -> String {
    let parts: Vec<String> = v.iter().map(ToString::to_string).collect();
    format!("[{}]", parts.join(","))
}

fn subset_name(s: &[usize]) -> String {
    s.iter().map(ToString::to_string).collect()
}

/// `E(123)-E(124)+…`, skipping zero coefficients.
fn combination(coeffs: &[Rational], names: &[String]) -> String {
    let mut out = String::new();
    for (c, name) in coeffs.iter().zip(names) {
        if c.is_zero() {
            continue;
        }
        let negative = c < &Rational::ZERO;
        let abs = if negative { -c.clone() } else { c.clone() };
        let sign = match (negative, out.is_empty()) {
            (true, _) => "-",
            (false, true) => "",
            (false, false) => "+",
        };
        let scale = if abs == Rational::ONE { String::new() } else { abs.to_string() };
        let _ = write!(out, "{sign}{scale}{name}");
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

fn header(lambda: &IntPartition, a: &Arrangement) -> String {
    let mut out = format!(
        "lambda {lambda}: {} hyperplane{} in a space of dimension {} (ambient {})\n",
        a.len(),
        if a.len() == 1 { "" } else { "s" },
        a.dim(),
        a.ambient().ambient_dim()
    );
    if lambda.is_trivial() {
        out.push_str("trivial: V is one-dimensional and its only hyperplane is 0\n");
    }
    out
}

fn arrangement(lambda: &IntPartition, emit: Emit) -> Result<Outcome> {
    let a = build_intrinsic(lambda)?;
    let parts = lambda.parts();
    let mut text = header(lambda, &a);
    let json = match emit {
        Emit::Normals => {
            for h in a.hyperplanes() {
                let _ = writeln!(text, "{}: {}", h.label, vector(&h.normal));
            }
            json!({ "lambda": parts, "trivial": lambda.is_trivial(), "arrangement": a })
        }
        Emit::Flats => {
            let lattice = a.intersection_lattice();
            for f in lattice.flats() {
                let names: Vec<String> = f.containing().iter().map(|&i| a.hyperplanes()[i].label.to_string()).collect();
                let _ = writeln!(text, "codim {} mu {}: {}", f.codim(), f.mobius(), names.join(" "));
            }
            json!({ "lambda": parts, "labels": labels(&a), "lattice": lattice })
        }
        Emit::Lattice => {
            let lattice = a.intersection_lattice();
            let inv = lattice.invariants();
            let _ = writeln!(text, "rank {}", lattice.rank());
            let _ = writeln!(text, "flats per codimension {:?}", inv.flats_per_codim);
            let _ = writeln!(text, "characteristic polynomial {}", inv.char_poly);
            json!({ "lambda": parts, "rank": lattice.rank(), "invariants": inv })
        }
    };
    Ok(Outcome::ok(text, json))
}

fn labels(a: &Arrangement) -> Vec<&Label> {
    a.labels().collect()
}

fn char_poly(lambda: &IntPartition) -> Result<Outcome> {
    let chi = build_intrinsic(lambda)?.char_poly();
    Ok(Outcome::ok(format!("{chi}\n"), json!({ "lambda": lambda.parts(), "char_poly": chi })))
}

fn kostka_number(lambda: &IntPartition, mu: &IntPartition) -> Result<Outcome> {
    let k = kostka(lambda, mu)?;
    Ok(Outcome::ok(
        format!("{k}\n"),
        json!({ "lambda": lambda.parts(), "mu": mu.parts(), "kostka": k }),
    ))
}

#[derive(Serialize)]
struct Equation {
    subset: Vec<usize>,
    coefficients: Vec<Rational>,
}

fn hook_equations(n: usize, k: usize) -> Result<Outcome> {
    let c = build_c_arrangement(n, k)?;
    let deps = dependency_space(n, k)?;
    let equations: Vec<Equation> = c
        .hyperplanes()
        .iter()
        .map(|h| match &h.label {
            Label::Subset(s) => Equation { subset: s.clone(), coefficients: h.normal.clone() },
            other => unreachable!("𝒞 is labelled by subsets, got {other}"),
        })
        .collect();
    let coordinates: Vec<Vec<usize>> = intrinsic_arrangements::combinatorics::subsets(n, k);
    let coord_names: Vec<String> = coordinates.iter().map(|s| format!("T({})", subset_name(s))).collect();
    let eq_names: Vec<String> = equations.iter().map(|e| format!("E({})", subset_name(&e.subset))).collect();

    let mut text = format!(
        "n {n} k {k}: {} equations on {} coordinates\n",
        equations.len(),
        coordinates.len()
    );
    for (e, name) in equations.iter().zip(&eq_names) {
        let _ = writeln!(text, "{name} = {}", combination(&e.coefficients, &coord_names));
    }
    let _ = writeln!(text, "dependencies: dimension {}", deps.dim());
    for row in deps.basis().row_iter() {
        let _ = writeln!(text, "{} = 0", combination(row, &eq_names));
    }
    let json = json!({
        "n": n,
        "k": k,
        "coordinates": coordinates,
        "equations": equations,
        "dependency_dim": deps.dim(),
        "dependency_basis": deps,
    });
    Ok(Outcome::ok(text, json))
}

fn hook_pi1(n: usize, k: usize) -> Result<Outcome> {
    let (double, rank) = verify_double_and_rank(n, k)?;
    let expected = binomial(n, k + 1);
    let ok = double && rank == expected;
    let text = format!(
        "n {n} k {k}: codimension-2 flats all double: {double}; abelian rank {rank} (expected {expected})\n"
    );
    let json = json!({ "n": n, "k": k, "double": double, "rank": rank, "expected_rank": expected, "holds": ok });
    Ok(Outcome { text, json, ok })
}

fn hook_product(n: usize, k: usize) -> Result<Outcome> {
    let p = product_decomposition(n, k)?;
    let ok = p.holds();
    let text = format!(
        "n {n} k {k}: center dim {} (expected {}), center is the boundary image: {}, essential dim {}, \
         lattice matches the hook arrangement: {}\n",
        p.center_dim, p.expected_center_dim, p.center_is_boundary_image, p.essential_dim, p.lattice_matches
    );
    let json = json!({ "decomposition": p, "holds": ok });
    Ok(Outcome { text, json, ok })
}

fn hook_cycles(n: usize, k: usize, bound: usize) -> Result<Outcome> {
    let support = min_cycle_support(n, k, bound)?;
    let ok = support.is_none_or(|s| s >= 4);
    let text = match support {
        Some(s) => format!("n {n} k {k}: smallest relation among the equations has {s} terms\n"),
        None => format!("n {n} k {k}: no relation with at most {bound} terms\n"),
    };
    let json = json!({ "n": n, "k": k, "bound": bound, "min_support": support, "holds": ok });
    Ok(Outcome { text, json, ok })
}

fn lattice(lambda: &IntPartition) -> Result<Outcome> {
    let real = SpechtRealization::new(lambda);
    let l = build_sy_lattice(&real);
    let coatoms = l.coatoms();
    let coatomistic = l.is_coatomistic();
    let meets = verify_transposition_meets(&real);
    let ok = l.meet_closed && coatomistic && meets;
    let mut text = format!("lambda {lambda}: {} invariant subspaces\n", l.len());
    let _ = writeln!(text, "dimensions {:?}", l.dims);
    let _ = writeln!(text, "coatoms {coatoms:?}");
    let _ = writeln!(text, "closed under intersection: {}", l.meet_closed);
    let _ = writeln!(text, "coatomistic: {coatomistic}");
    let _ = writeln!(text, "transposition images meet correctly: {meets}");
    if let Some((i, j)) = l.join_witness {
        let _ = writeln!(
            text,
            "sum of {} and {} is not invariant of Young type",
            l.representatives[i], l.representatives[j]
        );
    }
    let json = json!({
        "lambda": lambda.parts(),
        "lattice": l,
        "coatoms": coatoms,
        "coatomistic": coatomistic,
        "transposition_meets": meets,
    });
    Ok(Outcome { text, json, ok })
}

fn verify(suite: Suite, n: Option<usize>, max_n: usize) -> Result<Outcome> {
    if let Some(n) = n {
        ceiling(n, max_n)?;
    }
    let bound = n.or(suite.default_max_n()).map(|b| b.min(max_n));
    let reports = run_suite(suite, bound)?;
    let passed = reports.iter().filter(|r| r.passed()).count();
    let mut text = String::new();
    for r in &reports {
        let _ = writeln!(text, "{r}");
    }
    let _ = writeln!(text, "{suite}: {passed}/{} passed", reports.len());
    let ok = passed == reports.len();
    let json = json!({ "suite": suite.name(), "passed": passed, "total": reports.len(), "reports": reports });
    Ok(Outcome { text, json, ok })
}
