//! Named verification suites. Each produces a list of [`Report`]s, one per
//! claim, with the parameters it ran under and any witnesses it found.

use std::collections::{BTreeSet, HashSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use crate::arrangement::{build_intrinsic, char_poly_hook_chain, Arrangement, IntPolynomial, Label};
use crate::combinatorics::{binomial, count_type, factorial, kostka, IntPartition, Permutation, SetPartition};
use crate::coordinate::verify_tensor_theorem;
use crate::error::{Error, Result};
use crate::hook::{
    boundary_matrix, build_c_arrangement, dependency_generators, dependency_space, min_cycle_support,
    product_decomposition, relation_vector, verify_double_and_rank,
};
use crate::linalg::{primitive_integer_vector, Matrix, Rational, Subspace};
use crate::partition_lattice::{
    atoms_equation, build_sy_lattice, kostka_inequality, natural_isomorphism, verify_homomorphism_props,
    verify_transposition_meets,
};
use crate::representation::Realization;
use crate::specht::SpechtRealization;

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub claim: String,
    pub parameters: Value,
    pub status: Status,
    pub witnesses: Value,
}

impl Report {
    pub fn new(claim: impl Into<String>, parameters: Value, passed: bool, witnesses: Value) -> Self {
        Report {
            claim: claim.into(),
            parameters,
            status: if passed { Status::Pass } else { Status::Fail },
            witnesses,
        }
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = if self.passed() { "PASS" } else { "FAIL" };
        write!(f, "[{tag}] {} {}", self.claim, self.parameters)
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Suite {
    TableN5,
    BraidSanity,
    HookChain,
    KostkaOracle,
    Counting,
    CoordinateModel,
    HookModel,
    PartitionLattice,
    Invariants,
    All,
}

impl Suite {
    pub const EACH: [Suite; 9] = [
        Suite::TableN5,
        Suite::BraidSanity,
        Suite::HookChain,
        Suite::KostkaOracle,
        Suite::Counting,
        Suite::CoordinateModel,
        Suite::HookModel,
        Suite::PartitionLattice,
        Suite::Invariants,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::TableN5 => "table-n5",
            Suite::BraidSanity => "braid-sanity",
            Suite::HookChain => "hook-chain",
            Suite::KostkaOracle => "kostka-oracle",
            Suite::Counting => "counting",
            Suite::CoordinateModel => "coordinate-model",
            Suite::HookModel => "hook-model",
            Suite::PartitionLattice => "partition-lattice",
            Suite::Invariants => "invariants",
            Suite::All => "all",
        }
    }

    /// Largest n swept when no bound is given. `None` for suites with fixed parameters.
    pub fn default_max_n(self) -> Option<usize> {
        match self {
            Suite::BraidSanity => Some(6),
            Suite::HookChain | Suite::Counting => Some(7),
            Suite::KostkaOracle => Some(6),
            Suite::CoordinateModel | Suite::PartitionLattice | Suite::Invariants => Some(5),
            Suite::TableN5 | Suite::HookModel | Suite::All => None,
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Suite::EACH
            .into_iter()
            .chain([Suite::All])
            .find(|suite| suite.name() == s)
            .ok_or_else(|| Error::OutOfRange(format!("unknown suite `{s}`")))
    }
}

/// Runs a suite. `max_n` bounds n for suites that sweep over n.
pub fn run_suite(suite: Suite, max_n: Option<usize>) -> Result<Vec<Report>> {
    let bound = max_n.or(suite.default_max_n()).unwrap_or(0);
    match suite {
        Suite::TableN5 => table_n5(),
        Suite::BraidSanity => braid_sanity(bound),
        Suite::HookChain => hook_chain(bound),
        Suite::KostkaOracle => kostka_oracle(bound),
        Suite::Counting => counting(bound),
        Suite::CoordinateModel => coordinate_model(bound),
        Suite::HookModel => hook_model(),
        Suite::PartitionLattice => partition_lattice(bound),
        Suite::Invariants => invariants(bound),
        Suite::All => {
            let mut out = Vec::new();
            for s in Suite::EACH {
                out.extend(run_suite(s, max_n)?);
            }
            Ok(out)
        }
    }
}

fn poly_desc(coeffs: &[i64]) -> IntPolynomial {
    let mut c = coeffs.to_vec();
    c.reverse();
    IntPolynomial::from_i64(&c)
}

/// `(λ, dim V_λ, #𝒜_λ, χ coefficients from the top degree down)` at n = 5.
pub const TABLE_N5: [(&str, usize, usize, &[i64]); 4] = [
    ("4,1", 4, 10, &[1, -10, 35, -50, 24]),
    ("3,2", 5, 15, &[1, -15, 90, -260, 350, -166]),
    ("3,1,1", 6, 10, &[1, -10, 45, -115, 175, -147, 51]),
    ("2,1,1,1", 4, 5, &[1, -5, 10, -10, 4]),
];

pub fn table_n5() -> Result<Vec<Report>> {
    TABLE_N5
        .iter()
        .map(|&(lam, dim, count, chi)| {
            let lambda: IntPartition = lam.parse()?;
            let a = build_intrinsic(&lambda)?;
            let got = a.char_poly();
            let expected = poly_desc(chi);
            Ok(Report::new(
                "dim V_λ, #𝒜_λ and χ(t) at n = 5",
                json!({ "lambda": lambda }),
                a.dim() == dim && a.len() == count && got == expected,
                json!({
                    "dim": a.dim(),
                    "hyperplanes": a.len(),
                    "char_poly": got.to_string(),
                    "expected": expected.to_string(),
                }),
            ))
        })
        .collect()
}

pub fn braid_sanity(max_n: usize) -> Result<Vec<Report>> {
    (3..=max_n)
        .map(|n| {
            let a = build_intrinsic(&IntPartition::hook(n, 1)?)?;
            let lattice = a.intersection_lattice();
            let chi: IntPolynomial = (1..n as i64).map(IntPolynomial::linear_root).product();
            let poin: IntPolynomial = (1..n as i64).map(|k| IntPolynomial::from_i64(&[1, k])).product();
            Ok(Report::new(
                "𝒜_(n−1,1) has C(n,2) hyperplanes, χ = (t−1)⋯(t−n+1), Poin = (1+t)⋯(1+(n−1)t)",
                json!({ "n": n }),
                a.len() == binomial(n, 2) && lattice.char_poly() == chi && lattice.poincare() == poin,
                json!({
                    "hyperplanes": a.len(),
                    "char_poly": lattice.char_poly().to_string(),
                    "poincare": lattice.poincare().to_string(),
                }),
            ))
        })
        .collect()
}

pub fn hook_chain(max_n: usize) -> Result<Vec<Report>> {
    let mut out = Vec::new();
    let mut previous: Option<Arrangement> = None;
    for n in 2..=max_n {
        let lambda = IntPartition::from_unsorted([vec![2], vec![1; n - 2]].concat());
        let a = build_intrinsic(&lambda)?;
        let chi = a.char_poly();
        let closed = char_poly_hook_chain(n)?;
        // t·χ_n = (t−1)((t−1)^{n−1} − (−1)^{n−1})
        let x = IntPolynomial::linear_root(1);
        let sign = if (n - 1) % 2 == 0 { 1 } else { -1 };
        let fraction_form = &IntPolynomial::t() * &chi == &x * &(&x.pow(n as u32 - 1) - &IntPolynomial::constant(sign));
        out.push(Report::new(
            "χ of 𝒜_(2,1^(n−2)) equals Σ_{j=1}^{n−1} (−1)^{n−1−j} (t−1)^j",
            json!({ "n": n, "lambda": lambda }),
            chi == closed && fraction_form,
            json!({ "lattice": chi.to_string(), "closed_form": closed.to_string() }),
        ));

        let alpha0 = SetPartition::distinguished(&lambda.conjugate());
        let h = a
            .position(&Label::Partition(alpha0.clone()))
            .ok_or_else(|| Error::InvalidHyperplane(format!("{alpha0} missing")))?;
        let deleted = a.delete(h)?;
        let restricted = a.restrict(h)?;
        let identity = chi == &deleted.char_poly() - &restricted.char_poly();
        // for n = 2 there is a single hyperplane and nothing left to be Boolean
        let boolean = n < 3 || (deleted.len() == n - 1 && deleted.char_poly() == x.pow(n as u32 - 1));
        let isomorphic = previous
            .as_ref()
            .map(|p| p.intersection_lattice().invariants() == restricted.essentialize().intersection_lattice().invariants());
        out.push(Report::new(
            "χ_𝒜 = χ_𝒜′ − χ_𝒜″ at the distinguished hyperplane, 𝒜′ Boolean, 𝒜″ ≅ the (n−1) case",
            json!({ "n": n, "hyperplane": alpha0 }),
            identity && boolean && isomorphic.unwrap_or(true),
            json!({
                "deletion": deleted.char_poly().to_string(),
                "restriction": restricted.char_poly().to_string(),
                "restriction_matches_previous": isomorphic,
            }),
        ));
        previous = Some(a);
    }
    Ok(out)
}

pub fn kostka_oracle(max_n: usize) -> Result<Vec<Report>> {
    let cases: Vec<(IntPartition, IntPartition)> = (1..=max_n)
        .flat_map(|n| {
            let parts = IntPartition::all(n);
            parts.iter().flat_map(|l| parts.iter().map(move |m| (l.clone(), m.clone()))).collect::<Vec<_>>()
        })
        .collect();
    let reals: Vec<SpechtRealization> = (1..=max_n)
        .flat_map(IntPartition::all)
        .collect::<Vec<_>>()
        .par_iter()
        .map(SpechtRealization::new)
        .collect();
    let find = |l: &IntPartition| reals.iter().find(|r| r.lambda() == l).expect("built");
    let results: Vec<(bool, bool, String)> = cases
        .par_iter()
        .map(|(l, m)| {
            let real = find(l);
            let alpha = SetPartition::distinguished(m);
            let path = real.fixed_local(&alpha.spanning_transpositions());
            let star = real.fixed_local(&alpha.star_transpositions());
            let k = kostka(l, m).expect("same n");
            (path.dim() as u64 == k, path == star, format!("K({l},{m}) = {k}"))
        })
        .collect();
    let dim_failures: Vec<&String> = results.iter().filter(|r| !r.0).map(|r| &r.2).collect();
    let gen_failures: Vec<&String> = results.iter().filter(|r| !r.1).map(|r| &r.2).collect();
    Ok(vec![
        Report::new(
            "dim V_λ^{S_α} = K_{λμ} for α of type μ",
            json!({ "max_n": max_n, "pairs": cases.len() }),
            dim_failures.is_empty(),
            json!({ "failures": dim_failures }),
        ),
        Report::new(
            "V_λ^{S_α} is the same for path and star generating transpositions",
            json!({ "max_n": max_n, "pairs": cases.len() }),
            gen_failures.is_empty(),
            json!({ "failures": gen_failures }),
        ),
    ])
}

pub fn counting(max_n: usize) -> Result<Vec<Report>> {
    let lambdas: Vec<IntPartition> = (1..=max_n).flat_map(IntPartition::all).collect();
    let rows: Vec<(IntPartition, String, usize, bool)> = lambdas
        .par_iter()
        .map(|l| {
            let conj = l.conjugate();
            let formula = factorial(l.n()) / conj.wreath_order();
            let enumerated = count_type(l.n(), &conj).expect("same n");
            let built = build_intrinsic(l).expect("valid λ").len();
            let ok = formula == enumerated && formula == built.into();
            (l.clone(), formula.to_string(), built, ok)
        })
        .collect();
    let failures: Vec<String> = rows.iter().filter(|r| !r.3).map(|r| r.0.to_string()).collect();
    let counts: Vec<Value> = rows.iter().map(|r| json!([r.0, r.2])).collect();
    Ok(vec![Report::new(
        "#𝒜_λ = n!/∏(k!)^{m_k} m_k! = number of hyperplanes built",
        json!({ "max_n": max_n }),
        failures.is_empty(),
        json!({ "failures": failures, "counts": counts }),
    )])
}

pub fn coordinate_model(max_n: usize) -> Result<Vec<Report>> {
    let lambdas: Vec<IntPartition> = (2..=max_n).flat_map(IntPartition::all).filter(|l| !l.is_trivial()).collect();
    let results: Vec<(IntPartition, bool)> = lambdas
        .par_iter()
        .map(|l| (l.clone(), verify_tensor_theorem(l).unwrap_or(false)))
        .collect();
    let failures: Vec<String> = results.iter().filter(|r| !r.1).map(|r| r.0.to_string()).collect();
    Ok(vec![Report::new(
        "coordinate hyperplanes of ξ_λ′ restricted to V_λ are exactly the H_α",
        json!({ "max_n": max_n, "partitions": lambdas.len() }),
        failures.is_empty(),
        json!({ "failures": failures }),
    )])
}

/// The (n, k) pairs examined by the hook suite.
pub const HOOK_CASES: [(usize, usize); 3] = [(5, 2), (6, 2), (6, 3)];

pub fn hook_model() -> Result<Vec<Report>> {
    let mut out = Vec::new();
    let mut squares = Vec::new();
    for n in 2..=8 {
        for k in 1..=n - 2 {
            let a = boundary_matrix(n, k)?.matrix;
            let b = boundary_matrix(n, k + 1)?.matrix;
            squares.push((n, k, b.mul(&a)?.is_zero()));
        }
    }
    let bad: Vec<(usize, usize)> = squares.iter().filter(|s| !s.2).map(|s| (s.0, s.1)).collect();
    out.push(Report::new(
        "∂∘∂ = 0",
        json!({ "max_n": 8 }),
        bad.is_empty(),
        json!({ "checked": squares.len(), "failures": bad }),
    ));

    for (n, k) in HOOK_CASES {
        let d = product_decomposition(n, k)?;
        out.push(Report::new(
            "𝒞 = 𝒜_(n−k,1^k) × Φ_ℓ with ℓ = C(n−1,k−1)",
            json!({ "n": n, "k": k }),
            d.holds(),
            serde_json::to_value(&d).expect("serializable"),
        ));

        let (double, rank) = verify_double_and_rank(n, k)?;
        let essential = build_c_arrangement(n, k)?.essentialize();
        let profile: Vec<(usize, usize)> = essential.codim2_profile().into_iter().collect();
        out.push(Report::new(
            "every codimension-2 flat lies on exactly two hyperplanes",
            json!({ "n": n, "k": k }),
            double,
            json!({ "codim2_multiplicities": profile }),
        ));
        out.push(Report::new(
            "π₁ of the complement is free abelian of rank C(n,k+1)",
            json!({ "n": n, "k": k }),
            essential.pi1_abelian_rank() == Some(binomial(n, k + 1)) && rank == binomial(n, k + 1),
            json!({ "rank": essential.pi1_abelian_rank() }),
        ));

        let dep = dependency_space(n, k)?;
        let generators = dependency_generators(n, k)?;
        let span = Subspace::from_spanning(dep.ambient_dim(), generators.iter().map(|g| g.1.clone()))?;
        let relation_present = if n == 5 && k == 2 {
            Some(dep.contains(&relation_vector(n, k, &[1, 2, 3, 4])?))
        } else {
            None
        };
        out.push(Report::new(
            "relations among the equations of 𝒞 are spanned by the C(n,k+2) boundary relations",
            json!({ "n": n, "k": k }),
            span == dep && dep.dim() == binomial(n - 1, k + 1) && relation_present != Some(false),
            json!({
                "generators": generators.len(),
                "dimension": dep.dim(),
                "relation_E123_E124_E134_E234": relation_present,
            }),
        ));

        let support = min_cycle_support(n, k, k + 3)?;
        out.push(Report::new(
            "a linear relation among the equations of 𝒞 involves at least 4 of them",
            json!({ "n": n, "k": k }),
            support.is_some_and(|s| s >= 4),
            json!({ "min_support": support }),
        ));
    }

    let braid_triples = (3..=6)
        .map(|n| Ok(build_c_arrangement(n, 1)?.codim2_profile().contains_key(&3)))
        .collect::<Result<Vec<bool>>>()?;
    out.push(Report::new(
        "for k = 1 some codimension-2 flat lies on three hyperplanes",
        json!({ "n": "3..=6", "k": 1 }),
        braid_triples.iter().all(|&b| b),
        json!({ "triple_points": braid_triples }),
    ));
    Ok(out)
}

pub fn partition_lattice(max_n: usize) -> Result<Vec<Report>> {
    let lambdas: Vec<IntPartition> = (1..=max_n).flat_map(IntPartition::all).collect();
    let mut out = Vec::new();

    let homs = lambdas
        .par_iter()
        .map(|l| verify_homomorphism_props(l, usize::MAX))
        .collect::<Result<Vec<_>>>()?;
    let check = |name: &str, f: &dyn Fn(&crate::partition_lattice::HomomorphismReport) -> bool| {
        let failures: Vec<String> = homs.iter().filter(|h| !f(h)).map(|h| h.lambda.to_string()).collect();
        Report::new(
            name,
            json!({ "max_n": max_n, "partitions": lambdas.len() }),
            failures.is_empty(),
            json!({ "failures": failures }),
        )
    };
    out.push(check("φ(α ∨ β) = φ(α) ∩ φ(β)", &|h| h.join_to_meet));
    out.push(check("φ(α ∧ β) ⊇ φ(α) + φ(β)", &|h| h.meet_contains_sum));
    out.push(check("dim φ(α) = K_{λ,ᾱ}", &|h| h.dims_are_kostka));
    out.push(check("φ(α) = 0 unless λ ⊵ ᾱ", &|h| h.vanishes_off_dominance));
    out.push(check("α ≼ β implies φ(β) ⊆ φ(α)", &|h| h.order_reversing));
    let strict: Vec<Value> = homs
        .iter()
        .filter(|h| h.strict_count > 0)
        .map(|h| json!({ "lambda": h.lambda, "count": h.strict_count, "first": h.strict_witnesses.first() }))
        .collect();
    out.push(Report::new(
        "pairs with φ(α ∧ β) ≠ φ(α) + φ(β) (reported, not required)",
        json!({ "max_n": max_n }),
        true,
        json!({ "found": strict }),
    ));

    let ineq = lambdas.par_iter().map(kostka_inequality).collect::<Result<Vec<_>>>()?;
    let violations: Vec<String> = ineq.iter().filter(|r| !r.holds).map(|r| r.lambda.to_string()).collect();
    let strict_ineq: Vec<Value> = ineq
        .iter()
        .filter(|r| r.strict_count > 0)
        .map(|r| json!({ "lambda": r.lambda, "count": r.strict_count, "example": r.strict_example }))
        .collect();
    out.push(Report::new(
        "K_{λ,α∨β} + K_{λ,α∧β} ≥ K_{λ,ᾱ} + K_{λ,β̄}",
        json!({ "max_n": max_n }),
        violations.is_empty(),
        json!({ "violations": violations, "strict": strict_ineq }),
    ));

    let reals: Vec<SpechtRealization> = lambdas.par_iter().map(SpechtRealization::new).collect();
    let lattices: Vec<_> = reals.par_iter().map(build_sy_lattice).collect();
    let meet_failures: Vec<String> = lambdas
        .iter()
        .zip(&lattices)
        .filter(|(_, l)| !l.meet_closed)
        .map(|(l, _)| l.to_string())
        .collect();
    let join_witnesses: Vec<Value> = lambdas
        .iter()
        .zip(&lattices)
        .filter_map(|(lam, l)| {
            l.join_witness
                .map(|(i, j)| json!({ "lambda": lam, "alpha": l.representatives[i], "beta": l.representatives[j] }))
        })
        .collect();
    let bounds: Vec<String> = lambdas
        .iter()
        .zip(&lattices)
        .filter(|(lam, l)| l.dims[l.top] != crate::combinatorics::syt_count(lam) || (lam.len() > 1 && l.dims[l.bottom] != 0))
        .map(|(lam, _)| lam.to_string())
        .collect();
    out.push(Report::new(
        "S^Y(V_λ) is closed under intersection with top V_λ and bottom 0 for λ ≠ (n)",
        json!({ "max_n": max_n }),
        meet_failures.is_empty() && bounds.is_empty(),
        json!({ "failures": meet_failures, "bound_failures": bounds, "sums_outside": join_witnesses }),
    ));
    let coatom_failures: Vec<String> = lambdas
        .iter()
        .zip(&lattices)
        .zip(&reals)
        .filter(|((_, l), r)| !(l.is_coatomistic() && verify_transposition_meets(*r)))
        .map(|((lam, _), _)| lam.to_string())
        .collect();
    out.push(Report::new(
        "S^Y(V_λ) is coatomistic with coatoms among the V^(ij)",
        json!({ "max_n": max_n }),
        coatom_failures.is_empty(),
        json!({ "failures": coatom_failures, "sizes": lattices.iter().map(|l| l.len()).collect::<Vec<_>>() }),
    ));

    let atoms = lambdas
        .par_iter()
        .filter(|l| l.n() >= 2 && !l.is_trivial())
        .map(atoms_equation)
        .collect::<Result<Vec<_>>>()?;
    let eq_failures: Vec<String> = atoms.iter().filter(|a| !a.equation_holds).map(|a| a.lambda.to_string()).collect();
    let emb_failures: Vec<String> = atoms.iter().filter(|a| !a.embedded).map(|a| a.lambda.to_string()).collect();
    let join_failures: Vec<String> = atoms
        .iter()
        .filter(|a| !a.hyperplanes_are_joins)
        .map(|a| a.lambda.to_string())
        .collect();
    out.push(Report::new(
        "V^(ij) = ⋂ H_α over α with i ∼_α j",
        json!({ "max_n": max_n, "partitions": atoms.len() }),
        eq_failures.is_empty(),
        json!({ "failures": eq_failures }),
    ));
    out.push(Report::new(
        "every element of S^Y(V_λ) is a flat of L(𝒜_λ), and every H_α is a sum of V^τ",
        json!({ "max_n": max_n, "partitions": atoms.len() }),
        emb_failures.is_empty() && join_failures.is_empty(),
        json!({
            "failures": emb_failures,
            "join_failures": join_failures,
            "sizes": atoms.iter().map(|a| json!([a.lambda, a.elements_checked, a.lattice_size])).collect::<Vec<_>>(),
        }),
    ));

    let natural = (1..=max_n).map(natural_isomorphism).collect::<Result<Vec<_>>>()?;
    out.push(Report::new(
        "S^Y(ℚ^n)* ≅ Π_n via α ↦ φ(α), equal to L(Br_n)",
        json!({ "max_n": max_n }),
        natural.iter().all(|i| i.holds()),
        json!({ "sizes": natural.iter().map(|i| json!([i.n, i.images])).collect::<Vec<_>>() }),
    ));
    Ok(out)
}

/// Sign-normalized: first nonzero entry positive.
fn up_to_sign(v: &[Rational]) -> Vec<Rational> {
    let p = primitive_integer_vector(v).expect("nonzero");
    if p.iter().find(|x| !x.is_zero()).is_some_and(|x| x.signum() < 0) {
        p.iter().map(|x| -x).collect()
    } else {
        p
    }
}

/// Whether the normals of `arrangement` are one orbit of `real`'s S_n action up to sign.
pub fn normals_form_one_orbit<R: Realization>(real: &R, arrangement: &Arrangement) -> bool {
    let normals: BTreeSet<Vec<Rational>> = arrangement.hyperplanes().iter().map(|h| up_to_sign(&h.normal)).collect();
    let Some(start) = normals.iter().next().cloned() else {
        return true;
    };
    let gens: Vec<Matrix> = Permutation::coxeter_generators(real.degree())
        .iter()
        .map(|g| real.action_matrix(g))
        .collect();
    let mut orbit = HashSet::from([start.clone()]);
    let mut queue = VecDeque::from([start]);
    while let Some(v) = queue.pop_front() {
        for g in &gens {
            let w = up_to_sign(&g.apply(&v).expect("square"));
            if orbit.insert(w.clone()) {
                queue.push_back(w);
            }
        }
    }
    orbit.len() == normals.len() && orbit.iter().all(|v| normals.contains(v))
}

/// `R_α² = 1`, `Fix(R_α) = H_α` and `g R_α g⁻¹ = R_{gα}` for all α and the
/// given group elements, in local coordinates.
pub fn reflections_behave<R: Realization>(real: &R, elements: &[Permutation]) -> Result<bool> {
    let Some(ty) = real.hyperplane_type() else {
        return Ok(true);
    };
    let alphas = crate::combinatorics::enumerate_type(real.degree(), ty)?;
    let id = Matrix::identity(real.dim());
    alphas
        .par_iter()
        .map(|alpha| {
            let r = real.reflection_local(alpha)?;
            let involutive = r.mul(&r)? == id;
            let fixed = r.sub(&id)?.kernel() == real.hyperplane_local(alpha)?;
            let mut conjugation = true;
            for g in elements {
                let lhs = real.local_action(g).mul(&r)?.mul(&real.local_action(&g.inverse()))?;
                conjugation &= lhs == real.reflection_local(&alpha.image(g))?;
            }
            Ok(involutive && fixed && conjugation)
        })
        .collect::<Result<Vec<bool>>>()
        .map(|v| v.into_iter().all(|b| b))
}

/// Arrangements with at most this many hyperplanes get the Whitney cross-check.
pub const WHITNEY_LIMIT: usize = 12;

pub fn invariants(max_n: usize) -> Result<Vec<Report>> {
    let lambdas: Vec<IntPartition> = (2..=max_n).flat_map(IntPartition::all).collect();
    let reals: Vec<SpechtRealization> = lambdas.par_iter().map(SpechtRealization::new).collect();
    let arrangements = reals.par_iter().map(Arrangement::intrinsic).collect::<Result<Vec<_>>>()?;
    let mut out = Vec::new();

    let orbit_failures: Vec<String> = lambdas
        .iter()
        .zip(reals.iter().zip(&arrangements))
        .filter(|(_, (r, a))| !normals_form_one_orbit(*r, a))
        .map(|(l, _)| l.to_string())
        .collect();
    out.push(Report::new(
        "the normals n_α form a single S_n-orbit up to sign",
        json!({ "max_n": max_n }),
        orbit_failures.is_empty(),
        json!({ "failures": orbit_failures }),
    ));

    let mut reflection_failures = Vec::new();
    for (l, r) in lambdas.iter().zip(&reals) {
        let elements: Vec<Permutation> = Permutation::coxeter_generators(l.n())
            .into_iter()
            .chain([Permutation::from_one_line(&(1..=l.n()).rev().collect::<Vec<_>>())?])
            .collect();
        if !reflections_behave(r, &elements)? {
            reflection_failures.push(l.to_string());
        }
    }
    out.push(Report::new(
        "R_α² = 1, Fix R_α = H_α and g R_α g⁻¹ = R_{gα}",
        json!({ "max_n": max_n }),
        reflection_failures.is_empty(),
        json!({ "failures": reflection_failures }),
    ));

    // the intrinsic arrangements, their deletions and restrictions, and the 𝒞 arrangements
    let mut pool: Vec<(String, Arrangement)> = Vec::new();
    for (l, a) in lambdas.iter().zip(&arrangements) {
        pool.push((l.to_string(), a.clone()));
        if !a.is_empty() {
            pool.push((format!("{l} minus H_0"), a.delete(0)?));
            pool.push((format!("{l} on H_0"), a.restrict(0)?));
        }
    }
    for n in 3..=max_n {
        for k in 1..=n - 2 {
            pool.push((format!("C({n},{k})"), build_c_arrangement(n, k)?));
        }
    }
    let checks: Vec<(String, bool, Option<bool>)> = pool
        .par_iter()
        .map(|(name, a)| {
            let lattice = a.intersection_lattice();
            let alternating = lattice
                .flats()
                .iter()
                .all(|f| f.mobius() != 0 && (f.mobius() > 0) == (f.codim() % 2 == 0));
            let by_order = lattice.mobius_by_order() == lattice.flats().iter().map(|f| f.mobius()).collect::<Vec<_>>();
            let whitney = (a.len() <= WHITNEY_LIMIT).then(|| a.whitney_char_poly().map(|w| w == lattice.char_poly()).unwrap_or(false));
            (name.clone(), alternating && by_order, whitney)
        })
        .collect();
    let sign_failures: Vec<&String> = checks.iter().filter(|c| !c.1).map(|c| &c.0).collect();
    out.push(Report::new(
        "(−1)^codim μ(0̂, x) > 0 on every flat, matching μ from the order relation",
        json!({ "max_n": max_n, "arrangements": checks.len() }),
        sign_failures.is_empty(),
        json!({ "failures": sign_failures }),
    ));
    let whitney_checked = checks.iter().filter(|c| c.2.is_some()).count();
    let whitney_failures: Vec<&String> = checks.iter().filter(|c| c.2 == Some(false)).map(|c| &c.0).collect();
    out.push(Report::new(
        "Whitney's subset formula gives the same χ",
        json!({ "max_n": max_n, "max_hyperplanes": WHITNEY_LIMIT, "arrangements": whitney_checked }),
        whitney_failures.is_empty(),
        json!({ "failures": whitney_failures }),
    ));
    Ok(out)
}
