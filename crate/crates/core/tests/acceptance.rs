//! Acceptance criteria, one line per criterion. Expected values are either
//! literal constants or recomputed here by independent brute force.

use std::collections::HashSet;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use intrinsic_arrangements::arrangement::{build_intrinsic, Arrangement, IntPolynomial, Label};
use intrinsic_arrangements::combinatorics::{IntPartition, SetPartition};
use intrinsic_arrangements::coordinate::CoordinateRealization;
use intrinsic_arrangements::hook::{
    boundary_matrix, build_c_arrangement, dependency_space, min_cycle_support, product_decomposition,
    verify_double_and_rank, SubsetBasis,
};
use intrinsic_arrangements::linalg::{Rational, Subspace};
use intrinsic_arrangements::partition_lattice::{
    atoms_equation, build_sy_lattice, natural_isomorphism, verify_homomorphism_props,
};
use intrinsic_arrangements::representation::Realization;
use intrinsic_arrangements::specht::SpechtRealization;
use intrinsic_arrangements::verify::{normals_form_one_orbit, reflections_behave};

/// Every comparison is exact: integer coefficients, dimensions and counts
/// must agree with zero difference.
const TOLERANCE: i64 = 0;

const BUDGET_TABLE: Duration = Duration::from_secs(60);
const BUDGET_CHAIN: Duration = Duration::from_secs(120);
const BUDGET_KOSTKA: Duration = Duration::from_secs(300);
const BUDGET_HOOK: Duration = Duration::from_secs(300);
const BUDGET_LATTICE: Duration = Duration::from_secs(600);

/// Largest hyperplane count for the subset-sum cross-check of χ.
const WHITNEY_MAX: usize = 12;

struct Outcome {
    passed: bool,
    detail: String,
}

fn outcome(checks: &[(&str, bool)], extra: String) -> Outcome {
    let failed: Vec<&str> = checks.iter().filter(|c| !c.1).map(|c| c.0).collect();
    Outcome {
        passed: failed.is_empty(),
        detail: if failed.is_empty() {
            extra
        } else {
            format!("failed: {}; {extra}", failed.join(", "))
        },
    }
}

fn mismatches<T: std::fmt::Debug>(bad: &[T]) -> String {
    if bad.is_empty() {
        String::new()
    } else {
        format!("; mismatches {bad:?}")
    }
}

fn p(s: &str) -> IntPartition {
    s.parse().unwrap()
}

/// Ascending coefficients of a polynomial, compared with zero tolerance.
fn coeffs(poly: &IntPolynomial) -> Vec<i64> {
    poly.to_i64_coefficients().expect("small coefficients")
}

fn exact_eq(a: &[i64], b: &[i64]) -> bool {
    let len = a.len().max(b.len());
    (0..len).all(|i| (a.get(i).copied().unwrap_or(0) - b.get(i).copied().unwrap_or(0)).abs() <= TOLERANCE)
}

/// Ascending coefficients of ∏ (c_i + d_i t).
fn product_of_linear(factors: &[(i64, i64)]) -> Vec<i64> {
    let mut out = vec![1i64];
    for &(c, d) in factors {
        let mut next = vec![0i64; out.len() + 1];
        for (i, a) in out.iter().enumerate() {
            next[i] += a * c;
            next[i + 1] += a * d;
        }
        out = next;
    }
    out
}

fn binom(n: usize, k: usize) -> i64 {
    if k > n {
        return 0;
    }
    (0..k).fold(1i64, |acc, i| acc * (n - i) as i64 / (i + 1) as i64)
}

/// Ascending coefficients of `(t−1)^j`.
fn t_minus_one_pow(j: usize) -> Vec<i64> {
    (0..=j)
        .map(|i| binom(j, i) * if (j - i).is_multiple_of(2) { 1 } else { -1 })
        .collect()
}

/// Semistandard tableaux of shape λ and content μ, by filling cells row by row.
fn ssyt_count(lambda: &[usize], mu: &[usize]) -> u64 {
    fn go(lambda: &[usize], grid: &mut Vec<Vec<usize>>, left: &mut Vec<usize>, row: usize, col: usize) -> u64 {
        if row == lambda.len() {
            return left.iter().all(|&x| x == 0) as u64;
        }
        if col == lambda[row] {
            return go(lambda, grid, left, row + 1, 0);
        }
        let mut total = 0;
        for v in 0..left.len() {
            if left[v] == 0 {
                continue;
            }
            if col > 0 && grid[row][col - 1] > v {
                continue;
            }
            if row > 0 && grid[row - 1][col] >= v {
                continue;
            }
            left[v] -= 1;
            grid[row][col] = v;
            total += go(lambda, grid, left, row, col + 1);
            left[v] += 1;
        }
        total
    }
    let mut grid: Vec<Vec<usize>> = lambda.iter().map(|&r| vec![0; r]).collect();
    let mut left = mu.to_vec();
    go(lambda, &mut grid, &mut left, 0, 0)
}

fn factorial(n: usize) -> u128 {
    (1..=n as u128).product()
}

/// Set partitions of [n] with the given block sizes, counted by brute force
/// over restricted growth strings.
fn count_set_partitions_of_type(n: usize, mu: &[usize]) -> u128 {
    fn go(i: usize, n: usize, sizes: &mut Vec<usize>, target: &[usize]) -> u128 {
        if i == n {
            let mut s = sizes.clone();
            s.sort_unstable_by(|a, b| b.cmp(a));
            return (s == target) as u128;
        }
        let mut total = 0;
        for b in 0..=sizes.len() {
            if b == sizes.len() {
                sizes.push(1);
            } else {
                sizes[b] += 1;
            }
            total += go(i + 1, n, sizes, target);
            if sizes[b] == 1 && b == sizes.len() - 1 {
                sizes.pop();
            } else {
                sizes[b] -= 1;
            }
        }
        total
    }
    go(0, n, &mut Vec::new(), mu)
}

fn bell(n: usize) -> usize {
    let mut row = vec![1usize];
    for _ in 0..n {
        let mut next = vec![*row.last().unwrap()];
        for x in &row {
            next.push(next.last().unwrap() + x);
        }
        row = next;
    }
    row[0]
}

/// χ by Whitney's formula `Σ_S (−1)^{|S|} t^{dim ⋂S}`, evaluated here
/// directly over all subsets.
fn whitney(a: &Arrangement) -> Vec<i64> {
    let m = a.len();
    let mut out = vec![0i64; a.dim() + 1];
    for mask in 0u32..(1 << m) {
        let subset: Vec<usize> = (0..m).filter(|i| mask & (1 << i) != 0).collect();
        let dim = a.intersection(&subset).unwrap().dim();
        out[dim] += if subset.len().is_multiple_of(2) { 1 } else { -1 };
    }
    out
}

fn criterion_1() -> Outcome {
    let start = Instant::now();
    let rows: [(&str, usize, usize, Vec<i64>); 4] = [
        ("4,1", 4, 10, product_of_linear(&[(-4, 1), (-3, 1), (-2, 1), (-1, 1)])),
        ("3,2", 5, 15, vec![-166, 350, -260, 90, -15, 1]),
        ("3,1,1", 6, 10, vec![51, -147, 175, -115, 45, -10, 1]),
        ("2,1,1,1", 4, 5, vec![4, -10, 10, -5, 1]),
    ];
    let mut checks = Vec::new();
    let mut detail = Vec::new();
    for (lam, dim, count, chi) in &rows {
        let a = build_intrinsic(&p(lam)).unwrap();
        let got = coeffs(&a.char_poly());
        checks.push((*lam, a.dim() == *dim && a.len() == *count && exact_eq(&got, chi)));
        detail.push(format!("({lam}) {} {} {}", a.dim(), a.len(), a.char_poly()));
    }
    let elapsed = start.elapsed();
    checks.push(("runtime", elapsed <= BUDGET_TABLE));
    outcome(
        &checks.iter().map(|(s, b)| (*s, *b)).collect::<Vec<_>>(),
        format!("{}; {elapsed:.2?}", detail.join("; ")),
    )
}

fn criterion_2() -> Outcome {
    let mut checks = Vec::new();
    let mut names = Vec::new();
    for n in 3..=6usize {
        let a = build_intrinsic(&IntPartition::hook(n, 1).unwrap()).unwrap();
        let lattice = a.intersection_lattice();
        let chi = product_of_linear(&(1..n as i64).map(|k| (-k, 1)).collect::<Vec<_>>());
        let poin = product_of_linear(&(1..n as i64).map(|k| (1, k)).collect::<Vec<_>>());
        names.push(format!("n={n}"));
        checks.push(
            a.len() as i64 == binom(n, 2)
                && exact_eq(&coeffs(&lattice.char_poly()), &chi)
                && exact_eq(&coeffs(&lattice.poincare()), &poin),
        );
    }
    let pairs: Vec<(&str, bool)> = names.iter().map(String::as_str).zip(checks).collect();
    outcome(&pairs, "C(n,2) hyperplanes, χ and Poin for n = 3..6".into())
}

fn criterion_3() -> Outcome {
    let start = Instant::now();
    let mut names = Vec::new();
    let mut results = Vec::new();
    let mut previous: Option<Arrangement> = None;
    for n in 2..=7usize {
        let lambda = IntPartition::from_unsorted([vec![2], vec![1; n - 2]].concat());
        let a = build_intrinsic(&lambda).unwrap();
        let mut closed = vec![0i64; n];
        for j in 1..n {
            let sign = if (n - 1 - j) % 2 == 0 { 1 } else { -1 };
            for (i, c) in t_minus_one_pow(j).into_iter().enumerate() {
                closed[i] += sign * c;
            }
        }
        let chi = coeffs(&a.char_poly());
        let alpha0 = SetPartition::distinguished(&lambda.conjugate());
        let h = a.position(&Label::Partition(alpha0)).unwrap();
        let deleted = coeffs(&a.delete(h).unwrap().char_poly());
        let restricted_arr = a.restrict(h).unwrap();
        let restricted = coeffs(&restricted_arr.char_poly());
        let difference: Vec<i64> = (0..deleted.len().max(restricted.len()))
            .map(|i| deleted.get(i).copied().unwrap_or(0) - restricted.get(i).copied().unwrap_or(0))
            .collect();
        let isomorphic = previous.as_ref().is_none_or(|prev| {
            prev.intersection_lattice().invariants() == restricted_arr.essentialize().intersection_lattice().invariants()
        });
        names.push(format!("n={n}"));
        results.push(exact_eq(&chi, &closed) && exact_eq(&chi, &difference) && isomorphic);
        previous = Some(a);
    }
    let elapsed = start.elapsed();
    let mut pairs: Vec<(&str, bool)> = names.iter().map(String::as_str).zip(results).collect();
    pairs.push(("runtime", elapsed <= BUDGET_CHAIN));
    outcome(&pairs, format!("closed form and deletion-restriction for n = 2..7; {elapsed:.2?}"))
}

fn criterion_4() -> Outcome {
    let start = Instant::now();
    let mut bad_dim = Vec::new();
    let mut bad_gens = Vec::new();
    let mut pairs = 0;
    for n in 1..=6 {
        for lambda in IntPartition::all(n) {
            let real = SpechtRealization::new(&lambda);
            for mu in IntPartition::all(n) {
                let alpha = SetPartition::distinguished(&mu);
                let path = real.fixed_local(&alpha.spanning_transpositions());
                let star = real.fixed_local(&alpha.star_transpositions());
                if path.dim() as u64 != ssyt_count(lambda.parts(), mu.parts()) {
                    bad_dim.push(format!("{lambda}/{mu}"));
                }
                if path != star {
                    bad_gens.push(format!("{lambda}/{mu}"));
                }
                pairs += 1;
            }
        }
    }
    let elapsed = start.elapsed();
    outcome(
        &[
            ("dim = K", bad_dim.is_empty()),
            ("generator independence", bad_gens.is_empty()),
            ("runtime", elapsed <= BUDGET_KOSTKA),
        ],
        format!("{pairs} pairs (λ, μ) with n ≤ 6; {elapsed:.2?}{}{}", mismatches(&bad_dim), mismatches(&bad_gens)),
    )
}

fn criterion_5() -> Outcome {
    let mut bad = Vec::new();
    let mut total = 0;
    for n in 1..=7 {
        for lambda in IntPartition::all(n) {
            let conj = lambda.conjugate();
            let mut denom = 1u128;
            // multiplicities()[k] is the number of parts equal to k
            for (k, &m) in conj.multiplicities().iter().enumerate() {
                denom *= factorial(k).pow(m as u32) * factorial(m);
            }
            let formula = factorial(n) / denom;
            let brute = count_set_partitions_of_type(n, conj.parts());
            let built = build_intrinsic(&lambda).unwrap().len() as u128;
            if formula != brute || formula != built {
                bad.push(format!("{lambda}: {formula} {brute} {built}"));
            }
            total += 1;
        }
    }
    outcome(&[("counts agree", bad.is_empty())], format!("{total} partitions with n ≤ 7{}", mismatches(&bad)))
}

fn criterion_6() -> Outcome {
    let mut bad = Vec::new();
    let mut total = 0;
    for n in 2..=5 {
        for lambda in IntPartition::all(n).into_iter().filter(|l| !l.is_trivial()) {
            let real = CoordinateRealization::new(&lambda).unwrap();
            let boolean = real.boolean_restriction().unwrap();
            let intrinsic = Arrangement::intrinsic(&real).unwrap();
            let set = |a: &Arrangement| -> HashSet<Subspace> {
                (0..a.len()).map(|i| a.hyperplane_subspace(i).unwrap()).collect()
            };
            if boolean.len() != intrinsic.len() || set(&boolean) != set(&intrinsic) {
                bad.push(lambda.to_string());
            }
            total += 1;
        }
    }
    outcome(&[("subspace sets equal", bad.is_empty())], format!("{total} nontrivial λ with n ≤ 5{}", mismatches(&bad)))
}

fn criterion_7() -> Outcome {
    let start = Instant::now();
    let mut squares = true;
    for n in 2..=8 {
        for k in 1..=n - 2 {
            let a = boundary_matrix(n, k).unwrap().matrix;
            let b = boundary_matrix(n, k + 1).unwrap().matrix;
            squares &= b.mul(&a).unwrap().is_zero();
        }
    }
    let mut checks: Vec<(String, bool)> = vec![("∂²=0".into(), squares)];
    let mut detail = Vec::new();
    for (n, k) in [(5usize, 2usize), (6, 2), (6, 3)] {
        let d = product_decomposition(n, k).unwrap();
        checks.push((
            format!("({n},{k}) product"),
            d.center_dim as i64 == binom(n - 1, k - 1) && d.center_is_boundary_image && d.lattice_matches,
        ));
        let (double, count) = verify_double_and_rank(n, k).unwrap();
        checks.push((format!("({n},{k}) double"), double));
        let rank = build_c_arrangement(n, k).unwrap().essentialize().pi1_abelian_rank();
        checks.push((
            format!("({n},{k}) π₁ rank"),
            rank.map(|r| r as i64) == Some(binom(n, k + 1)) && count as i64 == binom(n, k + 1),
        ));
        let dep = dependency_space(n, k).unwrap();
        checks.push((format!("({n},{k}) dependency dim = C(n,k+2)"), dep.dim() as i64 == binom(n, k + 2)));
        if n == 5 {
            let basis = SubsetBasis::new(5, 3);
            let mut relation = vec![Rational::ZERO; basis.len()];
            for (s, c) in [([1, 2, 3], 1), ([1, 2, 4], -1), ([1, 3, 4], 1), ([2, 3, 4], -1)] {
                relation[basis.index_of(&s).unwrap()] = Rational::from_integer(c);
            }
            checks.push(("(5,2) relation E(123)−E(124)+E(134)−E(234)".into(), dep.contains(&relation)));
        }
        let support = min_cycle_support(n, k, k + 3).unwrap();
        checks.push((format!("({n},{k}) min cycle support = 4"), support == Some(4)));
        detail.push(format!(
            "({n},{k}): center {} dep {} (C(n,k+2)={}) support {:?}",
            d.center_dim,
            dep.dim(),
            binom(n, k + 2),
            support
        ));
    }
    let elapsed = start.elapsed();
    checks.push(("runtime".into(), elapsed <= BUDGET_HOOK));
    let pairs: Vec<(&str, bool)> = checks.iter().map(|(s, b)| (s.as_str(), *b)).collect();
    outcome(&pairs, format!("{}; {elapsed:.2?}", detail.join("; ")))
}

fn criterion_8() -> Outcome {
    let start = Instant::now();
    let mut checks: Vec<(String, bool)> = Vec::new();
    let mut strict_found = 0;
    for n in 1..=5 {
        let parts = SetPartition::all(n);
        for lambda in IntPartition::all(n) {
            let hom = verify_homomorphism_props(&lambda, usize::MAX).unwrap();
            strict_found += hom.strict_count;
            checks.push((format!("{lambda} (i)–(iv)"), hom.holds()));

            let mut kostka_ok = true;
            for a in &parts {
                for b in &parts {
                    let k = |x: &SetPartition| ssyt_count(lambda.parts(), x.type_partition().parts());
                    kostka_ok &= k(&a.join(b).unwrap()) + k(&a.meet(b).unwrap()) >= k(a) + k(b);
                }
            }
            checks.push((format!("{lambda} Kostka inequality"), kostka_ok));

            let real = SpechtRealization::new(&lambda);
            let sy = build_sy_lattice(&real);
            checks.push((format!("{lambda} S^Y meet-closed, coatomistic"), sy.meet_closed && sy.is_coatomistic()));
            if n >= 2 && !lambda.is_trivial() {
                let atoms = atoms_equation(&lambda).unwrap();
                checks.push((format!("{lambda} atoms equation"), atoms.equation_holds));
                checks.push((format!("{lambda} S^Y embeds in L(𝒜)"), atoms.embedded && atoms.hyperplanes_are_joins));
            }
        }
    }
    let natural = natural_isomorphism(5).unwrap();
    checks.push((
        "S^Y(V_nat)* ≅ Π_5".into(),
        natural.holds() && natural.images == 52 && bell(5) == 52,
    ));
    let elapsed = start.elapsed();
    checks.push(("runtime".into(), elapsed <= BUDGET_LATTICE));
    let pairs: Vec<(&str, bool)> = checks.iter().map(|(s, b)| (s.as_str(), *b)).collect();
    outcome(
        &pairs,
        format!(
            "all λ ⊢ n ≤ 5; |S^Y(V_nat)| = {}; {strict_found} strict sum containments seen; {elapsed:.2?}",
            natural.images
        ),
    )
}

fn criterion_9() -> Outcome {
    let mut checks: Vec<(String, bool)> = Vec::new();
    let mut whitney_count = 0;
    for n in 2..=6 {
        for lambda in IntPartition::all(n) {
            let real = SpechtRealization::new(&lambda);
            let a = Arrangement::intrinsic(&real).unwrap();
            if n <= 5 {
                checks.push((format!("{lambda} one orbit"), normals_form_one_orbit(&real, &a)));
                let mut elements = intrinsic_arrangements::combinatorics::Permutation::coxeter_generators(n);
                elements.push(
                    intrinsic_arrangements::combinatorics::Permutation::from_one_line(&(1..=n).rev().collect::<Vec<_>>()).unwrap(),
                );
                checks.push((format!("{lambda} reflections"), reflections_behave(&real, &elements).unwrap()));
            }
            let mut pool = vec![a.clone()];
            if !a.is_empty() {
                pool.push(a.delete(0).unwrap());
                pool.push(a.restrict(0).unwrap());
            }
            for b in pool.iter().filter(|b| b.len() <= WHITNEY_MAX) {
                let lattice = b.intersection_lattice();
                let alternating = lattice
                    .flats()
                    .iter()
                    .all(|f| f.mobius() != 0 && (f.mobius() > 0) == (f.codim() % 2 == 0));
                checks.push((format!("{lambda} Möbius signs"), alternating));
                checks.push((format!("{lambda} Whitney"), exact_eq(&coeffs(&lattice.char_poly()), &whitney(b))));
                whitney_count += 1;
            }
        }
    }
    let pairs: Vec<(&str, bool)> = checks.iter().map(|(s, b)| (s.as_str(), *b)).collect();
    outcome(&pairs, format!("{whitney_count} arrangements with ≤ {WHITNEY_MAX} hyperplanes cross-checked"))
}

type Criterion = (&'static str, fn() -> Outcome);

fn main() -> ExitCode {
    let criteria: [Criterion; 9] = [
        ("1 table at n = 5", criterion_1),
        ("2 braid sanity", criterion_2),
        ("3 (2,1^(n-2)) chain", criterion_3),
        ("4 Kostka oracle", criterion_4),
        ("5 counting", criterion_5),
        ("6 coordinate model", criterion_6),
        ("7 hook suite", criterion_7),
        ("8 partition lattice", criterion_8),
        ("9 property invariants", criterion_9),
    ];
    let mut all = true;
    for (name, run) in criteria {
        let o = run();
        all &= o.passed;
        println!("criterion {name}: {} ({})", if o.passed { "PASS" } else { "FAIL" }, o.detail);
    }
    if all {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
