use intrinsic_arrangements::arrangement::{build_intrinsic, char_poly_hook_chain};
use intrinsic_arrangements::combinatorics::IntPartition;
use intrinsic_arrangements::verify::{run_suite, Suite, TABLE_N5};

fn failures(suite: Suite, n: Option<usize>) -> Vec<String> {
    run_suite(suite, n)
        .unwrap()
        .into_iter()
        .filter(|r| !r.passed())
        .map(|r| r.to_string())
        .collect()
}

#[test]
fn every_suite_passes_at_small_n() {
    for suite in Suite::EACH {
        let n = suite.default_max_n().map(|d| d.min(4));
        assert_eq!(failures(suite, n), Vec::<String>::new(), "{suite}");
    }
}

#[test]
fn hook_model_suite_passes() {
    assert!(failures(Suite::HookModel, None).is_empty());
}

#[test]
fn suite_names_round_trip() {
    for suite in Suite::EACH.into_iter().chain([Suite::All]) {
        assert_eq!(suite.name().parse::<Suite>().unwrap(), suite);
    }
    assert!("table".parse::<Suite>().is_err());
}

#[test]
fn table_rows_through_the_public_api() {
    for (lambda, dim, count, coeffs) in TABLE_N5 {
        let lambda: IntPartition = lambda.parse().unwrap();
        let a = build_intrinsic(&lambda).unwrap();
        assert_eq!((a.dim(), a.len()), (dim, count), "{lambda}");
        let chi = a.char_poly().to_i64_coefficients().unwrap();
        let descending: Vec<i64> = chi.into_iter().rev().collect();
        assert_eq!(descending, coeffs, "{lambda}");
    }
}

#[test]
fn chain_closed_form_against_built_arrangements() {
    for n in 3..=6 {
        let mut parts = vec![2];
        parts.extend(std::iter::repeat_n(1, n - 2));
        let lambda = IntPartition::new(parts).unwrap();
        assert_eq!(char_poly_hook_chain(n).unwrap(), build_intrinsic(&lambda).unwrap().char_poly());
    }
}

#[test]
fn reports_serialize() {
    let reports = run_suite(Suite::TableN5, None).unwrap();
    let value = serde_json::to_value(&reports).unwrap();
    let first = &value[0];
    assert_eq!(first["status"], "pass");
    assert!(first["claim"].is_string());
}
