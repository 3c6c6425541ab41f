use posdet::harness::fixtures::{
    betti_literal_counterexample, equidim_counterexample, gcm_converse_counterexample,
};
use posdet::harness::{
    parse_field, random_instance, reference_examples, replay, run_check, Check, HarnessError, InstanceKind,
    InstanceRange, InstanceSpec, Repro, SuiteOptions, Verdict,
};
use posdet::homological::{betti_table, classify};
use posdet::lattice::{BoundVector, ExponentVector};
use posdet::linalg::Field;

const Q: Field = Field::Rationals;

fn options(count: usize) -> SuiteOptions {
    SuiteOptions {
        count: Some(count),
        ..SuiteOptions::default()
    }
}

#[test]
fn check_names_round_trip() {
    for c in Check::ALL {
        assert_eq!(Check::from_name(c.name()), Some(c));
    }
    assert_eq!(Check::from_name("nope"), None);
    assert_eq!(Check::defaults().len(), Check::ALL.len() - 3);
}

#[test]
fn caps_are_enforced() {
    let spec = |t: Vec<i64>, g| InstanceSpec {
        kind: InstanceKind::Ideal,
        bound: BoundVector::new(ExponentVector::new(t)).unwrap(),
        max_generators: g,
        seed: 0,
    };
    assert!(matches!(random_instance(&spec(vec![1; 7], 3)), Err(HarnessError::Cap(_))));
    assert!(matches!(random_instance(&spec(vec![5, 1], 3)), Err(HarnessError::Cap(_))));
    assert!(matches!(random_instance(&spec(vec![2, 2], 11)), Err(HarnessError::Cap(_))));
    assert!(random_instance(&spec(vec![4; 6], 10)).is_ok());
}

#[test]
fn fields_parse() {
    assert_eq!(parse_field("q").unwrap(), Field::Rationals);
    assert_eq!(parse_field("fp:7").unwrap().characteristic(), 7);
    assert!(parse_field("fp:8").is_err());
    assert!(parse_field("r").is_err());
}

#[test]
fn records_come_back_in_seed_order() {
    let opts = SuiteOptions {
        seed: 40,
        ..options(25)
    };
    let report = run_check(Check::Adual, &opts).unwrap();
    let seeds: Vec<u64> = report.records.iter().map(|r| r.seed).collect();
    assert_eq!(seeds, (40..65).collect::<Vec<_>>());
    assert_eq!(report.passed + report.skipped + report.failed(), 25);
}

#[test]
fn suites_are_reproducible() {
    let a = run_check(Check::Dim, &options(30)).unwrap();
    let b = run_check(Check::Dim, &options(30)).unwrap();
    assert_eq!(a.records, b.records);
}

#[test]
fn radical_suite_has_no_failures() {
    let report = run_check(Check::ClassicRadical, &options(100)).unwrap();
    assert!(report.is_pass(), "{:?}", report.failures.first());
}

#[test]
fn betti_suite_on_small_arity() {
    let opts = SuiteOptions {
        range: Some(InstanceRange {
            max_arity: 3,
            ..Check::BettiRadical.default_range()
        }),
        ..options(100)
    };
    let report = run_check(Check::BettiRadical, &opts).unwrap();
    assert!(report.is_pass(), "{:?}", report.failures.first());
}

#[test]
fn cm_suite_reports_dimension_equality() {
    let report = run_check(Check::Cm, &options(100)).unwrap();
    assert!(report.is_pass());
    assert!(report.passed > 20);
}

#[test]
fn prime_field_suite() {
    let opts = SuiteOptions {
        field: Field::prime(5).unwrap(),
        ..options(40)
    };
    for check in [Check::Resol, Check::ExtB, Check::Oracle] {
        let report = run_check(check, &opts).unwrap();
        assert!(report.is_pass(), "{}: {:?}", check.name(), report.failures.first());
    }
}

#[test]
fn failures_replay_identically() {
    let report = run_check(Check::EquidimLiteral, &options(120)).unwrap();
    let failure = report.failures.first().expect("a known counterexample lies in the first 120 seeds");
    let dir = std::env::temp_dir().join(format!("posdet-repro-{}", std::process::id()));
    let path = failure.write(&dir).unwrap();
    let stored = Repro::read(&path).unwrap();
    assert_eq!(&stored, failure);
    let again = replay(&stored).unwrap();
    assert_eq!(again.failures, vec![failure.clone()]);
    std::fs::remove_dir_all(dir).unwrap();
}

#[test]
fn wrong_kind_is_a_skip() {
    let inst = random_instance(&InstanceSpec {
        kind: InstanceKind::Presentation,
        bound: BoundVector::ones(2),
        max_generators: 2,
        seed: 3,
    })
    .unwrap();
    assert!(matches!(Check::Oracle.run(&inst, Q), Err(HarnessError::WrongKind(_))));
}

#[test]
fn reference_examples_hold() {
    let report = reference_examples(Q).unwrap();
    assert!(report.is_pass(), "{:?}", report.cases);
    assert_eq!(report.cases.len(), 9);
}

#[test]
fn equidimensionality_can_fail_without_a_dimension_drop() {
    let m = equidim_counterexample(Q).unwrap();
    let r = m.radical_functor().unwrap();
    assert_eq!(m.annihilator_and_dim().unwrap().dim, 2);
    assert_eq!(r.annihilator_and_dim().unwrap().dim, 2);
    assert!(m.is_equidimensional().unwrap());
    assert!(!r.is_equidimensional().unwrap());
    let heights: Vec<usize> = r.minimal_primes().unwrap().iter().map(|p| p.height()).collect();
    assert_eq!(heights.len(), 2);
    assert!(heights.contains(&1) && heights.contains(&2));
}

#[test]
fn generalized_cm_does_not_lift_back() {
    let m = gcm_converse_counterexample(Q).unwrap();
    let r = m.radical_functor().unwrap();
    let (cm, cr) = (classify(&m).unwrap(), classify(&r).unwrap());
    assert_eq!(cm.dim, cr.dim);
    assert!(!cm.is_gen_cm);
    assert!(cr.is_gen_cm && cr.is_cm);
}

#[test]
fn per_degree_betti_inequality_fails_in_degree_zero() {
    let m = betti_literal_counterexample(Q).unwrap();
    let r = m.radical_functor().unwrap();
    let a = ExponentVector::new(vec![0, 1]);
    assert_eq!(betti_table(&m).unwrap().get(0, &a), 0);
    assert_eq!(betti_table(&r).unwrap().get(0, &a), 1);
    // the aggregated form still holds: β_0 of J/I at (0,2) covers it
    assert_eq!(betti_table(&m).unwrap().get(0, &ExponentVector::new(vec![0, 2])), 1);
}

#[test]
fn verdicts_label() {
    assert_eq!(Verdict::Pass.label(), "pass");
    assert_eq!(Verdict::Skip("x".into()).detail(), Some("x"));
}
