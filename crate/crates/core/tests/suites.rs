//! Suite-level integration checks on small instances: every suite must
//! pass at the default tolerance, and each seeded formula corruption
//! must break at least one identity loudly.

use nijenhuis_core::geomcheck::{
    run_suite, spectrum_report, Model, Mutation, SuiteConfig, SuiteKind,
};
use nijenhuis_core::hermcat::SpaceTag;

fn cfg(trials: usize, seed: u64) -> SuiteConfig {
    SuiteConfig {
        trials,
        tol: 1e-9,
        seed,
        mutation: Mutation::None,
    }
}

fn assert_suite(tag: SpaceTag, kind: SuiteKind, trials: usize) {
    let model = Model::build(tag, None).unwrap();
    let report = run_suite(&model, kind, &cfg(trials, 42)).unwrap();
    assert!(
        report.pass,
        "{tag} {} failed: {:#?}",
        kind.name(),
        report
            .breakdown
            .iter()
            .filter(|e| !e.pass)
            .collect::<Vec<_>>()
    );
}

#[test]
fn quadratic_small_instances() {
    assert_suite(SpaceTag::CI { n: 3 }, SuiteKind::Quadratic, 20);
    assert_suite(SpaceTag::AIII { n: 5, k: 2 }, SuiteKind::Quadratic, 20);
    assert_suite(SpaceTag::BDI { n: 5 }, SuiteKind::Quadratic, 20);
    assert_suite(SpaceTag::DIII { n: 4 }, SuiteKind::Quadratic, 20);
}

#[test]
fn slice_small_instances() {
    assert_suite(SpaceTag::CI { n: 3 }, SuiteKind::Slice, 20);
    assert_suite(SpaceTag::DIII { n: 4 }, SuiteKind::Slice, 20);
    assert_suite(SpaceTag::BDI { n: 6 }, SuiteKind::Slice, 20);
    assert_suite(SpaceTag::AIII { n: 5, k: 2 }, SuiteKind::Slice, 20);
}

#[test]
fn kphi_small_instances() {
    assert_suite(SpaceTag::CI { n: 3 }, SuiteKind::Kphi, 20);
    assert_suite(SpaceTag::BDI { n: 5 }, SuiteKind::Kphi, 20);
    assert_suite(SpaceTag::AIII { n: 4, k: 2 }, SuiteKind::Kphi, 20);
}

#[test]
fn basic_forms_small_instances() {
    assert_suite(SpaceTag::CI { n: 2 }, SuiteKind::BasicForms, 10);
    assert_suite(SpaceTag::AIII { n: 4, k: 2 }, SuiteKind::BasicForms, 10);
    assert_suite(SpaceTag::BDI { n: 5 }, SuiteKind::BasicForms, 10);
}

#[test]
fn explicit_formula_small_instances() {
    assert_suite(SpaceTag::CI { n: 2 }, SuiteKind::ExplicitFormula, 10);
    assert_suite(
        SpaceTag::AIII { n: 4, k: 1 },
        SuiteKind::ExplicitFormula,
        10,
    );
    assert_suite(SpaceTag::DIII { n: 3 }, SuiteKind::ExplicitFormula, 10);
    assert_suite(SpaceTag::BDI { n: 4 }, SuiteKind::ExplicitFormula, 10);
}

#[test]
fn commutation_small_instances() {
    assert_suite(SpaceTag::AIII { n: 4, k: 2 }, SuiteKind::Commutation, 10);
    assert_suite(SpaceTag::CI { n: 3 }, SuiteKind::Commutation, 10);
}

#[test]
fn spectrum_two_path_agreement() {
    for tag in [
        SpaceTag::CI { n: 3 },
        SpaceTag::DIII { n: 5 },
        SpaceTag::BDI { n: 6 },
    ] {
        let model = Model::build(tag, None).unwrap();
        let report = spectrum_report(&model, 7, 10, 1e-9).unwrap();
        assert!(report.pass, "{tag} spectrum: {:#?}", report.max_residual);
        assert!(report.base_point_zero < 1e-12);
    }
}

#[test]
fn spectrum_half_pi_contains_two() {
    // a_j = π/2 gives f_j = −1, so +2 appears in the mapped spectrum.
    let model = Model::build(SpaceTag::CI { n: 3 }, None).unwrap();
    let a = vec![std::f64::consts::FRAC_PI_2; model.space_rank];
    let (computed, expected) = nijenhuis_core::geomcheck::spectrum_at(&model, &a).unwrap();
    assert!(expected.iter().any(|v| (v - 2.0).abs() < 1e-12));
    assert!(computed.iter().any(|v| (v - 2.0).abs() < 1e-9));
}

#[test]
fn whole_space_verdict_noted_for_even_spinors() {
    use nijenhuis_core::minimality::is_phi_minimal;
    use nijenhuis_core::repforge::Algebra;
    use nijenhuis_core::Space;
    let alg = Algebra::new(Space::new(SpaceTag::BDI { n: 6 }).unwrap()).unwrap();
    let v = is_phi_minimal(&alg, alg.spin.as_ref().unwrap()).unwrap();
    assert!(v.minimal && v.on_summand);
    // The wholesale top level splits into the two half-spinor summands.
    assert_eq!(v.whole_space_top_summands, Some(2));
    let odd = Algebra::new(Space::new(SpaceTag::BDI { n: 5 }).unwrap()).unwrap();
    let vo = is_phi_minimal(&odd, odd.spin.as_ref().unwrap()).unwrap();
    assert!(vo.minimal && !vo.on_summand);
    assert_eq!(vo.whole_space_top_summands, None);
}

#[test]
fn mutations_break_loudly() {
    let model = Model::build(SpaceTag::CI { n: 2 }, None).unwrap();
    for mutation in [Mutation::DropHalf, Mutation::FlipSign, Mutation::ZeroLambda] {
        let mut c = cfg(5, 9);
        c.mutation = mutation;
        let report = run_suite(&model, SuiteKind::ExplicitFormula, &c).unwrap();
        assert!(!report.pass, "{} should fail", mutation.name());
        let worst = report
            .breakdown
            .iter()
            .map(|e| e.residual)
            .fold(0.0, f64::max);
        assert!(
            worst >= 1e-2,
            "{} residual too quiet: {worst}",
            mutation.name()
        );
    }
}

#[test]
fn deterministic_reports() {
    let model = Model::build(SpaceTag::CI { n: 2 }, None).unwrap();
    let a = run_suite(&model, SuiteKind::ExplicitFormula, &cfg(8, 123)).unwrap();
    let b = run_suite(&model, SuiteKind::ExplicitFormula, &cfg(8, 123)).unwrap();
    assert_eq!(
        serde_json::to_string(&a).unwrap(),
        serde_json::to_string(&b).unwrap()
    );
}
