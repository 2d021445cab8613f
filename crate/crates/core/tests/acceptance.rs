//! Acceptance suite: the exit gate of the artifact. Each test drives one
//! criterion at its stated tolerance and prints a single pass line (run
//! with `--nocapture` to see them on success).

use std::time::Instant;

use nijenhuis_core::exact::{rat, rat_int, Rat};
use nijenhuis_core::geomcheck::{
    run_suite, spectrum_report, Model, Mutation, SuiteConfig, SuiteKind,
};
use nijenhuis_core::hermcat::{Space, SpaceTag};
use nijenhuis_core::minimality::{is_phi_minimal, nogo_report};
use nijenhuis_core::repforge::Algebra;
use nijenhuis_core::rootsys::{eps_of, eps_star, RatVec};
use num_traits::{One, Zero};

fn pass_line(id: &str, detail: String) {
    println!("ACCEPTANCE {id}: {detail} — PASS");
}

fn classical_defaults() -> Vec<SpaceTag> {
    vec![
        SpaceTag::AIII { n: 5, k: 2 },
        SpaceTag::BDI { n: 5 },
        SpaceTag::BDI { n: 6 },
        SpaceTag::DIII { n: 4 },
        SpaceTag::CI { n: 3 },
    ]
}

/// Criterion 1: exceptional nonexistence search with exact survivors and
/// witnesses, under 10 seconds.
#[test]
fn ac1_exceptional_nonexistence() {
    let start = Instant::now();

    let e6 = Space::new(SpaceTag::EIII).unwrap();
    let cert = nogo_report(&e6).unwrap();
    let sys = &e6.system;
    let eps = eps_star(sys).unwrap();
    let mut nontrivial: Vec<RatVec> = cert
        .outcome
        .survivors
        .iter()
        .filter(|s| !s.trivial)
        .map(|s| s.weight.clone())
        .collect();
    nontrivial.sort();
    let mut expected = vec![
        eps.scale(&rat(2, 3)),
        eps_of(sys, 0).add(&eps.scale(&rat(1, 3))),
    ];
    expected.sort();
    assert_eq!(nontrivial, expected, "e6 survivors");
    for s in &cert.outcome.survivors {
        if s.trivial {
            continue;
        }
        let (a, b) = s.witness.expect("witness");
        let (alpha, beta) = (&sys.positive[a], &sys.positive[b]);
        assert!(sys.inner(&s.weight, alpha).unwrap().is_one());
        assert!(sys.inner(&s.weight, beta).unwrap().is_one());
        assert!(sys.inner(alpha, beta).unwrap().is_zero());
        assert!(e6.is_noncompact(a) && e6.is_noncompact(b));
    }

    let e7 = Space::new(SpaceTag::EVII).unwrap();
    let cert7 = nogo_report(&e7).unwrap();
    let sys7 = &e7.system;
    let eps7 = eps_star(sys7).unwrap();
    let nontrivial7: Vec<&RatVec> = cert7
        .outcome
        .survivors
        .iter()
        .filter(|s| !s.trivial)
        .map(|s| &s.weight)
        .collect();
    assert_eq!(nontrivial7.len(), 1, "e7 sole nontrivial survivor");
    assert_eq!(
        *nontrivial7[0],
        eps_of(sys7, 0).add(&eps7.scale(&rat(1, 2)))
    );
    let (a, b) = cert7
        .outcome
        .survivors
        .iter()
        .find(|s| !s.trivial)
        .unwrap()
        .witness
        .unwrap();
    assert!(sys7
        .inner(&sys7.positive[a], &sys7.positive[b])
        .unwrap()
        .is_zero());

    let elapsed = start.elapsed();
    assert!(elapsed.as_secs_f64() < 10.0, "search took {elapsed:?}");
    pass_line(
        "1",
        format!(
            "e6 survivors (2/3)e and e1+(1/3)e witnessed, e7 sole survivor e1+(1/2)e, \
             exact arithmetic, {:.2}s < 10s",
            elapsed.as_secs_f64()
        ),
    );
}

/// Criterion 2: the minimality table, exact verdicts for n ≤ 8.
#[test]
fn ac2_minimality_table() {
    // AIII fundamentals: minimal with Λ_φ = i(n−k)/n.
    for n in 2..=8usize {
        for k in 1..n {
            let alg = Algebra::new(Space::new(SpaceTag::AIII { n, k }).unwrap()).unwrap();
            let v = is_phi_minimal(&alg, &alg.fundamental).unwrap();
            assert!(v.minimal, "su({n}) k={k}");
            assert_eq!(
                v.lambda.unwrap(),
                rat(n as i64 - k as i64, n as i64),
                "su({n}) k={k} lambda"
            );
        }
    }
    // BDI: fundamental not minimal, spin minimal with Λ_φ = i/2.
    for n in 3..=8usize {
        let alg = Algebra::new(Space::new(SpaceTag::BDI { n }).unwrap()).unwrap();
        let f = is_phi_minimal(&alg, &alg.fundamental).unwrap();
        assert!(!f.minimal, "so({}) fundamental", n + 2);
        let s = is_phi_minimal(&alg, alg.spin.as_ref().unwrap()).unwrap();
        assert!(s.minimal, "so({}) spin", n + 2);
        assert_eq!(s.lambda.unwrap(), rat(1, 2));
    }
    // DIII and CI fundamentals: minimal with Λ_φ = i/2.
    for n in 3..=8usize {
        let alg = Algebra::new(Space::new(SpaceTag::DIII { n }).unwrap()).unwrap();
        let v = is_phi_minimal(&alg, &alg.fundamental).unwrap();
        assert!(v.minimal, "so({})/u({n})", 2 * n);
        assert_eq!(v.lambda.unwrap(), rat(1, 2));
    }
    for n in 2..=8usize {
        let alg = Algebra::new(Space::new(SpaceTag::CI { n }).unwrap()).unwrap();
        let v = is_phi_minimal(&alg, &alg.fundamental).unwrap();
        assert!(v.minimal, "sp({})", 2 * n);
        assert_eq!(v.lambda.unwrap(), rat(1, 2));
    }
    pass_line(
        "2",
        "minimality table exact for n ≤ 8: AIII fund i(n−k)/n, BDI fund not minimal, \
         BDI spin i/2, DIII i/2, CI i/2"
            .into(),
    );
}

/// Criterion 3: the trace-polynomial recursion at every Thimm level,
/// r ≤ 4, 100 pairs per level, residual ≤ 1e−9, under 5 minutes.
#[test]
fn ac3_explicit_formula_across_families() {
    let start = Instant::now();
    let instances: Vec<SpaceTag> = vec![
        SpaceTag::AIII { n: 3, k: 1 },
        SpaceTag::AIII { n: 4, k: 2 },
        SpaceTag::AIII { n: 5, k: 2 },
        SpaceTag::AIII { n: 6, k: 3 },
        SpaceTag::BDI { n: 5 },  // so(7)
        SpaceTag::BDI { n: 6 },  // so(8)
        SpaceTag::BDI { n: 9 },  // so(11)
        SpaceTag::BDI { n: 10 }, // so(12), spin dimension 64
        SpaceTag::DIII { n: 4 },
        SpaceTag::DIII { n: 5 },
        SpaceTag::DIII { n: 6 },
        SpaceTag::CI { n: 3 },
        SpaceTag::CI { n: 4 },
        SpaceTag::CI { n: 5 },
    ];
    let cfg = SuiteConfig {
        trials: 100,
        tol: 1e-9,
        seed: 20260811,
        mutation: Mutation::None,
    };
    let mut worst: f64 = 0.0;
    for tag in instances {
        let model = Model::build(tag, None).unwrap();
        let report = run_suite(&model, SuiteKind::ExplicitFormula, &cfg).unwrap();
        assert!(
            report.pass,
            "{tag}: {:?}",
            report
                .breakdown
                .iter()
                .filter(|e| !e.pass)
                .collect::<Vec<_>>()
        );
        worst = worst.max(report.max_residual);
    }
    let elapsed = start.elapsed();
    assert!(elapsed.as_secs_f64() < 300.0, "took {elapsed:?}");
    pass_line(
        "3",
        format!(
            "recursion residuals ≤ 1e-9 (worst {worst:.3e}) over 100 pairs per level, r ≤ 4, \
             AIII(n≤6)/BDI(n+2≤12)/DIII(n≤6)/CI(n≤5), {:.1}s < 300s",
            elapsed.as_secs_f64()
        ),
    );
}

/// Criterion 4: the quadratic relation and the k_φ commutant identity
/// at 100 random points per classical family.
#[test]
fn ac4_quadratic_and_commutant() {
    let cfg = SuiteConfig {
        trials: 100,
        tol: 1e-9,
        seed: 4,
        mutation: Mutation::None,
    };
    let mut worst: f64 = 0.0;
    for tag in classical_defaults() {
        let model = Model::build(tag, None).unwrap();
        let report = run_suite(&model, SuiteKind::Quadratic, &cfg).unwrap();
        assert!(report.pass, "{tag}");
        worst = worst.max(report.max_residual);
    }
    pass_line(
        "4",
        format!("quadratic relation and [mu_kphi, A_kphi] = 0 at 100 points per family (worst {worst:.3e})"),
    );
}

/// Criterion 5: slice closed forms against the exponential oracle on the
/// grid plus 50 random points, and the exceptional constants exactly.
#[test]
fn ac5_slice_formulas() {
    let cfg = SuiteConfig {
        trials: 50,
        tol: 1e-9,
        seed: 5,
        mutation: Mutation::None,
    };
    let mut worst: f64 = 0.0;
    for tag in classical_defaults() {
        let model = Model::build(tag, None).unwrap();
        let report = run_suite(&model, SuiteKind::Slice, &cfg).unwrap();
        assert!(report.pass, "{tag}");
        worst = worst.max(report.max_residual);
    }
    // Exceptional slice constants, exact from root data.
    let eiii = Space::new(SpaceTag::EIII).unwrap();
    assert_eq!(eiii.c, vec![rat_int(-1), rat_int(-1)]);
    assert_eq!(eiii.rho_sq, rat(-4, 3));
    let evii = Space::new(SpaceTag::EVII).unwrap();
    assert_eq!(evii.c, vec![rat_int(-1); 3]);
    pass_line(
        "5",
        format!(
            "slice resummation on 5×5 grid + 50 random points per family (worst {worst:.3e}); \
             EIII/EVII constants c_j = -1 and (rho,rho) = -4/3 exact"
        ),
    );
}

/// Criterion 6: the EIII symbolic certificate, zero tolerance.
#[test]
fn ac6_eiii_symbolic() {
    let space = Space::new(SpaceTag::EIII).unwrap();
    let cert = nijenhuis_core::symring::verify_eiii(&space).unwrap();
    assert!(cert.p3_relation, "p3 relation");
    assert!(cert.dn_p1, "dN p1 = -d p2");
    assert!(cert.dn_p2, "dN p2 = (2/3) d(3p1p2+p1^3)");
    assert!(cert.closed_deg3);
    pass_line(
        "6",
        "EIII ring identities hold with exact rational arithmetic".into(),
    );
}

/// Criterion 7: EVII non-membership with separating functional.
#[test]
fn ac7_evii_non_membership() {
    let space = Space::new(SpaceTag::EVII).unwrap();
    let cert = nijenhuis_core::symring::verify_evii(&space).unwrap();
    assert!(!cert.membership.member);
    match &cert.membership.outcome {
        nijenhuis_core::symring::Membership::Separating {
            functional,
            pairing_with_target,
        } => {
            assert!(!functional.is_empty());
            assert!(!pairing_with_target.is_zero());
        }
        _ => panic!("expected separating functional"),
    }
    pass_line(
        "7",
        "I_{1,1} = p1+3p2+2p3 proved outside degree-3 products of {1, I_{1,0}, I_{2,0}} \
         with a separating functional"
            .into(),
    );
}

/// Criterion 8: spectrum via λ̃ = 2i(λ − Λ_φ) matches {−2 f_j} at 50
/// matched slice points per classical family.
#[test]
fn ac8_spectrum_cross_check() {
    let mut worst: f64 = 0.0;
    for tag in classical_defaults() {
        let model = Model::build(tag, None).unwrap();
        let report = spectrum_report(&model, 8, 50, 1e-9).unwrap();
        assert!(report.pass, "{tag}: {}", report.max_residual);
        worst = worst.max(report.max_residual);
    }
    pass_line(
        "8",
        format!(
            "eigenvalue map agrees with -2f_j at 50 slice points per family (worst {worst:.3e})"
        ),
    );
}

/// Criterion 9: each seeded formula mutation breaks a suite loudly.
#[test]
fn ac9_mutation_sensitivity() {
    let model = Model::build(SpaceTag::CI { n: 3 }, None).unwrap();
    for mutation in [Mutation::DropHalf, Mutation::FlipSign, Mutation::ZeroLambda] {
        let cfg = SuiteConfig {
            trials: 10,
            tol: 1e-9,
            seed: 9,
            mutation,
        };
        let report = run_suite(&model, SuiteKind::ExplicitFormula, &cfg).unwrap();
        assert!(!report.pass, "{} must fail a suite", mutation.name());
        let loud = report
            .breakdown
            .iter()
            .map(|e| e.residual)
            .fold(0.0, f64::max);
        assert!(
            loud >= 1e-2,
            "{} residual {loud} too quiet",
            mutation.name()
        );
    }
    pass_line(
        "9",
        "drop-half, flip-sign and zero-lambda each fail the recursion suite with residual ≥ 1e-2"
            .into(),
    );
}

/// One literal row of the minimality table kept as a frozen anchor:
/// Λ_φ of AIII(5,2) is 3i/5.
#[test]
fn minimality_anchor_values() {
    let alg = Algebra::new(Space::new(SpaceTag::AIII { n: 5, k: 2 }).unwrap()).unwrap();
    let v = is_phi_minimal(&alg, &alg.fundamental).unwrap();
    assert_eq!(v.lambda.unwrap(), Rat::new(3.into(), 5.into()));
}
