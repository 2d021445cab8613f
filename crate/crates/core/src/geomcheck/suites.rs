//! The verification suites: each one samples orbit points and tangent
//! probes, evaluates both sides of a family of identities, and reports
//! the worst residual per identity. Trials are keyed by (seed, index)
//! and fan out over the thread pool; the reduction is a deterministic
//! max, so a report is a pure function of its configuration.

use super::{c64, max_abs, rel, vec_max, CMat, LieVec, Model, Mutation};
use crate::error::{Error, Result};
use crate::repforge::RepLabel;
use nalgebra::DVector;
use num_complex::Complex64;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;
use std::collections::BTreeMap;

pub const REPORT_VERSION: u32 = 1;
/// Finite-difference step and agreement threshold for the cross-checks.
const FD_STEP: f64 = 1e-5;
const FD_TOL: f64 = 1e-6;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum SuiteKind {
    Quadratic,
    Slice,
    Kphi,
    BasicForms,
    ExplicitFormula,
    Commutation,
}

impl SuiteKind {
    pub fn parse(s: &str) -> Result<SuiteKind> {
        match s {
            "quadratic" => Ok(SuiteKind::Quadratic),
            "slice" => Ok(SuiteKind::Slice),
            "kphi" => Ok(SuiteKind::Kphi),
            "basic-forms" => Ok(SuiteKind::BasicForms),
            "explicit-formula" => Ok(SuiteKind::ExplicitFormula),
            "commutation" => Ok(SuiteKind::Commutation),
            other => Err(Error::Config(format!(
                "unknown suite '{other}' (expected quadratic|slice|kphi|basic-forms|\
                 explicit-formula|commutation)"
            ))),
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            SuiteKind::Quadratic => "quadratic",
            SuiteKind::Slice => "slice",
            SuiteKind::Kphi => "kphi",
            SuiteKind::BasicForms => "basic-forms",
            SuiteKind::ExplicitFormula => "explicit-formula",
            SuiteKind::Commutation => "commutation",
        }
    }
}

#[derive(Clone, Debug)]
pub struct SuiteConfig {
    pub trials: usize,
    pub tol: f64,
    pub seed: u64,
    pub mutation: Mutation,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            trials: 100,
            tol: 1e-9,
            seed: 0,
            mutation: Mutation::None,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct BreakdownEntry {
    pub identity: String,
    pub residual: f64,
    pub threshold: f64,
    pub pass: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct SuiteReport {
    pub report_version: u32,
    pub suite: String,
    pub space: String,
    pub rep: String,
    pub trials: usize,
    pub seed: u64,
    pub tolerance: f64,
    pub mutation: String,
    pub max_residual: f64,
    pub pass: bool,
    pub breakdown: Vec<BreakdownEntry>,
}

/// A residual measurement: identity name, value, threshold.
type Finding = (String, f64, f64);

fn merge(findings: Vec<Vec<Finding>>) -> Vec<BreakdownEntry> {
    let mut worst: BTreeMap<String, (f64, f64)> = BTreeMap::new();
    for trial in findings {
        for (name, value, threshold) in trial {
            let e = worst.entry(name).or_insert((0.0, threshold));
            e.0 = e.0.max(value);
            e.1 = threshold;
        }
    }
    worst
        .into_iter()
        .map(|(identity, (residual, threshold))| BreakdownEntry {
            identity,
            residual,
            threshold,
            pass: residual <= threshold,
        })
        .collect()
}

fn finish(
    model: &Model,
    kind: SuiteKind,
    cfg: &SuiteConfig,
    breakdown: Vec<BreakdownEntry>,
) -> SuiteReport {
    // The headline residual is the worst tolerance-governed entry; the
    // finite-difference cross-checks carry their own threshold.
    let max_residual = breakdown
        .iter()
        .filter(|e| e.threshold == cfg.tol)
        .map(|e| e.residual)
        .fold(0.0, f64::max);
    let pass = breakdown.iter().all(|e| e.pass);
    SuiteReport {
        report_version: REPORT_VERSION,
        suite: kind.name().into(),
        space: model.tag.to_string(),
        rep: model.rep_label.to_string(),
        trials: cfg.trials,
        seed: cfg.seed,
        tolerance: cfg.tol,
        mutation: cfg.mutation.name().into(),
        max_residual,
        pass,
        breakdown,
    }
}

pub fn run_suite(model: &Model, kind: SuiteKind, cfg: &SuiteConfig) -> Result<SuiteReport> {
    let per_trial: Vec<Result<Vec<Finding>>> = (0..cfg.trials)
        .into_par_iter()
        .map(|trial| {
            let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
            rng.set_stream(trial as u64 + 1);
            match kind {
                SuiteKind::Quadratic => quadratic_trial(model, cfg, &mut rng),
                SuiteKind::Slice => slice_trial(model, cfg, &mut rng, trial),
                SuiteKind::Kphi => kphi_trial(model, cfg, &mut rng),
                SuiteKind::BasicForms => basic_forms_trial(model, cfg, &mut rng),
                SuiteKind::ExplicitFormula => explicit_formula_trial(model, cfg, &mut rng),
                SuiteKind::Commutation => commutation_trial(model, cfg, &mut rng),
            }
        })
        .collect();
    let mut findings = vec![];
    for t in per_trial {
        findings.push(t?);
    }
    // Deterministic point checks that belong to the suite once, not per
    // trial (grids and base points).
    match kind {
        SuiteKind::Slice => findings.push(slice_grid_checks(model, cfg)?),
        SuiteKind::Quadratic => findings.push(quadratic_base_checks(model, cfg)?),
        _ => {}
    }
    Ok(finish(model, kind, cfg, merge(findings)))
}

// ---------------------------------------------------------------------
// quadratic: the two-point identities of the moment matrix.
// ---------------------------------------------------------------------

fn quadratic_trial(model: &Model, cfg: &SuiteConfig, rng: &mut ChaCha8Rng) -> Result<Vec<Finding>> {
    let sample = model.random_orbit_point(rng)?;
    let mu = &sample.mu;
    let mut out = vec![];
    out.push(("orbit-reconstruction".into(), sample.recon_residual, 1e-10));

    // (μ_Λ − Λ_φ)(μ_Λ − Λ_φ + i) = 0.
    let mat = model.matrix(mu);
    let id = CMat::identity(model.dim_rep, model.dim_rep);
    let shift = &mat - &id * model.lambda_phi;
    let resid = &shift * (&shift + &id * c64(0.0, 1.0));
    let scale = max_abs(&mat).powi(2);
    out.push((
        "quadratic-relation".into(),
        rel(max_abs(&resid), scale),
        cfg.tol,
    ));

    // [μ_{k_φ}, A_{k_φ}] = 0.
    let mask = &model.levels[model.kphi].mask;
    let a = model.a_element(mu, mask, cfg.mutation);
    let muk = model.project(mu, mask);
    let comm = model.bracket(&muk, &a);
    let scale = vec_max(&muk) * vec_max(&a);
    out.push(("kphi-commutant".into(), rel(vec_max(&comm), scale), cfg.tol));
    Ok(out)
}

fn quadratic_base_checks(model: &Model, cfg: &SuiteConfig) -> Result<Vec<Finding>> {
    // μ = ρ_φ: stabilizer probes give exact zeros.
    let dn = model.dn_mu(&model.rho_phi, &model.rho_phi, cfg.mutation);
    Ok(vec![("stabilizer-zero".into(), vec_max(&dn), cfg.tol)])
}

// ---------------------------------------------------------------------
// slice: closed trigonometric form against the matrix exponential.
// ---------------------------------------------------------------------

fn slice_values(a: f64) -> (f64, f64) {
    (0.5 * ((2.0 * a).cos() - 1.0), -0.5 * (2.0 * a).sin())
}

fn slice_findings(model: &Model, cfg: &SuiteConfig, a: &[f64]) -> Result<Vec<Finding>> {
    let sample = model.slice_point(a)?;
    let mu = &sample.mu;
    let mut closed = model.rho_phi.clone();
    let mut fs = vec![];
    for (j, root) in model.p_roots.iter().enumerate() {
        let (f, g) = slice_values(a[j]);
        fs.push(f);
        closed += &root.ih * c64(f, 0.0);
        // ξ̃ = Σ g_j·J(X_{α_j}) and J(y_α) = −x_α.
        let mut xa = LieVec::zeros(model.dim_k);
        xa[root.x_slot] = c64(1.0, 0.0);
        closed -= xa * c64(g, 0.0);
    }
    let mut out = vec![];
    out.push((
        "resummation-mu".into(),
        rel(vec_max(&(mu - &closed)), vec_max(mu)),
        cfg.tol,
    ));
    // [Jξ̃, ξ̃] = 2Σ (f_j + f_j²)·i·h_{α_j}, with ξ̃ the numerical perp part.
    let mask = &model.levels[model.kphi].mask;
    let xi = model.perp(mu, mask);
    let lhs = model.bracket(&model.j_apply(&xi), &xi);
    let mut rhs = LieVec::zeros(model.dim_k);
    for (j, root) in model.p_roots.iter().enumerate() {
        rhs += &root.ih * c64(2.0 * (fs[j] + fs[j] * fs[j]), 0.0);
    }
    out.push((
        "a-resummation".into(),
        rel(vec_max(&(lhs - rhs)), vec_max(&xi).powi(2)),
        cfg.tol,
    ));
    Ok(out)
}

fn slice_trial(
    model: &Model,
    cfg: &SuiteConfig,
    rng: &mut ChaCha8Rng,
    _trial: usize,
) -> Result<Vec<Finding>> {
    use rand::Rng;
    let a: Vec<f64> = (0..model.space_rank)
        .map(|_| rng.random_range(-std::f64::consts::PI..std::f64::consts::PI))
        .collect();
    slice_findings(model, cfg, &a)
}

fn slice_grid_checks(model: &Model, cfg: &SuiteConfig) -> Result<Vec<Finding>> {
    // 5×5 grid over the first two slice coordinates (5 points at rank 1).
    let steps: Vec<f64> = (0..5)
        .map(|k| k as f64 * std::f64::consts::FRAC_PI_4)
        .collect();
    let mut out = vec![];
    if model.space_rank == 1 {
        for &a0 in &steps {
            out.extend(slice_findings(model, cfg, &[a0])?);
        }
    } else {
        for &a0 in &steps {
            for &a1 in &steps {
                let mut a = vec![0.0; model.space_rank];
                a[0] = a0;
                a[1] = a1;
                out.extend(slice_findings(model, cfg, &a)?);
            }
        }
    }
    Ok(out)
}

// ---------------------------------------------------------------------
// kphi: the invariant-polynomial identities of the first subalgebra.
// ---------------------------------------------------------------------

fn kphi_trial(model: &Model, cfg: &SuiteConfig, rng: &mut ChaCha8Rng) -> Result<Vec<Finding>> {
    let mask = &model.levels[model.kphi].mask;
    let sample = model.random_orbit_point(rng)?;
    let mu = &sample.mu;
    let x = model.nondegenerate_probe(rng, mu, None);
    let mut out = vec![];

    let muk = model.project(mu, mask);
    let a = model.a_element(mu, mask, cfg.mutation);
    let da = model.a_derivative(mu, &x, mask, cfg.mutation);
    let tangent = model.bracket(&x, mu);
    let dmuk = model.project(&tangent, mask);
    let dnmuk = model.project(&model.dn_mu(mu, &x, cfg.mutation), mask);

    // Scalar invariants and their evaluated differentials.
    let i20 = model.b0_pair(&muk, &muk);
    let di10 = model.b0_pair(&dmuk, &model.rho_phi);
    let di20 = model.b0_pair(&muk, &dmuk) * c64(2.0, 0.0);
    let di11 = model.b0_pair(&dmuk, &a) + model.b0_pair(&muk, &da);
    let dn_i10 = model.b0_pair(&dnmuk, &model.rho_phi);
    let dn_i20 = model.b0_pair(&muk, &dnmuk) * c64(2.0, 0.0);

    // I_{0,1} = (ρ_φ, A) = ½(I_{2,0} − (ρ_φ,ρ_φ)).
    let i01 = model.b0_pair(&model.rho_phi, &a);
    let want = (i20 - c64(model.rho_sq, 0.0)) * c64(0.5, 0.0);
    out.push((
        "i01-identity".into(),
        rel((i01 - want).norm(), i01.norm()),
        cfg.tol,
    ));

    // d_N I_{1,0} = d(I_{1,0} − ½ I_{2,0}).
    let lhs = dn_i10;
    let rhs = di10 - di20 * c64(0.5, 0.0);
    out.push((
        "nijenhuis-i10".into(),
        rel((lhs - rhs).norm(), lhs.norm()),
        cfg.tol,
    ));

    // d_N I_{2,0} = d(I_{2,0} − ⅔ I_{1,0} − 4/3 I_{1,1}).
    let lhs = dn_i20;
    let rhs = di20 - di10 * c64(2.0 / 3.0, 0.0) - di11 * c64(4.0 / 3.0, 0.0);
    out.push((
        "nijenhuis-i20".into(),
        rel((lhs - rhs).norm(), lhs.norm()),
        cfg.tol,
    ));

    // On the p-basis: d_N p_1 = −dp_2 and d_N p_2 = −(4/3)·dp_3.
    let symm1 = dn_i10 + di20 * c64(0.5, 0.0) - di10;
    out.push(("symm-p1".into(), rel(symm1.norm(), dn_i10.norm()), cfg.tol));
    let dp3 = di11 * c64(0.5, 0.0) + di10 - di20 * c64(0.75, 0.0);
    let symm2 = dn_i20 * c64(0.5, 0.0) - dn_i10 + dp3 * c64(4.0 / 3.0, 0.0);
    out.push(("symm-p2".into(), rel(symm2.norm(), dn_i20.norm()), cfg.tol));

    // At a matched slice point the invariants are the power sums.
    use rand::Rng;
    let aa: Vec<f64> = (0..model.space_rank)
        .map(|_| rng.random_range(-std::f64::consts::PI..std::f64::consts::PI))
        .collect();
    let s = model.slice_point(&aa)?;
    let sk = model.project(&s.mu, mask);
    let sa = model.a_element(&s.mu, mask, cfg.mutation);
    let (mut p1, mut p2, mut p3) = (0.0, 0.0, 0.0);
    for (j, root) in model.p_roots.iter().enumerate() {
        let (f, _) = slice_values(aa[j]);
        p1 += root.c * f;
        p2 += root.c * f * f;
        p3 += root.c * f * f * f;
    }
    let i10_s = model.b0_pair(&sk, &model.rho_phi);
    let i20_s = model.b0_pair(&sk, &sk);
    let i11_s = model.b0_pair(&sk, &sa);
    out.push((
        "pn-slice-i10".into(),
        rel((i10_s - c64(model.rho_sq + p1, 0.0)).norm(), i10_s.norm()),
        cfg.tol,
    ));
    out.push((
        "pn-slice-i20".into(),
        rel(
            (i20_s - c64(model.rho_sq + 2.0 * p1 + 2.0 * p2, 0.0)).norm(),
            i20_s.norm(),
        ),
        cfg.tol,
    ));
    out.push((
        "pn-slice-i11".into(),
        rel(
            (i11_s - c64(p1 + 3.0 * p2 + 2.0 * p3, 0.0)).norm(),
            i11_s.norm().max(1.0),
        ),
        cfg.tol,
    ));
    Ok(out)
}

// ---------------------------------------------------------------------
// basic-forms: invariance, basic-ness and the two evaluation routes.
// ---------------------------------------------------------------------

fn basic_forms_trial(
    model: &Model,
    cfg: &SuiteConfig,
    rng: &mut ChaCha8Rng,
) -> Result<Vec<Finding>> {
    let sample = model.random_orbit_point(rng)?;
    let mu = &sample.mu;
    let mut out = vec![];
    for level in &model.levels {
        let mask = &level.mask;
        let muk = model.project(mu, mask);
        let a = model.a_element(mu, mask, cfg.mutation);
        let comm = model.bracket(&a, &muk);
        out.push((
            format!("sufficient-condition[{}]", level.label),
            rel(vec_max(&comm), vec_max(&a) * vec_max(&muk)),
            cfg.tol,
        ));
        let x = model.nondegenerate_probe(rng, mu, None);
        for r in [2u32, 3] {
            let direct = model.dn_poly_direct(level, mu, &x, r, cfg.mutation);
            let via_a = model.dn_poly_via_a(level, mu, &x, r, cfg.mutation);
            out.push((
                format!("route-agreement[r={r},{}]", level.label),
                rel((direct - via_a).norm(), direct.norm()),
                cfg.tol,
            ));
            // ι_{X♯} d_N p = 0 for X ∈ k_1.
            let xin = model.random_lie(rng, Some(mask));
            let basic = model.dn_poly_direct(level, mu, &xin, r, cfg.mutation);
            out.push((
                format!("basicness[r={r},{}]", level.label),
                rel(basic.norm(), direct.norm().max(1.0)),
                cfg.tol,
            ));
            // Equivariance under a random subgroup element.
            let y = model.random_lie(rng, Some(mask));
            let (w, _) = model.exponential(&y)?;
            let mu_g = model.adjoint_map(&w, mu);
            let x_g = model.adjoint_map(&w, &x);
            let transported = model.dn_poly_direct(level, &mu_g, &x_g, r, cfg.mutation);
            out.push((
                format!("equivariance[r={r},{}]", level.label),
                rel((transported - direct).norm(), direct.norm()),
                cfg.tol,
            ));
        }
    }
    Ok(out)
}

// ---------------------------------------------------------------------
// explicit-formula: the trace-polynomial recursion per chain level.
// ---------------------------------------------------------------------

fn explicit_formula_trial(
    model: &Model,
    cfg: &SuiteConfig,
    rng: &mut ChaCha8Rng,
) -> Result<Vec<Finding>> {
    let sample = model.random_orbit_point(rng)?;
    let mu = &sample.mu;
    let x = model.nondegenerate_probe(rng, mu, None);
    let tangent = model.bracket(&x, mu);
    let lambda = if cfg.mutation == Mutation::ZeroLambda {
        Complex64::ZERO
    } else {
        model.lambda_phi
    };
    // Shared finite-difference points for every level and degree.
    let (wp, _) = model.exponential(&(&x * c64(FD_STEP, 0.0)))?;
    let (wm, _) = model.exponential(&(&x * c64(-FD_STEP, 0.0)))?;
    let mu_p = model.adjoint_map(&wp, mu);
    let mu_m = model.adjoint_map(&wm, mu);
    let mut out = vec![];
    for level in &model.levels {
        // R_{W_+}(A) = −i·M² + (2iΛ_φ+1)·M − Λ_φ(1+iΛ_φ).
        let a = model.a_element(mu, &level.mask, cfg.mutation);
        let a_res = level.w_plus.adjoint() * model.matrix(&a) * &level.w_plus;
        let m = model.restricted(level, mu);
        let d = m.nrows();
        let id = CMat::identity(d, d);
        let want = -(&m * &m) * c64(0.0, 1.0)
            + &m * (model.lambda_phi * c64(0.0, 2.0) + c64(1.0, 0.0))
            - &id * (model.lambda_phi * (c64(1.0, 0.0) + model.lambda_phi * c64(0.0, 1.0)));
        out.push((
            format!("fundamental-from-quadratic[{}]", level.label),
            rel(max_abs(&(a_res - want)), max_abs(&m).powi(2)),
            cfg.tol,
        ));
        for r in 1..=4u32 {
            // d_N I_r + 2iΛ_φ·dI_r − 2·dI_{r+1} = 0.
            let dn = model.dn_poly_direct(level, mu, &x, r, cfg.mutation);
            let dr = model.poly_derivative(level, mu, &tangent, r);
            let dr1 = model.poly_derivative(level, mu, &tangent, r + 1);
            let resid = dn + lambda * c64(0.0, 2.0) * dr - dr1 * c64(2.0, 0.0);
            let scale = dn.norm().max(dr.norm()).max(dr1.norm());
            out.push((
                format!("thm-residual[r={r},{}]", level.label),
                rel(resid.norm(), scale),
                cfg.tol,
            ));
            // Finite-difference cross-checks of dI_r and dA.
            let f_p = model.poly_value(level, &mu_p, r);
            let f_m = model.poly_value(level, &mu_m, r);
            let fd_val = (f_p - f_m) / c64(2.0 * FD_STEP, 0.0);
            out.push((
                format!("fd-poly[r={r},{}]", level.label),
                rel((fd_val - dr).norm(), dr.norm()),
                FD_TOL,
            ));
            if r == 1 {
                let a_p = model.a_element(&mu_p, &level.mask, cfg.mutation);
                let a_m = model.a_element(&mu_m, &level.mask, cfg.mutation);
                let fd_da = (a_p - a_m) * c64(1.0 / (2.0 * FD_STEP), 0.0);
                let da = model.a_derivative(mu, &x, &level.mask, cfg.mutation);
                out.push((
                    format!("fd-a[{}]", level.label),
                    rel(vec_max(&(fd_da - &da)), vec_max(&da)),
                    FD_TOL,
                ));
            }
        }
    }
    Ok(out)
}

// ---------------------------------------------------------------------
// commutation: Poisson commutation of nested invariants.
// ---------------------------------------------------------------------

fn commutation_trial(
    model: &Model,
    cfg: &SuiteConfig,
    rng: &mut ChaCha8Rng,
) -> Result<Vec<Finding>> {
    let sample = model.random_orbit_point(rng)?;
    let mu = &sample.mu;
    // Level pairs: same-level for every level; nested pairs along the chain.
    let chain: Vec<usize> = (0..model.levels.len())
        .filter(|&i| model.levels[i].in_chain)
        .collect();
    let mut pairs: Vec<(usize, usize)> = (0..model.levels.len()).map(|i| (i, i)).collect();
    for w in chain.windows(2) {
        pairs.push((w[0], w[1]));
    }
    if chain.len() > 2 {
        pairs.push((chain[0], *chain.last().unwrap()));
    }
    let mut out = vec![];
    for (i, j) in pairs {
        for (r, s) in [(2u32, 2u32), (2, 3), (3, 2)] {
            let xq = hamiltonian_generator(model, mu, &model.levels[j], s)?;
            let value = model.dn_poly_direct(&model.levels[i], mu, &xq, r, cfg.mutation);
            let scale = vec_max(&xq) * vec_max(mu);
            out.push((
                format!(
                    "commutation[q=I{s}({}),p=I{r}({})]",
                    model.levels[j].label, model.levels[i].label
                ),
                rel(value.norm(), scale),
                cfg.tol,
            ));
        }
    }
    let _ = rng;
    Ok(out)
}

/// Solve (Y, X_q) = q̃(μ,…,μ,Y) over the slots of k_j in the normalized
/// form; X_q generates the hamiltonian flow of q = I_s^{(j)}.
fn hamiltonian_generator(
    model: &Model,
    mu: &LieVec,
    level: &super::Level,
    s: u32,
) -> Result<LieVec> {
    let slots: Vec<usize> = (0..model.dim_k).filter(|&i| level.mask[i]).collect();
    let n = slots.len();
    let mut gram = CMat::zeros(n, n);
    for (a, &sa) in slots.iter().enumerate() {
        for (b, &sb) in slots.iter().enumerate() {
            gram[(a, b)] = c64(model.b0[(sa, sb)], 0.0);
        }
    }
    let m = model.restricted(level, mu);
    let mut p = CMat::identity(m.nrows(), m.ncols());
    for _ in 1..s {
        p = &p * &m;
    }
    let mut rhs = DVector::<Complex64>::zeros(n);
    for (a, &sa) in slots.iter().enumerate() {
        let mut unit = LieVec::zeros(model.dim_k);
        unit[sa] = c64(1.0, 0.0);
        let y_res = model.restricted(level, &unit);
        rhs[a] = (&p * y_res).trace() * super::i_pow(s);
    }
    let solved = gram
        .lu()
        .solve(&rhs)
        .ok_or_else(|| Error::Structural("singular Gram matrix on the subalgebra".into()))?;
    let mut xq = LieVec::zeros(model.dim_k);
    for (a, &sa) in slots.iter().enumerate() {
        xq[sa] = solved[a];
    }
    Ok(xq)
}

/// All suites bundled for one space, in a stable order.
pub fn all_suites() -> [SuiteKind; 6] {
    [
        SuiteKind::Quadratic,
        SuiteKind::Slice,
        SuiteKind::Kphi,
        SuiteKind::BasicForms,
        SuiteKind::ExplicitFormula,
        SuiteKind::Commutation,
    ]
}

/// Convenience: run with the default representation for the space.
pub fn run_space_suite(
    tag: crate::hermcat::SpaceTag,
    rep: Option<RepLabel>,
    kind: SuiteKind,
    cfg: &SuiteConfig,
) -> Result<SuiteReport> {
    let model = Model::build(tag, rep)?;
    run_suite(&model, kind, cfg)
}
