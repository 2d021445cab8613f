//! Floating-point verification of the differential identities at random
//! points of the adjoint orbit.
//!
//! All geometry is reduced to Lie-algebra data: tangent vectors are
//! brackets [X, μ], the Nijenhuis differential of the moment map is
//! evaluated as d_Nμ(X♯) = [X,μ] − [J([X,μ]), μ], and invariant
//! polynomials are traces over the chain's top subspaces. Orbit points
//! come from conjugating ρ_φ by exact exponentials of skew-Hermitian
//! matrices (eigendecomposition, not series). Sampling is seeded and
//! deterministic; trials fan out over a thread pool and reduce by max.

mod spectrum;
mod suites;

pub use spectrum::{nijenhuis_eigenvalues, spectrum_at, spectrum_report, SpectrumReport};
pub use suites::{
    all_suites, run_space_suite, run_suite, BreakdownEntry, SuiteConfig, SuiteKind, SuiteReport,
};

use crate::error::{Error, Result};
use crate::exact::{invert, rat_to_f64, Rat};
use crate::hermcat::{Space, SpaceTag};
use crate::minimality::{chain_minimality, grade_by_rho, is_phi_minimal};
use crate::repforge::{Algebra, JAction, RepLabel};
use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;
use num_traits::Zero;
use rand::Rng;
use std::collections::BTreeSet;

pub type LieVec = DVector<Complex64>;
pub type CMat = DMatrix<Complex64>;

/// Seeded formula corruptions for the mutation-sensitivity checks.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Default)]
pub enum Mutation {
    #[default]
    None,
    /// Drop the ½ factor in A = ½·pr[Jμ⊥, μ⊥].
    DropHalf,
    /// Flip the bracket sign in d_Nμ = dμ − [J(dμ), μ].
    FlipSign,
    /// Replace Λ_φ by 0 in the trace-polynomial recursion residual.
    ZeroLambda,
}

impl Mutation {
    pub fn parse(s: &str) -> Result<Mutation> {
        match s {
            "none" => Ok(Mutation::None),
            "drop-half" => Ok(Mutation::DropHalf),
            "flip-sign" => Ok(Mutation::FlipSign),
            "zero-lambda" => Ok(Mutation::ZeroLambda),
            other => Err(Error::Config(format!(
                "unknown mutation '{other}' (expected none|drop-half|flip-sign|zero-lambda)"
            ))),
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            Mutation::None => "none",
            Mutation::DropHalf => "drop-half",
            Mutation::FlipSign => "flip-sign",
            Mutation::ZeroLambda => "zero-lambda",
        }
    }
}

/// One verification level: a compatible subalgebra with the top subspace
/// of the associated grading.
pub struct Level {
    pub label: String,
    /// Slot membership of k_1 (torus always in).
    pub mask: Vec<bool>,
    /// Orthonormal basis of W_+ as columns.
    pub w_plus: CMat,
    pub roots: BTreeSet<usize>,
    /// Part of the nested Thimm chain (the k_φ extra level for
    /// Grassmannians is compatible but not nested).
    pub in_chain: bool,
}

/// Float model of a space with a φ-minimal matrix representation.
pub struct Model {
    pub tag: SpaceTag,
    pub rep_label: RepLabel,
    pub dim_k: usize,
    pub dim_rep: usize,
    pub space_rank: usize,
    pub slot_mats: Vec<CMat>,
    brackets: Vec<Vec<(u32, f64)>>,
    j_actions: Vec<JAction>,
    b0: DMatrix<f64>,
    expand_inv: DMatrix<f64>,
    pub rho_phi: LieVec,
    /// Λ_φ (purely imaginary).
    pub lambda_phi: Complex64,
    pub rho_sq: f64,
    pub p_roots: Vec<PRoot>,
    pub levels: Vec<Level>,
    /// Index of the k_φ level in `levels`.
    pub kphi: usize,
}

/// Slice-root data: the slots of x_α, y_α, the coroot direction i·h_α and
/// the constant c_j = −2/(α,α).
pub struct PRoot {
    pub x_slot: usize,
    pub y_slot: usize,
    pub ih: LieVec,
    pub c: f64,
}

fn c64(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

fn to_f64_vec(v: &[Rat]) -> Vec<f64> {
    v.iter().map(rat_to_f64).collect()
}

impl Model {
    /// Build the float model for a classical space and a φ-minimal
    /// representation (the default choice when `rep` is None).
    pub fn build(tag: SpaceTag, rep: Option<RepLabel>) -> Result<Model> {
        let space = Space::new(tag)?;
        let alg = Algebra::new(space)?;
        let rep_label = rep.unwrap_or(match tag {
            SpaceTag::BDI { .. } => RepLabel::Spin,
            _ => RepLabel::Fundamental,
        });
        Model::from_algebra(alg, rep_label)
    }

    pub fn from_algebra(alg: Algebra, rep_label: RepLabel) -> Result<Model> {
        let verdict = is_phi_minimal(&alg, alg.rep(rep_label)?)?;
        if !verdict.minimal {
            return Err(Error::Usage(format!(
                "{} {} is not phi-minimal; the geometric suites need a minimal representation",
                alg.space.tag, rep_label
            )));
        }
        let lambda = verdict.lambda.expect("minimal verdict carries lambda");
        let rep = alg.rep(rep_label)?;
        let dim_k = alg.layout.dim();
        let dim_rep = rep.dim;

        let slot_mats: Vec<CMat> = rep.slots.iter().map(|m| m.to_dense_c64()).collect();
        let mut brackets = vec![vec![]; dim_k * dim_k];
        for i in 0..dim_k {
            for j in 0..dim_k {
                brackets[i * dim_k + j] = alg.structure.brackets[i][j]
                    .iter()
                    .map(|(k, c)| (*k as u32, rat_to_f64(c)))
                    .collect();
            }
        }
        let j_actions: Vec<JAction> = (0..dim_k).map(|i| alg.layout.j_action(i)).collect();
        let mut b0 = DMatrix::<f64>::zeros(dim_k, dim_k);
        for i in 0..dim_k {
            for j in 0..dim_k {
                b0[(i, j)] = rat_to_f64(&alg.structure.b0[i][j]);
            }
        }
        // Trace Gram of the slots, inverted exactly then floated.
        let gram: Vec<Vec<Rat>> = (0..dim_k)
            .map(|i| {
                (0..dim_k)
                    .map(|j| {
                        let t = rep.slots[i].trace_product(&rep.slots[j]);
                        debug_assert!(t.im.is_zero());
                        t.re
                    })
                    .collect()
            })
            .collect();
        let ginv = invert(&gram)
            .ok_or_else(|| Error::Structural("trace Gram singular in float model".into()))?;
        let mut expand_inv = DMatrix::<f64>::zeros(dim_k, dim_k);
        for i in 0..dim_k {
            for j in 0..dim_k {
                expand_inv[(i, j)] = rat_to_f64(&ginv[i][j]);
            }
        }

        let rho_coeffs = alg.structure.torus_coeffs(&alg.space, &alg.space.omega);
        let mut rho_phi = LieVec::zeros(dim_k);
        for (s, c) in rho_coeffs.iter().enumerate() {
            rho_phi[s] = c64(rat_to_f64(c), 0.0);
        }
        let rho_sq = rat_to_f64(&alg.space.rho_sq);
        let lambda_phi = c64(0.0, rat_to_f64(&lambda));

        let p_roots: Vec<PRoot> = alg
            .space
            .p_phi
            .iter()
            .zip(&alg.space.c)
            .map(|(&p, c)| {
                let coeffs = alg.structure.coroot_coeffs(&alg.space, p);
                let mut ih = LieVec::zeros(dim_k);
                for (s, v) in to_f64_vec(&coeffs).iter().enumerate() {
                    ih[s] = c64(*v, 0.0);
                }
                PRoot {
                    x_slot: alg.layout.x_slot(p),
                    y_slot: alg.layout.y_slot(p),
                    ih,
                    c: rat_to_f64(c),
                }
            })
            .collect();

        // Verification levels: k_φ first, then the Thimm chain (deduped).
        let columns = |indices: &[usize]| -> CMat {
            let mut w = CMat::zeros(dim_rep, indices.len());
            for (col, &i) in indices.iter().enumerate() {
                let v = &rep.weights[i].vec;
                let mut norm_sq = 0.0;
                for c in v {
                    let z = c.to_c64();
                    norm_sq += z.norm_sqr();
                }
                let scale = 1.0 / norm_sq.sqrt();
                for (row, c) in v.iter().enumerate() {
                    w[(row, col)] = c.to_c64() * c64(scale, 0.0);
                }
            }
            w
        };
        let kphi_roots: BTreeSet<usize> = alg.space.compact_pos.iter().copied().collect();
        let grading = grade_by_rho(&alg, rep)?;
        let mut levels = vec![Level {
            label: "k_phi".into(),
            mask: alg.layout.mask(&kphi_roots),
            w_plus: columns(&grading.levels[0]),
            roots: kphi_roots.clone(),
            in_chain: false,
        }];
        let chain = alg.space.thimm_chain()?;
        let cm = chain_minimality(&alg, rep, &chain)?;
        if !cm.minimal {
            return Err(Error::Usage(format!(
                "representation is not minimal along the Thimm chain (level {:?})",
                cm.failing_level
            )));
        }
        for (level, data) in chain.levels.iter().zip(&cm.levels) {
            if level.roots == kphi_roots {
                // Same subalgebra as k_φ: keep one copy, but mark it
                // as a chain member with its chain label.
                levels[0].label = format!("k_phi={}", level.label);
                levels[0].in_chain = true;
                continue;
            }
            levels.push(Level {
                label: level.label.clone(),
                mask: alg.layout.mask(&level.roots),
                w_plus: columns(&data.v_plus),
                roots: level.roots.clone(),
                in_chain: true,
            });
        }

        Ok(Model {
            tag: alg.space.tag,
            rep_label,
            dim_k,
            dim_rep,
            space_rank: alg.space.rank,
            slot_mats,
            brackets,
            j_actions,
            b0,
            expand_inv,
            rho_phi,
            lambda_phi,
            rho_sq,
            p_roots,
            levels,
            kphi: 0,
        })
    }

    // ----- Lie algebra primitives on coefficient vectors -----

    pub fn bracket(&self, u: &LieVec, v: &LieVec) -> LieVec {
        let n = self.dim_k;
        let mut out = LieVec::zeros(n);
        for i in 0..n {
            let ui = u[i];
            if ui == Complex64::ZERO {
                continue;
            }
            let row = i * n;
            for j in 0..n {
                let vj = v[j];
                if vj == Complex64::ZERO {
                    continue;
                }
                for (k, c) in &self.brackets[row + j] {
                    out[*k as usize] += ui * vj * c64(*c, 0.0);
                }
            }
        }
        out
    }

    pub fn j_apply(&self, u: &LieVec) -> LieVec {
        let mut out = LieVec::zeros(self.dim_k);
        for i in 0..self.dim_k {
            if u[i] == Complex64::ZERO {
                continue;
            }
            if let JAction::Send { slot, sign } = self.j_actions[i] {
                out[slot] = u[i] * c64(sign as f64, 0.0);
            }
        }
        out
    }

    pub fn project(&self, u: &LieVec, mask: &[bool]) -> LieVec {
        let mut out = u.clone();
        for i in 0..self.dim_k {
            if !mask[i] {
                out[i] = Complex64::ZERO;
            }
        }
        out
    }

    pub fn perp(&self, u: &LieVec, mask: &[bool]) -> LieVec {
        let mut out = u.clone();
        for i in 0..self.dim_k {
            if mask[i] {
                out[i] = Complex64::ZERO;
            }
        }
        out
    }

    /// The normalized invariant form, complex-bilinear.
    pub fn b0_pair(&self, u: &LieVec, v: &LieVec) -> Complex64 {
        let mut acc = Complex64::ZERO;
        for i in 0..self.dim_k {
            if u[i] == Complex64::ZERO {
                continue;
            }
            for j in 0..self.dim_k {
                let b = self.b0[(i, j)];
                if b != 0.0 && v[j] != Complex64::ZERO {
                    acc += u[i] * v[j] * c64(b, 0.0);
                }
            }
        }
        acc
    }

    pub fn matrix(&self, u: &LieVec) -> CMat {
        let mut m = CMat::zeros(self.dim_rep, self.dim_rep);
        for i in 0..self.dim_k {
            if u[i] != Complex64::ZERO {
                m += &self.slot_mats[i] * u[i];
            }
        }
        m
    }

    /// Expand a representation matrix back to slot coefficients.
    pub fn expand(&self, m: &CMat) -> LieVec {
        let mut t = LieVec::zeros(self.dim_k);
        for i in 0..self.dim_k {
            t[i] = (&self.slot_mats[i] * m).trace();
        }
        let mut out = LieVec::zeros(self.dim_k);
        for i in 0..self.dim_k {
            let mut acc = Complex64::ZERO;
            for j in 0..self.dim_k {
                acc += c64(self.expand_inv[(i, j)], 0.0) * t[j];
            }
            out[i] = acc;
        }
        out
    }

    /// Unitary conjugator exp(R(x)) via Hermitian eigendecomposition of
    /// i·R(x). Returns the conjugating matrix with its backward error.
    pub fn exponential(&self, x: &LieVec) -> Result<(CMat, f64)> {
        let m = self.matrix(x);
        let h = &m * c64(0.0, 1.0);
        let se = nalgebra::SymmetricEigen::new(h.clone());
        let u = se.eigenvectors;
        let mut w = CMat::zeros(self.dim_rep, self.dim_rep);
        for k in 0..self.dim_rep {
            let phase = c64(0.0, -se.eigenvalues[k]).exp();
            for r in 0..self.dim_rep {
                for c in 0..self.dim_rep {
                    w[(r, c)] += u[(r, k)] * phase * u[(c, k)].conj();
                }
            }
        }
        // Backward error: reconstruction of H and unitarity of W.
        let mut recon = CMat::zeros(self.dim_rep, self.dim_rep);
        for k in 0..self.dim_rep {
            for r in 0..self.dim_rep {
                for c in 0..self.dim_rep {
                    recon[(r, c)] += u[(r, k)] * c64(se.eigenvalues[k], 0.0) * u[(c, k)].conj();
                }
            }
        }
        let err_h = max_abs(&(recon - h));
        let err_u = max_abs(&(&w * w.adjoint() - CMat::identity(self.dim_rep, self.dim_rep)));
        let backward = err_h.max(err_u);
        if backward > 1e-10 {
            return Err(Error::Numeric(format!(
                "matrix exponential backward error {backward:.3e} (condition report: dim {}, ‖x‖ {:.3e})",
                self.dim_rep,
                x.iter().map(|c| c.norm()).fold(0.0, f64::max)
            )));
        }
        Ok((w, backward))
    }

    /// Adjoint action of exp(x) as a map on coefficient vectors.
    pub fn adjoint_map(&self, w: &CMat, v: &LieVec) -> LieVec {
        self.expand(&(w * self.matrix(v) * w.adjoint()))
    }

    // ----- Samples -----

    pub fn random_lie(&self, rng: &mut impl Rng, mask: Option<&[bool]>) -> LieVec {
        let mut v = LieVec::zeros(self.dim_k);
        for i in 0..self.dim_k {
            if mask.is_none_or(|m| m[i]) {
                v[i] = c64(rng.random_range(-1.0..1.0), 0.0);
            }
        }
        v
    }

    /// μ = Ad_{exp x}(ρ_φ), with the reconstruction residual recorded.
    pub fn orbit_point(&self, x: &LieVec) -> Result<OrbitSample> {
        let (w, _) = self.exponential(x)?;
        let target = &w * self.matrix(&self.rho_phi) * w.adjoint();
        let mu = self.expand(&target);
        let recon = max_abs(&(self.matrix(&mu) - &target));
        if recon > 1e-10 {
            return Err(Error::Numeric(format!(
                "orbit point reconstruction residual {recon:.3e}"
            )));
        }
        Ok(OrbitSample {
            mu,
            slice_a: None,
            recon_residual: recon,
        })
    }

    pub fn random_orbit_point(&self, rng: &mut impl Rng) -> Result<OrbitSample> {
        self.orbit_point(&self.random_lie(rng, None))
    }

    /// Slice point μ = Ad_{exp(Σ a_j y_{α_j})}(ρ_φ).
    pub fn slice_point(&self, a: &[f64]) -> Result<OrbitSample> {
        let mut x = LieVec::zeros(self.dim_k);
        for (j, root) in self.p_roots.iter().enumerate() {
            x[root.y_slot] = c64(a[j], 0.0);
        }
        let mut sample = self.orbit_point(&x)?;
        sample.slice_a = Some(a.to_vec());
        Ok(sample)
    }

    pub fn random_slice_point(&self, rng: &mut impl Rng) -> Result<OrbitSample> {
        let a: Vec<f64> = (0..self.space_rank)
            .map(|_| rng.random_range(-std::f64::consts::PI..std::f64::consts::PI))
            .collect();
        self.slice_point(&a)
    }

    /// A probe with a nondegenerate tangent [X, μ]; the zero tangent is
    /// covered separately as a trivial check.
    pub fn nondegenerate_probe(
        &self,
        rng: &mut impl Rng,
        mu: &LieVec,
        mask: Option<&[bool]>,
    ) -> LieVec {
        for _ in 0..64 {
            let x = self.random_lie(rng, mask);
            let t = self.bracket(&x, mu);
            if t.iter().map(|c| c.norm()).fold(0.0, f64::max) > 1e-6 {
                return x;
            }
        }
        // Orbit dimension is positive for every space in scope, so a
        // degenerate streak this long indicates a broken model.
        panic!("could not sample a nondegenerate tangent probe");
    }

    // ----- Differential evaluators -----

    /// d_Nμ(X♯) = [X,μ] − [J([X,μ]), μ] (sign flipped under mutation).
    pub fn dn_mu(&self, mu: &LieVec, x: &LieVec, mutation: Mutation) -> LieVec {
        let t = self.bracket(x, mu);
        let jt = self.j_apply(&t);
        let corr = self.bracket(&jt, mu);
        let sign = if mutation == Mutation::FlipSign {
            1.0
        } else {
            -1.0
        };
        &t + &(corr * c64(sign, 0.0))
    }

    /// A_{k_1} = ½·pr_{k_1}[Jμ⊥, μ⊥] (half dropped under mutation).
    pub fn a_element(&self, mu: &LieVec, mask: &[bool], mutation: Mutation) -> LieVec {
        let perp = self.perp(mu, mask);
        let br = self.bracket(&self.j_apply(&perp), &perp);
        let half = if mutation == Mutation::DropHalf {
            1.0
        } else {
            0.5
        };
        self.project(&br, mask) * c64(half, 0.0)
    }

    /// Derivative of A along the tangent [X, μ], by the product rule.
    pub fn a_derivative(
        &self,
        mu: &LieVec,
        x: &LieVec,
        mask: &[bool],
        mutation: Mutation,
    ) -> LieVec {
        let perp = self.perp(mu, mask);
        let dperp = self.perp(&self.bracket(x, mu), mask);
        let term1 = self.bracket(&self.j_apply(&dperp), &perp);
        let term2 = self.bracket(&self.j_apply(&perp), &dperp);
        let half = if mutation == Mutation::DropHalf {
            1.0
        } else {
            0.5
        };
        self.project(&(term1 + term2), mask) * c64(half, 0.0)
    }

    /// Restriction of R(pr_{k_1} v) to the level's top subspace.
    pub fn restricted(&self, level: &Level, v: &LieVec) -> CMat {
        let pv = self.project(v, &level.mask);
        level.w_plus.adjoint() * self.matrix(&pv) * &level.w_plus
    }

    /// I_r = (i^r/r)·tr(M^r) on the restricted moment matrix.
    pub fn poly_value(&self, level: &Level, mu: &LieVec, r: u32) -> Complex64 {
        let m = self.restricted(level, mu);
        let mut p = m.clone();
        for _ in 1..r {
            p = &p * &m;
        }
        p.trace() * i_pow(r) / c64(r as f64, 0.0)
    }

    /// dI_r(X♯) = i^r·tr(M^{r−1}·R(pr δμ)) with δμ = [X, μ].
    pub fn poly_derivative(&self, level: &Level, mu: &LieVec, delta: &LieVec, r: u32) -> Complex64 {
        let m = self.restricted(level, mu);
        let mut p = CMat::identity(m.nrows(), m.ncols());
        for _ in 1..r {
            p = &p * &m;
        }
        let d = self.restricted(level, delta);
        (p * d).trace() * i_pow(r)
    }

    /// d_N I_r evaluated through d_Nμ directly.
    pub fn dn_poly_direct(
        &self,
        level: &Level,
        mu: &LieVec,
        x: &LieVec,
        r: u32,
        mutation: Mutation,
    ) -> Complex64 {
        let dn = self.dn_mu(mu, x, mutation);
        self.poly_derivative(level, mu, &dn, r)
    }

    /// d_N I_r through the A-route: dI_r − i^r·tr(M^{r−1}·R(δA)).
    pub fn dn_poly_via_a(
        &self,
        level: &Level,
        mu: &LieVec,
        x: &LieVec,
        r: u32,
        mutation: Mutation,
    ) -> Complex64 {
        let tangent = self.bracket(x, mu);
        let dp = self.poly_derivative(level, mu, &tangent, r);
        let da = self.a_derivative(mu, x, &level.mask, mutation);
        let m = self.restricted(level, mu);
        let mut p = CMat::identity(m.nrows(), m.ncols());
        for _ in 1..r {
            p = &p * &m;
        }
        let da_mat = level.w_plus.adjoint() * self.matrix(&da) * &level.w_plus;
        dp - (p * da_mat).trace() * i_pow(r)
    }
}

/// An orbit sample with its provenance.
pub struct OrbitSample {
    pub mu: LieVec,
    pub slice_a: Option<Vec<f64>>,
    pub recon_residual: f64,
}

pub fn max_abs(m: &CMat) -> f64 {
    m.iter().map(|c| c.norm()).fold(0.0, f64::max)
}

pub fn vec_max(v: &LieVec) -> f64 {
    v.iter().map(|c| c.norm()).fold(0.0, f64::max)
}

fn i_pow(r: u32) -> Complex64 {
    match r % 4 {
        0 => c64(1.0, 0.0),
        1 => c64(0.0, 1.0),
        2 => c64(-1.0, 0.0),
        _ => c64(0.0, -1.0),
    }
}

/// Residual normalized by operand magnitude.
pub fn rel(diff: f64, scale: f64) -> f64 {
    diff / scale.max(1.0)
}
