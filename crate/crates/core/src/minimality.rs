//! φ-gradings of representations, minimality verdicts, chain minimality,
//! and the exhaustive E6/E7 nonexistence search.
//!
//! Gradings are computed exactly from the weight data and certified
//! against the matrices; the exceptional search runs over dominant labels
//! inside bounds that the scanner itself certifies.

use crate::error::{Error, Result};
use crate::exact::{nullspace, CRat, Rat};
use crate::hermcat::{Space, SpaceTag, ThimmChain};
use crate::repforge::{Algebra, MatrixRep};
use crate::rootsys::{DominantLabels, RatVec};
use num_traits::{One, Signed, Zero};
use std::collections::BTreeSet;

/// Exact eigenspace decomposition of a torus element i·ω on a subset of
/// the weight basis. Level ℓ counts steps of size one down from the top
/// value of (λ, ω).
pub struct PhiGrading {
    /// levels[ℓ] = weight-vector indices with (λ, ω) = top − ℓ.
    pub levels: Vec<Vec<usize>>,
    /// Imaginary part of the top eigenvalue: ρ acts on level ℓ as i·(top − ℓ).
    pub top: Rat,
}

/// Grade `subset` (or the whole weight basis) of `rep` by the torus
/// element with pairing vector `omega`. The eigenvector property is
/// verified exactly on every basis vector.
pub fn grade_by_omega(
    alg: &Algebra,
    rep: &MatrixRep,
    omega: &RatVec,
    subset: Option<&[usize]>,
) -> Result<PhiGrading> {
    let indices: Vec<usize> = match subset {
        Some(s) => s.to_vec(),
        None => (0..rep.weights.len()).collect(),
    };
    let torus_coeffs = alg.structure.torus_coeffs(&alg.space, omega);
    let mat = rep.torus_matrix(&torus_coeffs);
    let mut values: Vec<(Rat, usize)> = vec![];
    for &i in &indices {
        let wv = &rep.weights[i];
        let val = alg.space.system.ip(&wv.weight, omega);
        // Exact eigenvector certification.
        let got = mat.apply(&wv.vec);
        let want: Vec<CRat> = wv
            .vec
            .iter()
            .map(|c| c * &CRat::new(Rat::zero(), val.clone()))
            .collect();
        if got != want {
            return Err(Error::Structural(
                "torus action failed to diagonalize on the weight basis".into(),
            ));
        }
        values.push((val, i));
    }
    let top = values
        .iter()
        .map(|(v, _)| v.clone())
        .max()
        .ok_or_else(|| Error::Usage("empty weight subset".into()))?;
    let mut levels: Vec<Vec<usize>> = vec![];
    for (v, i) in values {
        let step = &top - &v;
        if !step.denom().is_one() || step.is_negative() {
            return Err(Error::Structural(format!(
                "grading step {step} is not a nonnegative integer"
            )));
        }
        let l = step.to_integer();
        let l: usize = l
            .try_into()
            .map_err(|_| Error::Structural("grading overflow".into()))?;
        if levels.len() <= l {
            levels.resize(l + 1, vec![]);
        }
        levels[l].push(i);
    }
    if levels.iter().any(|lv| lv.is_empty()) {
        return Err(Error::Structural(
            "grading has an empty intermediate level".into(),
        ));
    }
    Ok(PhiGrading { levels, top })
}

/// Grade by the space's own ρ_φ.
pub fn grade_by_rho(alg: &Algebra, rep: &MatrixRep) -> Result<PhiGrading> {
    grade_by_omega(alg, rep, &alg.space.omega, None)
}

#[derive(Clone, Debug, PartialEq)]
pub enum Witness {
    /// More than two distinct ρ_φ eigenvalues (imaginary parts listed).
    EigenvalueLadder(Vec<Rat>),
    /// Top level splits into this many irreducible summands.
    ReducibleTop(usize),
    /// The zero weight: vacuous grading with no lower level.
    TrivialRep,
}

#[derive(Clone, Debug)]
pub struct MinimalityVerdict {
    pub minimal: bool,
    /// Λ_φ = i·lambda for two-level gradings.
    pub lambda: Option<Rat>,
    /// Dimensions of V_+ and V_−.
    pub dims: (usize, usize),
    pub witness: Option<Witness>,
    /// True when the verdict was computed on the irreducible summand
    /// containing the highest weight (reducible spin spaces).
    pub on_summand: bool,
    /// For reducible spaces: how many summands the whole-space top level
    /// splits into, reported alongside the summand verdict.
    pub whole_space_top_summands: Option<usize>,
}

/// Number of vectors in the span of `subset` killed by every raising
/// operator e_β, β ranging over `raising_roots` (positive indices).
fn singular_vector_count(
    alg: &Algebra,
    rep: &MatrixRep,
    subset: &[usize],
    raising_roots: &BTreeSet<usize>,
) -> Result<usize> {
    let basis: Vec<&Vec<CRat>> = subset.iter().map(|&i| &rep.weights[i].vec).collect();
    let norms: Vec<CRat> = basis
        .iter()
        .map(|b| {
            b.iter()
                .fold(CRat::zero(), |acc, c| acc + c.conj() * c.clone())
        })
        .collect();
    let coords = |u: &[CRat]| -> Result<Vec<CRat>> {
        let c: Vec<CRat> = basis
            .iter()
            .zip(&norms)
            .map(|(b, n)| {
                let dot = b
                    .iter()
                    .zip(u)
                    .fold(CRat::zero(), |acc, (bi, ui)| acc + bi.conj() * ui.clone());
                dot * n.inv()
            })
            .collect();
        // The image must stay inside the span.
        let mut rec = vec![CRat::zero(); u.len()];
        for (ci, b) in c.iter().zip(&basis) {
            for (r, bi) in rec.iter_mut().zip(b.iter()) {
                *r += ci * bi;
            }
        }
        if rec != u {
            return Err(Error::Structural(
                "raising operator left the level span".into(),
            ));
        }
        Ok(c)
    };
    let mut stacked: Vec<Vec<CRat>> = vec![];
    for &p in raising_roots {
        let e = rep.e_plus(&alg.layout, p);
        // Rows of the operator in the subset coordinates.
        let mut op_cols: Vec<Vec<CRat>> = vec![];
        for b in &basis {
            op_cols.push(coords(&e.apply(b))?);
        }
        for row in 0..basis.len() {
            stacked.push(
                (0..basis.len())
                    .map(|col| op_cols[col][row].clone())
                    .collect(),
            );
        }
    }
    if stacked.is_empty() {
        return Ok(basis.len());
    }
    Ok(nullspace(&stacked).len())
}

/// Decide φ-minimality of a representation: exactly two grading levels
/// with irreducible top. The zero representation and vacuous gradings are
/// classified as not minimal, with the trivial witness.
pub fn is_phi_minimal(alg: &Algebra, rep: &MatrixRep) -> Result<MinimalityVerdict> {
    let subset: Option<Vec<usize>> = rep.hw_summand.clone();
    let on_summand = subset.is_some();
    let compact: BTreeSet<usize> = alg.space.compact_pos.iter().copied().collect();
    // The whole-space verdict is noted alongside the summand verdict.
    let whole_space_top_summands = if on_summand {
        let whole = grade_by_omega(alg, rep, &alg.space.omega, None)?;
        Some(singular_vector_count(alg, rep, &whole.levels[0], &compact)?)
    } else {
        None
    };
    let grading = grade_by_omega(alg, rep, &alg.space.omega, subset.as_deref())?;
    if grading.levels.len() == 1 {
        return Ok(MinimalityVerdict {
            minimal: false,
            lambda: Some(grading.top),
            dims: (grading.levels[0].len(), 0),
            witness: Some(Witness::TrivialRep),
            on_summand,
            whole_space_top_summands,
        });
    }
    if grading.levels.len() > 2 {
        let ladder: Vec<Rat> = (0..grading.levels.len())
            .map(|l| &grading.top - &crate::exact::rat_int(l as i64))
            .collect();
        return Ok(MinimalityVerdict {
            minimal: false,
            lambda: None,
            dims: (
                grading.levels[0].len(),
                grading.levels[1..].iter().map(|v| v.len()).sum(),
            ),
            witness: Some(Witness::EigenvalueLadder(ladder)),
            on_summand,
            whole_space_top_summands,
        });
    }
    let singulars = singular_vector_count(alg, rep, &grading.levels[0], &compact)?;
    if singulars != 1 {
        return Ok(MinimalityVerdict {
            minimal: false,
            lambda: Some(grading.top.clone()),
            dims: (grading.levels[0].len(), grading.levels[1].len()),
            witness: Some(Witness::ReducibleTop(singulars)),
            on_summand,
            whole_space_top_summands,
        });
    }
    // Sanity: the quadratic relation holds for R(ρ_φ) itself,
    // (R − Λ_φ)(R − Λ_φ + i) = 0 exactly.
    let rho = alg.torus_element(rep, &alg.space.omega);
    let lam = CRat::new(Rat::zero(), grading.top.clone());
    let dim = rep.dim;
    let shift1 = rho.sub(&crate::exact::SparseMat::identity(dim).scale(&lam));
    let shift2 = shift1.add(&crate::exact::SparseMat::identity(dim).scale(&CRat::i()));
    let prod = shift1.mul(&shift2);
    if on_summand {
        // Only the summand is asserted; check on its basis vectors.
        for &i in subset.as_ref().unwrap() {
            if !prod.apply(&rep.weights[i].vec).iter().all(|c| c.is_zero()) {
                return Err(Error::Structural("quadratic sanity check failed".into()));
            }
        }
    } else if !prod.is_zero() {
        return Err(Error::Structural("quadratic sanity check failed".into()));
    }
    Ok(MinimalityVerdict {
        minimal: true,
        lambda: Some(grading.top),
        dims: (grading.levels[0].len(), grading.levels[1].len()),
        witness: None,
        on_summand,
        whole_space_top_summands,
    })
}

/// Per-level data of a chain-minimality computation.
pub struct ChainLevelData {
    pub label: String,
    /// Weight indices spanning W^i_+.
    pub v_plus: Vec<usize>,
    pub two_level: bool,
    /// (λ, ω_j) on W^i_+ for each previous step j ≤ i (checked constant).
    pub scalars: Vec<Rat>,
    /// Irreducible summands of V^i_+ under the level's root subset.
    pub singular_vectors: usize,
}

pub struct ChainMinimality {
    pub levels: Vec<ChainLevelData>,
    /// Every step graded into exactly two levels.
    pub minimal: bool,
    pub failing_level: Option<usize>,
    /// Every top level is irreducible; false for the wholesale even
    /// spinor spaces, whose tops split into half-spinor summands.
    pub fully_irreducible: bool,
}

pub fn chain_minimality(
    alg: &Algebra,
    rep: &MatrixRep,
    chain: &ThimmChain,
) -> Result<ChainMinimality> {
    let mut current: Vec<usize> = (0..rep.weights.len()).collect();
    let mut omegas: Vec<RatVec> = vec![];
    let mut levels = vec![];
    let mut minimal = true;
    let mut failing = None;
    let mut fully_irreducible = true;
    for (li, level) in chain.levels.iter().enumerate() {
        let grading = grade_by_omega(alg, rep, &level.omega, Some(&current))?;
        let two_level = grading.levels.len() == 2;
        if !two_level && minimal {
            minimal = false;
            failing = Some(li);
        }
        let v_plus = grading.levels[0].clone();
        omegas.push(level.omega.clone());
        // Constant scalars of the previous central elements on W^i_+.
        let mut scalars = vec![];
        for om in &omegas {
            let vals: BTreeSet<Rat> = v_plus
                .iter()
                .map(|&i| alg.space.system.ip(&rep.weights[i].weight, om))
                .collect();
            if vals.len() != 1 {
                return Err(Error::Structural(
                    "central element not scalar on a chain top level".into(),
                ));
            }
            scalars.push(vals.into_iter().next().unwrap());
        }
        let singulars = singular_vector_count(alg, rep, &v_plus, &level.roots)?;
        if singulars != 1 {
            fully_irreducible = false;
        }
        levels.push(ChainLevelData {
            label: level.label.clone(),
            v_plus: v_plus.clone(),
            two_level,
            scalars,
            singular_vectors: singulars,
        });
        current = v_plus;
    }
    Ok(ChainMinimality {
        levels,
        minimal,
        failing_level: failing,
        fully_irreducible,
    })
}

/// One surviving dominant weight of the first-order condition.
#[derive(Clone, Debug)]
pub struct Survivor {
    pub labels: Vec<u64>,
    pub weight: RatVec,
    pub trivial: bool,
    /// Orthogonal pair (α, β) certifying a second lowering step
    /// (positive-root indices); None for the trivial weight.
    pub witness: Option<(usize, usize)>,
}

pub struct ScanOutcome {
    pub survivors: Vec<Survivor>,
    /// Certified per-label bounds used by the enumeration.
    pub bounds: Vec<u64>,
}

/// Exhaustive scan of dominant weights with (Λ, α) ∈ {0, 1} for every
/// noncompact positive root. Exceptional spaces only. The scanner
/// certifies that every label is bounded before enumerating; `margin`
/// widens the box (used to demonstrate completeness).
pub fn weight_condition_scan_with_margin(space: &Space, margin: u64) -> Result<ScanOutcome> {
    if space.tag.is_classical() {
        return Err(Error::Usage(format!(
            "scan is defined for the exceptional spaces; {} has φ-minimal representations \
             (see the minimality checks for classical families)",
            space.tag
        )));
    }
    if space.noncompact_pos.is_empty() {
        return Err(Error::Usage(
            "scan needs a nonempty noncompact root set".into(),
        ));
    }
    let sys = &space.system;
    let r = sys.rank;
    // Fundamental weights.
    let fundamentals: Vec<RatVec> = (0..r)
        .map(|i| {
            let mut labels = vec![0u64; r];
            labels[i] = 1;
            sys.weight_from_labels(&DominantLabels(labels))
        })
        .collect::<Result<_>>()?;
    // Bound certification: every label must appear with a positive
    // coefficient in some noncompact pairing.
    let mut bounds = vec![];
    for f in &fundamentals {
        let mut best: Option<Rat> = None;
        for &a in &space.noncompact_pos {
            let c = sys.ip(f, &sys.positive[a]);
            if c.is_negative() {
                return Err(Error::Structural(
                    "fundamental weight pairs negatively with a positive root".into(),
                ));
            }
            if !c.is_zero() && best.as_ref().is_none_or(|b| c > *b) {
                best = Some(c);
            }
        }
        let beta = best.ok_or_else(|| {
            Error::Structural("unbounded label: no noncompact pairing is positive".into())
        })?;
        // N·β ≤ 1 ⇒ N ≤ ⌊1/β⌋.
        let inv = beta.recip();
        let bound: u64 = (inv.numer() / inv.denom())
            .try_into()
            .map_err(|_| Error::Structural("bound overflow".into()))?;
        bounds.push(bound + margin);
    }
    // Odometer enumeration over the certified box.
    let mut survivors = vec![];
    let mut labels = vec![0u64; r];
    'outer: loop {
        let weight = {
            let mut w = RatVec::zeros(sys.ambient);
            for (i, &n) in labels.iter().enumerate() {
                if n > 0 {
                    w = w.add(&fundamentals[i].scale(&crate::exact::rat_int(n as i64)));
                }
            }
            w
        };
        let ok = space.noncompact_pos.iter().all(|&a| {
            let v = sys.ip(&weight, &sys.positive[a]);
            v.is_zero() || v.is_one()
        });
        if ok {
            let trivial = weight.is_zero();
            let witness = if trivial {
                None
            } else {
                second_order_witness(space, &weight)
            };
            survivors.push(Survivor {
                labels: labels.clone(),
                weight,
                trivial,
                witness,
            });
        }
        // Advance the odometer.
        for i in 0..r {
            if labels[i] < bounds[i] {
                labels[i] += 1;
                continue 'outer;
            }
            labels[i] = 0;
        }
        break;
    }
    Ok(ScanOutcome { survivors, bounds })
}

pub fn weight_condition_scan(space: &Space) -> Result<ScanOutcome> {
    weight_condition_scan_with_margin(space, 0)
}

/// Search for noncompact positive roots α, β with (Λ,α) = (Λ,β) = 1 and
/// (α,β) = 0, certifying that a second lowering step survives. Exhaustive
/// over ordered pairs in lexicographic order.
pub fn second_order_witness(space: &Space, weight: &RatVec) -> Option<(usize, usize)> {
    let sys = &space.system;
    let hits: Vec<usize> = space
        .noncompact_pos
        .iter()
        .copied()
        .filter(|&a| sys.ip(weight, &sys.positive[a]).is_one())
        .collect();
    for (i, &a) in hits.iter().enumerate() {
        for &b in &hits[i + 1..] {
            if sys.ip(&sys.positive[a], &sys.positive[b]).is_zero() {
                return Some((a, b));
            }
        }
    }
    None
}

/// Machine-checkable transcript of the nonexistence argument for an
/// exceptional space: the exhaustive first-order scan plus a second-order
/// witness for every nontrivial survivor.
pub struct NogoCertificate {
    pub space: SpaceTag,
    pub outcome: ScanOutcome,
    pub verdict: &'static str,
}

pub fn nogo_report(space: &Space) -> Result<NogoCertificate> {
    let outcome = weight_condition_scan(space)?;
    for s in &outcome.survivors {
        if !s.trivial && s.witness.is_none() {
            return Err(Error::Structural(format!(
                "survivor {:?} lacks a second-order witness; nonexistence unproved",
                s.labels
            )));
        }
    }
    Ok(NogoCertificate {
        space: space.tag,
        outcome,
        verdict: "no phi-minimal representations exist",
    })
}
