//! Concrete matrix representations of the classical compact algebras with
//! exact Gaussian-rational entries.
//!
//! The compact form k is spanned by slots: first the torus generators
//! i·h_{α_s} (one per simple root, Figure order), then per positive root α
//! (lexicographic order) the pair x_α = e_α − e_{−α}, y_α = i(e_α + e_{−α}),
//! with root vectors normalized so that [e_α, e_{−α}] is the canonical
//! coroot. Structure constants are extracted once from the fundamental
//! representation and shared by every other representation of the same
//! presentation.

mod classical;
mod spin;

use crate::error::{Error, Result};
use crate::exact::{invert, rat, rat_string, CRat, Rat, SparseMat};
use crate::hermcat::{Space, SpaceTag};
use crate::rootsys::RatVec;
use num_traits::{One, Zero};
use std::collections::BTreeSet;

pub use spin::gamma_matrices;

/// Identity of one basis slot of the compact form.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Slot {
    /// i·h_{α_s} for the s-th simple root.
    Torus(usize),
    /// x_α = e_α − e_{−α} for the p-th positive root.
    X(usize),
    /// y_α = i(e_α + e_{−α}) for the p-th positive root.
    Y(usize),
}

/// Effect of the complex structure J on one slot.
#[derive(Clone, Copy, Debug)]
pub enum JAction {
    Kill,
    /// J maps this slot to `slot` with the given sign.
    Send {
        slot: usize,
        sign: i8,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum RepLabel {
    Fundamental,
    Spin,
}

impl std::fmt::Display for RepLabel {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            RepLabel::Fundamental => write!(f, "fundamental"),
            RepLabel::Spin => write!(f, "spin"),
        }
    }
}

#[derive(Clone, Debug)]
pub struct WeightVector {
    pub weight: RatVec,
    pub vec: Vec<CRat>,
}

pub struct MatrixRep {
    pub label: RepLabel,
    pub dim: usize,
    /// One anti-Hermitian matrix per slot.
    pub slots: Vec<SparseMat>,
    /// Weight-space basis of ℂ^dim (orthogonal vectors).
    pub weights: Vec<WeightVector>,
    /// For reducible spin spaces: indices of the weight vectors spanning
    /// the irreducible summand containing the highest weight.
    pub hw_summand: Option<Vec<usize>>,
}

impl MatrixRep {
    /// Root vector e_α = (x_α − i·y_α)/2 for the p-th positive root.
    pub fn e_plus(&self, layout: &SlotLayout, p: usize) -> SparseMat {
        let x = &self.slots[layout.x_slot(p)];
        let y = &self.slots[layout.y_slot(p)];
        x.sub(&y.scale(&CRat::i()))
            .scale(&CRat::new(rat(1, 2), Rat::zero()))
    }

    /// Root vector e_{−α} = −(x_α + i·y_α)/2.
    pub fn e_minus(&self, layout: &SlotLayout, p: usize) -> SparseMat {
        let x = &self.slots[layout.x_slot(p)];
        let y = &self.slots[layout.y_slot(p)];
        x.add(&y.scale(&CRat::i()))
            .scale(&CRat::new(rat(-1, 2), Rat::zero()))
    }

    /// Matrix of a real combination of torus slots.
    pub fn torus_matrix(&self, coeffs: &[Rat]) -> SparseMat {
        let mut m = SparseMat::zero(self.dim);
        for (s, c) in coeffs.iter().enumerate() {
            if !c.is_zero() {
                m = m.add(&self.slots[s].scale(&CRat::from_rat(c.clone())));
            }
        }
        m
    }
}

/// Slot bookkeeping shared by the exact and floating layers.
#[derive(Clone, Debug)]
pub struct SlotLayout {
    pub rank: usize,
    pub positives: usize,
}

impl SlotLayout {
    pub fn dim(&self) -> usize {
        self.rank + 2 * self.positives
    }

    pub fn x_slot(&self, p: usize) -> usize {
        self.rank + 2 * p
    }

    pub fn y_slot(&self, p: usize) -> usize {
        self.rank + 2 * p + 1
    }

    pub fn slot(&self, i: usize) -> Slot {
        if i < self.rank {
            Slot::Torus(i)
        } else if (i - self.rank) % 2 == 0 {
            Slot::X((i - self.rank) / 2)
        } else {
            Slot::Y((i - self.rank) / 2)
        }
    }

    /// J(torus) = 0, J(x_α) = y_α, J(y_α) = −x_α for positive α.
    pub fn j_action(&self, i: usize) -> JAction {
        match self.slot(i) {
            Slot::Torus(_) => JAction::Kill,
            Slot::X(p) => JAction::Send {
                slot: self.y_slot(p),
                sign: 1,
            },
            Slot::Y(p) => JAction::Send {
                slot: self.x_slot(p),
                sign: -1,
            },
        }
    }

    /// Slot mask of a root-subset subalgebra (torus always included).
    pub fn mask(&self, roots: &BTreeSet<usize>) -> Vec<bool> {
        (0..self.dim())
            .map(|i| match self.slot(i) {
                Slot::Torus(_) => true,
                Slot::X(p) | Slot::Y(p) => roots.contains(&p),
            })
            .collect()
    }
}

/// Structure constants and invariant forms on the slot basis.
pub struct Structure {
    /// brackets[i][j] = Σ (k, c): [slot_i, slot_j] = Σ c·slot_k, c exact real.
    pub brackets: Vec<Vec<Vec<(usize, Rat)>>>,
    /// Normalized invariant form (long roots squared-length 2).
    pub b0: Vec<Vec<Rat>>,
    /// Killing form computed via ad from the structure constants.
    pub killing: Vec<Vec<Rat>>,
    /// Measured constant with killing = ratio · b0.
    pub killing_to_b0: Rat,
    /// Inverse of M_{ts} = ⟨α_t, α_s∨⟩, for torus coordinate solves.
    cartan_inv: Vec<Vec<Rat>>,
}

impl Structure {
    /// Coefficients over the torus slots of the element with
    /// β(T) = i(β, ω) for all roots β.
    pub fn torus_coeffs(&self, space: &Space, omega: &RatVec) -> Vec<Rat> {
        let r = space.system.rank;
        let rhs: Vec<Rat> = (0..r)
            .map(|t| space.system.ip(space.system.simple_root(t), omega))
            .collect();
        (0..r)
            .map(|s| (0..r).map(|t| &self.cartan_inv[s][t] * &rhs[t]).sum())
            .collect()
    }

    /// Coefficients of i·h_α over the torus slots (coroot expansion).
    pub fn coroot_coeffs(&self, space: &Space, pos_index: usize) -> Vec<Rat> {
        let a = &space.system.positive[pos_index];
        let dual = a.scale(&(rat(2, 1) / space.system.ip(a, a)));
        self.torus_coeffs(space, &dual)
    }

    /// Bracket of exact coefficient vectors.
    pub fn bracket(&self, u: &[Rat], v: &[Rat]) -> Vec<Rat> {
        let mut out = vec![Rat::zero(); u.len()];
        for (i, a) in u.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in v.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                for (k, c) in &self.brackets[i][j] {
                    out[*k] += a * b * c;
                }
            }
        }
        out
    }
}

/// Exact Lie-algebra element as real coefficients over the slots.
#[derive(Clone, Debug, PartialEq)]
pub struct LieElement(pub Vec<Rat>);

impl LieElement {
    pub fn zeros(dim: usize) -> Self {
        LieElement(vec![Rat::zero(); dim])
    }

    pub fn bracket(&self, o: &LieElement, s: &Structure) -> LieElement {
        LieElement(s.bracket(&self.0, &o.0))
    }

    pub fn j_apply(&self, layout: &SlotLayout) -> LieElement {
        let mut out = vec![Rat::zero(); self.0.len()];
        for (i, c) in self.0.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if let JAction::Send { slot, sign } = layout.j_action(i) {
                out[slot] = if sign > 0 { c.clone() } else { -c.clone() };
            }
        }
        LieElement(out)
    }

    pub fn project(&self, mask: &[bool]) -> LieElement {
        LieElement(
            self.0
                .iter()
                .zip(mask)
                .map(|(c, keep)| if *keep { c.clone() } else { Rat::zero() })
                .collect(),
        )
    }

    pub fn add(&self, o: &LieElement) -> LieElement {
        LieElement(self.0.iter().zip(&o.0).map(|(a, b)| a + b).collect())
    }
}

/// Ratio certificates for the chosen root-vector normalization.
pub struct NormalizationCertificate {
    /// Per simple root: (index, trace-form value, Killing value, ratio).
    pub per_simple: Vec<(usize, Rat, Rat, Rat)>,
    /// tr-form = index · b0 on this representation.
    pub dynkin_index: Rat,
}

/// A space together with its concrete matrix realizations.
pub struct Algebra {
    pub space: Space,
    pub layout: SlotLayout,
    pub fundamental: MatrixRep,
    pub spin: Option<MatrixRep>,
    pub structure: Structure,
}

impl Algebra {
    pub fn new(space: Space) -> Result<Algebra> {
        let layout = SlotLayout {
            rank: space.system.rank,
            positives: space.system.positive_count(),
        };
        let fundamental = match space.tag {
            SpaceTag::AIII { n, .. } => classical::su_fundamental(&space, n)?,
            SpaceTag::BDI { n } => classical::so_fundamental_sigma(&space, n + 2)?,
            SpaceTag::DIII { n } => classical::so_fundamental_split(&space, n)?,
            SpaceTag::CI { n } => classical::sp_fundamental(&space, n)?,
            SpaceTag::EIII | SpaceTag::EVII => {
                return Err(Error::Usage(format!(
                    "no matrix representation is constructed for {}",
                    space.tag
                )))
            }
        };
        let spin = match space.tag {
            SpaceTag::BDI { n } => Some(spin::spin_rep(&space, &layout, &fundamental, n + 2)?),
            _ => None,
        };
        let structure = Structure::from_fundamental(&space, &layout, &fundamental)?;
        let alg = Algebra {
            space,
            layout,
            fundamental,
            spin,
            structure,
        };
        alg.check_normalization()?;
        Ok(alg)
    }

    pub fn rep(&self, label: RepLabel) -> Result<&MatrixRep> {
        match label {
            RepLabel::Fundamental => Ok(&self.fundamental),
            RepLabel::Spin => self.spin.as_ref().ok_or_else(|| {
                Error::Usage(format!("{} has no spin construction here", self.space.tag))
            }),
        }
    }

    /// Matrix of ρ_φ (or any i·ω torus element) in a representation.
    pub fn torus_element(&self, rep: &MatrixRep, omega: &RatVec) -> SparseMat {
        let coeffs = self.structure.torus_coeffs(&self.space, omega);
        rep.torus_matrix(&coeffs)
    }

    /// [e_α, e_{−α}] must equal the canonical coroot for every positive
    /// root; this is the exact content of the normalization convention.
    fn check_normalization(&self) -> Result<()> {
        for rep in self.reps() {
            for p in 0..self.layout.positives {
                let e = rep.e_plus(&self.layout, p);
                let f = rep.e_minus(&self.layout, p);
                let h = e.commutator(&f);
                let coeffs = self.structure.coroot_coeffs(&self.space, p);
                // i·h_α slots scaled by −i give h_α.
                let expected = rep
                    .torus_matrix(&coeffs)
                    .scale(&CRat::new(Rat::zero(), -Rat::one()));
                if h != expected {
                    return Err(Error::Structural(format!(
                        "root vector normalization broken at positive root {} ({})",
                        self.space.system.positive[p], rep.label
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn reps(&self) -> Vec<&MatrixRep> {
        let mut v = vec![&self.fundamental];
        if let Some(s) = &self.spin {
            v.push(s);
        }
        v
    }

    /// Trace-form/Killing ratios per simple root plus the Dynkin index.
    pub fn normalization_certificate(&self, rep: &MatrixRep) -> Result<NormalizationCertificate> {
        let mut per_simple = vec![];
        let mut index: Option<Rat> = None;
        for s in 0..self.space.system.rank {
            let p = self.space.system.simple[s];
            let e = rep.e_plus(&self.layout, p);
            let f = rep.e_minus(&self.layout, p);
            let tr = e.trace_product(&f);
            if !tr.im.is_zero() {
                return Err(Error::Structural("complex trace pairing".into()));
            }
            // Killing(e_α, e_{−α}) = −½·Killing(x_α, x_α) on the slot basis.
            let xs = self.layout.x_slot(p);
            let kil = -self.structure.killing[xs][xs].clone() / rat(2, 1);
            let ratio = tr.re.clone() / kil.clone();
            per_simple.push((s, tr.re.clone(), kil.clone(), ratio));
            // tr-form vs b0: b0(e,f) = 2/(α,α)
            let a = self.space.system.simple_root(s);
            let b0_val = rat(2, 1) / self.space.system.ip(a, a);
            let idx = tr.re.clone() / b0_val;
            match &index {
                None => index = Some(idx),
                Some(prev) if *prev == idx => {}
                _ => {
                    return Err(Error::Structural(
                        "trace form not proportional to normalized form".into(),
                    ))
                }
            }
        }
        Ok(NormalizationCertificate {
            per_simple,
            dynkin_index: index.unwrap(),
        })
    }
}

impl Structure {
    pub fn from_fundamental(
        space: &Space,
        layout: &SlotLayout,
        rep: &MatrixRep,
    ) -> Result<Structure> {
        let dim = layout.dim();
        let sys = &space.system;
        let r = sys.rank;

        // Cartan pairing matrix M_{ts} = ⟨α_t, α_s∨⟩ and its inverse.
        let m: Vec<Vec<Rat>> = (0..r)
            .map(|t| {
                (0..r)
                    .map(|s| sys.coroot_pairing(sys.simple_root(t), sys.simple_root(s)))
                    .collect()
            })
            .collect();
        let cartan_inv =
            invert(&m).ok_or_else(|| Error::Structural("Cartan pairing matrix singular".into()))?;

        // b0 on slots from root data.
        let mut b0 = vec![vec![Rat::zero(); dim]; dim];
        for s in 0..r {
            for t in 0..r {
                let a = sys.simple_root(s);
                let b = sys.simple_root(t);
                b0[s][t] = -rat(4, 1) * sys.ip(a, b) / (sys.ip(a, a) * sys.ip(b, b));
            }
        }
        for p in 0..layout.positives {
            let a = &sys.positive[p];
            let v = -rat(4, 1) / sys.ip(a, a);
            b0[layout.x_slot(p)][layout.x_slot(p)] = v.clone();
            b0[layout.y_slot(p)][layout.y_slot(p)] = v;
        }

        // Trace Gram of the slot matrices: torus block plus diagonal.
        let torus_gram: Vec<Vec<Rat>> = (0..r)
            .map(|i| {
                (0..r)
                    .map(|j| {
                        let t = rep.slots[i].trace_product(&rep.slots[j]);
                        debug_assert!(t.im.is_zero());
                        t.re
                    })
                    .collect()
            })
            .collect();
        let torus_gram_inv = invert(&torus_gram)
            .ok_or_else(|| Error::Structural("torus trace Gram singular".into()))?;
        let slot_norms: Vec<Rat> = (layout.rank..dim)
            .map(|i| {
                let t = rep.slots[i].trace_product(&rep.slots[i]);
                debug_assert!(t.im.is_zero());
                t.re
            })
            .collect();

        // Expand a matrix over the slots; exact remainder must vanish.
        let expand = |m: &SparseMat| -> Result<Vec<Rat>> {
            let mut coeffs = vec![Rat::zero(); dim];
            let rhs: Vec<Rat> = (0..r)
                .map(|i| {
                    let t = rep.slots[i].trace_product(m);
                    if t.im.is_zero() {
                        Ok(t.re)
                    } else {
                        Err(Error::Structural("complex trace in torus expansion".into()))
                    }
                })
                .collect::<Result<_>>()?;
            for i in 0..r {
                coeffs[i] = (0..r).map(|j| &torus_gram_inv[i][j] * &rhs[j]).sum();
            }
            for i in r..dim {
                let t = rep.slots[i].trace_product(m);
                if !t.im.is_zero() {
                    return Err(Error::Structural("complex trace in slot expansion".into()));
                }
                coeffs[i] = t.re / &slot_norms[i - r];
            }
            // Remainder check ⇒ bracket closure of the fundamental.
            let mut rec = SparseMat::zero(rep.dim);
            for (i, c) in coeffs.iter().enumerate() {
                if !c.is_zero() {
                    rec = rec.add(&rep.slots[i].scale(&CRat::from_rat(c.clone())));
                }
            }
            if rec != *m {
                return Err(Error::Structural(
                    "bracket left the compact-basis span".into(),
                ));
            }
            Ok(coeffs)
        };

        let mut brackets = vec![vec![vec![]; dim]; dim];
        for i in 0..dim {
            for j in 0..dim {
                if i == j {
                    continue;
                }
                let c = rep.slots[i].commutator(&rep.slots[j]);
                if c.is_zero() {
                    continue;
                }
                let coeffs = expand(&c)?;
                brackets[i][j] = coeffs
                    .into_iter()
                    .enumerate()
                    .filter(|(_, c)| !c.is_zero())
                    .collect();
            }
        }

        // Killing via ad on the structure constants.
        let mut killing = vec![vec![Rat::zero(); dim]; dim];
        for i in 0..dim {
            for j in 0..=i {
                let mut acc = Rat::zero();
                for k in 0..dim {
                    for (l, c1) in &brackets[j][k] {
                        for (k2, c2) in &brackets[i][*l] {
                            if *k2 == k {
                                acc += c1 * c2;
                            }
                        }
                    }
                }
                killing[i][j] = acc.clone();
                killing[j][i] = acc;
            }
        }

        // killing = ratio · b0, measured and certified.
        let mut ratio: Option<Rat> = None;
        for i in 0..dim {
            for j in 0..dim {
                match (b0[i][j].is_zero(), killing[i][j].is_zero()) {
                    (true, true) => {}
                    (false, false) => {
                        let r = &killing[i][j] / &b0[i][j];
                        match &ratio {
                            None => ratio = Some(r),
                            Some(prev) if *prev == r => {}
                            _ => {
                                return Err(Error::Structural(
                                    "Killing form not proportional to normalized form".into(),
                                ))
                            }
                        }
                    }
                    _ => return Err(Error::Structural("Killing/b0 support mismatch".into())),
                }
            }
        }

        Ok(Structure {
            brackets,
            b0,
            killing,
            killing_to_b0: ratio.ok_or_else(|| Error::Structural("zero Killing form".into()))?,
            cartan_inv,
        })
    }
}

/// Render a weight for reports.
pub fn weight_string(w: &RatVec) -> String {
    let parts: Vec<String> = w.0.iter().map(rat_string).collect();
    format!("({})", parts.join(", "))
}

#[cfg(test)]
mod tests;
