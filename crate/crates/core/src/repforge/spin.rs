//! Spin representation of so(m) through the Clifford action on ΛC^b,
//! b = ⌊m/2⌋: creation Γ_k, annihilation Γ_k̄, and Γ_0 = (−1)^deg when m
//! is odd. States are occupation bitmasks; all entries stay exact.

use super::{MatrixRep, RepLabel, SlotLayout, WeightVector};
use crate::error::{Error, Result};
use crate::exact::{rat, CRat, SparseMat};
use crate::hermcat::Space;
use crate::rootsys::RatVec;
use num_traits::{One, Zero};

fn parity_sign(state: u32, k: usize) -> i64 {
    let below = state & ((1u32 << k) - 1);
    if below.count_ones() % 2 == 0 {
        1
    } else {
        -1
    }
}

fn creation(blocks: usize, k: usize) -> SparseMat {
    let dim = 1usize << blocks;
    let mut m = SparseMat::zero(dim);
    for s in 0..dim as u32 {
        if s & (1 << k) == 0 {
            m.set(
                (s | 1 << k) as usize,
                s as usize,
                CRat::from_int(parity_sign(s, k)),
            );
        }
    }
    m
}

fn annihilation(blocks: usize, k: usize) -> SparseMat {
    let dim = 1usize << blocks;
    let mut m = SparseMat::zero(dim);
    for s in 0..dim as u32 {
        if s & (1 << k) != 0 {
            m.set(
                (s & !(1 << k)) as usize,
                s as usize,
                CRat::from_int(parity_sign(s, k)),
            );
        }
    }
    m
}

fn degree_involution(blocks: usize) -> SparseMat {
    let dim = 1usize << blocks;
    let mut m = SparseMat::zero(dim);
    for s in 0..dim as u32 {
        let sign = if s.count_ones() % 2 == 0 { 1 } else { -1 };
        m.set(s as usize, s as usize, CRat::from_int(sign));
    }
    m
}

/// The m real gamma matrices of Cl(m, R) acting on ΛC^{⌊m/2⌋}, indexed to
/// match the σ-block presentation of so(m): plane k occupies real indices
/// (off+2k, off+2k+1), and Γ_0 = (−1)^deg sits at index 0 when m is odd.
pub fn gamma_matrices(m: usize) -> Vec<SparseMat> {
    let blocks = m / 2;
    let off = m % 2;
    let mut gammas = vec![];
    if off == 1 {
        gammas.push(degree_involution(blocks));
    }
    for k in 0..blocks {
        let c = creation(blocks, k);
        let a = annihilation(blocks, k);
        gammas.push(c.add(&a));
        gammas.push(c.sub(&a).scale(&CRat::i()));
    }
    gammas
}

/// Image of an antisymmetric matrix under the spin construction:
/// S(X) = ½ Σ_{a<b} X_{ab} γ_a γ_b.
pub fn spinor_image(x: &SparseMat, gammas: &[SparseMat]) -> SparseMat {
    let dim = gammas[0].dim;
    let mut out = SparseMat::zero(dim);
    for (a, b, v) in x.entries() {
        if a < b {
            let prod = gammas[a].mul(&gammas[b]);
            out = out.add(&prod.scale(&(CRat::from_rat(rat(1, 2)) * v.clone())));
        }
    }
    out
}

pub fn spin_rep(
    space: &Space,
    layout: &SlotLayout,
    fundamental: &MatrixRep,
    m: usize,
) -> Result<MatrixRep> {
    if m < 3 {
        return Err(Error::Config(format!(
            "spin rep needs so(m) with m >= 3, got {m}"
        )));
    }
    let blocks = m / 2;
    let dim = 1usize << blocks;
    let gammas = gamma_matrices(m);
    let slots: Vec<SparseMat> = (0..layout.dim())
        .map(|i| spinor_image(&fundamental.slots[i], &gammas))
        .collect();

    let ambient = space.system.ambient;
    let mut weights = vec![];
    for s in 0..dim as u32 {
        let mut w = RatVec::zeros(ambient);
        for k in 0..blocks {
            // Plane k carries abstract coordinate blocks−1−k.
            let a = blocks - 1 - k;
            w.0[a] = if s & (1 << k) != 0 {
                rat(-1, 2)
            } else {
                rat(1, 2)
            };
        }
        let mut vec = vec![CRat::zero(); dim];
        vec[s as usize] = CRat::one();
        weights.push(WeightVector { weight: w, vec });
    }
    // For even m the space splits into half-spinors; the summand with the
    // highest weight is the even-degree part.
    let hw_summand = if m % 2 == 0 {
        Some(
            (0..dim as u32)
                .filter(|s| s.count_ones() % 2 == 0)
                .map(|s| s as usize)
                .collect(),
        )
    } else {
        None
    };
    Ok(MatrixRep {
        label: RepLabel::Spin,
        dim,
        slots,
        weights,
        hw_summand,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gammas_satisfy_clifford_relations() {
        for m in [3usize, 4, 5, 6, 7] {
            let gammas = gamma_matrices(m);
            assert_eq!(gammas.len(), m);
            let dim = gammas[0].dim;
            let id2 = SparseMat::identity(dim).scale(&CRat::from_int(2));
            for a in 0..m {
                for b in 0..m {
                    let anti = gammas[a].mul(&gammas[b]).add(&gammas[b].mul(&gammas[a]));
                    if a == b {
                        assert_eq!(anti, id2, "γ_{a}² ≠ 1 for so({m})");
                    } else {
                        assert!(anti.is_zero(), "γ_{a}γ_{b}+γ_{b}γ_{a} ≠ 0 for so({m})");
                    }
                }
            }
        }
    }

    #[test]
    fn gammas_are_hermitian() {
        for m in [4usize, 5] {
            for g in gamma_matrices(m) {
                assert_eq!(g.dagger(), g);
            }
        }
    }
}
