//! Fundamental representations of su(n), so(m) (two presentations) and
//! sp(2n), with root vectors normalized to the canonical coroots.
//!
//! so(m) comes in a σ-block presentation (Cartan = block-diagonal rotation
//! planes, zero row first when m is odd) used for the BDI spaces and as
//! the base of the spin construction, and in a split presentation
//! (u(n)-adapted block form) used for DIII. The σ-block presentation pairs
//! the abstract coordinate ε_a with block m−1−a so that ρ_φ lands in the
//! last plane.

use super::{MatrixRep, RepLabel, WeightVector};
use crate::error::{Error, Result};
use crate::exact::{rat, rat_int, CRat, Rat, SparseMat};
use crate::hermcat::Space;
use crate::rootsys::RatVec;
use num_traits::{One, Zero};

/// Pattern of a positive root in ε-coordinates.
enum RootShape {
    /// ε_a − ε_b (a < b)
    Diff(usize, usize),
    /// ε_a + ε_b (a < b)
    Sum(usize, usize),
    /// ε_a (B family short root)
    Short(usize),
    /// 2ε_a (C family long root)
    Long(usize),
}

fn classify(v: &RatVec) -> Result<RootShape> {
    let mut plus = vec![];
    let mut minus = vec![];
    let mut twos = vec![];
    for (i, c) in v.0.iter().enumerate() {
        if c.is_zero() {
            continue;
        } else if *c == Rat::one() {
            plus.push(i);
        } else if *c == -Rat::one() {
            minus.push(i);
        } else if *c == rat_int(2) {
            twos.push(i);
        } else {
            return Err(Error::Structural(format!("unclassifiable root {v}")));
        }
    }
    match (plus.len(), minus.len(), twos.len()) {
        (1, 1, 0) => Ok(RootShape::Diff(plus[0], minus[0])),
        (2, 0, 0) => Ok(RootShape::Sum(plus[0], plus[1])),
        (1, 0, 0) => Ok(RootShape::Short(plus[0])),
        (0, 0, 1) => Ok(RootShape::Long(twos[0])),
        _ => Err(Error::Structural(format!("unclassifiable root {v}"))),
    }
}

fn unit(dim: usize, i: usize) -> RatVec {
    let mut v = RatVec::zeros(dim);
    v.0[i] = Rat::one();
    v
}

fn basis_vec(dim: usize, entries: &[(usize, CRat)]) -> Vec<CRat> {
    let mut v = vec![CRat::zero(); dim];
    for (i, c) in entries {
        v[*i] = c.clone();
    }
    v
}

/// Assemble slot matrices from per-root e_α and per-simple i·h matrices.
fn assemble(
    label: RepLabel,
    dim: usize,
    torus: Vec<SparseMat>,
    e_mats: Vec<SparseMat>,
    weights: Vec<WeightVector>,
    hw_summand: Option<Vec<usize>>,
) -> MatrixRep {
    let mut slots = torus;
    for e in e_mats {
        let ed = e.dagger();
        let x = e.sub(&ed);
        let y = e.add(&ed).scale(&CRat::i());
        slots.push(x);
        slots.push(y);
    }
    MatrixRep {
        label,
        dim,
        slots,
        weights,
        hw_summand,
    }
}

pub fn su_fundamental(space: &Space, n: usize) -> Result<MatrixRep> {
    let sys = &space.system;
    let mut torus = vec![];
    for s in 0..sys.rank {
        let mut m = SparseMat::zero(n);
        m.set(s, s, CRat::i());
        m.set(s + 1, s + 1, -CRat::i());
        torus.push(m);
    }
    let mut e_mats = vec![];
    for p in &sys.positive {
        match classify(p)? {
            RootShape::Diff(a, b) => {
                let mut m = SparseMat::zero(n);
                m.set(a, b, CRat::one());
                e_mats.push(m);
            }
            _ => return Err(Error::Structural("unexpected root in A family".into())),
        }
    }
    let weights = (0..n)
        .map(|k| WeightVector {
            weight: unit(n, k),
            vec: basis_vec(n, &[(k, CRat::one())]),
        })
        .collect();
    Ok(assemble(
        RepLabel::Fundamental,
        n,
        torus,
        e_mats,
        weights,
        None,
    ))
}

pub fn sp_fundamental(space: &Space, n: usize) -> Result<MatrixRep> {
    let sys = &space.system;
    let dim = 2 * n;
    let ih = |shape: &RootShape| -> SparseMat {
        let mut m = SparseMat::zero(dim);
        match shape {
            RootShape::Diff(a, b) => {
                m.set(*a, *a, CRat::i());
                m.set(*b, *b, -CRat::i());
                m.set(n + *a, n + *a, -CRat::i());
                m.set(n + *b, n + *b, CRat::i());
            }
            RootShape::Sum(a, b) => {
                m.set(*a, *a, CRat::i());
                m.set(*b, *b, CRat::i());
                m.set(n + *a, n + *a, -CRat::i());
                m.set(n + *b, n + *b, -CRat::i());
            }
            RootShape::Long(a) => {
                m.set(*a, *a, CRat::i());
                m.set(n + *a, n + *a, -CRat::i());
            }
            RootShape::Short(_) => unreachable!("no short roots in C family"),
        }
        m
    };
    let mut torus = vec![];
    for s in 0..sys.rank {
        torus.push(ih(&classify(sys.simple_root(s))?));
    }
    let mut e_mats = vec![];
    for p in &sys.positive {
        let mut m = SparseMat::zero(dim);
        match classify(p)? {
            RootShape::Diff(a, b) => {
                m.set(a, b, CRat::one());
                m.set(n + b, n + a, -CRat::one());
            }
            RootShape::Sum(a, b) => {
                m.set(a, n + b, CRat::one());
                m.set(b, n + a, CRat::one());
            }
            RootShape::Long(a) => {
                m.set(a, n + a, CRat::one());
            }
            RootShape::Short(_) => {
                return Err(Error::Structural(
                    "unexpected short root in C family".into(),
                ))
            }
        }
        e_mats.push(m);
    }
    let mut weights = vec![];
    for a in 0..n {
        weights.push(WeightVector {
            weight: unit(n, a),
            vec: basis_vec(dim, &[(a, CRat::one())]),
        });
        weights.push(WeightVector {
            weight: unit(n, a).neg(),
            vec: basis_vec(dim, &[(n + a, CRat::one())]),
        });
    }
    Ok(assemble(
        RepLabel::Fundamental,
        dim,
        torus,
        e_mats,
        weights,
        None,
    ))
}

/// so(2n) in the u(n)-adapted split form: Cartan {[[0,a],[−a,0]]},
/// weight vectors w_k = e_k + i·e_{n+k}.
pub fn so_fundamental_split(space: &Space, n: usize) -> Result<MatrixRep> {
    let sys = &space.system;
    let dim = 2 * n;
    let w = |k: usize| basis_vec(dim, &[(k, CRat::one()), (n + k, CRat::i())]);
    let wbar = |k: usize| basis_vec(dim, &[(k, CRat::one()), (n + k, -CRat::i())]);
    let ih = |shape: &RootShape| -> SparseMat {
        let mut m = SparseMat::zero(dim);
        match shape {
            RootShape::Diff(a, b) => {
                m.set(*a, n + *a, CRat::one());
                m.set(n + *a, *a, -CRat::one());
                m.set(*b, n + *b, -CRat::one());
                m.set(n + *b, *b, CRat::one());
            }
            RootShape::Sum(a, b) => {
                m.set(*a, n + *a, CRat::one());
                m.set(n + *a, *a, -CRat::one());
                m.set(*b, n + *b, CRat::one());
                m.set(n + *b, *b, -CRat::one());
            }
            _ => unreachable!("D family has only sums and differences"),
        }
        m
    };
    let mut torus = vec![];
    for s in 0..sys.rank {
        torus.push(ih(&classify(sys.simple_root(s))?));
    }
    let mut e_mats = vec![];
    for p in &sys.positive {
        let m = match classify(p)? {
            RootShape::Diff(a, b) => antisym_pair(&w(a), &wbar(b), dim).scale(&half()),
            RootShape::Sum(a, b) => antisym_pair(&w(a), &w(b), dim).scale(&half()),
            _ => return Err(Error::Structural("unexpected root in D family".into())),
        };
        e_mats.push(m);
    }
    let mut weights = vec![];
    for k in 0..n {
        weights.push(WeightVector {
            weight: unit(n, k),
            vec: w(k),
        });
        weights.push(WeightVector {
            weight: unit(n, k).neg(),
            vec: wbar(k),
        });
    }
    Ok(assemble(
        RepLabel::Fundamental,
        dim,
        torus,
        e_mats,
        weights,
        None,
    ))
}

/// so(m) in the σ-block form: Cartan = rotation planes, zero row first
/// when m is odd, blocks numbered so that abstract ε_a sits in plane
/// m_blocks−1−a. Used by BDI and as the domain of the spin construction.
pub fn so_fundamental_sigma(space: &Space, m: usize) -> Result<MatrixRep> {
    let sys = &space.system;
    let blocks = m / 2;
    let off = m % 2;
    let dim = m;
    let bk = |a: usize| blocks - 1 - a;
    let row = |k: usize| off + 2 * k;
    let w = |k: usize| basis_vec(dim, &[(row(k), CRat::one()), (row(k) + 1, CRat::i())]);
    let wbar = |k: usize| basis_vec(dim, &[(row(k), CRat::one()), (row(k) + 1, -CRat::i())]);
    let sigma = |k: usize, c: i64| -> Vec<(usize, usize, CRat)> {
        vec![
            (row(k), row(k) + 1, CRat::from_int(c)),
            (row(k) + 1, row(k), CRat::from_int(-c)),
        ]
    };
    let ih = |shape: &RootShape| -> SparseMat {
        let mut mat = SparseMat::zero(dim);
        let entries = match shape {
            RootShape::Diff(a, b) => {
                let mut v = sigma(bk(*a), 1);
                v.extend(sigma(bk(*b), -1));
                v
            }
            RootShape::Sum(a, b) => {
                let mut v = sigma(bk(*a), 1);
                v.extend(sigma(bk(*b), 1));
                v
            }
            RootShape::Short(a) => sigma(bk(*a), 2),
            RootShape::Long(_) => unreachable!("no long roots in B/D ε-shape"),
        };
        for (i, j, c) in entries {
            mat.set(i, j, c);
        }
        mat
    };
    let mut torus = vec![];
    for s in 0..sys.rank {
        torus.push(ih(&classify(sys.simple_root(s))?));
    }
    let v0 = basis_vec(dim, &[(0, CRat::one())]);
    let mut e_mats = vec![];
    for p in &sys.positive {
        let m = match classify(p)? {
            RootShape::Diff(a, b) => antisym_pair(&w(bk(a)), &wbar(bk(b)), dim).scale(&half()),
            RootShape::Sum(a, b) => antisym_pair(&w(bk(a)), &w(bk(b)), dim).scale(&half()),
            RootShape::Short(a) => antisym_pair(&w(bk(a)), &v0, dim),
            RootShape::Long(_) => {
                return Err(Error::Structural("unexpected long root in so".into()))
            }
        };
        e_mats.push(m);
    }
    let ambient = sys.ambient;
    let mut weights = vec![];
    if off == 1 {
        weights.push(WeightVector {
            weight: RatVec::zeros(ambient),
            vec: v0,
        });
    }
    for k in 0..blocks {
        let a = blocks - 1 - k;
        weights.push(WeightVector {
            weight: unit(ambient, a),
            vec: w(k),
        });
        weights.push(WeightVector {
            weight: unit(ambient, a).neg(),
            vec: wbar(k),
        });
    }
    Ok(assemble(
        RepLabel::Fundamental,
        dim,
        torus,
        e_mats,
        weights,
        None,
    ))
}

fn half() -> CRat {
    CRat::from_rat(rat(1, 2))
}

/// x·yᵀ − y·xᵀ as a sparse matrix.
fn antisym_pair(x: &[CRat], y: &[CRat], dim: usize) -> SparseMat {
    let mut m = SparseMat::zero(dim);
    for (i, xi) in x.iter().enumerate() {
        if xi.is_zero() {
            continue;
        }
        for (j, yj) in y.iter().enumerate() {
            if yj.is_zero() {
                continue;
            }
            m.add_to(i, j, xi * yj);
            m.add_to(j, i, -(xi * yj));
        }
    }
    m
}
