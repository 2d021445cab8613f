//! Exact root systems for A, B, C, D, E6 and E7 in ε-coordinates.
//!
//! Coordinates follow the usual ε-conventions: A_n lives in R^{n+1} with
//! roots ε_i−ε_j; B/C/D_n live in R^n; E6 lives in R^8 on the span of
//! ε_1..ε_5 and ε = ε_6+ε_7+ε_8; E7 on ε_1..ε_6 and ε = ε_7+ε_8. The
//! ambient bilinear form is the Euclidean dot product scaled per family so
//! that long roots always have squared length 2 (scale 1/2 for C_n, 1
//! elsewhere). All arithmetic is exact.

use crate::error::{Error, Result};
use crate::exact::{invert, rat, rat_int, rat_string, solve_square, Rat};
use num_traits::{One, Signed, Zero};
use std::collections::BTreeMap;
use std::fmt;

/// Exact coordinate vector in the ambient ε-space.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug, Hash)]
pub struct RatVec(pub Vec<Rat>);

impl RatVec {
    pub fn zeros(dim: usize) -> Self {
        RatVec(vec![Rat::zero(); dim])
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|c| c.is_zero())
    }

    pub fn add(&self, o: &RatVec) -> RatVec {
        RatVec(self.0.iter().zip(&o.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, o: &RatVec) -> RatVec {
        RatVec(self.0.iter().zip(&o.0).map(|(a, b)| a - b).collect())
    }

    pub fn neg(&self) -> RatVec {
        RatVec(self.0.iter().map(|a| -a).collect())
    }

    pub fn scale(&self, c: &Rat) -> RatVec {
        RatVec(self.0.iter().map(|a| a * c).collect())
    }

    /// Plain Euclidean dot product (unscaled).
    pub fn dot(&self, o: &RatVec) -> Rat {
        self.0.iter().zip(&o.0).map(|(a, b)| a * b).sum()
    }

    pub fn coord_strings(&self) -> Vec<String> {
        self.0.iter().map(rat_string).collect()
    }
}

impl fmt::Display for RatVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}", rat_string(c))?;
        }
        write!(f, ")")
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, serde::Serialize)]
pub enum Family {
    A,
    B,
    C,
    D,
    E6,
    E7,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Family::A => "A",
            Family::B => "B",
            Family::C => "C",
            Family::D => "D",
            Family::E6 => "E6",
            Family::E7 => "E7",
        };
        write!(f, "{s}")
    }
}

/// A root presented with its sign and position in the positive list.
#[derive(Clone, Debug)]
pub struct Root {
    pub vec: RatVec,
    pub positive: bool,
    /// Index of ±root in the positive list.
    pub index: usize,
}

/// Dominant-weight labels, one nonnegative integer per simple root
/// (Figure ordering). For E7 the label of α_7 is traditionally written
/// N_0; it is stored here at position 6.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DominantLabels(pub Vec<u64>);

pub struct RootSystem {
    pub family: Family,
    pub rank: usize,
    pub ambient: usize,
    /// Scaling of the Euclidean form (1/2 for C, 1 otherwise).
    pub scale: Rat,
    /// Positive roots, sorted lexicographically by coordinates.
    pub positive: Vec<RatVec>,
    /// Simple roots in Figure ordering, as indices into `positive`.
    pub simple: Vec<usize>,
    /// Expansion of each positive root over the simple roots (integers).
    expansions: Vec<Vec<Rat>>,
    /// Coordinate lookup: vec -> (positive index, is_positive).
    lookup: BTreeMap<Vec<Rat>, (usize, bool)>,
}

impl RootSystem {
    pub fn build(family: Family, rank: usize) -> Result<RootSystem> {
        let (ambient, scale, raw_simple, raw_positive) = match family {
            Family::A => {
                if rank < 1 {
                    return Err(Error::Config(format!("A_n needs n >= 1, got {rank}")));
                }
                let dim = rank + 1;
                let mut pos = vec![];
                for i in 0..dim {
                    for j in (i + 1)..dim {
                        pos.push(eps(dim, i).sub(&eps(dim, j)));
                    }
                }
                let simple: Vec<RatVec> = (0..rank)
                    .map(|i| eps(dim, i).sub(&eps(dim, i + 1)))
                    .collect();
                (dim, Rat::one(), simple, pos)
            }
            Family::B => {
                if rank < 2 {
                    return Err(Error::Config(format!("B_n needs n >= 2, got {rank}")));
                }
                let dim = rank;
                let mut pos = vec![];
                for i in 0..dim {
                    for j in (i + 1)..dim {
                        pos.push(eps(dim, i).sub(&eps(dim, j)));
                        pos.push(eps(dim, i).add(&eps(dim, j)));
                    }
                    pos.push(eps(dim, i));
                }
                let mut simple: Vec<RatVec> = (0..rank - 1)
                    .map(|i| eps(dim, i).sub(&eps(dim, i + 1)))
                    .collect();
                simple.push(eps(dim, rank - 1));
                (dim, Rat::one(), simple, pos)
            }
            Family::C => {
                if rank < 2 {
                    return Err(Error::Config(format!("C_n needs n >= 2, got {rank}")));
                }
                let dim = rank;
                let mut pos = vec![];
                for i in 0..dim {
                    for j in (i + 1)..dim {
                        pos.push(eps(dim, i).sub(&eps(dim, j)));
                        pos.push(eps(dim, i).add(&eps(dim, j)));
                    }
                    pos.push(eps(dim, i).scale(&rat_int(2)));
                }
                let mut simple: Vec<RatVec> = (0..rank - 1)
                    .map(|i| eps(dim, i).sub(&eps(dim, i + 1)))
                    .collect();
                simple.push(eps(dim, rank - 1).scale(&rat_int(2)));
                (dim, rat(1, 2), simple, pos)
            }
            Family::D => {
                if rank < 3 {
                    return Err(Error::Config(format!("D_n needs n >= 3, got {rank}")));
                }
                let dim = rank;
                let mut pos = vec![];
                for i in 0..dim {
                    for j in (i + 1)..dim {
                        pos.push(eps(dim, i).sub(&eps(dim, j)));
                        pos.push(eps(dim, i).add(&eps(dim, j)));
                    }
                }
                let mut simple: Vec<RatVec> = (0..rank - 1)
                    .map(|i| eps(dim, i).sub(&eps(dim, i + 1)))
                    .collect();
                simple.push(eps(dim, rank - 2).add(&eps(dim, rank - 1)));
                (dim, Rat::one(), simple, pos)
            }
            Family::E6 => {
                if rank != 6 {
                    return Err(Error::Config(format!("E6 has rank 6, got {rank}")));
                }
                let dim = 8;
                let e = |i| eps(dim, i);
                let big_eps = e(5).add(&e(6)).add(&e(7));
                let mut pos = vec![];
                for i in 0..5 {
                    for j in (i + 1)..5 {
                        pos.push(e(i).sub(&e(j)));
                        pos.push(e(i).add(&e(j)));
                    }
                }
                // Spinor-type roots ½(ε + Σ s_i ε_i) with Π s_i = −1.
                for mask in 0..32u32 {
                    let signs: Vec<i64> = (0..5)
                        .map(|b| if mask >> b & 1 == 1 { 1 } else { -1 })
                        .collect();
                    if signs.iter().product::<i64>() != -1 {
                        continue;
                    }
                    let mut v = big_eps.clone();
                    for (i, s) in signs.iter().enumerate() {
                        v = v.add(&e(i).scale(&rat_int(*s)));
                    }
                    pos.push(v.scale(&rat(1, 2)));
                }
                let mut simple: Vec<RatVec> = (0..4).map(|i| e(i).sub(&e(i + 1))).collect();
                simple.push(e(3).add(&e(4)));
                let sum5 = (0..5).fold(RatVec::zeros(dim), |acc, i| acc.add(&e(i)));
                simple.push(big_eps.sub(&sum5).scale(&rat(1, 2)));
                (dim, Rat::one(), simple, pos)
            }
            Family::E7 => {
                if rank != 7 {
                    return Err(Error::Config(format!("E7 has rank 7, got {rank}")));
                }
                let dim = 8;
                let e = |i| eps(dim, i);
                let big_eps = e(6).add(&e(7));
                let mut pos = vec![];
                for i in 0..6 {
                    for j in (i + 1)..6 {
                        pos.push(e(i).sub(&e(j)));
                        pos.push(e(i).add(&e(j)));
                    }
                }
                pos.push(big_eps.clone());
                // Spinor-type roots ½(ε + Σ s_i ε_i) with Π s_i = +1.
                for mask in 0..64u32 {
                    let signs: Vec<i64> = (0..6)
                        .map(|b| if mask >> b & 1 == 1 { 1 } else { -1 })
                        .collect();
                    if signs.iter().product::<i64>() != 1 {
                        continue;
                    }
                    let mut v = big_eps.clone();
                    for (i, s) in signs.iter().enumerate() {
                        v = v.add(&e(i).scale(&rat_int(*s)));
                    }
                    pos.push(v.scale(&rat(1, 2)));
                }
                let mut simple: Vec<RatVec> = (0..5).map(|i| e(i).sub(&e(i + 1))).collect();
                simple.push(e(4).add(&e(5)));
                let sum6 = (0..6).fold(RatVec::zeros(dim), |acc, i| acc.add(&e(i)));
                simple.push(big_eps.sub(&sum6).scale(&rat(1, 2)));
                (dim, Rat::one(), simple, pos)
            }
        };

        let mut positive = raw_positive;
        positive.sort();
        let mut lookup = BTreeMap::new();
        for (idx, r) in positive.iter().enumerate() {
            lookup.insert(r.0.clone(), (idx, true));
            lookup.insert(r.neg().0, (idx, false));
        }
        let simple: Vec<usize> = raw_simple
            .iter()
            .map(|s| {
                lookup
                    .get(&s.0)
                    .filter(|(_, pos)| *pos)
                    .map(|(i, _)| *i)
                    .ok_or_else(|| Error::Structural("simple root not positive".into()))
            })
            .collect::<Result<_>>()?;

        let mut sys = RootSystem {
            family,
            rank,
            ambient,
            scale,
            positive,
            simple,
            expansions: vec![],
            lookup,
        };
        sys.expansions = sys.compute_expansions()?;
        sys.validate()?;
        Ok(sys)
    }

    /// Scaled bilinear form, with dimension guard.
    pub fn inner(&self, a: &RatVec, b: &RatVec) -> Result<Rat> {
        if a.dim() != self.ambient || b.dim() != self.ambient {
            return Err(Error::Usage(format!(
                "dimension mismatch: ambient {} got {} and {}",
                self.ambient,
                a.dim(),
                b.dim()
            )));
        }
        Ok(self.ip(a, b))
    }

    pub(crate) fn ip(&self, a: &RatVec, b: &RatVec) -> Rat {
        a.dot(b) * &self.scale
    }

    pub fn simple_root(&self, i: usize) -> &RatVec {
        &self.positive[self.simple[i]]
    }

    pub fn positive_count(&self) -> usize {
        self.positive.len()
    }

    pub fn root(&self, index: usize, positive: bool) -> Root {
        let vec = if positive {
            self.positive[index].clone()
        } else {
            self.positive[index].neg()
        };
        Root {
            vec,
            positive,
            index,
        }
    }

    /// All roots: positives then negatives.
    pub fn all_roots(&self) -> Vec<Root> {
        let mut v: Vec<Root> = (0..self.positive.len())
            .map(|i| self.root(i, true))
            .collect();
        v.extend((0..self.positive.len()).map(|i| self.root(i, false)));
        v
    }

    /// Lookup a coordinate vector: Some((positive index, is_positive)).
    pub fn find(&self, v: &RatVec) -> Option<(usize, bool)> {
        self.lookup.get(&v.0).copied()
    }

    /// Expansion coefficients of a positive root over the simple roots.
    pub fn expansion(&self, pos_index: usize) -> &[Rat] {
        &self.expansions[pos_index]
    }

    /// Reflection of `v` in the hyperplane orthogonal to `root`.
    pub fn reflect(&self, v: &RatVec, root: &RatVec) -> RatVec {
        let c = self.ip(v, root) * rat_int(2) / self.ip(root, root);
        v.sub(&root.scale(&c))
    }

    /// Coroot pairing ⟨v, α∨⟩ = 2(v,α)/(α,α).
    pub fn coroot_pairing(&self, v: &RatVec, root: &RatVec) -> Rat {
        self.ip(v, root) * rat_int(2) / self.ip(root, root)
    }

    /// Positive roots satisfying a predicate, in lexicographic order.
    pub fn positive_roots_with<F: Fn(usize, &RatVec) -> bool>(&self, pred: F) -> Vec<usize> {
        (0..self.positive.len())
            .filter(|&i| pred(i, &self.positive[i]))
            .collect()
    }

    /// Solve for a vector `w = Σ c_s · span_s` with pinned inner products
    /// `(w, target_t) = value_t`. Needs exactly `span.len()` constraints.
    pub fn solve_in_span(&self, span: &[RatVec], constraints: &[(&RatVec, Rat)]) -> Result<RatVec> {
        if span.len() != constraints.len() {
            return Err(Error::Usage(format!(
                "need {} constraints for a {}-dimensional span, got {}",
                span.len(),
                span.len(),
                constraints.len()
            )));
        }
        let a: Vec<Vec<Rat>> = constraints
            .iter()
            .map(|(t, _)| span.iter().map(|s| self.ip(t, s)).collect())
            .collect();
        let b: Vec<Rat> = constraints.iter().map(|(_, v)| v.clone()).collect();
        let c = solve_square(&a, &b)
            .ok_or_else(|| Error::Structural("singular constraint system in span solve".into()))?;
        let mut w = RatVec::zeros(self.ambient);
        for (cs, s) in c.iter().zip(span) {
            w = w.add(&s.scale(cs));
        }
        Ok(w)
    }

    /// Highest weight Λ with ⟨Λ, α_i∨⟩ = N_i, solved inside the root span.
    /// Supported for E6 and E7 where the label formulas are actually used.
    pub fn weight_from_labels(&self, labels: &DominantLabels) -> Result<RatVec> {
        if !matches!(self.family, Family::E6 | Family::E7) {
            return Err(Error::Usage(format!(
                "weight_from_labels is defined for E6/E7 only, got {}",
                self.family
            )));
        }
        if labels.0.len() != self.rank {
            return Err(Error::Usage(format!(
                "expected {} labels, got {}",
                self.rank,
                labels.0.len()
            )));
        }
        let span: Vec<RatVec> = (0..self.rank)
            .map(|i| self.simple_root(i).clone())
            .collect();
        let constraints: Vec<(&RatVec, Rat)> = (0..self.rank)
            .map(|i| {
                // ⟨Λ, α∨⟩ = N ⟺ (Λ, α) = N·(α,α)/2
                let a = self.simple_root(i);
                let val = rat_int(labels.0[i] as i64) * self.ip(a, a) / rat_int(2);
                (a, val)
            })
            .collect();
        let span_refs: Vec<RatVec> = span.clone();
        self.solve_in_span(&span_refs, &constraints)
    }

    fn compute_expansions(&self) -> Result<Vec<Vec<Rat>>> {
        let r = self.rank;
        let gram: Vec<Vec<Rat>> = (0..r)
            .map(|i| {
                (0..r)
                    .map(|j| self.ip(self.simple_root(i), self.simple_root(j)))
                    .collect()
            })
            .collect();
        let ginv = invert(&gram)
            .ok_or_else(|| Error::Structural("simple-root Gram matrix singular".into()))?;
        let mut out = vec![];
        for p in &self.positive {
            let rhs: Vec<Rat> = (0..r).map(|i| self.ip(p, self.simple_root(i))).collect();
            let coeffs: Vec<Rat> = (0..r)
                .map(|i| (0..r).map(|j| &ginv[i][j] * &rhs[j]).sum())
                .collect();
            out.push(coeffs);
        }
        Ok(out)
    }

    fn validate(&self) -> Result<()> {
        // Expansions must be nonnegative integers (positivity certificate).
        for (i, exp) in self.expansions.iter().enumerate() {
            for c in exp {
                if !c.denom().is_one() || c.is_negative() {
                    return Err(Error::Structural(format!(
                        "positive root {} has non-integral or negative expansion",
                        self.positive[i]
                    )));
                }
            }
            // Reconstruct to guard against span deficiencies.
            let mut rec = RatVec::zeros(self.ambient);
            for (c, s) in exp.iter().zip(&self.simple) {
                rec = rec.add(&self.positive[*s].scale(c));
            }
            if rec != self.positive[i] {
                return Err(Error::Structural(format!(
                    "expansion failed to reconstruct root {}",
                    self.positive[i]
                )));
            }
        }
        // Closure under simple reflections.
        for root in &self.positive {
            for s in &self.simple {
                let refl = self.reflect(root, &self.positive[*s]);
                if self.find(&refl).is_none() {
                    return Err(Error::Structural(format!(
                        "reflection of {root} left the root system"
                    )));
                }
            }
        }
        // Expected cardinalities.
        let expected = match (self.family, self.rank) {
            (Family::A, n) => n * (n + 1) / 2,
            (Family::B, n) | (Family::C, n) => n * n,
            (Family::D, n) => n * (n - 1),
            (Family::E6, _) => 36,
            (Family::E7, _) => 63,
        };
        if self.positive.len() != expected {
            return Err(Error::Structural(format!(
                "{}{} has {} positive roots, expected {expected}",
                self.family,
                self.rank,
                self.positive.len()
            )));
        }
        Ok(())
    }
}

fn eps(dim: usize, i: usize) -> RatVec {
    let mut v = RatVec::zeros(dim);
    v.0[i] = Rat::one();
    v
}

/// ε_i basis vector in the ambient space of `sys` (0-based).
pub fn eps_of(sys: &RootSystem, i: usize) -> RatVec {
    eps(sys.ambient, i)
}

/// The vector ε (= ε_6+ε_7+ε_8 for E6, ε_7+ε_8 for E7).
pub fn eps_star(sys: &RootSystem) -> Result<RatVec> {
    match sys.family {
        Family::E6 => Ok(eps(8, 5).add(&eps(8, 6)).add(&eps(8, 7))),
        Family::E7 => Ok(eps(8, 6).add(&eps(8, 7))),
        _ => Err(Error::Usage("ε is defined for E6/E7 only".into())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use std::collections::BTreeSet;

    /// Independent oracle: saturate the simple roots under Weyl reflections.
    fn closure_oracle(sys: &RootSystem) -> BTreeSet<Vec<Rat>> {
        let simples: Vec<RatVec> = (0..sys.rank).map(|i| sys.simple_root(i).clone()).collect();
        let mut set: BTreeSet<Vec<Rat>> = simples.iter().map(|s| s.0.clone()).collect();
        loop {
            let mut new = vec![];
            for v in &set {
                let rv = RatVec(v.clone());
                for s in &simples {
                    let r = sys.reflect(&rv, s);
                    if !set.contains(&r.0) {
                        new.push(r.0);
                    }
                }
            }
            if new.is_empty() {
                break;
            }
            set.extend(new);
        }
        set
    }

    #[test]
    fn a1_smallest_case() {
        let sys = RootSystem::build(Family::A, 1).unwrap();
        assert_eq!(sys.positive.len(), 1);
        let r = &sys.positive[0];
        assert_eq!(r.0, vec![rat_int(1), rat_int(-1)]);
        assert_eq!(sys.all_roots().len(), 2);
    }

    #[test]
    fn e6_positive_root_classes() {
        let sys = RootSystem::build(Family::E6, 6).unwrap();
        assert_eq!(sys.positive.len(), 36);
        assert_eq!(sys.all_roots().len(), 72);
        // 10 differences, 10 sums, 16 spinor-type.
        let mut diff = 0;
        let mut sum = 0;
        let mut spinor = 0;
        for r in &sys.positive {
            if r.0[5].is_zero() {
                if r.0.iter().any(|c| c.is_negative()) {
                    diff += 1;
                } else {
                    sum += 1;
                }
            } else {
                spinor += 1;
            }
        }
        assert_eq!((diff, sum, spinor), (10, 10, 16));
    }

    #[test]
    fn root_counts_match_closure_oracle() {
        for (family, rank) in [
            (Family::A, 3),
            (Family::B, 3),
            (Family::C, 3),
            (Family::D, 4),
            (Family::E6, 6),
            (Family::E7, 7),
        ] {
            let sys = RootSystem::build(family, rank).unwrap();
            let oracle = closure_oracle(&sys);
            let ours: BTreeSet<Vec<Rat>> = sys.all_roots().into_iter().map(|r| r.vec.0).collect();
            assert_eq!(
                oracle, ours,
                "{family}{rank} differs from reflection closure"
            );
        }
        // Frozen count from the closure oracle: E7 has 63 positive roots.
        let e7 = RootSystem::build(Family::E7, 7).unwrap();
        assert_eq!(e7.positive.len(), 63);
    }

    #[test]
    fn e6_inner_products() {
        let sys = RootSystem::build(Family::E6, 6).unwrap();
        let phi = sys.simple_root(5);
        assert_eq!(sys.inner(phi, phi).unwrap(), rat_int(2));
        // |ε|² = 3
        let e = eps_star(&sys).unwrap();
        assert_eq!(sys.inner(&e, &e).unwrap(), rat_int(3));
        let zero = RatVec::zeros(8);
        assert_eq!(sys.inner(phi, &zero).unwrap(), Rat::zero());
        // dimension mismatch is a usage error
        assert!(sys.inner(phi, &RatVec::zeros(3)).is_err());
    }

    #[test]
    fn long_roots_normalized_to_two() {
        for (family, rank) in [(Family::B, 4), (Family::C, 4), (Family::D, 4)] {
            let sys = RootSystem::build(family, rank).unwrap();
            let max_len = sys.positive.iter().map(|r| sys.ip(r, r)).max().unwrap();
            assert_eq!(max_len, rat_int(2), "{family}{rank} long roots");
        }
    }

    #[test]
    fn e6_weights_from_labels() {
        let sys = RootSystem::build(Family::E6, 6).unwrap();
        let e = eps_star(&sys).unwrap();
        // N_6 = 1, rest 0 → Λ = (2/3)ε
        let lam = sys
            .weight_from_labels(&DominantLabels(vec![0, 0, 0, 0, 0, 1]))
            .unwrap();
        assert_eq!(lam, e.scale(&rat(2, 3)));
        // N_1 = 1, rest 0 → Λ = ε_1 + (1/3)ε
        let lam = sys
            .weight_from_labels(&DominantLabels(vec![1, 0, 0, 0, 0, 0]))
            .unwrap();
        assert_eq!(lam, eps_of(&sys, 0).add(&e.scale(&rat(1, 3))));
        // zero labels → zero weight
        let lam = sys.weight_from_labels(&DominantLabels(vec![0; 6])).unwrap();
        assert!(lam.is_zero());
    }

    #[test]
    fn e7_weights_from_labels() {
        let sys = RootSystem::build(Family::E7, 7).unwrap();
        let e = eps_star(&sys).unwrap();
        // N_1 = 1 → Λ = ε_1 + ½ε
        let lam = sys
            .weight_from_labels(&DominantLabels(vec![1, 0, 0, 0, 0, 0, 0]))
            .unwrap();
        assert_eq!(lam, eps_of(&sys, 0).add(&e.scale(&rat(1, 2))));
        // classical families refuse
        let a3 = RootSystem::build(Family::A, 3).unwrap();
        assert!(a3
            .weight_from_labels(&DominantLabels(vec![1, 0, 0]))
            .is_err());
    }

    #[test]
    fn e7_label_component_formulas() {
        // Λ_i and Λ_0 as explicit functions of the labels, frozen from the
        // coweight solve and cross-checked against the coroot pairings.
        let sys = RootSystem::build(Family::E7, 7).unwrap();
        let labels = DominantLabels(vec![1, 2, 0, 1, 0, 3, 2]);
        let lam = sys.weight_from_labels(&labels).unwrap();
        for i in 0..7 {
            let pairing = sys.coroot_pairing(&lam, sys.simple_root(i));
            assert_eq!(pairing, rat_int(labels.0[i] as i64), "label {i}");
        }
        // ε-component bookkeeping: Λ = Σ Λ_i ε_i + Λ_0 ε means coordinates
        // 7 and 8 are both Λ_0.
        assert_eq!(lam.0[6], lam.0[7]);
    }

    #[test]
    fn positivity_partition() {
        for (family, rank) in [(Family::A, 4), (Family::C, 3), (Family::E6, 6)] {
            let sys = RootSystem::build(family, rank).unwrap();
            let all = sys.all_roots();
            let pos = all.iter().filter(|r| r.positive).count();
            assert_eq!(pos * 2, all.len());
            for r in &all {
                let (idx, sign) = sys.find(&r.vec.neg()).unwrap();
                assert_eq!(idx, r.index);
                assert_eq!(sign, !r.positive);
            }
        }
    }

    #[test]
    fn filter_returns_lex_order_and_empty() {
        let sys = RootSystem::build(Family::D, 4).unwrap();
        let none = sys.positive_roots_with(|_, _| false);
        assert!(none.is_empty());
        let all = sys.positive_roots_with(|_, _| true);
        assert!(all
            .windows(2)
            .all(|w| sys.positive[w[0]] < sys.positive[w[1]]));
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(24))]

        /// Coroot pairings of label-built weights are integers against
        /// every root, exactly.
        #[test]
        fn coroot_pairing_integrality(n1 in 0u64..3, n2 in 0u64..3, n3 in 0u64..3,
                                      n4 in 0u64..3, n5 in 0u64..3, n6 in 0u64..3) {
            let sys = RootSystem::build(Family::E6, 6).unwrap();
            let lam = sys
                .weight_from_labels(&DominantLabels(vec![n1, n2, n3, n4, n5, n6]))
                .unwrap();
            for r in sys.all_roots() {
                let p = sys.coroot_pairing(&lam, &r.vec);
                prop_assert!(p.denom().is_one(), "non-integral pairing {p}");
            }
        }

        /// Reflections permute the root set.
        #[test]
        fn reflections_permute_roots(i in 0usize..36, j in 0usize..36) {
            let sys = RootSystem::build(Family::E6, 6).unwrap();
            let a = sys.positive[i % sys.positive.len()].clone();
            let b = sys.positive[j % sys.positive.len()].clone();
            let r = sys.reflect(&a, &b);
            prop_assert!(sys.find(&r).is_some());
        }
    }
}
