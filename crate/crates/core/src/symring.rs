//! Exact polynomial ring in the slice variables f_1..f_m with the
//! derivations d and d_N, where d_N acts on generators by
//! d_N f_j = −2 f_j df_j. Everything here is rational arithmetic; the
//! verdicts are certificates, not residuals.

use crate::error::{Error, Result};
use crate::exact::{rat, rat_int, rat_string, solve_in_span, Rat, SpanSolve};
use crate::hermcat::{Space, SpaceTag};
use num_traits::{One, Zero};
use std::collections::BTreeMap;
use std::fmt;

/// Multivariate polynomial over exact rationals, keyed by exponent
/// vectors in canonical sorted order with zero coefficients pruned.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SymPoly {
    pub nvars: usize,
    terms: BTreeMap<Vec<u32>, Rat>,
}

impl SymPoly {
    pub fn zero(nvars: usize) -> Self {
        SymPoly {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(nvars: usize, c: Rat) -> Self {
        let mut p = Self::zero(nvars);
        if !c.is_zero() {
            p.terms.insert(vec![0; nvars], c);
        }
        p
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, Rat::one())
    }

    pub fn var(nvars: usize, j: usize) -> Self {
        let mut e = vec![0; nvars];
        e[j] = 1;
        let mut p = Self::zero(nvars);
        p.terms.insert(e, Rat::one());
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, exps: Vec<u32>, c: Rat) {
        if c.is_zero() {
            return;
        }
        let e = self.terms.entry(exps).or_insert_with(Rat::zero);
        *e += c;
        if e.is_zero() {
            let key: Vec<Vec<u32>> = self
                .terms
                .iter()
                .filter(|(_, v)| v.is_zero())
                .map(|(k, _)| k.clone())
                .collect();
            for k in key {
                self.terms.remove(&k);
            }
        }
    }

    pub fn add(&self, o: &SymPoly) -> SymPoly {
        let mut p = self.clone();
        for (e, c) in &o.terms {
            p.add_term(e.clone(), c.clone());
        }
        p
    }

    pub fn sub(&self, o: &SymPoly) -> SymPoly {
        self.add(&o.scale(&rat_int(-1)))
    }

    pub fn scale(&self, c: &Rat) -> SymPoly {
        if c.is_zero() {
            return SymPoly::zero(self.nvars);
        }
        SymPoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, v)| (e.clone(), v * c)).collect(),
        }
    }

    pub fn mul(&self, o: &SymPoly) -> SymPoly {
        let mut p = SymPoly::zero(self.nvars);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &o.terms {
                let e: Vec<u32> = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                p.add_term(e, ca * cb);
            }
        }
        p
    }

    pub fn pow(&self, k: u32) -> SymPoly {
        let mut p = SymPoly::one(self.nvars);
        for _ in 0..k {
            p = p.mul(self);
        }
        p
    }

    pub fn partial(&self, j: usize) -> SymPoly {
        let mut p = SymPoly::zero(self.nvars);
        for (e, c) in &self.terms {
            if e[j] > 0 {
                let mut e2 = e.clone();
                e2[j] -= 1;
                p.add_term(e2, c * rat_int(e[j] as i64));
            }
        }
        p
    }

    pub fn degree(&self) -> u32 {
        self.terms.keys().map(|e| e.iter().sum()).max().unwrap_or(0)
    }

    /// Invariance under all adjacent transpositions of the variables.
    pub fn is_symmetric(&self) -> bool {
        for j in 0..self.nvars.saturating_sub(1) {
            let swapped: BTreeMap<Vec<u32>, Rat> = self
                .terms
                .iter()
                .map(|(e, c)| {
                    let mut e2 = e.clone();
                    e2.swap(j, j + 1);
                    (e2, c.clone())
                })
                .collect();
            if swapped != self.terms {
                return false;
            }
        }
        true
    }

    pub fn permute(&self, perm: &[usize]) -> SymPoly {
        SymPoly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| {
                    let mut e2 = vec![0; self.nvars];
                    for (i, &p) in perm.iter().enumerate() {
                        e2[p] = e[i];
                    }
                    (e2, c.clone())
                })
                .collect(),
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &Rat)> {
        self.terms.iter()
    }

    /// Coefficient vector over a fixed monomial list.
    fn coeff_vector(&self, monomials: &[Vec<u32>]) -> Vec<Rat> {
        monomials
            .iter()
            .map(|m| self.terms.get(m).cloned().unwrap_or_else(Rat::zero))
            .collect()
    }
}

impl fmt::Display for SymPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "{}", rat_string(c))?;
            for (j, &k) in e.iter().enumerate() {
                if k == 1 {
                    write!(f, "·f{}", j + 1)?;
                } else if k > 1 {
                    write!(f, "·f{}^{}", j + 1, k)?;
                }
            }
        }
        Ok(())
    }
}

/// One-form Σ g_j df_j with polynomial coefficients.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct OneForm {
    pub comps: Vec<SymPoly>,
}

impl OneForm {
    pub fn zero(nvars: usize) -> Self {
        OneForm {
            comps: (0..nvars).map(|_| SymPoly::zero(nvars)).collect(),
        }
    }

    pub fn add(&self, o: &OneForm) -> OneForm {
        OneForm {
            comps: self
                .comps
                .iter()
                .zip(&o.comps)
                .map(|(a, b)| a.add(b))
                .collect(),
        }
    }

    pub fn sub(&self, o: &OneForm) -> OneForm {
        OneForm {
            comps: self
                .comps
                .iter()
                .zip(&o.comps)
                .map(|(a, b)| a.sub(b))
                .collect(),
        }
    }

    pub fn scale(&self, c: &Rat) -> OneForm {
        OneForm {
            comps: self.comps.iter().map(|p| p.scale(c)).collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.comps.iter().all(|p| p.is_zero())
    }
}

/// Exterior derivative d p = Σ ∂_j p · df_j.
pub fn d(p: &SymPoly) -> OneForm {
    OneForm {
        comps: (0..p.nvars).map(|j| p.partial(j)).collect(),
    }
}

/// Nijenhuis derivation with d_N f_j = −2 f_j df_j, extended by Leibniz:
/// d_N p = Σ (−2 f_j ∂_j p) df_j.
pub fn dn(p: &SymPoly) -> OneForm {
    OneForm {
        comps: (0..p.nvars)
            .map(|j| {
                p.partial(j)
                    .mul(&SymPoly::var(p.nvars, j))
                    .scale(&rat_int(-2))
            })
            .collect(),
    }
}

/// Slice constants of a space: c_j = −2/(α_j,α_j) per P_φ root and
/// (ρ_φ, ρ_φ).
#[derive(Clone, Debug)]
pub struct RingConstants {
    pub c: Vec<Rat>,
    pub rho_sq: Rat,
}

impl RingConstants {
    pub fn of_space(space: &Space) -> RingConstants {
        RingConstants {
            c: space.c.clone(),
            rho_sq: space.rho_sq.clone(),
        }
    }

    pub fn nvars(&self) -> usize {
        self.c.len()
    }
}

/// p_n(f) = Σ_j c_j f_j^n.
pub fn power_sum(n: u32, constants: &RingConstants) -> SymPoly {
    let m = constants.nvars();
    let mut p = SymPoly::zero(m);
    for (j, c) in constants.c.iter().enumerate() {
        let mut e = vec![0; m];
        e[j] = n;
        p.add_term(e, c.clone());
    }
    p
}

/// Primitive of d_N p_n: d_N p_n = d(−2n/(n+1) · p_{n+1}), exactly.
pub fn dn_power_sum_primitive(n: u32, constants: &RingConstants) -> SymPoly {
    power_sum(n + 1, constants).scale(&rat(-2 * n as i64, n as i64 + 1))
}

/// Outcome of an exact span-membership question over generator products.
#[derive(Clone, Debug)]
pub enum Membership {
    /// Coefficients per product, labeled by generator exponents.
    Member(Vec<(Vec<u32>, Rat)>),
    /// Functional on monomial coefficients: zero on every product,
    /// nonzero on the target (value recorded).
    Separating {
        functional: Vec<(Vec<u32>, Rat)>,
        pairing_with_target: Rat,
    },
}

#[derive(Clone, Debug)]
pub struct MembershipCertificate {
    pub member: bool,
    pub max_degree: u32,
    pub outcome: Membership,
}

/// Decide whether `target` lies in the span of products of `generators`
/// with total degree ≤ `max_degree`, by exact linear algebra. Target and
/// generators must be symmetric.
pub fn subring_membership(
    target: &SymPoly,
    generators: &[SymPoly],
    max_degree: u32,
) -> Result<MembershipCertificate> {
    if !target.is_symmetric() || generators.iter().any(|g| !g.is_symmetric()) {
        return Err(Error::Usage("membership requires symmetric inputs".into()));
    }
    if target.degree() > max_degree {
        return Err(Error::Usage(format!(
            "target degree {} exceeds max_degree {max_degree}",
            target.degree()
        )));
    }
    let nvars = target.nvars;
    // Enumerate generator products with bounded total degree.
    let degs: Vec<u32> = generators.iter().map(|g| g.degree()).collect();
    let mut products: Vec<(Vec<u32>, SymPoly)> = vec![];
    let mut exps = vec![0u32; generators.len()];
    'outer: loop {
        let total: u32 = exps.iter().zip(&degs).map(|(e, d)| e * d).sum();
        if total <= max_degree {
            let mut p = SymPoly::one(nvars);
            for (g, &e) in generators.iter().zip(exps.iter()) {
                p = p.mul(&g.pow(e));
            }
            if !products.iter().any(|(_, q)| *q == p) {
                products.push((exps.clone(), p));
            }
        }
        for i in 0..exps.len() {
            if (exps[i] + 1) as u64 * degs[i].max(1) as u64 <= max_degree as u64 {
                exps[i] += 1;
                continue 'outer;
            }
            exps[i] = 0;
        }
        break;
    }
    // Fixed monomial list covering everything in sight.
    let mut monomials: Vec<Vec<u32>> = vec![];
    let mut seen = std::collections::BTreeSet::new();
    for (_, p) in products
        .iter()
        .chain(std::iter::once(&(vec![], target.clone())))
    {
        for (e, _) in p.terms() {
            if seen.insert(e.clone()) {
                monomials.push(e.clone());
            }
        }
    }
    monomials.sort();
    let columns: Vec<Vec<Rat>> = products
        .iter()
        .map(|(_, p)| p.coeff_vector(&monomials))
        .collect();
    let target_vec = target.coeff_vector(&monomials);
    match solve_in_span(&columns, &target_vec) {
        SpanSolve::Member(coeffs) => {
            let combination: Vec<(Vec<u32>, Rat)> = products
                .iter()
                .zip(coeffs)
                .filter(|(_, c)| !c.is_zero())
                .map(|((e, _), c)| (e.clone(), c))
                .collect();
            // Re-verify the combination exactly.
            let mut rec = SymPoly::zero(nvars);
            for (e, c) in &combination {
                let mut p = SymPoly::one(nvars);
                for (g, &k) in generators.iter().zip(e.iter()) {
                    p = p.mul(&g.pow(k));
                }
                rec = rec.add(&p.scale(c));
            }
            if rec != *target {
                return Err(Error::Structural(
                    "membership combination failed recheck".into(),
                ));
            }
            Ok(MembershipCertificate {
                member: true,
                max_degree,
                outcome: Membership::Member(combination),
            })
        }
        SpanSolve::Separating(y) => {
            // Re-verify: y kills every product and pairs nontrivially
            // with the target.
            let pair = |v: &[Rat]| -> Rat { y.iter().zip(v).map(|(a, b)| a * b).sum() };
            for col in &columns {
                if !pair(col).is_zero() {
                    return Err(Error::Structural(
                        "separating functional failed recheck".into(),
                    ));
                }
            }
            let with_target = pair(&target_vec);
            if with_target.is_zero() {
                return Err(Error::Structural(
                    "separating functional vanished on target".into(),
                ));
            }
            let functional: Vec<(Vec<u32>, Rat)> = monomials
                .iter()
                .zip(&y)
                .filter(|(_, c)| !c.is_zero())
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect();
            Ok(MembershipCertificate {
                member: false,
                max_degree,
                outcome: Membership::Separating {
                    functional,
                    pairing_with_target: with_target,
                },
            })
        }
    }
}

/// Exact certificate of the rank-2 slice ring identities:
/// the p_3 relation, the two d_N formulas, and closure of {p_1, p_2}
/// under d_N up to d-exactness in degree ≤ 3.
#[derive(Clone, Debug)]
pub struct RankTwoCertificate {
    pub constants: RingConstants,
    pub p3_relation: bool,
    pub dn_p1: bool,
    pub dn_p2: bool,
    pub closed_deg3: bool,
}

impl RankTwoCertificate {
    pub fn all_hold(&self) -> bool {
        self.p3_relation && self.dn_p1 && self.dn_p2 && self.closed_deg3
    }
}

/// Verify the rank-2 ring exactly for the EIII constants:
/// p_3 = −(3/2)p_1p_2 − ½p_1³, d_N p_1 = −dp_2,
/// d_N p_2 = (2/3)·d(3p_1p_2 + p_1³).
pub fn verify_eiii(space: &Space) -> Result<RankTwoCertificate> {
    if space.tag != SpaceTag::EIII {
        return Err(Error::Usage(format!(
            "expected the EIII space, got {}",
            space.tag
        )));
    }
    let constants = RingConstants::of_space(space);
    if constants.c != vec![rat_int(-1), rat_int(-1)] || constants.rho_sq != rat(-4, 3) {
        return Err(Error::Structural(
            "EIII slice constants not reproduced".into(),
        ));
    }
    let p1 = power_sum(1, &constants);
    let p2 = power_sum(2, &constants);
    let p3 = power_sum(3, &constants);
    let p3_relation = p3
        .add(&p1.mul(&p2).scale(&rat(3, 2)))
        .add(&p1.pow(3).scale(&rat(1, 2)))
        .is_zero();
    let dn_p1 = dn(&p1).add(&d(&p2)).is_zero();
    let primitive = p1.mul(&p2).scale(&rat_int(3)).add(&p1.pow(3));
    let dn_p2 = dn(&p2).sub(&d(&primitive).scale(&rat(2, 3))).is_zero();
    let closed_deg3 = generators_closed_deg3(&constants)?;
    Ok(RankTwoCertificate {
        constants,
        p3_relation,
        dn_p1,
        dn_p2,
        closed_deg3,
    })
}

/// The subcomplex generated by {p_1, p_2} is d_N-stable in degree ≤ 3:
/// for every monomial q in p_1, p_2 of that degree, d_N q lies in the
/// ℚ[p_1,p_2]-module spanned by dp_1 and dp_2 (exhaustive linear algebra
/// over the one-form coefficients).
fn generators_closed_deg3(constants: &RingConstants) -> Result<bool> {
    let p1 = power_sum(1, constants);
    let p2 = power_sum(2, constants);
    let inputs: Vec<SymPoly> = vec![p1.clone(), p2.clone(), p1.pow(2), p1.mul(&p2), p1.pow(3)];
    // Candidate module elements p_1^a p_2^b · dp_c with degree ≤ 4.
    let mut candidates: Vec<OneForm> = vec![];
    for a in 0..5u32 {
        for b in 0..3u32 {
            if a + 2 * b <= 4 {
                let coeff = p1.pow(a).mul(&p2.pow(b));
                for base in [&p1, &p2] {
                    let w = d(base);
                    candidates.push(OneForm {
                        comps: w.comps.iter().map(|c| c.mul(&coeff)).collect(),
                    });
                }
            }
        }
    }
    let monomials: Vec<Vec<u32>> = {
        let mut seen = std::collections::BTreeSet::new();
        for w in candidates
            .iter()
            .chain(inputs.iter().map(dn).collect::<Vec<_>>().iter())
        {
            for c in &w.comps {
                for (e, _) in c.terms() {
                    seen.insert(e.clone());
                }
            }
        }
        seen.into_iter().collect()
    };
    let flatten = |w: &OneForm| -> Vec<Rat> {
        let mut v = vec![];
        for c in &w.comps {
            v.extend(c.coeff_vector(&monomials));
        }
        v
    };
    let columns: Vec<Vec<Rat>> = candidates.iter().map(&flatten).collect();
    for q in &inputs {
        match solve_in_span(&columns, &flatten(&dn(q))) {
            SpanSolve::Member(_) => {}
            SpanSolve::Separating(_) => return Ok(false),
        }
    }
    Ok(true)
}

/// The rank-3 non-membership certificate: I_{1,1} = p_1 + 3p_2 + 2p_3
/// does not lie in the degree-3 span of products of {1, I_{1,0}, I_{2,0}}.
#[derive(Clone, Debug)]
pub struct NonMembershipCertificate {
    pub constants: RingConstants,
    pub membership: MembershipCertificate,
    /// d_N f_j = −2 f_j df_j is taken as an axiom at rank 3; it is proved
    /// for rank 2 and for the classical chains.
    pub dn_rule: &'static str,
}

pub fn verify_evii(space: &Space) -> Result<NonMembershipCertificate> {
    if space.tag != SpaceTag::EVII {
        return Err(Error::Usage(format!(
            "expected the EVII space, got {}",
            space.tag
        )));
    }
    let constants = RingConstants::of_space(space);
    if constants.c != vec![rat_int(-1); 3] {
        return Err(Error::Structural(
            "EVII slice constants not reproduced".into(),
        ));
    }
    let p1 = power_sum(1, &constants);
    let p2 = power_sum(2, &constants);
    let p3 = power_sum(3, &constants);
    let rho = SymPoly::constant(3, constants.rho_sq.clone());
    let i10 = rho.add(&p1);
    let i20 = rho.add(&p1.scale(&rat_int(2))).add(&p2.scale(&rat_int(2)));
    let i11 = p1.add(&p2.scale(&rat_int(3))).add(&p3.scale(&rat_int(2)));
    let one = SymPoly::one(3);
    let membership = subring_membership(&i11, &[one, i10, i20], 3)?;
    if membership.member {
        return Err(Error::Structural(
            "expected non-membership of I_{1,1} at degree 3".into(),
        ));
    }
    Ok(NonMembershipCertificate {
        constants,
        membership,
        dn_rule: "axiomatized for rank 3 (proved at rank 2 and on the classical chains)",
    })
}
