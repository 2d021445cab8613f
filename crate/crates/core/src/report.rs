//! JSON document builders shared by the CLI and the test suites.
//!
//! Conventions: `report_version` 1 everywhere, rationals as "p/q"
//! strings, complex numbers as {"re", "im"} with string rationals when
//! exact, roots and weights as coordinate arrays.

use crate::exact::{rat_string, Rat};
use crate::hermcat::Space;
use crate::minimality::{MinimalityVerdict, NogoCertificate, Witness};
use crate::repforge::RepLabel;
use crate::rootsys::RatVec;
use crate::symring::{Membership, NonMembershipCertificate, RankTwoCertificate};
use serde_json::{json, Value};

pub const REPORT_VERSION: u32 = 1;

pub fn ratvec_json(v: &RatVec) -> Value {
    Value::Array(v.0.iter().map(|c| Value::String(rat_string(c))).collect())
}

pub fn rational_json(r: &Rat) -> Value {
    Value::String(rat_string(r))
}

/// Exact purely-imaginary scalar i·im as a complex document.
pub fn imaginary_json(im: &Rat) -> Value {
    json!({ "re": "0", "im": rat_string(im) })
}

pub fn catalog_entry(space: &Space) -> Value {
    let sys = &space.system;
    let chain = space
        .thimm_chain()
        .map(|c| c.levels.iter().map(|l| l.label.clone()).collect::<Vec<_>>())
        .unwrap_or_default();
    json!({
        "family": space.tag.family_name(),
        "space": space.tag.to_string(),
        "algebra": space.tag.algebra_label(),
        "k_phi": space.tag.kphi_label(),
        "rank": space.rank,
        "pos_compact": space.compact_pos.len(),
        "pos_noncompact": space.noncompact_pos.len(),
        "rho_phi": ratvec_json(&space.omega),
        "rho_phi_norm_sq": rational_json(&space.rho_sq),
        "p_phi": space.p_phi.iter().map(|&p| ratvec_json(&sys.positive[p])).collect::<Vec<_>>(),
        "c": space.c.iter().map(rational_json).collect::<Vec<_>>(),
        "chain": chain,
    })
}

pub fn catalog_document(spaces: &[Space]) -> Value {
    json!({
        "report_version": REPORT_VERSION,
        "catalog": spaces.iter().map(catalog_entry).collect::<Vec<_>>(),
    })
}

pub fn minimality_json(space: &Space, rep: RepLabel, verdict: &MinimalityVerdict) -> Value {
    let witness = match &verdict.witness {
        None => Value::Null,
        Some(Witness::TrivialRep) => json!("trivial"),
        Some(Witness::EigenvalueLadder(l)) => json!({
            "eigenvalue_ladder": l.iter().map(imaginary_json).collect::<Vec<_>>(),
        }),
        Some(Witness::ReducibleTop(k)) => json!({ "reducible_top_summands": k }),
    };
    json!({
        "report_version": REPORT_VERSION,
        "space": space.tag.to_string(),
        "rep": rep.to_string(),
        "minimal": verdict.minimal,
        "lambda_phi": verdict.lambda.as_ref().map(imaginary_json).unwrap_or(Value::Null),
        "dims": { "v_plus": verdict.dims.0, "v_minus": verdict.dims.1 },
        "on_hw_summand": verdict.on_summand,
        "whole_space_top_summands": verdict.whole_space_top_summands,
        "witness": witness,
    })
}

pub fn nogo_json(space: &Space, cert: &NogoCertificate) -> Value {
    let sys = &space.system;
    let survivors: Vec<Value> = cert
        .outcome
        .survivors
        .iter()
        .map(|s| {
            let witness = if s.trivial {
                json!("trivial")
            } else {
                let (a, b) = s.witness.expect("certified survivor");
                json!({
                    "alpha": ratvec_json(&sys.positive[a]),
                    "beta": ratvec_json(&sys.positive[b]),
                })
            };
            json!({
                "labels": s.labels,
                "weight": ratvec_json(&s.weight),
                "witness": witness,
            })
        })
        .collect();
    json!({
        "report_version": REPORT_VERSION,
        "system": space.tag.algebra_label(),
        "bounds": cert.outcome.bounds,
        "survivors": survivors,
        "verdict": cert.verdict,
    })
}

pub fn eiii_json(cert: &RankTwoCertificate) -> Value {
    json!({
        "report_version": REPORT_VERSION,
        "space": "EIII",
        "constants": {
            "c": cert.constants.c.iter().map(rational_json).collect::<Vec<_>>(),
            "rho_phi_norm_sq": rational_json(&cert.constants.rho_sq),
        },
        "identities": [
            { "name": "p3 = -(3/2)p1p2 - (1/2)p1^3", "holds": cert.p3_relation },
            { "name": "dN p1 = -d p2", "holds": cert.dn_p1 },
            { "name": "dN p2 = (2/3) d(3p1p2 + p1^3)", "holds": cert.dn_p2 },
            { "name": "{p1,p2} dN-stable through degree 3", "holds": cert.closed_deg3 },
        ],
        "exact": true,
        "pass": cert.all_hold(),
    })
}

pub fn evii_json(cert: &NonMembershipCertificate) -> Value {
    let outcome = match &cert.membership.outcome {
        Membership::Member(comb) => json!({
            "member": true,
            "combination": comb
                .iter()
                .map(|(e, c)| json!({ "powers": e, "coeff": rat_string(c) }))
                .collect::<Vec<_>>(),
        }),
        Membership::Separating {
            functional,
            pairing_with_target,
        } => json!({
            "member": false,
            "separating_functional": functional
                .iter()
                .map(|(m, c)| json!({ "monomial": m, "coeff": rat_string(c) }))
                .collect::<Vec<_>>(),
            "pairing_with_target": rat_string(pairing_with_target),
        }),
    };
    json!({
        "report_version": REPORT_VERSION,
        "space": "EVII",
        "target": "I_{1,1} = p1 + 3p2 + 2p3",
        "generators": ["1", "I_{1,0}", "I_{2,0}"],
        "max_degree": cert.membership.max_degree,
        "constants": {
            "c": cert.constants.c.iter().map(rational_json).collect::<Vec<_>>(),
            "rho_phi_norm_sq": rational_json(&cert.constants.rho_sq),
        },
        "dn_rule": cert.dn_rule,
        "outcome": outcome,
        "exact": true,
        "pass": !cert.membership.member,
    })
}
