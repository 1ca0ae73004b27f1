//! JSON encodings of groups and verification reports.

use k0rep_core::closed_forms::{ArOutcome, PredictionKind};
use k0rep_core::{FgAbelianGroup, VerificationReport};
use num_bigint::BigUint;
use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

/// `{"rank": r, "torsion": [d1, d2, ...]}` with `d1 | d2 | ...`, all `> 1`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GroupJson {
    pub rank: usize,
    pub torsion: Vec<u64>,
}

impl GroupJson {
    /// `None` if some invariant factor does not fit in a `u64`.
    pub fn from_group(g: &FgAbelianGroup) -> Option<Self> {
        let torsion = g
            .torsion()
            .iter()
            .map(ToPrimitive::to_u64)
            .collect::<Option<_>>()?;
        Some(GroupJson {
            rank: g.rank(),
            torsion,
        })
    }

    /// `None` unless the torsion list is a valid invariant-factor chain.
    pub fn to_group(&self) -> Option<FgAbelianGroup> {
        let t = self.torsion.iter().map(|&d| BigUint::from(d)).collect();
        FgAbelianGroup::from_invariant_factors(self.rank, t)
    }
}

pub fn group_value(g: &FgAbelianGroup) -> Value {
    match GroupJson::from_group(g) {
        Some(gj) => serde_json::to_value(gj).expect("plain struct"),
        None => json!({
            "rank": g.rank(),
            "torsion": g.torsion().iter().map(ToString::to_string).collect::<Vec<_>>(),
        }),
    }
}

pub fn ar_value(ar: &ArOutcome) -> Value {
    match ar {
        ArOutcome::Computed(g) => group_value(g),
        ArOutcome::SkippedBudget { vertices, budget } => {
            json!({ "skipped": "budget", "vertices": vertices, "budget": budget })
        }
        ArOutcome::Failed(e) => json!({ "error": e.to_string() }),
    }
}

pub fn report_value(r: &VerificationReport) -> Value {
    let kind = match r.prediction.kind() {
        PredictionKind::ExplicitGroup => "group",
        PredictionKind::ExplicitPresentation => "presentation",
        PredictionKind::NotCovered => "not_covered",
    };
    json!({
        "family": r.spec.family().to_string(),
        "n": r.spec.n(),
        "p": r.p,
        "snf": group_value(&r.snf),
        "ar": ar_value(&r.ar),
        "predict": {
            "kind": kind,
            "source": r.prediction.source(),
            "presentation": r.prediction.explicit_presentation().map(ToString::to_string),
            "group": r.predicted_group.as_ref().map(group_value),
        },
        "verdicts": r.verdicts.iter().map(|v| json!({
            "left": v.left.name(),
            "right": v.right.name(),
            "agree": v.agree,
        })).collect::<Vec<_>>(),
        "pass": r.pass,
    })
}
