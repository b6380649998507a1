use std::collections::BTreeMap;

use clap::ValueEnum;
use rayon::prelude::*;
use regsemi::biorder::{biorder_isomorphism, classify_locally_inverse, sandwich_coherence};
use regsemi::category::{build_ls, cone_semigroup};
use regsemi::fundamental::{build_te_mod_p, build_te_mod_p_with, fundamental_image, Choice};
use regsemi::groupoid::{check_inductive_axioms, reconstruct};
use regsemi::semigroup::enumerate_corpus;
use regsemi::{BiorderedSet, Caps, Error, Result, Semigroup};
use serde::Serialize;
use serde_json::{json, Value};

use crate::report::{InputDescriptor, Timings, TOOL};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CheckKind {
    /// (B1)–(B5) on E(S), plus (R) when S is regular.
    Axioms,
    /// S(G(S)) ≅ S.
    Roundtrip,
    /// The six locally-inverse conditions agree.
    #[value(name = "locally-inverse", alias = "theorem31")]
    #[serde(rename = "locally-inverse")]
    LocallyInverse,
    /// T_E/p is regular, fundamental, has biorder E and ignores sandwich choices.
    Fundamental,
    /// Sandwich sets from the table and from the biorder agree.
    Sandwich,
    /// 𝕃(S) is a normal category and T(𝕃(S)) is regular.
    Cones,
    /// (IG1), its dual and (IG2) on G(S).
    Inductive,
}

impl CheckKind {
    pub fn name(self) -> &'static str {
        match self {
            CheckKind::Axioms => "axioms",
            CheckKind::Roundtrip => "roundtrip",
            CheckKind::LocallyInverse => "locally-inverse",
            CheckKind::Fundamental => "fundamental",
            CheckKind::Sandwich => "sandwich",
            CheckKind::Cones => "cones",
            CheckKind::Inductive => "inductive",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    /// The check does not apply, e.g. a regular-only check on a non-regular input.
    Skipped,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CheckOutcome {
    pub status: Status,
    pub detail: Value,
}

impl CheckOutcome {
    fn verdict(pass: bool, detail: Value) -> Self {
        CheckOutcome {
            status: if pass { Status::Pass } else { Status::Fail },
            detail,
        }
    }

    fn skipped(reason: &str) -> Self {
        CheckOutcome {
            status: Status::Skipped,
            detail: json!({ "reason": reason }),
        }
    }

    fn violation(e: &Error) -> Self {
        CheckOutcome::verdict(false, json!({ "violation": e.to_string() }))
    }
}

/// Theorem violations become failing outcomes; cap and input errors propagate.
fn absorb(r: Result<CheckOutcome>) -> Result<CheckOutcome> {
    match r {
        Err(
            e @ (Error::TheoremViolation { .. }
            | Error::WellDefinednessViolation(_)
            | Error::AxiomFailure { .. }
            | Error::FactorizationNotFound(_)),
        ) => Ok(CheckOutcome::violation(&e)),
        other => other,
    }
}

/// Seeds used for the randomized sandwich-choice re-runs; the verdict is
/// the same for every seed.
pub fn rerun_seeds(seed: u64) -> [u64; 3] {
    [seed, seed.wrapping_add(1), seed.wrapping_add(2)]
}

/// `T_E/p` for `b`: regular, fundamental, biorder-isomorphic to `b`, and
/// equal under seeded re-runs.
pub fn fundamental_check(b: &BiorderedSet, seed: u64) -> Result<CheckOutcome> {
    let q = build_te_mod_p(b)?;
    let t = q.semigroup();
    let tb = BiorderedSet::extract(t);
    let iso = biorder_isomorphism(b, &tb);
    let mut seeded_agree = true;
    for s in rerun_seeds(seed) {
        let r = build_te_mod_p_with(b, Choice::Seeded(s))?;
        seeded_agree &= r.semigroup() == t;
    }
    let pass = t.is_regular() && t.is_fundamental() && iso.is_some() && seeded_agree;
    Ok(CheckOutcome::verdict(
        pass,
        json!({
            "order": t.order(),
            "regular": t.is_regular(),
            "fundamental": t.is_fundamental(),
            "biorder_isomorphism": iso,
            "seeded_reruns_agree": seeded_agree,
        }),
    ))
}

pub fn run_check(kind: CheckKind, s: &Semigroup, caps: &Caps, seed: u64) -> Result<CheckOutcome> {
    let regular = s.is_regular();
    let needs_regular = !matches!(kind, CheckKind::Axioms | CheckKind::Sandwich);
    if needs_regular && !regular {
        return Ok(CheckOutcome::skipped("not regular"));
    }
    absorb((|| match kind {
        CheckKind::Axioms => {
            let report = BiorderedSet::extract(s).verify_axioms();
            let pass = report.all_biorder_pass() && (!regular || report.r.passed());
            Ok(CheckOutcome::verdict(
                pass,
                serde_json::to_value(&report).expect("serializable"),
            ))
        }
        CheckKind::Sandwich => {
            let c = sandwich_coherence(s);
            Ok(CheckOutcome::verdict(
                c.passed(),
                serde_json::to_value(&c).expect("serializable"),
            ))
        }
        CheckKind::Roundtrip => {
            let r = reconstruct(s)?;
            Ok(CheckOutcome::verdict(
                true,
                json!({ "classes": r.classes.len(), "isomorphism": r.class_of_element }),
            ))
        }
        CheckKind::LocallyInverse => {
            let r = classify_locally_inverse(s)?;
            Ok(CheckOutcome::verdict(
                r.all_agree(),
                serde_json::to_value(&r).expect("serializable"),
            ))
        }
        CheckKind::Fundamental => {
            let mut out = fundamental_check(&BiorderedSet::extract(s), seed)?;
            let image = fundamental_image(s)?;
            let injective = image.is_injective();
            if injective != s.is_fundamental() {
                out.status = Status::Fail;
            }
            out.detail["image_order"] = json!(image.image.order());
            out.detail["image_injective"] = json!(injective);
            out.detail["input_fundamental"] = json!(s.is_fundamental());
            Ok(out)
        }
        CheckKind::Cones => {
            let c = build_ls(s)?;
            let nc = c.category().verify_nc();
            let t = cone_semigroup(c.category(), caps.cone_objects, caps.elements)?;
            let t_regular = t.semigroup.is_regular();
            Ok(CheckOutcome::verdict(
                nc.all_pass() && t_regular,
                json!({
                    "objects": c.category().object_count(),
                    "morphisms": c.category().morphism_count(),
                    "nc": nc,
                    "cones": t.cones.len(),
                    "cone_semigroup_regular": t_regular,
                }),
            ))
        }
        CheckKind::Inductive => {
            let r = check_inductive_axioms(s)?;
            Ok(CheckOutcome::verdict(
                r.all_pass(),
                serde_json::to_value(&r).expect("serializable"),
            ))
        }
    })())
}

/// One NDJSON line of corpus mode.
#[derive(Debug, Clone, Serialize)]
pub struct MemberReport {
    pub index: usize,
    pub input: InputDescriptor,
    pub regular: bool,
    pub checks: BTreeMap<&'static str, CheckOutcome>,
    pub timing_ms: Timings,
}

#[derive(Debug, Clone, Default, Serialize)]
pub struct Tally {
    pub pass: usize,
    pub fail: usize,
    pub skipped: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct CorpusSummary {
    pub tool: crate::report::Tool,
    pub max_order: usize,
    pub members: usize,
    pub regular: usize,
    pub checks: BTreeMap<&'static str, Tally>,
    pub timing_ms: Timings,
}

impl CorpusSummary {
    pub fn all_pass(&self) -> bool {
        self.checks.values().all(|t| t.fail == 0)
    }
}

pub fn member_report(
    index: usize,
    s: &Semigroup,
    checks: &[CheckKind],
    caps: &Caps,
    seed: u64,
) -> Result<MemberReport> {
    let mut timing = Timings::default();
    let mut out = BTreeMap::new();
    for &k in checks {
        let outcome = timing.time(k.name(), || run_check(k, s, caps, seed))?;
        out.insert(k.name(), outcome);
    }
    Ok(MemberReport {
        index,
        input: InputDescriptor::new(format!("corpus:{index}"), s),
        regular: s.is_regular(),
        checks: out,
        timing_ms: timing,
    })
}

/// Reports for every corpus member in enumeration order, computed in parallel.
pub fn run_corpus(
    max_order: usize,
    checks: &[CheckKind],
    caps: &Caps,
    seed: u64,
) -> Result<(Vec<MemberReport>, CorpusSummary)> {
    let mut timing = Timings::default();
    let members = timing.time("enumerate", || enumerate_corpus(max_order))?;
    let reports = timing.time("checks", || {
        members
            .par_iter()
            .enumerate()
            .map(|(i, s)| member_report(i, s, checks, caps, seed))
            .collect::<Result<Vec<_>>>()
    })?;
    let mut tallies: BTreeMap<&'static str, Tally> = checks
        .iter()
        .map(|k| (k.name(), Tally::default()))
        .collect();
    for r in &reports {
        for (name, o) in &r.checks {
            let t = tallies.get_mut(name).expect("requested check");
            match o.status {
                Status::Pass => t.pass += 1,
                Status::Fail => t.fail += 1,
                Status::Skipped => t.skipped += 1,
            }
        }
    }
    let summary = CorpusSummary {
        tool: TOOL,
        max_order,
        members: reports.len(),
        regular: reports.iter().filter(|r| r.regular).count(),
        checks: tallies,
        timing_ms: timing,
    };
    Ok((reports, summary))
}

#[cfg(test)]
mod tests {
    use super::*;
    use regsemi::Family;

    #[test]
    fn brandt_passes_everything() {
        let s = Family::Brandt(2).generate_default().unwrap();
        for k in CheckKind::value_variants() {
            let o = run_check(*k, &s, &Caps::default(), 0).unwrap();
            assert_eq!(o.status, Status::Pass, "{k:?}: {}", o.detail);
        }
    }

    #[test]
    fn regular_only_checks_skip() {
        let s = Family::NullPlusZero(2).generate_default().unwrap();
        let o = run_check(CheckKind::Roundtrip, &s, &Caps::default(), 0).unwrap();
        assert_eq!(o.status, Status::Skipped);
        let o = run_check(CheckKind::Axioms, &s, &Caps::default(), 0).unwrap();
        assert_eq!(o.status, Status::Pass);
    }

    #[test]
    fn cone_caps_propagate() {
        let s = Family::FullTransformation(3).generate_default().unwrap();
        let r = run_check(CheckKind::Cones, &s, &Caps::default(), 0);
        assert!(matches!(r, Err(Error::CapExceeded { .. })));
    }

    #[test]
    fn corpus_order_two() {
        let (reports, summary) = run_corpus(
            2,
            &[CheckKind::Axioms, CheckKind::Roundtrip],
            &Caps::default(),
            0,
        )
        .unwrap();
        assert_eq!(reports.len(), 6);
        assert_eq!(summary.members, 6);
        assert!(summary.all_pass());
        assert!(reports.iter().enumerate().all(|(i, r)| r.index == i));
    }
}
