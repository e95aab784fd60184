//! Theorem verification: evaluate a closed-form prediction from the group's
//! structure, compute the ground truth by brute force and compare.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use powcut::connectivity::{all_minimum_cutsets, canonical_listing, minimum_vertex_cut};
use powcut::cyclic::{maximal_cyclic_subgroups, min_order_maximal_cyclic};
use powcut::error::{Error, Result};
use powcut::predictions::{
    kappa_abelian_thm13, kappa_abelian_thm14, kappa_cyclic, kappa_nilpotent_thm12, Condition, CutsetClaim,
    Factorization, Prediction, Thm13Structure, Thm14Structure,
};
use powcut::{Group, PowerGraph, SylowDecomposition};

use crate::suites;

/// Resource caps shared by verification and property suites.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Caps {
    /// Largest graph on which connectivity is computed.
    pub max_vertices: usize,
    /// Node budget for minimum cut-set enumeration.
    pub search_limit: u64,
    /// Non-adjacent pairs sampled per group by the `menger` suite.
    pub menger_samples: usize,
    pub seed: u64,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            max_vertices: 600,
            search_limit: powcut::connectivity::DEFAULT_SEARCH_LIMIT,
            menger_samples: 10,
            seed: 0x5eed,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TheoremId {
    Thm11,
    Thm12,
    Thm13,
    Thm14,
    Props,
}

impl TheoremId {
    pub const ALL: [TheoremId; 5] = [
        TheoremId::Thm11,
        TheoremId::Thm12,
        TheoremId::Thm13,
        TheoremId::Thm14,
        TheoremId::Props,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            TheoremId::Thm11 => "thm11",
            TheoremId::Thm12 => "thm12",
            TheoremId::Thm13 => "thm13",
            TheoremId::Thm14 => "thm14",
            TheoremId::Props => "props",
        }
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for TheoremId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        TheoremId::ALL
            .into_iter()
            .find(|t| t.as_str() == s)
            .ok_or_else(|| {
                Error::InvalidArgument(format!(
                    "unknown theorem {s:?}; expected thm11, thm12, thm13, thm14 or props"
                ))
            })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Match,
    Mismatch,
    SkippedHypothesis,
    SkippedResource,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Match => "match",
            Verdict::Mismatch => "mismatch",
            Verdict::SkippedHypothesis => "skipped-hypothesis",
            Verdict::SkippedResource => "skipped-resource",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TraceEntry {
    pub cond: String,
    pub holds: bool,
}

impl From<&Condition> for TraceEntry {
    fn from(c: &Condition) -> Self {
        TraceEntry {
            cond: c.cond.clone(),
            holds: c.holds,
        }
    }
}

/// One verification outcome. Field names are the stable JSON schema.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub group: String,
    pub theorem: String,
    pub applicable: bool,
    pub hypothesis_trace: Vec<TraceEntry>,
    pub predicted_kappa: Option<u64>,
    pub observed_kappa: Option<u64>,
    pub predicted_cutsets: String,
    /// Minimum cut-sets found, canonical order; partial when the search
    /// budget ran out.
    pub observed_cutsets: Vec<Vec<usize>>,
    pub cutsets_complete: bool,
    pub case: String,
    pub verdict: Verdict,
    pub detail: String,
}

impl VerificationReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }

    pub fn csv_header() -> &'static str {
        "group,theorem,applicable,case,predicted_kappa,observed_kappa,predicted_cutsets,observed_cutset_count,verdict"
    }

    pub fn to_csv_row(&self) -> String {
        let opt = |v: Option<u64>| v.map(|k| k.to_string()).unwrap_or_default();
        format!(
            "{},{},{},{},{},{},{},{},{}",
            self.group,
            self.theorem,
            self.applicable,
            self.case,
            opt(self.predicted_kappa),
            opt(self.observed_kappa),
            self.predicted_cutsets,
            self.observed_cutsets.len(),
            self.verdict.as_str()
        )
    }
}

fn not_applicable(tag: &str, trace: Vec<Condition>) -> Prediction {
    Prediction {
        applicable: false,
        kappa: None,
        case_tag: tag.into(),
        predicted_min_cutsets: CutsetClaim::Unknown,
        hypothesis_trace: trace,
    }
}

fn cond(text: impl Into<String>, holds: bool) -> Condition {
    Condition {
        cond: text.into(),
        holds,
    }
}

fn with_prefix(mut pred: Prediction, mut prefix: Vec<Condition>) -> Prediction {
    prefix.retain(|c| !pred.hypothesis_trace.iter().any(|d| d.cond == c.cond));
    prefix.append(&mut pred.hypothesis_trace);
    pred.hypothesis_trace = prefix;
    pred
}

fn factorization_of(syl: &SylowDecomposition) -> Result<Factorization> {
    Factorization::from_pairs(syl.primes().iter().copied().zip(syl.exponents().iter().copied()).collect())
}

/// Prediction for `theorem` derived from the structure of `group`. Groups
/// outside a theorem's scope get a non-applicable prediction whose trace says
/// which structural condition failed.
pub fn predict(theorem: TheoremId, group: &Group) -> Result<Prediction> {
    match theorem {
        TheoremId::Thm11 => {
            let cyclic = group.is_cyclic();
            let big = group.order() >= 2;
            let pre = vec![cond("G cyclic", cyclic), cond("|G| >= 2", big)];
            if !(cyclic && big) {
                return Ok(not_applicable("thm11", pre));
            }
            Ok(with_prefix(kappa_cyclic(group.order())?, pre))
        }
        TheoremId::Thm12 => {
            let syl = match group.sylow_decomposition() {
                Ok(s) => s,
                Err(_) => return Ok(not_applicable("thm12", vec![cond("G nilpotent", false)])),
            };
            let noncyclic = syl.noncyclic_indices();
            let pre = vec![
                cond("G nilpotent", true),
                cond("r >= 2", syl.rank() >= 2),
                cond("exactly one Sylow subgroup non-cyclic", noncyclic.len() == 1),
            ];
            if syl.rank() < 2 || noncyclic.len() != 1 {
                return Ok(not_applicable("thm12", pre));
            }
            let k = noncyclic[0];
            let pred = kappa_nilpotent_thm12(&factorization_of(&syl)?, syl.primes()[k], syl.is_generalized_quaternion(k))?;
            Ok(with_prefix(pred, pre))
        }
        TheoremId::Thm13 => {
            let abelian = group.is_abelian();
            let syl = group.sylow_decomposition().ok();
            let rank2 = syl.as_ref().is_some_and(|s| s.rank() == 2);
            let noncyclic = !group.is_cyclic();
            let pre = vec![cond("G abelian", abelian), cond("r = 2", rank2), cond("G non-cyclic", noncyclic)];
            let syl = match syl {
                Some(s) if abelian && rank2 && noncyclic => s,
                _ => return Ok(not_applicable("thm13", pre)),
            };
            let (p1, p2) = (syl.primes()[0], syl.primes()[1]);
            let structure = Thm13Structure {
                p1_noncyclic: !syl.is_cyclic(0),
                p2_noncyclic: !syl.is_cyclic(1),
                p1_elementary_abelian: syl.is_elementary_abelian(0),
                min_maximal_cyclic_order: min_order_maximal_cyclic(group).order,
                has_maximal_cyclic_p1p2: maximal_cyclic_subgroups(group).iter().any(|m| m.order == p1 * p2),
            };
            Ok(with_prefix(kappa_abelian_thm13(&factorization_of(&syl)?, structure)?, pre))
        }
        TheoremId::Thm14 => {
            let abelian = group.is_abelian();
            let syl = group.sylow_decomposition().ok();
            let rank3 = syl.as_ref().is_some_and(|s| s.rank() == 3);
            let one = syl.as_ref().is_some_and(|s| s.noncyclic_indices().len() == 1);
            let pre = vec![
                cond("G abelian", abelian),
                cond("r = 3", rank3),
                cond("exactly one Sylow subgroup non-cyclic", one),
            ];
            let syl = match syl {
                Some(s) if abelian && rank3 && one => s,
                _ => return Ok(not_applicable("thm14", pre)),
            };
            let structure = Thm14Structure {
                noncyclic_prime: syl.primes()[syl.noncyclic_indices()[0]],
                min_maximal_cyclic_order: min_order_maximal_cyclic(group).order,
            };
            Ok(with_prefix(kappa_abelian_thm14(&factorization_of(&syl)?, structure)?, pre))
        }
        TheoremId::Props => Err(Error::InvalidArgument("props has no closed-form prediction".into())),
    }
}

struct Observation {
    kappa: u64,
    cutsets: Vec<Vec<usize>>,
    complete: bool,
}

fn observe(group: &Group, graph: &PowerGraph, caps: &Caps) -> Result<Observation> {
    let kappa = minimum_vertex_cut(graph)?.kappa;
    let (cutsets, complete) = match all_minimum_cutsets(graph, &group.generator_classes(), kappa, caps.search_limit) {
        Ok(sets) => (canonical_listing(&sets), true),
        Err(Error::ResourceLimit { partial, .. }) => (partial, false),
        Err(e) => return Err(e),
    };
    Ok(Observation {
        kappa: kappa as u64,
        cutsets,
        complete,
    })
}

fn expected_unique_set(group: &Group, primes: &[u64]) -> Result<Vec<usize>> {
    let syl = group.sylow_decomposition()?;
    let idx: Vec<usize> = primes
        .iter()
        .map(|&p| syl.index_of(p).ok_or_else(|| Error::Inconsistent(format!("no Sylow {p}-subgroup"))))
        .collect::<Result<_>>()?;
    Ok(syl.product_of(&idx).to_vec())
}

/// Runs `theorem` against `group`. Resource exhaustion is reported through
/// the verdict; only malformed input is an error.
pub fn verify_theorem(theorem: TheoremId, group: &Group, caps: &Caps) -> Result<VerificationReport> {
    if theorem == TheoremId::Props {
        return verify_props(group, caps);
    }
    let pred = predict(theorem, group)?;
    let mut report = VerificationReport {
        group: group.name().to_string(),
        theorem: theorem.to_string(),
        applicable: pred.applicable,
        hypothesis_trace: pred.hypothesis_trace.iter().map(TraceEntry::from).collect(),
        predicted_kappa: pred.kappa,
        observed_kappa: None,
        predicted_cutsets: pred.predicted_min_cutsets.to_string(),
        observed_cutsets: Vec::new(),
        cutsets_complete: false,
        case: pred.case_tag.clone(),
        verdict: Verdict::SkippedHypothesis,
        detail: String::new(),
    };
    if group.size() > caps.max_vertices || group.size() < 2 {
        report.verdict = if pred.applicable {
            Verdict::SkippedResource
        } else {
            Verdict::SkippedHypothesis
        };
        report.detail = format!("{} vertices outside [2, {}]", group.size(), caps.max_vertices);
        return Ok(report);
    }
    let graph = PowerGraph::build(group);
    let obs = observe(group, &graph, caps)?;
    report.observed_kappa = Some(obs.kappa);
    report.observed_cutsets = obs.cutsets;
    report.cutsets_complete = obs.complete;
    if !pred.applicable {
        report.detail = "hypotheses not met; observed values reported as data".into();
        return Ok(report);
    }
    let predicted = pred.kappa.expect("applicable predictions carry kappa");
    if predicted != obs.kappa {
        report.verdict = Verdict::Mismatch;
        report.detail = format!("predicted kappa {predicted}, observed {}", obs.kappa);
        return Ok(report);
    }
    let claim_needs_listing = matches!(
        pred.predicted_min_cutsets,
        CutsetClaim::Unique { .. } | CutsetClaim::Count(_)
    );
    if claim_needs_listing && !obs.complete {
        report.verdict = Verdict::SkippedResource;
        report.detail = format!("cut-set search exceeded {} nodes", caps.search_limit);
        return Ok(report);
    }
    let found = report.observed_cutsets.len() as u64;
    let claim_ok = match &pred.predicted_min_cutsets {
        CutsetClaim::Unique { sylow_product: None } => found == 1,
        CutsetClaim::Unique {
            sylow_product: Some(primes),
        } => found == 1 && report.observed_cutsets[0] == expected_unique_set(group, primes)?,
        CutsetClaim::Count(c) => found == *c,
        CutsetClaim::NotUniquePossible | CutsetClaim::Unknown => true,
    };
    if claim_ok {
        report.verdict = Verdict::Match;
    } else {
        report.verdict = Verdict::Mismatch;
        report.detail = format!("cut-set claim {} not met: {found} observed", report.predicted_cutsets);
    }
    Ok(report)
}

/// Structural property bundle for one group. Property outcomes go into the
/// hypothesis trace; there is no kappa prediction.
fn verify_props(group: &Group, caps: &Caps) -> Result<VerificationReport> {
    let mut trace = Vec::new();
    let mut any_fail = false;
    for suite in suites::SUITES {
        match suites::run_one(suite, group, caps) {
            suites::Outcome::Pass => trace.push(TraceEntry {
                cond: suite.id().into(),
                holds: true,
            }),
            suites::Outcome::Fail(msg) => {
                any_fail = true;
                trace.push(TraceEntry {
                    cond: format!("{}: {msg}", suite.id()),
                    holds: false,
                });
            }
            suites::Outcome::NotApplicable(_) => {}
        }
    }
    let mut report = VerificationReport {
        group: group.name().to_string(),
        theorem: TheoremId::Props.to_string(),
        applicable: !trace.is_empty(),
        hypothesis_trace: trace,
        predicted_kappa: None,
        observed_kappa: None,
        predicted_cutsets: CutsetClaim::Unknown.to_string(),
        observed_cutsets: Vec::new(),
        cutsets_complete: false,
        case: "props".into(),
        verdict: Verdict::SkippedHypothesis,
        detail: String::new(),
    };
    if group.size() >= 2 && group.size() <= caps.max_vertices {
        let graph = PowerGraph::build(group);
        report.observed_kappa = Some(minimum_vertex_cut(&graph)?.kappa as u64);
    }
    if report.applicable {
        report.verdict = if any_fail { Verdict::Mismatch } else { Verdict::Match };
    }
    Ok(report)
}
