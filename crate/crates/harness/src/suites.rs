//! Property suites: structural statements about maximal cyclic subgroups and
//! cut-sets, each checked per group against brute force.

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use powcut::connectivity::{
    all_minimal_cutsets, all_minimum_cutsets, canonical_listing, min_vertex_cut_between, minimum_vertex_cut,
    vertex_disjoint_paths,
};
use powcut::cyclic::{
    external_generator_witness, external_generator_witness_constructive, external_overlap, gamma_set,
    maximal_cyclic_subgroups, min_order_maximal_cyclic, nongenerators, sylow_complement_product, CyclicSubgroup,
};
use powcut::error::{Error, Result};
use powcut::number_theory::{euler_phi, factorize, prime_power};
use powcut::power_graph::proper_power_graph_connected;
use powcut::{Element, Group, PowerGraph, SylowDecomposition, VertexSet};

use crate::verify::Caps;

/// Largest graph on which every minimal cut-set is enumerated.
pub const CLASS_UNION_MAX_VERTICES: usize = 40;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    MtildeCutset,
    MbarCutset,
    MbarEqualsMtilde,
    MtildeMinimal,
    MbarMinimal,
    TwoMaximal,
    SizeCompare,
    ClassUnion,
    ProperPgroup,
    Menger,
    MaxCyclicFactor,
    Witness,
    NilpotentMincut,
    Gamma,
    KappaUpperBound,
    P1Cyclic,
    TwoGenExclusion,
    NongenFloor,
}

pub const SUITES: [Suite; 18] = [
    Suite::MtildeCutset,
    Suite::MbarCutset,
    Suite::MbarEqualsMtilde,
    Suite::MtildeMinimal,
    Suite::MbarMinimal,
    Suite::TwoMaximal,
    Suite::SizeCompare,
    Suite::ClassUnion,
    Suite::ProperPgroup,
    Suite::Menger,
    Suite::MaxCyclicFactor,
    Suite::Witness,
    Suite::NilpotentMincut,
    Suite::Gamma,
    Suite::KappaUpperBound,
    Suite::P1Cyclic,
    Suite::TwoGenExclusion,
    Suite::NongenFloor,
];

impl Suite {
    pub fn id(self) -> &'static str {
        match self {
            Suite::MtildeCutset => "mtilde-cutset",
            Suite::MbarCutset => "mbar-cutset",
            Suite::MbarEqualsMtilde => "mbar-equals-mtilde",
            Suite::MtildeMinimal => "mtilde-minimal",
            Suite::MbarMinimal => "mbar-minimal",
            Suite::TwoMaximal => "two-maximal",
            Suite::SizeCompare => "size-compare",
            Suite::ClassUnion => "class-union",
            Suite::ProperPgroup => "proper-pgroup",
            Suite::Menger => "menger",
            Suite::MaxCyclicFactor => "max-cyclic-factor",
            Suite::Witness => "witness",
            Suite::NilpotentMincut => "nilpotent-mincut",
            Suite::Gamma => "gamma",
            Suite::KappaUpperBound => "kappa-upper-bound",
            Suite::P1Cyclic => "p1-cyclic",
            Suite::TwoGenExclusion => "two-gen-exclusion",
            Suite::NongenFloor => "nongen-floor",
        }
    }

    pub fn description(self) -> &'static str {
        match self {
            Suite::MtildeCutset => "non-generators of each maximal cyclic M form a cut-set separating G\\M from the generators of M",
            Suite::MbarCutset => "the external overlap of each maximal cyclic M is a cut-set",
            Suite::MbarEqualsMtilde => "abelian: external overlap equals non-generators iff every Sylow subgroup is non-cyclic",
            Suite::MtildeMinimal => "abelian, r >= 2: non-generators of M form a minimal cut-set iff every Sylow subgroup is non-cyclic",
            Suite::MbarMinimal => "nilpotent with two non-cyclic Sylow subgroups: the external overlap is a minimal cut-set",
            Suite::TwoMaximal => "nilpotent with two non-cyclic Sylow subgroups: G\\M is connected and G\\M, M\\M~ are the only components",
            Suite::SizeCompare => "nilpotent: |M~| >= |C~| for C a maximal cyclic subgroup of least order",
            Suite::ClassUnion => "every minimal cut-set (found without group structure) is a union of generator classes containing the identity",
            Suite::ProperPgroup => "p-groups: the power graph minus the identity is connected iff cyclic or generalized quaternion",
            Suite::Menger => "sampled non-adjacent pairs: disjoint paths, local cut size and separation agree",
            Suite::MaxCyclicFactor => "nilpotent: maximal cyclic subgroups are products of maximal cyclic subgroups of the Sylow subgroups",
            Suite::Witness => "abelian: every non-generator of M lies in a cyclic subgroup not inside M iff every Sylow subgroup is non-cyclic",
            Suite::NilpotentMincut => "nilpotent, r >= 2: the complement product of a Sylow subgroup that is neither cyclic nor quaternion is a minimal cut-set",
            Suite::Gamma => "three-prime abelian with non-cyclic P1: Gamma(M) has the closed-form size and is a minimal cut-set with the predicted sides",
            Suite::KappaUpperBound => "non-cyclic: kappa <= |external overlap| <= |non-generators| for every maximal cyclic M",
            Suite::P1Cyclic => "two-prime abelian, p1 = 2, P1 non-cyclic, P2 cyclic: P2 is a minimum cut-set",
            Suite::TwoGenExclusion => "two-prime abelian, both Sylow non-cyclic, P1 with a maximal cyclic of order 2: minimum cut-sets hold no generator of a maximal cyclic subgroup",
            Suite::NongenFloor => "cyclic of order p1^a p2^b with p1 >= 3: every cut-set is larger than the non-generator count",
        }
    }
}

impl std::str::FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        SUITES.into_iter().find(|x| x.id() == s).ok_or_else(|| {
            let known: Vec<&str> = SUITES.iter().map(|x| x.id()).collect();
            Error::InvalidArgument(format!("unknown suite {s:?}; known: {}", known.join(", ")))
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Outcome {
    Pass,
    Fail(String),
    NotApplicable(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SuiteEntry {
    pub group: String,
    pub status: &'static str,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SuiteSummary {
    pub suite: String,
    pub entries: Vec<SuiteEntry>,
}

impl SuiteSummary {
    pub fn count(&self, status: &str) -> usize {
        self.entries.iter().filter(|e| e.status == status).count()
    }

    pub fn passed(&self) -> usize {
        self.count("pass")
    }

    pub fn failed(&self) -> usize {
        self.count("fail")
    }

    pub fn first_failure(&self) -> Option<&SuiteEntry> {
        self.entries.iter().find(|e| e.status == "fail")
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("summary serializes")
    }
}

/// Runs a suite over a corpus in parallel; entries keep corpus order.
pub fn run_property_suite(suite_id: &str, corpus: &[Group], caps: &Caps) -> Result<SuiteSummary> {
    let suite: Suite = suite_id.parse()?;
    let entries = corpus
        .par_iter()
        .map(|g| {
            let (status, detail) = match run_one(suite, g, caps) {
                Outcome::Pass => ("pass", String::new()),
                Outcome::Fail(d) => ("fail", d),
                Outcome::NotApplicable(d) => ("n/a", d),
            };
            SuiteEntry {
                group: g.name().to_string(),
                status,
                detail,
            }
        })
        .collect();
    Ok(SuiteSummary {
        suite: suite.id().to_string(),
        entries,
    })
}

pub fn run_one(suite: Suite, g: &Group, caps: &Caps) -> Outcome {
    if g.size() < 2 {
        return Outcome::NotApplicable("trivial group".into());
    }
    if g.size() > caps.max_vertices {
        return Outcome::NotApplicable(format!("{} vertices over the cap", g.size()));
    }
    let result = match suite {
        Suite::MtildeCutset => mtilde_cutset(g),
        Suite::MbarCutset => mbar_cutset(g),
        Suite::MbarEqualsMtilde => mbar_equals_mtilde(g),
        Suite::MtildeMinimal => mtilde_minimal(g),
        Suite::MbarMinimal => mbar_minimal(g),
        Suite::TwoMaximal => two_maximal(g),
        Suite::SizeCompare => size_compare(g),
        Suite::ClassUnion => class_union(g, caps),
        Suite::ProperPgroup => proper_pgroup(g),
        Suite::Menger => menger(g, caps),
        Suite::MaxCyclicFactor => max_cyclic_factor(g),
        Suite::Witness => witness(g),
        Suite::NilpotentMincut => nilpotent_mincut(g),
        Suite::Gamma => gamma(g),
        Suite::KappaUpperBound => kappa_upper_bound(g),
        Suite::P1Cyclic => p1_cyclic(g),
        Suite::TwoGenExclusion => two_gen_exclusion(g, caps),
        Suite::NongenFloor => nongen_floor(g),
    };
    match result {
        Ok(o) => o,
        Err(e) => Outcome::Fail(format!("error: {e}")),
    }
}

type Check = Result<Outcome>;

fn na(msg: &str) -> Check {
    Ok(Outcome::NotApplicable(msg.into()))
}

fn fail(msg: String) -> Check {
    Ok(Outcome::Fail(msg))
}

fn describe(m: &CyclicSubgroup) -> String {
    format!("<{}> (order {})", m.generator, m.order)
}

fn abelian_sylow(g: &Group) -> Option<SylowDecomposition> {
    if g.is_abelian() {
        g.sylow_decomposition().ok()
    } else {
        None
    }
}

fn mtilde_cutset(g: &Group) -> Check {
    if g.is_cyclic() {
        return na("cyclic");
    }
    let pg = PowerGraph::build(g);
    for m in maximal_cyclic_subgroups(g) {
        let mt = nongenerators(g, &m);
        let sep = powcut::Separation {
            side_a: m.elements.complement(),
            side_b: m.elements.difference(&mt),
        };
        if !pg.is_cut_set(&mt)? || !pg.is_separation(&mt, &sep)? {
            return fail(format!("M~ of {} is not a separating cut-set", describe(&m)));
        }
    }
    Ok(Outcome::Pass)
}

fn mbar_cutset(g: &Group) -> Check {
    if g.is_cyclic() {
        return na("cyclic");
    }
    let pg = PowerGraph::build(g);
    for m in maximal_cyclic_subgroups(g) {
        let mb = external_overlap(g, &m)?;
        if !mb.is_subset(&nongenerators(g, &m)) {
            return fail(format!("M bar of {} is not inside M~", describe(&m)));
        }
        if !pg.is_cut_set(&mb)? {
            return fail(format!("M bar of {} is not a cut-set", describe(&m)));
        }
    }
    Ok(Outcome::Pass)
}

fn mbar_equals_mtilde(g: &Group) -> Check {
    let Some(syl) = abelian_sylow(g) else { return na("not abelian") };
    if g.is_cyclic() {
        return na("cyclic");
    }
    let expect = syl.all_noncyclic();
    for m in maximal_cyclic_subgroups(g) {
        let equal = external_overlap(g, &m)? == nongenerators(g, &m);
        if equal != expect {
            return fail(format!(
                "{}: M bar = M~ is {equal}, all Sylow non-cyclic is {expect}",
                describe(&m)
            ));
        }
    }
    Ok(Outcome::Pass)
}

fn mtilde_minimal(g: &Group) -> Check {
    let Some(syl) = abelian_sylow(g) else { return na("not abelian") };
    if g.is_cyclic() || syl.rank() < 2 {
        return na("needs a non-cyclic group with r >= 2");
    }
    let expect = syl.all_noncyclic();
    let pg = PowerGraph::build(g);
    for m in maximal_cyclic_subgroups(g) {
        let minimal = pg.is_minimal_cut_set(&nongenerators(g, &m))?;
        if minimal != expect {
            return fail(format!(
                "{}: M~ minimal is {minimal}, all Sylow non-cyclic is {expect}",
                describe(&m)
            ));
        }
    }
    Ok(Outcome::Pass)
}

fn two_noncyclic_sylow(g: &Group) -> bool {
    g.sylow_decomposition()
        .map(|s| s.noncyclic_indices().len() >= 2)
        .unwrap_or(false)
}

fn mbar_minimal(g: &Group) -> Check {
    if !two_noncyclic_sylow(g) {
        return na("needs a nilpotent group with two non-cyclic Sylow subgroups");
    }
    let pg = PowerGraph::build(g);
    for m in maximal_cyclic_subgroups(g) {
        if !pg.is_minimal_cut_set(&external_overlap(g, &m)?)? {
            return fail(format!("M bar of {} is not a minimal cut-set", describe(&m)));
        }
    }
    Ok(Outcome::Pass)
}

fn two_maximal(g: &Group) -> Check {
    if !two_noncyclic_sylow(g) {
        return na("needs a nilpotent group with two non-cyclic Sylow subgroups");
    }
    let pg = PowerGraph::build(g);
    for m in maximal_cyclic_subgroups(g) {
        let outside = m.elements.complement();
        if !pg.is_connected_within(&outside) {
            return fail(format!("G \\ {} is disconnected", describe(&m)));
        }
        let mt = nongenerators(g, &m);
        let mut expected = vec![outside.to_vec(), m.elements.difference(&mt).to_vec()];
        expected.sort();
        if canonical_listing(&pg.components_after_removal(&mt)) != expected {
            return fail(format!("removing M~ of {} does not leave exactly G\\M and M\\M~", describe(&m)));
        }
    }
    Ok(Outcome::Pass)
}

fn size_compare(g: &Group) -> Check {
    if g.sylow_decomposition().is_err() {
        return na("not nilpotent");
    }
    let c = min_order_maximal_cyclic(g);
    let c_size = c.order - euler_phi(c.order);
    for m in maximal_cyclic_subgroups(g) {
        let size = nongenerators(g, &m).len() as u64;
        if size != m.order - euler_phi(m.order) {
            return fail(format!("|M~| of {} disagrees with |M| - phi(|M|)", describe(&m)));
        }
        if size < c_size {
            return fail(format!("|M~| = {size} < |C~| = {c_size} for {}", describe(&m)));
        }
    }
    Ok(Outcome::Pass)
}

fn class_union(g: &Group, caps: &Caps) -> Check {
    if g.size() > CLASS_UNION_MAX_VERTICES {
        return na("more than 40 vertices");
    }
    let pg = PowerGraph::build(g);
    let minimal = match all_minimal_cutsets(&pg, caps.search_limit) {
        Ok(v) => v,
        Err(Error::ResourceLimit { .. }) => return na("separator enumeration over budget"),
        Err(e) => return Err(e),
    };
    let classes = g.generator_classes();
    for x in &minimal {
        if !x.contains(0) {
            return fail(format!("minimal cut-set {:?} misses the identity", x.to_vec()));
        }
        if let Some(c) = classes.iter().find(|c| c.intersects(x) && !c.is_subset(x)) {
            return fail(format!("minimal cut-set {:?} splits class {:?}", x.to_vec(), c.to_vec()));
        }
    }
    // the class-quotient search must find exactly the smallest of these
    if pg.is_complete() {
        return if minimal.is_empty() {
            Ok(Outcome::Pass)
        } else {
            fail("complete graph with a cut-set".into())
        };
    }
    let kappa = minimum_vertex_cut(&pg)?.kappa;
    let smallest: Vec<VertexSet> = minimal.iter().filter(|x| x.len() == kappa).cloned().collect();
    if minimal.iter().any(|x| x.len() < kappa) {
        return fail("a minimal cut-set is smaller than kappa".into());
    }
    let quotient = all_minimum_cutsets(&pg, &classes, kappa, caps.search_limit)?;
    if canonical_listing(&smallest) != canonical_listing(&quotient) {
        return fail(format!(
            "class search found {} minimum cut-sets, separator enumeration {}",
            quotient.len(),
            smallest.len()
        ));
    }
    Ok(Outcome::Pass)
}

fn proper_pgroup(g: &Group) -> Check {
    if prime_power(g.order()).is_none() || g.size() < 3 {
        return na("not a p-group of order >= 3");
    }
    let syl = g.sylow_decomposition()?;
    let expect = g.is_cyclic() || syl.is_generalized_quaternion(0);
    let connected = proper_power_graph_connected(g)?;
    if connected != expect {
        return fail(format!("proper power graph connected = {connected}, cyclic or quaternion = {expect}"));
    }
    Ok(Outcome::Pass)
}

/// Checks one non-adjacent pair: a maximum family of internally disjoint
/// paths, a minimum separating set of the same size, and that the set really
/// separates the pair.
pub fn check_menger_pair(pg: &PowerGraph, s: usize, t: usize) -> std::result::Result<(), String> {
    let paths = vertex_disjoint_paths(pg, s, t).map_err(|e| e.to_string())?;
    let report = min_vertex_cut_between(pg, s, t).map_err(|e| e.to_string())?;
    if paths.len() != report.cut.len() || report.kappa != paths.len() {
        return Err(format!(
            "({s},{t}): {} disjoint paths but cut of size {}",
            paths.len(),
            report.cut.len()
        ));
    }
    let mut inner = VertexSet::new(pg.vertex_count());
    for p in &paths {
        if p.first() != Some(&s) || p.last() != Some(&t) {
            return Err(format!("({s},{t}): path {p:?} has wrong ends"));
        }
        if p.windows(2).any(|w| !pg.is_adjacent(w[0], w[1])) {
            return Err(format!("({s},{t}): path {p:?} uses a non-edge"));
        }
        for &v in &p[1..p.len() - 1] {
            if !inner.insert(v) {
                return Err(format!("({s},{t}): paths share vertex {v}"));
            }
        }
    }
    if report.cut.contains(s) || report.cut.contains(t) {
        return Err(format!("({s},{t}): cut contains an endpoint"));
    }
    let alive = report.cut.complement();
    if pg.component_within(s, &alive).contains(t) {
        return Err(format!("({s},{t}): cut does not separate"));
    }
    if !pg.is_separation(&report.cut, &report.witness).unwrap_or(false) {
        return Err(format!("({s},{t}): witness is not a separation"));
    }
    Ok(())
}

/// All non-adjacent pairs `(s, t)` with `s < t`.
pub fn non_adjacent_pairs(pg: &PowerGraph) -> Vec<(usize, usize)> {
    let n = pg.vertex_count();
    let mut out = Vec::new();
    for s in 0..n {
        for t in s + 1..n {
            if !pg.is_adjacent(s, t) {
                out.push((s, t));
            }
        }
    }
    out
}

fn name_seed(seed: u64, name: &str) -> u64 {
    name.bytes()
        .fold(seed ^ 0xcbf2_9ce4_8422_2325, |h, b| (h ^ b as u64).wrapping_mul(0x0100_0000_01b3))
}

fn menger(g: &Group, caps: &Caps) -> Check {
    let pg = PowerGraph::build(g);
    let pairs = non_adjacent_pairs(&pg);
    if pairs.is_empty() {
        return na("complete graph");
    }
    let mut rng = ChaCha8Rng::seed_from_u64(name_seed(caps.seed, g.name()));
    for &(s, t) in pairs.choose_multiple(&mut rng, caps.menger_samples) {
        if let Err(msg) = check_menger_pair(&pg, s, t) {
            return fail(msg);
        }
    }
    Ok(Outcome::Pass)
}

/// Whether `<x>` is maximal among cyclic subgroups generated inside `within`.
fn maximal_within(g: &Group, within: &VertexSet, x: Element) -> bool {
    let cx = g.cyclic_closure(x);
    within.iter().all(|y| {
        let cy = g.cyclic_closure(y);
        !cx.is_subset(&cy) || cy.len() == cx.len()
    })
}

fn max_cyclic_factor(g: &Group) -> Check {
    let Ok(syl) = g.sylow_decomposition() else { return na("not nilpotent") };
    let maximal = maximal_cyclic_subgroups(g);
    let mut per_sylow = Vec::new();
    for i in 0..syl.rank() {
        let p = syl.subgroup(i);
        let count = g
            .generator_classes()
            .iter()
            .filter(|c| {
                let x = c.first().expect("non-empty");
                p.contains(x) && maximal_within(g, p, x)
            })
            .count();
        per_sylow.push(count);
    }
    let product: usize = per_sylow.iter().product();
    if product != maximal.len() {
        return fail(format!(
            "{} maximal cyclic subgroups but the Sylow counts {per_sylow:?} multiply to {product}",
            maximal.len()
        ));
    }
    for m in &maximal {
        let mut order = 1;
        for i in 0..syl.rank() {
            let part = m.elements.intersection(syl.subgroup(i));
            let w = syl.project(m.generator, i);
            if g.cyclic_closure(w) != part || !maximal_within(g, syl.subgroup(i), w) {
                return fail(format!("{} ∩ P_{} is not a maximal cyclic subgroup of P_{}", describe(m), syl.primes()[i], syl.primes()[i]));
            }
            order *= part.len();
        }
        if order as u64 != m.order {
            return fail(format!("{} is not the product of its Sylow parts", describe(m)));
        }
    }
    Ok(Outcome::Pass)
}

fn witness(g: &Group) -> Check {
    let Some(syl) = abelian_sylow(g) else { return na("not abelian") };
    if g.is_cyclic() {
        return na("cyclic");
    }
    let all_noncyclic = syl.all_noncyclic();
    for m in maximal_cyclic_subgroups(g) {
        let mut missing = None;
        for alpha in &nongenerators(g, &m) {
            match external_generator_witness(g, &m, alpha) {
                Ok(b) => {
                    if m.contains(b) || !g.cyclic_closure(b).contains(alpha) {
                        return fail(format!("search returned invalid witness {b} for {alpha}"));
                    }
                }
                Err(Error::WitnessNotFound(_)) => {
                    missing = Some(alpha);
                    continue;
                }
                Err(e) => return Err(e),
            }
            if all_noncyclic {
                let b = external_generator_witness_constructive(g, &m, alpha)?;
                if m.contains(b) || !g.cyclic_closure(b).contains(alpha) {
                    return fail(format!("constructed witness {b} for {alpha} in {} is invalid", describe(&m)));
                }
            }
        }
        match (all_noncyclic, missing) {
            (true, Some(a)) => return fail(format!("no witness for {a} in {}", describe(&m))),
            (false, None) => {
                return fail(format!(
                    "every non-generator of {} has a witness despite a cyclic Sylow subgroup",
                    describe(&m)
                ))
            }
            _ => {}
        }
    }
    Ok(Outcome::Pass)
}

fn nilpotent_mincut(g: &Group) -> Check {
    let Ok(syl) = g.sylow_decomposition() else { return na("not nilpotent") };
    if syl.rank() < 2 {
        return na("r < 2");
    }
    let ks: Vec<usize> = (0..syl.rank())
        .filter(|&k| !syl.is_cyclic(k) && !syl.is_generalized_quaternion(k))
        .collect();
    if ks.is_empty() {
        return na("no Sylow subgroup that is neither cyclic nor quaternion");
    }
    let pg = PowerGraph::build(g);
    for k in ks {
        let q = sylow_complement_product(g, syl.primes()[k])?;
        if !pg.is_minimal_cut_set(&q)? {
            return fail(format!("complement of P_{} is not a minimal cut-set", syl.primes()[k]));
        }
    }
    Ok(Outcome::Pass)
}

fn gamma_eligible(syl: &SylowDecomposition) -> bool {
    syl.rank() == 3 && syl.primes()[0] == 2 && !syl.is_cyclic(0) && syl.is_cyclic(1) && syl.is_cyclic(2)
}

fn gamma(g: &Group) -> Check {
    let Some(syl) = abelian_sylow(g) else { return na("not abelian") };
    if !gamma_eligible(&syl) {
        return na("needs |G| = 2^a p2^b p3^c with only P1 non-cyclic");
    }
    let pg = PowerGraph::build(g);
    for m in maximal_cyclic_subgroups(g) {
        let gs = gamma_set(g, &m)?;
        if gs.set.len() as u64 != powcut::predictions::gamma_cardinality(gs.params) {
            return fail(format!("|Gamma| mismatch for {}", describe(&m)));
        }
        if !pg.is_minimal_cut_set(&gs.set)? {
            return fail(format!("Gamma of {} is not a minimal cut-set", describe(&m)));
        }
        let rest = gs.set.union(&gs.side).complement();
        let mut expected = vec![gs.side.to_vec(), rest.to_vec()];
        expected.sort();
        if canonical_listing(&pg.components_after_removal(&gs.set)) != expected {
            return fail(format!("removing Gamma of {} leaves unexpected components", describe(&m)));
        }
    }
    Ok(Outcome::Pass)
}

fn kappa_upper_bound(g: &Group) -> Check {
    if g.is_cyclic() {
        return na("cyclic");
    }
    let pg = PowerGraph::build(g);
    let kappa = minimum_vertex_cut(&pg)?.kappa;
    for m in maximal_cyclic_subgroups(g) {
        let mb = external_overlap(g, &m)?.len();
        let mt = nongenerators(g, &m).len();
        if !(kappa <= mb && mb <= mt) {
            return fail(format!("kappa {kappa}, |M bar| {mb}, |M~| {mt} for {}", describe(&m)));
        }
    }
    Ok(Outcome::Pass)
}

fn p1_cyclic(g: &Group) -> Check {
    let Some(syl) = abelian_sylow(g) else { return na("not abelian") };
    if !(syl.rank() == 2 && syl.primes()[0] == 2 && !syl.is_cyclic(0) && syl.is_cyclic(1)) {
        return na("needs p1 = 2, P1 non-cyclic, P2 cyclic, r = 2");
    }
    let pg = PowerGraph::build(g);
    let p2 = syl.subgroup(1);
    let kappa = minimum_vertex_cut(&pg)?.kappa;
    if !pg.is_minimal_cut_set(p2)? || p2.len() != kappa {
        return fail(format!("P2 (size {}) is not a minimum cut-set; kappa = {kappa}", p2.len()));
    }
    Ok(Outcome::Pass)
}

fn two_gen_exclusion(g: &Group, caps: &Caps) -> Check {
    let Some(syl) = abelian_sylow(g) else { return na("not abelian") };
    if !(syl.rank() == 2 && !syl.is_cyclic(0) && !syl.is_cyclic(1)) {
        return na("needs r = 2 with both Sylow subgroups non-cyclic");
    }
    let p1 = syl.subgroup(0);
    let has_order_two_maximal = p1
        .iter()
        .any(|x| g.element_order(x) == 2 && maximal_within(g, p1, x));
    if syl.primes()[0] != 2 || !has_order_two_maximal {
        return na("P1 has no maximal cyclic subgroup of order 2");
    }
    let pg = PowerGraph::build(g);
    let kappa = minimum_vertex_cut(&pg)?.kappa;
    let sets = match all_minimum_cutsets(&pg, &g.generator_classes(), kappa, caps.search_limit) {
        Ok(s) => s,
        Err(Error::ResourceLimit { .. }) => return na("cut-set search over budget"),
        Err(e) => return Err(e),
    };
    let maximal = maximal_cyclic_subgroups(g);
    for x in &sets {
        if let Some(m) = maximal.iter().find(|m| x.contains(m.generator)) {
            return fail(format!("minimum cut-set {:?} contains a generator of {}", x.to_vec(), describe(m)));
        }
    }
    Ok(Outcome::Pass)
}

fn nongen_floor(g: &Group) -> Check {
    let n = g.order();
    let f = factorize(n);
    if !g.is_cyclic() || f.len() != 2 || f[0].0 < 3 {
        return na("needs cyclic of order p1^a p2^b with p1 >= 3");
    }
    let kappa = minimum_vertex_cut(&PowerGraph::build(g))?.kappa as u64;
    let h_tilde = n - euler_phi(n);
    if kappa <= h_tilde {
        return fail(format!("kappa {kappa} <= |H~| {h_tilde}"));
    }
    Ok(Outcome::Pass)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::parse_group_spec;

    fn run(suite: &str, spec: &str) -> Outcome {
        let g = parse_group_spec(spec).unwrap();
        run_one(suite.parse().unwrap(), &g, &Caps::default())
    }

    #[test]
    fn ids_round_trip() {
        for s in SUITES {
            assert_eq!(s.id().parse::<Suite>().unwrap(), s);
            assert!(!s.description().is_empty());
        }
        assert!("nope".parse::<Suite>().is_err());
    }

    #[test]
    fn spot_checks() {
        assert_eq!(run("mtilde-cutset", "abelian:2,2,3"), Outcome::Pass);
        assert_eq!(run("mbar-equals-mtilde", "abelian:2,2,3,3"), Outcome::Pass);
        assert_eq!(run("mtilde-minimal", "abelian:2,2,3"), Outcome::Pass);
        assert_eq!(run("witness", "abelian:2,2,3"), Outcome::Pass);
        assert_eq!(run("witness", "abelian:2,2,3,3"), Outcome::Pass);
        assert_eq!(run("proper-pgroup", "quaternion:16"), Outcome::Pass);
        assert_eq!(run("proper-pgroup", "dihedral:8"), Outcome::Pass);
        assert_eq!(run("p1-cyclic", "abelian:2,2,3"), Outcome::Pass);
        assert_eq!(run("gamma", "abelian:2,2,3,5"), Outcome::Pass);
        assert_eq!(run("nongen-floor", "cyclic:45"), Outcome::Pass);
        assert!(matches!(run("nongen-floor", "cyclic:12"), Outcome::NotApplicable(_)));
        assert!(matches!(run("mtilde-cutset", "cyclic:12"), Outcome::NotApplicable(_)));
    }

    #[test]
    fn summary_keeps_order() {
        let corpus: Vec<Group> = ["cyclic:6", "abelian:2,2", "dihedral:6"]
            .iter()
            .map(|s| parse_group_spec(s).unwrap())
            .collect();
        let s = run_property_suite("mtilde-cutset", &corpus, &Caps::default()).unwrap();
        let names: Vec<&str> = s.entries.iter().map(|e| e.group.as_str()).collect();
        assert_eq!(names, vec!["C6", "C2xC2", "D6"]);
        assert_eq!(s.passed(), 2);
        assert_eq!(s.failed(), 0);
        assert!(run_property_suite("bogus", &corpus, &Caps::default()).is_err());
    }
}
