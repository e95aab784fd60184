//! Maximal cyclic subgroups and the cut-set constructions built from them.

use crate::error::{invalid, unsupported, Error, Result};
use crate::group::{Element, Group};
use crate::number_theory::{euler_phi, solve_congruence, valuation};
use crate::vertex_set::VertexSet;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CyclicSubgroup {
    pub elements: VertexSet,
    /// Least-index generator.
    pub generator: Element,
    pub order: u64,
    pub is_maximal: bool,
}

impl CyclicSubgroup {
    /// `<g>`, with maximality decided against the whole group.
    pub fn generated_by(group: &Group, g: Element) -> Self {
        let elements = group.cyclic_closure(g);
        let order = group.element_order(g);
        let generator = group.generator_class(g).first().expect("non-empty");
        let is_maximal = (0..group.size()).all(|h| {
            elements.contains(h)
                || group.element_order(h) <= order
                || !elements.is_subset(&group.cyclic_closure(h))
        });
        CyclicSubgroup {
            elements,
            generator,
            order,
            is_maximal,
        }
    }

    pub fn contains(&self, x: Element) -> bool {
        self.elements.contains(x)
    }
}

/// All maximal cyclic subgroups, one entry per subgroup, ordered by
/// least-index generator.
pub fn maximal_cyclic_subgroups(group: &Group) -> Vec<CyclicSubgroup> {
    let closures: Vec<(Element, VertexSet)> = group
        .generator_classes()
        .iter()
        .map(|c| {
            let rep = c.first().expect("non-empty");
            (rep, group.cyclic_closure(rep))
        })
        .collect();
    let mut out: Vec<CyclicSubgroup> = closures
        .iter()
        .filter(|(_, cl)| {
            !closures
                .iter()
                .any(|(_, other)| other.len() > cl.len() && cl.is_subset(other))
        })
        .map(|(rep, cl)| CyclicSubgroup {
            elements: cl.clone(),
            generator: *rep,
            order: cl.len() as u64,
            is_maximal: true,
        })
        .collect();
    out.sort_by_key(|m| m.generator);
    out
}

/// Elements of `m` that do not generate it.
pub fn nongenerators(group: &Group, m: &CyclicSubgroup) -> VertexSet {
    VertexSet::from_indices(
        group.size(),
        m.elements.iter().filter(|&x| group.element_order(x) < m.order),
    )
}

/// Union of `m ∩ <y>` over all `y` outside `m`.
pub fn external_overlap(group: &Group, m: &CyclicSubgroup) -> Result<VertexSet> {
    if group.is_cyclic() {
        return invalid("external overlap needs a non-cyclic group");
    }
    let mut out = VertexSet::new(group.size());
    // <y> depends only on the class of y
    for class in group.generator_classes() {
        let y = class.first().expect("non-empty");
        if m.contains(y) {
            continue;
        }
        out.union_with(&group.cyclic_closure(y).intersection(&m.elements));
    }
    Ok(out)
}

/// Product of all Sylow subgroups except the one for `prime`.
pub fn sylow_complement_product(group: &Group, prime: u64) -> Result<VertexSet> {
    let syl = group.sylow_decomposition()?;
    let k = syl
        .index_of(prime)
        .ok_or_else(|| Error::InvalidArgument(format!("{prime} does not divide |G| = {}", group.size())))?;
    let others: Vec<usize> = (0..syl.rank()).filter(|&i| i != k).collect();
    Ok(syl.product_of(&others))
}

fn check_divisor(m: &CyclicSubgroup, d: u64) -> Result<()> {
    if d == 0 || m.order % d != 0 {
        return invalid(format!("{d} does not divide |M| = {}", m.order));
    }
    Ok(())
}

/// Elements of `m` of order exactly `d`.
pub fn elements_of_exact_order(group: &Group, m: &CyclicSubgroup, d: u64) -> Result<VertexSet> {
    check_divisor(m, d)?;
    Ok(VertexSet::from_indices(
        group.size(),
        m.elements.iter().filter(|&x| group.element_order(x) == d),
    ))
}

/// Elements of `m` whose order divides `d`: the subgroup of `m` of order `d`.
pub fn elements_of_dividing_order(group: &Group, m: &CyclicSubgroup, d: u64) -> Result<VertexSet> {
    check_divisor(m, d)?;
    Ok(VertexSet::from_indices(
        group.size(),
        m.elements.iter().filter(|&x| d % group.element_order(x) == 0),
    ))
}

/// Parameters of `|M| = 2^m p2^n2 p3^n3` for the three-prime cut construction.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GammaParams {
    pub m: u32,
    pub p2: u64,
    pub n2: u32,
    pub p3: u64,
    pub n3: u32,
}

#[derive(Debug, Clone)]
pub struct GammaSet {
    pub set: VertexSet,
    /// Elements of `M` of order `2^m p2^n2`: the small side left by removing `set`.
    pub side: VertexSet,
    pub params: GammaParams,
}

pub fn gamma_cardinality(p: GammaParams) -> u64 {
    let order = 2u64.pow(p.m) * p.p2.pow(p.n2) * p.p3.pow(p.n3);
    euler_phi(order)
        + 2u64.pow(p.m - 1) * p.p2.pow(p.n2 - 1) * ((p.p2 - 1) * p.p3.pow(p.n3 - 1) + 2)
}

/// Cut-set of `P(G)` inside a maximal cyclic `M` for an abelian `G` with three
/// prime divisors `2 < p2 < p3`, non-cyclic Sylow 2-subgroup and cyclic
/// Sylow `p2`-, `p3`-subgroups:
///
/// `Γ(M) = ⋃_{j=1..n3} E(M, 2^m p2^n2 p3^j) ∪ S(M, 2^m p2^(n2-1)) ∪ S(M, 2^(m-1) p2^n2)`
///
/// where `E` and `S` are the exact-order and dividing-order subsets of `M`.
/// The size is checked against its closed form before returning.
pub fn gamma_set(group: &Group, m: &CyclicSubgroup) -> Result<GammaSet> {
    if group.abelian_spec().is_none() {
        return unsupported("gamma set needs a structured abelian group");
    }
    let syl = group.sylow_decomposition()?;
    if syl.rank() != 3 || syl.primes()[0] != 2 {
        return unsupported("gamma set needs |G| = 2^a p2^b p3^c");
    }
    if syl.is_cyclic(0) || !syl.is_cyclic(1) || !syl.is_cyclic(2) {
        return unsupported("gamma set needs P1 non-cyclic and P2, P3 cyclic");
    }
    if !m.is_maximal {
        return invalid("gamma set needs a maximal cyclic subgroup");
    }
    let (p2, p3) = (syl.primes()[1], syl.primes()[2]);
    let (n2, n3) = (syl.exponents()[1], syl.exponents()[2]);
    let two_exp = valuation(m.order, 2);
    if two_exp == 0 || m.order != 2u64.pow(two_exp) * p2.pow(n2) * p3.pow(n3) {
        return unsupported(format!("|M| = {} is not of the form 2^m p2^n2 p3^n3", m.order));
    }
    let params = GammaParams {
        m: two_exp,
        p2,
        n2,
        p3,
        n3,
    };
    let head = 2u64.pow(two_exp) * p2.pow(n2);
    let mut set = VertexSet::new(group.size());
    for j in 1..=n3 {
        set.union_with(&elements_of_exact_order(group, m, head * p3.pow(j))?);
    }
    set.union_with(&elements_of_dividing_order(group, m, 2u64.pow(two_exp) * p2.pow(n2 - 1))?);
    set.union_with(&elements_of_dividing_order(group, m, 2u64.pow(two_exp - 1) * p2.pow(n2))?);
    let expected = gamma_cardinality(params);
    if set.len() as u64 != expected {
        return Err(Error::Inconsistent(format!(
            "|Γ(M)| = {} but closed form gives {expected}",
            set.len()
        )));
    }
    let side = elements_of_exact_order(group, m, head)?;
    Ok(GammaSet { set, side, params })
}

/// A maximal cyclic subgroup of least order, ties to the least generator.
pub fn min_order_maximal_cyclic(group: &Group) -> CyclicSubgroup {
    maximal_cyclic_subgroups(group)
        .into_iter()
        .min_by_key(|m| (m.order, m.generator))
        .expect("every finite group has a maximal cyclic subgroup")
}

fn check_witness_input(group: &Group, m: &CyclicSubgroup, alpha: Element) -> Result<()> {
    if !m.is_maximal {
        return invalid("witness search needs a maximal cyclic subgroup");
    }
    if !m.contains(alpha) || group.element_order(alpha) == m.order {
        return invalid(format!("{alpha} is not a non-generator of M"));
    }
    Ok(())
}

/// Least-index `β ∉ M` with `α ∈ <β>`, by exhaustive search.
pub fn external_generator_witness(group: &Group, m: &CyclicSubgroup, alpha: Element) -> Result<Element> {
    check_witness_input(group, m, alpha)?;
    (0..group.size())
        .find(|&b| !m.contains(b) && group.cyclic_closure(b).contains(alpha))
        .ok_or_else(|| {
            Error::WitnessNotFound(format!(
                "no element outside M generates a subgroup containing {alpha}; some Sylow subgroup is cyclic"
            ))
        })
}

/// Explicit witness for abelian groups whose Sylow subgroups are all
/// non-cyclic. Writing `M = <w_1> ... <w_r>` by Sylow components and
/// `α = Π w_i^{m_i}`:
/// - `α = 1`: any element outside `M`;
/// - some `m_j = 0`: `u_j α`, with `u_j` of order `p_j` outside `M`;
/// - otherwise pick `i` with `p_i | m_i` and solve `p_i k_j ≡ m_j (mod |w_j|)`,
///   giving `β = u_i w_i^{m_i/p_i} Π_{j≠i} w_j^{k_j}` with `β^{p_i} = α`.
pub fn external_generator_witness_constructive(
    group: &Group,
    m: &CyclicSubgroup,
    alpha: Element,
) -> Result<Element> {
    check_witness_input(group, m, alpha)?;
    if !group.is_abelian() {
        return unsupported("constructive witness needs an abelian group");
    }
    let syl = group.sylow_decomposition()?;
    if !syl.all_noncyclic() {
        return Err(Error::WitnessNotFound(
            "constructive witness needs every Sylow subgroup non-cyclic".into(),
        ));
    }
    let outside = |x: Element| !m.contains(x);
    if alpha == 0 {
        return (0..group.size())
            .find(|&x| outside(x))
            .ok_or_else(|| Error::Inconsistent("M is the whole group".into()));
    }
    let r = syl.rank();
    let gen = m.generator;
    let w: Vec<Element> = (0..r).map(|i| syl.project(gen, i)).collect();
    // u_i: order p_i, in P_i but outside M
    let mut u = Vec::with_capacity(r);
    for i in 0..r {
        let p = syl.primes()[i];
        let ui = syl
            .subgroup(i)
            .iter()
            .find(|&x| group.element_order(x) == p && outside(x))
            .ok_or_else(|| Error::Inconsistent(format!("no order-{p} element of P_{p} outside M")))?;
        u.push(ui);
    }
    // discrete logs m_i with proj_i(α) = w_i^{m_i}
    let mut exps = Vec::with_capacity(r);
    for i in 0..r {
        let target = syl.project(alpha, i);
        let wi_order = group.element_order(w[i]);
        let e = (0..wi_order)
            .find(|&k| group.pow(w[i], k) == target)
            .ok_or_else(|| Error::Inconsistent("α has a component outside M".into()))?;
        exps.push(e);
    }
    if let Some(j) = exps.iter().position(|&e| e == 0) {
        return Ok(group.mul(u[j], alpha));
    }
    let i = (0..r)
        .find(|&i| exps[i] % syl.primes()[i] == 0)
        .ok_or_else(|| Error::Inconsistent("α generates M".into()))?;
    let pi = syl.primes()[i];
    let mut beta = group.mul(u[i], group.pow(w[i], exps[i] / pi));
    for j in (0..r).filter(|&j| j != i) {
        let kj = solve_congruence(pi, exps[j], group.element_order(w[j]))?;
        beta = group.mul(beta, group.pow(w[j], kj));
    }
    Ok(beta)
}
