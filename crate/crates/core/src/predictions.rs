//! Closed-form connectivity values for power graphs of cyclic, nilpotent and
//! abelian groups, each gated by the hypotheses it depends on.
//!
//! A formula whose hypotheses fail yields a non-applicable [`Prediction`]
//! rather than a value, and every gate evaluated is kept in the
//! hypothesis trace.

use std::fmt;

use crate::error::{invalid, Result};
use crate::number_theory::{euler_phi, factorize, is_prime, valuation};

/// `n = Π p_i^{n_i}` with strictly increasing primes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factorization {
    pairs: Vec<(u64, u32)>,
}

impl Factorization {
    pub fn of(n: u64) -> Result<Self> {
        if n == 0 {
            return invalid("cannot factor 0");
        }
        Ok(Factorization { pairs: factorize(n) })
    }

    pub fn from_pairs(pairs: Vec<(u64, u32)>) -> Result<Self> {
        for w in pairs.windows(2) {
            if w[0].0 >= w[1].0 {
                return invalid("primes must be strictly increasing");
            }
        }
        if pairs.iter().any(|&(p, e)| !is_prime(p) || e == 0) {
            return invalid("factorization needs primes with positive exponents");
        }
        Ok(Factorization { pairs })
    }

    pub fn pairs(&self) -> &[(u64, u32)] {
        &self.pairs
    }

    pub fn rank(&self) -> usize {
        self.pairs.len()
    }

    pub fn primes(&self) -> Vec<u64> {
        self.pairs.iter().map(|p| p.0).collect()
    }

    pub fn value(&self) -> u64 {
        self.pairs.iter().map(|&(p, e)| p.pow(e)).product()
    }

    fn prime_power(&self, i: usize) -> u64 {
        let (p, e) = self.pairs[i];
        p.pow(e)
    }

    fn index_of(&self, p: u64) -> Option<usize> {
        self.pairs.iter().position(|q| q.0 == p)
    }
}

impl fmt::Display for Factorization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .pairs
            .iter()
            .map(|&(p, e)| if e == 1 { p.to_string() } else { format!("{p}^{e}") })
            .collect();
        write!(f, "{}", parts.join("·"))
    }
}

/// What a formula says about the set of minimum cut-sets.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CutsetClaim {
    /// Exactly one minimum cut-set. When known, it is the product of the
    /// Sylow subgroups for the listed primes.
    Unique { sylow_product: Option<Vec<u64>> },
    /// Exactly this many minimum cut-sets.
    Count(u64),
    /// Uniqueness is not asserted and may fail.
    NotUniquePossible,
    Unknown,
}

impl fmt::Display for CutsetClaim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CutsetClaim::Unique { sylow_product: None } => write!(f, "unique"),
            CutsetClaim::Unique { sylow_product: Some(ps) } => {
                let names: Vec<String> = ps.iter().map(|p| format!("P_{p}")).collect();
                write!(f, "unique:{}", names.join(""))
            }
            CutsetClaim::Count(c) => write!(f, "count:{c}"),
            CutsetClaim::NotUniquePossible => write!(f, "not-unique-possible"),
            CutsetClaim::Unknown => write!(f, "unknown"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Condition {
    pub cond: String,
    pub holds: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Prediction {
    pub applicable: bool,
    pub kappa: Option<u64>,
    pub case_tag: String,
    pub predicted_min_cutsets: CutsetClaim,
    pub hypothesis_trace: Vec<Condition>,
}

impl Prediction {
    fn new() -> Self {
        Prediction {
            applicable: false,
            kappa: None,
            case_tag: String::new(),
            predicted_min_cutsets: CutsetClaim::Unknown,
            hypothesis_trace: Vec::new(),
        }
    }

    fn check(&mut self, cond: impl Into<String>, holds: bool) -> bool {
        self.hypothesis_trace.push(Condition {
            cond: cond.into(),
            holds,
        });
        holds
    }

    fn conclude(mut self, tag: &str, kappa: u64, claim: CutsetClaim) -> Self {
        self.applicable = true;
        self.kappa = Some(kappa);
        self.case_tag = tag.into();
        self.predicted_min_cutsets = claim;
        self
    }

    fn skip(mut self, tag: &str) -> Self {
        self.applicable = false;
        self.kappa = None;
        self.case_tag = tag.into();
        self.predicted_min_cutsets = CutsetClaim::Unknown;
        self
    }
}

fn squarefree_product(primes: &[u64]) -> u64 {
    primes.iter().product()
}

/// `2 φ(p_1 ... p_t) > p_1 ... p_t`.
pub fn condition_two_phi(primes: &[u64]) -> bool {
    let prod = squarefree_product(primes);
    2 * euler_phi(prod) > prod
}

/// `(t + 1) φ(q_1 ... q_t) >= q_1 ... q_t` for increasing primes; returns
/// whether it holds and whether it is an equality.
pub fn inequality_t_plus_1(primes: &[u64]) -> (bool, bool) {
    let prod = squarefree_product(primes);
    let lhs = (primes.len() as u64 + 1) * euler_phi(prod);
    (lhs >= prod, lhs == prod)
}

/// `(φ(n) + 1, equality)`, where equality holds iff `n` is prime or a product
/// of two distinct primes. The bound counts the identity and the generators,
/// which lie in every cut-set. Only meaningful when `n` has two or more prime
/// divisors: for prime powers the graph is complete with connectivity `n - 1`.
pub fn kappa_cyclic_lower_bound(n: u64) -> Result<(u64, bool)> {
    if n < 2 {
        return invalid("lower bound needs n >= 2");
    }
    let f = factorize(n);
    let squarefree = f.iter().all(|&(_, e)| e == 1);
    Ok((euler_phi(n) + 1, squarefree && f.len() <= 2))
}

/// Connectivity of the power graph of the cyclic group of order `n`.
pub fn kappa_cyclic(n: u64) -> Result<Prediction> {
    if n < 2 {
        return invalid(format!("kappa_cyclic needs n >= 2, got {n}"));
    }
    let f = Factorization::of(n)?;
    let r = f.rank();
    let mut pred = Prediction::new();
    let phi = euler_phi(n);
    let p: Vec<u64> = f.primes();
    let e: Vec<u32> = f.pairs().iter().map(|x| x.1).collect();
    let reduced = |i: usize| p[i].pow(e[i] - 1);

    if pred.check("r = 1 (prime power order, complete graph)", r == 1) {
        return Ok(pred.conclude("thm11-complete", n - 1, CutsetClaim::Count(0)));
    }
    let claim = if pred.check("(r, p1) = (2, 2)", r == 2 && p[0] == 2) {
        CutsetClaim::Count(e[1] as u64)
    } else {
        CutsetClaim::Unique { sylow_product: None }
    };
    match r {
        2 => {
            pred.check("r = 2", true);
            let k = phi + reduced(0) * reduced(1);
            Ok(pred.conclude("thm11-ii", k, claim))
        }
        3 => {
            pred.check("r = 3", true);
            if pred.check("p1 = 2", p[0] == 2) {
                let k = phi
                    + 2u64.pow(e[0] - 1) * reduced(1) * ((p[1] - 1) * reduced(2) + 2);
                Ok(pred.conclude("thm11-iii-a", k, claim))
            } else {
                let k = phi + reduced(0) * reduced(1) * reduced(2) * (p[0] + p[1] - 1);
                Ok(pred.conclude("thm11-iii-b", k, claim))
            }
        }
        _ => {
            let head = &p[..r - 1];
            if pred.check(
                format!("2φ({0}) > {0}", squarefree_product(head)),
                condition_two_phi(head),
            ) {
                let prod = squarefree_product(head);
                let scale: u64 = (0..r).map(reduced).product();
                let k = phi + scale * (prod - euler_phi(prod));
                Ok(pred.conclude("thm11-i", k, claim))
            } else {
                Ok(pred.skip("thm11-i"))
            }
        }
    }
}

fn require_noncyclic_exponent(f: &Factorization, i: usize) -> Result<()> {
    if f.pairs()[i].1 < 2 {
        return invalid(format!(
            "a non-cyclic Sylow {}-subgroup needs exponent >= 2",
            f.pairs()[i].0
        ));
    }
    Ok(())
}

/// Nilpotent `G` with exactly one non-cyclic Sylow subgroup `P_k`: if
/// `p_k >= r + 1` or `2φ(p_1 ... p_{r-1}) > p_1 ... p_{r-1}`, the product `Q` of
/// the other Sylow subgroups is the only minimum cut-set and
/// `κ = n / p_k^{n_k}`. The theorem excludes `P_k` generalized quaternion when
/// `k = 1` and `p_1 = 2`.
pub fn kappa_nilpotent_thm12(
    f: &Factorization,
    noncyclic_prime: u64,
    pk_generalized_quaternion: bool,
) -> Result<Prediction> {
    let r = f.rank();
    if r < 2 {
        return invalid("theorem needs at least two prime divisors");
    }
    let k = f
        .index_of(noncyclic_prime)
        .ok_or_else(|| crate::error::Error::InvalidArgument(format!("{noncyclic_prime} does not divide {}", f.value())))?;
    require_noncyclic_exponent(f, k)?;
    let primes = f.primes();
    let mut pred = Prediction::new();
    pred.check("r >= 2", true);
    let excluded = k == 0 && primes[0] == 2 && pk_generalized_quaternion;
    if !pred.check("P_k is not generalized quaternion when (k, p1) = (1, 2)", !excluded) {
        return Ok(pred.skip("thm12-excluded-quaternion"));
    }
    let big_prime = pred.check(format!("p_k = {noncyclic_prime} >= r + 1 = {}", r + 1), noncyclic_prime > r as u64);
    let head = &primes[..r - 1];
    let two_phi = pred.check(
        format!("2φ({0}) > {0}", squarefree_product(head)),
        condition_two_phi(head),
    );
    if !(big_prime || two_phi) {
        return Ok(pred.skip("thm12"));
    }
    let kappa = f.value() / f.prime_power(k);
    let others: Vec<u64> = primes.iter().copied().filter(|&p| p != noncyclic_prime).collect();
    Ok(pred.conclude(
        "thm12",
        kappa,
        CutsetClaim::Unique {
            sylow_product: Some(others),
        },
    ))
}

/// Structural inputs for the two-prime abelian formulas.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Thm13Structure {
    pub p1_noncyclic: bool,
    pub p2_noncyclic: bool,
    pub p1_elementary_abelian: bool,
    /// Order of a maximal cyclic subgroup of least order.
    pub min_maximal_cyclic_order: u64,
    /// Whether some maximal cyclic subgroup has order `p1 p2`.
    pub has_maximal_cyclic_p1p2: bool,
}

/// Abelian `G` of order `p1^{n1} p2^{n2}`.
pub fn kappa_abelian_thm13(f: &Factorization, s: Thm13Structure) -> Result<Prediction> {
    if f.rank() != 2 {
        return invalid(format!("theorem needs exactly two prime divisors, got {}", f.rank()));
    }
    if !s.p1_noncyclic && !s.p2_noncyclic {
        return invalid("theorem needs a non-cyclic group");
    }
    for (i, nc) in [s.p1_noncyclic, s.p2_noncyclic].into_iter().enumerate() {
        if nc {
            require_noncyclic_exponent(f, i)?;
        }
    }
    let (p1, p2) = (f.pairs()[0].0, f.pairs()[1].0);
    let (sz1, sz2) = (f.prime_power(0), f.prime_power(1));
    let mut pred = Prediction::new();
    pred.check("r = 2", true);
    let exactly_one = pred.check("exactly one Sylow subgroup non-cyclic", s.p1_noncyclic != s.p2_noncyclic);
    if exactly_one {
        let (other_prime, kappa) = if s.p1_noncyclic { (p2, sz2) } else { (p1, sz1) };
        let unique = pred.check(
            "p1 >= 3 or (p1 = 2 and P2 non-cyclic)",
            p1 >= 3 || s.p2_noncyclic,
        );
        let claim = if unique {
            CutsetClaim::Unique {
                sylow_product: Some(vec![other_prime]),
            }
        } else {
            CutsetClaim::NotUniquePossible
        };
        return Ok(pred.conclude("thm13-i", kappa, claim));
    }
    let c = s.min_maximal_cyclic_order;
    let c_tilde = c - euler_phi(c);
    let kappa = sz1.min(sz2).min(c_tilde);
    if pred.check("p1 >= 3", p1 >= 3)
        && pred.check(format!("some maximal cyclic subgroup has order {}", p1 * p2), s.has_maximal_cyclic_p1p2)
    {
        return Ok(pred.conclude("thm13-ii", kappa, CutsetClaim::Unknown));
    }
    if pred.check("P1 elementary abelian", s.p1_elementary_abelian) {
        return Ok(pred.conclude("thm13-iii", kappa, CutsetClaim::Unknown));
    }
    Ok(pred.skip("thm13"))
}

/// Structural inputs for the three-prime abelian formulas.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Thm14Structure {
    pub noncyclic_prime: u64,
    pub min_maximal_cyclic_order: u64,
}

/// Abelian `G` of order `p1^{n1} p2^{n2} p3^{n3}` with exactly one non-cyclic
/// Sylow subgroup.
pub fn kappa_abelian_thm14(f: &Factorization, s: Thm14Structure) -> Result<Prediction> {
    if f.rank() != 3 {
        return invalid(format!("theorem needs exactly three prime divisors, got {}", f.rank()));
    }
    let k = f
        .index_of(s.noncyclic_prime)
        .ok_or_else(|| crate::error::Error::InvalidArgument(format!("{} does not divide {}", s.noncyclic_prime, f.value())))?;
    require_noncyclic_exponent(f, k)?;
    let primes = f.primes();
    let mut pred = Prediction::new();
    pred.check("r = 3", true);
    pred.check("exactly one Sylow subgroup non-cyclic", true);
    let p1_is_two = pred.check("p1 = 2", primes[0] == 2);
    let others: Vec<usize> = (0..3).filter(|&i| i != k).collect();
    let product_size: u64 = others.iter().map(|&i| f.prime_power(i)).product();
    let other_primes: Vec<u64> = others.iter().map(|&i| primes[i]).collect();
    if p1_is_two && pred.check("P1 non-cyclic", k == 0) {
        let order = s.min_maximal_cyclic_order;
        let c = valuation(order, 2);
        if c == 0 || order != 2u64.pow(c) * f.prime_power(1) * f.prime_power(2) {
            return invalid(format!("|C| = {order} is not 2^c p2^n2 p3^n3"));
        }
        let kappa_c = kappa_cyclic(order)?
            .kappa
            .expect("three prime divisors always applicable");
        let big_c = pred.check(format!("c = {c} > 1"), c > 1);
        let kappa = if big_c { product_size } else { kappa_c };
        debug_assert_eq!(kappa, product_size.min(kappa_c));
        return Ok(pred.conclude(
            if big_c { "thm14-i-c>1" } else { "thm14-i-c=1" },
            kappa,
            CutsetClaim::Unknown,
        ));
    }
    let tag = if p1_is_two { "thm14-ii" } else { "thm14-iii" };
    Ok(pred.conclude(
        tag,
        product_size,
        CutsetClaim::Unique {
            sylow_product: Some(other_primes),
        },
    ))
}

pub use crate::cyclic::gamma_cardinality;
