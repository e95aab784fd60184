//! Finite groups with indexed elements.
//!
//! Two backings are supported. Structured abelian groups are direct products
//! of prime-power cyclic factors and store elements as mixed-radix tuples;
//! the first factor of the canonical spec is the least significant digit.
//! Cayley-table groups carry an explicit multiplication table and are used
//! for the dihedral and generalized quaternion families. In both cases the
//! identity is element 0.

use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{invalid, unsupported, Error, Result};
use crate::number_theory::{crt_idempotent, factorize, gcd, is_prime, lcm, prime_power};
use crate::vertex_set::VertexSet;

/// Index of a group element; 0 is always the identity.
pub type Element = usize;

const FULL_ASSOCIATIVITY_LIMIT: usize = 64;
const SAMPLED_TRIPLES: usize = 20_000;

/// Direct product of cyclic groups of prime-power order, kept sorted by
/// `(prime, exponent)` so equal multisets compare equal.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AbelianSpec {
    factors: Vec<(u64, u32)>,
}

impl AbelianSpec {
    pub fn new(mut factors: Vec<(u64, u32)>) -> Result<Self> {
        if factors.is_empty() {
            return invalid("abelian spec needs at least one factor");
        }
        for &(p, e) in &factors {
            if !is_prime(p) {
                return invalid(format!("factor base {p} is not prime"));
            }
            if e == 0 {
                return invalid(format!("factor {p}^0 has exponent 0"));
            }
        }
        factors.sort_unstable();
        let spec = AbelianSpec { factors };
        spec.checked_order()
            .ok_or_else(|| Error::InvalidArgument("group order overflows u64".into()))?;
        Ok(spec)
    }

    /// Spec of the cyclic group of order `n >= 2`.
    pub fn cyclic(n: u64) -> Result<Self> {
        if n < 2 {
            return invalid(format!("cyclic spec needs n >= 2, got {n}"));
        }
        Self::new(factorize(n))
    }

    pub fn factors(&self) -> &[(u64, u32)] {
        &self.factors
    }

    fn checked_order(&self) -> Option<u64> {
        self.factors
            .iter()
            .try_fold(1u64, |acc, &(p, e)| acc.checked_mul(p.checked_pow(e)?))
    }

    pub fn order(&self) -> u64 {
        self.checked_order().expect("validated at construction")
    }

    pub fn primes(&self) -> Vec<u64> {
        let mut ps: Vec<u64> = self.factors.iter().map(|f| f.0).collect();
        ps.dedup();
        ps
    }

    /// Exponents of the factors belonging to `p`, ascending.
    pub fn exponents_of(&self, p: u64) -> Vec<u32> {
        self.factors
            .iter()
            .filter(|f| f.0 == p)
            .map(|f| f.1)
            .collect()
    }

    pub fn is_cyclic(&self) -> bool {
        self.primes().iter().all(|&p| self.exponents_of(p).len() == 1)
    }

    /// `C2xC2xC3` style label.
    pub fn label(&self) -> String {
        self.factors
            .iter()
            .map(|&(p, e)| format!("C{}", p.pow(e)))
            .collect::<Vec<_>>()
            .join("x")
    }
}

impl fmt::Display for AbelianSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .factors
            .iter()
            .map(|(p, e)| format!("{p}^{e}"))
            .collect();
        write!(f, "{}", parts.join(","))
    }
}

#[derive(Debug, Clone)]
enum Backing {
    Abelian {
        spec: AbelianSpec,
        moduli: Vec<u64>,
    },
    Table {
        table: Vec<u32>,
    },
}

#[derive(Debug, Clone)]
pub struct Group {
    name: String,
    size: usize,
    backing: Backing,
    orders: Vec<u64>,
    inverses: Vec<Element>,
}

impl Group {
    /// Cyclic group of order `n`, realised as the product of its prime-power
    /// parts. `make_cyclic(1)` is the trivial group.
    pub fn make_cyclic(n: u64) -> Result<Group> {
        if n == 0 {
            return invalid("cyclic group of order 0");
        }
        if n == 1 {
            return Ok(Group {
                name: "C1".into(),
                size: 1,
                backing: Backing::Abelian {
                    spec: AbelianSpec { factors: vec![] },
                    moduli: vec![],
                },
                orders: vec![1],
                inverses: vec![0],
            });
        }
        let mut g = Self::make_abelian(AbelianSpec::cyclic(n)?)?;
        g.name = format!("C{n}");
        Ok(g)
    }

    pub fn make_abelian(spec: AbelianSpec) -> Result<Group> {
        let size = spec.order();
        if size > u32::MAX as u64 {
            return invalid(format!("group of order {size} is too large to index"));
        }
        let size = size as usize;
        let moduli: Vec<u64> = spec.factors.iter().map(|&(p, e)| p.pow(e)).collect();
        let mut orders = Vec::with_capacity(size);
        let mut inverses = Vec::with_capacity(size);
        let mut digits = vec![0u64; moduli.len()];
        for _ in 0..size {
            let ord = digits
                .iter()
                .zip(&moduli)
                .fold(1, |acc, (&c, &m)| lcm(acc, m / gcd(c, m)));
            orders.push(ord);
            let inv: Vec<u64> = digits
                .iter()
                .zip(&moduli)
                .map(|(&c, &m)| (m - c) % m)
                .collect();
            inverses.push(encode(&inv, &moduli));
            // increment mixed-radix counter
            for (d, &m) in digits.iter_mut().zip(&moduli) {
                *d += 1;
                if *d < m {
                    break;
                }
                *d = 0;
            }
        }
        let name = spec.label();
        Ok(Group {
            name,
            size,
            backing: Backing::Abelian { spec, moduli },
            orders,
            inverses,
        })
    }

    /// Generalized quaternion group of order `2^m`, `m >= 3`:
    /// `<a, b | a^(2^(m-1)) = 1, b^2 = a^(2^(m-2)), b a b^-1 = a^-1>`.
    /// Element `a^i b^j` has index `i + j * 2^(m-1)`.
    pub fn make_generalized_quaternion(order: u64) -> Result<Group> {
        match prime_power(order) {
            Some((2, m)) if m >= 3 => {}
            _ => return invalid(format!("generalized quaternion order must be 2^m, m >= 3; got {order}")),
        }
        let n = (order / 2) as usize;
        let half = n / 2;
        let size = order as usize;
        let mut table = vec![0u32; size * size];
        for x in 0..size {
            let (i, j) = (x % n, x / n);
            for y in 0..size {
                let (k, l) = (y % n, y / n);
                // a^i b^j a^k b^l, using b a^k = a^-k b
                let (mut e, mut bj) = if j == 0 { (i + k, l) } else { (i + n - k, 1 + l) };
                if bj == 2 {
                    e += half;
                    bj = 0;
                }
                table[x * size + y] = ((e % n) + bj * n) as u32;
            }
        }
        Self::from_table_unchecked(format!("Q{order}"), size, table)
    }

    /// Dihedral group of order `2n`, `n >= 3`: `<r, s | r^n = s^2 = 1, s r s = r^-1>`.
    /// Element `r^i s^j` has index `i + j * n`.
    pub fn make_dihedral(order: u64) -> Result<Group> {
        if order % 2 != 0 || order < 6 {
            return invalid(format!("dihedral order must be even and >= 6, got {order}"));
        }
        let n = (order / 2) as usize;
        let size = order as usize;
        let mut table = vec![0u32; size * size];
        for x in 0..size {
            let (i, j) = (x % n, x / n);
            for y in 0..size {
                let (k, l) = (y % n, y / n);
                let e = if j == 0 { i + k } else { i + n - k };
                table[x * size + y] = ((e % n) + ((j + l) % 2) * n) as u32;
            }
        }
        Self::from_table_unchecked(format!("D{order}"), size, table)
    }

    /// Group from an explicit row-major multiplication table with identity at
    /// index 0. Associativity is checked exhaustively up to 64 elements and on
    /// a fixed pseudo-random sample of triples beyond that.
    pub fn from_table(name: impl Into<String>, size: usize, table: Vec<u32>) -> Result<Group> {
        if size == 0 || table.len() != size * size {
            return invalid("table must be size*size with size >= 1");
        }
        if table.iter().any(|&v| v as usize >= size) {
            return invalid("table entry out of range");
        }
        for x in 0..size {
            if table[x] as usize != x || table[x * size] as usize != x {
                return invalid("element 0 is not the identity");
            }
        }
        for x in 0..size {
            let mut row = VertexSet::new(size);
            let mut col = VertexSet::new(size);
            for y in 0..size {
                row.insert(table[x * size + y] as usize);
                col.insert(table[y * size + x] as usize);
            }
            if row.len() != size || col.len() != size {
                return invalid("table is not a latin square");
            }
        }
        let mul = |a: usize, b: usize| table[a * size + b] as usize;
        let assoc = |a: usize, b: usize, c: usize| mul(mul(a, b), c) == mul(a, mul(b, c));
        if size <= FULL_ASSOCIATIVITY_LIMIT {
            for a in 0..size {
                for b in 0..size {
                    for c in 0..size {
                        if !assoc(a, b, c) {
                            return invalid(format!("associativity fails at ({a},{b},{c})"));
                        }
                    }
                }
            }
        } else {
            let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
            for _ in 0..SAMPLED_TRIPLES {
                let (a, b, c) = (
                    rng.gen_range(0..size),
                    rng.gen_range(0..size),
                    rng.gen_range(0..size),
                );
                if !assoc(a, b, c) {
                    return invalid(format!("associativity fails at ({a},{b},{c})"));
                }
            }
        }
        Self::from_table_unchecked(name.into(), size, table)
    }

    fn from_table_unchecked(name: String, size: usize, table: Vec<u32>) -> Result<Group> {
        let mut inverses = vec![0; size];
        for x in 0..size {
            inverses[x] = (0..size)
                .find(|&y| table[x * size + y] == 0)
                .ok_or_else(|| Error::InvalidArgument(format!("element {x} has no inverse")))?;
        }
        let mut orders = vec![0; size];
        for (x, o) in orders.iter_mut().enumerate() {
            let (mut k, mut cur) = (1u64, x);
            while cur != 0 {
                cur = table[cur * size + x] as usize;
                k += 1;
            }
            *o = k;
        }
        Ok(Group {
            name,
            size,
            backing: Backing::Table { table },
            orders,
            inverses,
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn order(&self) -> u64 {
        self.size as u64
    }

    pub fn identity(&self) -> Element {
        0
    }

    pub fn abelian_spec(&self) -> Option<&AbelianSpec> {
        match &self.backing {
            Backing::Abelian { spec, .. } => Some(spec),
            Backing::Table { .. } => None,
        }
    }

    pub fn is_table_backed(&self) -> bool {
        matches!(self.backing, Backing::Table { .. })
    }

    pub fn mul(&self, a: Element, b: Element) -> Element {
        match &self.backing {
            Backing::Table { table } => table[a * self.size + b] as usize,
            Backing::Abelian { moduli, .. } => {
                let (mut a, mut b) = (a as u64, b as u64);
                let (mut out, mut stride) = (0u64, 1u64);
                for &m in moduli {
                    let d = (a % m + b % m) % m;
                    out += d * stride;
                    stride *= m;
                    a /= m;
                    b /= m;
                }
                out as usize
            }
        }
    }

    pub fn inverse(&self, a: Element) -> Element {
        self.inverses[a]
    }

    pub fn pow(&self, a: Element, k: u64) -> Element {
        let k = k % self.orders[a];
        let (mut base, mut e, mut acc) = (a, k, 0);
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    /// Least `k >= 1` with `a^k = 1`.
    pub fn element_order(&self, a: Element) -> u64 {
        self.orders[a]
    }

    pub fn orders(&self) -> &[u64] {
        &self.orders
    }

    /// Mixed-radix digits of an element of a structured abelian group.
    pub fn components(&self, a: Element) -> Option<Vec<u64>> {
        match &self.backing {
            Backing::Abelian { moduli, .. } => Some(decode(a as u64, moduli)),
            Backing::Table { .. } => None,
        }
    }

    /// Inverse of [`Group::components`]; digits are reduced modulo their factor.
    pub fn element_from_components(&self, digits: &[u64]) -> Result<Element> {
        match &self.backing {
            Backing::Abelian { moduli, .. } if digits.len() == moduli.len() => {
                let reduced: Vec<u64> = digits.iter().zip(moduli).map(|(d, m)| d % m).collect();
                Ok(encode(&reduced, moduli))
            }
            Backing::Abelian { moduli, .. } => invalid(format!(
                "expected {} components, got {}",
                moduli.len(),
                digits.len()
            )),
            Backing::Table { .. } => unsupported("components exist only for structured abelian groups"),
        }
    }

    /// `{a^k : k >= 0}`.
    pub fn cyclic_closure(&self, a: Element) -> VertexSet {
        let mut s = VertexSet::new(self.size);
        let mut cur = 0;
        loop {
            s.insert(cur);
            cur = self.mul(cur, a);
            if cur == 0 {
                break;
            }
        }
        s
    }

    /// Generators of `<a>`: the elements of `<a>` with the same order as `a`.
    pub fn generator_class(&self, a: Element) -> VertexSet {
        let o = self.orders[a];
        let mut s = VertexSet::new(self.size);
        let mut cur = 0;
        loop {
            if self.orders[cur] == o {
                s.insert(cur);
            }
            cur = self.mul(cur, a);
            if cur == 0 {
                break;
            }
        }
        s
    }

    /// All generator classes, ordered by least element. Each class corresponds
    /// to exactly one cyclic subgroup.
    pub fn generator_classes(&self) -> Vec<VertexSet> {
        let mut seen = VertexSet::new(self.size);
        let mut out = Vec::new();
        for a in 0..self.size {
            if seen.contains(a) {
                continue;
            }
            let c = self.generator_class(a);
            seen.union_with(&c);
            out.push(c);
        }
        out
    }

    pub fn is_abelian(&self) -> bool {
        match &self.backing {
            Backing::Abelian { .. } => true,
            Backing::Table { .. } => (0..self.size)
                .all(|a| (a + 1..self.size).all(|b| self.mul(a, b) == self.mul(b, a))),
        }
    }

    pub fn is_cyclic(&self) -> bool {
        self.orders.iter().any(|&o| o == self.size as u64)
    }

    /// Sylow decomposition of a nilpotent group. Cayley-table groups are
    /// checked first: for every prime `p` the `p`-elements must form a single
    /// normal subgroup of the full Sylow order.
    pub fn sylow_decomposition(&self) -> Result<SylowDecomposition> {
        let fact = factorize(self.size as u64);
        let mut primes = Vec::new();
        let mut exponents = Vec::new();
        let mut subgroups = Vec::new();
        for &(p, e) in &fact {
            let mut set = VertexSet::new(self.size);
            for (x, &o) in self.orders.iter().enumerate() {
                if prime_power(o).map_or(o == 1, |(q, _)| q == p) {
                    set.insert(x);
                }
            }
            if self.is_table_backed() {
                let expected = p.pow(e) as usize;
                if set.len() != expected {
                    return unsupported(format!(
                        "{}: {} elements of {p}-power order, Sylow {p}-subgroup is not normal",
                        self.name,
                        set.len()
                    ));
                }
                if !self.is_normal_subgroup(&set) {
                    return unsupported(format!(
                        "{}: Sylow {p}-subgroup is not a normal subgroup",
                        self.name
                    ));
                }
            }
            primes.push(p);
            exponents.push(e);
            subgroups.push(set);
        }
        let projection: Vec<Vec<Element>> = (0..self.size)
            .map(|x| {
                let o = self.orders[x];
                primes
                    .iter()
                    .map(|&p| {
                        let pp = p.pow(crate::number_theory::valuation(o, p));
                        self.pow(x, crt_idempotent(o, pp))
                    })
                    .collect()
            })
            .collect();
        let mut cyclic = Vec::new();
        let mut elementary = Vec::new();
        let mut quaternion = Vec::new();
        for (i, set) in subgroups.iter().enumerate() {
            let p = primes[i];
            let size = set.len() as u64;
            let is_cyc = set.iter().any(|x| self.orders[x] == size);
            let commutes = set
                .iter()
                .all(|a| set.iter().all(|b| self.mul(a, b) == self.mul(b, a)));
            let exp_p = set.iter().all(|x| self.orders[x] <= p);
            let involutions = set.iter().filter(|&x| self.orders[x] == 2).count();
            cyclic.push(is_cyc);
            elementary.push(commutes && exp_p);
            quaternion.push(p == 2 && !is_cyc && involutions == 1);
        }
        Ok(SylowDecomposition {
            primes,
            exponents,
            subgroups,
            projection,
            cyclic,
            elementary,
            quaternion,
        })
    }

    /// Closed under multiplication and under conjugation by every element.
    pub fn is_normal_subgroup(&self, set: &VertexSet) -> bool {
        if !set.contains(0) {
            return false;
        }
        for a in set {
            for b in set {
                if !set.contains(self.mul(a, b)) {
                    return false;
                }
            }
        }
        for g in 0..self.size {
            let gi = self.inverse(g);
            for a in set {
                if !set.contains(self.mul(self.mul(g, a), gi)) {
                    return false;
                }
            }
        }
        true
    }

    pub fn is_nilpotent(&self) -> bool {
        self.sylow_decomposition().is_ok()
    }

    pub fn all_elements(&self) -> VertexSet {
        VertexSet::full(self.size)
    }
}

fn encode(digits: &[u64], moduli: &[u64]) -> Element {
    let (mut out, mut stride) = (0u64, 1u64);
    for (&d, &m) in digits.iter().zip(moduli) {
        out += d * stride;
        stride *= m;
    }
    out as usize
}

fn decode(mut x: u64, moduli: &[u64]) -> Vec<u64> {
    moduli
        .iter()
        .map(|&m| {
            let d = x % m;
            x /= m;
            d
        })
        .collect()
}

/// Sylow subgroups of a nilpotent group and the projection of every element
/// onto them. Projections are taken as the prime-power parts of each element,
/// which for a nilpotent group coincide with the direct-product coordinates.
#[derive(Debug, Clone)]
pub struct SylowDecomposition {
    primes: Vec<u64>,
    exponents: Vec<u32>,
    subgroups: Vec<VertexSet>,
    projection: Vec<Vec<Element>>,
    cyclic: Vec<bool>,
    elementary: Vec<bool>,
    quaternion: Vec<bool>,
}

impl SylowDecomposition {
    pub fn primes(&self) -> &[u64] {
        &self.primes
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exponents
    }

    pub fn rank(&self) -> usize {
        self.primes.len()
    }

    pub fn index_of(&self, p: u64) -> Option<usize> {
        self.primes.iter().position(|&q| q == p)
    }

    pub fn subgroup(&self, i: usize) -> &VertexSet {
        &self.subgroups[i]
    }

    pub fn subgroups(&self) -> &[VertexSet] {
        &self.subgroups
    }

    pub fn subgroup_order(&self, i: usize) -> u64 {
        self.primes[i].pow(self.exponents[i])
    }

    /// The `i`-th Sylow component of `g`.
    pub fn project(&self, g: Element, i: usize) -> Element {
        self.projection[g][i]
    }

    pub fn projections(&self, g: Element) -> &[Element] {
        &self.projection[g]
    }

    pub fn is_cyclic(&self, i: usize) -> bool {
        self.cyclic[i]
    }

    pub fn is_elementary_abelian(&self, i: usize) -> bool {
        self.elementary[i]
    }

    pub fn is_generalized_quaternion(&self, i: usize) -> bool {
        self.quaternion[i]
    }

    pub fn noncyclic_indices(&self) -> Vec<usize> {
        (0..self.rank()).filter(|&i| !self.cyclic[i]).collect()
    }

    pub fn all_noncyclic(&self) -> bool {
        self.cyclic.iter().all(|c| !c)
    }

    /// Product of the Sylow subgroups at the given indices, as an element set.
    pub fn product_of(&self, indices: &[usize]) -> VertexSet {
        let n = self.projection.len();
        let mut s = VertexSet::new(n);
        for g in 0..n {
            let ok = (0..self.rank())
                .all(|i| indices.contains(&i) || self.projection[g][i] == 0);
            if ok {
                s.insert(g);
            }
        }
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn order_histogram(g: &Group) -> std::collections::BTreeMap<u64, usize> {
        let mut h = std::collections::BTreeMap::new();
        for &o in g.orders() {
            *h.entry(o).or_insert(0) += 1;
        }
        h
    }

    #[test]
    fn cyclic_basics() {
        let c1 = Group::make_cyclic(1).unwrap();
        assert_eq!(c1.size(), 1);
        assert!(Group::make_cyclic(0).is_err());

        let c6 = Group::make_cyclic(6).unwrap();
        assert!((0..6).any(|g| c6.element_order(g) == 6));

        let c12 = Group::make_cyclic(12).unwrap();
        let h = order_histogram(&c12);
        assert_eq!(h[&12], 4);
        // canonical isomorphism k -> (k mod 4, k mod 3)
        let gen = c12.element_from_components(&[1, 1]).unwrap();
        assert_eq!(c12.element_order(gen), 12);
        for i in 0..12 {
            for j in 0..12 {
                assert_eq!(
                    c12.mul(c12.pow(gen, i), c12.pow(gen, j)),
                    c12.pow(gen, (i + j) % 12)
                );
            }
        }
    }

    #[test]
    fn abelian_examples() {
        let v4 = Group::make_abelian(AbelianSpec::new(vec![(2, 1), (2, 1)]).unwrap()).unwrap();
        assert!((1..4).all(|g| v4.element_order(g) == 2));

        let ex = Group::make_abelian(AbelianSpec::new(vec![(2, 1), (2, 1), (3, 1)]).unwrap()).unwrap();
        assert_eq!(ex.size(), 12);

        let g = Group::make_abelian(AbelianSpec::new(vec![(3, 1), (3, 1), (5, 2)]).unwrap()).unwrap();
        assert_eq!(g.size(), 225);
        let orders: Vec<u64> = order_histogram(&g).keys().copied().collect();
        assert_eq!(orders, vec![1, 3, 5, 15, 25, 75]);

        // (1,1) in C4 x C3 has order 12
        let c = Group::make_abelian(AbelianSpec::new(vec![(2, 2), (3, 1)]).unwrap()).unwrap();
        assert_eq!(c.element_order(c.element_from_components(&[1, 1]).unwrap()), 12);
    }

    #[test]
    fn spec_validation() {
        assert!(AbelianSpec::new(vec![]).is_err());
        assert!(AbelianSpec::new(vec![(4, 1)]).is_err());
        assert!(AbelianSpec::new(vec![(2, 0)]).is_err());
        assert_eq!(
            AbelianSpec::new(vec![(3, 1), (2, 2), (2, 1)]).unwrap(),
            AbelianSpec::new(vec![(2, 1), (3, 1), (2, 2)]).unwrap()
        );
    }

    #[test]
    fn quaternion_orders() {
        let q8 = Group::make_generalized_quaternion(8).unwrap();
        let h = order_histogram(&q8);
        assert_eq!(h[&2], 1);
        assert_eq!(h[&4], 6);
        let q16 = Group::make_generalized_quaternion(16).unwrap();
        assert_eq!(order_histogram(&q16)[&2], 1);
        assert!(Group::make_generalized_quaternion(4).is_err());
        assert!(Group::make_generalized_quaternion(12).is_err());
    }

    #[test]
    fn dihedral_orders() {
        let d6 = Group::make_dihedral(6).unwrap();
        // involutions r^i s have index >= 3
        let inv: Vec<usize> = (0..6).filter(|&g| d6.element_order(g) == 2).collect();
        assert_eq!(inv, vec![3, 4, 5]);
        let d8 = Group::make_dihedral(8).unwrap();
        assert_eq!(order_histogram(&d8)[&2], 5);
        assert!(Group::make_dihedral(7).is_err());
        assert!(Group::make_dihedral(4).is_err());
    }

    #[test]
    fn table_groups_validate() {
        for g in [
            Group::make_dihedral(12).unwrap(),
            Group::make_generalized_quaternion(16).unwrap(),
        ] {
            let Backing::Table { table } = &g.backing else { unreachable!() };
            Group::from_table(g.name(), g.size(), table.clone()).unwrap();
        }
        // Z3 with a broken entry
        let bad = vec![0, 1, 2, 1, 2, 0, 2, 1, 0];
        assert!(Group::from_table("bad", 3, bad).is_err());
    }

    #[test]
    fn generator_classes_partition() {
        let c6 = Group::make_cyclic(6).unwrap();
        let gen = (0..6).find(|&g| c6.element_order(g) == 6).unwrap();
        assert_eq!(c6.generator_class(gen).len(), 2);

        let c12 = Group::make_cyclic(12).unwrap();
        let classes = c12.generator_classes();
        assert_eq!(classes.len(), 6); // one per divisor of 12
        assert_eq!(classes.iter().map(|c| c.len()).sum::<usize>(), 12);
    }

    #[test]
    fn sylow_examples() {
        let c12 = Group::make_cyclic(12).unwrap();
        let s = c12.sylow_decomposition().unwrap();
        assert_eq!(s.subgroup(0).len(), 4);
        assert_eq!(s.subgroup(1).len(), 3);

        let ex = Group::make_abelian(AbelianSpec::new(vec![(2, 1), (2, 1), (3, 1)]).unwrap()).unwrap();
        let s = ex.sylow_decomposition().unwrap();
        assert_eq!(s.subgroup(0).len(), 4);
        assert!(s.subgroup(0).iter().skip(1).all(|g| ex.element_order(g) == 2));
        assert!(s.is_cyclic(1) && !s.is_cyclic(0));

        let d6 = Group::make_dihedral(6).unwrap();
        assert!(matches!(d6.sylow_decomposition(), Err(Error::UnsupportedStructure(_))));

        let q8 = Group::make_generalized_quaternion(8).unwrap();
        let s = q8.sylow_decomposition().unwrap();
        assert!(s.is_generalized_quaternion(0));
        let d8 = Group::make_dihedral(8).unwrap();
        assert!(!d8.sylow_decomposition().unwrap().is_generalized_quaternion(0));
    }
}
