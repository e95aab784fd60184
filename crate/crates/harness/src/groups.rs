//! Group spec parsing and corpus generation.

use powcut::error::{Error, Result};
use powcut::number_theory::{factorize, is_prime};
use powcut::{AbelianSpec, Group};

fn bad(msg: impl Into<String>) -> Error {
    Error::InvalidArgument(msg.into())
}

fn parse_u64(s: &str, what: &str) -> Result<u64> {
    s.trim()
        .parse::<u64>()
        .map_err(|_| bad(format!("{what}: expected a positive integer, got {s:?}")))
}

/// Parses `cyclic:N`, `abelian:p^e,p^e,...`, `quaternion:N` or `dihedral:N`.
pub fn parse_group_spec(spec: &str) -> Result<Group> {
    let (kind, arg) = spec
        .split_once(':')
        .ok_or_else(|| bad(format!("group spec {spec:?} is missing ':'")))?;
    match kind.trim() {
        "cyclic" => Group::make_cyclic(parse_u64(arg, "cyclic order")?),
        "quaternion" => Group::make_generalized_quaternion(parse_u64(arg, "quaternion order")?),
        "dihedral" => Group::make_dihedral(parse_u64(arg, "dihedral order")?),
        "abelian" => Group::make_abelian(parse_abelian(arg)?),
        other => Err(bad(format!(
            "unknown group family {other:?}; expected cyclic, abelian, quaternion or dihedral"
        ))),
    }
}

/// `p^e,p^e,...`; a bare `p` means `p^1`.
pub fn parse_abelian(arg: &str) -> Result<AbelianSpec> {
    let mut factors = Vec::new();
    for part in arg.split(',') {
        let part = part.trim();
        if part.is_empty() {
            return Err(bad("empty factor in abelian spec"));
        }
        let (p, e) = match part.split_once('^') {
            Some((p, e)) => (parse_u64(p, "prime")?, parse_u64(e, "exponent")?),
            None => (parse_u64(part, "prime")?, 1),
        };
        if !is_prime(p) {
            return Err(bad(format!("{p} is not prime")));
        }
        let e = u32::try_from(e).map_err(|_| bad(format!("exponent {e} too large")))?;
        factors.push((p, e));
    }
    AbelianSpec::new(factors)
}

/// Partitions of `n` in reverse lexicographic order, largest part first.
pub fn partitions(n: u32) -> Vec<Vec<u32>> {
    fn go(n: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if n == 0 {
            out.push(cur.clone());
            return;
        }
        for part in (1..=max.min(n)).rev() {
            cur.push(part);
            go(n - part, part, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

/// One spec per abelian group of order `n`, up to isomorphism.
pub fn abelian_specs_of_order(n: u64) -> Vec<AbelianSpec> {
    let mut acc: Vec<Vec<(u64, u32)>> = vec![Vec::new()];
    for (p, e) in factorize(n) {
        let mut next = Vec::new();
        for prefix in &acc {
            for part in partitions(e) {
                let mut f = prefix.clone();
                f.extend(part.iter().map(|&k| (p, k)));
                next.push(f);
            }
        }
        acc = next;
    }
    acc.into_iter()
        .filter(|f| !f.is_empty())
        .map(|f| AbelianSpec::new(f).expect("prime factors"))
        .collect()
}

/// Every non-trivial abelian group of order at most `max_order`, ordered by
/// group order and then by the partitions of each prime exponent.
pub fn generate_abelian_corpus(max_order: u64) -> Result<Vec<AbelianSpec>> {
    if max_order < 2 {
        return Err(bad(format!("max_order must be at least 2, got {max_order}")));
    }
    Ok((2..=max_order).flat_map(abelian_specs_of_order).collect())
}

/// Q8, Q16, Q32 and the dihedral groups of order 6 to 20.
pub fn exceptional_groups() -> Vec<Group> {
    let mut out: Vec<Group> = [8, 16, 32]
        .into_iter()
        .map(|n| Group::make_generalized_quaternion(n).expect("power of two"))
        .collect();
    out.extend((3..=10).map(|k| Group::make_dihedral(2 * k).expect("even order")));
    out
}

/// Abelian corpus up to `max_order` followed by the exceptional groups of
/// order at most `max_order`.
pub fn full_corpus(max_order: u64) -> Result<Vec<Group>> {
    let mut out = Vec::new();
    for spec in generate_abelian_corpus(max_order)? {
        out.push(Group::make_abelian(spec)?);
    }
    out.extend(
        exceptional_groups()
            .into_iter()
            .filter(|g| g.order() <= max_order),
    );
    Ok(out)
}
