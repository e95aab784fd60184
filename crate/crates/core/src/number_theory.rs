//! Integer helpers: primality, factorization, totient, modular inverses.

use crate::error::{invalid, Result};

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

pub fn lcm(a: u64, b: u64) -> u64 {
    if a == 0 || b == 0 {
        0
    } else {
        a / gcd(a, b) * b
    }
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Prime factorization as `(prime, exponent)` pairs with strictly increasing
/// primes. `factorize(1)` is empty.
pub fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    assert!(n > 0, "factorize(0)");
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            let mut e = 0;
            while n % d == 0 {
                n /= d;
                e += 1;
            }
            out.push((d, e));
        }
        d += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

pub fn distinct_primes(n: u64) -> Vec<u64> {
    factorize(n).into_iter().map(|(p, _)| p).collect()
}

/// `Some((p, e))` when `n = p^e` with `e >= 1`.
pub fn prime_power(n: u64) -> Option<(u64, u32)> {
    match factorize(n.max(1)).as_slice() {
        [(p, e)] => Some((*p, *e)),
        _ => None,
    }
}

/// Exponent of `p` in `n`.
pub fn valuation(mut n: u64, p: u64) -> u32 {
    let mut e = 0;
    while n > 0 && n % p == 0 {
        n /= p;
        e += 1;
    }
    e
}

/// Euler's totient, via the product formula over the factorization.
pub fn euler_phi(n: u64) -> u64 {
    assert!(n > 0, "euler_phi(0)");
    factorize(n)
        .into_iter()
        .map(|(p, e)| p.pow(e - 1) * (p - 1))
        .product()
}

/// Extended Euclid: returns `(g, x, y)` with `a*x + b*y = g = gcd(a, b)`.
pub fn extended_gcd(a: i128, b: i128) -> (i128, i128, i128) {
    if b == 0 {
        (a, 1, 0)
    } else {
        let (g, x, y) = extended_gcd(b, a % b);
        (g, y, x - (a / b) * y)
    }
}

/// Solves `p * l ≡ m (mod q_pow)` for `0 <= l < q_pow`, where `p` is prime
/// and `q_pow` is a power of a different prime.
pub fn solve_congruence(p: u64, m: u64, q_pow: u64) -> Result<u64> {
    if !is_prime(p) {
        return invalid(format!("{p} is not prime"));
    }
    if prime_power(q_pow).is_none() {
        return invalid(format!("{q_pow} is not a prime power"));
    }
    if gcd(p, q_pow) != 1 {
        return invalid(format!("gcd({p}, {q_pow}) != 1"));
    }
    let modulus = q_pow as i128;
    // Bezout: p*s + q_pow*t = 1, so l = s*m.
    let (_, s, _) = extended_gcd(p as i128, modulus);
    let l = (s.rem_euclid(modulus) * (m as i128 % modulus)).rem_euclid(modulus);
    Ok(l as u64)
}

/// Chinese-remainder exponent used to split an element into prime-power parts:
/// the unique `e mod m` with `e ≡ 1 (mod pp)` and `e ≡ 0 (mod m/pp)`.
pub(crate) fn crt_idempotent(m: u64, pp: u64) -> u64 {
    debug_assert_eq!(m % pp, 0);
    let rest = m / pp;
    if rest == 1 {
        return 1 % m.max(1);
    }
    // e = rest * (rest^{-1} mod pp)
    let (_, inv, _) = extended_gcd(rest as i128, pp as i128);
    let inv = inv.rem_euclid(pp as i128) as u64;
    (rest as u128 * inv as u128 % m as u128) as u64
}

#[cfg(test)]
mod tests {
    use super::*;

    fn phi_by_count(n: u64) -> u64 {
        (1..=n).filter(|&k| gcd(k, n) == 1).count() as u64
    }

    #[test]
    fn phi_small_values() {
        assert_eq!(euler_phi(1), 1);
        for p in [2u64, 3, 5, 7, 11, 13] {
            assert_eq!(euler_phi(p), p - 1);
        }
        // coprime residues of 30: 1 7 11 13 17 19 23 29
        assert_eq!(phi_by_count(30), 8);
        assert_eq!(euler_phi(30), 8);
        for n in 1..=500 {
            assert_eq!(euler_phi(n), phi_by_count(n), "n={n}");
        }
    }

    #[test]
    fn phi_multiplicative() {
        for a in 1..60u64 {
            for b in 1..60u64 {
                if gcd(a, b) == 1 {
                    assert_eq!(euler_phi(a * b), euler_phi(a) * euler_phi(b));
                }
            }
        }
    }

    #[test]
    fn congruence_examples() {
        assert_eq!(solve_congruence(2, 1, 3).unwrap(), 2);
        assert_eq!(solve_congruence(3, 0, 25).unwrap(), 0);
        assert_eq!(solve_congruence(5, 7, 9).unwrap(), 5);
    }

    #[test]
    fn congruence_rejects_bad_input() {
        assert!(solve_congruence(3, 1, 9).is_err());
        assert!(solve_congruence(4, 1, 9).is_err());
        assert!(solve_congruence(2, 1, 12).is_err());
    }

    #[test]
    fn factorization() {
        assert_eq!(factorize(1), vec![]);
        assert_eq!(factorize(360), vec![(2, 3), (3, 2), (5, 1)]);
        assert_eq!(prime_power(32), Some((2, 5)));
        assert_eq!(prime_power(12), None);
        assert_eq!(valuation(48, 2), 4);
    }

    #[test]
    fn idempotents() {
        // 12 = 4 * 3: e ≡ 1 mod 4, ≡ 0 mod 3 → 9
        assert_eq!(crt_idempotent(12, 4), 9);
        assert_eq!(crt_idempotent(12, 3), 4);
        assert_eq!(crt_idempotent(8, 8), 1);
    }
}
