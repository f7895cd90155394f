//! Elementary number theory over machine integers: divisors, totients,
//! factorization, primality by trial division, Legendre symbols.
//!
//! Levels in this crate are small (the interesting range is N <= a few
//! thousand), so trial division is plenty.

/// Greatest common divisor.
pub fn gcd(a: u64, b: u64) -> u64 {
    num::integer::gcd(a, b)
}

/// Divisors of `n` in increasing order. `divisors(0)` is empty.
pub fn divisors(n: u64) -> Vec<u64> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n.is_multiple_of(d) {
            small.push(d);
            if d != n / d {
                large.push(n / d);
            }
        }
        d += 1;
    }
    large.reverse();
    small.extend(large);
    small
}

/// Factorization of `n` as (prime, exponent) pairs in increasing prime order.
pub fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            let mut e = 0;
            while n.is_multiple_of(p) {
                n /= p;
                e += 1;
            }
            out.push((p, e));
        }
        p += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

/// Distinct prime divisors of `n` in increasing order.
pub fn prime_divisors(n: u64) -> Vec<u64> {
    factorize(n).into_iter().map(|(p, _)| p).collect()
}

/// Euler's totient.
pub fn euler_phi(n: u64) -> u64 {
    let mut r = n;
    for p in prime_divisors(n) {
        r = r / p * (p - 1);
    }
    r
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let f = factorize(n);
    f.len() == 1 && f[0].1 == 1
}

/// Legendre symbol (a|p) for an odd prime p, via Euler's criterion.
///
/// Returns 1 if a is a nonzero quadratic residue mod p, -1 if a nonresidue,
/// 0 if p divides a.
pub fn legendre(a: i64, p: u64) -> i64 {
    assert!(p > 2 && is_prime(p), "legendre requires an odd prime, got {p}");
    let a = a.rem_euclid(p as i64) as u64;
    if a == 0 {
        return 0;
    }
    let r = mod_pow(a, (p - 1) / 2, p);
    if r == 1 {
        1
    } else {
        debug_assert_eq!(r, p - 1);
        -1
    }
}

fn mod_pow(base: u64, mut exp: u64, modulus: u64) -> u64 {
    let m = modulus as u128;
    let mut acc: u128 = 1;
    let mut b = (base % modulus) as u128;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * b % m;
        }
        b = b * b % m;
        exp >>= 1;
    }
    acc as u64
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn divisor_lists() {
        assert_eq!(divisors(1), vec![1]);
        assert_eq!(divisors(28), vec![1, 2, 4, 7, 14, 28]);
        assert_eq!(divisors(50), vec![1, 2, 5, 10, 25, 50]);
    }

    #[test]
    fn totients() {
        assert_eq!(euler_phi(1), 1);
        assert_eq!(euler_phi(7), 6);
        assert_eq!(euler_phi(12), 4);
    }

    #[test]
    fn primality() {
        let primes: Vec<u64> = (0..60).filter(|&n| is_prime(n)).collect();
        assert_eq!(primes, vec![2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59]);
    }

    /// Euler's criterion against a brute-force quadratic-residue search.
    #[test]
    fn legendre_matches_brute_force() {
        for p in (3..100).filter(|&p| is_prime(p)) {
            for a in -10i64..=10 {
                let residue = (0..p).any(|x| {
                    let x = x as i64;
                    (x * x - a).rem_euclid(p as i64) == 0 && a.rem_euclid(p as i64) != 0
                });
                let expected = if a.rem_euclid(p as i64) == 0 {
                    0
                } else if residue {
                    1
                } else {
                    -1
                };
                assert_eq!(legendre(a, p), expected, "a={a} p={p}");
            }
        }
    }
}
