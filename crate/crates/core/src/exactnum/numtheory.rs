//! Small integer number theory: totients, orders, prime splitting in
//! cyclotomic fields, and the rational-cosine classifier.

use num_integer::Integer;

use super::rational::{rat, Rational};

pub fn gcd(a: i64, b: i64) -> i64 {
    a.gcd(&b)
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

/// Prime factorization as `(p, k)` pairs in increasing `p`.
pub fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            let mut k = 0;
            while n % p == 0 {
                n /= p;
                k += 1;
            }
            out.push((p, k));
        }
        p += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

pub fn totient(n: u64) -> u64 {
    factorize(n).iter().fold(n, |acc, &(p, _)| acc / p * (p - 1))
}

pub fn divisors(n: u64) -> Vec<u64> {
    (1..=n).filter(|d| n % d == 0).collect()
}

/// Residues in `1..n` coprime to `n` (just `[1]` when `n = 1`).
pub fn units(n: u64) -> Vec<u64> {
    if n == 1 {
        return vec![1];
    }
    (1..n).filter(|&j| j.gcd(&n) == 1).collect()
}

/// Multiplicative order of `a` modulo `m`; `m = 1` gives 1.
pub fn multiplicative_order(a: u64, m: u64) -> Option<u64> {
    if m == 1 {
        return Some(1);
    }
    if a.gcd(&m) != 1 {
        return None;
    }
    let mut x = a % m;
    let mut k = 1;
    while x != 1 {
        x = x * a % m;
        k += 1;
    }
    Some(k)
}

/// Every `n` with `φ(n) = d`. Uses `φ(n) ≥ √(n/2)`, so `n ≤ 2d²`.
pub fn totient_preimage(d: u64) -> Vec<u64> {
    (1..=2 * d * d + 2).filter(|&n| totient(n) == d).collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
pub struct Splitting {
    /// Ramification index.
    pub e: u64,
    /// Residue degree.
    pub f: u64,
    /// Number of primes above `p`.
    pub g: u64,
}

impl Splitting {
    /// Norm of each prime above `p`, namely `p^f`.
    pub fn residue_norm(&self, p: u64) -> u64 {
        p.pow(self.f as u32)
    }
}

/// Decomposition of the rational prime `p` in ℚ(ζₙ).
pub fn prime_splitting(p: u64, n: u64) -> Splitting {
    assert!(is_prime(p), "{p} is not prime");
    let mut m = n;
    let mut pk = 1;
    while m % p == 0 {
        m /= p;
        pk *= p;
    }
    let f = multiplicative_order(p % m.max(1), m).expect("p is coprime to the prime-to-p part");
    Splitting { e: totient(pk), f, g: totient(m) / f }
}

/// If `arccos(c)` is a rational multiple of π, return that multiple.
/// Only `0, ±1/2, ±1` qualify among rational cosines.
pub fn niven_classify(c: &Rational) -> Option<Rational> {
    let table = [(rat(1, 1), rat(0, 1)), (rat(1, 2), rat(1, 3)), (rat(0, 1), rat(1, 2)), (rat(-1, 2), rat(2, 3)), (rat(-1, 1), rat(1, 1))];
    table.into_iter().find(|(v, _)| v == c).map(|(_, t)| t)
}
