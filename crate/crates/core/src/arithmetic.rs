//! Prime factorization of `n` and the exponent-vector algebra of its divisor
//! lattice.
//!
//! A divisor `m | n` is stored as its exponent vector relative to the prime
//! factorization of `n`, so gcd and lcm become componentwise min and max.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest accepted `n` (2^63 - 1).
pub const MAX_N: u64 = i64::MAX as u64;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PrimePower {
    pub prime: u64,
    pub exponent: u32,
}

/// The prime factorization `n = p1^a1 * ... * pk^ak`, primes strictly ascending.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Factorization {
    primes: Vec<PrimePower>,
    n: u64,
}

impl Factorization {
    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn primes(&self) -> &[PrimePower] {
        &self.primes
    }

    /// Number of distinct prime factors.
    pub fn k(&self) -> usize {
        self.primes.len()
    }

    /// tau(n), the number of divisors.
    pub fn divisor_count(&self) -> u64 {
        self.primes.iter().map(|p| u64::from(p.exponent) + 1).product()
    }

    pub fn exponents(&self) -> Vec<u32> {
        self.primes.iter().map(|p| p.exponent).collect()
    }

    /// The divisor 1.
    pub fn unit(&self) -> Divisor {
        Divisor { exponents: vec![0; self.k()] }
    }

    /// The divisor n itself.
    pub fn full(&self) -> Divisor {
        Divisor { exponents: self.exponents() }
    }

    pub fn is_full(&self, d: &Divisor) -> bool {
        self.check(d);
        d.exponents.iter().zip(&self.primes).all(|(&e, p)| e == p.exponent)
    }

    pub fn is_unit(&self, d: &Divisor) -> bool {
        self.check(d);
        d.exponents.iter().all(|&e| e == 0)
    }

    /// Integer value of a divisor. Never overflows since the value divides `n`.
    pub fn value(&self, d: &Divisor) -> u64 {
        self.check(d);
        d.exponents
            .iter()
            .zip(&self.primes)
            .map(|(&e, p)| p.prime.pow(e))
            .product()
    }

    /// Exponent vector of `m`, or `None` when `m` does not divide `n`.
    pub fn divisor_of(&self, m: u64) -> Option<Divisor> {
        if m == 0 || self.n % m != 0 {
            return None;
        }
        let mut rest = m;
        let exponents = self
            .primes
            .iter()
            .map(|p| {
                let mut e = 0;
                while rest % p.prime == 0 {
                    rest /= p.prime;
                    e += 1;
                }
                e
            })
            .collect();
        debug_assert_eq!(rest, 1);
        Some(Divisor { exponents })
    }

    /// Builds a divisor from raw exponents, checking `0 <= e_i <= a_i`.
    pub fn divisor(&self, exponents: Vec<u32>) -> Option<Divisor> {
        let ok = exponents.len() == self.k()
            && exponents.iter().zip(&self.primes).all(|(&e, p)| e <= p.exponent);
        ok.then_some(Divisor { exponents })
    }

    /// All divisors other than 1 and n, ascending by value.
    pub fn nontrivial_divisors(&self) -> Vec<Divisor> {
        let mut all = self.all_divisors();
        all.retain(|(_, d)| !self.is_unit(d) && !self.is_full(d));
        all.into_iter().map(|(_, d)| d).collect()
    }

    /// Every divisor paired with its value, ascending by value.
    fn all_divisors(&self) -> Vec<(u64, Divisor)> {
        let mut out = vec![(1u64, self.unit())];
        for (i, p) in self.primes.iter().enumerate() {
            let mut next = Vec::with_capacity(out.len() * (p.exponent as usize + 1));
            for (value, d) in &out {
                let mut v = *value;
                for e in 0..=p.exponent {
                    let mut d = d.clone();
                    d.exponents[i] = e;
                    next.push((v, d));
                    if e < p.exponent {
                        v *= p.prime;
                    }
                }
            }
            out = next;
        }
        out.sort_by_key(|(v, _)| *v);
        out
    }

    fn check(&self, d: &Divisor) {
        assert_eq!(
            d.exponents.len(),
            self.k(),
            "divisor is not governed by this factorization"
        );
    }

    /// Rebuilds a factorization from prime powers, validating the invariants.
    pub fn from_prime_powers(mut primes: Vec<PrimePower>) -> Result<Self> {
        primes.sort_by_key(|p| p.prime);
        let mut n: u64 = 1;
        for (i, p) in primes.iter().enumerate() {
            if p.exponent == 0 || !is_prime(p.prime) || (i > 0 && primes[i - 1].prime == p.prime) {
                return Err(Error::Parse(format!("{}^{}", p.prime, p.exponent)));
            }
            n = p
                .prime
                .checked_pow(p.exponent)
                .and_then(|q| n.checked_mul(q))
                .filter(|&n| n <= MAX_N)
                .ok_or_else(|| Error::OutOfRange(format!("{}^{} * ...", p.prime, p.exponent)))?;
        }
        Ok(Factorization { primes, n })
    }
}

impl fmt::Display for Factorization {
    /// `2^2 * 3`, or `1` for the empty product.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.primes.is_empty() {
            return write!(f, "1");
        }
        for (i, p) in self.primes.iter().enumerate() {
            if i > 0 {
                write!(f, " * ")?;
            }
            if p.exponent == 1 {
                write!(f, "{}", p.prime)?;
            } else {
                write!(f, "{}^{}", p.prime, p.exponent)?;
            }
        }
        Ok(())
    }
}

/// Exponent vector `(e1, ..., ek)` of a divisor, relative to a fixed [`Factorization`].
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Divisor {
    exponents: Vec<u32>,
}

impl Divisor {
    pub fn exponents(&self) -> &[u32] {
        &self.exponents
    }

    fn zip_with(&self, other: &Divisor, op: fn(u32, u32) -> u32) -> Divisor {
        assert_eq!(
            self.exponents.len(),
            other.exponents.len(),
            "divisors governed by different factorizations"
        );
        Divisor {
            exponents: self
                .exponents
                .iter()
                .zip(&other.exponents)
                .map(|(&a, &b)| op(a, b))
                .collect(),
        }
    }

    /// Componentwise `<=`, i.e. `self | other`.
    pub fn divides(&self, other: &Divisor) -> bool {
        self.exponents.len() == other.exponents.len()
            && self.exponents.iter().zip(&other.exponents).all(|(a, b)| a <= b)
    }
}

/// lcm as the componentwise max of exponent vectors.
pub fn divisor_lcm(a: &Divisor, b: &Divisor) -> Divisor {
    a.zip_with(b, u32::max)
}

/// gcd as the componentwise min of exponent vectors.
pub fn divisor_gcd(a: &Divisor, b: &Divisor) -> Divisor {
    a.zip_with(b, u32::min)
}

/// Deterministic trial-division factorization for `1 <= n <= 2^63 - 1`.
pub fn factorize(n: u64) -> Result<Factorization> {
    if n == 0 {
        return Err(Error::Zero);
    }
    if n > MAX_N {
        return Err(Error::OutOfRange(n.to_string()));
    }
    let mut primes = Vec::new();
    let mut rest = n;
    let mut push = |p: u64, rest: &mut u64| {
        let mut exponent = 0;
        while *rest % p == 0 {
            *rest /= p;
            exponent += 1;
        }
        if exponent > 0 {
            primes.push(PrimePower { prime: p, exponent });
        }
    };
    push(2, &mut rest);
    let mut p = 3u64;
    // p <= rest / p avoids overflowing p * p near 2^63
    while p <= rest / p {
        push(p, &mut rest);
        p += 2;
    }
    if rest > 1 {
        primes.push(PrimePower { prime: rest, exponent: 1 });
    }
    Ok(Factorization { primes, n })
}

/// Parses a decimal `n`, mapping overflow to [`Error::OutOfRange`].
pub fn parse_n(text: &str) -> Result<u64> {
    let text = text.trim();
    if text.is_empty() || !text.bytes().all(|b| b.is_ascii_digit()) {
        return Err(Error::Parse(text.to_string()));
    }
    match text.parse::<u64>() {
        Ok(0) => Err(Error::Zero),
        Ok(n) if n <= MAX_N => Ok(n),
        _ => Err(Error::OutOfRange(text.to_string())),
    }
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d <= n / d {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}
