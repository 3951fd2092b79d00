//! Egyptian fractions, the sieve of Eratosthenes, and Euclid's construction
//! of a prime outside any finite list.

use num_integer::Integer as _;
use num_traits::One;

use crate::error::{Error, Result};
use crate::exactnum::{Integer, Rational};
use crate::trace::{NoTrace, Recorder, TraceSink};

/// Sum of distinct unit fractions with strictly increasing denominators.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnitFractionSum {
    denominators: Vec<Integer>,
}

impl UnitFractionSum {
    pub fn denominators(&self) -> &[Integer] {
        &self.denominators
    }

    pub fn terms(&self) -> Vec<Rational> {
        self.denominators
            .iter()
            .map(|d| Rational::new(Integer::one(), d.clone()).expect("denominators are positive"))
            .collect()
    }

    pub fn sum(&self) -> Rational {
        self.terms()
            .iter()
            .fold(Rational::zero(), |acc, t| &acc + t)
    }

    pub fn len(&self) -> usize {
        self.denominators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.denominators.is_empty()
    }
}

pub fn egyptian_decompose(q: &Rational) -> Result<UnitFractionSum> {
    egyptian_decompose_traced(q, &mut NoTrace)
}

/// Greedy decomposition of `0 < q < 1`: repeatedly take the largest unit
/// fraction `1/⌈1/r⌉` not exceeding the remainder `r`. The remainder's
/// numerator strictly decreases, so there are at most `numer(q)` terms.
pub fn egyptian_decompose_traced(
    q: &Rational,
    sink: &mut dyn TraceSink,
) -> Result<UnitFractionSum> {
    if !q.is_positive() || *q >= Integer::one() {
        return Err(Error::OutOfRange);
    }
    let mut rec = Recorder::new(sink, "egyptian");
    let mut remaining = q.clone();
    let mut denominators = Vec::new();
    while !remaining.is_zero() {
        let d = remaining.recip()?.ceil();
        let unit = Rational::new(Integer::one(), d.clone())?;
        let rest = &remaining - &unit;
        let before = std::mem::replace(&mut remaining, rest);
        rec.record(|e| {
            e.with("remaining", &before)
                .with("denominator", &d)
                .with("rest", &remaining)
        })?;
        denominators.push(d);
    }
    Ok(UnitFractionSum { denominators })
}

pub fn sieve(limit: i64) -> Vec<u64> {
    sieve_traced(limit, &mut NoTrace).expect("NoTrace never fails")
}

/// Primes up to `limit`, crossing out multiples of each surviving `p` from
/// `p²` onward. One trace event per sieving prime.
pub fn sieve_traced(limit: i64, sink: &mut dyn TraceSink) -> Result<Vec<u64>> {
    if limit < 2 {
        return Ok(Vec::new());
    }
    let limit = limit as usize;
    let mut rec = Recorder::new(sink, "sieve");
    let mut composite = vec![false; limit + 1];
    let mut p = 2usize;
    while p * p <= limit {
        if !composite[p] {
            let mut crossed = 0u64;
            for multiple in (p * p..=limit).step_by(p) {
                if !composite[multiple] {
                    crossed += 1;
                }
                composite[multiple] = true;
            }
            rec.record(|e| {
                e.with("prime", p)
                    .with("start", p * p)
                    .with("newly_crossed", crossed)
            })?;
        }
        p += 1;
    }
    Ok((2..=limit)
        .filter(|&i| !composite[i])
        .map(|i| i as u64)
        .collect())
}

/// Least prime factor of `n >= 2` by trial division.
pub fn smallest_prime_factor(n: &Integer) -> Integer {
    let two = Integer::from(2);
    if n.is_even() {
        return two;
    }
    let mut d = Integer::from(3);
    while &d * &d <= *n {
        if n.is_multiple_of(&d) {
            return d;
        }
        d += 2;
    }
    n.clone()
}

pub fn is_prime(n: &Integer) -> bool {
    *n >= Integer::from(2) && smallest_prime_factor(n) == *n
}

pub fn euclid_new_prime(primes: &[Integer]) -> Result<(Integer, Integer)> {
    euclid_new_prime_traced(primes, &mut NoTrace)
}

/// `product + 1` for the given primes and its least prime factor, which is
/// never one of the inputs.
pub fn euclid_new_prime_traced(
    primes: &[Integer],
    sink: &mut dyn TraceSink,
) -> Result<(Integer, Integer)> {
    if primes.is_empty() {
        return Err(Error::InvalidPrimeList);
    }
    for (i, p) in primes.iter().enumerate() {
        if !is_prime(p) {
            return Err(Error::NotPrimeInput(p.to_string()));
        }
        if primes[..i].contains(p) {
            return Err(Error::InvalidPrimeList);
        }
    }
    let mut rec = Recorder::new(sink, "euclid");
    let product: Integer = primes.iter().product();
    let witness = &product + 1;
    rec.record(|e| e.with("product", &product).with("witness", &witness))?;
    let new_prime = smallest_prime_factor(&witness);
    let cofactor = &witness / &new_prime;
    rec.record(|e| e.with("new_prime", &new_prime).with("cofactor", &cofactor))?;
    debug_assert!(!primes.contains(&new_prime));
    Ok((witness, new_prime))
}
