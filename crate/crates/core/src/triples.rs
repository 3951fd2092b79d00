//! Right-triangle rules: the 7/8 + 1/2 hypotenuse estimate and the
//! (m² − n², 2mn, m² + n²) generator of Pythagorean triples.

use num_integer::Integer as _;
use num_traits::{One, Signed};

use crate::error::{Error, Result};
use crate::exactnum::{gcd, Integer, Rational};
use crate::trace::{NoTrace, Recorder, TraceSink};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Triple {
    pub a: Integer,
    pub b: Integer,
    pub c: Integer,
}

impl Triple {
    pub fn is_pythagorean(&self) -> bool {
        &self.a * &self.a + &self.b * &self.b == &self.c * &self.c
    }

    pub fn is_primitive(&self) -> bool {
        gcd(&self.a, &self.b).is_one()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneratorPair {
    m: Integer,
    n: Integer,
}

impl GeneratorPair {
    pub fn new(m: Integer, n: Integer) -> Result<Self> {
        if n < Integer::one() || m <= n {
            return Err(Error::InvalidGenerators);
        }
        Ok(GeneratorPair { m, n })
    }

    pub fn m(&self) -> &Integer {
        &self.m
    }

    pub fn n(&self) -> &Integer {
        &self.n
    }

    /// Coprime with opposite parity: the pairs that give primitive triples.
    pub fn yields_primitive(&self) -> bool {
        gcd(&self.m, &self.n).is_one() && self.m.is_odd() != self.n.is_odd()
    }
}

/// `7a/8 + b/2`, with `a` in the 7/8 position exactly as given.
pub fn pothayanar_estimate(a: &Rational, b: &Rational) -> Result<Rational> {
    if !a.is_positive() || !b.is_positive() {
        return Err(Error::NonPositiveInput);
    }
    let seven_eighths = Rational::new(7.into(), 8.into())?;
    let half = Rational::new(1.into(), 2.into())?;
    Ok(&(&seven_eighths * a) + &(&half * b))
}

/// Whether the estimate equals the true hypotenuse, compared as squares in
/// exact arithmetic. Holds exactly when `a:b` is `4:3` or `12:5`.
pub fn pothayanar_is_exact(a: &Integer, b: &Integer) -> Result<bool> {
    let ra = Rational::from_integer(a.clone());
    let rb = Rational::from_integer(b.clone());
    let c = pothayanar_estimate(&ra, &rb)?;
    Ok(c.square() == &ra.square() + &rb.square())
}

pub fn katyayana_triple(g: &GeneratorPair) -> Triple {
    let (m2, n2) = (&g.m * &g.m, &g.n * &g.n);
    Triple {
        a: &m2 - &n2,
        b: Integer::from(2) * &g.m * &g.n,
        c: m2 + n2,
    }
}

pub fn enumerate_primitive_triples(c_max: &Integer) -> Vec<Triple> {
    enumerate_primitive_triples_traced(c_max, &mut NoTrace).expect("NoTrace never fails")
}

/// Every primitive triple with hypotenuse at most `c_max`, odd leg first,
/// sorted by `(c, a)`. Traces one event per productive generator pair.
pub fn enumerate_primitive_triples_traced(
    c_max: &Integer,
    sink: &mut dyn TraceSink,
) -> Result<Vec<Triple>> {
    let mut rec = Recorder::new(sink, "triples");
    let mut out = Vec::new();
    if !c_max.is_positive() {
        return Ok(out);
    }
    // c = m² + n² > m², so m ranges while m² + 1 <= c_max
    let mut m = Integer::from(2);
    while &m * &m < *c_max {
        let mut n = Integer::one();
        while n < m {
            if &m * &m + &n * &n > *c_max {
                break;
            }
            let pair = GeneratorPair {
                m: m.clone(),
                n: n.clone(),
            };
            if pair.yields_primitive() {
                let t = katyayana_triple(&pair);
                // odd leg first
                let t = if t.a.is_odd() {
                    t
                } else {
                    Triple {
                        a: t.b,
                        b: t.a,
                        c: t.c,
                    }
                };
                rec.record(|e| {
                    e.with("m", &pair.m)
                        .with("n", &pair.n)
                        .with("a", &t.a)
                        .with("b", &t.b)
                        .with("c", &t.c)
                })?;
                out.push(t);
            }
            n += 1;
        }
        m += 1;
    }
    out.sort_by(|x, y| x.c.cmp(&y.c).then_with(|| x.a.cmp(&y.a)));
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn int(n: i64) -> Integer {
        Integer::from(n)
    }

    fn rat(s: &str) -> Rational {
        s.parse().unwrap()
    }

    fn triple(a: i64, b: i64, c: i64) -> Triple {
        Triple {
            a: int(a),
            b: int(b),
            c: int(c),
        }
    }

    fn brute_gcd(mut a: i64, mut b: i64) -> i64 {
        while b != 0 {
            (a, b) = (b, a % b);
        }
        a.abs()
    }

    // all (a, b, c) with a² + b² = c², gcd(a, b) = 1, c ≤ c_max, odd leg first
    fn brute_primitive(c_max: i64) -> Vec<(i64, i64, i64)> {
        let mut out = Vec::new();
        for c in 1..=c_max {
            for a in 1..c {
                for b in 1..c {
                    if a * a + b * b == c * c && brute_gcd(a, b) == 1 && a % 2 == 1 {
                        out.push((a, b, c));
                    }
                }
            }
        }
        out
    }

    #[test]
    fn estimate_examples() {
        assert_eq!(pothayanar_estimate(&rat("4"), &rat("3")).unwrap(), rat("5"));
        assert_eq!(
            pothayanar_estimate(&rat("12"), &rat("5")).unwrap(),
            rat("13")
        );
        assert_eq!(
            pothayanar_estimate(&rat("3"), &rat("4")).unwrap(),
            rat("37/8")
        );
        assert_eq!(
            pothayanar_estimate(&rat("1"), &rat("1")).unwrap(),
            rat("11/8")
        );
        assert_eq!(
            pothayanar_estimate(&rat("0"), &rat("1")),
            Err(Error::NonPositiveInput)
        );
        assert_eq!(
            pothayanar_estimate(&rat("1"), &rat("-1/2")),
            Err(Error::NonPositiveInput)
        );
    }

    #[test]
    fn exactness_examples() {
        assert!(pothayanar_is_exact(&int(4), &int(3)).unwrap());
        assert!(pothayanar_is_exact(&int(8), &int(6)).unwrap());
        assert!(!pothayanar_is_exact(&int(3), &int(4)).unwrap());
        assert!(!pothayanar_is_exact(&int(5), &int(12)).unwrap());
        assert_eq!(
            pothayanar_is_exact(&int(0), &int(3)),
            Err(Error::NonPositiveInput)
        );
    }

    #[test]
    fn katyayana_examples() {
        let t = |m, n| katyayana_triple(&GeneratorPair::new(int(m), int(n)).unwrap());
        assert_eq!(t(2, 1), triple(3, 4, 5));
        assert_eq!(t(3, 2), triple(5, 12, 13));
        let t31 = t(3, 1);
        assert_eq!(t31, triple(8, 6, 10));
        assert!(!t31.is_primitive());
        assert_eq!(
            GeneratorPair::new(int(2), int(2)),
            Err(Error::InvalidGenerators)
        );
        assert_eq!(
            GeneratorPair::new(int(2), int(0)),
            Err(Error::InvalidGenerators)
        );
    }

    #[test]
    fn enumeration_examples() {
        let c = |n| enumerate_primitive_triples(&int(n));
        assert_eq!(c(5), vec![triple(3, 4, 5)]);
        assert_eq!(
            c(30),
            vec![
                triple(3, 4, 5),
                triple(5, 12, 13),
                triple(15, 8, 17),
                triple(7, 24, 25),
                triple(21, 20, 29)
            ]
        );
        assert!(c(4).is_empty());
        assert!(c(0).is_empty());
    }

    #[test]
    fn enumeration_matches_brute_force() {
        for c_max in [5, 30, 65, 100] {
            let mut expected = brute_primitive(c_max);
            expected.sort_by_key(|&(a, _, c)| (c, a));
            let got: Vec<(i64, i64, i64)> = enumerate_primitive_triples(&int(c_max))
                .iter()
                .map(|t| {
                    let f = |x: &Integer| i64::try_from(x).unwrap();
                    (f(&t.a), f(&t.b), f(&t.c))
                })
                .collect();
            assert_eq!(got, expected, "c_max = {c_max}");
        }
        assert_eq!(brute_primitive(100).len(), 16);
    }

    proptest! {
        #[test]
        fn generator_identity(n in 1i64..2000, gap in 1i64..2000) {
            let t = katyayana_triple(&GeneratorPair::new(int(n + gap), int(n)).unwrap());
            prop_assert!(t.is_pythagorean());
        }

        #[test]
        fn exactness_is_scale_invariant(a in 1i64..200, b in 1i64..200, k in 1i64..40) {
            prop_assert_eq!(
                pothayanar_is_exact(&int(a), &int(b)).unwrap(),
                pothayanar_is_exact(&int(k * a), &int(k * b)).unwrap()
            );
        }
    }
}
