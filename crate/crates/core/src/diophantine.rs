//! Indeterminate equations: the pulveriser for `ax + by = c` and the cyclic
//! method for `x² − N·y² = 1`.

use num_integer::Integer as _;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exactnum::{extended_gcd, gcd, Integer};
use crate::trace::{NoTrace, Recorder, TraceSink};

/// Canonical solution of `ax + by = c`.
///
/// All solutions are `(x + t·x_period, y − t·y_period)` for integer `t`, and
/// `0 <= x < x_period` whenever `x_period > 0`. Here `x_period = |b|/g` and
/// `y_period = sign(b)·a/g`. When `b = 0` both periods are 0 and `y` is free.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KuttakaSolution {
    pub x: Integer,
    pub y: Integer,
    pub x_period: Integer,
    pub y_period: Integer,
    pub g: Integer,
}

impl KuttakaSolution {
    /// The solution for parameter `t`.
    pub fn at(&self, t: &Integer) -> (Integer, Integer) {
        (&self.x + t * &self.x_period, &self.y - t * &self.y_period)
    }
}

pub fn kuttaka(a: &Integer, b: &Integer, c: &Integer) -> Result<KuttakaSolution> {
    kuttaka_traced(a, b, c, &mut NoTrace)
}

/// Solves `ax + by = c`, returning the solution with the least non-negative
/// `x`.
///
/// The trace lists the division cascade of `a` by `b` (one event per
/// quotient), then the scaled and reduced solution.
pub fn kuttaka_traced(
    a: &Integer,
    b: &Integer,
    c: &Integer,
    sink: &mut dyn TraceSink,
) -> Result<KuttakaSolution> {
    if a.is_zero() && b.is_zero() {
        return Err(Error::DegenerateInput);
    }
    let mut rec = Recorder::new(sink, "kuttaka");
    if rec.enabled() {
        let (mut dividend, mut divisor) = (a.clone(), b.clone());
        while !divisor.is_zero() {
            let (q, r) = dividend.div_mod_floor(&divisor);
            rec.record(|e| {
                e.with("dividend", &dividend)
                    .with("divisor", &divisor)
                    .with("quotient", &q)
                    .with("remainder", &r)
                    .note("reduce")
            })?;
            dividend = std::mem::replace(&mut divisor, r);
        }
    }

    let (g, x0, y0) = extended_gcd(a, b);
    let (scale, rem) = c.div_rem(&g);
    if !rem.is_zero() {
        return Err(Error::NotSolvable {
            g: g.to_string(),
            c: c.to_string(),
        });
    }
    let x_period = b.abs() / &g;
    let y_period = a * b.signum() / &g;
    let mut x = x0 * &scale;
    let mut y = y0 * &scale;
    if x_period.is_positive() {
        let t = x.div_floor(&x_period);
        x -= &t * &x_period;
        y += &t * &y_period;
    }
    let solution = KuttakaSolution {
        x,
        y,
        x_period,
        y_period,
        g,
    };
    rec.record(|e| {
        e.with("x", &solution.x)
            .with("y", &solution.y)
            .with("x_period", &solution.x_period)
            .with("y_period", &solution.y_period)
            .with("g", &solution.g)
            .note("solution")
    })?;
    Ok(solution)
}

/// A triple `(a, b, k)` with `a² − N·b² = k`, plus the multiplier `m` that
/// produced it (0 for the initial state).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChakravalaState {
    pub a: Integer,
    pub b: Integer,
    pub k: Integer,
    pub m: Integer,
}

impl ChakravalaState {
    pub fn new(a: Integer, b: Integer, k: Integer) -> Self {
        ChakravalaState {
            a,
            b,
            k,
            m: Integer::zero(),
        }
    }

    /// `(1, 0, 1)`, the neutral element of composition.
    pub fn identity() -> Self {
        Self::new(Integer::one(), Integer::zero(), Integer::one())
    }

    pub fn satisfies(&self, n: &Integer) -> bool {
        &self.a * &self.a - n * &self.b * &self.b == self.k
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PellSolution {
    pub x: Integer,
    pub y: Integer,
    pub n: Integer,
}

impl PellSolution {
    pub fn verify(&self) -> bool {
        &self.x * &self.x - &self.n * &self.y * &self.y == Integer::one()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChakravalaRun {
    pub solution: PellSolution,
    pub trace: Vec<ChakravalaState>,
}

/// Composition of two triples for the same `N`:
/// `(a₁a₂ + N·b₁b₂, a₁b₂ + a₂b₁, k₁k₂)`.
pub fn brahmagupta_compose(
    s1: &ChakravalaState,
    s2: &ChakravalaState,
    n: &Integer,
) -> ChakravalaState {
    ChakravalaState::new(
        &s1.a * &s2.a + n * &s1.b * &s2.b,
        &s1.a * &s2.b + &s2.a * &s1.b,
        &s1.k * &s2.k,
    )
}

fn exact_div(num: Integer, den: &Integer) -> Integer {
    let (q, r) = num.div_rem(den);
    debug_assert!(r.is_zero(), "inexact division in cycle step");
    q
}

/// Among `m >= 1` with `m ≡ residue (mod modulus)`, the one minimising
/// `|m² − N|`; ties go to the larger `m`.
fn choose_multiplier(residue: &Integer, modulus: &Integer, n: &Integer, root: &Integer) -> Integer {
    // largest admissible m <= floor(√N), and the next one above it
    let below = root - (root - residue).mod_floor(modulus);
    let above = &below + modulus;
    if below < Integer::one() {
        return above;
    }
    let dist = |m: &Integer| (m * m - n).abs();
    if dist(&below) < dist(&above) {
        below
    } else {
        above
    }
}

pub fn chakravala(n: &Integer) -> Result<ChakravalaRun> {
    chakravala_traced(n, &mut NoTrace)
}

/// Fundamental solution of `x² − N·y² = 1` by the cyclic method.
///
/// Starts from `b = 1` and the `a` nearest `√N`; each step picks `m` with
/// `|k|` dividing `a + b·m` and `|m² − N|` minimal, then moves to
/// `((a·m + N·b)/|k|, (a + b·m)/|k|, (m² − N)/k)` until `k = 1`. No shortcut
/// compositions are taken for small `|k|`.
pub fn chakravala_traced(n: &Integer, sink: &mut dyn TraceSink) -> Result<ChakravalaRun> {
    if n < &Integer::from(2) {
        return Err(Error::InvalidModulus);
    }
    let root = n.sqrt();
    if &root * &root == *n {
        return Err(Error::PerfectSquare(n.to_string()));
    }
    let mut rec = Recorder::new(sink, "chakravala");
    let record = |rec: &mut Recorder<'_>, s: &ChakravalaState| {
        rec.record(|e| {
            e.with("a", &s.a)
                .with("b", &s.b)
                .with("k", &s.k)
                .with("m", &s.m)
        })
    };

    let above: Integer = &root + 1;
    let a = if (&root * &root - n).abs() <= (&above * &above - n).abs() {
        root.clone()
    } else {
        above
    };
    let k = &a * &a - n;
    let mut state = ChakravalaState::new(a, Integer::one(), k);
    record(&mut rec, &state)?;
    let mut trace = vec![state.clone()];

    while !state.k.is_one() {
        let modulus = state.k.abs();
        // gcd(b, k) = 1, so a + b·m ≡ 0 has the unique residue −a·b⁻¹
        let (_, b_inv, _) = extended_gcd(&state.b, &modulus);
        let residue = (-&state.a * b_inv).mod_floor(&modulus);
        let m = choose_multiplier(&residue, &modulus, n, &root);
        let next = ChakravalaState {
            a: exact_div(&state.a * &m + n * &state.b, &modulus),
            b: exact_div(&state.a + &state.b * &m, &modulus),
            k: exact_div(&m * &m - n, &state.k),
            m,
        };
        debug_assert!(gcd(&next.a, &next.b).is_one());
        record(&mut rec, &next)?;
        trace.push(next.clone());
        state = next;
    }

    Ok(ChakravalaRun {
        solution: PellSolution {
            x: state.a,
            y: state.b,
            n: n.clone(),
        },
        trace,
    })
}
