//! Binary prosody: guru/laghu patterns, their classical enumeration order,
//! recursive-halving powers, cadence counts and the triangle of binomials.

use std::fmt;
use std::str::FromStr;

use num_integer::Integer as _;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exactnum::{Integer, Rational};
use crate::trace::{NoTrace, Recorder, TraceSink};

pub const PRASTARA_MAX_LEN: u32 = 20;
pub const MATRA_MAX_CADENCE: u32 = 25;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Syllable {
    /// Long, two cadence units.
    Guru,
    /// Short, one cadence unit.
    Laghu,
}

impl Syllable {
    pub fn weight(self) -> u32 {
        match self {
            Syllable::Guru => 2,
            Syllable::Laghu => 1,
        }
    }

    pub fn letter(self) -> char {
        match self {
            Syllable::Guru => 'G',
            Syllable::Laghu => 'L',
        }
    }
}

/// A finite sequence of syllables, leftmost first. Text form is a string over
/// `{G, L}`.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct MeterPattern(Vec<Syllable>);

impl MeterPattern {
    pub fn new(syllables: Vec<Syllable>) -> Self {
        MeterPattern(syllables)
    }

    pub fn syllables(&self) -> &[Syllable] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn cadence(&self) -> u32 {
        self.0.iter().map(|s| s.weight()).sum()
    }

    pub fn guru_count(&self) -> usize {
        self.0.iter().filter(|&&s| s == Syllable::Guru).count()
    }

    fn prepend(&self, s: Syllable) -> MeterPattern {
        let mut v = Vec::with_capacity(self.0.len() + 1);
        v.push(s);
        v.extend_from_slice(&self.0);
        MeterPattern(v)
    }
}

impl fmt::Display for MeterPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.iter().try_for_each(|s| write!(f, "{}", s.letter()))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("invalid syllable {0:?}; expected G or L")]
pub struct ParsePatternError(pub char);

impl FromStr for MeterPattern {
    type Err = ParsePatternError;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        s.chars()
            .map(|c| match c {
                'G' | 'g' => Ok(Syllable::Guru),
                'L' | 'l' => Ok(Syllable::Laghu),
                other => Err(ParsePatternError(other)),
            })
            .collect::<std::result::Result<Vec<_>, _>>()
            .map(MeterPattern)
    }
}

/// Values that the halving recursion can raise to a power.
pub trait Multiplicative: Clone + fmt::Display {
    fn unit() -> Self;
    fn times(&self, other: &Self) -> Self;
}

impl Multiplicative for Integer {
    fn unit() -> Self {
        One::one()
    }

    fn times(&self, other: &Self) -> Self {
        self * other
    }
}

impl Multiplicative for Rational {
    fn unit() -> Self {
        Rational::one()
    }

    fn times(&self, other: &Self) -> Self {
        self * other
    }
}

/// `x^n` by recursive halving of the exponent:
/// `x^0 = 1`, `x^n = (x^(n/2))²` for even `n`, `x · (x^((n-1)/2))²` for odd `n`.
///
/// One trace event is emitted per halving level as the recursion unwinds, so
/// the first event is the deepest call (`n = 1`). Each carries the exponent,
/// the level (`depth`, 1 at the top call) and the value returned; the note
/// names the branch taken. The number of levels is the bit length of `n`.
pub fn power_traced<T: Multiplicative>(
    x: &T,
    n: &Integer,
    algorithm: &'static str,
    sink: &mut dyn TraceSink,
) -> Result<T> {
    if n.is_negative() {
        return Err(Error::NegativeExponent);
    }
    let mut rec = Recorder::new(sink, algorithm);
    halve(x, n, 1, &mut rec)
}

fn halve<T: Multiplicative>(x: &T, n: &Integer, depth: u64, rec: &mut Recorder<'_>) -> Result<T> {
    if n.is_zero() {
        return Ok(T::unit());
    }
    let inner = halve(x, &(n >> 1u32), depth + 1, rec)?;
    let squared = inner.times(&inner);
    let (value, branch) = if n.is_odd() {
        (x.times(&squared), "odd")
    } else {
        (squared, "even")
    };
    rec.record(|e| {
        e.with("n", n)
            .with("depth", depth)
            .with("value", &value)
            .note(branch)
    })?;
    Ok(value)
}

pub fn exp2(n: &Integer) -> Result<Integer> {
    power_traced(&Integer::from(2), n, "exp2", &mut NoTrace)
}

pub fn exp(x: &Integer, n: &Integer) -> Result<Integer> {
    power_traced(x, n, "exp", &mut NoTrace)
}

pub fn exp_traced(x: &Integer, n: &Integer, sink: &mut dyn TraceSink) -> Result<Integer> {
    power_traced(x, n, "exp", sink)
}

fn check_length(n: i64) -> Result<usize> {
    if n < 0 || n > PRASTARA_MAX_LEN as i64 {
        return Err(Error::LengthOutOfRange(n.to_string(), PRASTARA_MAX_LEN));
    }
    Ok(n as usize)
}

/// The next row of the prastāra: the leftmost Guru becomes Laghu and every
/// position to its left becomes Guru. `None` after the all-Laghu row.
pub fn next_row(p: &MeterPattern) -> Option<MeterPattern> {
    let first_guru = p.0.iter().position(|&s| s == Syllable::Guru)?;
    let mut next = p.0.clone();
    next[..first_guru].fill(Syllable::Guru);
    next[first_guru] = Syllable::Laghu;
    Some(MeterPattern(next))
}

/// All `2^n` patterns of length `n`, starting from all-Guru and applying the
/// row transformation until all-Laghu.
pub fn enumerate_prastara(n: i64) -> Result<Vec<MeterPattern>> {
    let len = check_length(n)?;
    let mut rows = Vec::with_capacity(1 << len);
    let mut row = MeterPattern(vec![Syllable::Guru; len]);
    loop {
        let next = next_row(&row);
        rows.push(row);
        match next {
            Some(r) => row = r,
            None => break,
        }
    }
    Ok(rows)
}

/// Row `i` (1-based) of the length-`n` prastāra, computed directly: the bits
/// of `i - 1`, least significant first, with 1 as Laghu.
pub fn index_to_pattern(i: &Integer, n: u64) -> Result<MeterPattern> {
    let rows = Integer::one() << n;
    if i < &Integer::one() || i > &rows {
        return Err(Error::IndexOutOfRange(i.to_string(), n.to_string()));
    }
    let offset: Integer = i - 1;
    let syllables = (0..n)
        .map(|bit| {
            if offset.bit(bit) {
                Syllable::Laghu
            } else {
                Syllable::Guru
            }
        })
        .collect();
    Ok(MeterPattern(syllables))
}

/// Inverse of [`index_to_pattern`].
pub fn pattern_to_index(p: &MeterPattern) -> Integer {
    let mut index = Integer::zero();
    for (bit, s) in p.0.iter().enumerate() {
        if *s == Syllable::Laghu {
            index.set_bit(bit as u64, true);
        }
    }
    index + 1
}

/// Number of patterns with cadence exactly `n`: `F_n = F_{n-1} + F_{n-2}`,
/// `F_0 = F_1 = 1`.
pub fn matra_count(n: i64) -> Result<Integer> {
    if n < 0 {
        return Err(Error::NegativeCadence);
    }
    let (mut prev, mut cur) = (Integer::one(), Integer::one());
    for _ in 1..n {
        let next = &prev + &cur;
        prev = std::mem::replace(&mut cur, next);
    }
    Ok(cur)
}

/// Patterns of cadence exactly `n`: those starting with Laghu (followed by
/// cadence `n - 1`) first, then those starting with Guru (cadence `n - 2`).
pub fn enumerate_matra(n: i64) -> Result<Vec<MeterPattern>> {
    if n < 0 || n > MATRA_MAX_CADENCE as i64 {
        return Err(Error::CadenceOutOfRange(n.to_string(), MATRA_MAX_CADENCE));
    }
    let n = n as usize;
    let mut by_cadence: Vec<Vec<MeterPattern>> = Vec::with_capacity(n + 1);
    by_cadence.push(vec![MeterPattern::default()]);
    for c in 1..=n {
        let mut level: Vec<MeterPattern> = by_cadence[c - 1]
            .iter()
            .map(|p| p.prepend(Syllable::Laghu))
            .collect();
        if c >= 2 {
            level.extend(by_cadence[c - 2].iter().map(|p| p.prepend(Syllable::Guru)));
        }
        by_cadence.push(level);
    }
    Ok(by_cadence.swap_remove(n))
}

/// The triangle `rows[n][k] = C(n, k)`, built only by addition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MeruTable {
    rows: Vec<Vec<Integer>>,
}

impl MeruTable {
    pub fn build(last_row: i64) -> Result<Self> {
        Self::build_traced(last_row, &mut NoTrace)
    }

    /// One trace event per row.
    pub fn build_traced(last_row: i64, sink: &mut dyn TraceSink) -> Result<Self> {
        if last_row < 0 {
            return Err(Error::NegativeRow);
        }
        let mut rec = Recorder::new(sink, "meru");
        let mut rows: Vec<Vec<Integer>> = Vec::with_capacity(last_row as usize + 1);
        for n in 0..=last_row as usize {
            let row = if n == 0 {
                vec![Integer::one()]
            } else {
                let above = &rows[n - 1];
                let mut row = Vec::with_capacity(n + 1);
                row.push(Integer::one());
                row.extend(above.windows(2).map(|w| &w[0] + &w[1]));
                row.push(Integer::one());
                row
            };
            rec.record(|mut e| {
                e = e.with("row", n);
                for (k, v) in row.iter().enumerate() {
                    e = e.with(format!("c{k}"), v);
                }
                e
            })?;
            rows.push(row);
        }
        Ok(MeruTable { rows })
    }

    pub fn rows(&self) -> &[Vec<Integer>] {
        &self.rows
    }

    pub fn get(&self, n: usize, k: usize) -> Option<&Integer> {
        self.rows.get(n)?.get(k)
    }

    pub fn into_last_row(mut self) -> Vec<Integer> {
        self.rows.pop().unwrap_or_default()
    }
}

pub fn meru_row(n: i64) -> Result<Vec<Integer>> {
    Ok(MeruTable::build(n)?.into_last_row())
}

/// Player A's share of the stakes when A still needs `r` wins and B needs `s`,
/// every round fair: `Σ_{j=r}^{r+s-1} C(r+s-1, j) / 2^(r+s-1)`.
pub fn points_share(r: i64, s: i64) -> Result<Rational> {
    if r < 1 || s < 1 {
        return Err(Error::InvalidWins);
    }
    let rounds = r + s - 1;
    let row = meru_row(rounds)?;
    let favourable: Integer = row[r as usize..].iter().sum();
    let total = exp2(&Integer::from(rounds))?;
    Rational::new(favourable, total)
}
