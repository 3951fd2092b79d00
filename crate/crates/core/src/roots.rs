//! Square roots: exact digit-by-digit extraction and two rational iterations.

use num_integer::Integer as _;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exactnum::{Integer, Rational};
use crate::trace::{NoTrace, Recorder, TraceSink};

/// State after consuming one digit group.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootState {
    /// Value of the digit groups consumed so far.
    pub processed: Integer,
    /// Root digits found so far.
    pub root: Integer,
    pub remainder: Integer,
    /// Digit chosen at this step.
    pub digit: Integer,
}

impl RootState {
    /// `processed = root² + remainder` and `0 <= remainder <= 2·root`.
    pub fn holds(&self) -> bool {
        self.processed == &self.root * &self.root + &self.remainder
            && !self.remainder.is_negative()
            && self.remainder <= Integer::from(2) * &self.root
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SqrtResult {
    pub root: Integer,
    pub remainder: Integer,
    pub trace: Vec<RootState>,
}

/// Splits `n` into base² digit groups, most significant first.
fn digit_groups(n: &Integer, group: &Integer) -> Vec<Integer> {
    let mut groups = Vec::new();
    let mut rest = n.clone();
    while !rest.is_zero() {
        let (q, r) = rest.div_rem(group);
        groups.push(r);
        rest = q;
    }
    groups.reverse();
    groups
}

/// Floor square root by place-value digit extraction.
///
/// The radicand is split into two-digit groups in `base`. For each group the
/// running remainder is shifted one group left and the group added; the next
/// root digit is the largest `d < base` with `(2·base·root + d)·d` not
/// exceeding it.
pub fn aryabhata_sqrt(n: &Integer, base: &Integer) -> Result<SqrtResult> {
    if n.is_negative() {
        return Err(Error::NegativeRadicand);
    }
    if base < &Integer::from(2) {
        return Err(Error::InvalidBase);
    }
    let group = base * base;
    let mut root = Integer::zero();
    let mut remainder = Integer::zero();
    let mut processed = Integer::zero();
    let mut trace = Vec::new();
    for g in digit_groups(n, &group) {
        processed = &processed * &group + &g;
        let current = &remainder * &group + &g;
        let divisor_base = Integer::from(2) * base * &root;
        let digit = largest_digit(&divisor_base, &current, base);
        remainder = current - (&divisor_base + &digit) * &digit;
        root = &root * base + &digit;
        trace.push(RootState {
            processed: processed.clone(),
            root: root.clone(),
            remainder: remainder.clone(),
            digit,
        });
    }
    Ok(SqrtResult {
        root,
        remainder,
        trace,
    })
}

pub fn aryabhata_sqrt_traced(
    n: &Integer,
    base: &Integer,
    sink: &mut dyn TraceSink,
) -> Result<SqrtResult> {
    let result = aryabhata_sqrt(n, base)?;
    let mut rec = Recorder::new(sink, "sqrt");
    for s in &result.trace {
        rec.record(|e| {
            e.with("processed", &s.processed)
                .with("digit", &s.digit)
                .with("root", &s.root)
                .with("remainder", &s.remainder)
        })?;
    }
    Ok(result)
}

// largest d in [0, base) with (divisor_base + d)·d <= current; monotone in d
fn largest_digit(divisor_base: &Integer, current: &Integer, base: &Integer) -> Integer {
    let fits = |d: &Integer| (divisor_base + d) * d <= *current;
    let (mut lo, mut hi) = (Integer::zero(), base - 1);
    while lo < hi {
        let mid = (&lo + &hi + 1) >> 1;
        if fits(&mid) {
            lo = mid;
        } else {
            hi = mid - 1;
        }
    }
    lo
}

fn check_positive(n: &Rational, x: &Rational) -> Result<()> {
    if !n.is_positive() || !x.is_positive() {
        return Err(Error::NonPositiveInput);
    }
    Ok(())
}

/// `(x + N/x) / 2`.
pub fn heron_step(n: &Rational, x: &Rational) -> Result<Rational> {
    check_positive(n, x)?;
    let half = Rational::new(Integer::one(), Integer::from(2))?;
    Ok(&(x + &n.checked_div(x)?) * &half)
}

/// With `e = (N − x²)/(2x)` and `h = x + e`, returns `h − e²/(2h)`.
pub fn bakhshali_step(n: &Rational, x: &Rational) -> Result<Rational> {
    check_positive(n, x)?;
    let two = Rational::from(2);
    let e = (n - &x.square()).checked_div(&(&two * x))?;
    let h = x + &e;
    if h.is_zero() {
        return Err(Error::ZeroDivisor);
    }
    Ok(&h - &e.square().checked_div(&(&two * &h))?)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    Heron,
    Bakhshali,
}

impl Method {
    pub fn name(self) -> &'static str {
        match self {
            Method::Heron => "heron",
            Method::Bakhshali => "bakhshali",
        }
    }

    pub fn step(self, n: &Rational, x: &Rational) -> Result<Rational> {
        match self {
            Method::Heron => heron_step(n, x),
            Method::Bakhshali => bakhshali_step(n, x),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IterationStep {
    pub index: u64,
    pub estimate: Rational,
    /// `|estimate² − N|`.
    pub error_bound: Rational,
}

impl IterationStep {
    fn new(index: u64, estimate: Rational, n: &Rational) -> Self {
        let error_bound = (&estimate.square() - n).abs();
        IterationStep {
            index,
            estimate,
            error_bound,
        }
    }
}

pub fn iterate(
    method: Method,
    n: &Rational,
    x0: &Rational,
    steps: u64,
) -> Result<Vec<IterationStep>> {
    iterate_traced(method, n, x0, steps, &mut NoTrace)
}

/// `steps + 1` iterates starting from `x0`, each with its exact error.
pub fn iterate_traced(
    method: Method,
    n: &Rational,
    x0: &Rational,
    steps: u64,
    sink: &mut dyn TraceSink,
) -> Result<Vec<IterationStep>> {
    check_positive(n, x0)?;
    let mut rec = Recorder::new(sink, method.name());
    let mut out = Vec::with_capacity(steps as usize + 1);
    let mut x = x0.clone();
    for index in 0..=steps {
        if index > 0 {
            x = method.step(n, &x)?;
        }
        let s = IterationStep::new(index, x.clone(), n);
        rec.record(|e| {
            e.with("index", s.index)
                .with("estimate", &s.estimate)
                .with("error_bound", &s.error_bound)
        })?;
        out.push(s);
    }
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

    fn sqrt10(n: i64) -> (Integer, Integer) {
        let r = aryabhata_sqrt(&int(n), &int(10)).unwrap();
        (r.root, r.remainder)
    }

    #[test]
    fn aryabhata_examples() {
        assert_eq!(sqrt10(1521), (int(39), int(0)));
        assert_eq!(sqrt10(0), (int(0), int(0)));
        assert!(aryabhata_sqrt(&int(0), &int(10)).unwrap().trace.is_empty());
        assert_eq!(sqrt10(2000), (int(44), int(64)));
        assert_eq!(
            aryabhata_sqrt(&int(-1), &int(10)),
            Err(Error::NegativeRadicand)
        );
        assert_eq!(aryabhata_sqrt(&int(4), &int(1)), Err(Error::InvalidBase));
    }

    #[test]
    fn trace_of_1521() {
        let r = aryabhata_sqrt(&int(1521), &int(10)).unwrap();
        let rows: Vec<[i64; 4]> = r
            .trace
            .iter()
            .map(|s| {
                [&s.processed, &s.digit, &s.root, &s.remainder].map(|v| i64::try_from(v).unwrap())
            })
            .collect();
        // 15 -> digit 3, remainder 6; 621 -> digit 9 (69·9 = 621), remainder 0
        assert_eq!(rows, vec![[15, 3, 3, 6], [1521, 9, 39, 0]]);
        assert!(r.trace.iter().all(RootState::holds));
    }

    #[test]
    fn small_radicands_match_linear_scan() {
        for n in 0..5000i64 {
            let floor = (0..).take_while(|k: &i64| k * k <= n).last().unwrap();
            for base in [2, 3, 10, 16, 100] {
                let r = aryabhata_sqrt(&int(n), &int(base)).unwrap();
                assert_eq!(r.root, int(floor), "n={n} base={base}");
                assert_eq!(r.remainder, int(n - floor * floor));
            }
        }
    }

    #[test]
    fn heron_examples() {
        assert_eq!(heron_step(&rat("2"), &rat("1")).unwrap(), rat("3/2"));
        assert_eq!(heron_step(&rat("2"), &rat("3/2")).unwrap(), rat("17/12"));
        assert_eq!(heron_step(&rat("4"), &rat("2")).unwrap(), rat("2"));
        assert_eq!(
            heron_step(&rat("0"), &rat("2")),
            Err(Error::NonPositiveInput)
        );
        assert_eq!(
            heron_step(&rat("2"), &rat("-1")),
            Err(Error::NonPositiveInput)
        );
    }

    #[test]
    fn bakhshali_examples() {
        assert_eq!(bakhshali_step(&rat("2"), &rat("1")).unwrap(), rat("17/12"));
        assert_eq!(bakhshali_step(&rat("4"), &rat("2")).unwrap(), rat("2"));
        assert_eq!(
            bakhshali_step(&rat("2"), &rat("3/2")).unwrap(),
            rat("577/408")
        );
        assert_eq!(
            bakhshali_step(&rat("2"), &rat("0")),
            Err(Error::NonPositiveInput)
        );
    }

    #[test]
    fn iterate_examples() {
        let est = |m, n: &str, x: &str, k| -> Vec<String> {
            iterate(m, &rat(n), &rat(x), k)
                .unwrap()
                .iter()
                .map(|s| s.estimate.to_string())
                .collect()
        };
        assert_eq!(
            est(Method::Heron, "2", "1", 3),
            ["1", "3/2", "17/12", "577/408"]
        );
        assert_eq!(est(Method::Heron, "9/4", "3/2", 4), ["3/2"; 5]);
        assert_eq!(est(Method::Bakhshali, "2", "1", 1), ["1", "17/12"]);
        let steps = iterate(Method::Heron, &rat("2"), &rat("1"), 2).unwrap();
        assert_eq!(steps[1].error_bound, rat("1/4"));
        assert_eq!(steps[2].error_bound, rat("1/144"));
        assert_eq!(steps[2].index, 2);
        assert_eq!(
            iterate(Method::Heron, &rat("2"), &rat("1"), 0)
                .unwrap()
                .len(),
            1
        );
    }

    fn positive_rational() -> impl Strategy<Value = Rational> {
        (1i64..10_000, 1i64..10_000).prop_map(|(n, d)| Rational::new(int(n), int(d)).unwrap())
    }

    proptest! {
        #[test]
        fn bakhshali_is_two_heron_steps(n in positive_rational(), x in positive_rational()) {
            let twice = heron_step(&n, &heron_step(&n, &x).unwrap()).unwrap();
            prop_assert_eq!(bakhshali_step(&n, &x).unwrap(), twice);
        }

        #[test]
        fn heron_overshoots(n in positive_rational(), x in positive_rational()) {
            prop_assert!(heron_step(&n, &x).unwrap().square() >= n);
        }

        #[test]
        fn heron_error_non_increasing(n in positive_rational(), x in positive_rational()) {
            let steps = iterate(Method::Heron, &n, &x, 5).unwrap();
            for w in steps[1..].windows(2) {
                prop_assert!(w[1].error_bound <= w[0].error_bound);
            }
        }

        #[test]
        fn every_state_holds(n in 0u128..u128::MAX, base in 2i64..40) {
            let r = aryabhata_sqrt(&Integer::from(n), &int(base)).unwrap();
            prop_assert!(r.trace.iter().all(RootState::holds));
            prop_assert_eq!(&r.root * &r.root + &r.remainder, Integer::from(n));
        }
    }
}
