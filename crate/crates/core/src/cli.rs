//! Command-line front end.
//!
//! `pulveriser <subcommand> <args...> [--json] [--trace[=PATH]]`
//!
//! Results go to stdout, diagnostics to stderr. With `--trace` the derivation
//! is streamed as JSON lines, either interleaved on stdout with a `TRACE `
//! prefix or, with `--trace=PATH`, into a file. Exit codes: 0 success, 1 I/O
//! failure, 2 usage error, 3 domain error (the error name leads the stderr
//! line).

use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::PathBuf;

use clap::{Parser, Subcommand};
use num_traits::Signed;
use serde_json::{json, Value};

use crate::comparative::{egyptian_decompose_traced, euclid_new_prime_traced, sieve_traced};
use crate::diophantine::{chakravala_traced, kuttaka_traced};
use crate::error::{Error, Result};
use crate::exactnum::{Integer, Rational};
use crate::prosody::{
    enumerate_matra, enumerate_prastara, exp_traced, index_to_pattern, matra_count,
    pattern_to_index, points_share, MeruTable, MeterPattern, MATRA_MAX_CADENCE,
};
use crate::roots::{aryabhata_sqrt_traced, iterate_traced, Method};
use crate::trace::{LineSink, NoTrace, Recorder, TraceSink};
use crate::triples::{enumerate_primitive_triples_traced, pothayanar_estimate};

pub const EXIT_OK: u8 = 0;
pub const EXIT_IO: u8 = 1;
pub const EXIT_USAGE: u8 = 2;
pub const EXIT_DOMAIN: u8 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "pulveriser",
    version,
    about = "Classical number-theory algorithms in exact arithmetic"
)]
pub struct Cli {
    /// Print results as JSON (all numbers as decimal strings)
    #[arg(long, global = true)]
    pub json: bool,

    /// Stream the derivation as JSON lines; to stdout (prefixed "TRACE ") or to PATH
    #[arg(long, global = true, value_name = "PATH", num_args = 0..=1, require_equals = true)]
    pub trace: Option<Option<PathBuf>>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Subcommand)]
pub enum Command {
    /// Primitive Pythagorean triples with hypotenuse <= C_MAX
    #[command(allow_negative_numbers = true)]
    Triples { c_max: Integer },
    /// Hypotenuse estimate 7a/8 + b/2 and whether it is exact
    #[command(allow_negative_numbers = true)]
    Pothayanar { a: Rational, b: Rational },
    /// All guru/laghu patterns of length N in classical order
    #[command(allow_negative_numbers = true)]
    Prastara { n: i64 },
    /// Pattern at row I of the length-N enumeration
    #[command(allow_negative_numbers = true)]
    Nashta { i: Integer, n: u64 },
    /// Row index of a G/L pattern
    #[command(allow_negative_numbers = true)]
    Uddishta { pattern: MeterPattern },
    /// Count (and, for small N, list) the patterns of cadence N
    #[command(allow_negative_numbers = true)]
    Matra { n: i64 },
    /// Row N of the triangle of binomial coefficients
    #[command(allow_negative_numbers = true)]
    Meru { n: i64 },
    /// X raised to N by recursive halving
    #[command(allow_negative_numbers = true)]
    Exp { x: Integer, n: Integer },
    /// Share of the stakes for the player needing R wins against one needing S
    #[command(allow_negative_numbers = true)]
    Points { r: i64, s: i64 },
    /// Integer square root by digit-by-digit extraction
    #[command(allow_negative_numbers = true)]
    Sqrt {
        n: Integer,
        #[arg(long, default_value = "10")]
        base: Integer,
    },
    /// Heron iterates for the square root of N
    #[command(allow_negative_numbers = true)]
    Heron {
        n: Rational,
        x0: Rational,
        steps: u64,
    },
    /// Bakhshali iterates for the square root of N
    #[command(allow_negative_numbers = true)]
    Bakhshali {
        n: Rational,
        x0: Rational,
        steps: u64,
    },
    /// Solve a*x + b*y = c
    #[command(allow_negative_numbers = true)]
    Kuttaka { a: Integer, b: Integer, c: Integer },
    /// Fundamental solution of x^2 - N*y^2 = 1 by the cyclic method
    #[command(allow_negative_numbers = true)]
    Chakravala { n: Integer },
    /// Greedy unit-fraction decomposition of a positive rational
    #[command(allow_negative_numbers = true)]
    Egyptian { q: Rational },
    /// Primes up to LIMIT
    #[command(allow_negative_numbers = true)]
    Sieve { limit: i64 },
    /// product(PRIMES) + 1 and its least prime factor
    #[command(allow_negative_numbers = true)]
    Euclid {
        #[arg(required = true)]
        primes: Vec<Integer>,
    },
}

/// A successful result in both output modes.
struct Output {
    plain: String,
    json: Value,
}

fn s(v: impl ToString) -> Value {
    Value::String(v.to_string())
}

fn join<T: std::fmt::Display>(items: &[T], sep: &str) -> String {
    items
        .iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(sep)
}

fn strings<T: std::fmt::Display>(items: &[T]) -> Value {
    Value::Array(items.iter().map(s).collect())
}

fn iteration(
    method: Method,
    n: &Rational,
    x0: &Rational,
    steps: u64,
    sink: &mut dyn TraceSink,
) -> Result<Output> {
    let rows = iterate_traced(method, n, x0, steps, sink)?;
    let plain = rows
        .iter()
        .map(|r| format!("{} {} {}", r.index, r.estimate, r.error_bound))
        .collect::<Vec<_>>()
        .join("\n");
    let json = rows
        .iter()
        .map(|r| json!({"index": s(r.index), "estimate": s(&r.estimate), "error_bound": s(&r.error_bound)}))
        .collect();
    Ok(Output { plain, json })
}

fn execute(command: &Command, sink: &mut dyn TraceSink) -> Result<Output> {
    let out = match command {
        Command::Triples { c_max } => {
            let ts = enumerate_primitive_triples_traced(c_max, sink)?;
            Output {
                plain: ts
                    .iter()
                    .map(|t| format!("{} {} {}", t.a, t.b, t.c))
                    .collect::<Vec<_>>()
                    .join("\n"),
                json: ts
                    .iter()
                    .map(|t| json!({"a": s(&t.a), "b": s(&t.b), "c": s(&t.c)}))
                    .collect(),
            }
        }
        Command::Pothayanar { a, b } => {
            let c = pothayanar_estimate(a, b)?;
            let legs = &a.square() + &b.square();
            let exact = c.square() == legs;
            Recorder::new(sink, "pothayanar").record(|e| {
                e.with("a", a)
                    .with("b", b)
                    .with("estimate", &c)
                    .with("estimate_squared", c.square())
                    .with("legs_squared", &legs)
            })?;
            Output {
                plain: format!("{} {}", c, if exact { "exact" } else { "inexact" }),
                json: json!({"estimate": s(&c), "exact": exact}),
            }
        }
        Command::Prastara { n } => {
            let rows = enumerate_prastara(*n)?;
            Output {
                plain: join(&rows, "\n"),
                json: strings(&rows),
            }
        }
        Command::Nashta { i, n } => {
            let p = index_to_pattern(i, *n)?;
            Output {
                plain: p.to_string(),
                json: json!({"pattern": s(&p)}),
            }
        }
        Command::Uddishta { pattern } => {
            let i = pattern_to_index(pattern);
            Output {
                plain: i.to_string(),
                json: json!({"index": s(&i)}),
            }
        }
        Command::Matra { n } => {
            let count = matra_count(*n)?;
            if *n <= MATRA_MAX_CADENCE as i64 {
                let ps = enumerate_matra(*n)?;
                let mut plain = format!("count {count}");
                for p in &ps {
                    plain.push('\n');
                    plain.push_str(&p.to_string());
                }
                Output {
                    plain,
                    json: json!({"count": s(&count), "patterns": strings(&ps)}),
                }
            } else {
                Output {
                    plain: format!("count {count}"),
                    json: json!({"count": s(&count)}),
                }
            }
        }
        Command::Meru { n } => {
            let row = MeruTable::build_traced(*n, sink)?.into_last_row();
            Output {
                plain: join(&row, " "),
                json: strings(&row),
            }
        }
        Command::Exp { x, n } => {
            let v = exp_traced(x, n, sink)?;
            Output {
                plain: v.to_string(),
                json: json!({"value": s(&v)}),
            }
        }
        Command::Points { r, s: wins_b } => {
            let a = points_share(*r, *wins_b)?;
            let b = &Rational::one() - &a;
            Output {
                plain: a.to_string(),
                json: json!({"a": s(&a), "b": s(&b)}),
            }
        }
        Command::Sqrt { n, base } => {
            let r = aryabhata_sqrt_traced(n, base, sink)?;
            Output {
                plain: format!("{} remainder {}", r.root, r.remainder),
                json: json!({"root": s(&r.root), "remainder": s(&r.remainder)}),
            }
        }
        Command::Heron { n, x0, steps } => iteration(Method::Heron, n, x0, *steps, sink)?,
        Command::Bakhshali { n, x0, steps } => iteration(Method::Bakhshali, n, x0, *steps, sink)?,
        Command::Kuttaka { a, b, c } => {
            let k = kuttaka_traced(a, b, c, sink)?;
            Output {
                plain: format!(
                    "x={} y={} x_period={} y_period={} g={}",
                    k.x, k.y, k.x_period, k.y_period, k.g
                ),
                json: json!({
                    "x": s(&k.x),
                    "y": s(&k.y),
                    "x_period": s(&k.x_period),
                    "y_period": s(&k.y_period),
                    "g": s(&k.g),
                }),
            }
        }
        Command::Chakravala { n } => {
            let run = chakravala_traced(n, sink)?;
            let p = &run.solution;
            Output {
                plain: format!("{} {}", p.x, p.y),
                json: json!({"n": s(&p.n), "x": s(&p.x), "y": s(&p.y)}),
            }
        }
        Command::Egyptian { q } => {
            if !q.is_positive() {
                return Err(Error::OutOfRange);
            }
            let whole = q.floor();
            let frac = q - &Rational::from_integer(whole.clone());
            let terms = if frac.is_zero() {
                Vec::new()
            } else {
                egyptian_decompose_traced(&frac, sink)?.terms()
            };
            let mut parts: Vec<String> = Vec::new();
            if whole.is_positive() {
                parts.push(whole.to_string());
            }
            parts.extend(terms.iter().map(ToString::to_string));
            Output {
                plain: parts.join(" + "),
                json: json!({"integer_part": s(&whole), "terms": strings(&terms)}),
            }
        }
        Command::Sieve { limit } => {
            let ps = sieve_traced(*limit, sink)?;
            Output {
                plain: join(&ps, " "),
                json: strings(&ps),
            }
        }
        Command::Euclid { primes } => {
            let (witness, new_prime) = euclid_new_prime_traced(primes, sink)?;
            Output {
                plain: format!("witness {witness} new_prime {new_prime}"),
                json: json!({"witness": s(&witness), "new_prime": s(&new_prime)}),
            }
        }
    };
    Ok(out)
}

fn emit(out: &mut dyn Write, result: &Output, as_json: bool) -> std::io::Result<()> {
    if as_json {
        writeln!(out, "{}", result.json)
    } else {
        writeln!(out, "{}", result.plain)
    }
}

/// Runs one invocation; `args[0]` is the program name.
pub fn run(args: &[String], out: &mut dyn Write, err: &mut dyn Write) -> u8 {
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let rendered = e.render().to_string();
            let target: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(target, "{rendered}");
            return code;
        }
    };

    let outcome = match &cli.trace {
        None => execute(&cli.command, &mut NoTrace),
        Some(None) => {
            let mut sink = LineSink::with_prefix(&mut *out, "TRACE ");
            let r = sink
                .start()
                .map_err(Error::from)
                .and_then(|_| execute(&cli.command, &mut sink));
            drop(sink);
            r
        }
        Some(Some(path)) => {
            let file = match File::create(path) {
                Ok(f) => f,
                Err(e) => {
                    let _ = writeln!(err, "cannot open trace file {}: {e}", path.display());
                    return EXIT_IO;
                }
            };
            let mut sink = LineSink::new(BufWriter::new(file));
            let r = sink
                .start()
                .map_err(Error::from)
                .and_then(|_| execute(&cli.command, &mut sink));
            match sink.close() {
                Ok(_) => r,
                Err(e) => r.and(Err(e.into())),
            }
        }
    };

    match outcome {
        Ok(result) => match emit(out, &result, cli.json) {
            Ok(()) => EXIT_OK,
            Err(_) => EXIT_IO,
        },
        Err(Error::Trace(e)) => {
            let _ = writeln!(err, "{}: {e}", e.name());
            EXIT_IO
        }
        Err(e) => {
            let _ = writeln!(err, "{}: {e}", e.name());
            EXIT_DOMAIN
        }
    }
}
