//! Classical number-theory algorithms in exact arithmetic.
//!
//! - [`triples`]: the 7/8 + 1/2 hypotenuse rule and the `(m² − n², 2mn, m² + n²)` generator
//! - [`prosody`]: guru/laghu enumeration, halving exponentiation, cadence counts, binomials
//! - [`roots`]: digit-by-digit square root, Heron and Bakhshālī iterations
//! - [`diophantine`]: the pulveriser (`ax + by = c`) and the cyclic method (`x² − Ny² = 1`)
//! - [`comparative`]: Egyptian fractions, the sieve, Euclid's new prime
//!
//! Every algorithm can report its intermediate states through a
//! [`trace::TraceSink`]; the [`cli`] module exposes them all as subcommands.

pub mod cli;
pub mod comparative;
pub mod diophantine;
pub mod error;
pub mod exactnum;
pub mod prosody;
pub mod roots;
pub mod trace;
pub mod triples;

pub use error::{Error, Result};
pub use exactnum::{extended_gcd, gcd, rational_make, Integer, Rational};
