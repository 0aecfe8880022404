//! Exact symbolic scalars for the planar exotic-symmetry toolkit.
//!
//! Everything downstream (bracket tables, constraint analysis, flows)
//! computes over two closed classes of coefficients:
//!
//! * [`ParamScalar`]: rational functions of a fixed parameter alphabet,
//!   held in canonical form so equality is structural.
//! * [`TrigCoeff`]: trigonometric polynomials in one time variable with
//!   rational frequencies and `ParamScalar` amplitudes.
//!
//! Both are exact; no floating point enters until a caller asks for an
//! `eval_f64`.

mod error;
pub mod params;
mod parse;
mod poly;
mod scalar;
mod trig;

pub use error::SymbolicError;
pub use params::{param_index, NPARAMS, PARAMS};
pub use parse::parse_scalar;
pub use poly::{gcd, Mono, Poly, Rat};
pub use scalar::{rat_to_f64, ParamScalar};
pub use trig::TrigCoeff;

use num::BigInt;

/// Shorthand for a rational from an integer pair.
pub fn rational(n: i64, d: i64) -> Rat {
    assert!(d != 0);
    Rat::new(BigInt::from(n), BigInt::from(d))
}

/// Parse "3", "-1/2" style rationals (used by CLI bindings and tests).
pub fn parse_rational(text: &str) -> Result<Rat, SymbolicError> {
    let parse_int = |s: &str| -> Result<BigInt, SymbolicError> {
        s.trim()
            .parse::<BigInt>()
            .map_err(|_| SymbolicError::BadNumber(text.to_string()))
    };
    match text.split_once('/') {
        Some((n, d)) => {
            let den = parse_int(d)?;
            if den == BigInt::from(0) {
                return Err(SymbolicError::ZeroDenominator);
            }
            Ok(Rat::new(parse_int(n)?, den))
        }
        None => Ok(Rat::from_integer(parse_int(text)?)),
    }
}
