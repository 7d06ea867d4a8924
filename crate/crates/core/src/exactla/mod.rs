//! Exact rational linear algebra: scalars, vectors, dense matrices, order-3
//! structure-constant tensors and affine system solving.
//!
//! Everything here is exact. Zero tests are structural (`is_zero`), never
//! tolerance based.

mod matrix;
mod solve;
mod tensor;
pub mod vector;

pub use matrix::{coordinate_linear_map, Matrix};
pub use solve::{solve_affine, AffineSolutionSet};
pub use tensor::{apply_bilinear, Tensor3};

use num_bigint::BigInt;
use num_rational::BigRational;

/// Arbitrary-precision rational, always kept in lowest terms with a positive
/// denominator.
pub type Rational = BigRational;

/// Column vector of rationals.
pub type Vector = Vec<Rational>;

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// `n / d`, reduced. Panics on `d == 0`.
pub fn frac(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Canonical text form: `p` when the denominator is 1, `p/q` otherwise.
pub fn format_rational(q: &Rational) -> String {
    q.to_string()
}

/// Parses `p` or `p/q`. Rejects zero denominators, signs on the denominator
/// and surrounding whitespace.
pub fn parse_rational(s: &str) -> Option<Rational> {
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n, Some(d)),
        None => (s, None),
    };
    let valid_int = |t: &str, allow_sign: bool| {
        let digits = if allow_sign { t.strip_prefix('-').unwrap_or(t) } else { t };
        !digits.is_empty() && digits.bytes().all(|b| b.is_ascii_digit())
    };
    if !valid_int(num, true) {
        return None;
    }
    let n: BigInt = num.parse().ok()?;
    let d: BigInt = match den {
        Some(d) if valid_int(d, false) => d.parse().ok()?,
        Some(_) => return None,
        None => BigInt::from(1),
    };
    if d == BigInt::from(0) {
        return None;
    }
    Some(Rational::new(n, d))
}
