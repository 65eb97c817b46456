//! Exact coefficient arithmetic.
//!
//! Everything downstream is linear over the ring `Z[u, u^{-1}, 1/d]`:
//! rationals extended by Laurent polynomials in the deformation parameter
//! `u`. Trace values additionally live in a polynomial ring over that, in
//! `z` and the framing indeterminates `x_1, ..., x_{d-1}`. All
//! representations are sparse maps with no stored zero coefficients, so
//! equality is structural equality of canonical forms.

mod laurent;
mod trace_poly;

pub use laurent::LaurentU;
pub(crate) use trace_poly::render_term;
pub use trace_poly::{TraceMono, TracePoly};

/// Exact rational scalar: reduced fraction with positive denominator.
pub type Rational = num_rational::BigRational;

/// Shorthand for an integer rational.
pub fn rational(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

/// Shorthand for the reduced fraction `n/d`.
pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}
