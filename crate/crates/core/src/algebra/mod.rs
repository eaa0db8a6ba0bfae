//! Exact arithmetic: big integers and rationals, univariate polynomials in
//! the stability parameter `n`, and the polynomial ring in `h_1, h_2, …`.

mod binomial;
mod hpoly;
mod ratpoly;

pub use binomial::{binomial, binomial_poly, factorial};
pub use hpoly::{hpoly_det, hpoly_generator, HPoly, Monomial};
pub use ratpoly::{ratpoly_interpolate, RatPoly};

/// Arbitrary-precision signed integer.
pub type ExactInt = num_bigint::BigInt;

/// Reduced fraction with positive denominator.
pub type ExactRat = num_rational::BigRational;

/// Renders a rational as `p` or `p/q`.
pub fn rat_to_string(q: &ExactRat) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}
