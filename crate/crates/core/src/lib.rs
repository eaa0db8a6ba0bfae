//! Exact evaluation and machine verification of stable symmetric-group
//! character formulas.
//!
//! The crate covers:
//!
//! * partitions, skew shapes and cycle types ([`combinatorics`]);
//! * exact integers, rationals, polynomials in `n` and the ring of complete
//!   homogeneous generators `h_r` ([`algebra`]);
//! * hook-length / Aitken degrees, a memoized Murnaghan-Nakayama evaluator and
//!   induced characters on Young subgroups ([`characters`]);
//! * Jacobi-Trudi determinants and the first-row expansion of `s_(n,λ)`
//!   ([`jacobi_trudi`]);
//! * the expansion of `f^(n,λ)` over `f^{λ/(1^j)}`, rectangular class values
//!   and stable character polynomials ([`stable`]);
//! * brute-force reference implementations used only for checking
//!   ([`oracle`]), verification sweeps ([`sweep`]) and timing ([`bench`]).
//!
//! No floating point is used anywhere.

pub mod algebra;
pub mod bench;
pub mod characters;
pub mod combinatorics;
mod error;
pub mod jacobi_trudi;
pub mod oracle;
pub mod stable;
pub mod sweep;

pub use algebra::{binomial, binomial_poly, ratpoly_interpolate, ExactInt, ExactRat, HPoly, RatPoly};
pub use characters::{degree_hook, degree_skew, induced_degree, induced_value, mn_value, CharacterFn, MnEvaluator};
pub use combinatorics::{column_strip, first_row_extend, CycleType, Partition, SkewShape};
pub use error::{Error, Result};
pub use stable::{cz_degree, cz_degree_poly, rect_class_value, stable_char_poly, StableClassSpec, StablePoly};
