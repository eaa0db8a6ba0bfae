//! Exact character evaluation for symmetric groups.

mod degree;
mod induced;
mod mn;

pub use degree::{degree_hook, degree_skew};
pub use induced::{induced_degree, induced_value, CharacterFn, Induced, SkewCharacter, Trivial};
pub use mn::{mn_value, remove_ribbons, CachePolicy, MnCache, MnEvaluator};
