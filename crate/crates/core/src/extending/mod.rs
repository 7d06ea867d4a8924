//! Extending data of a Rota-Baxter Lie algebra through a vector space, their
//! compatibility conditions, the unified product, and its two special cases:
//! crossed products (trivial right action) and bicrossed products of matched
//! pairs (trivial cocycle and mixed operator).

mod crossed;
mod datum;
mod matched;
mod product;

pub use crossed::{check_crossed_system, check_crossed_system_with, crossed_product, CrossedSystem};
pub use datum::{validate_datum, validate_datum_with, ExtendingDatum};
pub use matched::{bicrossed_product, check_matched_pair, check_matched_pair_with, factorize, MatchedPair};
pub use product::{
    check_unified_axioms, check_unified_axioms_with, product_bracket, product_operator, unified_product,
    UnifiedProduct,
};

pub(crate) use datum::require_valid_base;
pub(crate) use matched::restrict;
