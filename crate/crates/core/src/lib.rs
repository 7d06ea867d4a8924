//! Exact construction, validation, decomposition and classification of
//! finite-dimensional Rota-Baxter Lie algebras and their extending structures
//! over the rationals.
//!
//! Every algebraic object is given by structure constants in fixed ordered
//! bases. Products of an algebra `g` with a complement `V` always use the
//! basis `(e_1, …, e_n, x_1, …, x_m)`.

pub mod algebra;
pub mod classify;
pub mod document;
mod error;
mod split;
pub mod exactla;
pub mod extending;
pub mod fixtures;
pub mod flag;
pub mod report;
pub mod sample;

pub use algebra::{
    check_lie, check_module, check_rb, check_rb_module, check_rb_morphism, ActionSide, LieAlgebra,
    LinearAction, RBLieAlgebra, RBModule,
};
pub use classify::{
    check_costabilizes, check_costabilizes_between, check_stabilizes, check_stabilizes_between, check_witness_conditions, cohomologous_transform, decompose,
    psi_from_witness, transform_datum, DecompositionContext, EquivalenceWitness,
};
pub use error::{Error, Result};
pub use exactla::{solve_affine, AffineSolutionSet, Matrix, Rational, Tensor3, Vector};
pub use extending::{
    bicrossed_product, check_crossed_system, check_matched_pair, check_unified_axioms, crossed_product,
    factorize, unified_product, validate_datum, CrossedSystem, ExtendingDatum, MatchedPair, UnifiedProduct,
};
pub use flag::{
    build_flag_chain, check_extended_derivation, check_twisted_derivation, datum_from_exder,
    decide_exder_equiv, exder_from_datum, flag_extend, partition_exders, ExderWitness, ExtendedDerivation,
    FlagChain,
};
pub use report::{ConditionReport, Failure, ReportMode};
