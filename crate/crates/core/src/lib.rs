//! Gröbner–Shirshov bases for free associative algebras and free Lie
//! algebras over exact fields.
//!
//! The crate completes sets of relations by Shirshov's composition
//! procedure, enumerates the irreducible words `Irr(S)` and PBW bases, and
//! decides word problems for finitely presented monoids and groups whose
//! completion terminates.

pub mod complete;
pub mod error;
pub mod lie;
pub mod ncpoly;
pub mod present;
pub mod rewrite;
pub mod scalar;
pub mod words;

pub use complete::{
    compositions, is_gs_basis, shirshov_complete, Certificate, CompletionConfig, CompletionDocument, CompletionResult,
    CompletionStatus, Composition, GsCheck,
};
pub use error::GsError;
pub use lie::{
    from_structure_constants, is_alsw, lie_gs_check, lsw_bracket, nlsw_decompose, pbw_basis, shirshov_factorize,
    NlswElement, PbwMonomial, StructureTable,
};
pub use ncpoly::{parse_polynomial, LieElement, LieTerm, NcPolynomial};
pub use present::{
    catalog, growth_series, normal_form_word, parse_presentation, word_problem, GrowthSeries, NormalForm, Presentation,
    PresentationKind,
};
pub use rewrite::{Rule, RuleSet};
pub use scalar::{Field, Fp, Rational};
pub use words::{cmp_deglex, cmp_lex_prefix_greater, Alphabet, Overlap, OverlapKind, Word};
