//! Signatures, terms, substitutions, rules, translations and the text DSL.

pub mod dsl;
mod signature;
mod term;
mod translation;

pub use signature::{Signature, Symbol};
pub(crate) use signature::{is_identifier, is_variable_name};
pub use term::{apply_substitution, Rule, Substitution, Term, TermDisplay};
pub use translation::{translate_term, Translation};
