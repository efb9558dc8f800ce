//! Checking and searching for interpretations between logics.

mod check;
mod search;
mod terms;

pub use check::{
    check_composition, check_interpretation, witness_matrix, CheckPlan, Evidence,
    InterpretationCertificate, InterpretationMode,
};
pub use search::{sample_consequences, search_interpretation, SearchOutcome, SEARCH_CAP};
pub use terms::{count_terms, enumerate_terms};
