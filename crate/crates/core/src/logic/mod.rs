//! Logic presentations, consequence, deductive filters and equivalentiality.

mod cegar;
mod consequence;
mod equivalential;
mod filter;
mod presentation;

pub use consequence::{consequence, counterexample, Counterexample};
pub use equivalential::{
    check_equivalential, equivalential_failure, equivalential_rules, leibniz_via_delta,
    transfer_delta, CongruenceFormulaSet, FailedRule,
};
pub use filter::{
    check_filter, enumerate_filters, filters_above, generate_filter, has_theorems, in_mod_eq,
    is_filter, FilterOracle, FilterWitness, FILTER_UNIVERSE_CAP,
};
pub use presentation::{LogicPresentation, Presentation};
