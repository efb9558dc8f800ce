//! Partitions, congruence tests, the Leibniz and Suszko congruences and reduction.

mod partition;
mod refine;
mod suszko;

pub use partition::Partition;
pub use refine::{basic_translations, is_congruence, largest_congruence_below, leibniz_congruence};
pub(crate) use suszko::suszko_with;
pub use suszko::{is_reduced, reduce, suszko_by_polynomials, suszko_congruence, unary_polynomials};
