//! Built-in objects of the running counterexample and one verifier per
//! checkable claim about them.

pub mod analysis;
mod entries;
mod objects;
mod report;

pub use entries::{
    blocks_for_c_one, blocks_for_one, parametric_leibniz_check, verify, verify_all, ENTRIES,
};
pub use objects::*;
pub use report::{Check, Report};
