//! Computational abstract algebraic logic over finite structures.
//!
//! Logics are given by finite rule sets or finite sets of finite matrices. The
//! crate computes Leibniz and Suszko congruences, deductive filters, model
//! classes, non-indexed products, fusions and matrix powers, and checks and
//! searches for interpretations between logics.

pub mod algebra;
pub mod casebook;
pub mod congruence;
pub mod constructions;
pub mod error;
pub mod interp;
pub mod logic;
pub mod subset;
pub mod syntax;

pub use algebra::{Elem, FiniteAlgebra, Matrix};
pub use congruence::Partition;
pub use error::{Error, Result};
pub use logic::{CongruenceFormulaSet, LogicPresentation};
pub use subset::Subset;
pub use syntax::{Rule, Signature, Substitution, Term, Translation};
