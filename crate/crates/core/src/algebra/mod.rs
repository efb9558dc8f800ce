//! Finite algebras and matrices, homomorphisms, subalgebras, products,
//! quotients, reducts and oracle-backed virtual algebras.

mod finite;
mod hom;
mod ops;
mod virtual_alg;

pub use finite::{evaluate, for_each_tuple, Elem, FiniteAlgebra, Matrix};
pub use hom::{
    enumerate_homomorphisms, find_algebra_isomorphism, find_isomorphism, for_each_homomorphism,
    is_homomorphism, is_isomorphic, Homomorphism,
};
pub use ops::{
    coordinates, direct_product, from_coordinates, generated_subalgebra, is_closed, quotient,
    reduct_by_translation, reduct_matrix, submatrix, subuniverses,
};
pub use virtual_alg::{matrix_power_oracle, Descriptor, VirtualAlgebra};
