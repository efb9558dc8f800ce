//! Non-indexed products, flat expansions, subdirect embeddings, fusion and
//! diagonal matrix powers.

mod flat;
mod fusion;
mod power;
mod product;
mod subdirect;

pub use flat::{flat, flat_decomposition, FlatDecomposition};
pub use fusion::{fuse, fuse_signatures, fuse_tagged, in_fusion_class, FusedMatrix, FusedSignature};
pub use power::{default_power_snapshot, diagonal_power_matrix, power_class_witness};
pub use product::{
    check_snapshot, default_snapshot, non_indexed_product, product_logic, projection_translation,
    snapshot_signature, ProductMatrix, ProductSymbol,
};
pub use subdirect::{generated_submatrix, is_subdirect, reduced_embedding, ReducedEmbedding};
