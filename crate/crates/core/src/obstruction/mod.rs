//! Embedding obstructions: deleted joins and Smith classes over `F_2`,
//! deleted products and the integer Van Kampen cocycle, and the chain maps
//! induced by admissible contractions.

mod chain_map;
mod join;
mod naturality;
mod product;

pub use chain_map::{contraction_chain_map, Coefficients, ContractionChainMap};
pub use join::{
    representative, restrict, smith_class, smith_class_in, DeletedJoin, JoinFace, SmithClass, SymmetricCochainZ2,
};
pub use naturality::{smith_naturality, NaturalityReport};
pub use product::{van_kampen_cocycle, vk_vanishes_z, DeletedProduct, ProductCell, VanKampenCocycle, VanKampenReport};
