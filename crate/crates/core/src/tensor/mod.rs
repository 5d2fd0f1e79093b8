//! Typed exact linear maps between tensor products of labeled spaces.

mod braiding;
mod diagram;
mod linmap;
mod space;
pub mod sparse;

pub use braiding::{braiding, BraidingProvider, YdModule};
pub use diagram::{chain, id, mp, Diagram, Piece};
pub use linmap::{
    compose, flip, invert, permutation, rank, tensor, tensor_all, LinMap, LinMapWire, Mismatch,
};
pub use space::{describe, join_index, split_index, total_dim, SpaceLabel};
