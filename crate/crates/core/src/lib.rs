//! Exact computation with finite-dimensional Hopf data, cross product
//! bialgebras, the Φ recursion and cocycle twists.
//!
//! Every structure is stored through its structure constants over ℚ or a
//! cyclotomic field ℚ(ζ_n), and every axiom is checked as an exact equality
//! of linear maps.

pub mod cross;
pub mod datum;
pub mod error;
pub mod scalar;
pub mod structures;
pub mod tensor;
pub mod twisting;
pub mod zoo;

pub use error::{Error, Result};
pub use scalar::{q_binomial, root_of_unity, zeta_power, Scalar};
pub use tensor::{LinMap, SpaceLabel};
