//! Representations of the braid group commutator subgroup `K_n` (and of
//! `B_n`) into small finite groups, computed through the representation
//! shift: orbits of `(a, b) ↦ (b, a⁻¹b)` on `Σ²`, decorated step by step
//! with the images of `x_3, …, x_{n-1}`.

pub mod analysis;
pub mod derived;
pub mod error;
pub mod extension;
pub mod field;
pub mod group;
pub mod oracle;
pub mod perm;
pub mod report;
pub mod shift;
pub mod verify;

pub use error::{Error, Result};
pub use extension::{compute_tower, ClassKey, Representation, TowerResult};
pub use group::{Elem, FiniteGroup};
pub use perm::Permutation;
pub use shift::{CycleType, ShiftDecomposition, Vertex};
