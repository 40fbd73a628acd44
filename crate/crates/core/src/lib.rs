//! Exact computation of the `S_n`-equivariant Chow polynomials of the braid
//! matroids `B_n`.
//!
//! The equivariant series is obtained by solving the plethystic equation
//! `(h_1 + B) ∘ (h_1 + (t-1) M) = h_1 + t B` degree by degree, where `M`
//! collects the equivariant compactly supported Poincaré polynomials of
//! `M_{0,n+1}`. Independent numeric routes (Stirling, Bell, partition
//! lattice, level-tree strata) cross-check every dimension polynomial.

pub mod combinatorics;
pub mod error;
pub mod export;
pub mod level_trees;
pub mod moduli;
pub mod numeric;
pub mod partition;
pub mod poly;
pub mod reference;
pub mod solver;
pub mod symfunc;
pub mod verify;

pub use error::{ChowError, Result};
pub use partition::{partitions_of, z_lambda, Partition};
pub use poly::{QPoly, TPoly};
pub use symfunc::{homogeneous_h, SymSeries};
