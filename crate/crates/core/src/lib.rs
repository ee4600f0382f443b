//! Baxter permutations and non-intersecting triples of lattice paths.
//!
//! The crate provides the descent statistics of a permutation, two Baxter
//! generators, lattice-path triples and their exhaustive enumeration, the
//! Françon–Viennot correspondence with Laguerre histories, the maps between
//! Baxter permutations and path triples together with their inverses, and
//! exact `(t, q)` polynomial identities for checking all of it.
//!
//! ```
//! use baxlab_core::{bijections, perm::Permutation};
//!
//! let p: Permutation = "235419786".parse().unwrap();
//! let t = bijections::gamma(&p).unwrap();
//! assert_eq!(t.middle.word(), "VVHHVHVH");
//! assert_eq!(bijections::gamma_inverse(&t).unwrap(), p);
//! ```

pub mod bijections;
pub mod error;
pub mod harness;
pub mod json;
pub mod laguerre;
pub mod lattice;
pub mod perm;
pub mod qseries;
pub mod render;

pub use error::{Error, Result};
pub use laguerre::LaguerreHistory;
pub use lattice::{LatticePath, PathTriple};
pub use perm::Permutation;
