//! Exact root-system combinatorics for elliptic adjoint orbits of real
//! semisimple Lie groups.
//!
//! The crate is organized bottom-up:
//!
//! - [`rootsys`]: Cartan matrices, root enumeration and the root pairing.
//! - [`weyl`]: Weyl group enumeration, inversion sets and the coset sets
//!   `W₁`, `W¹` attached to a Levi root set.
//! - [`elliptic`]: gradings of the roots induced by an elliptic element.
//! - [`bruhat`]: generalized Bruhat cells of the complex flag manifold and
//!   their counting identities.
//! - [`realform`]: inner involutions, compact roots and the fundamental
//!   system criterion.
//! - [`lowrank`]: explicit `sl(2)` and `sl(3)` matrix models used as oracles.
//! - [`cli`]: TOML job configuration and deterministic JSON reports.

pub mod bruhat;
pub mod cli;
pub mod elliptic;
pub mod error;
pub mod lowrank;
pub mod rational;
pub mod realform;
pub mod rootsys;
pub mod weyl;

pub use error::{Error, Result};
pub use rational::Q;
