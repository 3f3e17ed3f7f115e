//! Exact polynomial invariants of multigraphs built from tension-flow pairs.
//!
//! The crate computes the Whitney rank generating polynomial, the Tutte
//! polynomial, the hyperbolic tension-flow polynomial `ω`, modular and
//! integral tension/flow polynomials, and the weighted complementary
//! polynomials `ψ`, `ψ̄`, `ψ_z`, `ψ̄_z`. Each quantity is reachable by more
//! than one route (subset expansion, intersection-poset characteristic
//! polynomial, brute-force enumeration over finite abelian groups, lattice
//! point counting with interpolation), and the [`invariants`] module pits
//! the routes against each other.
//!
//! All arithmetic is exact. Exponential enumerations are bounded by
//! [`Limits`].
//!
//! ```
//! use tfpoly::{fixtures, invariants, Limits};
//!
//! let k3 = fixtures::k3();
//! let t = invariants::tutte(&k3, invariants::TutteRoute::Recursion, &Limits::default()).unwrap();
//! assert_eq!(t.to_string(), "x^2 + x + y");
//! ```

#![forbid(unsafe_code)]

pub mod algebra;
pub mod arrangements;
pub mod cli;
mod error;
pub mod fixtures;
pub mod graph;
pub mod invariants;
mod limits;
pub mod orientations;
pub mod tensionflow;

pub use algebra::{MultiPoly, Var};
pub use error::{Error, Result};
pub use graph::{EdgeSubset, MultiGraph, Orientation};
pub use limits::Limits;
