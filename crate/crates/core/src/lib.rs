//! Spectral extremal problems for planar graphs.
//!
//! Builds the wheel-, friendship- and matching-free extremal families,
//! computes adjacency spectral radii with Perron vectors, enumerates small
//! connected planar graphs up to isomorphism, and searches them for the
//! graphs of maximum spectral radius avoiding a given pattern.
//!
//! ```
//! use planar_spex::{families, spectral};
//!
//! let g = families::family_w(10, 3).unwrap(); // K_{2,8}
//! let r = spectral::spectral_radius(&g, 1e-10).unwrap();
//! assert!((r.rho - 4.0).abs() < 1e-8);
//! ```

pub mod cli;
pub mod enumerate;
pub mod error;
pub mod families;
pub mod graph;
pub mod patterns;
pub mod planarity;
pub mod spectral;
pub mod theorems;
pub mod vertex_set;

pub use error::{Error, Result};
pub use graph::{disjoint_union, join, Graph};
pub use patterns::ForbiddenPattern;
pub use vertex_set::VertexSet;
