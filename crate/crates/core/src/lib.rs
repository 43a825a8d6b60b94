//! Gremban expansion toolkit for signed networks.
//!
//! A signed graph lifts to an unsigned double cover whose spectral structure
//! separates community structure (symmetric lifts) from faction structure
//! (antisymmetric lifts). The crate covers the combinatorial lift, dense
//! linear algebra, spectral detection, random walks and diffusion, walk
//! counting and a synthetic benchmark generator.

#![allow(clippy::needless_range_loop)]

pub mod clustering;
pub mod dynamics;
pub mod error;
pub mod exec;
pub mod expansion;
pub mod experiments;
pub mod generators;
pub mod graph;
pub mod io;
pub mod matrix;
pub mod metrics;
pub mod spectral;
pub mod walks;

pub use error::{Error, Result};
pub use exec::Execution;
pub use expansion::{expand, recognize, CutKind, GrembanGraph, Polarity, UnsignedGraph};
pub use graph::{compose_elementary_switchings, Bipartition, Edge, Sign, SignedGraph, SwitchingFunction};
pub use matrix::{build_bundle, DenseMatrix, MatrixBundle, SymMatrix};
pub use spectral::{eig_sym, LiftClass, LiftTag, SpectralDecomposition};
