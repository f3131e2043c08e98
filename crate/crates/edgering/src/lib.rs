//! Decides normality of quadratic-monomial generated subrings of a Laurent
//! polynomial ring by modeling the generators as a mixed signed, directed
//! graph, checking the (generalized) odd cycle condition, and computing
//! normalization generators. An independent exact-arithmetic semigroup oracle
//! cross-checks the combinatorial decisions at small scale.

pub mod altpath;
pub mod augment;
pub mod cli;
pub mod cycles;
pub mod error;
pub mod model;
pub mod normality;
pub mod oracle;

pub use error::{Error, Result};
pub use model::{DirectedEdge, EdgeRef, ExponentVector, MixedGraph, Sign, SignedEdge, VertexId};
