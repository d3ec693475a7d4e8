//! Augmented cubes `AQ_n`: construction, neighborhood analytics, exact
//! classical and h-extra connectivity, and certified constructions of
//! optimal 2-extra cuts.
//!
//! Labels follow one convention throughout: `x_i` is bit `i - 1` of the
//! packed [`VertexId`], so `X_i` is `x ^ (1 << (i - 1))` and `X̄_i` is
//! `x ^ ((1 << i) - 1)`.

pub mod census;
pub mod connectivity;
pub mod cube;
pub mod cuts;
pub mod error;
pub mod exec;
mod flow;
pub mod graph;
pub mod io;
pub mod neighborhood;

pub use connectivity::{ConnKind, ConnectivityResult, Cut, Method, SearchConfig};
pub use cube::{AugCube, Dimension, EdgeKind, Half, VertexId};
pub use error::{AqError, Result};
pub use exec::Exec;
pub use graph::{Edge, Graph};
