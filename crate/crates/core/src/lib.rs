//! Exact computation of the minimax induced-degree dimension of small
//! graphs, together with the coloring, embedding and Cayley-graph
//! machinery built on top of it.
//!
//! Graphs have at most 64 vertices and are stored as adjacency bitsets;
//! induced subgraphs are represented by their [`VertexSet`] alone.

pub mod cayley;
pub mod coloring;
pub mod dimension;
pub mod embedding;
pub mod error;
pub mod graph;
pub mod input;
pub mod io;
pub mod report;
pub mod verify;
pub mod vertex_set;

pub use dimension::{
    dim_bounds, dim_exact, dim_exact_capped, half_witness, subdim, subdim_exists, subdim_naive,
    DimCertificate, SubdimCertificate, DEFAULT_CAP,
};
pub use error::{Error, Result};
pub use graph::{DegreeProfile, Graph};
pub use vertex_set::{subsets_of_size, VertexSet};
