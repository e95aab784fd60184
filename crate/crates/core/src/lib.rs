//! Power graphs of finite groups: construction, exact vertex connectivity,
//! cut-set enumeration and closed-form connectivity values for cyclic,
//! nilpotent and abelian groups.

pub mod connectivity;
pub mod cyclic;
pub mod error;
mod flow;
pub mod group;
pub mod number_theory;
pub mod power_graph;
pub mod predictions;
pub mod vertex_set;

pub use error::{Error, Result};
pub use group::{AbelianSpec, Element, Group, SylowDecomposition};
pub use power_graph::{PowerGraph, Separation};
pub use vertex_set::VertexSet;
