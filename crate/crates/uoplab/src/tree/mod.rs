//! The rank-1 Bruhat–Tits tree with a marked apartment, alcove and end.

mod conductor;
mod model;
mod operators;

pub use conductor::{base_successor, conductor, trace_orbit, BaseConfig};
pub use model::{TreeModel, TreeVertex, VertexSum, MAX_Q};
pub use operators::{
    apply_u, apply_v, beta_filtration, fiber_operator_u, hecke_t, neighbors,
    noncommutativity_witness, noncommuting_vertex, predecessor_v, retraction, sphere, successor_u,
};
