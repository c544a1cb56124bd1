//! Text formats: graph6 and edge-list parsing/serialization, DOT rendering.

pub mod dot;
pub mod edgelist;
pub mod graph6;

pub use dot::emit_dot;
pub use edgelist::{emit_edge_list, parse_edge_list};
pub use graph6::{emit_graph6, parse_graph6};
