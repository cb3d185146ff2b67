//! Finding the smallest graph that does not occur as an induced subgraph
//! of a given graph.
//!
//! The core pipeline counts occurrences of every labeled k-vertex subgraph
//! code over all ordered k-tuples, searches the counter table for a zero,
//! and grows k until a missing subgraph appears; the answer always has
//! O(log n) vertices. Around that engine sit independent brute-force
//! oracles ([`oracle`]), the all-but-clique gadget graphs and the clique
//! and 3-coloring reductions built on them ([`gadget`]), and the
//! family-restricted variant ([`family`]).

pub mod code;
pub mod edgelist;
pub mod engine;
pub mod family;
pub mod gadget;
pub mod generators;
pub mod graph;
pub mod graph6;
pub mod oracle;

pub use code::{encode_identity, encode_tuple, stream_codes, CodeBits, SubgraphCode};
pub use engine::{count_labeled, find_missing_at, smis, EngineConfig, SmisResult};
pub use graph::{EdgeList, Graph, GraphError, VertexId, MAX_VERTICES};
pub use graph6::{emit_graph6, parse_graph6};
