//! Enumeration of the maximal independent sets of generalised caterpillar
//! trees in time linear in the output.
//!
//! The pipeline is: parse or [`recognize`] an instance, build its
//! [`LevelGraph`], then walk source-sink paths with [`enumerate_mis`]. The
//! [`oracle`] module brute-forces small graphs for cross-checking.

pub mod bench;
pub mod caterpillar;
pub mod enumerate;
pub mod graph;
pub mod level_graph;
pub mod oracle;

pub use caterpillar::{
    gen_random, parse_instance, recognize, serialize_instance, Caterpillar, CaterpillarError, ExpansionMap,
    HairCode, LongHair, Stage, StageProfile,
};
pub use enumerate::{
    enumerate_mis, reconstruct_stage, verify_mis, EnumerateError, EnumerateOptions, MISet, MisStream, PathCursor,
    StageSet,
};
pub use graph::{parse_edge_list, GraphError, Tree, VertexLabel};
pub use level_graph::{LevelGraph, LevelVertex, VertexKind};
pub use oracle::{oracle_enumerate, OracleError};
