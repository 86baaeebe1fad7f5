//! Dependency trees over sentences: structural checks, splitting and merging
//! of sentential units, and `goeswith` span analysis.

mod goeswith;
mod graph;
mod units;

pub use goeswith::{goeswith_spans, GoeswithSpan};
pub use graph::{build_graph, DepGraph, StructureError, StructureKind};
pub use units::{merge_units, split_units, unit_boundaries, UnitBoundary, UnitError, SENTENCE_REL};
