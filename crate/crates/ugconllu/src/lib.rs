//! Tooling for CoNLL-U treebanks of user-generated content.

pub mod conllu_model;
pub mod normalizer;
pub mod sud_bridge;
pub mod tree_algebra;
pub mod ugc_lint;
