//! Table-driven conversion between UD (content heads) and SUD (function-word
//! heads), and contraction of fused words.
//!
//! Conversion is closed-world: relations outside the table and the
//! passthrough set are rejected rather than copied.

mod convert;
mod fusion;
mod table;

pub use convert::{sud_to_ud, sud_to_ud_with, ud_to_sud, ud_to_sud_with, ConvertError};
pub use fusion::{classify_fusion, contract_span, Framework, FusionCase, FusionError};
pub use table::{is_passthrough, ConversionTable, Row, TableError, DEFAULT_TABLE, PASSTHROUGH};
