//! Library half of the `semitrace` CLI: report building, enumeration and
//! experiment drivers. The binary in `main.rs` is a thin argument layer.

pub mod commands;
pub mod enumerate;
pub mod experiments;
pub mod report;
