//! Command implementations and the report format of the `hopfad` binary.

pub mod builtin;
pub mod commands;
pub mod report;
