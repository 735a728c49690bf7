//! Command-line checks and the verification suite for group coloring of
//! total graphs.

pub mod address;
pub mod check;
pub mod report;
pub mod suite;
