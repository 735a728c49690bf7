pub mod catalog;
pub mod derived;
pub mod discharge;
pub mod engine;
pub mod graph;
pub mod group;
pub mod ordering;
pub mod structure;
