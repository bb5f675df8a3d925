//! Library side of the `pahwalk` command: run configuration, manifests
//! and output handling.

pub mod commands;
pub mod config;
pub mod error;
pub mod output;
