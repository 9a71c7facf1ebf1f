//! Command-line front end: configuration, JSON output, relation cache and the
//! ground-truth suite.

pub mod cache;
pub mod cli;
pub mod commands;
pub mod config;
pub mod json;
pub mod suite;
pub mod tables;
