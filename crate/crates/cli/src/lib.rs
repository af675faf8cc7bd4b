//! Command-line front end: graph files in, deterministic JSON reports out.

pub mod commands;
pub mod document;

pub use commands::{run, Cli, Command, Outcome};
pub use document::{parse_graph, serialize, GraphDocument, ParseError};
