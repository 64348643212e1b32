//! File formats, JSON reports, parallel search and the command line for
//! [`satgraph_core`].

pub mod cli;
pub mod exec;
pub mod format;
pub mod report;

pub use exec::Parallel;
pub use format::{parse_graph, read_graph_file, write_graph, FormatError};
