//! File formats, reports and the command-line front end for `lpa-core`.

pub mod element_syntax;
pub mod graph_file;
pub mod report;

pub use element_syntax::{parse_element, ElementSyntaxError};
pub use graph_file::{parse_graph, write_graph, GraphFileError, GraphFileErrorKind};
pub use report::{parse_field, CommandError, Payload, Report};
