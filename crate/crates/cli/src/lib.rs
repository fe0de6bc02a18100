//! Command-line front end: spec files, commands and reports.

pub mod commands;
pub mod examples;
pub mod report;
pub mod spec;

pub use commands::{cmd_hc, cmd_hh, cmd_verify, Flags};
pub use examples::example;
pub use report::ResultReport;
pub use spec::{load, parse_document, parse_spec, AlgebraSpecDocument, ParsedSpec};

/// Parses a document by example name, for callers that skip the file round trip.
pub fn example_spec(name: &str) -> anyhow::Result<ParsedSpec> {
    parse_spec(&example(name)?)
}
