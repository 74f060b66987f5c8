//! Parsing, checking and reporting for the `sympow` command-line tool.

pub mod parse;
pub mod replay;
pub mod report;
pub mod scan;
pub mod suite;

pub use parse::{parse_document, parse_ideal, IdealDocument, ParseError};
pub use scan::{scan, ScanConfig};
pub use suite::{run_suite, Prepared, SuiteOptions, ALL_CHECKS};
