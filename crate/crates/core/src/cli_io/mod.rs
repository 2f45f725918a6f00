//! Command-line configuration, matrix/weight file parsing, report
//! serialization, and the command drivers behind the `summalab` binary.

mod commands;
mod config;
mod files;
mod report;

pub use commands::{execute, Failure, EXIT_CONFIG, EXIT_HYPOTHESIS, EXIT_IO};
pub use config::{
    parse_config, parse_n_list, CommandName, Format, MatrixSpec, RunConfig, WeightSpec,
};
pub use files::{matrix_from_file, parse_matrix, parse_weights, MatrixFile};
pub use report::{format_number, write_report, CsvTable, ExemplarInfo, Report};
