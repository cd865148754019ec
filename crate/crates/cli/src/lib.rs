//! Library side of the `lusztig` command: table regeneration, single
//! queries, and the verification suites that diff every transcribed value
//! against a fresh computation.

pub mod app;
pub mod error;
pub mod golden;
pub mod query;
pub mod report;
pub mod tables;
pub mod verify;

pub use error::{CliError, CliResult};
pub use report::{Report, ReportEntry, Status};
pub use tables::{render_table, Format, NRange, TableId};
pub use verify::{verify, Suite};
