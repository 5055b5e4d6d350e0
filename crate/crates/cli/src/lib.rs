//! File formats and command implementations behind the `kroncode` binary.

pub mod codefile;
pub mod error;
pub mod report;
pub mod verify;

pub use codefile::CodeFile;
pub use error::{CliError, Result};
pub use report::ReportFile;
