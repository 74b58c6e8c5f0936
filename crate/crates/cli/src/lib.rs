pub mod config;
pub mod error;
pub mod golden;
pub mod report;
pub mod sweep;
pub mod verify;

pub use config::RunConfig;
pub use error::{CliError, Exit};
pub use report::VerificationReport;
