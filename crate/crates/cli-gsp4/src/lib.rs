//! Driver for the `GSp_2n` deformation toolkit: the worked `GSp_4` example pipeline,
//! unipotent and module oracles, the tame local checks, and versioned TOML configs and reports.

pub mod config;
pub mod data;
mod error;
pub mod example;
pub mod local;
pub mod oracle;
pub mod report;
mod run;

pub use config::{Config, Params, Verb};
pub use error::CliError;
pub use example::{build_example, run_example, verify_h_pattern, ExampleOutcome, ExamplePlan};
pub use oracle::saturation_oracle;
pub use report::{Check, Report, Status};
pub use run::{run, run_path};
