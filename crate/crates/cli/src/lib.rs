//! Configuration, experiment presets, and file emission for the coatsim
//! command-line runner. The binary in `main.rs` is a thin dispatcher over
//! [`commands`].

pub mod commands;
pub mod config;
pub mod error;
pub mod output;

pub use config::{parse_config, render_config, IcMode, RunConfig};
pub use error::{CliError, Result};
