//! Library surface of the `dchfc` binary, split out so integration tests can
//! exercise argument parsing and artifact rendering without spawning a
//! process.

pub mod args;
pub mod artifacts;
pub mod commands;
pub mod error;
pub mod plot;
