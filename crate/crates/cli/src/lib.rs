//! File formats and command implementations behind the `outcast` binary.

pub mod commands;
pub mod format;
