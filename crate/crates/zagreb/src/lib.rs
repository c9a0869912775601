//! Std companion to `zagreb-core`: text formats, JSON reports, a parallel
//! oracle driver, sequence sweeps and the `zagreb` command line.

pub mod cli;
pub mod format;
pub mod oracle;
pub mod report;
pub mod sweep;
