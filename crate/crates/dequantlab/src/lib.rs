//! Command-line front end, file input, parallel census and the
//! self-verification suite for `dequantlab-core`.

pub mod census_parallel;
pub mod cli;
pub mod input;
pub mod report;
pub mod verify;
