//! Command-line front end and report formats for `errsumlab-core`.
//!
//! [`report`] holds the JSON schema for identity reports, [`runner`] runs
//! batches of verifications on a bounded pool of threads, and [`cli`] is the
//! `errsumlab` binary's argument handling.

pub mod cli;
pub mod report;
pub mod runner;
