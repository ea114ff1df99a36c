//! File formats, reporting and the command-line front end for the
//! `pairscore-core` assessment and scoring primitives.

pub mod chart;
pub mod cli;
pub mod ingest;
pub mod report;
