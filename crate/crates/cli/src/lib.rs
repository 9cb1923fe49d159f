//! Corpus ingestion, the census runner and report emission for
//! `galblock-core`.

pub mod census;
pub mod corpus;
pub mod render;
pub mod report;
