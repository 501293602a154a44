pub mod bundle;
pub mod chow;
pub mod cli;
pub mod closed_forms;
pub mod decimal;
pub mod error;
pub mod pipelines;
pub mod poly;
pub mod report;
pub mod selftest;
pub mod thom;
