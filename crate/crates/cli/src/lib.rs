//! Specification language, reports, the built-in catalog and the `dickson` command.

pub mod app;
pub mod catalog;
pub mod criteria;
pub mod dsl;
pub mod mapspec;
pub mod report;
