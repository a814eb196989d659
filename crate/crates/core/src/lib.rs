//! Core library for generating controlled temporal NLI datasets from
//! expert-written templates.
//!
//! The pipeline mirrors a fixed order: parse and validate a template pack,
//! assign content words from a case-frame lexicon (candidates), isolate
//! train/test candidate pools, apply human review decisions to the test
//! pool, then assign temporal expressions with per-(template, label)
//! balancing. Companion modules screen the output for token-level label
//! artifacts and build controlled train/test splits with seen/unseen
//! scoring.

pub mod artifacts;
pub mod demo;
pub mod generator;
pub mod lexicon;
pub mod problem;
pub mod rng;
pub mod splits;
pub mod taxonomy;
pub mod template;
pub mod temporal;

pub use problem::{Pool, Problem, SentenceCandidate};
pub use template::{Label, Template};
