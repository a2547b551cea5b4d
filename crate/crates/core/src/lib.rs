//! Core analysis engine for measuring the complexity of French documents.
//!
//! The crate is organised as a pipeline:
//!
//! 1. [`text`] parses raw text into tokens, sentences, clauses and T-units,
//!    driven by a declarative [`text::SegmentationRules`] file.
//! 2. [`lexicon`] loads the word resources (simple-word list and frequency
//!    lexicon) behind the vocabulary metrics.
//! 3. [`metrics`] computes the full fixed-schema feature vector of a
//!    document: lexical diversity, vocabulary, syntactic, readability and
//!    rule-based register features.
//! 4. [`classify`] trains and evaluates the complexity classifiers
//!    (threshold baseline, decision tree, random forest, one-vs-rest
//!    logistic regression and multinomial naive Bayes) over those vectors.
//!
//! Everything here is pure computation over in-memory inputs; file and
//! terminal handling live in the companion `complexite` crate. The crate is
//! `no_std`-compatible (with `alloc`): disable the default `std` feature and
//! enable `libm` to build for targets without a standard library.

#![cfg_attr(not(feature = "std"), no_std)]

#[cfg(all(not(feature = "std"), not(feature = "libm")))]
compile_error!("complexite-core requires either the `std` or the `libm` feature");

extern crate alloc;

pub mod classify;
pub mod error;
pub mod lexicon;
pub mod metrics;
pub mod text;

mod math;

pub use error::Error;

/// Version stamp recorded in feature vectors and serialized models. Bump it
/// whenever the feature schema or the model file layout changes.
pub const SCHEMA_VERSION: u32 = 1;
