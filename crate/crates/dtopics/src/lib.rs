//! Topic detection for conversational dialogue transcripts.
//!
//! The pipeline runs in stages, each usable on its own:
//!
//! 1. [`corpus`] — parse TSV/JSON transcripts into dialogues and segment
//!    them into documents (one per utterance, or one per dialogue).
//! 2. [`preprocess`] — the filter chain: markup stripping, POS tagging,
//!    punctuation erasure, number/length/stop-word filters, case folding,
//!    plus backchannel-utterance removal.
//! 3. [`vectorize`] — vocabulary, bag-of-words counts, TF-IDF weights and
//!    the dictionary (frequency-band) filter.
//! 4. [`cluster`] — k-means over TF-IDF vectors with elbow-based selection
//!    of the cluster count.
//! 5. [`plda`] — collapsed-Gibbs LDA with an optional data-parallel sweep
//!    scheme; the topic count can be wired from the elbow result.
//! 6. [`topics`] — top-words extraction and SVG tag clouds.
//! 7. [`eval`] — precision/recall/F-measure against gold labels and the
//!    three-way method comparison.
//!
//! The `dtopics` binary exposes each stage as a subcommand (see [`cli`]),
//! and `examples/` contains one runnable program per capability.

pub mod cli;
pub mod cluster;
pub mod config;
pub mod corpus;
pub mod error;
pub mod eval;
pub mod plda;
pub mod preprocess;
pub mod seed;
pub mod synth;
pub mod topics;
pub mod vectorize;

pub use error::{Error, Result};
