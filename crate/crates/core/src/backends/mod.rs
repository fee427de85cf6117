//! Adapter interfaces for external generative and scoring models.
//!
//! Every model the pipeline talks to — translator, paraphraser, captioner,
//! image generator, sentence embedder, LM scorer — sits behind one of the
//! traits below. [`stubs`] provides deterministic in-process
//! implementations used by tests and offline runs; [`plugin`] speaks a
//! line-delimited JSON protocol to real models over a subprocess pipe or
//! HTTP.

pub mod plugin;
pub mod stubs;

use thiserror::Error;

use crate::raster::{ImageTensor, RasterError};

#[derive(Debug, Error)]
pub enum BackendError {
    #[error("empty input")]
    EmptyInput,
    #[error("{backend} backend failure: {message}")]
    Failure { backend: String, message: String },
    #[error("plugin protocol error: {0}")]
    Protocol(String),
    #[error("plugin io error: {0}")]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Raster(#[from] RasterError),
}

/// How a backend tolerates concurrent callers. Reentrant backends may be
/// invoked from any number of threads; serialized ones must see one call
/// at a time (the pipeline gates them behind a single-consumer lock).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ConcurrencyClass {
    Reentrant,
    Serialized,
}

pub trait Translator: Send + Sync {
    fn translate(&self, text: &str, src: &str, tgt: &str) -> Result<String, BackendError>;

    fn concurrency(&self) -> ConcurrencyClass {
        ConcurrencyClass::Reentrant
    }
}

pub trait Paraphraser: Send + Sync {
    /// Deterministic for fixed (text, template, seed).
    fn paraphrase(&self, text: &str, template: &str, seed: u64) -> Result<String, BackendError>;

    fn concurrency(&self) -> ConcurrencyClass {
        ConcurrencyClass::Reentrant
    }
}

pub trait Captioner: Send + Sync {
    fn caption(&self, image: &ImageTensor) -> Result<String, BackendError>;

    fn concurrency(&self) -> ConcurrencyClass {
        ConcurrencyClass::Reentrant
    }
}

pub trait ImageGenerator: Send + Sync {
    /// Produce an image of identical dimensions, conditioned on the input
    /// image and a text prompt. `strength` in [0, 1] controls how far the
    /// output may drift from the input.
    fn generate(
        &self,
        image: &ImageTensor,
        prompt: &str,
        strength: f64,
        seed: u64,
    ) -> Result<ImageTensor, BackendError>;

    fn concurrency(&self) -> ConcurrencyClass {
        ConcurrencyClass::Reentrant
    }
}

pub trait Embedder: Send + Sync {
    fn dim(&self) -> usize;

    /// Non-zero vector of length `dim()` for non-empty text.
    fn embed(&self, text: &str) -> Result<Vec<f64>, BackendError>;

    fn concurrency(&self) -> ConcurrencyClass {
        ConcurrencyClass::Reentrant
    }
}

pub trait LmScorer: Send + Sync {
    /// The scorer owns its tokenizer (vocabularies are model-specific).
    fn tokenize(&self, text: &str) -> Vec<String>;

    /// Per-token negative log-likelihoods, natural log, all >= 0.
    fn token_nlls(&self, tokens: &[String]) -> Result<Vec<f64>, BackendError>;

    fn concurrency(&self) -> ConcurrencyClass {
        ConcurrencyClass::Reentrant
    }
}
