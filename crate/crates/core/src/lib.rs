//! Multimodal data augmentation and classification toolkit.
//!
//! The crate covers the full desk-scale pipeline for CrisisMMD-shaped
//! corpora: manifest ingestion and validation, text augmentation
//! (back-translation, filtered paraphrasing, caption concatenation),
//! diffusion-style image augmentation (real-guidance orchestration and
//! mask/fractal compositing), text-quality metrics, early-fusion and
//! multi-view classifiers with placeholder-masked inference, and a
//! training/evaluation harness. Every generative dependency sits behind
//! a backend trait with a deterministic stub, so the whole pipeline runs
//! and is testable offline.

pub mod backends;
pub mod commands;
pub mod config;
pub mod data_model;
pub mod fusion;
pub mod image_augment;
pub mod quality;
pub mod raster;
pub mod synth;
pub mod text_augment;
pub mod train;
pub mod util;

pub use data_model::{HumanitarianLabel, MultimodalSample, Provenance, Split};
pub use raster::ImageTensor;
