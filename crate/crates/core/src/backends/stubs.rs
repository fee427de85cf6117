//! Deterministic stand-ins for every backend trait.
//!
//! Stubs let the full pipeline run offline and make augmentation outputs
//! exactly predictable, so tests can assert against closed forms. All of
//! them are reentrant and bit-stable under a fixed configuration.

use std::collections::BTreeMap;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::{BackendError, Captioner, Embedder, ImageGenerator, LmScorer, Paraphraser, Translator};
use crate::raster::{quantize_u8, ImageTensor};
use crate::util::{derive_seed, fnv1a64};

/// Token map per (source, target) language pair.
pub type DictionaryMaps = BTreeMap<(String, String), BTreeMap<String, String>>;

#[derive(Debug, Clone, Default)]
pub enum TranslatorMode {
    /// Return the input verbatim for every language pair.
    #[default]
    Identity,
    /// Reverse whitespace token order.
    WordReverse,
    /// Apply a fixed token map for the requested language pair; unmapped
    /// tokens pass through.
    Dictionary(DictionaryMaps),
}

#[derive(Debug, Clone, Default)]
pub struct StubTranslator {
    mode: TranslatorMode,
}

impl StubTranslator {
    pub fn identity() -> Self {
        StubTranslator { mode: TranslatorMode::Identity }
    }

    pub fn word_reverse() -> Self {
        StubTranslator { mode: TranslatorMode::WordReverse }
    }

    pub fn dictionary(maps: DictionaryMaps) -> Self {
        StubTranslator { mode: TranslatorMode::Dictionary(maps) }
    }
}

impl Translator for StubTranslator {
    fn translate(&self, text: &str, src: &str, tgt: &str) -> Result<String, BackendError> {
        match &self.mode {
            TranslatorMode::Identity => Ok(text.to_string()),
            TranslatorMode::WordReverse => {
                let mut tokens: Vec<&str> = text.split_whitespace().collect();
                tokens.reverse();
                Ok(tokens.join(" "))
            }
            TranslatorMode::Dictionary(maps) => {
                let map = maps.get(&(src.to_string(), tgt.to_string()));
                let out: Vec<String> = text
                    .split_whitespace()
                    .map(|t| {
                        map.and_then(|m| m.get(t)).cloned().unwrap_or_else(|| t.to_string())
                    })
                    .collect();
                Ok(out.join(" "))
            }
        }
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub enum ParaphraserMode {
    /// Append a short seed-derived tag; keeps the original text intact.
    #[default]
    SuffixTag,
    /// Seeded shuffle of whitespace tokens.
    Shuffle,
}

#[derive(Debug, Clone, Default)]
pub struct StubParaphraser {
    mode: ParaphraserMode,
}

impl StubParaphraser {
    pub fn suffix_tag() -> Self {
        StubParaphraser { mode: ParaphraserMode::SuffixTag }
    }

    pub fn shuffle() -> Self {
        StubParaphraser { mode: ParaphraserMode::Shuffle }
    }
}

impl Paraphraser for StubParaphraser {
    fn paraphrase(&self, text: &str, template: &str, seed: u64) -> Result<String, BackendError> {
        if text.trim().is_empty() {
            return Err(BackendError::EmptyInput);
        }
        let seed = derive_seed(seed, template);
        match self.mode {
            ParaphraserMode::SuffixTag => Ok(format!("{text} alt{}", seed % 9973)),
            ParaphraserMode::Shuffle => {
                let mut tokens: Vec<&str> = text.split_whitespace().collect();
                let mut rng = ChaCha8Rng::seed_from_u64(seed);
                tokens.shuffle(&mut rng);
                Ok(tokens.join(" "))
            }
        }
    }
}

/// Describes the image from its channel statistics. Deterministic and
/// non-empty for any valid image.
#[derive(Debug, Clone, Copy, Default)]
pub struct StubCaptioner;

impl Captioner for StubCaptioner {
    fn caption(&self, image: &ImageTensor) -> Result<String, BackendError> {
        let means = image.channel_means();
        let dominant = if means[0] >= means[1] && means[0] >= means[2] {
            "red"
        } else if means[1] >= means[2] {
            "green"
        } else {
            "blue"
        };
        let brightness = (means[0] + means[1] + means[2]) / 3.0;
        let tone = if brightness > 0.66 {
            "bright"
        } else if brightness < 0.33 {
            "dark"
        } else {
            "muted"
        };
        Ok(format!("a {tone} photo with predominantly {dominant} tones"))
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ImageGenMode {
    /// Return the input bit-exactly.
    Identity,
    /// Flip every channel value on the 8-bit grid (k -> 255 - k), so double
    /// inversion is exact for 8-bit-grid images.
    Invert,
    /// Shift one channel by a fixed amount, clamped to [0, 1].
    Tint { channel: usize, delta: f64 },
}

#[derive(Debug, Clone, Copy)]
pub struct StubImageGen {
    mode: ImageGenMode,
}

impl StubImageGen {
    pub fn identity() -> Self {
        StubImageGen { mode: ImageGenMode::Identity }
    }

    pub fn invert() -> Self {
        StubImageGen { mode: ImageGenMode::Invert }
    }

    pub fn tint(channel: usize, delta: f64) -> Self {
        assert!(channel < 3, "channel index");
        StubImageGen { mode: ImageGenMode::Tint { channel, delta } }
    }
}

impl ImageGenerator for StubImageGen {
    fn generate(
        &self,
        image: &ImageTensor,
        _prompt: &str,
        _strength: f64,
        _seed: u64,
    ) -> Result<ImageTensor, BackendError> {
        match self.mode {
            ImageGenMode::Identity => Ok(image.clone()),
            ImageGenMode::Invert => {
                let mut out = image.clone();
                for v in out.pixels_mut() {
                    *v = f64::from(255 - quantize_u8(*v)) / 255.0;
                }
                Ok(out)
            }
            ImageGenMode::Tint { channel, delta } => {
                let mut out = image.clone();
                for chunk in out.pixels_mut().chunks_exact_mut(3) {
                    chunk[channel] = (chunk[channel] + delta).clamp(0.0, 1.0);
                }
                Ok(out)
            }
        }
    }
}

#[derive(Debug, Clone)]
enum EmbedderMode {
    /// Hashed bag of tokens: token -> bucket by seeded FNV hash.
    Hashed { seed: u64 },
    /// Explicit token -> basis index table; unmapped tokens fall back to
    /// the hash bucket. Lets tests construct exactly orthogonal vectors.
    Table { map: BTreeMap<String, usize>, seed: u64 },
}

#[derive(Debug, Clone)]
pub struct StubEmbedder {
    dim: usize,
    mode: EmbedderMode,
}

impl StubEmbedder {
    /// Deterministic hashed bag-of-tokens embedder of dimension `dim` (>= 2).
    pub fn hashed(dim: usize, seed: u64) -> Self {
        assert!(dim >= 2, "embedding dimension must be >= 2");
        StubEmbedder { dim, mode: EmbedderMode::Hashed { seed } }
    }

    /// Embedder with an explicit token -> basis-vector map.
    pub fn orthogonal(map: BTreeMap<String, usize>, dim: usize) -> Self {
        assert!(dim >= 2, "embedding dimension must be >= 2");
        assert!(map.values().all(|&i| i < dim), "table index out of range");
        StubEmbedder { dim, mode: EmbedderMode::Table { map, seed: 0 } }
    }

    fn bucket(&self, token: &str, seed: u64) -> usize {
        (fnv1a64(token) ^ seed.wrapping_mul(0x9e37_79b9_7f4a_7c15)) as usize % self.dim
    }
}

impl Embedder for StubEmbedder {
    fn dim(&self) -> usize {
        self.dim
    }

    fn embed(&self, text: &str) -> Result<Vec<f64>, BackendError> {
        let tokens: Vec<&str> = text.split_whitespace().collect();
        if tokens.is_empty() {
            return Err(BackendError::EmptyInput);
        }
        let mut v = vec![0.0f64; self.dim];
        for t in tokens {
            let idx = match &self.mode {
                EmbedderMode::Hashed { seed } => self.bucket(t, *seed),
                EmbedderMode::Table { map, seed } => {
                    map.get(t).copied().unwrap_or_else(|| self.bucket(t, *seed))
                }
            };
            v[idx] += 1.0;
        }
        Ok(v)
    }
}

/// Uniform language model: every token scored -log(1/V) = log V.
#[derive(Debug, Clone, Copy)]
pub struct StubLmScorer {
    vocab_size: u64,
}

impl StubLmScorer {
    pub fn uniform(vocab_size: u64) -> Self {
        assert!(vocab_size >= 2, "vocab size must be >= 2");
        StubLmScorer { vocab_size }
    }
}

impl LmScorer for StubLmScorer {
    fn tokenize(&self, text: &str) -> Vec<String> {
        text.split_whitespace().map(str::to_string).collect()
    }

    fn token_nlls(&self, tokens: &[String]) -> Result<Vec<f64>, BackendError> {
        Ok(vec![(self.vocab_size as f64).ln(); tokens.len()])
    }
}
