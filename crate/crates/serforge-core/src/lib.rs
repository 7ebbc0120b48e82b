//! # serforge-core
//!
//! A desk-scale speech emotion recognition (SER) toolkit built from scratch:
//! WAV ingestion and length conditioning, a log-mel/patch DSP frontend, a
//! reverse-mode autodiff tensor engine, two transformer classifier pathways
//! (raw-waveform and spectrogram), Adam fine-tuning with checkpointing and
//! classification-head swapping, dataset manifests with deterministic splits,
//! a synthetic emotional-audio generator, and confusion-matrix metrics.
//!
//! The crate is organized around the pipeline stages:
//!
//! - [`audio`] — RIFF/WAVE parsing, resampling, fixed-length conditioning
//! - [`dsp`] — waveform normalization, STFT, mel filterbank, patchification
//! - [`tensor`] — dense tensors with reverse-mode autodiff and gradient checks
//! - [`model`] — the raw-audio and spectrogram transformer classifiers
//! - [`train`] — cross-entropy/Adam training loop, checkpoints, head swap
//! - [`data`] — manifests, 80/10/10 splits, corpus stats, synthetic corpora
//! - [`eval`] — confusion matrices, accuracy / balanced accuracy / macro-F1
//! - [`experiment`] — end-to-end scratch and transfer experiment protocols

pub mod audio;
pub mod data;
pub mod dsp;
pub mod eval;
pub mod experiment;
pub mod model;
pub(crate) mod rng;
pub mod tensor;
pub mod train;

use std::sync::Once;

/// Caps rayon worker threads from the `SER_FORGE_THREADS` environment
/// variable. Call once at process start; later calls are no-ops.
pub fn init_thread_pool_from_env() {
    static INIT: Once = Once::new();
    INIT.call_once(|| {
        if let Some(n) = std::env::var("SER_FORGE_THREADS")
            .ok()
            .and_then(|v| v.parse::<usize>().ok())
            .filter(|&n| n > 0)
        {
            // Ignore the error if a global pool already exists.
            let _ = rayon::ThreadPoolBuilder::new()
                .num_threads(n)
                .build_global();
        }
    });
}
