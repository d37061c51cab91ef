//! A self-contained recurrent network toolkit built around the Li-GRU cell
//! (single update gate, ReLU candidate, batch-normalized feed-forward
//! pre-activations) and its baselines: standard GRU, minimal GRU without the
//! reset gate, LSTM, and a vanilla ReLU RNN.
//!
//! The crate covers the full training recipe — bidirectional stacking,
//! recurrent dropout with a time-shared mask, weight noise, Adam with
//! dev-driven learning-rate halving, length-sorted curriculum batching —
//! plus framewise cross-entropy and CTC heads, best-path decoding, and the
//! diagnostic analyses (gate cross-correlation, per-parameter gradient
//! norms, parameter counting).
//!
//! Everything runs on plain `f64` arrays with a fixed summation order, so
//! identical configuration and seed produce bit-identical results.

pub mod analysis;
pub mod cells;
pub mod checkpoint;
pub mod config;
pub mod data;
pub mod error;
pub mod gradcheck;
pub mod minibatch;
pub mod network;
pub mod norm;
pub mod numeric;
pub mod optim;

pub use error::{Error, Result};
pub use numeric::{Matrix, RngStream};
