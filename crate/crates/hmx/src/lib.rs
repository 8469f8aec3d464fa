//! Desk-scale humanoid motion stack: retargeting human pose sequences onto a
//! 27-DoF humanoid, discretizing the resulting action streams with a
//! vector-quantized tokenizer, generating token sequences from text with an
//! autoregressive transformer, and replaying or tracking motions through a
//! PD-controlled plant with imitation/regularization rewards and a PPO
//! trainer.
//!
//! Everything is file-based and deterministic: identical inputs and seeds
//! produce bitwise-identical outputs. See the `book/` guide for a narrative
//! walkthrough of each stage.

pub mod body;
pub mod control;
pub mod error;
pub mod generator;
pub mod io;
pub mod metrics;
pub mod nn;
pub mod numerics;
pub mod pipeline;
pub mod policy;
pub mod retarget;
pub mod tokenizer;

pub use error::{Error, Result};
