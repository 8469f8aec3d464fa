//! Adam optimizer with bias correction.

use crate::error::{Error, Result};

/// Adam hyperparameters. Defaults are the usual (0.9, 0.999, 1e-8).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AdamConfig {
    pub learning_rate: f64,
    pub beta1: f64,
    pub beta2: f64,
    pub epsilon: f64,
}

impl AdamConfig {
    pub fn with_lr(learning_rate: f64) -> Self {
        AdamConfig {
            learning_rate,
            ..AdamConfig::default()
        }
    }
}

impl Default for AdamConfig {
    fn default() -> Self {
        AdamConfig {
            learning_rate: 1e-3,
            beta1: 0.9,
            beta2: 0.999,
            epsilon: 1e-8,
        }
    }
}

/// First/second moment accumulators plus the step counter.
#[derive(Debug, Clone, PartialEq)]
pub struct AdamState {
    pub m: Vec<f64>,
    pub v: Vec<f64>,
    pub t: u64,
}

impl AdamState {
    pub fn new(dim: usize) -> Self {
        AdamState {
            m: vec![0.0; dim],
            v: vec![0.0; dim],
            t: 0,
        }
    }
}

/// One bias-corrected Adam step, applied in place to `params`.
///
/// Errors on a dimension mismatch between `params`, `grads`, and the state,
/// and on any non-finite gradient entry (naming its index).
pub fn adam_step(
    params: &mut [f64],
    grads: &[f64],
    state: &mut AdamState,
    cfg: &AdamConfig,
) -> Result<()> {
    if grads.len() != params.len() {
        return Err(Error::DimensionMismatch {
            context: "adam_step gradient",
            expected: params.len(),
            got: grads.len(),
        });
    }
    if state.m.len() != params.len() {
        return Err(Error::DimensionMismatch {
            context: "adam_step state",
            expected: params.len(),
            got: state.m.len(),
        });
    }
    for (i, g) in grads.iter().enumerate() {
        if !g.is_finite() {
            return Err(Error::NonFinite {
                label: "gradient".to_string(),
                index: i,
            });
        }
    }

    state.t += 1;
    let t = state.t as f64;
    let bc1 = 1.0 - cfg.beta1.powf(t);
    let bc2 = 1.0 - cfg.beta2.powf(t);
    for i in 0..params.len() {
        state.m[i] = cfg.beta1 * state.m[i] + (1.0 - cfg.beta1) * grads[i];
        state.v[i] = cfg.beta2 * state.v[i] + (1.0 - cfg.beta2) * grads[i] * grads[i];
        let m_hat = state.m[i] / bc1;
        let v_hat = state.v[i] / bc2;
        params[i] -= cfg.learning_rate * m_hat / (v_hat.sqrt() + cfg.epsilon);
    }
    Ok(())
}

/// Convenience wrapper owning config and state for one parameter vector.
#[derive(Debug, Clone)]
pub struct Adam {
    pub cfg: AdamConfig,
    pub state: AdamState,
}

impl Adam {
    pub fn new(cfg: AdamConfig, dim: usize) -> Self {
        Adam {
            cfg,
            state: AdamState::new(dim),
        }
    }

    pub fn step(&mut self, params: &mut [f64], grads: &[f64]) -> Result<()> {
        adam_step(params, grads, &mut self.state, &self.cfg)
    }
}
