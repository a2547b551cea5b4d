//! One-vs-rest L2-regularized logistic regression trained by full-batch
//! gradient descent.
//!
//! Eight binary scorers (one per complexity level) each fit
//! `J(w, b) = mean cross-entropy + (λ/2)·‖w‖²` — the bias is not
//! regularized — and prediction takes the argmax of the eight linear
//! scores.

use alloc::vec;
use alloc::vec::Vec;

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::math;

use super::argmax_tie_lower;

/// Loss-delta threshold for early stopping.
pub const EARLY_STOP_DELTA: f64 = 1e-8;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LogisticRegressionModel {
    /// `[class][feature]` weight matrix.
    pub weights: Vec<Vec<f64>>,
    pub biases: Vec<f64>,
}

fn sigmoid(z: f64) -> f64 {
    1.0 / (1.0 + math::exp(-z))
}

/// Numerically stable binary cross-entropy of a linear score `z` against
/// target `y ∈ {0, 1}`: `max(z,0) − z·y + ln(1 + e^{−|z|})`.
fn cross_entropy(z: f64, y: f64) -> f64 {
    z.max(0.0) - z * y + math::ln(1.0 + math::exp(-math::abs(z)))
}

/// Regularized loss of one binary scorer over a dataset.
pub fn binary_logistic_loss(
    weights: &[f64],
    bias: f64,
    rows: &[Vec<f64>],
    targets: &[f64],
    l2: f64,
) -> f64 {
    let n = rows.len() as f64;
    let data_term: f64 = rows
        .iter()
        .zip(targets)
        .map(|(row, &y)| {
            let z = bias + dot(weights, row);
            cross_entropy(z, y)
        })
        .sum::<f64>()
        / n;
    let reg_term = 0.5 * l2 * weights.iter().map(|w| w * w).sum::<f64>();
    data_term + reg_term
}

/// Analytic gradient of [`binary_logistic_loss`]: returns `(∂w, ∂b)`.
pub fn binary_logistic_gradient(
    weights: &[f64],
    bias: f64,
    rows: &[Vec<f64>],
    targets: &[f64],
    l2: f64,
) -> (Vec<f64>, f64) {
    let n = rows.len() as f64;
    let mut grad_w = vec![0.0f64; weights.len()];
    let mut grad_b = 0.0f64;
    for (row, &y) in rows.iter().zip(targets) {
        let error = sigmoid(bias + dot(weights, row)) - y;
        grad_b += error;
        for (g, &x) in grad_w.iter_mut().zip(row) {
            *g += error * x;
        }
    }
    for (g, &w) in grad_w.iter_mut().zip(weights) {
        *g = *g / n + l2 * w;
    }
    (grad_w, grad_b / n)
}

fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

impl LogisticRegressionModel {
    /// Train `n_classes` one-vs-rest scorers. Weights initialize to small
    /// seeded uniform noise so runs are exactly reproducible.
    pub fn fit(
        rows: &[Vec<f64>],
        labels: &[usize],
        n_classes: usize,
        l2: f64,
        learning_rate: f64,
        epochs: usize,
        seed: u64,
    ) -> Result<LogisticRegressionModel> {
        if rows.is_empty() || rows.len() != labels.len() {
            return Err(Error::Training(alloc::format!(
                "bad training shape: {} rows, {} labels",
                rows.len(),
                labels.len()
            )));
        }
        if l2 < 0.0 || learning_rate <= 0.0 {
            return Err(Error::Validation(alloc::format!(
                "bad optimizer settings: l2={l2}, learning_rate={learning_rate}"
            )));
        }
        let d = rows[0].len();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut weights = Vec::with_capacity(n_classes);
        let mut biases = vec![0.0f64; n_classes];

        for class in 0..n_classes {
            let targets: Vec<f64> = labels
                .iter()
                .map(|&l| if l == class { 1.0 } else { 0.0 })
                .collect();
            let mut w: Vec<f64> = (0..d).map(|_| rng.gen_range(-0.01..0.01)).collect();
            let mut b = 0.0f64;
            let mut previous_loss = f64::INFINITY;

            for epoch in 0..epochs {
                let (grad_w, grad_b) = binary_logistic_gradient(&w, b, rows, &targets, l2);
                for (wj, gj) in w.iter_mut().zip(&grad_w) {
                    *wj -= learning_rate * gj;
                }
                b -= learning_rate * grad_b;

                let loss = binary_logistic_loss(&w, b, rows, &targets, l2);
                if !loss.is_finite() {
                    return Err(Error::Training(alloc::format!(
                        "non-finite loss for class {class} at epoch {epoch} \
                         (l2={l2}, learning_rate={learning_rate})"
                    )));
                }
                if math::abs(previous_loss - loss) < EARLY_STOP_DELTA {
                    break;
                }
                previous_loss = loss;
            }
            weights.push(w);
            biases[class] = b;
        }

        Ok(LogisticRegressionModel { weights, biases })
    }

    /// The per-class linear scores (monotone in the OvR probabilities).
    pub fn decision(&self, row: &[f64]) -> Vec<f64> {
        self.weights
            .iter()
            .zip(&self.biases)
            .map(|(w, &b)| b + dot(w, row))
            .collect()
    }

    pub fn predict(&self, row: &[f64]) -> usize {
        argmax_tie_lower(&self.decision(row))
    }

    pub fn n_classes(&self) -> usize {
        self.biases.len()
    }
}
