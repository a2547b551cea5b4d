//! Multinomial naive Bayes over min-max-normalized metric values.
//!
//! The model treats normalized features as fractional counts: for class c
//! and feature j, `log θ_cj = log(Σ_c x_j + α) − log(Σ_c Σ_j x_j + α·d)`,
//! with add-α smoothing and class priors estimated from the data. A
//! document scores `log P(c) + Σ_j x_j · log θ_cj` per class.

use alloc::vec;
use alloc::vec::Vec;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::math;

use super::argmax_tie_lower;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct NaiveBayesModel {
    pub alpha: f64,
    pub class_log_prior: Vec<f64>,
    /// `[class][feature]` smoothed log-probabilities.
    pub feature_log_prob: Vec<Vec<f64>>,
}

impl NaiveBayesModel {
    /// Fit on non-negative feature rows. Every class in `0..n_classes`
    /// needs at least one example.
    pub fn fit(rows: &[Vec<f64>], labels: &[usize], n_classes: usize, alpha: f64) -> Result<NaiveBayesModel> {
        if rows.is_empty() || rows.len() != labels.len() {
            return Err(Error::Training(alloc::format!(
                "bad training shape: {} rows, {} labels",
                rows.len(),
                labels.len()
            )));
        }
        if !(alpha > 0.0) {
            return Err(Error::Validation(alloc::format!(
                "smoothing alpha must be positive, got {alpha}"
            )));
        }
        let d = rows[0].len();
        for (row, &label) in rows.iter().zip(labels) {
            if label >= n_classes {
                return Err(Error::Training(alloc::format!(
                    "label {label} out of range 0..{n_classes}"
                )));
            }
            if let Some(v) = row.iter().find(|v| **v < 0.0) {
                return Err(Error::Validation(alloc::format!(
                    "negative feature value {v} in a multinomial model"
                )));
            }
        }

        let mut class_counts = vec![0usize; n_classes];
        let mut feature_sums = vec![vec![0.0f64; d]; n_classes];
        for (row, &label) in rows.iter().zip(labels) {
            class_counts[label] += 1;
            for (j, &v) in row.iter().enumerate() {
                feature_sums[label][j] += v;
            }
        }
        if let Some(empty) = class_counts.iter().position(|&c| c == 0) {
            return Err(Error::Training(alloc::format!(
                "class {empty} has zero training examples"
            )));
        }

        let n = rows.len() as f64;
        let class_log_prior = class_counts
            .iter()
            .map(|&c| math::ln(c as f64 / n))
            .collect();
        let feature_log_prob = feature_sums
            .iter()
            .map(|sums| {
                let total: f64 = sums.iter().sum();
                let denom = math::ln(total + alpha * d as f64);
                sums.iter().map(|&s| math::ln(s + alpha) - denom).collect()
            })
            .collect();

        Ok(NaiveBayesModel {
            alpha,
            class_log_prior,
            feature_log_prob,
        })
    }

    /// Per-class unnormalized log-posterior of one normalized row.
    pub fn joint_log_likelihood(&self, row: &[f64]) -> Vec<f64> {
        self.class_log_prior
            .iter()
            .zip(&self.feature_log_prob)
            .map(|(prior, log_prob)| {
                prior
                    + row
                        .iter()
                        .zip(log_prob)
                        .map(|(x, lp)| x * lp)
                        .sum::<f64>()
            })
            .collect()
    }

    pub fn predict(&self, row: &[f64]) -> usize {
        argmax_tie_lower(&self.joint_log_likelihood(row))
    }

    pub fn n_classes(&self) -> usize {
        self.class_log_prior.len()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn disjoint_single_features_separate_with_tiny_alpha() {
        let rows = vec![vec![1.0, 0.0], vec![0.0, 1.0]];
        let labels = vec![0, 1];
        let model = NaiveBayesModel::fit(&rows, &labels, 2, 1e-9).unwrap();
        assert_eq!(model.predict(&[1.0, 0.0]), 0);
        assert_eq!(model.predict(&[0.0, 1.0]), 1);
    }

    #[test]
    fn huge_alpha_washes_out_features() {
        // Class 1 has twice the prior mass; with near-uniform θ the prior
        // decides.
        let rows = vec![vec![1.0, 0.0], vec![0.0, 1.0], vec![0.0, 1.0]];
        let labels = vec![0, 1, 1];
        let model = NaiveBayesModel::fit(&rows, &labels, 2, 1e9).unwrap();
        assert_eq!(model.predict(&[1.0, 0.0]), 1);
    }

    /// Literal evaluation of the posterior: `P(c) · Π_j P(j|c)^{x_j}`,
    /// with θ computed from per-class sums, all through `powf`.
    fn brute_force_log_posterior(
        rows: &[Vec<f64>],
        labels: &[usize],
        n_classes: usize,
        alpha: f64,
        query: &[f64],
    ) -> Vec<f64> {
        let d = query.len();
        let n = rows.len() as f64;
        (0..n_classes)
            .map(|c| {
                let members: Vec<&Vec<f64>> = rows
                    .iter()
                    .zip(labels)
                    .filter(|(_, &l)| l == c)
                    .map(|(r, _)| r)
                    .collect();
                let prior = members.len() as f64 / n;
                let total: f64 = members.iter().map(|r| r.iter().sum::<f64>()).sum();
                let mut posterior = 1.0f64;
                for j in 0..d {
                    let sum_j: f64 = members.iter().map(|r| r[j]).sum();
                    let theta = (sum_j + alpha) / (total + alpha * d as f64);
                    posterior *= theta.powf(query[j]);
                }
                (prior * posterior).ln()
            })
            .collect()
    }

    #[test]
    fn posterior_matches_brute_force_on_toy_set() {
        let rows = vec![vec![0.2, 0.8, 0.1], vec![0.9, 0.1, 0.3], vec![0.5, 0.5, 0.9]];
        let labels = vec![0, 1, 2];
        let model = NaiveBayesModel::fit(&rows, &labels, 3, 1.0).unwrap();
        for query in [&[0.3, 0.3, 0.4][..], &[1.0, 0.0, 0.0], &[0.1, 0.9, 0.5]] {
            let got = model.joint_log_likelihood(query);
            let want = brute_force_log_posterior(&rows, &labels, 3, 1.0, query);
            for (g, w) in got.iter().zip(&want) {
                assert!((g - w).abs() < 1e-9, "{got:?} vs {want:?}");
            }
        }
    }

    #[test]
    fn empty_class_is_a_training_error() {
        let rows = vec![vec![1.0], vec![0.5]];
        let labels = vec![0, 0];
        assert!(matches!(
            NaiveBayesModel::fit(&rows, &labels, 2, 1.0),
            Err(Error::Training(_))
        ));
    }

    #[test]
    fn negative_feature_is_a_validation_error() {
        let rows = vec![vec![-0.1], vec![0.5]];
        let labels = vec![0, 1];
        assert!(matches!(
            NaiveBayesModel::fit(&rows, &labels, 2, 1.0),
            Err(Error::Validation(_))
        ));
    }
}
