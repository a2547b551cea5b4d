//! Random forest: bagged decision trees with per-split feature subsets.

use alloc::vec;
use alloc::vec::Vec;

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::math;

use super::argmax_tie_lower;
use super::tree::{Criterion, DecisionTreeModel};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RandomForestModel {
    pub trees: Vec<DecisionTreeModel>,
    pub n_classes: usize,
}

impl RandomForestModel {
    /// Train `n_trees` trees, each on a bootstrap resample (unless
    /// `bootstrap` is off) with `max_features` split candidates per node
    /// (default √d). Per-tree seeds derive from `seed`, so the forest is
    /// fully reproducible and trees are independent.
    #[allow(clippy::too_many_arguments)]
    pub fn fit(
        rows: &[Vec<f64>],
        labels: &[usize],
        n_classes: usize,
        n_trees: usize,
        criterion: Criterion,
        max_depth: Option<usize>,
        bootstrap: bool,
        max_features: Option<usize>,
        seed: u64,
    ) -> Result<RandomForestModel> {
        if n_trees < 1 {
            return Err(Error::Validation(alloc::format!(
                "a forest needs at least one tree, got {n_trees}"
            )));
        }
        if rows.is_empty() || rows.len() != labels.len() {
            return Err(Error::Training(alloc::format!(
                "bad training shape: {} rows, {} labels",
                rows.len(),
                labels.len()
            )));
        }
        let d = rows[0].len();
        let m = max_features.unwrap_or_else(|| (math::sqrt(d as f64) as usize).max(1));

        let mut master = ChaCha8Rng::seed_from_u64(seed);
        let tree_seeds: Vec<u64> = (0..n_trees).map(|_| master.gen()).collect();

        let mut trees = Vec::with_capacity(n_trees);
        for tree_seed in tree_seeds {
            let mut rng = ChaCha8Rng::seed_from_u64(tree_seed);
            let (sample_rows, sample_labels) = if bootstrap {
                let mut sampled_rows = Vec::with_capacity(rows.len());
                let mut sampled_labels = Vec::with_capacity(rows.len());
                for _ in 0..rows.len() {
                    let pick = rng.gen_range(0..rows.len());
                    sampled_rows.push(rows[pick].clone());
                    sampled_labels.push(labels[pick]);
                }
                (sampled_rows, sampled_labels)
            } else {
                (rows.to_vec(), labels.to_vec())
            };
            trees.push(DecisionTreeModel::fit(
                &sample_rows,
                &sample_labels,
                n_classes,
                criterion,
                max_depth,
                Some(m),
                Some(&mut rng),
            )?);
        }
        Ok(RandomForestModel { trees, n_classes })
    }

    pub fn predict(&self, row: &[f64]) -> usize {
        let mut votes = vec![0.0f64; self.n_classes];
        for tree in &self.trees {
            votes[tree.predict(row)] += 1.0;
        }
        argmax_tie_lower(&votes)
    }

    /// Mean tree importances, renormalized to sum 1.
    pub fn importances(&self) -> Vec<f64> {
        let d = self.trees.first().map(|t| t.n_features).unwrap_or(0);
        let mut sums = vec![0.0f64; d];
        for tree in &self.trees {
            for (s, &v) in sums.iter_mut().zip(&tree.importances) {
                *s += v;
            }
        }
        let total: f64 = sums.iter().sum();
        if total > 0.0 {
            for s in sums.iter_mut() {
                *s /= total;
            }
        }
        sums
    }
}
