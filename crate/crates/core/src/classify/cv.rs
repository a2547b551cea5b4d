//! Stratified cross-validation and grid search.
//!
//! The normalizer is fitted inside each fold, on the training part only —
//! validation documents never leak into the feature statistics.

use alloc::string::String;
use alloc::vec::Vec;

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

use super::eval::{evaluate, EvaluationReport};
use super::model::{HyperParams, ModelKind, TrainedModel};
use super::tree::Criterion;
use super::Dataset;

/// Assign every sample to one of `k` folds, keeping class proportions:
/// samples of each class are shuffled (seeded) and dealt round-robin.
///
/// When some class has fewer than `k` members, `k` is lowered to the
/// smallest class size and a warning is returned. A class with fewer than
/// 2 members cannot be stratified at all.
pub fn stratified_folds(
    labels: &[usize],
    k: usize,
    seed: u64,
) -> Result<(Vec<Vec<usize>>, Option<String>)> {
    if k < 2 {
        return Err(Error::Validation(alloc::format!(
            "cross-validation needs k >= 2, got {k}"
        )));
    }
    if labels.is_empty() {
        return Err(Error::Validation(String::from("no samples to fold")));
    }
    let max_label = labels.iter().copied().max().unwrap_or(0);
    let mut by_class: Vec<Vec<usize>> = alloc::vec![Vec::new(); max_label + 1];
    for (i, &label) in labels.iter().enumerate() {
        by_class[label].push(i);
    }
    let min_class = by_class
        .iter()
        .filter(|c| !c.is_empty())
        .map(|c| c.len())
        .min()
        .unwrap_or(0);
    if min_class < 2 {
        return Err(Error::Validation(String::from(
            "stratification needs at least 2 samples per class",
        )));
    }
    let (k, warning) = if min_class < k {
        (
            min_class,
            Some(alloc::format!(
                "lowered k from {k} to {min_class}: smallest class has {min_class} members"
            )),
        )
    } else {
        (k, None)
    };

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut folds: Vec<Vec<usize>> = alloc::vec![Vec::new(); k];
    let mut next_fold = 0usize;
    for class in by_class.iter_mut() {
        shuffle(class, &mut rng);
        for &index in class.iter() {
            folds[next_fold].push(index);
            next_fold = (next_fold + 1) % k;
        }
    }
    for fold in folds.iter_mut() {
        fold.sort_unstable();
    }
    Ok((folds, warning))
}

fn shuffle(indices: &mut [usize], rng: &mut ChaCha8Rng) {
    for i in (1..indices.len()).rev() {
        let j = rng.gen_range(0..=i);
        indices.swap(i, j);
    }
}

/// One fold's trained model and held-out evaluation.
#[derive(Debug, Clone)]
pub struct FoldOutcome {
    pub fold: usize,
    pub train_indices: Vec<usize>,
    pub test_indices: Vec<usize>,
    pub model: TrainedModel,
    pub report: EvaluationReport,
}

#[derive(Debug, Clone)]
pub struct CvOutcome {
    pub folds: Vec<FoldOutcome>,
    pub mean_accuracy: f64,
    pub mean_rmse: f64,
    pub warning: Option<String>,
}

/// K-fold cross-validate one configuration.
pub fn cross_validate(
    data: &Dataset,
    params: &HyperParams,
    k: usize,
    seed: u64,
) -> Result<CvOutcome> {
    let (folds, warning) = stratified_folds(&data.labels, k, seed)?;
    let mut outcomes = Vec::with_capacity(folds.len());
    for (fold_index, test_indices) in folds.iter().enumerate() {
        let train_indices: Vec<usize> = (0..data.len())
            .filter(|i| !test_indices.contains(i))
            .collect();
        let train = data.subset(&train_indices);
        let test = data.subset(test_indices);
        let model = TrainedModel::fit(&train, params)?;
        let report = evaluate(&model, &test)?;
        outcomes.push(FoldOutcome {
            fold: fold_index,
            train_indices,
            test_indices: test_indices.clone(),
            model,
            report,
        });
    }
    let n = outcomes.len() as f64;
    let mean_accuracy = outcomes.iter().map(|o| o.report.accuracy).sum::<f64>() / n;
    let mean_rmse = outcomes.iter().map(|o| o.report.rmse).sum::<f64>() / n;
    Ok(CvOutcome {
        folds: outcomes,
        mean_accuracy,
        mean_rmse,
        warning,
    })
}

/// Cross-validated scores of one grid configuration.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GridPoint {
    pub params: HyperParams,
    pub fold_accuracy: Vec<f64>,
    pub fold_rmse: Vec<f64>,
    pub mean_accuracy: f64,
    pub mean_rmse: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GridSearchReport {
    pub evaluated: Vec<GridPoint>,
    /// Winner by mean accuracy, ties broken by lower RMSE then grid order.
    pub best_index: usize,
    pub folds: usize,
    pub seed: u64,
    pub warnings: Vec<String>,
}

impl GridSearchReport {
    pub fn best(&self) -> &GridPoint {
        &self.evaluated[self.best_index]
    }
}

/// Exhaustively cross-validate a hyperparameter grid.
pub fn grid_search_cv(
    data: &Dataset,
    grid: &[HyperParams],
    k: usize,
    seed: u64,
) -> Result<GridSearchReport> {
    if grid.is_empty() {
        return Err(Error::Validation(String::from("empty hyperparameter grid")));
    }
    let mut evaluated = Vec::with_capacity(grid.len());
    let mut warnings: Vec<String> = Vec::new();
    let mut folds_used = k;
    for params in grid {
        let outcome = cross_validate(data, params, k, seed)?;
        folds_used = outcome.folds.len();
        if let Some(w) = outcome.warning {
            if !warnings.contains(&w) {
                warnings.push(w);
            }
        }
        evaluated.push(GridPoint {
            params: params.clone(),
            fold_accuracy: outcome.folds.iter().map(|f| f.report.accuracy).collect(),
            fold_rmse: outcome.folds.iter().map(|f| f.report.rmse).collect(),
            mean_accuracy: outcome.mean_accuracy,
            mean_rmse: outcome.mean_rmse,
        });
    }

    let mut best_index = 0usize;
    for (i, point) in evaluated.iter().enumerate().skip(1) {
        let best = &evaluated[best_index];
        let better = point.mean_accuracy > best.mean_accuracy
            || (point.mean_accuracy == best.mean_accuracy && point.mean_rmse < best.mean_rmse);
        if better {
            best_index = i;
        }
    }
    Ok(GridSearchReport {
        evaluated,
        best_index,
        folds: folds_used,
        seed,
        warnings,
    })
}

/// The default search grid per model kind.
pub fn default_grid(kind: ModelKind, seed: u64) -> Vec<HyperParams> {
    let depths: Vec<Option<usize>> = (3..=12).map(Some).chain([None]).collect();
    let criteria = [Criterion::Gini, Criterion::Entropy];
    match kind {
        ModelKind::Baseline => alloc::vec![HyperParams::Baseline],
        ModelKind::NaiveBayes => [0.01, 0.1, 0.5, 1.0, 2.0]
            .iter()
            .map(|&alpha| HyperParams::NaiveBayes { alpha })
            .collect(),
        ModelKind::LogisticRegression => [0.01, 0.1, 1.0, 10.0, 100.0]
            .iter()
            .map(|&l2| HyperParams::LogisticRegression {
                l2,
                learning_rate: 0.1,
                epochs: 5000,
                seed,
            })
            .collect(),
        ModelKind::DecisionTree => {
            let mut grid = Vec::new();
            for &criterion in &criteria {
                for &max_depth in &depths {
                    grid.push(HyperParams::DecisionTree {
                        criterion,
                        max_depth,
                    });
                }
            }
            grid
        }
        ModelKind::RandomForest => {
            let mut grid = Vec::new();
            for &n_trees in &[100usize, 300, 500, 1244] {
                for &criterion in &criteria {
                    for &max_depth in &depths {
                        grid.push(HyperParams::RandomForest {
                            n_trees,
                            criterion,
                            max_depth,
                            bootstrap: true,
                            max_features: None,
                            seed,
                        });
                    }
                }
            }
            grid
        }
    }
}
