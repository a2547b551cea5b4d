//! Complexity classifiers over document feature vectors: a readability
//! threshold baseline and four learners built from scratch, plus
//! cross-validation, grid search, evaluation and explanation.

mod baseline;
mod blind;
mod cv;
mod eval;
mod explain;
mod forest;
mod logistic;
mod model;
mod naive_bayes;
mod normalizer;
mod tree;

pub use baseline::{baseline_predict, BASELINE_BANDS};
pub use blind::{blind_test, pearson, BlindGroup, BlindGroupOutcome, BlindReport};
pub use cv::{
    cross_validate, default_grid, grid_search_cv, stratified_folds, CvOutcome, FoldOutcome,
    GridPoint, GridSearchReport,
};
pub use eval::{evaluate, spearman, DocumentPrediction, EvaluationReport};
pub use explain::{
    explain, BaselineBand, ClassCoefficients, ClassLogProbs, Explanation, FeatureWeight,
    STRONG_COEFFICIENT_THRESHOLD,
};
pub use forest::RandomForestModel;
pub use logistic::{
    binary_logistic_gradient, binary_logistic_loss, LogisticRegressionModel,
};
pub use model::{HyperParams, ModelKind, ModelParams, TrainedModel};
pub use naive_bayes::NaiveBayesModel;
pub use normalizer::Normalizer;
pub use tree::{Criterion, DecisionTreeModel, TreeNode};

use alloc::string::String;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::metrics::FeatureVector;

/// Number of complexity levels in the document classification task.
pub const COMPLEXITY_LEVELS: usize = 8;

/// A labeled feature matrix: the training/evaluation currency of this
/// module. Rows are raw (unnormalized) metric values.
#[derive(Debug, Clone, PartialEq)]
pub struct Dataset {
    pub feature_names: Vec<String>,
    pub ids: Vec<String>,
    pub rows: Vec<Vec<f64>>,
    pub labels: Vec<usize>,
    /// Size of the label space; labels must be below it.
    pub label_count: usize,
}

impl Dataset {
    pub fn new(feature_names: Vec<String>, label_count: usize) -> Dataset {
        Dataset {
            feature_names,
            ids: Vec::new(),
            rows: Vec::new(),
            labels: Vec::new(),
            label_count,
        }
    }

    /// Build a dataset from feature vectors in canonical schema order.
    pub fn from_vectors(
        vectors: &[FeatureVector],
        labels: Vec<usize>,
        label_count: usize,
    ) -> Result<Dataset> {
        if vectors.len() != labels.len() {
            return Err(Error::Validation(alloc::format!(
                "{} vectors but {} labels",
                vectors.len(),
                labels.len()
            )));
        }
        let mut data = Dataset::new(
            crate::metrics::FEATURE_NAMES
                .iter()
                .map(|n| String::from(*n))
                .collect(),
            label_count,
        );
        for (vector, label) in vectors.iter().zip(labels) {
            data.push(vector.document_id.clone(), vector.values().to_vec(), label)?;
        }
        Ok(data)
    }

    pub fn push(&mut self, id: String, row: Vec<f64>, label: usize) -> Result<()> {
        if row.len() != self.feature_names.len() {
            return Err(Error::Validation(alloc::format!(
                "row {id:?} has {} features, expected {}",
                row.len(),
                self.feature_names.len()
            )));
        }
        if label >= self.label_count {
            return Err(Error::Validation(alloc::format!(
                "label {label} out of range 0..{}",
                self.label_count
            )));
        }
        if row.iter().any(|v| !v.is_finite()) {
            return Err(Error::Validation(alloc::format!(
                "row {id:?} contains a non-finite value"
            )));
        }
        self.ids.push(id);
        self.rows.push(row);
        self.labels.push(label);
        Ok(())
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn feature_count(&self) -> usize {
        self.feature_names.len()
    }

    /// Rows selected by index, in the given order.
    pub fn subset(&self, indices: &[usize]) -> Dataset {
        Dataset {
            feature_names: self.feature_names.clone(),
            ids: indices.iter().map(|&i| self.ids[i].clone()).collect(),
            rows: indices.iter().map(|&i| self.rows[i].clone()).collect(),
            labels: indices.iter().map(|&i| self.labels[i]).collect(),
            label_count: self.label_count,
        }
    }
}

/// Index of the largest score; ties resolve to the lower label for every
/// classifier in this module.
pub(crate) fn argmax_tie_lower(scores: &[f64]) -> usize {
    let mut best = 0usize;
    for (i, &s) in scores.iter().enumerate().skip(1) {
        if s > scores[best] {
            best = i;
        }
    }
    best
}
