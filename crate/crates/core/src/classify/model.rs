//! The serializable trained model: any classifier kind behind one
//! prediction interface.

use alloc::string::String;
use alloc::vec::Vec;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::SCHEMA_VERSION;

use super::baseline::baseline_predict;
use super::forest::RandomForestModel;
use super::logistic::LogisticRegressionModel;
use super::naive_bayes::NaiveBayesModel;
use super::normalizer::Normalizer;
use super::tree::{Criterion, DecisionTreeModel};
use super::Dataset;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ModelKind {
    Baseline,
    DecisionTree,
    RandomForest,
    LogisticRegression,
    NaiveBayes,
}

impl ModelKind {
    pub fn parse(s: &str) -> Option<ModelKind> {
        Some(match s {
            "baseline" => ModelKind::Baseline,
            "dt" | "decision_tree" => ModelKind::DecisionTree,
            "rf" | "random_forest" => ModelKind::RandomForest,
            "lr" | "logistic_regression" => ModelKind::LogisticRegression,
            "nb" | "naive_bayes" => ModelKind::NaiveBayes,
            _ => return None,
        })
    }

    pub fn name(self) -> &'static str {
        match self {
            ModelKind::Baseline => "baseline",
            ModelKind::DecisionTree => "decision_tree",
            ModelKind::RandomForest => "random_forest",
            ModelKind::LogisticRegression => "logistic_regression",
            ModelKind::NaiveBayes => "naive_bayes",
        }
    }
}

/// Kind-specific training configuration.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "model", rename_all = "snake_case")]
pub enum HyperParams {
    Baseline,
    DecisionTree {
        criterion: Criterion,
        max_depth: Option<usize>,
    },
    RandomForest {
        n_trees: usize,
        criterion: Criterion,
        max_depth: Option<usize>,
        bootstrap: bool,
        /// Split candidates per node; `None` means √d.
        max_features: Option<usize>,
        seed: u64,
    },
    LogisticRegression {
        l2: f64,
        learning_rate: f64,
        epochs: usize,
        seed: u64,
    },
    NaiveBayes {
        alpha: f64,
    },
}

impl HyperParams {
    pub fn kind(&self) -> ModelKind {
        match self {
            HyperParams::Baseline => ModelKind::Baseline,
            HyperParams::DecisionTree { .. } => ModelKind::DecisionTree,
            HyperParams::RandomForest { .. } => ModelKind::RandomForest,
            HyperParams::LogisticRegression { .. } => ModelKind::LogisticRegression,
            HyperParams::NaiveBayes { .. } => ModelKind::NaiveBayes,
        }
    }
}

/// Kind-specific fitted parameters.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum ModelParams {
    Baseline {
        /// Index of the reading-ease score in the feature schema.
        km_index: usize,
    },
    DecisionTree(DecisionTreeModel),
    RandomForest(RandomForestModel),
    LogisticRegression(LogisticRegressionModel),
    NaiveBayes(NaiveBayesModel),
}

/// A trained classifier plus everything needed to apply it: the fitted
/// normalizer, the feature schema it was trained on and its
/// hyperparameters. Serialization round-trips exactly.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TrainedModel {
    pub schema_version: u32,
    pub kind: ModelKind,
    pub label_count: usize,
    pub feature_names: Vec<String>,
    pub hyperparameters: HyperParams,
    pub normalizer: Normalizer,
    pub parameters: ModelParams,
}

impl TrainedModel {
    /// Fit a model of the configured kind on a dataset. The normalizer is
    /// fitted here, on exactly this data.
    pub fn fit(data: &Dataset, params: &HyperParams) -> Result<TrainedModel> {
        if data.is_empty() {
            return Err(Error::Validation(String::from(
                "cannot train on an empty dataset",
            )));
        }
        let normalizer = Normalizer::fit(&data.rows)?;
        let normalized = normalizer.transform(&data.rows);

        let parameters = match params {
            HyperParams::Baseline => {
                let km_index = data
                    .feature_names
                    .iter()
                    .position(|n| n == "KM_score")
                    .ok_or_else(|| {
                        Error::Validation(String::from(
                            "baseline model needs a KM_score feature",
                        ))
                    })?;
                ModelParams::Baseline { km_index }
            }
            HyperParams::NaiveBayes { alpha } => ModelParams::NaiveBayes(NaiveBayesModel::fit(
                &normalized,
                &data.labels,
                data.label_count,
                *alpha,
            )?),
            HyperParams::LogisticRegression {
                l2,
                learning_rate,
                epochs,
                seed,
            } => ModelParams::LogisticRegression(LogisticRegressionModel::fit(
                &normalized,
                &data.labels,
                data.label_count,
                *l2,
                *learning_rate,
                *epochs,
                *seed,
            )?),
            HyperParams::DecisionTree {
                criterion,
                max_depth,
            } => ModelParams::DecisionTree(DecisionTreeModel::fit(
                &normalized,
                &data.labels,
                data.label_count,
                *criterion,
                *max_depth,
                None,
                None,
            )?),
            HyperParams::RandomForest {
                n_trees,
                criterion,
                max_depth,
                bootstrap,
                max_features,
                seed,
            } => ModelParams::RandomForest(RandomForestModel::fit(
                &normalized,
                &data.labels,
                data.label_count,
                *n_trees,
                *criterion,
                *max_depth,
                *bootstrap,
                *max_features,
                *seed,
            )?),
        };

        Ok(TrainedModel {
            schema_version: SCHEMA_VERSION,
            kind: params.kind(),
            label_count: data.label_count,
            feature_names: data.feature_names.clone(),
            hyperparameters: params.clone(),
            normalizer,
            parameters,
        })
    }

    /// Predict the label of one raw (unnormalized) feature row.
    pub fn predict_row(&self, row: &[f64]) -> usize {
        match &self.parameters {
            ModelParams::Baseline { km_index } => baseline_predict(row[*km_index]),
            ModelParams::NaiveBayes(nb) => nb.predict(&self.normalizer.transform_row(row)),
            ModelParams::LogisticRegression(lr) => {
                lr.predict(&self.normalizer.transform_row(row))
            }
            ModelParams::DecisionTree(tree) => tree.predict(&self.normalizer.transform_row(row)),
            ModelParams::RandomForest(forest) => {
                forest.predict(&self.normalizer.transform_row(row))
            }
        }
    }

    pub fn predict_all(&self, data: &Dataset) -> Vec<usize> {
        data.rows.iter().map(|r| self.predict_row(r)).collect()
    }
}
