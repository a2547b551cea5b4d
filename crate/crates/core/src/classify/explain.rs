//! Model explanation: which metrics drive which complexity level.

use alloc::string::String;
use alloc::vec::Vec;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

use super::baseline::BASELINE_BANDS;
use super::model::{ModelParams, TrainedModel};

/// A coefficient counts as a strong signal when its magnitude exceeds this.
pub const STRONG_COEFFICIENT_THRESHOLD: f64 = 0.1;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FeatureWeight {
    pub feature: String,
    pub value: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BaselineBand {
    pub min_score: f64,
    pub label: usize,
}

/// Per-class coefficients of one one-vs-rest scorer, with features above
/// the strong threshold called out.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ClassCoefficients {
    pub label: usize,
    pub coefficients: Vec<FeatureWeight>,
    pub strong_positive: Vec<String>,
    pub strong_negative: Vec<String>,
}

/// Per-class conditional log-probabilities with their top/bottom deciles
/// flagged.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ClassLogProbs {
    pub label: usize,
    pub log_probs: Vec<FeatureWeight>,
    pub high: Vec<String>,
    pub low: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "explanation", rename_all = "snake_case")]
pub enum Explanation {
    /// The baseline has no learned parameters, only its threshold table.
    Thresholds { bands: Vec<BaselineBand> },
    /// Logistic regression coefficients per class.
    Coefficients { classes: Vec<ClassCoefficients> },
    /// Naive Bayes conditional log-probabilities per class.
    ConditionalLogProbs { classes: Vec<ClassLogProbs> },
    /// Impurity-decrease importances (decision tree / random forest),
    /// summing to 1.
    Importances { features: Vec<FeatureWeight> },
}

/// Explain a trained model in terms of its feature schema.
pub fn explain(model: &TrainedModel) -> Result<Explanation> {
    let names = &model.feature_names;
    match &model.parameters {
        ModelParams::Baseline { .. } => Ok(Explanation::Thresholds {
            bands: BASELINE_BANDS
                .iter()
                .map(|&(min_score, label)| BaselineBand { min_score, label })
                .chain([BaselineBand {
                    min_score: f64::NEG_INFINITY,
                    label: 7,
                }])
                .collect(),
        }),
        ModelParams::LogisticRegression(lr) => {
            let classes = lr
                .weights
                .iter()
                .enumerate()
                .map(|(label, weights)| {
                    let coefficients = zip_names(names, weights)?;
                    let strong_positive = coefficients
                        .iter()
                        .filter(|c| c.value > STRONG_COEFFICIENT_THRESHOLD)
                        .map(|c| c.feature.clone())
                        .collect();
                    let strong_negative = coefficients
                        .iter()
                        .filter(|c| c.value < -STRONG_COEFFICIENT_THRESHOLD)
                        .map(|c| c.feature.clone())
                        .collect();
                    Ok(ClassCoefficients {
                        label,
                        coefficients,
                        strong_positive,
                        strong_negative,
                    })
                })
                .collect::<Result<Vec<ClassCoefficients>>>()?;
            Ok(Explanation::Coefficients { classes })
        }
        ModelParams::NaiveBayes(nb) => {
            let classes = nb
                .feature_log_prob
                .iter()
                .enumerate()
                .map(|(label, log_probs)| {
                    let log_probs = zip_names(names, log_probs)?;
                    let (high, low) = decile_flags(&log_probs);
                    Ok(ClassLogProbs {
                        label,
                        log_probs,
                        high,
                        low,
                    })
                })
                .collect::<Result<Vec<ClassLogProbs>>>()?;
            Ok(Explanation::ConditionalLogProbs { classes })
        }
        ModelParams::DecisionTree(tree) => Ok(Explanation::Importances {
            features: zip_names(names, &tree.importances)?,
        }),
        ModelParams::RandomForest(forest) => Ok(Explanation::Importances {
            features: zip_names(names, &forest.importances())?,
        }),
    }
}

fn zip_names(names: &[String], values: &[f64]) -> Result<Vec<FeatureWeight>> {
    if names.len() != values.len() {
        return Err(Error::Validation(alloc::format!(
            "{} feature names for {} values",
            names.len(),
            values.len()
        )));
    }
    Ok(names
        .iter()
        .zip(values)
        .map(|(n, &v)| FeatureWeight {
            feature: n.clone(),
            value: v,
        })
        .collect())
}

/// Features in the top and bottom deciles by value.
fn decile_flags(weights: &[FeatureWeight]) -> (Vec<String>, Vec<String>) {
    let mut order: Vec<usize> = (0..weights.len()).collect();
    order.sort_by(|&a, &b| weights[a].value.total_cmp(&weights[b].value));
    let decile = (weights.len() / 10).max(1);
    let low = order[..decile.min(order.len())]
        .iter()
        .map(|&i| weights[i].feature.clone())
        .collect();
    let high = order[order.len().saturating_sub(decile)..]
        .iter()
        .map(|&i| weights[i].feature.clone())
        .collect();
    (high, low)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classify::{Criterion, Dataset, HyperParams, LogisticRegressionModel, Normalizer};
    use crate::SCHEMA_VERSION;
    use alloc::vec;

    fn names(n: usize) -> Vec<String> {
        (0..n).map(|i| alloc::format!("f{i}")).collect()
    }

    fn wrap(parameters: ModelParams, n_features: usize) -> TrainedModel {
        TrainedModel {
            schema_version: SCHEMA_VERSION,
            kind: match parameters {
                ModelParams::Baseline { .. } => crate::classify::ModelKind::Baseline,
                ModelParams::DecisionTree(_) => crate::classify::ModelKind::DecisionTree,
                ModelParams::RandomForest(_) => crate::classify::ModelKind::RandomForest,
                ModelParams::LogisticRegression(_) => {
                    crate::classify::ModelKind::LogisticRegression
                }
                ModelParams::NaiveBayes(_) => crate::classify::ModelKind::NaiveBayes,
            },
            label_count: 8,
            feature_names: names(n_features),
            hyperparameters: HyperParams::Baseline,
            normalizer: Normalizer::fit(&[vec![0.0; n_features], vec![1.0; n_features]]).unwrap(),
            parameters,
        }
    }

    #[test]
    fn one_strong_positive_coefficient_is_flagged() {
        let lr = LogisticRegressionModel {
            weights: vec![vec![0.5, 0.01, 0.01]],
            biases: vec![0.0],
        };
        let explanation = explain(&wrap(ModelParams::LogisticRegression(lr), 3)).unwrap();
        match explanation {
            Explanation::Coefficients { classes } => {
                assert_eq!(classes[0].strong_positive, vec![String::from("f0")]);
                assert!(classes[0].strong_negative.is_empty());
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn threshold_at_exactly_point_one_is_not_strong() {
        let lr = LogisticRegressionModel {
            weights: vec![vec![0.1, -0.1]],
            biases: vec![0.0],
        };
        let explanation = explain(&wrap(ModelParams::LogisticRegression(lr), 2)).unwrap();
        match explanation {
            Explanation::Coefficients { classes } => {
                assert!(classes[0].strong_positive.is_empty());
                assert!(classes[0].strong_negative.is_empty());
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn baseline_explanation_is_the_band_table() {
        let mut data = Dataset::new(vec![String::from("KM_score")], 8);
        data.push(String::from("a"), vec![95.0], 0).unwrap();
        let model = TrainedModel::fit(&data, &HyperParams::Baseline).unwrap();
        match explain(&model).unwrap() {
            Explanation::Thresholds { bands } => {
                assert_eq!(bands.len(), 8);
                assert_eq!(bands[0].label, 0);
                assert_eq!(bands[7].label, 7);
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn tree_importances_expose_used_features() {
        let mut data = Dataset::new(names(4), 2);
        for i in 0..12 {
            let label = i % 2;
            data.push(
                alloc::format!("d{i}"),
                vec![label as f64, (i % 3) as f64, 0.0, (i % 5) as f64],
                label,
            )
            .unwrap();
        }
        let model = TrainedModel::fit(
            &data,
            &HyperParams::DecisionTree {
                criterion: Criterion::Gini,
                max_depth: None,
            },
        )
        .unwrap();
        match explain(&model).unwrap() {
            Explanation::Importances { features } => {
                let sum: f64 = features.iter().map(|f| f.value).sum();
                assert!((sum - 1.0).abs() < 1e-9);
                let nonzero = features.iter().filter(|f| f.value > 0.0).count();
                assert_eq!(nonzero, 1); // only f0 carries signal
                assert!(features[0].value > 0.9);
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn nb_deciles_flag_extremes() {
        let mut data = Dataset::new(names(10), 2);
        for i in 0..10 {
            let label = i % 2;
            let mut row = vec![0.1; 10];
            row[0] = if label == 0 { 1.0 } else { 0.0 };
            row[9] = if label == 1 { 1.0 } else { 0.0 };
            data.push(alloc::format!("d{i}"), row, label).unwrap();
        }
        let model = TrainedModel::fit(&data, &HyperParams::NaiveBayes { alpha: 0.1 }).unwrap();
        match explain(&model).unwrap() {
            Explanation::ConditionalLogProbs { classes } => {
                assert_eq!(classes.len(), 2);
                assert_eq!(classes[0].high, vec![String::from("f0")]);
                assert_eq!(classes[1].high, vec![String::from("f9")]);
            }
            other => panic!("unexpected {other:?}"),
        }
    }
}
