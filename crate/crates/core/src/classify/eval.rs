//! Model evaluation: accuracy, ordinal RMSE and rank correlation.

use alloc::string::String;
use alloc::vec::Vec;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::math;

use super::model::TrainedModel;
use super::Dataset;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DocumentPrediction {
    pub id: String,
    pub true_label: usize,
    pub predicted_label: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EvaluationReport {
    /// Fraction of exactly correct predictions.
    pub accuracy: f64,
    /// Root-mean-square error over integer-coded levels: misclassifying a
    /// story as legalese costs more than missing by one level.
    pub rmse: f64,
    pub per_document: Vec<DocumentPrediction>,
    /// Spearman rank correlation between true and predicted labels; absent
    /// when either side has zero variance.
    pub spearman_to_expected: Option<f64>,
}

/// Evaluate a model on a labeled set.
pub fn evaluate(model: &TrainedModel, data: &Dataset) -> Result<EvaluationReport> {
    if data.is_empty() {
        return Err(Error::Validation(String::from(
            "cannot evaluate on an empty set",
        )));
    }
    let predictions = model.predict_all(data);
    let n = data.len() as f64;
    let correct = predictions
        .iter()
        .zip(&data.labels)
        .filter(|(p, l)| p == l)
        .count() as f64;
    let squared_error: f64 = predictions
        .iter()
        .zip(&data.labels)
        .map(|(&p, &l)| {
            let diff = p as f64 - l as f64;
            diff * diff
        })
        .sum();

    let truth: Vec<f64> = data.labels.iter().map(|&l| l as f64).collect();
    let predicted: Vec<f64> = predictions.iter().map(|&p| p as f64).collect();

    Ok(EvaluationReport {
        accuracy: correct / n,
        rmse: math::sqrt(squared_error / n),
        per_document: data
            .ids
            .iter()
            .zip(&data.labels)
            .zip(&predictions)
            .map(|((id, &true_label), &predicted_label)| DocumentPrediction {
                id: id.clone(),
                true_label,
                predicted_label,
            })
            .collect(),
        spearman_to_expected: spearman(&truth, &predicted),
    })
}

/// Spearman rank correlation with average ranks for ties. `None` when
/// either input has zero variance.
pub fn spearman(xs: &[f64], ys: &[f64]) -> Option<f64> {
    if xs.len() != ys.len() || xs.len() < 2 {
        return None;
    }
    let rx = average_ranks(xs);
    let ry = average_ranks(ys);
    super::blind::pearson(&rx, &ry)
}

fn average_ranks(values: &[f64]) -> Vec<f64> {
    let mut order: Vec<usize> = (0..values.len()).collect();
    order.sort_by(|&a, &b| values[a].total_cmp(&values[b]));
    let mut ranks = alloc::vec![0.0f64; values.len()];
    let mut i = 0;
    while i < order.len() {
        let mut j = i;
        while j + 1 < order.len() && values[order[j + 1]] == values[order[i]] {
            j += 1;
        }
        // 1-based ranks averaged across the tie group.
        let mean_rank = (i + j) as f64 / 2.0 + 1.0;
        for &index in &order[i..=j] {
            ranks[index] = mean_rank;
        }
        i = j + 1;
    }
    ranks
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classify::HyperParams;
    use alloc::vec;

    fn dataset(labels: &[usize], km: &[f64]) -> Dataset {
        let mut data = Dataset::new(vec![String::from("KM_score")], 8);
        for (i, (&label, &score)) in labels.iter().zip(km).enumerate() {
            data.push(alloc::format!("doc{i}"), vec![score], label)
                .unwrap();
        }
        data
    }

    fn baseline_on(data: &Dataset) -> TrainedModel {
        TrainedModel::fit(data, &HyperParams::Baseline).unwrap()
    }

    #[test]
    fn all_correct_is_perfect() {
        // Baseline maps 95→0 and 45→5.
        let data = dataset(&[0, 5], &[95.0, 45.0]);
        let report = evaluate(&baseline_on(&data), &data).unwrap();
        assert_eq!(report.accuracy, 1.0);
        assert_eq!(report.rmse, 0.0);
        assert_eq!(report.per_document.len(), 2);
    }

    #[test]
    fn one_off_by_one_in_ten() {
        let labels = [0, 0, 0, 0, 0, 0, 0, 0, 0, 1];
        let km = [95.0; 10]; // everything predicted 0
        let data = dataset(&labels, &km);
        let report = evaluate(&baseline_on(&data), &data).unwrap();
        assert_eq!(report.accuracy, 0.9);
        assert!((report.rmse - (0.1f64).sqrt()).abs() < 1e-12);
    }

    #[test]
    fn distant_misses_cost_more() {
        let labels = [0, 0, 0, 0, 0, 0, 0, 0, 0, 0];
        let mut km = [95.0; 10];
        km[9] = -5.0; // one story misread as legalese: off by 7
        let data = dataset(&labels, &km);
        let report = evaluate(&baseline_on(&data), &data).unwrap();
        assert_eq!(report.accuracy, 0.9);
        assert!((report.rmse - (49.0f64 / 10.0).sqrt()).abs() < 1e-12);
    }

    #[test]
    fn empty_set_is_rejected() {
        let data = Dataset::new(vec![String::from("KM_score")], 8);
        let model = baseline_on(&dataset(&[0], &[95.0]));
        assert!(evaluate(&model, &data).is_err());
    }

    #[test]
    fn rmse_zero_iff_accuracy_one() {
        let data = dataset(&[0, 1, 5], &[95.0, 85.0, 45.0]);
        let report = evaluate(&baseline_on(&data), &data).unwrap();
        assert_eq!(report.accuracy == 1.0, report.rmse == 0.0);
    }

    #[test]
    fn spearman_handles_ties_and_degenerate_inputs() {
        assert_eq!(spearman(&[1.0, 1.0, 1.0], &[1.0, 2.0, 3.0]), None);
        let rho = spearman(&[1.0, 2.0, 3.0, 4.0], &[1.0, 2.0, 3.0, 4.0]).unwrap();
        assert!((rho - 1.0).abs() < 1e-12);
        let inv = spearman(&[1.0, 2.0, 3.0, 4.0], &[4.0, 3.0, 2.0, 1.0]).unwrap();
        assert!((inv + 1.0).abs() < 1e-12);
        // Ties take average ranks.
        let tied = spearman(&[1.0, 2.0, 2.0, 3.0], &[1.0, 2.0, 2.0, 3.0]).unwrap();
        assert!((tied - 1.0).abs() < 1e-12);
    }
}
