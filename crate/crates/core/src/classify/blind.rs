//! Blind-test evaluation: documents from genres never seen in training,
//! grouped by expected complexity range.

use alloc::string::String;
use alloc::vec::Vec;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::math;

use super::model::TrainedModel;

/// One group of blind documents sharing an expected complexity range.
#[derive(Debug, Clone, PartialEq)]
pub struct BlindGroup {
    pub name: String,
    pub expected_min: f64,
    pub expected_max: f64,
    /// Raw feature rows of the group's documents.
    pub rows: Vec<Vec<f64>>,
}

impl BlindGroup {
    pub fn expected_midpoint(&self) -> f64 {
        (self.expected_min + self.expected_max) / 2.0
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BlindGroupOutcome {
    pub name: String,
    pub expected_min: f64,
    pub expected_max: f64,
    pub document_count: usize,
    pub mean_prediction: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BlindReport {
    pub groups: Vec<BlindGroupOutcome>,
    /// Pearson correlation between group-mean predictions and expected
    /// range midpoints; 0 with `degenerate` set when undefined.
    pub pearson_to_expected: f64,
    pub degenerate: bool,
}

/// Score each group by its mean predicted level and correlate against the
/// expected midpoints.
pub fn blind_test(model: &TrainedModel, groups: &[BlindGroup]) -> Result<BlindReport> {
    if groups.len() < 2 {
        return Err(Error::Validation(alloc::format!(
            "blind test needs at least 2 groups, got {}",
            groups.len()
        )));
    }
    let mut outcomes = Vec::with_capacity(groups.len());
    for group in groups {
        if group.rows.is_empty() {
            return Err(Error::Validation(alloc::format!(
                "blind group {:?} has no documents",
                group.name
            )));
        }
        let sum: f64 = group
            .rows
            .iter()
            .map(|row| model.predict_row(row) as f64)
            .sum();
        outcomes.push(BlindGroupOutcome {
            name: group.name.clone(),
            expected_min: group.expected_min,
            expected_max: group.expected_max,
            document_count: group.rows.len(),
            mean_prediction: sum / group.rows.len() as f64,
        });
    }

    let means: Vec<f64> = outcomes.iter().map(|o| o.mean_prediction).collect();
    let midpoints: Vec<f64> = groups.iter().map(|g| g.expected_midpoint()).collect();
    let correlation = pearson(&means, &midpoints);

    Ok(BlindReport {
        groups: outcomes,
        pearson_to_expected: correlation.unwrap_or(0.0),
        degenerate: correlation.is_none(),
    })
}

/// Pearson correlation coefficient; `None` when either side has zero
/// variance (or fewer than two points).
pub fn pearson(xs: &[f64], ys: &[f64]) -> Option<f64> {
    if xs.len() != ys.len() || xs.len() < 2 {
        return None;
    }
    let n = xs.len() as f64;
    let mean_x = xs.iter().sum::<f64>() / n;
    let mean_y = ys.iter().sum::<f64>() / n;
    let mut cov = 0.0;
    let mut var_x = 0.0;
    let mut var_y = 0.0;
    for (&x, &y) in xs.iter().zip(ys) {
        let dx = x - mean_x;
        let dy = y - mean_y;
        cov += dx * dy;
        var_x += dx * dx;
        var_y += dy * dy;
    }
    if var_x == 0.0 || var_y == 0.0 {
        return None;
    }
    Some(cov / math::sqrt(var_x * var_y))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classify::{Dataset, HyperParams};
    use alloc::vec;

    fn baseline_model() -> TrainedModel {
        let mut data = Dataset::new(vec![String::from("KM_score")], 8);
        data.push(String::from("a"), vec![95.0], 0).unwrap();
        data.push(String::from("b"), vec![45.0], 5).unwrap();
        TrainedModel::fit(&data, &HyperParams::Baseline).unwrap()
    }

    fn group(name: &str, range: (f64, f64), km_scores: &[f64]) -> BlindGroup {
        BlindGroup {
            name: String::from(name),
            expected_min: range.0,
            expected_max: range.1,
            rows: km_scores.iter().map(|&s| vec![s]).collect(),
        }
    }

    #[test]
    fn perfect_midpoint_predictions_correlate_fully() {
        // Baseline: 95→0, 65→3, 15→6.
        let groups = [
            group("easy", (0.0, 0.0), &[95.0, 95.0]),
            group("middle", (3.0, 3.0), &[65.0, 65.0]),
            group("hard", (6.0, 6.0), &[15.0, 15.0]),
        ];
        let report = blind_test(&baseline_model(), &groups).unwrap();
        assert!((report.pearson_to_expected - 1.0).abs() < 1e-12);
        assert!(!report.degenerate);
        assert_eq!(report.groups[0].mean_prediction, 0.0);
    }

    #[test]
    fn published_correlation_reproduces() {
        // Group-mean predictions vs expected midpoints for a six-group
        // blind set; the correlation rounds to 0.98.
        let means = [3.6, 3.2, 4.8, 5.4, 6.0, 6.0];
        let midpoints = [0.5, 0.5, 4.0, 4.5, 6.0, 7.0];
        let r = pearson(&means, &midpoints).unwrap();
        assert!((r - 0.98).abs() < 0.005, "r = {r}");
    }

    #[test]
    fn constant_predictions_flag_degenerate() {
        let groups = [
            group("a", (0.0, 1.0), &[95.0]),
            group("b", (6.0, 7.0), &[95.0]),
        ];
        let report = blind_test(&baseline_model(), &groups).unwrap();
        assert_eq!(report.pearson_to_expected, 0.0);
        assert!(report.degenerate);
    }

    #[test]
    fn validation_errors() {
        let model = baseline_model();
        assert!(blind_test(&model, &[group("solo", (0.0, 1.0), &[95.0])]).is_err());
        let empty = [
            group("a", (0.0, 1.0), &[95.0]),
            BlindGroup {
                name: String::from("empty"),
                expected_min: 2.0,
                expected_max: 3.0,
                rows: vec![],
            },
        ];
        assert!(blind_test(&model, &empty).is_err());
    }
}
