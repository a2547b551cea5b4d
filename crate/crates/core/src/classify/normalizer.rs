//! Min-max feature normalization fitted on training data.

use alloc::vec::Vec;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Per-feature (min, max) affine rescaling to [0, 1]. Values outside the
/// training range clamp, and constant features map to 0, so the output is
/// always within the unit interval — a prerequisite for the multinomial
/// naive Bayes over fractional counts.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Normalizer {
    mins: Vec<f64>,
    maxs: Vec<f64>,
}

impl Normalizer {
    pub fn fit(rows: &[Vec<f64>]) -> Result<Normalizer> {
        let first = rows
            .first()
            .ok_or_else(|| Error::Validation(alloc::string::String::from(
                "cannot fit a normalizer on an empty set",
            )))?;
        let mut mins = first.clone();
        let mut maxs = first.clone();
        for row in &rows[1..] {
            for (j, &v) in row.iter().enumerate() {
                if v < mins[j] {
                    mins[j] = v;
                }
                if v > maxs[j] {
                    maxs[j] = v;
                }
            }
        }
        Ok(Normalizer { mins, maxs })
    }

    pub fn transform_row(&self, row: &[f64]) -> Vec<f64> {
        row.iter()
            .enumerate()
            .map(|(j, &v)| {
                let span = self.maxs[j] - self.mins[j];
                if span == 0.0 {
                    0.0
                } else {
                    ((v - self.mins[j]) / span).clamp(0.0, 1.0)
                }
            })
            .collect()
    }

    pub fn transform(&self, rows: &[Vec<f64>]) -> Vec<Vec<f64>> {
        rows.iter().map(|r| self.transform_row(r)).collect()
    }

    pub fn mins(&self) -> &[f64] {
        &self.mins
    }

    pub fn maxs(&self) -> &[f64] {
        &self.maxs
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    #[test]
    fn maps_training_extremes_to_unit_interval() {
        let rows = vec![vec![2.0, -1.0], vec![4.0, 3.0], vec![3.0, 1.0]];
        let norm = Normalizer::fit(&rows).unwrap();
        assert_eq!(norm.transform_row(&[2.0, -1.0]), vec![0.0, 0.0]);
        assert_eq!(norm.transform_row(&[4.0, 3.0]), vec![1.0, 1.0]);
        assert_eq!(norm.transform_row(&[3.0, 1.0]), vec![0.5, 0.5]);
    }

    #[test]
    fn out_of_range_values_clamp() {
        let norm = Normalizer::fit(&[vec![0.0], vec![10.0]]).unwrap();
        assert_eq!(norm.transform_row(&[-5.0]), vec![0.0]);
        assert_eq!(norm.transform_row(&[25.0]), vec![1.0]);
    }

    #[test]
    fn constant_feature_maps_to_zero() {
        let norm = Normalizer::fit(&[vec![7.0], vec![7.0]]).unwrap();
        assert_eq!(norm.transform_row(&[7.0]), vec![0.0]);
        assert_eq!(norm.transform_row(&[100.0]), vec![0.0]);
    }

    #[test]
    fn empty_set_is_rejected() {
        assert!(Normalizer::fit(&[]).is_err());
    }
}
