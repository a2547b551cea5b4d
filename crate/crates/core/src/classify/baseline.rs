//! Readability-threshold baseline classifier.
//!
//! The classic reading-ease bands cover seven styles for scores in
//! [0, 100]; with eight complexity levels the bands map onto labels 0-6 and
//! the unbounded negative tail (long legalese sentences push the formula
//! far below zero) maps to level 7. Scores above 100 clamp to 100.

/// `(lower_bound, label)`: a score `s` gets the label of the first band
/// with `s >= lower_bound`.
pub const BASELINE_BANDS: [(f64, usize); 7] = [
    (90.0, 0), // very easy
    (80.0, 1), // easy
    (70.0, 2), // fairly easy
    (60.0, 3), // standard
    (50.0, 4), // fairly difficult
    (30.0, 5), // difficult
    (0.0, 6),  // very difficult
];

/// Map a Kandel-Moles score to a complexity level 0..=7.
pub fn baseline_predict(km_score: f64) -> usize {
    let score = km_score.min(100.0);
    for (lower, label) in BASELINE_BANDS {
        if score >= lower {
            return label;
        }
    }
    7
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn band_examples() {
        assert_eq!(baseline_predict(95.0), 0);
        assert_eq!(baseline_predict(45.0), 5);
        assert_eq!(baseline_predict(-12.0), 7);
    }

    #[test]
    fn boundaries_are_inclusive_below() {
        assert_eq!(baseline_predict(90.0), 0);
        assert_eq!(baseline_predict(89.999), 1);
        assert_eq!(baseline_predict(80.0), 1);
        assert_eq!(baseline_predict(30.0), 5);
        assert_eq!(baseline_predict(29.999), 6);
        assert_eq!(baseline_predict(0.0), 6);
        assert_eq!(baseline_predict(-0.001), 7);
    }

    #[test]
    fn scores_above_100_clamp() {
        assert_eq!(baseline_predict(207.0), 0);
    }
}
