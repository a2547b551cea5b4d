//! Syntactic complexity: lengths and ratios over sentences, clauses,
//! T-units and coordinate phrases.

use alloc::vec::Vec;

use crate::text::AnalyzedDocument;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SyntacticMetrics {
    /// Mean length of sentences, in word tokens.
    pub mls: f64,
    /// Mean length of clauses.
    pub mlc: f64,
    /// Dependent clauses per clause.
    pub dc_c: f64,
    /// Mean length of T-units.
    pub mlt: f64,
    /// T-units per sentence.
    pub tu_s: f64,
    /// Complex T-units per T-unit.
    pub ctu_tu: f64,
    /// Clauses per T-unit.
    pub c_tu: f64,
    /// Coordinate phrases per clause.
    pub cp_c: f64,
    /// Coordinate phrases per T-unit.
    pub cp_tu: f64,
    /// Clauses per sentence.
    pub c_s: f64,
    /// Length of the 90th-percentile sentence (nearest rank).
    pub nws90: f64,
    /// Percentage of sentences longer than 30 words.
    pub ps30: f64,
}

fn ratio(num: f64, denom: f64) -> f64 {
    if denom == 0.0 {
        0.0
    } else {
        num / denom
    }
}

/// Rank-`p` percentile by the nearest-rank method over an ascending-sorted
/// slice.
pub(crate) fn nearest_rank(sorted: &[f64], p: f64) -> f64 {
    if sorted.is_empty() {
        return 0.0;
    }
    let rank = crate::math::ceil(p * sorted.len() as f64).max(1.0) as usize;
    sorted[rank.min(sorted.len()) - 1]
}

/// Compute the syntactic metric block. Clauses and T-units must be filled;
/// an empty document yields all zeros.
pub fn syntactic_metrics(doc: &AnalyzedDocument) -> SyntacticMetrics {
    let words = doc.word_count() as f64;
    let sentences = doc.sentence_count() as f64;
    let clauses = doc.clause_count() as f64;
    let t_units = doc.t_unit_count() as f64;
    let dependent: usize = doc.sentences.iter().map(|s| s.dependent_clause_count()).sum();
    let complex: usize = doc.sentences.iter().map(|s| s.complex_t_unit_count()).sum();
    let coord = doc.coordinate_phrase_count as f64;

    let mut lengths: Vec<f64> = doc.sentences.iter().map(|s| s.word_count() as f64).collect();
    lengths.sort_by(f64::total_cmp);
    let over_30 = lengths.iter().filter(|&&l| l > 30.0).count() as f64;

    SyntacticMetrics {
        mls: ratio(words, sentences),
        mlc: ratio(words, clauses),
        dc_c: ratio(dependent as f64, clauses),
        mlt: ratio(words, t_units),
        tu_s: ratio(t_units, sentences),
        ctu_tu: ratio(complex as f64, t_units),
        c_tu: ratio(clauses, t_units),
        cp_c: ratio(coord, clauses),
        cp_tu: ratio(coord, t_units),
        c_s: ratio(clauses, sentences),
        nws90: nearest_rank(&lengths, 0.9),
        ps30: ratio(100.0 * over_30, sentences),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lexicon::Lexicon;
    use crate::text::{Analyzer, SegmentationRules};

    fn lexicon() -> Lexicon {
        Lexicon::parse(
            "il\n",
            "form\tlemma\tfreq_per_million\tpos\n\
             il\til\t20000\tpronoun\n\
             fait\tfaire\t900\tverb\n\
             beau\tbeau\t200\tadjective\n\
             les\tle\t30000\tdeterminer\n\
             nuages\tnuage\t40\tnoun\n\
             sont\têtre\t8000\tverb\n\
             partis\tpartir\t60\tverb\n",
        )
        .unwrap()
    }

    fn doc(text: &str) -> AnalyzedDocument {
        let rules = SegmentationRules::french();
        let lexicon = lexicon();
        Analyzer::new(&rules, &lexicon).analyze("t", text)
    }

    #[test]
    fn conjunctive_sentence_ratios() {
        let m = syntactic_metrics(&doc("Il fait beau et les nuages sont partis."));
        assert_eq!(m.tu_s, 2.0);
        assert_eq!(m.ctu_tu, 0.0);
        assert_eq!(m.dc_c, 0.0);
        assert_eq!(m.c_s, 2.0);
    }

    #[test]
    fn explicative_sentence_ratios() {
        let m = syntactic_metrics(&doc("Il fait beau parce que les nuages sont partis."));
        assert_eq!(m.tu_s, 1.0);
        assert_eq!(m.ctu_tu, 1.0);
        assert_eq!(m.dc_c, 0.5);
        assert_eq!(m.c_tu, 2.0);
    }

    #[test]
    fn empty_document_is_all_zero() {
        let m = syntactic_metrics(&doc(""));
        assert_eq!(m.mls, 0.0);
        assert_eq!(m.nws90, 0.0);
        assert_eq!(m.ps30, 0.0);
        assert_eq!(m.tu_s, 0.0);
    }

    #[test]
    fn nearest_rank_percentile() {
        let lengths: Vec<f64> = (1..=10).map(|i| i as f64).collect();
        assert_eq!(nearest_rank(&lengths, 0.9), 9.0);
        assert_eq!(nearest_rank(&lengths, 0.5), 5.0);
        assert_eq!(nearest_rank(&[7.0], 0.9), 7.0);
    }

    #[test]
    fn invariant_bounds_hold_on_a_mixed_document() {
        let m = syntactic_metrics(&doc(
            "Il fait beau. Il fait beau parce que les nuages sont partis. Les nuages sont partis et il fait beau.",
        ));
        assert!(m.dc_c <= 1.0);
        assert!(m.ctu_tu <= 1.0);
        assert!(m.tu_s >= 1.0);
    }
}
