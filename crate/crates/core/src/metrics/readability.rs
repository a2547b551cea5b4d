//! Readability formulas: Flesch-Kincaid reading ease, its French
//! adaptation by Kandel and Moles, and punctuation density.

use crate::text::{count_syllables, AnalyzedDocument};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ReadabilityMetrics {
    pub fk_ease: f64,
    pub km_score: f64,
    /// Commas, semicolons, colons and parentheses per sentence.
    pub bingui: f64,
}

/// Kandel-Moles reading ease: `207 - 1.015·MLS - 0.736·MNS`, where MNS is
/// syllables per 100 words. Higher is easier.
pub fn kandel_moles(mls: f64, mns: f64) -> f64 {
    207.0 - 1.015 * mls - 0.736 * mns
}

/// Flesch-Kincaid reading ease with its classical constants;
/// `syllables_per_word` is per word, not per 100 words.
pub fn flesch_kincaid_ease(mls: f64, syllables_per_word: f64) -> f64 {
    206.835 - 1.015 * mls - 84.6 * syllables_per_word
}

const BINGUI_MARKS: &[&str] = &[",", ";", ":", "(", ")"];

/// Compute the readability block. The empty document sits at each formula's
/// origin: KM 207, FK 206.835, BINGUI 0.
pub fn readability_metrics(doc: &AnalyzedDocument) -> ReadabilityMetrics {
    let sentences = doc.sentence_count() as f64;
    let words = doc.word_count() as f64;

    let mut lexical_words = 0usize;
    let mut syllables = 0usize;
    for token in doc.word_tokens().filter(|t| t.is_word()) {
        lexical_words += 1;
        syllables += count_syllables(&token.lower).unwrap_or(1);
    }

    let mls = if sentences == 0.0 { 0.0 } else { words / sentences };
    let syllables_per_word = if lexical_words == 0 {
        0.0
    } else {
        syllables as f64 / lexical_words as f64
    };
    let mns = 100.0 * syllables_per_word;

    let marks = doc
        .sentences
        .iter()
        .flat_map(|s| s.tokens.iter())
        .filter(|t| t.is_punctuation() && BINGUI_MARKS.contains(&t.surface.as_str()))
        .count() as f64;

    ReadabilityMetrics {
        fk_ease: flesch_kincaid_ease(mls, syllables_per_word),
        km_score: kandel_moles(mls, mns),
        bingui: if sentences == 0.0 { 0.0 } else { marks / sentences },
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lexicon::Lexicon;
    use crate::text::{Analyzer, SegmentationRules};

    fn doc(text: &str) -> AnalyzedDocument {
        let rules = SegmentationRules::french();
        let lexicon = Lexicon::parse(
            "le\n",
            "form\tlemma\tfreq_per_million\tpos\nle\tle\t38000\tdeterminer\n",
        )
        .unwrap();
        Analyzer::new(&rules, &lexicon).analyze("t", text)
    }

    #[test]
    fn formulas_at_origin() {
        assert_eq!(kandel_moles(0.0, 0.0), 207.0);
        assert_eq!(flesch_kincaid_ease(0.0, 0.0), 206.835);
    }

    #[test]
    fn kandel_moles_hand_evaluated() {
        let got = kandel_moles(20.0, 150.0);
        assert!((got - (207.0 - 20.3 - 110.4)).abs() < 1e-12);
    }

    #[test]
    fn km_strictly_decreases_in_each_argument() {
        let base = kandel_moles(10.0, 120.0);
        assert!(kandel_moles(11.0, 120.0) < base);
        assert!(kandel_moles(10.0, 121.0) < base);
    }

    #[test]
    fn bingui_counts_extended_marks_per_sentence() {
        let m = readability_metrics(&doc("Le chat, le chien, et le loup : tous."));
        assert_eq!(m.bingui, 3.0);
    }

    #[test]
    fn parentheses_count_individually() {
        let m = readability_metrics(&doc("Le chat (gris) dort."));
        assert_eq!(m.bingui, 2.0);
    }

    #[test]
    fn empty_document_sits_at_origin() {
        let m = readability_metrics(&doc(""));
        assert_eq!(m.km_score, 207.0);
        assert_eq!(m.fk_ease, 206.835);
        assert_eq!(m.bingui, 0.0);
    }
}
