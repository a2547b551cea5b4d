//! Vocabulary complexity: rare-word percentage, lemma frequency and word
//! length.

use alloc::vec::Vec;

use crate::lexicon::Lexicon;
use crate::text::AnalyzedDocument;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct VocabularyMetrics {
    /// Percentage of word tokens absent from the simple-word list.
    pub pa: f64,
    /// Mean smoothed log-probability of the document's lemmas.
    pub unigram: f64,
    /// Mean letters per word token.
    pub nlm: f64,
    /// Mean characters per word token, hyphens and apostrophes included.
    pub word_length: f64,
}

/// Compute PA, Unigram, NLM and wordLength. An empty document scores 0
/// everywhere.
///
/// PA and Unigram look at letter-bearing words only; NLM and wordLength
/// average over numbers as well, since numbers count as words for
/// length-based metrics.
pub fn vocabulary_metrics(doc: &AnalyzedDocument, lexicon: &Lexicon) -> VocabularyMetrics {
    let mut lexical_words = 0usize;
    let mut absent = 0usize;
    let mut lemmas: Vec<&str> = Vec::new();
    let mut counting_words = 0usize;
    let mut letters = 0usize;
    let mut chars = 0usize;

    for token in doc.word_tokens() {
        counting_words += 1;
        letters += token.char_len;
        chars += token.surface.chars().count();
        if token.is_word() {
            lexical_words += 1;
            if !lexicon.is_simple_word(&token.lower) {
                absent += 1;
            }
            lemmas.push(token.lemma.as_str());
        }
    }

    let pa = if lexical_words == 0 {
        0.0
    } else {
        100.0 * absent as f64 / lexical_words as f64
    };
    let unigram = lexicon.unigram_logprob(&lemmas).unwrap_or(0.0);
    let (nlm, word_length) = if counting_words == 0 {
        (0.0, 0.0)
    } else {
        (
            letters as f64 / counting_words as f64,
            chars as f64 / counting_words as f64,
        )
    };

    VocabularyMetrics {
        pa,
        unigram,
        nlm,
        word_length,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::text::{Analyzer, SegmentationRules};

    fn lexicon() -> Lexicon {
        Lexicon::parse(
            "le\nchat\nmange\n",
            "form\tlemma\tfreq_per_million\tpos\n\
             le\tle\t38000\tdeterminer\n\
             chat\tchat\t120\tnoun\n\
             mange\tmanger\t80\tverb\n",
        )
        .unwrap()
    }

    fn doc(text: &str) -> AnalyzedDocument {
        let rules = SegmentationRules::french();
        let lexicon = lexicon();
        Analyzer::new(&rules, &lexicon).analyze("t", text)
    }

    #[test]
    fn all_simple_words_give_pa_zero() {
        let metrics = vocabulary_metrics(&doc("le chat mange"), &lexicon());
        assert_eq!(metrics.pa, 0.0);
    }

    #[test]
    fn one_absent_word_of_four_is_25_percent() {
        let metrics = vocabulary_metrics(&doc("le chat mange lentement"), &lexicon());
        assert_eq!(metrics.pa, 25.0);
    }

    #[test]
    fn nlm_is_mean_letter_count() {
        let metrics = vocabulary_metrics(&doc("le chat"), &lexicon());
        assert_eq!(metrics.nlm, 3.0);
        assert_eq!(metrics.word_length, 3.0);
    }

    #[test]
    fn word_length_counts_apostrophes_nlm_does_not() {
        let metrics = vocabulary_metrics(&doc("l'arbre-mort"), &lexicon());
        // tokens: "l'" (1 letter, 2 chars) and "arbre-mort" (9 letters, 10 chars)
        assert_eq!(metrics.nlm, 5.0);
        assert_eq!(metrics.word_length, 6.0);
    }

    #[test]
    fn numbers_dilute_length_but_not_pa() {
        let with_number = vocabulary_metrics(&doc("le chat 12"), &lexicon());
        assert_eq!(with_number.pa, 0.0); // number not counted against the list
        assert_eq!(with_number.nlm, 2.0); // (2 + 4 + 0) / 3
    }

    #[test]
    fn empty_document_is_all_zero() {
        let metrics = vocabulary_metrics(&doc(""), &lexicon());
        assert_eq!(metrics.pa, 0.0);
        assert_eq!(metrics.unigram, 0.0);
        assert_eq!(metrics.nlm, 0.0);
        assert_eq!(metrics.word_length, 0.0);
    }

    #[test]
    fn lemmas_feed_the_unigram_model() {
        let metrics = vocabulary_metrics(&doc("le chat"), &lexicon());
        let expected = lexicon().unigram_logprob(&["le", "chat"]).unwrap();
        assert_eq!(metrics.unigram, expected);
    }
}
