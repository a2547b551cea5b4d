//! Parsing of raw French text into tokens, sentences, clauses and T-units.

mod clause;
mod rules;
mod sentence;
mod syllable;
mod tagger;
mod token;
mod tokenize;

pub use clause::{count_coordinate_phrases, segment_clauses, segment_t_units};
pub use rules::{SegmentationRules, DEFAULT_FRENCH_RULES};
pub use sentence::{split_sentences, AnalyzedDocument, Clause, Sentence, TUnit};
pub use syllable::count_syllables;
pub use tagger::tag_pos;
pub use token::{Pos, Tense, Token, TokenKind};

use alloc::string::String;

use crate::lexicon::Lexicon;

/// Bundles the read-only resources and runs the whole segmentation
/// pipeline on one document. Cheap to clone per thread: all state is
/// shared-immutable references.
#[derive(Clone, Copy)]
pub struct Analyzer<'a> {
    rules: &'a SegmentationRules,
    lexicon: &'a Lexicon,
}

impl<'a> Analyzer<'a> {
    pub fn new(rules: &'a SegmentationRules, lexicon: &'a Lexicon) -> Analyzer<'a> {
        Analyzer { rules, lexicon }
    }

    pub fn rules(&self) -> &SegmentationRules {
        self.rules
    }

    /// Tokenize, split, tag and segment a document.
    pub fn analyze(&self, source_id: &str, text: &str) -> AnalyzedDocument {
        let mut tokens = tokenize::tokenize(text);
        tag_pos(&mut tokens, self.lexicon, self.rules);
        let mut sentences = split_sentences(tokens, self.rules);

        let mut coordinate_phrases = 0usize;
        for sentence in &mut sentences {
            segment_clauses(sentence, self.rules);
            segment_t_units(sentence);
            coordinate_phrases += count_coordinate_phrases(sentence, self.rules);
        }

        AnalyzedDocument {
            sentences,
            coordinate_phrase_count: coordinate_phrases,
            source_id: String::from(source_id),
        }
    }
}
