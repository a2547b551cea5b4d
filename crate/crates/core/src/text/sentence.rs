//! Sentence-level structure: sentences, clauses and T-units.

use alloc::string::String;
use alloc::vec::Vec;
use core::ops::Range;

use super::rules::SegmentationRules;
use super::token::{Token, TokenKind};

/// A finite-verb-bearing unit within a sentence. Spans are contiguous,
/// non-overlapping and cover the whole sentence in order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Clause {
    /// Token index range within the owning sentence (all token kinds).
    pub token_span: Range<usize>,
    /// True when opened by a subordinator or relative marker.
    pub dependent: bool,
    /// Index of the first finite verb of the clause, if any.
    pub finite_verb_index: Option<usize>,
}

impl Clause {
    pub fn word_len(&self, tokens: &[Token]) -> usize {
        tokens[self.token_span.clone()]
            .iter()
            .filter(|t| t.counts_as_word())
            .count()
    }
}

/// Minimal terminable unit: an independent clause plus its subordinate
/// clauses.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TUnit {
    /// Indices into the sentence's clause list, in order.
    pub clause_indices: Vec<usize>,
    /// True when the T-unit contains more than one clause.
    pub complex: bool,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Sentence {
    pub tokens: Vec<Token>,
    /// Filled by the clause segmenter; empty until then.
    pub clauses: Vec<Clause>,
    /// Filled by the T-unit segmenter; empty until then.
    pub t_units: Vec<TUnit>,
}

impl Sentence {
    pub fn new(tokens: Vec<Token>) -> Sentence {
        Sentence {
            tokens,
            clauses: Vec::new(),
            t_units: Vec::new(),
        }
    }

    pub fn word_count(&self) -> usize {
        self.tokens.iter().filter(|t| t.counts_as_word()).count()
    }

    pub fn word_tokens(&self) -> impl Iterator<Item = &Token> {
        self.tokens.iter().filter(|t| t.counts_as_word())
    }

    pub fn dependent_clause_count(&self) -> usize {
        self.clauses.iter().filter(|c| c.dependent).count()
    }

    pub fn complex_t_unit_count(&self) -> usize {
        self.t_units.iter().filter(|t| t.complex).count()
    }
}

/// A fully analysed document: the substrate every metric consumes.
///
/// All counts are derived from `sentences` so the structure can never go
/// out of sync with itself.
#[derive(Debug, Clone, PartialEq)]
pub struct AnalyzedDocument {
    pub sentences: Vec<Sentence>,
    /// Coordinating conjunctions joining non-clausal constituents.
    pub coordinate_phrase_count: usize,
    pub source_id: String,
}

impl AnalyzedDocument {
    /// Word tokens of all sentences, in reading order. Numbers count as
    /// words for length-based metrics.
    pub fn word_tokens(&self) -> impl Iterator<Item = &Token> {
        self.sentences.iter().flat_map(|s| s.word_tokens())
    }

    pub fn word_count(&self) -> usize {
        self.sentences.iter().map(|s| s.word_count()).sum()
    }

    pub fn sentence_count(&self) -> usize {
        self.sentences.len()
    }

    pub fn clause_count(&self) -> usize {
        self.sentences.iter().map(|s| s.clauses.len()).sum()
    }

    pub fn t_unit_count(&self) -> usize {
        self.sentences.iter().map(|s| s.t_units.len()).sum()
    }
}

/// Group a token stream into sentences.
///
/// A sentence ends at `.`, `!`, `?` or `…` unless the period directly
/// follows an abbreviation from the rules file. Consecutive terminators and
/// closing quotes stay attached to the sentence they end. A trailing
/// fragment without a terminator forms a final sentence.
pub fn split_sentences(tokens: Vec<Token>, rules: &SegmentationRules) -> Vec<Sentence> {
    let mut sentences = Vec::new();
    let mut current: Vec<Token> = Vec::new();
    let mut closing = false;

    for token in tokens {
        let is_terminator =
            token.kind == TokenKind::Punctuation && matches!(token.surface.as_str(), "." | "!" | "?" | "…");
        let after_abbreviation = token.surface == "."
            && current.last().is_some_and(|t| {
                t.is_word()
                    && (rules.is_abbreviation(&t.lower)
                        || (t.char_len == 1 && t.surface.chars().all(|c| c.is_uppercase())))
            });

        if closing {
            // Absorb terminator runs and closing quotes/brackets, then cut.
            let attaches = token.kind == TokenKind::Punctuation
                && matches!(token.surface.as_str(), "." | "!" | "?" | "…" | "»" | "\"" | ")" | "'");
            if attaches {
                current.push(token);
                continue;
            }
            sentences.push(Sentence::new(core::mem::take(&mut current)));
            closing = false;
            current.push(token);
            continue;
        }

        current.push(token);
        if is_terminator && !after_abbreviation {
            closing = true;
        }
    }
    if !current.is_empty() {
        sentences.push(Sentence::new(current));
    }
    sentences
}
