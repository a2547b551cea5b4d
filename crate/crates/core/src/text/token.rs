//! Token model shared by the whole segmentation pipeline.

use alloc::string::String;
use core::fmt;

/// Surface category of a token.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TokenKind {
    /// Letter-bearing word, including elided ("l'") and hyphenated forms.
    Word,
    /// Digit sequence, possibly with internal decimal separators ("3,5").
    Number,
    /// A single punctuation mark or an ellipsis.
    Punctuation,
}

/// Coarse part-of-speech tag set used by the clause segmenter and the
/// register feature rules.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Pos {
    Noun,
    Verb,
    Adjective,
    Adverb,
    Pronoun,
    Preposition,
    Conjunction,
    Determiner,
    Other,
}

impl Pos {
    /// Parse the lowercase names used in lexicon and rule files.
    pub fn parse(s: &str) -> Option<Pos> {
        Some(match s {
            "noun" => Pos::Noun,
            "verb" => Pos::Verb,
            "adjective" => Pos::Adjective,
            "adverb" => Pos::Adverb,
            "pronoun" => Pos::Pronoun,
            "preposition" => Pos::Preposition,
            "conjunction" => Pos::Conjunction,
            "determiner" => Pos::Determiner,
            "other" => Pos::Other,
            _ => return None,
        })
    }

    pub fn name(self) -> &'static str {
        match self {
            Pos::Noun => "noun",
            Pos::Verb => "verb",
            Pos::Adjective => "adjective",
            Pos::Adverb => "adverb",
            Pos::Pronoun => "pronoun",
            Pos::Preposition => "preposition",
            Pos::Conjunction => "conjunction",
            Pos::Determiner => "determiner",
            Pos::Other => "other",
        }
    }

    /// Tie-breaking priority when two lexicon entries for the same form have
    /// equal frequency. Lower wins.
    pub(crate) fn ambiguity_rank(self) -> u8 {
        match self {
            Pos::Verb => 0,
            Pos::Noun => 1,
            Pos::Adjective => 2,
            Pos::Adverb => 3,
            _ => 4,
        }
    }
}

impl fmt::Display for Pos {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Semantic tense of a verb form after compound-tense resolution
/// ("sont partis" is a single past event: the participle carries `Past`,
/// the auxiliary keeps `Present` and is flagged as auxiliary).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Tense {
    Present,
    Past,
    Future,
    Conditional,
}

impl Tense {
    pub fn name(self) -> &'static str {
        match self {
            Tense::Present => "present",
            Tense::Past => "past",
            Tense::Future => "future",
            Tense::Conditional => "conditional",
        }
    }
}

/// One token of the input text, progressively enriched by the pipeline:
/// the tokenizer fills the surface fields, the tagger fills `lemma`, `pos`
/// and the verb flags.
#[derive(Debug, Clone, PartialEq)]
pub struct Token {
    /// Exact input slice.
    pub surface: String,
    /// Case-folded surface.
    pub lower: String,
    pub kind: TokenKind,
    /// Number of letters (diacritics count as one letter; hyphens,
    /// apostrophes and digits do not count).
    pub char_len: usize,
    /// Lexicon lemma when the form is known, otherwise `lower`.
    pub lemma: String,
    pub pos: Pos,
    /// Set for verbs only.
    pub tense: Option<Tense>,
    /// True for finite verb forms: those that can head a clause.
    /// Infinitives and participles are not finite.
    pub finite_verb: bool,
    /// True for avoir/être when they auxiliate a following participle.
    pub auxiliary: bool,
}

impl Token {
    pub fn is_word(&self) -> bool {
        self.kind == TokenKind::Word
    }

    /// Word in the counting sense: numbers count as words for length-based
    /// metrics even though they are excluded from type counts.
    pub fn counts_as_word(&self) -> bool {
        matches!(self.kind, TokenKind::Word | TokenKind::Number)
    }

    pub fn is_punctuation(&self) -> bool {
        self.kind == TokenKind::Punctuation
    }
}
