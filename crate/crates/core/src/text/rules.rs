//! Declarative segmentation rules: abbreviations, clause markers and
//! suffix-based part-of-speech fallbacks.
//!
//! The file format is line-oriented UTF-8 with `#` comments and five
//! sections:
//!
//! ```text
//! [ABBREVIATIONS]   one abbreviation per line, as written ("M.", "etc.")
//! [SUBORDINATORS]   one (possibly multi-word) subordinating marker per line
//! [RELATIVES]       relative pronouns
//! [COORDINATORS]    coordinating conjunctions
//! [SUFFIX_POS]      suffix<TAB>pos, first match wins
//! ```
//!
//! A French default is embedded in the crate; callers may load a different
//! file to adapt the segmenter.

use alloc::collections::BTreeSet;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use crate::error::{Error, Result};

use super::token::Pos;

/// Shipped default rule file for French.
pub const DEFAULT_FRENCH_RULES: &str = include_str!("../../resources/segmentation.rules");

/// Marker phrase: one or more lowercase word forms matched against
/// consecutive word tokens.
pub type MarkerPhrase = Vec<String>;

#[derive(Debug, Clone)]
pub struct SegmentationRules {
    /// Lowercased abbreviations without their trailing dot ("m", "etc").
    abbreviations: BTreeSet<String>,
    /// Sorted longest-first so greedy matching finds "parce que" before "que".
    subordinators: Vec<MarkerPhrase>,
    relatives: Vec<MarkerPhrase>,
    coordinators: BTreeSet<String>,
    suffix_pos: Vec<(String, Pos)>,
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Section {
    None,
    Abbreviations,
    Subordinators,
    Relatives,
    Coordinators,
    SuffixPos,
}

impl SegmentationRules {
    /// Parse a rule file. Unknown sections and malformed lines are rejected
    /// with their line number.
    pub fn parse(input: &str) -> Result<SegmentationRules> {
        let mut rules = SegmentationRules {
            abbreviations: BTreeSet::new(),
            subordinators: Vec::new(),
            relatives: Vec::new(),
            coordinators: BTreeSet::new(),
            suffix_pos: Vec::new(),
        };
        let mut section = Section::None;

        for (idx, raw) in input.lines().enumerate() {
            let line_no = idx + 1;
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            if let Some(name) = line.strip_prefix('[').and_then(|l| l.strip_suffix(']')) {
                section = match name {
                    "ABBREVIATIONS" => Section::Abbreviations,
                    "SUBORDINATORS" => Section::Subordinators,
                    "RELATIVES" => Section::Relatives,
                    "COORDINATORS" => Section::Coordinators,
                    "SUFFIX_POS" => Section::SuffixPos,
                    other => {
                        return Err(Error::Parse {
                            line: line_no,
                            message: alloc::format!("unknown section [{other}]"),
                        })
                    }
                };
                continue;
            }
            match section {
                Section::None => {
                    return Err(Error::Parse {
                        line: line_no,
                        message: "entry before any section header".to_string(),
                    })
                }
                Section::Abbreviations => {
                    let abbr = line.to_lowercase();
                    let abbr = abbr.strip_suffix('.').unwrap_or(&abbr);
                    rules.abbreviations.insert(abbr.to_string());
                }
                Section::Subordinators => rules.subordinators.push(parse_phrase(line)),
                Section::Relatives => rules.relatives.push(parse_phrase(line)),
                Section::Coordinators => {
                    rules.coordinators.insert(line.to_lowercase());
                }
                Section::SuffixPos => {
                    let (suffix, pos) = line.split_once('\t').ok_or_else(|| Error::Parse {
                        line: line_no,
                        message: "expected suffix<TAB>pos".to_string(),
                    })?;
                    let pos = Pos::parse(pos.trim()).ok_or_else(|| Error::Parse {
                        line: line_no,
                        message: alloc::format!("unknown pos {:?}", pos.trim()),
                    })?;
                    rules.suffix_pos.push((suffix.trim().to_lowercase(), pos));
                }
            }
        }

        rules.subordinators.sort_by(|a, b| b.len().cmp(&a.len()));
        rules.relatives.sort_by(|a, b| b.len().cmp(&a.len()));
        Ok(rules)
    }

    /// The embedded French defaults.
    pub fn french() -> SegmentationRules {
        SegmentationRules::parse(DEFAULT_FRENCH_RULES)
            .expect("embedded segmentation rules must parse")
    }

    /// True when `word` (lowercase, without its dot) abbreviates and so
    /// suppresses a sentence boundary at a following period.
    pub fn is_abbreviation(&self, word: &str) -> bool {
        self.abbreviations.contains(word)
    }

    pub fn is_coordinator(&self, lower: &str) -> bool {
        self.coordinators.contains(lower)
    }

    pub fn subordinators(&self) -> &[MarkerPhrase] {
        &self.subordinators
    }

    pub fn relatives(&self) -> &[MarkerPhrase] {
        &self.relatives
    }

    /// First suffix rule matching `lower`, if any.
    pub fn suffix_pos(&self, lower: &str) -> Option<Pos> {
        self.suffix_pos
            .iter()
            .find(|(suffix, _)| lower.ends_with(suffix.as_str()) && lower.len() > suffix.len())
            .map(|(_, pos)| *pos)
    }
}

impl Default for SegmentationRules {
    fn default() -> Self {
        SegmentationRules::french()
    }
}

fn parse_phrase(line: &str) -> MarkerPhrase {
    line.split_whitespace().map(|w| w.to_lowercase()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn default_rules_parse() {
        let rules = SegmentationRules::french();
        assert!(rules.is_abbreviation("m"));
        assert!(rules.is_abbreviation("etc"));
        assert!(rules.is_coordinator("et"));
        assert!(rules.subordinators().iter().any(|p| p == &["parce", "que"]));
        assert!(rules.relatives().iter().any(|p| p == &["dont"]));
        assert_eq!(rules.suffix_pos("rapidement"), Some(Pos::Adverb));
    }

    #[test]
    fn multiword_markers_sort_longest_first() {
        let rules = SegmentationRules::parse(
            "[SUBORDINATORS]\nque\nparce que\n[RELATIVES]\n[COORDINATORS]\n[ABBREVIATIONS]\n",
        )
        .unwrap();
        assert_eq!(rules.subordinators()[0], ["parce", "que"]);
    }

    #[test]
    fn suffix_requires_strict_extension() {
        let rules =
            SegmentationRules::parse("[SUFFIX_POS]\nment\tadverb\n").unwrap();
        assert_eq!(rules.suffix_pos("rapidement"), Some(Pos::Adverb));
        // "ment" itself (the bare suffix) is not matched.
        assert_eq!(rules.suffix_pos("ment"), None);
    }

    #[test]
    fn errors_carry_line_numbers() {
        let err = SegmentationRules::parse("[SUFFIX_POS]\nbroken line\n").unwrap_err();
        match err {
            Error::Parse { line, .. } => assert_eq!(line, 2),
            other => panic!("unexpected error {other:?}"),
        }
        let err = SegmentationRules::parse("stray\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 1, .. }));
    }
}
