//! Rule-based register features over tagged token windows.
//!
//! Each of the 40 features is a declarative pattern matched within
//! sentences and normalized by the document word count. The rule file
//! format is one rule per line, `name<TAB>expression`, where an expression
//! is either `NONE` (a feature with no French realization, legitimately 0)
//! or ` || `-separated alternative sequences of space-separated elements:
//!
//! ```text
//! element   := '^' | '$' | '?'N | '?*' | '!'pattern | pattern
//! pattern   := predicate (',' predicate)*
//! predicate := field op value ('|' value)*
//! field     := surface | lower | lemma | pos | tense | kind | aux | finite
//! op        := '=' | '!=' | '^=' | '$=' | '!$='
//! ```
//!
//! `^`/`$` anchor to the sentence edges, `?N` skips up to N tokens, `?*`
//! any number, and `!pattern` is a non-consuming negative lookahead (it
//! also holds at the end of the sentence). A rule counts the distinct start
//! positions where any alternative matches.

use alloc::string::{String, ToString};
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::text::{AnalyzedDocument, Token};

/// Shipped default rule file approximating the classic register feature
/// set for French.
pub const DEFAULT_FRENCH_BIBER_RULES: &str = include_str!("../../resources/biber.rules");

/// The 40 feature names, in schema order (the tail of
/// [`super::FEATURE_NAMES`]).
pub const BIBER_FEATURE_NAMES: [&str; 40] = [
    "pastVerbs",
    "presVerbs",
    "placeAdverbials",
    "timeAdverbials",
    "1persProns",
    "2persProns",
    "3persProns",
    "impersProns",
    "demonstrProns",
    "indefProns",
    "doAsProVerb",
    "whQuestions",
    "nominalizations",
    "Nouns",
    "beAsMain",
    "WHclauses",
    "piedPiping",
    "sncRelatives",
    "causative",
    "conditional",
    "otherSubord",
    "preposn",
    "attrAdj",
    "ADV",
    "conjuncts",
    "downtoners",
    "amplifiers",
    "generalEmphatics",
    "publicVerbs",
    "privateVerbs",
    "suasiveVerbs",
    "seemappear",
    "possibModals",
    "necessModals",
    "predicModals",
    "contractions",
    "thatDeletion",
    "strandedPrep",
    "syntNegn",
    "analNegn",
];

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Field {
    Surface,
    Lower,
    Lemma,
    Pos,
    Tense,
    Kind,
    Aux,
    Finite,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Op {
    Eq,
    Ne,
    Prefix,
    Suffix,
    NotSuffix,
}

#[derive(Debug, Clone)]
struct Predicate {
    field: Field,
    op: Op,
    values: Vec<String>,
}

#[derive(Debug, Clone)]
struct Pattern {
    predicates: Vec<Predicate>,
}

#[derive(Debug, Clone)]
enum Element {
    Start,
    End,
    Gap(Option<usize>),
    Not(Pattern),
    Tok(Pattern),
}

/// One named feature rule: a total matcher (zero matches allowed).
#[derive(Debug, Clone)]
pub struct BiberRule {
    pub name: String,
    alternatives: Vec<Vec<Element>>,
}

/// The validated, complete rule set: exactly one rule per feature name, in
/// schema order.
#[derive(Debug, Clone)]
pub struct BiberRuleSet {
    rules: Vec<BiberRule>,
}

impl BiberRuleSet {
    /// Parse and validate a rule file: every feature name must appear
    /// exactly once and no unknown names are allowed.
    pub fn parse(input: &str) -> Result<BiberRuleSet> {
        let mut parsed: Vec<Option<BiberRule>> = (0..BIBER_FEATURE_NAMES.len()).map(|_| None).collect();
        for (idx, raw) in input.lines().enumerate() {
            let line_no = idx + 1;
            let line = raw.trim_end();
            if line.trim().is_empty() || line.trim_start().starts_with('#') {
                continue;
            }
            let (name, expression) = line.split_once('\t').ok_or_else(|| Error::Parse {
                line: line_no,
                message: "expected name<TAB>expression".to_string(),
            })?;
            let name = name.trim();
            let slot = BIBER_FEATURE_NAMES
                .iter()
                .position(|n| *n == name)
                .ok_or_else(|| Error::Parse {
                    line: line_no,
                    message: alloc::format!("unknown feature name {name:?}"),
                })?;
            if parsed[slot].is_some() {
                return Err(Error::Parse {
                    line: line_no,
                    message: alloc::format!("duplicate rule for {name:?}"),
                });
            }
            parsed[slot] = Some(BiberRule {
                name: name.to_string(),
                alternatives: parse_expression(expression.trim(), line_no)?,
            });
        }
        let mut rules = Vec::with_capacity(BIBER_FEATURE_NAMES.len());
        for (slot, rule) in parsed.into_iter().enumerate() {
            match rule {
                Some(rule) => rules.push(rule),
                None => {
                    return Err(Error::Config(alloc::format!(
                        "missing rule for feature {:?}",
                        BIBER_FEATURE_NAMES[slot]
                    )))
                }
            }
        }
        Ok(BiberRuleSet { rules })
    }

    /// The embedded French defaults.
    pub fn french() -> BiberRuleSet {
        BiberRuleSet::parse(DEFAULT_FRENCH_BIBER_RULES).expect("embedded rules must parse")
    }

    pub fn rules(&self) -> &[BiberRule] {
        &self.rules
    }
}

impl Default for BiberRuleSet {
    fn default() -> Self {
        BiberRuleSet::french()
    }
}

impl BiberRule {
    /// Number of start positions in `tokens` where the rule matches.
    pub fn count_matches(&self, tokens: &[Token]) -> usize {
        (0..tokens.len())
            .filter(|&start| {
                self.alternatives
                    .iter()
                    .any(|seq| match_sequence(seq, tokens, start))
            })
            .count()
    }
}

/// Evaluate all 40 features over a document: match count over word count,
/// clamped to [0, 1]. An empty document scores 0 everywhere.
pub fn biber_features(doc: &AnalyzedDocument, rules: &BiberRuleSet) -> Vec<f64> {
    let words = doc.word_count();
    if words == 0 {
        return alloc::vec![0.0; rules.rules.len()];
    }
    rules
        .rules
        .iter()
        .map(|rule| {
            let count: usize = doc
                .sentences
                .iter()
                .map(|s| rule.count_matches(&s.tokens))
                .sum();
            (count as f64 / words as f64).min(1.0)
        })
        .collect()
}

fn match_sequence(elements: &[Element], tokens: &[Token], pos: usize) -> bool {
    match elements.first() {
        None => true,
        Some(Element::Start) => pos == 0 && match_sequence(&elements[1..], tokens, pos),
        Some(Element::End) => pos == tokens.len() && match_sequence(&elements[1..], tokens, pos),
        Some(Element::Gap(max)) => {
            let limit = match max {
                Some(n) => (pos + n).min(tokens.len()),
                None => tokens.len(),
            };
            (pos..=limit).any(|next| match_sequence(&elements[1..], tokens, next))
        }
        Some(Element::Not(pattern)) => {
            let blocked = tokens.get(pos).is_some_and(|t| pattern.matches(t));
            !blocked && match_sequence(&elements[1..], tokens, pos)
        }
        Some(Element::Tok(pattern)) => {
            tokens.get(pos).is_some_and(|t| pattern.matches(t))
                && match_sequence(&elements[1..], tokens, pos + 1)
        }
    }
}

impl Pattern {
    fn matches(&self, token: &Token) -> bool {
        self.predicates.iter().all(|p| p.matches(token))
    }
}

impl Predicate {
    fn matches(&self, token: &Token) -> bool {
        let owned;
        let actual: &str = match self.field {
            Field::Surface => {
                owned = normalize(&token.surface);
                &owned
            }
            Field::Lower => {
                owned = normalize(&token.lower);
                &owned
            }
            Field::Lemma => {
                owned = normalize(&token.lemma);
                &owned
            }
            Field::Pos => token.pos.name(),
            Field::Tense => token.tense.map(|t| t.name()).unwrap_or("none"),
            Field::Kind => match token.kind {
                crate::text::TokenKind::Word => "word",
                crate::text::TokenKind::Number => "number",
                crate::text::TokenKind::Punctuation => "punctuation",
            },
            Field::Aux => {
                if token.auxiliary {
                    "true"
                } else {
                    "false"
                }
            }
            Field::Finite => {
                if token.finite_verb {
                    "true"
                } else {
                    "false"
                }
            }
        };
        match self.op {
            Op::Eq => self.values.iter().any(|v| v == actual),
            Op::Ne => !self.values.iter().any(|v| v == actual),
            Op::Prefix => self.values.iter().any(|v| actual.starts_with(v.as_str())),
            Op::Suffix => self.values.iter().any(|v| actual.ends_with(v.as_str())),
            Op::NotSuffix => !self.values.iter().any(|v| actual.ends_with(v.as_str())),
        }
    }
}

fn normalize(s: &str) -> String {
    s.replace('\u{2019}', "'")
}

fn parse_expression(expression: &str, line_no: usize) -> Result<Vec<Vec<Element>>> {
    if expression == "NONE" {
        return Ok(Vec::new());
    }
    expression
        .split(" || ")
        .map(|seq| parse_sequence(seq.trim(), line_no))
        .collect()
}

fn parse_sequence(sequence: &str, line_no: usize) -> Result<Vec<Element>> {
    if sequence.is_empty() {
        return Err(Error::Parse {
            line: line_no,
            message: "empty alternative".to_string(),
        });
    }
    sequence
        .split_whitespace()
        .map(|element| parse_element(element, line_no))
        .collect()
}

fn parse_element(element: &str, line_no: usize) -> Result<Element> {
    match element {
        "^" => return Ok(Element::Start),
        "$" => return Ok(Element::End),
        "?*" => return Ok(Element::Gap(None)),
        _ => {}
    }
    if let Some(n) = element.strip_prefix('?') {
        let max: usize = n.parse().map_err(|_| Error::Parse {
            line: line_no,
            message: alloc::format!("bad gap {element:?}"),
        })?;
        return Ok(Element::Gap(Some(max)));
    }
    if let Some(rest) = element.strip_prefix('!') {
        return Ok(Element::Not(parse_pattern(rest, line_no)?));
    }
    Ok(Element::Tok(parse_pattern(element, line_no)?))
}

fn parse_pattern(pattern: &str, line_no: usize) -> Result<Pattern> {
    let predicates = pattern
        .split(',')
        .map(|pred| parse_predicate(pred, line_no))
        .collect::<Result<Vec<Predicate>>>()?;
    if predicates.is_empty() {
        return Err(Error::Parse {
            line: line_no,
            message: "empty pattern".to_string(),
        });
    }
    Ok(Pattern { predicates })
}

fn parse_predicate(pred: &str, line_no: usize) -> Result<Predicate> {
    // Longest operators first so "!=" is not read as "=".
    const OPS: &[(&str, Op)] = &[
        ("!$=", Op::NotSuffix),
        ("!=", Op::Ne),
        ("^=", Op::Prefix),
        ("$=", Op::Suffix),
        ("=", Op::Eq),
    ];
    let (field_name, op, raw_values) = OPS
        .iter()
        .find_map(|(sym, op)| {
            pred.split_once(sym)
                .map(|(field, values)| (field, *op, values))
        })
        .ok_or_else(|| Error::Parse {
            line: line_no,
            message: alloc::format!("missing operator in {pred:?}"),
        })?;

    let field = match field_name {
        "surface" => Field::Surface,
        "lower" => Field::Lower,
        "lemma" => Field::Lemma,
        "pos" => Field::Pos,
        "tense" => Field::Tense,
        "kind" => Field::Kind,
        "aux" => Field::Aux,
        "finite" => Field::Finite,
        other => {
            return Err(Error::Parse {
                line: line_no,
                message: alloc::format!("unknown field {other:?}"),
            })
        }
    };
    let values: Vec<String> = raw_values.split('|').map(|v| normalize(v)).collect();
    if values.iter().any(|v| v.is_empty()) {
        return Err(Error::Parse {
            line: line_no,
            message: alloc::format!("empty value in {pred:?}"),
        });
    }
    validate_closed_values(field, &values, line_no)?;
    if matches!(
        (field, op),
        (
            Field::Pos | Field::Tense | Field::Kind | Field::Aux | Field::Finite,
            Op::Prefix | Op::Suffix | Op::NotSuffix
        )
    ) {
        return Err(Error::Parse {
            line: line_no,
            message: alloc::format!("string operator on closed field in {pred:?}"),
        });
    }
    Ok(Predicate { field, op, values })
}

fn validate_closed_values(field: Field, values: &[String], line_no: usize) -> Result<()> {
    let allowed: &[&str] = match field {
        Field::Pos => &[
            "noun",
            "verb",
            "adjective",
            "adverb",
            "pronoun",
            "preposition",
            "conjunction",
            "determiner",
            "other",
        ],
        Field::Tense => &["present", "past", "future", "conditional", "none"],
        Field::Kind => &["word", "number", "punctuation"],
        Field::Aux | Field::Finite => &["true", "false"],
        _ => return Ok(()),
    };
    for value in values {
        if !allowed.contains(&value.as_str()) {
            return Err(Error::Parse {
                line: line_no,
                message: alloc::format!("invalid value {value:?} for field"),
            });
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lexicon::Lexicon;
    use crate::metrics::feature_index;
    use crate::text::{Analyzer, SegmentationRules};

    fn lexicon() -> Lexicon {
        Lexicon::parse(
            "le\n",
            "form\tlemma\tfreq_per_million\tpos\n\
             je\tje\t15000\tpronoun\n\
             ne\tne\t9500\tadverb\n\
             dors\tdormir\t20\tverb\n\
             pas\tpas\t9000\tadverb\n\
             il\til\t20000\tpronoun\n\
             semble\tsembler\t150\tverb\n\
             fatigué\tfatiguer\t30\tverb\n\
             le\tle\t38000\tdeterminer\n\
             chat\tchat\t120\tnoun\n\
             dort\tdormir\t20\tverb\n",
        )
        .unwrap()
    }

    fn features(text: &str) -> Vec<f64> {
        let rules = SegmentationRules::french();
        let lexicon = lexicon();
        let doc = Analyzer::new(&rules, &lexicon).analyze("t", text);
        biber_features(&doc, &BiberRuleSet::french())
    }

    fn value(features: &[f64], name: &str) -> f64 {
        features[feature_index(name).unwrap() - 23]
    }

    #[test]
    fn default_rules_are_complete() {
        let set = BiberRuleSet::french();
        assert_eq!(set.rules().len(), 40);
        for (rule, name) in set.rules().iter().zip(BIBER_FEATURE_NAMES) {
            assert_eq!(rule.name, name);
        }
    }

    #[test]
    fn missing_rule_is_a_config_error() {
        let err = BiberRuleSet::parse("pastVerbs\tpos=verb,tense=past\n").unwrap_err();
        assert!(matches!(err, Error::Config(_)));
    }

    #[test]
    fn unknown_name_is_rejected_with_line() {
        let err = BiberRuleSet::parse("nope\tpos=verb\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 1, .. }));
    }

    #[test]
    fn empty_document_is_all_zeros() {
        assert!(features("").iter().all(|&v| v == 0.0));
    }

    #[test]
    fn analytic_negation_example() {
        let f = features("Je ne dors pas.");
        assert_eq!(value(&f, "analNegn"), 0.25);
    }

    #[test]
    fn seem_appear_example() {
        let f = features("Il semble fatigué.");
        assert!((value(&f, "seemappear") - 1.0 / 3.0).abs() < 1e-12);
    }

    #[test]
    fn inapplicable_features_stay_zero() {
        let f = features("Je ne dors pas. Il semble fatigué. Le chat dort.");
        assert_eq!(value(&f, "thatDeletion"), 0.0);
        assert_eq!(value(&f, "strandedPrep"), 0.0);
    }

    #[test]
    fn values_always_in_unit_interval() {
        let f = features("Je ne dors pas, je ne dors pas, je ne dors pas.");
        assert!(f.iter().all(|&v| (0.0..=1.0).contains(&v)));
    }

    #[test]
    fn gap_matching_spans_interveners() {
        let set = BiberRuleSet::parse(
            &BIBER_FEATURE_NAMES
                .iter()
                .map(|n| {
                    if *n == "analNegn" {
                        alloc::format!("{n}\tlower=ne ?3 lower=pas")
                    } else {
                        alloc::format!("{n}\tNONE")
                    }
                })
                .collect::<Vec<String>>()
                .join("\n"),
        )
        .unwrap();
        let rules = SegmentationRules::french();
        let lexicon = lexicon();
        let doc = Analyzer::new(&rules, &lexicon).analyze("t", "je ne le dors vraiment pas");
        let f = biber_features(&doc, &set);
        assert!(f[39] > 0.0);
    }

    #[test]
    fn anchors_constrain_matches() {
        let mut lines: Vec<String> = BIBER_FEATURE_NAMES
            .iter()
            .map(|n| alloc::format!("{n}\tNONE"))
            .collect();
        lines[0] = String::from("pastVerbs\t^ lower=je ?* surface=? $");
        let set = BiberRuleSet::parse(&lines.join("\n")).unwrap();
        let rules = SegmentationRules::french();
        let lexicon = lexicon();
        let analyzer = Analyzer::new(&rules, &lexicon);
        let hit = biber_features(&analyzer.analyze("t", "Je dors ?"), &set);
        assert!(hit[0] > 0.0);
        let miss = biber_features(&analyzer.analyze("t", "Le chat sait que je dors ?"), &set);
        assert_eq!(miss[0], 0.0);
    }
}
