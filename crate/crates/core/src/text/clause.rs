//! Clause and T-unit segmentation.
//!
//! The segmenter is finite-verb and marker-list driven rather than a full
//! parse: a clause boundary opens at a subordinator, relative pronoun or
//! coordinating conjunction when both sides carry a finite verb, and at the
//! comma closing a fronted dependent clause ("Quand il pleut, je reste.").
//! A sentence without any finite verb is a single independent clause, so
//! every ratio built on clauses keeps a nonzero denominator.

use alloc::vec;
use alloc::vec::Vec;

use super::rules::{MarkerPhrase, SegmentationRules};
use super::sentence::{Clause, Sentence, TUnit};
use super::token::{Token, TokenKind};

#[derive(Clone, Copy, PartialEq, Eq)]
enum Marker {
    Subordinator,
    Relative,
    Coordinator,
}

/// Fill `sentence.clauses`. Tokens must be tagged first.
pub fn segment_clauses(sentence: &mut Sentence, rules: &SegmentationRules) {
    let tokens = &sentence.tokens;
    let finite: Vec<usize> = tokens
        .iter()
        .enumerate()
        .filter(|(_, t)| t.finite_verb)
        .map(|(i, _)| i)
        .collect();

    if tokens.is_empty() {
        sentence.clauses = Vec::new();
        return;
    }
    if finite.is_empty() {
        sentence.clauses = vec![Clause {
            token_span: 0..tokens.len(),
            dependent: false,
            finite_verb_index: None,
        }];
        return;
    }

    let mut boundaries: Vec<usize> = vec![0];
    let mut clause_start = 0usize;
    let mut i = 0usize;
    while i < tokens.len() {
        let has_finite_before = |start: usize, end: usize| finite.iter().any(|&f| f >= start && f < end);
        let rest_has_finite = |from: usize| finite.iter().any(|&f| f >= from);

        if let Some((marker, span)) = marker_at(tokens, i, rules) {
            let cur_has_words = tokens[clause_start..i].iter().any(|t| t.counts_as_word());
            let cur_has_finite = has_finite_before(clause_start, i);
            let open = match marker {
                Marker::Coordinator => cur_has_finite && rest_has_finite(i + span),
                Marker::Subordinator | Marker::Relative => {
                    cur_has_words
                        && rest_has_finite(i + span)
                        && (cur_has_finite || !has_finite_before(0, i))
                }
            };
            if open {
                boundaries.push(i);
                clause_start = i;
            }
            i += span;
            continue;
        }

        // A comma closes a fronted dependent clause once it has its verb.
        if tokens[i].surface == ","
            && starts_with_dependent_marker(tokens, clause_start, i, rules)
            && has_finite_before(clause_start, i)
            && rest_has_finite(i + 1)
        {
            boundaries.push(i + 1);
            clause_start = i + 1;
        }
        i += 1;
    }

    boundaries.dedup();
    let mut clauses = Vec::with_capacity(boundaries.len());
    for (b, &start) in boundaries.iter().enumerate() {
        let end = boundaries.get(b + 1).copied().unwrap_or(tokens.len());
        if start == end {
            continue;
        }
        clauses.push(Clause {
            token_span: start..end,
            dependent: starts_with_dependent_marker(tokens, start, end, rules),
            finite_verb_index: finite.iter().copied().find(|&f| f >= start && f < end),
        });
    }
    sentence.clauses = clauses;
}

/// Fill `sentence.t_units` from its clauses: each independent clause starts
/// a T-unit and following dependent clauses attach to it. Dependent clauses
/// before the first independent one (fronted subordinates) join the first
/// T-unit.
pub fn segment_t_units(sentence: &mut Sentence) {
    let mut units: Vec<Vec<usize>> = Vec::new();
    let mut first_unit_open = false;

    for (index, clause) in sentence.clauses.iter().enumerate() {
        if clause.dependent {
            match units.last_mut() {
                Some(unit) => unit.push(index),
                None => {
                    units.push(vec![index]);
                    first_unit_open = true;
                }
            }
        } else if first_unit_open {
            // The fronted dependent clauses belong to this root clause.
            units.last_mut().expect("unit open").push(index);
            first_unit_open = false;
        } else {
            units.push(vec![index]);
        }
    }

    sentence.t_units = units
        .into_iter()
        .map(|clause_indices| TUnit {
            complex: clause_indices.len() > 1,
            clause_indices,
        })
        .collect();
}

/// Count coordinating conjunctions joining non-clausal constituents: those
/// with no finite verb between them and the previous coordinator or clause
/// start.
pub fn count_coordinate_phrases(sentence: &Sentence, rules: &SegmentationRules) -> usize {
    let tokens = &sentence.tokens;
    let clause_starts: Vec<usize> = if sentence.clauses.is_empty() {
        vec![0]
    } else {
        sentence.clauses.iter().map(|c| c.token_span.start).collect()
    };

    let mut count = 0usize;
    let mut barrier = 0usize;
    for (i, token) in tokens.iter().enumerate() {
        if token.is_word() && rules.is_coordinator(&token.lower) {
            // The barrier stays at the previous coordinator or clause start
            // even when this conjunction itself opened a clause.
            let finite_between = tokens[barrier..i].iter().any(|t| t.finite_verb);
            if !finite_between {
                count += 1;
            }
            barrier = i;
        } else if clause_starts.contains(&i) {
            barrier = i;
        }
    }
    count
}

/// Longest marker phrase starting at `i`, if any. Subordinators win over
/// relatives, relatives over coordinators.
fn marker_at(tokens: &[Token], i: usize, rules: &SegmentationRules) -> Option<(Marker, usize)> {
    if !tokens[i].is_word() {
        return None;
    }
    if let Some(span) = match_phrases(tokens, i, rules.subordinators()) {
        return Some((Marker::Subordinator, span));
    }
    if let Some(span) = match_phrases(tokens, i, rules.relatives()) {
        return Some((Marker::Relative, span));
    }
    if rules.is_coordinator(&tokens[i].lower) {
        return Some((Marker::Coordinator, 1));
    }
    None
}

fn match_phrases(tokens: &[Token], i: usize, phrases: &[MarkerPhrase]) -> Option<usize> {
    phrases.iter().find_map(|phrase| {
        let slice = tokens.get(i..i + phrase.len())?;
        let all = slice
            .iter()
            .zip(phrase)
            .all(|(t, w)| t.is_word() && normalized(&t.lower) == *w);
        all.then_some(phrase.len())
    })
}

fn normalized(lower: &str) -> alloc::string::String {
    lower.replace('\u{2019}', "'")
}

/// Does the clause in `[start, end)` open with a subordinator or relative
/// marker (skipping leading coordinators and punctuation)?
fn starts_with_dependent_marker(
    tokens: &[Token],
    start: usize,
    end: usize,
    rules: &SegmentationRules,
) -> bool {
    let mut i = start;
    while i < end {
        let t = &tokens[i];
        if t.kind == TokenKind::Punctuation || (t.is_word() && rules.is_coordinator(&t.lower)) {
            i += 1;
            continue;
        }
        return match marker_at(tokens, i, rules) {
            Some((Marker::Subordinator | Marker::Relative, _)) => true,
            _ => false,
        };
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lexicon::Lexicon;
    use crate::text::tagger::tag_pos;
    use crate::text::tokenize::tokenize;

    fn footnote_lexicon() -> Lexicon {
        let simple = "il\n";
        let lex = "form\tlemma\tfreq_per_million\tpos\n\
            il\til\t20000\tpronoun\n\
            fait\tfaire\t900\tverb\n\
            beau\tbeau\t200\tadjective\n\
            les\tle\t30000\tdeterminer\n\
            le\tle\t38000\tdeterminer\n\
            la\tle\t32000\tdeterminer\n\
            nuages\tnuage\t40\tnoun\n\
            sont\têtre\t8000\tverb\n\
            partis\tpartir\t60\tverb\n\
            chat\tchat\t120\tnoun\n\
            chien\tchien\t100\tnoun\n\
            dort\tdormir\t30\tverb\n\
            mange\tmanger\t80\tverb\n\
            pleut\tpleuvoir\t25\tverb\n\
            reste\trester\t70\tverb\n\
            je\tje\t15000\tpronoun\n\
            sais\tsavoir\t500\tverb\n\
            tu\ttu\t9000\tpronoun\n\
            viens\tvenir\t300\tverb\n\
            pommes\tpomme\t20\tnoun\n\
            poires\tpoire\t10\tnoun\n\
            prunes\tprune\t5\tnoun\n\
            bonjour\tbonjour\t50\tnoun\n";
        Lexicon::parse(simple, lex).unwrap()
    }

    fn analyze(text: &str) -> Sentence {
        let rules = SegmentationRules::french();
        let mut tokens = tokenize(text);
        tag_pos(&mut tokens, &footnote_lexicon(), &rules);
        let mut sentence = Sentence::new(tokens);
        segment_clauses(&mut sentence, &rules);
        segment_t_units(&mut sentence);
        sentence
    }

    #[test]
    fn conjunctive_sentence_two_t_units_two_clauses() {
        let s = analyze("Il fait beau et les nuages sont partis.");
        assert_eq!(s.clauses.len(), 2);
        assert_eq!(s.dependent_clause_count(), 0);
        assert_eq!(s.t_units.len(), 2);
        assert_eq!(s.complex_t_unit_count(), 0);
    }

    #[test]
    fn explicative_sentence_one_complex_t_unit_two_clauses() {
        let s = analyze("Il fait beau parce que les nuages sont partis.");
        assert_eq!(s.clauses.len(), 2);
        assert_eq!(s.dependent_clause_count(), 1);
        assert_eq!(s.t_units.len(), 1);
        assert_eq!(s.complex_t_unit_count(), 1);
    }

    #[test]
    fn verbless_sentence_single_independent_clause() {
        let s = analyze("Bonjour.");
        assert_eq!(s.clauses.len(), 1);
        assert!(!s.clauses[0].dependent);
        assert_eq!(s.t_units.len(), 1);
        assert!(!s.t_units[0].complex);
    }

    #[test]
    fn fronted_dependent_clause_attaches_forward() {
        let s = analyze("Quand il pleut, je reste.");
        assert_eq!(s.clauses.len(), 2);
        assert!(s.clauses[0].dependent);
        assert!(!s.clauses[1].dependent);
        assert_eq!(s.t_units.len(), 1);
        assert!(s.t_units[0].complex);
    }

    #[test]
    fn complement_clause_is_dependent() {
        let s = analyze("Je sais que tu viens.");
        assert_eq!(s.clauses.len(), 2);
        assert_eq!(s.dependent_clause_count(), 1);
        assert_eq!(s.t_units.len(), 1);
    }

    #[test]
    fn spans_partition_the_sentence() {
        for text in [
            "Il fait beau et les nuages sont partis.",
            "Quand il pleut, je reste.",
            "Je sais que tu viens et que le chien dort.",
        ] {
            let s = analyze(text);
            let mut next = 0usize;
            for c in &s.clauses {
                assert_eq!(c.token_span.start, next);
                next = c.token_span.end;
            }
            assert_eq!(next, s.tokens.len());
            let in_units: usize = s.t_units.iter().map(|u| u.clause_indices.len()).sum();
            assert_eq!(in_units, s.clauses.len());
        }
    }

    #[test]
    fn coordinate_phrases_counted_without_finite_verbs() {
        let rules = SegmentationRules::french();
        let s = analyze("le chat et le chien");
        assert_eq!(count_coordinate_phrases(&s, &rules), 1);

        let s = analyze("pommes, poires et prunes");
        assert_eq!(count_coordinate_phrases(&s, &rules), 1);

        let s = analyze("Il dort.");
        assert_eq!(count_coordinate_phrases(&s, &rules), 0);

        // Clause-joining "et" is not a coordinate phrase.
        let s = analyze("Il fait beau et les nuages sont partis.");
        assert_eq!(count_coordinate_phrases(&s, &rules), 0);
    }
}
