//! Lexicon-first part-of-speech tagging with suffix fallbacks, plus verb
//! tense/finiteness heuristics.
//!
//! Tagging is deterministic: a word found in the lexicon takes that entry's
//! part of speech and lemma (ambiguous forms were already collapsed to the
//! most frequent reading at load time); unknown words fall back to the
//! suffix rules of the segmentation rule file, then to `other`.

use crate::lexicon::Lexicon;

use super::rules::SegmentationRules;
use super::token::{Pos, Tense, Token, TokenKind};

/// Verbs with these endings are conditional. Checked before the future and
/// past tables ("mangerait" is conditional, "montrait" is imperfect).
const CONDITIONAL_ENDINGS: &[&str] = &[
    "erais", "erait", "eraient", "erions", "eriez", "irais", "irait", "iraient", "irions",
    "iriez", "drais", "drait", "draient", "drions", "driez", "rrais", "rrait", "rraient",
    "urais", "urait", "uraient",
];

const FUTURE_ENDINGS: &[&str] = &[
    "erai", "eras", "era", "erons", "erez", "eront", "irai", "iras", "ira", "irons", "irez",
    "iront", "drai", "dras", "dra", "drons", "drez", "dront", "rrai", "rras", "rra", "rrons",
    "rrez", "rront", "urai", "uras", "ura", "urons", "urez", "uront",
];

/// Imperfect and passé simple endings (finite past). "-irent"/"-urent" are
/// left out: they collide with present forms like "inspirent" or "courent".
const FINITE_PAST_ENDINGS: &[&str] = &["ais", "ait", "aient", "âmes", "âtes", "èrent"];

/// Irregular finite past forms the suffix tables cannot reach.
const FINITE_PAST_FORMS: &[&str] = &[
    "fut", "furent", "eut", "eurent", "fit", "firent", "vint", "vinrent", "partirent", "finirent",
];

/// Present forms that would otherwise match a past ending.
const PRESENT_EXCEPTIONS: &[&str] = &[
    "fait", "fais", "sait", "sais", "vais", "ait", "plaît", "plait", "naît", "nait", "connaît",
    "connait", "paraît", "parait", "apparaît", "apparait", "tait",
];

/// Past participle endings; standalone these are non-finite.
const PARTICIPLE_ENDINGS: &[&str] = &["é", "ée", "és", "ées"];

const INFINITIVE_ENDINGS: &[&str] = &["er", "ir", "oir", "re"];

/// How far back (in word tokens) an auxiliary can sit from its participle:
/// covers "n'ont pas encore mangé".
const AUX_WINDOW: usize = 3;

/// Fill `lemma`, `pos`, `tense`, `finite_verb` and `auxiliary` on a token
/// stream. Punctuation barriers bound the compound-tense window, so tagging
/// whole documents and tagging sentence by sentence agree.
pub fn tag_pos(tokens: &mut [Token], lexicon: &Lexicon, rules: &SegmentationRules) {
    for token in tokens.iter_mut() {
        tag_single(token, lexicon, rules);
    }
    resolve_compound_tenses(tokens);
}

fn tag_single(token: &mut Token, lexicon: &Lexicon, rules: &SegmentationRules) {
    if token.kind != TokenKind::Word {
        token.pos = Pos::Other;
        return;
    }
    match lexicon.lookup(&token.lower) {
        Some(entry) => {
            token.pos = entry.pos;
            token.lemma = entry.lemma.clone();
        }
        None => {
            token.pos = rules.suffix_pos(&token.lower).unwrap_or(Pos::Other);
        }
    }
    if token.pos == Pos::Verb {
        assign_verb_form(token);
    }
}

fn assign_verb_form(token: &mut Token) {
    let form = token.lower.as_str();
    let ends = |list: &[&str]| list.iter().any(|e| form.ends_with(e));

    if PRESENT_EXCEPTIONS.contains(&form) {
        token.tense = Some(Tense::Present);
        token.finite_verb = true;
    } else if ends(CONDITIONAL_ENDINGS) {
        token.tense = Some(Tense::Conditional);
        token.finite_verb = true;
    } else if ends(FUTURE_ENDINGS) {
        token.tense = Some(Tense::Future);
        token.finite_verb = true;
    } else if ends(FINITE_PAST_ENDINGS) || FINITE_PAST_FORMS.contains(&form) {
        token.tense = Some(Tense::Past);
        token.finite_verb = true;
    } else if ends(PARTICIPLE_ENDINGS) {
        token.tense = Some(Tense::Past);
        token.finite_verb = false;
    } else if ends(INFINITIVE_ENDINGS) {
        token.tense = None;
        token.finite_verb = false;
    } else {
        token.tense = Some(Tense::Present);
        token.finite_verb = true;
    }
}

/// Demote verbs that follow a finite avoir/être to participles ("les nuages
/// sont partis" has one finite verb) and mark the auxiliary.
fn resolve_compound_tenses(tokens: &mut [Token]) {
    for i in 0..tokens.len() {
        if tokens[i].pos != Pos::Verb || !tokens[i].finite_verb {
            continue;
        }
        if let Some(aux_index) = auxiliary_before(tokens, i) {
            tokens[i].finite_verb = false;
            tokens[i].tense = Some(Tense::Past);
            tokens[aux_index].auxiliary = true;
        }
    }
}

/// Find a finite avoir/être within [`AUX_WINDOW`] word tokens before `i`,
/// with no verb or punctuation in between.
fn auxiliary_before(tokens: &[Token], i: usize) -> Option<usize> {
    let mut words_back = 0;
    for j in (0..i).rev() {
        let t = &tokens[j];
        if t.is_punctuation() {
            return None;
        }
        if !t.counts_as_word() {
            continue;
        }
        words_back += 1;
        if t.pos == Pos::Verb {
            let is_aux = (t.lemma == "avoir" || t.lemma == "être") && t.finite_verb;
            return if is_aux { Some(j) } else { None };
        }
        if words_back > AUX_WINDOW {
            return None;
        }
    }
    None
}
