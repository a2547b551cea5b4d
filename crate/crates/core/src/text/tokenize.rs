//! Tokenizer for French prose.
//!
//! The rules are deliberately small and deterministic:
//! - elision apostrophes split into two word tokens ("l'arbre" → "l'", "arbre");
//! - hyphenated compounds stay together ("arbre-mort", "allez-vous");
//! - digit runs become number tokens, keeping internal decimal separators;
//! - every punctuation mark is its own token, except "..." which collapses
//!   into a single ellipsis token.

use alloc::string::String;
use alloc::vec::Vec;

use super::token::{Pos, Token, TokenKind};

/// Prefixes (letters before the apostrophe) that mark a French elision.
/// "aujourd'hui" is one word because "aujourd" is not in this list.
const ELISION_PREFIXES: &[&str] = &[
    "l", "d", "j", "n", "s", "c", "m", "t", "qu", "jusqu", "lorsqu", "puisqu", "quoiqu", "presqu",
    "quelqu",
];

fn is_letter(c: char) -> bool {
    c.is_alphabetic()
}

fn is_apostrophe(c: char) -> bool {
    c == '\'' || c == '\u{2019}'
}

fn is_word_internal(c: char) -> bool {
    is_letter(c) || c == '-' || is_apostrophe(c)
}

fn letter_count(s: &str) -> usize {
    s.chars().filter(|c| is_letter(*c)).count()
}

fn make_token(surface: &str, kind: TokenKind) -> Token {
    let lower: String = surface.to_lowercase();
    Token {
        surface: String::from(surface),
        char_len: letter_count(surface),
        lemma: lower.clone(),
        lower,
        kind,
        pos: Pos::Other,
        tense: None,
        finite_verb: false,
        auxiliary: false,
    }
}

/// Split raw text into word, number and punctuation tokens.
///
/// Total and deterministic: empty input yields an empty list, and any
/// character that is neither letter, digit nor whitespace becomes a
/// punctuation token.
pub fn tokenize(text: &str) -> Vec<Token> {
    let chars: Vec<char> = text.chars().collect();
    let mut tokens = Vec::new();
    let mut i = 0;

    while i < chars.len() {
        let c = chars[i];
        if c.is_whitespace() {
            i += 1;
        } else if is_letter(c) {
            i = scan_word(&chars, i, &mut tokens);
        } else if c.is_ascii_digit() {
            i = scan_number(&chars, i, &mut tokens);
        } else if c == '.' && chars.get(i + 1) == Some(&'.') {
            let mut j = i;
            while chars.get(j) == Some(&'.') {
                j += 1;
            }
            tokens.push(make_token("…", TokenKind::Punctuation));
            i = j;
        } else {
            let mut buf = [0u8; 4];
            tokens.push(make_token(c.encode_utf8(&mut buf), TokenKind::Punctuation));
            i += 1;
        }
    }
    tokens
}

/// Scan a word starting at `start`, splitting at elision apostrophes.
fn scan_word(chars: &[char], start: usize, tokens: &mut Vec<Token>) -> usize {
    let mut j = start;
    while j < chars.len() && is_word_internal(chars[j]) {
        j += 1;
    }
    // Trailing hyphens/apostrophes belong to the next token stream, not the
    // word ("chat-" at line end).
    while j > start && !is_letter(chars[j - 1]) && !is_apostrophe(chars[j - 1]) {
        j -= 1;
    }
    // An apostrophe is only word-internal when followed by a letter.
    if j > start && is_apostrophe(chars[j - 1]) {
        let prefix: String = chars[start..j - 1].iter().collect();
        if !is_elision_prefix(&prefix) {
            j -= 1;
        }
    }

    let mut seg_start = start;
    let mut k = start;
    while k < j {
        if is_apostrophe(chars[k]) {
            let prefix: String = chars[seg_start..k].iter().collect();
            if is_elision_prefix(&prefix) && k + 1 < j && is_letter(chars[k + 1]) {
                let surface: String = chars[seg_start..=k].iter().collect();
                tokens.push(make_token(&surface, TokenKind::Word));
                seg_start = k + 1;
            }
        }
        k += 1;
    }
    if seg_start < j {
        let surface: String = chars[seg_start..j].iter().collect();
        tokens.push(make_token(&surface, TokenKind::Word));
    }
    j.max(start + 1)
}

fn is_elision_prefix(prefix: &str) -> bool {
    let lower = prefix.to_lowercase();
    ELISION_PREFIXES.iter().any(|p| *p == lower)
}

/// Scan a digit run, keeping "3,5" and "1.250" as single number tokens.
fn scan_number(chars: &[char], start: usize, tokens: &mut Vec<Token>) -> usize {
    let mut j = start;
    while j < chars.len() {
        let c = chars[j];
        if c.is_ascii_digit() {
            j += 1;
        } else if (c == ',' || c == '.' || c == '\u{a0}')
            && chars.get(j + 1).is_some_and(|n| n.is_ascii_digit())
        {
            j += 1;
        } else {
            break;
        }
    }
    let surface: String = chars[start..j].iter().collect();
    tokens.push(make_token(&surface, TokenKind::Number));
    j
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn surfaces(text: &str) -> Vec<String> {
        tokenize(text).into_iter().map(|t| t.surface).collect()
    }

    #[test]
    fn empty_input() {
        assert!(tokenize("").is_empty());
    }

    #[test]
    fn simple_sentence() {
        let toks = tokenize("Le chat.");
        assert_eq!(toks.len(), 3);
        assert_eq!(toks[0].surface, "Le");
        assert_eq!(toks[0].kind, TokenKind::Word);
        assert_eq!(toks[1].surface, "chat");
        assert_eq!(toks[2].surface, ".");
        assert_eq!(toks[2].kind, TokenKind::Punctuation);
    }

    #[test]
    fn elision_splits_hyphen_stays() {
        assert_eq!(surfaces("l'arbre-mort"), vec!["l'", "arbre-mort"]);
    }

    #[test]
    fn aujourdhui_is_one_word() {
        assert_eq!(surfaces("aujourd'hui"), vec!["aujourd'hui"]);
    }

    #[test]
    fn curly_apostrophe_elision() {
        let toks = tokenize("l\u{2019}arbre");
        assert_eq!(toks.len(), 2);
        assert_eq!(toks[0].lower, "l\u{2019}");
    }

    #[test]
    fn numbers_are_number_tokens() {
        let toks = tokenize("Ajouter 250 g, puis 3,5 litres.");
        let nums: Vec<&Token> = toks.iter().filter(|t| t.kind == TokenKind::Number).collect();
        assert_eq!(nums.len(), 2);
        assert_eq!(nums[0].surface, "250");
        assert_eq!(nums[1].surface, "3,5");
    }

    #[test]
    fn ellipsis_collapses() {
        let toks = tokenize("Eh bien...");
        assert_eq!(toks.last().unwrap().surface, "…");
        assert_eq!(toks.len(), 3);
    }

    #[test]
    fn char_len_counts_letters_only() {
        let toks = tokenize("l'arbre-mort été");
        assert_eq!(toks[0].char_len, 1); // l'
        assert_eq!(toks[1].char_len, 9); // arbre-mort without the hyphen
        assert_eq!(toks[2].char_len, 3); // été, diacritics count once
    }

    #[test]
    fn word_invariants_hold() {
        for t in tokenize("Où est-il ? 12 fois, d'accord...") {
            match t.kind {
                TokenKind::Word => assert!(t.char_len >= 1),
                TokenKind::Punctuation => assert_eq!(t.char_len, 0),
                TokenKind::Number => {}
            }
        }
    }

    #[test]
    fn letters_are_preserved() {
        let text = "Il était une fois, l'hiver venu, un chat-huant.";
        let input_letters: usize = text.chars().filter(|c| c.is_alphabetic()).count();
        let token_letters: usize = tokenize(text).iter().map(|t| t.char_len).sum();
        assert_eq!(input_letters, token_letters);
    }
}
