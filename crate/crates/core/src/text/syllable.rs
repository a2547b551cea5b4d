//! French syllable estimation.
//!
//! The heuristic counts maximal vowel groups (so digraphs like "ou" or
//! "eau" count once) and drops a word-final silent "e" — a final group that
//! is exactly the letter "e" — when the word has at least two groups.
//! "arbre" → 1, "bonjour" → 2, "journée" → 2.

use crate::error::{Error, Result};

const VOWELS: &[char] = &[
    'a', 'e', 'i', 'o', 'u', 'y', 'é', 'è', 'ê', 'à', 'â', 'î', 'ô', 'û', 'ù', 'ë', 'ï', 'ü',
];

fn is_vowel(c: char) -> bool {
    VOWELS.contains(&c)
}

/// Count syllables of a single lowercase word.
///
/// Words always have at least one syllable. Inputs without any letter are
/// rejected: syllables are only defined for words.
pub fn count_syllables(word: &str) -> Result<usize> {
    if !word.chars().any(|c| c.is_alphabetic()) {
        return Err(Error::InvalidArgument(alloc::format!(
            "not a word: {word:?}"
        )));
    }

    let mut groups = 0usize;
    let mut last_group_len = 0usize;
    let mut in_group = false;
    for c in word.chars() {
        if is_vowel(c) {
            if !in_group {
                groups += 1;
                last_group_len = 0;
                in_group = true;
            }
            last_group_len += 1;
        } else {
            in_group = false;
        }
    }

    let final_silent_e =
        in_group && last_group_len == 1 && word.chars().next_back() == Some('e') && groups >= 2;
    if final_silent_e {
        groups -= 1;
    }
    Ok(groups.max(1))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_vowel_word() {
        assert_eq!(count_syllables("a").unwrap(), 1);
        assert_eq!(count_syllables("chat").unwrap(), 1);
    }

    #[test]
    fn digraphs_count_once() {
        assert_eq!(count_syllables("bonjour").unwrap(), 2);
        assert_eq!(count_syllables("eau").unwrap(), 1);
        assert_eq!(count_syllables("oiseau").unwrap(), 2);
    }

    #[test]
    fn final_silent_e_dropped() {
        assert_eq!(count_syllables("arbre").unwrap(), 1);
        assert_eq!(count_syllables("table").unwrap(), 1);
        assert_eq!(count_syllables("porte").unwrap(), 1);
    }

    #[test]
    fn final_e_in_digraph_kept() {
        // "journée" ends in "ée": the final group is not a lone "e".
        assert_eq!(count_syllables("journée").unwrap(), 2);
        assert_eq!(count_syllables("amie").unwrap(), 2);
    }

    #[test]
    fn short_e_words_keep_their_syllable() {
        assert_eq!(count_syllables("le").unwrap(), 1);
        assert_eq!(count_syllables("que").unwrap(), 1);
    }

    #[test]
    fn accented_vowels() {
        assert_eq!(count_syllables("été").unwrap(), 2);
        assert_eq!(count_syllables("à").unwrap(), 1);
    }

    #[test]
    fn non_word_is_rejected() {
        assert!(count_syllables("123").is_err());
        assert!(count_syllables("...").is_err());
        assert!(count_syllables("").is_err());
    }

    #[test]
    fn at_least_one_never_more_than_vowel_count() {
        for w in ["crstz", "strict", "l'", "peut-être", "mange"] {
            let n = count_syllables(w).unwrap();
            let vowels = w.chars().filter(|c| is_vowel(*c)).count().max(1);
            assert!(n >= 1 && n <= vowels, "{w}: {n} vs {vowels}");
        }
    }
}
