//! Word resources behind the vocabulary metrics: a simple-word list and a
//! lemma/frequency lexicon with part-of-speech tags.
//!
//! File formats (both UTF-8):
//! - simple-word list: one lowercase word per line, `#` comments;
//! - frequency lexicon: TSV with a required `form<TAB>lemma<TAB>freq_per_million<TAB>pos`
//!   header. Duplicate forms keep the highest-frequency entry.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::math;
use crate::text::Pos;

/// Add-α smoothing constant for [`Lexicon::unigram_logprob`].
pub const UNIGRAM_ALPHA: f64 = 0.01;

/// Fixed elision map: an elided form is looked up as its full form.
pub const ELISIONS: &[(&str, &str)] = &[
    ("l'", "le"),
    ("d'", "de"),
    ("j'", "je"),
    ("n'", "ne"),
    ("s'", "se"),
    ("c'", "ce"),
    ("qu'", "que"),
    ("m'", "me"),
    ("t'", "te"),
    ("jusqu'", "jusque"),
    ("lorsqu'", "lorsque"),
    ("puisqu'", "puisque"),
];

/// One lexicon row.
#[derive(Debug, Clone, PartialEq)]
pub struct LexiconEntry {
    pub lemma: String,
    pub freq_per_million: f64,
    pub pos: Pos,
}

/// Immutable word resources; safe to share across threads once loaded.
#[derive(Debug, Clone)]
pub struct Lexicon {
    simple_words: BTreeSet<String>,
    entries: BTreeMap<String, LexiconEntry>,
}

impl Lexicon {
    /// Parse both resource files from their text contents.
    pub fn parse(simple_list: &str, freq_lexicon: &str) -> Result<Lexicon> {
        let simple_words = parse_simple_list(simple_list)?;
        let entries = parse_freq_lexicon(freq_lexicon)?;
        Ok(Lexicon {
            simple_words,
            entries,
        })
    }

    /// Case-folded lookup. Elided forms ("l'") resolve through the fixed
    /// elision map; apostrophe variants are normalised.
    pub fn lookup(&self, word: &str) -> Option<&LexiconEntry> {
        let lower = normalize_apostrophes(&word.to_lowercase());
        if let Some(entry) = self.entries.get(lower.as_str()) {
            return Some(entry);
        }
        elide(&lower).and_then(|full| self.entries.get(full))
    }

    /// Membership in the simple-word list, with the same folding rules as
    /// [`Lexicon::lookup`].
    pub fn is_simple_word(&self, word: &str) -> bool {
        let lower = normalize_apostrophes(&word.to_lowercase());
        if self.simple_words.contains(lower.as_str()) {
            return true;
        }
        elide(&lower).is_some_and(|full| self.simple_words.contains(full))
    }

    pub fn entry_count(&self) -> usize {
        self.entries.len()
    }

    pub fn simple_word_count(&self) -> usize {
        self.simple_words.len()
    }

    /// Mean smoothed log-probability of a bag of lemmas under the unigram
    /// model `log((freq + α) / (1e6 + α·V))`, α = [`UNIGRAM_ALPHA`],
    /// V = entry count. Out-of-vocabulary lemmas use frequency 0.
    pub fn unigram_logprob(&self, lemmas: &[&str]) -> Result<f64> {
        if lemmas.is_empty() {
            return Err(Error::InvalidArgument("empty lemma list".to_string()));
        }
        let denominator = 1_000_000.0 + UNIGRAM_ALPHA * self.entries.len() as f64;
        let sum: f64 = lemmas
            .iter()
            .map(|lemma| {
                let freq = self
                    .lookup(lemma)
                    .map(|e| e.freq_per_million)
                    .unwrap_or(0.0);
                math::ln((freq + UNIGRAM_ALPHA) / denominator)
            })
            .sum();
        Ok(sum / lemmas.len() as f64)
    }
}

fn normalize_apostrophes(s: &str) -> String {
    s.replace('\u{2019}', "'")
}

fn elide(lower: &str) -> Option<&'static str> {
    ELISIONS
        .iter()
        .find(|(elided, _)| *elided == lower)
        .map(|(_, full)| *full)
}

fn parse_simple_list(input: &str) -> Result<BTreeSet<String>> {
    let mut words = BTreeSet::new();
    for raw in input.lines() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        words.insert(normalize_apostrophes(&line.to_lowercase()));
    }
    if words.is_empty() {
        return Err(Error::Validation("simple-word list is empty".to_string()));
    }
    Ok(words)
}

fn parse_freq_lexicon(input: &str) -> Result<BTreeMap<String, LexiconEntry>> {
    let mut lines = input.lines().enumerate();
    let header = loop {
        match lines.next() {
            Some((_, l)) if l.trim().is_empty() || l.trim_start().starts_with('#') => continue,
            Some((_, l)) => break l,
            None => {
                return Err(Error::Parse {
                    line: 1,
                    message: "missing header line".to_string(),
                })
            }
        }
    };
    let expected = ["form", "lemma", "freq_per_million", "pos"];
    let header_fields: Vec<&str> = header.trim_end().split('\t').map(|f| f.trim()).collect();
    if header_fields != expected {
        return Err(Error::Parse {
            line: 1,
            message: alloc::format!("expected header {:?}, found {:?}", expected, header_fields),
        });
    }

    let mut entries: BTreeMap<String, LexiconEntry> = BTreeMap::new();
    for (idx, raw) in lines {
        let line_no = idx + 1;
        let line = raw.trim_end_matches(['\r', '\n']);
        if line.trim().is_empty() || line.trim_start().starts_with('#') {
            continue;
        }
        let fields: Vec<&str> = line.split('\t').collect();
        if fields.len() != 4 {
            return Err(Error::Parse {
                line: line_no,
                message: alloc::format!("expected 4 tab-separated fields, found {}", fields.len()),
            });
        }
        let form = normalize_apostrophes(&fields[0].trim().to_lowercase());
        if form.is_empty() {
            return Err(Error::Parse {
                line: line_no,
                message: "empty form".to_string(),
            });
        }
        let freq: f64 = fields[2].trim().parse().map_err(|_| Error::Parse {
            line: line_no,
            message: alloc::format!("bad frequency {:?}", fields[2]),
        })?;
        if !freq.is_finite() || freq < 0.0 {
            return Err(Error::Parse {
                line: line_no,
                message: alloc::format!("frequency out of range: {freq}"),
            });
        }
        let pos = Pos::parse(fields[3].trim()).ok_or_else(|| Error::Parse {
            line: line_no,
            message: alloc::format!("unknown pos {:?}", fields[3]),
        })?;
        let entry = LexiconEntry {
            lemma: normalize_apostrophes(&fields[1].trim().to_lowercase()),
            freq_per_million: freq,
            pos,
        };

        match entries.get(&form) {
            Some(existing)
                if existing.freq_per_million > entry.freq_per_million
                    || (existing.freq_per_million == entry.freq_per_million
                        && existing.pos.ambiguity_rank() <= entry.pos.ambiguity_rank()) => {}
            _ => {
                entries.insert(form, entry);
            }
        }
    }
    Ok(entries)
}
