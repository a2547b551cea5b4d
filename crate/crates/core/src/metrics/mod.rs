//! The document feature vector: lexical diversity, vocabulary, syntactic,
//! readability and register metrics in one fixed-order schema.

mod biber;
mod lexical;
mod readability;
mod syntactic;
mod vocabulary;

pub use biber::{biber_features, BiberRule, BiberRuleSet, DEFAULT_FRENCH_BIBER_RULES};
pub use lexical::{mattr, msttr, mtld, ttr, MATTR_WINDOW, MSTTR_SEGMENT, MTLD_THRESHOLD};
pub use readability::{
    flesch_kincaid_ease, kandel_moles, readability_metrics, ReadabilityMetrics,
};
pub use syntactic::{syntactic_metrics, SyntacticMetrics};
pub use vocabulary::{vocabulary_metrics, VocabularyMetrics};

use alloc::string::String;
use alloc::vec::Vec;

use serde::de::{MapAccess, Visitor};
use serde::ser::SerializeMap;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::lexicon::Lexicon;
use crate::text::AnalyzedDocument;
use crate::SCHEMA_VERSION;

/// Canonical metric order. CSV columns and vector slots follow this exact
/// sequence; classifiers index into it blindly.
pub const FEATURE_NAMES: &[&str] = &[
    // lexical diversity
    "TTR",
    "MSTTR",
    "MATTR",
    "MTLD",
    // vocabulary
    "PA",
    "Unigram",
    "NLM",
    "wordLength",
    // syntactic
    "MLS",
    "MLC",
    "DC_C",
    "MLT",
    "TU_S",
    "CTU_TU",
    "C_TU",
    "CP_C",
    "CP_TU",
    "C_S",
    "NWS90",
    "PS30",
    // readability
    "FK_ease",
    "KM_score",
    "BINGUI",
    // register features (normalized counts per word)
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

/// Number of register features at the tail of the schema.
pub const BIBER_FEATURE_COUNT: usize = 40;

/// Index of a metric in the canonical schema.
pub fn feature_index(name: &str) -> Option<usize> {
    FEATURE_NAMES.iter().position(|n| *n == name)
}

/// The full metric vector of one document, in canonical schema order.
#[derive(Debug, Clone, PartialEq)]
pub struct FeatureVector {
    pub document_id: String,
    values: Vec<f64>,
}

impl FeatureVector {
    /// Wrap raw values; they must already be in schema order.
    pub fn from_values(document_id: String, values: Vec<f64>) -> Result<FeatureVector> {
        if values.len() != FEATURE_NAMES.len() {
            return Err(Error::Validation(alloc::format!(
                "feature vector has {} values, schema expects {}",
                values.len(),
                FEATURE_NAMES.len()
            )));
        }
        Ok(FeatureVector {
            document_id,
            values,
        })
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn get(&self, name: &str) -> Option<f64> {
        feature_index(name).map(|i| self.values[i])
    }

    pub fn iter(&self) -> impl Iterator<Item = (&'static str, f64)> + '_ {
        FEATURE_NAMES.iter().copied().zip(self.values.iter().copied())
    }
}

impl Serialize for FeatureVector {
    fn serialize<S: Serializer>(&self, serializer: S) -> core::result::Result<S::Ok, S::Error> {
        let mut map = serializer.serialize_map(Some(self.values.len() + 2))?;
        map.serialize_entry("document_id", &self.document_id)?;
        map.serialize_entry("schema_version", &SCHEMA_VERSION)?;
        for (name, value) in self.iter() {
            map.serialize_entry(name, &value)?;
        }
        map.end()
    }
}

impl<'de> Deserialize<'de> for FeatureVector {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> core::result::Result<Self, D::Error> {
        struct VecVisitor;
        impl<'de> Visitor<'de> for VecVisitor {
            type Value = FeatureVector;

            fn expecting(&self, f: &mut core::fmt::Formatter) -> core::fmt::Result {
                f.write_str("a feature vector map")
            }

            fn visit_map<A: MapAccess<'de>>(
                self,
                mut access: A,
            ) -> core::result::Result<FeatureVector, A::Error> {
                let mut document_id = String::new();
                let mut values = alloc::vec![f64::NAN; FEATURE_NAMES.len()];
                while let Some(key) = access.next_key::<String>()? {
                    match key.as_str() {
                        "document_id" => document_id = access.next_value()?,
                        "schema_version" => {
                            let version: u32 = access.next_value()?;
                            if version != SCHEMA_VERSION {
                                return Err(serde::de::Error::custom(alloc::format!(
                                    "schema version {version} != {SCHEMA_VERSION}"
                                )));
                            }
                        }
                        name => match feature_index(name) {
                            Some(i) => values[i] = access.next_value()?,
                            None => {
                                return Err(serde::de::Error::custom(alloc::format!(
                                    "unknown metric {name:?}"
                                )))
                            }
                        },
                    }
                }
                if let Some(missing) = FEATURE_NAMES
                    .iter()
                    .zip(&values)
                    .find(|(_, v)| v.is_nan())
                {
                    return Err(serde::de::Error::custom(alloc::format!(
                        "missing metric {:?}",
                        missing.0
                    )));
                }
                Ok(FeatureVector {
                    document_id,
                    values,
                })
            }
        }
        deserializer.deserialize_map(VecVisitor)
    }
}

/// Compute the full fixed-schema vector for an analysed document.
///
/// Degenerate inputs (empty document, zero denominators) materialize each
/// metric's stated fallback so the vector is always total and finite.
pub fn compute_feature_vector(
    doc: &AnalyzedDocument,
    lexicon: &Lexicon,
    rules: &BiberRuleSet,
) -> FeatureVector {
    let word_forms: Vec<&str> = doc
        .word_tokens()
        .filter(|t| t.is_word())
        .map(|t| t.lower.as_str())
        .collect();

    let mut values = Vec::with_capacity(FEATURE_NAMES.len());
    values.push(ttr(&word_forms));
    values.push(msttr(&word_forms));
    values.push(mattr(&word_forms));
    values.push(mtld(&word_forms));

    let vocab = vocabulary_metrics(doc, lexicon);
    values.push(vocab.pa);
    values.push(vocab.unigram);
    values.push(vocab.nlm);
    values.push(vocab.word_length);

    let syn = syntactic_metrics(doc);
    values.push(syn.mls);
    values.push(syn.mlc);
    values.push(syn.dc_c);
    values.push(syn.mlt);
    values.push(syn.tu_s);
    values.push(syn.ctu_tu);
    values.push(syn.c_tu);
    values.push(syn.cp_c);
    values.push(syn.cp_tu);
    values.push(syn.c_s);
    values.push(syn.nws90);
    values.push(syn.ps30);

    let read = readability_metrics(doc);
    values.push(read.fk_ease);
    values.push(read.km_score);
    values.push(read.bingui);

    values.extend(biber_features(doc, rules));

    FeatureVector {
        document_id: doc.source_id.clone(),
        values,
    }
}
