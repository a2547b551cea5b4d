//! Loading of the analysis resources: segmentation rules, register feature
//! rules, the simple-word list and the frequency lexicon.

use std::path::{Path, PathBuf};

use complexite_core::lexicon::Lexicon;
use complexite_core::metrics::BiberRuleSet;
use complexite_core::text::{Analyzer, SegmentationRules};

use crate::{read_to_string, Error, Result};

/// Where to find each resource. Rule files are optional: the embedded
/// French defaults apply when no path is given.
#[derive(Debug, Clone)]
pub struct ResourcePaths {
    pub lexicon: PathBuf,
    pub simple_words: PathBuf,
    pub seg_rules: Option<PathBuf>,
    pub biber_rules: Option<PathBuf>,
}

/// The loaded, immutable resource bundle.
pub struct Resources {
    pub seg_rules: SegmentationRules,
    pub biber_rules: BiberRuleSet,
    pub lexicon: Lexicon,
}

impl Resources {
    pub fn load(paths: &ResourcePaths) -> Result<Resources> {
        let seg_rules = match &paths.seg_rules {
            Some(path) => parse_at(path, SegmentationRules::parse)?,
            None => SegmentationRules::french(),
        };
        let biber_rules = match &paths.biber_rules {
            Some(path) => parse_at(path, BiberRuleSet::parse)?,
            None => BiberRuleSet::french(),
        };
        let simple = read_to_string(&paths.simple_words)?;
        let freq = read_to_string(&paths.lexicon)?;
        let lexicon = Lexicon::parse(&simple, &freq).map_err(|source| Error::Resource {
            path: paths.lexicon.clone(),
            source,
        })?;
        Ok(Resources {
            seg_rules,
            biber_rules,
            lexicon,
        })
    }

    pub fn analyzer(&self) -> Analyzer<'_> {
        Analyzer::new(&self.seg_rules, &self.lexicon)
    }
}

fn parse_at<T>(path: &Path, parse: impl Fn(&str) -> complexite_core::error::Result<T>) -> Result<T> {
    let content = read_to_string(path)?;
    parse(&content).map_err(|source| Error::Resource {
        path: path.to_path_buf(),
        source,
    })
}
