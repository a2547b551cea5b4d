//! Labeled document collections: the corpus manifest, the blind-test
//! manifest, featurization and per-level distribution exports.

use std::path::{Path, PathBuf};
use std::time::Duration;

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use complexite_core::classify::{BlindGroup, Dataset, COMPLEXITY_LEVELS};
use complexite_core::metrics::{compute_feature_vector, feature_index, FeatureVector};

use crate::resources::Resources;
use crate::{read_to_string, Error, Result};

/// The eight complexity classes, by ascending level.
pub const CLASS_NAMES: [&str; COMPLEXITY_LEVELS] = [
    "story",
    "recipe",
    "news",
    "wikipedia",
    "novel",
    "dictation",
    "insurance",
    "legal",
];

#[derive(Debug, Clone)]
pub struct CorpusDocument {
    pub id: String,
    pub label: usize,
    pub text: String,
    pub path: PathBuf,
}

/// A loaded corpus plus its provenance: the manifest path and a digest of
/// every document, so identical inputs are recognizable as identical.
#[derive(Debug, Clone)]
pub struct LabeledCorpus {
    pub documents: Vec<CorpusDocument>,
    pub manifest_path: PathBuf,
    pub content_hash: String,
}

impl LabeledCorpus {
    pub fn len(&self) -> usize {
        self.documents.len()
    }

    pub fn is_empty(&self) -> bool {
        self.documents.is_empty()
    }
}

fn manifest_error(path: &Path, message: impl Into<String>) -> Error {
    Error::Manifest {
        path: path.to_path_buf(),
        message: message.into(),
    }
}

/// Load a corpus manifest: CSV with header `path,label,id`, paths resolved
/// relative to the manifest location.
pub fn load_corpus(manifest_path: &Path) -> Result<LabeledCorpus> {
    let rows = read_manifest(manifest_path, &["path", "label", "id"])?;
    let base = manifest_path.parent().unwrap_or(Path::new("."));

    let mut documents = Vec::with_capacity(rows.len());
    let mut hasher = Sha256::new();
    for (line, row) in rows {
        let label: usize = row[1].parse().map_err(|_| {
            manifest_error(manifest_path, format!("line {line}: bad label {:?}", row[1]))
        })?;
        if label >= COMPLEXITY_LEVELS {
            return Err(manifest_error(
                manifest_path,
                format!("line {line}: label {label} out of range 0..{COMPLEXITY_LEVELS}"),
            ));
        }
        let id = row[2].clone();
        if documents.iter().any(|d: &CorpusDocument| d.id == id) {
            return Err(manifest_error(
                manifest_path,
                format!("line {line}: duplicate id {id:?}"),
            ));
        }
        let doc_path = base.join(&row[0]);
        let text = read_to_string(&doc_path)?;
        if text.trim().is_empty() {
            return Err(manifest_error(
                manifest_path,
                format!("line {line}: document {id:?} is empty"),
            ));
        }
        hasher.update(id.as_bytes());
        hasher.update([0u8]);
        hasher.update(label.to_le_bytes());
        hasher.update(text.as_bytes());
        hasher.update([0u8]);
        documents.push(CorpusDocument {
            id,
            label,
            text,
            path: doc_path,
        });
    }

    Ok(LabeledCorpus {
        documents,
        manifest_path: manifest_path.to_path_buf(),
        content_hash: hex_digest(hasher),
    })
}

fn hex_digest(hasher: Sha256) -> String {
    hasher
        .finalize()
        .iter()
        .map(|b| format!("{b:02x}"))
        .collect()
}

/// Read a CSV manifest, check its header and return `(line_number, fields)`
/// rows.
fn read_manifest(path: &Path, expected_header: &[&str]) -> Result<Vec<(usize, Vec<String>)>> {
    let content = read_to_string(path)?;
    let mut reader = csv::ReaderBuilder::new()
        .has_headers(true)
        .trim(csv::Trim::All)
        .from_reader(content.as_bytes());
    let header: Vec<String> = reader
        .headers()
        .map_err(|e| manifest_error(path, e.to_string()))?
        .iter()
        .map(str::to_owned)
        .collect();
    if header != expected_header {
        return Err(manifest_error(
            path,
            format!("expected header {expected_header:?}, found {header:?}"),
        ));
    }
    let mut rows = Vec::new();
    for (index, record) in reader.records().enumerate() {
        let record = record.map_err(|e| manifest_error(path, e.to_string()))?;
        let line = index + 2; // 1-based, after the header
        if record.len() != expected_header.len() {
            return Err(manifest_error(
                path,
                format!(
                    "line {line}: expected {} fields, found {}",
                    expected_header.len(),
                    record.len()
                ),
            ));
        }
        rows.push((line, record.iter().map(str::to_owned).collect()));
    }
    Ok(rows)
}

/// Per-document wall-clock featurization times, for `--verbose` reporting.
pub type Timings = Vec<(String, Duration)>;

/// Compute the feature matrix of a corpus, in manifest order.
pub fn featurize_corpus(corpus: &LabeledCorpus, resources: &Resources) -> Result<(Dataset, Timings)> {
    let analyzer = resources.analyzer();
    let mut vectors: Vec<FeatureVector> = Vec::with_capacity(corpus.len());
    let mut labels = Vec::with_capacity(corpus.len());
    let mut timings = Vec::with_capacity(corpus.len());
    for doc in &corpus.documents {
        let start = std::time::Instant::now();
        let analyzed = analyzer.analyze(&doc.id, &doc.text);
        vectors.push(compute_feature_vector(
            &analyzed,
            &resources.lexicon,
            &resources.biber_rules,
        ));
        timings.push((doc.id.clone(), start.elapsed()));
        labels.push(doc.label);
    }
    let dataset = Dataset::from_vectors(&vectors, labels, COMPLEXITY_LEVELS)?;
    Ok((dataset, timings))
}

/// Five-number summary plus mean of one metric over one level.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LevelSummary {
    pub level: usize,
    pub min: f64,
    pub q1: f64,
    pub median: f64,
    pub q3: f64,
    pub max: f64,
    pub mean: f64,
}

/// Per-level distribution of one metric, with nearest-rank quartiles.
/// Levels with no documents yield a zero row.
pub fn export_distributions(dataset: &Dataset, metric: &str) -> Result<Vec<LevelSummary>> {
    let index = dataset
        .feature_names
        .iter()
        .position(|n| n == metric)
        .or_else(|| feature_index(metric))
        .ok_or_else(|| {
            Error::Core(complexite_core::Error::Validation(format!(
                "unknown metric {metric:?}"
            )))
        })?;

    let mut summaries = Vec::with_capacity(dataset.label_count);
    for level in 0..dataset.label_count {
        let mut values: Vec<f64> = dataset
            .rows
            .iter()
            .zip(&dataset.labels)
            .filter(|(_, &l)| l == level)
            .map(|(row, _)| row[index])
            .collect();
        values.sort_by(f64::total_cmp);
        if values.is_empty() {
            summaries.push(LevelSummary {
                level,
                min: 0.0,
                q1: 0.0,
                median: 0.0,
                q3: 0.0,
                max: 0.0,
                mean: 0.0,
            });
            continue;
        }
        let rank = |p: f64| values[((p * values.len() as f64).ceil().max(1.0) as usize).min(values.len()) - 1];
        summaries.push(LevelSummary {
            level,
            min: values[0],
            q1: rank(0.25),
            median: rank(0.5),
            q3: rank(0.75),
            max: values[values.len() - 1],
            mean: values.iter().sum::<f64>() / values.len() as f64,
        });
    }
    Ok(summaries)
}

/// One blind-test group as loaded from its manifest.
#[derive(Debug, Clone)]
pub struct BlindManifestGroup {
    pub name: String,
    pub expected_min: f64,
    pub expected_max: f64,
    pub documents: Vec<CorpusDocument>,
}

/// Load a blind manifest: CSV with header
/// `path,group,expected_min,expected_max,id`. Groups keep first-appearance
/// order and must use one consistent expected range each.
pub fn load_blind_manifest(manifest_path: &Path) -> Result<Vec<BlindManifestGroup>> {
    let rows = read_manifest(
        manifest_path,
        &["path", "group", "expected_min", "expected_max", "id"],
    )?;
    let base = manifest_path.parent().unwrap_or(Path::new("."));
    let mut groups: Vec<BlindManifestGroup> = Vec::new();
    let mut seen_ids: Vec<String> = Vec::new();

    for (line, row) in rows {
        let parse_level = |field: &str| -> Result<f64> {
            let v: f64 = field.parse().map_err(|_| {
                manifest_error(
                    manifest_path,
                    format!("line {line}: bad expected level {field:?}"),
                )
            })?;
            if !(0.0..=(COMPLEXITY_LEVELS - 1) as f64).contains(&v) {
                return Err(manifest_error(
                    manifest_path,
                    format!("line {line}: expected level {v} out of range"),
                ));
            }
            Ok(v)
        };
        let expected_min = parse_level(&row[2])?;
        let expected_max = parse_level(&row[3])?;
        if expected_min > expected_max {
            return Err(manifest_error(
                manifest_path,
                format!("line {line}: expected_min > expected_max"),
            ));
        }
        let id = row[4].clone();
        if seen_ids.contains(&id) {
            return Err(manifest_error(
                manifest_path,
                format!("line {line}: duplicate id {id:?}"),
            ));
        }
        seen_ids.push(id.clone());
        let doc_path = base.join(&row[0]);
        let text = read_to_string(&doc_path)?;
        if text.trim().is_empty() {
            return Err(manifest_error(
                manifest_path,
                format!("line {line}: document {id:?} is empty"),
            ));
        }
        let document = CorpusDocument {
            id,
            label: 0,
            text,
            path: doc_path,
        };

        match groups.iter_mut().find(|g| g.name == row[1]) {
            Some(group) => {
                if group.expected_min != expected_min || group.expected_max != expected_max {
                    return Err(manifest_error(
                        manifest_path,
                        format!(
                            "line {line}: group {:?} uses inconsistent expected ranges",
                            row[1]
                        ),
                    ));
                }
                group.documents.push(document);
            }
            None => groups.push(BlindManifestGroup {
                name: row[1].clone(),
                expected_min,
                expected_max,
                documents: vec![document],
            }),
        }
    }
    Ok(groups)
}

/// Featurize blind groups into the core blind-test input.
pub fn featurize_blind(
    groups: &[BlindManifestGroup],
    resources: &Resources,
) -> Result<Vec<BlindGroup>> {
    let analyzer = resources.analyzer();
    Ok(groups
        .iter()
        .map(|group| BlindGroup {
            name: group.name.clone(),
            expected_min: group.expected_min,
            expected_max: group.expected_max,
            rows: group
                .documents
                .iter()
                .map(|doc| {
                    let analyzed = analyzer.analyze(&doc.id, &doc.text);
                    compute_feature_vector(&analyzed, &resources.lexicon, &resources.biber_rules)
                        .values()
                        .to_vec()
                })
                .collect(),
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::fs;

    fn write(dir: &Path, name: &str, content: &str) -> PathBuf {
        let path = dir.join(name);
        fs::write(&path, content).unwrap();
        path
    }

    #[test]
    fn loads_a_three_row_manifest() {
        let dir = tempfile::tempdir().unwrap();
        write(dir.path(), "a.txt", "Il pleut.");
        write(dir.path(), "b.txt", "Il vente fort.");
        write(dir.path(), "c.txt", "Le chat dort.");
        let manifest = write(
            dir.path(),
            "manifest.csv",
            "path,label,id\na.txt,0,a\nb.txt,3,b\nc.txt,7,c\n",
        );
        let corpus = load_corpus(&manifest).unwrap();
        assert_eq!(corpus.len(), 3);
        assert_eq!(corpus.documents[1].label, 3);
        assert_eq!(corpus.content_hash.len(), 64);
    }

    #[test]
    fn label_out_of_range_is_rejected() {
        let dir = tempfile::tempdir().unwrap();
        write(dir.path(), "a.txt", "Il pleut.");
        let manifest = write(dir.path(), "manifest.csv", "path,label,id\na.txt,8,a\n");
        let err = load_corpus(&manifest).unwrap_err();
        assert!(err.to_string().contains("out of range"));
    }

    #[test]
    fn duplicate_ids_are_rejected() {
        let dir = tempfile::tempdir().unwrap();
        write(dir.path(), "a.txt", "Il pleut.");
        let manifest = write(
            dir.path(),
            "manifest.csv",
            "path,label,id\na.txt,0,a\na.txt,1,a\n",
        );
        assert!(load_corpus(&manifest).is_err());
    }

    #[test]
    fn missing_document_is_an_io_error() {
        let dir = tempfile::tempdir().unwrap();
        let manifest = write(dir.path(), "manifest.csv", "path,label,id\nnope.txt,0,a\n");
        assert!(matches!(load_corpus(&manifest), Err(Error::Io { .. })));
    }

    #[test]
    fn same_manifest_same_hash() {
        let dir = tempfile::tempdir().unwrap();
        write(dir.path(), "a.txt", "Il pleut.");
        let manifest = write(dir.path(), "manifest.csv", "path,label,id\na.txt,0,a\n");
        let one = load_corpus(&manifest).unwrap();
        let two = load_corpus(&manifest).unwrap();
        assert_eq!(one.content_hash, two.content_hash);
    }

    #[test]
    fn bom_is_stripped() {
        let dir = tempfile::tempdir().unwrap();
        write(dir.path(), "a.txt", "\u{feff}Il pleut.");
        let manifest = write(dir.path(), "manifest.csv", "path,label,id\na.txt,0,a\n");
        let corpus = load_corpus(&manifest).unwrap();
        assert!(corpus.documents[0].text.starts_with("Il"));
    }

    #[test]
    fn distribution_summaries_are_order_invariant() {
        let mut data = Dataset::new(vec![String::from("m")], 2);
        for (i, v) in [3.0, 1.0, 2.0, 9.0].iter().enumerate() {
            data.push(format!("d{i}"), vec![*v], (i % 2) as usize)
                .unwrap();
        }
        let mut reversed = Dataset::new(vec![String::from("m")], 2);
        for (i, v) in [9.0, 2.0, 1.0, 3.0].iter().enumerate() {
            reversed
                .push(format!("r{i}"), vec![*v], ((i + 1) % 2) as usize)
                .unwrap();
        }
        let a = export_distributions(&data, "m").unwrap();
        let b = export_distributions(&reversed, "m").unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn constant_metric_collapses_the_summary() {
        let mut data = Dataset::new(vec![String::from("m")], 1);
        for i in 0..5 {
            data.push(format!("d{i}"), vec![4.2], 0).unwrap();
        }
        let summary = &export_distributions(&data, "m").unwrap()[0];
        assert_eq!(summary.min, 4.2);
        assert_eq!(summary.q1, 4.2);
        assert_eq!(summary.median, 4.2);
        assert_eq!(summary.q3, 4.2);
        assert_eq!(summary.max, 4.2);
    }

    #[test]
    fn unknown_metric_is_rejected() {
        let data = Dataset::new(vec![String::from("m")], 1);
        assert!(export_distributions(&data, "nope").is_err());
    }

    #[test]
    fn blind_manifest_groups_and_validates() {
        let dir = tempfile::tempdir().unwrap();
        write(dir.path(), "a.txt", "Il pleut.");
        write(dir.path(), "b.txt", "Il vente.");
        let manifest = write(
            dir.path(),
            "blind.csv",
            "path,group,expected_min,expected_max,id\n\
             a.txt,tweets,0,1,t1\n\
             b.txt,tweets,0,1,t2\n\
             a.txt,laws,7,7,l1\n",
        );
        let groups = load_blind_manifest(&manifest).unwrap();
        assert_eq!(groups.len(), 2);
        assert_eq!(groups[0].documents.len(), 2);
        assert_eq!(groups[1].expected_min, 7.0);

        let bad = write(
            dir.path(),
            "bad.csv",
            "path,group,expected_min,expected_max,id\n\
             a.txt,tweets,0,1,t1\n\
             b.txt,tweets,0,2,t2\n",
        );
        assert!(load_blind_manifest(&bad).is_err());
    }
}
