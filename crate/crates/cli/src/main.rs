//! `complexite`: analyze French documents, train and inspect complexity
//! classifiers.
//!
//! Exit codes: 0 success, 1 data error, 2 usage error.

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use complexite::corpus::{
    export_distributions, featurize_blind, featurize_corpus, load_blind_manifest, load_corpus,
    LevelSummary,
};
use complexite::model_io::{load_model, save_model};
use complexite::resources::{ResourcePaths, Resources};
use complexite::{Error, Result};
use complexite_core::classify::{
    blind_test, default_grid, evaluate, explain, grid_search_cv, BlindReport, EvaluationReport,
    Explanation, GridSearchReport, ModelKind, TrainedModel,
};
use complexite_core::metrics::{compute_feature_vector, FeatureVector, FEATURE_NAMES};

#[derive(Parser)]
#[command(
    name = "complexite",
    version,
    about = "Measure and classify the complexity of French documents"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Frequency lexicon (TSV: form, lemma, freq_per_million, pos).
    #[arg(long, global = true, default_value = "data/resources/lexicon.tsv")]
    lexicon: PathBuf,

    /// Simple-word list (one word per line).
    #[arg(long, global = true, default_value = "data/resources/mots-simples.txt")]
    simple_words: PathBuf,

    /// Segmentation rules file; omit for the built-in French rules.
    #[arg(long, global = true)]
    seg_rules: Option<PathBuf>,

    /// Register feature rules file; omit for the built-in French rules.
    #[arg(long, global = true)]
    biber_rules: Option<PathBuf>,

    /// Seed for all randomness: fold shuffling, bootstraps, initializations.
    #[arg(long, global = true, default_value_t = 42)]
    seed: u64,

    /// Emit machine-readable JSON instead of text/CSV.
    #[arg(long, global = true)]
    json: bool,

    /// Write the primary output here instead of stdout (for `train`: the
    /// model file, default model.json).
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    /// Log per-document featurization timings to stderr.
    #[arg(long, short = 'v', global = true)]
    verbose: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Compute the feature vector of each text file.
    Analyze { files: Vec<PathBuf> },
    /// Grid-search with cross-validation, then fit a model on the whole
    /// corpus and write it out.
    Train {
        #[arg(long, value_enum)]
        model: ModelChoice,
        /// Corpus manifest CSV (path,label,id).
        #[arg(long)]
        manifest: PathBuf,
        #[arg(long, default_value_t = 5)]
        folds: usize,
    },
    /// Evaluate a trained model against a labeled manifest.
    Evaluate {
        /// Trained model file.
        #[arg(long)]
        model: PathBuf,
        #[arg(long)]
        manifest: PathBuf,
    },
    /// Report the feature weights or importances a model learned.
    Explain {
        #[arg(long)]
        model: PathBuf,
    },
    /// Classify blind-test groups and correlate with expected levels.
    Blind {
        #[arg(long)]
        model: PathBuf,
        /// Blind manifest CSV (path,group,expected_min,expected_max,id).
        #[arg(long)]
        manifest: PathBuf,
    },
    /// Export the per-level distribution of one metric as CSV.
    Distributions {
        #[arg(long)]
        manifest: PathBuf,
        /// Metric name from the feature schema, e.g. KM_score.
        #[arg(long)]
        metric: String,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum ModelChoice {
    Baseline,
    Dt,
    Rf,
    Lr,
    Nb,
}

impl ModelChoice {
    fn kind(self) -> ModelKind {
        match self {
            ModelChoice::Baseline => ModelKind::Baseline,
            ModelChoice::Dt => ModelKind::DecisionTree,
            ModelChoice::Rf => ModelKind::RandomForest,
            ModelChoice::Lr => ModelKind::LogisticRegression,
            ModelChoice::Nb => ModelKind::NaiveBayes,
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode> {
    let paths = ResourcePaths {
        lexicon: cli.lexicon.clone(),
        simple_words: cli.simple_words.clone(),
        seg_rules: cli.seg_rules.clone(),
        biber_rules: cli.biber_rules.clone(),
    };
    match &cli.command {
        Command::Analyze { files } => cmd_analyze(&cli, &paths, files),
        Command::Train {
            model,
            manifest,
            folds,
        } => cmd_train(&cli, &paths, model.kind(), manifest, *folds),
        Command::Evaluate { model, manifest } => cmd_evaluate(&cli, &paths, model, manifest),
        Command::Explain { model } => cmd_explain(&cli, model),
        Command::Blind { model, manifest } => cmd_blind(&cli, &paths, model, manifest),
        Command::Distributions { manifest, metric } => {
            cmd_distributions(&cli, &paths, manifest, metric)
        }
    }
}

fn cmd_analyze(cli: &Cli, paths: &ResourcePaths, files: &[PathBuf]) -> Result<ExitCode> {
    let resources = Resources::load(paths)?;
    let analyzer = resources.analyzer();

    let mut vectors: Vec<FeatureVector> = Vec::new();
    let mut failures: Vec<(PathBuf, Error)> = Vec::new();
    for file in files {
        match complexite::read_file(file) {
            Ok(text) => {
                let start = std::time::Instant::now();
                let id = file.display().to_string();
                let doc = analyzer.analyze(&id, &text);
                vectors.push(compute_feature_vector(
                    &doc,
                    &resources.lexicon,
                    &resources.biber_rules,
                ));
                if cli.verbose {
                    eprintln!("{id}: {:?}", start.elapsed());
                }
            }
            Err(e) => failures.push((file.clone(), e)),
        }
    }

    let output = if cli.json {
        to_json(&vectors)?
    } else {
        feature_csv(&vectors)
    };
    emit(cli, &output)?;

    for (path, error) in &failures {
        eprintln!("error: {}: {error}", path.display());
    }
    Ok(if failures.is_empty() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

#[derive(Serialize)]
struct TrainReport {
    kind: &'static str,
    documents: usize,
    folds: usize,
    seed: u64,
    corpus_hash: String,
    cv: GridSearchReport,
    model_path: String,
}

fn cmd_train(
    cli: &Cli,
    paths: &ResourcePaths,
    kind: ModelKind,
    manifest: &PathBuf,
    folds: usize,
) -> Result<ExitCode> {
    let resources = Resources::load(paths)?;
    let corpus = load_corpus(manifest)?;
    let (dataset, timings) = featurize_corpus(&corpus, &resources)?;
    log_timings(cli, &timings);

    let grid = default_grid(kind, cli.seed);
    let report = grid_search_cv(&dataset, &grid, folds, cli.seed)?;
    let model = TrainedModel::fit(&dataset, &report.best().params)?;

    let model_path = cli.out.clone().unwrap_or_else(|| PathBuf::from("model.json"));
    save_model(&model_path, &model)?;

    let train_report = TrainReport {
        kind: kind.name(),
        documents: dataset.len(),
        folds: report.folds,
        seed: cli.seed,
        corpus_hash: corpus.content_hash,
        cv: report,
        model_path: model_path.display().to_string(),
    };
    if cli.json {
        println!("{}", to_json(&train_report)?);
    } else {
        let best = train_report.cv.best();
        println!(
            "trained {} on {} documents ({}-fold cv, seed {})",
            train_report.kind, train_report.documents, train_report.folds, train_report.seed
        );
        for warning in &train_report.cv.warnings {
            println!("warning: {warning}");
        }
        println!("best configuration: {}", to_compact_json(&best.params)?);
        println!(
            "cv accuracy {:.4}, cv rmse {:.4}",
            best.mean_accuracy, best.mean_rmse
        );
        println!("model written to {}", train_report.model_path);
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_evaluate(
    cli: &Cli,
    paths: &ResourcePaths,
    model_path: &PathBuf,
    manifest: &PathBuf,
) -> Result<ExitCode> {
    let model = load_model(model_path)?;
    let resources = Resources::load(paths)?;
    let corpus = load_corpus(manifest)?;
    let (dataset, timings) = featurize_corpus(&corpus, &resources)?;
    log_timings(cli, &timings);

    let report = evaluate(&model, &dataset)?;
    if cli.json {
        emit(cli, &to_json(&report)?)?;
    } else {
        emit(cli, &human_evaluation(&report))?;
    }
    Ok(ExitCode::SUCCESS)
}

fn human_evaluation(report: &EvaluationReport) -> String {
    let mut text = format!(
        "documents {}\naccuracy {:.4}\nrmse {:.4}\n",
        report.per_document.len(),
        report.accuracy,
        report.rmse
    );
    match report.spearman_to_expected {
        Some(rho) => text.push_str(&format!("spearman {rho:.4}\n")),
        None => text.push_str("spearman undefined (zero variance)\n"),
    }
    for doc in &report.per_document {
        text.push_str(&format!(
            "{}\ttrue {}\tpredicted {}\n",
            doc.id, doc.true_label, doc.predicted_label
        ));
    }
    text
}

fn cmd_explain(cli: &Cli, model_path: &PathBuf) -> Result<ExitCode> {
    let model = load_model(model_path)?;
    let explanation = explain(&model)?;
    if cli.json {
        emit(cli, &to_json(&explanation)?)?;
    } else {
        emit(cli, &human_explanation(&explanation))?;
    }
    Ok(ExitCode::SUCCESS)
}

fn human_explanation(explanation: &Explanation) -> String {
    let mut text = String::new();
    match explanation {
        Explanation::Thresholds { bands } => {
            text.push_str("reading-ease threshold bands:\n");
            for band in bands {
                text.push_str(&format!(
                    "  score >= {:>5}: level {}\n",
                    band.min_score, band.label
                ));
            }
        }
        Explanation::Coefficients { classes } => {
            for class in classes {
                text.push_str(&format!(
                    "level {}: strong positive [{}], strong negative [{}]\n",
                    class.label,
                    class.strong_positive.join(", "),
                    class.strong_negative.join(", ")
                ));
            }
        }
        Explanation::ConditionalLogProbs { classes } => {
            for class in classes {
                text.push_str(&format!(
                    "level {}: high [{}], low [{}]\n",
                    class.label,
                    class.high.join(", "),
                    class.low.join(", ")
                ));
            }
        }
        Explanation::Importances { features } => {
            let mut sorted: Vec<_> = features.iter().filter(|f| f.value > 0.0).collect();
            sorted.sort_by(|a, b| b.value.total_cmp(&a.value));
            text.push_str(&format!("{} features used\n", sorted.len()));
            for feature in sorted {
                text.push_str(&format!("  {:<20} {:.4}\n", feature.feature, feature.value));
            }
        }
    }
    text
}

fn cmd_blind(
    cli: &Cli,
    paths: &ResourcePaths,
    model_path: &PathBuf,
    manifest: &PathBuf,
) -> Result<ExitCode> {
    let model = load_model(model_path)?;
    let resources = Resources::load(paths)?;
    let manifest_groups = load_blind_manifest(manifest)?;
    let groups = featurize_blind(&manifest_groups, &resources)?;
    let report = blind_test(&model, &groups)?;
    if cli.json {
        emit(cli, &to_json(&report)?)?;
    } else {
        emit(cli, &human_blind(&report))?;
    }
    Ok(ExitCode::SUCCESS)
}

fn human_blind(report: &BlindReport) -> String {
    let mut text = String::new();
    for group in &report.groups {
        text.push_str(&format!(
            "{}\texpected {}-{}\tmean prediction {:.2}\t({} documents)\n",
            group.name,
            group.expected_min,
            group.expected_max,
            group.mean_prediction,
            group.document_count
        ));
    }
    if report.degenerate {
        text.push_str("correlation undefined (constant predictions), reported as 0\n");
    } else {
        text.push_str(&format!(
            "pearson correlation to expected levels {:.4}\n",
            report.pearson_to_expected
        ));
    }
    text
}

fn cmd_distributions(
    cli: &Cli,
    paths: &ResourcePaths,
    manifest: &PathBuf,
    metric: &str,
) -> Result<ExitCode> {
    let resources = Resources::load(paths)?;
    let corpus = load_corpus(manifest)?;
    let (dataset, timings) = featurize_corpus(&corpus, &resources)?;
    log_timings(cli, &timings);

    let summaries = export_distributions(&dataset, metric)?;
    if cli.json {
        emit(cli, &to_json(&summaries)?)?;
    } else {
        emit(cli, &distribution_csv(&summaries))?;
    }
    Ok(ExitCode::SUCCESS)
}

fn distribution_csv(summaries: &[LevelSummary]) -> String {
    let mut csv = String::from("level,min,q1,median,q3,max,mean\n");
    for s in summaries {
        csv.push_str(&format!(
            "{},{},{},{},{},{},{}\n",
            s.level, s.min, s.q1, s.median, s.q3, s.max, s.mean
        ));
    }
    csv
}

fn feature_csv(vectors: &[FeatureVector]) -> String {
    let mut csv = String::from("document_id");
    for name in FEATURE_NAMES {
        csv.push(',');
        csv.push_str(name);
    }
    csv.push('\n');
    for vector in vectors {
        csv.push_str(&csv_escape(&vector.document_id));
        for (_, value) in vector.iter() {
            csv.push(',');
            csv.push_str(&value.to_string());
        }
        csv.push('\n');
    }
    csv
}

fn csv_escape(field: &str) -> String {
    if field.contains([',', '"', '\n']) {
        format!("\"{}\"", field.replace('"', "\"\""))
    } else {
        field.to_string()
    }
}

fn to_json<T: Serialize>(value: &T) -> Result<String> {
    serde_json::to_string_pretty(value).map_err(|e| Error::Other(format!("serializing: {e}")))
}

fn to_compact_json<T: Serialize>(value: &T) -> Result<String> {
    serde_json::to_string(value).map_err(|e| Error::Other(format!("serializing: {e}")))
}

fn log_timings(cli: &Cli, timings: &[(String, std::time::Duration)]) {
    if cli.verbose {
        for (id, elapsed) in timings {
            eprintln!("{id}: {elapsed:?}");
        }
    }
}

/// Write to `--out` when given, else to stdout.
fn emit(cli: &Cli, content: &str) -> Result<()> {
    match &cli.out {
        Some(path) => std::fs::write(path, content).map_err(|source| Error::Io {
            path: path.clone(),
            source,
        }),
        None => {
            let stdout = std::io::stdout();
            let mut lock = stdout.lock();
            lock.write_all(content.as_bytes())
                .and_then(|_| {
                    if content.ends_with('\n') || content.is_empty() {
                        Ok(())
                    } else {
                        lock.write_all(b"\n")
                    }
                })
                .map_err(|source| Error::Io {
                    path: PathBuf::from("<stdout>"),
                    source,
                })
        }
    }
}
