//! Error rates, repeated random-split cross-validation and report tables.

use std::fmt::Write as _;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::corpus::{Corpus, Example};
use crate::error::{Error, Result};
use crate::model::{Classifier, Model};
use crate::rules::{learn_rules, RuleParams};
use crate::schema::{Classification, FeatureSet};
use crate::seed::derive_seed;
use crate::tree::{induce, TreeParams};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct EvalResult {
    pub n: usize,
    /// Gold discourse predicted sentential.
    pub miscls_discourse: usize,
    /// Gold sentential predicted discourse.
    pub miscls_sentential: usize,
}

impl EvalResult {
    pub fn errors(&self) -> usize {
        self.miscls_discourse + self.miscls_sentential
    }

    pub fn error(&self) -> f64 {
        if self.n == 0 {
            0.0
        } else {
            self.errors() as f64 / self.n as f64
        }
    }

    pub fn record(&mut self, gold: Classification, predicted: Classification) {
        self.n += 1;
        match (gold, predicted) {
            (Classification::Discourse, Classification::Sentential) => self.miscls_discourse += 1,
            (Classification::Sentential, Classification::Discourse) => self.miscls_sentential += 1,
            _ => {}
        }
    }
}

/// Misclassification counts of `model` over a labeled corpus. The model
/// only ever sees the unlabeled instances.
pub fn error_rate(model: &dyn Classifier, corpus: &Corpus) -> Result<EvalResult> {
    error_rate_on(model, &corpus.examples)
}

pub fn error_rate_on(model: &dyn Classifier, examples: &[Example]) -> Result<EvalResult> {
    if examples.is_empty() {
        return Err(Error::EmptyCorpus);
    }
    let mut result = EvalResult::default();
    for (index, e) in examples.iter().enumerate() {
        let gold = e.class().ok_or(Error::Unlabeled { index })?;
        result.record(gold, model.classify(&e.instance)?);
    }
    Ok(result)
}

/// A training procedure usable by [`cross_validate`].
pub trait Learner: Sync {
    fn name(&self) -> &str;
    fn fit(&self, train: &[Example], set: &FeatureSet) -> Result<Box<dyn Classifier>>;
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum LearnerKind {
    Tree(TreeParams),
    Rules(RuleParams),
}

impl LearnerKind {
    pub fn tree() -> Self {
        LearnerKind::Tree(TreeParams::default())
    }

    pub fn rules() -> Self {
        LearnerKind::Rules(RuleParams::default())
    }

    pub fn train(&self, train: &[Example], set: &FeatureSet) -> Result<Model> {
        match self {
            LearnerKind::Tree(p) => induce(train, set, p).map(Model::Tree),
            LearnerKind::Rules(p) => learn_rules(train, set, p).map(Model::Rules),
        }
    }
}

impl Learner for LearnerKind {
    fn name(&self) -> &str {
        match self {
            LearnerKind::Tree(_) => "tree",
            LearnerKind::Rules(_) => "rules",
        }
    }

    fn fit(&self, train: &[Example], set: &FeatureSet) -> Result<Box<dyn Classifier>> {
        Ok(Box::new(self.train(train, set)?))
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CvConfig {
    pub runs: usize,
    pub train_fraction: f64,
    pub seed: u64,
}

impl CvConfig {
    pub fn new(seed: u64) -> Self {
        CvConfig {
            runs: 10,
            train_fraction: 0.9,
            seed,
        }
    }
}

/// Train/test index split for one run: a permutation drawn from the run's own
/// seed, with the first `ceil(train_fraction * n)` positions training.
pub fn split_indices(n: usize, config: &CvConfig, run: usize) -> (Vec<usize>, Vec<usize>) {
    let mut idx: Vec<usize> = (0..n).collect();
    idx.shuffle(&mut ChaCha8Rng::seed_from_u64(derive_seed(config.seed, run as u64)));
    let n_train = ((config.train_fraction * n as f64).ceil() as usize).min(n);
    let test = idx.split_off(n_train);
    (idx, test)
}

/// One row of a cross-validation report.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CvRow {
    pub set: String,
    pub learner: String,
    /// Mean test error as a fraction.
    pub mean_error: f64,
    /// Standard error of the mean, as a fraction.
    pub stderr: f64,
    /// Test error of each run, in run order.
    pub runs: Vec<f64>,
}

impl CvRow {
    pub fn from_runs(set: impl Into<String>, learner: impl Into<String>, runs: Vec<f64>) -> Self {
        let (mean_error, stderr) = mean_and_stderr(&runs);
        CvRow {
            set: set.into(),
            learner: learner.into(),
            mean_error,
            stderr,
            runs,
        }
    }

    pub fn mean_percent(&self) -> f64 {
        100.0 * self.mean_error
    }

    pub fn stderr_percent(&self) -> f64 {
        100.0 * self.stderr
    }
}

/// Mean and sample standard deviation divided by the square root of the
/// count. A single value has zero standard error.
pub fn mean_and_stderr(values: &[f64]) -> (f64, f64) {
    if values.is_empty() {
        return (0.0, 0.0);
    }
    let n = values.len() as f64;
    let mean = values.iter().sum::<f64>() / n;
    if values.len() < 2 {
        return (mean, 0.0);
    }
    let var = values.iter().map(|v| (v - mean).powi(2)).sum::<f64>() / (n - 1.0);
    (mean, var.sqrt() / n.sqrt())
}

fn run_once(corpus: &Corpus, learner: &dyn Learner, set: &FeatureSet, config: &CvConfig, run: usize) -> Result<f64> {
    let (train_idx, test_idx) = split_indices(corpus.len(), config, run);
    let train = train_idx
        .iter()
        .map(|&i| corpus.examples[i].project(set))
        .collect::<Result<Vec<_>>>()?;
    let model = learner.fit(&train, set)?;
    let mut result = EvalResult::default();
    for &i in &test_idx {
        let e = &corpus.examples[i];
        let gold = e.class().ok_or(Error::Unlabeled { index: i })?;
        let unlabeled = e.instance.project(set)?;
        result.record(gold, model.classify(&unlabeled)?);
    }
    Ok(result.error())
}

/// Repeated random-split cross-validation. Every run trains on the projected
/// training part and is scored on the disjoint test part; each run's split
/// depends only on `(config.seed, run)`, so runs may execute in any order or
/// concurrently.
pub fn cross_validate(corpus: &Corpus, learner: &dyn Learner, set: &FeatureSet, config: &CvConfig) -> Result<CvRow> {
    let n = corpus.len();
    let n_train = (config.train_fraction * n as f64).ceil() as usize;
    if config.runs == 0 || n_train == 0 || n_train >= n {
        return Err(Error::TooFewExamples(n));
    }
    let errors = run_all(config.runs, |run| run_once(corpus, learner, set, config, run))?;
    Ok(CvRow::from_runs(set.name(), learner.name(), errors))
}

#[cfg(feature = "parallel")]
fn run_all(runs: usize, f: impl Fn(usize) -> Result<f64> + Sync) -> Result<Vec<f64>> {
    use rayon::prelude::*;
    (0..runs).into_par_iter().map(&f).collect()
}

#[cfg(not(feature = "parallel"))]
fn run_all(runs: usize, f: impl Fn(usize) -> Result<f64> + Sync) -> Result<Vec<f64>> {
    (0..runs).map(f).collect()
}

#[derive(Debug, Clone, PartialEq, Default, Serialize, Deserialize)]
pub struct CvReport {
    pub rows: Vec<CvRow>,
}

impl CvReport {
    /// Rows sorted by catalog position (unknown sets last, by name), then
    /// tree before rules.
    pub fn sorted(&self) -> Vec<&CvRow> {
        let mut rows: Vec<&CvRow> = self.rows.iter().collect();
        rows.sort_by_key(|r| {
            let pos = FeatureSet::lookup(&r.set)
                .ok()
                .and_then(|s| s.catalog_position())
                .unwrap_or(usize::MAX);
            let learner_rank = match r.learner.as_str() {
                "tree" => 0,
                "rules" => 1,
                _ => 2,
            };
            (pos, r.set.clone(), learner_rank, r.learner.clone())
        });
        rows
    }

    /// One JSON object per line, in the same order as the table.
    pub fn to_json_lines(&self) -> String {
        let mut out = String::new();
        for row in self.sorted() {
            out.push_str(&serde_json::to_string(row).expect("rows serialize"));
            out.push('\n');
        }
        out
    }
}

/// Fixed-width table: set, learner, mean error in whole percent, standard
/// error in percent to one decimal.
pub fn render_report(report: &CvReport) -> String {
    let rows = report.sorted();
    let set_w = rows.iter().map(|r| r.set.len()).chain([3]).max().unwrap_or(3);
    let learner_w = rows.iter().map(|r| r.learner.len()).chain([7]).max().unwrap_or(7);
    let mut out = String::new();
    let _ = writeln!(
        out,
        "{:<set_w$}  {:<learner_w$}  {:>5}  {:>7}",
        "set", "learner", "mean%", "stderr%"
    );
    for r in rows {
        let _ = writeln!(
            out,
            "{:<set_w$}  {:<learner_w$}  {:>5}  {:>7.1}",
            r.set,
            r.learner,
            r.mean_percent().round() as i64,
            r.stderr_percent()
        );
    }
    out
}
