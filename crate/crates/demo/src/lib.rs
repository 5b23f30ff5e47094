//! Browser bindings. Each exported function takes plain strings or numbers
//! and returns a JSON string; errors become thrown JS strings.

use std::collections::BTreeMap;

use serde::Serialize;
use wasm_bindgen::prelude::*;

use cuephrase::corpus::tone::{validate_tone_sequence, RejectAt, ToneSequence, Verdict};
use cuephrase::corpus::{generate, Labeler, SyntheticSpec};
use cuephrase::eval::{cross_validate, CvConfig, LearnerKind};
use cuephrase::schema::parse_value;
use cuephrase::{BaselineModel, FeatureId, FeatureSet, Instance};

#[derive(Serialize)]
struct Prediction {
    class: &'static str,
    line: String,
}

#[derive(Serialize)]
struct ToneReport {
    accepted: bool,
    /// Zero-based index of the first offending tone; `null` when the
    /// sequence ends too early or is accepted.
    reject_index: Option<usize>,
    premature_end: bool,
}

#[derive(Serialize)]
struct Experiment {
    set: String,
    learner: String,
    discourse: usize,
    sentential: usize,
    mean_error: f64,
    stderr: f64,
    runs: Vec<f64>,
    model: String,
}

fn to_json<T: Serialize>(v: &T) -> Result<String, String> {
    serde_json::to_string(v).map_err(|e| e.to_string())
}

/// Runs both hand-built models on one token. `features` is a JSON object
/// mapping column names to their textual values; abstracted columns are
/// derived when omitted.
pub fn classify_baselines(features: &str) -> Result<String, String> {
    let raw: BTreeMap<String, String> = serde_json::from_str(features).map_err(|e| e.to_string())?;
    let mut x = Instance::new();
    for (column, text) in &raw {
        let f = FeatureId::from_column(column).ok_or_else(|| format!("unknown feature {column}"))?;
        x.set(f, parse_value(f, text).map_err(|e| e.to_string())?);
    }
    x.fill_derived();
    let mut out = BTreeMap::new();
    for model in [BaselineModel::Prosodic, BaselineModel::Textual] {
        let p = model.predict(&x).map_err(|e| e.to_string())?;
        out.insert(
            model.name(),
            Prediction {
                class: p.class.name(),
                line: p.line.to_string(),
            },
        );
    }
    to_json(&out)
}

/// Checks a whitespace-separated tone sequence such as `H* L- L%`.
pub fn check_tones(text: &str) -> Result<String, String> {
    let seq: ToneSequence = text.parse().map_err(|e: cuephrase::Error| e.to_string())?;
    let report = match validate_tone_sequence(&seq) {
        Verdict::Accept => ToneReport {
            accepted: true,
            reject_index: None,
            premature_end: false,
        },
        Verdict::Reject(RejectAt::Index(i)) => ToneReport {
            accepted: false,
            reject_index: Some(i),
            premature_end: false,
        },
        Verdict::Reject(RejectAt::End) => ToneReport {
            accepted: false,
            reject_index: None,
            premature_end: true,
        },
    };
    to_json(&report)
}

/// Generates a corpus labeled by the prosodic model, cross-validates one
/// learner on one feature set and returns the model trained on everything.
pub fn run_experiment(n: usize, noise: f64, seed: u64, set: &str, learner: &str) -> Result<String, String> {
    let set = FeatureSet::lookup(set).map_err(|e| e.to_string())?;
    let learner = match learner {
        "tree" => LearnerKind::tree(),
        "rules" => LearnerKind::rules(),
        other => return Err(format!("unknown learner {other}")),
    };
    let spec = SyntheticSpec::new(n, Labeler::Baseline(BaselineModel::Prosodic), noise, seed);
    let corpus = generate(&spec).map_err(|e| e.to_string())?;
    let row = cross_validate(&corpus, &learner, &set, &CvConfig::new(seed)).map_err(|e| e.to_string())?;
    let projected = corpus
        .iter()
        .map(|e| e.project(&set))
        .collect::<cuephrase::Result<Vec<_>>>()
        .map_err(|e| e.to_string())?;
    let model = learner.train(&projected, &set).map_err(|e| e.to_string())?;
    let (discourse, sentential) = corpus.class_counts();
    to_json(&Experiment {
        set: row.set,
        learner: row.learner,
        discourse,
        sentential,
        mean_error: row.mean_error,
        stderr: row.stderr,
        runs: row.runs,
        model: model.explain(),
    })
}

/// Catalog names in display order, as a JSON array.
pub fn feature_sets() -> String {
    let names: Vec<&str> = cuephrase::schema::catalog().iter().map(|s| s.name()).collect();
    serde_json::to_string(&names).unwrap_or_default()
}

#[wasm_bindgen(js_name = classifyBaselines)]
pub fn classify_baselines_js(features: &str) -> Result<String, JsValue> {
    classify_baselines(features).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen(js_name = checkTones)]
pub fn check_tones_js(text: &str) -> Result<String, JsValue> {
    check_tones(text).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen(js_name = runExperiment)]
pub fn run_experiment_js(n: u32, noise: f64, seed: u32, set: &str, learner: &str) -> Result<String, JsValue> {
    run_experiment(n as usize, noise, u64::from(seed), set, learner).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen(js_name = featureSets)]
pub fn feature_sets_js() -> String {
    feature_sets()
}
