//! Cue-phrase classification toolkit.
//!
//! Tokens such as "now" or "well" are described by prosodic, textual and
//! lexical features and classified as discourse or sentential uses. The crate
//! provides the feature schema and corpus format, three fixed reference
//! classifiers, a decision-tree learner, an ordered rule-list learner, and a
//! repeated 90/10 cross-validation harness.

pub mod baselines;
pub mod corpus;
pub mod error;
pub mod eval;
pub mod model;
pub mod rules;
pub mod schema;
mod seed;
pub mod tree;

pub use baselines::{BaselineModel, BaselinePrediction, FiredLine};
pub use corpus::{Corpus, Example, Instance, Label, LabelKind};
pub use error::{Error, Result};
pub use eval::{
    cross_validate, error_rate, render_report, CvConfig, CvReport, CvRow, EvalResult, Learner, LearnerKind,
};
pub use model::{Classifier, Model};
pub use rules::{learn_rules, RuleList, RuleParams};
pub use schema::{Classification, FeatureId, FeatureSet, FeatureValue, JudgeLabel};
pub use seed::derive_seed;
pub use tree::{induce, TreeNode, TreeParams};
