use thiserror::Error;

use crate::schema::FeatureId;

#[derive(Debug, Error)]
pub enum Error {
    #[error("unknown feature `{0}`")]
    UnknownFeature(String),
    #[error("`{text}` is not a valid value for {feature}")]
    UnknownTag { feature: FeatureId, text: String },
    #[error("{feature} expects an integer, got `{text}`")]
    NumericExpected { feature: FeatureId, text: String },
    #[error("{feature} must be at least 1")]
    NonPositive { feature: FeatureId },
    #[error("NA is not allowed for {feature}")]
    NaNotAllowed { feature: FeatureId },
    #[error("unknown class label `{0}`")]
    UnknownClass(String),
    #[error("feature set is empty")]
    EmptyFeatureSet,
    #[error("unknown feature set `{0}`")]
    UnknownFeatureSet(String),
    #[error("example has no value for {0}")]
    MissingFeature(FeatureId),

    #[error("line {line}, column {column}: {reason}")]
    Parse { line: usize, column: usize, reason: String },
    #[error("line {line}: abstract feature disagrees with its base feature")]
    AbstractionMismatch { line: usize },
    #[error("example {index} carries no judge labels")]
    MissingJudges { index: usize },
    #[error("example {index} is not labeled")]
    Unlabeled { index: usize },
    #[error("invalid synthetic corpus spec: {0}")]
    InvalidSpec(String),

    #[error("class distribution is empty")]
    EmptyDistribution,
    #[error("child counts do not add up to the parent counts")]
    PartitionMismatch,
    #[error("corpus is empty")]
    EmptyCorpus,
    #[error("rule covers no examples before refinement")]
    ZeroCoverageBefore,
    #[error("grow set has no examples of the target class")]
    NoTargetExamples,
    #[error("too few examples ({0}) for a nonempty train/test split")]
    TooFewExamples(usize),
    #[error("invalid parameter: {0}")]
    InvalidParams(String),
    #[error("model line {line}: {reason}")]
    ModelParse { line: usize, reason: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
