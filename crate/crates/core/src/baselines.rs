//! The three hand-built reference classifiers: the prosodic model, the
//! textual model and the majority-class model.

use std::fmt;
use std::str::FromStr;

use crate::corpus::Instance;
use crate::error::{Error, Result};
use crate::schema::{Classification, FeatureId, FeatureValue};

/// Which case of a reference model produced a prediction.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FiredLine {
    /// Numbered line of the reference model listing.
    Line(u8),
    Majority,
    /// A value the listing does not cover; resolved by fixed policy.
    Fallback,
}

impl fmt::Display for FiredLine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FiredLine::Line(n) => write!(f, "{n}"),
            FiredLine::Majority => f.write_str("majority"),
            FiredLine::Fallback => f.write_str("fallback"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BaselinePrediction {
    pub class: Classification,
    pub line: FiredLine,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BaselineModel {
    Prosodic,
    Textual,
    Majority,
}

impl BaselineModel {
    pub const ALL: [BaselineModel; 3] = [BaselineModel::Prosodic, BaselineModel::Textual, BaselineModel::Majority];

    pub fn name(self) -> &'static str {
        match self {
            BaselineModel::Prosodic => "prosodic",
            BaselineModel::Textual => "textual",
            BaselineModel::Majority => "majority",
        }
    }

    /// Features the model reads.
    pub fn features(self) -> &'static [FeatureId] {
        match self {
            BaselineModel::Prosodic => &[
                FeatureId::IntermediatePosition,
                FeatureId::IntermediateComposition,
                FeatureId::Accent,
            ],
            BaselineModel::Textual => &[FeatureId::OrthPrecedingAbs],
            BaselineModel::Majority => &[],
        }
    }

    pub fn predict(self, x: &Instance) -> Result<BaselinePrediction> {
        match self {
            BaselineModel::Prosodic => prosodic_model(x),
            BaselineModel::Textual => textual_model(x),
            BaselineModel::Majority => Ok(majority_model(x)),
        }
    }
}

impl fmt::Display for BaselineModel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for BaselineModel {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        BaselineModel::ALL
            .into_iter()
            .find(|m| m.name() == s)
            .ok_or_else(|| Error::InvalidParams(format!("unknown baseline model `{s}`")))
    }
}

fn predicted(class: Classification, line: FiredLine) -> BaselinePrediction {
    BaselinePrediction { class, line }
}

/// Composition of the intermediate phrase decides first ("alone" means the
/// phrase holds only the token or only cue phrases); otherwise a token first
/// in its intermediate phrase is classified by its accent, and any later
/// token is sentential.
pub fn prosodic_model(x: &Instance) -> Result<BaselinePrediction> {
    use Classification::*;
    use FiredLine::*;
    let composition = x.require(FeatureId::IntermediateComposition)?;
    if matches!(composition, FeatureValue::Symbolic("only" | "only_cue")) {
        return Ok(predicted(Discourse, Line(1)));
    }
    let position = x.require(FeatureId::IntermediatePosition)?;
    if position != FeatureValue::Numeric(1) {
        return Ok(predicted(Sentential, Line(8)));
    }
    let FeatureValue::Symbolic(accent) = x.require(FeatureId::Accent)? else {
        return Ok(predicted(Sentential, Fallback));
    };
    Ok(match accent {
        "deaccented" => predicted(Discourse, Line(4)),
        "L*" => predicted(Discourse, Line(5)),
        "H*" => predicted(Sentential, Line(6)),
        "L*+H" | "L+H*" | "H*+L" | "H+L*" => predicted(Sentential, Line(7)),
        _ => predicted(Sentential, Fallback),
    })
}

/// Preceding punctuation marks a discourse use. `NA` counts as discourse.
pub fn textual_model(x: &Instance) -> Result<BaselinePrediction> {
    Ok(match x.require(FeatureId::OrthPrecedingAbs)? {
        FeatureValue::Symbolic("true") => predicted(Classification::Discourse, FiredLine::Line(9)),
        FeatureValue::Symbolic("false") => predicted(Classification::Sentential, FiredLine::Line(10)),
        _ => predicted(Classification::Discourse, FiredLine::Fallback),
    })
}

pub fn majority_model(_x: &Instance) -> BaselinePrediction {
    predicted(Classification::Sentential, FiredLine::Majority)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn inst(comp: &'static str, pos: u32, accent: &'static str) -> Instance {
        Instance::from_pairs([
            (FeatureId::IntermediateComposition, FeatureValue::Symbolic(comp)),
            (FeatureId::IntermediatePosition, FeatureValue::Numeric(pos)),
            (FeatureId::Accent, FeatureValue::Symbolic(accent)),
        ])
    }

    #[test]
    fn prosodic_cases() {
        let p = |c, n, a| prosodic_model(&inst(c, n, a)).unwrap();
        assert_eq!(
            p("only", 1, "H*+L"),
            predicted(Classification::Discourse, FiredLine::Line(1))
        );
        assert_eq!(
            p("only_cue", 3, "H*"),
            predicted(Classification::Discourse, FiredLine::Line(1))
        );
        assert_eq!(p("other", 1, "deaccented").line, FiredLine::Line(4));
        assert_eq!(p("other", 1, "L*").line, FiredLine::Line(5));
        assert_eq!(
            p("other", 1, "H*"),
            predicted(Classification::Sentential, FiredLine::Line(6))
        );
        assert_eq!(p("other", 1, "L+H*").line, FiredLine::Line(7));
        assert_eq!(
            p("other", 5, "L*"),
            predicted(Classification::Sentential, FiredLine::Line(8))
        );
        assert_eq!(
            p("other", 1, "ambiguous"),
            predicted(Classification::Sentential, FiredLine::Fallback)
        );
    }

    #[test]
    fn prosodic_needs_its_features() {
        let x = Instance::from_pairs([(FeatureId::IntermediateComposition, FeatureValue::Symbolic("other"))]);
        assert!(matches!(
            prosodic_model(&x),
            Err(Error::MissingFeature(FeatureId::IntermediatePosition))
        ));
    }

    #[test]
    fn textual_cases() {
        let t = |v| {
            let x = Instance::from_pairs([(FeatureId::OrthPrecedingAbs, v)]);
            textual_model(&x).unwrap()
        };
        assert_eq!(
            t(FeatureValue::Symbolic("true")),
            predicted(Classification::Discourse, FiredLine::Line(9))
        );
        assert_eq!(
            t(FeatureValue::Symbolic("false")),
            predicted(Classification::Sentential, FiredLine::Line(10))
        );
        assert_eq!(
            t(FeatureValue::Na),
            predicted(Classification::Discourse, FiredLine::Fallback)
        );
    }

    #[test]
    fn majority_is_constant() {
        assert_eq!(majority_model(&Instance::new()).class, Classification::Sentential);
        assert_eq!("textual".parse::<BaselineModel>().unwrap(), BaselineModel::Textual);
    }
}
