//! Examples, corpora, corpus filters, the synthetic generator and the
//! tone-sequence validator.

mod io;
pub mod synth;
pub mod tone;

pub use io::{load, parse_corpus, render_corpus, save, HEADER};
pub use synth::{generate, Labeler, Marginals, SyntheticSpec};

use crate::error::{Error, Result};
use crate::schema::{
    combine_judgments, derive_value, Classification, FeatureId, FeatureSet, FeatureValue, JudgeLabel, FEATURE_COUNT,
};

/// The feature values of one token, without any label. Learners predict on
/// instances, so test-time labels are never reachable from a classifier.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct Instance {
    values: [Option<FeatureValue>; FEATURE_COUNT],
}

impl Instance {
    pub fn new() -> Self {
        Self::default()
    }

    /// Builds an instance from values for all fourteen base-or-lexical
    /// features, filling the derived ones (A*, O-P*, O-S*) from their bases.
    pub fn from_pairs(pairs: impl IntoIterator<Item = (FeatureId, FeatureValue)>) -> Self {
        let mut out = Instance::new();
        for (f, v) in pairs {
            out.set(f, v);
        }
        out.fill_derived();
        out
    }

    pub fn get(&self, feature: FeatureId) -> Option<FeatureValue> {
        self.values[feature.index()]
    }

    pub fn require(&self, feature: FeatureId) -> Result<FeatureValue> {
        self.get(feature).ok_or(Error::MissingFeature(feature))
    }

    pub fn set(&mut self, feature: FeatureId, value: FeatureValue) {
        self.values[feature.index()] = Some(value);
    }

    /// Recomputes every derived feature whose base is present.
    pub fn fill_derived(&mut self) {
        for f in FeatureId::ALL {
            if let Some(base) = f.derived_from().and_then(|b| self.get(b)) {
                self.set(f, derive_value(f, base));
            }
        }
    }

    /// Present features in schema order.
    pub fn features(&self) -> impl Iterator<Item = (FeatureId, FeatureValue)> + '_ {
        FeatureId::ALL.into_iter().filter_map(|f| self.get(f).map(|v| (f, v)))
    }

    pub fn is_complete(&self) -> bool {
        self.values.iter().all(Option::is_some)
    }

    /// True when every derived feature that is present agrees with its base.
    pub fn abstractions_consistent(&self) -> bool {
        FeatureId::ALL
            .into_iter()
            .all(|f| match (f.derived_from(), self.get(f)) {
                (Some(base), Some(v)) => self.get(base).is_none_or(|b| derive_value(f, b) == v),
                _ => true,
            })
    }

    /// Restricts the instance to the members of `set`.
    pub fn project(&self, set: &FeatureSet) -> Result<Instance> {
        let mut out = Instance::new();
        for &f in set.members() {
            out.set(f, self.require(f)?);
        }
        Ok(out)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Label {
    Class(Classification),
    Judges(JudgeLabel, JudgeLabel),
}

/// One cue-phrase token: its feature values plus either a combined class or
/// the two raw judge labels.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Example {
    pub instance: Instance,
    pub label: Label,
}

impl Example {
    pub fn new(instance: Instance, class: Classification) -> Self {
        Example {
            instance,
            label: Label::Class(class),
        }
    }

    pub fn class(&self) -> Option<Classification> {
        match self.label {
            Label::Class(c) => Some(c),
            Label::Judges(..) => None,
        }
    }

    pub fn get(&self, feature: FeatureId) -> Option<FeatureValue> {
        self.instance.get(feature)
    }

    /// Keeps only the features of `set`; the label is carried over.
    pub fn project(&self, set: &FeatureSet) -> Result<Example> {
        Ok(Example {
            instance: self.instance.project(set)?,
            label: self.label,
        })
    }
}

/// Which label columns a corpus file carries.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LabelKind {
    Class,
    Judges,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Corpus {
    pub examples: Vec<Example>,
    pub label_kind: LabelKind,
    /// Free-text note on where the corpus came from. Not stored in files.
    pub provenance: String,
}

impl Corpus {
    pub fn new(examples: Vec<Example>) -> Self {
        let label_kind = match examples.first().map(|e| e.label) {
            Some(Label::Judges(..)) => LabelKind::Judges,
            _ => LabelKind::Class,
        };
        Corpus {
            examples,
            label_kind,
            provenance: String::new(),
        }
    }

    pub fn with_provenance(mut self, note: impl Into<String>) -> Self {
        self.provenance = note.into();
        self
    }

    pub fn len(&self) -> usize {
        self.examples.len()
    }

    pub fn is_empty(&self) -> bool {
        self.examples.is_empty()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Example> {
        self.examples.iter()
    }

    /// Labeled examples as `(instance, class)` pairs; fails on the first
    /// example that only carries judge labels.
    pub fn labeled(&self) -> Result<Vec<(&Instance, Classification)>> {
        self.examples
            .iter()
            .enumerate()
            .map(|(index, e)| e.class().map(|c| (&e.instance, c)).ok_or(Error::Unlabeled { index }))
            .collect()
    }

    /// `(discourse, sentential)` counts over labeled examples.
    pub fn class_counts(&self) -> (usize, usize) {
        self.examples.iter().fold((0, 0), |(d, s), e| match e.class() {
            Some(Classification::Discourse) => (d + 1, s),
            Some(Classification::Sentential) => (d, s + 1),
            None => (d, s),
        })
    }

    fn derive(&self, examples: Vec<Example>, note: &str) -> Corpus {
        let mut out = Corpus::new(examples);
        out.provenance = if self.provenance.is_empty() {
            note.to_string()
        } else {
            format!("{}; {note}", self.provenance)
        };
        out
    }
}

/// Applies judge combination and keeps only the classifiable tokens.
pub fn combine_and_filter_classifiable(corpus: &Corpus) -> Result<Corpus> {
    let mut kept = Vec::new();
    for (index, e) in corpus.iter().enumerate() {
        let Label::Judges(a, b) = e.label else {
            return Err(Error::MissingJudges { index });
        };
        if let Some(class) = combine_judgments(a, b) {
            kept.push(Example::new(e.instance.clone(), class));
        }
    }
    let mut out = corpus.derive(kept, "classifiable");
    out.label_kind = LabelKind::Class;
    Ok(out)
}

const CONJUNCTS: [&str; 3] = ["and", "or", "but"];

/// Drops every example whose token is `and`, `or` or `but`.
pub fn filter_non_conjuncts(corpus: &Corpus) -> Corpus {
    let kept = corpus
        .iter()
        .filter(|e| !matches!(e.get(FeatureId::Token), Some(FeatureValue::Symbolic(t)) if CONJUNCTS.contains(&t)))
        .cloned()
        .collect();
    let mut out = corpus.derive(kept, "non-conjuncts");
    out.label_kind = corpus.label_kind;
    out
}
