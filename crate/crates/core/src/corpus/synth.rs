//! Synthetic corpora: features drawn independently from per-feature
//! distributions, labels assigned by a known classifier and optionally
//! flipped at a fixed rate. Output depends only on the `SyntheticSpec` and its seed.

use std::collections::BTreeMap;

use rand::distributions::{Distribution, WeightedIndex};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::{Corpus, Example, Instance};
use crate::baselines::BaselineModel;
use crate::error::{Error, Result};
use crate::model::Classifier;
use crate::rules::RuleList;
use crate::schema::{Classification, FeatureId, FeatureValue};
use crate::tree::TreeNode;

/// The classifier whose predictions become the generated labels.
#[derive(Debug, Clone, PartialEq)]
pub enum Labeler {
    Baseline(BaselineModel),
    Rules(RuleList),
    Tree(TreeNode),
}

impl Labeler {
    pub fn label(&self, x: &Instance) -> Result<Classification> {
        match self {
            Labeler::Baseline(m) => m.classify(x),
            Labeler::Rules(r) => r.classify(x),
            Labeler::Tree(t) => t.classify(x),
        }
    }

    pub fn describe(&self) -> String {
        match self {
            Labeler::Baseline(m) => m.name().to_string(),
            Labeler::Rules(r) => format!("rules({} rules)", r.rules.len()),
            Labeler::Tree(t) => format!("tree({} leaves)", t.leaf_count()),
        }
    }
}

/// Sampling distributions for the non-derived features.
///
/// Phrase length and intermediate-phrase length are uniform on
/// `1..=max`; positions are uniform within their phrase. Every symbolic
/// base feature draws from its weighted value list.
#[derive(Debug, Clone, PartialEq)]
pub struct Marginals {
    pub max_phrase_length: u32,
    pub max_intermediate_length: u32,
    pub symbolic: BTreeMap<FeatureId, Vec<(FeatureValue, f64)>>,
}

/// Weight of `NA` on the textual features under the default marginals.
pub const DEFAULT_NA_WEIGHT: f64 = 0.05;

impl Default for Marginals {
    /// Uniform over each vocabulary; `NA` carries probability 0.05 on the
    /// textual features; lengths range over `1..=12`.
    fn default() -> Self {
        let mut symbolic = BTreeMap::new();
        for f in FeatureId::ALL {
            if f.is_numeric() || f.is_derived() {
                continue;
            }
            let vocab = f.vocabulary();
            let mut weights: Vec<(FeatureValue, f64)> = if f.allows_na() {
                let each = (1.0 - DEFAULT_NA_WEIGHT) / vocab.len() as f64;
                vocab.iter().map(|t| (FeatureValue::Symbolic(t), each)).collect()
            } else {
                vocab.iter().map(|t| (FeatureValue::Symbolic(t), 1.0)).collect()
            };
            if f.allows_na() {
                weights.push((FeatureValue::Na, DEFAULT_NA_WEIGHT));
            }
            symbolic.insert(f, weights);
        }
        Marginals {
            max_phrase_length: 12,
            max_intermediate_length: 12,
            symbolic,
        }
    }
}

impl Marginals {
    /// Replaces the distribution of one symbolic base feature.
    pub fn with(mut self, feature: FeatureId, weights: Vec<(FeatureValue, f64)>) -> Self {
        self.symbolic.insert(feature, weights);
        self
    }

    fn validate(&self) -> Result<()> {
        if self.max_phrase_length < 1 || self.max_intermediate_length < 1 {
            return Err(Error::InvalidSpec("maximum lengths must be at least 1".into()));
        }
        for f in FeatureId::ALL {
            if f.is_numeric() {
                continue;
            }
            let entry = self.symbolic.get(&f);
            if f.is_derived() {
                if entry.is_some() {
                    return Err(Error::InvalidSpec(format!("{f} is derived and cannot be sampled")));
                }
                continue;
            }
            let Some(weights) = entry else {
                return Err(Error::InvalidSpec(format!("no distribution for {f}")));
            };
            let mut total = 0.0;
            for (v, w) in weights {
                if !(w.is_finite() && *w >= 0.0) {
                    return Err(Error::InvalidSpec(format!("bad weight {w} for {f}")));
                }
                if *w > 0.0 {
                    f.validate(*v).map_err(|e| Error::InvalidSpec(e.to_string()))?;
                }
                total += w;
            }
            if total <= 0.0 {
                return Err(Error::InvalidSpec(format!("{f} has no probability mass")));
            }
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SyntheticSpec {
    pub n: usize,
    pub labeler: Labeler,
    /// Probability of flipping each label.
    pub noise: f64,
    pub marginals: Marginals,
    pub seed: u64,
}

impl SyntheticSpec {
    pub fn new(n: usize, labeler: Labeler, noise: f64, seed: u64) -> Self {
        SyntheticSpec {
            n,
            labeler,
            noise,
            marginals: Marginals::default(),
            seed,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.n < 1 {
            return Err(Error::InvalidSpec("n must be at least 1".into()));
        }
        if !(0.0..=1.0).contains(&self.noise) {
            return Err(Error::InvalidSpec(format!("noise {} outside [0, 1]", self.noise)));
        }
        self.marginals.validate()
    }
}

/// Draws a complete instance (derived features filled in).
pub fn sample_instance<R: Rng>(marginals: &Marginals, samplers: &Samplers, rng: &mut R) -> Instance {
    let mut x = Instance::new();
    let p_len = rng.gen_range(1..=marginals.max_phrase_length);
    let p_pos = rng.gen_range(1..=p_len);
    let i_len = rng.gen_range(1..=marginals.max_intermediate_length);
    let i_pos = rng.gen_range(1..=i_len);
    x.set(FeatureId::PhraseLength, FeatureValue::Numeric(p_len));
    x.set(FeatureId::PhrasePosition, FeatureValue::Numeric(p_pos));
    x.set(FeatureId::IntermediateLength, FeatureValue::Numeric(i_len));
    x.set(FeatureId::IntermediatePosition, FeatureValue::Numeric(i_pos));
    for (feature, values, dist) in &samplers.0 {
        x.set(*feature, values[dist.sample(rng)]);
    }
    x.fill_derived();
    x
}

/// Prepared weighted samplers, one per symbolic base feature.
pub struct Samplers(Vec<(FeatureId, Vec<FeatureValue>, WeightedIndex<f64>)>);

impl Samplers {
    pub fn new(marginals: &Marginals) -> Result<Self> {
        marginals.validate()?;
        let mut out = Vec::new();
        for (f, weights) in &marginals.symbolic {
            let values = weights.iter().map(|(v, _)| *v).collect();
            let dist = WeightedIndex::new(weights.iter().map(|(_, w)| *w))
                .map_err(|e| Error::InvalidSpec(format!("{f}: {e}")))?;
            out.push((*f, values, dist));
        }
        Ok(Samplers(out))
    }
}

/// Generates `spec.n` labeled examples. The noise draw happens for every
/// example, so corpora with the same seed share their feature vectors
/// regardless of the noise rate.
pub fn generate(spec: &SyntheticSpec) -> Result<Corpus> {
    spec.validate()?;
    let samplers = Samplers::new(&spec.marginals)?;
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    let mut examples = Vec::with_capacity(spec.n);
    for _ in 0..spec.n {
        let x = sample_instance(&spec.marginals, &samplers, &mut rng);
        let mut class = spec.labeler.label(&x)?;
        if rng.gen::<f64>() < spec.noise {
            class = class.opposite();
        }
        examples.push(Example::new(x, class));
    }
    Ok(Corpus::new(examples).with_provenance(format!(
        "synthetic n={} labeler={} noise={} seed={}",
        spec.n,
        spec.labeler.describe(),
        spec.noise,
        spec.seed
    )))
}
