use std::sync::{Arc, Mutex};

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use cuephrase::corpus::{combine_and_filter_classifiable, filter_non_conjuncts, generate, Labeler, SyntheticSpec};
use cuephrase::eval::{error_rate_on, mean_and_stderr, split_indices};
use cuephrase::{
    cross_validate, BaselineModel, Classification, Classifier, Corpus, CvConfig, Example, FeatureId, FeatureSet,
    FeatureValue, Instance, JudgeLabel, Label, Learner, LearnerKind, Result,
};

fn synthetic(n: usize, noise: f64, seed: u64) -> Corpus {
    generate(&SyntheticSpec::new(
        n,
        Labeler::Baseline(BaselineModel::Prosodic),
        noise,
        seed,
    ))
    .unwrap()
}

/// 953 judged tokens: 878 with agreeing judges, 383 of which are conjuncts.
#[test]
fn judge_and_conjunct_filters_reach_878_then_495() {
    let base = synthetic(953, 0.0, 21);
    let mut plan: Vec<(bool, bool)> = (0..953).map(|i| (i < 878, i < 383)).collect();
    plan.shuffle(&mut ChaCha8Rng::seed_from_u64(21));
    let disagreements = [
        (JudgeLabel::Discourse, JudgeLabel::Sentential),
        (JudgeLabel::Ambiguous, JudgeLabel::Discourse),
        (JudgeLabel::Sentential, JudgeLabel::Ambiguous),
        (JudgeLabel::Ambiguous, JudgeLabel::Ambiguous),
    ];
    let conjuncts = ["and", "or", "but"];
    let others = ["now", "well", "so", "say"];
    let examples = base
        .examples
        .iter()
        .zip(&plan)
        .enumerate()
        .map(|(i, (e, &(agree, conjunct)))| {
            let mut x = e.instance.clone();
            let token = if conjunct { conjuncts[i % 3] } else { others[i % 4] };
            x.set(FeatureId::Token, FeatureValue::Symbolic(token));
            let judges = if agree {
                let j = if i % 2 == 0 {
                    JudgeLabel::Discourse
                } else {
                    JudgeLabel::Sentential
                };
                (j, j)
            } else {
                disagreements[i % 4]
            };
            Example {
                instance: x,
                label: Label::Judges(judges.0, judges.1),
            }
        })
        .collect();
    let judged = Corpus::new(examples);
    let classifiable = combine_and_filter_classifiable(&judged).unwrap();
    assert_eq!(classifiable.len(), 878);
    assert!(classifiable.iter().all(|e| e.class().is_some()));
    assert_eq!(filter_non_conjuncts(&classifiable).len(), 495);
}

#[test]
fn splits_partition_the_corpus() {
    for n in [2usize, 10, 11, 99, 1000] {
        for run in 0..10 {
            let (train, test) = split_indices(n, &CvConfig::new(3), run);
            assert_eq!(test.len(), n - (0.9 * n as f64).ceil() as usize);
            let mut all: Vec<usize> = train.iter().chain(&test).copied().collect();
            all.sort_unstable();
            assert_eq!(all, (0..n).collect::<Vec<_>>());
        }
    }
}

#[test]
fn runs_are_order_independent() {
    let c = synthetic(300, 0.15, 4);
    let set = FeatureSet::lookup("prosody").unwrap();
    let config = CvConfig::new(17);
    for learner in [LearnerKind::tree(), LearnerKind::rules()] {
        let row = cross_validate(&c, &learner, &set, &config).unwrap();
        // Recompute each run by hand, last run first.
        for run in (0..config.runs).rev() {
            let (train_idx, test_idx) = split_indices(c.len(), &config, run);
            let train: Vec<Example> = train_idx
                .iter()
                .map(|&i| c.examples[i].project(&set).unwrap())
                .collect();
            let test: Vec<Example> = test_idx.iter().map(|&i| c.examples[i].clone()).collect();
            let model = learner.train(&train, &set).unwrap();
            assert_eq!(row.runs[run], error_rate_on(&model, &test).unwrap().error());
        }
        let (mean, stderr) = mean_and_stderr(&row.runs);
        assert_eq!(row.mean_error, mean);
        let m = row.runs.iter().sum::<f64>() / 10.0;
        let sd = (row.runs.iter().map(|e| (e - m).powi(2)).sum::<f64>() / 9.0).sqrt();
        assert!((row.stderr - sd / 10f64.sqrt()).abs() < 1e-12);
        assert_eq!(row.stderr, stderr);
        assert_eq!(cross_validate(&c, &learner, &set, &config).unwrap(), row);
    }
}

type Log = Arc<Mutex<Vec<(Vec<Example>, Vec<Instance>)>>>;

/// Records what each fit sees and what its classifier is asked about.
struct Spy {
    log: Log,
}

struct SpyModel {
    slot: usize,
    log: Log,
}

impl Classifier for SpyModel {
    fn classify(&self, x: &Instance) -> Result<Classification> {
        self.log.lock().unwrap()[self.slot].1.push(x.clone());
        Ok(Classification::Sentential)
    }
}

impl Learner for Spy {
    fn name(&self) -> &str {
        "spy"
    }

    fn fit(&self, train: &[Example], _set: &FeatureSet) -> Result<Box<dyn Classifier>> {
        let mut log = self.log.lock().unwrap();
        log.push((train.to_vec(), Vec::new()));
        Ok(Box::new(SpyModel {
            slot: log.len() - 1,
            log: self.log.clone(),
        }))
    }
}

#[test]
fn learners_never_see_test_labels_or_foreign_features() {
    let c = synthetic(95, 0.1, 8);
    let set = FeatureSet::lookup("A+").unwrap();
    let log: Log = Arc::default();
    let row = cross_validate(&c, &Spy { log: log.clone() }, &set, &CvConfig::new(2)).unwrap();
    assert_eq!(row.runs.len(), 10);
    let log = log.lock().unwrap();
    assert_eq!(log.len(), 10);
    let everything: Vec<Instance> = c.iter().map(|e| e.instance.project(&set).unwrap()).collect();
    let key = |x: &Instance| format!("{x:?}");
    let mut expected: Vec<String> = everything.iter().map(key).collect();
    expected.sort();
    for (train, test) in log.iter() {
        assert_eq!(train.len(), 86);
        assert_eq!(test.len(), 9);
        for x in train.iter().map(|e| &e.instance).chain(test) {
            assert!(
                x.features().all(|(f, _)| set.contains(f)),
                "unprojected instance reached the learner"
            );
        }
        let mut seen: Vec<String> = train
            .iter()
            .map(|e| key(&e.instance))
            .chain(test.iter().map(key))
            .collect();
        seen.sort();
        assert_eq!(seen, expected);
    }
}

#[test]
fn noise_free_tree_is_exact() {
    let c = synthetic(1000, 0.0, 12);
    let set = FeatureSet::lookup("hl93features").unwrap();
    let row = cross_validate(&c, &LearnerKind::tree(), &set, &CvConfig::new(1)).unwrap();
    assert_eq!((row.mean_error, row.stderr), (0.0, 0.0));
}

#[test]
fn too_small_for_a_test_split() {
    let c = synthetic(5, 0.0, 1);
    let set = FeatureSet::lookup("P-P").unwrap();
    assert!(cross_validate(&c, &LearnerKind::tree(), &set, &CvConfig::new(1)).is_err());
}
