use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use rayon::prelude::*;

use cuephrase::corpus::{self, Corpus, Labeler, SyntheticSpec};
use cuephrase::eval::{cross_validate, error_rate, render_report, CvConfig, CvReport, EvalResult, LearnerKind};
use cuephrase::schema::catalog;
use cuephrase::{BaselineModel, FeatureSet, FiredLine, LabelKind, Model, RuleParams, TreeParams};

#[derive(Parser)]
#[command(name = "cuephrase", version, about = "Cue-phrase classification experiments")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum LearnerArg {
    Tree,
    Rules,
}

#[derive(Clone, Copy, ValueEnum)]
enum LearnerChoice {
    Tree,
    Rules,
    Both,
}

#[derive(Clone, Copy, ValueEnum)]
enum BaselineArg {
    Prosodic,
    Textual,
    Majority,
}

impl From<BaselineArg> for BaselineModel {
    fn from(b: BaselineArg) -> Self {
        match b {
            BaselineArg::Prosodic => BaselineModel::Prosodic,
            BaselineArg::Textual => BaselineModel::Textual,
            BaselineArg::Majority => BaselineModel::Majority,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Generate a synthetic labeled corpus.
    Gen {
        #[arg(long)]
        n: usize,
        /// prosodic, textual, majority, rules:<path> or tree:<path>
        #[arg(long)]
        labeler: String,
        #[arg(long, default_value_t = 0.0)]
        noise: f64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: PathBuf,
    },
    /// Combine judge labels and/or drop conjunct tokens.
    Prepare {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        combine_judges: bool,
        #[arg(long)]
        drop_conjuncts: bool,
        #[arg(long)]
        out: PathBuf,
    },
    /// Score one of the fixed reference models.
    Baseline {
        #[arg(long, value_enum)]
        model: BaselineArg,
        #[arg(long = "in")]
        input: PathBuf,
    },
    /// Train a model on one feature set and write it as text.
    Train {
        #[arg(long, value_enum)]
        learner: LearnerArg,
        #[arg(long)]
        set: String,
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        out: PathBuf,
        #[arg(long)]
        no_prune: bool,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Score a saved model on a corpus.
    Eval {
        #[arg(long)]
        model: PathBuf,
        #[arg(long = "in")]
        input: PathBuf,
    },
    /// Ten 90/10 runs per feature set and learner.
    Crossval {
        #[arg(long, value_enum)]
        learner: LearnerChoice,
        /// `all` or a comma-separated list of catalog names
        #[arg(long)]
        sets: String,
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Machine-readable output; defaults to `<in>.crossval.jsonl`
        #[arg(long)]
        report: Option<PathBuf>,
        /// Worker threads (0 = all cores)
        #[arg(long, default_value_t = 0)]
        jobs: usize,
    },
    /// Print a saved model with descriptive feature names.
    Explain {
        #[arg(long)]
        model: PathBuf,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}

fn run(command: Command) -> Result<()> {
    match command {
        Command::Gen {
            n,
            labeler,
            noise,
            seed,
            out,
        } => {
            let spec = SyntheticSpec::new(n, parse_labeler(&labeler)?, noise, seed);
            let c = corpus::generate(&spec)?;
            corpus::save(&c, &out).with_context(|| format!("writing {}", out.display()))?;
            let (d, s) = c.class_counts();
            println!(
                "wrote {} examples ({d} discourse, {s} sentential) to {}",
                c.len(),
                out.display()
            );
        }
        Command::Prepare {
            input,
            combine_judges,
            drop_conjuncts,
            out,
        } => {
            let mut c = load(&input)?;
            if combine_judges {
                c = corpus::combine_and_filter_classifiable(&c)?;
            } else if c.label_kind == LabelKind::Judges {
                bail!("{} carries judge labels; pass --combine-judges", input.display());
            }
            if drop_conjuncts {
                c = corpus::filter_non_conjuncts(&c);
            }
            corpus::save(&c, &out).with_context(|| format!("writing {}", out.display()))?;
            println!("wrote {} examples to {}", c.len(), out.display());
        }
        Command::Baseline { model, input } => {
            let model = BaselineModel::from(model);
            let c = load(&input)?;
            let result = error_rate(&model, &c)?;
            let mut fired: BTreeMap<FiredLine, usize> = BTreeMap::new();
            for e in c.iter() {
                *fired.entry(model.predict(&e.instance)?.line).or_default() += 1;
            }
            println!("model: {model}");
            print_result(&result);
            for (line, count) in fired {
                println!("line {line}: {count}");
            }
        }
        Command::Train {
            learner,
            set,
            input,
            out,
            no_prune,
            seed,
        } => {
            let set = FeatureSet::lookup(&set)?;
            let c = load(&input)?;
            let learner = make_learner(learner, !no_prune, seed);
            let train = c
                .iter()
                .map(|e| e.project(&set))
                .collect::<cuephrase::Result<Vec<_>>>()?;
            let model = learner.train(&train, &set)?;
            fs::write(&out, model.render()).with_context(|| format!("writing {}", out.display()))?;
            println!("wrote {} model for {} to {}", model.kind(), set.name(), out.display());
        }
        Command::Eval { model, input } => {
            let m = load_model(&model)?;
            let c = load(&input)?;
            println!("model: {} ({})", model.display(), m.kind());
            print_result(&error_rate(&m, &c)?);
        }
        Command::Crossval {
            learner,
            sets,
            input,
            seed,
            report,
            jobs: threads,
        } => {
            let c = load(&input)?;
            let sets = parse_sets(&sets)?;
            let learners: Vec<LearnerKind> = match learner {
                LearnerChoice::Tree => vec![make_learner(LearnerArg::Tree, true, seed)],
                LearnerChoice::Rules => vec![make_learner(LearnerArg::Rules, true, seed)],
                LearnerChoice::Both => vec![
                    make_learner(LearnerArg::Tree, true, seed),
                    make_learner(LearnerArg::Rules, true, seed),
                ],
            };
            let work: Vec<(&FeatureSet, &LearnerKind)> =
                sets.iter().flat_map(|s| learners.iter().map(move |l| (s, l))).collect();
            let config = CvConfig::new(seed);
            let pool = rayon::ThreadPoolBuilder::new().num_threads(threads).build()?;
            let rows = pool.install(|| {
                work.par_iter()
                    .map(|(s, l)| cross_validate(&c, *l, s, &config))
                    .collect::<cuephrase::Result<Vec<_>>>()
            })?;
            let report_data = CvReport { rows };
            print!("{}", render_report(&report_data));
            let path = report.unwrap_or_else(|| default_report_path(&input));
            fs::write(&path, report_data.to_json_lines()).with_context(|| format!("writing {}", path.display()))?;
        }
        Command::Explain { model } => {
            print!("{}", load_model(&model)?.explain());
        }
    }
    Ok(())
}

fn load(path: &Path) -> Result<Corpus> {
    corpus::load(path).with_context(|| format!("reading {}", path.display()))
}

fn load_model(path: &Path) -> Result<Model> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    Model::parse(&text).with_context(|| format!("parsing {}", path.display()))
}

fn parse_labeler(text: &str) -> Result<Labeler> {
    if let Some(path) = text.strip_prefix("rules:") {
        return match load_model(Path::new(path))? {
            Model::Rules(r) => Ok(Labeler::Rules(r)),
            Model::Tree(_) => bail!("{path} holds a tree, not a rule list"),
        };
    }
    if let Some(path) = text.strip_prefix("tree:") {
        return match load_model(Path::new(path))? {
            Model::Tree(t) => Ok(Labeler::Tree(t)),
            Model::Rules(_) => bail!("{path} holds a rule list, not a tree"),
        };
    }
    Ok(Labeler::Baseline(text.parse()?))
}

fn parse_sets(text: &str) -> Result<Vec<FeatureSet>> {
    if text.trim().eq_ignore_ascii_case("all") {
        return Ok(catalog().to_vec());
    }
    let sets = text
        .split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(FeatureSet::lookup)
        .collect::<cuephrase::Result<Vec<_>>>()?;
    if sets.is_empty() {
        bail!("no feature sets given");
    }
    Ok(sets)
}

fn make_learner(kind: LearnerArg, prune: bool, seed: u64) -> LearnerKind {
    match kind {
        LearnerArg::Tree => LearnerKind::Tree(TreeParams {
            prune,
            ..TreeParams::default()
        }),
        LearnerArg::Rules => LearnerKind::Rules(RuleParams {
            prune,
            seed,
            ..RuleParams::default()
        }),
    }
}

fn default_report_path(input: &Path) -> PathBuf {
    input.with_extension("crossval.jsonl")
}

fn print_result(r: &EvalResult) {
    println!("n: {}", r.n);
    println!(
        "errors: {} (discourse as sentential {}, sentential as discourse {})",
        r.errors(),
        r.miscls_discourse,
        r.miscls_sentential
    );
    println!("error: {:.4}", r.error());
}
