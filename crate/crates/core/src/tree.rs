//! Decision-tree induction: greedy information-gain splitting over numeric
//! thresholds and multiway symbolic tests, pessimistic-error pruning, and a
//! line-oriented text format.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use crate::corpus::{Example, Instance};
use crate::error::{Error, Result};
use crate::schema::{parse_value, Classification, FeatureId, FeatureSet, FeatureValue};

const GAIN_EPS: f64 = 1e-12;

/// Per-class example counts.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Hash)]
pub struct ClassCounts {
    pub discourse: usize,
    pub sentential: usize,
}

impl ClassCounts {
    pub fn new(discourse: usize, sentential: usize) -> Self {
        ClassCounts { discourse, sentential }
    }

    pub fn total(self) -> usize {
        self.discourse + self.sentential
    }

    pub fn add(&mut self, class: Classification) {
        match class {
            Classification::Discourse => self.discourse += 1,
            Classification::Sentential => self.sentential += 1,
        }
    }

    pub fn get(self, class: Classification) -> usize {
        match class {
            Classification::Discourse => self.discourse,
            Classification::Sentential => self.sentential,
        }
    }

    /// Majority class; ties go to discourse.
    pub fn majority(self) -> Classification {
        if self.sentential > self.discourse {
            Classification::Sentential
        } else {
            Classification::Discourse
        }
    }

    /// Examples not of the majority class.
    pub fn errors(self) -> usize {
        self.total() - self.get(self.majority())
    }

    pub fn is_pure(self) -> bool {
        self.discourse == 0 || self.sentential == 0
    }
}

impl std::ops::Add for ClassCounts {
    type Output = ClassCounts;

    fn add(self, rhs: Self) -> Self {
        ClassCounts::new(self.discourse + rhs.discourse, self.sentential + rhs.sentential)
    }
}

impl FromIterator<Classification> for ClassCounts {
    fn from_iter<I: IntoIterator<Item = Classification>>(iter: I) -> Self {
        let mut c = ClassCounts::default();
        iter.into_iter().for_each(|x| c.add(x));
        c
    }
}

fn plogp(count: usize, total: usize) -> f64 {
    if count == 0 {
        0.0
    } else {
        let p = count as f64 / total as f64;
        -p * p.log2()
    }
}

/// Class entropy in bits.
pub fn entropy(counts: ClassCounts) -> Result<f64> {
    let n = counts.total();
    if n == 0 {
        return Err(Error::EmptyDistribution);
    }
    Ok(plogp(counts.discourse, n) + plogp(counts.sentential, n))
}

/// Entropy reduction from splitting `parent` into `children`. Empty children
/// contribute nothing.
pub fn info_gain(parent: ClassCounts, children: &[ClassCounts]) -> Result<f64> {
    let sum = children.iter().fold(ClassCounts::default(), |acc, c| acc + *c);
    if sum != parent {
        return Err(Error::PartitionMismatch);
    }
    let n = parent.total() as f64;
    let mut remainder = 0.0;
    for c in children.iter().filter(|c| c.total() > 0) {
        remainder += c.total() as f64 / n * entropy(*c)?;
    }
    Ok(entropy(parent)? - remainder)
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TreeParams {
    /// Minimum examples in at least two branches of any test.
    pub min_leaf: usize,
    pub prune: bool,
    /// Confidence level of the pessimistic error bound.
    pub confidence: f64,
}

impl Default for TreeParams {
    fn default() -> Self {
        TreeParams {
            min_leaf: 2,
            prune: true,
            confidence: 0.25,
        }
    }
}

impl TreeParams {
    pub fn validate(&self) -> Result<()> {
        if self.min_leaf < 1 {
            return Err(Error::InvalidParams("min_leaf must be at least 1".into()));
        }
        if !(self.confidence > 0.0 && self.confidence < 1.0) {
            return Err(Error::InvalidParams(
                "confidence must lie strictly between 0 and 1".into(),
            ));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum TreeNode {
    Leaf {
        class: Classification,
        counts: ClassCounts,
    },
    NumericTest {
        feature: FeatureId,
        threshold: u32,
        le: Box<TreeNode>,
        gt: Box<TreeNode>,
    },
    SymbolicTest {
        feature: FeatureId,
        /// Sorted by the feature's canonical value order.
        branches: Vec<(FeatureValue, TreeNode)>,
        /// Prediction for values with no branch.
        absent: Classification,
    },
}

impl TreeNode {
    pub fn leaf(class: Classification, counts: ClassCounts) -> Self {
        TreeNode::Leaf { class, counts }
    }

    pub fn leaf_count(&self) -> usize {
        match self {
            TreeNode::Leaf { .. } => 1,
            TreeNode::NumericTest { le, gt, .. } => le.leaf_count() + gt.leaf_count(),
            TreeNode::SymbolicTest { branches, .. } => branches.iter().map(|(_, b)| b.leaf_count()).sum(),
        }
    }

    pub fn depth(&self) -> usize {
        match self {
            TreeNode::Leaf { .. } => 0,
            TreeNode::NumericTest { le, gt, .. } => 1 + le.depth().max(gt.depth()),
            TreeNode::SymbolicTest { branches, .. } => 1 + branches.iter().map(|(_, b)| b.depth()).max().unwrap_or(0),
        }
    }

    /// Training counts routed to this node (sum over its leaves).
    pub fn counts(&self) -> ClassCounts {
        match self {
            TreeNode::Leaf { counts, .. } => *counts,
            TreeNode::NumericTest { le, gt, .. } => le.counts() + gt.counts(),
            TreeNode::SymbolicTest { branches, .. } => branches
                .iter()
                .fold(ClassCounts::default(), |acc, (_, b)| acc + b.counts()),
        }
    }

    /// Features tested anywhere in the tree, in schema order.
    pub fn tested_features(&self) -> Vec<FeatureId> {
        fn walk(node: &TreeNode, out: &mut Vec<FeatureId>) {
            match node {
                TreeNode::Leaf { .. } => {}
                TreeNode::NumericTest { feature, le, gt, .. } => {
                    out.push(*feature);
                    walk(le, out);
                    walk(gt, out);
                }
                TreeNode::SymbolicTest { feature, branches, .. } => {
                    out.push(*feature);
                    branches.iter().for_each(|(_, b)| walk(b, out));
                }
            }
        }
        let mut out = Vec::new();
        walk(self, &mut out);
        out.sort();
        out.dedup();
        out
    }

    pub fn classify(&self, x: &Instance) -> Result<Classification> {
        let mut node = self;
        loop {
            match node {
                TreeNode::Leaf { class, .. } => return Ok(*class),
                TreeNode::NumericTest {
                    feature,
                    threshold,
                    le,
                    gt,
                } => {
                    let v = x.require(*feature)?;
                    let n = v.as_numeric().ok_or(Error::UnknownTag {
                        feature: *feature,
                        text: v.to_string(),
                    })?;
                    node = if n <= *threshold { le } else { gt };
                }
                TreeNode::SymbolicTest {
                    feature,
                    branches,
                    absent,
                } => {
                    let v = x.require(*feature)?;
                    match branches.iter().find(|(bv, _)| *bv == v) {
                        Some((_, child)) => node = child,
                        None => return Ok(*absent),
                    }
                }
            }
        }
    }
}

/// Classifies `x` by routing it through the tree.
pub fn classify_tree(tree: &TreeNode, x: &Instance) -> Result<Classification> {
    tree.classify(x)
}

struct Rows<'a> {
    instances: Vec<&'a Instance>,
    classes: Vec<Classification>,
}

enum Split {
    Numeric { feature: FeatureId, threshold: u32 },
    Symbolic { feature: FeatureId },
}

fn training_rows<'a>(examples: &'a [Example], set: &FeatureSet) -> Result<Rows<'a>> {
    let mut instances = Vec::with_capacity(examples.len());
    let mut classes = Vec::with_capacity(examples.len());
    for (index, e) in examples.iter().enumerate() {
        let class = e.class().ok_or(Error::Unlabeled { index })?;
        for &f in set.members() {
            e.instance.require(f)?;
        }
        instances.push(&e.instance);
        classes.push(class);
    }
    Ok(Rows { instances, classes })
}

/// Grows an unpruned tree over the features of `set`.
///
/// At each node the test with the largest information gain is chosen. A
/// numeric feature offers `x <= v` for every observed value `v` except the
/// largest; a symbolic feature offers one branch per observed value. A test
/// is admissible only if at least two of its branches receive `min_leaf`
/// examples. Growth stops at pure nodes, at nodes smaller than
/// `2 * min_leaf`, and where no admissible test exists.
pub fn grow(examples: &[Example], set: &FeatureSet, params: &TreeParams) -> Result<TreeNode> {
    params.validate()?;
    if examples.is_empty() {
        return Err(Error::EmptyCorpus);
    }
    let rows = training_rows(examples, set)?;
    let idx: Vec<usize> = (0..rows.classes.len()).collect();
    Ok(grow_node(&rows, &idx, set, params))
}

fn counts_of(rows: &Rows<'_>, idx: &[usize]) -> ClassCounts {
    idx.iter().map(|&i| rows.classes[i]).collect()
}

fn grow_node(rows: &Rows<'_>, idx: &[usize], set: &FeatureSet, params: &TreeParams) -> TreeNode {
    let counts = counts_of(rows, idx);
    let leaf = TreeNode::leaf(counts.majority(), counts);
    if counts.is_pure() || idx.len() < 2 * params.min_leaf {
        return leaf;
    }
    let Some(split) = best_split(rows, idx, counts, set, params) else {
        return leaf;
    };
    match split {
        Split::Numeric { feature, threshold } => {
            let (le, gt): (Vec<usize>, Vec<usize>) = idx.iter().partition(|&&i| numeric(rows, i, feature) <= threshold);
            TreeNode::NumericTest {
                feature,
                threshold,
                le: Box::new(grow_node(rows, &le, set, params)),
                gt: Box::new(grow_node(rows, &gt, set, params)),
            }
        }
        Split::Symbolic { feature } => {
            let groups = group_symbolic(rows, idx, feature);
            let branches = groups
                .into_values()
                .map(|(value, members)| (value, grow_node(rows, &members, set, params)))
                .collect();
            TreeNode::SymbolicTest {
                feature,
                branches,
                absent: counts.majority(),
            }
        }
    }
}

fn numeric(rows: &Rows<'_>, i: usize, feature: FeatureId) -> u32 {
    // Symbolic values on a numeric feature cannot occur after validation.
    rows.instances[i]
        .get(feature)
        .and_then(FeatureValue::as_numeric)
        .unwrap_or(0)
}

/// Groups examples by value, keyed by canonical value rank.
fn group_symbolic(rows: &Rows<'_>, idx: &[usize], feature: FeatureId) -> BTreeMap<u32, (FeatureValue, Vec<usize>)> {
    let mut groups: BTreeMap<u32, (FeatureValue, Vec<usize>)> = BTreeMap::new();
    for &i in idx {
        let v = rows.instances[i].get(feature).unwrap_or(FeatureValue::Na);
        groups
            .entry(feature.rank(v))
            .or_insert_with(|| (v, Vec::new()))
            .1
            .push(i);
    }
    groups
}

fn admissible(children: &[ClassCounts], min_leaf: usize) -> bool {
    children.iter().filter(|c| c.total() >= min_leaf).count() >= 2
}

fn best_split(
    rows: &Rows<'_>,
    idx: &[usize],
    parent: ClassCounts,
    set: &FeatureSet,
    params: &TreeParams,
) -> Option<Split> {
    let mut best: Option<(f64, Split)> = None;
    let mut consider = |gain: f64, split: Split| {
        if best.as_ref().is_none_or(|(g, _)| gain > g + GAIN_EPS) {
            best = Some((gain, split));
        }
    };
    for &feature in set.members() {
        if feature.is_numeric() {
            let mut by_value: BTreeMap<u32, ClassCounts> = BTreeMap::new();
            for &i in idx {
                by_value
                    .entry(numeric(rows, i, feature))
                    .or_default()
                    .add(rows.classes[i]);
            }
            let mut left = ClassCounts::default();
            let last = by_value.len().saturating_sub(1);
            for (k, (&value, &c)) in by_value.iter().enumerate() {
                if k == last {
                    break;
                }
                left = left + c;
                let right = ClassCounts::new(parent.discourse - left.discourse, parent.sentential - left.sentential);
                let children = [left, right];
                if !admissible(&children, params.min_leaf) {
                    continue;
                }
                let gain = info_gain(parent, &children).expect("partition of parent");
                consider(
                    gain,
                    Split::Numeric {
                        feature,
                        threshold: value,
                    },
                );
            }
        } else {
            let children: Vec<ClassCounts> = group_symbolic(rows, idx, feature)
                .into_values()
                .map(|(_, members)| counts_of(rows, &members))
                .collect();
            if !admissible(&children, params.min_leaf) {
                continue;
            }
            let gain = info_gain(parent, &children).expect("partition of parent");
            consider(gain, Split::Symbolic { feature });
        }
    }
    // Zero-gain tests are kept: an impure node may need one to separate
    // examples that only a later test can tell apart (XOR-like targets).
    best.filter(|(g, _)| *g > -GAIN_EPS).map(|(_, s)| s)
}

/// Upper confidence limit on the error probability of a leaf with `errors`
/// misclassified out of `n`: the `p` at which `P(X <= errors) = confidence`
/// for `X ~ Binomial(n, p)`.
pub fn pessimistic_error_rate(errors: usize, n: usize, confidence: f64) -> f64 {
    if n == 0 {
        return 0.0;
    }
    if errors >= n {
        return 1.0;
    }
    let (mut lo, mut hi) = (0.0f64, 1.0f64);
    for _ in 0..100 {
        let mid = 0.5 * (lo + hi);
        if binomial_cdf(errors, n, mid) > confidence {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    0.5 * (lo + hi)
}

fn binomial_cdf(k: usize, n: usize, p: f64) -> f64 {
    use statrs::distribution::{Binomial, DiscreteCDF};
    Binomial::new(p, n as u64).expect("p in [0, 1]").cdf(k as u64)
}

/// Predicted error count of a leaf: `n` times its pessimistic error rate.
pub fn leaf_error_estimate(counts: ClassCounts, confidence: f64) -> f64 {
    counts.total() as f64 * pessimistic_error_rate(counts.errors(), counts.total(), confidence)
}

fn subtree_error_estimate(node: &TreeNode, confidence: f64) -> f64 {
    match node {
        TreeNode::Leaf { counts, .. } => leaf_error_estimate(*counts, confidence),
        TreeNode::NumericTest { le, gt, .. } => {
            subtree_error_estimate(le, confidence) + subtree_error_estimate(gt, confidence)
        }
        TreeNode::SymbolicTest { branches, .. } => branches
            .iter()
            .map(|(_, b)| subtree_error_estimate(b, confidence))
            .sum(),
    }
}

/// Bottom-up pessimistic pruning: a subtree becomes a majority leaf whenever
/// the leaf's estimated errors do not exceed the subtree's.
pub fn prune(tree: &TreeNode, params: &TreeParams) -> TreeNode {
    let pruned = match tree {
        TreeNode::Leaf { .. } => return tree.clone(),
        TreeNode::NumericTest {
            feature,
            threshold,
            le,
            gt,
        } => TreeNode::NumericTest {
            feature: *feature,
            threshold: *threshold,
            le: Box::new(prune(le, params)),
            gt: Box::new(prune(gt, params)),
        },
        TreeNode::SymbolicTest {
            feature,
            branches,
            absent,
        } => TreeNode::SymbolicTest {
            feature: *feature,
            branches: branches.iter().map(|(v, b)| (*v, prune(b, params))).collect(),
            absent: *absent,
        },
    };
    let counts = pruned.counts();
    let as_leaf = leaf_error_estimate(counts, params.confidence);
    if as_leaf <= subtree_error_estimate(&pruned, params.confidence) + GAIN_EPS {
        TreeNode::leaf(counts.majority(), counts)
    } else {
        pruned
    }
}

/// Grows a tree and prunes it when `params.prune` is set.
pub fn induce(examples: &[Example], set: &FeatureSet, params: &TreeParams) -> Result<TreeNode> {
    let tree = grow(examples, set, params)?;
    Ok(if params.prune { prune(&tree, params) } else { tree })
}

/// How feature names are written in rendered models.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Naming {
    /// Corpus column names; the parseable form.
    Column,
    /// Long descriptive names, for display only.
    Descriptive,
}

impl Naming {
    pub fn name(self, f: FeatureId) -> &'static str {
        match self {
            Naming::Column => f.column(),
            Naming::Descriptive => f.description(),
        }
    }
}

pub fn render_tree(tree: &TreeNode) -> String {
    render_tree_with(tree, Naming::Column)
}

/// Renders the tree as nested `if`/`elseif` lines with two-space indents.
/// A leaf root renders as `class: <class>`; symbolic tests close with an
/// `else <class>` line giving the prediction for values without a branch.
pub fn render_tree_with(tree: &TreeNode, naming: Naming) -> String {
    let mut out = String::new();
    match tree {
        TreeNode::Leaf { class, .. } => {
            let _ = writeln!(out, "class: {class}");
        }
        _ => render_test(tree, 0, naming, &mut out),
    }
    out
}

fn render_branch(head: &str, child: &TreeNode, depth: usize, naming: Naming, out: &mut String) {
    let pad = "  ".repeat(depth);
    match child {
        TreeNode::Leaf { class, .. } => {
            let _ = writeln!(out, "{pad}{head} then {class}");
        }
        _ => {
            let _ = writeln!(out, "{pad}{head} then");
            render_test(child, depth + 1, naming, out);
        }
    }
}

fn render_test(node: &TreeNode, depth: usize, naming: Naming, out: &mut String) {
    match node {
        TreeNode::Leaf { .. } => unreachable!("leaves are rendered by their parent"),
        TreeNode::NumericTest {
            feature,
            threshold,
            le,
            gt,
        } => {
            let name = naming.name(*feature);
            render_branch(&format!("if {name} <= {threshold}"), le, depth, naming, out);
            render_branch(&format!("elseif {name} > {threshold}"), gt, depth, naming, out);
        }
        TreeNode::SymbolicTest {
            feature,
            branches,
            absent,
        } => {
            let name = naming.name(*feature);
            for (k, (value, child)) in branches.iter().enumerate() {
                let kw = if k == 0 { "if" } else { "elseif" };
                render_branch(&format!("{kw} {name} = {value}"), child, depth, naming, out);
            }
            let _ = writeln!(out, "{}else {absent}", "  ".repeat(depth));
        }
    }
}

struct Line<'a> {
    number: usize,
    depth: usize,
    text: &'a str,
}

fn model_err(line: usize, reason: impl Into<String>) -> Error {
    Error::ModelParse {
        line,
        reason: reason.into(),
    }
}

/// Parses the column-named form produced by [`render_tree`]. Leaf counts
/// are not part of the text and come back as zero.
pub fn parse_tree(text: &str) -> Result<TreeNode> {
    let mut lines = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        if raw.trim().is_empty() {
            continue;
        }
        let indent = raw.len() - raw.trim_start_matches(' ').len();
        if indent % 2 != 0 {
            return Err(model_err(i + 1, "indentation must be a multiple of two spaces"));
        }
        lines.push(Line {
            number: i + 1,
            depth: indent / 2,
            text: raw.trim(),
        });
    }
    let Some(first) = lines.first() else {
        return Err(model_err(1, "empty model"));
    };
    if let Some(class) = first.text.strip_prefix("class: ") {
        if lines.len() > 1 {
            return Err(model_err(lines[1].number, "unexpected line after single-leaf tree"));
        }
        let class = class
            .trim()
            .parse()
            .map_err(|e: Error| model_err(first.number, e.to_string()))?;
        return Ok(TreeNode::leaf(class, ClassCounts::default()));
    }
    let mut pos = 0;
    let tree = parse_test(&lines, &mut pos, 0)?;
    if let Some(extra) = lines.get(pos) {
        return Err(model_err(extra.number, "unexpected line"));
    }
    Ok(tree)
}

enum Head {
    Le(FeatureId, u32),
    Gt(FeatureId, u32),
    Eq(FeatureId, FeatureValue),
}

/// Splits `<kw> <cond> then [class]` into the condition and optional class.
fn split_branch<'a>(line: &Line<'a>, keyword: &str) -> Result<(Head, Option<Classification>)> {
    let rest = line
        .text
        .strip_prefix(keyword)
        .and_then(|r| r.strip_prefix(' '))
        .ok_or_else(|| model_err(line.number, format!("expected `{keyword}`")))?;
    let (cond, tail) = match rest.rsplit_once(" then") {
        Some((c, t)) => (c, t.trim()),
        None => return Err(model_err(line.number, "missing `then`")),
    };
    let class = if tail.is_empty() {
        None
    } else {
        Some(tail.parse().map_err(|e: Error| model_err(line.number, e.to_string()))?)
    };
    let parts: Vec<&str> = cond.split_whitespace().collect();
    let [name, op, value] = parts[..] else {
        return Err(model_err(line.number, "condition must be `<feature> <op> <value>`"));
    };
    let feature: FeatureId = name.parse().map_err(|e: Error| model_err(line.number, e.to_string()))?;
    let head = match op {
        "<=" | ">" => {
            if !feature.is_numeric() {
                return Err(model_err(line.number, format!("{feature} is not numeric")));
            }
            let t: u32 = value
                .parse()
                .map_err(|_| model_err(line.number, format!("bad threshold `{value}`")))?;
            if op == "<=" {
                Head::Le(feature, t)
            } else {
                Head::Gt(feature, t)
            }
        }
        "=" => {
            if feature.is_numeric() {
                return Err(model_err(line.number, format!("{feature} needs a threshold test")));
            }
            let v = parse_value(feature, value).map_err(|e| model_err(line.number, e.to_string()))?;
            Head::Eq(feature, v)
        }
        _ => return Err(model_err(line.number, format!("unknown operator `{op}`"))),
    };
    Ok((head, class))
}

fn parse_child(lines: &[Line<'_>], pos: &mut usize, depth: usize, class: Option<Classification>) -> Result<TreeNode> {
    match class {
        Some(c) => Ok(TreeNode::leaf(c, ClassCounts::default())),
        None => parse_test(lines, pos, depth + 1),
    }
}

fn parse_test(lines: &[Line<'_>], pos: &mut usize, depth: usize) -> Result<TreeNode> {
    let Some(line) = lines.get(*pos) else {
        let last = lines.last().map_or(1, |l| l.number);
        return Err(model_err(last, "missing subtree"));
    };
    if line.depth != depth {
        return Err(model_err(line.number, format!("expected indentation depth {depth}")));
    }
    let (head, class) = split_branch(line, "if")?;
    *pos += 1;
    match head {
        Head::Le(feature, threshold) => {
            let le = parse_child(lines, pos, depth, class)?;
            let next = lines
                .get(*pos)
                .filter(|l| l.depth == depth)
                .ok_or_else(|| model_err(line.number, "threshold test lacks its `elseif` branch"))?;
            let (head, class) = split_branch(next, "elseif")?;
            match head {
                Head::Gt(f, t) if f == feature && t == threshold => {}
                _ => return Err(model_err(next.number, "expected the complementary `>` test")),
            }
            *pos += 1;
            let gt = parse_child(lines, pos, depth, class)?;
            Ok(TreeNode::NumericTest {
                feature,
                threshold,
                le: Box::new(le),
                gt: Box::new(gt),
            })
        }
        Head::Gt(..) => Err(model_err(line.number, "a threshold test starts with `<=`")),
        Head::Eq(feature, value) => {
            let mut branches = vec![(value, parse_child(lines, pos, depth, class)?)];
            loop {
                let Some(next) = lines.get(*pos).filter(|l| l.depth == depth) else {
                    return Err(model_err(line.number, "symbolic test lacks its `else` line"));
                };
                if let Some(rest) = next.text.strip_prefix("else ") {
                    let absent = rest
                        .trim()
                        .parse()
                        .map_err(|e: Error| model_err(next.number, e.to_string()))?;
                    *pos += 1;
                    branches.sort_by_key(|(v, _)| feature.rank(*v));
                    return Ok(TreeNode::SymbolicTest {
                        feature,
                        branches,
                        absent,
                    });
                }
                let (head, class) = split_branch(next, "elseif")?;
                let Head::Eq(f, v) = head else {
                    return Err(model_err(next.number, "expected another value test"));
                };
                if f != feature || branches.iter().any(|(bv, _)| *bv == v) {
                    return Err(model_err(next.number, "branch does not continue the same test"));
                }
                *pos += 1;
                branches.push((v, parse_child(lines, pos, depth, class)?));
            }
        }
    }
}
