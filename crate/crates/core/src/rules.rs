//! Ordered rule lists learned by separate-and-conquer: rules for one target
//! class are grown condition by condition using FOIL gain, pruned on a
//! held-out part of the data, and evaluated first-match with a default.

use std::fmt;
use std::fmt::Write as _;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::corpus::{Example, Instance};
use crate::error::{Error, Result};
use crate::schema::{parse_value, Classification, FeatureId, FeatureSet, FeatureValue};
use crate::seed::derive_seed;
use crate::tree::{ClassCounts, Naming};

const GAIN_EPS: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Op {
    Eq,
    Le,
    Ge,
}

impl Op {
    pub fn symbol(self) -> &'static str {
        match self {
            Op::Eq => "=",
            Op::Le => "<=",
            Op::Ge => ">=",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Condition {
    pub feature: FeatureId,
    pub op: Op,
    pub value: FeatureValue,
}

impl Condition {
    pub fn new(feature: FeatureId, op: Op, value: FeatureValue) -> Result<Self> {
        feature.validate(value)?;
        let numeric_op = op != Op::Eq;
        if numeric_op != feature.is_numeric() {
            return Err(Error::InvalidParams(format!(
                "operator `{}` cannot be applied to {feature}",
                op.symbol()
            )));
        }
        Ok(Condition { feature, op, value })
    }

    pub fn holds(&self, x: &Instance) -> Result<bool> {
        let v = x.require(self.feature)?;
        Ok(match (self.op, v.as_numeric(), self.value.as_numeric()) {
            (Op::Eq, _, _) => v == self.value,
            (Op::Le, Some(a), Some(b)) => a <= b,
            (Op::Ge, Some(a), Some(b)) => a >= b,
            _ => false,
        })
    }

    fn render(&self, naming: Naming) -> String {
        format!("{} {} {}", naming.name(self.feature), self.op.symbol(), self.value)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Rule {
    pub conditions: Vec<Condition>,
    pub class: Classification,
}

impl Rule {
    pub fn covers(&self, x: &Instance) -> Result<bool> {
        for c in &self.conditions {
            if !c.holds(x)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// An empty rule covers everything; only the default may be empty.
    pub fn is_empty(&self) -> bool {
        self.conditions.is_empty()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RuleList {
    pub rules: Vec<Rule>,
    pub default: Classification,
}

impl RuleList {
    /// Index of the first rule covering `x`, or `None` when the default
    /// applies.
    pub fn firing_rule(&self, x: &Instance) -> Result<Option<usize>> {
        for (i, r) in self.rules.iter().enumerate() {
            if r.covers(x)? {
                return Ok(Some(i));
            }
        }
        Ok(None)
    }

    pub fn classify(&self, x: &Instance) -> Result<Classification> {
        Ok(match self.firing_rule(x)? {
            Some(i) => self.rules[i].class,
            None => self.default,
        })
    }

    pub fn tested_features(&self) -> Vec<FeatureId> {
        let mut out: Vec<FeatureId> = self
            .rules
            .iter()
            .flat_map(|r| r.conditions.iter().map(|c| c.feature))
            .collect();
        out.sort();
        out.dedup();
        out
    }
}

pub fn classify_rules(list: &RuleList, x: &Instance) -> Result<Classification> {
    list.classify(x)
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RuleParams {
    /// Share of the remaining examples used to grow each rule; the rest
    /// prunes it. A value of 1 leaves no pruning data.
    pub grow_fraction: f64,
    /// Target examples of the grow set a rule must cover to be accepted.
    pub min_coverage: usize,
    pub seed: u64,
    pub prune: bool,
}

impl Default for RuleParams {
    fn default() -> Self {
        RuleParams {
            grow_fraction: 2.0 / 3.0,
            min_coverage: 1,
            seed: 0,
            prune: true,
        }
    }
}

impl RuleParams {
    pub fn validate(&self) -> Result<()> {
        if !(self.grow_fraction > 0.0 && self.grow_fraction <= 1.0) {
            return Err(Error::InvalidParams("grow_fraction must lie in (0, 1]".into()));
        }
        if self.min_coverage < 1 {
            return Err(Error::InvalidParams("min_coverage must be at least 1".into()));
        }
        Ok(())
    }
}

/// Target (`p`) and non-target (`n`) examples covered by a rule.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct Coverage {
    pub p: usize,
    pub n: usize,
}

impl Coverage {
    pub fn new(p: usize, n: usize) -> Self {
        Coverage { p, n }
    }

    pub fn total(self) -> usize {
        self.p + self.n
    }

    pub fn precision(self) -> Option<f64> {
        (self.total() > 0).then(|| self.p as f64 / self.total() as f64)
    }

    /// `(p - n) / (p + n)`, the pruning score.
    pub fn prune_value(self) -> Option<f64> {
        (self.total() > 0).then(|| (self.p as f64 - self.n as f64) / self.total() as f64)
    }
}

/// FOIL information gain of refining a rule from `before` to `after`
/// coverage: `p1 * (log2(p1 / (p1 + n1)) - log2(p0 / (p0 + n0)))`.
pub fn foil_gain(before: Coverage, after: Coverage) -> Result<f64> {
    if before.p == 0 {
        return Err(Error::ZeroCoverageBefore);
    }
    if after.p == 0 {
        return Ok(0.0);
    }
    let info = |c: Coverage| (c.p as f64 / c.total() as f64).log2();
    Ok(after.p as f64 * (info(after) - info(before)))
}

type Row<'a> = (&'a Instance, Classification);

fn coverage_of(rows: &[Row<'_>], target: Classification) -> Coverage {
    rows.iter().fold(Coverage::default(), |mut c, (_, class)| {
        if *class == target {
            c.p += 1;
        } else {
            c.n += 1;
        }
        c
    })
}

fn rule_coverage(rule: &Rule, rows: &[Row<'_>], target: Classification) -> Result<Coverage> {
    let mut c = Coverage::default();
    for (x, class) in rows {
        if rule.covers(x)? {
            if *class == target {
                c.p += 1;
            } else {
                c.n += 1;
            }
        }
    }
    Ok(c)
}

fn candidates(rule: &Rule, covered: &[Row<'_>], set: &FeatureSet) -> Vec<Condition> {
    let mut out = Vec::new();
    for &feature in set.members() {
        let used = |op: Op| rule.conditions.iter().any(|c| c.feature == feature && c.op == op);
        let mut values: Vec<FeatureValue> = covered.iter().filter_map(|(x, _)| x.get(feature)).collect();
        values.sort_by_key(|v| feature.rank(*v));
        values.dedup();
        if feature.is_numeric() {
            for op in [Op::Le, Op::Ge] {
                if !used(op) {
                    out.extend(values.iter().map(|&value| Condition { feature, op, value }));
                }
            }
        } else if !used(Op::Eq) {
            out.extend(values.iter().map(|&value| Condition {
                feature,
                op: Op::Eq,
                value,
            }));
        }
    }
    out
}

/// Tie-break key: smaller threshold, then schema order, then `=, <=, >=`.
fn tie_key(c: &Condition) -> (u32, FeatureId, Op, u32) {
    (
        c.value.as_numeric().unwrap_or(0),
        c.feature,
        c.op,
        c.feature.rank(c.value),
    )
}

/// Grows one rule for `target` from the empty rule, adding the condition with
/// the highest FOIL gain until the rule covers no non-target example or no
/// condition has positive gain. At most one `<=` and one `>=` per numeric
/// feature, and one `=` per symbolic feature.
pub fn grow_rule(rows: &[Row<'_>], target: Classification, set: &FeatureSet) -> Result<Rule> {
    if rows.iter().all(|(_, c)| *c != target) {
        return Err(Error::NoTargetExamples);
    }
    let mut rule = Rule {
        conditions: Vec::new(),
        class: target,
    };
    let mut covered: Vec<Row<'_>> = rows.to_vec();
    loop {
        let before = coverage_of(&covered, target);
        if before.n == 0 {
            return Ok(rule);
        }
        let mut scored = Vec::new();
        for cond in candidates(&rule, &covered, set) {
            let mut after = Coverage::default();
            for (x, class) in &covered {
                if cond.holds(x)? {
                    if *class == target {
                        after.p += 1;
                    } else {
                        after.n += 1;
                    }
                }
            }
            scored.push((foil_gain(before, after)?, cond));
        }
        let best_gain = scored.iter().map(|(g, _)| *g).fold(f64::NEG_INFINITY, f64::max);
        if best_gain <= GAIN_EPS {
            return Ok(rule);
        }
        let best = scored
            .into_iter()
            .filter(|(g, _)| *g >= best_gain - GAIN_EPS)
            .map(|(_, c)| c)
            .min_by_key(tie_key)
            .expect("at least one candidate reaches the maximum");
        let mut kept = Vec::with_capacity(covered.len());
        for row in covered {
            if best.holds(row.0)? {
                kept.push(row);
            }
        }
        covered = kept;
        rule.conditions.push(best);
    }
}

/// Keeps the prefix of `rule` (at least one condition) with the best
/// `(p - n) / (p + n)` on the pruning rows; ties favour the shorter rule.
/// Prefixes that cover nothing are never preferred.
pub fn prune_rule(rule: &Rule, rows: &[Row<'_>]) -> Result<Rule> {
    if rule.conditions.len() <= 1 {
        return Ok(rule.clone());
    }
    let mut best: Option<(f64, usize)> = None;
    for len in (1..=rule.conditions.len()).rev() {
        let prefix = Rule {
            conditions: rule.conditions[..len].to_vec(),
            class: rule.class,
        };
        let Some(v) = rule_coverage(&prefix, rows, rule.class)?.prune_value() else {
            continue;
        };
        if best.is_none_or(|(bv, _)| v >= bv - GAIN_EPS) {
            best = Some((v, len));
        }
    }
    let len = best.map_or(rule.conditions.len(), |(_, len)| len);
    Ok(Rule {
        conditions: rule.conditions[..len].to_vec(),
        class: rule.class,
    })
}

/// Learns an ordered rule list. Rules predict the minority class of the
/// training data (ties: discourse); the default is the other class.
///
/// Each round reshuffles the remaining examples with a round-specific seed,
/// grows a rule on the grow part, prunes it on the rest, and accepts it only
/// if its precision there beats both one half and the share of target
/// examples remaining, and it covers at least `min_coverage` grow targets. Accepted rules remove the
/// examples they cover.
pub fn learn_rules(examples: &[Example], set: &FeatureSet, params: &RuleParams) -> Result<RuleList> {
    params.validate()?;
    if examples.is_empty() {
        return Err(Error::EmptyCorpus);
    }
    let mut rows: Vec<Row<'_>> = Vec::with_capacity(examples.len());
    for (index, e) in examples.iter().enumerate() {
        let class = e.class().ok_or(Error::Unlabeled { index })?;
        for &f in set.members() {
            e.instance.require(f)?;
        }
        rows.push((&e.instance, class));
    }
    let counts: ClassCounts = rows.iter().map(|(_, c)| *c).collect();
    if counts.is_pure() {
        return Ok(RuleList {
            rules: Vec::new(),
            default: counts.majority(),
        });
    }
    let target = if counts.sentential < counts.discourse {
        Classification::Sentential
    } else {
        Classification::Discourse
    };
    let mut list = RuleList {
        rules: Vec::new(),
        default: target.opposite(),
    };

    let mut remaining = rows;
    for round in 0u64.. {
        let targets_left = remaining.iter().filter(|(_, c)| *c == target).count();
        if targets_left == 0 {
            break;
        }
        let mut shuffled = remaining.clone();
        let split = if params.prune {
            shuffled.shuffle(&mut ChaCha8Rng::seed_from_u64(derive_seed(params.seed, round)));
            ((params.grow_fraction * shuffled.len() as f64).ceil() as usize).min(shuffled.len())
        } else {
            shuffled.len()
        };
        let (grow_rows, prune_rows) = shuffled.split_at(split);
        if !grow_rows.iter().any(|(_, c)| *c == target) {
            break;
        }
        let mut rule = grow_rule(grow_rows, target, set)?;
        if rule.is_empty() {
            break;
        }
        if !prune_rows.is_empty() {
            rule = prune_rule(&rule, prune_rows)?;
        }
        let judged = if prune_rows.is_empty() { grow_rows } else { prune_rows };
        let precision = rule_coverage(&rule, judged, target)?.precision().unwrap_or(0.0);
        // A rule only beats the default on what it covers when p > n.
        let base_rate = targets_left as f64 / remaining.len() as f64;
        if precision <= base_rate.max(0.5) {
            break;
        }
        if rule_coverage(&rule, grow_rows, target)?.p < params.min_coverage {
            break;
        }
        let mut kept = Vec::with_capacity(remaining.len());
        for row in remaining {
            if !rule.covers(row.0)? {
                kept.push(row);
            }
        }
        remaining = kept;
        list.rules.push(rule);
    }
    Ok(list)
}

pub fn render_rules(list: &RuleList) -> String {
    render_rules_with(list, Naming::Column)
}

/// One `if <cond> [and <cond>]* then <class>` line per rule, then
/// `default is <class>`.
pub fn render_rules_with(list: &RuleList, naming: Naming) -> String {
    let mut out = String::new();
    for rule in &list.rules {
        let conds: Vec<String> = rule.conditions.iter().map(|c| c.render(naming)).collect();
        let _ = writeln!(out, "if {} then {}", conds.join(" and "), rule.class);
    }
    let _ = writeln!(out, "default is {}", list.default);
    out
}

impl fmt::Display for RuleList {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&render_rules(self))
    }
}

fn parse_err(line: usize, reason: impl Into<String>) -> Error {
    Error::ModelParse {
        line,
        reason: reason.into(),
    }
}

fn parse_condition(text: &str, line: usize) -> Result<Condition> {
    let parts: Vec<&str> = text.split_whitespace().collect();
    let [name, op, value] = parts[..] else {
        return Err(parse_err(line, format!("malformed condition `{text}`")));
    };
    let feature: FeatureId = name.parse().map_err(|e: Error| parse_err(line, e.to_string()))?;
    let op = match op {
        "=" => Op::Eq,
        "<=" => Op::Le,
        ">=" => Op::Ge,
        _ => return Err(parse_err(line, format!("unknown operator `{op}`"))),
    };
    let value = parse_value(feature, value).map_err(|e| parse_err(line, e.to_string()))?;
    Condition::new(feature, op, value).map_err(|e| parse_err(line, e.to_string()))
}

pub fn parse_rules(text: &str) -> Result<RuleList> {
    let mut rules = Vec::new();
    let mut default = None;
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let t = raw.trim();
        if t.is_empty() {
            continue;
        }
        if default.is_some() {
            return Err(parse_err(line, "text after the default line"));
        }
        if let Some(class) = t.strip_prefix("default is ") {
            default = Some(
                class
                    .trim()
                    .parse()
                    .map_err(|e: Error| parse_err(line, e.to_string()))?,
            );
            continue;
        }
        let body = t
            .strip_prefix("if ")
            .ok_or_else(|| parse_err(line, "expected `if` or `default is`"))?;
        let (conds, class) = body
            .rsplit_once(" then ")
            .ok_or_else(|| parse_err(line, "missing `then`"))?;
        let class: Classification = class
            .trim()
            .parse()
            .map_err(|e: Error| parse_err(line, e.to_string()))?;
        let conditions = conds
            .split(" and ")
            .map(|c| parse_condition(c, line))
            .collect::<Result<Vec<_>>>()?;
        rules.push((line, Rule { conditions, class }));
    }
    let last = text.lines().count().max(1);
    let default: Classification = default.ok_or_else(|| parse_err(last, "missing `default is <class>` line"))?;
    if let Some((line, _)) = rules.iter().find(|(_, r)| r.class == default) {
        return Err(parse_err(*line, "rule predicts the default class"));
    }
    Ok(RuleList {
        rules: rules.into_iter().map(|(_, r)| r).collect(),
        default,
    })
}
