//! Trained models as one type, with a shared text format.

use crate::baselines::BaselineModel;
use crate::corpus::Instance;
use crate::error::Result;
use crate::rules::{parse_rules, render_rules_with, RuleList};
use crate::schema::{Classification, FeatureId};
use crate::tree::{parse_tree, render_tree_with, Naming, TreeNode};

/// Anything that assigns a class to an unlabeled instance.
pub trait Classifier: Send + Sync {
    fn classify(&self, x: &Instance) -> Result<Classification>;
}

impl Classifier for BaselineModel {
    fn classify(&self, x: &Instance) -> Result<Classification> {
        self.predict(x).map(|p| p.class)
    }
}

impl Classifier for TreeNode {
    fn classify(&self, x: &Instance) -> Result<Classification> {
        TreeNode::classify(self, x)
    }
}

impl Classifier for RuleList {
    fn classify(&self, x: &Instance) -> Result<Classification> {
        RuleList::classify(self, x)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum Model {
    Tree(TreeNode),
    Rules(RuleList),
}

impl Model {
    pub fn kind(&self) -> &'static str {
        match self {
            Model::Tree(_) => "tree",
            Model::Rules(_) => "rules",
        }
    }

    /// Parses either model format; a `default is` line marks a rule list.
    pub fn parse(text: &str) -> Result<Model> {
        if text.lines().any(|l| l.trim_start().starts_with("default is")) {
            parse_rules(text).map(Model::Rules)
        } else {
            parse_tree(text).map(Model::Tree)
        }
    }

    /// Canonical, parseable text.
    pub fn render(&self) -> String {
        self.render_with(Naming::Column)
    }

    /// Listing with descriptive feature names.
    pub fn explain(&self) -> String {
        self.render_with(Naming::Descriptive)
    }

    fn render_with(&self, naming: Naming) -> String {
        match self {
            Model::Tree(t) => render_tree_with(t, naming),
            Model::Rules(r) => render_rules_with(r, naming),
        }
    }

    pub fn tested_features(&self) -> Vec<FeatureId> {
        match self {
            Model::Tree(t) => t.tested_features(),
            Model::Rules(r) => r.tested_features(),
        }
    }
}

impl Classifier for Model {
    fn classify(&self, x: &Instance) -> Result<Classification> {
        match self {
            Model::Tree(t) => t.classify(x),
            Model::Rules(r) => r.classify(x),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn detects_format() {
        let rules = Model::parse("if p_pos >= 2 then sentential\ndefault is discourse\n").unwrap();
        assert_eq!(rules.kind(), "rules");
        let tree = Model::parse("if p_pos <= 1 then discourse\nelseif p_pos > 1 then sentential\n").unwrap();
        assert_eq!(tree.kind(), "tree");
        assert_eq!(
            tree.render(),
            "if p_pos <= 1 then discourse\nelseif p_pos > 1 then sentential\n"
        );
        assert_eq!(tree.tested_features(), vec![FeatureId::PhrasePosition]);
        assert_eq!(
            rules.explain(),
            "if position in intonational phrase >= 2 then sentential\ndefault is discourse\n"
        );
    }
}
