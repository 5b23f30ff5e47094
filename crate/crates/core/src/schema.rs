//! The feature universe: identifiers, value vocabularies, value parsing,
//! judge combination, the accent/orthography abstraction maps and the
//! catalog of feature sets used in experiments.

use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use crate::error::{Error, Result};

pub const FEATURE_COUNT: usize = 15;

/// Literal used for "not applicable" on textual features.
pub const NA: &str = "NA";

const COMPOSITION: &[&str] = &["only", "only_cue", "other"];
const ACCENT: &[&str] = &["H*", "L*", "L*+H", "L+H*", "H*+L", "H+L*", "deaccented", "ambiguous"];
const ACCENT_CLASS: &[&str] = &["H*", "L*", "complex", "deaccented", "ambiguous"];
const BOOLEAN: &[&str] = &["true", "false"];
const ORTH_PRECEDING: &[&str] = &["comma", "dash", "period", "paragraph", "false"];
const ORTH_SUCCEEDING: &[&str] = &["comma", "dash", "period", "false"];
const PART_OF_SPEECH: &[&str] = &[
    "article",
    "coordinating_conjunction",
    "cardinal_numeral",
    "subordinating_conjunction",
    "preposition",
    "adjective",
    "singular_or_mass_noun",
    "singular_proper_noun",
    "intensifier",
    "adverb",
    "verb_base_form",
];
const TOKENS: &[&str] = &[
    "actually",
    "also",
    "although",
    "and",
    "basically",
    "because",
    "but",
    "essentially",
    "except",
    "finally",
    "first",
    "further",
    "generally",
    "however",
    "indeed",
    "like",
    "look",
    "next",
    "no",
    "now",
    "ok",
    "or",
    "otherwise",
    "right",
    "say",
    "second",
    "see",
    "similarly",
    "since",
    "so",
    "then",
    "therefore",
    "well",
    "yes",
];

/// One of the fifteen features describing a cue-phrase token.
///
/// The declaration order is the canonical schema order; learners use it to
/// break ties between equally good tests.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FeatureId {
    PhraseLength,
    PhrasePosition,
    IntermediateLength,
    IntermediatePosition,
    IntermediateComposition,
    Accent,
    AccentClass,
    CuePreceding,
    CueSucceeding,
    OrthPreceding,
    OrthPrecedingAbs,
    OrthSucceeding,
    OrthSucceedingAbs,
    PartOfSpeech,
    Token,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FeatureKind {
    Prosodic,
    Textual,
    Lexical,
}

impl FeatureId {
    pub const ALL: [FeatureId; FEATURE_COUNT] = [
        FeatureId::PhraseLength,
        FeatureId::PhrasePosition,
        FeatureId::IntermediateLength,
        FeatureId::IntermediatePosition,
        FeatureId::IntermediateComposition,
        FeatureId::Accent,
        FeatureId::AccentClass,
        FeatureId::CuePreceding,
        FeatureId::CueSucceeding,
        FeatureId::OrthPreceding,
        FeatureId::OrthPrecedingAbs,
        FeatureId::OrthSucceeding,
        FeatureId::OrthSucceedingAbs,
        FeatureId::PartOfSpeech,
        FeatureId::Token,
    ];

    /// The fourteen non-lexical features.
    pub fn base() -> &'static [FeatureId] {
        &Self::ALL[..14]
    }

    pub fn index(self) -> usize {
        self as usize
    }

    /// Short code, e.g. `P-P` or `O-S*`.
    pub fn code(self) -> &'static str {
        match self {
            FeatureId::PhraseLength => "P-L",
            FeatureId::PhrasePosition => "P-P",
            FeatureId::IntermediateLength => "I-L",
            FeatureId::IntermediatePosition => "I-P",
            FeatureId::IntermediateComposition => "I-C",
            FeatureId::Accent => "A",
            FeatureId::AccentClass => "A*",
            FeatureId::CuePreceding => "C-P",
            FeatureId::CueSucceeding => "C-S",
            FeatureId::OrthPreceding => "O-P",
            FeatureId::OrthPrecedingAbs => "O-P*",
            FeatureId::OrthSucceeding => "O-S",
            FeatureId::OrthSucceedingAbs => "O-S*",
            FeatureId::PartOfSpeech => "POS",
            FeatureId::Token => "T",
        }
    }

    /// Column name used in corpus files and serialized models.
    pub fn column(self) -> &'static str {
        match self {
            FeatureId::PhraseLength => "p_len",
            FeatureId::PhrasePosition => "p_pos",
            FeatureId::IntermediateLength => "i_len",
            FeatureId::IntermediatePosition => "i_pos",
            FeatureId::IntermediateComposition => "i_comp",
            FeatureId::Accent => "accent",
            FeatureId::AccentClass => "accent_abs",
            FeatureId::CuePreceding => "cue_prec",
            FeatureId::CueSucceeding => "cue_succ",
            FeatureId::OrthPreceding => "orth_prec",
            FeatureId::OrthPrecedingAbs => "orth_prec_abs",
            FeatureId::OrthSucceeding => "orth_succ",
            FeatureId::OrthSucceedingAbs => "orth_succ_abs",
            FeatureId::PartOfSpeech => "pos",
            FeatureId::Token => "token",
        }
    }

    /// Human-readable name, used by `explain`.
    pub fn description(self) -> &'static str {
        match self {
            FeatureId::PhraseLength => "length of intonational phrase",
            FeatureId::PhrasePosition => "position in intonational phrase",
            FeatureId::IntermediateLength => "length of intermediate phrase",
            FeatureId::IntermediatePosition => "position in intermediate phrase",
            FeatureId::IntermediateComposition => "composition of intermediate phrase",
            FeatureId::Accent => "accent",
            FeatureId::AccentClass => "accent*",
            FeatureId::CuePreceding => "preceding cue phrase",
            FeatureId::CueSucceeding => "succeeding cue phrase",
            FeatureId::OrthPreceding => "preceding orthography",
            FeatureId::OrthPrecedingAbs => "preceding orthography*",
            FeatureId::OrthSucceeding => "succeeding orthography",
            FeatureId::OrthSucceedingAbs => "succeeding orthography*",
            FeatureId::PartOfSpeech => "part-of-speech",
            FeatureId::Token => "token",
        }
    }

    pub fn from_code(s: &str) -> Option<FeatureId> {
        Self::ALL.into_iter().find(|f| f.code() == s)
    }

    pub fn from_column(s: &str) -> Option<FeatureId> {
        Self::ALL.into_iter().find(|f| f.column() == s)
    }

    pub fn kind(self) -> FeatureKind {
        match self.index() {
            0..=6 => FeatureKind::Prosodic,
            7..=13 => FeatureKind::Textual,
            _ => FeatureKind::Lexical,
        }
    }

    pub fn is_numeric(self) -> bool {
        self.index() <= 3
    }

    pub fn allows_na(self) -> bool {
        self.kind() == FeatureKind::Textual
    }

    /// True for A*, O-P* and O-S*, which are computed from another feature.
    pub fn is_derived(self) -> bool {
        self.derived_from().is_some()
    }

    pub fn derived_from(self) -> Option<FeatureId> {
        match self {
            FeatureId::AccentClass => Some(FeatureId::Accent),
            FeatureId::OrthPrecedingAbs => Some(FeatureId::OrthPreceding),
            FeatureId::OrthSucceedingAbs => Some(FeatureId::OrthSucceeding),
            _ => None,
        }
    }

    /// Symbolic vocabulary in canonical order, excluding `NA`. Empty for the
    /// numeric features.
    pub fn vocabulary(self) -> &'static [&'static str] {
        match self {
            FeatureId::PhraseLength
            | FeatureId::PhrasePosition
            | FeatureId::IntermediateLength
            | FeatureId::IntermediatePosition => &[],
            FeatureId::IntermediateComposition => COMPOSITION,
            FeatureId::Accent => ACCENT,
            FeatureId::AccentClass => ACCENT_CLASS,
            FeatureId::CuePreceding
            | FeatureId::CueSucceeding
            | FeatureId::OrthPrecedingAbs
            | FeatureId::OrthSucceedingAbs => BOOLEAN,
            FeatureId::OrthPreceding => ORTH_PRECEDING,
            FeatureId::OrthSucceeding => ORTH_SUCCEEDING,
            FeatureId::PartOfSpeech => PART_OF_SPEECH,
            FeatureId::Token => TOKENS,
        }
    }

    /// Every symbolic value of the feature, with `NA` last where allowed.
    pub fn symbolic_values(self) -> Vec<FeatureValue> {
        let mut out: Vec<FeatureValue> = self.vocabulary().iter().map(|t| FeatureValue::Symbolic(t)).collect();
        if self.allows_na() {
            out.push(FeatureValue::Na);
        }
        out
    }

    /// Position of a value in canonical order: numbers by magnitude, tags by
    /// vocabulary position, `NA` after every tag.
    pub fn rank(self, value: FeatureValue) -> u32 {
        match value {
            FeatureValue::Numeric(n) => n,
            FeatureValue::Symbolic(tag) => self
                .vocabulary()
                .iter()
                .position(|t| *t == tag)
                .map_or(u32::MAX - 1, |i| i as u32),
            FeatureValue::Na => u32::MAX,
        }
    }

    /// Checks that `value` is admissible for this feature.
    pub fn validate(self, value: FeatureValue) -> Result<()> {
        match value {
            FeatureValue::Numeric(0) if self.is_numeric() => Err(Error::NonPositive { feature: self }),
            FeatureValue::Numeric(_) if self.is_numeric() => Ok(()),
            FeatureValue::Na if self.allows_na() => Ok(()),
            FeatureValue::Na => Err(Error::NaNotAllowed { feature: self }),
            FeatureValue::Symbolic(tag) if self.vocabulary().contains(&tag) => Ok(()),
            FeatureValue::Symbolic(tag) => Err(Error::UnknownTag {
                feature: self,
                text: tag.to_string(),
            }),
            FeatureValue::Numeric(n) => Err(Error::UnknownTag {
                feature: self,
                text: n.to_string(),
            }),
        }
    }
}

impl fmt::Display for FeatureId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.code())
    }
}

impl FromStr for FeatureId {
    type Err = Error;

    /// Accepts either the short code (`P-P`) or the column name (`p_pos`).
    fn from_str(s: &str) -> Result<Self> {
        FeatureId::from_code(s)
            .or_else(|| FeatureId::from_column(s))
            .ok_or_else(|| Error::UnknownFeature(s.to_string()))
    }
}

/// A typed feature value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FeatureValue {
    /// Length in words or 1-based position.
    Numeric(u32),
    /// Canonical tag from the owning feature's vocabulary.
    Symbolic(&'static str),
    Na,
}

impl FeatureValue {
    pub fn as_numeric(self) -> Option<u32> {
        match self {
            FeatureValue::Numeric(n) => Some(n),
            _ => None,
        }
    }
}

impl fmt::Display for FeatureValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FeatureValue::Numeric(n) => write!(f, "{n}"),
            FeatureValue::Symbolic(tag) => f.write_str(tag),
            FeatureValue::Na => f.write_str(NA),
        }
    }
}

/// Non-canonical spellings accepted on input.
fn alias(feature: FeatureId, text: &str) -> &str {
    match (feature, text) {
        (_, "t") => "true",
        (_, "f") => "false",
        (FeatureId::OrthPreceding, "par.") => "paragraph",
        (FeatureId::Accent | FeatureId::AccentClass, "deaccent") => "deaccented",
        (FeatureId::IntermediateComposition, "only_cue_phrases") => "only_cue",
        _ => text,
    }
}

/// Parses a single value token for `feature`.
pub fn parse_value(feature: FeatureId, text: &str) -> Result<FeatureValue> {
    let text = text.trim();
    if feature.is_numeric() {
        if text == NA {
            return Err(Error::NaNotAllowed { feature });
        }
        let n: i64 = text.parse().map_err(|_| Error::NumericExpected {
            feature,
            text: text.to_string(),
        })?;
        if n <= 0 {
            return Err(Error::NonPositive { feature });
        }
        let n = u32::try_from(n).map_err(|_| Error::NumericExpected {
            feature,
            text: text.to_string(),
        })?;
        return Ok(FeatureValue::Numeric(n));
    }
    if text == NA {
        return if feature.allows_na() {
            Ok(FeatureValue::Na)
        } else {
            Err(Error::NaNotAllowed { feature })
        };
    }
    let wanted = alias(feature, text);
    feature
        .vocabulary()
        .iter()
        .find(|t| **t == wanted)
        .map(|t| FeatureValue::Symbolic(t))
        .ok_or_else(|| Error::UnknownTag {
            feature,
            text: text.to_string(),
        })
}

/// Maps an accent to its abstract class: the four bitonal accents collapse
/// into `complex`, everything else is kept.
pub fn abstract_accent(accent: FeatureValue) -> FeatureValue {
    match accent {
        FeatureValue::Symbolic("L*+H" | "L+H*" | "H*+L" | "H+L*") => FeatureValue::Symbolic("complex"),
        FeatureValue::Symbolic(tag) => {
            FeatureValue::Symbolic(ACCENT_CLASS.iter().find(|t| **t == tag).copied().unwrap_or(tag))
        }
        other => other,
    }
}

/// Collapses any punctuation mark to `true`; `false` and `NA` are kept.
pub fn abstract_orthography(orth: FeatureValue) -> FeatureValue {
    match orth {
        FeatureValue::Symbolic("comma" | "dash" | "period" | "paragraph" | "true") => FeatureValue::Symbolic("true"),
        FeatureValue::Symbolic(_) => FeatureValue::Symbolic("false"),
        other => other,
    }
}

/// Abstraction map for a derived feature, applied to its base value.
pub fn derive_value(derived: FeatureId, base: FeatureValue) -> FeatureValue {
    match derived {
        FeatureId::AccentClass => abstract_accent(base),
        _ => abstract_orthography(base),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Classification {
    Discourse,
    Sentential,
}

impl Classification {
    pub const ALL: [Classification; 2] = [Classification::Discourse, Classification::Sentential];

    pub fn name(self) -> &'static str {
        match self {
            Classification::Discourse => "discourse",
            Classification::Sentential => "sentential",
        }
    }

    pub fn opposite(self) -> Classification {
        match self {
            Classification::Discourse => Classification::Sentential,
            Classification::Sentential => Classification::Discourse,
        }
    }
}

impl fmt::Display for Classification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Classification {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "discourse" => Ok(Classification::Discourse),
            "sentential" => Ok(Classification::Sentential),
            _ => Err(Error::UnknownClass(s.to_string())),
        }
    }
}

/// A single judge's label for a token.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum JudgeLabel {
    Discourse,
    Sentential,
    Ambiguous,
}

impl JudgeLabel {
    pub const ALL: [JudgeLabel; 3] = [JudgeLabel::Discourse, JudgeLabel::Sentential, JudgeLabel::Ambiguous];

    pub fn name(self) -> &'static str {
        match self {
            JudgeLabel::Discourse => "discourse",
            JudgeLabel::Sentential => "sentential",
            JudgeLabel::Ambiguous => "ambiguous",
        }
    }
}

impl fmt::Display for JudgeLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for JudgeLabel {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "discourse" => Ok(JudgeLabel::Discourse),
            "sentential" => Ok(JudgeLabel::Sentential),
            "ambiguous" => Ok(JudgeLabel::Ambiguous),
            _ => Err(Error::UnknownClass(s.to_string())),
        }
    }
}

/// Combines two judgments. A token is classifiable only when both judges
/// gave the same non-ambiguous label; `None` marks it non-classifiable.
pub fn combine_judgments(first: JudgeLabel, second: JudgeLabel) -> Option<Classification> {
    match (first, second) {
        (JudgeLabel::Discourse, JudgeLabel::Discourse) => Some(Classification::Discourse),
        (JudgeLabel::Sentential, JudgeLabel::Sentential) => Some(Classification::Sentential),
        _ => None,
    }
}

/// A named subset of features, kept in schema order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FeatureSet {
    name: String,
    members: Vec<FeatureId>,
}

impl FeatureSet {
    pub fn new(name: impl Into<String>, members: impl IntoIterator<Item = FeatureId>) -> Result<Self> {
        let mut members: Vec<FeatureId> = members.into_iter().collect();
        members.sort();
        members.dedup();
        if members.is_empty() {
            return Err(Error::EmptyFeatureSet);
        }
        Ok(FeatureSet {
            name: name.into(),
            members,
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn members(&self) -> &[FeatureId] {
        &self.members
    }

    pub fn contains(&self, feature: FeatureId) -> bool {
        self.members.binary_search(&feature).is_ok()
    }

    /// The `+` variant: this set plus the token feature.
    pub fn with_token(&self) -> FeatureSet {
        let mut members = self.members.clone();
        members.push(FeatureId::Token);
        FeatureSet::new(format!("{}+", self.name), members).expect("nonempty")
    }

    /// Looks a set up in the built-in catalog (case-insensitive).
    pub fn lookup(name: &str) -> Result<FeatureSet> {
        catalog()
            .iter()
            .find(|s| s.name.eq_ignore_ascii_case(name))
            .cloned()
            .ok_or_else(|| Error::UnknownFeatureSet(name.to_string()))
    }

    /// Index in the catalog, used to order report rows.
    pub fn catalog_position(&self) -> Option<usize> {
        catalog().iter().position(|s| s.name == self.name)
    }
}

impl fmt::Display for FeatureSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name)
    }
}

fn multiple_sets() -> Vec<(&'static str, Vec<FeatureId>)> {
    use FeatureId::*;
    let prosody = vec![
        PhraseLength,
        PhrasePosition,
        IntermediateLength,
        IntermediatePosition,
        IntermediateComposition,
        Accent,
        AccentClass,
    ];
    let text = vec![
        CuePreceding,
        CueSucceeding,
        OrthPreceding,
        OrthPrecedingAbs,
        OrthSucceeding,
        OrthSucceedingAbs,
        PartOfSpeech,
    ];
    let mut speech_adj = prosody.clone();
    speech_adj.extend([CuePreceding, CueSucceeding]);
    vec![
        ("prosody", prosody),
        (
            "hl93features",
            vec![IntermediatePosition, IntermediateComposition, Accent, AccentClass],
        ),
        (
            "phrasing",
            vec![
                PhraseLength,
                PhrasePosition,
                IntermediateLength,
                IntermediatePosition,
                IntermediateComposition,
            ],
        ),
        ("length", vec![PhraseLength, IntermediateLength]),
        ("position", vec![PhrasePosition, IntermediatePosition]),
        ("intonational", vec![PhraseLength, PhrasePosition]),
        (
            "intermediate",
            vec![IntermediateLength, IntermediatePosition, IntermediateComposition],
        ),
        ("text", text),
        ("adjacency", vec![CuePreceding, CueSucceeding]),
        (
            "orthography",
            vec![OrthPreceding, OrthPrecedingAbs, OrthSucceeding, OrthSucceedingAbs],
        ),
        ("preceding", vec![CuePreceding, OrthPreceding, OrthPrecedingAbs]),
        ("succeeding", vec![CueSucceeding, OrthSucceeding, OrthSucceedingAbs]),
        ("speech-text", FeatureId::base().to_vec()),
        ("speech-adj", speech_adj),
    ]
}

/// The 56 built-in feature sets: each single base feature, each multiple
/// set, and the `+` (with token) variant of every one of them. Each set is
/// immediately followed by its `+` variant; single sets come first.
pub fn catalog() -> &'static [FeatureSet] {
    static CATALOG: OnceLock<Vec<FeatureSet>> = OnceLock::new();
    CATALOG.get_or_init(|| {
        let singles = FeatureId::base()
            .iter()
            .map(|f| FeatureSet::new(f.code(), [*f]).expect("nonempty"));
        let multiples = multiple_sets()
            .into_iter()
            .map(|(name, members)| FeatureSet::new(name, members).expect("nonempty"));
        singles
            .chain(multiples)
            .flat_map(|s| {
                let plus = s.with_token();
                [s, plus]
            })
            .collect()
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn feature_ids_round_trip() {
        let mut seen = std::collections::HashSet::new();
        for f in FeatureId::ALL {
            assert_eq!(f.code().parse::<FeatureId>().unwrap(), f);
            assert_eq!(f.column().parse::<FeatureId>().unwrap(), f);
            assert!(seen.insert(f.code()));
        }
        assert_eq!(seen.len(), 15);
        assert!("X-Y".parse::<FeatureId>().is_err());
    }

    #[test]
    fn parse_value_examples() {
        assert_eq!(
            parse_value(FeatureId::Accent, "H*+L").unwrap(),
            FeatureValue::Symbolic("H*+L")
        );
        assert_eq!(
            parse_value(FeatureId::PhraseLength, "9").unwrap(),
            FeatureValue::Numeric(9)
        );
        assert_eq!(parse_value(FeatureId::CuePreceding, "NA").unwrap(), FeatureValue::Na);
        assert!(matches!(
            parse_value(FeatureId::IntermediatePosition, "0"),
            Err(Error::NonPositive { .. })
        ));
    }

    #[test]
    fn parse_value_errors() {
        assert!(matches!(
            parse_value(FeatureId::Accent, "M*"),
            Err(Error::UnknownTag { .. })
        ));
        assert!(matches!(
            parse_value(FeatureId::PhrasePosition, "two"),
            Err(Error::NumericExpected { .. })
        ));
        assert!(matches!(
            parse_value(FeatureId::PhrasePosition, "-3"),
            Err(Error::NonPositive { .. })
        ));
        assert!(matches!(
            parse_value(FeatureId::Accent, "NA"),
            Err(Error::NaNotAllowed { .. })
        ));
        assert!(matches!(
            parse_value(FeatureId::Token, "NA"),
            Err(Error::NaNotAllowed { .. })
        ));
        assert!(matches!(
            parse_value(FeatureId::PhraseLength, "NA"),
            Err(Error::NaNotAllowed { .. })
        ));
        // paragraph exists only on the preceding side
        assert!(parse_value(FeatureId::OrthSucceeding, "paragraph").is_err());
    }

    #[test]
    fn aliases_render_canonically() {
        assert_eq!(
            parse_value(FeatureId::OrthPreceding, "par.").unwrap().to_string(),
            "paragraph"
        );
        assert_eq!(
            parse_value(FeatureId::OrthPrecedingAbs, "t").unwrap().to_string(),
            "true"
        );
        assert_eq!(parse_value(FeatureId::CueSucceeding, "f").unwrap().to_string(), "false");
        assert_eq!(
            parse_value(FeatureId::Accent, "deaccent").unwrap().to_string(),
            "deaccented"
        );
    }

    #[test]
    fn every_vocabulary_token_round_trips() {
        for f in FeatureId::ALL {
            for v in f.symbolic_values() {
                let text = v.to_string();
                assert_eq!(parse_value(f, &text).unwrap(), v, "{f} {text}");
                assert_eq!(parse_value(f, &text).unwrap().to_string(), text);
                f.validate(v).unwrap();
            }
        }
        for n in [1u32, 2, 17, 400] {
            assert_eq!(
                parse_value(FeatureId::PhraseLength, &n.to_string())
                    .unwrap()
                    .to_string(),
                n.to_string()
            );
        }
    }

    #[test]
    fn vocabulary_sizes() {
        assert_eq!(FeatureId::PartOfSpeech.vocabulary().len(), 11);
        assert_eq!(FeatureId::Token.vocabulary().len(), 34);
        assert_eq!(FeatureId::Accent.vocabulary().len(), 8);
        assert_eq!(FeatureId::AccentClass.vocabulary().len(), 5);
        assert_eq!(FeatureId::OrthPreceding.symbolic_values().len(), 6);
        assert_eq!(FeatureId::OrthSucceeding.symbolic_values().len(), 5);
    }

    #[test]
    fn accent_abstraction() {
        let s = FeatureValue::Symbolic;
        assert_eq!(abstract_accent(s("L*+H")), s("complex"));
        assert_eq!(abstract_accent(s("H*")), s("H*"));
        assert_eq!(abstract_accent(s("deaccented")), s("deaccented"));
        for a in FeatureId::Accent.symbolic_values() {
            let abs = abstract_accent(a);
            FeatureId::AccentClass.validate(abs).unwrap();
            // idempotent on its range
            assert_eq!(abstract_accent(abs), abs);
        }
    }

    #[test]
    fn orthography_abstraction() {
        let s = FeatureValue::Symbolic;
        assert_eq!(abstract_orthography(s("paragraph")), s("true"));
        assert_eq!(abstract_orthography(s("false")), s("false"));
        assert_eq!(abstract_orthography(FeatureValue::Na), FeatureValue::Na);
        for f in [FeatureId::OrthPreceding, FeatureId::OrthSucceeding] {
            for o in f.symbolic_values() {
                let abs = abstract_orthography(o);
                FeatureId::OrthPrecedingAbs.validate(abs).unwrap();
                assert_eq!(abstract_orthography(abs), abs);
            }
        }
    }

    #[test]
    fn judgments_combine_symmetrically() {
        use JudgeLabel::*;
        assert_eq!(combine_judgments(Discourse, Discourse), Some(Classification::Discourse));
        assert_eq!(
            combine_judgments(Sentential, Sentential),
            Some(Classification::Sentential)
        );
        assert_eq!(combine_judgments(Discourse, Sentential), None);
        assert_eq!(combine_judgments(Ambiguous, Discourse), None);
        assert_eq!(combine_judgments(Ambiguous, Ambiguous), None);
        for a in JudgeLabel::ALL {
            for b in JudgeLabel::ALL {
                assert_eq!(combine_judgments(a, b), combine_judgments(b, a));
            }
        }
    }

    #[test]
    fn catalog_shape() {
        let cat = catalog();
        assert_eq!(cat.len(), 56);
        let names: std::collections::HashSet<_> = cat.iter().map(|s| s.name()).collect();
        assert_eq!(names.len(), 56);
        for s in cat {
            if let Some(base) = s.name().strip_suffix('+') {
                let base = FeatureSet::lookup(base).unwrap();
                let mut expected = base.members().to_vec();
                expected.push(FeatureId::Token);
                assert_eq!(s.members(), expected.as_slice());
            } else {
                assert!(s.members().iter().all(|f| *f != FeatureId::Token));
                assert!(s.members().windows(2).all(|w| w[0] < w[1]));
            }
        }
        let speech_text = FeatureSet::lookup("speech-text").unwrap();
        assert_eq!(speech_text.members(), FeatureId::base());
        let speech_adj = FeatureSet::lookup("speech-adj").unwrap();
        assert_eq!(speech_adj.members().len(), 9);
        assert_eq!(
            FeatureSet::lookup("hl93features").unwrap().members(),
            &[
                FeatureId::IntermediatePosition,
                FeatureId::IntermediateComposition,
                FeatureId::Accent,
                FeatureId::AccentClass
            ]
        );
        assert_eq!(
            FeatureSet::lookup("P-P+").unwrap().members(),
            &[FeatureId::PhrasePosition, FeatureId::Token]
        );
        assert_eq!(
            FeatureSet::lookup("O-P*").unwrap().members(),
            &[FeatureId::OrthPrecedingAbs]
        );
        assert!(FeatureSet::lookup("nope").is_err());
    }

    #[test]
    fn empty_set_rejected() {
        assert!(matches!(FeatureSet::new("x", []), Err(Error::EmptyFeatureSet)));
    }
}
