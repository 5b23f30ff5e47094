//! Well-formedness of tone sequences under the tone-sequence grammar: an
//! intermediate phrase is one or more pitch accents followed by a phrase
//! accent, and an intonational phrase is one or more intermediate phrases
//! followed by a boundary tone.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Tone {
    HStar,
    LStar,
    LStarH,
    LHStar,
    HStarL,
    HLStar,
    HPhrase,
    LPhrase,
    HBoundary,
    LBoundary,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ToneCategory {
    PitchAccent,
    PhraseAccent,
    BoundaryTone,
}

impl Tone {
    pub const ALL: [Tone; 10] = [
        Tone::HStar,
        Tone::LStar,
        Tone::LStarH,
        Tone::LHStar,
        Tone::HStarL,
        Tone::HLStar,
        Tone::HPhrase,
        Tone::LPhrase,
        Tone::HBoundary,
        Tone::LBoundary,
    ];

    pub fn symbol(self) -> &'static str {
        match self {
            Tone::HStar => "H*",
            Tone::LStar => "L*",
            Tone::LStarH => "L*+H",
            Tone::LHStar => "L+H*",
            Tone::HStarL => "H*+L",
            Tone::HLStar => "H+L*",
            Tone::HPhrase => "H-",
            Tone::LPhrase => "L-",
            Tone::HBoundary => "H%",
            Tone::LBoundary => "L%",
        }
    }

    pub fn category(self) -> ToneCategory {
        match self {
            Tone::HPhrase | Tone::LPhrase => ToneCategory::PhraseAccent,
            Tone::HBoundary | Tone::LBoundary => ToneCategory::BoundaryTone,
            _ => ToneCategory::PitchAccent,
        }
    }
}

impl fmt::Display for Tone {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.symbol())
    }
}

impl FromStr for Tone {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Tone::ALL
            .into_iter()
            .find(|t| t.symbol() == s)
            .ok_or_else(|| Error::InvalidParams(format!("unknown tone `{s}`")))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ToneSequence(pub Vec<Tone>);

impl FromStr for ToneSequence {
    type Err = Error;

    /// Whitespace- or comma-separated tone symbols.
    fn from_str(s: &str) -> Result<Self> {
        s.split(|c: char| c.is_whitespace() || c == ',')
            .filter(|t| !t.is_empty())
            .map(str::parse)
            .collect::<Result<Vec<_>>>()
            .map(ToneSequence)
    }
}

/// Where a sequence stops being well formed.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RejectAt {
    Index(usize),
    End,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Accept,
    Reject(RejectAt),
}

#[derive(Clone, Copy)]
enum State {
    /// Expecting the first pitch accent of an intermediate phrase.
    PhraseStart,
    /// Inside the accents of an intermediate phrase.
    Accents,
    /// After a phrase accent: another phrase or the boundary tone.
    PhraseEnd,
    Done,
}

/// Accepts exactly `(PitchAccent+ PhraseAccent)+ BoundaryTone`.
pub fn validate_tone_sequence(seq: &ToneSequence) -> Verdict {
    use ToneCategory::*;
    let mut state = State::PhraseStart;
    for (i, tone) in seq.0.iter().enumerate() {
        state = match (state, tone.category()) {
            (State::PhraseStart | State::Accents | State::PhraseEnd, PitchAccent) => State::Accents,
            (State::Accents, PhraseAccent) => State::PhraseEnd,
            (State::PhraseEnd, BoundaryTone) => State::Done,
            _ => return Verdict::Reject(RejectAt::Index(i)),
        };
    }
    match state {
        State::Done => Verdict::Accept,
        _ => Verdict::Reject(RejectAt::End),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn check(text: &str) -> Verdict {
        validate_tone_sequence(&text.parse().unwrap())
    }

    #[test]
    fn grammar_examples() {
        assert_eq!(check("H*+L L- H* L* L- L%"), Verdict::Accept);
        assert_eq!(check("H* H%"), Verdict::Reject(RejectAt::Index(1)));
        assert_eq!(check(""), Verdict::Reject(RejectAt::End));
    }

    #[test]
    fn more_rejections() {
        assert_eq!(check("L-"), Verdict::Reject(RejectAt::Index(0)));
        assert_eq!(check("H* L-"), Verdict::Reject(RejectAt::End));
        assert_eq!(check("H* L- L- L%"), Verdict::Reject(RejectAt::Index(2)));
        assert_eq!(check("H* L- L% H*"), Verdict::Reject(RejectAt::Index(3)));
        assert_eq!(check("L*+H H- H%"), Verdict::Accept);
    }

    #[test]
    fn unknown_symbol() {
        assert!("H* Q-".parse::<ToneSequence>().is_err());
    }
}
