use std::fs;
use std::path::Path;

use csv::{ReaderBuilder, StringRecord, WriterBuilder};

use super::{Corpus, Example, Instance, Label, LabelKind};
use crate::error::{Error, Result};
use crate::schema::{parse_value, Classification, FeatureId, JudgeLabel};

/// Feature columns shared by every corpus file.
pub const HEADER: &str =
    "p_len,p_pos,i_len,i_pos,i_comp,accent,accent_abs,cue_prec,cue_succ,orth_prec,orth_prec_abs,orth_succ,orth_succ_abs,pos,token";

const CLASS_SUFFIX: &str = ",class";
const JUDGES_SUFFIX: &str = ",judge1,judge2";

pub fn load(path: impl AsRef<Path>) -> Result<Corpus> {
    let text = fs::read_to_string(path.as_ref())?;
    Ok(parse_corpus(&text)?.with_provenance(path.as_ref().display().to_string()))
}

pub fn save(corpus: &Corpus, path: impl AsRef<Path>) -> Result<()> {
    fs::write(path, render_corpus(corpus))?;
    Ok(())
}

fn parse_err(line: usize, column: usize, reason: impl Into<String>) -> Error {
    Error::Parse {
        line,
        column,
        reason: reason.into(),
    }
}

fn line_of(record: &StringRecord) -> usize {
    record.position().map_or(0, |p| p.line() as usize)
}

/// Parses a corpus file. Blank lines are skipped; errors carry the 1-based
/// line and field number.
pub fn parse_corpus(text: &str) -> Result<Corpus> {
    let mut reader = ReaderBuilder::new()
        .has_headers(false)
        .flexible(true)
        .from_reader(text.as_bytes());
    let mut records = reader.records();
    let header = match records.next() {
        Some(Ok(r)) => r.iter().collect::<Vec<_>>().join(","),
        Some(Err(e)) => return Err(parse_err(1, 1, e.to_string())),
        None => String::new(),
    };
    let kind = match header.strip_prefix(HEADER) {
        Some(CLASS_SUFFIX) => LabelKind::Class,
        Some(JUDGES_SUFFIX) => LabelKind::Judges,
        _ => return Err(parse_err(1, 1, "unrecognized header")),
    };
    let width = FeatureId::ALL.len() + if kind == LabelKind::Class { 1 } else { 2 };

    let mut examples = Vec::new();
    for record in records {
        let record = record.map_err(|e| {
            let line = e.position().map_or(0, |p| p.line() as usize);
            parse_err(line, 1, e.to_string())
        })?;
        let line = line_of(&record);
        if record.len() != width {
            return Err(parse_err(
                line,
                record.len().min(width) + 1,
                format!("expected {width} fields, found {}", record.len()),
            ));
        }
        let mut instance = Instance::new();
        for (i, f) in FeatureId::ALL.into_iter().enumerate() {
            let value = parse_value(f, &record[i]).map_err(|e| parse_err(line, i + 1, e.to_string()))?;
            instance.set(f, value);
        }
        if !instance.abstractions_consistent() {
            return Err(Error::AbstractionMismatch { line });
        }
        let label_col = FeatureId::ALL.len() + 1;
        let field = |i: usize| &record[FeatureId::ALL.len() + i];
        let label = match kind {
            LabelKind::Class => Label::Class(
                field(0)
                    .parse::<Classification>()
                    .map_err(|e| parse_err(line, label_col, e.to_string()))?,
            ),
            LabelKind::Judges => {
                let judge = |i: usize| {
                    field(i)
                        .parse::<JudgeLabel>()
                        .map_err(|e| parse_err(line, label_col + i, e.to_string()))
                };
                Label::Judges(judge(0)?, judge(1)?)
            }
        };
        examples.push(Example { instance, label });
    }
    let mut corpus = Corpus::new(examples);
    corpus.label_kind = kind;
    Ok(corpus)
}

/// Renders a corpus in canonical file form. Missing feature values (only
/// possible on projected examples) are written as empty fields.
pub fn render_corpus(corpus: &Corpus) -> String {
    let mut writer = WriterBuilder::new().has_headers(false).from_writer(Vec::new());
    let mut header: Vec<String> = HEADER.split(',').map(String::from).collect();
    match corpus.label_kind {
        LabelKind::Class => header.push("class".into()),
        LabelKind::Judges => header.extend(["judge1".into(), "judge2".into()]),
    }
    let mut rows = vec![header];
    for e in corpus.iter() {
        let mut row: Vec<String> = FeatureId::ALL
            .into_iter()
            .map(|f| e.get(f).map(|v| v.to_string()).unwrap_or_default())
            .collect();
        match e.label {
            Label::Class(c) => row.push(c.to_string()),
            Label::Judges(a, b) => row.extend([a.to_string(), b.to_string()]),
        }
        rows.push(row);
    }
    for row in rows {
        writer.write_record(&row).expect("writing to memory");
    }
    String::from_utf8(writer.into_inner().expect("writing to memory")).expect("fields are UTF-8")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::schema::FeatureValue;

    const NOW_ROW: &str = "9,1,1,1,only,H*+L,complex,false,true,paragraph,true,false,false,adverb,now,discourse";

    #[test]
    fn discourse_now_row() {
        let text = format!("{HEADER},class\n{NOW_ROW}\n");
        let c = parse_corpus(&text).unwrap();
        assert_eq!(c.len(), 1);
        let e = &c.examples[0];
        let s = FeatureValue::Symbolic;
        let expect = [
            (FeatureId::PhraseLength, FeatureValue::Numeric(9)),
            (FeatureId::PhrasePosition, FeatureValue::Numeric(1)),
            (FeatureId::IntermediateLength, FeatureValue::Numeric(1)),
            (FeatureId::IntermediatePosition, FeatureValue::Numeric(1)),
            (FeatureId::IntermediateComposition, s("only")),
            (FeatureId::Accent, s("H*+L")),
            (FeatureId::AccentClass, s("complex")),
            (FeatureId::CuePreceding, s("false")),
            (FeatureId::CueSucceeding, s("true")),
            (FeatureId::OrthPreceding, s("paragraph")),
            (FeatureId::OrthPrecedingAbs, s("true")),
            (FeatureId::OrthSucceeding, s("false")),
            (FeatureId::OrthSucceedingAbs, s("false")),
            (FeatureId::PartOfSpeech, s("adverb")),
            (FeatureId::Token, s("now")),
        ];
        assert_eq!(e.instance.features().collect::<Vec<_>>(), expect);
        assert_eq!(e.class(), Some(Classification::Discourse));
        assert_eq!(render_corpus(&c), text);
    }

    #[test]
    fn header_only() {
        for suffix in [",class", ",judge1,judge2"] {
            let text = format!("{HEADER}{suffix}\n");
            let c = parse_corpus(&text).unwrap();
            assert!(c.is_empty());
            assert_eq!(render_corpus(&c), text);
        }
    }

    #[test]
    fn abstraction_mismatch() {
        let row = "9,1,1,1,only,H*,complex,false,true,paragraph,true,false,false,adverb,now,discourse";
        let text = format!("{HEADER},class\n{NOW_ROW}\n{row}\n");
        assert!(matches!(
            parse_corpus(&text),
            Err(Error::AbstractionMismatch { line: 3 })
        ));
    }

    #[test]
    fn parse_errors_carry_coordinates() {
        let bad_value = NOW_ROW.replacen("H*+L", "X*", 1);
        match parse_corpus(&format!("{HEADER},class\n{bad_value}\n")) {
            Err(Error::Parse { line: 2, column: 6, .. }) => {}
            other => panic!("{other:?}"),
        }
        match parse_corpus(&format!("{HEADER},class\n9,1,1\n")) {
            Err(Error::Parse { line: 2, column: 4, .. }) => {}
            other => panic!("{other:?}"),
        }
        match parse_corpus("p_len,class\n") {
            Err(Error::Parse { line: 1, column: 1, .. }) => {}
            other => panic!("{other:?}"),
        }
        let bad_class = NOW_ROW.replace("discourse", "maybe");
        match parse_corpus(&format!("{HEADER},class\n{bad_class}\n")) {
            Err(Error::Parse {
                line: 2, column: 16, ..
            }) => {}
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn judges_file() {
        let row = NOW_ROW.replace(",discourse", ",discourse,ambiguous");
        let text = format!("{HEADER},judge1,judge2\n{row}\n");
        let c = parse_corpus(&text).unwrap();
        assert_eq!(
            c.examples[0].label,
            Label::Judges(JudgeLabel::Discourse, JudgeLabel::Ambiguous)
        );
        assert_eq!(render_corpus(&c), text);
    }
}
