//! Transcript parsing and document segmentation.
//!
//! Two input formats are supported:
//!
//! * TSV — one utterance per line, `dialogue_id<TAB>speaker<TAB>text`.
//!   A line `#label<TAB><dialogue_id>=<label>` preceding a dialogue's
//!   lines attaches a gold topic label to that dialogue. Any other line
//!   starting with `#` is a comment.
//! * JSON — a top-level array of `{id, label?, turns: [{speaker, text}]}`.
//!
//! Dialogues appear as contiguous line blocks; a dialogue id that shows up
//! again after a different dialogue has started is rejected as a duplicate.
//! Blank or whitespace-only turns are dropped at parse time and counted in
//! [`ParseStats`].

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Speaker {
    A,
    B,
}

impl FromStr for Speaker {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "A" | "a" => Ok(Speaker::A),
            "B" | "b" => Ok(Speaker::B),
            other => Err(format!("unknown speaker `{other}` (expected A or B)")),
        }
    }
}

impl fmt::Display for Speaker {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Speaker::A => write!(f, "A"),
            Speaker::B => write!(f, "B"),
        }
    }
}

/// One turn of a dialogue. `turn_index` is 0-based and contiguous within
/// its dialogue after empty turns have been dropped.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Utterance {
    pub dialogue_id: String,
    pub turn_index: usize,
    pub speaker: Speaker,
    pub text: String,
}

/// A two-sided conversation, optionally carrying a gold topic label.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Dialogue {
    pub dialogue_id: String,
    pub utterances: Vec<Utterance>,
    pub gold_label: Option<String>,
}

/// Where a document came from: a whole dialogue, or one of its turns.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DocSource {
    pub dialogue_id: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub turn_index: Option<usize>,
}

/// A unit of text handed to the preprocessing pipeline. Ids are dense
/// 0-based over the segmented corpus.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RawDocument {
    pub doc_id: usize,
    pub source: DocSource,
    pub text: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub gold_label: Option<String>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum TranscriptFormat {
    Tsv,
    Json,
}

impl FromStr for TranscriptFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "tsv" => Ok(TranscriptFormat::Tsv),
            "json" => Ok(TranscriptFormat::Json),
            other => Err(Error::UnknownFormat(other.to_string())),
        }
    }
}

/// Document granularity: one document per utterance, or per dialogue.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Granularity {
    Utterance,
    Dialogue,
}

impl FromStr for Granularity {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "utterance" => Ok(Granularity::Utterance),
            "dialogue" => Ok(Granularity::Dialogue),
            other => Err(Error::InvalidConfig(format!(
                "unknown granularity `{other}` (expected `utterance` or `dialogue`)"
            ))),
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ParseStats {
    /// Turns dropped because their text was empty or whitespace-only.
    pub dropped_empty_turns: usize,
}

#[derive(Debug, Clone)]
pub struct ParsedCorpus {
    pub dialogues: Vec<Dialogue>,
    pub stats: ParseStats,
}

/// Parse a transcript in the given format.
pub fn parse_transcript(input: &str, format: TranscriptFormat) -> Result<ParsedCorpus> {
    match format {
        TranscriptFormat::Tsv => parse_tsv(input),
        TranscriptFormat::Json => parse_json(input),
    }
}

fn parse_tsv(input: &str) -> Result<ParsedCorpus> {
    let mut dialogues: Vec<Dialogue> = Vec::new();
    let mut seen_ids: HashSet<String> = HashSet::new();
    let mut pending_labels: Vec<(String, String)> = Vec::new();
    let mut stats = ParseStats::default();

    for (lineno, line) in input.lines().enumerate() {
        let lineno = lineno + 1;
        if line.trim().is_empty() {
            continue;
        }
        if let Some(rest) = line.strip_prefix("#label\t") {
            let (id, label) = rest.split_once('=').ok_or_else(|| Error::MalformedLine {
                line: lineno,
                message: "label header must be `#label<TAB>dialogue_id=label`".into(),
            })?;
            pending_labels.push((id.to_string(), label.to_string()));
            continue;
        }
        if line.starts_with('#') {
            continue;
        }

        let mut fields = line.splitn(3, '\t');
        let id = fields.next().unwrap_or_default();
        let speaker = fields.next().ok_or_else(|| Error::MalformedLine {
            line: lineno,
            message: "expected 3 tab-separated fields".into(),
        })?;
        let text = fields.next().ok_or_else(|| Error::MalformedLine {
            line: lineno,
            message: "expected 3 tab-separated fields".into(),
        })?;
        let speaker = Speaker::from_str(speaker)
            .map_err(|message| Error::MalformedLine { line: lineno, message })?;

        let start_new = dialogues.last().map_or(true, |d| d.dialogue_id != id);
        if start_new {
            if !seen_ids.insert(id.to_string()) {
                return Err(Error::DuplicateDialogue(id.to_string()));
            }
            let gold_label = pending_labels
                .iter()
                .find(|(lid, _)| lid == id)
                .map(|(_, l)| l.clone());
            dialogues.push(Dialogue {
                dialogue_id: id.to_string(),
                utterances: Vec::new(),
                gold_label,
            });
        }

        if text.trim().is_empty() {
            stats.dropped_empty_turns += 1;
            continue;
        }
        let dialogue = dialogues.last_mut().unwrap();
        let turn_index = dialogue.utterances.len();
        dialogue.utterances.push(Utterance {
            dialogue_id: id.to_string(),
            turn_index,
            speaker,
            text: text.to_string(),
        });
    }

    Ok(ParsedCorpus { dialogues, stats })
}

#[derive(Deserialize)]
struct JsonTurn {
    speaker: String,
    text: String,
}

#[derive(Deserialize)]
struct JsonDialogue {
    id: String,
    #[serde(default)]
    label: Option<String>,
    turns: Vec<JsonTurn>,
}

fn parse_json(input: &str) -> Result<ParsedCorpus> {
    let raw: Vec<JsonDialogue> = serde_json::from_str(input)?;
    let mut seen_ids = HashSet::new();
    let mut stats = ParseStats::default();
    let mut dialogues = Vec::with_capacity(raw.len());

    for entry in raw {
        if !seen_ids.insert(entry.id.clone()) {
            return Err(Error::DuplicateDialogue(entry.id));
        }
        let mut utterances = Vec::with_capacity(entry.turns.len());
        for turn in entry.turns {
            if turn.text.trim().is_empty() {
                stats.dropped_empty_turns += 1;
                continue;
            }
            let speaker = Speaker::from_str(&turn.speaker).map_err(|message| {
                Error::MalformedLine { line: 0, message }
            })?;
            utterances.push(Utterance {
                dialogue_id: entry.id.clone(),
                turn_index: utterances.len(),
                speaker,
                text: turn.text,
            });
        }
        dialogues.push(Dialogue {
            dialogue_id: entry.id,
            utterances,
            gold_label: entry.label,
        });
    }

    Ok(ParsedCorpus { dialogues, stats })
}

/// Segment dialogues into raw documents at the requested granularity.
///
/// Utterance mode yields one document per turn; dialogue mode joins a
/// dialogue's turns with single spaces. Document ids are dense in input
/// order and the dialogue's gold label is propagated to every document
/// derived from it.
pub fn segment(dialogues: &[Dialogue], granularity: Granularity) -> Vec<RawDocument> {
    let mut docs = Vec::new();
    match granularity {
        Granularity::Utterance => {
            for dialogue in dialogues {
                for utt in &dialogue.utterances {
                    docs.push(RawDocument {
                        doc_id: docs.len(),
                        source: DocSource {
                            dialogue_id: dialogue.dialogue_id.clone(),
                            turn_index: Some(utt.turn_index),
                        },
                        text: utt.text.clone(),
                        gold_label: dialogue.gold_label.clone(),
                    });
                }
            }
        }
        Granularity::Dialogue => {
            for dialogue in dialogues {
                let text = dialogue
                    .utterances
                    .iter()
                    .map(|u| u.text.as_str())
                    .collect::<Vec<_>>()
                    .join(" ");
                docs.push(RawDocument {
                    doc_id: docs.len(),
                    source: DocSource {
                        dialogue_id: dialogue.dialogue_id.clone(),
                        turn_index: None,
                    },
                    text,
                    gold_label: dialogue.gold_label.clone(),
                });
            }
        }
    }
    docs
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tsv_two_lines() {
        let input = "d1\tA\thello there\nd1\tB\thi\n";
        let parsed = parse_transcript(input, TranscriptFormat::Tsv).unwrap();
        assert_eq!(parsed.dialogues.len(), 1);
        let d = &parsed.dialogues[0];
        assert_eq!(d.utterances.len(), 2);
        assert_eq!(d.utterances[0].speaker, Speaker::A);
        assert_eq!(d.utterances[1].speaker, Speaker::B);
        assert_eq!(d.utterances[0].text, "hello there");
        assert_eq!(d.utterances[1].turn_index, 1);
    }

    #[test]
    fn tsv_empty_text_dropped_and_counted() {
        let input = "d1\tA\thello\nd1\tB\t   \nd1\tA\tbye\n";
        let parsed = parse_transcript(input, TranscriptFormat::Tsv).unwrap();
        assert_eq!(parsed.stats.dropped_empty_turns, 1);
        let d = &parsed.dialogues[0];
        assert_eq!(d.utterances.len(), 2);
        // turn indices stay contiguous after the drop
        assert_eq!(d.utterances[1].turn_index, 1);
        assert_eq!(d.utterances[1].text, "bye");
    }

    #[test]
    fn tsv_label_header() {
        let input = "#label\td1=weather\nd1\tA\tnice day\nd2\tB\tother\n";
        let parsed = parse_transcript(input, TranscriptFormat::Tsv).unwrap();
        assert_eq!(parsed.dialogues[0].gold_label.as_deref(), Some("weather"));
        assert_eq!(parsed.dialogues[1].gold_label, None);
    }

    #[test]
    fn tsv_2145_blocks() {
        let mut input = String::new();
        for i in 0..2145 {
            input.push_str(&format!("conv{i}\tA\tfirst turn\nconv{i}\tB\tsecond turn\n"));
        }
        let parsed = parse_transcript(&input, TranscriptFormat::Tsv).unwrap();
        assert_eq!(parsed.dialogues.len(), 2145);
    }

    #[test]
    fn tsv_malformed_line_reports_number() {
        let input = "d1\tA\thello\nnot a valid line\n";
        let err = parse_transcript(input, TranscriptFormat::Tsv).unwrap_err();
        match err {
            Error::MalformedLine { line, .. } => assert_eq!(line, 2),
            other => panic!("unexpected error {other:?}"),
        }
    }

    #[test]
    fn tsv_duplicate_dialogue_rejected() {
        let input = "d1\tA\thello\nd2\tB\thi\nd1\tA\tback again\n";
        let err = parse_transcript(input, TranscriptFormat::Tsv).unwrap_err();
        assert!(matches!(err, Error::DuplicateDialogue(id) if id == "d1"));
    }

    #[test]
    fn unknown_format_tag() {
        let err = "xml".parse::<TranscriptFormat>().unwrap_err();
        assert!(matches!(err, Error::UnknownFormat(f) if f == "xml"));
    }

    #[test]
    fn json_roundtrip() {
        let input = r#"[
            {"id": "d1", "label": "cars", "turns": [
                {"speaker": "A", "text": "my car broke"},
                {"speaker": "B", "text": ""},
                {"speaker": "B", "text": "again?"}
            ]},
            {"id": "d2", "turns": [{"speaker": "A", "text": "hi"}]}
        ]"#;
        let parsed = parse_transcript(input, TranscriptFormat::Json).unwrap();
        assert_eq!(parsed.dialogues.len(), 2);
        assert_eq!(parsed.stats.dropped_empty_turns, 1);
        assert_eq!(parsed.dialogues[0].gold_label.as_deref(), Some("cars"));
        assert_eq!(parsed.dialogues[0].utterances.len(), 2);
        assert_eq!(parsed.dialogues[0].utterances[1].turn_index, 1);
    }

    #[test]
    fn segment_utterance_mode() {
        let input = "#label\td1=cars\nd1\tA\tone\nd1\tB\ttwo\nd1\tA\tthree\n";
        let parsed = parse_transcript(input, TranscriptFormat::Tsv).unwrap();
        let docs = segment(&parsed.dialogues, Granularity::Utterance);
        assert_eq!(docs.len(), 3);
        assert_eq!(docs[2].doc_id, 2);
        assert_eq!(docs[2].text, "three");
        assert_eq!(docs[1].source.turn_index, Some(1));
        assert!(docs.iter().all(|d| d.gold_label.as_deref() == Some("cars")));
    }

    #[test]
    fn segment_dialogue_mode_joins_turns() {
        let input = "d1\tA\tone\nd1\tB\ttwo\nd1\tA\tthree\n";
        let parsed = parse_transcript(input, TranscriptFormat::Tsv).unwrap();
        let docs = segment(&parsed.dialogues, Granularity::Dialogue);
        assert_eq!(docs.len(), 1);
        assert_eq!(docs[0].text, "one two three");
        assert_eq!(docs[0].source.turn_index, None);
    }

    #[test]
    fn segment_counts_match_independent_pass() {
        // independent oracle: tally utterances while walking the parsed corpus
        let mut input = String::new();
        for i in 0..40 {
            for t in 0..(i % 5 + 1) {
                input.push_str(&format!("dlg{i}\t{}\tturn {t} of {i}\n", if t % 2 == 0 { "A" } else { "B" }));
            }
        }
        let parsed = parse_transcript(&input, TranscriptFormat::Tsv).unwrap();
        let expected: usize = parsed.dialogues.iter().map(|d| d.utterances.len()).sum();
        let docs = segment(&parsed.dialogues, Granularity::Utterance);
        assert_eq!(docs.len(), expected);
        let by_dialogue = segment(&parsed.dialogues, Granularity::Dialogue);
        assert_eq!(by_dialogue.len(), parsed.dialogues.len());
        // dense ids, and every source resolves
        for (i, doc) in docs.iter().enumerate() {
            assert_eq!(doc.doc_id, i);
            let dialogue = parsed
                .dialogues
                .iter()
                .find(|d| d.dialogue_id == doc.source.dialogue_id)
                .expect("source dialogue exists");
            let turn = doc.source.turn_index.unwrap();
            assert!(turn < dialogue.utterances.len());
            assert_eq!(dialogue.utterances[turn].text, doc.text);
        }
    }
}
