//! Canonical text representation: sentence segmentation, tokenization, and
//! reassembly of perturbed sentences.
//!
//! A [`Review`] is split into [`Sentence`]s by a deterministic rule-based
//! segmenter, and each sentence into whitespace-delimited [`Token`]s. Tokens
//! keep their surrounding punctuation on the surface but expose an alphabetic
//! core; perturbations replace the core and leave the punctuation in place.
//! Dropped tokens become empty surfaces that [`reassemble`] squeezes out, so
//! a drop never leaks a double space to the classifier.

use std::fmt;
use std::fs;
use std::io::{BufRead, BufReader, Write};
use std::path::Path;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Binary sentiment label. `Negative` sorts before `Positive` so serialized
/// collections have a stable order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Label {
    Negative,
    Positive,
}

impl Label {
    pub fn opposite(self) -> Label {
        match self {
            Label::Negative => Label::Positive,
            Label::Positive => Label::Negative,
        }
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Label::Negative => write!(f, "negative"),
            Label::Positive => write!(f, "positive"),
        }
    }
}

impl FromStr for Label {
    type Err = TextError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "negative" | "neg" => Ok(Label::Negative),
            "positive" | "pos" => Ok(Label::Positive),
            other => Err(TextError::BadLabel(other.to_string())),
        }
    }
}

#[derive(Debug, Error)]
pub enum TextError {
    #[error("input text is blank")]
    EmptyInput,
    #[error("unknown label {0:?} (expected \"positive\" or \"negative\")")]
    BadLabel(String),
    #[error("{path}:{line}: {msg}")]
    CorpusParse { path: String, line: usize, msg: String },
    #[error("failed to access {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
}

/// One whitespace-delimited token. The surface keeps leading/trailing
/// punctuation; the core is the span left after stripping it. A token with an
/// empty surface is a dropped token.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Token {
    surface: String,
    core_start: usize,
    core_end: usize,
    is_word: bool,
    eligible: bool,
}

impl Token {
    pub fn new(surface: &str) -> Token {
        let bytes = surface.len();
        let start = surface
            .char_indices()
            .find(|(_, c)| c.is_alphanumeric())
            .map(|(i, _)| i)
            .unwrap_or(bytes);
        let end = surface
            .char_indices()
            .rev()
            .find(|(_, c)| c.is_alphanumeric())
            .map(|(i, c)| i + c.len_utf8())
            .unwrap_or(start);
        let core = &surface[start..end];
        let mut chars = core.chars();
        let is_word = match chars.next() {
            Some(first) => {
                first.is_alphabetic() && chars.all(|c| c.is_alphabetic() || c == '-' || c == '\'')
            }
            None => false,
        };
        let eligible = is_word && core.chars().count() >= 2;
        Token {
            surface: surface.to_string(),
            core_start: start,
            core_end: end,
            is_word,
            eligible,
        }
    }

    /// A dropped token: empty surface, squeezed out by [`reassemble`].
    pub fn dropped() -> Token {
        Token {
            surface: String::new(),
            core_start: 0,
            core_end: 0,
            is_word: false,
            eligible: false,
        }
    }

    pub fn surface(&self) -> &str {
        &self.surface
    }

    /// The alphabetic core after stripping leading/trailing punctuation.
    pub fn core(&self) -> &str {
        &self.surface[self.core_start..self.core_end]
    }

    pub fn is_word(&self) -> bool {
        self.is_word
    }

    pub fn eligible(&self) -> bool {
        self.eligible
    }

    pub fn is_dropped(&self) -> bool {
        self.surface.is_empty()
    }

    /// Rebuilds the token with `replacement` in place of the core, keeping
    /// the punctuation around it.
    pub fn with_core_replaced(&self, replacement: &str) -> Token {
        let mut surface = String::with_capacity(self.surface.len() + replacement.len());
        surface.push_str(&self.surface[..self.core_start]);
        surface.push_str(replacement);
        surface.push_str(&self.surface[self.core_end..]);
        Token::new(&surface)
    }
}

/// Copies the initial capitalization of `original` onto `replacement`.
/// Lookup and candidate sets are all lowercase; this restores the surface
/// casing when a correction is written back into a sentence.
pub fn match_initial_case(original: &str, replacement: &str) -> String {
    let orig_upper = original.chars().next().is_some_and(|c| c.is_uppercase());
    if !orig_upper {
        return replacement.to_string();
    }
    let mut chars = replacement.chars();
    match chars.next() {
        Some(first) => first.to_uppercase().chain(chars).collect(),
        None => String::new(),
    }
}

/// A sentence: its 0-based position in the review and its tokens in order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Sentence {
    index: usize,
    tokens: Vec<Token>,
}

impl Sentence {
    pub fn new(index: usize, tokens: Vec<Token>) -> Sentence {
        Sentence { index, tokens }
    }

    pub fn index(&self) -> usize {
        self.index
    }

    pub fn tokens(&self) -> &[Token] {
        &self.tokens
    }

    pub fn token_count(&self) -> usize {
        self.tokens.len()
    }

    /// Indices of perturbation-eligible tokens.
    pub fn eligible_indices(&self) -> Vec<usize> {
        self.tokens
            .iter()
            .enumerate()
            .filter(|(_, t)| t.eligible())
            .map(|(i, _)| i)
            .collect()
    }

    pub fn text(&self) -> String {
        reassemble(&self.tokens)
    }
}

/// A review: raw text plus its segmented sentences and optional gold label.
#[derive(Debug, Clone)]
pub struct Review {
    pub id: String,
    pub text: String,
    pub sentences: Vec<Sentence>,
    pub gold_label: Option<Label>,
}

impl Review {
    /// Segments and tokenizes `text`. Fails on blank input.
    pub fn from_text(id: &str, text: &str, gold_label: Option<Label>) -> Result<Review, TextError> {
        let sentences = segment(text)?;
        Ok(Review {
            id: id.to_string(),
            text: text.to_string(),
            sentences,
            gold_label,
        })
    }

    pub fn sentence_count(&self) -> usize {
        self.sentences.len()
    }

    /// Number of word tokens across all sentences (the paper's W).
    pub fn word_count(&self) -> usize {
        self.sentences
            .iter()
            .flat_map(|s| s.tokens())
            .filter(|t| t.is_word())
            .count()
    }

    /// Mean tokens per sentence, as a real (no rounding).
    pub fn mean_sentence_len(&self) -> f64 {
        let total: usize = self.sentences.iter().map(|s| s.token_count()).sum();
        total as f64 / self.sentences.len() as f64
    }

    /// True if no sentence has a perturbation-eligible token.
    pub fn is_degenerate(&self) -> bool {
        self.sentences.iter().all(|s| s.eligible_indices().is_empty())
    }

    /// All (sentence, token) positions whose token is eligible.
    pub fn eligible_positions(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for s in &self.sentences {
            for idx in s.eligible_indices() {
                out.push((s.index(), idx));
            }
        }
        out
    }
}

/// Words that end with a period without ending a sentence. Checked
/// case-insensitively against the word preceding a `.`.
const ABBREVIATIONS: &[&str] = &[
    "dr", "mr", "mrs", "ms", "prof", "sr", "jr", "st", "mt", "vs", "etc", "eg", "e.g", "ie",
    "i.e", "no", "fig", "dept", "inc", "ltd", "co", "approx",
];

fn is_abbreviation(word: &str) -> bool {
    let w = word.to_lowercase();
    ABBREVIATIONS.contains(&w.as_str())
}

/// Splits text into sentences on `. ! ?` followed by whitespace and an
/// uppercase letter (or end of text), with an abbreviation exception list.
/// Deterministic; a text without terminal punctuation is one sentence.
///
/// Errors with [`TextError::EmptyInput`] on blank input.
pub fn segment(text: &str) -> Result<Vec<Sentence>, TextError> {
    if text.trim().is_empty() {
        return Err(TextError::EmptyInput);
    }

    let chars: Vec<char> = text.chars().collect();
    let mut sentences: Vec<Sentence> = Vec::new();
    let mut start = 0usize;
    let mut i = 0usize;

    while i < chars.len() {
        let c = chars[i];
        if c == '.' || c == '!' || c == '?' {
            // Take the whole terminal run plus closing quotes/brackets.
            let mut end = i + 1;
            while end < chars.len() && matches!(chars[end], '.' | '!' | '?') {
                end += 1;
            }
            while end < chars.len() && matches!(chars[end], '"' | '\'' | ')' | ']') {
                end += 1;
            }
            if boundary_after(&chars, end) && !(c == '.' && abbreviation_before(&chars, i)) {
                push_sentence(&mut sentences, &chars[start..end]);
                start = end;
            }
            i = end;
        } else {
            i += 1;
        }
    }
    if start < chars.len() {
        push_sentence(&mut sentences, &chars[start..]);
    }

    // A wordless text ("!!!") still yields its single raw sentence.
    if sentences.is_empty() {
        push_sentence(&mut sentences, &chars);
    }
    Ok(sentences)
}

/// After a terminal run: end of text, or whitespace then (optionally quoted)
/// uppercase letter.
fn boundary_after(chars: &[char], pos: usize) -> bool {
    let mut j = pos;
    if j >= chars.len() {
        return true;
    }
    if !chars[j].is_whitespace() {
        return false;
    }
    while j < chars.len() && chars[j].is_whitespace() {
        j += 1;
    }
    if j >= chars.len() {
        return true;
    }
    while j < chars.len() && matches!(chars[j], '"' | '\'' | '(' | '[') {
        j += 1;
    }
    j < chars.len() && chars[j].is_uppercase()
}

/// The word immediately before the `.` at `dot`, for the abbreviation check.
fn abbreviation_before(chars: &[char], dot: usize) -> bool {
    let mut start = dot;
    while start > 0 && !chars[start - 1].is_whitespace() {
        start -= 1;
    }
    let word: String = chars[start..dot].iter().collect();
    is_abbreviation(&word)
}

fn push_sentence(sentences: &mut Vec<Sentence>, chars: &[char]) {
    let raw: String = chars.iter().collect();
    let trimmed = raw.trim();
    if trimmed.is_empty() {
        return;
    }
    let index = sentences.len();
    sentences.push(Sentence::new(index, tokenize(trimmed)));
}

/// Whitespace tokenization; punctuation stays on the token surface.
pub fn tokenize(sentence_text: &str) -> Vec<Token> {
    sentence_text.split_whitespace().map(Token::new).collect()
}

/// Single-space join of non-dropped surfaces. All tokens dropped yields "".
pub fn reassemble(tokens: &[Token]) -> String {
    let mut out = String::new();
    for t in tokens {
        if t.is_dropped() {
            continue;
        }
        if !out.is_empty() {
            out.push(' ');
        }
        out.push_str(t.surface());
    }
    out
}

/// Collapses runs of whitespace to single spaces and trims the ends.
pub fn normalize_whitespace(text: &str) -> String {
    text.split_whitespace().collect::<Vec<_>>().join(" ")
}

/// One line of the review corpus file.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ReviewRow {
    pub id: String,
    pub text: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub label: Option<Label>,
}

/// Reads a JSON Lines review corpus: `{"id", "text", "label"?}` per line.
pub fn read_corpus(path: &Path) -> Result<Vec<Review>, TextError> {
    let rows = read_corpus_rows(path)?;
    let mut reviews = Vec::with_capacity(rows.len());
    for (line_no, row) in rows {
        let review = Review::from_text(&row.id, &row.text, row.label).map_err(|e| {
            TextError::CorpusParse {
                path: path.display().to_string(),
                line: line_no,
                msg: e.to_string(),
            }
        })?;
        reviews.push(review);
    }
    Ok(reviews)
}

/// Reads corpus rows without segmenting, keeping their line numbers.
pub fn read_corpus_rows(path: &Path) -> Result<Vec<(usize, ReviewRow)>, TextError> {
    let file = fs::File::open(path).map_err(|e| TextError::Io {
        path: path.display().to_string(),
        source: e,
    })?;
    let reader = BufReader::new(file);
    let mut rows = Vec::new();
    for (idx, line) in reader.lines().enumerate() {
        let line_no = idx + 1;
        let line = line.map_err(|e| TextError::Io {
            path: path.display().to_string(),
            source: e,
        })?;
        if line.trim().is_empty() {
            continue;
        }
        let row: ReviewRow =
            serde_json::from_str(&line).map_err(|e| TextError::CorpusParse {
                path: path.display().to_string(),
                line: line_no,
                msg: e.to_string(),
            })?;
        rows.push((line_no, row));
    }
    Ok(rows)
}

/// Writes a JSON Lines review corpus with LF line endings.
pub fn write_corpus(path: &Path, rows: &[ReviewRow]) -> Result<(), TextError> {
    let mut file = fs::File::create(path).map_err(|e| TextError::Io {
        path: path.display().to_string(),
        source: e,
    })?;
    for row in rows {
        let json = serde_json::to_string(row).expect("review row serializes");
        writeln!(file, "{json}").map_err(|e| TextError::Io {
            path: path.display().to_string(),
            source: e,
        })?;
    }
    Ok(())
}
