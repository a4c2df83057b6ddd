//! Word resources behind the perturbations: a spelling lexicon with
//! frequencies and a synonym lexicon (synsets flattened to groups).
//!
//! File formats:
//! * spell lexicon — one `word<SPACE>count` per line, UTF-8;
//! * synonym lexicon — one group per line, members separated by TAB;
//!   lines starting with `#` are comments.
//!
//! Both are immutable after load and safe to share across threads.

use std::collections::{BTreeSet, HashMap};
use std::fs;
use std::io::Write;
use std::path::Path;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum LexiconError {
    #[error("failed to access {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
    #[error("{path}:{line}: {msg}")]
    Malformed { path: String, line: usize, msg: String },
    #[error("{path}: lexicon is empty")]
    Empty { path: String },
}

/// Spelling dictionary: lowercase word -> frequency count.
#[derive(Debug, Clone)]
pub struct SpellLexicon {
    entries: HashMap<String, u64>,
}

impl SpellLexicon {
    /// Builds a lexicon from `(word, count)` pairs. Words are lowercased;
    /// duplicates keep the maximum frequency.
    pub fn from_entries<I>(entries: I) -> SpellLexicon
    where
        I: IntoIterator<Item = (String, u64)>,
    {
        let mut map: HashMap<String, u64> = HashMap::new();
        for (word, count) in entries {
            let key = word.to_lowercase();
            let slot = map.entry(key).or_insert(0);
            *slot = (*slot).max(count);
        }
        SpellLexicon { entries: map }
    }

    /// Loads a `word<SPACE>count` file. Errors report the offending line;
    /// an empty result is an error.
    pub fn load(path: &Path) -> Result<SpellLexicon, LexiconError> {
        let display = path.display().to_string();
        let content = fs::read_to_string(path).map_err(|e| LexiconError::Io {
            path: display.clone(),
            source: e,
        })?;
        let mut pairs = Vec::new();
        for (idx, line) in content.lines().enumerate() {
            let line_no = idx + 1;
            if line.trim().is_empty() {
                continue;
            }
            let mut fields = line.split_whitespace();
            let word = fields.next().ok_or_else(|| LexiconError::Malformed {
                path: display.clone(),
                line: line_no,
                msg: "missing word".to_string(),
            })?;
            let count_str = fields.next().ok_or_else(|| LexiconError::Malformed {
                path: display.clone(),
                line: line_no,
                msg: "missing count".to_string(),
            })?;
            if fields.next().is_some() {
                return Err(LexiconError::Malformed {
                    path: display.clone(),
                    line: line_no,
                    msg: "expected exactly two fields".to_string(),
                });
            }
            let count: u64 = count_str.parse().map_err(|_| LexiconError::Malformed {
                path: display.clone(),
                line: line_no,
                msg: format!("bad count {count_str:?}"),
            })?;
            let lowered = word.to_lowercase();
            if !is_lexicon_word(&lowered) {
                return Err(LexiconError::Malformed {
                    path: display.clone(),
                    line: line_no,
                    msg: format!("word {word:?} is not alphabetic"),
                });
            }
            pairs.push((lowered, count));
        }
        if pairs.is_empty() {
            return Err(LexiconError::Empty { path: display });
        }
        Ok(SpellLexicon::from_entries(pairs))
    }

    /// Writes the lexicon in load format, sorted by word for determinism.
    pub fn write(&self, path: &Path) -> Result<(), LexiconError> {
        let display = path.display().to_string();
        let mut file = fs::File::create(path).map_err(|e| LexiconError::Io {
            path: display.clone(),
            source: e,
        })?;
        let mut words: Vec<(&String, &u64)> = self.entries.iter().collect();
        words.sort();
        for (word, count) in words {
            writeln!(file, "{word} {count}").map_err(|e| LexiconError::Io {
                path: display.clone(),
                source: e,
            })?;
        }
        Ok(())
    }

    pub fn contains(&self, word: &str) -> bool {
        self.entries.contains_key(&word.to_lowercase())
    }

    pub fn frequency(&self, word: &str) -> Option<u64> {
        self.entries.get(&word.to_lowercase()).copied()
    }

    pub fn words(&self) -> impl Iterator<Item = (&str, u64)> {
        self.entries.iter().map(|(w, c)| (w.as_str(), *c))
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

fn is_lexicon_word(word: &str) -> bool {
    !word.is_empty()
        && word.chars().next().is_some_and(|c| c.is_alphabetic())
        && word.chars().all(|c| c.is_alphabetic() || c == '-' || c == '\'')
}

/// Synonym groups with a word -> group-ids index. Within a group, members
/// are unique after lowercasing; groups of fewer than two distinct members
/// carry no information and are skipped at load.
#[derive(Debug, Clone)]
pub struct SynonymLexicon {
    groups: Vec<Vec<String>>,
    index: HashMap<String, Vec<usize>>,
}

impl SynonymLexicon {
    pub fn from_groups<I, G>(groups: I) -> SynonymLexicon
    where
        I: IntoIterator<Item = G>,
        G: IntoIterator<Item = String>,
    {
        let mut kept: Vec<Vec<String>> = Vec::new();
        let mut index: HashMap<String, Vec<usize>> = HashMap::new();
        for group in groups {
            let mut seen = BTreeSet::new();
            let mut members = Vec::new();
            for member in group {
                let lowered = member.to_lowercase();
                if seen.insert(lowered.clone()) {
                    members.push(lowered);
                }
            }
            if members.len() < 2 {
                continue;
            }
            let gid = kept.len();
            for member in &members {
                index.entry(member.clone()).or_default().push(gid);
            }
            kept.push(members);
        }
        SynonymLexicon { groups: kept, index }
    }

    /// Loads a TAB-separated group file, skipping `#` comments and blank
    /// lines. Members with internal whitespace are malformed.
    pub fn load(path: &Path) -> Result<SynonymLexicon, LexiconError> {
        let display = path.display().to_string();
        let content = fs::read_to_string(path).map_err(|e| LexiconError::Io {
            path: display.clone(),
            source: e,
        })?;
        let mut groups = Vec::new();
        for (idx, line) in content.lines().enumerate() {
            let line_no = idx + 1;
            let trimmed = line.trim();
            if trimmed.is_empty() || trimmed.starts_with('#') {
                continue;
            }
            let mut members = Vec::new();
            for member in trimmed.split('\t') {
                let member = member.trim();
                if member.is_empty() {
                    continue;
                }
                if member.chars().any(char::is_whitespace) {
                    return Err(LexiconError::Malformed {
                        path: display.clone(),
                        line: line_no,
                        msg: format!("member {member:?} contains whitespace"),
                    });
                }
                members.push(member.to_string());
            }
            groups.push(members);
        }
        let lex = SynonymLexicon::from_groups(groups);
        if lex.groups.is_empty() {
            return Err(LexiconError::Empty { path: display });
        }
        Ok(lex)
    }

    /// Writes groups one per line, TAB-separated.
    pub fn write(&self, path: &Path) -> Result<(), LexiconError> {
        let display = path.display().to_string();
        let mut file = fs::File::create(path).map_err(|e| LexiconError::Io {
            path: display.clone(),
            source: e,
        })?;
        for group in &self.groups {
            writeln!(file, "{}", group.join("\t")).map_err(|e| LexiconError::Io {
                path: display.clone(),
                source: e,
            })?;
        }
        Ok(())
    }

    /// Union of all groups containing `word` (case-folded), minus the word
    /// itself, sorted. Empty when the word is unknown.
    pub fn candidates(&self, word: &str) -> Vec<String> {
        let key = word.to_lowercase();
        let mut out = BTreeSet::new();
        if let Some(gids) = self.index.get(&key) {
            for &gid in gids {
                for member in &self.groups[gid] {
                    if member != &key {
                        out.insert(member.clone());
                    }
                }
            }
        }
        out.into_iter().collect()
    }

    pub fn group_count(&self) -> usize {
        self.groups.len()
    }

    pub fn contains(&self, word: &str) -> bool {
        self.index.contains_key(&word.to_lowercase())
    }
}
