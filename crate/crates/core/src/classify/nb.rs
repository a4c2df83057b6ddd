//! Multinomial naive Bayes over lowercased word tokens, with Laplace
//! smoothing. Stands in for the heavyweight sentiment pipeline so the rest
//! of the system can run self-contained; the remote backend plugs in a real
//! model when one is available.

use std::collections::BTreeMap;
use std::fs;
use std::path::Path;

use serde::{Deserialize, Serialize};

use super::{ClassifierBackend, ClassifyError, Verdict};
use crate::textcore::{tokenize, Label};

const MODEL_FORMAT: &str = "perturbshield-nb";
const MODEL_VERSION: u32 = 1;

fn label_index(label: Label) -> usize {
    match label {
        Label::Negative => 0,
        Label::Positive => 1,
    }
}

/// Lowercased word cores of `text`; the same tokenizer the rest of the
/// pipeline uses, so model features line up with perturbation targets.
fn nb_tokens(text: &str) -> Vec<String> {
    tokenize(text)
        .iter()
        .filter(|t| t.is_word())
        .map(|t| t.core().to_lowercase())
        .collect()
}

/// Trained model: log-priors and per-token log-likelihoods `[negative,
/// positive]`. Immutable after training; safe to share across threads.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct NaiveBayesModel {
    format: String,
    version: u32,
    alpha: f64,
    log_prior: [f64; 2],
    log_likelihood: BTreeMap<String, [f64; 2]>,
}

/// Trains a multinomial NB model. The corpus must contain both labels and
/// `alpha` must be positive. Training is deterministic: identical corpus and
/// alpha produce an identical model, byte for byte once serialized.
pub fn train_nb(corpus: &[(String, Label)], alpha: f64) -> Result<NaiveBayesModel, ClassifyError> {
    if !(alpha > 0.0) {
        return Err(ClassifyError::InvalidAlpha(alpha));
    }
    if corpus.is_empty() {
        return Err(ClassifyError::EmptyCorpus);
    }
    let mut doc_counts = [0u64; 2];
    let mut token_counts: BTreeMap<String, [u64; 2]> = BTreeMap::new();
    let mut token_totals = [0u64; 2];
    for (text, label) in corpus {
        let li = label_index(*label);
        doc_counts[li] += 1;
        for token in nb_tokens(text) {
            token_counts.entry(token).or_insert([0, 0])[li] += 1;
            token_totals[li] += 1;
        }
    }
    if doc_counts[0] == 0 {
        return Err(ClassifyError::SingleLabelCorpus(Label::Positive));
    }
    if doc_counts[1] == 0 {
        return Err(ClassifyError::SingleLabelCorpus(Label::Negative));
    }

    let total_docs = (doc_counts[0] + doc_counts[1]) as f64;
    let log_prior = [
        (doc_counts[0] as f64 / total_docs).ln(),
        (doc_counts[1] as f64 / total_docs).ln(),
    ];
    let vocab_size = token_counts.len() as f64;
    let mut log_likelihood = BTreeMap::new();
    for (token, counts) in token_counts {
        let ll = [0, 1].map(|li| {
            ((counts[li] as f64 + alpha) / (token_totals[li] as f64 + alpha * vocab_size)).ln()
        });
        log_likelihood.insert(token, ll);
    }
    Ok(NaiveBayesModel {
        format: MODEL_FORMAT.to_string(),
        version: MODEL_VERSION,
        alpha,
        log_prior,
        log_likelihood,
    })
}

impl NaiveBayesModel {
    /// Classifies one text. Tokens outside the training vocabulary are
    /// ignored; a text with no evidence falls back to the priors, and an
    /// exact tie goes to negative.
    pub fn classify_one(&self, text: &str) -> Verdict {
        let mut lp = self.log_prior;
        for token in nb_tokens(text) {
            if let Some(ll) = self.log_likelihood.get(&token) {
                lp[0] += ll[0];
                lp[1] += ll[1];
            }
        }
        let label = if lp[1] > lp[0] {
            Label::Positive
        } else {
            Label::Negative
        };
        let (winner, loser) = if label == Label::Positive {
            (lp[1], lp[0])
        } else {
            (lp[0], lp[1])
        };
        // Posterior of the winning label for two classes.
        let score = 1.0 / (1.0 + (loser - winner).exp());
        Verdict::new(label, score)
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    pub fn vocabulary_size(&self) -> usize {
        self.log_likelihood.len()
    }

    /// Writes the model as versioned, self-describing JSON. Serialization is
    /// deterministic (sorted vocabulary, fixed field order).
    pub fn save(&self, path: &Path) -> Result<(), ClassifyError> {
        let json = serde_json::to_string_pretty(self).expect("model serializes");
        fs::write(path, json + "\n").map_err(|e| ClassifyError::Io {
            path: path.display().to_string(),
            source: e,
        })
    }

    pub fn load(path: &Path) -> Result<NaiveBayesModel, ClassifyError> {
        let display = path.display().to_string();
        let content = fs::read_to_string(path).map_err(|e| ClassifyError::Io {
            path: display.clone(),
            source: e,
        })?;
        let model: NaiveBayesModel =
            serde_json::from_str(&content).map_err(|e| ClassifyError::ModelFormat {
                path: display.clone(),
                reason: e.to_string(),
            })?;
        if model.format != MODEL_FORMAT {
            return Err(ClassifyError::ModelFormat {
                path: display,
                reason: format!("unexpected format {:?}", model.format),
            });
        }
        if model.version != MODEL_VERSION {
            return Err(ClassifyError::ModelFormat {
                path: display,
                reason: format!(
                    "unsupported version {} (expected {MODEL_VERSION})",
                    model.version
                ),
            });
        }
        Ok(model)
    }
}

impl ClassifierBackend for NaiveBayesModel {
    fn classify_batch(&self, texts: &[String]) -> Result<Vec<Verdict>, ClassifyError> {
        Ok(texts.iter().map(|t| self.classify_one(t)).collect())
    }

    fn name(&self) -> &str {
        "builtin-nb"
    }
}
