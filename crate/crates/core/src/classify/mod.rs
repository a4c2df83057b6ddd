//! The classifier f(): a pluggable binary sentiment scorer.
//!
//! Backends: a trainable multinomial naive Bayes model ([`NaiveBayesModel`]),
//! a remote HTTP service client ([`RemoteClassifier`]), and a counting stub
//! for structural tests ([`CountingStub`]).

mod nb;
mod remote;
mod stub;

pub use nb::{train_nb, NaiveBayesModel};
pub use remote::{RemoteClassifier, RemoteConfig};
pub use stub::CountingStub;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::textcore::Label;

/// Classifier output: the returned label and the confidence of that label.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Verdict {
    pub label: Label,
    pub score: f64,
}

impl Verdict {
    pub fn new(label: Label, score: f64) -> Verdict {
        debug_assert!((0.0..=1.0).contains(&score), "score out of range: {score}");
        Verdict { label, score }
    }
}

#[derive(Debug, Error)]
pub enum ClassifyError {
    #[error("training corpus is empty")]
    EmptyCorpus,
    #[error("training corpus contains only {0} examples")]
    SingleLabelCorpus(Label),
    #[error("smoothing alpha must be positive (got {0})")]
    InvalidAlpha(f64),
    #[error("backend {backend} unavailable after {attempts} attempt(s): {reason}")]
    BackendUnavailable {
        backend: String,
        attempts: u32,
        reason: String,
    },
    #[error("protocol error from {backend}: {reason}")]
    ProtocolError { backend: String, reason: String },
    #[error("model file {path}: {reason}")]
    ModelFormat { path: String, reason: String },
    #[error("failed to access {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
}

/// A batch classifier. Implementations must be safe for concurrent
/// `classify_batch` calls and must return one verdict per input text, in
/// input order.
pub trait ClassifierBackend: Send + Sync {
    fn classify_batch(&self, texts: &[String]) -> Result<Vec<Verdict>, ClassifyError>;

    /// Short descriptor for logs and error context.
    fn name(&self) -> &str;
}

impl<T: ClassifierBackend + ?Sized> ClassifierBackend for &T {
    fn classify_batch(&self, texts: &[String]) -> Result<Vec<Verdict>, ClassifyError> {
        (**self).classify_batch(texts)
    }

    fn name(&self) -> &str {
        (**self).name()
    }
}
