//! Test backend: returns a fixed label while counting invocations, so
//! structural call laws (N*l for RPD, k for IRD) can be asserted exactly.

use std::sync::atomic::{AtomicU64, Ordering};

use super::{ClassifierBackend, ClassifyError, Verdict};
use crate::textcore::Label;

/// Counts one invocation per classified text, not per batch.
#[derive(Debug)]
pub struct CountingStub {
    label: Label,
    score: f64,
    calls: AtomicU64,
}

impl CountingStub {
    pub fn new(label: Label) -> CountingStub {
        CountingStub {
            label,
            score: 1.0,
            calls: AtomicU64::new(0),
        }
    }

    pub fn with_score(label: Label, score: f64) -> CountingStub {
        CountingStub {
            label,
            score,
            calls: AtomicU64::new(0),
        }
    }

    /// Total texts classified so far.
    pub fn calls(&self) -> u64 {
        self.calls.load(Ordering::SeqCst)
    }

    pub fn reset(&self) {
        self.calls.store(0, Ordering::SeqCst);
    }
}

impl ClassifierBackend for CountingStub {
    fn classify_batch(&self, texts: &[String]) -> Result<Vec<Verdict>, ClassifyError> {
        self.calls.fetch_add(texts.len() as u64, Ordering::SeqCst);
        Ok(texts
            .iter()
            .map(|_| Verdict::new(self.label, self.score))
            .collect())
    }

    fn name(&self) -> &str {
        "counting-stub"
    }
}
