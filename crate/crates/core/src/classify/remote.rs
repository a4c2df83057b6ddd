//! HTTP client for a remote classifier service.
//!
//! Wire protocol: `POST /v1/classify` with body `{"texts": [..]}`, expecting
//! status 200 and `{"results": [{"label": "positive"|"negative", "score":
//! 0.0..=1.0}, ..]}` aligned with the request. Non-200 responses and
//! transport failures are retried with exponential backoff; retry exhaustion
//! fails the whole call. Malformed responses are protocol errors and are not
//! retried — the run fails rather than substituting labels silently.

use std::sync::Mutex;
use std::time::Duration;

use serde::Deserialize;

use super::{ClassifierBackend, ClassifyError, Verdict};
use crate::textcore::Label;

#[derive(Debug, Clone)]
pub struct RemoteConfig {
    /// Texts per request.
    pub batch_size: usize,
    /// Per-request timeout.
    pub timeout: Duration,
    /// Retries per request after the first attempt.
    pub max_retries: u32,
    /// Base backoff; doubles per retry.
    pub backoff: Duration,
    /// Concurrent in-flight requests cap.
    pub max_inflight: usize,
}

impl Default for RemoteConfig {
    fn default() -> Self {
        RemoteConfig {
            batch_size: 32,
            timeout: Duration::from_secs(10),
            max_retries: 3,
            backoff: Duration::from_millis(100),
            max_inflight: 4,
        }
    }
}

#[derive(Debug, Deserialize)]
struct RemoteResponse {
    results: Vec<RemoteResult>,
}

#[derive(Debug, Deserialize)]
struct RemoteResult {
    label: Label,
    score: f64,
}

pub struct RemoteClassifier {
    endpoint: String,
    config: RemoteConfig,
    agent: ureq::Agent,
}

impl RemoteClassifier {
    /// `base_url` is the service root; the client posts to
    /// `<base_url>/v1/classify`.
    pub fn new(base_url: &str, config: RemoteConfig) -> RemoteClassifier {
        let agent_config = ureq::Agent::config_builder()
            .timeout_global(Some(config.timeout))
            .http_status_as_error(false)
            .build();
        RemoteClassifier {
            endpoint: format!("{}/v1/classify", base_url.trim_end_matches('/')),
            config,
            agent: ureq::Agent::new_with_config(agent_config),
        }
    }

    fn protocol_error(&self, reason: String) -> ClassifyError {
        ClassifyError::ProtocolError {
            backend: self.endpoint.clone(),
            reason,
        }
    }

    /// One request with the retry policy applied.
    fn post_batch(&self, texts: &[String]) -> Result<Vec<Verdict>, ClassifyError> {
        let body = serde_json::json!({ "texts": texts });
        let attempts = self.config.max_retries + 1;
        let mut last_failure = String::new();
        for attempt in 0..attempts {
            if attempt > 0 {
                std::thread::sleep(self.config.backoff * 2u32.pow(attempt - 1));
            }
            match self.agent.post(&self.endpoint).send_json(&body) {
                Ok(mut response) => {
                    let status = response.status().as_u16();
                    if status != 200 {
                        last_failure = format!("status {status}");
                        continue;
                    }
                    let parsed: RemoteResponse =
                        response.body_mut().read_json().map_err(|e| {
                            self.protocol_error(format!("unreadable response body: {e}"))
                        })?;
                    return self.validate(texts.len(), parsed);
                }
                Err(e) => {
                    last_failure = e.to_string();
                }
            }
        }
        Err(ClassifyError::BackendUnavailable {
            backend: self.endpoint.clone(),
            attempts,
            reason: last_failure,
        })
    }

    fn validate(
        &self,
        expected: usize,
        response: RemoteResponse,
    ) -> Result<Vec<Verdict>, ClassifyError> {
        if response.results.len() != expected {
            return Err(self.protocol_error(format!(
                "expected {expected} results, got {}",
                response.results.len()
            )));
        }
        response
            .results
            .into_iter()
            .map(|r| {
                if !(0.0..=1.0).contains(&r.score) || !r.score.is_finite() {
                    return Err(self.protocol_error(format!("score {} out of range", r.score)));
                }
                Ok(Verdict::new(r.label, r.score))
            })
            .collect()
    }
}

impl ClassifierBackend for RemoteClassifier {
    /// Splits `texts` into batches and dispatches at most `max_inflight`
    /// requests concurrently. Results are reassembled in input order; any
    /// failed batch fails the whole call.
    fn classify_batch(&self, texts: &[String]) -> Result<Vec<Verdict>, ClassifyError> {
        if texts.is_empty() {
            return Ok(Vec::new());
        }
        let batch_size = self.config.batch_size.max(1);
        let chunks: Vec<&[String]> = texts.chunks(batch_size).collect();
        let workers = self.config.max_inflight.max(1).min(chunks.len());

        if workers == 1 {
            let mut out = Vec::with_capacity(texts.len());
            for chunk in chunks {
                out.extend(self.post_batch(chunk)?);
            }
            return Ok(out);
        }

        let queue = Mutex::new(chunks.iter().copied().enumerate());
        let slots: Mutex<Vec<Option<Result<Vec<Verdict>, ClassifyError>>>> =
            Mutex::new((0..chunks.len()).map(|_| None).collect());
        std::thread::scope(|scope| {
            for _ in 0..workers {
                scope.spawn(|| loop {
                    let job = queue.lock().unwrap().next();
                    match job {
                        Some((idx, chunk)) => {
                            let result = self.post_batch(chunk);
                            slots.lock().unwrap()[idx] = Some(result);
                        }
                        None => break,
                    }
                });
            }
        });

        let mut out = Vec::with_capacity(texts.len());
        for slot in slots.into_inner().unwrap() {
            out.extend(slot.expect("every batch was dispatched")?);
        }
        Ok(out)
    }

    fn name(&self) -> &str {
        &self.endpoint
    }
}
