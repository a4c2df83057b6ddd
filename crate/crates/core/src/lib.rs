//! Randomized input-perturbation defenses for binary sentiment classifiers.
//!
//! The library implements two test-time defenses against adversarial text
//! attacks, both based on classifying randomly perturbed replicates of the
//! input and majority-voting the verdicts:
//!
//! * **RPD** (random perturbations defense): every sentence of a review is
//!   copied `l` times, each copy receives `k` random corrections, and all
//!   `N*l` replicates are classified and voted.
//! * **IRD** (increased randomness defense): `k` replicates are built by
//!   repeatedly drawing a sentence uniformly with replacement and applying a
//!   single random correction.
//!
//! The random corrections are spell correction against a frequency lexicon,
//! synonym substitution against a flattened synset lexicon, and word drop.
//!
//! Supporting machinery: a rule-based sentence segmenter and tokenizer
//! ([`textcore`]), lexicon loading ([`lexicon`]), seeded perturbation
//! planning ([`perturb`]), pluggable classifier backends ([`classify`]),
//! desk-scale attack generators ([`attacksim`]), and the probability model
//! plus evaluation harness ([`analysis`]). [`corpusgen`] builds the
//! synthetic corpora used by the end-to-end tests.

pub mod analysis;
pub mod attacksim;
pub mod classify;
pub mod corpusgen;
pub mod defense;
pub mod lexicon;
pub mod perturb;
pub mod textcore;

pub use classify::{ClassifierBackend, Verdict};
pub use defense::{DefenseOutcome, IrdConfig, RpdConfig};
pub use perturb::{CorrectionKind, DetRng};
pub use textcore::{Label, Review, Sentence, Token};
