//! The three random corrections (spell correction, synonym substitution,
//! word drop) and the seeded planning that selects tokens and correction
//! kinds.
//!
//! All randomness is consumed at plan time: a [`PlanStep`] records the chosen
//! token, the chosen kind, and two raw draws that application resolves
//! against the lexicons. Applying a plan is therefore pure, and downstream
//! parallelism cannot perturb determinism.

use rand::{Rng as _, RngCore as _, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::lexicon::{SpellLexicon, SynonymLexicon};
use crate::textcore::{match_initial_case, reassemble, Sentence, Token};

/// Deterministic seedable random stream with fork-by-label substreams.
/// Same seed and draw sequence produce the same outputs on every platform.
#[derive(Debug, Clone)]
pub struct DetRng {
    seed: u64,
    inner: ChaCha8Rng,
}

impl DetRng {
    pub fn new(seed: u64) -> DetRng {
        DetRng {
            seed,
            inner: ChaCha8Rng::seed_from_u64(seed),
        }
    }

    /// An independent substream derived from this stream's seed and `label`.
    /// Forking does not consume state; distinct labels give distinct streams.
    pub fn fork(&self, label: &str) -> DetRng {
        DetRng::new(mix_label(self.seed, label))
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    pub fn next_u64(&mut self) -> u64 {
        self.inner.next_u64()
    }

    /// Uniform index in `0..n`. Panics if `n == 0`.
    pub fn index(&mut self, n: usize) -> usize {
        assert!(n > 0, "index() needs a non-empty range");
        self.inner.gen_range(0..n)
    }

    pub fn choose<'a, T>(&mut self, items: &'a [T]) -> &'a T {
        &items[self.index(items.len())]
    }

    /// `count` distinct values from `0..n`, drawn uniformly without
    /// replacement (partial Fisher-Yates), in draw order.
    pub fn sample_distinct(&mut self, n: usize, count: usize) -> Vec<usize> {
        let count = count.min(n);
        let mut pool: Vec<usize> = (0..n).collect();
        for i in 0..count {
            let j = i + self.index(n - i);
            pool.swap(i, j);
        }
        pool.truncate(count);
        pool
    }

    pub fn shuffle<T>(&mut self, items: &mut [T]) {
        let n = items.len();
        for i in (1..n).rev() {
            let j = self.index(i + 1);
            items.swap(i, j);
        }
    }
}

/// FNV-1a over the seed bytes and the label; stable across platforms.
fn mix_label(seed: u64, label: &str) -> u64 {
    const OFFSET: u64 = 0xcbf29ce484222325;
    const PRIME: u64 = 0x100000001b3;
    let mut hash = OFFSET;
    for byte in seed.to_le_bytes().iter().chain(label.as_bytes()) {
        hash ^= u64::from(*byte);
        hash = hash.wrapping_mul(PRIME);
    }
    hash
}

/// The correction set C.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CorrectionKind {
    #[serde(rename = "spell")]
    SpellCheck,
    #[serde(rename = "synonym")]
    SynonymSub,
    #[serde(rename = "drop")]
    DropWord,
}

impl CorrectionKind {
    pub const ALL: [CorrectionKind; 3] = [
        CorrectionKind::SpellCheck,
        CorrectionKind::SynonymSub,
        CorrectionKind::DropWord,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            CorrectionKind::SpellCheck => "spell",
            CorrectionKind::SynonymSub => "synonym",
            CorrectionKind::DropWord => "drop",
        }
    }
}

impl std::str::FromStr for CorrectionKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim().to_ascii_lowercase().as_str() {
            "spell" | "spellcheck" => Ok(CorrectionKind::SpellCheck),
            "synonym" | "syn" => Ok(CorrectionKind::SynonymSub),
            "drop" => Ok(CorrectionKind::DropWord),
            other => Err(format!("unknown correction kind {other:?}")),
        }
    }
}

impl std::fmt::Display for CorrectionKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Error)]
pub enum PlanError {
    #[error("sentence has no eligible tokens")]
    EmptySentence,
}

/// One planned correction. `draws` are raw random values consumed at
/// application time: `draws[0]` picks the synonym, `draws[1]` re-draws the
/// kind if the synonym set turns out empty.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PlanStep {
    pub sentence_index: usize,
    pub token_index: usize,
    pub kind: CorrectionKind,
    pub draws: [u64; 2],
}

/// The planned corrections for one replicate, with the master seed echoed
/// for provenance.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PerturbationPlan {
    pub seed: u64,
    pub steps: Vec<PlanStep>,
}

/// Audit of one applied correction: the kind actually applied after any
/// empty-synonym fallback, with the token surface before and after.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct AuditStep {
    pub token_index: usize,
    pub kind: CorrectionKind,
    pub before: String,
    pub after: String,
}

/// Replicate provenance, serialized as one JSON Lines row.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct AuditRecord {
    pub review_id: String,
    pub sentence_index: usize,
    pub replicate_index: usize,
    pub steps: Vec<AuditStep>,
}

/// Spell correction: an in-lexicon word is returned unchanged; otherwise the
/// in-lexicon word within restricted Damerau-Levenshtein distance 2 with the
/// highest frequency wins (ties: lexicographically smallest). If nothing is
/// within distance 2 the word is returned unchanged. Initial capitalization
/// is preserved.
pub fn spell_correct(lex: &SpellLexicon, word: &str) -> String {
    let lower = word.to_lowercase();
    if lex.contains(&lower) {
        return word.to_string();
    }
    let word_len = lower.chars().count();
    let mut best: Option<(&str, u64)> = None;
    for (cand, freq) in lex.words() {
        let cand_len = cand.chars().count();
        if cand_len + 2 < word_len || word_len + 2 < cand_len {
            continue;
        }
        if osa_distance_bounded(&lower, cand, 2).is_none() {
            continue;
        }
        best = match best {
            None => Some((cand, freq)),
            Some((bw, bf)) => {
                if freq > bf || (freq == bf && cand < bw) {
                    Some((cand, freq))
                } else {
                    Some((bw, bf))
                }
            }
        };
    }
    match best {
        Some((repl, _)) => match_initial_case(word, repl),
        None => word.to_string(),
    }
}

/// Restricted Damerau-Levenshtein (adjacent transpositions count as one
/// edit). Returns `None` when the distance exceeds `max`.
pub fn osa_distance_bounded(a: &str, b: &str, max: usize) -> Option<usize> {
    let a: Vec<char> = a.chars().collect();
    let b: Vec<char> = b.chars().collect();
    let (n, m) = (a.len(), b.len());
    if n.abs_diff(m) > max {
        return None;
    }
    let mut prev2: Vec<usize> = Vec::new();
    let mut prev: Vec<usize> = (0..=m).collect();
    let mut cur: Vec<usize> = vec![0; m + 1];
    for i in 1..=n {
        cur[0] = i;
        let mut row_min = cur[0];
        for j in 1..=m {
            let cost = usize::from(a[i - 1] != b[j - 1]);
            let mut d = (prev[j] + 1).min(cur[j - 1] + 1).min(prev[j - 1] + cost);
            if i > 1 && j > 1 && a[i - 1] == b[j - 2] && a[i - 2] == b[j - 1] {
                d = d.min(prev2[j - 2] + 1);
            }
            cur[j] = d;
            row_min = row_min.min(d);
        }
        if row_min > max {
            return None;
        }
        prev2 = std::mem::replace(&mut prev, std::mem::replace(&mut cur, vec![0; m + 1]));
    }
    let d = prev[m];
    (d <= max).then_some(d)
}

/// Uniform synonym draw using a raw random value. Returns `None` when the
/// candidate set is empty (the `NoCandidate` signal).
pub fn synonym_sub_with_draw(lex: &SynonymLexicon, word: &str, draw: u64) -> Option<String> {
    let candidates = lex.candidates(word);
    if candidates.is_empty() {
        return None;
    }
    let pick = (draw % candidates.len() as u64) as usize;
    Some(match_initial_case(word, &candidates[pick]))
}

/// Uniform synonym substitution; `None` means no candidates (caller falls
/// back per the plan rules).
pub fn synonym_sub(lex: &SynonymLexicon, word: &str, rng: &mut DetRng) -> Option<String> {
    let draw = rng.next_u64();
    synonym_sub_with_draw(lex, word, draw)
}

/// Plans one replicate: `min(k, eligible)` distinct eligible token indices
/// drawn uniformly without replacement, each with a kind drawn uniformly
/// from `kinds` and two stored raw draws for application time.
pub fn plan_replicate(
    sentence: &Sentence,
    k: usize,
    kinds: &[CorrectionKind],
    rng: &mut DetRng,
) -> Result<Vec<PlanStep>, PlanError> {
    assert!(!kinds.is_empty(), "at least one correction kind is required");
    let eligible = sentence.eligible_indices();
    if eligible.is_empty() {
        return Err(PlanError::EmptySentence);
    }
    let picks = rng.sample_distinct(eligible.len(), k);
    let mut steps = Vec::with_capacity(picks.len());
    for pick in picks {
        let kind = *rng.choose(kinds);
        let draws = [rng.next_u64(), rng.next_u64()];
        steps.push(PlanStep {
            sentence_index: sentence.index(),
            token_index: eligible[pick],
            kind,
            draws,
        });
    }
    Ok(steps)
}

/// Applies planned corrections to a copy of the sentence, in step order.
/// A `SynonymSub` step with no candidates re-draws its kind uniformly from
/// the remaining enabled kinds using the stored draw; with no remaining
/// kinds the token is left unchanged. Returns the reassembled replicate
/// text and the per-step audit.
pub fn apply_plan(
    sentence: &Sentence,
    steps: &[PlanStep],
    kinds: &[CorrectionKind],
    spell: &SpellLexicon,
    synonyms: &SynonymLexicon,
) -> (String, Vec<AuditStep>) {
    let mut tokens: Vec<Token> = sentence.tokens().to_vec();
    let mut audits = Vec::with_capacity(steps.len());
    for step in steps {
        debug_assert_eq!(step.sentence_index, sentence.index());
        let token = &tokens[step.token_index];
        let before = token.surface().to_string();
        let core = token.core().to_string();
        let (applied_kind, new_token) = match step.kind {
            CorrectionKind::SpellCheck => {
                let corrected = spell_correct(spell, &core);
                (step.kind, token.with_core_replaced(&corrected))
            }
            CorrectionKind::DropWord => (step.kind, Token::dropped()),
            CorrectionKind::SynonymSub => match synonym_sub_with_draw(synonyms, &core, step.draws[0])
            {
                Some(repl) => (step.kind, token.with_core_replaced(&repl)),
                None => {
                    let remaining: Vec<CorrectionKind> = kinds
                        .iter()
                        .copied()
                        .filter(|k| *k != CorrectionKind::SynonymSub)
                        .collect();
                    if remaining.is_empty() {
                        (CorrectionKind::SynonymSub, token.clone())
                    } else {
                        let pick = (step.draws[1] % remaining.len() as u64) as usize;
                        match remaining[pick] {
                            CorrectionKind::SpellCheck => {
                                let corrected = spell_correct(spell, &core);
                                (
                                    CorrectionKind::SpellCheck,
                                    token.with_core_replaced(&corrected),
                                )
                            }
                            CorrectionKind::DropWord => {
                                (CorrectionKind::DropWord, Token::dropped())
                            }
                            CorrectionKind::SynonymSub => unreachable!("filtered out"),
                        }
                    }
                }
            },
        };
        audits.push(AuditStep {
            token_index: step.token_index,
            kind: applied_kind,
            before,
            after: new_token.surface().to_string(),
        });
        tokens[step.token_index] = new_token;
    }
    (reassemble(&tokens), audits)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::textcore::tokenize;
    use proptest::prelude::*;

    fn spell_lex(entries: &[(&str, u64)]) -> SpellLexicon {
        SpellLexicon::from_entries(entries.iter().map(|(w, c)| (w.to_string(), *c)))
    }

    fn syn_lex(raw: &[&[&str]]) -> SynonymLexicon {
        SynonymLexicon::from_groups(
            raw.iter()
                .map(|g| g.iter().map(|s| s.to_string()).collect::<Vec<_>>()),
        )
    }

    fn sentence(text: &str) -> Sentence {
        Sentence::new(0, tokenize(text))
    }

    // Reference OSA implementation without bounds, for cross-checking the
    // banded version.
    fn osa_reference(a: &str, b: &str) -> usize {
        let a: Vec<char> = a.chars().collect();
        let b: Vec<char> = b.chars().collect();
        let (n, m) = (a.len(), b.len());
        let mut d = vec![vec![0usize; m + 1]; n + 1];
        for (i, row) in d.iter_mut().enumerate() {
            row[0] = i;
        }
        for j in 0..=m {
            d[0][j] = j;
        }
        for i in 1..=n {
            for j in 1..=m {
                let cost = usize::from(a[i - 1] != b[j - 1]);
                let mut best = (d[i - 1][j] + 1)
                    .min(d[i][j - 1] + 1)
                    .min(d[i - 1][j - 1] + cost);
                if i > 1 && j > 1 && a[i - 1] == b[j - 2] && a[i - 2] == b[j - 1] {
                    best = best.min(d[i - 2][j - 2] + 1);
                }
                d[i][j] = best;
            }
        }
        d[n][m]
    }

    #[test]
    fn osa_known_distances() {
        assert_eq!(osa_distance_bounded("moive", "movie", 2), Some(1)); // transposition
        assert_eq!(osa_distance_bounded("moive", "move", 2), Some(1)); // deletion
        assert_eq!(osa_distance_bounded("abc", "abc", 2), Some(0));
        assert_eq!(osa_distance_bounded("abcd", "dcba", 2), None);
    }

    #[test]
    fn spell_correct_identity_on_known_words() {
        let lex = spell_lex(&[("movie", 1000)]);
        assert_eq!(spell_correct(&lex, "movie"), "movie");
        assert_eq!(spell_correct(&lex, "Movie"), "Movie");
    }

    // Brute-force oracle: both "movie" (distance 1, transposition) and
    // "move" (distance 1, deletion) are within distance 2 of "moive";
    // "movie" wins on frequency.
    #[test]
    fn spell_correct_picks_max_frequency() {
        let lex = spell_lex(&[("movie", 1000), ("move", 900)]);
        assert_eq!(spell_correct(&lex, "moive"), "movie");
        assert_eq!(spell_correct(&lex, "Moive"), "Movie");
    }

    #[test]
    fn spell_correct_breaks_frequency_ties_lexicographically() {
        let lex = spell_lex(&[("mob", 10), ("mop", 10)]);
        assert_eq!(spell_correct(&lex, "moq"), "mob");
    }

    #[test]
    fn spell_correct_leaves_far_words_unchanged() {
        let lex = spell_lex(&[("movie", 1000)]);
        assert_eq!(spell_correct(&lex, "xqzv"), "xqzv");
    }

    #[test]
    fn spell_correct_is_idempotent() {
        let lex = spell_lex(&[("movie", 1000), ("great", 500), ("fine", 50)]);
        for word in ["moive", "grate", "fin", "zzzz", "movie"] {
            let once = spell_correct(&lex, word);
            assert_eq!(spell_correct(&lex, &once), once);
        }
    }

    #[test]
    fn synonym_sub_draw_is_deterministic() {
        let lex = syn_lex(&[&["good", "well", "decent"]]);
        // candidates("good") sorted: ["decent", "well"]
        assert_eq!(
            synonym_sub_with_draw(&lex, "good", 0),
            Some("decent".to_string())
        );
        assert_eq!(
            synonym_sub_with_draw(&lex, "good", 1),
            Some("well".to_string())
        );
        assert_eq!(
            synonym_sub_with_draw(&lex, "Good", 1),
            Some("Well".to_string())
        );
    }

    #[test]
    fn synonym_sub_unknown_word_is_no_candidate() {
        let lex = syn_lex(&[&["good", "well"]]);
        let mut rng = DetRng::new(7);
        assert_eq!(synonym_sub(&lex, "zzzq", &mut rng), None);
    }

    #[test]
    fn synonym_sub_never_returns_the_input() {
        let lex = syn_lex(&[&["good", "well", "decent", "fine"]]);
        let mut rng = DetRng::new(11);
        for _ in 0..10_000 {
            let out = synonym_sub(&lex, "good", &mut rng).unwrap();
            assert_ne!(out.to_lowercase(), "good");
        }
    }

    // Binomial oracle at 3 sigma: 10^4 draws over two candidates, each
    // expected 5000 with sigma = sqrt(10^4 * 0.25) = 50.
    #[test]
    fn synonym_sub_draws_are_uniform() {
        let lex = syn_lex(&[&["good", "well", "decent"]]);
        let mut rng = DetRng::new(42);
        let mut counts = [0u32; 2];
        for _ in 0..10_000 {
            match synonym_sub(&lex, "good", &mut rng).unwrap().as_str() {
                "decent" => counts[0] += 1,
                "well" => counts[1] += 1,
                other => panic!("unexpected candidate {other}"),
            }
        }
        for c in counts {
            assert!((c as i64 - 5000).abs() <= 200, "counts: {counts:?}");
        }
    }

    #[test]
    fn plan_draws_without_replacement() {
        let s = sentence("aa bb cc dd ee ff gg hh ii jj");
        let mut rng = DetRng::new(1);
        let steps = plan_replicate(&s, 5, &CorrectionKind::ALL, &mut rng).unwrap();
        assert_eq!(steps.len(), 5);
        let mut idx: Vec<usize> = steps.iter().map(|s| s.token_index).collect();
        idx.sort_unstable();
        idx.dedup();
        assert_eq!(idx.len(), 5);
    }

    #[test]
    fn plan_clamps_to_eligible_count() {
        let s = sentence("aa bb cc");
        let mut rng = DetRng::new(1);
        let steps = plan_replicate(&s, 5, &CorrectionKind::ALL, &mut rng).unwrap();
        assert_eq!(steps.len(), 3);
    }

    #[test]
    fn plan_same_seed_same_plan() {
        let s = sentence("aa bb cc dd ee ff");
        let a = plan_replicate(&s, 3, &CorrectionKind::ALL, &mut DetRng::new(9)).unwrap();
        let b = plan_replicate(&s, 3, &CorrectionKind::ALL, &mut DetRng::new(9)).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn plan_rejects_sentence_without_eligible_tokens() {
        let s = sentence("a I 7");
        let mut rng = DetRng::new(1);
        assert!(matches!(
            plan_replicate(&s, 2, &CorrectionKind::ALL, &mut rng),
            Err(PlanError::EmptySentence)
        ));
    }

    // Goodness-of-fit at 3 sigma: 60_000 single-token plans over 6 eligible
    // tokens; each index expected 10_000, sigma = sqrt(n*p*(1-p)) ~ 91.3.
    #[test]
    fn plan_token_selection_is_uniform() {
        let s = sentence("aa bb cc dd ee ff");
        let mut rng = DetRng::new(1234);
        let mut counts = [0u32; 6];
        for _ in 0..60_000 {
            let steps = plan_replicate(&s, 1, &CorrectionKind::ALL, &mut rng).unwrap();
            counts[steps[0].token_index] += 1;
        }
        let sigma = (60_000.0f64 * (1.0 / 6.0) * (5.0 / 6.0)).sqrt();
        for c in counts {
            assert!(
                (c as f64 - 10_000.0).abs() <= 3.0 * sigma,
                "counts: {counts:?}"
            );
        }
    }

    #[test]
    fn apply_empty_plan_is_identity() {
        let s = sentence("Great  movie.");
        let spell = spell_lex(&[("great", 1), ("movie", 1)]);
        let syn = syn_lex(&[&["good", "well"]]);
        let (text, audits) = apply_plan(&s, &[], &CorrectionKind::ALL, &spell, &syn);
        assert_eq!(text, "Great movie.");
        assert!(audits.is_empty());
    }

    #[test]
    fn apply_spell_step_corrects_typo() {
        let s = sentence("moive night");
        let spell = spell_lex(&[("movie", 1000), ("night", 10)]);
        let syn = syn_lex(&[&["good", "well"]]);
        let steps = vec![PlanStep {
            sentence_index: 0,
            token_index: 0,
            kind: CorrectionKind::SpellCheck,
            draws: [0, 0],
        }];
        let (text, audits) = apply_plan(&s, &steps, &CorrectionKind::ALL, &spell, &syn);
        assert_eq!(text, "movie night");
        assert_eq!(audits[0].before, "moive");
        assert_eq!(audits[0].after, "movie");
        assert_eq!(audits[0].kind, CorrectionKind::SpellCheck);
    }

    #[test]
    fn apply_drop_step_removes_token() {
        let s = sentence("so very good");
        let spell = spell_lex(&[("so", 1)]);
        let syn = syn_lex(&[&["good", "well"]]);
        let steps = vec![PlanStep {
            sentence_index: 0,
            token_index: 1,
            kind: CorrectionKind::DropWord,
            draws: [0, 0],
        }];
        let (text, _) = apply_plan(&s, &steps, &CorrectionKind::ALL, &spell, &syn);
        assert_eq!(text, "so good");
    }

    #[test]
    fn apply_drop_of_only_token_yields_empty() {
        let s = sentence("ok");
        let spell = spell_lex(&[("ok", 1)]);
        let syn = syn_lex(&[&["good", "well"]]);
        let steps = vec![PlanStep {
            sentence_index: 0,
            token_index: 0,
            kind: CorrectionKind::DropWord,
            draws: [0, 0],
        }];
        let (text, _) = apply_plan(&s, &steps, &CorrectionKind::ALL, &spell, &syn);
        assert_eq!(text, "");
    }

    #[test]
    fn apply_synonym_fallback_redraws_kind() {
        // "orphan" has no synonyms; draws[1] selects from [spell, drop].
        let s = sentence("orphan word");
        let spell = spell_lex(&[("orphan", 5), ("word", 5)]);
        let syn = syn_lex(&[&["good", "well"]]);
        let step = |draw1: u64| {
            vec![PlanStep {
                sentence_index: 0,
                token_index: 0,
                kind: CorrectionKind::SynonymSub,
                draws: [0, draw1],
            }]
        };
        let (text, audits) = apply_plan(&s, &step(0), &CorrectionKind::ALL, &spell, &syn);
        assert_eq!(audits[0].kind, CorrectionKind::SpellCheck);
        assert_eq!(text, "orphan word");
        let (text, audits) = apply_plan(&s, &step(1), &CorrectionKind::ALL, &spell, &syn);
        assert_eq!(audits[0].kind, CorrectionKind::DropWord);
        assert_eq!(text, "word");
    }

    #[test]
    fn apply_synonym_only_mode_leaves_token_unchanged() {
        let s = sentence("orphan word");
        let spell = spell_lex(&[("orphan", 5)]);
        let syn = syn_lex(&[&["good", "well"]]);
        let steps = vec![PlanStep {
            sentence_index: 0,
            token_index: 0,
            kind: CorrectionKind::SynonymSub,
            draws: [0, 0],
        }];
        let only_syn = [CorrectionKind::SynonymSub];
        let (text, audits) = apply_plan(&s, &steps, &only_syn, &spell, &syn);
        assert_eq!(text, "orphan word");
        assert_eq!(audits[0].before, audits[0].after);
    }

    #[test]
    fn apply_does_not_mutate_the_source_sentence() {
        let s = sentence("good fine");
        let spell = spell_lex(&[("good", 5), ("fine", 5)]);
        let syn = syn_lex(&[&["good", "well"]]);
        let steps = vec![PlanStep {
            sentence_index: 0,
            token_index: 0,
            kind: CorrectionKind::DropWord,
            draws: [0, 0],
        }];
        let before = s.text();
        let _ = apply_plan(&s, &steps, &CorrectionKind::ALL, &spell, &syn);
        assert_eq!(s.text(), before);
    }

    #[test]
    fn fork_gives_independent_streams() {
        let root = DetRng::new(99);
        let mut a = root.fork("alpha");
        let mut b = root.fork("beta");
        let sa: Vec<u64> = (0..4).map(|_| a.next_u64()).collect();
        let sb: Vec<u64> = (0..4).map(|_| b.next_u64()).collect();
        assert_ne!(sa, sb);
        let mut a2 = root.fork("alpha");
        let sa2: Vec<u64> = (0..4).map(|_| a2.next_u64()).collect();
        assert_eq!(sa, sa2);
    }

    proptest! {
        #[test]
        fn osa_banded_matches_reference(a in "[a-e]{0,8}", b in "[a-e]{0,8}") {
            let reference = osa_reference(&a, &b);
            let banded = osa_distance_bounded(&a, &b, 2);
            if reference <= 2 {
                prop_assert_eq!(banded, Some(reference));
            } else {
                prop_assert_eq!(banded, None);
            }
        }

        #[test]
        fn sample_distinct_is_distinct_and_in_range(n in 1usize..30, count in 0usize..40, seed in 0u64..1000) {
            let mut rng = DetRng::new(seed);
            let picks = rng.sample_distinct(n, count);
            prop_assert_eq!(picks.len(), count.min(n));
            let mut sorted = picks.clone();
            sorted.sort_unstable();
            sorted.dedup();
            prop_assert_eq!(sorted.len(), picks.len());
            prop_assert!(picks.iter().all(|&p| p < n));
        }
    }
}
