//! Grammaticality estimated from n-gram semi-matches against the input text.
//!
//! Two n-grams match fully when identical and partially when their longest
//! order-preserving common subsequence covers all but one position. Each
//! output sentence is scored by the average semi-match precision over the
//! n-gram sizes it can support; the text score is the smallest positive
//! sentence score.

use serde::{Deserialize, Serialize};

use crate::error::{ConfigError, ScoreError};
use crate::textproc::{ngrams, tokenize, NGram, Splitter};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Aggregation {
    /// Each candidate n-gram counts its best match among the reference n-grams.
    #[default]
    MaxPerCandidate,
    /// Every (reference, candidate) pair contributes; may exceed 1.
    LiteralDoubleSum,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct GrammarConfig {
    pub n_min: usize,
    pub n_max: usize,
    pub aggregation: Aggregation,
}

impl Default for GrammarConfig {
    fn default() -> Self {
        Self {
            n_min: 4,
            n_max: 7,
            aggregation: Aggregation::MaxPerCandidate,
        }
    }
}

impl GrammarConfig {
    pub fn validate(&self) -> Result<(), ConfigError> {
        if self.n_min < 2 {
            return Err(ConfigError(format!("n_min must be >= 2, got {}", self.n_min)));
        }
        if self.n_min > self.n_max {
            return Err(ConfigError(format!(
                "n_min ({}) must not exceed n_max ({})",
                self.n_min, self.n_max
            )));
        }
        Ok(())
    }
}

/// Per-sentence averaged semi-match scores for one output text.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SentenceGramScores {
    pub per_sentence: Vec<f64>,
}

impl SentenceGramScores {
    pub fn g_score(&self) -> f64 {
        min_positive(&self.per_sentence)
    }
}

/// Smallest strictly positive value, or 0 when there is none.
pub fn min_positive(values: &[f64]) -> f64 {
    values
        .iter()
        .copied()
        .filter(|v| *v > 0.0)
        .reduce(f64::min)
        .unwrap_or(0.0)
}

/// Length of the longest common subsequence of two token slices.
fn ordered_overlap(a: &[String], b: &[String]) -> usize {
    let mut prev = vec![0usize; b.len() + 1];
    let mut cur = vec![0usize; b.len() + 1];
    for x in a {
        for (j, y) in b.iter().enumerate() {
            cur[j + 1] = if x == y {
                prev[j] + 1
            } else {
                cur[j].max(prev[j + 1])
            };
        }
        std::mem::swap(&mut prev, &mut cur);
    }
    prev[b.len()]
}

fn match_value(a: &[String], b: &[String]) -> f64 {
    let n = a.len();
    if a == b {
        return 1.0;
    }
    if n < 2 {
        return 0.0;
    }
    if ordered_overlap(a, b) == n - 1 {
        (n - 2) as f64 / n as f64
    } else {
        0.0
    }
}

/// Match score of two equal-length n-grams: 1, `(n-2)/n`, or 0.
pub fn partial_match(a: &NGram<'_>, b: &NGram<'_>) -> Result<f64, ScoreError> {
    if a.n() != b.n() {
        return Err(ScoreError::LengthMismatch(a.n(), b.n()));
    }
    Ok(match_value(a.items, b.items))
}

/// Semi-match precision of the candidate's n-grams against the reference.
pub fn semi_match(
    reference: &[String],
    candidate: &[String],
    n: usize,
    cfg: &GrammarConfig,
) -> Result<f64, ScoreError> {
    if n < 2 {
        return Err(ScoreError::InvalidGramLength(n));
    }
    let cand = ngrams(candidate, n);
    if cand.is_empty() {
        return Err(ScoreError::NoCandidateGrams { n });
    }
    let refs = ngrams(reference, n);
    if refs.is_empty() {
        return Ok(0.0);
    }
    let total: f64 = match cfg.aggregation {
        Aggregation::MaxPerCandidate => cand
            .iter()
            .map(|sg| {
                let mut best = 0.0f64;
                for cg in &refs {
                    best = best.max(match_value(cg.items, sg.items));
                    if best == 1.0 {
                        break;
                    }
                }
                best
            })
            .sum(),
        Aggregation::LiteralDoubleSum => cand
            .iter()
            .flat_map(|sg| refs.iter().map(move |cg| match_value(cg.items, sg.items)))
            .sum(),
    };
    Ok(total / cand.len() as f64)
}

/// Averaged semi-match score of one output sentence.
///
/// Sentences shorter than `n_min` but with at least two tokens use a single
/// whole-sentence n-gram; sentences with fewer than two tokens score 0.
pub fn sentence_score(reference: &[String], sentence: &[String], cfg: &GrammarConfig) -> f64 {
    let len = sentence.len();
    if len < 2 {
        return 0.0;
    }
    let sizes: Vec<usize> = if len >= cfg.n_min {
        (cfg.n_min..=cfg.n_max.min(len)).collect()
    } else {
        vec![len]
    };
    let total: f64 = sizes
        .iter()
        .map(|&n| semi_match(reference, sentence, n, cfg).expect("sentence supports every size"))
        .sum();
    total / sizes.len() as f64
}

pub fn sentence_scores(
    complex_text: &str,
    sentences: &[&str],
    cfg: &GrammarConfig,
) -> SentenceGramScores {
    let reference = tokenize(complex_text);
    SentenceGramScores {
        per_sentence: sentences
            .iter()
            .map(|s| sentence_score(&reference, &tokenize(s), cfg))
            .collect(),
    }
}

pub fn g_score(complex_text: &str, simple_text: &str, cfg: &GrammarConfig) -> Result<f64, ScoreError> {
    g_score_with_splitter(complex_text, simple_text, cfg, Splitter::Rules)
}

pub fn g_score_with_splitter(
    complex_text: &str,
    simple_text: &str,
    cfg: &GrammarConfig,
    splitter: Splitter,
) -> Result<f64, ScoreError> {
    if tokenize(simple_text).is_empty() {
        return Err(ScoreError::ZeroLengthText);
    }
    let sentences = splitter.split(simple_text);
    Ok(sentence_scores(complex_text, &sentences, cfg).g_score())
}
