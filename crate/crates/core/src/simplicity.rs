//! Simplicity scoring.
//!
//! * sentence length score: a reversed sigmoid over the token count,
//! * sentence familiarity: mean of `percent_known * zipf / syllables` over the
//!   distinct known tokens,
//! * text simplicity: a blend of a lexical term (whole-text familiarity plus a
//!   boosted length score) and a structural term (the least simple sentence),
//! * the final score compares the text simplicity of the output against the
//!   input and clamps the relative difference into `[0, 1]`.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::error::{ConfigError, ScoreError};
use crate::lexicon::Lexicon;
use crate::textproc::{tokenize, Splitter};

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SimplicityConfig {
    /// Sigmoid steepness.
    pub tau: f64,
    /// Sigmoid midpoint, in tokens.
    pub omega: f64,
    /// Weight of the lexical term.
    pub alpha: f64,
    /// Weight of the structural term.
    pub beta: f64,
}

impl Default for SimplicityConfig {
    fn default() -> Self {
        Self {
            tau: 0.22,
            omega: 13.0,
            alpha: 0.45,
            beta: 0.55,
        }
    }
}

impl SimplicityConfig {
    pub fn validate(&self) -> Result<(), ConfigError> {
        let finite = [self.tau, self.omega, self.alpha, self.beta]
            .iter()
            .all(|v| v.is_finite());
        if !finite {
            return Err(ConfigError("simplicity constants must be finite".into()));
        }
        if self.tau <= 0.0 {
            return Err(ConfigError(format!("tau must be > 0, got {}", self.tau)));
        }
        if self.omega <= 0.0 {
            return Err(ConfigError(format!("omega must be > 0, got {}", self.omega)));
        }
        if self.alpha < 0.0 || self.beta < 0.0 {
            return Err(ConfigError("alpha and beta must be non-negative".into()));
        }
        if (self.alpha + self.beta - 1.0).abs() > 1e-9 {
            return Err(ConfigError(format!(
                "alpha + beta must equal 1, got {} + {}",
                self.alpha, self.beta
            )));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct TssBreakdown {
    pub f_lexl: f64,
    pub f_strc: f64,
    pub tss: f64,
}

/// Sentence length score, `1 - sigmoid(tau * (count - omega))`.
pub fn sls(token_count: usize, cfg: &SimplicityConfig) -> Result<f64, ScoreError> {
    if token_count == 0 {
        return Err(ScoreError::ZeroLengthText);
    }
    let x = cfg.tau * (token_count as f64 - cfg.omega);
    // 1 - 1/(1+e^-x) == 1/(1+e^x), which avoids cancellation for large x
    Ok(1.0 / (1.0 + x.exp()))
}

/// Average familiarity of the distinct known tokens of `sentence`; 0 when
/// none of its tokens is known.
pub fn asf(sentence: &str, lex: &Lexicon) -> f64 {
    asf_tokens(&tokenize(sentence), lex)
}

pub fn asf_tokens(tokens: &[String], lex: &Lexicon) -> f64 {
    let known: BTreeSet<&str> = tokens
        .iter()
        .map(String::as_str)
        .filter(|t| lex.contains(t))
        .collect();
    if known.is_empty() {
        return 0.0;
    }
    let total: f64 = known
        .iter()
        .filter_map(|t| lex.lookup(t))
        .map(|e| e.percent_known * e.zipf / f64::from(e.syllables))
        .sum();
    total / known.len() as f64
}

/// Text simplicity using the rule-based sentence splitter.
pub fn tss(text: &str, lex: &Lexicon, cfg: &SimplicityConfig) -> Result<TssBreakdown, ScoreError> {
    tss_with_splitter(text, lex, cfg, Splitter::Rules)
}

pub fn tss_with_splitter(
    text: &str,
    lex: &Lexicon,
    cfg: &SimplicityConfig,
    splitter: Splitter,
) -> Result<TssBreakdown, ScoreError> {
    let tokens = tokenize(text);
    if tokens.is_empty() {
        return Err(ScoreError::ZeroLengthText);
    }
    let f_lexl = asf_tokens(&tokens, lex) + 5.0 * sls(tokens.len(), cfg)?.cbrt();

    let mut f_strc = f64::INFINITY;
    for sentence in splitter.split(text) {
        let st = tokenize(sentence);
        if st.is_empty() {
            continue;
        }
        f_strc = f_strc.min(asf_tokens(&st, lex) * sls(st.len(), cfg)?);
    }
    debug_assert!(f_strc.is_finite(), "text with tokens has a non-empty sentence");

    Ok(TssBreakdown {
        f_lexl,
        f_strc,
        tss: cfg.alpha * f_lexl + cfg.beta * f_strc,
    })
}

/// Relative simplicity difference shifted by one half, clamped to `[0, 1]`.
pub fn disparity(simple_tss: f64, complex_tss: f64) -> f64 {
    let d = (simple_tss - complex_tss) / (simple_tss + complex_tss) + 0.5;
    d.clamp(0.0, 1.0)
}

/// Unclamped disparity, exposed for the antisymmetry property.
pub fn raw_disparity(simple_tss: f64, complex_tss: f64) -> f64 {
    (simple_tss - complex_tss) / (simple_tss + complex_tss) + 0.5
}

pub fn s_score(
    complex_text: &str,
    simple_text: &str,
    lex: &Lexicon,
    cfg: &SimplicityConfig,
) -> Result<f64, ScoreError> {
    s_score_with_splitter(complex_text, simple_text, lex, cfg, Splitter::Rules)
}

pub fn s_score_with_splitter(
    complex_text: &str,
    simple_text: &str,
    lex: &Lexicon,
    cfg: &SimplicityConfig,
    splitter: Splitter,
) -> Result<f64, ScoreError> {
    let s = tss_with_splitter(simple_text, lex, cfg, splitter)?.tss;
    let c = tss_with_splitter(complex_text, lex, cfg, splitter)?.tss;
    Ok(disparity(s, c))
}
