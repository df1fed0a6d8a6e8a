//! Top-level scoring: the three criterion scores and their geometric mean.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{ConfigError, ScoreError};
use crate::grammar::{g_score_with_splitter, GrammarConfig};
use crate::lexicon::Lexicon;
use crate::meaning::m_score;
use crate::simplicity::{s_score_with_splitter, SimplicityConfig};
use crate::textproc::{tokenize, Splitter};

#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
pub struct Config {
    pub simplicity: SimplicityConfig,
    pub grammar: GrammarConfig,
    #[serde(default)]
    pub splitter: Splitter,
}

impl Config {
    pub fn validate(&self) -> Result<(), ConfigError> {
        self.simplicity.validate()?;
        self.grammar.validate()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ScoreBundle {
    pub s_score: f64,
    pub m_score: f64,
    pub g_score: f64,
    pub ce_score: f64,
}

impl ScoreBundle {
    /// Combines component scores with a geometric mean.
    pub fn from_components(s_score: f64, m_score: f64, g_score: f64) -> Self {
        Self {
            s_score,
            m_score,
            g_score,
            ce_score: (s_score * m_score * g_score).cbrt(),
        }
    }

    pub fn is_acceptable(&self) -> bool {
        self.ce_score > 0.5
    }
}

pub fn ce_score(
    complex_text: &str,
    simple_text: &str,
    lex: &Lexicon,
    cfg: &Config,
) -> Result<ScoreBundle, ScoreError> {
    if tokenize(complex_text).is_empty() || tokenize(simple_text).is_empty() {
        return Err(ScoreError::ZeroLengthText);
    }
    let m = m_score(complex_text, simple_text, lex)?;
    let g = g_score_with_splitter(complex_text, simple_text, &cfg.grammar, cfg.splitter)?;
    let s = s_score_with_splitter(complex_text, simple_text, lex, &cfg.simplicity, cfg.splitter)?;
    Ok(ScoreBundle::from_components(s, m, g))
}

/// One input pair for batch scoring.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PairRecord {
    pub id: serde_json::Value,
    pub complex: String,
    pub simple: String,
}

/// Scores pairs against a shared lexicon and configuration.
#[derive(Debug, Clone, Copy)]
pub struct Scorer<'a> {
    lex: &'a Lexicon,
    cfg: Config,
}

impl<'a> Scorer<'a> {
    pub fn new(lex: &'a Lexicon, cfg: Config) -> Result<Self, ConfigError> {
        cfg.validate()?;
        Ok(Self { lex, cfg })
    }

    pub fn config(&self) -> &Config {
        &self.cfg
    }

    pub fn lexicon(&self) -> &'a Lexicon {
        self.lex
    }

    pub fn score(&self, complex_text: &str, simple_text: &str) -> Result<ScoreBundle, ScoreError> {
        ce_score(complex_text, simple_text, self.lex, &self.cfg)
    }

    /// Scores every pair; the output is in input order. `jobs` of `None` uses
    /// the global thread pool, `Some(1)` runs sequentially.
    pub fn score_batch<T>(
        &self,
        pairs: &[T],
        jobs: Option<usize>,
    ) -> Vec<Result<ScoreBundle, ScoreError>>
    where
        T: AsPair + Sync,
    {
        let run = || -> Vec<_> {
            pairs
                .par_iter()
                .map(|p| {
                    let (c, s) = p.pair();
                    self.score(c, s)
                })
                .collect()
        };
        match jobs {
            Some(1) => pairs
                .iter()
                .map(|p| {
                    let (c, s) = p.pair();
                    self.score(c, s)
                })
                .collect(),
            Some(n) => match rayon::ThreadPoolBuilder::new().num_threads(n).build() {
                Ok(pool) => pool.install(run),
                Err(_) => run(),
            },
            None => run(),
        }
    }
}

/// Anything that can be viewed as a (complex, simple) text pair.
pub trait AsPair {
    fn pair(&self) -> (&str, &str);
}

impl AsPair for PairRecord {
    fn pair(&self) -> (&str, &str) {
        (&self.complex, &self.simple)
    }
}

impl<A: AsRef<str>, B: AsRef<str>> AsPair for (A, B) {
    fn pair(&self) -> (&str, &str) {
        (self.0.as_ref(), self.1.as_ref())
    }
}
