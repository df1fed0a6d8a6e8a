//! Meaning preservation: frequency-weighted token-set overlap.
//!
//! Every distinct token carries weight `1 / (1 + zipf)`, with unknown words at
//! zipf 0 and therefore weight 1. The score is the summed weight of the
//! tokens both texts share divided by the summed weight of all tokens.

use std::collections::BTreeSet;

use crate::error::ScoreError;
use crate::lexicon::Lexicon;
use crate::textproc::tokenize;

#[derive(Debug, Clone, PartialEq)]
pub struct WeightedTokenSets {
    pub shared: BTreeSet<String>,
    pub union: BTreeSet<String>,
}

impl WeightedTokenSets {
    pub fn new(complex_text: &str, simple_text: &str) -> Self {
        let c: BTreeSet<String> = tokenize(complex_text).into_iter().collect();
        let s: BTreeSet<String> = tokenize(simple_text).into_iter().collect();
        Self {
            shared: c.intersection(&s).cloned().collect(),
            union: c.union(&s).cloned().collect(),
        }
    }

    pub fn weight(token: &str, lex: &Lexicon) -> f64 {
        1.0 / (1.0 + lex.zipf_or_zero(token))
    }

    fn total(set: &BTreeSet<String>, lex: &Lexicon) -> f64 {
        set.iter().map(|t| Self::weight(t, lex)).sum()
    }

    pub fn ratio(&self, lex: &Lexicon) -> Result<f64, ScoreError> {
        if self.union.is_empty() {
            return Err(ScoreError::EmptyPair);
        }
        if self.shared.len() == self.union.len() {
            return Ok(1.0);
        }
        Ok(Self::total(&self.shared, lex) / Self::total(&self.union, lex))
    }
}

pub fn m_score(complex_text: &str, simple_text: &str, lex: &Lexicon) -> Result<f64, ScoreError> {
    WeightedTokenSets::new(complex_text, simple_text).ratio(lex)
}
