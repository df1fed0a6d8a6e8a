//! Reference-less evaluation of split-and-rephrase outputs.
//!
//! Given a complex input text and its simplified rewrite, [`ce_score`]
//! returns four values in `[0, 1]`:
//!
//! * `s_score`: how much simpler the rewrite is ([`simplicity`]),
//! * `m_score`: how much of the input's meaning survives ([`meaning`]),
//! * `g_score`: how grammatical the rewrite looks, using the input as the
//!   grammatical reference ([`grammar`]),
//! * `ce_score`: the geometric mean of the three.
//!
//! Scores above 0.5 are considered acceptable. Word statistics come from a
//! frequency list and a familiarity list loaded into a [`Lexicon`]. The
//! [`eval`] module correlates scores with human judgments.
//!
//! ```
//! use cescore::{ce_score, Config, Lexicon, LexiconEntry};
//!
//! let lex = Lexicon::from_entries(["the", "cat", "sat", "on", "a", "mat", "and", "slept", "all", "day"].map(|w| {
//!     LexiconEntry { word: w.into(), zipf: 5.0, percent_known: 0.98, syllables: 1 }
//! }));
//! let complex = "The cat sat on a mat and slept all day.";
//! let scores = ce_score(complex, "The cat sat on a mat. The cat slept all day.", &lex, &Config::default()).unwrap();
//! assert!(scores.s_score > 0.5);
//! ```

pub mod cli;
pub mod error;
pub mod eval;
pub mod grammar;
pub mod lexicon;
pub mod meaning;
pub mod scorer;
pub mod simplicity;
pub mod textproc;

pub use error::{ConfigError, ScoreError};
pub use grammar::{Aggregation, GrammarConfig};
pub use lexicon::{count_syllables, Lexicon, LexiconEntry, LexiconError};
pub use scorer::{ce_score, Config, ScoreBundle, Scorer};
pub use simplicity::{SimplicityConfig, TssBreakdown};
pub use textproc::{tokenize, to_sentences, Splitter, TokenizedText};
