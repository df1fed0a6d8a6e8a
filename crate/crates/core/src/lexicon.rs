//! Word statistics used by the simplicity and meaning scores.
//!
//! Two external resources are merged into one [`Lexicon`]:
//!
//! * a frequency list carrying a Zipf-scaled frequency per word (this list
//!   defines the set of known words), and
//! * a familiarity list carrying the fraction of people who know the word.
//!
//! Both are delimited UTF-8 text files with a one-line header. Column names are
//! matched case-insensitively: `word`, `zipf` / `zipf-value`, `percent_known` /
//! `pknown`, and an optional `syllables` column in either file. The delimiter is
//! a tab unless the header contains no tab, in which case `;` and then `,` are
//! tried. Any Zipf-scaled column is accepted; the loader does not care which
//! corpus it was derived from.

use std::collections::HashMap;
use std::fs::File;
use std::io::{BufRead, BufReader};
use std::path::{Path, PathBuf};

use thiserror::Error;

pub const MIN_ZIPF: f64 = 1.0;
pub const MAX_ZIPF: f64 = 8.0;

/// Familiarity values above this are assumed to be on a 0–100 scale.
const PERCENT_SCALE_THRESHOLD: f64 = 1.5;

#[derive(Debug, Error)]
pub enum LexiconError {
    #[error("lexicon file not found: {0}")]
    FileNotFound(PathBuf),
    #[error("failed to read {source_name}: {err}")]
    Io {
        source_name: String,
        #[source]
        err: std::io::Error,
    },
    #[error("{source_name}:{line}: {reason}")]
    MalformedRow {
        source_name: String,
        line: usize,
        reason: String,
    },
    #[error("{0}: no valid rows")]
    EmptyLexicon(String),
}

#[derive(Debug, Clone, PartialEq)]
pub struct LexiconEntry {
    pub word: String,
    pub zipf: f64,
    pub percent_known: f64,
    pub syllables: u32,
}

/// Counters collected while loading, mostly useful for `lexicon-check`.
#[derive(Debug, Clone, Default, PartialEq, serde::Serialize)]
pub struct LoadStats {
    pub frequency_rows: usize,
    pub familiarity_rows: usize,
    /// Rows skipped because the word contained whitespace (multi-word entries).
    pub skipped_multiword: usize,
    pub duplicate_words: usize,
    /// Known words that had no familiarity row and received the default.
    pub defaulted_percent_known: usize,
    pub percent_scale_rescaled: bool,
}

/// Immutable merged word-statistics table.
#[derive(Debug, Clone)]
pub struct Lexicon {
    entries: HashMap<String, LexiconEntry>,
    default_percent_known: f64,
    stats: LoadStats,
}

impl Lexicon {
    /// Loads and merges the frequency and familiarity files.
    pub fn load(
        frequency_path: impl AsRef<Path>,
        familiarity_path: impl AsRef<Path>,
    ) -> Result<Self, LexiconError> {
        let freq = open(frequency_path.as_ref())?;
        let fam = open(familiarity_path.as_ref())?;
        Self::from_readers(
            freq,
            &frequency_path.as_ref().display().to_string(),
            fam,
            &familiarity_path.as_ref().display().to_string(),
        )
    }

    pub fn from_readers(
        frequency: impl BufRead,
        frequency_name: &str,
        familiarity: impl BufRead,
        familiarity_name: &str,
    ) -> Result<Self, LexiconError> {
        let mut stats = LoadStats::default();

        let freq_table = Table::read(frequency, frequency_name)?;
        let word_col = freq_table.require(&["word"])?;
        let zipf_col = freq_table.require(&["zipf", "zipf-value", "zipf_value"])?;
        let freq_syl_col = freq_table.find(&["syllables"]);

        let mut entries: HashMap<String, LexiconEntry> = HashMap::new();
        for row in &freq_table.rows {
            stats.frequency_rows += 1;
            let word = match normalize_word(row.field(word_col)) {
                WordCell::Word(w) => w,
                WordCell::MultiWord => {
                    stats.skipped_multiword += 1;
                    continue;
                }
                WordCell::Empty => return Err(freq_table.malformed(row.line, "empty word")),
            };
            let zipf = freq_table.real(row, zipf_col, "zipf")?;
            if !(MIN_ZIPF..=MAX_ZIPF).contains(&zipf) {
                return Err(freq_table.malformed(
                    row.line,
                    &format!("zipf value {zipf} outside [{MIN_ZIPF}, {MAX_ZIPF}]"),
                ));
            }
            let syllables = match freq_syl_col {
                Some(col) => freq_table.syllables(row, col)?,
                None => count_syllables(&word),
            };
            if entries.contains_key(&word) {
                log::warn!("{frequency_name}:{}: duplicate word {word:?}, last row wins", row.line);
                stats.duplicate_words += 1;
            }
            entries.insert(
                word.clone(),
                LexiconEntry {
                    word,
                    zipf,
                    // placeholder until the familiarity list is merged
                    percent_known: f64::NAN,
                    syllables,
                },
            );
        }
        if entries.is_empty() {
            return Err(LexiconError::EmptyLexicon(frequency_name.to_string()));
        }

        let fam_table = Table::read(familiarity, familiarity_name)?;
        let fam_word_col = fam_table.require(&["word"])?;
        let pk_col = fam_table.require(&["percent_known", "pknown", "percent-known"])?;
        let fam_syl_col = fam_table.find(&["syllables"]);

        let mut familiarity: HashMap<String, (f64, Option<u32>)> = HashMap::new();
        for row in &fam_table.rows {
            stats.familiarity_rows += 1;
            let word = match normalize_word(row.field(fam_word_col)) {
                WordCell::Word(w) => w,
                WordCell::MultiWord => {
                    stats.skipped_multiword += 1;
                    continue;
                }
                WordCell::Empty => return Err(fam_table.malformed(row.line, "empty word")),
            };
            let pk = fam_table.real(row, pk_col, "percent_known")?;
            if !(0.0..=100.0).contains(&pk) {
                return Err(fam_table.malformed(
                    row.line,
                    &format!("percent_known value {pk} outside [0, 100]"),
                ));
            }
            let syl = match fam_syl_col {
                Some(col) => Some(fam_table.syllables(row, col)?),
                None => None,
            };
            if familiarity.insert(word.clone(), (pk, syl)).is_some() {
                log::warn!("{familiarity_name}:{}: duplicate word {word:?}, last row wins", row.line);
                stats.duplicate_words += 1;
            }
        }
        if familiarity.is_empty() {
            return Err(LexiconError::EmptyLexicon(familiarity_name.to_string()));
        }

        let max_pk = familiarity.values().map(|(pk, _)| *pk).fold(0.0, f64::max);
        let scale = if max_pk > PERCENT_SCALE_THRESHOLD {
            stats.percent_scale_rescaled = true;
            100.0
        } else {
            1.0
        };
        for (pk, _) in familiarity.values_mut() {
            *pk /= scale;
            if *pk > 1.0 {
                // a mixed-scale file: values in (1, 1.5] cannot be fractions
                return Err(LexiconError::MalformedRow {
                    source_name: familiarity_name.to_string(),
                    line: 0,
                    reason: format!("percent_known value {pk} above 1 after scale detection"),
                });
            }
        }

        // Mean over the familiarity rows that match a known word; falls back to
        // the whole familiarity list when the two lists do not overlap at all.
        let matched: Vec<f64> = sorted_values(
            entries
                .keys()
                .filter_map(|w| familiarity.get(w).map(|(pk, _)| *pk)),
        );
        let default_percent_known = if matched.is_empty() {
            mean(&sorted_values(familiarity.values().map(|(pk, _)| *pk)))
        } else {
            mean(&matched)
        };

        for entry in entries.values_mut() {
            match familiarity.get(&entry.word) {
                Some((pk, syl)) => {
                    entry.percent_known = *pk;
                    if let (None, Some(s)) = (freq_syl_col, syl) {
                        entry.syllables = *s;
                    }
                }
                None => {
                    entry.percent_known = default_percent_known;
                    stats.defaulted_percent_known += 1;
                }
            }
        }

        Ok(Self {
            entries,
            default_percent_known,
            stats,
        })
    }

    /// Builds a lexicon directly from entries. The default familiarity is the
    /// mean of the supplied values. Entries are normalised (lowercased word)
    /// but not otherwise validated.
    pub fn from_entries(entries: impl IntoIterator<Item = LexiconEntry>) -> Self {
        let entries: HashMap<String, LexiconEntry> = entries
            .into_iter()
            .map(|mut e| {
                e.word = e.word.to_lowercase();
                (e.word.clone(), e)
            })
            .collect();
        let default_percent_known = if entries.is_empty() {
            0.0
        } else {
            mean(&sorted_values(entries.values().map(|e| e.percent_known)))
        };
        Self {
            entries,
            default_percent_known,
            stats: LoadStats::default(),
        }
    }

    /// Case-insensitive exact lookup.
    pub fn lookup(&self, token: &str) -> Option<&LexiconEntry> {
        if token.chars().any(char::is_uppercase) {
            self.entries.get(&token.to_lowercase())
        } else {
            self.entries.get(token)
        }
    }

    pub fn contains(&self, token: &str) -> bool {
        self.lookup(token).is_some()
    }

    /// Zipf value of a token, or 0 for words outside the known set.
    pub fn zipf_or_zero(&self, token: &str) -> f64 {
        self.lookup(token).map_or(0.0, |e| e.zipf)
    }

    pub fn default_percent_known(&self) -> f64 {
        self.default_percent_known
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn words(&self) -> impl Iterator<Item = &str> {
        self.entries.keys().map(String::as_str)
    }

    pub fn entries(&self) -> impl Iterator<Item = &LexiconEntry> {
        self.entries.values()
    }

    pub fn stats(&self) -> &LoadStats {
        &self.stats
    }
}

/// Vowel-group syllable estimate.
///
/// Counts maximal runs of `a e i o u y`, drops a final silent `e` (a lone
/// trailing `e` after a consonant other than `l`), and never returns less
/// than 1. Non-alphabetic characters are ignored.
pub fn count_syllables(word: &str) -> u32 {
    let letters: Vec<char> = word
        .chars()
        .filter(|c| c.is_alphabetic())
        .flat_map(char::to_lowercase)
        .collect();
    if letters.is_empty() {
        return 1;
    }
    let is_vowel = |c: char| matches!(c, 'a' | 'e' | 'i' | 'o' | 'u' | 'y');

    let mut groups = 0u32;
    let mut prev_vowel = false;
    for &c in &letters {
        let v = is_vowel(c);
        if v && !prev_vowel {
            groups += 1;
        }
        prev_vowel = v;
    }

    let n = letters.len();
    if n >= 2 && letters[n - 1] == 'e' {
        let before = letters[n - 2];
        if !is_vowel(before) && before != 'l' {
            groups = groups.saturating_sub(1);
        }
    }
    groups.max(1)
}

fn open(path: &Path) -> Result<BufReader<File>, LexiconError> {
    match File::open(path) {
        Ok(f) => Ok(BufReader::new(f)),
        Err(e) if e.kind() == std::io::ErrorKind::NotFound => {
            Err(LexiconError::FileNotFound(path.to_path_buf()))
        }
        Err(err) => Err(LexiconError::Io {
            source_name: path.display().to_string(),
            err,
        }),
    }
}

enum WordCell {
    Word(String),
    MultiWord,
    Empty,
}

fn normalize_word(raw: &str) -> WordCell {
    let w = raw.trim();
    if w.is_empty() {
        WordCell::Empty
    } else if w.chars().any(char::is_whitespace) {
        WordCell::MultiWord
    } else {
        WordCell::Word(w.to_lowercase())
    }
}

fn sorted_values(values: impl Iterator<Item = f64>) -> Vec<f64> {
    let mut v: Vec<f64> = values.collect();
    v.sort_by(f64::total_cmp);
    v
}

/// Mean of a sorted slice; sorting first makes the result independent of
/// row order down to the last bit.
fn mean(values: &[f64]) -> f64 {
    values.iter().sum::<f64>() / values.len() as f64
}

struct Row {
    line: usize,
    fields: Vec<String>,
}

impl Row {
    fn field(&self, col: usize) -> &str {
        self.fields.get(col).map_or("", String::as_str)
    }
}

struct Table {
    name: String,
    header: Vec<String>,
    rows: Vec<Row>,
}

impl Table {
    fn read(reader: impl BufRead, name: &str) -> Result<Self, LexiconError> {
        let mut lines = reader.lines().enumerate();
        let io_err = |err| LexiconError::Io {
            source_name: name.to_string(),
            err,
        };
        let header_line = match lines.next() {
            Some((_, line)) => line.map_err(io_err)?,
            None => return Err(LexiconError::EmptyLexicon(name.to_string())),
        };
        let header_line = header_line.trim_start_matches('\u{feff}');
        let delimiter = ['\t', ';', ',']
            .into_iter()
            .find(|d| header_line.contains(*d))
            .unwrap_or('\t');
        let header = header_line
            .split(delimiter)
            .map(|h| h.trim().to_lowercase())
            .collect();

        let mut rows = Vec::new();
        for (idx, line) in lines {
            let line = line.map_err(io_err)?;
            if line.trim().is_empty() {
                continue;
            }
            rows.push(Row {
                line: idx + 1,
                fields: line.split(delimiter).map(|f| f.trim().to_string()).collect(),
            });
        }
        Ok(Self {
            name: name.to_string(),
            header,
            rows,
        })
    }

    fn find(&self, names: &[&str]) -> Option<usize> {
        self.header.iter().position(|h| names.contains(&h.as_str()))
    }

    fn require(&self, names: &[&str]) -> Result<usize, LexiconError> {
        self.find(names).ok_or_else(|| LexiconError::MalformedRow {
            source_name: self.name.clone(),
            line: 1,
            reason: format!("header has no {} column", names.join("/")),
        })
    }

    fn malformed(&self, line: usize, reason: &str) -> LexiconError {
        LexiconError::MalformedRow {
            source_name: self.name.clone(),
            line,
            reason: reason.to_string(),
        }
    }

    fn real(&self, row: &Row, col: usize, what: &str) -> Result<f64, LexiconError> {
        let raw = row.field(col);
        match raw.parse::<f64>() {
            Ok(v) if v.is_finite() => Ok(v),
            _ => Err(self.malformed(row.line, &format!("invalid {what} value {raw:?}"))),
        }
    }

    fn syllables(&self, row: &Row, col: usize) -> Result<u32, LexiconError> {
        let raw = row.field(col);
        match raw.parse::<u32>() {
            Ok(v) if v >= 1 => Ok(v),
            _ => Err(self.malformed(row.line, &format!("invalid syllable count {raw:?}"))),
        }
    }
}
