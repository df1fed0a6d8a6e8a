//! Benchmark harness: correlate scores with human judgments.
//!
//! Correlations are computed at two levels. At sentence level every scored
//! record is one sample. At model level the per-model means of the metric
//! scores are paired with the per-model means of the human ratings (annotator
//! ratings are averaged per record first, then records per model).

use std::collections::{BTreeMap, HashSet};
use std::fs::File;
use std::io::{BufRead, BufReader, Write};
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};
use statrs::distribution::{ContinuousCDF, StudentsT};
use thiserror::Error;

use crate::grammar::Aggregation;
use crate::lexicon::Lexicon;
use crate::scorer::{Config, ScoreBundle, Scorer};
use crate::textproc::Splitter;

pub const G_RANGE: (f64, f64) = (1.0, 5.0);
pub const M_RANGE: (f64, f64) = (1.0, 5.0);
pub const S_RANGE: (f64, f64) = (-2.0, 2.0);

#[derive(Debug, Error)]
pub enum EvalError {
    #[error("dataset not found: {0}")]
    FileNotFound(PathBuf),
    #[error("failed to read dataset: {0}")]
    Io(#[from] std::io::Error),
    #[error("line {line}: {reason}")]
    MalformedRecord { line: usize, reason: String },
    #[error("line {line}: duplicate record ({model_id}, {sentence_id})")]
    DuplicateKey {
        line: usize,
        model_id: String,
        sentence_id: String,
    },
    #[error("rating {value} outside [{lo}, {hi}]")]
    Range { value: f64, lo: f64, hi: f64 },
    #[error("input vector is constant")]
    ConstantVector,
    #[error("vector lengths differ: {0} vs {1}")]
    LengthMismatch(usize, usize),
    #[error("need at least {needed} samples, got {got}")]
    TooFewSamples { needed: usize, got: usize },
    #[error("invalid configuration: {0}")]
    Config(#[from] crate::error::ConfigError),
}

impl EvalError {
    pub fn kind(&self) -> &'static str {
        match self {
            EvalError::FileNotFound(_) => "FileNotFound",
            EvalError::Io(_) => "Io",
            EvalError::MalformedRecord { .. } => "MalformedRecord",
            EvalError::DuplicateKey { .. } => "DuplicateKey",
            EvalError::Range { .. } => "RangeError",
            EvalError::ConstantVector => "ConstantVector",
            EvalError::LengthMismatch(..) => "LengthMismatch",
            EvalError::TooFewSamples { .. } => "TooFewSamples",
            EvalError::Config(_) => "InvalidConfig",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct EvalRecord {
    pub model_id: String,
    pub sentence_id: String,
    pub complex_text: String,
    pub simple_text: String,
    pub human_g: f64,
    pub human_m: f64,
    pub human_s: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub human_overall: Option<f64>,
}

#[derive(Deserialize)]
#[serde(untagged)]
enum Rating {
    Single(f64),
    Annotators(Vec<f64>),
}

#[derive(Deserialize)]
#[serde(untagged)]
enum Key {
    Text(String),
    Number(serde_json::Number),
}

impl Key {
    fn into_string(self) -> String {
        match self {
            Key::Text(s) => s,
            Key::Number(n) => n.to_string(),
        }
    }
}

#[derive(Deserialize)]
struct RawRecord {
    model_id: Key,
    sentence_id: Key,
    complex_text: String,
    simple_text: String,
    human_g: Rating,
    human_m: Rating,
    human_s: Rating,
    #[serde(default)]
    human_overall: Option<Rating>,
}

fn rating(r: Rating, name: &str, range: Option<(f64, f64)>, line: usize) -> Result<f64, EvalError> {
    let values = match r {
        Rating::Single(v) => vec![v],
        Rating::Annotators(v) => v,
    };
    if values.is_empty() {
        return Err(EvalError::MalformedRecord {
            line,
            reason: format!("{name}: empty annotator list"),
        });
    }
    for &v in &values {
        let ok = v.is_finite() && range.map_or(true, |(lo, hi)| (lo..=hi).contains(&v));
        if !ok {
            let reason = match range {
                Some((lo, hi)) => format!("{name} rating {v} outside [{lo}, {hi}]"),
                None => format!("{name} rating {v} is not finite"),
            };
            return Err(EvalError::MalformedRecord { line, reason });
        }
    }
    Ok(values.iter().sum::<f64>() / values.len() as f64)
}

/// Parses line-delimited JSON records. Blank lines are skipped.
pub fn parse_dataset(reader: impl BufRead) -> Result<Vec<EvalRecord>, EvalError> {
    let mut records = Vec::new();
    let mut seen = HashSet::new();
    for (idx, line) in reader.lines().enumerate() {
        let line_no = idx + 1;
        let line = line?;
        if line.trim().is_empty() {
            continue;
        }
        let raw: RawRecord = serde_json::from_str(&line).map_err(|e| EvalError::MalformedRecord {
            line: line_no,
            reason: e.to_string(),
        })?;
        let record = EvalRecord {
            model_id: raw.model_id.into_string(),
            sentence_id: raw.sentence_id.into_string(),
            complex_text: raw.complex_text,
            simple_text: raw.simple_text,
            human_g: rating(raw.human_g, "human_g", Some(G_RANGE), line_no)?,
            human_m: rating(raw.human_m, "human_m", Some(M_RANGE), line_no)?,
            human_s: rating(raw.human_s, "human_s", Some(S_RANGE), line_no)?,
            human_overall: raw
                .human_overall
                .map(|r| rating(r, "human_overall", None, line_no))
                .transpose()?,
        };
        if !seen.insert((record.model_id.clone(), record.sentence_id.clone())) {
            return Err(EvalError::DuplicateKey {
                line: line_no,
                model_id: record.model_id,
                sentence_id: record.sentence_id,
            });
        }
        records.push(record);
    }
    Ok(records)
}

pub fn load_dataset(path: impl AsRef<Path>) -> Result<Vec<EvalRecord>, EvalError> {
    let path = path.as_ref();
    let file = File::open(path).map_err(|e| match e.kind() {
        std::io::ErrorKind::NotFound => EvalError::FileNotFound(path.to_path_buf()),
        _ => EvalError::Io(e),
    })?;
    parse_dataset(BufReader::new(file))
}

fn check_range(value: f64, (lo, hi): (f64, f64)) -> Result<(), EvalError> {
    if value.is_finite() && (lo..=hi).contains(&value) {
        Ok(())
    } else {
        Err(EvalError::Range { value, lo, hi })
    }
}

/// Arithmetic mean of the three human ratings, each mapped onto `[0, 1]`.
pub fn f_avg(g: f64, m: f64, s: f64) -> Result<f64, EvalError> {
    check_range(g, G_RANGE)?;
    check_range(m, M_RANGE)?;
    check_range(s, S_RANGE)?;
    Ok(((g - 1.0) / 4.0 + (m - 1.0) / 4.0 + (s + 2.0) / 4.0) / 3.0)
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Correlation {
    pub coefficient: f64,
    pub p_value: f64,
}

fn check_pair(x: &[f64], y: &[f64]) -> Result<(), EvalError> {
    if x.len() != y.len() {
        return Err(EvalError::LengthMismatch(x.len(), y.len()));
    }
    if x.len() < 3 {
        return Err(EvalError::TooFewSamples {
            needed: 3,
            got: x.len(),
        });
    }
    let constant = |v: &[f64]| v.iter().all(|a| *a == v[0]);
    if constant(x) || constant(y) {
        return Err(EvalError::ConstantVector);
    }
    Ok(())
}

fn pearson_unchecked(x: &[f64], y: &[f64]) -> f64 {
    let n = x.len() as f64;
    let mx = x.iter().sum::<f64>() / n;
    let my = y.iter().sum::<f64>() / n;
    let (mut sxy, mut sxx, mut syy) = (0.0, 0.0, 0.0);
    for (a, b) in x.iter().zip(y) {
        let (dx, dy) = (a - mx, b - my);
        sxy += dx * dy;
        sxx += dx * dx;
        syy += dy * dy;
    }
    (sxy / (sxx.sqrt() * syy.sqrt())).clamp(-1.0, 1.0)
}

/// Two-sided p-value of a correlation coefficient under the t approximation.
pub fn t_test_p_value(r: f64, n: usize) -> f64 {
    let df = (n - 2) as f64;
    if r.abs() >= 1.0 {
        return 0.0;
    }
    let t = r * (df / (1.0 - r * r)).sqrt();
    let dist = StudentsT::new(0.0, 1.0, df).expect("df > 0");
    (2.0 * dist.sf(t.abs())).min(1.0)
}

pub fn pearson(x: &[f64], y: &[f64]) -> Result<Correlation, EvalError> {
    check_pair(x, y)?;
    let r = pearson_unchecked(x, y);
    Ok(Correlation {
        coefficient: r,
        p_value: t_test_p_value(r, x.len()),
    })
}

/// 1-based ranks; tied values share the mean of their positions.
pub fn average_ranks(values: &[f64]) -> Vec<f64> {
    let mut order: Vec<usize> = (0..values.len()).collect();
    order.sort_by(|&a, &b| values[a].total_cmp(&values[b]));
    let mut ranks = vec![0.0; values.len()];
    let mut i = 0;
    while i < order.len() {
        let mut j = i;
        while j + 1 < order.len() && values[order[j + 1]] == values[order[i]] {
            j += 1;
        }
        let rank = (i + j) as f64 / 2.0 + 1.0;
        for &k in &order[i..=j] {
            ranks[k] = rank;
        }
        i = j + 1;
    }
    ranks
}

pub fn spearman(x: &[f64], y: &[f64]) -> Result<Correlation, EvalError> {
    check_pair(x, y)?;
    let r = pearson_unchecked(&average_ranks(x), &average_ranks(y));
    Ok(Correlation {
        coefficient: r,
        p_value: t_test_p_value(r, x.len()),
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Criterion {
    /// Simplicity score vs human simplicity.
    S,
    /// Grammaticality score vs human grammaticality.
    G,
    /// Meaning score vs human meaning preservation.
    M,
    /// Overall score vs the normalized mean of the three human ratings.
    OverallAvg,
    /// Overall score vs an externally supplied overall rating.
    OverallExternal,
}

impl Criterion {
    pub const ALL: [Criterion; 5] = [
        Criterion::S,
        Criterion::G,
        Criterion::M,
        Criterion::OverallAvg,
        Criterion::OverallExternal,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            Criterion::S => "s",
            Criterion::G => "g",
            Criterion::M => "m",
            Criterion::OverallAvg => "overall_avg",
            Criterion::OverallExternal => "overall_external",
        }
    }

    fn metric(&self, b: &ScoreBundle) -> f64 {
        match self {
            Criterion::S => b.s_score,
            Criterion::G => b.g_score,
            Criterion::M => b.m_score,
            Criterion::OverallAvg | Criterion::OverallExternal => b.ce_score,
        }
    }

    fn human(&self, r: &EvalRecord) -> Option<f64> {
        match self {
            Criterion::S => Some(r.human_s),
            Criterion::G => Some(r.human_g),
            Criterion::M => Some(r.human_m),
            Criterion::OverallAvg => f_avg(r.human_g, r.human_m, r.human_s).ok(),
            Criterion::OverallExternal => r.human_overall,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Level {
    Sentence,
    Model,
}

impl Level {
    pub fn name(&self) -> &'static str {
        match self {
            Level::Sentence => "sentence",
            Level::Model => "model",
        }
    }
}

/// One (criterion, level) cell. Coefficient fields are absent and `error`
/// is set when the correlation is undefined.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CorrelationCell {
    pub criterion: Criterion,
    pub level: Level,
    pub n: usize,
    pub pearson: Option<f64>,
    pub spearman: Option<f64>,
    pub p_value_pearson: Option<f64>,
    pub p_value_spearman: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

impl CorrelationCell {
    fn compute(criterion: Criterion, level: Level, x: &[f64], y: &[f64]) -> Self {
        let mut cell = Self {
            criterion,
            level,
            n: x.len(),
            pearson: None,
            spearman: None,
            p_value_pearson: None,
            p_value_spearman: None,
            error: None,
        };
        match (pearson(x, y), spearman(x, y)) {
            (Ok(p), Ok(s)) => {
                cell.pearson = Some(p.coefficient);
                cell.p_value_pearson = Some(p.p_value);
                cell.spearman = Some(s.coefficient);
                cell.p_value_spearman = Some(s.p_value);
            }
            (Err(e), _) | (_, Err(e)) => cell.error = Some(e.kind().to_string()),
        }
        cell
    }

    pub fn is_defined(&self) -> bool {
        self.error.is_none()
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct FailedRecord {
    pub model_id: String,
    pub sentence_id: String,
    pub error: String,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CorrelationReport {
    pub records_total: usize,
    pub records_scored: usize,
    pub models: usize,
    pub failed: Vec<FailedRecord>,
    pub cells: Vec<CorrelationCell>,
}

impl CorrelationReport {
    pub fn cell(&self, criterion: Criterion, level: Level) -> Option<&CorrelationCell> {
        self.cells
            .iter()
            .find(|c| c.criterion == criterion && c.level == level)
    }
}

/// Paired (metric, human) samples behind one report cell.
#[derive(Debug, Clone, PartialEq)]
pub struct ScatterSeries {
    pub criterion: Criterion,
    pub level: Level,
    pub labels: Vec<String>,
    pub metric: Vec<f64>,
    pub human: Vec<f64>,
}

impl ScatterSeries {
    pub fn file_name(&self) -> String {
        format!("{}_{}.tsv", self.criterion.name(), self.level.name())
    }

    pub fn write_tsv(&self, mut out: impl Write) -> std::io::Result<()> {
        writeln!(out, "label\tmetric\thuman")?;
        for ((l, m), h) in self.labels.iter().zip(&self.metric).zip(&self.human) {
            writeln!(out, "{l}\t{m}\t{h}")?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Evaluation {
    pub report: CorrelationReport,
    pub series: Vec<ScatterSeries>,
}

impl Evaluation {
    pub fn write_scatter_dir(&self, dir: impl AsRef<Path>) -> std::io::Result<()> {
        std::fs::create_dir_all(dir.as_ref())?;
        for s in &self.series {
            let f = File::create(dir.as_ref().join(s.file_name()))?;
            let mut w = std::io::BufWriter::new(f);
            s.write_tsv(&mut w)?;
            w.flush()?;
        }
        Ok(())
    }
}

pub fn evaluate(
    dataset: &[EvalRecord],
    lex: &Lexicon,
    cfg: &Config,
) -> Result<CorrelationReport, EvalError> {
    evaluate_with(dataset, lex, cfg, None).map(|e| e.report)
}

/// Scores the dataset and computes every report cell, keeping the paired
/// samples for plotting. Records are processed in (model, sentence) order,
/// so the result does not depend on input order.
pub fn evaluate_with(
    dataset: &[EvalRecord],
    lex: &Lexicon,
    cfg: &Config,
    jobs: Option<usize>,
) -> Result<Evaluation, EvalError> {
    if dataset.len() < 3 {
        return Err(EvalError::TooFewSamples {
            needed: 3,
            got: dataset.len(),
        });
    }
    let scorer = Scorer::new(lex, *cfg)?;
    let mut records: Vec<&EvalRecord> = dataset.iter().collect();
    records.sort_by(|a, b| (&a.model_id, &a.sentence_id).cmp(&(&b.model_id, &b.sentence_id)));

    let pairs: Vec<(&str, &str)> = records
        .iter()
        .map(|r| (r.complex_text.as_str(), r.simple_text.as_str()))
        .collect();
    let results = scorer.score_batch(&pairs, jobs);

    let mut scored: Vec<(&EvalRecord, ScoreBundle)> = Vec::new();
    let mut failed = Vec::new();
    for (r, res) in records.iter().zip(results) {
        match res {
            Ok(b) => scored.push((r, b)),
            Err(e) => failed.push(FailedRecord {
                model_id: r.model_id.clone(),
                sentence_id: r.sentence_id.clone(),
                error: e.kind().to_string(),
            }),
        }
    }
    let models: BTreeMap<&str, Vec<usize>> =
        scored
            .iter()
            .enumerate()
            .fold(BTreeMap::new(), |mut acc, (i, (r, _))| {
                acc.entry(r.model_id.as_str()).or_default().push(i);
                acc
            });

    let mut cells = Vec::new();
    let mut series = Vec::new();
    for criterion in Criterion::ALL {
        let samples: Vec<(usize, f64, f64)> = scored
            .iter()
            .enumerate()
            .filter_map(|(i, (r, b))| criterion.human(r).map(|h| (i, criterion.metric(b), h)))
            .collect();
        if criterion == Criterion::OverallExternal && samples.is_empty() {
            continue;
        }

        let sentence = ScatterSeries {
            criterion,
            level: Level::Sentence,
            labels: samples
                .iter()
                .map(|(i, _, _)| format!("{}/{}", scored[*i].0.model_id, scored[*i].0.sentence_id))
                .collect(),
            metric: samples.iter().map(|s| s.1).collect(),
            human: samples.iter().map(|s| s.2).collect(),
        };

        let mut model = ScatterSeries {
            criterion,
            level: Level::Model,
            labels: Vec::new(),
            metric: Vec::new(),
            human: Vec::new(),
        };
        for (id, idxs) in &models {
            let mine: Vec<&(usize, f64, f64)> =
                samples.iter().filter(|s| idxs.binary_search(&s.0).is_ok()).collect();
            if mine.is_empty() {
                continue;
            }
            let k = mine.len() as f64;
            model.labels.push(id.to_string());
            model.metric.push(mine.iter().map(|s| s.1).sum::<f64>() / k);
            model.human.push(mine.iter().map(|s| s.2).sum::<f64>() / k);
        }

        for s in [sentence, model] {
            cells.push(CorrelationCell::compute(criterion, s.level, &s.metric, &s.human));
            series.push(s);
        }
    }

    Ok(Evaluation {
        report: CorrelationReport {
            records_total: dataset.len(),
            records_scored: scored.len(),
            models: models.len(),
            failed,
            cells,
        },
        series,
    })
}

/// One row of a sensitivity table: a configuration variant and its report.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SensitivityRow {
    pub aggregation: Aggregation,
    pub splitter: Splitter,
    pub report: CorrelationReport,
}

/// Re-runs the evaluation over every aggregation mode and sentence splitter,
/// keeping the rest of `base` fixed.
pub fn sensitivity_table(
    dataset: &[EvalRecord],
    lex: &Lexicon,
    base: &Config,
) -> Result<Vec<SensitivityRow>, EvalError> {
    let mut rows = Vec::new();
    for aggregation in [Aggregation::MaxPerCandidate, Aggregation::LiteralDoubleSum] {
        for splitter in [Splitter::Rules, Splitter::None] {
            let mut cfg = *base;
            cfg.grammar.aggregation = aggregation;
            cfg.splitter = splitter;
            rows.push(SensitivityRow {
                aggregation,
                splitter,
                report: evaluate(dataset, lex, &cfg)?,
            });
        }
    }
    Ok(rows)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;
    use proptest::prelude::*;

    #[test]
    fn f_avg_examples() {
        assert_eq!(f_avg(5.0, 5.0, 2.0).unwrap(), 1.0);
        assert_eq!(f_avg(1.0, 1.0, -2.0).unwrap(), 0.0);
        assert_abs_diff_eq!(f_avg(3.0, 4.0, 0.0).unwrap(), 0.5833, epsilon = 1e-4);
        assert_abs_diff_eq!(f_avg(3.0, 4.0, 0.0).unwrap(), 1.75 / 3.0, epsilon = 1e-12);
        assert!(matches!(f_avg(6.0, 4.0, 0.0), Err(EvalError::Range { .. })));
        assert!(matches!(f_avg(3.0, 4.0, 2.5), Err(EvalError::Range { .. })));
    }

    #[test]
    fn pearson_examples() {
        assert_abs_diff_eq!(pearson(&[1., 2., 3.], &[2., 4., 6.]).unwrap().coefficient, 1.0, epsilon = 1e-12);
        assert_abs_diff_eq!(pearson(&[1., 2., 3.], &[6., 4., 2.]).unwrap().coefficient, -1.0, epsilon = 1e-12);
        assert_abs_diff_eq!(pearson(&[1., 2., 3., 4.], &[1., 3., 2., 4.]).unwrap().coefficient, 0.8, epsilon = 1e-12);
        assert!(matches!(pearson(&[1., 1., 1.], &[1., 2., 3.]), Err(EvalError::ConstantVector)));
        assert!(matches!(pearson(&[1., 2.], &[1., 2.]), Err(EvalError::TooFewSamples { .. })));
        assert!(matches!(pearson(&[1., 2., 3.], &[1., 2.]), Err(EvalError::LengthMismatch(3, 2))));
    }

    #[test]
    fn p_value_reference() {
        // r = 0.8, n = 4: t = 0.8 * sqrt(2 / 0.36) = 1.8856, df = 2 -> p = 0.2
        let p = pearson(&[1., 2., 3., 4.], &[1., 3., 2., 4.]).unwrap().p_value;
        assert_abs_diff_eq!(p, 0.2, epsilon = 1e-9);
        assert!(pearson(&[1., 2., 3.], &[2., 4., 6.]).unwrap().p_value < 1e-6);
    }

    #[test]
    fn ranks_average_ties() {
        assert_eq!(average_ranks(&[1., 2., 2., 3.]), vec![1.0, 2.5, 2.5, 4.0]);
        assert_eq!(average_ranks(&[3., 1., 3., 3.]), vec![3.0, 1.0, 3.0, 3.0]);
    }

    #[test]
    fn spearman_examples() {
        let x = [1., 2., 3., 4., 5.];
        let y: Vec<f64> = x.iter().map(|v: &f64| v.powi(3) + 2.0).collect();
        assert_abs_diff_eq!(spearman(&x, &y).unwrap().coefficient, 1.0, epsilon = 1e-12);
        let rho = spearman(&x, &[5., 6., 7., 8., 7.]).unwrap().coefficient;
        let expected = pearson(&x, &[1., 2., 3.5, 5., 3.5]).unwrap().coefficient;
        assert_abs_diff_eq!(rho, expected, epsilon = 1e-12);
        // 8 / sqrt(95); the no-ties shortcut 1 - 6*sum(d^2)/(n(n^2-1)) would give 0.825
        assert_abs_diff_eq!(rho, 8.0 / 95f64.sqrt(), epsilon = 1e-12);
    }

    #[test]
    fn parses_records_and_averages_annotators() {
        let data = r#"{"model_id":"a","sentence_id":1,"complex_text":"x","simple_text":"y","human_g":[4,5,5],"human_m":3,"human_s":[0,1,-1]}
{"model_id":"a","sentence_id":"2","complex_text":"x","simple_text":"y","human_g":4,"human_m":3,"human_s":0,"human_overall":0.7}

{"model_id":"b","sentence_id":"1","complex_text":"x","simple_text":"y","human_g":4,"human_m":3,"human_s":0}
"#;
        let recs = parse_dataset(data.as_bytes()).unwrap();
        assert_eq!(recs.len(), 3);
        assert_abs_diff_eq!(recs[0].human_g, 14.0 / 3.0, epsilon = 1e-12);
        assert_eq!(recs[0].sentence_id, "1");
        assert_eq!(recs[0].human_s, 0.0);
        assert_eq!(recs[1].human_overall, Some(0.7));
    }

    #[test]
    fn rejects_bad_records() {
        let bad = r#"{"model_id":"a","sentence_id":"1","complex_text":"x","simple_text":"y","human_g":7,"human_m":3,"human_s":0}"#;
        assert!(matches!(parse_dataset(bad.as_bytes()), Err(EvalError::MalformedRecord { line: 1, .. })));
        let dup = r#"{"model_id":"a","sentence_id":"1","complex_text":"x","simple_text":"y","human_g":4,"human_m":3,"human_s":0}
{"model_id":"a","sentence_id":"1","complex_text":"x","simple_text":"y","human_g":4,"human_m":3,"human_s":0}"#;
        assert!(matches!(parse_dataset(dup.as_bytes()), Err(EvalError::DuplicateKey { line: 2, .. })));
        assert!(matches!(parse_dataset("{not json".as_bytes()), Err(EvalError::MalformedRecord { line: 1, .. })));
        assert!(matches!(load_dataset("/nonexistent.jsonl"), Err(EvalError::FileNotFound(_))));
    }

    fn vec_strategy() -> impl Strategy<Value = (Vec<f64>, Vec<f64>)> {
        (3usize..30).prop_flat_map(|n| {
            (
                proptest::collection::vec(-100.0f64..100.0, n),
                proptest::collection::vec(-100.0f64..100.0, n),
            )
        })
    }

    proptest! {
        #[test]
        fn correlation_symmetry_and_invariance((x, y) in vec_strategy(), a in 0.1f64..10.0, b in -5.0f64..5.0) {
            let p = pearson(&x, &y).unwrap().coefficient;
            prop_assert!((p - pearson(&y, &x).unwrap().coefficient).abs() < 1e-12);
            let xa: Vec<f64> = x.iter().map(|v| a * v + b).collect();
            prop_assert!((p - pearson(&xa, &y).unwrap().coefficient).abs() < 1e-9);
            let s = spearman(&x, &y).unwrap().coefficient;
            prop_assert!((s - spearman(&y, &x).unwrap().coefficient).abs() < 1e-12);
            let xm: Vec<f64> = x.iter().map(|v| v.powi(3) + 7.0).collect();
            prop_assert!((s - spearman(&xm, &y).unwrap().coefficient).abs() < 1e-9);
            prop_assert!(p.abs() <= 1.0 && s.abs() <= 1.0);
        }
    }
}
