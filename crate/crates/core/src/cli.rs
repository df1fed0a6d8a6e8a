//! Command-line front end. The binary is a thin wrapper over [`run`], which
//! takes its streams as arguments so it can be driven from tests.
//!
//! Exit codes: 0 success, 1 usage error, 2 data error.

use std::ffi::OsString;
use std::fs::File;
use std::io::{BufRead, BufReader, BufWriter, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::eval::{evaluate_with, load_dataset, CorrelationReport, EvalError};
use crate::grammar::Aggregation;
use crate::lexicon::Lexicon;
use crate::scorer::{Config, PairRecord, ScoreBundle, Scorer};
use crate::textproc::Splitter;

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_DATA: i32 = 2;

pub const FREQ_ENV: &str = "CESCORE_FREQ_LEXICON";
pub const FAMILIARITY_ENV: &str = "CESCORE_FAMILIARITY_LEXICON";

#[derive(Debug, Parser)]
#[command(name = "cescore", version, about = "Reference-less scoring of split-and-rephrase outputs")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[command(flatten)]
    pub common: CommonArgs,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Score one (complex, simple) pair.
    Score {
        #[arg(long)]
        complex: String,
        #[arg(long)]
        simple: String,
    },
    /// Score line-delimited JSON records of {id, complex, simple}.
    Batch {
        /// Input file; standard input when omitted.
        #[arg(long)]
        input: Option<PathBuf>,
    },
    /// Correlate scores with human judgments over a benchmark dataset.
    Evaluate {
        dataset: PathBuf,
        /// Write per-criterion (metric, human) pairs as TSV files here.
        #[arg(long)]
        scatter_dir: Option<PathBuf>,
    },
    /// Load the lexicons and print a summary.
    LexiconCheck,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum AggregationArg {
    Max,
    Literal,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SplitterArg {
    Rules,
    None,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Default)]
pub enum Format {
    #[default]
    Json,
    Tsv,
}

#[derive(Debug, Args)]
pub struct CommonArgs {
    #[arg(long, global = true, env = FREQ_ENV)]
    pub freq_lexicon: Option<PathBuf>,
    #[arg(long, global = true, env = FAMILIARITY_ENV)]
    pub familiarity_lexicon: Option<PathBuf>,
    #[arg(long, global = true)]
    pub tau: Option<f64>,
    #[arg(long, global = true)]
    pub omega: Option<f64>,
    #[arg(long, global = true)]
    pub alpha: Option<f64>,
    #[arg(long, global = true)]
    pub beta: Option<f64>,
    #[arg(long, global = true)]
    pub n_min: Option<usize>,
    #[arg(long, global = true)]
    pub n_max: Option<usize>,
    #[arg(long, global = true, value_enum)]
    pub aggregation: Option<AggregationArg>,
    #[arg(long, global = true, value_enum)]
    pub splitter: Option<SplitterArg>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Worker threads for batch and evaluate.
    #[arg(long, global = true)]
    pub jobs: Option<usize>,
    /// Output file; standard output when omitted.
    #[arg(long, global = true)]
    pub output: Option<PathBuf>,
}

impl CommonArgs {
    pub fn config(&self) -> Result<Config, String> {
        let mut cfg = Config::default();
        let s = &mut cfg.simplicity;
        s.tau = self.tau.unwrap_or(s.tau);
        s.omega = self.omega.unwrap_or(s.omega);
        s.alpha = self.alpha.unwrap_or(s.alpha);
        s.beta = self.beta.unwrap_or(s.beta);
        let g = &mut cfg.grammar;
        g.n_min = self.n_min.unwrap_or(g.n_min);
        g.n_max = self.n_max.unwrap_or(g.n_max);
        if let Some(a) = self.aggregation {
            g.aggregation = match a {
                AggregationArg::Max => Aggregation::MaxPerCandidate,
                AggregationArg::Literal => Aggregation::LiteralDoubleSum,
            };
        }
        if let Some(sp) = self.splitter {
            cfg.splitter = match sp {
                SplitterArg::Rules => Splitter::Rules,
                SplitterArg::None => Splitter::None,
            };
        }
        if self.jobs == Some(0) {
            return Err("--jobs must be at least 1".into());
        }
        cfg.validate().map_err(|e| e.to_string())?;
        Ok(cfg)
    }

    fn lexicon_paths(&self) -> Result<(PathBuf, PathBuf), String> {
        let freq = self
            .freq_lexicon
            .clone()
            .ok_or_else(|| format!("missing --freq-lexicon (or {FREQ_ENV})"))?;
        let fam = self
            .familiarity_lexicon
            .clone()
            .ok_or_else(|| format!("missing --familiarity-lexicon (or {FAMILIARITY_ENV})"))?;
        Ok((freq, fam))
    }
}

/// Formats a score bundle as a JSON object with six decimals per field,
/// optionally prefixed by an `id` member.
pub fn bundle_json(id: Option<&serde_json::Value>, b: &ScoreBundle) -> String {
    let prefix = id.map_or(String::new(), |id| format!("\"id\":{id},"));
    format!(
        "{{{prefix}\"s_score\":{:.6},\"m_score\":{:.6},\"g_score\":{:.6},\"ce_score\":{:.6}}}",
        b.s_score, b.m_score, b.g_score, b.ce_score
    )
}

fn error_json(id: Option<&serde_json::Value>, kind: &str, detail: Option<&str>) -> String {
    let mut obj = serde_json::Map::new();
    if let Some(id) = id {
        obj.insert("id".into(), id.clone());
    }
    obj.insert("error".into(), kind.into());
    if let Some(d) = detail {
        obj.insert("detail".into(), d.into());
    }
    serde_json::Value::Object(obj).to_string()
}

const TSV_HEADER: &str = "s_score\tm_score\tg_score\tce_score";

fn bundle_tsv(b: &ScoreBundle) -> String {
    format!(
        "{:.6}\t{:.6}\t{:.6}\t{:.6}",
        b.s_score, b.m_score, b.g_score, b.ce_score
    )
}

struct Outcome {
    code: i32,
}

type Io<'a> = (&'a mut dyn BufRead, &'a mut dyn Write, &'a mut dyn Write);

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(
    args: I,
    stdin: &mut dyn BufRead,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(stdout, "{e}");
                    EXIT_OK
                }
                _ => {
                    let _ = write!(stderr, "{e}");
                    EXIT_USAGE
                }
            };
        }
    };
    let code = match run_cli(&cli, (stdin, stdout, stderr)) {
        Ok(o) => o.code,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            EXIT_DATA
        }
    };
    let _ = stdout.flush();
    code
}

fn usage(stderr: &mut dyn Write, msg: &str) -> Outcome {
    let _ = writeln!(stderr, "error: {msg}");
    let _ = writeln!(stderr, "Usage: cescore [OPTIONS] <COMMAND>; see cescore --help");
    Outcome { code: EXIT_USAGE }
}

fn run_cli(cli: &Cli, (stdin, stdout, stderr): Io<'_>) -> std::io::Result<Outcome> {
    let cfg = match cli.common.config() {
        Ok(c) => c,
        Err(msg) => return Ok(usage(stderr, &msg)),
    };
    let (freq, fam) = match cli.common.lexicon_paths() {
        Ok(p) => p,
        Err(msg) => return Ok(usage(stderr, &msg)),
    };

    let mut file_out;
    let out: &mut dyn Write = match &cli.common.output {
        Some(path) => {
            file_out = BufWriter::new(File::create(path)?);
            &mut file_out
        }
        None => stdout,
    };

    let lex = match Lexicon::load(&freq, &fam) {
        Ok(l) => l,
        Err(e) => {
            writeln!(out, "{}", error_json(None, "LexiconUnavailable", Some(&e.to_string())))?;
            writeln!(stderr, "error: {e}")?;
            return Ok(Outcome { code: EXIT_DATA });
        }
    };
    let scorer = Scorer::new(&lex, cfg).expect("validated above");
    let format = cli.common.format;

    let code = match &cli.command {
        Command::Score { complex, simple } => run_score(&scorer, complex, simple, format, out)?,
        Command::Batch { input } => {
            let mut file_in;
            let reader: &mut dyn BufRead = match input {
                Some(path) => match File::open(path) {
                    Ok(f) => {
                        file_in = BufReader::new(f);
                        &mut file_in
                    }
                    Err(e) => {
                        writeln!(stderr, "error: cannot read {}: {e}", path.display())?;
                        return Ok(Outcome { code: EXIT_DATA });
                    }
                },
                None => stdin,
            };
            run_batch(&scorer, reader, format, cli.common.jobs, out, stderr)?
        }
        Command::Evaluate {
            dataset,
            scatter_dir,
        } => run_evaluate(&scorer, dataset, scatter_dir.as_ref(), format, cli.common.jobs, out, stderr)?,
        Command::LexiconCheck => {
            let summary = serde_json::json!({
                "entries": lex.len(),
                "default_percent_known": lex.default_percent_known(),
                "stats": lex.stats(),
            });
            writeln!(out, "{}", serde_json::to_string_pretty(&summary)?)?;
            EXIT_OK
        }
    };
    out.flush()?;
    Ok(Outcome { code })
}

pub fn run_score(
    scorer: &Scorer<'_>,
    complex: &str,
    simple: &str,
    format: Format,
    out: &mut dyn Write,
) -> std::io::Result<i32> {
    match scorer.score(complex, simple) {
        Ok(b) => {
            match format {
                Format::Json => writeln!(out, "{}", bundle_json(None, &b))?,
                Format::Tsv => writeln!(out, "{TSV_HEADER}\n{}", bundle_tsv(&b))?,
            }
            Ok(EXIT_OK)
        }
        Err(e) => {
            writeln!(out, "{}", error_json(None, e.kind(), None))?;
            Ok(EXIT_DATA)
        }
    }
}

enum BatchLine {
    Record(PairRecord),
    Malformed { line: usize, reason: String },
}

pub fn run_batch(
    scorer: &Scorer<'_>,
    input: &mut dyn BufRead,
    format: Format,
    jobs: Option<usize>,
    out: &mut dyn Write,
    stderr: &mut dyn Write,
) -> std::io::Result<i32> {
    let mut lines = Vec::new();
    for (idx, line) in input.lines().enumerate() {
        let line = match line {
            Ok(l) => l,
            Err(e) => {
                writeln!(stderr, "error: cannot read input: {e}")?;
                return Ok(EXIT_DATA);
            }
        };
        if line.trim().is_empty() {
            continue;
        }
        lines.push(match serde_json::from_str::<PairRecord>(&line) {
            Ok(r) => BatchLine::Record(r),
            Err(e) => BatchLine::Malformed {
                line: idx + 1,
                reason: e.to_string(),
            },
        });
    }

    let records: Vec<PairRecord> = lines
        .iter()
        .filter_map(|l| match l {
            BatchLine::Record(r) => Some(r.clone()),
            BatchLine::Malformed { .. } => None,
        })
        .collect();
    let mut results = scorer.score_batch(&records, jobs).into_iter();

    if format == Format::Tsv {
        writeln!(out, "id\t{TSV_HEADER}\terror")?;
    }
    let (mut ok, mut failed) = (0usize, 0usize);
    let mut records = records.iter();
    for line in &lines {
        match line {
            BatchLine::Malformed { line, reason } => {
                failed += 1;
                match format {
                    Format::Json => {
                        let detail = format!("line {line}: {reason}");
                        writeln!(out, "{}", error_json(Some(&serde_json::Value::Null), "MalformedRecord", Some(&detail)))?
                    }
                    Format::Tsv => writeln!(out, "\t\t\t\t\tMalformedRecord")?,
                }
            }
            BatchLine::Record(_) => {
                let rec = records.next().expect("one result per record");
                let res = results.next().expect("one result per record");
                match (&res, format) {
                    (Ok(b), Format::Json) => writeln!(out, "{}", bundle_json(Some(&rec.id), b))?,
                    (Ok(b), Format::Tsv) => writeln!(out, "{}\t{}\t", tsv_id(&rec.id), bundle_tsv(b))?,
                    (Err(e), Format::Json) => writeln!(out, "{}", error_json(Some(&rec.id), e.kind(), None))?,
                    (Err(e), Format::Tsv) => writeln!(out, "{}\t\t\t\t\t{}", tsv_id(&rec.id), e.kind())?,
                }
                if res.is_ok() {
                    ok += 1;
                } else {
                    failed += 1;
                }
            }
        }
    }
    writeln!(stderr, "scored {ok}, failed {failed}")?;
    Ok(EXIT_OK)
}

fn tsv_id(id: &serde_json::Value) -> String {
    match id {
        serde_json::Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

pub fn report_tsv(report: &CorrelationReport) -> String {
    let fmt = |v: Option<f64>| v.map_or(String::new(), |x| format!("{x:.6}"));
    let mut s = String::from("criterion\tlevel\tn\tpearson\tp_value_pearson\tspearman\tp_value_spearman\terror\n");
    for c in &report.cells {
        s.push_str(&format!(
            "{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\n",
            c.criterion.name(),
            c.level.name(),
            c.n,
            fmt(c.pearson),
            fmt(c.p_value_pearson),
            fmt(c.spearman),
            fmt(c.p_value_spearman),
            c.error.as_deref().unwrap_or("")
        ));
    }
    s
}

pub fn run_evaluate(
    scorer: &Scorer<'_>,
    dataset: &PathBuf,
    scatter_dir: Option<&PathBuf>,
    format: Format,
    jobs: Option<usize>,
    out: &mut dyn Write,
    stderr: &mut dyn Write,
) -> std::io::Result<i32> {
    let data_error = |out: &mut dyn Write, stderr: &mut dyn Write, e: EvalError| -> std::io::Result<i32> {
        writeln!(out, "{}", error_json(None, e.kind(), Some(&e.to_string())))?;
        writeln!(stderr, "error: {e}")?;
        Ok(EXIT_DATA)
    };
    let records = match load_dataset(dataset) {
        Ok(r) => r,
        Err(e) => return data_error(out, stderr, e),
    };
    let evaluation = match evaluate_with(&records, scorer.lexicon(), scorer.config(), jobs) {
        Ok(ev) => ev,
        Err(e) => return data_error(out, stderr, e),
    };
    match format {
        Format::Json => writeln!(out, "{}", serde_json::to_string_pretty(&evaluation.report)?)?,
        Format::Tsv => write!(out, "{}", report_tsv(&evaluation.report))?,
    }
    if let Some(dir) = scatter_dir {
        evaluation.write_scatter_dir(dir)?;
    }
    if !evaluation.report.failed.is_empty() {
        writeln!(stderr, "{} record(s) could not be scored", evaluation.report.failed.len())?;
    }
    Ok(EXIT_OK)
}
