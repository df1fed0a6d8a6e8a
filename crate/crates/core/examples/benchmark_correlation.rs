//! Run the correlation harness over a small synthetic benchmark and print the
//! report plus a sensitivity table over aggregation mode and splitter.
//!
//! Pass a JSONL dataset path to evaluate real data instead.

#[path = "common/mod.rs"]
mod common;

use cescore::eval::{evaluate, load_dataset, sensitivity_table, Criterion, EvalRecord, Level};
use cescore::Config;

fn synthetic() -> Vec<EvalRecord> {
    let complex = [
        "The famous teacher who was born in a small town near the river wrote a novel that many people read.",
        "The old bridge which was built across the river in the first century is still used by many people.",
        "The president who was elected after the war founded a university in the capital of the country.",
        "The museum which opened in the capital during the war received a famous award for its history.",
    ];
    // (model, human G, M, S, rewrite of each complex sentence)
    let systems: [(&str, f64, f64, f64, fn(&str) -> String); 3] = [
        ("splitter", 4.6, 4.5, 1.2, |c| {
            let (a, b) = c.split_once(" who ").or_else(|| c.split_once(" which ")).unwrap();
            format!("{a}. {}{}", &b[..1].to_uppercase(), &b[1..])
        }),
        ("copier", 5.0, 5.0, 0.0, |c| c.to_string()),
        ("scrambler", 2.4, 3.9, -0.3, |c| {
            let mut w: Vec<&str> = c.trim_end_matches('.').split_whitespace().collect();
            for pair in w.chunks_mut(2) {
                pair.reverse();
            }
            format!("{}.", w.join(" "))
        }),
    ];
    let mut out = Vec::new();
    for (model, g, m, s, rewrite) in systems {
        for (i, c) in complex.iter().enumerate() {
            out.push(EvalRecord {
                model_id: model.into(),
                sentence_id: i.to_string(),
                complex_text: c.to_string(),
                simple_text: rewrite(c),
                human_g: g - 0.1 * i as f64,
                human_m: m - 0.1 * i as f64,
                human_s: s,
                human_overall: None,
            });
        }
    }
    out
}

fn main() {
    let lex = common::load_lexicon();
    let records = match std::env::args().nth(1) {
        Some(path) => load_dataset(path).expect("dataset loads"),
        None => synthetic(),
    };
    let report = evaluate(&records, &lex, &Config::default()).expect("enough records");
    println!("{}", serde_json::to_string_pretty(&report).unwrap());

    println!("\naggregation       splitter  model-level spearman (G)");
    for row in sensitivity_table(&records, &lex, &Config::default()).unwrap() {
        let cell = row.report.cell(Criterion::G, Level::Model).unwrap();
        let rho = cell.spearman.map_or_else(|| cell.error.clone().unwrap_or_default(), |v| format!("{v:.4}"));
        println!("{:<17} {:<9} {rho}", format!("{:?}", row.aggregation), format!("{:?}", row.splitter));
    }
}
