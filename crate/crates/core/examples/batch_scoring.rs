//! Score many pairs in parallel; results keep input order and failures stay
//! per-record.

#[path = "common/mod.rs"]
mod common;

use cescore::scorer::PairRecord;
use cescore::{Config, Scorer};

fn main() {
    let lex = common::load_lexicon();
    let scorer = Scorer::new(&lex, Config::default()).unwrap();
    let complex = "The president who was elected after the war founded a university in the capital.";
    let records: Vec<PairRecord> = [
        "The president was elected after the war. He founded a university in the capital.",
        "The president founded a university.",
        "",
        "The president who was elected after the war founded a university in the capital.",
    ]
    .iter()
    .enumerate()
    .map(|(i, s)| PairRecord {
        id: serde_json::json!(format!("r{i}")),
        complex: complex.into(),
        simple: s.to_string(),
    })
    .collect();

    for (rec, res) in records.iter().zip(scorer.score_batch(&records, Some(2))) {
        match res {
            Ok(b) => println!("{}: S={:.3} M={:.3} G={:.3} CE={:.3}", rec.id, b.s_score, b.m_score, b.g_score, b.ce_score),
            Err(e) => println!("{}: error {}", rec.id, e.kind()),
        }
    }
}
