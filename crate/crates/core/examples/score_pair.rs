//! Score one complex sentence against a split-and-rephrase output.
//!
//! ```bash
//! cargo run -p cescore --example score_pair
//! cargo run -p cescore --example score_pair -- "Complex text." "Simple text. Another one."
//! ```

#[path = "common/mod.rs"]
mod common;

use cescore::{ce_score, Config};

fn main() {
    let lex = common::load_lexicon();
    let mut args = std::env::args().skip(1);
    let complex = args.next().unwrap_or_else(|| {
        "The famous teacher who was born in a small town near the river wrote a novel that many people read.".into()
    });
    let simple = args.next().unwrap_or_else(|| {
        "The famous teacher was born in a small town near the river. The famous teacher wrote a novel that many people read.".into()
    });

    let scores = ce_score(&complex, &simple, &lex, &Config::default()).expect("both texts have tokens");
    println!("complex: {complex}");
    println!("simple:  {simple}");
    println!("S = {:.4}", scores.s_score);
    println!("M = {:.4}", scores.m_score);
    println!("G = {:.4}", scores.g_score);
    println!("CE = {:.4} ({})", scores.ce_score, if scores.is_acceptable() { "acceptable" } else { "below 0.5" });
}
