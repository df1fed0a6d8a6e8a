//! Show the pieces behind the simplicity score: sentence length score,
//! familiarity and the lexical/structural blend.
//!
//! ```bash
//! cargo run -p cescore --example simplicity_breakdown -- "Some text. More text."
//! ```

#[path = "common/mod.rs"]
mod common;

use cescore::simplicity::{asf, sls, tss};
use cescore::{to_sentences, tokenize, SimplicityConfig};

fn main() {
    let lex = common::load_lexicon();
    let cfg = SimplicityConfig::default();
    let texts: Vec<String> = {
        let args: Vec<String> = std::env::args().skip(1).collect();
        if args.is_empty() {
            vec![
                "the".into(),
                "The city was founded by the river.".into(),
                "The old city, which was founded during the first century near a large river that later became the capital, has a population of two million people.".into(),
                "The old city was founded during the first century. It is near a large river. It later became the capital. Two million people live there.".into(),
            ]
        } else {
            args
        }
    };

    for text in &texts {
        let b = tss(text, &lex, &cfg).expect("text has tokens");
        println!("{text}");
        println!("  tokens={}  sls={:.4}  asf={:.4}", tokenize(text).len(), sls(tokenize(text).len(), &cfg).unwrap(), asf(text, &lex));
        for s in to_sentences(text) {
            let n = tokenize(s).len();
            if n > 0 {
                println!("    [{n:>2} tokens] asf*sls = {:.4}  {s}", asf(s, &lex) * sls(n, &cfg).unwrap());
            }
        }
        println!("  f_lexl={:.4}  f_strc={:.4}  tss={:.4}\n", b.f_lexl, b.f_strc, b.tss);
    }
}
