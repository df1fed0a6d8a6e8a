//! N-gram semi-matching: full matches, one-token-off partial matches, and
//! how per-sentence scores turn into the grammaticality score.

use cescore::grammar::{partial_match, semi_match, sentence_scores, GrammarConfig};
use cescore::textproc::{tokenize, NGram};
use cescore::to_sentences;

fn main() {
    let a = tokenize("the cat sat on");
    for other in ["the cat sat on", "the cat sat by", "the dog sat by", "on sat cat the"] {
        let b = tokenize(other);
        let v = partial_match(&NGram { items: &a }, &NGram { items: &b }).unwrap();
        println!("d({:?}, {:?}) = {v}", a.join(" "), other);
    }

    let cfg = GrammarConfig::default();
    let complex = "The old bridge which was built across the river in the first century is still used by many people.";
    let reference = tokenize(complex);
    let candidate = tokenize("The old bridge was built across the river in the first century.");
    for n in cfg.n_min..=cfg.n_max {
        println!("semi_match n={n}: {:.4}", semi_match(&reference, &candidate, n, &cfg).unwrap());
    }

    let simple = "The old bridge was built across the river in the first century. Many people still use the bridge. Bridge old.";
    let sentences = to_sentences(simple);
    let scores = sentence_scores(complex, &sentences, &cfg);
    for (s, v) in sentences.iter().zip(&scores.per_sentence) {
        println!("  {v:.4}  {s}");
    }
    println!("G = {:.4} (smallest positive sentence score)", scores.g_score());
}
