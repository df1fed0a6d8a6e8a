//! Frequency-weighted token overlap: rare words count more than common ones.

#[path = "common/mod.rs"]
mod common;

use cescore::meaning::{m_score, WeightedTokenSets};

fn main() {
    let lex = common::load_lexicon();
    let complex = "The museum which opened in the capital during the war received a famous award.";
    let outputs = [
        "The museum opened in the capital during the war. The museum received a famous award.",
        "The museum opened during the war. It received an award.",
        "It opened. It received something.",
    ];

    for simple in outputs {
        let sets = WeightedTokenSets::new(complex, simple);
        let missing: Vec<_> = sets
            .union
            .iter()
            .filter(|t| !sets.shared.contains(*t))
            .map(|t| format!("{t}({:.2})", WeightedTokenSets::weight(t, &lex)))
            .collect();
        println!("{simple}");
        println!("  M = {:.4}  unshared: {}", m_score(complex, simple, &lex).unwrap(), missing.join(" "));
    }
}
