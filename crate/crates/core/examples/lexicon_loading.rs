//! Load the word statistics and look a few words up.

#[path = "common/mod.rs"]
mod common;

fn main() {
    let lex = common::load_lexicon();
    println!("default percent_known: {:.4}", lex.default_percent_known());
    println!("{:#?}", lex.stats());
    for w in ["The", "river", "championship", "zzqx"] {
        match lex.lookup(w) {
            Some(e) => println!("{w:>14}: zipf={:.3} known={:.2} syllables={}", e.zipf, e.percent_known, e.syllables),
            None => println!("{w:>14}: not in lexicon"),
        }
    }
}
