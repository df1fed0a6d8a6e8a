//! Lexicon loading shared by the examples.
//!
//! Uses `CESCORE_FREQ_LEXICON` / `CESCORE_FAMILIARITY_LEXICON` when set
//! (see `scripts/fetch-lexicons.sh`), otherwise a tiny bundled demo lexicon
//! whose values are illustrative only.

use std::path::PathBuf;

use cescore::Lexicon;

pub fn load_lexicon() -> Lexicon {
    let data = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("examples/data");
    let freq = std::env::var_os("CESCORE_FREQ_LEXICON")
        .map(PathBuf::from)
        .unwrap_or_else(|| data.join("demo_frequency.tsv"));
    let fam = std::env::var_os("CESCORE_FAMILIARITY_LEXICON")
        .map(PathBuf::from)
        .unwrap_or_else(|| data.join("demo_familiarity.tsv"));
    let lex = Lexicon::load(&freq, &fam).unwrap_or_else(|e| panic!("cannot load lexicon: {e}"));
    eprintln!("lexicon: {} ({} words)", freq.display(), lex.len());
    lex
}
