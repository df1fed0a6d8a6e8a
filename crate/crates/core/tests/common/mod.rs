//! Deterministic fuzz inputs and brute-force oracles shared by the
//! integration suites. Nothing here calls into the grammar or correlation
//! code it is used to check.

#![allow(dead_code)]

use cescore::{count_syllables, Lexicon, LexiconEntry};
use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub use rand::SeedableRng;
pub type TestRng = ChaCha8Rng;

const ONSETS: &[&str] = &["b", "d", "f", "g", "k", "l", "m", "n", "p", "r", "s", "t", "v", "br", "st", "pl", "tr", "sh"];
const VOWELS: &[&str] = &["a", "e", "i", "o", "u", "ai", "ou", "ee"];
const CODAS: &[&str] = &["", "", "n", "t", "r", "s", "ck", "nd"];

pub fn rng(seed: u64) -> TestRng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// `count` distinct pronounceable lowercase words.
pub fn vocabulary(rng: &mut TestRng, count: usize) -> Vec<String> {
    let mut words = std::collections::BTreeSet::new();
    while words.len() < count {
        let syllables = rng.gen_range(1..=3);
        let w: String = (0..syllables)
            .map(|_| {
                format!(
                    "{}{}{}",
                    ONSETS.choose(rng).unwrap(),
                    VOWELS.choose(rng).unwrap(),
                    CODAS.choose(rng).unwrap()
                )
            })
            .collect();
        words.insert(w);
    }
    let mut v: Vec<String> = words.into_iter().collect();
    v.shuffle(rng);
    v
}

pub fn synthetic_lexicon(rng: &mut TestRng, words: &[String]) -> Lexicon {
    Lexicon::from_entries(words.iter().map(|w| LexiconEntry {
        word: w.clone(),
        zipf: rng.gen_range(1.0..8.0),
        percent_known: rng.gen_range(0.5..=1.0),
        syllables: count_syllables(w),
    }))
}

pub struct Fuzzer {
    pub rng: TestRng,
    pub vocab: Vec<String>,
    pub lexicon: Lexicon,
}

impl Fuzzer {
    pub fn new(seed: u64, vocab_size: usize) -> Self {
        let mut rng = rng(seed);
        let vocab = vocabulary(&mut rng, vocab_size);
        let lexicon = synthetic_lexicon(&mut rng, &vocab);
        Self { rng, vocab, lexicon }
    }

    pub fn word(&mut self) -> String {
        if self.rng.gen_bool(0.08) {
            // out-of-lexicon token
            format!("qz{}x", self.rng.gen_range(0..50))
        } else {
            self.vocab.choose(&mut self.rng).unwrap().clone()
        }
    }

    pub fn sentence(&mut self, min: usize, max: usize) -> String {
        let n = self.rng.gen_range(min..=max);
        let mut words: Vec<String> = (0..n).map(|_| self.word()).collect();
        if let Some(first) = words.first_mut() {
            let mut c = first.chars();
            *first = c.next().unwrap().to_uppercase().chain(c).collect();
        }
        let mut s = String::new();
        for (i, w) in words.iter().enumerate() {
            if i > 0 {
                s.push_str(if self.rng.gen_bool(0.1) { ", " } else { " " });
            }
            s.push_str(w);
        }
        s.push(*['.', '.', '.', '!', '?'].choose(&mut self.rng).unwrap());
        s
    }

    pub fn text(&mut self, max_sentences: usize) -> String {
        let k = self.rng.gen_range(1..=max_sentences);
        (0..k).map(|_| self.sentence(1, 20)).collect::<Vec<_>>().join(" ")
    }

    /// A pair where the output is sometimes derived from the input.
    pub fn pair(&mut self) -> (String, String) {
        let complex = self.text(2);
        let simple = match self.rng.gen_range(0..3) {
            0 => self.text(3),
            1 => {
                // split the input's words into shorter sentences, with edits
                let words: Vec<String> = complex
                    .split_whitespace()
                    .map(|w| w.trim_matches(|c: char| !c.is_alphanumeric()).to_lowercase())
                    .filter(|w| !w.is_empty())
                    .map(|w| if self.rng.gen_bool(0.15) { self.word() } else { w })
                    .collect();
                let mut out = Vec::new();
                for chunk in words.chunks(self.rng.gen_range(2..=8)) {
                    let mut s = chunk.join(" ");
                    s = s[..1].to_uppercase() + &s[1..];
                    s.push('.');
                    out.push(s);
                }
                out.join(" ")
            }
            _ => complex.clone(),
        };
        (complex, simple)
    }
}

/// Longest order-preserving overlap by trying every subset of `a`'s
/// positions, largest first.
pub fn brute_overlap<T: PartialEq>(a: &[T], b: &[T]) -> usize {
    let n = a.len();
    let mut best = 0;
    for mask in 0u32..(1 << n) {
        let k = mask.count_ones() as usize;
        if k <= best {
            continue;
        }
        let picked: Vec<&T> = (0..n).filter(|i| mask & (1 << i) != 0).map(|i| &a[i]).collect();
        let mut it = b.iter();
        if picked.iter().all(|p| it.any(|x| x == *p)) {
            best = k;
        }
    }
    best
}

pub fn brute_partial<T: PartialEq>(a: &[T], b: &[T]) -> f64 {
    let n = a.len();
    let overlap = brute_overlap(a, b);
    if overlap == n {
        1.0
    } else if overlap + 1 == n {
        (n as f64 - 2.0) / n as f64
    } else {
        0.0
    }
}

/// Best-match-per-candidate semi-match precision, enumerating every window pair.
pub fn brute_semi_match<T: PartialEq>(reference: &[T], candidate: &[T], n: usize) -> f64 {
    let cand_windows = candidate.len() + 1 - n;
    if reference.len() < n {
        return 0.0;
    }
    let mut total = 0.0;
    for i in 0..cand_windows {
        let mut best = 0.0f64;
        for j in 0..=reference.len() - n {
            best = best.max(brute_partial(&reference[j..j + n], &candidate[i..i + n]));
        }
        total += best;
    }
    total / cand_windows as f64
}

/// Computational-formula Pearson coefficient.
pub fn direct_pearson(x: &[f64], y: &[f64]) -> f64 {
    let n = x.len() as f64;
    let sx: f64 = x.iter().sum();
    let sy: f64 = y.iter().sum();
    let sxx: f64 = x.iter().map(|v| v * v).sum();
    let syy: f64 = y.iter().map(|v| v * v).sum();
    let sxy: f64 = x.iter().zip(y).map(|(a, b)| a * b).sum();
    (n * sxy - sx * sy) / ((n * sxx - sx * sx).sqrt() * (n * syy - sy * sy).sqrt())
}

/// Rank by counting: 1 + (#smaller) + (#equal - 1) / 2.
pub fn counting_ranks(v: &[f64]) -> Vec<f64> {
    v.iter()
        .map(|a| {
            let less = v.iter().filter(|b| *b < a).count() as f64;
            let equal = v.iter().filter(|b| *b == a).count() as f64;
            1.0 + less + (equal - 1.0) / 2.0
        })
        .collect()
}

pub fn direct_spearman(x: &[f64], y: &[f64]) -> f64 {
    direct_pearson(&counting_ranks(x), &counting_ranks(y))
}
