//! Tokenization, sentence splitting and n-gram extraction.
//!
//! A token is a maximal run of letters, digits and internal apostrophes,
//! lowercased. Pieces that carry no letter or digit are dropped.

/// Abbreviations that do not end a sentence when followed by a period.
const ABBREVIATIONS: &[&str] = &[
    "mr", "mrs", "ms", "dr", "st", "jr", "sr", "prof", "rev", "gen", "col", "lt", "sgt", "capt",
    "mt", "ft", "vs", "no", "e.g", "i.e", "etc", "approx", "dept", "inc", "ltd", "co", "corp",
];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Splitter {
    /// Rule-based splitting on terminal punctuation.
    #[default]
    Rules,
    /// The whole text is treated as one sentence.
    None,
}

impl Splitter {
    pub fn split<'a>(&self, text: &'a str) -> Vec<&'a str> {
        match self {
            Splitter::Rules => to_sentences(text),
            Splitter::None => {
                let t = text.trim();
                if t.is_empty() {
                    Vec::new()
                } else {
                    vec![t]
                }
            }
        }
    }
}

/// A text with its tokens and sentences.
#[derive(Debug, Clone, PartialEq)]
pub struct TokenizedText {
    pub raw: String,
    pub tokens: Vec<String>,
    pub sentences: Vec<String>,
}

impl TokenizedText {
    pub fn new(raw: &str) -> Self {
        Self::with_splitter(raw, Splitter::Rules)
    }

    pub fn with_splitter(raw: &str, splitter: Splitter) -> Self {
        Self {
            raw: raw.to_string(),
            tokens: tokenize(raw),
            sentences: splitter.split(raw).into_iter().map(str::to_string).collect(),
        }
    }
}

/// Contiguous window of `n` tokens.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct NGram<'a> {
    pub items: &'a [String],
}

impl NGram<'_> {
    pub fn n(&self) -> usize {
        self.items.len()
    }
}

fn is_apostrophe(c: char) -> bool {
    matches!(c, '\'' | '\u{2019}')
}

fn is_token_char(c: char) -> bool {
    c.is_alphanumeric() || is_apostrophe(c)
}

pub fn tokenize(text: &str) -> Vec<String> {
    text.split(|c: char| !is_token_char(c))
        .filter_map(|piece| {
            let piece = piece.trim_matches(is_apostrophe);
            if !piece.chars().any(char::is_alphanumeric) {
                return None;
            }
            Some(
                piece
                    .chars()
                    .map(|c| if is_apostrophe(c) { '\'' } else { c })
                    .flat_map(char::to_lowercase)
                    .collect(),
            )
        })
        .collect()
}

/// Splits text into sentences.
///
/// A split happens after a run of `.`, `!` or `?` (plus any closing quotes or
/// brackets) when the run is followed by whitespace and then an uppercase
/// letter or digit (opening quotes skipped), or by the end of the text. A
/// period directly after a known abbreviation never splits. Returned slices
/// are trimmed and never empty.
pub fn to_sentences(text: &str) -> Vec<&str> {
    let chars: Vec<(usize, char)> = text.char_indices().collect();
    let mut sentences = Vec::new();
    let mut start = 0usize;
    let mut i = 0usize;

    while i < chars.len() {
        let (_, c) = chars[i];
        if !matches!(c, '.' | '!' | '?') {
            i += 1;
            continue;
        }
        let run_start = i;
        let mut j = i;
        while j < chars.len() && matches!(chars[j].1, '.' | '!' | '?') {
            j += 1;
        }
        while j < chars.len() && is_closing(chars[j].1) {
            j += 1;
        }
        let end_byte = chars.get(j).map_or(text.len(), |(b, _)| *b);

        let splits = if j == chars.len() {
            true
        } else if chars[j].1.is_whitespace() {
            let mut k = j;
            while k < chars.len() && chars[k].1.is_whitespace() {
                k += 1;
            }
            while k < chars.len() && is_opening(chars[k].1) {
                k += 1;
            }
            match chars.get(k) {
                None => true,
                Some((_, next)) => next.is_uppercase() || next.is_ascii_digit(),
            }
        } else {
            false
        };

        let abbreviation = chars[run_start].1 == '.'
            && j - run_start == 1 + count_closing(&chars[run_start + 1..j])
            && preceded_by_abbreviation(text, chars[run_start].0);

        if splits && !abbreviation {
            push_trimmed(&mut sentences, &text[start..end_byte]);
            start = end_byte;
        }
        i = j.max(i + 1);
    }
    push_trimmed(&mut sentences, &text[start..]);
    sentences
}

fn count_closing(chars: &[(usize, char)]) -> usize {
    chars.iter().filter(|(_, c)| is_closing(*c)).count()
}

fn is_closing(c: char) -> bool {
    matches!(c, '"' | '\'' | ')' | ']' | '}' | '\u{201d}' | '\u{2019}')
}

fn is_opening(c: char) -> bool {
    matches!(c, '"' | '\'' | '(' | '[' | '{' | '\u{201c}' | '\u{2018}')
}

/// Whether the word ending right before byte offset `dot` is an abbreviation.
fn preceded_by_abbreviation(text: &str, dot: usize) -> bool {
    let before = &text[..dot];
    let word_start = before
        .char_indices()
        .rev()
        .find(|(_, c)| !(c.is_alphabetic() || *c == '.'))
        .map_or(0, |(b, c)| b + c.len_utf8());
    let word = before[word_start..].trim_start_matches('.').to_lowercase();
    !word.is_empty() && ABBREVIATIONS.contains(&word.as_str())
}

fn push_trimmed<'a>(out: &mut Vec<&'a str>, piece: &'a str) {
    let piece = piece.trim();
    if !piece.is_empty() {
        out.push(piece);
    }
}

/// All contiguous windows of length `n`, in order, duplicates preserved.
/// Empty when `n` is 0 or longer than the input.
pub fn ngrams(tokens: &[String], n: usize) -> Vec<NGram<'_>> {
    if n == 0 {
        return Vec::new();
    }
    tokens.windows(n).map(|items| NGram { items }).collect()
}
