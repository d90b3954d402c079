//! Tokenization and normalization shared by every stage of the pipeline.
//!
//! Input texts are short romanized ad lines, possibly with Devanagari mixed
//! in. Tokens are split on whitespace and interior hyphens, punctuation is
//! dropped, and the normalized form is case-folded NFC.

use unicode_normalization::char::is_combining_mark;
use unicode_normalization::UnicodeNormalization;

/// One word of an input text.
///
/// `surface` preserves the original spelling (case and apostrophes included);
/// `norm` is the lowercased, NFC, punctuation-free form used for every
/// dictionary and model lookup. `index` is the 0-based position within the
/// tokenized sentence.
#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize)]
pub struct Token {
    pub surface: String,
    pub norm: String,
    pub index: usize,
}

/// Characters that survive inside a token: letters, digits and combining
/// marks (Devanagari matras and the virama are combining marks).
fn is_word_char(c: char) -> bool {
    c.is_alphanumeric() || is_combining_mark(c)
}

fn is_apostrophe(c: char) -> bool {
    matches!(c, '\'' | '\u{2019}' | '\u{02BC}')
}

fn is_hyphen(c: char) -> bool {
    matches!(
        c,
        '-' | '\u{2010}' | '\u{2011}' | '\u{2012}' | '\u{2013}' | '\u{2014}'
    )
}

/// Splits `text` into [`Token`]s.
///
/// Rules: split on Unicode whitespace, then on interior hyphens; strip
/// leading/trailing non-word characters; drop apostrophes ("can't" becomes
/// "cant"); pieces with no word characters left are dropped entirely.
/// Digits-only tokens are kept. Empty or punctuation-only input yields an
/// empty vector.
pub fn tokenize(text: &str) -> Vec<Token> {
    let mut tokens = Vec::new();
    for chunk in text.split_whitespace() {
        for piece in chunk.split(is_hyphen) {
            let trimmed = piece
                .trim_start_matches(|c| !is_word_char(c))
                .trim_end_matches(|c| !is_word_char(c));
            let norm: String = trimmed
                .chars()
                .filter(|&c| is_word_char(c))
                .collect::<String>()
                .to_lowercase()
                .nfc()
                .collect();
            if norm.is_empty() {
                continue;
            }
            let surface: String = trimmed
                .chars()
                .filter(|&c| is_word_char(c) || is_apostrophe(c))
                .collect();
            let index = tokens.len();
            tokens.push(Token {
                surface,
                norm,
                index,
            });
        }
    }
    tokens
}

/// NFC-normalizes a Devanagari string, trims whitespace and strips the danda
/// (`।`), double danda and any other punctuation.
pub fn normalize_devanagari(s: &str) -> String {
    s.trim()
        .chars()
        .filter(|&c| is_word_char(c) || c.is_whitespace())
        .collect::<String>()
        .trim()
        .nfc()
        .collect()
}

/// True if the string contains at least one Devanagari code point.
pub fn contains_devanagari(s: &str) -> bool {
    s.chars().any(is_devanagari)
}

/// True if the string contains at least one Latin letter.
pub fn contains_latin(s: &str) -> bool {
    s.chars().any(|c| c.is_ascii_alphabetic())
}

pub(crate) fn is_devanagari(c: char) -> bool {
    ('\u{0900}'..='\u{097F}').contains(&c)
}
