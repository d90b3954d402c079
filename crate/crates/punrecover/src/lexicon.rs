//! Dictionaries and the five-way language tagging of tokens.
//!
//! A [`Lexicon`] holds three resources: an English wordlist, a map from
//! romanized Hindi spellings to their Devanagari forms, and a named-entity
//! list. Tagging is pure dictionary lookup; membership in both language
//! dictionaries yields [`LanguageTag::Ambiguous`].

use std::collections::{BTreeMap, BTreeSet};
use std::fs::File;
use std::io::{BufRead, BufReader};
use std::path::Path;

use crate::error::{Error, Result};
use crate::text::{normalize_devanagari, Token};

/// The five token classes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, serde::Serialize)]
pub enum LanguageTag {
    English,
    Hindi,
    NamedEntity,
    Oov,
    Ambiguous,
}

impl LanguageTag {
    pub fn as_str(self) -> &'static str {
        match self {
            LanguageTag::English => "english",
            LanguageTag::Hindi => "hindi",
            LanguageTag::NamedEntity => "named_entity",
            LanguageTag::Oov => "oov",
            LanguageTag::Ambiguous => "ambiguous",
        }
    }
}

/// A token together with its language tag.
#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize)]
pub struct TaggedToken {
    pub token: Token,
    pub tag: LanguageTag,
}

/// The three dictionaries, immutable once loaded.
#[derive(Debug, Clone, Default)]
pub struct Lexicon {
    english_words: BTreeSet<String>,
    hindi_map: BTreeMap<String, BTreeSet<String>>,
    named_entities: BTreeSet<String>,
    /// Devanagari spelling -> roman keys that map to it.
    hindi_reverse: BTreeMap<String, BTreeSet<String>>,
    /// Vowel-collapsed roman key -> union of spellings, for variant lookups.
    hindi_collapsed: BTreeMap<String, BTreeSet<String>>,
}

/// Collapses doubled vowels so that unstandardized roman spellings of Hindi
/// still hit the dictionary: "aa" -> "a", "ee" -> "i", "oo" -> "u".
pub fn collapse_vowels(s: &str) -> String {
    s.replace("aa", "a").replace("ee", "i").replace("oo", "u")
}

impl Lexicon {
    /// Loads the three dictionary files. Formats: the wordlist and NE list
    /// are one entry per line; the Hindi dictionary is `roman<TAB>devanagari`
    /// per line. Lines starting with `#` are comments everywhere.
    pub fn load(
        english_path: impl AsRef<Path>,
        hindi_path: impl AsRef<Path>,
        ne_path: impl AsRef<Path>,
    ) -> Result<Self> {
        let english_words = read_wordlist(english_path.as_ref())?;
        let named_entities = read_wordlist(ne_path.as_ref())?;
        let mut lex = Lexicon {
            english_words,
            named_entities,
            ..Lexicon::default()
        };

        let path = hindi_path.as_ref();
        let file = File::open(path).map_err(|e| Error::io(path, e))?;
        for (lineno, line) in BufReader::new(file).lines().enumerate() {
            let line = line.map_err(|e| Error::io(path, e))?;
            let trimmed = line.trim();
            if trimmed.is_empty() || trimmed.starts_with('#') {
                continue;
            }
            let (roman, devanagari) = trimmed
                .split_once('\t')
                .ok_or_else(|| Error::parse(path, lineno + 1, "expected `roman<TAB>devanagari`"))?;
            let roman = roman.trim().to_lowercase();
            let devanagari = normalize_devanagari(devanagari);
            if roman.is_empty() || devanagari.is_empty() {
                return Err(Error::parse(path, lineno + 1, "empty field"));
            }
            lex.insert_hindi(roman, devanagari);
        }
        Ok(lex)
    }

    /// Builds a lexicon from in-memory parts; used by tests and small tools.
    pub fn from_parts<E, H, N>(english: E, hindi: H, named_entities: N) -> Self
    where
        E: IntoIterator<Item = String>,
        H: IntoIterator<Item = (String, String)>,
        N: IntoIterator<Item = String>,
    {
        let mut lex = Lexicon {
            english_words: english.into_iter().map(|w| w.to_lowercase()).collect(),
            named_entities: named_entities
                .into_iter()
                .map(|w| w.to_lowercase())
                .collect(),
            ..Lexicon::default()
        };
        for (roman, devanagari) in hindi {
            lex.insert_hindi(roman.to_lowercase(), normalize_devanagari(&devanagari));
        }
        lex
    }

    fn insert_hindi(&mut self, roman: String, devanagari: String) {
        self.hindi_reverse
            .entry(devanagari.clone())
            .or_default()
            .insert(roman.clone());
        self.hindi_collapsed
            .entry(collapse_vowels(&roman))
            .or_default()
            .insert(devanagari.clone());
        self.hindi_map.entry(roman).or_default().insert(devanagari);
    }

    pub fn english_len(&self) -> usize {
        self.english_words.len()
    }

    pub fn hindi_len(&self) -> usize {
        self.hindi_map.len()
    }

    pub fn ne_len(&self) -> usize {
        self.named_entities.len()
    }

    pub fn contains_english(&self, norm: &str) -> bool {
        self.english_words.contains(norm)
    }

    pub fn contains_named_entity(&self, norm: &str) -> bool {
        self.named_entities.contains(norm)
    }

    /// Devanagari spellings for a roman key: exact lookup first, then the
    /// vowel-collapsed variant key.
    pub fn hindi_spellings(&self, norm: &str) -> Option<&BTreeSet<String>> {
        self.hindi_map
            .get(norm)
            .or_else(|| self.hindi_collapsed.get(&collapse_vowels(norm)))
    }

    pub fn contains_hindi(&self, norm: &str) -> bool {
        self.hindi_spellings(norm).is_some()
    }

    /// Roman keys known for a Devanagari spelling (reverse lookup).
    pub fn romanizations(&self, devanagari: &str) -> Option<&BTreeSet<String>> {
        self.hindi_reverse.get(devanagari)
    }

    /// Assigns one of the five tags. Language dictionaries take precedence
    /// over the NE list; `NamedEntity` is assigned only to words found in
    /// neither language dictionary.
    pub fn tag(&self, token: &Token) -> LanguageTag {
        let norm = token.norm.as_str();
        let en = self.contains_english(norm);
        let hi = self.contains_hindi(norm);
        match (en, hi) {
            (true, true) => LanguageTag::Ambiguous,
            (true, false) => LanguageTag::English,
            (false, true) => LanguageTag::Hindi,
            (false, false) => {
                if self.contains_named_entity(norm) {
                    LanguageTag::NamedEntity
                } else {
                    LanguageTag::Oov
                }
            }
        }
    }

    pub fn tag_all(&self, tokens: Vec<Token>) -> Vec<TaggedToken> {
        tokens
            .into_iter()
            .map(|token| {
                let tag = self.tag(&token);
                TaggedToken { token, tag }
            })
            .collect()
    }
}

fn read_wordlist(path: &Path) -> Result<BTreeSet<String>> {
    let file = File::open(path).map_err(|e| Error::io(path, e))?;
    let mut words = BTreeSet::new();
    for line in BufReader::new(file).lines() {
        let line = line.map_err(|e| Error::io(path, e))?;
        let entry = line.trim();
        if entry.is_empty() || entry.starts_with('#') {
            continue;
        }
        words.insert(entry.to_lowercase());
    }
    Ok(words)
}

/// Knobs for [`build_english_lexicon`].
#[derive(Debug, Clone)]
pub struct BuildOptions {
    /// Keep words with corpus count >= this floor.
    pub min_word_count: u64,
    /// A word is a named-entity candidate if it occurs capitalized in at
    /// least this many sentences.
    pub ne_min_sentences: usize,
    /// Count sentence-initial capitalized occurrences toward the NE rule.
    /// Off by default: sentence-initial capitalization says nothing.
    pub ne_count_sentence_initial: bool,
}

impl Default for BuildOptions {
    fn default() -> Self {
        BuildOptions {
            min_word_count: 2,
            ne_min_sentences: 2,
            ne_count_sentence_initial: false,
        }
    }
}

/// Wordlist and NE list extracted from a one-sentence-per-line corpus.
#[derive(Debug, Clone, Default)]
pub struct BuiltLexicon {
    pub words: BTreeSet<String>,
    pub named_entities: BTreeSet<String>,
}

/// Extracts an English wordlist and a named-entity list from a corpus.
///
/// The wordlist is the set of normalized word types with count >=
/// `min_word_count`. The NE heuristic replaces an off-the-shelf recognizer:
/// a type qualifies when it appears capitalized (upper-case first letter on
/// the surface) in at least `ne_min_sentences` distinct sentences, by default
/// only counting non-sentence-initial positions. Words may appear in both
/// lists.
pub fn build_english_lexicon<I, S>(lines: I, opts: &BuildOptions) -> BuiltLexicon
where
    I: IntoIterator<Item = S>,
    S: AsRef<str>,
{
    let mut counts: BTreeMap<String, u64> = BTreeMap::new();
    let mut cap_sentences: BTreeMap<String, usize> = BTreeMap::new();
    for line in lines {
        let tokens = crate::text::tokenize(line.as_ref());
        let mut seen_cap: BTreeSet<String> = BTreeSet::new();
        for token in &tokens {
            *counts.entry(token.norm.clone()).or_insert(0) += 1;
            let capitalized = token
                .surface
                .chars()
                .next()
                .map(|c| c.is_uppercase())
                .unwrap_or(false);
            let positional_ok = token.index > 0 || opts.ne_count_sentence_initial;
            if capitalized && positional_ok {
                seen_cap.insert(token.norm.clone());
            }
        }
        for w in seen_cap {
            *cap_sentences.entry(w).or_insert(0) += 1;
        }
    }

    let words = counts
        .iter()
        .filter(|(_, &c)| c >= opts.min_word_count)
        .map(|(w, _)| w.clone())
        .collect();
    let named_entities = cap_sentences
        .iter()
        .filter(|(_, &n)| n >= opts.ne_min_sentences)
        .map(|(w, _)| w.clone())
        .collect();
    BuiltLexicon {
        words,
        named_entities,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::text::tokenize;

    fn lex() -> Lexicon {
        Lexicon::from_parts(
            ["zeal", "bail", "morning", "grand"].map(String::from),
            [
                ("salaam".to_string(), "सलाम".to_string()),
                ("bail".to_string(), "बैल".to_string()),
                ("doodh".to_string(), "दूध".to_string()),
            ],
            ["vir", "greece"].map(String::from),
        )
    }

    fn tok(norm: &str) -> Token {
        Token {
            surface: norm.to_string(),
            norm: norm.to_string(),
            index: 0,
        }
    }

    #[test]
    fn tag_basic_partition() {
        let lex = lex();
        assert_eq!(lex.tag(&tok("salaam")), LanguageTag::Hindi);
        assert_eq!(lex.tag(&tok("grand")), LanguageTag::English);
        assert_eq!(lex.tag(&tok("bail")), LanguageTag::Ambiguous);
        assert_eq!(lex.tag(&tok("vir")), LanguageTag::NamedEntity);
        assert_eq!(lex.tag(&tok("facebhukh")), LanguageTag::Oov);
    }

    #[test]
    fn ne_loses_to_language_dictionaries() {
        let lex = Lexicon::from_parts(
            ["mark"].map(String::from),
            std::iter::empty(),
            ["mark"].map(String::from),
        );
        assert_eq!(lex.tag(&tok("mark")), LanguageTag::English);
    }

    #[test]
    fn vowel_collapse_variant_lookup() {
        let lex = lex();
        // "dudh" misses exactly but shares a collapsed key with "doodh".
        assert!(lex.contains_hindi("dudh"));
        let spellings = lex.hindi_spellings("dudh").unwrap();
        assert!(spellings.contains("दूध"));
        assert!(!lex.contains_hindi("dudhx"));
    }

    #[test]
    fn reverse_lookup() {
        let lex = lex();
        let roman = lex.romanizations("बैल").unwrap();
        assert!(roman.contains("bail"));
    }

    #[test]
    fn build_wordlist_types() {
        let built = build_english_lexicon(
            ["the cat sat", "the dog"],
            &BuildOptions {
                min_word_count: 1,
                ..BuildOptions::default()
            },
        );
        let words: Vec<_> = built.words.iter().map(String::as_str).collect();
        assert_eq!(words, vec!["cat", "dog", "sat", "the"]);
    }

    #[test]
    fn build_applies_frequency_floor() {
        let built = build_english_lexicon(["the cat sat", "the dog"], &BuildOptions::default());
        assert!(built.words.contains("the"));
        assert!(!built.words.contains("cat"));
    }

    #[test]
    fn build_empty_corpus() {
        let built = build_english_lexicon(std::iter::empty::<&str>(), &BuildOptions::default());
        assert!(built.words.is_empty());
        assert!(built.named_entities.is_empty());
    }

    #[test]
    fn ne_heuristic_default_needs_two_sentences_non_initial() {
        let built = build_english_lexicon(
            [
                "he visited Delhi today",
                "she flew to Delhi again",
                "Mark visited town",
            ],
            &BuildOptions {
                min_word_count: 1,
                ..BuildOptions::default()
            },
        );
        assert!(built.named_entities.contains("delhi"));
        // "Mark" only ever appears sentence-initially.
        assert!(!built.named_entities.contains("mark"));
    }

    #[test]
    fn ne_heuristic_permissive_single_sentence() {
        let built = build_english_lexicon(
            ["Mark visited Delhi"],
            &BuildOptions {
                min_word_count: 1,
                ne_min_sentences: 1,
                ne_count_sentence_initial: true,
            },
        );
        assert!(built.named_entities.contains("mark"));
        assert!(built.named_entities.contains("delhi"));
        assert!(!built.named_entities.contains("visited"));
    }

    #[test]
    fn load_from_files() {
        use std::io::Write;
        let dir = tempfile::tempdir().unwrap();
        let en = dir.path().join("en.txt");
        let hi = dir.path().join("hi.tsv");
        let ne = dir.path().join("ne.txt");
        std::fs::write(&en, "zeal\nZeal\nbail\n").unwrap();
        let mut f = std::fs::File::create(&hi).unwrap();
        writeln!(f, "# comment line").unwrap();
        writeln!(f, "dil\tदिल").unwrap();
        writeln!(f, "dil\tदील").unwrap();
        write!(f, "bail\tबैल").unwrap(); // no trailing newline
        drop(f);
        std::fs::write(&ne, "").unwrap();

        let lex = Lexicon::load(&en, &hi, &ne).unwrap();
        // duplicates merge: "zeal" listed twice is one entry
        assert_eq!(lex.english_len(), 2);
        // repeated roman keys accumulate spellings
        let dil = lex.hindi_spellings("dil").unwrap();
        assert_eq!(dil.len(), 2);
        assert!(dil.contains("दिल"));
        // empty NE file is a valid empty set
        assert_eq!(lex.ne_len(), 0);
        assert!(lex.contains_hindi("bail"));
    }

    #[test]
    fn load_reports_malformed_line_number() {
        let dir = tempfile::tempdir().unwrap();
        let en = dir.path().join("en.txt");
        let hi = dir.path().join("hi.tsv");
        let ne = dir.path().join("ne.txt");
        std::fs::write(&en, "a\n").unwrap();
        std::fs::write(&hi, "dil\tदिल\nno-tab-here\n").unwrap();
        std::fs::write(&ne, "x\n").unwrap();
        let err = Lexicon::load(&en, &hi, &ne).unwrap_err().to_string();
        assert!(err.contains(":2:"), "{err}");
    }

    #[test]
    fn load_missing_file_names_path() {
        let dir = tempfile::tempdir().unwrap();
        let en = dir.path().join("en.txt");
        std::fs::write(&en, "a\n").unwrap();
        let err = Lexicon::load(&en, dir.path().join("absent.tsv"), &en)
            .unwrap_err()
            .to_string();
        assert!(err.contains("absent.tsv"), "{err}");
    }

    #[test]
    fn tag_all_is_total() {
        let lex = lex();
        let tagged = lex.tag_all(tokenize("Grand Salaam aur facebhukh"));
        assert_eq!(tagged.len(), 4);
        for t in &tagged {
            // Every token gets exactly one tag; just touch it.
            let _ = t.tag;
        }
    }
}
