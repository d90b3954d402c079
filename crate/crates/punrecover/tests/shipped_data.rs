//! Consistency checks for the files under data/: the shipped artifacts must
//! agree with the code that consumes and regenerates them.

use std::path::{Path, PathBuf};

use punrecover::config::Config;
use punrecover::evaluation::{load_gold, Category};
use punrecover::lexicon::{build_english_lexicon, BuildOptions, Lexicon};
use punrecover::phonetics::{devanagari_to_wx, english_to_wx, CmuDict, PhonemeMap};

fn data_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../../data")
}

#[test]
fn phoneme_map_is_total_and_maps_slam() {
    let pmap = PhonemeMap::load(data_dir().join("phoneme_map/cmu_to_wx.tsv")).unwrap();
    assert_eq!(pmap.len(), 39);
    let dict = CmuDict::load(data_dir().join("cmudict/en_in.dict")).unwrap();
    assert!(dict.len() > 100);

    let slam = english_to_wx("slam", &dict, &pmap).unwrap();
    assert_eq!(slam[0].units, ['s', 'l', 'E', 'm']);
    let good = english_to_wx("good", &dict, &pmap).unwrap();
    assert_eq!(good[0].units, ['g', 'u', 'x']);
    // "the" ships with two pronunciations
    assert_eq!(dict.pronunciations("the").unwrap().len(), 2);
}

#[test]
fn gold_set_covers_both_categories() {
    let gold = load_gold(data_dir().join("gold/paper_examples.jsonl")).unwrap();
    assert_eq!(gold.len(), 10);
    assert!(gold.iter().any(|g| g.category == Category::IntraWord));
    assert!(gold.iter().any(|g| g.category == Category::IntraSentential));
    // every Devanagari gold target converts to WX
    for record in &gold {
        for target in &record.targets {
            if punrecover::text::contains_devanagari(target) {
                devanagari_to_wx(target).unwrap();
            }
        }
    }
}

#[test]
fn config_parses_with_expected_defaults() {
    let config = Config::load(data_dir().join("punrecover.conf")).unwrap();
    assert_eq!(config.context_k, 200);
    assert_eq!(config.top_n, 5);
    assert!(config.paths.english_lexicon.ends_with("lexicon/english_words.txt"));
}

#[test]
fn lexicon_files_load_at_advertised_scale() {
    let lex = Lexicon::load(
        data_dir().join("lexicon/english_words.txt"),
        data_dir().join("lexicon/hindi_roman_devanagari.tsv"),
        data_dir().join("lexicon/named_entities.txt"),
    )
    .unwrap();
    assert!(lex.english_len() >= 5000, "{}", lex.english_len());
    assert!(lex.hindi_len() >= 5000, "{}", lex.hindi_len());
    assert!(lex.ne_len() >= 5);
    // every shipped Devanagari spelling converts to WX
    for roman in ["dil", "doodh", "bail", "salaam", "yun"] {
        for spelling in lex.hindi_spellings(roman).unwrap() {
            devanagari_to_wx(spelling).unwrap();
        }
    }
}

#[test]
fn shipped_wordlist_matches_build_rule() {
    // The committed wordlist is exactly what build_english_lexicon extracts
    // from the committed corpus with default options.
    let corpus = std::fs::read_to_string(data_dir().join("corpora/english.txt")).unwrap();
    let built = build_english_lexicon(corpus.lines(), &BuildOptions::default());
    let shipped: Vec<String> = std::fs::read_to_string(data_dir().join("lexicon/english_words.txt"))
        .unwrap()
        .lines()
        .map(str::to_string)
        .collect();
    let built_words: Vec<String> = built.words.into_iter().collect();
    assert_eq!(built_words.len(), shipped.len());
    assert_eq!(built_words, shipped);
}
