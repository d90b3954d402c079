//! Small in-memory resources shared by unit tests.

use crate::langmodel::{BigramModel, Language, TrainOptions};
use crate::lexicon::Lexicon;
use crate::phonetics::{CmuDict, PhonemeMap};
use crate::recovery::Resources;

/// The full 39-phoneme map with the same Indian-English choices as the
/// shipped data file.
pub fn full_phoneme_map() -> PhonemeMap {
    PhonemeMap::from_pairs([
        ("AA", "A"),
        ("AE", "E"),
        ("AH", "a"),
        ("AO", "o"),
        ("AW", "a u"),
        ("AY", "a i"),
        ("B", "b"),
        ("CH", "c"),
        ("D", "x"),
        ("DH", "x"),
        ("EH", "e"),
        ("ER", "a r"),
        ("EY", "e"),
        ("F", "P"),
        ("G", "g"),
        ("HH", "h"),
        ("IH", "i"),
        ("IY", "I"),
        ("JH", "j"),
        ("K", "k"),
        ("L", "l"),
        ("M", "m"),
        ("N", "n"),
        ("NG", "M"),
        ("OW", "o"),
        ("OY", "o i"),
        ("P", "p"),
        ("R", "r"),
        ("S", "s"),
        ("SH", "S"),
        ("T", "w"),
        ("TH", "W"),
        ("UH", "u"),
        ("UW", "U"),
        ("V", "v"),
        ("W", "v"),
        ("Y", "y"),
        ("Z", "j"),
        ("ZH", "j"),
    ])
}

pub fn tiny_resources() -> Resources {
    let lexicon = Lexicon::from_parts(
        [
            "grand", "slam", "zeal", "bail", "morning", "good", "won", "the", "he", "title",
            "everyone", "wish", "we", "you", "a", "evening", "with", "worked", "they",
        ]
        .map(String::from),
        [
            ("salaam", "सलाम"),
            ("bail", "बैल"),
            ("doodh", "दूध"),
            ("phir", "फिर"),
            ("bhi", "भी"),
            ("dil", "दिल"),
            ("hai", "है"),
            ("hindustani", "हिंदुस्तानी"),
            ("aa", "आ"),
            ("mujhe", "मुझे"),
            ("maar", "मार"),
            ("ki", "की"),
            ("baat", "बात"),
            ("pyaar", "प्यार"),
        ]
        .map(|(a, b)| (a.to_string(), b.to_string())),
        ["vir", "greece"].map(String::from),
    );
    let opts = TrainOptions {
        discount: 0.75,
        min_count: 1,
    };
    let english_lm = BigramModel::train(
        [
            "he won the grand slam",
            "he won the grand slam",
            "the grand slam title",
            "good morning everyone",
            "good morning everyone",
            "we wish you a good morning",
            "they worked with zeal",
            "he worked with zeal",
            "he was released on bail",
            "she was released on bail",
        ],
        Language::English,
        &opts,
    )
    .unwrap();
    let hindi_lm = BigramModel::train(
        [
            "फिर भी दिल है हिंदुस्तानी",
            "फिर भी दिल है हिंदुस्तानी",
            "दिल की बात",
            "आ बैल मुझे मार",
            "आ बैल मुझे मार",
            "दूध की बात",
            "प्यार की बात",
        ],
        Language::Hindi,
        &opts,
    )
    .unwrap();
    let cmudict = CmuDict::from_lines([
        "SLAM  S L AE1 M",
        "GRAND  G R AE1 N D",
        "GOOD  G UH1 D",
        "MORNING  M AO1 R N IH0 NG",
        "ZEAL  Z IY1 L",
        "BAIL  B EY1 L",
        "EVERYONE  EH1 V R IY0 W AH2 N",
        "TITLE  T AY1 T AH0 L",
        "WON  W AH1 N",
        "THE  DH AH0",
        "HE  HH IY1",
        "WISH  W IH1 SH",
        "WE  W IY1",
        "YOU  Y UW1",
        "A  AH0",
        "WITH  W IH1 DH",
        "WORKED  W ER1 K T",
        "THEY  DH EY1",
    ])
    .unwrap();
    Resources {
        lexicon,
        english_lm,
        hindi_lm,
        cmudict,
        phoneme_map: full_phoneme_map(),
    }
}
