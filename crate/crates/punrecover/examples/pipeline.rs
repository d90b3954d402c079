//! The whole pipeline on in-memory resources, small enough to read in one
//! sitting.
//!
//! ```bash
//! cargo run --example pipeline
//! ```

use punrecover::langmodel::{BigramModel, Language, TrainOptions};
use punrecover::lexicon::Lexicon;
use punrecover::phonetics::{CmuDict, PhonemeMap};
use punrecover::recovery::{recover, RecoverParams, Resources};

fn main() -> punrecover::Result<()> {
    let lexicon = Lexicon::from_parts(
        ["grand", "slam", "won", "the", "he", "she", "title", "final"].map(String::from),
        [
            ("salaam".to_string(), "सलाम".to_string()),
            ("sabko".to_string(), "सबको".to_string()),
            ("kiya".to_string(), "किया".to_string()),
        ],
        std::iter::empty(),
    );

    let opts = TrainOptions {
        discount: 0.75,
        min_count: 1,
    };
    let english_lm = BigramModel::train(
        [
            "he won the grand slam",
            "she won the grand slam final",
            "the grand slam title",
        ],
        Language::English,
        &opts,
    )?;
    let hindi_lm = BigramModel::train(
        ["उसने सबको सलाम किया", "सबको सलाम"],
        Language::Hindi,
        &opts,
    )?;

    let cmudict = CmuDict::from_lines([
        "SLAM  S L AE1 M",
        "GRAND  G R AE1 N D",
        "TITLE  T AY1 T AH0 L",
        "FINAL  F AY1 N AH0 L",
    ])
    .expect("dictionary entries parse");
    let phoneme_map = PhonemeMap::from_pairs([
        ("S", "s"),
        ("L", "l"),
        ("AE", "E"),
        ("M", "m"),
        ("G", "g"),
        ("R", "r"),
        ("N", "n"),
        ("D", "x"),
        ("T", "w"),
        ("AY", "a i"),
        ("AH", "a"),
        ("F", "P"),
    ]);

    let resources = Resources {
        lexicon,
        english_lm,
        hindi_lm,
        cmudict,
        phoneme_map,
    };
    let result = recover("Grand Salaam", &resources, &RecoverParams::default());

    for t in &result.tagged {
        println!("{:>8}  {:?}", t.token.norm, t.tag);
    }
    println!();
    for (rank, h) in result.hypotheses.iter().enumerate() {
        println!(
            "{}. {} -> {}  (distance {:.4})",
            rank + 1,
            h.pun_word,
            h.target_word,
            h.distance
        );
    }
    Ok(())
}
