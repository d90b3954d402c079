//! Acceptance suite: one test per release criterion, run against the bundled
//! desk-scale resources under data/. The harness prints one pass/fail line
//! per criterion.

mod common;

use std::collections::BTreeSet;
use std::path::{Path, PathBuf};
use std::sync::OnceLock;
use std::time::Instant;

use common::{EditOracle, KnOracle, XorShift};
use punrecover::evaluation::{evaluate, load_gold, FailureClass};
use punrecover::langmodel::{BigramModel, Language, TrainOptions, BOS, EOS, UNK};
use punrecover::lexicon::TaggedToken;
use punrecover::lexicon::{LanguageTag, Lexicon};
use punrecover::phonetics::{
    phonetic_distance, CmuDict, CostModel, PhonemeMap, PhoneticForm, WX_UNITS,
};
use punrecover::recovery::{
    identify_candidates, recover, CandidateReason, RecoverParams, Resources,
};
use punrecover::report::recovery_to_json;
use punrecover::text::Token;

fn data_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../../data")
}

fn read_lines(path: &Path) -> Vec<String> {
    std::fs::read_to_string(path)
        .unwrap_or_else(|e| panic!("cannot read {}: {e}", path.display()))
        .lines()
        .map(str::to_string)
        .collect()
}

struct Bundle {
    resources: Resources,
    params: RecoverParams,
    english_sentences: usize,
    hindi_sentences: usize,
    setup_seconds: f64,
}

static BUNDLE: OnceLock<Bundle> = OnceLock::new();

fn bundle() -> &'static Bundle {
    BUNDLE.get_or_init(|| {
        let t0 = Instant::now();
        let data = data_dir();
        let lexicon = Lexicon::load(
            data.join("lexicon/english_words.txt"),
            data.join("lexicon/hindi_roman_devanagari.tsv"),
            data.join("lexicon/named_entities.txt"),
        )
        .expect("lexicon");
        let cmudict = CmuDict::load(data.join("cmudict/en_in.dict")).expect("cmudict");
        let phoneme_map = PhonemeMap::load(data.join("phoneme_map/cmu_to_wx.tsv")).expect("pmap");
        let english_lines = read_lines(&data.join("corpora/english.txt"));
        let hindi_lines = read_lines(&data.join("corpora/hindi.txt"));
        let opts = TrainOptions::default();
        let english_lm =
            BigramModel::train(english_lines.iter(), Language::English, &opts).expect("en lm");
        let hindi_lm =
            BigramModel::train(hindi_lines.iter(), Language::Hindi, &opts).expect("hi lm");
        Bundle {
            resources: Resources {
                lexicon,
                english_lm,
                hindi_lm,
                cmudict,
                phoneme_map,
            },
            params: RecoverParams::default(),
            english_sentences: english_lines.len(),
            hindi_sentences: hindi_lines.len(),
            setup_seconds: t0.elapsed().as_secs_f64(),
        }
    })
}

#[test]
fn criterion_bundled_example_recovery() {
    let t0 = Instant::now();
    let b = bundle();
    assert!(
        b.resources.lexicon.english_len() >= 5000,
        "english lexicon has only {} entries",
        b.resources.lexicon.english_len()
    );
    assert!(
        b.resources.lexicon.hindi_len() >= 5000,
        "hindi map has only {} entries",
        b.resources.lexicon.hindi_len()
    );
    assert!(b.english_sentences >= 20_000);
    assert!(b.hindi_sentences >= 20_000);

    let gold = load_gold(data_dir().join("gold/paper_examples.jsonl")).expect("gold");
    let report = evaluate(&gold, &b.resources, &b.params, 5);

    let item = |id: &str| {
        report
            .per_item
            .iter()
            .find(|i| i.id == id)
            .unwrap_or_else(|| panic!("missing item {id}"))
    };
    for id in ["pun1", "pun2", "pun5", "pun6"] {
        let it = item(id);
        assert!(
            it.matched && it.rank.unwrap_or(usize::MAX) <= 5,
            "{id} not recovered in top-5: {it:?}"
        );
    }
    assert_eq!(
        item("pun7").failure_class,
        Some(FailureClass::MultiWordTarget),
        "pun7 should fail as a multi-word target"
    );
    assert_eq!(
        item("pun8").failure_class,
        Some(FailureClass::AbbreviationPun),
        "pun8 should fail as an abbreviation pun"
    );

    let elapsed = b.setup_seconds + t0.elapsed().as_secs_f64();
    assert!(elapsed < 10.0, "bundled run took {elapsed:.1}s");
    eprintln!("criterion bundled-example recovery: PASS (pun1/2/5/6 in top-5, {elapsed:.1}s)");
}

#[test]
fn criterion_kn_normalization() {
    let b = bundle();
    let mut rng = XorShift(0x0009_0a11);
    for (name, lm) in [
        ("english", &b.resources.english_lm),
        ("hindi", &b.resources.hindi_lm),
    ] {
        let vocab: Vec<&str> = lm.vocab().collect();
        for _ in 0..100 {
            let prev = vocab[rng.below(vocab.len())];
            if lm.context_total(prev) == 0 {
                continue; // </s> and zero-count <unk> have no outgoing row
            }
            let sum: f64 = vocab.iter().map(|w| lm.prob(prev, w)).sum();
            assert!((sum - 1.0).abs() < 1e-9, "{name}: row {prev} sums to {sum}");
        }
    }
    eprintln!("criterion KN normalization: PASS (100 histories per model, tol 1e-9)");
}

#[test]
fn criterion_kn_oracle_equivalence() {
    let mut rng = XorShift(0x00ac_ce55);
    for case in 0..50 {
        let vocab_size = 2 + rng.below(14);
        let vocab: Vec<String> = (0..vocab_size).map(|i| format!("v{i}")).collect();
        let n = 1 + rng.below(20);
        let corpus: Vec<String> = (0..n)
            .map(|_| {
                let len = 1 + rng.below(6);
                (0..len)
                    .map(|_| vocab[rng.below(vocab.len())].clone())
                    .collect::<Vec<_>>()
                    .join(" ")
            })
            .collect();
        let min_count = 1 + (case % 2) as u64;
        let model = BigramModel::train(
            corpus.iter(),
            Language::English,
            &TrainOptions {
                discount: 0.75,
                min_count,
            },
        )
        .unwrap();
        let oracle = KnOracle::new(corpus.iter(), 0.75, min_count);
        for prev in oracle.vocab() {
            for w in oracle.vocab() {
                let got = model.prob(&prev, &w);
                let want = oracle.prob(&prev, &w);
                assert!(
                    (got - want).abs() < 1e-12,
                    "case {case}: P({w}|{prev}) {got} vs oracle {want}"
                );
            }
        }
    }
    eprintln!("criterion KN oracle equivalence: PASS (50 corpora, tol 1e-12)");
}

#[test]
fn criterion_edit_distance_oracle() {
    let costs = CostModel::default();
    let oracle = EditOracle {
        vowel_sub: costs.vowel_sub,
        consonant_sub: costs.consonant_sub,
        aspiration_pair_sub: costs.aspiration_pair_sub,
        vowel_length_sub: costs.vowel_length_sub,
        insert_delete: costs.insert_delete,
        rhyme_bonus: costs.rhyme_bonus,
        onset_bonus: costs.onset_bonus,
    };
    let mut rng = XorShift(0xed17);
    let rand_form = |rng: &mut XorShift, max_len: usize| -> PhoneticForm {
        let len = 1 + rng.below(max_len);
        PhoneticForm {
            units: (0..len)
                .map(|_| WX_UNITS[rng.below(WX_UNITS.len())])
                .collect(),
            source: punrecover::phonetics::PhoneticSource::FromDevanagari,
        }
    };
    for _ in 0..500 {
        let a = rand_form(&mut rng, 6);
        let b = rand_form(&mut rng, 6);
        let got = phonetic_distance(&a, &b, &costs);
        let want = oracle.distance(&a.units, &b.units);
        assert_eq!(got, want, "{a:?} vs {b:?}");
    }
    for _ in 0..10_000 {
        let a = rand_form(&mut rng, 7);
        let b = rand_form(&mut rng, 7);
        assert_eq!(phonetic_distance(&a, &a, &costs), 0.0);
        let ab = phonetic_distance(&a, &b, &costs);
        let ba = phonetic_distance(&b, &a, &costs);
        assert_eq!(ab.to_bits(), ba.to_bits());
    }
    eprintln!("criterion edit-distance oracle: PASS (500 exact, 10k identity/symmetry)");
}

#[test]
fn criterion_tagging_partition() {
    let mut rng = XorShift(0x0007_a991);
    let pool: Vec<String> = (0..40).map(|i| format!("t{i}")).collect();
    for case in 0..10_000 {
        let sample = |rng: &mut XorShift, n: usize| -> Vec<String> {
            (0..n)
                .map(|_| pool[rng.below(pool.len())].clone())
                .collect()
        };
        let n_en = rng.below(8);
        let english = sample(&mut rng, n_en);
        let n_hi = rng.below(8);
        let hindi: Vec<(String, String)> = sample(&mut rng, n_hi)
            .into_iter()
            .map(|w| (w, "दिल".to_string()))
            .collect();
        let n_ne = rng.below(4);
        let nes = sample(&mut rng, n_ne);
        let lex = Lexicon::from_parts(english.clone(), hindi.clone(), nes.clone());
        let word = &pool[rng.below(pool.len())];
        let token = Token {
            surface: word.clone(),
            norm: word.clone(),
            index: 0,
        };
        let tag = lex.tag(&token);
        let in_en = lex.contains_english(word);
        let in_hi = lex.contains_hindi(word);
        let in_ne = lex.contains_named_entity(word);
        let expected = match (in_en, in_hi) {
            (true, true) => LanguageTag::Ambiguous,
            (true, false) => LanguageTag::English,
            (false, true) => LanguageTag::Hindi,
            (false, false) if in_ne => LanguageTag::NamedEntity,
            _ => LanguageTag::Oov,
        };
        assert_eq!(tag, expected, "case {case}, word {word}");
        assert_eq!(tag == LanguageTag::Ambiguous, in_en && in_hi);
    }
    eprintln!("criterion tagging partition: PASS (10k fixtures)");
}

#[test]
fn criterion_candidate_completeness() {
    let mut rng = XorShift(0xca4d);
    let tags = [
        LanguageTag::English,
        LanguageTag::Hindi,
        LanguageTag::NamedEntity,
        LanguageTag::Oov,
        LanguageTag::Ambiguous,
    ];
    for case in 0..1000 {
        let len = 1 + rng.below(10);
        let tagged: Vec<TaggedToken> = (0..len)
            .map(|i| TaggedToken {
                token: Token {
                    surface: format!("w{i}"),
                    norm: format!("w{i}"),
                    index: i,
                },
                tag: tags[rng.below(tags.len())],
            })
            .collect();
        let candidates = identify_candidates(&tagged);
        let candidate_indices: BTreeSet<usize> = candidates.iter().map(|c| c.index).collect();
        for t in &tagged {
            if matches!(
                t.tag,
                LanguageTag::NamedEntity | LanguageTag::Oov | LanguageTag::Ambiguous
            ) {
                assert!(
                    candidate_indices.contains(&t.token.index),
                    "case {case}: {:?} at {} missing",
                    t.tag,
                    t.token.index
                );
            }
        }
        let resolved: Vec<(usize, LanguageTag)> = tagged
            .iter()
            .filter(|t| matches!(t.tag, LanguageTag::English | LanguageTag::Hindi))
            .map(|t| (t.token.index, t.tag))
            .collect();
        for pair in resolved.windows(2) {
            if pair[0].1 != pair[1].1 {
                for (idx, _) in pair {
                    assert!(
                        candidate_indices.contains(idx),
                        "case {case}: boundary index {idx} missing"
                    );
                    let cand = candidates.iter().find(|c| c.index == *idx).unwrap();
                    assert!(cand.reasons.contains(&CandidateReason::LanguageBoundary));
                }
            }
        }
    }
    eprintln!("criterion candidate completeness: PASS (1k sequences)");
}

#[test]
fn criterion_determinism() {
    let b = bundle();
    let gold = load_gold(data_dir().join("gold/paper_examples.jsonl")).expect("gold");
    for record in &gold {
        let first = recover(&record.text, &b.resources, &b.params);
        let second = recover(&record.text, &b.resources, &b.params);
        let j1 = serde_json::to_string(&recovery_to_json(&first)).unwrap();
        let j2 = serde_json::to_string(&recovery_to_json(&second)).unwrap();
        assert_eq!(j1, j2, "non-deterministic JSON for {}", record.id);
    }

    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("english.lm");
    b.resources.english_lm.save(&path).unwrap();
    let loaded = BigramModel::load(&path).unwrap();
    let vocab: Vec<&str> = b.resources.english_lm.vocab().collect();
    let mut rng = XorShift(0x000d_e7e2);
    for _ in 0..1000 {
        let prev = vocab[rng.below(vocab.len())];
        let w = vocab[rng.below(vocab.len())];
        assert_eq!(
            b.resources.english_lm.prob(prev, w).to_bits(),
            loaded.prob(prev, w).to_bits(),
            "round-trip prob differs for ({prev}, {w})"
        );
    }
    eprintln!("criterion determinism: PASS (byte-identical JSON, bit-identical round trip)");
}

#[test]
fn criterion_error_taxonomy_coverage() {
    let b = bundle();
    let gold = load_gold(data_dir().join("gold/paper_examples.jsonl")).expect("gold");
    let report = evaluate(&gold, &b.resources, &b.params, 5);
    let classes: BTreeSet<FailureClass> = report
        .per_item
        .iter()
        .filter_map(|i| i.failure_class)
        .collect();
    for class in [
        FailureClass::MultiWordTarget,
        FailureClass::AbbreviationPun,
        FailureClass::MissingBigram,
    ] {
        assert!(classes.contains(&class), "no item exercises {class:?}");
    }

    // MissingBigram fires precisely because "slow food" never occurs: the
    // target word is in vocabulary, its supporting bigram is not.
    let en = &b.resources.english_lm;
    assert!(en.contains("slow"));
    assert!(en.contains("food"));
    assert_eq!(en.bigram_count("slow", "food"), 0);
    let missing = report
        .per_item
        .iter()
        .find(|i| i.id == "pun9")
        .expect("pun9");
    assert_eq!(missing.failure_class, Some(FailureClass::MissingBigram));

    // <s> and </s> really pad the models; the backbone of boundary context.
    assert!(en.bigram_count(BOS, "the") > 0);
    assert!(en.bigram_count("morning", EOS) > 0);
    assert!(en.contains(UNK));
    eprintln!("criterion error-taxonomy coverage: PASS (three classes exercised)");
}
