//! Gold-dataset loading and scoring of recovery output.
//!
//! Gold records are JSONL with a pun location (surface string or token
//! index) and one or more acceptable targets; texts whose wordplay blends
//! languages inside one word are carried in the dataset but excluded from
//! recovery scoring. Failures are auto-classified to mirror the known error
//! modes: multi-word targets, abbreviation-pronunciation puns, and targets
//! whose supporting bigram never occurs in either language model.

use std::collections::BTreeSet;
use std::fs::File;
use std::io::{BufRead, BufReader};
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::langmodel::{BigramModel, Language, BOS, EOS};
use crate::lexicon::Lexicon;
use crate::phonetics::{devanagari_to_wx, orthographic_canon};
use crate::recovery::{recover, RecoverParams, RecoveryResult, Resources};
use crate::text::contains_devanagari;

/// Where the pun sits in the gold text: a token index or a surface word.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum PunRef {
    Index(usize),
    Surface(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Category {
    IntraSentential,
    IntraWord,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GoldRecord {
    pub id: String,
    pub text: String,
    pub pun: PunRef,
    pub targets: Vec<String>,
    pub category: Category,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub notes: Option<String>,
}

/// Loads and validates a JSONL gold file: unique ids, nonempty targets.
pub fn load_gold(path: impl AsRef<Path>) -> Result<Vec<GoldRecord>> {
    let path = path.as_ref();
    let file = File::open(path).map_err(|e| Error::io(path, e))?;
    let mut records = Vec::new();
    let mut seen_ids = BTreeSet::new();
    for (lineno, line) in BufReader::new(file).lines().enumerate() {
        let line = line.map_err(|e| Error::io(path, e))?;
        let trimmed = line.trim();
        if trimmed.is_empty() {
            continue;
        }
        let record: GoldRecord = serde_json::from_str(trimmed)
            .map_err(|e| Error::parse(path, lineno + 1, e.to_string()))?;
        if record.targets.is_empty() {
            return Err(Error::Gold {
                id: record.id,
                message: "targets must be nonempty".into(),
            });
        }
        if record.targets.iter().any(|t| t.trim().is_empty()) {
            return Err(Error::Gold {
                id: record.id,
                message: "empty target string".into(),
            });
        }
        if !seen_ids.insert(record.id.clone()) {
            return Err(Error::Gold {
                id: record.id,
                message: "duplicate id".into(),
            });
        }
        records.push(record);
    }
    Ok(records)
}

/// The error taxonomy for unrecovered items.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum FailureClass {
    MultiWordTarget,
    AbbreviationPun,
    MissingBigram,
    LocationMiss,
    DistanceMiss,
    Other,
}

#[derive(Debug, Clone, Serialize)]
pub struct ItemReport {
    pub id: String,
    /// True when the gold target was recovered at the gold location within
    /// the top-n hypotheses.
    pub matched: bool,
    /// 1-based rank of the first matching hypothesis, when matched.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub rank: Option<usize>,
    /// Rank ignoring the location constraint, when any.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lenient_rank: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub failure_class: Option<FailureClass>,
    /// Intra-word records are carried but not scored.
    pub skipped: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct EvalReport {
    /// Number of scored (intra-sentential) records.
    pub total: usize,
    pub recovered_top1: usize,
    pub recovered_topn: usize,
    pub accuracy_top1: f64,
    pub accuracy_topn: f64,
    /// Matches when the location constraint is dropped.
    pub lenient_topn: usize,
    pub skipped: usize,
    pub per_item: Vec<ItemReport>,
}

/// Canonical comparison keys for a hypothesis target or a gold target.
///
/// A Devanagari word contributes itself plus every known romanization (from
/// the reverse dictionary and from its WX rendering); a roman word
/// contributes its orthographic canonical form. Two words match when their
/// key sets intersect.
fn target_keys(word: &str, lexicon: &Lexicon) -> BTreeSet<String> {
    let mut keys = BTreeSet::new();
    let canon = |s: &str| orthographic_canon(s).into_iter().collect::<String>();
    if contains_devanagari(word) {
        keys.insert(word.to_string());
        if let Some(romans) = lexicon.romanizations(word) {
            for r in romans {
                keys.insert(canon(r));
            }
        }
        if let Ok(form) = devanagari_to_wx(word) {
            keys.insert(canon(&form.roman()));
        }
    } else {
        let lower = word.to_lowercase();
        keys.insert(canon(&lower));
        // A roman gold target may name a Hindi word; admit its spellings.
        if let Some(spellings) = lexicon.hindi_spellings(&lower) {
            for s in spellings {
                keys.insert(s.clone());
            }
        }
    }
    keys
}

fn targets_match(hyp_target: &str, gold_targets: &[String], lexicon: &Lexicon) -> bool {
    let hyp_keys = target_keys(hyp_target, lexicon);
    gold_targets.iter().any(|gold| {
        let gold_keys = target_keys(gold, lexicon);
        hyp_keys.intersection(&gold_keys).next().is_some()
    })
}

/// Resolves the gold pun reference to a token index in the recovery output.
fn gold_index(record: &GoldRecord, result: &RecoveryResult) -> Option<usize> {
    match &record.pun {
        PunRef::Index(i) => {
            if *i < result.tagged.len() {
                Some(*i)
            } else {
                None
            }
        }
        PunRef::Surface(s) => {
            let want = s.to_lowercase();
            result
                .tagged
                .iter()
                .find(|t| t.token.norm == want || t.token.surface.to_lowercase() == want)
                .map(|t| t.token.index)
        }
    }
}

/// The surface form of the pun as written in the text, for the abbreviation
/// heuristic.
fn pun_surface<'a>(
    record: &'a GoldRecord,
    result: &'a RecoveryResult,
    index: Option<usize>,
) -> &'a str {
    match &record.pun {
        PunRef::Surface(s) => s,
        PunRef::Index(_) => index
            .and_then(|i| result.tagged.get(i))
            .map(|t| t.token.surface.as_str())
            .unwrap_or(""),
    }
}

fn is_abbreviation(surface: &str) -> bool {
    let len = surface.chars().count();
    len > 0 && len <= 4 && surface.chars().all(|c| c.is_ascii_uppercase())
}

/// True when no gold target is supported by a neighbor bigram in either
/// language model.
fn gold_bigram_missing(
    record: &GoldRecord,
    result: &RecoveryResult,
    index: usize,
    english_lm: &BigramModel,
    hindi_lm: &BigramModel,
    lexicon: &Lexicon,
) -> bool {
    let neighbor_words = |offset: isize| -> Vec<(Language, String)> {
        let i = index as isize + offset;
        if i < 0 || i as usize >= result.tagged.len() {
            let marker = if offset < 0 { BOS } else { EOS };
            return vec![
                (Language::English, marker.to_string()),
                (Language::Hindi, marker.to_string()),
            ];
        }
        let norm = &result.tagged[i as usize].token.norm;
        let mut out = vec![(Language::English, norm.clone())];
        match lexicon.hindi_spellings(norm) {
            Some(spellings) => out.extend(spellings.iter().map(|s| (Language::Hindi, s.clone()))),
            None => out.push((Language::Hindi, norm.clone())),
        }
        out
    };

    // Script-appropriate forms of each gold target per model.
    let mut english_forms: Vec<String> = Vec::new();
    let mut hindi_forms: Vec<String> = Vec::new();
    for gold in &record.targets {
        if contains_devanagari(gold) {
            hindi_forms.push(gold.clone());
            if let Some(romans) = lexicon.romanizations(gold) {
                english_forms.extend(romans.iter().cloned());
            }
        } else {
            let lower = gold.to_lowercase();
            if let Some(spellings) = lexicon.hindi_spellings(&lower) {
                hindi_forms.extend(spellings.iter().cloned());
            }
            english_forms.push(lower);
        }
    }

    let lefts = neighbor_words(-1);
    let rights = neighbor_words(1);
    for (lm, forms) in [(english_lm, &english_forms), (hindi_lm, &hindi_forms)] {
        let lang = lm.language();
        for t in forms {
            if !lm.contains(t) {
                continue;
            }
            for (l_lang, l) in &lefts {
                if *l_lang == lang && lm.has_bigram(l, t) {
                    return false;
                }
            }
            for (r_lang, r) in &rights {
                if *r_lang == lang && lm.has_bigram(t, r) {
                    return false;
                }
            }
        }
    }
    true
}

fn classify_failure(
    record: &GoldRecord,
    result: &RecoveryResult,
    index: Option<usize>,
    res: &Resources,
) -> FailureClass {
    if record
        .targets
        .iter()
        .any(|t| t.trim().contains(char::is_whitespace))
    {
        return FailureClass::MultiWordTarget;
    }
    if is_abbreviation(pun_surface(record, result, index)) {
        return FailureClass::AbbreviationPun;
    }
    let Some(index) = index else {
        return FailureClass::Other;
    };
    if gold_bigram_missing(
        record,
        result,
        index,
        &res.english_lm,
        &res.hindi_lm,
        &res.lexicon,
    ) {
        return FailureClass::MissingBigram;
    }
    if result.hypotheses.iter().any(|h| h.pun_index == index) {
        FailureClass::DistanceMiss
    } else {
        FailureClass::LocationMiss
    }
}

/// Runs recovery over every intra-sentential gold record and tallies strict
/// (location + target) and lenient (target only) matches at top-1 and top-n.
pub fn evaluate(
    gold: &[GoldRecord],
    res: &Resources,
    params: &RecoverParams,
    n: usize,
) -> EvalReport {
    let params = RecoverParams {
        top_n: n,
        ..params.clone()
    };
    let mut per_item: Vec<ItemReport> = Vec::with_capacity(gold.len());
    let mut total = 0usize;
    let mut top1 = 0usize;
    let mut topn = 0usize;
    let mut lenient = 0usize;
    let mut skipped = 0usize;

    for record in gold {
        if record.category == Category::IntraWord {
            skipped += 1;
            per_item.push(ItemReport {
                id: record.id.clone(),
                matched: false,
                rank: None,
                lenient_rank: None,
                failure_class: None,
                skipped: true,
            });
            continue;
        }
        total += 1;
        let result = recover(&record.text, res, &params);
        let index = gold_index(record, &result);
        let mut rank = None;
        let mut lenient_rank = None;
        for (pos, hyp) in result.hypotheses.iter().enumerate() {
            let target_ok = targets_match(&hyp.target_word, &record.targets, &res.lexicon);
            if target_ok && lenient_rank.is_none() {
                lenient_rank = Some(pos + 1);
            }
            if target_ok && rank.is_none() && Some(hyp.pun_index) == index {
                rank = Some(pos + 1);
            }
        }
        let matched = rank.is_some();
        if matched {
            topn += 1;
            if rank == Some(1) {
                top1 += 1;
            }
        }
        if lenient_rank.is_some() {
            lenient += 1;
        }
        let failure_class = if matched {
            None
        } else {
            Some(classify_failure(record, &result, index, res))
        };
        per_item.push(ItemReport {
            id: record.id.clone(),
            matched,
            rank,
            lenient_rank,
            failure_class,
            skipped: false,
        });
    }

    per_item.sort_by(|a, b| a.id.cmp(&b.id));
    let ratio = |num: usize| {
        if total == 0 {
            0.0
        } else {
            num as f64 / total as f64
        }
    };
    EvalReport {
        total,
        recovered_top1: top1,
        recovered_topn: topn,
        accuracy_top1: ratio(top1),
        accuracy_topn: ratio(topn),
        lenient_topn: lenient,
        skipped,
        per_item,
    }
}
