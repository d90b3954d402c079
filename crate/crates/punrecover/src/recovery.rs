//! The end-to-end pipeline: candidate pun locations, context lookup in the
//! neighboring words' language models, and phonetic distance minimization.
//!
//! Candidates are words at language-change boundaries plus every named
//! entity, OOV and ambiguous token; ambiguous tokens are analyzed once as
//! English and once as Hindi. For each candidate, the left and right
//! neighbors are looked up in their own language's bigram model (both models
//! for sentence boundaries and unresolved neighbors) and the two context
//! lists are kept separate, never intersected. Every suggested word is then
//! scored against the pun word's phonetic form; words with no phonetic
//! transcription fall back to orthographic distance.

use std::collections::{BTreeMap, BTreeSet};

use crate::langmodel::{BigramModel, Language, Side, BOS, EOS};
use crate::lexicon::{LanguageTag, Lexicon, TaggedToken};
use crate::phonetics::{
    devanagari_to_wx, english_to_wx, orthographic_distance, phonetic_distance, CmuDict, CostModel,
    PhonemeMap, PhoneticForm,
};
use crate::text::tokenize;

/// Why a token is a candidate pun location.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, serde::Serialize)]
pub enum CandidateReason {
    LanguageBoundary,
    NamedEntity,
    Oov,
    AmbiguousWord,
}

/// How a candidate's own word is read when computing its phonetic form.
/// `Roman` means no dictionary reading exists and comparison is orthographic.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, serde::Serialize)]
pub enum Analysis {
    English,
    Hindi,
    Roman,
}

#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize)]
pub struct PunCandidate {
    pub index: usize,
    pub reasons: BTreeSet<CandidateReason>,
    pub analyses: Vec<Analysis>,
}

/// A word suggested by one side's context, before scoring.
#[derive(Debug, Clone, PartialEq, serde::Serialize)]
pub struct ContextCue {
    pub word: String,
    pub log_prob: f64,
    /// Which neighbor produced the suggestion.
    pub side: Side,
    pub language: Language,
}

#[derive(Debug, Clone, PartialEq, serde::Serialize)]
pub struct TargetHypothesis {
    pub pun_index: usize,
    pub pun_word: String,
    pub target_word: String,
    pub target_language: Language,
    pub side: Side,
    pub lm_log_prob: f64,
    pub distance: f64,
    pub score: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
pub enum Classification {
    IntraSentential,
    SuspectedIntraWord,
}

#[derive(Debug, Clone, PartialEq, serde::Serialize)]
pub struct RecoveryResult {
    pub input: String,
    pub tagged: Vec<TaggedToken>,
    pub candidates: Vec<PunCandidate>,
    pub hypotheses: Vec<TargetHypothesis>,
    pub classification: Classification,
}

/// Everything the pipeline reads; immutable across calls.
pub struct Resources {
    pub lexicon: Lexicon,
    pub english_lm: BigramModel,
    pub hindi_lm: BigramModel,
    pub cmudict: CmuDict,
    pub phoneme_map: PhonemeMap,
}

/// Tunables, usually taken from the config file.
#[derive(Debug, Clone)]
pub struct RecoverParams {
    pub costs: CostModel,
    /// Context fan-out per side per model.
    pub context_k: usize,
    /// Number of hypotheses to keep, globally across candidates.
    pub top_n: usize,
    /// Best-distance threshold above which, with an OOV candidate present,
    /// the text is flagged as a suspected intra-word (portmanteau) pun.
    pub intra_word_threshold: f64,
    /// Weight of the LM log-probability mixed into the score; 0 ranks by
    /// distance alone, which is the default.
    pub lm_blend_weight: f64,
}

impl Default for RecoverParams {
    fn default() -> Self {
        RecoverParams {
            costs: CostModel::default(),
            context_k: 200,
            top_n: 5,
            intra_word_threshold: 0.45,
            lm_blend_weight: 0.0,
        }
    }
}

/// Finds candidate pun locations in a tagged sentence.
///
/// Boundary detection treats NE/OOV/ambiguous tokens as transparent: a
/// language change is a change between consecutive *resolved* English/Hindi
/// tokens, and both ends of the change become candidates.
pub fn identify_candidates(tagged: &[TaggedToken]) -> Vec<PunCandidate> {
    let mut reasons: BTreeMap<usize, BTreeSet<CandidateReason>> = BTreeMap::new();
    let resolved: Vec<(usize, LanguageTag)> = tagged
        .iter()
        .filter(|t| matches!(t.tag, LanguageTag::English | LanguageTag::Hindi))
        .map(|t| (t.token.index, t.tag))
        .collect();
    for pair in resolved.windows(2) {
        if pair[0].1 != pair[1].1 {
            for (idx, _) in pair {
                reasons
                    .entry(*idx)
                    .or_default()
                    .insert(CandidateReason::LanguageBoundary);
            }
        }
    }
    for t in tagged {
        let reason = match t.tag {
            LanguageTag::NamedEntity => CandidateReason::NamedEntity,
            LanguageTag::Oov => CandidateReason::Oov,
            LanguageTag::Ambiguous => CandidateReason::AmbiguousWord,
            _ => continue,
        };
        reasons.entry(t.token.index).or_default().insert(reason);
    }

    reasons
        .into_iter()
        .map(|(index, reasons)| {
            let analyses = if reasons.contains(&CandidateReason::AmbiguousWord) {
                vec![Analysis::English, Analysis::Hindi]
            } else {
                match tagged[index].tag {
                    LanguageTag::English => vec![Analysis::English],
                    LanguageTag::Hindi => vec![Analysis::Hindi],
                    _ => vec![Analysis::Roman],
                }
            };
            PunCandidate {
                index,
                reasons,
                analyses,
            }
        })
        .collect()
}

/// Words a neighbor's language model expects at the candidate position.
///
/// The left neighbor (or `<s>`) is queried for its followers, the right
/// neighbor (or `</s>`) for its predecessors, each in the neighbor's own
/// language model; a sentence marker or an unresolved neighbor is queried in
/// both models. Hindi neighbors are mapped to their Devanagari spellings
/// before the lookup. The two sides are returned as a union, never
/// intersected.
pub fn context_words(
    tagged: &[TaggedToken],
    candidate: &PunCandidate,
    english_lm: &BigramModel,
    hindi_lm: &BigramModel,
    lexicon: &Lexicon,
    k: usize,
) -> Vec<ContextCue> {
    let mut best: BTreeMap<(Side, Language, String), f64> = BTreeMap::new();
    let i = candidate.index;

    let neighbor_queries =
        |neighbor: Option<&TaggedToken>, marker: &str| -> Vec<(Language, String)> {
            match neighbor {
                None => vec![
                    (Language::English, marker.to_string()),
                    (Language::Hindi, marker.to_string()),
                ],
                Some(t) => {
                    let norm = t.token.norm.clone();
                    match t.tag {
                        LanguageTag::English => vec![(Language::English, norm)],
                        LanguageTag::Hindi => hindi_queries(lexicon, &norm),
                        LanguageTag::Ambiguous => {
                            let mut q = vec![(Language::English, norm.clone())];
                            q.extend(hindi_queries(lexicon, &norm));
                            q
                        }
                        LanguageTag::NamedEntity | LanguageTag::Oov => {
                            vec![(Language::English, norm.clone()), (Language::Hindi, norm)]
                        }
                    }
                }
            }
        };

    let left = if i > 0 { Some(&tagged[i - 1]) } else { None };
    for (language, query) in neighbor_queries(left, BOS) {
        let lm = pick(english_lm, hindi_lm, language);
        for cw in lm.followers(&query, k) {
            let key = (Side::Left, language, cw.word);
            let entry = best.entry(key).or_insert(f64::NEG_INFINITY);
            if cw.log_prob > *entry {
                *entry = cw.log_prob;
            }
        }
    }
    let right = tagged.get(i + 1);
    for (language, query) in neighbor_queries(right, EOS) {
        let lm = pick(english_lm, hindi_lm, language);
        for cw in lm.predecessors(&query, k) {
            let key = (Side::Right, language, cw.word);
            let entry = best.entry(key).or_insert(f64::NEG_INFINITY);
            if cw.log_prob > *entry {
                *entry = cw.log_prob;
            }
        }
    }

    best.into_iter()
        .map(|((side, language, word), log_prob)| ContextCue {
            word,
            log_prob,
            side,
            language,
        })
        .collect()
}

fn hindi_queries(lexicon: &Lexicon, norm: &str) -> Vec<(Language, String)> {
    match lexicon.hindi_spellings(norm) {
        Some(spellings) => spellings
            .iter()
            .map(|s| (Language::Hindi, s.clone()))
            .collect(),
        None => vec![(Language::Hindi, norm.to_string())],
    }
}

fn pick<'a>(
    english: &'a BigramModel,
    hindi: &'a BigramModel,
    language: Language,
) -> &'a BigramModel {
    match language {
        Language::English => english,
        Language::Hindi => hindi,
    }
}

/// One reading of the pun word: its phonetic forms when a dictionary
/// transcription exists.
struct Reading {
    analysis: Analysis,
    forms: Option<Vec<PhoneticForm>>,
}

fn readings_for(candidate: &PunCandidate, norm: &str, res: &Resources) -> Vec<Reading> {
    candidate
        .analyses
        .iter()
        .map(|&analysis| {
            let forms = match analysis {
                Analysis::English => english_to_wx(norm, &res.cmudict, &res.phoneme_map).ok(),
                Analysis::Hindi => {
                    let spellings = res
                        .lexicon
                        .hindi_spellings(norm)
                        .cloned()
                        .unwrap_or_default();
                    let forms: Vec<PhoneticForm> = spellings
                        .iter()
                        .filter_map(|s| devanagari_to_wx(s).ok())
                        .collect();
                    if forms.is_empty() {
                        None
                    } else {
                        Some(forms)
                    }
                }
                Analysis::Roman => None,
            };
            Reading { analysis, forms }
        })
        .collect()
}

/// Roman strings a target may be spelled as, for orthographic fallback.
fn target_roman_variants(cue: &ContextCue, lexicon: &Lexicon) -> Vec<String> {
    match cue.language {
        Language::English => vec![cue.word.clone()],
        Language::Hindi => {
            let mut variants: Vec<String> = lexicon
                .romanizations(&cue.word)
                .map(|set| set.iter().cloned().collect())
                .unwrap_or_default();
            if let Ok(form) = devanagari_to_wx(&cue.word) {
                variants.push(form.roman());
            }
            if variants.is_empty() {
                variants.push(cue.word.clone());
            }
            variants
        }
    }
}

fn min_distance(
    reading: &Reading,
    cue: &ContextCue,
    target_forms: Option<&[PhoneticForm]>,
    norm: &str,
    res: &Resources,
    costs: &CostModel,
) -> Option<f64> {
    if let (Some(pun_forms), Some(t_forms)) = (reading.forms.as_ref(), target_forms) {
        let mut best: Option<f64> = None;
        for pf in pun_forms {
            for tf in t_forms {
                let d = phonetic_distance(pf, tf, costs);
                if best.is_none_or(|b| d < b) {
                    best = Some(d);
                }
            }
        }
        best
    } else {
        // No transcription on one side: compare roman spellings.
        target_roman_variants(cue, &res.lexicon)
            .iter()
            .map(|roman| orthographic_distance(norm, roman, costs))
            .fold(None, |acc: Option<f64>, d| {
                Some(acc.map_or(d, |b| if d < b { d } else { b }))
            })
    }
}

/// Runs the full pipeline on one text.
pub fn recover(text: &str, res: &Resources, params: &RecoverParams) -> RecoveryResult {
    let tokens = tokenize(text);
    let tagged = res.lexicon.tag_all(tokens);
    let candidates = identify_candidates(&tagged);

    let mut merged: BTreeMap<(usize, Language, String), TargetHypothesis> = BTreeMap::new();
    for candidate in &candidates {
        let norm = tagged[candidate.index].token.norm.clone();
        let readings = readings_for(candidate, &norm, res);
        let cues = context_words(
            &tagged,
            candidate,
            &res.english_lm,
            &res.hindi_lm,
            &res.lexicon,
            params.context_k,
        );
        // Phonetic forms of each cue are shared across readings.
        let mut cue_forms: BTreeMap<String, Option<Vec<PhoneticForm>>> = BTreeMap::new();
        for cue in &cues {
            if cue.word == norm {
                continue; // a word is never its own target
            }
            let forms = cue_forms
                .entry(cue.word.clone())
                .or_insert_with(|| match cue.language {
                    Language::English => {
                        english_to_wx(&cue.word, &res.cmudict, &res.phoneme_map).ok()
                    }
                    Language::Hindi => devanagari_to_wx(&cue.word).ok().map(|f| vec![f]),
                });
            for reading in &readings {
                // The pun word and its target come from different languages;
                // a resolved reading only competes against opposite-language
                // suggestions. Roman (NE/OOV) readings have no language and
                // accept both.
                let same_language = matches!(
                    (reading.analysis, cue.language),
                    (Analysis::English, Language::English) | (Analysis::Hindi, Language::Hindi)
                );
                if same_language {
                    continue;
                }
                let Some(distance) =
                    min_distance(reading, cue, forms.as_deref(), &norm, res, &params.costs)
                else {
                    continue;
                };
                let score = distance + params.lm_blend_weight * (-cue.log_prob);
                let hyp = TargetHypothesis {
                    pun_index: candidate.index,
                    pun_word: norm.clone(),
                    target_word: cue.word.clone(),
                    target_language: cue.language,
                    side: cue.side,
                    lm_log_prob: cue.log_prob,
                    distance,
                    score,
                };
                let key = (candidate.index, cue.language, cue.word.clone());
                match merged.get_mut(&key) {
                    Some(existing) => {
                        if hypothesis_order(&hyp, existing) == std::cmp::Ordering::Less {
                            *existing = hyp;
                        }
                    }
                    None => {
                        merged.insert(key, hyp);
                    }
                }
            }
        }
    }

    let mut hypotheses: Vec<TargetHypothesis> = merged.into_values().collect();
    hypotheses.sort_by(hypothesis_order);
    hypotheses.truncate(params.top_n);

    let has_oov = candidates
        .iter()
        .any(|c| c.reasons.contains(&CandidateReason::Oov));
    let classification = match hypotheses.first() {
        Some(best) if best.distance > params.intra_word_threshold && has_oov => {
            Classification::SuspectedIntraWord
        }
        _ => Classification::IntraSentential,
    };

    RecoveryResult {
        input: text.to_string(),
        tagged,
        candidates,
        hypotheses,
        classification,
    }
}

/// Total order on hypotheses: score, then higher LM probability, then
/// lexicographic target, then lower index, then language and side.
fn hypothesis_order(a: &TargetHypothesis, b: &TargetHypothesis) -> std::cmp::Ordering {
    a.score
        .total_cmp(&b.score)
        .then_with(|| b.lm_log_prob.total_cmp(&a.lm_log_prob))
        .then_with(|| a.target_word.cmp(&b.target_word))
        .then_with(|| a.pun_index.cmp(&b.pun_index))
        .then_with(|| a.target_language.cmp(&b.target_language))
        .then_with(|| a.side.cmp(&b.side))
}
