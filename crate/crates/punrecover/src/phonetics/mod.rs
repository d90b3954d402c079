//! Phonetic representation and similarity scoring.
//!
//! Hindi words reach WX notation through [`devanagari_to_wx`]; English words
//! through the pronouncing dictionary and the CMU-to-WX [`PhonemeMap`]. The
//! distance is a feature-weighted, length-normalized edit distance over WX
//! units: substitutions between an aspirated/unaspirated pair or a long/short
//! vowel pair cost less than arbitrary vowel substitutions, which cost less
//! than consonant substitutions (puns tolerate vowel changes more readily
//! than consonant changes). Matching first or last units earn a bonus
//! multiplier. The result lives in [0, 1] but, because of the bonuses, it is
//! a similarity score rather than a metric: the triangle inequality is not
//! guaranteed.

mod cmudict;
mod phoneme_map;
mod wx;

pub use cmudict::CmuDict;
pub use phoneme_map::{PhonemeMap, CMU_PHONEMES};
pub use wx::{
    devanagari_to_wx as devanagari_to_wx_units, is_aspiration_pair, is_length_pair, is_wx_unit,
    is_wx_vowel, wx_to_roman, WX_UNITS,
};

use crate::error::{Error, Result};

/// Where a phonetic form came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
pub enum PhoneticSource {
    FromDevanagari,
    FromCmuDict,
}

/// A word rendered as WX units.
#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize)]
pub struct PhoneticForm {
    pub units: Vec<char>,
    pub source: PhoneticSource,
}

impl PhoneticForm {
    pub fn len(&self) -> usize {
        self.units.len()
    }

    pub fn is_empty(&self) -> bool {
        self.units.is_empty()
    }

    pub fn roman(&self) -> String {
        wx_to_roman(&self.units)
    }
}

impl std::fmt::Display for PhoneticForm {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        for u in &self.units {
            write!(f, "{u}")?;
        }
        Ok(())
    }
}

/// Converts an NFC Devanagari word to a phonetic form.
pub fn devanagari_to_wx(word: &str) -> Result<PhoneticForm> {
    Ok(PhoneticForm {
        units: wx::devanagari_to_wx(word)?,
        source: PhoneticSource::FromDevanagari,
    })
}

/// Converts an English word via the pronouncing dictionary, one form per
/// pronunciation variant. Absence from the dictionary is the
/// [`Error::NotInDictionary`] signal; callers fall back to orthographic
/// comparison.
pub fn english_to_wx(word: &str, dict: &CmuDict, pmap: &PhonemeMap) -> Result<Vec<PhoneticForm>> {
    let prons = dict
        .pronunciations(word)
        .ok_or_else(|| Error::NotInDictionary(word.to_string()))?;
    let mut forms = Vec::with_capacity(prons.len());
    for pron in prons {
        let mut units = Vec::with_capacity(pron.len());
        for phoneme in pron {
            let mapped = pmap
                .get(phoneme)
                .ok_or_else(|| Error::Config(format!("phoneme map has no entry for {phoneme}")))?;
            units.extend_from_slice(mapped);
        }
        forms.push(PhoneticForm {
            units,
            source: PhoneticSource::FromCmuDict,
        });
    }
    Ok(forms)
}

/// Substitution and normalization weights. The class ordering invariant is
/// enforced by [`CostModel::validate`].
#[derive(Debug, Clone, PartialEq, serde::Serialize)]
pub struct CostModel {
    pub vowel_sub: f64,
    pub consonant_sub: f64,
    pub aspiration_pair_sub: f64,
    pub vowel_length_sub: f64,
    pub insert_delete: f64,
    pub rhyme_bonus: f64,
    pub onset_bonus: f64,
}

impl Default for CostModel {
    fn default() -> Self {
        CostModel {
            vowel_sub: 0.5,
            consonant_sub: 1.0,
            aspiration_pair_sub: 0.25,
            vowel_length_sub: 0.25,
            insert_delete: 1.0,
            rhyme_bonus: 0.8,
            onset_bonus: 0.9,
        }
    }
}

impl CostModel {
    pub fn validate(&self) -> Result<()> {
        let ordered = 0.0 < self.aspiration_pair_sub
            && self.aspiration_pair_sub <= self.vowel_length_sub
            && self.vowel_length_sub <= self.vowel_sub
            && self.vowel_sub <= self.consonant_sub
            && self.consonant_sub <= self.insert_delete;
        if !ordered {
            return Err(Error::Config(
                "cost ordering must satisfy 0 < aspiration_pair_sub <= vowel_length_sub \
                 <= vowel_sub <= consonant_sub <= insert_delete"
                    .into(),
            ));
        }
        for (name, m) in [
            ("rhyme_bonus", self.rhyme_bonus),
            ("onset_bonus", self.onset_bonus),
        ] {
            if !(0.0 < m && m <= 1.0) {
                return Err(Error::Config(format!("{name} must lie in (0, 1], got {m}")));
            }
        }
        Ok(())
    }

    fn substitution(&self, a: char, b: char) -> f64 {
        if a == b {
            0.0
        } else if is_aspiration_pair(a, b) {
            self.aspiration_pair_sub
        } else if is_length_pair(a, b) {
            self.vowel_length_sub
        } else if is_wx_vowel(a) && is_wx_vowel(b) {
            self.vowel_sub
        } else {
            self.consonant_sub
        }
    }
}

fn weighted_edit_distance(
    a: &[char],
    b: &[char],
    costs: &CostModel,
    sub: impl Fn(char, char) -> f64,
) -> f64 {
    let (n, m) = (a.len(), b.len());
    let mut prev: Vec<f64> = (0..=m).map(|j| j as f64 * costs.insert_delete).collect();
    let mut curr = vec![0.0; m + 1];
    for i in 1..=n {
        curr[0] = i as f64 * costs.insert_delete;
        for j in 1..=m {
            let del = prev[j] + costs.insert_delete;
            let ins = curr[j - 1] + costs.insert_delete;
            let rep = prev[j - 1] + sub(a[i - 1], b[j - 1]);
            curr[j] = del.min(ins).min(rep);
        }
        std::mem::swap(&mut prev, &mut curr);
    }
    prev[m]
}

/// Units count as the "same sound" for the rhyme/onset bonuses when they are
/// equal or differ only in aspiration, which English does not distinguish.
fn same_sound(a: Option<&char>, b: Option<&char>) -> bool {
    match (a, b) {
        (Some(&x), Some(&y)) => x == y || is_aspiration_pair(x, y),
        _ => false,
    }
}

fn normalize_and_bonus(raw: f64, a: &[char], b: &[char], costs: &CostModel) -> f64 {
    let longest = a.len().max(b.len());
    if longest == 0 {
        return 0.0;
    }
    let mut d = raw / (costs.insert_delete * longest as f64);
    if same_sound(a.last(), b.last()) {
        d *= costs.rhyme_bonus;
    }
    if same_sound(a.first(), b.first()) {
        d *= costs.onset_bonus;
    }
    d.clamp(0.0, 1.0)
}

/// Feature-weighted normalized edit distance between two phonetic forms.
/// Symmetric, zero on identical unit sequences, always in [0, 1].
pub fn phonetic_distance(a: &PhoneticForm, b: &PhoneticForm, costs: &CostModel) -> f64 {
    let raw = weighted_edit_distance(&a.units, &b.units, costs, |x, y| costs.substitution(x, y));
    normalize_and_bonus(raw, &a.units, &b.units, costs)
}

/// Canonicalizes a roman string for orthographic comparison: lowercase,
/// vowel digraphs to their short class representative (ee to i, oo to u,
/// aa to a), y to i, w to v, q and hard c to k, then runs of a repeated
/// letter collapse to one.
pub fn orthographic_canon(s: &str) -> Vec<char> {
    let lower = s.to_lowercase();
    let chars: Vec<char> = lower.chars().collect();
    let mut mapped = Vec::with_capacity(chars.len());
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let next = chars.get(i + 1).copied();
        match (c, next) {
            ('e', Some('e')) => {
                mapped.push('i');
                i += 2;
            }
            ('o', Some('o')) => {
                mapped.push('u');
                i += 2;
            }
            ('a', Some('a')) => {
                mapped.push('a');
                i += 2;
            }
            ('y', _) => {
                mapped.push('i');
                i += 1;
            }
            ('w', _) => {
                mapped.push('v');
                i += 1;
            }
            ('q', _) => {
                mapped.push('k');
                i += 1;
            }
            ('c', Some('a' | 'o' | 'u')) => {
                mapped.push('k');
                i += 1;
            }
            _ => {
                mapped.push(c);
                i += 1;
            }
        }
    }
    let mut out: Vec<char> = Vec::with_capacity(mapped.len());
    for c in mapped {
        if out.last() != Some(&c) {
            out.push(c);
        }
    }
    out
}

/// Normalized weighted Levenshtein over canonicalized roman characters; the
/// fallback measure for words with no phonetic transcription. Spelling
/// variants inside one equivalence class ("wir"/"vir") are distance zero.
pub fn orthographic_distance(a: &str, b: &str, costs: &CostModel) -> f64 {
    let ca = orthographic_canon(a);
    let cb = orthographic_canon(b);
    let is_vowel = |c: char| matches!(c, 'a' | 'e' | 'i' | 'o' | 'u');
    let raw = weighted_edit_distance(&ca, &cb, costs, |x, y| {
        if x == y {
            0.0
        } else if is_vowel(x) && is_vowel(y) {
            costs.vowel_sub
        } else {
            costs.consonant_sub
        }
    });
    normalize_and_bonus(raw, &ca, &cb, costs)
}
