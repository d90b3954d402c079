//! Independent reference implementations used to cross-check the library.
//!
//! Everything here is deliberately naive: plain loops over recounted data,
//! no sharing with the code under test.

#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet};

pub const BOS: &str = "<s>";
pub const EOS: &str = "</s>";
pub const UNK: &str = "<unk>";

/// A brute-force interpolated Kneser-Ney reference. Counts are recomputed
/// from the raw corpus on every call.
pub struct KnOracle {
    sentences: Vec<Vec<String>>,
    discount: f64,
    min_count: u64,
}

impl KnOracle {
    pub fn new<I, S>(lines: I, discount: f64, min_count: u64) -> KnOracle
    where
        I: IntoIterator<Item = S>,
        S: AsRef<str>,
    {
        let sentences = lines
            .into_iter()
            .map(|l| {
                l.as_ref()
                    .split_whitespace()
                    .map(|w| w.to_lowercase())
                    .collect::<Vec<_>>()
            })
            .filter(|s| !s.is_empty())
            .collect();
        KnOracle {
            sentences,
            discount,
            min_count,
        }
    }

    fn padded(&self) -> Vec<Vec<String>> {
        let mut raw: BTreeMap<String, u64> = BTreeMap::new();
        for s in &self.sentences {
            for w in s {
                *raw.entry(w.clone()).or_insert(0) += 1;
            }
        }
        let mut out = Vec::new();
        for s in &self.sentences {
            let mut padded = vec![BOS.to_string()];
            for w in s {
                if raw[w] < self.min_count {
                    padded.push(UNK.to_string());
                } else {
                    padded.push(w.clone());
                }
            }
            padded.push(EOS.to_string());
            out.push(padded);
        }
        out
    }

    pub fn vocab(&self) -> BTreeSet<String> {
        let mut vocab = BTreeSet::new();
        for s in self.padded() {
            for w in s {
                vocab.insert(w);
            }
        }
        vocab.insert(UNK.to_string());
        vocab
    }

    /// P(w | prev), naive loops everywhere.
    pub fn prob(&self, prev: &str, w: &str) -> f64 {
        let vocab = self.vocab();
        let prev = if vocab.contains(prev) { prev } else { UNK };
        let w = if vocab.contains(w) { w } else { UNK };

        let padded = self.padded();
        let mut bigrams: Vec<(String, String)> = Vec::new();
        for s in &padded {
            for i in 0..s.len() - 1 {
                bigrams.push((s[i].clone(), s[i + 1].clone()));
            }
        }

        let mut pair_count = 0u64;
        let mut ctx_count = 0u64;
        for (a, b) in &bigrams {
            if a == prev {
                ctx_count += 1;
                if b == w {
                    pair_count += 1;
                }
            }
        }

        let mut types: BTreeSet<(String, String)> = BTreeSet::new();
        for p in &bigrams {
            types.insert(p.clone());
        }
        let total_types = types.len() as f64;
        let mut continuation = 0u64;
        for (_a, b) in &types {
            if b == w {
                continuation += 1;
            }
        }
        let pcont = if total_types == 0.0 {
            0.0
        } else {
            continuation as f64 / total_types
        };

        if ctx_count == 0 {
            return pcont;
        }
        let mut follower_types = BTreeSet::new();
        for (a, b) in &types {
            if a == prev {
                follower_types.insert(b.clone());
            }
        }
        let d = self.discount;
        let discounted = (pair_count as f64 - d).max(0.0) / ctx_count as f64;
        let lambda = d * follower_types.len() as f64 / ctx_count as f64;
        discounted + lambda * pcont
    }
}

/// Exhaustive minimum-cost edit script search over unit sequences, with the
/// same class costs the library uses but computed by recursion instead of a
/// DP table.
pub struct EditOracle {
    pub vowel_sub: f64,
    pub consonant_sub: f64,
    pub aspiration_pair_sub: f64,
    pub vowel_length_sub: f64,
    pub insert_delete: f64,
    pub rhyme_bonus: f64,
    pub onset_bonus: f64,
}

impl EditOracle {
    fn is_vowel(c: char) -> bool {
        matches!(
            c,
            'a' | 'A' | 'i' | 'I' | 'u' | 'U' | 'q' | 'e' | 'E' | 'o' | 'O'
        )
    }

    fn is_length_pair(a: char, b: char) -> bool {
        matches!(
            (a, b),
            ('a', 'A') | ('A', 'a') | ('i', 'I') | ('I', 'i') | ('u', 'U') | ('U', 'u')
        )
    }

    fn is_aspiration_pair(a: char, b: char) -> bool {
        let pairs = [
            ('k', 'K'),
            ('g', 'G'),
            ('c', 'C'),
            ('j', 'J'),
            ('t', 'T'),
            ('d', 'D'),
            ('w', 'W'),
            ('x', 'X'),
            ('p', 'P'),
            ('b', 'B'),
        ];
        pairs.contains(&(a, b)) || pairs.contains(&(b, a))
    }

    fn sub_cost(&self, a: char, b: char) -> f64 {
        if a == b {
            0.0
        } else if Self::is_aspiration_pair(a, b) {
            self.aspiration_pair_sub
        } else if Self::is_length_pair(a, b) {
            self.vowel_length_sub
        } else if Self::is_vowel(a) && Self::is_vowel(b) {
            self.vowel_sub
        } else {
            self.consonant_sub
        }
    }

    fn search(&self, a: &[char], b: &[char]) -> f64 {
        if a.is_empty() {
            return b.len() as f64 * self.insert_delete;
        }
        if b.is_empty() {
            return a.len() as f64 * self.insert_delete;
        }
        let replace = self.sub_cost(a[0], b[0]) + self.search(&a[1..], &b[1..]);
        let delete = self.insert_delete + self.search(&a[1..], b);
        let insert = self.insert_delete + self.search(a, &b[1..]);
        replace.min(delete).min(insert)
    }

    fn same_sound(a: Option<&char>, b: Option<&char>) -> bool {
        match (a, b) {
            (Some(&x), Some(&y)) => x == y || Self::is_aspiration_pair(x, y),
            _ => false,
        }
    }

    /// Normalized distance with the same rhyme/onset bonuses as the library.
    pub fn distance(&self, a: &[char], b: &[char]) -> f64 {
        let longest = a.len().max(b.len());
        if longest == 0 {
            return 0.0;
        }
        let mut d = self.search(a, b) / (self.insert_delete * longest as f64);
        if Self::same_sound(a.last(), b.last()) {
            d *= self.rhyme_bonus;
        }
        if Self::same_sound(a.first(), b.first()) {
            d *= self.onset_bonus;
        }
        d.clamp(0.0, 1.0)
    }
}

/// Deterministic xorshift generator so tests need no RNG dependency wiring.
pub struct XorShift(pub u64);

impl XorShift {
    pub fn next_u64(&mut self) -> u64 {
        let mut x = self.0;
        x ^= x << 13;
        x ^= x >> 7;
        x ^= x << 17;
        self.0 = x;
        x
    }

    pub fn below(&mut self, bound: usize) -> usize {
        (self.next_u64() % bound as u64) as usize
    }
}
