//! Per-language bigram models with interpolated Kneser-Ney smoothing.
//!
//! Sentences are padded with `<s>` and `</s>`; training-time words below the
//! count floor are replaced by `<unk>`, and query-time OOV words map to
//! `<unk>` as well. The smoothed probability is
//!
//! ```text
//! P(w | prev) = max(c(prev, w) - D, 0) / c(prev .)
//!             + D * followers(prev) / c(prev .) * P_cont(w)
//! P_cont(w)   = continuation(w) / total_bigram_types
//! ```
//!
//! with a single fixed discount `D`. When `prev` has no context mass the
//! probability falls back to `P_cont(w)` alone. Both directions of context
//! lookup are supported: [`BigramModel::followers`] ranks words that may
//! follow a history, [`BigramModel::predecessors`] ranks histories for a
//! continuation.

use std::collections::{BTreeMap, BTreeSet};
use std::fs;
use std::io::Write;
use std::path::Path;

use crate::error::{Error, Result};
use crate::text::{contains_devanagari, contains_latin, tokenize};

pub const BOS: &str = "<s>";
pub const EOS: &str = "</s>";
pub const UNK: &str = "<unk>";

/// Which language a model was trained for.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, serde::Serialize)]
pub enum Language {
    English,
    Hindi,
}

impl Language {
    pub fn as_str(self) -> &'static str {
        match self {
            Language::English => "english",
            Language::Hindi => "hindi",
        }
    }

}

impl std::str::FromStr for Language {
    type Err = Error;

    fn from_str(s: &str) -> Result<Language> {
        match s.to_ascii_lowercase().as_str() {
            "english" | "en" => Ok(Language::English),
            "hindi" | "hi" => Ok(Language::Hindi),
            other => Err(Error::Config(format!(
                "unknown language {other:?}, expected english or hindi"
            ))),
        }
    }
}

/// Which side of the query word a context word sits on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, serde::Serialize)]
pub enum Side {
    Left,
    Right,
}

/// A word that may occur next to some history, with its ln-probability.
#[derive(Debug, Clone, PartialEq, serde::Serialize)]
pub struct ContextWord {
    pub word: String,
    pub log_prob: f64,
    pub side: Side,
}

/// Training knobs.
#[derive(Debug, Clone)]
pub struct TrainOptions {
    /// Absolute discount, in (0, 1).
    pub discount: f64,
    /// Words with corpus count below this floor become `<unk>`.
    pub min_count: u64,
}

impl Default for TrainOptions {
    fn default() -> Self {
        TrainOptions {
            discount: 0.75,
            min_count: 2,
        }
    }
}

/// Counters reported after training, for logging.
#[derive(Debug, Clone, Default)]
pub struct TrainStats {
    pub sentences: usize,
    pub skipped_lines: usize,
    pub unk_mapped_types: usize,
}

/// An immutable trained bigram model.
#[derive(Debug, Clone)]
pub struct BigramModel {
    language: Language,
    discount: f64,
    unigram_count: BTreeMap<String, u64>,
    bigram_count: BTreeMap<(String, String), u64>,
    // Everything below is derived from the counts (rebuilt on load).
    context_total: BTreeMap<String, u64>,
    follower_count: BTreeMap<String, u64>,
    continuation_count: BTreeMap<String, u64>,
    total_bigram_types: u64,
    by_first: BTreeMap<String, Vec<(String, u64)>>,
    by_second: BTreeMap<String, Vec<(String, u64)>>,
    /// Real words (no markers, no `<unk>`) ranked by continuation probability.
    pcont_ranked: Vec<(String, f64)>,
    /// Real words ranked by backoff weight lambda(w).
    lambda_ranked: Vec<(String, f64)>,
}

impl BigramModel {
    /// Trains a model from one-sentence-per-line text.
    ///
    /// Lines whose script does not match the model language are skipped with
    /// a counter in [`TrainStats`]; an entirely empty corpus is an error.
    pub fn train<I, S>(lines: I, language: Language, opts: &TrainOptions) -> Result<BigramModel>
    where
        I: IntoIterator<Item = S>,
        S: AsRef<str>,
    {
        Self::train_with_stats(lines, language, opts).map(|(m, _)| m)
    }

    pub fn train_with_stats<I, S>(
        lines: I,
        language: Language,
        opts: &TrainOptions,
    ) -> Result<(BigramModel, TrainStats)>
    where
        I: IntoIterator<Item = S>,
        S: AsRef<str>,
    {
        if !(0.0 < opts.discount && opts.discount < 1.0) {
            return Err(Error::Config(format!(
                "discount must lie in (0, 1), got {}",
                opts.discount
            )));
        }
        let mut stats = TrainStats::default();
        let mut sentences: Vec<Vec<String>> = Vec::new();
        let mut raw_counts: BTreeMap<String, u64> = BTreeMap::new();
        for line in lines {
            let line = line.as_ref();
            if line.trim().is_empty() {
                continue;
            }
            let script_mismatch = match language {
                Language::English => contains_devanagari(line),
                Language::Hindi => contains_latin(line),
            };
            if script_mismatch {
                stats.skipped_lines += 1;
                continue;
            }
            let words: Vec<String> = tokenize(line).into_iter().map(|t| t.norm).collect();
            if words.is_empty() {
                continue;
            }
            for w in &words {
                *raw_counts.entry(w.clone()).or_insert(0) += 1;
            }
            sentences.push(words);
        }
        if sentences.is_empty() {
            return Err(Error::EmptyCorpus);
        }
        stats.sentences = sentences.len();
        stats.unk_mapped_types = raw_counts.values().filter(|&&c| c < opts.min_count).count();

        let mut unigram_count: BTreeMap<String, u64> = BTreeMap::new();
        let mut bigram_count: BTreeMap<(String, String), u64> = BTreeMap::new();
        let map = |w: &String| -> String {
            if raw_counts[w] < opts.min_count {
                UNK.to_string()
            } else {
                w.clone()
            }
        };
        for words in &sentences {
            let mut padded = Vec::with_capacity(words.len() + 2);
            padded.push(BOS.to_string());
            padded.extend(words.iter().map(map));
            padded.push(EOS.to_string());
            for w in &padded {
                *unigram_count.entry(w.clone()).or_insert(0) += 1;
            }
            for pair in padded.windows(2) {
                *bigram_count
                    .entry((pair[0].clone(), pair[1].clone()))
                    .or_insert(0) += 1;
            }
        }
        unigram_count.entry(UNK.to_string()).or_insert(0);

        let model = BigramModel::from_counts(language, opts.discount, unigram_count, bigram_count);
        Ok((model, stats))
    }

    fn from_counts(
        language: Language,
        discount: f64,
        unigram_count: BTreeMap<String, u64>,
        bigram_count: BTreeMap<(String, String), u64>,
    ) -> BigramModel {
        let mut context_total: BTreeMap<String, u64> = BTreeMap::new();
        let mut follower_count: BTreeMap<String, u64> = BTreeMap::new();
        let mut continuation_count: BTreeMap<String, u64> = BTreeMap::new();
        let mut by_first: BTreeMap<String, Vec<(String, u64)>> = BTreeMap::new();
        let mut by_second: BTreeMap<String, Vec<(String, u64)>> = BTreeMap::new();
        for ((w1, w2), &c) in &bigram_count {
            *context_total.entry(w1.clone()).or_insert(0) += c;
            *follower_count.entry(w1.clone()).or_insert(0) += 1;
            *continuation_count.entry(w2.clone()).or_insert(0) += 1;
            by_first
                .entry(w1.clone())
                .or_default()
                .push((w2.clone(), c));
            by_second
                .entry(w2.clone())
                .or_default()
                .push((w1.clone(), c));
        }
        let total_bigram_types = bigram_count.len() as u64;

        let mut model = BigramModel {
            language,
            discount,
            unigram_count,
            bigram_count,
            context_total,
            follower_count,
            continuation_count,
            total_bigram_types,
            by_first,
            by_second,
            pcont_ranked: Vec::new(),
            lambda_ranked: Vec::new(),
        };

        let mut pcont: Vec<(String, f64)> = model
            .real_words()
            .map(|w| (w.to_string(), model.continuation_prob(w)))
            .collect();
        pcont.sort_by(|a, b| b.1.partial_cmp(&a.1).unwrap().then_with(|| a.0.cmp(&b.0)));
        let mut lambda: Vec<(String, f64)> = model
            .real_words()
            .map(|w| (w.to_string(), model.lambda(w)))
            .collect();
        lambda.sort_by(|a, b| b.1.partial_cmp(&a.1).unwrap().then_with(|| a.0.cmp(&b.0)));
        model.pcont_ranked = pcont;
        model.lambda_ranked = lambda;
        model
    }

    /// Vocabulary words that are neither markers nor `<unk>`.
    fn real_words(&self) -> impl Iterator<Item = &str> {
        self.unigram_count
            .keys()
            .map(String::as_str)
            .filter(|w| !matches!(*w, BOS | EOS | UNK))
    }

    pub fn language(&self) -> Language {
        self.language
    }

    pub fn discount(&self) -> f64 {
        self.discount
    }

    /// Full vocabulary including `<s>`, `</s>` and `<unk>`.
    pub fn vocab(&self) -> impl Iterator<Item = &str> {
        self.unigram_count.keys().map(String::as_str)
    }

    pub fn vocab_len(&self) -> usize {
        self.unigram_count.len()
    }

    pub fn total_bigram_types(&self) -> u64 {
        self.total_bigram_types
    }

    pub fn contains(&self, word: &str) -> bool {
        self.unigram_count.contains_key(word)
    }

    pub fn unigram_count(&self, word: &str) -> u64 {
        self.unigram_count.get(word).copied().unwrap_or(0)
    }

    pub fn bigram_count(&self, prev: &str, w: &str) -> u64 {
        self.bigram_count
            .get(&(prev.to_string(), w.to_string()))
            .copied()
            .unwrap_or(0)
    }

    pub fn has_bigram(&self, prev: &str, w: &str) -> bool {
        self.bigram_count(self.resolve(prev), self.resolve(w)) > 0
    }

    pub fn continuation_count(&self, word: &str) -> u64 {
        self.continuation_count.get(word).copied().unwrap_or(0)
    }

    pub fn follower_type_count(&self, word: &str) -> u64 {
        self.follower_count.get(word).copied().unwrap_or(0)
    }

    pub fn context_total(&self, word: &str) -> u64 {
        self.context_total.get(word).copied().unwrap_or(0)
    }

    /// Maps a word to itself if in vocabulary, `<unk>` otherwise.
    pub fn resolve<'a>(&'a self, word: &'a str) -> &'a str {
        if self.contains(word) {
            word
        } else {
            UNK
        }
    }

    fn continuation_prob(&self, w: &str) -> f64 {
        if self.total_bigram_types == 0 {
            return 0.0;
        }
        self.continuation_count(w) as f64 / self.total_bigram_types as f64
    }

    fn lambda(&self, prev: &str) -> f64 {
        let ctx = self.context_total(prev);
        if ctx == 0 {
            return 0.0;
        }
        self.discount * self.follower_type_count(prev) as f64 / ctx as f64
    }

    /// Interpolated Kneser-Ney probability `P(w | prev)`.
    ///
    /// Out-of-vocabulary arguments are first mapped to `<unk>`. A history
    /// with no context occurrences falls back to the continuation
    /// distribution alone.
    pub fn prob(&self, prev: &str, w: &str) -> f64 {
        let prev = self.resolve(prev);
        let w = self.resolve(w);
        let ctx = self.context_total(prev);
        let pcont = self.continuation_prob(w);
        if ctx == 0 {
            return pcont;
        }
        let c = self.bigram_count(prev, w) as f64;
        let discounted = (c - self.discount).max(0.0) / ctx as f64;
        discounted + self.lambda(prev) * pcont
    }

    /// The top-k words that may follow `prev`, best first. Sentence markers
    /// and `<unk>` are never returned. Ties break lexicographically.
    pub fn followers(&self, prev: &str, k: usize) -> Vec<ContextWord> {
        let prev = self.resolve(prev);
        let ctx = self.context_total(prev);
        if ctx == 0 {
            // Backoff-only: ranking equals the continuation ranking.
            return self.take_ranked(&self.pcont_ranked, &BTreeSet::new(), k, Side::Right);
        }
        let lam = self.lambda(prev);
        let mut seen: Vec<(f64, &str)> = Vec::new();
        let mut seen_words: BTreeSet<&str> = BTreeSet::new();
        if let Some(folls) = self.by_first.get(prev) {
            for (w, c) in folls {
                if matches!(w.as_str(), BOS | EOS | UNK) {
                    continue;
                }
                let p = (*c as f64 - self.discount).max(0.0) / ctx as f64
                    + lam * self.continuation_prob(w);
                seen.push((p, w));
                seen_words.insert(w);
            }
        }
        // Unseen followers score lam * P_cont(w): stream the P_cont ranking.
        let backoff: Vec<(f64, &str)> = self
            .pcont_ranked
            .iter()
            .filter(|(w, _)| !seen_words.contains(w.as_str()))
            .map(|(w, pc)| (lam * pc, w.as_str()))
            .collect();
        merge_ranked(seen, backoff, k, Side::Right)
    }

    /// The top-k histories `w` ranked by `P(next | w)`, best first. Same
    /// exclusions and tie-breaking as [`BigramModel::followers`]; scores are
    /// raw conditionals, not renormalized over `w`.
    pub fn predecessors(&self, next: &str, k: usize) -> Vec<ContextWord> {
        let next = self.resolve(next);
        let pcont = self.continuation_prob(next);
        let mut seen: Vec<(f64, &str)> = Vec::new();
        let mut seen_words: BTreeSet<&str> = BTreeSet::new();
        if let Some(preds) = self.by_second.get(next) {
            for (w, c) in preds {
                if matches!(w.as_str(), BOS | EOS | UNK) {
                    continue;
                }
                let ctx = self.context_total(w) as f64;
                let p = (*c as f64 - self.discount).max(0.0) / ctx + self.lambda(w) * pcont;
                seen.push((p, w));
                seen_words.insert(w);
            }
        }
        if pcont == 0.0 {
            // Every unseen history scores zero; zero-probability words are
            // not "words that may occur" and are dropped.
            return merge_ranked(seen, Vec::new(), k, Side::Left);
        }
        let backoff: Vec<(f64, &str)> = self
            .lambda_ranked
            .iter()
            .filter(|(w, _)| !seen_words.contains(w.as_str()))
            .map(|(w, lam)| (lam * pcont, w.as_str()))
            .collect();
        merge_ranked(seen, backoff, k, Side::Left)
    }

    fn take_ranked(
        &self,
        ranked: &[(String, f64)],
        exclude: &BTreeSet<&str>,
        k: usize,
        side: Side,
    ) -> Vec<ContextWord> {
        ranked
            .iter()
            .filter(|(w, p)| *p > 0.0 && !exclude.contains(w.as_str()))
            .take(k)
            .map(|(w, p)| ContextWord {
                word: w.clone(),
                log_prob: p.ln(),
                side,
            })
            .collect()
    }
}

/// Merges exact-scored entries with a presorted backoff stream, keeping the
/// global (score desc, word asc) order, dropping zero probabilities.
fn merge_ranked(
    mut seen: Vec<(f64, &str)>,
    backoff: Vec<(f64, &str)>,
    k: usize,
    side: Side,
) -> Vec<ContextWord> {
    seen.sort_by(|a, b| b.0.partial_cmp(&a.0).unwrap().then_with(|| a.1.cmp(b.1)));
    let mut out = Vec::with_capacity(k.min(seen.len() + backoff.len()));
    let mut si = seen.into_iter().peekable();
    let mut bi = backoff.into_iter().peekable();
    while out.len() < k {
        let pick_seen = match (si.peek(), bi.peek()) {
            (Some(s), Some(b)) => (s.0, b.1) > (b.0, s.1),
            (Some(_), None) => true,
            (None, Some(_)) => false,
            (None, None) => break,
        };
        let (p, w) = if pick_seen {
            si.next().unwrap()
        } else {
            bi.next().unwrap()
        };
        if p <= 0.0 {
            break;
        }
        out.push(ContextWord {
            word: w.to_string(),
            log_prob: p.ln(),
            side,
        });
    }
    out
}

// ---------------------------------------------------------------------------
// Binary persistence: magic, version, counts as a string table plus varint
// arrays, trailing CRC-32. Documented with a hex dump in the guide.
// ---------------------------------------------------------------------------

const MAGIC: &[u8; 4] = b"PNLM";
const FORMAT_VERSION: u8 = 1;

impl BigramModel {
    /// Serializes the model. The write is atomic: data goes to a sibling
    /// temporary file that is renamed into place.
    pub fn save(&self, path: impl AsRef<Path>) -> Result<()> {
        let path = path.as_ref();
        let mut buf: Vec<u8> = Vec::new();
        buf.extend_from_slice(MAGIC);
        buf.push(FORMAT_VERSION);
        buf.push(match self.language {
            Language::English => 0,
            Language::Hindi => 1,
        });
        buf.extend_from_slice(&self.discount.to_le_bytes());

        let words: Vec<&String> = self.unigram_count.keys().collect();
        let index: BTreeMap<&str, u64> = words
            .iter()
            .enumerate()
            .map(|(i, w)| (w.as_str(), i as u64))
            .collect();
        write_varint(&mut buf, words.len() as u64);
        for w in &words {
            write_varint(&mut buf, w.len() as u64);
            buf.extend_from_slice(w.as_bytes());
        }
        for w in &words {
            write_varint(&mut buf, self.unigram_count[w.as_str()]);
        }
        write_varint(&mut buf, self.bigram_count.len() as u64);
        for ((w1, w2), c) in &self.bigram_count {
            write_varint(&mut buf, index[w1.as_str()]);
            write_varint(&mut buf, index[w2.as_str()]);
            write_varint(&mut buf, *c);
        }
        let crc = crc32(&buf);
        buf.extend_from_slice(&crc.to_le_bytes());

        let dir = path.parent().unwrap_or_else(|| Path::new("."));
        let tmp = dir.join(format!(
            ".{}.tmp",
            path.file_name().and_then(|n| n.to_str()).unwrap_or("model")
        ));
        let mut file = fs::File::create(&tmp).map_err(|e| Error::io(&tmp, e))?;
        file.write_all(&buf).map_err(|e| Error::io(&tmp, e))?;
        file.sync_all().map_err(|e| Error::io(&tmp, e))?;
        drop(file);
        fs::rename(&tmp, path).map_err(|e| Error::io(path, e))?;
        Ok(())
    }

    /// Loads a model written by [`BigramModel::save`], verifying magic,
    /// version and checksum. Truncated or corrupt files are an error, never
    /// a silent partial model.
    pub fn load(path: impl AsRef<Path>) -> Result<BigramModel> {
        let path = path.as_ref();
        let data = fs::read(path).map_err(|e| Error::io(path, e))?;
        if data.len() < MAGIC.len() + 2 + 8 + 4 {
            return Err(Error::model(path, "file too short"));
        }
        let (body, crc_bytes) = data.split_at(data.len() - 4);
        let stored = u32::from_le_bytes(crc_bytes.try_into().unwrap());
        if crc32(body) != stored {
            return Err(Error::model(path, "checksum mismatch"));
        }
        let mut r = Reader { buf: body, pos: 0 };
        let magic = r.bytes(4, path)?;
        if magic != MAGIC {
            return Err(Error::model(path, "bad magic"));
        }
        let version = r.bytes(1, path)?[0];
        if version != FORMAT_VERSION {
            return Err(Error::model(
                path,
                format!("unsupported format version {version}"),
            ));
        }
        let language = match r.bytes(1, path)?[0] {
            0 => Language::English,
            1 => Language::Hindi,
            other => return Err(Error::model(path, format!("bad language byte {other}"))),
        };
        let discount = f64::from_le_bytes(r.bytes(8, path)?.try_into().unwrap());
        if !(0.0 < discount && discount < 1.0) {
            return Err(Error::model(path, format!("bad discount {discount}")));
        }

        let n_words = r.varint(path)? as usize;
        let mut words = Vec::with_capacity(n_words);
        for _ in 0..n_words {
            let len = r.varint(path)? as usize;
            let bytes = r.bytes(len, path)?;
            let w = std::str::from_utf8(bytes)
                .map_err(|_| Error::model(path, "invalid UTF-8 in string table"))?;
            words.push(w.to_string());
        }
        let mut unigram_count = BTreeMap::new();
        for w in &words {
            let c = r.varint(path)?;
            unigram_count.insert(w.clone(), c);
        }
        let n_bigrams = r.varint(path)? as usize;
        let mut bigram_count = BTreeMap::new();
        for _ in 0..n_bigrams {
            let i1 = r.varint(path)? as usize;
            let i2 = r.varint(path)? as usize;
            let c = r.varint(path)?;
            let w1 = words
                .get(i1)
                .ok_or_else(|| Error::model(path, "word index out of range"))?;
            let w2 = words
                .get(i2)
                .ok_or_else(|| Error::model(path, "word index out of range"))?;
            bigram_count.insert((w1.clone(), w2.clone()), c);
        }
        if r.pos != body.len() {
            return Err(Error::model(path, "trailing bytes after payload"));
        }
        Ok(BigramModel::from_counts(
            language,
            discount,
            unigram_count,
            bigram_count,
        ))
    }
}

struct Reader<'a> {
    buf: &'a [u8],
    pos: usize,
}

impl<'a> Reader<'a> {
    fn bytes(&mut self, n: usize, path: &Path) -> Result<&'a [u8]> {
        if self.pos + n > self.buf.len() {
            return Err(Error::model(path, "unexpected end of file"));
        }
        let out = &self.buf[self.pos..self.pos + n];
        self.pos += n;
        Ok(out)
    }

    fn varint(&mut self, path: &Path) -> Result<u64> {
        let mut value: u64 = 0;
        let mut shift = 0;
        loop {
            let byte = self.bytes(1, path)?[0];
            value |= u64::from(byte & 0x7F) << shift;
            if byte & 0x80 == 0 {
                return Ok(value);
            }
            shift += 7;
            if shift >= 64 {
                return Err(Error::model(path, "varint overflow"));
            }
        }
    }
}

fn write_varint(buf: &mut Vec<u8>, mut value: u64) {
    loop {
        let byte = (value & 0x7F) as u8;
        value >>= 7;
        if value == 0 {
            buf.push(byte);
            return;
        }
        buf.push(byte | 0x80);
    }
}

/// CRC-32 (IEEE, reflected), the same polynomial used by gzip.
fn crc32(data: &[u8]) -> u32 {
    let mut crc: u32 = !0;
    for &byte in data {
        crc ^= u32::from(byte);
        for _ in 0..8 {
            let mask = (crc & 1).wrapping_neg();
            crc = (crc >> 1) ^ (0xEDB8_8320 & mask);
        }
    }
    !crc
}
