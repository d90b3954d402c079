//! Flat key=value configuration shared by the CLI subcommands.
//!
//! Relative paths are resolved against the directory containing the config
//! file, so a checked-in config works from any working directory. Every
//! parameter is range-checked against its owning module's contract.

use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};

use crate::error::{Error, Result};
use crate::langmodel::{BigramModel, TrainOptions};
use crate::lexicon::Lexicon;
use crate::phonetics::{CmuDict, CostModel, PhonemeMap};
use crate::recovery::{RecoverParams, Resources};

#[derive(Debug, Clone)]
pub struct Paths {
    pub english_lexicon: PathBuf,
    pub hindi_lexicon: PathBuf,
    pub ne_list: PathBuf,
    pub pron_dict: PathBuf,
    pub phoneme_map: PathBuf,
    pub english_lm: PathBuf,
    pub hindi_lm: PathBuf,
}

#[derive(Debug, Clone)]
pub struct Config {
    pub paths: Paths,
    pub kn_discount: f64,
    pub lm_min_count: u64,
    pub context_k: usize,
    pub top_n: usize,
    pub intra_word_threshold: f64,
    pub lm_blend_weight: f64,
    pub costs: CostModel,
}

impl Config {
    /// Parses a `key=value` config file. Unknown keys and malformed lines
    /// are errors; `#` starts a comment.
    pub fn load(path: impl AsRef<Path>) -> Result<Config> {
        let path = path.as_ref();
        let content = fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
        let base = path.parent().unwrap_or_else(|| Path::new("."));

        let mut entries: BTreeMap<String, String> = BTreeMap::new();
        for (lineno, line) in content.lines().enumerate() {
            let trimmed = line.trim();
            if trimmed.is_empty() || trimmed.starts_with('#') {
                continue;
            }
            let (key, value) = trimmed
                .split_once('=')
                .ok_or_else(|| Error::parse(path, lineno + 1, "expected `key=value`"))?;
            entries.insert(key.trim().to_string(), value.trim().to_string());
        }

        let mut take = |key: &str| entries.remove(key);
        let path_for = |key: &str, value: Option<String>| -> Result<PathBuf> {
            let raw = value.ok_or_else(|| Error::Config(format!("missing key {key}")))?;
            let p = PathBuf::from(raw);
            Ok(if p.is_absolute() { p } else { base.join(p) })
        };

        let paths = Paths {
            english_lexicon: path_for("english_lexicon", take("english_lexicon"))?,
            hindi_lexicon: path_for("hindi_lexicon", take("hindi_lexicon"))?,
            ne_list: path_for("ne_list", take("ne_list"))?,
            pron_dict: path_for("pron_dict", take("pron_dict"))?,
            phoneme_map: path_for("phoneme_map", take("phoneme_map"))?,
            english_lm: path_for("english_lm", take("english_lm"))?,
            hindi_lm: path_for("hindi_lm", take("hindi_lm"))?,
        };

        let mut float = |key: &str, default: f64| -> Result<f64> {
            match entries.remove(key) {
                None => Ok(default),
                Some(v) => v
                    .parse::<f64>()
                    .map_err(|_| Error::Config(format!("{key}: {v:?} is not a number"))),
            }
        };
        let kn_discount = float("kn_discount", 0.75)?;
        let intra_word_threshold = float("intra_word_threshold", 0.45)?;
        let lm_blend_weight = float("lm_blend_weight", 0.0)?;
        let defaults = CostModel::default();
        let costs = CostModel {
            vowel_sub: float("vowel_sub", defaults.vowel_sub)?,
            consonant_sub: float("consonant_sub", defaults.consonant_sub)?,
            aspiration_pair_sub: float("aspiration_pair_sub", defaults.aspiration_pair_sub)?,
            vowel_length_sub: float("vowel_length_sub", defaults.vowel_length_sub)?,
            insert_delete: float("insert_delete", defaults.insert_delete)?,
            rhyme_bonus: float("rhyme_bonus", defaults.rhyme_bonus)?,
            onset_bonus: float("onset_bonus", defaults.onset_bonus)?,
        };

        let mut integer = |key: &str, default: u64| -> Result<u64> {
            match entries.remove(key) {
                None => Ok(default),
                Some(v) => v
                    .parse::<u64>()
                    .map_err(|_| Error::Config(format!("{key}: {v:?} is not an integer"))),
            }
        };
        let lm_min_count = integer("lm_min_count", 2)?;
        let context_k = integer("context_k", 200)? as usize;
        let top_n = integer("top_n", 5)? as usize;

        if let Some(unknown) = entries.keys().next() {
            return Err(Error::Config(format!("unknown key {unknown:?}")));
        }

        let config = Config {
            paths,
            kn_discount,
            lm_min_count,
            context_k,
            top_n,
            intra_word_threshold,
            lm_blend_weight,
            costs,
        };
        config.validate()?;
        Ok(config)
    }

    pub fn validate(&self) -> Result<()> {
        if !(0.0 < self.kn_discount && self.kn_discount < 1.0) {
            return Err(Error::Config(format!(
                "kn_discount must lie in (0, 1), got {}",
                self.kn_discount
            )));
        }
        if self.context_k == 0 {
            return Err(Error::Config("context_k must be at least 1".into()));
        }
        if self.top_n == 0 {
            return Err(Error::Config("top_n must be at least 1".into()));
        }
        if !(0.0..=1.0).contains(&self.intra_word_threshold) {
            return Err(Error::Config(format!(
                "intra_word_threshold must lie in [0, 1], got {}",
                self.intra_word_threshold
            )));
        }
        if !(0.0..=1.0).contains(&self.lm_blend_weight) {
            return Err(Error::Config(format!(
                "lm_blend_weight must lie in [0, 1], got {}",
                self.lm_blend_weight
            )));
        }
        self.costs.validate()
    }

    pub fn train_options(&self) -> TrainOptions {
        TrainOptions {
            discount: self.kn_discount,
            min_count: self.lm_min_count,
        }
    }

    pub fn recover_params(&self) -> RecoverParams {
        RecoverParams {
            costs: self.costs.clone(),
            context_k: self.context_k,
            top_n: self.top_n,
            intra_word_threshold: self.intra_word_threshold,
            lm_blend_weight: self.lm_blend_weight,
        }
    }

    /// Loads every resource the pipeline needs, including the two trained
    /// model files.
    pub fn load_resources(&self) -> Result<Resources> {
        let lexicon = Lexicon::load(
            &self.paths.english_lexicon,
            &self.paths.hindi_lexicon,
            &self.paths.ne_list,
        )?;
        let cmudict = CmuDict::load(&self.paths.pron_dict)?;
        let phoneme_map = PhonemeMap::load(&self.paths.phoneme_map)?;
        let english_lm = BigramModel::load(&self.paths.english_lm)?;
        let hindi_lm = BigramModel::load(&self.paths.hindi_lm)?;
        Ok(Resources {
            lexicon,
            english_lm,
            hindi_lm,
            cmudict,
            phoneme_map,
        })
    }
}
