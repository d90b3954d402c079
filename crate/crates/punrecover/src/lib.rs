//! Target recovery for Hindi-English code-mixed puns.
//!
//! Given a romanized ad or joke line ("Grand Salaam"), the pipeline tags
//! each token's language by dictionary lookup, proposes pun locations at
//! language boundaries and at NE/OOV/ambiguous tokens, gathers words the
//! neighboring context expects from per-language Kneser-Ney bigram models,
//! and ranks those context words by phonetic similarity to the pun word in
//! WX notation. The top-ranked context word is the recovered target
//! ("slam").
//!
//! ```
//! use punrecover::langmodel::{BigramModel, Language, TrainOptions};
//!
//! let opts = TrainOptions { discount: 0.75, min_count: 1 };
//! let lm = BigramModel::train(["a b", "a b", "a c"], Language::English, &opts)?;
//! let top = lm.followers("a", 1);
//! assert_eq!(top[0].word, "b");
//! # Ok::<(), punrecover::Error>(())
//! ```
//!
//! The full pipeline lives in [`recovery::recover`]; the mdbook guide under
//! `book/` walks through every stage with runnable examples.

pub mod config;
pub mod error;
pub mod evaluation;
pub mod langmodel;
pub mod lexicon;
pub mod phonetics;
pub mod recovery;
pub mod report;
#[cfg(test)]
pub(crate) mod testutil;
pub mod text;

pub use error::{Error, Result};
