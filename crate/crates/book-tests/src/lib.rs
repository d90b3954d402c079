//! Compiles every code block in the mdbook guide as a doctest, so
//! `cargo test -p book-tests` keeps the book in sync with the library.
//! mdbook itself cannot run examples against external crates; including the
//! chapters as doc comments hands exactly that job to rustdoc. One module
//! per chapter keeps failure output traceable to its file.

#[doc = include_str!("../../../book/src/introduction.md")]
pub mod introduction {}

#[doc = include_str!("../../../book/src/tokenization-and-tagging.md")]
pub mod tokenization_and_tagging {}

#[doc = include_str!("../../../book/src/bigram-models.md")]
pub mod bigram_models {}

#[doc = include_str!("../../../book/src/phonetic-matching.md")]
pub mod phonetic_matching {}

#[doc = include_str!("../../../book/src/recovery-pipeline.md")]
pub mod recovery_pipeline {}

#[doc = include_str!("../../../book/src/evaluation.md")]
pub mod evaluation {}

#[doc = include_str!("../../../book/src/cli.md")]
pub mod cli {}

#[doc = include_str!("../../../book/src/model-file-format.md")]
pub mod model_file_format {}
