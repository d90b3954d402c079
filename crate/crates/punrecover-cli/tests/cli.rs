//! End-to-end tests of the binary against the bundled data.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn data_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../../data")
}

fn punrecover() -> Command {
    Command::new(env!("CARGO_BIN_EXE_punrecover"))
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

/// One shared training run for the whole test binary.
fn shared_config() -> &'static Path {
    use std::sync::OnceLock;
    static SHARED: OnceLock<(tempfile::TempDir, PathBuf)> = OnceLock::new();
    let (_dir, config) = SHARED.get_or_init(|| {
        let dir = tempfile::tempdir().unwrap();
        let config = setup_models(dir.path());
        (dir, config)
    });
    config
}

/// Writes a config that reuses the bundled resources but points the model
/// paths into `dir`, then trains both models there.
fn setup_models(dir: &Path) -> PathBuf {
    let data = data_dir().canonicalize().unwrap();
    let config_path = dir.join("test.conf");
    let body = format!(
        "english_lexicon={data}/lexicon/english_words.txt\n\
         hindi_lexicon={data}/lexicon/hindi_roman_devanagari.tsv\n\
         ne_list={data}/lexicon/named_entities.txt\n\
         pron_dict={data}/cmudict/en_in.dict\n\
         phoneme_map={data}/phoneme_map/cmu_to_wx.tsv\n\
         english_lm={dir}/english.lm\n\
         hindi_lm={dir}/hindi.lm\n",
        data = data.display(),
        dir = dir.display(),
    );
    fs::write(&config_path, body).unwrap();

    for (language, corpus, out) in [
        ("english", "corpora/english.txt", "english.lm"),
        ("hindi", "corpora/hindi.txt", "hindi.lm"),
    ] {
        let status = punrecover()
            .args([
                "train-lm",
                "--corpus",
                data.join(corpus).to_str().unwrap(),
                "--language",
                language,
                "--out",
                dir.join(out).to_str().unwrap(),
            ])
            .status()
            .unwrap();
        assert!(status.success(), "train-lm {language} failed");
    }
    config_path
}

#[test]
fn recover_grand_salaam_reports_slam() {
    let config = shared_config().to_path_buf();
    let out = punrecover()
        .args([
            "--config",
            config.to_str().unwrap(),
            "recover",
            "Grand Salaam",
        ])
        .output()
        .unwrap();
    assert!(out.status.success());
    let text = stdout(&out);
    let top = text
        .lines()
        .find(|l| l.trim_start().starts_with("1."))
        .expect("top hypothesis line");
    assert!(top.contains("slam"), "top line: {top}");
}

#[test]
fn recover_doodh_morning_reports_good() {
    let config = shared_config().to_path_buf();
    let out = punrecover()
        .args([
            "--config",
            config.to_str().unwrap(),
            "recover",
            "Doodh Morning!",
        ])
        .output()
        .unwrap();
    assert!(out.status.success());
    let top = stdout(&out)
        .lines()
        .find(|l| l.trim_start().starts_with("1."))
        .expect("top hypothesis line")
        .to_string();
    assert!(top.contains("good"), "top line: {top}");
}

#[test]
fn recover_empty_input_succeeds() {
    let config = shared_config().to_path_buf();
    let out = punrecover()
        .args(["--config", config.to_str().unwrap(), "recover", ""])
        .output()
        .unwrap();
    assert!(out.status.success());
    assert!(stdout(&out).contains("(none)"));
}

#[test]
fn recover_json_is_byte_identical_across_runs() {
    let config = shared_config().to_path_buf();
    let run = || {
        let out = punrecover()
            .args([
                "--config",
                config.to_str().unwrap(),
                "--json",
                "recover",
                "Phir bhi zeal hai Hindustani",
            ])
            .output()
            .unwrap();
        assert!(out.status.success());
        out.stdout
    };
    assert_eq!(run(), run());
}

#[test]
fn evaluate_bundled_gold_set() {
    let config = shared_config().to_path_buf();
    let out = punrecover()
        .args([
            "--config",
            config.to_str().unwrap(),
            "--json",
            "evaluate",
            "--gold",
            data_dir()
                .join("gold/paper_examples.jsonl")
                .to_str()
                .unwrap(),
        ])
        .output()
        .unwrap();
    assert!(out.status.success());
    let report: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(report["total"], 8);
    assert_eq!(report["skipped"], 2);
    assert!(report["recovered_topn"].as_u64().unwrap() >= 4);
}

#[test]
fn evaluate_skips_intra_word_items() {
    let config = shared_config().to_path_buf();
    let out = punrecover()
        .args([
            "--config",
            config.to_str().unwrap(),
            "evaluate",
            "--gold",
            data_dir()
                .join("gold/paper_examples.jsonl")
                .to_str()
                .unwrap(),
        ])
        .output()
        .unwrap();
    assert!(out.status.success());
    let text = stdout(&out);
    let pun3 = text.lines().find(|l| l.starts_with("pun3")).unwrap();
    assert!(pun3.contains("skipped"));
}

#[test]
fn build_lexicon_writes_deterministic_files() {
    let dir = tempfile::tempdir().unwrap();
    let corpus = dir.path().join("mini.txt");
    fs::write(
        &corpus,
        "the cat sat\nthe dog ran to Delhi\nshe saw Delhi again\n",
    )
    .unwrap();
    let run = |out_dir: &Path| {
        let status = punrecover()
            .args([
                "build-lexicon",
                "--corpus",
                corpus.to_str().unwrap(),
                "--out-dir",
                out_dir.to_str().unwrap(),
                "--min-count",
                "1",
            ])
            .status()
            .unwrap();
        assert!(status.success());
        (
            fs::read(out_dir.join("english_words.txt")).unwrap(),
            fs::read(out_dir.join("named_entities.txt")).unwrap(),
        )
    };
    let first = run(&dir.path().join("a"));
    let second = run(&dir.path().join("b"));
    assert_eq!(first, second);
    let words = String::from_utf8(first.0).unwrap();
    assert!(words.lines().any(|w| w == "cat"));
    let nes = String::from_utf8(first.1).unwrap();
    assert!(nes.lines().any(|w| w == "delhi"));
}

#[test]
fn train_lm_rejects_bad_language_and_missing_corpus() {
    let dir = tempfile::tempdir().unwrap();
    let out = punrecover()
        .args([
            "train-lm",
            "--corpus",
            data_dir().join("corpora/english.txt").to_str().unwrap(),
            "--language",
            "klingon",
            "--out",
            dir.path().join("x.lm").to_str().unwrap(),
        ])
        .output()
        .unwrap();
    assert!(!out.status.success());

    let missing = dir.path().join("nope.txt");
    let out = punrecover()
        .args([
            "train-lm",
            "--corpus",
            missing.to_str().unwrap(),
            "--language",
            "english",
            "--out",
            dir.path().join("x.lm").to_str().unwrap(),
        ])
        .output()
        .unwrap();
    assert!(!out.status.success());
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(
        err.contains("nope.txt"),
        "stderr should name the path: {err}"
    );
}

#[test]
fn missing_model_file_names_the_path() {
    let dir = tempfile::tempdir().unwrap();
    let data = data_dir().canonicalize().unwrap();
    let config = dir.path().join("broken.conf");
    fs::write(
        &config,
        format!(
            "english_lexicon={data}/lexicon/english_words.txt\n\
             hindi_lexicon={data}/lexicon/hindi_roman_devanagari.tsv\n\
             ne_list={data}/lexicon/named_entities.txt\n\
             pron_dict={data}/cmudict/en_in.dict\n\
             phoneme_map={data}/phoneme_map/cmu_to_wx.tsv\n\
             english_lm={dir}/absent.lm\n\
             hindi_lm={dir}/absent2.lm\n",
            data = data.display(),
            dir = dir.path().display(),
        ),
    )
    .unwrap();
    let out = punrecover()
        .args([
            "--config",
            config.to_str().unwrap(),
            "recover",
            "Grand Salaam",
        ])
        .output()
        .unwrap();
    assert!(!out.status.success());
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("absent.lm"), "stderr: {err}");
}
