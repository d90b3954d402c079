//! `punrecover` — train resources and recover code-mixed pun targets.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand};

use punrecover::config::Config;
use punrecover::evaluation::{evaluate, load_gold};
use punrecover::langmodel::{BigramModel, Language, TrainOptions};
use punrecover::lexicon::{build_english_lexicon, BuildOptions};
use punrecover::phonetics::wx_to_roman;
use punrecover::recovery::recover;
use punrecover::report::{eval_to_json, recovery_to_json};
use punrecover::text::contains_devanagari;

#[derive(Parser)]
#[command(
    name = "punrecover",
    version,
    about = "Recovers the hidden targets of Hindi-English code-mixed puns"
)]
struct Cli {
    /// Config file (key=value); defaults to $PUNRECOVER_CONFIG.
    #[arg(long, global = true, env = "PUNRECOVER_CONFIG")]
    config: Option<PathBuf>,

    /// Emit machine-readable JSON instead of the human table.
    #[arg(long, global = true)]
    json: bool,

    /// Number of hypotheses to report.
    #[arg(long, global = true)]
    top_n: Option<usize>,

    /// Context fan-out per side.
    #[arg(long, global = true)]
    context_k: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Extract an English wordlist and NE list from a corpus.
    BuildLexicon {
        /// One sentence per line, UTF-8.
        #[arg(long)]
        corpus: PathBuf,
        /// Output directory for english_words.txt and named_entities.txt.
        #[arg(long)]
        out_dir: PathBuf,
        /// Keep words with corpus count >= this floor.
        #[arg(long, default_value_t = 2)]
        min_count: u64,
        /// Sentences a capitalized word must appear in to count as an NE.
        #[arg(long, default_value_t = 2)]
        ne_min_sentences: usize,
        /// Count sentence-initial capitals toward the NE rule.
        #[arg(long, default_value_t = false)]
        ne_count_initial: bool,
    },
    /// Train a Kneser-Ney bigram model and save it.
    TrainLm {
        #[arg(long)]
        corpus: PathBuf,
        /// english or hindi.
        #[arg(long)]
        language: String,
        #[arg(long)]
        out: PathBuf,
        /// Absolute discount in (0, 1); default from config or 0.75.
        #[arg(long)]
        discount: Option<f64>,
        /// Words below this count become `<unk>`; default from config or 2.
        #[arg(long)]
        min_count: Option<u64>,
    },
    /// Recover the target of one code-mixed text.
    Recover {
        /// The pun text, e.g. "Grand Salaam".
        text: String,
        /// Append romanizations after Devanagari output.
        #[arg(long)]
        romanize: bool,
    },
    /// Score recovery against a gold JSONL dataset.
    Evaluate {
        #[arg(long)]
        gold: PathBuf,
    },
}

fn main() {
    if let Err(err) = run() {
        eprintln!("error: {err:#}");
        std::process::exit(1);
    }
}

fn run() -> Result<()> {
    let cli = Cli::parse();
    match &cli.command {
        Command::BuildLexicon {
            corpus,
            out_dir,
            min_count,
            ne_min_sentences,
            ne_count_initial,
        } => cmd_build_lexicon(
            corpus,
            out_dir,
            *min_count,
            *ne_min_sentences,
            *ne_count_initial,
        ),
        Command::TrainLm {
            corpus,
            language,
            out,
            discount,
            min_count,
        } => cmd_train_lm(&cli, corpus, language, out, *discount, *min_count),
        Command::Recover { text, romanize } => cmd_recover(&cli, text, *romanize),
        Command::Evaluate { gold } => cmd_evaluate(&cli, gold),
    }
}

fn load_config(cli: &Cli) -> Result<Config> {
    let path = cli
        .config
        .clone()
        .context("no config: pass --config or set PUNRECOVER_CONFIG")?;
    Config::load(&path).with_context(|| format!("loading config {}", path.display()))
}

fn read_lines(path: &Path) -> Result<Vec<String>> {
    let content = fs::read_to_string(path)
        .with_context(|| format!("cannot read corpus {}", path.display()))?;
    Ok(content.lines().map(str::to_string).collect())
}

/// Writes via a temporary sibling file and an atomic rename.
fn write_atomic(path: &Path, content: &str) -> Result<()> {
    let dir = path.parent().unwrap_or_else(|| Path::new("."));
    fs::create_dir_all(dir)?;
    let tmp = dir.join(format!(
        ".{}.tmp",
        path.file_name().and_then(|n| n.to_str()).unwrap_or("out")
    ));
    let mut f = fs::File::create(&tmp)?;
    f.write_all(content.as_bytes())?;
    f.sync_all()?;
    drop(f);
    fs::rename(&tmp, path)?;
    Ok(())
}

fn cmd_build_lexicon(
    corpus: &Path,
    out_dir: &Path,
    min_count: u64,
    ne_min_sentences: usize,
    ne_count_initial: bool,
) -> Result<()> {
    let lines = read_lines(corpus)?;
    let built = build_english_lexicon(
        lines.iter(),
        &BuildOptions {
            min_word_count: min_count,
            ne_min_sentences,
            ne_count_sentence_initial: ne_count_initial,
        },
    );
    let words: Vec<&str> = built.words.iter().map(String::as_str).collect();
    let nes: Vec<&str> = built.named_entities.iter().map(String::as_str).collect();
    write_atomic(
        &out_dir.join("english_words.txt"),
        &(words.join("\n") + "\n"),
    )?;
    write_atomic(
        &out_dir.join("named_entities.txt"),
        &(nes.join("\n") + "\n"),
    )?;
    println!("wordlist: {} entries", words.len());
    println!("named entities: {} entries", nes.len());
    Ok(())
}

fn cmd_train_lm(
    cli: &Cli,
    corpus: &Path,
    language: &str,
    out: &Path,
    discount: Option<f64>,
    min_count: Option<u64>,
) -> Result<()> {
    let language: Language = language.parse()?;
    // Config is optional here: flags cover everything it would supply.
    let config = cli.config.as_ref().map(Config::load).transpose()?;
    let defaults = config
        .as_ref()
        .map(Config::train_options)
        .unwrap_or_default();
    let opts = TrainOptions {
        discount: discount.unwrap_or(defaults.discount),
        min_count: min_count.unwrap_or(defaults.min_count),
    };
    let lines = read_lines(corpus)?;
    let (model, stats) = BigramModel::train_with_stats(lines.iter(), language, &opts)
        .with_context(|| format!("training on {}", corpus.display()))?;
    if let Some(dir) = out.parent() {
        fs::create_dir_all(dir)?;
    }
    model.save(out)?;
    println!(
        "trained {} model: {} sentences, vocab {}, {} bigram types",
        language.as_str(),
        stats.sentences,
        model.vocab_len(),
        model.total_bigram_types()
    );
    if stats.skipped_lines > 0 {
        eprintln!(
            "warning: skipped {} mixed-script lines",
            stats.skipped_lines
        );
    }
    println!("saved {}", out.display());
    Ok(())
}

fn cmd_recover(cli: &Cli, text: &str, romanize: bool) -> Result<()> {
    let config = load_config(cli)?;
    let resources = config.load_resources()?;
    let mut params = config.recover_params();
    if let Some(n) = cli.top_n {
        params.top_n = n;
    }
    if let Some(k) = cli.context_k {
        params.context_k = k;
    }
    let result = recover(text, &resources, &params);

    if cli.json {
        println!(
            "{}",
            serde_json::to_string_pretty(&recovery_to_json(&result))?
        );
        return Ok(());
    }

    let disp = |w: &str| -> String {
        if romanize && contains_devanagari(w) {
            match punrecover::phonetics::devanagari_to_wx(w) {
                Ok(form) => format!("{w} ({})", wx_to_roman(&form.units)),
                Err(_) => w.to_string(),
            }
        } else {
            w.to_string()
        }
    };

    println!("input: {}", result.input);
    print!("tagged:");
    for t in &result.tagged {
        print!(" {}/{}", t.token.norm, t.tag.as_str());
    }
    println!();
    println!("candidates:");
    for c in &result.candidates {
        let reasons: Vec<String> = c.reasons.iter().map(|r| format!("{r:?}")).collect();
        println!(
            "  [{}] {}  ({})",
            c.index,
            result.tagged[c.index].token.norm,
            reasons.join(", ")
        );
    }
    println!("classification: {:?}", result.classification);
    println!("hypotheses:");
    for (rank, h) in result.hypotheses.iter().enumerate() {
        println!(
            "  {}. {} -> {}  [{} side={:?} dist={:.4} logp={:.3}]",
            rank + 1,
            h.pun_word,
            disp(&h.target_word),
            h.target_language.as_str(),
            h.side,
            h.distance,
            h.lm_log_prob,
        );
    }
    if result.hypotheses.is_empty() {
        println!("  (none)");
    }
    Ok(())
}

fn cmd_evaluate(cli: &Cli, gold: &Path) -> Result<()> {
    let config = load_config(cli)?;
    let resources = config.load_resources()?;
    let mut params = config.recover_params();
    if let Some(k) = cli.context_k {
        params.context_k = k;
    }
    let n = cli.top_n.unwrap_or(params.top_n);
    let records = load_gold(gold)?;
    if records.is_empty() {
        bail!("gold file {} has no records", gold.display());
    }
    let report = evaluate(&records, &resources, &params, n);

    if cli.json {
        println!("{}", serde_json::to_string_pretty(&eval_to_json(&report))?);
        return Ok(());
    }

    println!(
        "{:<8} {:<8} {:<6} {:<8} failure",
        "id", "matched", "rank", "lenient"
    );
    for item in &report.per_item {
        if item.skipped {
            println!("{:<8} {:<8} {:<6} {:<8} -", item.id, "skipped", "-", "-");
            continue;
        }
        println!(
            "{:<8} {:<8} {:<6} {:<8} {}",
            item.id,
            item.matched,
            item.rank.map_or("-".into(), |r| r.to_string()),
            item.lenient_rank.map_or("-".into(), |r| r.to_string()),
            item.failure_class
                .map_or("-".to_string(), |c| format!("{c:?}")),
        );
    }
    println!(
        "total {} | top-1 {} ({:.1}%) | top-{} {} ({:.1}%) | lenient {} | skipped {}",
        report.total,
        report.recovered_top1,
        100.0 * report.accuracy_top1,
        n,
        report.recovered_topn,
        100.0 * report.accuracy_topn,
        report.lenient_topn,
        report.skipped,
    );
    Ok(())
}
