//! Stable machine-readable renderings of pipeline outputs.
//!
//! The JSON here is byte-reproducible: fixed key order, floats rounded to
//! six decimals, and no map types with nondeterministic iteration.

use serde_json::{json, Value};

use crate::evaluation::EvalReport;
use crate::recovery::RecoveryResult;

pub fn round6(x: f64) -> f64 {
    (x * 1e6).round() / 1e6
}

pub fn recovery_to_json(result: &RecoveryResult) -> Value {
    let tagged: Vec<Value> = result
        .tagged
        .iter()
        .map(|t| {
            json!({
                "index": t.token.index,
                "surface": t.token.surface,
                "norm": t.token.norm,
                "tag": t.tag.as_str(),
            })
        })
        .collect();
    let candidates: Vec<Value> = result
        .candidates
        .iter()
        .map(|c| {
            json!({
                "index": c.index,
                "reasons": c.reasons.iter().map(|r| format!("{r:?}")).collect::<Vec<_>>(),
                "analyses": c.analyses.iter().map(|a| format!("{a:?}")).collect::<Vec<_>>(),
            })
        })
        .collect();
    let hypotheses: Vec<Value> = result
        .hypotheses
        .iter()
        .map(|h| {
            json!({
                "pun_index": h.pun_index,
                "pun_word": h.pun_word,
                "target_word": h.target_word,
                "target_language": h.target_language.as_str(),
                "side": format!("{:?}", h.side),
                "lm_log_prob": round6(h.lm_log_prob),
                "distance": round6(h.distance),
                "score": round6(h.score),
            })
        })
        .collect();
    json!({
        "input": result.input,
        "tagged": tagged,
        "candidates": candidates,
        "hypotheses": hypotheses,
        "classification": format!("{:?}", result.classification),
    })
}

pub fn eval_to_json(report: &EvalReport) -> Value {
    let items: Vec<Value> = report
        .per_item
        .iter()
        .map(|item| {
            json!({
                "id": item.id,
                "matched": item.matched,
                "rank": item.rank,
                "lenient_rank": item.lenient_rank,
                "failure_class": item.failure_class.map(|c| format!("{c:?}")),
                "skipped": item.skipped,
            })
        })
        .collect();
    json!({
        "total": report.total,
        "recovered_top1": report.recovered_top1,
        "recovered_topn": report.recovered_topn,
        "accuracy_top1": round6(report.accuracy_top1),
        "accuracy_topn": round6(report.accuracy_topn),
        "lenient_topn": report.lenient_topn,
        "skipped": report.skipped,
        "per_item": items,
    })
}
