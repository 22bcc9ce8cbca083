//! Benchmark report as canonical JSON or an aligned text table.

use serde_json::{json, Map, Value};
use sprel_core::eval::BenchReport;
use sprel_core::extract::BetweenSides;
use sprel_core::tore::{BiasProfile, OppositePair};
use sprel_core::RelationKind;

fn between_sides_str(b: BetweenSides) -> &'static str {
    match b {
        BetweenSides::Either => "either",
        BetweenSides::Ordered => "ordered",
    }
}

/// Keys are sorted, so equal reports serialize to equal bytes.
pub fn report_json(report: &BenchReport) -> Value {
    let per_kind: Map<String, Value> = report
        .per_kind
        .iter()
        .map(|(k, s)| {
            (
                k.as_str().to_owned(),
                json!({"clauses": s.clauses, "satisfied": s.satisfied, "soft_accuracy": s.soft_accuracy}),
            )
        })
        .collect();
    let sides: Map<String, Value> = report
        .side_accuracy
        .iter()
        .map(|(k, v)| (k.as_str().to_owned(), json!(v)))
        .collect();
    let mut profile = BiasProfile::new();
    for (pair, acc) in report.bias_table() {
        profile.set(pair, acc);
    }
    json!({
        "records": report.records,
        "simple_records": report.simple_records,
        "strict_accuracy": report.strict_accuracy,
        "per_kind": per_kind,
        "side_accuracy": sides,
        "bias_table": crate::profile::profile_to_json(&profile),
        "config": {
            "tau": report.tau,
            "min_score": report.min_score,
            "between_sides": between_sides_str(report.between_sides),
            "seed": report.seed,
        },
    })
}

fn table(out: &mut String, header: &[&str], rows: &[Vec<String>]) {
    let mut widths: Vec<usize> = header.iter().map(|h| h.len()).collect();
    for row in rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.len());
        }
    }
    let mut line = |cells: &mut dyn Iterator<Item = &str>| {
        let mut s = String::new();
        for (i, (cell, w)) in cells.zip(&widths).enumerate() {
            if i == 0 {
                s.push_str(&format!("{cell:<w$}"));
            } else {
                s.push_str(&format!("  {cell:>w$}"));
            }
        }
        out.push_str(s.trim_end());
        out.push('\n');
    };
    line(&mut header.iter().copied());
    for row in rows {
        line(&mut row.iter().map(String::as_str));
    }
}

fn fixed(v: f64) -> String {
    format!("{v:.4}")
}

pub fn report_text(report: &BenchReport) -> String {
    let mut out = format!(
        "records {} (simple {}, complex {})\nstrict accuracy {}\n\n",
        report.records,
        report.simple_records,
        report.records - report.simple_records,
        fixed(report.strict_accuracy)
    );
    let rows: Vec<Vec<String>> = RelationKind::ALL
        .into_iter()
        .filter_map(|k| {
            let s = report.per_kind.get(&k)?;
            let side = report
                .side_accuracy
                .get(&k)
                .map_or_else(|| "-".into(), |v| fixed(*v));
            Some(vec![
                k.as_str().into(),
                s.clauses.to_string(),
                s.satisfied.to_string(),
                fixed(s.soft_accuracy),
                side,
            ])
        })
        .collect();
    table(
        &mut out,
        &["kind", "clauses", "satisfied", "soft", "side avg"],
        &rows,
    );
    let bias = report.bias_table();
    if !bias.is_empty() {
        out.push('\n');
        out.push_str(&profile_text_rows(
            bias.iter().map(|(p, a)| (*p, a.first, a.second)),
        ));
    }
    out.push_str(&format!(
        "\ntau {}  min_score {}  between {}  seed {}\n",
        report.tau,
        report.min_score,
        between_sides_str(report.between_sides),
        report.seed.map_or_else(|| "-".into(), |s| s.to_string())
    ));
    out
}

fn profile_text_rows(pairs: impl Iterator<Item = (OppositePair, f64, f64)>) -> String {
    let rows: Vec<Vec<String>> = pairs
        .map(|(pair, a, b)| {
            let (ka, kb) = pair.sides();
            let pref = if a > b {
                ka.as_str()
            } else if b > a {
                kb.as_str()
            } else {
                "-"
            };
            vec![
                pair.as_str().into(),
                format!("{} {}", ka.as_str(), fixed(a)),
                format!("{} {}", kb.as_str(), fixed(b)),
                pref.into(),
            ]
        })
        .collect();
    let mut out = String::new();
    table(&mut out, &["pair", "first", "second", "preferred"], &rows);
    out
}

pub fn profile_text(profile: &BiasProfile) -> String {
    profile_text_rows(profile.pairs().map(|(p, a)| (p, a.first, a.second)))
}
