//! Report rendering: the 12-significant-digit number policy, rounded JSON,
//! CSV with a fixed header, and plain-text tables.
//!
//! Every number in an emitted report is rounded to 12 significant digits —
//! enough to compare against `1e−9` tolerances, few enough that output does
//! not depend on last-bit eigensolver noise being formatted differently on
//! other platforms. Counts stay integers; only floating-point values are
//! rounded.

use crate::error::Result;
use crate::verify::{BoundReport, Finding, SweepOutcome, SweepSummary};
use serde::Serialize;

/// Header of the bound-report CSV format, one line per evaluated bound.
pub const CSV_HEADER: &str = "graph,target,invariant,exact_direct,exact_closed,bound_id,side,\
                              value,slack,equality_expected,equality_achieved";

/// Rounds to 12 significant digits (returns `x` unchanged when zero or
/// non-finite).
pub fn round_sig12(x: f64) -> f64 {
    if x == 0.0 || !x.is_finite() {
        return x;
    }
    format!("{x:.11e}").parse().expect("scientific notation round-trips")
}

/// Formats with at most 12 significant digits, `%g`-style: fixed notation
/// for moderate magnitudes, scientific for extreme ones, trailing zeros
/// trimmed.
pub fn fmt_sig12(x: f64) -> String {
    if x == 0.0 {
        return "0".to_string();
    }
    if !x.is_finite() {
        return x.to_string();
    }
    let sci = format!("{x:.11e}");
    let (mantissa, exp) = sci.split_once('e').expect("scientific notation has an exponent");
    let exp: i32 = exp.parse().expect("exponent is an integer");
    if (-5..=11).contains(&exp) {
        let decimals = (11 - exp).max(0) as usize;
        let fixed = format!("{x:.decimals$}");
        let trimmed = fixed.trim_end_matches('0').trim_end_matches('.');
        trimmed.to_string()
    } else {
        let mantissa = mantissa.trim_end_matches('0').trim_end_matches('.');
        format!("{mantissa}e{exp}")
    }
}

fn fmt_opt(x: Option<f64>) -> String {
    x.map(fmt_sig12).unwrap_or_default()
}

/// Recursively rounds every floating-point number in a JSON tree.
fn round_json_tree(value: &mut serde_json::Value) {
    match value {
        serde_json::Value::Number(n) => {
            if n.is_f64() {
                let x = n.as_f64().expect("checked is_f64");
                if let Some(rounded) = serde_json::Number::from_f64(round_sig12(x)) {
                    *n = rounded;
                }
            }
        }
        serde_json::Value::Array(items) => items.iter_mut().for_each(round_json_tree),
        serde_json::Value::Object(map) => map.values_mut().for_each(round_json_tree),
        _ => {}
    }
}

/// Serializes any report type to JSON with every float at 12 significant
/// digits. Output is deterministic: struct fields keep declaration order
/// and maps are ordered collections.
pub fn to_rounded_json<T: Serialize>(value: &T) -> Result<String> {
    let mut tree = serde_json::to_value(value).map_err(std::io::Error::other)?;
    round_json_tree(&mut tree);
    serde_json::to_string_pretty(&tree).map_err(|e| std::io::Error::other(e).into())
}

/// Quotes a CSV field when it contains a delimiter, quote, or newline
/// (family labels contain commas).
fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n', '\r']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

/// One CSV line per evaluated bound in the report.
pub fn csv_rows(report: &BoundReport) -> Vec<String> {
    let mut lines = Vec::new();
    for row in &report.rows {
        for b in &row.bounds {
            lines.push(format!(
                "{},{},{},{},{},{},{},{},{},{},{}",
                csv_field(&report.graph),
                row.target.name(),
                row.invariant.name(),
                fmt_sig12(row.exact_direct),
                fmt_sig12(row.exact_closed),
                b.id.name(),
                b.side.name(),
                fmt_opt(b.value),
                fmt_opt(b.slack),
                b.equality_expected,
                b.equality_achieved,
            ));
        }
    }
    lines
}

/// Full CSV document (header plus every report's rows, trailing newline).
pub fn csv_document(reports: &[BoundReport]) -> String {
    let mut out = String::from(CSV_HEADER);
    out.push('\n');
    for report in reports {
        for line in csv_rows(report) {
            out.push_str(&line);
            out.push('\n');
        }
    }
    out
}

fn describe_finding(f: &Finding) -> String {
    match f {
        Finding::Violation { target, invariant, bound, slack } => format!(
            "VIOLATION  {} {} {}: slack {}",
            target.name(),
            invariant.name(),
            bound.name(),
            fmt_sig12(*slack)
        ),
        Finding::EqualityAchieved { target, invariant, bound } => format!(
            "equality   {} {} {}",
            target.name(),
            invariant.name(),
            bound.name()
        ),
        Finding::EqualityMissed { target, invariant, bound, slack } => format!(
            "eq-missed  {} {} {}: slack {}",
            target.name(),
            invariant.name(),
            bound.name(),
            fmt_sig12(*slack)
        ),
        Finding::Inapplicable { reason } => format!("inapplicable: {reason}"),
        Finding::ConsistencyFailure { target, invariant, deviation } => format!(
            "ROUTE MISMATCH  {} {}: deviation {}",
            target.name(),
            invariant.name(),
            fmt_sig12(*deviation)
        ),
    }
}

/// Plain-text rendering of one report.
pub fn report_table(report: &BoundReport) -> String {
    let mut out = format!(
        "graph {}  [{}{}]\n",
        report.graph,
        report.class.kind.name(),
        if report.class.connected { ", connected" } else { ", disconnected" }
    );
    for row in &report.rows {
        out.push_str(&format!(
            "  {} {}: exact {} (closed-form route {})\n",
            row.target.name(),
            row.invariant.name(),
            fmt_sig12(row.exact_direct),
            fmt_sig12(row.exact_closed),
        ));
        for b in &row.bounds {
            let marks = match (b.equality_expected, b.equality_achieved) {
                (true, true) => "  [tight, as expected]",
                (false, true) => "  [tight]",
                (true, false) => "  [expected tight, missed]",
                (false, false) => "",
            };
            if b.applicable {
                out.push_str(&format!(
                    "    {:<24} {:<5} {:>18}  slack {}{}\n",
                    b.id.name(),
                    b.side.name(),
                    fmt_opt(b.value),
                    fmt_opt(b.slack),
                    marks,
                ));
            } else {
                out.push_str(&format!(
                    "    {:<24} {:<5} inapplicable: {}\n",
                    b.id.name(),
                    b.side.name(),
                    b.reason.as_deref().unwrap_or("unknown"),
                ));
            }
        }
    }
    if !report.findings.is_empty() {
        out.push_str("  findings:\n");
        for f in &report.findings {
            out.push_str(&format!("    {}\n", describe_finding(f)));
        }
    }
    out
}

/// Plain-text rendering of a sweep summary.
pub fn summary_table(summary: &SweepSummary) -> String {
    let mut out = String::new();
    out.push_str(&format!(
        "graphs {}  violations {}  route-mismatches {}  map-failures {}\n",
        summary.total_graphs,
        summary.violations,
        summary.consistency_failures,
        summary.map_failures
    ));
    out.push_str(&format!(
        "equality hits {}  misses {}  inapplicable graphs {}  max map deviation {}\n",
        summary.equality_hits,
        summary.equality_misses,
        summary.inapplicable_graphs,
        fmt_sig12(summary.max_map_deviation)
    ));
    if !summary.generation_failures.is_empty() {
        out.push_str("generation failures:\n");
        for f in &summary.generation_failures {
            out.push_str(&format!("  {}: {}\n", f.spec, f.message));
        }
    }
    if !summary.slack_stats.is_empty() {
        out.push_str("slack per bound (count, min, median):\n");
        for (name, stats) in &summary.slack_stats {
            out.push_str(&format!(
                "  {:<24} {:>4}  {:>18}  {:>18}\n",
                name,
                stats.count,
                fmt_sig12(stats.min),
                fmt_sig12(stats.median)
            ));
        }
    }
    out
}

/// Plain-text rendering of a whole sweep: every report, then the summary.
pub fn sweep_table(outcome: &SweepOutcome) -> String {
    let mut out = String::new();
    for report in &outcome.reports {
        out.push_str(&report_table(report));
        out.push('\n');
    }
    out.push_str(&summary_table(&outcome.summary));
    out
}

#[cfg(test)]
// Reference decimals keep their full oracle digits even where f64 needs fewer.
#[allow(clippy::excessive_precision)]
mod tests {
    use super::*;
    use crate::family::FamilySpec;
    use crate::verify::{bound_report, DEFAULT_TOL};

    #[test]
    fn formats_twelve_significant_digits() {
        assert_eq!(fmt_sig12(0.0), "0");
        assert_eq!(fmt_sig12(6.0), "6");
        assert_eq!(fmt_sig12(9.211_102_550_927_979), "9.21110255093");
        assert_eq!(fmt_sig12(-9.211_102_550_927_979), "-9.21110255093");
        assert_eq!(fmt_sig12(0.282_899_320_652_470_37), "0.282899320652");
        assert_eq!(fmt_sig12(-4.440_892_098_500_626e-16), "-4.4408920985e-16");
        assert_eq!(fmt_sig12(1.234_567_890_123_456e15), "1.23456789012e15");
        assert_eq!(fmt_sig12(0.25), "0.25");
        assert_eq!(fmt_sig12(1e-9), "1e-9");
        assert_eq!(fmt_sig12(1e-5), "0.00001");
        assert_eq!(fmt_sig12(123_456.0), "123456");
    }

    #[test]
    fn rounding_is_idempotent_and_preserves_order() {
        for x in [9.211_102_550_927_979, -1.0 / 3.0, 2f64.sqrt(), 1e-300, -7.25e100] {
            let once = round_sig12(x);
            assert_eq!(round_sig12(once), once);
            assert!((once - x).abs() <= x.abs() * 1e-11);
        }
    }

    #[test]
    fn csv_has_fixed_header_and_quotes_labels() {
        let g = FamilySpec::Complete { n: 3 }.generate().unwrap();
        let rep = bound_report(&g, "random_regular:n=12,r=3,seed=1", DEFAULT_TOL).unwrap();
        let doc = csv_document(&[rep]);
        let mut lines = doc.lines();
        assert_eq!(lines.next().unwrap(), CSV_HEADER);
        let first = lines.next().unwrap();
        assert!(first.starts_with("\"random_regular:n=12,r=3,seed=1\",base,lel,"));
        // 2 base + 6 + 2 + 6 + 2 derived bound rows.
        assert_eq!(doc.lines().count(), 1 + 18);
        assert!(doc.ends_with('\n'));
    }

    #[test]
    fn csv_encodes_booleans_and_values() {
        let g = FamilySpec::Complete { n: 3 }.generate().unwrap();
        let rep = bound_report(&g, "k3", DEFAULT_TOL).unwrap();
        let doc = csv_document(&[rep]);
        let line = doc
            .lines()
            .find(|l| l.contains(",r_lel_upper,"))
            .expect("r_lel_upper row present");
        assert_eq!(line.split(',').count(), 11);
        assert!(line.contains("9.21110255093"));
        assert!(line.ends_with("true,true"));
    }

    #[test]
    fn json_is_rounded_but_integers_stay_integers() {
        let g = FamilySpec::Complete { n: 3 }.generate().unwrap();
        let rep = bound_report(&g, "k3", DEFAULT_TOL).unwrap();
        let text = to_rounded_json(&rep).unwrap();
        assert!(text.contains("9.21110255093"), "{text}");
        assert!(!text.contains("9.211102550927979"));
        assert!(text.contains("\"r\": 2"));
        // Every report float must carry at most 12 significant digits.
        let tree: serde_json::Value = serde_json::from_str(&text).unwrap();
        fn check(v: &serde_json::Value) {
            match v {
                serde_json::Value::Number(n) if n.is_f64() => {
                    let x = n.as_f64().unwrap();
                    assert_eq!(round_sig12(x), x, "not rounded: {x}");
                }
                serde_json::Value::Array(xs) => xs.iter().for_each(check),
                serde_json::Value::Object(m) => m.values().for_each(check),
                _ => {}
            }
        }
        check(&tree);
    }

    #[test]
    fn tables_render_rows_findings_and_summary() {
        let g = FamilySpec::Complete { n: 3 }.generate().unwrap();
        let rep = bound_report(&g, "k3", DEFAULT_TOL).unwrap();
        let table = report_table(&rep);
        assert!(table.contains("graph k3  [regular(2), connected]"));
        assert!(table.contains("r_graph lel: exact 9.21110255093"));
        assert!(table.contains("[tight, as expected]"));
        assert!(table.contains("findings:"));

        let outcome =
            crate::verify::sweep(&[FamilySpec::Complete { n: 3 }], DEFAULT_TOL).unwrap();
        let text = sweep_table(&outcome);
        assert!(text.contains("graphs 1  violations 0"));
        assert!(text.contains("slack per bound"));
        assert!(text.contains("base_lel_lower"));
    }
}
