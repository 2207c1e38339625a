//! Machine-readable output: the JSON document envelope, CSV rows and a
//! plain-text table format.
//!
//! Rationals are written as `{"num": "...", "den": "..."}` with decimal
//! strings, plus `"exact_decimal"` when the denominator is 1. Object keys
//! keep insertion order, so equal inputs give byte-identical output.

use num_bigint::BigInt;
use num_traits::One;
use serde::{Deserialize, Serialize};
use serde_json::{json, Map, Value};

use crate::analysis::{ScanReport, Violation};
use crate::ansatz::{AnsatzFit, EntryComparison, EntryStatus};
use crate::extract::ExtractionReport;
use crate::invariants::InvariantTable;
use crate::knot::TorusKnot;
use crate::poly::ExactPoly;
use crate::rational::{to_fraction_string, Rational};
use crate::verify::SuiteReport;

pub const SCHEMA_VERSION: &str = "1.0.0";

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct OutputDocument {
    pub schema_version: String,
    pub command: Value,
    pub payload: Value,
}

impl OutputDocument {
    pub fn new(command: &str, args: Value, payload: Value) -> Self {
        let mut echo = Map::new();
        echo.insert("name".into(), Value::String(command.into()));
        echo.insert("args".into(), args);
        Self { schema_version: SCHEMA_VERSION.into(), command: Value::Object(echo), payload }
    }

    pub fn to_json(&self) -> String {
        let mut text = serde_json::to_string_pretty(self).expect("documents are always serializable");
        text.push('\n');
        text
    }

    pub fn from_json(text: &str) -> serde_json::Result<Self> {
        serde_json::from_str(text)
    }
}

pub fn rational_json(value: &Rational) -> Value {
    let mut obj = Map::new();
    obj.insert("num".into(), Value::String(value.numer().to_string()));
    obj.insert("den".into(), Value::String(value.denom().to_string()));
    if value.denom().is_one() {
        obj.insert("exact_decimal".into(), Value::String(value.numer().to_string()));
    }
    Value::Object(obj)
}

/// Inverse of [`rational_json`].
pub fn rational_from_json(value: &Value) -> Option<Rational> {
    let num: BigInt = value.get("num")?.as_str()?.parse().ok()?;
    let den: BigInt = value.get("den")?.as_str()?.parse().ok()?;
    if den == BigInt::from(0) {
        return None;
    }
    Some(Rational::new(num, den))
}

pub fn knot_json(knot: &TorusKnot) -> Value {
    json!({ "n": knot.n, "m": knot.m })
}

pub fn table_json(table: &InvariantTable) -> Value {
    let entries: Vec<Value> = table
        .entries
        .iter()
        .map(|(slot, v)| json!({ "order": slot.order, "index": slot.index, "value": rational_json(v) }))
        .collect();
    json!({ "kind": table.kind.name(), "entries": entries })
}

/// Reads back a table written by [`table_json`] as `(order, index, value)`.
pub fn table_entries_from_json(value: &Value) -> Option<Vec<(u8, u8, Rational)>> {
    value
        .get("entries")?
        .as_array()?
        .iter()
        .map(|e| {
            Some((
                e.get("order")?.as_u64()? as u8,
                e.get("index")?.as_u64()? as u8,
                rational_from_json(e.get("value")?)?,
            ))
        })
        .collect()
}

pub fn extraction_report_json(report: &ExtractionReport) -> Value {
    let orders: Vec<Value> = report
        .orders
        .iter()
        .map(|o| {
            let residuals: Vec<Value> =
                o.residuals.iter().map(|(row, r)| json!({ "row": row, "residual": rational_json(r) })).collect();
            json!({
                "order": o.order,
                "unknowns": o.unknowns,
                "equations": o.equations,
                "rank": o.rank,
                "consistent": o.consistent,
                "residuals": residuals,
            })
        })
        .collect();
    json!({ "orders": orders })
}

pub fn series_json(coefficients: &[Rational]) -> Value {
    Value::Array(
        coefficients.iter().enumerate().map(|(d, c)| json!({ "degree": d, "value": rational_json(c) })).collect(),
    )
}

fn violation_json(v: &Violation) -> Value {
    json!({ "n": v.n, "m": v.m, "id": v.id, "value": rational_json(&v.value) })
}

pub fn scan_report_json(report: &ScanReport) -> Value {
    let entries: Vec<Value> = report
        .entries
        .iter()
        .map(|e| {
            json!({
                "id": e.id,
                "checked": e.checked,
                "violations": e.violations.iter().map(violation_json).collect::<Vec<_>>(),
            })
        })
        .collect();
    json!({
        "name": report.name,
        "bound": report.bound,
        "passed": report.passed(),
        "entries": entries,
        "witnesses": report.witnesses.iter().map(violation_json).collect::<Vec<_>>(),
    })
}

pub fn suite_report_json(report: &SuiteReport) -> Value {
    let checks: Vec<Value> = report
        .checks
        .iter()
        .map(|c| json!({ "id": c.id, "checked": c.checked, "passed": c.passed(), "failures": c.failures }))
        .collect();
    json!({ "suite": report.suite.name(), "bound": report.bound, "passed": report.passed(), "checks": checks })
}

fn poly_json(p: &ExactPoly) -> Value {
    json!({
        "variable": p.variable(),
        "text": p.to_string(),
        "coefficients": p.coefficients().iter().map(rational_json).collect::<Vec<_>>(),
    })
}

pub fn ansatz_json(fit: &AnsatzFit, comparison: &[EntryComparison]) -> Value {
    let entries: Vec<Value> = comparison
        .iter()
        .map(|c| {
            let status = match c.status {
                EntryStatus::Match => "match",
                EntryStatus::TypoButMatches => "typo_but_matches",
                EntryStatus::TypoDiffers => "typo_differs",
                EntryStatus::Mismatch => "mismatch",
            };
            json!({
                "order": c.slot.order,
                "index": c.slot.index,
                "status": status,
                "printed_text": c.printed_text,
                "printed": poly_json(&c.printed),
                "fitted": poly_json(&c.fitted),
                "note": c.note,
            })
        })
        .collect();
    json!({ "family": fit.family.name(), "entries": entries })
}

/// CSV with one row per table entry: `kind,order,index,value`.
pub fn tables_csv(tables: &[&InvariantTable]) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(["kind", "order", "index", "value"]).expect("in-memory write");
    for t in tables {
        for (slot, v) in &t.entries {
            w.write_record([t.kind.name(), &slot.order.to_string(), &slot.index.to_string(), &to_fraction_string(v)])
                .expect("in-memory write");
        }
    }
    into_string(w)
}

/// Generic CSV from a header and string rows.
pub fn rows_csv(header: &[&str], rows: &[Vec<String>]) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(header).expect("in-memory write");
    for row in rows {
        w.write_record(row).expect("in-memory write");
    }
    into_string(w)
}

fn into_string(w: csv::Writer<Vec<u8>>) -> String {
    String::from_utf8(w.into_inner().expect("in-memory flush")).expect("csv output is utf-8")
}

/// Left-aligned plain-text columns.
pub fn rows_table(header: &[&str], rows: &[Vec<String>]) -> String {
    let mut widths: Vec<usize> = header.iter().map(|h| h.len()).collect();
    for row in rows {
        for (i, cell) in row.iter().enumerate() {
            widths[i] = widths[i].max(cell.len());
        }
    }
    let line = |cells: Vec<&str>| {
        let padded: Vec<String> = cells.iter().zip(&widths).map(|(c, w)| format!("{c:<w$}")).collect();
        padded.join("  ").trim_end().to_string() + "\n"
    };
    let mut out = line(header.to_vec());
    for row in rows {
        out += &line(row.iter().map(String::as_str).collect());
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::closed_form::closed_form_beta;
    use crate::rational::{frac, int};

    #[test]
    fn rationals_round_trip() {
        for r in
            [int(0), int(-7), frac(3, 8), frac(-5071, 30), Rational::new(BigInt::from(10).pow(40), BigInt::from(3))]
        {
            let v = rational_json(&r);
            assert_eq!(rational_from_json(&v), Some(r.clone()));
            assert_eq!(v.get("exact_decimal").is_some(), r.is_integer());
        }
        assert_eq!(rational_json(&int(5)).to_string(), r#"{"num":"5","den":"1","exact_decimal":"5"}"#);
    }

    #[test]
    fn document_round_trip_is_lossless() {
        let t = closed_form_beta(&TorusKnot::pair(3, -5));
        let doc = OutputDocument::new("invariants", json!({"n": 3, "m": -5}), json!({ "beta": table_json(&t) }));
        let text = doc.to_json();
        let back = OutputDocument::from_json(&text).unwrap();
        assert_eq!(back, doc);
        assert_eq!(back.to_json(), text);
        let entries = table_entries_from_json(&back.payload["beta"]).unwrap();
        assert_eq!(entries.len(), 18);
        for (order, index, v) in entries {
            assert_eq!(v, t.get(order, index));
        }
        assert!(text.find("schema_version").unwrap() < text.find("command").unwrap());
    }

    #[test]
    fn csv_uses_fractions() {
        let t = closed_form_beta(&TorusKnot::pair(2, 2));
        let text = tables_csv(&[&t]);
        assert!(text.starts_with("kind,order,index,value\n"));
        assert!(text.contains("beta,2,1,3/8\n"));
    }

    #[test]
    fn plain_table_alignment() {
        let text = rows_table(&["a", "value"], &[vec!["long".into(), "1".into()]]);
        assert_eq!(text, "a     value\nlong  1\n");
    }
}
