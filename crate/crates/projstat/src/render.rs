//! Text, JSON and CSV output.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use projstat_core::identities::Check;
use projstat_core::{StatRecord, VerificationReport};
use serde::Serialize;

/// Output format shared by every subcommand.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default, clap::ValueEnum)]
pub enum Format {
    #[default]
    Table,
    Json,
    Csv,
}

/// Any JSON document this tool emits, tagged with the schema version.
#[derive(Serialize)]
pub struct Versioned<T: Serialize> {
    pub schema: u32,
    #[serde(flatten)]
    pub body: T,
}

pub const SCHEMA: u32 = 1;

pub fn to_json<T: Serialize>(body: T) -> String {
    serde_json::to_string_pretty(&Versioned { schema: SCHEMA, body }).expect("plain data serializes")
}

#[derive(Serialize)]
struct ReportList<'a> {
    reports: &'a [VerificationReport],
}

/// One row of the `(des, fmaj, col)` distribution.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct DistRow {
    pub des: u32,
    pub fmaj: u32,
    pub col: u32,
    pub count: u64,
}

#[derive(Serialize)]
struct Distribution<'a> {
    group: String,
    rows: &'a [DistRow],
}

fn join<T: ToString>(xs: &[T], sep: &str) -> String {
    xs.iter().map(ToString::to_string).collect::<Vec<_>>().join(sep)
}

fn tuple<T: ToString>(xs: &[T]) -> String {
    format!("({})", join(xs, ","))
}

fn pairs<V: std::fmt::Display>(m: &BTreeMap<String, V>, sep: &str) -> String {
    m.iter()
        .map(|(k, v)| format!("{k}{sep}{v}"))
        .collect::<Vec<_>>()
        .join(" ")
}

fn check_line(c: &Check) -> String {
    let kind = if c.gating { "gating" } else { "info" };
    let mut line = format!("  [{kind}] {}: {}", c.name, c.outcome);
    if let Some(m) = &c.first_mismatch {
        let _ = write!(line, " (at {}: {} vs {})", m.monomial, m.lhs, m.rhs);
    }
    line
}

pub fn report_table(rep: &VerificationReport) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "identity  {}", rep.identity);
    let _ = writeln!(out, "params    {}", pairs(&rep.params, "="));
    if !rep.region.is_empty() {
        let _ = writeln!(out, "region    {}", pairs(&rep.region, "<="));
    }
    let _ = writeln!(out, "count     {}", rep.count);
    if let Some(ms) = rep.millis {
        let _ = writeln!(out, "millis    {ms}");
    }
    let _ = writeln!(out, "outcome   {}", rep.outcome);
    if let Some(m) = &rep.first_mismatch {
        let _ = writeln!(out, "mismatch  {}: {} vs {}", m.monomial, m.lhs, m.rhs);
    }
    if !rep.checks.is_empty() {
        let _ = writeln!(out, "checks");
        for c in &rep.checks {
            let _ = writeln!(out, "{}", check_line(c));
        }
    }
    for n in &rep.notes {
        let _ = writeln!(out, "note      {n}");
    }
    out
}

pub fn reports(reps: &[VerificationReport], format: Format) -> String {
    match format {
        Format::Table => reps.iter().map(report_table).collect::<Vec<_>>().join("\n"),
        Format::Json if reps.len() == 1 => to_json(&reps[0]),
        Format::Json => to_json(ReportList { reports: reps }),
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record(["identity", "params", "outcome", "count", "millis", "firstMismatch"])
                .expect("in-memory write");
            for r in reps {
                let mismatch = r
                    .first_mismatch
                    .as_ref()
                    .map(|m| format!("{}: {} vs {}", m.monomial, m.lhs, m.rhs))
                    .unwrap_or_default();
                w.write_record([
                    r.identity.clone(),
                    pairs(&r.params, "="),
                    r.outcome.to_string(),
                    r.count.to_string(),
                    r.millis.map(|m| m.to_string()).unwrap_or_default(),
                    mismatch,
                ])
                .expect("in-memory write");
            }
            String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8 fields")
        }
    }
}

/// `key=value` fields, headline statistics first.
pub fn stat_line(rec: &StatRecord) -> String {
    format!(
        "des={} fdes={} col={} fmaj={} desG={} desA={} maj={} invAbs={} signAbs={} hdes={} hvec={} kvec={} lambda={}",
        rec.des,
        rec.fdes,
        rec.col,
        rec.fmaj,
        rec.des_g,
        rec.des_a,
        rec.maj,
        rec.inv_abs,
        rec.sign_abs,
        tuple(&rec.hdes),
        tuple(&rec.hvec),
        tuple(&rec.kvec),
        tuple(&rec.lambda),
    )
}

pub fn stat_record(rec: &StatRecord, format: Format) -> String {
    match format {
        Format::Table => stat_line(rec),
        Format::Json => to_json(rec),
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record([
                "des", "fdes", "col", "fmaj", "desG", "desA", "maj", "invAbs", "signAbs", "hdes", "hvec", "kvec",
                "lambda",
            ])
            .expect("in-memory write");
            w.write_record([
                rec.des.to_string(),
                rec.fdes.to_string(),
                rec.col.to_string(),
                rec.fmaj.to_string(),
                rec.des_g.to_string(),
                rec.des_a.to_string(),
                rec.maj.to_string(),
                rec.inv_abs.to_string(),
                rec.sign_abs.to_string(),
                join(&rec.hdes, " "),
                join(&rec.hvec, " "),
                join(&rec.kvec, " "),
                join(&rec.lambda, " "),
            ])
            .expect("in-memory write");
            String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8 fields")
        }
    }
}

pub fn dist_rows(dist: &BTreeMap<(u32, u32, u32), u64>) -> Vec<DistRow> {
    dist.iter()
        .map(|(&(des, fmaj, col), &count)| DistRow { des, fmaj, col, count })
        .collect()
}

pub fn distribution(group: &str, rows: &[DistRow], format: Format) -> String {
    match format {
        Format::Table => {
            let mut out = format!("{:>5} {:>5} {:>5} {:>8}\n", "des", "fmaj", "col", "count");
            for r in rows {
                let _ = writeln!(out, "{:>5} {:>5} {:>5} {:>8}", r.des, r.fmaj, r.col, r.count);
            }
            let total: u64 = rows.iter().map(|r| r.count).sum();
            let _ = writeln!(out, "total {total}");
            out
        }
        Format::Json => to_json(Distribution {
            group: group.to_string(),
            rows,
        }),
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            for r in rows {
                w.serialize(r).expect("in-memory write");
            }
            String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8 fields")
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use projstat_core::group::{make_group, parse_element};
    use projstat_core::stats;

    fn example() -> StatRecord {
        let g = make_group(6, 2, 3, 8).unwrap();
        stats::stat_record(&parse_element("[2^2,7^3,6^3,4^5,8^1,1^1,5^3,3^2]", g).unwrap())
    }

    #[test]
    fn stat_line_leads_with_headline_numbers() {
        assert!(stat_line(&example()).starts_with("des=15 fdes=30 col=6 fmaj=106 "));
    }

    #[test]
    fn json_carries_schema_and_stable_names() {
        let v: serde_json::Value = serde_json::from_str(&stat_record(&example(), Format::Json)).unwrap();
        assert_eq!(v["schema"], 1);
        for key in [
            "desG", "desA", "maj", "fmaj", "fdes", "des", "col", "invAbs", "signAbs", "hdes", "hvec", "kvec", "lambda",
        ] {
            assert!(v.get(key).is_some(), "{key}");
        }
        assert_eq!(v["fmaj"], 106);
    }

    #[test]
    fn report_json_fields() {
        let g = make_group(1, 1, 1, 3).unwrap();
        let rep = crate::timed(|| projstat_core::Verifier::new().character_fmaj(g, 1, 0)).unwrap();
        let v: serde_json::Value = serde_json::from_str(&reports(&[rep], Format::Json)).unwrap();
        for key in [
            "schema",
            "identity",
            "params",
            "region",
            "outcome",
            "firstMismatch",
            "count",
            "millis",
        ] {
            assert!(v.get(key).is_some(), "{key}");
        }
        assert_eq!(v["outcome"], "MATCH");
    }

    #[test]
    fn distribution_csv_has_header() {
        let rows = [DistRow {
            des: 0,
            fmaj: 0,
            col: 0,
            count: 1,
        }];
        assert_eq!(
            distribution("G(1,1,1,1)", &rows, Format::Csv),
            "des,fmaj,col,count\n0,0,0,1\n"
        );
    }
}
