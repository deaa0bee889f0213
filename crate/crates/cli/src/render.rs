//! Text, JSON and CSV renderings. Every float is printed with 17
//! significant digits so that repeated runs are byte-identical.

use std::io::{self, Write};

use clap::ValueEnum;
use serde::Serialize;
use serde_json::value::RawValue;
use zetareg::identities::{CaseReport, GridPoint, IdentityCase, PointRecord, VerificationReport};
use zetareg::EvalResult;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

/// 17 significant digits; empty for non-finite values.
pub fn float(v: f64) -> String {
    if v.is_finite() {
        // adding 0.0 turns −0 into +0
        format!("{:.16e}", v + 0.0)
    } else {
        String::new()
    }
}

/// JSON number, or null when non-finite.
fn number(v: f64) -> Box<RawValue> {
    let text = if v.is_finite() {
        float(v)
    } else {
        "null".to_string()
    };
    RawValue::from_string(text).expect("formatted float is valid JSON")
}

fn csv_error(e: csv::Error) -> io::Error {
    io::Error::other(e)
}

fn json_line(out: &mut dyn Write, v: &impl Serialize) -> io::Result<()> {
    serde_json::to_writer_pretty(&mut *out, v)?;
    writeln!(out)
}

#[derive(Serialize)]
struct ValueJson<'a> {
    value: Box<RawValue>,
    err_estimate: Box<RawValue>,
    terms_used: usize,
    method: &'a str,
}

pub fn value(out: &mut dyn Write, format: Format, r: &EvalResult) -> io::Result<()> {
    let method = r.method.tag();
    match format {
        Format::Text => {
            writeln!(out, "value        {}", float(r.value))?;
            writeln!(out, "err_estimate {}", float(r.err_estimate))?;
            writeln!(out, "terms_used   {}", r.terms_used)?;
            writeln!(out, "method       {method}")
        }
        Format::Json => json_line(
            out,
            &ValueJson {
                value: number(r.value),
                err_estimate: number(r.err_estimate),
                terms_used: r.terms_used,
                method,
            },
        ),
        Format::Csv => {
            let mut w = csv::Writer::from_writer(out);
            w.write_record(["value", "err_estimate", "terms_used", "method"])
                .map_err(csv_error)?;
            w.write_record([
                float(r.value),
                float(r.err_estimate),
                r.terms_used.to_string(),
                method.to_string(),
            ])
            .map_err(csv_error)?;
            w.flush()
        }
    }
}

#[derive(Serialize)]
struct PointJson {
    #[serde(skip_serializing_if = "Option::is_none")]
    s: Option<Box<RawValue>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    x: Option<Box<RawValue>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    u: Option<Box<RawValue>>,
    lhs: Box<RawValue>,
    rhs: Box<RawValue>,
    residual: Box<RawValue>,
    pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    error: Option<String>,
}

#[derive(Serialize)]
struct CaseJson<'a> {
    id: &'a str,
    title: &'a str,
    tol: Box<RawValue>,
    points: Vec<PointJson>,
    max_residual: Box<RawValue>,
    pass: bool,
}

#[derive(Serialize)]
struct SummaryJson {
    cases_run: usize,
    cases_passed: usize,
    points_run: usize,
    points_passed: usize,
    max_residual: Box<RawValue>,
    pass: bool,
}

#[derive(Serialize)]
struct ReportJson<'a> {
    summary: SummaryJson,
    cases: Vec<CaseJson<'a>>,
}

fn point_json(p: &PointRecord) -> PointJson {
    PointJson {
        s: p.point.s.map(number),
        x: p.point.x.map(number),
        u: p.point.u.map(number),
        lhs: number(p.lhs),
        rhs: number(p.rhs),
        residual: number(p.residual),
        pass: p.pass,
        error: p.error.clone(),
    }
}

fn case_json(c: &CaseReport) -> CaseJson<'_> {
    CaseJson {
        id: c.id,
        title: c.title,
        tol: number(c.tol),
        points: c.points.iter().map(point_json).collect(),
        max_residual: number(c.max_residual),
        pass: c.pass,
    }
}

fn coordinates(p: &GridPoint) -> String {
    let mut parts = Vec::new();
    for (name, v) in [("s", p.s), ("x", p.x), ("u", p.u)] {
        if let Some(v) = v {
            parts.push(format!("{name}={v:.6}"));
        }
    }
    if parts.is_empty() {
        "scalar".to_string()
    } else {
        parts.join(" ")
    }
}

fn verdict(pass: bool) -> &'static str {
    if pass {
        "PASS"
    } else {
        "FAIL"
    }
}

/// The wall time is left out so that reports compare byte for byte.
pub fn report(out: &mut dyn Write, format: Format, r: &VerificationReport) -> io::Result<()> {
    let s = &r.summary;
    match format {
        Format::Json => json_line(
            out,
            &ReportJson {
                summary: SummaryJson {
                    cases_run: s.cases_run,
                    cases_passed: s.cases_passed,
                    points_run: s.points_run,
                    points_passed: s.points_passed,
                    max_residual: number(s.max_residual),
                    pass: r.all_pass(),
                },
                cases: r.cases.iter().map(case_json).collect(),
            },
        ),
        Format::Csv => {
            let mut w = csv::Writer::from_writer(out);
            w.write_record([
                "id", "s", "x", "u", "lhs", "rhs", "residual", "pass", "error",
            ])
            .map_err(csv_error)?;
            let opt = |v: Option<f64>| v.map(float).unwrap_or_default();
            for c in &r.cases {
                for p in &c.points {
                    w.write_record([
                        c.id.to_string(),
                        opt(p.point.s),
                        opt(p.point.x),
                        opt(p.point.u),
                        float(p.lhs),
                        float(p.rhs),
                        float(p.residual),
                        p.pass.to_string(),
                        p.error.clone().unwrap_or_default(),
                    ])
                    .map_err(csv_error)?;
                }
            }
            w.flush()
        }
        Format::Text => {
            for c in &r.cases {
                writeln!(
                    out,
                    "{} {:<12} {:>3} points  max residual {:.3e}  tol {:.0e}  {}",
                    verdict(c.pass),
                    c.id,
                    c.points.len(),
                    c.max_residual,
                    c.tol,
                    c.title
                )?;
                for p in c.points.iter().filter(|p| !p.pass) {
                    let why = p.error.as_deref().unwrap_or("residual above tolerance");
                    writeln!(
                        out,
                        "     at {}: lhs {} rhs {} ({why})",
                        coordinates(&p.point),
                        float(p.lhs),
                        float(p.rhs)
                    )?;
                }
            }
            writeln!(
                out,
                "{}/{} cases, {}/{} points passed; max residual {:.3e}",
                s.cases_passed, s.cases_run, s.points_passed, s.points_run, s.max_residual
            )
        }
    }
}

#[derive(Serialize)]
struct EntryJson<'a> {
    id: &'a str,
    title: &'a str,
    tol: Box<RawValue>,
    points: usize,
    notes: &'a str,
}

pub fn catalogue(out: &mut dyn Write, format: Format, cases: &[IdentityCase]) -> io::Result<()> {
    let size = |c: &IdentityCase| c.domain.points(zetareg::identities::DEFAULT_GRID).len();
    match format {
        Format::Json => {
            let entries: Vec<_> = cases
                .iter()
                .map(|c| EntryJson {
                    id: c.id,
                    title: c.title,
                    tol: number(c.tol),
                    points: size(c),
                    notes: c.notes,
                })
                .collect();
            json_line(out, &entries)
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(out);
            w.write_record(["id", "tol", "points", "title", "notes"])
                .map_err(csv_error)?;
            for c in cases {
                w.write_record([
                    c.id.to_string(),
                    float(c.tol),
                    size(c).to_string(),
                    c.title.to_string(),
                    c.notes.to_string(),
                ])
                .map_err(csv_error)?;
            }
            w.flush()
        }
        Format::Text => {
            for c in cases {
                writeln!(out, "{:<12} tol {:.0e}  {}", c.id, c.tol, c.title)?;
            }
            Ok(())
        }
    }
}
