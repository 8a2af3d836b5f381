//! Text and newline-delimited JSON output. Rationals are always `p/q` strings.

use binsquare::classfield::{KappaReport, TableRowReport};
use binsquare::{CubicElement, CurvePoint};
use serde_json::{json, Value};

use crate::Format;

pub struct Out {
    format: Format,
}

impl Out {
    pub fn new(format: Format) -> Self {
        Out { format }
    }

    /// Prints `text`, or `fields` tagged with the command name as one line.
    pub fn record(&mut self, command: &str, text: &str, fields: Value) {
        match self.format {
            Format::Text => println!("{text}"),
            Format::Structured => {
                let mut rec = json!({ "command": command });
                if let (Value::Object(dst), Value::Object(src)) = (&mut rec, fields) {
                    dst.extend(src);
                }
                println!("{rec}");
            }
        }
    }
}

pub fn point_json(p: &CurvePoint) -> Value {
    match p.coords() {
        None => json!("inf"),
        Some((x, y)) => json!({ "x": x.to_string(), "y": y.to_string() }),
    }
}

pub fn element_json(a: &CubicElement) -> Value {
    json!({
        "m": a.field().m().to_string(),
        "r": a.r.to_string(),
        "s": a.s.to_string(),
        "t": a.t.to_string(),
    })
}

fn opt_bool(b: Option<bool>) -> &'static str {
    match b {
        Some(true) => "yes",
        Some(false) => "no",
        None => "unknown (effort exceeded)",
    }
}

pub fn kappa_text(r: &KappaReport) -> String {
    let sqrt = r
        .norm_sqrt
        .as_ref()
        .map_or("none".into(), ToString::to_string);
    format!(
        "alpha = {}  (ω = cbrt({}))\n\
         a = {}, e = {}, b = {}\n\
         norm = {} = ({sqrt})^2\n\
         m not 0, ±1 mod 9: {}\n\
         gcd(a, b) = 1: {}\n\
         e even: {}\n\
         a > 0, a = 1 mod 4: {}\n\
         alpha > 0: {}\n\
         claims unramified: {}\n\
         P in 2E(Q): {}\n\
         sextic: {}",
        r.alpha,
        r.m,
        r.a,
        r.e,
        r.b,
        r.norm,
        r.eligible_mod9,
        r.gcd_ab_ok,
        r.two_divides_e,
        r.a_pos_1mod4,
        r.alpha_positive,
        r.claims_unramified,
        opt_bool(r.already_square),
        r.sextic,
    )
}

pub fn kappa_json(r: &KappaReport) -> Value {
    json!({
        "m": r.m.to_string(),
        "b": r.b.to_string(),
        "point": point_json(&r.point),
        "a": r.a.to_string(),
        "e": r.e.to_string(),
        "alpha": element_json(&r.alpha),
        "norm": r.norm.to_string(),
        "norm_sqrt": r.norm_sqrt.as_ref().map(ToString::to_string),
        "eligible_mod9": r.eligible_mod9,
        "gcd_ab_ok": r.gcd_ab_ok,
        "two_divides_e": r.two_divides_e,
        "a_pos_1mod4": r.a_pos_1mod4,
        "alpha_positive": r.alpha_positive,
        "claims_unramified": r.claims_unramified,
        "already_square": r.already_square,
        "sextic": r.sextic.coeffs().iter().map(ToString::to_string).collect::<Vec<_>>(),
    })
}

fn mark(ok: bool) -> &'static str {
    if ok {
        "ok"
    } else {
        "FAIL"
    }
}

pub fn row_text(row: &TableRowReport) -> String {
    let x = row.x.as_ref().map_or("?".into(), ToString::to_string);
    let alpha = row
        .report
        .as_ref()
        .map_or("?".into(), |r| r.alpha.to_string());
    let mut s = format!(
        "{} m={:<6} x={:<18} alpha={:<24} curve:{} alpha:{} norm:{} conditions:{}",
        if row.pass() { "PASS" } else { "FAIL" },
        row.row.label,
        x,
        alpha,
        mark(row.on_curve),
        mark(row.alpha_match),
        mark(row.norm_square),
        mark(row.conditions_ok),
    );
    if let (Some(ok), Some(f)) = (row.sextic_match, &row.sextic) {
        s.push_str(&format!(" sextic:{}\n    {f}", mark(ok)));
    }
    for d in &row.deviations {
        s.push_str(&format!("\n    note: {d}"));
    }
    if let Some(e) = &row.error {
        s.push_str(&format!("\n    error: {e}"));
    }
    s
}

pub fn row_json(row: &TableRowReport) -> Value {
    json!({
        "label": row.row.label,
        "m": row.row.m,
        "k": row.row.k,
        "x": row.x.as_ref().map(ToString::to_string),
        "pass": row.pass(),
        "on_curve": row.on_curve,
        "alpha_match": row.alpha_match,
        "norm_square": row.norm_square,
        "conditions_ok": row.conditions_ok,
        "sextic_match": row.sextic_match,
        "sextic": row.sextic.as_ref().map(ToString::to_string),
        "alpha": row.report.as_ref().map(|r| element_json(&r.alpha)),
        "claims_unramified": row.report.as_ref().map(|r| r.claims_unramified),
        "deviations": row.deviations,
        "error": row.error,
    })
}
