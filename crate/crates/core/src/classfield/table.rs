//! The tabulated points, elements and sextics, checked row by row.

use std::path::Path;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Signed;
use serde::Deserialize;

use super::{kappa_element, sqrt_ext_minpoly, KappaReport};
use crate::arith::{exact_cbrt, perfect_square_root, IntPoly, Rat};
use crate::error::{Error, Result};
use crate::mordell::MordellCurve;

const BUILTIN: &str = include_str!("../../data/table1.json");

/// One tabulated point: `x = x_num/x_den` on `y² = x³ + k`, with printed
/// element `alpha_a + alpha_b_coeff·ω` in the field generated by `∛m`.
#[derive(Clone, Debug, PartialEq, Eq, Deserialize)]
pub struct TableRow {
    /// The field as printed in the table.
    pub label: String,
    /// Generator of the field the row is computed in.
    pub m: String,
    pub k: String,
    pub x_num: String,
    pub x_den: String,
    pub alpha_a: String,
    pub alpha_b_coeff: String,
    /// Power of `∛label` the printed element uses; `∛m = (∛label)^power`.
    pub omega_power: u32,
    /// Ascending coefficients of the printed sextic(s), if any.
    #[serde(default)]
    pub expected_sextics: Vec<Vec<String>>,
    #[serde(default)]
    pub note: String,
}

#[derive(Clone, Debug, Deserialize)]
pub struct Table1 {
    pub version: u32,
    pub rows: Vec<TableRow>,
}

impl Table1 {
    pub fn builtin() -> Table1 {
        Table1::parse(BUILTIN).expect("built-in table parses")
    }

    pub fn parse(json: &str) -> Result<Table1> {
        serde_json::from_str(json).map_err(|e| Error::TableData(e.to_string()))
    }

    pub fn load(path: &Path) -> Result<Table1> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::TableData(format!("{}: {e}", path.display())))?;
        Table1::parse(&text)
    }
}

/// Outcome of checking one row.
#[derive(Clone, Debug)]
pub struct TableRowReport {
    pub row: TableRow,
    pub x: Option<Rat>,
    pub on_curve: bool,
    pub alpha_match: bool,
    pub norm_square: bool,
    /// `e` even, `a ≡ 1 (mod 4)` and `α > 0` at the real embedding.
    pub conditions_ok: bool,
    /// `None` when the row prints no sextic.
    pub sextic_match: Option<bool>,
    pub report: Option<KappaReport>,
    /// Recomputed sextic, for rows that print one.
    pub sextic: Option<IntPoly>,
    /// Ways the row departs from the literal sufficient conditions.
    pub deviations: Vec<String>,
    pub error: Option<String>,
}

impl TableRowReport {
    pub fn pass(&self) -> bool {
        self.error.is_none()
            && self.on_curve
            && self.alpha_match
            && self.norm_square
            && self.conditions_ok
            && self.sextic_match != Some(false)
    }
}

#[derive(Clone, Debug)]
pub struct Table1Report {
    pub rows: Vec<TableRowReport>,
}

impl Table1Report {
    pub fn all_pass(&self) -> bool {
        self.rows.iter().all(TableRowReport::pass)
    }
}

/// Checks the built-in table.
pub fn table1_verify(effort_bound: u64) -> Table1Report {
    table1_verify_rows(&Table1::builtin().rows, effort_bound)
}

/// Checks each row; failures become report entries, never errors.
pub fn table1_verify_rows(rows: &[TableRow], effort_bound: u64) -> Table1Report {
    Table1Report {
        rows: rows.iter().map(|r| verify_row(r, effort_bound)).collect(),
    }
}

fn int(field: &str, s: &str) -> Result<BigInt> {
    s.trim()
        .parse()
        .map_err(|_| Error::TableData(format!("{field}: {s:?} is not an integer")))
}

fn verify_row(row: &TableRow, effort_bound: u64) -> TableRowReport {
    let mut out = TableRowReport {
        row: row.clone(),
        x: None,
        on_curve: false,
        alpha_match: false,
        norm_square: false,
        conditions_ok: false,
        sextic_match: None,
        report: None,
        sextic: None,
        deviations: Vec::new(),
        error: None,
    };
    if let Err(e) = check_row(row, effort_bound, &mut out) {
        out.error = Some(format!("{}: {e}", e.name()));
    }
    out
}

fn check_row(row: &TableRow, effort_bound: u64, out: &mut TableRowReport) -> Result<()> {
    let m = int("m", &row.m)?;
    let k = int("k", &row.k)?;
    let label = int("label", &row.label)?;
    let x_den = int("x_den", &row.x_den)?;
    let x = Rat::checked_new(int("x_num", &row.x_num)?, x_den)
        .ok_or_else(|| Error::TableData("x_den is zero".into()))?;
    out.x = Some(x.clone());

    if label.pow(row.omega_power) != m {
        out.deviations.push(format!(
            "printed generator (cbrt {label})^{} differs from cbrt {m}",
            row.omega_power
        ));
    }

    // k = -m b^3 fixes the twist scale.
    let ratio = Rat::from_int(-k.clone()) / Rat::from_int(m.clone());
    let b = ratio
        .to_integer()
        .and_then(|r| exact_cbrt(&r))
        .ok_or_else(|| Error::TableData(format!("k = {k} is not -m b^3 for m = {m}")))?;

    let curve = MordellCurve::new(k.clone())?;
    let Some(y) = perfect_square_root(&(x.cube() + Rat::from_int(k))) else {
        return Ok(());
    };
    out.on_curve = true;
    let p = curve.point(x, y)?;

    let report = kappa_element(&m, &b, &p, effort_bound)?;
    let printed = report.field.element(
        Rat::from_int(int("alpha_a", &row.alpha_a)?),
        Rat::from_int(int("alpha_b_coeff", &row.alpha_b_coeff)?),
        Rat::zero(),
    );
    out.alpha_match = printed == report.alpha;
    out.norm_square = report.norm_sqrt.is_some();
    out.conditions_ok = report.two_divides_e
        && report.a.mod_floor(&BigInt::from(4)) == BigInt::from(1)
        && report.alpha_positive;

    if !report.eligible_mod9 {
        out.deviations.push(format!("m = {m} is 0 or ±1 mod 9"));
    }
    if !report.gcd_ab_ok {
        out.deviations
            .push(format!("gcd(a, b) = gcd({}, {b}) ≠ 1", report.a));
    }
    if report.a.is_negative() {
        out.deviations.push(format!("a = {} is negative", report.a));
    }
    if report.already_square == Some(true) {
        out.deviations
            .push("the point is twice a rational point".into());
    }

    if !row.expected_sextics.is_empty() {
        let computed = sqrt_ext_minpoly(&report, effort_bound)?;
        let mut all = true;
        for coeffs in &row.expected_sextics {
            let expected = IntPoly::new(
                coeffs
                    .iter()
                    .map(|c| int("expected_sextics", c))
                    .collect::<Result<_>>()?,
            );
            all &= expected == computed;
        }
        out.sextic_match = Some(all);
        out.sextic = Some(computed);
    }
    out.report = Some(report);
    Ok(())
}
