//! Elements `α = a − b e² ω` attached to rational points, the conditions
//! under which `K(√α)/K` is unramified, and the sextic defining `√α`.
//!
//! Everything here is reported rather than enforced: ineligible inputs still
//! produce a full [`KappaReport`] with the failing flags set.

mod table;

pub use table::{
    table1_verify, table1_verify_rows, Table1, Table1Report, TableRow, TableRowReport,
};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::arith::{perfect_square_root, IntPoly, Rat};
use crate::binsq::is_square_binomial;
use crate::error::{Error, Result};
use crate::mordell::{split_square_denominator, CurvePoint, MordellCurve};
use crate::purecubic::{CubicElement, CubicField};

/// Element-level data of a point `P = (a/e², y)` on `y² = x³ − m b³`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KappaReport {
    pub field: CubicField,
    pub m: BigInt,
    pub b: BigInt,
    pub curve: MordellCurve,
    pub point: CurvePoint,
    pub a: BigInt,
    pub e: BigInt,
    /// `a − b e² ω`.
    pub alpha: CubicElement,
    /// `a³ − m b³ e⁶`.
    pub norm: Rat,
    /// `|y| e³` when the norm is a rational square.
    pub norm_sqrt: Option<Rat>,
    /// `m ≢ 0, ±1 (mod 9)`.
    pub eligible_mod9: bool,
    pub gcd_ab_ok: bool,
    pub two_divides_e: bool,
    pub a_pos_1mod4: bool,
    /// `α > 0` under the real embedding.
    pub alpha_positive: bool,
    pub claims_unramified: bool,
    /// `x⁶ − 3a x⁴ + 3a² x² − N(α)`.
    pub sextic: IntPoly,
    /// `P ∈ 2E(ℚ)`; `None` when halving ran out of effort.
    pub already_square: Option<bool>,
}

/// Builds the report for `P` on the twist `y² = x³ − m b³`.
pub fn kappa_element(
    m: &BigInt,
    b: &BigInt,
    p: &CurvePoint,
    effort_bound: u64,
) -> Result<KappaReport> {
    if b.is_zero() {
        return Err(Error::InvalidArgument(
            "twist scale b must be nonzero".into(),
        ));
    }
    let field = CubicField::with_effort(m.clone(), effort_bound)?;
    let curve = MordellCurve::twist(m, &Rat::from_int(b.clone()))?;
    if !curve.on_curve(p) {
        return Err(Error::InvalidPoint(format!("{p} is not on {curve}")));
    }
    let Some((x, y)) = p.coords() else {
        return Err(Error::InvalidPoint(
            "the point at infinity has no element".into(),
        ));
    };
    let (a, e) = split_square_denominator(x)
        .ok_or_else(|| Error::InvalidPoint(format!("x = {x} has a non-square denominator")))?;

    let e2 = &e * &e;
    let be2 = Rat::from_int(b * &e2);
    let alpha = field.binomial(Rat::from_int(a.clone()), &be2);
    let e6 = &e2 * &e2 * &e2;
    let norm = Rat::from_int(a.pow(3) - m * b.pow(3) * &e6);
    debug_assert_eq!(norm, alpha.norm());
    let norm_sqrt = perfect_square_root(&norm);
    assert_eq!(
        norm_sqrt,
        Some(y.abs() * Rat::from_int(&e2 * &e)),
        "norm is not (y e^3)^2"
    );

    let already_square = match curve.halve(p, effort_bound) {
        Ok(halves) => Some(!halves.is_empty()),
        Err(Error::EffortExceeded(_)) => None,
        Err(err) => return Err(err),
    };

    let report = KappaReport {
        sextic: sextic(&a, &norm),
        alpha_positive: alpha.real_sign() > 0,
        field,
        m: m.clone(),
        b: b.clone(),
        curve,
        point: p.clone(),
        a,
        e,
        alpha,
        norm,
        norm_sqrt,
        eligible_mod9: false,
        gcd_ab_ok: false,
        two_divides_e: false,
        a_pos_1mod4: false,
        claims_unramified: false,
        already_square,
    };
    Ok(unramified_conditions(report))
}

/// Fills the eligibility and unramifiedness flags from `m`, `a`, `b`, `e`.
pub fn unramified_conditions(mut report: KappaReport) -> KappaReport {
    let nine = BigInt::from(9);
    let m9 = report.m.mod_floor(&nine);
    report.eligible_mod9 = !(m9.is_zero() || m9.is_one() || m9 == BigInt::from(8));
    report.gcd_ab_ok = report.a.gcd(&report.b).is_one();
    report.two_divides_e = report.e.is_even();
    report.a_pos_1mod4 = report.a.is_positive() && report.a.mod_floor(&BigInt::from(4)).is_one();
    report.claims_unramified =
        report.two_divides_e && report.a_pos_1mod4 && report.eligible_mod9 && report.gcd_ab_ok;
    report
}

fn sextic(a: &BigInt, norm: &Rat) -> IntPoly {
    let n = norm.to_integer().expect("integral norm");
    let z = BigInt::zero;
    IntPoly::new(vec![-n, z(), 3 * a * a, z(), -3 * a, z(), BigInt::one()])
}

/// The polynomial of `√α` over `ℚ`.
///
/// When halving already decided squareness the answer is reused; otherwise
/// the binomial squareness test is tried, and if it too runs out of effort
/// the check is skipped and `report.already_square` stays `None`.
pub fn sqrt_ext_minpoly(report: &KappaReport, effort_bound: u64) -> Result<IntPoly> {
    let square = match report.already_square {
        Some(sq) => sq,
        None => {
            let be2 = Rat::from_int(&report.b * &report.e * &report.e);
            match is_square_binomial(
                &report.field,
                &Rat::from_int(report.a.clone()),
                &be2,
                effort_bound,
            ) {
                Ok(root) => root.is_some(),
                Err(Error::EffortExceeded(_)) => false,
                Err(err) => return Err(err),
            }
        }
    };
    if square {
        return Err(Error::AlphaIsSquare);
    }
    Ok(report.sextic.clone())
}

/// Whether no report's point is twice a rational point.
///
/// This is the necessary condition for the extensions to be pairwise
/// distinct; independence of the extensions is not checked.
pub fn kappa_pairwise_distinct(reports: &[KappaReport], effort_bound: u64) -> Result<bool> {
    if let Some(first) = reports.first() {
        if let Some(other) = reports.iter().find(|r| r.field != first.field) {
            return Err(Error::FieldMismatch(
                first.m.to_string(),
                other.m.to_string(),
            ));
        }
    }
    for r in reports {
        let square = match r.already_square {
            Some(sq) => sq,
            None => !r.curve.halve(&r.point, effort_bound)?.is_empty(),
        };
        if square {
            return Ok(false);
        }
    }
    Ok(true)
}
