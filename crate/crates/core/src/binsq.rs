//! Elements whose squares are binomials `a - bω`, and the rational points of
//! `y^2 = x^3 - m b^3` they correspond to.
//!
//! An affine point `(x, y)` maps to
//! `α = -x^2/(2y) + (bx/y)ω + (b^2/y)ω^2` with `α^2 = (x^4 + 8mb^3 x)/(4y^2) - bω`;
//! conversely `α = r + sω + tω^2` with `2rt + s^2 = 0` maps to `(bs/t, b^2/t)`.
//! Elements are determined by the point only up to sign, so everything
//! returned here is normalized to a positive real embedding.

use num_bigint::BigInt;

use crate::arith::{perfect_square_root, Rat};
use crate::error::{Error, Result};
use crate::mordell::{split_square_denominator, CurvePoint, MordellCurve};
use crate::purecubic::{CubicElement, CubicField};

/// `alpha^2 = a - b·ω`, with `point` the matching point on `curve`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BinomialSquareWitness {
    pub field: CubicField,
    pub b: Rat,
    pub alpha: CubicElement,
    pub a: Rat,
    pub curve: MordellCurve,
    pub point: CurvePoint,
}

/// Point attached to an element with binomial square.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ElementPoint {
    pub point: CurvePoint,
    /// `None` for rational elements, whose squares have no `ω` term.
    pub b: Option<Rat>,
    pub a: Rat,
    pub curve: Option<MordellCurve>,
}

/// Builds the element of an affine point on `y^2 = x^3 - m b^3`.
pub fn elem_from_point(
    field: &CubicField,
    b: &Rat,
    p: &CurvePoint,
) -> Result<BinomialSquareWitness> {
    if b.is_zero() {
        return Err(Error::InvalidArgument(
            "twist scale b must be nonzero".into(),
        ));
    }
    let curve = MordellCurve::twist(field.m(), b)?;
    if !curve.on_curve(p) {
        return Err(Error::InvalidPoint(format!("{p} is not on {curve}")));
    }
    let Some((x, y)) = p.coords() else {
        return Err(Error::InvalidPoint(
            "the point at infinity maps to 1".into(),
        ));
    };
    // y = 0 would make m b^3 a cube.
    assert!(!y.is_zero(), "2-torsion on a twist of a non-cube");

    let two = Rat::from(2);
    let mb3 = Rat::from_int(field.m().clone()) * b.cube();
    let alpha = field.element(-(x.square() / (&two * y)), b * x / y, b.square() / y);
    let a = (x.pow(4) + Rat::from(8) * &mb3 * x) / (Rat::from(4) * y.square());
    let square = alpha.square();
    assert_eq!(
        square,
        field.binomial(a.clone(), b),
        "square identity failed"
    );
    Ok(BinomialSquareWitness {
        field: field.clone(),
        b: b.clone(),
        alpha,
        a,
        curve,
        point: p.clone(),
    })
}

/// Reads off the point of an element with `2rt + s^2 = 0`.
pub fn point_from_elem(alpha: &CubicElement) -> Result<ElementPoint> {
    let (r, s, t) = (&alpha.r, &alpha.s, &alpha.t);
    if alpha.is_zero() {
        return Err(Error::ZeroElement);
    }
    let eq1 = Rat::from(2) * r * t + s.square();
    if !eq1.is_zero() {
        return Err(Error::NotBinomial(format!(
            "2rt + s^2 = {eq1} for {alpha}, so its square has an ω^2 term"
        )));
    }
    let square = alpha.square();
    if t.is_zero() {
        // Then s = 0 too: α is rational, the identity class.
        return Ok(ElementPoint {
            point: CurvePoint::infinity(),
            b: None,
            a: square.r,
            curve: None,
        });
    }
    let b = -&square.s;
    debug_assert!(!b.is_zero());
    let curve = MordellCurve::twist(alpha.field().m(), &b)?;
    let point = curve.point(&b * s / t, b.square() / t)?;
    Ok(ElementPoint {
        point,
        b: Some(b),
        a: square.r,
        curve: Some(curve),
    })
}

/// Intermediate quantities of the closed-form star product.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StarTerms {
    pub s_minus: Rat,
    pub s_plus: Rat,
    pub t_minus: Rat,
    pub t_plus: Rat,
    pub sigma: Rat,
    pub denominator: Rat,
    pub s3: Rat,
    pub t3: Rat,
    pub r3: Rat,
}

/// Closed-form star product of two elements with squares `a_j - ω`
/// (coordinates `s_j, t_j`), valid when `s1/t1 != s2/t2`.
pub fn star_formula(s1: &Rat, t1: &Rat, s2: &Rat, t2: &Rat) -> Option<StarTerms> {
    if t1.is_zero() || t2.is_zero() || s1 * t2 == s2 * t1 {
        return None;
    }
    let s_minus = s1 * t2 - s2 * t1;
    let s_plus = s1 * t2 + s2 * t1;
    let t_minus = t1 - t2;
    let t_plus = t1 * t2;
    let sigma = (s2 - s1) * &t_plus - &s_plus * &t_minus;
    let denominator = t_minus.cube() * &t_plus + s_minus.square() * &sigma;
    if denominator.is_zero() {
        return None;
    }
    let s3 = (s_minus.cube() * &s_plus - &s_minus * t_minus.square() * &t_plus) / &denominator;
    let t3 = -(s_minus.cube() * &t_plus) / &denominator;
    let r3 = -(s3.square() / (Rat::from(2) * &t3));
    Some(StarTerms {
        s_minus,
        s_plus,
        t_minus,
        t_plus,
        sigma,
        denominator,
        s3,
        t3,
        r3,
    })
}

/// The closed-form terms for two elements of the same twist, expressed in the
/// basis `ω' = bω` where both squares read `a_j - ω'`.
pub fn star_terms(a1: &CubicElement, a2: &CubicElement) -> Result<Option<StarTerms>> {
    let (p1, p2) = (point_from_elem(a1)?, point_from_elem(a2)?);
    let (Some(b1), Some(b2)) = (p1.b, p2.b) else {
        return Ok(None);
    };
    if b1 != b2 {
        return Err(Error::TwistMismatch(b1.to_string(), b2.to_string()));
    }
    let b2sq = b1.square();
    Ok(star_formula(
        &(&a1.s / &b1),
        &(&a1.t / &b2sq),
        &(&a2.s / &b1),
        &(&a2.t / &b2sq),
    ))
}

/// Group law on elements with binomial squares, transported from the curve.
///
/// The chord case uses the closed formulas; identity, inverse and tangent
/// cases go through the points. The result agrees with
/// `±elem_from_point(P1 + P2)` and is returned with positive real embedding.
pub fn star(a1: &CubicElement, a2: &CubicElement) -> Result<CubicElement> {
    if a1.field() != a2.field() {
        return Err(Error::FieldMismatch(
            a1.field().m().to_string(),
            a2.field().m().to_string(),
        ));
    }
    let field = a1.field();
    let (p1, p2) = (point_from_elem(a1)?, point_from_elem(a2)?);
    let (b, curve) = match (&p1.b, &p2.b) {
        (None, None) => return Ok(field.one()),
        (None, Some(_)) => return Ok(a2.canonical()),
        (Some(_), None) => return Ok(a1.canonical()),
        (Some(b1), Some(b2)) if b1 != b2 => {
            return Err(Error::TwistMismatch(b1.to_string(), b2.to_string()))
        }
        (Some(b), Some(_)) => (b.clone(), p1.curve.clone().expect("twist curve")),
    };
    if let Some(terms) = star_terms(a1, a2)? {
        let alpha = field.element(terms.r3, &b * &terms.s3, b.square() * &terms.t3);
        return Ok(alpha.canonical());
    }
    let sum = curve.add(&p1.point, &p2.point);
    if sum.is_infinity() {
        return Ok(field.one());
    }
    Ok(elem_from_point(field, &b, &sum)?.alpha.canonical())
}

/// Decides whether `a - bω` is a square in the field and returns the root
/// with positive real embedding.
///
/// The norm `a^3 - m b^3` must be a rational square `y^2`; then `a - bω` is a
/// square exactly when `(a, ±y)` is twice a rational point of
/// `y^2 = x^3 - m b^3`. Rational `b = p/q` is first scaled by `q^2`.
pub fn is_square_binomial(
    field: &CubicField,
    a: &Rat,
    b: &Rat,
    effort_bound: u64,
) -> Result<Option<CubicElement>> {
    if a.is_zero() && b.is_zero() {
        return Err(Error::ZeroElement);
    }
    if b.is_zero() {
        return Ok(perfect_square_root(a).map(|r| field.rational(r)));
    }
    let q = Rat::from_int(b.denom().clone());
    let scaled_a = a * q.square();
    let scaled_b = b * q.square();
    let curve = MordellCurve::twist(field.m(), &scaled_b)?;
    let norm = scaled_a.cube() + Rat::from_int(curve.k().clone());
    let Some(y) = perfect_square_root(&norm) else {
        return Ok(None);
    };
    for y in [y.clone(), -&y] {
        let p = curve.point(scaled_a.clone(), y)?;
        if let Some(half) = curve.halve(&p, effort_bound)?.first() {
            let w = elem_from_point(field, &scaled_b, half)?;
            let root = w.alpha.scale(&q.recip()).canonical();
            assert_eq!(root.square(), field.binomial(a.clone(), b));
            return Ok(Some(root));
        }
    }
    Ok(None)
}

/// For `P = (r/t^2, ·)` on `y^2 = x^3 - m`, whether `r - t^2 ω` is certified
/// not to be a square: `P` has no rational half, and the binomial squareness
/// test on `r - t^2 ω` independently comes back empty.
pub fn nonsquare_certificate(
    field: &CubicField,
    p: &CurvePoint,
    effort_bound: u64,
) -> Result<bool> {
    let curve = MordellCurve::from_m(field.m())?;
    let Some(x) = p.x() else {
        return Err(Error::InvalidPoint("expected an affine point".into()));
    };
    if !curve.on_curve(p) {
        return Err(Error::InvalidPoint(format!(
            "{p} is not on y^2 = x^3 - {}",
            field.m()
        )));
    }
    let (r, t) = split_square_denominator(x)
        .ok_or_else(|| Error::InvalidPoint(format!("x = {x} has a non-square denominator")))?;
    let halving_empty = curve.halve(p, effort_bound)?.is_empty();
    let t2 = Rat::from_int(&t * &t);
    let binomial_absent =
        is_square_binomial(field, &Rat::from_int(r), &t2, effort_bound)?.is_none();
    if halving_empty != binomial_absent {
        return Err(Error::RouteDisagreement(format!(
            "halving says {}, squareness test says {} for {p}",
            if halving_empty {
                "no half"
            } else {
                "half exists"
            },
            if binomial_absent {
                "no root"
            } else {
                "root exists"
            },
        )));
    }
    Ok(halving_empty)
}

/// Integer `b` as a rational, for call sites that start from integers.
pub fn scale(b: impl Into<BigInt>) -> Rat {
    Rat::from_int(b.into())
}
