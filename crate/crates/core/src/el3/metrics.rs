//! Distances and angles in El3.
//!
//! Every formula is evaluated as `atan2(sin-form, cos-form)` on normalised
//! inputs, which stays accurate near `0` and near `π/2`.

use super::blades::{LineEl3, PlaneEl3, PointEl3};
use crate::error::Result;
use crate::math;
use crate::EPSILON;

/// Point distance, `sin r = ‖P∨Q‖`, `cos r = |P·Q|`.
pub fn distance_pp(p: &PointEl3, q: &PointEl3) -> Result<f64> {
    let p = p.as_multivector().normalized()?;
    let q = q.as_multivector().normalized()?;
    Ok(math::atan2((p & q).raw_norm(), math::abs((p | q).scalar_part())))
}

/// Plane to point distance, `sin r = |a∨P|`, `cos r = ‖a·P‖`.
pub fn distance_plane_point(a: &PlaneEl3, p: &PointEl3) -> Result<f64> {
    let a = a.as_multivector().normalized()?;
    let p = p.as_multivector().normalized()?;
    Ok(math::atan2(math::abs((a & p).scalar_part()), (a | p).raw_norm()))
}

/// Line to point distance, `sin r = ‖Λ∨P‖`, `cos r = ‖Λ·P‖`.
pub fn distance_line_point(l: &LineEl3, p: &PointEl3) -> Result<f64> {
    let l = l.as_multivector().normalized()?;
    let p = p.as_multivector().normalized()?;
    Ok(math::atan2((l & p).raw_norm(), (l | p).raw_norm()))
}

/// Angle between planes in `[0, π]`, `cos α = a·b`.
pub fn angle_planes(a: &PlaneEl3, b: &PlaneEl3) -> Result<f64> {
    let a = a.as_multivector().normalized()?;
    let b = b.as_multivector().normalized()?;
    Ok(math::atan2((a ^ b).raw_norm(), (a | b).scalar_part()))
}

/// The decomposition `ab = cos α + Λ sin α` of two normalised planes.
///
/// Returns `cos α` and the normalised intersection line, which is `None`
/// when the planes coincide up to sign.
pub fn plane_product(a: &PlaneEl3, b: &PlaneEl3) -> Result<(f64, Option<LineEl3>)> {
    let a = a.as_multivector().normalized()?;
    let b = b.as_multivector().normalized()?;
    let prod = a * b;
    let line = prod.grade(2);
    let line = if line.raw_norm() <= EPSILON { None } else { Some(LineEl3::from_multivector(line.normalized()?)?) };
    Ok((prod.scalar_part(), line))
}

/// Angle between a line and a plane in `[0, π/2]`, `cos α = ‖a·Λ‖`,
/// `sin α = ‖a∧Λ‖`.
pub fn angle_line_plane(l: &LineEl3, a: &PlaneEl3) -> Result<f64> {
    let l = l.as_multivector().normalized()?;
    let a = a.as_multivector().normalized()?;
    Ok(math::atan2((a ^ l).raw_norm(), (a | l).raw_norm()))
}

/// How two lines sit relative to each other.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum LineRelation {
    /// `Λ∨Φ = 0`: the lines meet, and their commutator is simple.
    Intersecting,
    /// Both separations coincide; the distance is the same everywhere.
    CliffordParallel,
    Generic,
}

impl LineRelation {
    pub fn name(self) -> &'static str {
        match self {
            LineRelation::Intersecting => "intersecting",
            LineRelation::CliffordParallel => "clifford-parallel",
            LineRelation::Generic => "generic",
        }
    }
}

/// Metric data of a pair of normalised lines.
///
/// With `u = Λ·Φ` and `v = Λ∨Φ` the geometric product is
/// `ΛΦ = -cos r cos α + Λ×Φ ± I sin r sin α`. The two separations satisfy
/// `cos r₁ cos r₂ = |u|` and `sin r₁ sin r₂ = |v|`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct LineLineMetrics {
    /// Distance, equal to `r1`.
    pub r: f64,
    /// Angle in `[0, π]` from `cos α = -u / cos r`.
    pub alpha: f64,
    /// Smaller separation.
    pub r1: f64,
    /// Larger separation, the unoriented angle `min(α, π - α)`.
    pub r2: f64,
    pub u: f64,
    pub v: f64,
    /// Signed pseudoscalar coefficient of `ΛΦ`.
    pub pseudoscalar: f64,
    pub relation: LineRelation,
}

pub fn line_line_metrics(l: &LineEl3, f: &LineEl3) -> Result<LineLineMetrics> {
    line_line_metrics_with(l, f, EPSILON)
}

/// As [`line_line_metrics`] with an explicit classification tolerance.
pub fn line_line_metrics_with(l: &LineEl3, f: &LineEl3, tol: f64) -> Result<LineLineMetrics> {
    let l = l.as_multivector().normalized()?;
    let f = f.as_multivector().normalized()?;
    let product = l * f;
    let commutator = product.grade(2).raw_norm();
    Ok(metrics_from_uv((l | f).scalar_part(), (l & f).scalar_part(), product.pseudoscalar_part(), commutator, tol))
}

/// Solves `2 sin²r = 1 + v² - u² ∓ √D` for both separations.
///
/// The two roots are rewritten so that no subtraction of nearly equal
/// quantities occurs: `sin²r₁ = 2v² / (A + √D)` and
/// `cos²r₂ = 2u² / (2 - A + √D)`, with `A = 1 + v² - u²` and `D = A² - 4v²`.
/// For Clifford parallels the roots merge and `√D` carries only rounding
/// noise. The common separation then comes from `cos 2r = |u| - |v|` and
/// `sin 2r = √2 ‖Λ×Φ‖`, which follows from `(Λ×Φ)² = -½ sin²2r (1 ± I)`.
/// `commutator` is `‖Λ×Φ‖`.
pub(crate) fn metrics_from_uv(u: f64, v: f64, pseudoscalar: f64, commutator: f64, tol: f64) -> LineLineMetrics {
    let a = 1.0 + v * v - u * u;
    let d = f64::max(a * a - 4.0 * v * v, 0.0);
    let root = math::sqrt(d);
    let plus = a + root;
    let minus = 2.0 - a + root;
    let sin1 = if plus <= f64::MIN_POSITIVE { 0.0 } else { 2.0 * v * v / plus };
    let cos1 = 0.5 * minus;
    let sin2 = 0.5 * plus;
    let cos2 = if minus <= f64::MIN_POSITIVE { 0.0 } else { 2.0 * u * u / minus };
    let relation = if math::abs(v) <= tol {
        LineRelation::Intersecting
    } else if d <= tol {
        LineRelation::CliffordParallel
    } else {
        LineRelation::Generic
    };
    let (r1, r2) = if relation == LineRelation::CliffordParallel {
        let r = 0.5 * math::atan2(core::f64::consts::SQRT_2 * commutator, math::abs(u) - math::abs(v));
        (r, r)
    } else {
        (
            math::atan2(math::sqrt_clamped(sin1), math::sqrt_clamped(cos1)),
            math::atan2(math::sqrt_clamped(sin2), math::sqrt_clamped(cos2)),
        )
    };
    let alpha = if u <= 0.0 { r2 } else { core::f64::consts::PI - r2 };
    LineLineMetrics { r: r1, alpha, r1, r2, u, v, pseudoscalar, relation }
}
