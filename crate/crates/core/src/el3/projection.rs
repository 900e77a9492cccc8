//! Projections, rejections and reflections in El3.

use super::axes::axis_decompose_with;
use super::blades::{LineEl3, PlaneEl3, PointEl3};
use crate::blade::{self, homogeneous_grade, ReflectDirection};
use crate::error::{Error, Result};
use crate::multivector::Multivector;
use crate::space::Space;
use crate::EPSILON;

fn check_space(b: &Multivector) -> Result<()> {
    if b.space() != Space::El3 {
        return Err(Error::WrongSpace { expected: Space::El3, found: b.space() });
    }
    Ok(())
}

/// `(B·a)a⁻¹` for a plane, point or line `B`.
pub fn project_on_plane(b: &Multivector, a: &PlaneEl3) -> Result<Multivector> {
    check_space(b)?;
    blade::project(b, a.as_multivector())
}

/// `(B∧a)a⁻¹`.
pub fn reject_by_plane(b: &Multivector, a: &PlaneEl3) -> Result<Multivector> {
    check_space(b)?;
    blade::reject(b, a.as_multivector())
}

/// `(B·P)P⁻¹`.
pub fn project_on_point(b: &Multivector, p: &PointEl3) -> Result<Multivector> {
    check_space(b)?;
    blade::project(b, p.as_multivector())
}

/// Rejection by a point: `(a∧P)P⁻¹` for planes and `(B×P)P⁻¹` for lines and
/// points.
pub fn reject_by_point(b: &Multivector, p: &PointEl3) -> Result<Multivector> {
    check_space(b)?;
    let pm = *p.as_multivector();
    let inv = pm.inverse_blade()?;
    let k = homogeneous_grade(b)?;
    let inner = match k {
        1 => *b ^ pm,
        2 | 3 => b.commutator(&pm)?,
        found => return Err(Error::UnsupportedGrade { grade: found }),
    };
    Ok((inner * inv).grade(k))
}

/// `(B·Λ)Λ⁻¹` for planes and points. Lines have two projections; use
/// [`project_line_on_line`].
pub fn project_on_line(b: &Multivector, l: &LineEl3) -> Result<Multivector> {
    check_space(b)?;
    let k = homogeneous_grade(b)?;
    if k != 1 && k != 3 {
        return Err(Error::UnsupportedGrade { grade: k });
    }
    blade::project(b, l.as_multivector())
}

/// `(a∧Λ)Λ⁻¹` for planes and `(P×Λ)Λ⁻¹` for points.
pub fn reject_by_line(b: &Multivector, l: &LineEl3) -> Result<Multivector> {
    check_space(b)?;
    let lm = *l.as_multivector();
    let inv = lm.inverse_blade()?;
    let k = homogeneous_grade(b)?;
    let inner = match k {
        1 => *b ^ lm,
        3 => b.commutator(&lm)?,
        found => return Err(Error::UnsupportedGrade { grade: found }),
    };
    Ok((inner * inv).grade(k))
}

/// Which axis of `Φ×Λ` a line projection absorbs.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum LineProjectionKind {
    /// Absorbs the larger axis `C₁`.
    First,
    /// Absorbs the smaller axis `C₂`.
    Second,
}

/// The axes `(C₁, C₂)` of `Φ×Λ`.
fn commutator_axes(f: &Multivector, l: &Multivector, tol: f64) -> Result<(Multivector, Multivector)> {
    let c = f.commutator(l)?.grade(2);
    if c.max_abs() <= tol * f.max_abs() * l.max_abs() {
        return Ok((Multivector::zero(Space::El3), Multivector::zero(Space::El3)));
    }
    let d = axis_decompose_with(&c, tol)?;
    if d.degenerate {
        return Err(Error::DegenerateAxes);
    }
    Ok((d.larger, d.smaller))
}

/// Projection of the line `Φ` on the line `Λ`: `(Φ·Λ + C)Λ⁻¹` with `C` one
/// axis of `Φ×Λ`. Fails with `DegenerateAxes` when `Φ×Λ` is a Clifford
/// bivector and the axes are not unique.
///
/// The result is a line, or zero when `Φ = Λ` and `kind` is `Second`.
pub fn project_line_on_line(f: &LineEl3, l: &LineEl3, kind: LineProjectionKind) -> Result<Multivector> {
    let fm = *f.as_multivector();
    let lm = *l.as_multivector();
    let inv = lm.inverse_blade()?;
    let (c1, c2) = commutator_axes(&fm, &lm, EPSILON)?;
    let c = match kind {
        LineProjectionKind::First => c1,
        LineProjectionKind::Second => c2,
    };
    Ok((((fm | lm) + c) * inv).grade(2))
}

/// Rejection of the line `Φ` by the line `Λ`: `(C + Φ∧Λ)Λ⁻¹`, using the axis
/// the matching projection does not. `First` pairs with `C₂`. Zero when
/// `Φ = Λ`.
pub fn reject_line_by_line(f: &LineEl3, l: &LineEl3, kind: LineProjectionKind) -> Result<Multivector> {
    let fm = *f.as_multivector();
    let lm = *l.as_multivector();
    let inv = lm.inverse_blade()?;
    let (c1, c2) = commutator_axes(&fm, &lm, EPSILON)?;
    let c = match kind {
        LineProjectionKind::First => c2,
        LineProjectionKind::Second => c1,
    };
    Ok(((c + (fm ^ lm)) * inv).grade(2))
}

/// Reflection of `B` in `A` for any pair of blades.
pub fn reflect(b: &Multivector, a: &Multivector, direction: ReflectDirection) -> Result<Multivector> {
    check_space(b)?;
    blade::reflect(b, a, direction)
}

/// `(Λ·P)∧(Λ∨P)`, the line through `P` meeting `Λ` at a right angle.
pub fn line_perpendicular_through_point(l: &LineEl3, p: &PointEl3) -> Result<LineEl3> {
    let lm = *l.as_multivector();
    let pm = *p.as_multivector();
    let out = (lm | pm) ^ (lm & pm);
    if out.raw_norm() <= EPSILON * lm.raw_norm() * lm.raw_norm() * pm.raw_norm() * pm.raw_norm() {
        return Err(Error::DegeneratePolar);
    }
    LineEl3::from_multivector(out)
}
