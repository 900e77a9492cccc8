//! Axis decomposition of bivectors in El3.
//!
//! Write `P± = ½(1 ± I)`. These are complementary idempotents that commute
//! with every even element, and every bivector splits uniquely as
//! `B = P₊X₊ + P₋X₋` with `X±` lines through the origin. A line is the case
//! `‖X₊‖ = ‖X₋‖`; a Clifford bivector is the case where one of `X±` vanishes.
//!
//! With `s± = ‖X±‖` and unit directions `û, v̂`, the two axes are
//!
//! ```text
//! Λ₁ = ½(s₊ + s₋)(P₊û + P₋v̂)
//! Λ₂ = ½(s₊ - s₋)(P₊û - P₋v̂)
//! ```
//!
//! Both are simple, `Λ₂ ∝ Λ₁I`, and `‖Λ₁‖ ≥ ‖Λ₂‖`. This is the same pair the
//! quadratic `Λᵢ² = ½(Λ·Λ ∓ √((Λ·Λ)² - (Λ∨Λ)²))` produces, computed without
//! cancellation.

use super::idx::{IDEAL, ORIGIN};
use crate::error::{Error, Result};
use crate::math;
use crate::multivector::Multivector;
use crate::space::Space;
use crate::EPSILON;

/// `(X₊, X₋)` with `B = P₊X₊ + P₋X₋` for the grade-2 part of `B`.
pub(crate) fn self_dual_split(b: &Multivector) -> (Multivector, Multivector) {
    let mut origin = Multivector::zero(Space::El3);
    let mut ideal = Multivector::zero(Space::El3);
    for i in ORIGIN {
        origin += Multivector::basis(Space::El3, i, b.get(i));
    }
    for i in IDEAL {
        ideal += Multivector::basis(Space::El3, i, b.get(i));
    }
    let moved = ideal.dual_i();
    (origin + moved, origin - moved)
}

/// Two commuting, mutually perpendicular lines summing to a bivector.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct AxisDecomposition {
    /// `Λ₁`, the larger axis.
    pub larger: Multivector,
    /// `Λ₂`, zero for a simple input.
    pub smaller: Multivector,
    /// Set when the split is not unique, which happens exactly for Clifford
    /// bivectors. The returned split is then the part through the origin and
    /// the part on the plane `e0`.
    pub degenerate: bool,
}

impl AxisDecomposition {
    pub fn is_simple(&self) -> bool {
        self.smaller.is_zero_with(0.0)
    }
}

pub fn axis_decompose(b: &Multivector) -> Result<AxisDecomposition> {
    axis_decompose_with(b, EPSILON)
}

/// Axis decomposition with explicit tolerance for the simple and degenerate
/// cases, both relative to the norm of `B`.
pub fn axis_decompose_with(b: &Multivector, tol: f64) -> Result<AxisDecomposition> {
    if b.space() != Space::El3 {
        return Err(Error::WrongSpace { expected: Space::El3, found: b.space() });
    }
    if (b.grade(2) - *b).max_abs() > tol * b.max_abs() {
        return Err(Error::WrongGrade { expected: 2, found: b.blade_grade() });
    }
    let b = b.grade(2);
    if b.raw_norm() == 0.0 {
        return Err(Error::ZeroInput);
    }
    if b.plucker_residual() <= tol {
        return Ok(AxisDecomposition { larger: b, smaller: Multivector::zero(Space::El3), degenerate: false });
    }
    let (xp, xm) = self_dual_split(&b);
    let sp = xp.raw_norm();
    let sm = xm.raw_norm();
    if f64::min(sp, sm) <= tol * f64::max(sp, sm) {
        let mut origin = Multivector::zero(Space::El3);
        for i in ORIGIN {
            origin += Multivector::basis(Space::El3, i, b.get(i));
        }
        return Ok(AxisDecomposition { larger: origin, smaller: b - origin, degenerate: true });
    }
    let u = xp / sp;
    let v = xm / sm;
    let sum = (u + v) * 0.5;
    let diff = (u - v) * 0.5;
    let larger = (sum + diff.dual_i()) * (0.5 * (sp + sm));
    let smaller = (diff + sum.dual_i()) * (0.5 * (sp - sm));
    Ok(AxisDecomposition { larger, smaller, degenerate: false })
}

/// Weight of a Clifford bivector: `‖Ξ‖ / √2`, so `(I ± 1)Λ` has weight `‖Λ‖`.
pub(crate) fn clifford_weight(xi: &Multivector) -> f64 {
    xi.raw_norm() / math::sqrt(2.0)
}
