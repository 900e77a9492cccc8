//! Spinors and the bivector exponential.

use crate::el3::axes::self_dual_split;
use crate::error::{Error, Result};
use crate::math;
use crate::multivector::Multivector;
use crate::space::Space;
use crate::EPSILON;

/// An even multivector with `S reverse(S) = 1`, acting by `S A reverse(S)`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Spinor {
    value: Multivector,
}

impl Spinor {
    pub fn identity(space: Space) -> Self {
        Spinor { value: Multivector::scalar(space, 1.0) }
    }

    /// Validates evenness and the unit reverse norm.
    pub fn new(value: Multivector) -> Result<Self> {
        Self::new_with(value, EPSILON)
    }

    pub fn new_with(value: Multivector, tol: f64) -> Result<Self> {
        let scale = value.max_abs().max(1.0);
        if (value - value.even()).max_abs() > tol * scale {
            return Err(Error::NotASpinor);
        }
        let one = Multivector::scalar(value.space(), 1.0);
        if (value * value.reverse()).max_abs_diff(&one) > tol {
            return Err(Error::NotASpinor);
        }
        Ok(Spinor { value: value.even() })
    }

    /// Even versor rescaled to unit reverse norm. Fails when
    /// `S reverse(S)` is not a positive scalar.
    pub fn normalize(value: Multivector) -> Result<Self> {
        let even = value.even();
        let p = even * even.reverse();
        let s = p.scalar_part();
        if s <= EPSILON * EPSILON || (p - Multivector::scalar(p.space(), s)).max_abs() > EPSILON * s {
            return Err(Error::NotASpinor);
        }
        Ok(Spinor { value: even / math::sqrt(s) })
    }

    #[inline]
    pub fn value(&self) -> &Multivector {
        &self.value
    }

    #[inline]
    pub fn space(&self) -> Space {
        self.value.space()
    }

    /// The inverse motion.
    pub fn reverse(&self) -> Self {
        Spinor { value: self.value.reverse() }
    }

    /// `self * other`: apply `other` first, then `self`.
    pub fn compose(&self, other: &Spinor) -> Result<Spinor> {
        Ok(Spinor { value: self.value.geometric_product(&other.value)? })
    }

    /// `S A reverse(S)`, keeping only the grades present in `A`.
    pub fn apply(&self, a: &Multivector) -> Result<Multivector> {
        let raw = self.value.geometric_product(a)?.geometric_product(&self.value.reverse())?;
        let mut out = Multivector::zero(a.space());
        for k in 0..=a.space().dim() as u32 {
            if a.grade_max_abs(k) > 0.0 {
                out += raw.grade(k);
            }
        }
        Ok(out)
    }
}

/// `e^B` for a simple bivector, `B² = -θ²`.
pub(crate) fn exp_simple(b: &Multivector) -> Multivector {
    let theta = b.raw_norm();
    if theta < 1e-300 {
        return *b + 1.0;
    }
    let (s, c) = math::sin_cos(theta);
    *b * (s / theta) + c
}

/// Exponential of a grade-2 element.
///
/// In El1 and El2 every bivector is simple. In El3 the bivector is split into
/// its self-dual and anti-self-dual parts `P₊X₊ + P₋X₋`, with
/// `P± = ½(1 ± I)` and `X±` origin lines. The two parts commute and `P±` are
/// complementary idempotents, so `e^B = P₊e^{X₊} + P₋e^{X₋}`. This is exact
/// also for Clifford bivectors, where one part vanishes.
pub fn exp_bivector(b: &Multivector) -> Result<Spinor> {
    if (b.grade(2) - *b).max_abs() > EPSILON * b.max_abs().max(1.0) {
        return Err(Error::WrongGrade { expected: 2, found: b.blade_grade() });
    }
    let b = b.grade(2);
    let value = match b.space() {
        Space::El1 | Space::El2 => exp_simple(&b),
        Space::El3 => {
            let (xp, xm) = self_dual_split(&b);
            let i = Multivector::pseudoscalar(Space::El3);
            let pp = (i + 1.0) * 0.5;
            let pm = (-i + 1.0) * 0.5;
            pp * exp_simple(&xp) + pm * exp_simple(&xm)
        }
    };
    Ok(Spinor { value })
}
