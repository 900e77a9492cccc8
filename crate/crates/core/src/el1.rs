//! The elliptic line.
//!
//! Points are vectors `d e0 + a e1`. A normalised point can be written as
//! `-e0 sin α + e1 cos α = e1 e^{α e01}`, so points on the line are
//! parametrised by an angle with period `π`.

use crate::blade;
use crate::error::{Error, Result};
use crate::math;
use crate::multivector::Multivector;
use crate::space::Space;
use crate::spinor::{exp_bivector, Spinor};
use crate::EPSILON;

const E0: usize = 0b01;
const E1: usize = 0b10;

/// A point of El1.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct PointEl1 {
    mv: Multivector,
    /// Angle parameter, kept when the point was built from an angle and
    /// tracked through translations and reflections.
    angle: Option<f64>,
}

impl PointEl1 {
    /// `d e0 + a e1`.
    pub fn new(d: f64, a: f64) -> Result<Self> {
        let mut mv = Multivector::basis(Space::El1, E0, d);
        mv += Multivector::basis(Space::El1, E1, a);
        Self::from_multivector(mv)
    }

    /// `-e0 sin α + e1 cos α`.
    pub fn from_angle(alpha: f64) -> Self {
        let (s, c) = math::sin_cos(alpha);
        let mut mv = Multivector::basis(Space::El1, E0, -s);
        mv += Multivector::basis(Space::El1, E1, c);
        PointEl1 { mv, angle: Some(alpha) }
    }

    pub fn from_multivector(mv: Multivector) -> Result<Self> {
        if mv.space() != Space::El1 {
            return Err(Error::WrongSpace { expected: Space::El1, found: mv.space() });
        }
        if mv.is_zero_with(0.0) {
            return Err(Error::ZeroInput);
        }
        if mv.blade_grade() != Some(1) {
            return Err(Error::WrongGrade { expected: 1, found: mv.blade_grade() });
        }
        Ok(PointEl1 { mv: mv.grade(1), angle: None })
    }

    #[inline]
    pub fn as_multivector(&self) -> &Multivector {
        &self.mv
    }

    pub fn d(&self) -> f64 {
        self.mv.get(E0)
    }

    pub fn a(&self) -> f64 {
        self.mv.get(E1)
    }

    /// The tracked angle parameter, if any.
    pub fn parameter(&self) -> Option<f64> {
        self.angle
    }

    /// Angle `α` of the normalised point, in `(-π, π]`.
    pub fn angle(&self) -> f64 {
        math::atan2(-self.d(), self.a())
    }

    pub fn norm(&self) -> f64 {
        math::sqrt(self.d() * self.d() + self.a() * self.a())
    }

    pub fn normalized(&self) -> Result<Self> {
        Ok(PointEl1 { mv: self.mv.normalized()?, angle: self.angle })
    }

    /// Distance in `[0, π/2]`, from `sin r = |a∨b|` and `cos r = |a·b|`.
    pub fn distance(&self, other: &PointEl1) -> Result<f64> {
        let a = self.mv.normalized()?;
        let b = other.mv.normalized()?;
        let s = math::abs((a & b).scalar_part());
        let c = math::abs((a | b).scalar_part());
        Ok(math::atan2(s, c))
    }

    /// `a e01`.
    pub fn polar(&self) -> PointEl1 {
        let angle = self.angle.map(|a| a + core::f64::consts::FRAC_PI_2);
        PointEl1 { mv: self.mv.dual_i(), angle }
    }

    /// Spinor `e^{-½λ e01}` translating points by `λ`.
    pub fn translator(lambda: f64) -> Spinor {
        exp_bivector(&(Multivector::pseudoscalar(Space::El1) * (-0.5 * lambda)))
            .expect("pseudoscalar multiple is a bivector")
    }

    /// `T a T⁻¹` with `T = e^{-½λ e01}`.
    pub fn translate(&self, lambda: f64) -> PointEl1 {
        let mv = Self::translator(lambda).apply(&self.mv).expect("same space");
        PointEl1 { mv, angle: self.angle.map(|a| a + lambda) }
    }

    /// Top-down reflection `-b a b⁻¹`. The orientation flips, so a tracked
    /// parameter `α` in `β` maps to `2β - α + π`.
    pub fn reflect(&self, b: &PointEl1) -> Result<PointEl1> {
        let mv = blade::reflect(&self.mv, &b.mv, blade::ReflectDirection::TopDown)?;
        let angle = match (self.angle, b.angle) {
            (Some(a), Some(beta)) => Some(2.0 * beta - a + core::f64::consts::PI),
            _ => None,
        };
        Ok(PointEl1 { mv, angle })
    }

    /// `(a·b) b⁻¹`, which is `b cos(α - β)` for normalised inputs.
    pub fn project(&self, b: &PointEl1) -> Result<Multivector> {
        blade::project(&self.mv, &b.mv)
    }

    /// `(a∧b) b⁻¹`, a multiple of the polar point of `b`.
    pub fn reject(&self, b: &PointEl1) -> Result<Multivector> {
        blade::reject(&self.mv, &b.mv)
    }

    /// Equal as elliptic points, ignoring orientation and weight.
    pub fn same_point(&self, other: &PointEl1) -> bool {
        self.distance(other).map(|r| r <= EPSILON).unwrap_or(false)
    }
}
