//! Clifford translations as unit quaternion products.
//!
//! A point `w e123 + x e320 + y e130 + z e210` maps to `w + xi + yj + zk`.
//! Translation along the parallels of `(I ± 1)Λ`, for a unit line `Λ`
//! through the origin, is multiplication by `cos β - (λ₁i + λ₂j + λ₃k) sin β`
//! on one side.

use core::ops::Mul;

use super::blades::{LineEl3, PointEl3};
use super::clifford::CliffordSign;
use crate::error::{Error, Result};
use crate::math;
use crate::EPSILON;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Quaternion {
    pub w: f64,
    pub x: f64,
    pub y: f64,
    pub z: f64,
}

impl Quaternion {
    pub const fn new(w: f64, x: f64, y: f64, z: f64) -> Self {
        Quaternion { w, x, y, z }
    }

    pub fn conj(&self) -> Self {
        Quaternion::new(self.w, -self.x, -self.y, -self.z)
    }

    pub fn norm(&self) -> f64 {
        math::sqrt(self.w * self.w + self.x * self.x + self.y * self.y + self.z * self.z)
    }

    pub fn from_point(p: &PointEl3) -> Self {
        let [w, x, y, z] = p.coordinates();
        Quaternion::new(w, x, y, z)
    }

    pub fn to_point(&self) -> Result<PointEl3> {
        PointEl3::new(self.w, self.x, self.y, self.z)
    }
}

impl Mul for Quaternion {
    type Output = Quaternion;

    fn mul(self, o: Quaternion) -> Quaternion {
        Quaternion::new(
            self.w * o.w - self.x * o.x - self.y * o.y - self.z * o.z,
            self.w * o.x + self.x * o.w + self.y * o.z - self.z * o.y,
            self.w * o.y - self.x * o.z + self.y * o.w + self.z * o.x,
            self.w * o.z + self.x * o.y - self.y * o.x + self.z * o.w,
        )
    }
}

/// Side on which the unit quaternion multiplies the point.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum QuaternionSide {
    /// `p q`, the parallels of `(I + 1)Λ`.
    Right,
    /// `q p`, the parallels of `(I - 1)Λ`.
    Left,
}

impl QuaternionSide {
    pub fn for_sign(sign: CliffordSign) -> Self {
        match sign {
            CliffordSign::Positive => QuaternionSide::Right,
            CliffordSign::Negative => QuaternionSide::Left,
        }
    }
}

/// Moves `P` a distance `β` along the Clifford parallels of the origin line.
pub fn clifford_translate_quat(p: &PointEl3, l: &LineEl3, side: QuaternionSide, beta: f64) -> Result<PointEl3> {
    if !l.is_origin_line(EPSILON * l.norm()) {
        return Err(Error::NotOriginLine);
    }
    let [l1, l2, l3] = l.normalized()?.origin_part();
    let (s, c) = math::sin_cos(beta);
    let q = Quaternion::new(c, -l1 * s, -l2 * s, -l3 * s);
    let p = Quaternion::from_point(p);
    match side {
        QuaternionSide::Right => p * q,
        QuaternionSide::Left => q * p,
    }
    .to_point()
}
