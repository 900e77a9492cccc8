//! Rotations about a line, double rotations and Clifford translations.

use super::blades::{LineEl3, PointEl3};
use super::clifford::CliffordBivector;
use crate::error::Result;
use crate::math;
use crate::multivector::Multivector;
use crate::spinor::{exp_bivector, Spinor};

/// `exp(-½(αΛ + βΛI))` for the normalised line: rotation by `α` about `Λ`
/// composed with rotation by `β` about its polar.
pub fn double_rotor(l: &LineEl3, alpha: f64, beta: f64) -> Result<Spinor> {
    let l = *l.normalized()?.as_multivector();
    exp_bivector(&((l * alpha + l.dual_i() * beta) * -0.5))
}

/// Applies [`double_rotor`] to `B`.
pub fn double_rotation(b: &Multivector, l: &LineEl3, alpha: f64, beta: f64) -> Result<Multivector> {
    double_rotor(l, alpha, beta)?.apply(b)
}

/// `exp(-½βΞ)`. Every point moves a distance `β‖Ξ‖/√2` along the Clifford
/// parallel of `Ξ` through it.
pub fn clifford_translator(xi: &CliffordBivector, beta: f64) -> Result<Spinor> {
    exp_bivector(&(*xi.value() * (-0.5 * beta)))
}

/// `S B reverse(S)` for the Clifford translator.
pub fn clifford_translate(b: &Multivector, xi: &CliffordBivector, beta: f64) -> Result<Multivector> {
    clifford_translator(xi, beta)?.apply(b)
}

/// Closed form `P cos(wβ) + (P×Ξ / w) sin(wβ)` with `w = ‖Ξ‖/√2`.
pub fn clifford_translate_point(p: &PointEl3, xi: &CliffordBivector, beta: f64) -> Result<PointEl3> {
    let w = xi.weight();
    let pm = *p.as_multivector();
    if w == 0.0 {
        return Ok(*p);
    }
    let (s, c) = math::sin_cos(w * beta);
    let cross = pm.commutator(xi.value())?.grade(3);
    PointEl3::from_multivector(pm * c + cross * (s / w))
}
