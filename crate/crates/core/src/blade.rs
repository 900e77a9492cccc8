//! Projection, rejection and reflection of blades in blades.
//!
//! These follow the same rules in every space; the geometry modules add the
//! grade dispatch that is particular to points and lines in El3.

use crate::error::{Error, Result};
use crate::multivector::Multivector;

/// Which of the two reflection sign rules to apply.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ReflectDirection {
    /// Sign `(-1)^(kl)`: the reflector is the higher-dimensional object.
    TopDown,
    /// Sign `(-1)^(k(l-1))`: the reflector is the lower-dimensional object.
    BottomUp,
}

pub(crate) fn homogeneous_grade(m: &Multivector) -> Result<u32> {
    if m.is_zero_with(0.0) {
        return Err(Error::ZeroInput);
    }
    m.blade_grade().ok_or(Error::MixedGrade)
}

/// `(B·A)A⁻¹`.
pub fn project(b: &Multivector, a: &Multivector) -> Result<Multivector> {
    let inv = a.inverse_blade()?;
    b.inner(a)?.geometric_product(&inv)
}

/// `(B∧A)A⁻¹`.
pub fn reject(b: &Multivector, a: &Multivector) -> Result<Multivector> {
    let inv = a.inverse_blade()?;
    b.wedge(a)?.geometric_product(&inv)
}

/// `±A B A⁻¹` with the sign chosen by `direction`.
pub fn reflect(b: &Multivector, a: &Multivector, direction: ReflectDirection) -> Result<Multivector> {
    let inv = a.inverse_blade()?;
    let k = homogeneous_grade(a)?;
    let l = homogeneous_grade(b)?;
    let exponent = match direction {
        ReflectDirection::TopDown => k * l,
        ReflectDirection::BottomUp => k * l.saturating_sub(1),
    };
    let sign = if exponent % 2 == 1 { -1.0 } else { 1.0 };
    let out = a.geometric_product(b)?.geometric_product(&inv)?;
    Ok((out * sign).grade(l))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Space;

    #[test]
    fn top_down_reflection_of_a_plane_line() {
        let a = Multivector::from_named(Space::El2, &[("e0", -2.0), ("e1", 2.0), ("e2", 1.0)]).unwrap();
        let b = Multivector::from_named(Space::El2, &[("e1", 1.0)]).unwrap();
        let reflected = reflect(&a, &b, ReflectDirection::TopDown).unwrap();
        let sandwich = -(b * a * b.inverse_blade().unwrap());
        assert_eq!(reflected, sandwich);
        let expect = Multivector::from_named(Space::El2, &[("e0", -2.0), ("e1", -2.0), ("e2", 1.0)]).unwrap();
        assert_eq!(reflected, expect);
    }

    #[test]
    fn projection_plus_rejection_recovers_a_vector() {
        let a = Multivector::from_named(Space::El1, &[("e0", 0.3), ("e1", -1.2)]).unwrap();
        let b = Multivector::from_named(Space::El1, &[("e0", 2.0), ("e1", 0.5)]).unwrap();
        let sum = project(&a, &b).unwrap() + reject(&a, &b).unwrap();
        assert!(sum.max_abs_diff(&a) < 1e-15);
    }

    #[test]
    fn reflecting_in_zero_fails() {
        let a = Multivector::from_named(Space::El1, &[("e0", 1.0)]).unwrap();
        let z = Multivector::zero(Space::El1);
        assert_eq!(reflect(&a, &z, ReflectDirection::TopDown), Err(Error::NonInvertible));
    }
}
