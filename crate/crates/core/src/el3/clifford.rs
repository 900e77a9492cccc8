//! Clifford bivectors and Clifford parallels.

use super::blades::{plucker_of, LineEl3, PointEl3};
use super::idx::{E12, E13, E23};
use crate::error::{Error, Result};
use crate::math;
use crate::multivector::Multivector;
use crate::space::Space;
use crate::spinor::exp_bivector;
use crate::EPSILON;

/// Family of a Clifford bivector or parallel.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CliffordSign {
    /// `IΞ = Ξ`, generated by `(I + 1)Λ`.
    Positive,
    /// `IΞ = -Ξ`, generated by `(I - 1)Λ`.
    Negative,
}

impl CliffordSign {
    /// `+1` or `-1`.
    pub fn value(self) -> f64 {
        match self {
            CliffordSign::Positive => 1.0,
            CliffordSign::Negative => -1.0,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            CliffordSign::Positive => "positive",
            CliffordSign::Negative => "negative",
        }
    }
}

/// `I ± 1`.
fn i_plus(sign: f64) -> Multivector {
    Multivector::pseudoscalar(Space::El3) + sign
}

/// A non-simple bivector with `IΞ = ±Ξ`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct CliffordBivector {
    value: Multivector,
    sign: CliffordSign,
}

impl CliffordBivector {
    /// Detects the family, failing for anything that is not a Clifford
    /// bivector within a relative `tol`.
    pub fn new_with(value: Multivector, tol: f64) -> Result<Self> {
        if value.space() != Space::El3 {
            return Err(Error::WrongSpace { expected: Space::El3, found: value.space() });
        }
        let scale = value.max_abs();
        if scale == 0.0 {
            return Err(Error::ZeroInput);
        }
        let b = value.grade(2);
        if (value - b).max_abs() > tol * scale {
            return Err(Error::NotCliffordBivector);
        }
        let ib = Multivector::pseudoscalar(Space::El3) * b;
        let sign = if (ib - b).max_abs() <= tol * scale {
            CliffordSign::Positive
        } else if (ib + b).max_abs() <= tol * scale {
            CliffordSign::Negative
        } else {
            return Err(Error::NotCliffordBivector);
        };
        Ok(CliffordBivector { value: b, sign })
    }

    pub fn new(value: Multivector) -> Result<Self> {
        Self::new_with(value, EPSILON)
    }

    #[inline]
    pub fn value(&self) -> &Multivector {
        &self.value
    }

    #[inline]
    pub fn sign(&self) -> CliffordSign {
        self.sign
    }

    /// `‖Ξ‖ / √2`. The bivector `(I ± 1)Λ` of a line has the weight of the
    /// line.
    pub fn weight(&self) -> f64 {
        super::axes::clifford_weight(&self.value)
    }
}

/// `Ξ± = (I ± 1)Λ`.
pub fn clifford_bivector(l: &LineEl3, sign: CliffordSign) -> CliffordBivector {
    CliffordBivector { value: i_plus(sign.value()) * *l.as_multivector(), sign }
}

/// A normalised line with the origin lines used to parametrise its
/// Clifford parallels.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct CliffordFrame {
    pub line: LineEl3,
    /// `(p10 - p23)e23 + (p20 - p31)e31 + (p30 - p12)e12`.
    pub m: LineEl3,
    /// `(p10 + p23)e23 + (p20 + p31)e31 + (p30 + p12)e12`.
    pub p: LineEl3,
    pub m_perp: LineEl3,
    pub p_perp: LineEl3,
}

/// Origin line with conventional direction `(l23, l31, l12)`.
fn origin_line(d: [f64; 3]) -> Multivector {
    let mut m = Multivector::basis(Space::El3, E23, d[0]);
    m += Multivector::basis(Space::El3, E13, -d[1]);
    m += Multivector::basis(Space::El3, E12, d[2]);
    m
}

fn direction(m: &Multivector) -> [f64; 3] {
    let p = plucker_of(m);
    [p[3], p[4], p[5]]
}

fn cross(a: [f64; 3], b: [f64; 3]) -> [f64; 3] {
    [a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]]
}

/// Unit origin line perpendicular to `m`: the direction of `m` crossed with
/// the `e23` direction, or with the `e31` direction when nearly parallel.
fn perpendicular_origin_line(m: &Multivector) -> LineEl3 {
    let d = direction(m);
    let mut c = cross(d, [1.0, 0.0, 0.0]);
    let mut n = math::sqrt(c.iter().map(|x| x * x).sum());
    if n < 1e-3 {
        c = cross(d, [0.0, 1.0, 0.0]);
        n = math::sqrt(c.iter().map(|x| x * x).sum());
    }
    LineEl3::from_multivector(origin_line(c.map(|x| x / n))).expect("origin lines are simple")
}

/// Builds the frame of `Λ / ‖Λ‖`.
pub fn clifford_frame(l: &LineEl3) -> Result<CliffordFrame> {
    let line = l.normalized()?;
    let p = line.plucker();
    let m = origin_line([p[0] - p[3], p[1] - p[4], p[2] - p[5]]);
    let pl = origin_line([p[0] + p[3], p[1] + p[4], p[2] + p[5]]);
    let m = LineEl3::from_multivector(m)?;
    let pl = LineEl3::from_multivector(pl)?;
    Ok(CliffordFrame {
        line,
        m_perp: perpendicular_origin_line(m.as_multivector()),
        p_perp: perpendicular_origin_line(pl.as_multivector()),
        m,
        p: pl,
    })
}

/// `Ω(φ, θ) = R M reverse(R)` with `R = e^{-½φM} e^{-½θM⊥}`.
///
/// `M` is `Λ_m` for the positive family and `Λ_p` for the negative one.
/// The result satisfies `M·Ω = -cos θ`.
pub fn omega(frame: &CliffordFrame, sign: CliffordSign, phi: f64, theta: f64) -> Multivector {
    let (m, perp) = match sign {
        CliffordSign::Positive => (frame.m, frame.m_perp),
        CliffordSign::Negative => (frame.p, frame.p_perp),
    };
    let m = *m.as_multivector();
    let r1 = exp_bivector(&(m * (-0.5 * phi))).expect("bivector");
    let r2 = exp_bivector(&(*perp.as_multivector() * (-0.5 * theta))).expect("bivector");
    r1.compose(&r2).expect("same space").apply(&m).expect("same space")
}

/// Clifford parallel `Λ - cos θ (I ∓ 1) Ω(φ, θ)`, at distance `|π/2 - θ|`
/// from `Λ`. A line that is not normalised gets parallels of the same
/// weight.
pub fn clifford_parallel(l: &LineEl3, sign: CliffordSign, phi: f64, theta: f64) -> Result<LineEl3> {
    if !(0.0..=core::f64::consts::PI).contains(&theta) {
        return Err(Error::ParameterOutOfRange { name: "theta", value: theta });
    }
    if !phi.is_finite() {
        return Err(Error::ParameterOutOfRange { name: "phi", value: phi });
    }
    let weight = l.norm();
    let frame = clifford_frame(l)?;
    let om = omega(&frame, sign, phi, theta);
    let factor = i_plus(-sign.value());
    let out = *frame.line.as_multivector() - factor * om * math::cos(theta);
    LineEl3::from_multivector((out.grade(2)) * weight)
}

/// The unparametrised forms `Λ + (Λ_m·Ω)(I - 1)Ω` and
/// `Λ + (Λ_p·Ω)(I + 1)Ω`, for a normalised origin line `Ω`.
pub fn clifford_parallel_with_omega(l: &LineEl3, sign: CliffordSign, om: &LineEl3) -> Result<LineEl3> {
    if !om.is_origin_line(EPSILON) {
        return Err(Error::NotOriginLine);
    }
    let weight = l.norm();
    let frame = clifford_frame(l)?;
    let om = om.as_multivector().normalized()?;
    let m = match sign {
        CliffordSign::Positive => frame.m,
        CliffordSign::Negative => frame.p,
    };
    let coeff = (*m.as_multivector() | om).scalar_part();
    let out = *frame.line.as_multivector() + i_plus(-sign.value()) * om * coeff;
    LineEl3::from_multivector(out.grade(2) * weight)
}

/// The parallel of `Ξ` through `P`, `(Ξ∨P)P⁻¹`. On the axis lines of `Ξ`
/// this is the axis itself.
pub fn parallel_through_point(xi: &CliffordBivector, p: &PointEl3) -> Result<LineEl3> {
    let p = *p.as_multivector();
    let inv = p.inverse_blade()?;
    LineEl3::from_multivector((xi.value & p) * inv)
}
