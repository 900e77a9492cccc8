//! The elliptic plane.
//!
//! Lines are vectors `d e0 + a e1 + b e2` and points are bivectors
//! `w e12 + x e20 + y e01`. A point at standard coordinates `(x, y)` is
//! `e12 + x e20 + y e01`; points with `w = 0` lie on the line `e0`, which has
//! no image in the chart `w = 1`.

use crate::blade::{self, ReflectDirection};
use crate::error::{Error, Result};
use crate::math;
use crate::multivector::Multivector;
use crate::space::Space;
use crate::spinor::{exp_bivector, Spinor};
use crate::EPSILON;

const E0: usize = 0b001;
const E1: usize = 0b010;
const E2: usize = 0b100;
const E12: usize = 0b110;
const E02: usize = 0b101;
const E01: usize = 0b011;

fn expect_grade(mv: &Multivector, grade: u32) -> Result<Multivector> {
    if mv.space() != Space::El2 {
        return Err(Error::WrongSpace { expected: Space::El2, found: mv.space() });
    }
    if mv.is_zero_with(0.0) {
        return Err(Error::ZeroInput);
    }
    if mv.blade_grade() != Some(grade) {
        return Err(Error::WrongGrade { expected: grade, found: mv.blade_grade() });
    }
    Ok(mv.grade(grade))
}

/// A line of El2.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct LineEl2 {
    mv: Multivector,
}

/// A point of El2.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct PointEl2 {
    mv: Multivector,
}

impl LineEl2 {
    /// `d e0 + a e1 + b e2`.
    pub fn new(d: f64, a: f64, b: f64) -> Result<Self> {
        let mut mv = Multivector::basis(Space::El2, E0, d);
        mv += Multivector::basis(Space::El2, E1, a);
        mv += Multivector::basis(Space::El2, E2, b);
        Self::from_multivector(mv)
    }

    pub fn from_multivector(mv: Multivector) -> Result<Self> {
        Ok(LineEl2 { mv: expect_grade(&mv, 1)? })
    }

    #[inline]
    pub fn as_multivector(&self) -> &Multivector {
        &self.mv
    }

    pub fn norm(&self) -> f64 {
        self.mv.raw_norm()
    }

    pub fn normalized(&self) -> Result<Self> {
        Ok(LineEl2 { mv: self.mv.normalized()? })
    }

    /// The polar point `aI`.
    pub fn polar(&self) -> PointEl2 {
        PointEl2 { mv: self.mv.dual_i() }
    }

    /// Intersection point `a∧b`. Distinct lines always meet.
    pub fn meet(&self, other: &LineEl2) -> Result<PointEl2> {
        PointEl2::from_multivector(self.mv ^ other.mv).map_err(|_| Error::Collinear)
    }

    /// `|a∨P| ≤ EPSILON` after normalisation.
    pub fn contains(&self, p: &PointEl2) -> bool {
        distance_lp(self, p).map(|r| r <= EPSILON).unwrap_or(false)
    }
}

impl PointEl2 {
    /// `w e12 + x e20 + y e01`.
    pub fn new(w: f64, x: f64, y: f64) -> Result<Self> {
        let mut mv = Multivector::basis(Space::El2, E12, w);
        mv += Multivector::basis(Space::El2, E02, -x);
        mv += Multivector::basis(Space::El2, E01, y);
        Self::from_multivector(mv)
    }

    /// `e12 + x e20 + y e01`.
    pub fn from_standard(x: f64, y: f64) -> Self {
        Self::new(1.0, x, y).expect("w = 1 is nonzero")
    }

    pub fn from_multivector(mv: Multivector) -> Result<Self> {
        Ok(PointEl2 { mv: expect_grade(&mv, 2)? })
    }

    #[inline]
    pub fn as_multivector(&self) -> &Multivector {
        &self.mv
    }

    pub fn w(&self) -> f64 {
        self.mv.get(E12)
    }

    pub fn x(&self) -> f64 {
        -self.mv.get(E02)
    }

    pub fn y(&self) -> f64 {
        self.mv.get(E01)
    }

    /// Standard coordinates `(x/w, y/w)`, if the point is off the line `e0`.
    pub fn standard(&self) -> Option<(f64, f64)> {
        let w = self.w();
        if math::abs(w) < EPSILON * self.mv.max_abs() {
            None
        } else {
            Some((self.x() / w, self.y() / w))
        }
    }

    pub fn norm(&self) -> f64 {
        self.mv.raw_norm()
    }

    pub fn normalized(&self) -> Result<Self> {
        Ok(PointEl2 { mv: self.mv.normalized()? })
    }

    /// The polar line `PI`.
    pub fn polar(&self) -> LineEl2 {
        LineEl2 { mv: self.mv.dual_i() }
    }

    /// Line `P∨Q` through both points.
    pub fn join(&self, other: &PointEl2) -> LineEl2 {
        LineEl2 { mv: self.mv & other.mv }
    }

    pub fn distance(&self, other: &PointEl2) -> Result<f64> {
        distance_pp(self, other)
    }
}

/// Point distance in `[0, π/2]` from `sin r = ‖P∨Q‖`, `cos r = |P·Q|`.
pub fn distance_pp(p: &PointEl2, q: &PointEl2) -> Result<f64> {
    let p = p.mv.normalized()?;
    let q = q.mv.normalized()?;
    let s = (p & q).raw_norm();
    let c = math::abs((p | q).scalar_part());
    Ok(math::atan2(s, c))
}

/// Angle in `[0, π]` between the orientation vectors, `cos α = a·b`.
pub fn angle_ll(a: &LineEl2, b: &LineEl2) -> Result<f64> {
    let a = a.mv.normalized()?;
    let b = b.mv.normalized()?;
    Ok(math::atan2((a ^ b).raw_norm(), (a | b).scalar_part()))
}

/// Line to point distance in `[0, π/2]` from `sin r = |a∨P|`, `cos r = ‖a·P‖`.
pub fn distance_lp(a: &LineEl2, p: &PointEl2) -> Result<f64> {
    let a = a.mv.normalized()?;
    let p = p.mv.normalized()?;
    let s = math::abs((a & p).scalar_part());
    let c = (a | p).raw_norm();
    Ok(math::atan2(s, c))
}

/// `a·P`, the line through `P` perpendicular to `a`. It also passes through
/// the polar point `aI`.
pub fn perpendicular_through(a: &LineEl2, p: &PointEl2) -> Result<LineEl2> {
    let perp = a.mv | p.mv;
    if perp.raw_norm() <= EPSILON * a.norm() * p.norm() {
        return Err(Error::DegeneratePolar);
    }
    Ok(LineEl2 { mv: perp })
}

/// A triangle given by its vertices.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct TriangleEl2 {
    p: PointEl2,
    q: PointEl2,
    r: PointEl2,
}

impl TriangleEl2 {
    pub fn new(p: PointEl2, q: PointEl2, r: PointEl2) -> Result<Self> {
        let scale = p.norm() * q.norm() * r.norm();
        let volume = math::abs(triple(&p, &q, &r));
        if scale == 0.0 || volume <= EPSILON * scale {
            return Err(Error::Collinear);
        }
        Ok(TriangleEl2 { p, q, r })
    }

    pub fn vertices(&self) -> [PointEl2; 3] {
        [self.p, self.q, self.r]
    }

    /// Normalised vertices with the signs of `Q` and `R` chosen so that
    /// `P·Q ≤ 0` and `P·R ≤ 0`. Points square to `-1`, so these are the
    /// representatives joined by the short sides from `P`.
    fn representatives(&self) -> (Multivector, Multivector, Multivector) {
        let p = self.p.mv.normalized().expect("checked at construction");
        let mut q = self.q.mv.normalized().expect("checked at construction");
        let mut r = self.r.mv.normalized().expect("checked at construction");
        if (p | q).scalar_part() > 0.0 {
            q = -q;
        }
        if (p | r).scalar_part() > 0.0 {
            r = -r;
        }
        (p, q, r)
    }

    /// Side lines `r = P∨Q`, `q = P∨R`, `p = R∨Q` on the sign representatives.
    pub fn sides(&self) -> [LineEl2; 3] {
        let (p, q, r) = self.representatives();
        [LineEl2 { mv: p & q }, LineEl2 { mv: p & r }, LineEl2 { mv: r & q }]
    }

    /// Angles `α = ∠(r, q)`, `β = ∠(r, p)` and `γ = ∠(q, p)` between the
    /// oriented sides.
    pub fn side_angles(&self) -> [f64; 3] {
        let [r, q, p] = self.sides();
        let angle = |a: &LineEl2, b: &LineEl2| angle_ll(a, b).expect("sides are nonzero");
        [angle(&r, &q), angle(&r, &p), angle(&q, &p)]
    }

    /// Area `α + β - γ`. With the side orientation above this equals the
    /// spherical excess `A + B + C - π` of the interior angles.
    pub fn area(&self) -> f64 {
        let [alpha, beta, gamma] = self.side_angles();
        alpha + beta - gamma
    }

    /// Area of a triangle with a right angle at the first vertex,
    /// `sin S = |P∨Q∨R| / (1 + |Q·R|)`.
    ///
    /// The cosine `cos S = (|P·Q| + |P·R|) / (1 + |Q·R|)` holds under the same
    /// condition and keeps the result accurate near `S = π/2`.
    pub fn right_angle_area(&self) -> Result<f64> {
        self.right_angle_area_with(EPSILON)
    }

    pub fn right_angle_area_with(&self, tol: f64) -> Result<f64> {
        let (p, q, r) = self.representatives();
        let at_p = angle_ll(&LineEl2 { mv: p & q }, &LineEl2 { mv: p & r })?;
        if math::abs(at_p - core::f64::consts::FRAC_PI_2) > tol {
            return Err(Error::NotRightAngled);
        }
        let volume = math::abs(((p & q) & r).scalar_part());
        let qr = math::abs((q | r).scalar_part());
        let cos_sum = math::abs((p | q).scalar_part()) + math::abs((p | r).scalar_part());
        let denom = 1.0 + qr;
        Ok(math::atan2(volume / denom, cos_sum / denom))
    }
}

/// `P∨Q∨R` as a scalar.
fn triple(p: &PointEl2, q: &PointEl2, r: &PointEl2) -> f64 {
    ((p.mv & q.mv) & r.mv).scalar_part()
}

/// The normalised triple join `|P∨Q∨R|`.
pub fn triple_join(p: &PointEl2, q: &PointEl2, r: &PointEl2) -> Result<f64> {
    let scale = p.norm() * q.norm() * r.norm();
    if scale == 0.0 {
        return Err(Error::ZeroInput);
    }
    Ok(math::abs(triple(p, q, r)) / scale)
}

/// A triangle with three right angles: the vertices of `a`, `b` and
/// `c = (aI)∨(bI)`, where `b` passes through the polar point of `a`.
pub fn max_area_triangle(a: &LineEl2, b: &LineEl2) -> Result<TriangleEl2> {
    if !b.contains(&a.polar()) {
        return Err(Error::NotIncident);
    }
    let c = a.polar().join(&b.polar());
    let ab = a.meet(b)?;
    let bc = b.meet(&c)?;
    let ca = c.meet(a)?;
    TriangleEl2::new(ab, bc, ca)
}

/// Projection `(B·A)A⁻¹`.
pub fn project(b: &Multivector, a: &Multivector) -> Result<Multivector> {
    blade::project(b, a)
}

/// Rejection `(B∧A)A⁻¹`.
pub fn reject(b: &Multivector, a: &Multivector) -> Result<Multivector> {
    blade::reject(b, a)
}

/// Top-down reflection `(-1)^(kl) A B A⁻¹`.
pub fn reflect_topdown(b: &Multivector, a: &Multivector) -> Result<Multivector> {
    blade::reflect(b, a, ReflectDirection::TopDown)
}

/// Bottom-up reflection `A B A⁻¹`, with no sign in the plane.
pub fn reflect_bottomup(b: &Multivector, a: &Multivector) -> Result<Multivector> {
    let inv = a.inverse_blade()?;
    let l = blade::homogeneous_grade(b)?;
    Ok(a.geometric_product(b)?.geometric_product(&inv)?.grade(l))
}

/// Rotation spinor `e^{-½αR}` about the normalised point `R`.
pub fn rotor(center: &PointEl2, alpha: f64) -> Result<Spinor> {
    let r = center.mv.normalized()?;
    exp_bivector(&(r * (-0.5 * alpha)))
}

/// `S A S⁻¹` with `S = e^{-½αR}`.
pub fn rotate(a: &Multivector, center: &PointEl2, alpha: f64) -> Result<Multivector> {
    rotor(center, alpha)?.apply(a)
}

/// How a circle appears in the chart `w = 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CircleKind {
    Elliptic,
    Parabolic,
    Hyperbolic,
    /// Radius `π/2`: the circle is the polar line of its centre.
    Line,
}

impl CircleKind {
    pub fn name(self) -> &'static str {
        match self {
            CircleKind::Elliptic => "elliptic",
            CircleKind::Parabolic => "parabolic",
            CircleKind::Hyperbolic => "hyperbolic",
            CircleKind::Line => "line",
        }
    }
}

/// Coefficients `(a, b, c)` of `w(t) = a cos t + b sin t + c`, the `e12`
/// coefficient of `P` rotated by `t` about `R`, with both normalised.
pub fn circle_weight_curve(center: &PointEl2, p: &PointEl2) -> Result<(f64, f64, f64)> {
    let pn = p.mv.normalized()?;
    let w = |t: f64| -> Result<f64> { Ok(rotate(&pn, center, t)?.get(E12)) };
    let w0 = w(0.0)?;
    let w_half = w(core::f64::consts::FRAC_PI_2)?;
    let w_pi = w(core::f64::consts::PI)?;
    let c = 0.5 * (w0 + w_pi);
    let a = 0.5 * (w0 - w_pi);
    let b = w_half - c;
    Ok((a, b, c))
}

/// Classifies the circle traced by `P` rotating about `R` by counting the
/// roots of `w(t)` on `[0, 2π)`.
///
/// A point coinciding with the centre gives a circle of radius zero, which is
/// reported as `Elliptic`.
pub fn classify_circle(center: &PointEl2, p: &PointEl2) -> Result<CircleKind> {
    classify_circle_with(center, p, EPSILON)
}

pub fn classify_circle_with(center: &PointEl2, p: &PointEl2, tol: f64) -> Result<CircleKind> {
    let r = center.mv.normalized()?;
    let pn = p.mv.normalized()?;
    if math::abs((r | pn).scalar_part()) <= tol {
        return Ok(CircleKind::Line);
    }
    let (a, b, c) = circle_weight_curve(center, p)?;
    let amplitude = math::sqrt(a * a + b * b);
    let gap = amplitude - math::abs(c);
    Ok(if math::abs(gap) <= tol * (amplitude + math::abs(c)) {
        if amplitude <= tol {
            CircleKind::Elliptic
        } else {
            CircleKind::Parabolic
        }
    } else if gap > 0.0 {
        CircleKind::Hyperbolic
    } else {
        CircleKind::Elliptic
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use core::f64::consts::{FRAC_PI_2, FRAC_PI_4};

    fn line(d: f64, a: f64, b: f64) -> LineEl2 {
        LineEl2::new(d, a, b).unwrap()
    }

    fn point(w: f64, x: f64, y: f64) -> PointEl2 {
        PointEl2::new(w, x, y).unwrap()
    }

    #[test]
    fn example_point_distance() {
        let r = distance_pp(&point(1.0, 1.0, 0.0), &point(1.0, 0.0, 2.0)).unwrap();
        assert!((r - (1.0 / 10f64.sqrt()).acos()).abs() < 1e-15);
        let p = point(1.0, 0.3, 0.2);
        assert_eq!(distance_pp(&p, &p).unwrap(), 0.0);
        assert_eq!(distance_pp(&point(1.0, 0.0, 0.0), &point(0.0, 1.0, 0.0)).unwrap(), FRAC_PI_2);
    }

    #[test]
    fn origin_distance_formula() {
        let (x, y) = (0.7, -1.9);
        let r = distance_pp(&PointEl2::from_standard(x, y), &point(1.0, 0.0, 0.0)).unwrap();
        let s = (x * x + y * y).sqrt() / (1.0 + x * x + y * y).sqrt();
        assert!((r.sin() - s).abs() < 1e-15);
    }

    #[test]
    fn example_line_point_distance() {
        let a = line(-2.0, 2.0, 1.0);
        let p = point(1.0, -0.6, 0.8);
        let r = distance_lp(&a, &p).unwrap();
        assert!((r - (2.4 / (3.0 * 2f64.sqrt())).asin()).abs() < 1e-15);
        assert_eq!(distance_lp(&line(1.0, 0.0, 0.0), &point(1.0, 0.0, 0.0)).unwrap(), FRAC_PI_2);
        let on = point(1.0, 1.0, 0.0);
        assert!(line(-2.0, 2.0, 1.0).contains(&on));
    }

    #[test]
    fn line_angles() {
        assert_eq!(angle_ll(&line(0.0, 1.0, 0.0), &line(0.0, 0.0, 1.0)).unwrap(), FRAC_PI_2);
        let a = line(0.3, -1.0, 2.0);
        assert_eq!(angle_ll(&a, &a).unwrap(), 0.0);
        let diag = line(0.0, 1.0, 1.0);
        assert!((angle_ll(&line(0.0, 1.0, 0.0), &diag).unwrap() - FRAC_PI_4).abs() < 1e-15);
    }

    #[test]
    fn perpendicular_lines() {
        let perp = perpendicular_through(&line(0.0, 1.0, 0.0), &point(1.0, 0.0, 0.0)).unwrap();
        assert!(perp.as_multivector().max_abs_diff_up_to_sign(line(0.0, 0.0, 1.0).as_multivector()) < 1e-15);
        let a = line(-2.0, 2.0, 1.0);
        assert_eq!(perpendicular_through(&a, &point(-2.0, 2.0, 1.0)), Err(Error::DegeneratePolar));
        assert_eq!(perpendicular_through(&a, &a.polar()), Err(Error::DegeneratePolar));
        let p = point(1.0, 0.4, 0.1);
        let perp = perpendicular_through(&a, &p).unwrap();
        assert!(perp.contains(&p));
        assert!(perp.contains(&a.polar()));
    }

    #[test]
    fn basis_triangle_has_maximal_area() {
        let t = TriangleEl2::new(point(1.0, 0.0, 0.0), point(0.0, 1.0, 0.0), point(0.0, 0.0, 1.0)).unwrap();
        assert!((t.area() - FRAC_PI_2).abs() < 1e-15);
        assert!((t.right_angle_area().unwrap() - FRAC_PI_2).abs() < 1e-15);
    }

    #[test]
    fn collinear_vertices_are_rejected() {
        let p = point(1.0, 0.0, 0.0);
        let q = point(1.0, 1.0, 0.0);
        let r = point(1.0, 2.0, 0.0);
        assert_eq!(TriangleEl2::new(p, q, r), Err(Error::Collinear));
        assert_eq!(TriangleEl2::new(p, p, q), Err(Error::Collinear));
    }

    #[test]
    fn reflection_in_a_line() {
        let a = line(-2.0, 2.0, 1.0);
        let b = line(0.0, 1.0, 0.0);
        let top = reflect_topdown(a.as_multivector(), b.as_multivector()).unwrap();
        assert_eq!(top, *line(-2.0, -2.0, 1.0).as_multivector());
        let bottom = reflect_bottomup(a.as_multivector(), b.as_multivector()).unwrap();
        assert_eq!(bottom, -top);
    }

    #[test]
    fn rejection_sits_at_the_polar_point() {
        let a = line(-2.0, 2.0, 1.0);
        let p = point(1.0, -0.6, 0.8);
        let rej = PointEl2::from_multivector(reject(p.as_multivector(), a.as_multivector()).unwrap()).unwrap();
        assert!(distance_pp(&rej, &a.polar()).unwrap() < 1e-15);
        let proj = project(p.as_multivector(), a.as_multivector()).unwrap();
        assert!((proj + *rej.as_multivector()).max_abs_diff(p.as_multivector()) < 1e-15);
    }

    #[test]
    fn rotation_fixes_its_centre() {
        let r = point(1.0, 0.5, 0.0);
        let out = rotate(r.as_multivector(), &r, 1.3).unwrap();
        assert!(out.max_abs_diff(r.as_multivector()) < 1e-15);
        let p = point(1.0, 3.0, -1.0);
        assert_eq!(rotate(p.as_multivector(), &r, 0.0).unwrap(), *p.as_multivector());
    }

    #[test]
    fn example_circles() {
        let kind = classify_circle(&point(1.0, 0.5, 0.0), &point(1.0, 3.0, 0.0)).unwrap();
        assert_eq!(kind, CircleKind::Elliptic);
        let kind = classify_circle(&point(0.0, 1.0, 0.0), &point(1.0, 2.0 / 3.0, 0.0)).unwrap();
        assert_eq!(kind, CircleKind::Hyperbolic);
        let kind = classify_circle(&point(1.0, 0.0, 0.0), &point(0.0, 1.0, 2.0)).unwrap();
        assert_eq!(kind, CircleKind::Line);
        let r = point(1.0, 0.2, 0.1);
        assert_eq!(classify_circle(&r, &r).unwrap(), CircleKind::Elliptic);
    }

    #[test]
    fn parabolic_circle() {
        // The centre is at distance π/2 - θ from e0; a circle of that radius
        // touches e0 once.
        let theta: f64 = 1.0;
        let center = point(theta.cos(), theta.sin(), 0.0);
        let phi = 2.0 * theta - FRAC_PI_2;
        let p = point(phi.cos(), phi.sin(), 0.0);
        assert_eq!(classify_circle(&center, &p).unwrap(), CircleKind::Parabolic);
    }
}
