use super::idx::*;
use crate::error::{Error, Result};
use crate::math;
use crate::multivector::Multivector;
use crate::space::Space;
use crate::EPSILON;

fn expect_grade(mv: &Multivector, grade: u32) -> Result<Multivector> {
    if mv.space() != Space::El3 {
        return Err(Error::WrongSpace { expected: Space::El3, found: mv.space() });
    }
    if mv.is_zero_with(0.0) {
        return Err(Error::ZeroInput);
    }
    if mv.blade_grade() != Some(grade) {
        return Err(Error::WrongGrade { expected: grade, found: mv.blade_grade() });
    }
    Ok(mv.grade(grade))
}

fn vector(coeffs: [(usize, f64); 4]) -> Multivector {
    let mut m = Multivector::zero(Space::El3);
    for (i, c) in coeffs {
        m += Multivector::basis(Space::El3, i, c);
    }
    m
}

/// A plane `d e0 + a e1 + b e2 + c e3`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct PlaneEl3 {
    mv: Multivector,
}

/// A line: a bivector satisfying the Plücker condition.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct LineEl3 {
    mv: Multivector,
}

/// A point `w e123 + x e320 + y e130 + z e210`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct PointEl3 {
    mv: Multivector,
}

impl PlaneEl3 {
    pub fn new(d: f64, a: f64, b: f64, c: f64) -> Result<Self> {
        Self::from_multivector(vector([(E0, d), (E1, a), (E2, b), (E3, c)]))
    }

    pub fn from_multivector(mv: Multivector) -> Result<Self> {
        Ok(PlaneEl3 { mv: expect_grade(&mv, 1)? })
    }

    #[inline]
    pub fn as_multivector(&self) -> &Multivector {
        &self.mv
    }

    /// `(d, a, b, c)`.
    pub fn coordinates(&self) -> [f64; 4] {
        [self.mv.get(E0), self.mv.get(E1), self.mv.get(E2), self.mv.get(E3)]
    }

    pub fn norm(&self) -> f64 {
        self.mv.raw_norm()
    }

    pub fn normalized(&self) -> Result<Self> {
        Ok(PlaneEl3 { mv: self.mv.normalized()? })
    }

    /// The polar point `aI`.
    pub fn polar(&self) -> PointEl3 {
        PointEl3 { mv: self.mv.dual_i() }
    }

    /// Intersection line `a∧b`.
    pub fn meet(&self, other: &PlaneEl3) -> Result<LineEl3> {
        LineEl3::from_multivector(self.mv ^ other.mv)
    }

    /// Intersection point with a line, `a∧Λ`.
    pub fn meet_line(&self, line: &LineEl3) -> Result<PointEl3> {
        PointEl3::from_multivector(self.mv ^ line.mv)
    }

    pub fn contains(&self, p: &PointEl3) -> bool {
        super::metrics::distance_plane_point(self, p).map(|r| r <= EPSILON).unwrap_or(false)
    }
}

impl LineEl3 {
    /// From Plücker coordinates `[p10, p20, p30, p23, p31, p12]`, checking
    /// the Plücker condition against [`EPSILON`].
    pub fn from_plucker(p: [f64; 6]) -> Result<Self> {
        Self::from_plucker_with(p, EPSILON)
    }

    pub fn from_plucker_with(p: [f64; 6], tol: f64) -> Result<Self> {
        Self::from_multivector_with(Self::bivector_from_plucker(p), tol)
    }

    /// The bivector with the given Plücker coordinates, unchecked.
    pub fn bivector_from_plucker(p: [f64; 6]) -> Multivector {
        let mut m = Multivector::zero(Space::El3);
        for (i, c) in [(E01, -p[0]), (E02, -p[1]), (E03, -p[2]), (E23, p[3]), (E13, -p[4]), (E12, p[5])] {
            m += Multivector::basis(Space::El3, i, c);
        }
        m
    }

    pub fn from_multivector(mv: Multivector) -> Result<Self> {
        Self::from_multivector_with(mv, EPSILON)
    }

    pub fn from_multivector_with(mv: Multivector, tol: f64) -> Result<Self> {
        let mv = expect_grade(&mv, 2)?;
        let residual = mv.plucker_residual();
        if residual > tol {
            return Err(Error::NonSimpleBivector { residual });
        }
        Ok(LineEl3 { mv })
    }

    #[inline]
    pub fn as_multivector(&self) -> &Multivector {
        &self.mv
    }

    /// `[p10, p20, p30, p23, p31, p12]`.
    pub fn plucker(&self) -> [f64; 6] {
        plucker_of(&self.mv)
    }

    pub fn plucker_residual(&self) -> f64 {
        self.mv.plucker_residual()
    }

    pub fn norm(&self) -> f64 {
        self.mv.raw_norm()
    }

    pub fn normalized(&self) -> Result<Self> {
        Ok(LineEl3 { mv: self.mv.normalized()? })
    }

    /// The polar line `ΛI`.
    pub fn polar(&self) -> LineEl3 {
        LineEl3 { mv: self.mv.dual_i() }
    }

    /// `(p23, p31, p12)`, the part through the origin.
    pub fn origin_part(&self) -> [f64; 3] {
        let p = self.plucker();
        [p[3], p[4], p[5]]
    }

    /// `(p10, p20, p30)`, the part on the plane `e0`.
    pub fn ideal_part(&self) -> [f64; 3] {
        let p = self.plucker();
        [p[0], p[1], p[2]]
    }

    /// True when the line passes through the origin `e123`.
    pub fn is_origin_line(&self, tol: f64) -> bool {
        self.ideal_part().iter().all(|c| math::abs(*c) <= tol * self.norm())
    }

    pub fn contains(&self, p: &PointEl3) -> bool {
        super::metrics::distance_line_point(self, p).map(|r| r <= EPSILON).unwrap_or(false)
    }

    /// Two orthonormal points spanning the line. Every point of the line is
    /// `P0 cos t + P1 sin t`.
    pub fn point_pair(&self) -> (PointEl3, PointEl3) {
        let candidates: [[f64; 4]; 4] = core::array::from_fn(|k| {
            let plane = Multivector::basis(Space::El3, 1 << k, 1.0);
            point_coords(&(self.mv ^ plane))
        });
        let norm4 = |v: &[f64; 4]| math::sqrt(v.iter().map(|c| c * c).sum());
        let first = candidates.iter().copied().max_by(|a, b| norm4(a).total_cmp(&norm4(b))).expect("four candidates");
        let n0 = norm4(&first);
        let p0 = first.map(|c| c / n0);
        let reject = |v: &[f64; 4]| {
            let d: f64 = v.iter().zip(p0.iter()).map(|(a, b)| a * b).sum();
            core::array::from_fn::<f64, 4, _>(|i| v[i] - d * p0[i])
        };
        let second =
            candidates.iter().map(reject).max_by(|a, b| norm4(a).total_cmp(&norm4(b))).expect("four candidates");
        let n1 = norm4(&second);
        let p1 = second.map(|c| c / n1);
        (PointEl3::from_coords(p0), PointEl3::from_coords(p1))
    }

    /// `P0 cos t + P1 sin t` for the pair from [`LineEl3::point_pair`].
    pub fn point_at(&self, t: f64) -> PointEl3 {
        let (p0, p1) = self.point_pair();
        let (s, c) = math::sin_cos(t);
        PointEl3 { mv: *p0.as_multivector() * c + *p1.as_multivector() * s }
    }
}

pub(crate) fn plucker_of(mv: &Multivector) -> [f64; 6] {
    [-mv.get(E01), -mv.get(E02), -mv.get(E03), mv.get(E23), -mv.get(E13), mv.get(E12)]
}

/// `(w, x, y, z)` of the trivector part.
pub(crate) fn point_coords(mv: &Multivector) -> [f64; 4] {
    [mv.get(E123), -mv.get(E023), mv.get(E013), -mv.get(E012)]
}

impl PointEl3 {
    pub fn new(w: f64, x: f64, y: f64, z: f64) -> Result<Self> {
        Self::from_multivector(vector([(E123, w), (E023, -x), (E013, y), (E012, -z)]))
    }

    /// `e123 + x e320 + y e130 + z e210`.
    pub fn from_standard(x: f64, y: f64, z: f64) -> Self {
        Self::new(1.0, x, y, z).expect("w = 1 is nonzero")
    }

    pub(crate) fn from_coords(c: [f64; 4]) -> Self {
        PointEl3 { mv: vector([(E123, c[0]), (E023, -c[1]), (E013, c[2]), (E012, -c[3])]) }
    }

    pub fn from_multivector(mv: Multivector) -> Result<Self> {
        Ok(PointEl3 { mv: expect_grade(&mv, 3)? })
    }

    #[inline]
    pub fn as_multivector(&self) -> &Multivector {
        &self.mv
    }

    /// `(w, x, y, z)`.
    pub fn coordinates(&self) -> [f64; 4] {
        point_coords(&self.mv)
    }

    /// Standard coordinates `(x/w, y/w, z/w)`, if the point is off `e0`.
    pub fn standard(&self) -> Option<[f64; 3]> {
        let [w, x, y, z] = self.coordinates();
        if math::abs(w) < EPSILON * self.mv.max_abs() {
            None
        } else {
            Some([x / w, y / w, z / w])
        }
    }

    pub fn norm(&self) -> f64 {
        self.mv.raw_norm()
    }

    pub fn normalized(&self) -> Result<Self> {
        Ok(PointEl3 { mv: self.mv.normalized()? })
    }

    /// The polar plane `PI`.
    pub fn polar(&self) -> PlaneEl3 {
        PlaneEl3 { mv: self.mv.dual_i() }
    }

    /// Line `P∨Q`.
    pub fn join(&self, other: &PointEl3) -> Result<LineEl3> {
        LineEl3::from_multivector(self.mv & other.mv)
    }

    /// Plane `P∨Λ`.
    pub fn join_line(&self, line: &LineEl3) -> Result<PlaneEl3> {
        PlaneEl3::from_multivector(self.mv & line.mv)
    }
}
