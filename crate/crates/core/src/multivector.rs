//! Dense multivectors over El1, El2 and El3.

use core::fmt;
use core::ops::{Add, AddAssign, BitAnd, BitOr, BitXor, Div, Mul, Neg, Sub, SubAssign};

use crate::basis::{self, grade_of, reverse_sign, SIGNS};
use crate::error::{Error, Result};
use crate::math;
use crate::space::Space;
use crate::EPSILON;

/// A multivector bound to one model space.
///
/// Coefficients are stored in binary-subset order. Only the first
/// `space.blade_count()` entries are meaningful; the rest stay zero.
#[derive(Clone, Copy, PartialEq)]
pub struct Multivector {
    space: Space,
    coeffs: [f64; 16],
}

impl Multivector {
    pub const fn zero(space: Space) -> Self {
        Multivector { space, coeffs: [0.0; 16] }
    }

    pub fn scalar(space: Space, s: f64) -> Self {
        let mut m = Self::zero(space);
        m.coeffs[0] = s;
        m
    }

    /// Canonical basis blade `e_index` with coefficient `value`.
    ///
    /// # Panics
    /// If `index` is not a blade of `space`.
    pub fn basis(space: Space, index: usize, value: f64) -> Self {
        assert!(index < space.blade_count(), "blade index {index} out of range for {space}");
        let mut m = Self::zero(space);
        m.coeffs[index] = value;
        m
    }

    pub fn pseudoscalar(space: Space) -> Self {
        Self::basis(space, space.pseudoscalar_index(), 1.0)
    }

    /// Builds from canonical-order coefficients.
    pub fn from_coeffs(space: Space, coeffs: &[f64]) -> Result<Self> {
        if coeffs.len() != space.blade_count() {
            return Err(Error::CoefficientCount { expected: space.blade_count(), found: coeffs.len() });
        }
        let mut m = Self::zero(space);
        m.coeffs[..coeffs.len()].copy_from_slice(coeffs);
        Ok(m)
    }

    /// Builds from conventional names such as `e20` or `e320`.
    ///
    /// Repeated names accumulate.
    pub fn from_named(space: Space, terms: &[(&str, f64)]) -> Result<Self> {
        let mut m = Self::zero(space);
        for &(name, value) in terms {
            let b = basis::lookup(space, name).ok_or(Error::UnknownBasis)?;
            m.coeffs[b.index] += b.sign * value;
        }
        Ok(m)
    }

    #[inline]
    pub fn space(&self) -> Space {
        self.space
    }

    /// Canonical-order coefficients.
    #[inline]
    pub fn coeffs(&self) -> &[f64] {
        &self.coeffs[..self.space.blade_count()]
    }

    #[inline]
    pub fn get(&self, index: usize) -> f64 {
        self.coeffs[index]
    }

    /// Coefficient of a conventional named blade.
    pub fn named(&self, name: &str) -> Result<f64> {
        let b = basis::lookup(self.space, name).ok_or(Error::UnknownBasis)?;
        Ok(b.sign * self.coeffs[b.index])
    }

    /// `(name, coefficient)` pairs in conventional order, zero entries included.
    pub fn named_coeffs(&self) -> impl Iterator<Item = (&'static str, f64)> + '_ {
        basis::names(self.space).iter().map(move |b| (b.name, b.sign * self.coeffs[b.index]))
    }

    pub fn scalar_part(&self) -> f64 {
        self.coeffs[0]
    }

    pub fn pseudoscalar_part(&self) -> f64 {
        self.coeffs[self.space.pseudoscalar_index()]
    }

    /// Grade-`k` part.
    pub fn grade(&self, k: u32) -> Self {
        let mut m = Self::zero(self.space);
        for i in 0..self.space.blade_count() {
            if grade_of(i) == k {
                m.coeffs[i] = self.coeffs[i];
            }
        }
        m
    }

    /// Even-grade part.
    pub fn even(&self) -> Self {
        let mut m = Self::zero(self.space);
        for i in 0..self.space.blade_count() {
            if grade_of(i).is_multiple_of(2) {
                m.coeffs[i] = self.coeffs[i];
            }
        }
        m
    }

    /// Largest absolute coefficient.
    pub fn max_abs(&self) -> f64 {
        self.coeffs().iter().fold(0.0, |m, c| f64::max(m, math::abs(*c)))
    }

    /// Largest absolute coefficient of the grade-`k` part.
    pub fn grade_max_abs(&self, k: u32) -> f64 {
        self.grade(k).max_abs()
    }

    /// The single grade carrying weight above `tol` times the largest
    /// coefficient, or `None` for zero and mixed-grade elements.
    pub fn blade_grade_with(&self, tol: f64) -> Option<u32> {
        let scale = self.max_abs();
        if scale == 0.0 {
            return None;
        }
        let mut found = None;
        for k in 0..=self.space.dim() as u32 {
            if self.grade_max_abs(k) > tol * scale {
                if found.is_some() {
                    return None;
                }
                found = Some(k);
            }
        }
        found
    }

    pub fn blade_grade(&self) -> Option<u32> {
        self.blade_grade_with(EPSILON)
    }

    pub fn is_zero_with(&self, tol: f64) -> bool {
        self.max_abs() <= tol
    }

    pub fn reverse(&self) -> Self {
        let mut m = *self;
        for i in 0..self.space.blade_count() {
            m.coeffs[i] = m.coeffs[i] * reverse_sign(grade_of(i)) + 0.0;
        }
        m
    }

    /// Grade involution: negates odd grades.
    pub fn involute(&self) -> Self {
        let mut m = *self;
        for i in 0..self.space.blade_count() {
            if grade_of(i) % 2 == 1 {
                m.coeffs[i] = 0.0 - m.coeffs[i];
            }
        }
        m
    }

    fn check_space(&self, other: &Self) -> Result<()> {
        if self.space == other.space {
            Ok(())
        } else {
            Err(Error::SpaceMismatch { left: self.space, right: other.space })
        }
    }

    /// Sum over blade pairs `e_i e_j` that pass `keep(i, j)`.
    #[allow(clippy::needless_range_loop)]
    fn product_filtered(&self, other: &Self, keep: impl Fn(usize, usize) -> bool) -> Result<Self> {
        self.check_space(other)?;
        let n = self.space.blade_count();
        let mut out = Self::zero(self.space);
        for i in 0..n {
            let a = self.coeffs[i];
            if a == 0.0 {
                continue;
            }
            for j in 0..n {
                let b = other.coeffs[j];
                if b == 0.0 || !keep(i, j) {
                    continue;
                }
                out.coeffs[i ^ j] += SIGNS[i][j] * a * b;
            }
        }
        Ok(out)
    }

    pub fn geometric_product(&self, other: &Self) -> Result<Self> {
        self.product_filtered(other, |_, _| true)
    }

    /// Outer product: grade `k + l` part of each blade pair.
    pub fn wedge(&self, other: &Self) -> Result<Self> {
        self.product_filtered(other, |i, j| i & j == 0)
    }

    /// Inner product: grade `|k - l|` part of each blade pair, scalars
    /// included.
    pub fn inner(&self, other: &Self) -> Result<Self> {
        self.product_filtered(other, |i, j| grade_of(i ^ j) == grade_of(i).abs_diff(grade_of(j)))
    }

    /// Commutator product `½(ab - ba)`.
    pub fn commutator(&self, other: &Self) -> Result<Self> {
        let ab = self.geometric_product(other)?;
        let ba = other.geometric_product(self)?;
        Ok((ab - ba) * 0.5)
    }

    /// Anticommutator `½(ab + ba)`.
    pub fn anticommutator(&self, other: &Self) -> Result<Self> {
        let ab = self.geometric_product(other)?;
        let ba = other.geometric_product(self)?;
        Ok((ab + ba) * 0.5)
    }

    /// Right multiplication by the pseudoscalar, `aI`.
    pub fn dual_i(&self) -> Self {
        *self * Self::pseudoscalar(self.space)
    }

    /// Duality map `J(a) = aI⁻¹`.
    pub fn dual_j(&self) -> Self {
        self.dual_i() * self.space.pseudoscalar_square()
    }

    /// Inverse duality map `J⁻¹(a) = aI`.
    pub fn undual_j(&self) -> Self {
        self.dual_i()
    }

    /// Regressive product (join) `J⁻¹(J(a) ∧ J(b))`.
    pub fn regressive(&self, other: &Self) -> Result<Self> {
        self.check_space(other)?;
        Ok(self.dual_j().wedge(&other.dual_j())?.undual_j())
    }

    /// `⟨a reverse(a)⟩₀`.
    pub fn reverse_norm_squared(&self) -> f64 {
        let n = self.space.blade_count();
        // The scalar part of a reverse(a) only pairs each blade with itself,
        // and e_i reverse(e_i) = 1 under this metric.
        let mut s = 0.0;
        for i in 0..n {
            s += self.coeffs[i] * self.coeffs[i];
        }
        s
    }

    /// `sqrt(|⟨a reverse(a)⟩₀|)` with no blade check.
    pub fn raw_norm(&self) -> f64 {
        math::sqrt(math::abs(self.reverse_norm_squared()))
    }

    /// Plücker residual of the grade-2 part of an El3 element, relative to
    /// its squared norm. Zero in other spaces.
    pub fn plucker_residual(&self) -> f64 {
        if self.space != Space::El3 {
            return 0.0;
        }
        let b = self.grade(2);
        let n2 = b.reverse_norm_squared();
        if n2 == 0.0 {
            return 0.0;
        }
        math::abs(b.wedge(&b).unwrap().pseudoscalar_part()) * 0.5 / n2
    }

    /// Blade norm. For El3 bivectors the Plücker condition must hold or the
    /// element must be a Clifford bivector.
    pub fn norm_with(&self, tol: f64) -> Result<f64> {
        if self.space == Space::El3 && self.blade_grade_with(tol) == Some(2) {
            let residual = self.plucker_residual();
            if residual > tol && !self.is_clifford_with(tol) {
                return Err(Error::NonSimpleBivector { residual });
            }
        }
        Ok(self.raw_norm())
    }

    pub fn norm(&self) -> Result<f64> {
        self.norm_with(EPSILON)
    }

    /// `IΞ = ±Ξ` within a relative tolerance.
    pub fn is_clifford_with(&self, tol: f64) -> bool {
        if self.space != Space::El3 {
            return false;
        }
        let scale = self.max_abs();
        if scale == 0.0 {
            return false;
        }
        let ix = Self::pseudoscalar(self.space) * *self;
        (ix - *self).max_abs() <= tol * scale || (ix + *self).max_abs() <= tol * scale
    }

    /// Scales to unit raw norm.
    pub fn normalized(&self) -> Result<Self> {
        let n = self.raw_norm();
        if n <= EPSILON * EPSILON {
            return Err(Error::ZeroInput);
        }
        Ok(*self / n)
    }

    /// `reverse(a) / (a reverse(a))` for blades and versors.
    pub fn inverse_blade(&self) -> Result<Self> {
        let r = self.reverse();
        let p = *self * r;
        let s = p.scalar_part();
        let rest = (p - Self::scalar(self.space, s)).max_abs();
        if math::abs(s) <= EPSILON * EPSILON || rest > EPSILON * math::abs(s) {
            return Err(Error::NonInvertible);
        }
        Ok(r / s)
    }

    /// Flips the sign so that the highest-index coefficient above `tol` is
    /// positive. For equality-up-to-sign comparisons only.
    pub fn canonicalize_sign(&self) -> Self {
        let scale = self.max_abs();
        for i in (0..self.space.blade_count()).rev() {
            if math::abs(self.coeffs[i]) > 1e-9 * scale {
                return if self.coeffs[i] < 0.0 { -*self } else { *self };
            }
        }
        *self
    }

    /// Largest coefficient difference. Panics on space mismatch.
    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        (*self - *other).max_abs()
    }

    /// Distance to `other` or `-other`, whichever is smaller.
    pub fn max_abs_diff_up_to_sign(&self, other: &Self) -> f64 {
        f64::min(self.max_abs_diff(other), self.max_abs_diff(&-*other))
    }

    pub fn is_finite(&self) -> bool {
        self.coeffs().iter().all(|c| c.is_finite())
    }
}

#[track_caller]
fn expect_same(a: &Multivector, b: &Multivector) {
    if a.space != b.space {
        panic!("space mismatch: {} vs {}", a.space, b.space);
    }
}

impl Mul for Multivector {
    type Output = Multivector;
    #[track_caller]
    fn mul(self, rhs: Self) -> Self {
        expect_same(&self, &rhs);
        self.geometric_product(&rhs).unwrap()
    }
}

/// `a ^ b` is the outer product.
impl BitXor for Multivector {
    type Output = Multivector;
    #[track_caller]
    fn bitxor(self, rhs: Self) -> Self {
        expect_same(&self, &rhs);
        self.wedge(&rhs).unwrap()
    }
}

/// `a | b` is the inner product.
impl BitOr for Multivector {
    type Output = Multivector;
    #[track_caller]
    fn bitor(self, rhs: Self) -> Self {
        expect_same(&self, &rhs);
        self.inner(&rhs).unwrap()
    }
}

/// `a & b` is the join.
impl BitAnd for Multivector {
    type Output = Multivector;
    #[track_caller]
    fn bitand(self, rhs: Self) -> Self {
        expect_same(&self, &rhs);
        self.regressive(&rhs).unwrap()
    }
}

impl Add for Multivector {
    type Output = Multivector;
    #[track_caller]
    fn add(mut self, rhs: Self) -> Self {
        self += rhs;
        self
    }
}

impl AddAssign for Multivector {
    #[track_caller]
    fn add_assign(&mut self, rhs: Self) {
        expect_same(self, &rhs);
        for (a, b) in self.coeffs.iter_mut().zip(rhs.coeffs.iter()) {
            *a += b;
        }
    }
}

impl Sub for Multivector {
    type Output = Multivector;
    #[track_caller]
    fn sub(mut self, rhs: Self) -> Self {
        self -= rhs;
        self
    }
}

impl SubAssign for Multivector {
    #[track_caller]
    fn sub_assign(&mut self, rhs: Self) {
        expect_same(self, &rhs);
        for (a, b) in self.coeffs.iter_mut().zip(rhs.coeffs.iter()) {
            *a -= b;
        }
    }
}

// Negation and scaling never turn a zero coefficient into `-0.0`.
impl Neg for Multivector {
    type Output = Multivector;
    fn neg(mut self) -> Self {
        for c in self.coeffs.iter_mut() {
            *c = 0.0 - *c;
        }
        self
    }
}

impl Mul<f64> for Multivector {
    type Output = Multivector;
    fn mul(mut self, s: f64) -> Self {
        for c in self.coeffs.iter_mut() {
            *c = *c * s + 0.0;
        }
        self
    }
}

impl Mul<Multivector> for f64 {
    type Output = Multivector;
    fn mul(self, m: Multivector) -> Multivector {
        m * self
    }
}

impl Div<f64> for Multivector {
    type Output = Multivector;
    fn div(self, s: f64) -> Self {
        self * (1.0 / s)
    }
}

impl Add<f64> for Multivector {
    type Output = Multivector;
    fn add(mut self, s: f64) -> Self {
        self.coeffs[0] += s;
        self
    }
}

impl Sub<f64> for Multivector {
    type Output = Multivector;
    fn sub(mut self, s: f64) -> Self {
        self.coeffs[0] -= s;
        self
    }
}

impl fmt::Debug for Multivector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Multivector({}; {})", self.space, self)
    }
}

/// Conventional names, nonzero terms only.
impl fmt::Display for Multivector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (name, c) in self.named_coeffs() {
            if c == 0.0 {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            if name == "scalar" {
                write!(f, "{c}")?;
            } else {
                write!(f, "{c}*{name}")?;
            }
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}
