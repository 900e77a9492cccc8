//! Elliptic projective geometric algebra in one, two and three dimensions.
//!
//! The algebra is the Clifford algebra of `R^{n+1}` with every basis vector
//! squaring to `+1`. Grade-1 elements are hyperplanes (points of the line,
//! lines of the plane, planes of space) and points are grade-`n` blades.
//!
//! ```
//! use elpga::{el2::PointEl2, Space, Multivector};
//!
//! let p = PointEl2::from_standard(1.0, 0.0);
//! let q = PointEl2::from_standard(0.0, 2.0);
//! let r = p.distance(&q).unwrap();
//! assert!((r - (1.0 / 10f64.sqrt()).acos()).abs() < 1e-12);
//!
//! let line = p.join(&q);
//! let expect = Multivector::from_named(Space::El2, &[("e0", -2.0), ("e1", 2.0), ("e2", 1.0)]).unwrap();
//! assert_eq!(*line.as_multivector(), expect);
//! ```

#![no_std]
#![forbid(unsafe_code)]

#[cfg(test)]
extern crate std;

mod math;

pub mod basis;
pub mod blade;
pub mod el1;
pub mod el2;
pub mod el3;
pub mod error;
pub mod multivector;
pub mod space;
pub mod spinor;

pub use blade::ReflectDirection;
pub use error::{Error, Result};
pub use multivector::Multivector;
pub use space::Space;
pub use spinor::{exp_bivector, Spinor};

/// Library-wide tolerance for simplicity, Plücker and invertibility checks.
pub const EPSILON: f64 = 1e-9;
