//! Elliptic 3-space.
//!
//! Planes are vectors `d e0 + a e1 + b e2 + c e3`, lines are simple
//! bivectors with Plücker coordinates `p10, p20, p30, p23, p31, p12`, and
//! points are trivectors `w e123 + x e320 + y e130 + z e210`. The pseudoscalar
//! squares to `+1` and commutes with every even element, which gives lines a
//! polar partner `ΛI` and splits every bivector into two commuting axes.

pub mod axes;
pub mod blades;
pub mod clifford;
pub mod metrics;
pub mod motion;
pub mod projection;
pub mod quaternion;

pub use axes::{axis_decompose, axis_decompose_with, AxisDecomposition};
pub use blades::{LineEl3, PlaneEl3, PointEl3};
pub use clifford::{
    clifford_bivector, clifford_frame, clifford_parallel, clifford_parallel_with_omega, omega, parallel_through_point,
    CliffordBivector, CliffordFrame, CliffordSign,
};
pub use metrics::{
    angle_line_plane, angle_planes, distance_line_point, distance_plane_point, distance_pp, line_line_metrics,
    line_line_metrics_with, plane_product, LineLineMetrics, LineRelation,
};
pub use motion::{clifford_translate, clifford_translate_point, clifford_translator, double_rotation, double_rotor};
pub use projection::{
    line_perpendicular_through_point, project_line_on_line, project_on_line, project_on_plane, project_on_point,
    reflect, reject_by_line, reject_by_plane, reject_by_point, reject_line_by_line, LineProjectionKind,
};
pub use quaternion::{clifford_translate_quat, Quaternion, QuaternionSide};

/// Canonical storage indices of the grade-1, grade-2 and grade-3 blades.
pub(crate) mod idx {
    pub const E0: usize = 0b0001;
    pub const E1: usize = 0b0010;
    pub const E2: usize = 0b0100;
    pub const E3: usize = 0b1000;
    pub const E01: usize = 0b0011;
    pub const E02: usize = 0b0101;
    pub const E03: usize = 0b1001;
    pub const E12: usize = 0b0110;
    pub const E13: usize = 0b1010;
    pub const E23: usize = 0b1100;
    pub const E012: usize = 0b0111;
    pub const E013: usize = 0b1011;
    pub const E023: usize = 0b1101;
    pub const E123: usize = 0b1110;
    /// Lines through the origin are spanned by these.
    pub const ORIGIN: [usize; 3] = [E23, E13, E12];
    /// Lines on the plane `e0`.
    pub const IDEAL: [usize; 3] = [E01, E02, E03];
}
