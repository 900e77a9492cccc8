use std::f64::consts::{FRAC_PI_2, FRAC_PI_4, PI};

use elpga::el1::PointEl1;
use elpga::el2::{self, LineEl2, PointEl2, TriangleEl2};
use elpga::el3::{self, CliffordSign, LineEl3, PlaneEl3, PointEl3};
use elpga::{Error, Multivector, Space};

fn named(space: Space, terms: &[(&str, f64)]) -> Multivector {
    Multivector::from_named(space, terms).unwrap()
}

#[test]
fn el1_worked_distances() {
    let a = PointEl1::new(-2.0, 1.0).unwrap();
    let b = PointEl1::new(-1.0, 1.0).unwrap();
    let c = PointEl1::new(3.0, 1.0).unwrap();
    assert!((a.distance(&b).unwrap() - (2f64.atan() - FRAC_PI_4)).abs() < 1e-15);
    assert!((a.distance(&c).unwrap() - (PI - 2f64.atan() - 3f64.atan())).abs() < 1e-15);
}

#[test]
fn el1_polar_points() {
    let e0 = PointEl1::new(1.0, 0.0).unwrap();
    let polar = e0.polar();
    assert!(polar.as_multivector().max_abs_diff_up_to_sign(&named(Space::El1, &[("e1", 1.0)])) == 0.0);
    let minus_e1 = PointEl1::new(0.0, -1.0).unwrap();
    assert!(minus_e1.polar().as_multivector().max_abs_diff_up_to_sign(e0.as_multivector()) == 0.0);
}

#[test]
fn el2_products_of_the_example_points() {
    let p = named(Space::El2, &[("e12", 1.0), ("e20", 1.0)]);
    let q = named(Space::El2, &[("e12", 1.0), ("e01", 2.0)]);
    let dot = (p.normalized().unwrap() | q.normalized().unwrap()).scalar_part();
    assert!((dot.abs() - 1.0 / 10f64.sqrt()).abs() < 1e-15);
    let a = p & q;
    assert_eq!(a, named(Space::El2, &[("e0", -2.0), ("e1", 2.0), ("e2", 1.0)]));
    assert_eq!(a.norm().unwrap(), 3.0);
    let polar = a.dual_i();
    assert_eq!(polar, named(Space::El2, &[("e12", -2.0), ("e20", 2.0), ("e01", 1.0)]));
}

#[test]
fn el2_distances() {
    let p = PointEl2::from_standard(1.0, 0.0);
    let q = PointEl2::from_standard(0.0, 2.0);
    assert!((p.distance(&q).unwrap() - (1.0 / 10f64.sqrt()).acos()).abs() < 1e-15);
    let a = LineEl2::new(-2.0, 2.0, 1.0).unwrap();
    let p = PointEl2::new(1.0, -0.6, 0.8).unwrap();
    let r = el2::distance_lp(&a, &p).unwrap();
    assert!((r - (2.4 / (3.0 * 2f64.sqrt())).asin()).abs() < 1e-15);
}

/// Area of a triangle with a right angle at `f`, straight from the sine rule
/// `sin S = |F∨P∨Q| / (1 + |P·Q|)` on normalised points.
fn right_area(f: &PointEl2, p: &PointEl2, q: &PointEl2) -> f64 {
    let f = f.as_multivector().normalized().unwrap();
    let p = p.as_multivector().normalized().unwrap();
    let q = q.as_multivector().normalized().unwrap();
    let fpq = ((f & p) & q).scalar_part().abs();
    (fpq / (1.0 + (p | q).scalar_part().abs())).asin()
}

/// Splits the triangle at the foot of the perpendicular from `p` onto `q∨r`.
fn split_area(p: &PointEl2, q: &PointEl2, r: &PointEl2) -> f64 {
    let side = q.join(r);
    let foot = PointEl2::from_multivector(el2::project(p.as_multivector(), side.as_multivector()).unwrap()).unwrap();
    let a1 = right_area(&foot, p, q);
    let a2 = right_area(&foot, p, r);
    let qf = q.distance(&foot).unwrap();
    let fr = foot.distance(r).unwrap();
    if (qf + fr - q.distance(r).unwrap()).abs() < 1e-12 {
        a1 + a2
    } else {
        (a1 - a2).abs()
    }
}

#[test]
fn el2_triangle_areas_match_the_right_triangle_split() {
    let q = PointEl2::new(1.0, -2.0, 1.0).unwrap();
    let r = PointEl2::new(1.0, -0.75, 1.5).unwrap();
    let figure_three = PointEl2::new(1.0, -1.0, 0.0).unwrap();
    let figure_four = PointEl2::new(1.0, 3.0, -1.0).unwrap();
    // Spherical excess of the short-sided triangle, by Girard's formula on
    // the unit sphere over the chart.
    for (p, girard) in [(figure_three, 0.154797457466675), (figure_four, 0.209400881091029)] {
        let t = TriangleEl2::new(p, q, r).unwrap();
        let expected = split_area(&p, &q, &r);
        assert!((t.area() - expected).abs() < 1e-12, "{} vs {}", t.area(), expected);
        assert!((t.area() - girard).abs() < 1e-13);
    }
}

#[test]
fn el2_max_area_triangle() {
    let a = LineEl2::new(0.4, -1.0, 0.3).unwrap();
    let b = a.polar().join(&PointEl2::from_standard(0.2, 0.9));
    let t = el2::max_area_triangle(&a, &b).unwrap();
    assert!((t.area() - FRAC_PI_2).abs() < 1e-12);
    for angle in t.side_angles() {
        assert!((angle - FRAC_PI_2).abs() < 1e-12);
    }
}

#[test]
fn el3_join_and_norm() {
    let p = PointEl3::new(1.0, 1.0, 0.0, 0.0).unwrap();
    let q = PointEl3::new(1.0, 0.0, 1.0, 1.0 / 3.0).unwrap();
    let l = p.join(&q).unwrap();
    let expected =
        named(Space::El3, &[("e20", -1.0 / 3.0), ("e30", 1.0), ("e23", 1.0), ("e31", -1.0), ("e12", -1.0 / 3.0)]);
    assert!(l.as_multivector().max_abs_diff(&expected) < 1e-15);
    assert!((l.norm() - 29f64.sqrt() / 3.0).abs() < 1e-15);
}

#[test]
fn el3_not_invertible() {
    let i = Multivector::pseudoscalar(Space::El3);
    assert_eq!((i + 1.0).inverse_blade(), Err(Error::NonInvertible));
    assert_eq!((i + 1.0) * (i - 1.0), Multivector::zero(Space::El3));
}

#[test]
fn el3_commutator_separations() {
    let l = LineEl3::from_plucker([-1.5, 1.0, -0.5, -1.0, -2.5, -2.0]).unwrap();
    let f = LineEl3::from_plucker([1.0, 5.0 / 3.0, -2.0, -1.0, 3.0, 2.0]).unwrap();
    let m = el3::line_line_metrics(&l, &f).unwrap();
    let s17 = 17f64.sqrt();
    assert!((m.r1.sin() - ((22.0 - 5.0 * s17) / 59.0).sqrt()).abs() < 1e-15);
    assert!((m.r2.sin() - ((22.0 + 5.0 * s17) / 59.0).sqrt()).abs() < 1e-15);

    // Both axes of the commutator meet both lines.
    let c = l.as_multivector().commutator(f.as_multivector()).unwrap();
    let axes = el3::axis_decompose(&c).unwrap();
    for axis in [axes.larger, axes.smaller] {
        let axis = LineEl3::from_multivector(axis).unwrap();
        for line in [&l, &f] {
            let meet = el3::line_line_metrics(&axis, line).unwrap();
            assert!(meet.v.abs() < 1e-14, "{meet:?}");
        }
    }
}

#[test]
fn el3_clifford_bivector_axes() {
    let e23 = named(Space::El3, &[("e23", 1.0)]);
    let xi = (Multivector::pseudoscalar(Space::El3) + 1.0) * e23;
    let d = el3::axis_decompose(&xi).unwrap();
    assert!(d.degenerate);
    assert_eq!(d.larger, e23);
    assert_eq!(d.smaller, named(Space::El3, &[("e10", 1.0)]));
}

#[test]
fn el3_clifford_parallels_at_a_tenth_of_pi() {
    let l = PointEl3::new(1.0, 1.0, 0.0, 0.0).unwrap().join(&PointEl3::new(1.0, 0.0, 1.0, 1.0 / 3.0).unwrap()).unwrap();
    let theta = FRAC_PI_2 - PI / 10.0;
    for sign in [CliffordSign::Positive, CliffordSign::Negative] {
        for k in 0..32 {
            let phi = 2.0 * PI * k as f64 / 32.0;
            let par = el3::clifford_parallel(&l, sign, phi, theta).unwrap();
            for j in 0..100 {
                let t = PI * j as f64 / 100.0;
                let r = el3::distance_line_point(&l, &par.point_at(t)).unwrap();
                assert!((r - PI / 10.0).abs() < 1e-12);
            }
        }
    }
}

#[test]
fn el3_plane_point_examples() {
    let a = PlaneEl3::new(1.0, 0.5, -1.5, 1.0).unwrap();
    let p = PointEl3::new(1.0, -0.5, 0.0, 1.5).unwrap();
    // a·P is perpendicular to a and passes through its polar point.
    let perp = LineEl3::from_multivector(*a.as_multivector() | *p.as_multivector()).unwrap();
    assert!(perp.contains(&p) && perp.contains(&a.polar()));
    assert!((el3::angle_line_plane(&perp, &a).unwrap() - FRAC_PI_2).abs() < 1e-15);
    let r = el3::distance_plane_point(&a, &a.polar()).unwrap();
    assert_eq!(r, FRAC_PI_2);
}

#[test]
fn el3_origin_distance() {
    let origin = PointEl3::new(1.0, 0.0, 0.0, 0.0).unwrap();
    let p = PointEl3::new(1.0, 1.0, 0.0, 0.0).unwrap();
    assert!((el3::distance_pp(&origin, &p).unwrap() - FRAC_PI_4).abs() < 1e-15);
}
