//! Property tests for the shared algebra, El1 and El2.

use std::f64::consts::{FRAC_PI_2, PI};

use elpga::el1::PointEl1;
use elpga::el2::{self, CircleKind, LineEl2, PointEl2};
use elpga::{exp_bivector, Multivector, Space, Spinor};
use proptest::prelude::*;

fn coeffs(n: usize) -> impl Strategy<Value = Vec<f64>> {
    prop::collection::vec(-2.0..2.0f64, n)
}

fn multivector(space: Space) -> impl Strategy<Value = Multivector> {
    coeffs(space.blade_count()).prop_map(move |c| Multivector::from_coeffs(space, &c).unwrap())
}

fn any_space() -> impl Strategy<Value = Space> {
    prop::sample::select(Space::ALL.to_vec())
}

/// A bivector with norm at most `2`.
fn bivector(space: Space) -> impl Strategy<Value = Multivector> {
    multivector(space).prop_map(|m| {
        let b = m.grade(2);
        let n = b.raw_norm();
        if n > 2.0 {
            b * (2.0 / n)
        } else {
            b
        }
    })
}

fn el1_point() -> impl Strategy<Value = PointEl1> {
    (-2.0..2.0f64, -2.0..2.0f64)
        .prop_filter("nonzero", |(d, a)| d * d + a * a > 0.01)
        .prop_map(|(d, a)| PointEl1::new(d, a).unwrap())
}

fn el2_point() -> impl Strategy<Value = PointEl2> {
    prop::array::uniform3(-2.0..2.0f64)
        .prop_filter("nonzero", |c| c.iter().map(|x| x * x).sum::<f64>() > 0.01)
        .prop_map(|[w, x, y]| PointEl2::new(w, x, y).unwrap())
}

fn el2_line() -> impl Strategy<Value = LineEl2> {
    prop::array::uniform3(-2.0..2.0f64)
        .prop_filter("nonzero", |c| c.iter().map(|x| x * x).sum::<f64>() > 0.01)
        .prop_map(|[d, a, b]| LineEl2::new(d, a, b).unwrap())
}

/// `| |P·Q|² + ‖P∨Q‖² - 1 |` on the normalised points.
fn unit_norm_gap(p: &Multivector, q: &Multivector) -> f64 {
    let p = p.normalized().unwrap();
    let q = q.normalized().unwrap();
    let dot = (p | q).scalar_part();
    let join = (p & q).raw_norm();
    (dot * dot + join * join - 1.0).abs()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1024))]

    #[test]
    fn geometric_product_is_associative(
        space in any_space(),
        seed in coeffs(48),
    ) {
        let n = space.blade_count();
        let a = Multivector::from_coeffs(space, &seed[..n]).unwrap();
        let b = Multivector::from_coeffs(space, &seed[16..16 + n]).unwrap();
        let c = Multivector::from_coeffs(space, &seed[32..32 + n]).unwrap();
        prop_assert!(((a * b) * c).max_abs_diff(&(a * (b * c))) < 1e-12);
    }

    #[test]
    fn vectors_square_to_their_norm(space in any_space(), m in coeffs(16)) {
        let a = Multivector::from_coeffs(space, &m[..space.blade_count()]).unwrap().grade(1);
        prop_assume!(a.raw_norm() > 0.1);
        let a = a.normalized().unwrap();
        prop_assert!((a * a).max_abs_diff(&Multivector::scalar(space, 1.0)) < 1e-12);
    }

    #[test]
    fn norm_is_the_coefficient_norm(space in any_space(), m in coeffs(16), k in 0u32..4) {
        let a = Multivector::from_coeffs(space, &m[..space.blade_count()]).unwrap().grade(k);
        let euclid = a.coeffs().iter().map(|c| c * c).sum::<f64>().sqrt();
        let reverse = (a * a.reverse()).scalar_part().abs().sqrt();
        prop_assert!((reverse - euclid).abs() < 1e-12);
    }

    #[test]
    fn double_dual_is_a_sign(space in any_space(), m in coeffs(16)) {
        let a = Multivector::from_coeffs(space, &m[..space.blade_count()]).unwrap();
        let back = a.dual_j().dual_j();
        let sign = if space.pseudoscalar_square() > 0.0 { 1.0 } else { -1.0 };
        prop_assert!(back.max_abs_diff(&(a * sign)) < 1e-12);
        prop_assert!(a.dual_j().undual_j().max_abs_diff(&a) < 1e-12);
    }

    #[test]
    fn join_agrees_with_the_dual_pullback(space in any_space(), seed in coeffs(32)) {
        let n = space.blade_count();
        let a = Multivector::from_coeffs(space, &seed[..n]).unwrap();
        let b = Multivector::from_coeffs(space, &seed[16..16 + n]).unwrap();
        let pullback = (a.dual_j() ^ b.dual_j()).undual_j();
        prop_assert!((a & b).max_abs_diff(&pullback) < 1e-12);
    }

    #[test]
    fn exp_reverse_is_exp_of_negative(b in any_space().prop_flat_map(bivector)) {
        let space = b.space();
        let s = exp_bivector(&b).unwrap();
        let t = exp_bivector(&-b).unwrap();
        prop_assert!(s.reverse().value().max_abs_diff(t.value()) < 1e-12);
        let one = Multivector::scalar(space, 1.0);
        prop_assert!((*s.value() * s.value().reverse()).max_abs_diff(&one) < 1e-12);
    }

    #[test]
    fn spinors_are_closed_under_products(space in any_space(), seed in coeffs(32)) {
        let n = space.blade_count();
        let a = Multivector::from_coeffs(space, &seed[..n]).unwrap().grade(2);
        let b = Multivector::from_coeffs(space, &seed[16..16 + n]).unwrap().grade(2);
        let s = exp_bivector(&a).unwrap().compose(&exp_bivector(&b).unwrap()).unwrap();
        prop_assert!(Spinor::new_with(*s.value(), 1e-12).is_ok());
    }

    #[test]
    fn el1_distance_is_a_metric(a in el1_point(), b in el1_point(), c in el1_point()) {
        let ab = a.distance(&b).unwrap();
        let bc = b.distance(&c).unwrap();
        let ac = a.distance(&c).unwrap();
        prop_assert!((ab - b.distance(&a).unwrap()).abs() < 1e-15);
        prop_assert!(ac <= ab + bc + 1e-12);
        prop_assert!((0.0..=FRAC_PI_2).contains(&ab));
        prop_assert!(unit_norm_gap(a.as_multivector(), b.as_multivector()) < 1e-12);
    }

    #[test]
    fn el1_translation_is_an_isometry(a in el1_point(), b in el1_point(), lambda in -4.0..4.0f64) {
        let before = a.distance(&b).unwrap();
        let after = a.translate(lambda).distance(&b.translate(lambda)).unwrap();
        prop_assert!((before - after).abs() < 1e-12);
    }

    #[test]
    fn el1_projection_and_rejection_sum(a in el1_point(), b in el1_point()) {
        let sum = a.project(&b).unwrap() + a.reject(&b).unwrap();
        prop_assert!(sum.max_abs_diff(a.as_multivector()) < 1e-12);
    }

    #[test]
    fn el1_point_products_are_exponentials(a in el1_point(), b in el1_point()) {
        let a = a.normalized().unwrap();
        let b = b.normalized().unwrap();
        let s = *a.as_multivector() * *b.as_multivector();
        let gamma = s.get(3).atan2(s.scalar_part());
        let e01 = Multivector::basis(Space::El1, 3, gamma);
        prop_assert!(exp_bivector(&e01).unwrap().value().max_abs_diff(&s) < 1e-12);
    }

    #[test]
    fn el2_norm_identity(p in el2_point(), q in el2_point()) {
        prop_assert!(unit_norm_gap(p.as_multivector(), q.as_multivector()) < 1e-12);
    }

    #[test]
    fn el2_rotations_are_isometries(
        p in el2_point(),
        q in el2_point(),
        a in el2_line(),
        b in el2_line(),
        center in el2_point(),
        alpha in -PI..PI,
    ) {
        let s = el2::rotor(&center, alpha).unwrap();
        let mv = |m: &Multivector| s.apply(m).unwrap();
        let p2 = PointEl2::from_multivector(mv(p.as_multivector())).unwrap();
        let q2 = PointEl2::from_multivector(mv(q.as_multivector())).unwrap();
        let a2 = LineEl2::from_multivector(mv(a.as_multivector())).unwrap();
        let b2 = LineEl2::from_multivector(mv(b.as_multivector())).unwrap();
        prop_assert!((el2::distance_pp(&p, &q).unwrap() - el2::distance_pp(&p2, &q2).unwrap()).abs() < 1e-10);
        prop_assert!((el2::distance_lp(&a, &p).unwrap() - el2::distance_lp(&a2, &p2).unwrap()).abs() < 1e-10);
        prop_assert!((el2::angle_ll(&a, &b).unwrap() - el2::angle_ll(&a2, &b2).unwrap()).abs() < 1e-10);
    }

    #[test]
    fn el2_lines_always_meet(a in el2_line(), b in el2_line()) {
        let an = a.as_multivector().normalized().unwrap();
        let bn = b.as_multivector().normalized().unwrap();
        prop_assume!(an.max_abs_diff_up_to_sign(&bn) > 1e-3);
        let m = a.meet(&b).unwrap();
        prop_assert!(a.contains(&m) && b.contains(&m));
    }

    #[test]
    fn el2_max_area_triangles(a in el2_line(), p in el2_point()) {
        let b = a.polar().join(&p);
        prop_assume!(b.norm() > 1e-3 * a.norm() * p.norm());
        let t = el2::max_area_triangle(&a, &b).unwrap();
        prop_assert!((t.area() - FRAC_PI_2).abs() < 1e-10);
        for angle in t.side_angles() {
            prop_assert!((angle - FRAC_PI_2).abs() < 1e-10);
        }
    }
}

proptest! {
    // Each case rotates 10⁴ sample points.
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn el2_circle_classes_match_a_sampled_scan(center in el2_point(), p in el2_point()) {
        let (a, b, c) = el2::circle_weight_curve(&center, &p).unwrap();
        let amplitude = (a * a + b * b).sqrt();
        prop_assume!((amplitude - c.abs()).abs() > 1e-3);
        let kind = el2::classify_circle(&center, &p).unwrap();
        let pn = p.as_multivector().normalized().unwrap();
        let n = 10_000;
        let mut crossings = 0;
        let w = |k: usize| {
            let t = 2.0 * PI * k as f64 / n as f64;
            el2::rotate(&pn, &center, t).unwrap().get(6)
        };
        let mut prev = w(0);
        for k in 1..=n {
            let next = w(k % n);
            if (prev < 0.0) != (next < 0.0) {
                crossings += 1;
            }
            prev = next;
        }
        let expected = match kind {
            CircleKind::Elliptic => 0,
            CircleKind::Hyperbolic | CircleKind::Line => 2,
            CircleKind::Parabolic => unreachable!(),
        };
        prop_assert_eq!(crossings, expected, "{:?}", kind);
    }
}

#[test]
fn pseudoscalar_factors_annihilate() {
    let i = Multivector::pseudoscalar(Space::El3);
    assert_eq!((i + 1.0) * (i - 1.0), Multivector::zero(Space::El3));
}
