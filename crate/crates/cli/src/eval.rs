//! Query evaluation.
//!
//! Each query names an op, entity arguments and numeric or keyword
//! parameters. Results are emitted in file order. Scalars are rounded to 15
//! significant digits and multivectors use the coefficient JSON.

use elpga::el2::{self, TriangleEl2};
use elpga::el3::{self, CliffordBivector, CliffordSign, LineProjectionKind, QuaternionSide};
use elpga::{blade, exp_bivector, Multivector, ReflectDirection, Space, Spinor};
use serde_json::{json, Value};

use crate::error::{CliError, Result};
use crate::json;
use crate::scene::{Entity, Query, Scene};

const ALL: &[Space] = &Space::ALL;
const EL1: &[Space] = &[Space::El1];
const EL2: &[Space] = &[Space::El2];
const EL3: &[Space] = &[Space::El3];

/// Op name, the spaces it is defined in and the parameters it accepts.
const OPS: &[(&str, &[Space], &[&str])] = &[
    ("product", ALL, &[]),
    ("wedge", ALL, &[]),
    ("inner", ALL, &[]),
    ("join", ALL, &[]),
    ("commutator", ALL, &[]),
    ("dual", ALL, &[]),
    ("reverse", ALL, &[]),
    ("grade", ALL, &["k"]),
    ("norm", ALL, &[]),
    ("normalize", ALL, &[]),
    ("inverse", ALL, &[]),
    ("exp", ALL, &[]),
    ("apply", ALL, &[]),
    ("distance", ALL, &[]),
    ("angle", &[Space::El2, Space::El3], &[]),
    ("polar", ALL, &[]),
    ("meet", &[Space::El2, Space::El3], &[]),
    ("project", ALL, &["kind"]),
    ("reject", ALL, &["kind"]),
    ("reflect", ALL, &["direction"]),
    ("translate", EL1, &["lambda"]),
    ("rotate", EL2, &["alpha"]),
    ("perpendicular", &[Space::El2, Space::El3], &[]),
    ("triangle", EL2, &[]),
    ("right_triangle_area", EL2, &[]),
    ("max_area_triangle", EL2, &[]),
    ("classify_circle", EL2, &[]),
    ("line_metrics", EL3, &[]),
    ("axes", EL3, &[]),
    ("clifford_frame", EL3, &[]),
    ("clifford_bivector", EL3, &["sign"]),
    ("clifford_parallel", EL3, &["sign", "phi", "theta"]),
    ("parallel_through_point", EL3, &["sign"]),
    ("double_rotation", EL3, &["alpha", "beta"]),
    ("clifford_translate", EL3, &["sign", "beta"]),
    ("clifford_translate_quat", EL3, &["side", "beta"]),
];

fn op_spec(op: &str) -> Option<&'static (&'static str, &'static [Space], &'static [&'static str])> {
    OPS.iter().find(|(name, _, _)| *name == op)
}

pub fn is_known_op(space: Space, op: &str) -> bool {
    op_spec(op).is_some_and(|(_, spaces, _)| spaces.contains(&space))
}

/// Names of every op available in `space`.
pub fn ops_for(space: Space) -> impl Iterator<Item = &'static str> {
    OPS.iter().filter(move |(_, s, _)| s.contains(&space)).map(|(n, _, _)| *n)
}

pub fn scalar(x: f64) -> Value {
    Value::from(json::round_sig(x, 15))
}

fn mv(m: &Multivector) -> Value {
    json::to_json(m)
}

/// Evaluates every query, stopping at the first failure.
pub fn evaluate(scene: &Scene, tol: f64) -> Result<Value> {
    let mut results = Vec::with_capacity(scene.queries.len());
    for q in &scene.queries {
        let value = run_query(scene.space, &scene.entities, q, tol)?;
        results.push(json!({"name": q.name, "op": q.op, "value": value}));
    }
    Ok(json!({"space": scene.space.name(), "results": results}))
}

/// Evaluates one query against `entities`.
pub fn run_query(space: Space, entities: &[(String, Entity)], q: &Query, tol: f64) -> Result<Value> {
    Ctx::new(space, entities, q, tol)?.run()
}

struct Ctx<'a> {
    q: &'a Query,
    space: Space,
    args: Vec<&'a Entity>,
    tol: f64,
}

impl<'a> Ctx<'a> {
    fn new(space: Space, entities: &'a [(String, Entity)], q: &'a Query, tol: f64) -> Result<Self> {
        if !is_known_op(space, &q.op) {
            return Err(CliError::invalid(format!("query `{}`: unknown op `{}` in {space}", q.name, q.op)));
        }
        let (_, _, allowed) = op_spec(&q.op).ok_or_else(|| CliError::invalid(format!("unknown op `{}`", q.op)))?;
        if let Some(key) = q.params.keys().find(|k| !allowed.contains(&k.as_str())) {
            return Err(CliError::invalid(format!("query `{}`: op `{}` takes no parameter `{key}`", q.name, q.op)));
        }
        let args = q
            .args
            .iter()
            .map(|a| {
                crate::scene::find(entities, a)
                    .ok_or_else(|| CliError::invalid(format!("query `{}`: unknown entity `{a}`", q.name)))
            })
            .collect::<Result<_>>()?;
        Ok(Ctx { q, space, args, tol })
    }

    fn domain<T>(&self, r: elpga::Result<T>) -> Result<T> {
        r.map_err(|source| CliError::Domain { context: format!("query `{}`", self.q.name), source })
    }

    fn invalid(&self, msg: impl std::fmt::Display) -> CliError {
        CliError::invalid(format!("query `{}`: {msg}", self.q.name))
    }

    fn arity(&self, n: usize) -> Result<()> {
        if self.args.len() == n {
            Ok(())
        } else {
            Err(self.invalid(format_args!("op `{}` takes {n} argument(s), got {}", self.q.op, self.args.len())))
        }
    }

    fn unsupported(&self) -> CliError {
        let roles: Vec<_> = self.args.iter().map(|e| e.role().name()).collect();
        self.invalid(format_args!("op `{}` does not accept ({}) in {}", self.q.op, roles.join(", "), self.space))
    }

    fn m(&self, i: usize) -> Multivector {
        *self.args[i].mv()
    }

    fn number(&self, key: &str) -> Result<f64> {
        match self.q.params.get(key) {
            Some(v) => v.as_f64().ok_or_else(|| self.invalid(format_args!("parameter `{key}` must be a number"))),
            None => Err(self.invalid(format_args!("op `{}` needs parameter `{key}`", self.q.op))),
        }
    }

    fn keyword(&self, key: &str) -> Result<Option<&'a str>> {
        match self.q.params.get(key) {
            None => Ok(None),
            Some(Value::String(s)) => Ok(Some(s)),
            Some(_) => Err(self.invalid(format_args!("parameter `{key}` must be a string"))),
        }
    }

    fn choice<T: Copy>(&self, key: &str, options: &[(&str, T)], default: Option<T>) -> Result<T> {
        match self.keyword(key)? {
            Some(s) => options
                .iter()
                .find(|(n, _)| *n == s)
                .map(|(_, v)| *v)
                .ok_or_else(|| self.invalid(format_args!("parameter `{key}` has unknown value `{s}`"))),
            None => default.ok_or_else(|| self.invalid(format_args!("op `{}` needs parameter `{key}`", self.q.op))),
        }
    }

    fn sign(&self) -> Result<CliffordSign> {
        self.choice("sign", &[("positive", CliffordSign::Positive), ("negative", CliffordSign::Negative)], None)
    }

    /// A Clifford bivector given directly, or built from a line and `sign`.
    fn clifford(&self, i: usize) -> Result<CliffordBivector> {
        match self.args[i] {
            Entity::Line3(l) => Ok(el3::clifford_bivector(l, self.sign()?)),
            Entity::Bivector(b) | Entity::General(b) => {
                if self.q.params.contains_key("sign") {
                    return Err(self.invalid("`sign` only applies when a line is given"));
                }
                self.domain(CliffordBivector::new_with(*b, self.tol))
            }
            _ => Err(self.unsupported()),
        }
    }

    fn run(&self) -> Result<Value> {
        use Entity::*;
        let a = &self.args;
        let binary = |f: fn(&Multivector, &Multivector) -> elpga::Result<Multivector>| -> Result<Value> {
            self.arity(2)?;
            Ok(mv(&self.domain(f(a[0].mv(), a[1].mv()))?))
        };
        Ok(match self.q.op.as_str() {
            "product" => binary(Multivector::geometric_product)?,
            "wedge" => binary(Multivector::wedge)?,
            "inner" => binary(Multivector::inner)?,
            "join" => binary(Multivector::regressive)?,
            "commutator" => binary(Multivector::commutator)?,
            "dual" => {
                self.arity(1)?;
                mv(&self.m(0).dual_i())
            }
            "reverse" => {
                self.arity(1)?;
                mv(&self.m(0).reverse())
            }
            "grade" => {
                self.arity(1)?;
                let k = self.number("k")?;
                if k.fract() != 0.0 || k < 0.0 || k > self.space.dim() as f64 {
                    return Err(self.invalid(format_args!("grade {k} does not exist in {}", self.space)));
                }
                mv(&self.m(0).grade(k as u32))
            }
            "norm" => {
                self.arity(1)?;
                match a[0] {
                    Line3(l) => scalar(l.norm()),
                    e => scalar(self.domain(e.mv().norm_with(self.tol))?),
                }
            }
            "normalize" => {
                self.arity(1)?;
                mv(&self.domain(self.m(0).normalized())?)
            }
            "inverse" => {
                self.arity(1)?;
                mv(&self.domain(self.m(0).inverse_blade())?)
            }
            "exp" => {
                self.arity(1)?;
                mv(self.domain(exp_bivector(&self.m(0)))?.value())
            }
            "apply" => {
                self.arity(2)?;
                let s = self.domain(Spinor::new_with(self.m(0), self.tol))?;
                mv(&self.domain(s.apply(a[1].mv()))?)
            }
            "distance" => {
                self.arity(2)?;
                scalar(match (a[0], a[1]) {
                    (Point1(p), Point1(q)) => self.domain(p.distance(q))?,
                    (Point2(p), Point2(q)) => self.domain(el2::distance_pp(p, q))?,
                    (Line2(l), Point2(p)) | (Point2(p), Line2(l)) => self.domain(el2::distance_lp(l, p))?,
                    (Point3(p), Point3(q)) => self.domain(el3::distance_pp(p, q))?,
                    (Plane3(s), Point3(p)) | (Point3(p), Plane3(s)) => self.domain(el3::distance_plane_point(s, p))?,
                    (Line3(l), Point3(p)) | (Point3(p), Line3(l)) => self.domain(el3::distance_line_point(l, p))?,
                    (Line3(l), Line3(f)) => self.domain(el3::line_line_metrics_with(l, f, self.tol))?.r,
                    _ => return Err(self.unsupported()),
                })
            }
            "angle" => {
                self.arity(2)?;
                scalar(match (a[0], a[1]) {
                    (Line2(l), Line2(f)) => self.domain(el2::angle_ll(l, f))?,
                    (Plane3(s), Plane3(t)) => self.domain(el3::angle_planes(s, t))?,
                    (Line3(l), Plane3(s)) | (Plane3(s), Line3(l)) => self.domain(el3::angle_line_plane(l, s))?,
                    (Line3(l), Line3(f)) => self.domain(el3::line_line_metrics_with(l, f, self.tol))?.alpha,
                    _ => return Err(self.unsupported()),
                })
            }
            "polar" => {
                self.arity(1)?;
                match a[0] {
                    Point1(p) => mv(p.polar().as_multivector()),
                    Point2(p) => mv(p.polar().as_multivector()),
                    Line2(l) => mv(l.polar().as_multivector()),
                    Point3(p) => mv(p.polar().as_multivector()),
                    Line3(l) => mv(l.polar().as_multivector()),
                    Plane3(s) => mv(s.polar().as_multivector()),
                    _ => return Err(self.unsupported()),
                }
            }
            "meet" => {
                self.arity(2)?;
                match (a[0], a[1]) {
                    (Line2(l), Line2(f)) => mv(self.domain(l.meet(f))?.as_multivector()),
                    (Plane3(s), Plane3(t)) => mv(self.domain(s.meet(t))?.as_multivector()),
                    (Plane3(s), Line3(l)) | (Line3(l), Plane3(s)) => mv(self.domain(s.meet_line(l))?.as_multivector()),
                    _ => return Err(self.unsupported()),
                }
            }
            "project" | "reject" => self.project()?,
            "reflect" => {
                self.arity(2)?;
                let dir = self.choice(
                    "direction",
                    &[("top-down", ReflectDirection::TopDown), ("bottom-up", ReflectDirection::BottomUp)],
                    Some(ReflectDirection::TopDown),
                )?;
                let (b, r) = (a[0].mv(), a[1].mv());
                mv(&self.domain(match (self.space, dir) {
                    (Space::El2, ReflectDirection::TopDown) => el2::reflect_topdown(b, r),
                    (Space::El2, ReflectDirection::BottomUp) => el2::reflect_bottomup(b, r),
                    (Space::El3, _) => el3::reflect(b, r, dir),
                    (Space::El1, _) => blade::reflect(b, r, dir),
                })?)
            }
            "translate" => {
                self.arity(1)?;
                let Point1(p) = a[0] else { return Err(self.unsupported()) };
                mv(p.translate(self.number("lambda")?).as_multivector())
            }
            "rotate" => {
                self.arity(2)?;
                let Point2(c) = a[1] else { return Err(self.unsupported()) };
                mv(&self.domain(el2::rotate(a[0].mv(), c, self.number("alpha")?))?)
            }
            "perpendicular" => {
                self.arity(2)?;
                match (a[0], a[1]) {
                    (Line2(l), Point2(p)) => mv(self.domain(el2::perpendicular_through(l, p))?.as_multivector()),
                    (Line3(l), Point3(p)) => {
                        mv(self.domain(el3::line_perpendicular_through_point(l, p))?.as_multivector())
                    }
                    _ => return Err(self.unsupported()),
                }
            }
            "triangle" | "right_triangle_area" => {
                self.arity(3)?;
                let (Point2(p), Point2(q), Point2(r)) = (a[0], a[1], a[2]) else {
                    return Err(self.unsupported());
                };
                let t = self.domain(TriangleEl2::new(*p, *q, *r))?;
                if self.q.op == "triangle" {
                    triangle(&t)
                } else {
                    scalar(self.domain(t.right_angle_area_with(self.tol))?)
                }
            }
            "max_area_triangle" => {
                self.arity(2)?;
                let (Line2(l), Line2(f)) = (a[0], a[1]) else { return Err(self.unsupported()) };
                triangle(&self.domain(el2::max_area_triangle(l, f))?)
            }
            "classify_circle" => {
                self.arity(2)?;
                let (Point2(c), Point2(p)) = (a[0], a[1]) else { return Err(self.unsupported()) };
                Value::from(self.domain(el2::classify_circle_with(c, p, self.tol))?.name())
            }
            "line_metrics" => {
                self.arity(2)?;
                let (Line3(l), Line3(f)) = (a[0], a[1]) else { return Err(self.unsupported()) };
                let m = self.domain(el3::line_line_metrics_with(l, f, self.tol))?;
                json!({
                    "r": scalar(m.r),
                    "alpha": scalar(m.alpha),
                    "r1": scalar(m.r1),
                    "r2": scalar(m.r2),
                    "u": scalar(m.u),
                    "v": scalar(m.v),
                    "relation": m.relation.name(),
                })
            }
            "axes" => {
                self.arity(1)?;
                let d = self.domain(el3::axis_decompose_with(a[0].mv(), self.tol))?;
                json!({"larger": mv(&d.larger), "smaller": mv(&d.smaller), "degenerate": d.degenerate})
            }
            "clifford_frame" => {
                self.arity(1)?;
                let Line3(l) = a[0] else { return Err(self.unsupported()) };
                let f = self.domain(el3::clifford_frame(l))?;
                json!({
                    "line": mv(f.line.as_multivector()),
                    "m": mv(f.m.as_multivector()),
                    "p": mv(f.p.as_multivector()),
                    "m_perp": mv(f.m_perp.as_multivector()),
                    "p_perp": mv(f.p_perp.as_multivector()),
                })
            }
            "clifford_bivector" => {
                self.arity(1)?;
                let Line3(l) = a[0] else { return Err(self.unsupported()) };
                mv(el3::clifford_bivector(l, self.sign()?).value())
            }
            "clifford_parallel" => {
                self.arity(1)?;
                let Line3(l) = a[0] else { return Err(self.unsupported()) };
                let par = el3::clifford_parallel(l, self.sign()?, self.number("phi")?, self.number("theta")?);
                mv(self.domain(par)?.as_multivector())
            }
            "parallel_through_point" => {
                self.arity(2)?;
                let Point3(p) = a[1] else { return Err(self.unsupported()) };
                let xi = self.clifford(0)?;
                mv(self.domain(el3::parallel_through_point(&xi, p))?.as_multivector())
            }
            "double_rotation" => {
                self.arity(2)?;
                let Line3(l) = a[1] else { return Err(self.unsupported()) };
                let (alpha, beta) = (self.number("alpha")?, self.number("beta")?);
                mv(&self.domain(el3::double_rotation(a[0].mv(), l, alpha, beta))?)
            }
            "clifford_translate" => {
                self.arity(2)?;
                let xi = self.clifford(1)?;
                mv(&self.domain(el3::clifford_translate(a[0].mv(), &xi, self.number("beta")?))?)
            }
            "clifford_translate_quat" => {
                self.arity(2)?;
                let (Point3(p), Line3(l)) = (a[0], a[1]) else { return Err(self.unsupported()) };
                let side =
                    self.choice("side", &[("right", QuaternionSide::Right), ("left", QuaternionSide::Left)], None)?;
                let out = el3::clifford_translate_quat(p, l, side, self.number("beta")?);
                mv(self.domain(out)?.as_multivector())
            }
            other => return Err(self.invalid(format_args!("unknown op `{other}`"))),
        })
    }

    fn project(&self) -> Result<Value> {
        use Entity::*;
        self.arity(2)?;
        let project = self.q.op == "project";
        let (b, on) = (self.args[0], self.args[1]);
        let kind = self.choice(
            "kind",
            &[("first", LineProjectionKind::First), ("second", LineProjectionKind::Second)],
            Some(LineProjectionKind::First),
        )?;
        if self.q.params.contains_key("kind") && !matches!((b, on), (Line3(_), Line3(_))) {
            return Err(self.invalid("`kind` only applies to a line projected on a line"));
        }
        let bm = b.mv();
        let out = match (self.space, on) {
            (Space::El3, Plane3(s)) if project => el3::project_on_plane(bm, s),
            (Space::El3, Plane3(s)) => el3::reject_by_plane(bm, s),
            (Space::El3, Point3(p)) if project => el3::project_on_point(bm, p),
            (Space::El3, Point3(p)) => el3::reject_by_point(bm, p),
            (Space::El3, Line3(l)) => match (b, project) {
                (Line3(f), true) => el3::project_line_on_line(f, l, kind),
                (Line3(f), false) => el3::reject_line_by_line(f, l, kind),
                (_, true) => el3::project_on_line(bm, l),
                (_, false) => el3::reject_by_line(bm, l),
            },
            (Space::El3, _) => return Err(self.unsupported()),
            (_, a) if project => blade::project(bm, a.mv()),
            (_, a) => blade::reject(bm, a.mv()),
        };
        Ok(mv(&self.domain(out)?))
    }
}

fn triangle(t: &TriangleEl2) -> Value {
    let vertices: Vec<_> = t.vertices().iter().map(|p| mv(p.as_multivector())).collect();
    let angles: Vec<_> = t.side_angles().iter().map(|x| scalar(*x)).collect();
    json!({"area": scalar(t.area()), "angles": angles, "vertices": vertices})
}
