//! Scene files: a space, named entities with roles, and a list of queries.

use std::collections::HashSet;
use std::path::Path;

use elpga::el1::PointEl1;
use elpga::el2::{LineEl2, PointEl2};
use elpga::el3::{LineEl3, PlaneEl3, PointEl3};
use elpga::{Multivector, Space};
use serde::Deserialize;
use serde_json::{Map, Value};

use crate::error::{CliError, Result};
use crate::json;

/// What an entity is declared to be.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Role {
    Point,
    Line,
    Plane,
    Bivector,
    Multivector,
}

impl Role {
    fn parse(s: &str) -> Option<Role> {
        Some(match s {
            "point" => Role::Point,
            "line" => Role::Line,
            "plane" => Role::Plane,
            "bivector" => Role::Bivector,
            "multivector" => Role::Multivector,
            _ => return None,
        })
    }

    pub fn name(self) -> &'static str {
        match self {
            Role::Point => "point",
            Role::Line => "line",
            Role::Plane => "plane",
            Role::Bivector => "bivector",
            Role::Multivector => "multivector",
        }
    }
}

/// A validated entity.
#[derive(Clone, Debug)]
pub enum Entity {
    Point1(PointEl1),
    Point2(PointEl2),
    Line2(LineEl2),
    Point3(PointEl3),
    Line3(LineEl3),
    Plane3(PlaneEl3),
    /// Any grade-2 element, simple or not.
    Bivector(Multivector),
    General(Multivector),
}

impl Entity {
    pub fn mv(&self) -> &Multivector {
        match self {
            Entity::Point1(p) => p.as_multivector(),
            Entity::Point2(p) => p.as_multivector(),
            Entity::Line2(l) => l.as_multivector(),
            Entity::Point3(p) => p.as_multivector(),
            Entity::Line3(l) => l.as_multivector(),
            Entity::Plane3(a) => a.as_multivector(),
            Entity::Bivector(m) | Entity::General(m) => m,
        }
    }

    pub fn role(&self) -> Role {
        match self {
            Entity::Point1(_) | Entity::Point2(_) | Entity::Point3(_) => Role::Point,
            Entity::Line2(_) | Entity::Line3(_) => Role::Line,
            Entity::Plane3(_) => Role::Plane,
            Entity::Bivector(_) => Role::Bivector,
            Entity::General(_) => Role::Multivector,
        }
    }
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawScene {
    space: Value,
    #[serde(default)]
    entities: Map<String, Value>,
    #[serde(default)]
    queries: Vec<Query>,
    #[serde(default)]
    figures: Map<String, Value>,
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Query {
    pub name: String,
    pub op: String,
    #[serde(default)]
    pub args: Vec<String>,
    #[serde(default)]
    pub params: Map<String, Value>,
}

#[derive(Clone, Debug)]
pub struct Scene {
    pub space: Space,
    /// Entities in file order.
    pub entities: Vec<(String, Entity)>,
    pub queries: Vec<Query>,
    /// Per-kind figure settings, keyed by figure kind.
    pub figures: Map<String, Value>,
}

impl Scene {
    pub fn load(path: &Path, tol: f64) -> Result<Scene> {
        let text = std::fs::read_to_string(path).map_err(|e| CliError::invalid(format!("{}: {e}", path.display())))?;
        Scene::parse(&text, tol)
    }

    pub fn parse(text: &str, tol: f64) -> Result<Scene> {
        let raw: RawScene = serde_json::from_str(text).map_err(|e| CliError::invalid(format!("scene: {e}")))?;
        let space = json::parse_space(&raw.space).map_err(CliError::Invalid)?;
        let mut entities = Vec::with_capacity(raw.entities.len());
        for (name, value) in &raw.entities {
            let entity = match derived(value) {
                Some(from) => derive(space, &entities, name, value, from, tol)?,
                None => {
                    parse_entity(space, value, tol).map_err(|e| CliError::invalid(format!("entity `{name}`: {e}")))?
                }
            };
            entities.push((name.clone(), entity));
        }
        let mut seen = HashSet::new();
        for q in &raw.queries {
            if !seen.insert(q.name.as_str()) {
                return Err(CliError::invalid(format!("duplicate query name `{}`", q.name)));
            }
            for arg in &q.args {
                if find(&entities, arg).is_none() {
                    return Err(CliError::invalid(format!("query `{}`: unknown entity `{arg}`", q.name)));
                }
            }
            if !crate::eval::is_known_op(space, &q.op) {
                let known: Vec<_> = crate::eval::ops_for(space).collect();
                return Err(CliError::invalid(format!(
                    "query `{}`: unknown op `{}` in {space} (known: {})",
                    q.name,
                    q.op,
                    known.join(", ")
                )));
            }
        }
        Ok(Scene { space, entities, queries: raw.queries, figures: raw.figures })
    }

    pub fn entity(&self, name: &str) -> Option<&Entity> {
        find(&self.entities, name)
    }
}

pub fn find<'a>(entities: &'a [(String, Entity)], name: &str) -> Option<&'a Entity> {
    entities.iter().find(|(n, _)| n == name).map(|(_, e)| e)
}

fn derived(v: &Value) -> Option<&Value> {
    v.as_object().and_then(|o| o.get("from"))
}

/// Evaluates a `from` entity against the entities defined before it.
fn derive(
    space: Space,
    earlier: &[(String, Entity)],
    name: &str,
    value: &Value,
    from: &Value,
    tol: f64,
) -> Result<Entity> {
    let fail = |msg: String| CliError::invalid(format!("entity `{name}`: {msg}"));
    let obj = value.as_object().expect("checked by caller");
    if let Some(k) = obj.keys().find(|k| k.as_str() != "role" && k.as_str() != "from") {
        return Err(fail(format!("entity gives both `from` and `{k}`")));
    }
    let role = obj.get("role").and_then(Value::as_str).ok_or_else(|| fail("entity needs a string `role`".into()))?;
    let role = Role::parse(role).ok_or_else(|| fail(format!("unknown role `{role}`")))?;
    #[derive(Deserialize)]
    #[serde(deny_unknown_fields)]
    struct From {
        op: String,
        #[serde(default)]
        args: Vec<String>,
        #[serde(default)]
        params: Map<String, Value>,
    }
    let f: From = serde_json::from_value(from.clone()).map_err(|e| fail(format!("`from`: {e}")))?;
    if let Some(a) = f.args.iter().find(|a| find(earlier, a).is_none()) {
        return Err(fail(format!("`from` refers to `{a}`, which is not defined before it")));
    }
    let q = Query { name: name.to_string(), op: f.op, args: f.args, params: f.params };
    let out = crate::eval::run_query(space, earlier, &q, tol).map_err(|e| match e {
        CliError::Domain { source, .. } => CliError::Domain { context: format!("entity `{name}`"), source },
        CliError::Invalid(msg) => CliError::Invalid(msg.replacen("query `", "entity `", 1)),
        other => other,
    })?;
    let mv = json::from_json(&out, Some(space))
        .map_err(|_| fail(format!("op `{}` does not produce a multivector", q.op)))?;
    with_role(space, role, mv, tol).map_err(|e| fail(e.to_string()))
}

fn numbers(v: &Value, n: usize, what: &str) -> std::result::Result<Vec<f64>, String> {
    let items = v.as_array().ok_or_else(|| format!("`{what}` must be an array"))?;
    if items.len() != n {
        return Err(format!("`{what}` needs {n} numbers, got {}", items.len()));
    }
    items.iter().map(|x| x.as_f64().ok_or_else(|| format!("`{what}` must hold numbers"))).collect()
}

fn parse_entity(space: Space, v: &Value, tol: f64) -> std::result::Result<Entity, String> {
    let obj = v.as_object().ok_or("entity must be an object")?;
    let role = obj.get("role").and_then(Value::as_str).ok_or("entity needs a string `role`")?;
    let role = Role::parse(role).ok_or_else(|| format!("unknown role `{role}`"))?;
    let mut forms = obj.iter().filter(|(k, _)| k.as_str() != "role");
    let (form, value) = forms.next().ok_or("entity needs a value")?;
    if let Some((extra, _)) = forms.next() {
        return Err(format!("entity gives both `{form}` and `{extra}`"));
    }
    let e = |r: elpga::Result<Entity>| r.map_err(|e| e.to_string());
    let mv = match form.as_str() {
        "value" => json::from_json(value, Some(space))?,
        "coords" => {
            return e(match (space, role) {
                (Space::El1, Role::Point) => {
                    let c = numbers(value, 2, form)?;
                    PointEl1::new(c[0], c[1]).map(Entity::Point1)
                }
                (Space::El2, Role::Point) => {
                    let c = numbers(value, 3, form)?;
                    PointEl2::new(c[0], c[1], c[2]).map(Entity::Point2)
                }
                (Space::El2, Role::Line) => {
                    let c = numbers(value, 3, form)?;
                    LineEl2::new(c[0], c[1], c[2]).map(Entity::Line2)
                }
                (Space::El3, Role::Point) => {
                    let c = numbers(value, 4, form)?;
                    PointEl3::new(c[0], c[1], c[2], c[3]).map(Entity::Point3)
                }
                (Space::El3, Role::Plane) => {
                    let c = numbers(value, 4, form)?;
                    PlaneEl3::new(c[0], c[1], c[2], c[3]).map(Entity::Plane3)
                }
                _ => return Err(format!("`coords` is not defined for a {} in {space}", role.name())),
            });
        }
        "standard" => {
            return e(match (space, role) {
                (Space::El2, Role::Point) => {
                    let c = numbers(value, 2, form)?;
                    Ok(Entity::Point2(PointEl2::from_standard(c[0], c[1])))
                }
                (Space::El3, Role::Point) => {
                    let c = numbers(value, 3, form)?;
                    Ok(Entity::Point3(PointEl3::from_standard(c[0], c[1], c[2])))
                }
                _ => return Err(format!("`standard` is not defined for a {} in {space}", role.name())),
            });
        }
        "angle" => {
            if (space, role) != (Space::El1, Role::Point) {
                return Err("`angle` only builds points of el1".into());
            }
            let a = value.as_f64().ok_or("`angle` must be a number in radians")?;
            return Ok(Entity::Point1(PointEl1::from_angle(a)));
        }
        "plucker" => {
            if (space, role) != (Space::El3, Role::Line) {
                return Err("`plucker` only builds lines of el3".into());
            }
            let c = numbers(value, 6, form)?;
            LineEl3::bivector_from_plucker([c[0], c[1], c[2], c[3], c[4], c[5]])
        }
        other => return Err(format!("unknown entity field `{other}`")),
    };
    e(with_role(space, role, mv, tol))
}

fn with_role(space: Space, role: Role, mv: Multivector, tol: f64) -> elpga::Result<Entity> {
    let grade = |k: u32| -> elpga::Result<Multivector> {
        if mv.is_zero_with(0.0) {
            return Err(elpga::Error::ZeroInput);
        }
        match mv.blade_grade_with(tol) {
            Some(g) if g == k => Ok(mv.grade(k)),
            found => Err(elpga::Error::WrongGrade { expected: k, found }),
        }
    };
    Ok(match (space, role) {
        (_, Role::Multivector) => Entity::General(mv),
        (_, Role::Bivector) => Entity::Bivector(grade(2)?),
        (Space::El1, Role::Point) => Entity::Point1(PointEl1::from_multivector(grade(1)?)?),
        (Space::El2, Role::Point) => Entity::Point2(PointEl2::from_multivector(grade(2)?)?),
        (Space::El2, Role::Line) => Entity::Line2(LineEl2::from_multivector(grade(1)?)?),
        (Space::El3, Role::Point) => Entity::Point3(PointEl3::from_multivector(grade(3)?)?),
        (Space::El3, Role::Line) => Entity::Line3(LineEl3::from_multivector_with(grade(2)?, tol)?),
        (Space::El3, Role::Plane) => Entity::Plane3(PlaneEl3::from_multivector(grade(1)?)?),
        _ => return Err(elpga::Error::WrongSpace { expected: Space::El3, found: space }),
    })
}
