//! Figure data: trajectories and parallels sampled in algebra coordinates,
//! then drawn in the affine chart `w = 1`.

use std::f64::consts::{FRAC_PI_2, PI};
use std::fmt::Write as _;

use elpga::el2::{self, PointEl2};
use elpga::el3::{self, CliffordSign, LineEl3, PointEl3};
use elpga::{Multivector, Space};
use serde_json::{Map, Value};

use crate::error::{CliError, Result};
use crate::scene::{Entity, Scene};

/// Samples with a smaller chart weight are treated as off-chart.
pub const CHART_EPSILON: f64 = 1e-6;

/// Tolerance of the constant-distance checks run on every figure.
pub const DISTANCE_CHECK: f64 = 1e-9;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FigureKind {
    CircleTrajectory,
    CliffordParallels,
    RotationFlow,
}

impl FigureKind {
    pub const ALL: [FigureKind; 3] =
        [FigureKind::CircleTrajectory, FigureKind::CliffordParallels, FigureKind::RotationFlow];

    pub fn name(self) -> &'static str {
        match self {
            FigureKind::CircleTrajectory => "circle-trajectory",
            FigureKind::CliffordParallels => "clifford-parallels",
            FigureKind::RotationFlow => "rotation-flow",
        }
    }

    pub fn from_name(s: &str) -> Option<FigureKind> {
        FigureKind::ALL.into_iter().find(|k| k.name() == s)
    }
}

/// One sample of a trajectory, in homogeneous coordinates `(w, x, y[, z])`
/// of the normalised point.
#[derive(Clone, Debug, PartialEq)]
pub struct Sample {
    pub t: f64,
    pub coords: Vec<f64>,
    /// Distance checked by the figure, when it has one.
    pub check: Option<f64>,
}

impl Sample {
    /// Chart coordinates `(x/w, y/w[, z/w])`, or `None` off the chart.
    pub fn chart(&self) -> Option<Vec<f64>> {
        let w = self.coords[0];
        if w.abs() < CHART_EPSILON {
            return None;
        }
        Some(self.coords[1..].iter().map(|c| c / w).collect())
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Series {
    pub label: String,
    pub samples: Vec<Sample>,
}

impl Series {
    /// Chart polylines. A sample off the chart, or a change in the sign of
    /// `w` between neighbours, starts a new polyline.
    pub fn polylines(&self) -> Vec<Vec<Vec<f64>>> {
        let mut out = Vec::new();
        let mut current: Vec<Vec<f64>> = Vec::new();
        let mut last_sign = 0.0;
        for s in &self.samples {
            match s.chart() {
                Some(p) => {
                    let sign = s.coords[0].signum();
                    if sign != last_sign && !current.is_empty() {
                        out.push(std::mem::take(&mut current));
                    }
                    last_sign = sign;
                    current.push(p);
                }
                None => {
                    if !current.is_empty() {
                        out.push(std::mem::take(&mut current));
                    }
                }
            }
        }
        if !current.is_empty() {
            out.push(current);
        }
        out.retain(|p| p.iter().all(|c| c.iter().all(|x| x.is_finite())));
        out
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Marker {
    pub label: String,
    pub coords: Vec<f64>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct FigureData {
    pub kind: FigureKind,
    pub space: Space,
    pub title: String,
    pub series: Vec<Series>,
    pub markers: Vec<Marker>,
}

/// Evenly spaced parameters over `[t0, t1]`, both ends included.
fn parameters(t0: f64, t1: f64, n: usize) -> impl Iterator<Item = f64> {
    (0..n).map(move |k| if n == 1 { t0 } else { t0 + (t1 - t0) * k as f64 / (n - 1) as f64 })
}

struct Settings<'a> {
    kind: FigureKind,
    map: Option<&'a Map<String, Value>>,
    scene: &'a Scene,
}

impl<'a> Settings<'a> {
    fn new(scene: &'a Scene, kind: FigureKind) -> Result<Self> {
        let map = match scene.figures.get(kind.name()) {
            None => None,
            Some(Value::Object(m)) => Some(m),
            Some(_) => return Err(CliError::invalid(format!("figure `{}` settings must be an object", kind.name()))),
        };
        if let Some(m) = map {
            let allowed: &[&str] = match kind {
                FigureKind::CircleTrajectory => &["point", "center"],
                FigureKind::CliffordParallels => &["line", "theta", "count"],
                FigureKind::RotationFlow => &["line", "points", "alpha", "beta"],
            };
            if let Some(k) = m.keys().find(|k| !allowed.contains(&k.as_str())) {
                return Err(CliError::invalid(format!("figure `{}` has no setting `{k}`", kind.name())));
            }
        }
        Ok(Settings { kind, map, scene })
    }

    fn get(&self, key: &str) -> Option<&'a Value> {
        self.map.and_then(|m| m.get(key))
    }

    fn number(&self, key: &str, default: f64) -> Result<f64> {
        match self.get(key) {
            None => Ok(default),
            Some(v) => v.as_f64().filter(|x| x.is_finite()).ok_or_else(|| {
                CliError::invalid(format!("figure `{}`: `{key}` must be a finite number", self.kind.name()))
            }),
        }
    }

    fn entity_name(&self, key: &str, default: &'a str) -> Result<&'a str> {
        match self.get(key) {
            None => Ok(default),
            Some(Value::String(s)) => Ok(s),
            Some(_) => Err(CliError::invalid(format!("figure `{}`: `{key}` must be an entity name", self.kind.name()))),
        }
    }

    fn entity(&self, key: &str, default: &'a str) -> Result<(&'a str, &'a Entity)> {
        let name = self.entity_name(key, default)?;
        let e = self.scene.entity(name).ok_or_else(|| {
            CliError::invalid(format!("figure `{}` needs entity `{name}` (setting `{key}`)", self.kind.name()))
        })?;
        Ok((name, e))
    }

    fn require_space(&self, space: Space) -> Result<()> {
        if self.scene.space == space {
            Ok(())
        } else {
            Err(CliError::invalid(format!(
                "figure `{}` needs an {space} scene, got {}",
                self.kind.name(),
                self.scene.space
            )))
        }
    }
}

fn role_error(kind: FigureKind, name: &str, want: &str) -> CliError {
    CliError::invalid(format!("figure `{}`: entity `{name}` must be a {want}", kind.name()))
}

fn domain(kind: FigureKind, e: elpga::Error) -> CliError {
    CliError::Domain { context: format!("figure `{}`", kind.name()), source: e }
}

fn el2_coords(m: &Multivector) -> Vec<f64> {
    vec![m.named("e12").unwrap_or(0.0), m.named("e20").unwrap_or(0.0), m.named("e01").unwrap_or(0.0)]
}

fn el3_coords(p: &PointEl3) -> Vec<f64> {
    p.coordinates().to_vec()
}

pub fn build(scene: &Scene, kind: FigureKind, samples: usize, tol: f64) -> Result<FigureData> {
    if samples == 0 {
        return Err(CliError::invalid("sample count must be at least 1"));
    }
    let settings = Settings::new(scene, kind)?;
    match kind {
        FigureKind::CircleTrajectory => circle_trajectory(&settings, samples, tol),
        FigureKind::CliffordParallels => clifford_parallels(&settings, samples),
        FigureKind::RotationFlow => rotation_flow(&settings, samples),
    }
}

/// The orbit of `P` under `e^{-½tR}` for `t` in `[0, 2π]`.
fn circle_trajectory(s: &Settings, samples: usize, tol: f64) -> Result<FigureData> {
    let kind = s.kind;
    s.require_space(Space::El2)?;
    let (pn, p) = s.entity("point", "P")?;
    let (rn, r) = s.entity("center", "R")?;
    let Entity::Point2(p) = p else { return Err(role_error(kind, pn, "point")) };
    let Entity::Point2(r) = r else { return Err(role_error(kind, rn, "point")) };
    let class = el2::classify_circle_with(r, p, tol).map_err(|e| domain(kind, e))?;
    let pm = p.as_multivector().normalized().map_err(|e| domain(kind, e))?;
    let radius = el2::distance_pp(r, p).map_err(|e| domain(kind, e))?;
    let mut points = Vec::with_capacity(samples);
    for t in parameters(0.0, 2.0 * PI, samples) {
        let q = el2::rotate(&pm, r, t).map_err(|e| domain(kind, e))?;
        let d = PointEl2::from_multivector(q).and_then(|q| el2::distance_pp(r, &q)).map_err(|e| domain(kind, e))?;
        points.push(Sample { t, coords: el2_coords(&q), check: Some(d) });
    }
    if let Some(bad) = points.iter().find(|x| (x.check.unwrap_or(radius) - radius).abs() > DISTANCE_CHECK) {
        return Err(CliError::Check(format!(
            "circle-trajectory: sample at t = {} is at distance {} from the centre, expected {radius}",
            bad.t,
            bad.check.unwrap_or(f64::NAN)
        )));
    }
    let markers = vec![
        Marker {
            label: rn.to_string(),
            coords: el2_coords(&r.as_multivector().normalized().map_err(|e| domain(kind, e))?),
        },
        Marker { label: pn.to_string(), coords: el2_coords(&pm) },
    ];
    Ok(FigureData {
        kind,
        space: Space::El2,
        title: format!("circle about {rn} through {pn}: {}", class.name()),
        series: vec![Series { label: format!("{pn} about {rn}"), samples: points }],
        markers,
    })
}

/// `count` parallels of each family at `θ`, each sampled along its length
/// and checked for constant distance `|π/2 - θ|` from the line.
fn clifford_parallels(s: &Settings, samples: usize) -> Result<FigureData> {
    let kind = s.kind;
    s.require_space(Space::El3)?;
    let (ln, l) = s.entity("line", "L")?;
    let Entity::Line3(l) = l else { return Err(role_error(kind, ln, "line")) };
    let theta = s.number("theta", FRAC_PI_2 - PI / 10.0)?;
    let count = s.number("count", 32.0)?;
    if count < 1.0 || count.fract() != 0.0 {
        return Err(CliError::invalid("figure `clifford-parallels`: `count` must be a positive integer"));
    }
    let count = count as usize;
    let expected = (FRAC_PI_2 - theta).abs();
    let mut series = vec![sample_line(ln, l, l, samples)?];
    for sign in [CliffordSign::Positive, CliffordSign::Negative] {
        for k in 0..count {
            let phi = 2.0 * PI * k as f64 / count as f64;
            let par = el3::clifford_parallel(l, sign, phi, theta).map_err(|e| domain(kind, e))?;
            series.push(sample_line(&format!("{} {k}", sign.name()), &par, l, samples)?);
        }
    }
    for sr in &series[1..] {
        for x in &sr.samples {
            let d = x.check.unwrap_or(f64::NAN);
            if d.is_nan() || (d - expected).abs() > DISTANCE_CHECK {
                return Err(CliError::Check(format!(
                    "clifford-parallels: `{}` at t = {} is at distance {d} from {ln}, expected {expected}",
                    sr.label, x.t
                )));
            }
        }
    }
    Ok(FigureData {
        kind,
        space: Space::El3,
        title: format!("clifford parallels of {ln} at distance {expected}"),
        series,
        markers: Vec::new(),
    })
}

/// Points of `line` over a half turn, each with its distance from `axis`.
fn sample_line(label: &str, line: &LineEl3, axis: &LineEl3, samples: usize) -> Result<Series> {
    let mut out = Vec::with_capacity(samples);
    for t in parameters(0.0, PI, samples) {
        let p = line.point_at(t);
        let d = el3::distance_line_point(axis, &p).map_err(|e| domain(FigureKind::CliffordParallels, e))?;
        out.push(Sample { t, coords: el3_coords(&p), check: Some(d) });
    }
    Ok(Series { label: label.to_string(), samples: out })
}

/// Trajectories of seed points under `e^{-½t(α + βI)Λ}` for `t` in `[-π, π]`.
fn rotation_flow(s: &Settings, samples: usize) -> Result<FigureData> {
    let kind = s.kind;
    s.require_space(Space::El3)?;
    let (ln, l) = s.entity("line", "L")?;
    let Entity::Line3(l) = l else { return Err(role_error(kind, ln, "line")) };
    let alpha = s.number("alpha", 1.0)?;
    let beta = s.number("beta", 0.0)?;
    let names: Vec<&str> = match s.get("points") {
        None => {
            s.scene.entities.iter().filter(|(_, e)| matches!(e, Entity::Point3(_))).map(|(n, _)| n.as_str()).collect()
        }
        Some(Value::Array(items)) => items
            .iter()
            .map(|v| v.as_str().ok_or_else(|| CliError::invalid("figure `rotation-flow`: `points` must list names")))
            .collect::<Result<_>>()?,
        Some(_) => return Err(CliError::invalid("figure `rotation-flow`: `points` must list names")),
    };
    if names.is_empty() {
        return Err(CliError::invalid("figure `rotation-flow` needs at least one point entity"));
    }
    let mut series = Vec::with_capacity(names.len());
    let mut markers = Vec::with_capacity(names.len());
    for name in names {
        let e = s.scene.entity(name).ok_or_else(|| {
            CliError::invalid(format!("figure `rotation-flow` needs entity `{name}` (setting `points`)"))
        })?;
        let Entity::Point3(p) = e else { return Err(role_error(kind, name, "point")) };
        let p = p.normalized().map_err(|e| domain(kind, e))?;
        let start = el3::distance_line_point(l, &p).map_err(|e| domain(kind, e))?;
        let mut out = Vec::with_capacity(samples);
        for t in parameters(-PI, PI, samples) {
            let q = el3::double_rotation(p.as_multivector(), l, alpha * t, beta * t)
                .and_then(PointEl3::from_multivector)
                .map_err(|e| domain(kind, e))?;
            let d = el3::distance_line_point(l, &q).map_err(|e| domain(kind, e))?;
            if (d - start).abs() > DISTANCE_CHECK {
                return Err(CliError::Check(format!(
                    "rotation-flow: `{name}` drifted from distance {start} to {d} from {ln} at t = {t}"
                )));
            }
            out.push(Sample { t, coords: el3_coords(&q), check: Some(d) });
        }
        markers.push(Marker { label: name.to_string(), coords: el3_coords(&p) });
        series.push(Series { label: name.to_string(), samples: out });
    }
    Ok(FigureData {
        kind,
        space: Space::El3,
        title: format!("rotation about {ln} with alpha = {alpha}, beta = {beta}"),
        series,
        markers,
    })
}

impl FigureData {
    /// Raw samples, one row each.
    pub fn to_csv(&self) -> String {
        let three = self.space == Space::El3;
        let mut out = String::new();
        out.push_str(if three {
            "series,label,index,t,w,x,y,z,chart_x,chart_y,chart_z,distance\n"
        } else {
            "series,label,index,t,w,x,y,chart_x,chart_y,distance\n"
        });
        for (si, s) in self.series.iter().enumerate() {
            for (i, x) in s.samples.iter().enumerate() {
                let _ = write!(out, "{si},{},{i},{}", csv_field(&s.label), x.t);
                for c in &x.coords {
                    let _ = write!(out, ",{c}");
                }
                match x.chart() {
                    Some(ch) => {
                        for c in ch {
                            let _ = write!(out, ",{c}");
                        }
                    }
                    None => out.push_str(if three { ",,," } else { ",," }),
                }
                match x.check {
                    Some(d) => {
                        let _ = writeln!(out, ",{d}");
                    }
                    None => out.push_str(",\n"),
                }
            }
        }
        out
    }

    /// A plain polyline drawing of the chart. El3 charts use a fixed
    /// oblique projection.
    pub fn to_svg(&self) -> String {
        let project = |c: &[f64]| -> (f64, f64) {
            if c.len() == 3 {
                (c[0] - 0.5 * c[2], c[1] - 0.35 * c[2])
            } else {
                (c[0], c[1])
            }
        };
        let lines: Vec<(usize, Vec<(f64, f64)>)> = self
            .series
            .iter()
            .enumerate()
            .flat_map(|(i, s)| s.polylines().into_iter().map(move |p| (i, p)))
            .map(|(i, p)| (i, p.iter().map(|c| project(c)).collect()))
            .collect();
        let markers: Vec<(String, (f64, f64))> = self
            .markers
            .iter()
            .filter_map(|m| {
                let s = Sample { t: 0.0, coords: m.coords.clone(), check: None };
                s.chart().map(|c| (m.label.clone(), project(&c)))
            })
            .collect();
        let (mut x0, mut y0, mut x1, mut y1) = (f64::INFINITY, f64::INFINITY, f64::NEG_INFINITY, f64::NEG_INFINITY);
        for &(x, y) in lines.iter().flat_map(|(_, p)| p.iter()).chain(markers.iter().map(|(_, p)| p)) {
            x0 = x0.min(x);
            y0 = y0.min(y);
            x1 = x1.max(x);
            y1 = y1.max(y);
        }
        if !x0.is_finite() {
            (x0, y0, x1, y1) = (-1.0, -1.0, 1.0, 1.0);
        }
        // Far branches of hyperbolas would swamp the view.
        const VIEW: f64 = 8.0;
        let (x0, y0, x1, y1) = (x0.max(-VIEW), y0.max(-VIEW), x1.min(VIEW), y1.min(VIEW));
        let pad = 0.05 * (x1 - x0).max(y1 - y0).max(1e-3);
        let (x0, y0, w, h) = (x0 - pad, y0 - pad, x1 - x0 + 2.0 * pad, y1 - y0 + 2.0 * pad);
        let stroke = 0.003 * w.max(h);
        let mut out = String::new();
        let _ = writeln!(
            out,
            r#"<svg xmlns="http://www.w3.org/2000/svg" viewBox="{x0} {} {w} {h}" width="640" height="{}">"#,
            -(y0 + h),
            (640.0 * h / w).round().max(1.0)
        );
        let _ = writeln!(out, "<title>{}</title>", xml_escape(&self.title));
        let _ = writeln!(out, r#"<g fill="none" stroke-width="{stroke}">"#);
        for (i, p) in &lines {
            let color = if *i == 0 { "black" } else { PALETTE[(i - 1) % PALETTE.len()] };
            let pts: Vec<String> = p.iter().map(|(x, y)| format!("{x},{}", -y)).collect();
            let _ = writeln!(out, r#"<polyline stroke="{color}" points="{}"/>"#, pts.join(" "));
        }
        out.push_str("</g>\n");
        for (label, (x, y)) in &markers {
            let _ = writeln!(out, r#"<circle cx="{x}" cy="{}" r="{}" fill="red"/>"#, -y, 3.0 * stroke);
            let _ = writeln!(
                out,
                r#"<text x="{}" y="{}" font-size="{}">{}</text>"#,
                x + 4.0 * stroke,
                -y,
                12.0 * stroke,
                xml_escape(label)
            );
        }
        out.push_str("</svg>\n");
        out
    }
}

const PALETTE: [&str; 6] = ["#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd", "#8c564b"];

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

fn xml_escape(s: &str) -> String {
    s.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;")
}
