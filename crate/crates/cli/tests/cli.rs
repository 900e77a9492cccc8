//! End-to-end runs of the `elpga` binary: exit codes, messages and figure
//! output.

use std::f64::consts::PI;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::{json, Value};
use tempfile::TempDir;

fn elpga(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_elpga")).args(args).output().unwrap()
}

fn write_scene(dir: &TempDir, scene: &Value) -> PathBuf {
    let path = dir.path().join("scene.json");
    std::fs::write(&path, serde_json::to_string(scene).unwrap()).unwrap();
    path
}

fn bundled(name: &str) -> String {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("scenes").join(name).display().to_string()
}

fn stderr(out: &Output) -> String {
    String::from_utf8_lossy(&out.stderr).into_owned()
}

fn eval(scene: &Value) -> (i32, Value, String) {
    let dir = TempDir::new().unwrap();
    let path = write_scene(&dir, scene);
    let out = elpga(&["eval", path.to_str().unwrap()]);
    let report = serde_json::from_slice(&out.stdout).unwrap_or(Value::Null);
    (out.status.code().unwrap(), report, stderr(&out))
}

#[test]
fn empty_scene_gives_an_empty_report() {
    let (code, report, _) = eval(&json!({"space": "el2", "entities": {}, "queries": []}));
    assert_eq!(code, 0);
    assert_eq!(report, json!({"space": "el2", "results": []}));
}

#[test]
fn plucker_failure_is_invalid_input() {
    let scene = json!({
        "space": "el3",
        "entities": {"L": {"role": "line", "plucker": [1, 0, 0, 1e-3, 0, 0]}},
        "queries": [{"name": "n", "op": "norm", "args": ["L"]}],
    });
    let (code, _, err) = eval(&scene);
    assert_eq!(code, 1, "{err}");
    assert!(err.contains("plücker residual"), "{err}");
}

#[test]
fn non_invertible_operand_is_a_domain_error() {
    let scene = json!({
        "space": "el3",
        "entities": {"X": {"role": "multivector", "value": {"space": "el3", "coeffs": {"scalar": 1, "e0123": 1}}}},
        "queries": [{"name": "inv_x", "op": "inverse", "args": ["X"]}],
    });
    let (code, _, err) = eval(&scene);
    assert_eq!(code, 2, "{err}");
    assert!(err.contains("inv_x"), "{err}");
}

#[test]
fn perpendicular_at_the_polar_point_is_a_domain_error() {
    let scene = json!({
        "space": "el2",
        "entities": {
            "a": {"role": "line", "coords": [-2, 2, 1]},
            "pole": {"role": "point", "from": {"op": "polar", "args": ["a"]}},
        },
        "queries": [{"name": "perp", "op": "perpendicular", "args": ["a", "pole"]}],
    });
    let (code, _, err) = eval(&scene);
    assert_eq!(code, 2, "{err}");
    assert!(err.contains("perp"), "{err}");
}

#[test]
fn bad_references_and_parameters_are_invalid() {
    let missing = json!({
        "space": "el2",
        "entities": {},
        "queries": [{"name": "r", "op": "distance", "args": ["P", "Q"]}],
    });
    assert_eq!(eval(&missing).0, 1);
    let unknown_op = json!({
        "space": "el1",
        "entities": {"a": {"role": "point", "coords": [1, 0]}},
        "queries": [{"name": "r", "op": "meet", "args": ["a", "a"]}],
    });
    let (code, _, err) = eval(&unknown_op);
    assert_eq!(code, 1);
    assert!(err.contains("meet"), "{err}");
    let wrong_role = json!({
        "space": "el2",
        "entities": {"a": {"role": "point", "coords": [1, 0]}},
        "queries": [],
    });
    assert_eq!(eval(&wrong_role).0, 1);
    let stray_field = json!({"space": "el2", "entities": {}, "queries": [], "extra": 1});
    assert_eq!(eval(&stray_field).0, 1);
}

#[test]
fn usage_errors_exit_with_one() {
    assert_eq!(elpga(&[]).status.code(), Some(1));
    assert_eq!(elpga(&["eval"]).status.code(), Some(1));
    assert_eq!(elpga(&["--help"]).status.code(), Some(0));
    assert_eq!(elpga(&["eval", "/nonexistent/scene.json"]).status.code(), Some(1));
    let out = elpga(&["--tolerance", "-1", "eval", &bundled("worked_el1.json")]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn reports_round_trip_through_the_parser() {
    let out = elpga(&["eval", &bundled("worked_el3.json")]);
    assert!(out.status.success());
    let report: Value = serde_json::from_slice(&out.stdout).unwrap();
    let join = report["results"].as_array().unwrap().iter().find(|q| q["name"] == "join_PQ").unwrap();
    // Feed the printed line back in as an entity value.
    let scene = json!({
        "space": "el3",
        "entities": {"L": {"role": "line", "value": join["value"]}},
        "queries": [{"name": "again", "op": "normalize", "args": ["L"]}, {"name": "same", "op": "reverse", "args": ["L"]}],
    });
    let (code, again, err) = eval(&scene);
    assert_eq!(code, 0, "{err}");
    let reversed = &again["results"][1]["value"]["coeffs"];
    for (k, v) in join["value"]["coeffs"].as_object().unwrap() {
        assert_eq!(reversed[k].as_f64().unwrap(), -v.as_f64().unwrap());
    }
}

fn figure(scene: &str, kind: &str, samples: usize) -> (Output, TempDir) {
    let dir = TempDir::new().unwrap();
    let out = dir.path().join("fig");
    let s = samples.to_string();
    let o = elpga(&["figure", scene, "--kind", kind, "--samples", &s, "--out", out.to_str().unwrap()]);
    (o, dir)
}

fn csv_rows(dir: &TempDir) -> (Vec<String>, Vec<Vec<String>>) {
    let text = std::fs::read_to_string(dir.path().join("fig.csv")).unwrap();
    let mut lines = text.lines();
    let header = lines.next().unwrap().split(',').map(String::from).collect();
    let rows = lines.map(|l| l.split(',').map(String::from).collect()).collect();
    (header, rows)
}

#[test]
fn zero_samples_are_rejected() {
    let (out, _dir) = figure(&bundled("worked_el2.json"), "circle-trajectory", 0);
    assert_eq!(out.status.code(), Some(1));
    let (out, _dir) = figure(&bundled("worked_el2.json"), "no-such-figure", 10);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn circle_trajectory_is_one_closed_elliptic_curve() {
    let (out, dir) = figure(&bundled("worked_el2.json"), "circle-trajectory", 64);
    assert!(out.status.success(), "{}", stderr(&out));
    let svg = std::fs::read_to_string(dir.path().join("fig.svg")).unwrap();
    assert!(svg.contains("elliptic"));
    assert_eq!(svg.matches("<polyline").count(), 1);
    let (header, rows) = csv_rows(&dir);
    assert_eq!(rows.len(), 64);
    let d = header.iter().position(|h| h == "distance").unwrap();
    let r0: f64 = rows[0][d].parse().unwrap();
    for row in &rows {
        assert!((row[d].parse::<f64>().unwrap() - r0).abs() < 1e-9);
    }
    let (x, y) =
        (header.iter().position(|h| h == "chart_x").unwrap(), header.iter().position(|h| h == "chart_y").unwrap());
    let first = (rows[0][x].parse::<f64>().unwrap(), rows[0][y].parse::<f64>().unwrap());
    let last = (rows[63][x].parse::<f64>().unwrap(), rows[63][y].parse::<f64>().unwrap());
    assert!((first.0 - last.0).abs() < 1e-9 && (first.1 - last.1).abs() < 1e-9);
}

#[test]
fn clifford_parallels_sit_at_a_tenth_of_pi() {
    let (out, dir) = figure(&bundled("worked_el3.json"), "clifford-parallels", 20);
    assert!(out.status.success(), "{}", stderr(&out));
    let (header, rows) = csv_rows(&dir);
    let series = header.iter().position(|h| h == "series").unwrap();
    let d = header.iter().position(|h| h == "distance").unwrap();
    let mut ids: Vec<&str> = rows.iter().map(|r| r[series].as_str()).collect();
    ids.dedup();
    assert_eq!(ids.len(), 65);
    for row in rows.iter().filter(|r| r[series] != "0") {
        assert!((row[d].parse::<f64>().unwrap() - PI / 10.0).abs() < 1e-9, "{row:?}");
    }
}

#[test]
fn rotation_flow_keeps_distances() {
    let (out, dir) = figure(&bundled("worked_el3.json"), "rotation-flow", 33);
    assert!(out.status.success(), "{}", stderr(&out));
    let (_, rows) = csv_rows(&dir);
    assert_eq!(rows.len(), 3 * 33);
}

#[test]
fn figures_need_a_scene_of_the_right_space() {
    let (out, _dir) = figure(&bundled("worked_el1.json"), "circle-trajectory", 10);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("el2"));
}
