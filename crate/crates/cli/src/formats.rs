//! Serializers and parsers for the planner's file formats.
//!
//! Every float is written as `{:.16e}` (17 significant digits), which is
//! enough to reproduce the original f64 bit for bit when parsed back. The
//! readers exist so downstream tooling and the contract tests can consume the
//! planner's own output without a third-party table library.

use edgelift::{MaterialShape, Quaternion, SweepTable, Trajectory, Waypoint};

/// Formats an f64 with 17 significant digits; round-trips exactly.
pub fn fmt17(x: f64) -> String {
    format!("{x:.16e}")
}

/// Column order shared by the CSV writer and reader.
pub const WAYPOINT_HEADER: &str = "z1,x,z,alpha_rad,qw,qx,qy,qz";
pub const SHAPE_HEADER: &str = "z1,s,x,z";
pub const SWEEP_HEADER: &str = "z1,k,x,z,alpha_rad,x_min,x_max,alpha_min,alpha_max";

fn push_row(out: &mut String, fields: &[f64]) {
    for (i, f) in fields.iter().enumerate() {
        if i > 0 {
            out.push(',');
        }
        out.push_str(&fmt17(*f));
    }
    out.push('\n');
}

fn waypoint_fields(wp: &Waypoint) -> [f64; 8] {
    let q = wp.orientation;
    [wp.lift_height, wp.x, wp.z, wp.pitch, q.w, q.x, q.y, q.z]
}

pub fn waypoints_csv(trajectory: &Trajectory) -> String {
    let mut out = String::with_capacity(64 + trajectory.waypoints.len() * 200);
    out.push_str(WAYPOINT_HEADER);
    out.push('\n');
    for wp in &trajectory.waypoints {
        push_row(&mut out, &waypoint_fields(wp));
    }
    out
}

pub fn waypoints_jsonl(trajectory: &Trajectory) -> String {
    let mut out = String::with_capacity(trajectory.waypoints.len() * 260);
    for wp in &trajectory.waypoints {
        let q = wp.orientation;
        let row = serde_json::json!({
            "z1": wp.lift_height,
            "x": wp.x,
            "z": wp.z,
            "alpha_rad": wp.pitch,
            "qw": q.w,
            "qx": q.x,
            "qy": q.y,
            "qz": q.z,
        });
        out.push_str(&row.to_string());
        out.push('\n');
    }
    out
}

fn parse_fields(line: &str, expect: usize, lineno: usize) -> Result<Vec<f64>, String> {
    let fields: Vec<&str> = line.split(',').collect();
    if fields.len() != expect {
        return Err(format!(
            "line {lineno}: expected {expect} fields, found {}",
            fields.len()
        ));
    }
    fields
        .iter()
        .map(|f| {
            f.trim()
                .parse::<f64>()
                .map_err(|e| format!("line {lineno}: bad number {f:?}: {e}"))
        })
        .collect()
}

pub fn read_waypoints_csv(text: &str) -> Result<Vec<Waypoint>, String> {
    let mut lines = text.lines().enumerate();
    match lines.next() {
        Some((_, header)) if header.trim() == WAYPOINT_HEADER => {}
        Some((_, header)) => return Err(format!("unexpected header {header:?}")),
        None => return Err("empty file".into()),
    }
    let mut rows = Vec::new();
    for (i, line) in lines {
        if line.trim().is_empty() {
            continue;
        }
        let f = parse_fields(line, 8, i + 1)?;
        rows.push(Waypoint {
            lift_height: f[0],
            x: f[1],
            z: f[2],
            pitch: f[3],
            orientation: Quaternion::new(f[4], f[5], f[6], f[7]),
        });
    }
    Ok(rows)
}

pub fn read_waypoints_jsonl(text: &str) -> Result<Vec<Waypoint>, String> {
    let mut rows = Vec::new();
    for (i, line) in text.lines().enumerate() {
        if line.trim().is_empty() {
            continue;
        }
        let value: serde_json::Value = serde_json::from_str(line)
            .map_err(|e| format!("line {}: invalid JSON: {e}", i + 1))?;
        let get = |key: &str| -> Result<f64, String> {
            value
                .get(key)
                .and_then(serde_json::Value::as_f64)
                .ok_or_else(|| format!("line {}: missing numeric field {key:?}", i + 1))
        };
        rows.push(Waypoint {
            lift_height: get("z1")?,
            x: get("x")?,
            z: get("z")?,
            pitch: get("alpha_rad")?,
            orientation: Quaternion::new(get("qw")?, get("qx")?, get("qy")?, get("qz")?),
        });
    }
    Ok(rows)
}

/// Arc positions for a shape's samples: uniform from 0 to `strip_length`.
fn arc_positions(samples: usize, strip_length: f64) -> impl Iterator<Item = f64> {
    let ds = strip_length / (samples - 1) as f64;
    (0..samples).map(move |j| j as f64 * ds)
}

pub fn shapes_csv(shapes: &[MaterialShape], strip_length: f64) -> String {
    let total: usize = shapes.iter().map(|s| s.samples.len()).sum();
    let mut out = String::with_capacity(16 + total * 100);
    out.push_str(SHAPE_HEADER);
    out.push('\n');
    for shape in shapes {
        let arcs = arc_positions(shape.samples.len(), strip_length);
        for (s, (x, z)) in arcs.zip(&shape.samples) {
            push_row(&mut out, &[shape.lift_height, s, *x, *z]);
        }
    }
    out
}

pub fn shapes_jsonl(shapes: &[MaterialShape], strip_length: f64) -> String {
    let mut out = String::new();
    for shape in shapes {
        let arcs = arc_positions(shape.samples.len(), strip_length);
        for (s, (x, z)) in arcs.zip(&shape.samples) {
            let row = serde_json::json!({
                "z1": shape.lift_height,
                "s": s,
                "x": x,
                "z": z,
            });
            out.push_str(&row.to_string());
            out.push('\n');
        }
    }
    out
}

/// One parsed shape row.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ShapeRow {
    pub lift_height: f64,
    pub arc: f64,
    pub x: f64,
    pub z: f64,
}

pub fn read_shapes_csv(text: &str) -> Result<Vec<ShapeRow>, String> {
    let mut lines = text.lines().enumerate();
    match lines.next() {
        Some((_, header)) if header.trim() == SHAPE_HEADER => {}
        Some((_, header)) => return Err(format!("unexpected header {header:?}")),
        None => return Err("empty file".into()),
    }
    let mut rows = Vec::new();
    for (i, line) in lines {
        if line.trim().is_empty() {
            continue;
        }
        let f = parse_fields(line, 4, i + 1)?;
        rows.push(ShapeRow { lift_height: f[0], arc: f[1], x: f[2], z: f[3] });
    }
    Ok(rows)
}

/// Serializes a sweep in long format, one row per feasible cell, each row
/// carrying its height's envelope columns.
pub fn sweep_csv(table: &SweepTable) -> String {
    let mut out = String::with_capacity(16 + table.cells.len() * 200);
    out.push_str(SWEEP_HEADER);
    out.push('\n');
    for cell in &table.cells {
        let env = table
            .envelopes
            .iter()
            .find(|e| e.lift_height == cell.lift_height)
            .expect("every cell height has an envelope");
        push_row(
            &mut out,
            &[
                cell.lift_height,
                cell.covering_friction,
                cell.x,
                cell.z,
                cell.pitch,
                env.x_min,
                env.x_max,
                env.pitch_min,
                env.pitch_max,
            ],
        );
    }
    out
}

pub fn sweep_jsonl(table: &SweepTable) -> String {
    let mut out = String::new();
    for cell in &table.cells {
        let env = table
            .envelopes
            .iter()
            .find(|e| e.lift_height == cell.lift_height)
            .expect("every cell height has an envelope");
        let row = serde_json::json!({
            "z1": cell.lift_height,
            "k": cell.covering_friction,
            "x": cell.x,
            "z": cell.z,
            "alpha_rad": cell.pitch,
            "x_min": env.x_min,
            "x_max": env.x_max,
            "alpha_min": env.pitch_min,
            "alpha_max": env.pitch_max,
        });
        out.push_str(&row.to_string());
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use edgelift::{generate_trajectory, MaterialSpec, TrajectoryRequest};

    fn demo_trajectory() -> Trajectory {
        let material = MaterialSpec::new(1.0, 1.0, 0.2).unwrap();
        generate_trajectory(&TrajectoryRequest::new(material, 0.05).unwrap()).unwrap()
    }

    #[test]
    fn fmt17_round_trips_awkward_values() {
        for &x in &[0.1, 1.0 / 3.0, 2f64.sqrt(), 1e-300, 0.0, -7.25e17] {
            assert_eq!(fmt17(x).parse::<f64>().unwrap(), x);
        }
    }

    #[test]
    fn waypoint_csv_round_trips_bit_for_bit() {
        let traj = demo_trajectory();
        let text = waypoints_csv(&traj);
        let back = read_waypoints_csv(&text).unwrap();
        assert_eq!(back.len(), traj.waypoints.len());
        for (a, b) in traj.waypoints.iter().zip(&back) {
            assert_eq!(a.lift_height.to_bits(), b.lift_height.to_bits());
            assert_eq!(a.x.to_bits(), b.x.to_bits());
            assert_eq!(a.z.to_bits(), b.z.to_bits());
            assert_eq!(a.pitch.to_bits(), b.pitch.to_bits());
            assert_eq!(a.orientation.w.to_bits(), b.orientation.w.to_bits());
            assert_eq!(a.orientation.z.to_bits(), b.orientation.z.to_bits());
        }
    }

    #[test]
    fn waypoint_jsonl_round_trips_bit_for_bit() {
        // serde_json emits the shortest representation that parses back
        // exactly, so equality on bits still holds.
        let traj = demo_trajectory();
        let text = waypoints_jsonl(&traj);
        let back = read_waypoints_jsonl(&text).unwrap();
        assert_eq!(back.len(), traj.waypoints.len());
        for (a, b) in traj.waypoints.iter().zip(&back) {
            assert_eq!(a.x.to_bits(), b.x.to_bits());
            assert_eq!(a.pitch.to_bits(), b.pitch.to_bits());
            assert_eq!(a.orientation.w.to_bits(), b.orientation.w.to_bits());
        }
    }

    #[test]
    fn csv_reader_rejects_malformed_input() {
        assert!(read_waypoints_csv("").is_err());
        assert!(read_waypoints_csv("wrong,header\n").is_err());
        let short = format!("{WAYPOINT_HEADER}\n1.0,2.0\n");
        assert!(read_waypoints_csv(&short).is_err());
        let bad = format!("{WAYPOINT_HEADER}\n1,2,3,4,5,6,7,oops\n");
        assert!(read_waypoints_csv(&bad).is_err());
    }

    #[test]
    fn shape_rows_carry_uniform_arc_positions() {
        let material = MaterialSpec::new(1.0, 1.0, 0.2).unwrap();
        let cfg = edgelift::SolverConfig::for_length(1.0);
        let shape =
            edgelift::shape_at(0.5, &material, edgelift::LiftMode::Dexterous, 11, &cfg).unwrap();
        let text = shapes_csv(&[shape], material.length);
        let rows = read_shapes_csv(&text).unwrap();
        assert_eq!(rows.len(), 11);
        assert_eq!(rows[0].arc, 0.0);
        assert_eq!(rows[10].arc, 1.0);
        assert!((rows[1].arc - 0.1).abs() < 1e-15);
    }
}
