//! Lift-plan generation: sweep the grasp height from the table to the strip
//! length and emit one gripper pose per height.
//!
//! The grid runs `0, step, 2 step, ...` strictly below the solver's height
//! ceiling. The fully lifted pose (grasp at `x = 0, z = L`, strip vertical)
//! is appended analytically in dexterous mode because tension vanishes there
//! and the solve degenerates. The vertical-naive mode exists as the
//! comparison case: the gripper only moves straight up at `x = L`, pitched
//! vertical after an instantaneous reorientation at the start, and the lying
//! strip is dragged toward the grasp by [`slip_distance_naive`] while the
//! pitch column keeps reporting the strip tangent.

use crate::error::{Error, Result};
use crate::model::{
    quaternion_from_pitch, waypoint_coordinates, LiftMode, MaterialSpec, Quaternion, Trajectory,
    Waypoint,
};
use crate::scalar::{lit, Real};
use crate::solver::{max_liftable_height, solve_state, solve_states_monotone, SolverConfig};

/// Everything needed to build a lift plan.
#[derive(Clone, Debug, PartialEq)]
pub struct TrajectoryRequest<T> {
    pub material: MaterialSpec<T>,
    /// Height increment between grid waypoints [m], in (0, length).
    pub step: T,
    pub mode: LiftMode,
    /// Append the exact fully-lifted pose after the grid (dexterous mode).
    pub include_terminal: bool,
    pub solver: SolverConfig<T>,
}

impl<T: Real> TrajectoryRequest<T> {
    pub fn new(material: MaterialSpec<T>, step: T) -> Result<Self> {
        check_step(step, material.length)?;
        let solver = SolverConfig::for_length(material.length);
        Ok(Self {
            material,
            step,
            mode: LiftMode::Dexterous,
            include_terminal: true,
            solver,
        })
    }

    pub fn with_mode(mut self, mode: LiftMode) -> Self {
        self.mode = mode;
        self
    }

    pub fn without_terminal(mut self) -> Self {
        self.include_terminal = false;
        self
    }

    pub fn with_solver(mut self, solver: SolverConfig<T>) -> Self {
        self.solver = solver;
        self
    }
}

fn check_step<T: Real>(step: T, length: T) -> Result<()> {
    if step > T::zero() && step < length && step.is_finite() {
        Ok(())
    } else {
        Err(Error::InvalidStep {
            step: step.to_f64().unwrap_or(f64::NAN),
            length: length.to_f64().unwrap_or(f64::NAN),
        })
    }
}

fn height_grid<T: Real>(step: T, length: T) -> Vec<T> {
    let limit = max_liftable_height(length);
    let mut heights = Vec::new();
    let mut i: u64 = 0;
    loop {
        let z1 = T::from(i).expect("grid index fits in scalar") * step;
        if z1 >= limit {
            break;
        }
        heights.push(z1);
        i += 1;
    }
    heights
}

/// Build the waypoint sequence for a lift request.
pub fn generate_trajectory<T: Real>(request: &TrajectoryRequest<T>) -> Result<Trajectory<T>> {
    let material = &request.material;
    check_step(request.step, material.length)?;
    let heights = height_grid(request.step, material.length);
    let states = solve_states_monotone(&heights, material, &request.solver)?;

    let mut waypoints = Vec::with_capacity(states.len() + 2);
    let mut terminal_appended = false;
    match request.mode {
        LiftMode::Dexterous => {
            for state in &states {
                let (x, z) = waypoint_coordinates(state, material)?;
                waypoints.push(Waypoint {
                    lift_height: state.lift_height,
                    x,
                    z,
                    pitch: state.grasp_angle,
                    orientation: quaternion_from_pitch(state.grasp_angle)
                        .into_positive_hemisphere(),
                });
            }
            if request.include_terminal {
                let vertical = lit::<T>(core::f64::consts::FRAC_PI_2);
                waypoints.push(Waypoint {
                    lift_height: material.length,
                    x: T::zero(),
                    z: material.length,
                    pitch: vertical,
                    orientation: quaternion_from_pitch(vertical).into_positive_hemisphere(),
                });
                terminal_appended = true;
            }
        }
        LiftMode::VerticalNaive => {
            let vertical = lit::<T>(core::f64::consts::FRAC_PI_2);
            let upright = quaternion_from_pitch(vertical).into_positive_hemisphere();
            // start flat, then reorient in place before pulling up
            waypoints.push(Waypoint {
                lift_height: T::zero(),
                x: material.length,
                z: T::zero(),
                pitch: T::zero(),
                orientation: Quaternion::identity(),
            });
            waypoints.push(Waypoint {
                lift_height: T::zero(),
                x: material.length,
                z: T::zero(),
                pitch: T::zero(),
                orientation: upright,
            });
            for state in states.iter().skip(1) {
                waypoints.push(Waypoint {
                    lift_height: state.lift_height,
                    x: material.length,
                    z: state.lift_height,
                    pitch: state.grasp_angle,
                    orientation: upright,
                });
            }
        }
    }
    Ok(Trajectory {
        material: material.clone(),
        mode: request.mode,
        step: request.step,
        solver: request.solver,
        terminal_appended,
        waypoints,
    })
}

/// How far the lying strip is dragged toward the grasp when the edge is
/// pulled straight up to `lift_height` instead of following the equilibrium:
/// the hanging arc exceeds its horizontal span by `L1 - l1`.
pub fn slip_distance_naive<T: Real>(
    lift_height: T,
    material: &MaterialSpec<T>,
    cfg: &SolverConfig<T>,
) -> Result<T> {
    let state = solve_state(lift_height, material, cfg)?;
    Ok(state.hang_length - state.span)
}

/// Redistribute waypoints so consecutive samples sit `spacing` apart along
/// the polyline in the lift plane, endpoints preserved exactly. Positions and
/// pitch interpolate linearly within a segment, orientations spherically.
/// The result keeps the source's generation metadata.
pub fn resample_by_path_length<T: Real>(
    trajectory: &Trajectory<T>,
    spacing: T,
) -> Result<Trajectory<T>> {
    if !(spacing > T::zero()) || !spacing.is_finite() {
        return Err(Error::InvalidSpacing {
            value: spacing.to_f64().unwrap_or(f64::NAN),
        });
    }
    let points = &trajectory.waypoints;
    if points.len() < 2 {
        return Err(Error::TooFewWaypoints);
    }
    let mut cumulative = Vec::with_capacity(points.len());
    cumulative.push(T::zero());
    let mut total = T::zero();
    for pair in points.windows(2) {
        let d = (pair[1].x - pair[0].x).hypot(pair[1].z - pair[0].z);
        total = total + d;
        cumulative.push(total);
    }
    if !(total > T::zero()) {
        return Err(Error::DegeneratePath);
    }

    let mut resampled = vec![*points.first().expect("nonempty")];
    let mut segment = 0usize;
    let mut j: u64 = 1;
    loop {
        let s = T::from(j).expect("sample index fits in scalar") * spacing;
        if s >= total {
            break;
        }
        // first segment whose far end reaches s; its length is then > 0
        while cumulative[segment + 1] < s {
            segment += 1;
        }
        let a = &points[segment];
        let b = &points[segment + 1];
        let t = (s - cumulative[segment]) / (cumulative[segment + 1] - cumulative[segment]);
        let lerp = |p: T, q: T| p + (q - p) * t;
        resampled.push(Waypoint {
            lift_height: lerp(a.lift_height, b.lift_height),
            x: lerp(a.x, b.x),
            z: lerp(a.z, b.z),
            pitch: lerp(a.pitch, b.pitch),
            orientation: a.orientation.slerp(b.orientation, t),
        });
        j += 1;
    }
    resampled.push(*points.last().expect("nonempty"));

    Ok(Trajectory {
        material: trajectory.material.clone(),
        mode: trajectory.mode,
        step: trajectory.step,
        solver: trajectory.solver,
        terminal_appended: trajectory.terminal_appended,
        waypoints: resampled,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;
    use core::f64::consts::FRAC_PI_2;

    fn demo() -> MaterialSpec<f64> {
        MaterialSpec::new(1.0, 1.0, 0.2).unwrap()
    }

    fn demo_request(step: f64) -> TrajectoryRequest<f64> {
        TrajectoryRequest::new(demo(), step).unwrap()
    }

    #[test]
    fn dexterous_demo_has_grid_plus_terminal() {
        let traj = generate_trajectory(&demo_request(0.001)).unwrap();
        assert_eq!(traj.waypoints.len(), 1001);
        assert!(traj.terminal_appended);

        let first = traj.waypoints[0];
        assert_eq!(first.x, 1.0);
        assert_eq!(first.z, 0.0);
        assert_eq!(first.pitch, 0.0);
        assert_eq!(first.orientation, Quaternion::identity());

        let last_grid = traj.waypoints[999];
        assert_abs_diff_eq!(last_grid.lift_height, 0.999, epsilon = 1e-15);

        let terminal = traj.waypoints[1000];
        assert_eq!(terminal.x, 0.0);
        assert_eq!(terminal.z, 1.0);
        assert_eq!(terminal.pitch, FRAC_PI_2);
    }

    #[test]
    fn dexterous_sweep_is_monotone() {
        let traj = generate_trajectory(&demo_request(0.01)).unwrap();
        for pair in traj.waypoints.windows(2) {
            assert!(pair[1].z > pair[0].z, "z must rise");
            assert!(pair[1].pitch > pair[0].pitch, "pitch must grow");
            assert!(pair[1].x < pair[0].x, "grasp must move inward");
        }
        for wp in &traj.waypoints {
            assert!((wp.orientation.norm() - 1.0).abs() < 1e-12);
            assert!(wp.orientation.w >= 0.0);
            assert_abs_diff_eq!(wp.z, wp.lift_height, epsilon = 1e-10);
        }
    }

    #[test]
    fn first_pitch_step_dominates() {
        let traj = generate_trajectory(&demo_request(0.001)).unwrap();
        let max_step = traj.max_pitch_step();
        let first_step = traj.waypoints[1].pitch - traj.waypoints[0].pitch;
        assert_eq!(max_step, first_step);
        assert!((0.09..0.11).contains(&max_step), "got {max_step}");
    }

    #[test]
    fn terminal_can_be_left_out() {
        let traj = generate_trajectory(&demo_request(0.001).without_terminal()).unwrap();
        assert_eq!(traj.waypoints.len(), 1000);
        assert!(!traj.terminal_appended);
        assert!(traj.waypoints.last().unwrap().z < 1.0);
    }

    #[test]
    fn naive_mode_pulls_straight_up() {
        let traj =
            generate_trajectory(&demo_request(0.001).with_mode(LiftMode::VerticalNaive)).unwrap();
        // grid minus the flat row, plus flat pose and reorientation prefix
        assert_eq!(traj.waypoints.len(), 1001);
        assert!(!traj.terminal_appended);

        let start = traj.waypoints[0];
        assert_eq!((start.x, start.z, start.pitch), (1.0, 0.0, 0.0));
        assert_eq!(start.orientation, Quaternion::identity());

        let prefix = traj.waypoints[1];
        assert_eq!((prefix.x, prefix.z), (1.0, 0.0));
        assert_abs_diff_eq!(prefix.orientation.w, 0.5f64.sqrt(), epsilon = 1e-15);

        for wp in &traj.waypoints[1..] {
            assert_eq!(wp.x, 1.0);
            assert_abs_diff_eq!(wp.orientation.y, 0.5f64.sqrt(), epsilon = 1e-15);
        }
        for pair in traj.waypoints[1..].windows(2) {
            assert!(pair[1].z > pair[0].z);
            assert!(pair[1].pitch > pair[0].pitch);
        }
    }

    #[test]
    fn rejects_bad_steps() {
        assert!(matches!(
            TrajectoryRequest::new(demo(), 0.0),
            Err(Error::InvalidStep { .. })
        ));
        assert!(TrajectoryRequest::new(demo(), -0.1).is_err());
        assert!(TrajectoryRequest::new(demo(), 1.0).is_err());
        assert!(TrajectoryRequest::new(demo(), 2.0).is_err());
    }

    #[test]
    fn generation_is_deterministic() {
        let a = generate_trajectory(&demo_request(0.001)).unwrap();
        let b = generate_trajectory(&demo_request(0.001)).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn slip_grows_with_height() {
        let m = demo();
        let cfg = SolverConfig::default();
        assert_eq!(slip_distance_naive(0.0, &m, &cfg).unwrap(), 0.0);
        // frozen: L1 - l1 at the three reference heights, 17 digits as generated
        #[allow(clippy::excessive_precision)]
        let frozen = [
            (0.25, 0.13191928665406848),
            (0.5, 0.3569413561439852),
            (0.75, 0.6387116918583082),
        ];
        let mut prev = 0.0;
        for (z1, slip) in frozen {
            let got = slip_distance_naive(z1, &m, &cfg).unwrap();
            assert_abs_diff_eq!(got, slip, epsilon = 1e-11);
            assert!(got > prev);
            prev = got;
        }
    }

    #[test]
    fn resample_with_full_spacing_keeps_only_endpoints() {
        let traj = generate_trajectory(&demo_request(0.01)).unwrap();
        let total = traj.path_length();
        let two = resample_by_path_length(&traj, total).unwrap();
        assert_eq!(two.waypoints.len(), 2);
        assert_eq!(two.waypoints[0], traj.waypoints[0]);
        assert_eq!(two.waypoints[1], *traj.waypoints.last().unwrap());
    }

    #[test]
    fn resample_preserves_length_of_straight_path() {
        // the naive path is a vertical line, so chord length is exact
        let traj =
            generate_trajectory(&demo_request(0.001).with_mode(LiftMode::VerticalNaive)).unwrap();
        let total = traj.path_length();
        for spacing in [0.037, 0.1, 0.5] {
            let r = resample_by_path_length(&traj, spacing).unwrap();
            assert_abs_diff_eq!(r.path_length(), total, epsilon = 1e-9);
            // interior spacing is exact on a straight path
            for pair in r.waypoints.windows(2).take(r.waypoints.len() - 2) {
                let d = (pair[1].x - pair[0].x).hypot(pair[1].z - pair[0].z);
                assert_abs_diff_eq!(d, spacing, epsilon = 1e-9);
            }
        }
    }

    #[test]
    fn resample_of_curved_path_stays_close_and_ordered() {
        let traj = generate_trajectory(&demo_request(0.001)).unwrap();
        let total = traj.path_length();
        let r = resample_by_path_length(&traj, 0.01).unwrap();
        let resampled_total = r.path_length();
        // chords can only cut corners, and at this resolution barely do
        assert!(resampled_total <= total + 1e-12);
        assert!(resampled_total > 0.9999 * total);
        for pair in r.waypoints.windows(2) {
            assert!(pair[1].pitch >= pair[0].pitch - 1e-12);
        }
        for wp in &r.waypoints {
            assert!((-1e-12..=FRAC_PI_2 + 1e-12).contains(&wp.pitch));
            assert!((wp.orientation.norm() - 1.0).abs() < 1e-12);
        }
    }

    #[test]
    fn resample_rejects_degenerate_input() {
        let traj = generate_trajectory(&demo_request(0.01)).unwrap();
        assert!(matches!(
            resample_by_path_length(&traj, 0.0),
            Err(Error::InvalidSpacing { .. })
        ));
        let mut single = traj.clone();
        single.waypoints.truncate(1);
        assert_eq!(
            resample_by_path_length(&single, 0.1),
            Err(Error::TooFewWaypoints)
        );
        let mut frozen = traj.clone();
        let wp = frozen.waypoints[0];
        frozen.waypoints = vec![wp, wp];
        assert_eq!(
            resample_by_path_length(&frozen, 0.1),
            Err(Error::DegeneratePath)
        );
    }
}
