//! Where the whole strip actually is at a given lift height, and how the
//! grasp pose moves when the covering friction changes.
//!
//! A shape is sampled uniformly in arc length from the far end of the strip
//! to the grasp: first the part still lying on the table, then the hanging
//! catenary, joined with matching position and zero slope at the curve's
//! lowest point. Arc position inverts in closed form (`x = a asinh(t/a)`),
//! so sampling needs no iteration. Anchoring differs per mode: a dexterous
//! lift keeps the far end pinned where it started, a vertical-naive lift
//! keeps the grasp above the table edge and drags the far end inward by the
//! slip distance.

use crate::error::{Error, Result};
use crate::model::{catenary_height, waypoint_coordinates, LiftMode, MaterialSpec};
use crate::scalar::Real;
use crate::solver::{solve_state, SolverConfig};

/// Sampled strip geometry at one lift height.
#[derive(Clone, Debug, PartialEq)]
pub struct MaterialShape<T> {
    pub lift_height: T,
    pub mode: LiftMode,
    /// Arc length of the segment still lying on the table [m].
    pub lying_length: T,
    /// (x, z) samples, uniform in arc length, far end first, grasp last.
    pub samples: Vec<(T, T)>,
}

impl<T: Real> MaterialShape<T> {
    /// Strip end that is (or started) farthest from the grasp.
    pub fn far_end(&self) -> (T, T) {
        *self.samples.first().expect("shape has samples")
    }

    pub fn grasp_point(&self) -> (T, T) {
        *self.samples.last().expect("shape has samples")
    }

    /// Chord length of the sample polyline; approaches the strip length as
    /// the sample count grows.
    pub fn polyline_length(&self) -> T {
        let mut total = T::zero();
        for pair in self.samples.windows(2) {
            total = total + (pair[1].0 - pair[0].0).hypot(pair[1].1 - pair[0].1);
        }
        total
    }
}

/// Sample the full strip at `lift_height` with `samples` points.
pub fn shape_at<T: Real>(
    lift_height: T,
    material: &MaterialSpec<T>,
    mode: LiftMode,
    samples: usize,
    cfg: &SolverConfig<T>,
) -> Result<MaterialShape<T>> {
    if samples < 2 {
        return Err(Error::InvalidSampleCount { value: samples });
    }
    let state = solve_state(lift_height, material, cfg)?;
    let lying_length = material.length - state.hang_length;
    // x of the far end and of the catenary's lowest point, per anchoring
    let (far_x, join_x) = match mode {
        LiftMode::Dexterous => (T::zero(), lying_length),
        LiftMode::VerticalNaive => {
            let slip = state.hang_length - state.span;
            (slip, slip + lying_length)
        }
    };

    let n = T::from(samples - 1).expect("sample count fits in scalar");
    let mut points = Vec::with_capacity(samples);
    points.push((far_x, T::zero()));
    for j in 1..samples - 1 {
        let s = T::from(j).expect("index fits") * material.length / n;
        let over = s - lying_length;
        if over <= T::zero() {
            points.push((far_x + s, T::zero()));
        } else {
            // arc position t up the catenary inverts exactly
            let xc = state.scale * (over / state.scale).asinh();
            points.push((join_x + xc, catenary_height(xc, state.scale)?));
        }
    }
    points.push((join_x + state.span, state.lift_height));

    Ok(MaterialShape {
        lift_height,
        mode,
        lying_length,
        samples: points,
    })
}

/// One successful sweep entry: grasp pose for a given covering friction and
/// lift height.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SweepCell<T> {
    pub covering_friction: T,
    pub lift_height: T,
    pub x: T,
    pub z: T,
    pub pitch: T,
}

/// Sweep entry that could not be solved; kept so a partly infeasible grid
/// still yields the rest.
#[derive(Clone, Debug, PartialEq)]
pub struct SweepFailure {
    pub covering_friction: f64,
    pub lift_height: f64,
    pub error: Error,
}

/// Per-height extremes of the grasp pose over all swept friction values.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct HeightEnvelope<T> {
    pub lift_height: T,
    pub x_min: T,
    pub x_max: T,
    pub pitch_min: T,
    pub pitch_max: T,
}

#[derive(Clone, Debug, PartialEq)]
pub struct SweepTable<T> {
    /// Successful cells, ordered by lift height then friction value.
    pub cells: Vec<SweepCell<T>>,
    pub failures: Vec<SweepFailure>,
    /// One envelope per height that had at least one successful cell.
    pub envelopes: Vec<HeightEnvelope<T>>,
}

/// Solve the grasp pose for every (friction, height) pair. Infeasible cells
/// are recorded under `failures` instead of aborting the sweep.
pub fn sweep_friction<T: Real>(
    base: &MaterialSpec<T>,
    friction_values: &[T],
    heights: &[T],
    cfg: &SolverConfig<T>,
) -> SweepTable<T> {
    let mut table = SweepTable {
        cells: Vec::with_capacity(friction_values.len() * heights.len()),
        failures: Vec::new(),
        envelopes: Vec::with_capacity(heights.len()),
    };
    for &z1 in heights {
        let mut envelope: Option<HeightEnvelope<T>> = None;
        for &k in friction_values {
            let mut material = base.clone();
            material.covering_friction = k;
            let solved = solve_state(z1, &material, cfg)
                .and_then(|state| Ok((waypoint_coordinates(&state, &material)?, state)));
            let ((x, z), state) = match solved {
                Ok(v) => v,
                Err(error) => {
                    table.failures.push(SweepFailure {
                        covering_friction: k.to_f64().unwrap_or(f64::NAN),
                        lift_height: z1.to_f64().unwrap_or(f64::NAN),
                        error,
                    });
                    continue;
                }
            };
            let pitch = state.grasp_angle;
            table.cells.push(SweepCell {
                covering_friction: k,
                lift_height: z1,
                x,
                z,
                pitch,
            });
            envelope = Some(match envelope {
                None => HeightEnvelope {
                    lift_height: z1,
                    x_min: x,
                    x_max: x,
                    pitch_min: pitch,
                    pitch_max: pitch,
                },
                Some(e) => HeightEnvelope {
                    lift_height: z1,
                    x_min: e.x_min.min(x),
                    x_max: e.x_max.max(x),
                    pitch_min: e.pitch_min.min(pitch),
                    pitch_max: e.pitch_max.max(pitch),
                },
            });
        }
        if let Some(e) = envelope {
            table.envelopes.push(e);
        }
    }
    table
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::trajectory::slip_distance_naive;
    use approx::assert_abs_diff_eq;

    fn demo() -> MaterialSpec<f64> {
        MaterialSpec::new(1.0, 1.0, 0.2).unwrap()
    }

    fn cfg() -> SolverConfig<f64> {
        SolverConfig::default()
    }

    #[test]
    fn dexterous_shape_at_half_height() {
        let shape = shape_at(0.5, &demo(), LiftMode::Dexterous, 2001, &cfg()).unwrap();
        assert_eq!(shape.far_end(), (0.0, 0.0));
        let (gx, gz) = shape.grasp_point();
        assert_abs_diff_eq!(gx, 0.6430586438560147, epsilon = 1e-12);
        assert_eq!(gz, 0.5);
        assert_abs_diff_eq!(shape.lying_length, 0.4217670016874732, epsilon = 1e-12);
        assert_abs_diff_eq!(shape.polyline_length(), 1.0, epsilon = 1e-6);
    }

    #[test]
    fn arc_length_is_conserved_across_heights() {
        for z1 in [0.25, 0.5, 0.75] {
            for mode in [LiftMode::Dexterous, LiftMode::VerticalNaive] {
                let shape = shape_at(z1, &demo(), mode, 2001, &cfg()).unwrap();
                assert_abs_diff_eq!(shape.polyline_length(), 1.0, epsilon = 1e-6);
            }
        }
    }

    #[test]
    fn flat_shape_is_the_lying_strip() {
        let shape = shape_at(0.0, &demo(), LiftMode::Dexterous, 101, &cfg()).unwrap();
        assert_eq!(shape.far_end(), (0.0, 0.0));
        assert_eq!(shape.grasp_point(), (1.0, 0.0));
        assert!(shape.samples.iter().all(|&(_, z)| z == 0.0));
        assert_abs_diff_eq!(shape.polyline_length(), 1.0, epsilon = 1e-12);
    }

    #[test]
    fn naive_far_end_sits_at_slip_distance() {
        let slip = slip_distance_naive(0.5, &demo(), &cfg()).unwrap();
        let shape = shape_at(0.5, &demo(), LiftMode::VerticalNaive, 1001, &cfg()).unwrap();
        assert_eq!(shape.far_end().0, slip); // same expression, bit for bit
        let (gx, gz) = shape.grasp_point();
        assert_abs_diff_eq!(gx, 1.0, epsilon = 1e-12);
        assert_eq!(gz, 0.5);
    }

    #[test]
    fn samples_advance_and_lying_part_stays_down() {
        let shape = shape_at(0.6, &demo(), LiftMode::Dexterous, 501, &cfg()).unwrap();
        for pair in shape.samples.windows(2) {
            assert!(pair[1].0 > pair[0].0, "x must advance");
            assert!(pair[1].1 >= pair[0].1, "z must not dip");
        }
        let ds = 1.0 / 500.0;
        for (j, &(_, z)) in shape.samples.iter().enumerate() {
            if (j as f64) * ds <= shape.lying_length {
                assert_eq!(z, 0.0);
            }
        }
    }

    #[test]
    fn junction_slope_vanishes_with_resolution() {
        // the curve leaves the table tangentially, so the discrete slope of
        // the segment crossing the junction is bounded by step / scale
        let scale = 0.08435340033749464; // solved catenary scale at z1 = 0.5
        for n in [1001usize, 2001, 5001] {
            let shape = shape_at(0.5, &demo(), LiftMode::Dexterous, n, &cfg()).unwrap();
            let first_lifted = shape
                .samples
                .windows(2)
                .find(|pair| pair[1].1 > 0.0)
                .expect("curve rises");
            let slope =
                (first_lifted[1].1 - first_lifted[0].1) / (first_lifted[1].0 - first_lifted[0].0);
            let ds = 1.0 / (n - 1) as f64;
            assert!(slope > 0.0);
            assert!(slope < ds / scale, "n = {n}: slope {slope} too steep");
        }
    }

    #[test]
    fn two_samples_give_the_endpoints() {
        let shape = shape_at(0.5, &demo(), LiftMode::Dexterous, 2, &cfg()).unwrap();
        assert_eq!(shape.samples.len(), 2);
        assert_eq!(shape.far_end(), (0.0, 0.0));
        assert_eq!(shape.grasp_point().1, 0.5);
    }

    #[test]
    fn rejects_bad_requests() {
        assert!(matches!(
            shape_at(0.5, &demo(), LiftMode::Dexterous, 1, &cfg()),
            Err(Error::InvalidSampleCount { value: 1 })
        ));
        assert!(matches!(
            shape_at(1.0, &demo(), LiftMode::Dexterous, 100, &cfg()),
            Err(Error::HeightOutOfRange { .. })
        ));
    }

    #[test]
    fn sweep_covers_the_grid_and_bounds_it() {
        let table = sweep_friction(&demo(), &[0.1, 0.2, 3.0], &[0.0, 0.5], &cfg());
        assert_eq!(table.cells.len(), 6);
        assert!(table.failures.is_empty());
        assert_eq!(table.envelopes.len(), 2);

        for cell in &table.cells {
            let env = table
                .envelopes
                .iter()
                .find(|e| e.lift_height == cell.lift_height)
                .unwrap();
            assert!(env.x_min <= cell.x && cell.x <= env.x_max);
            assert!(env.pitch_min <= cell.pitch && cell.pitch <= env.pitch_max);
        }

        // flat row is the same pose for every friction
        let flat = &table.envelopes[0];
        assert_eq!((flat.x_min, flat.x_max), (1.0, 1.0));
        assert_eq!((flat.pitch_min, flat.pitch_max), (0.0, 0.0));

        // grippier covering lets the strip hang steeper at the same height
        let at = |k: f64| {
            table
                .cells
                .iter()
                .find(|c| c.covering_friction == k && c.lift_height == 0.5)
                .unwrap()
                .pitch
        };
        let (lo, mid, hi) = (at(0.1), at(0.2), at(3.0));
        assert!(lo > mid && mid > hi);
        assert_abs_diff_eq!(lo, 85.2030253f64.to_radians(), epsilon = 1e-7);
        assert_abs_diff_eq!(hi, 61.21460918f64.to_radians(), epsilon = 1e-7);
    }

    #[test]
    fn sweep_flags_infeasible_cells_and_carries_on() {
        let table = sweep_friction(&demo(), &[0.2, -1.0], &[0.5, 1.5], &cfg());
        assert_eq!(table.cells.len(), 1);
        assert_eq!(table.failures.len(), 3);
        assert!(table
            .failures
            .iter()
            .any(|f| matches!(f.error, Error::InvalidMaterial { .. })));
        assert!(table
            .failures
            .iter()
            .any(|f| matches!(f.error, Error::HeightOutOfRange { .. })));
        assert_eq!(table.envelopes.len(), 1);
    }
}
