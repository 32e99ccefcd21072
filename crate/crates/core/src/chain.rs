//! Brute-force cross-check of the closed-form equilibrium.
//!
//! The hanging segment is rebuilt as n rigid links of equal length, pinned
//! at the lowest point. Link i carries the weight of everything below its
//! midpoint, so static balance fixes its inclination at
//! `tan(theta_i) = q (i - 1/2) ds / H`, and summing the link vectors walks
//! the chain from the lowest point up to the grasp. The only inputs are
//! tension, weight and arc length; the only math is per-link trigonometry
//! and cumulative sums, deliberately disjoint from the closed form the rest
//! of the crate uses, so agreement between the two is real evidence. The
//! midpoint weighting makes the discretization second order: halving the
//! link length quarters the endpoint error.

use crate::error::{Error, Result};
use crate::model::{CatenaryState, MaterialSpec, Trajectory};
use crate::scalar::{lit, Real};
use crate::solver::{max_liftable_height, solve_state};

/// Discrete chain in static equilibrium, built by [`chain_hang`].
#[derive(Clone, Debug, PartialEq)]
pub struct ChainEquilibrium<T> {
    /// Common length of every link [m].
    pub link_length: T,
    /// Horizontal tension the chain was balanced against [N].
    pub tension: T,
    /// Node coordinates from the lowest point (0, 0) up to the free end;
    /// one more entry than there are links.
    pub nodes: Vec<(T, T)>,
    /// Inclination of each link against +x [rad], nondecreasing.
    pub angles: Vec<T>,
}

impl<T: Real> ChainEquilibrium<T> {
    /// Position of the top node, where the grasp would be.
    pub fn endpoint(&self) -> (T, T) {
        *self.nodes.last().expect("chain has at least one node")
    }

    /// Inclination of the topmost link [rad].
    pub fn endpoint_angle(&self) -> T {
        *self.angles.last().expect("chain has at least one link")
    }
}

/// Worst-case disagreement between a chain rebuild and the closed form.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct VerificationReport<T> {
    /// Euclidean distance between chain endpoint and closed-form grasp [m].
    pub position_error: T,
    /// Difference between top-link inclination and grasp angle [rad].
    pub angle_error: T,
    /// Residual of the slip-limit tension balance [N].
    pub tension_error: T,
    /// How many states contributed to the maxima.
    pub samples_checked: usize,
}

impl<T: Real> VerificationReport<T> {
    fn zero() -> Self {
        Self {
            position_error: T::zero(),
            angle_error: T::zero(),
            tension_error: T::zero(),
            samples_checked: 1,
        }
    }

    fn fold(self, other: Self) -> Self {
        Self {
            position_error: self.position_error.max(other.position_error),
            angle_error: self.angle_error.max(other.angle_error),
            tension_error: self.tension_error.max(other.tension_error),
            samples_checked: self.samples_checked + other.samples_checked,
        }
    }

    /// True when every error sits below its threshold.
    pub fn passes(&self, position_tol: T, angle_tol: T, tension_tol: T) -> bool {
        self.position_error <= position_tol
            && self.angle_error <= angle_tol
            && self.tension_error <= tension_tol
    }
}

/// Hang a chain of `links` rigid links of total length `hang_length` from
/// horizontal tension `tension` under distributed weight `weight_per_length`.
pub fn chain_hang<T: Real>(
    tension: T,
    weight_per_length: T,
    hang_length: T,
    links: usize,
) -> Result<ChainEquilibrium<T>> {
    let positive = |v: T| v > T::zero() && v.is_finite();
    if !positive(tension) || !positive(weight_per_length) || !positive(hang_length) {
        return Err(Error::InvalidChain {
            reason: "tension, weight and hang length must be positive".into(),
        });
    }
    if links < 2 {
        return Err(Error::InvalidChain {
            reason: format!("need at least 2 links, got {links}"),
        });
    }
    let ds = hang_length / T::from(links).expect("link count fits in scalar");
    let half = lit::<T>(0.5);
    let mut nodes = Vec::with_capacity(links + 1);
    let mut angles = Vec::with_capacity(links);
    let mut x = T::zero();
    let mut z = T::zero();
    nodes.push((x, z));
    for i in 0..links {
        let below = weight_per_length * (T::from(i).expect("index fits") + half) * ds;
        let theta = (below / tension).atan();
        x = x + ds * theta.cos();
        z = z + ds * theta.sin();
        nodes.push((x, z));
        angles.push(theta);
    }
    Ok(ChainEquilibrium {
        link_length: ds,
        tension,
        nodes,
        angles,
    })
}

/// Rebuild one state as a chain and report the disagreement. A flat state
/// has nothing hanging and verifies trivially.
pub fn verify_state<T: Real>(
    state: &CatenaryState<T>,
    material: &MaterialSpec<T>,
    links: usize,
) -> Result<VerificationReport<T>> {
    let tension_limit = material.weight_per_length
        * (material.length - state.hang_length)
        * material.covering_friction;
    let tension_error = (state.tension - tension_limit).abs();
    if state.hang_length <= T::zero() {
        return Ok(VerificationReport {
            tension_error,
            ..VerificationReport::zero()
        });
    }
    let chain = chain_hang(
        state.tension,
        material.weight_per_length,
        state.hang_length,
        links,
    )?;
    let (x, z) = chain.endpoint();
    let position_error = (x - state.span).hypot(z - state.lift_height);
    let angle_error = (chain.endpoint_angle() - state.grasp_angle).abs();
    Ok(VerificationReport {
        position_error,
        angle_error,
        tension_error,
        samples_checked: 1,
    })
}

/// Re-solve every `stride`-th waypoint of a trajectory and verify each state
/// against a chain rebuild with `links` links. The appended fully-lifted
/// pose, if present, is analytic and skipped.
pub fn verify_trajectory<T: Real>(
    trajectory: &Trajectory<T>,
    links: usize,
    stride: usize,
) -> Result<VerificationReport<T>> {
    if stride == 0 {
        return Err(Error::InvalidStride);
    }
    if trajectory.waypoints.is_empty() {
        return Err(Error::EmptyTrajectory);
    }
    let material = &trajectory.material;
    let limit = max_liftable_height(material.length);
    let mut report: Option<VerificationReport<T>> = None;
    for wp in trajectory.waypoints.iter().step_by(stride) {
        if wp.lift_height >= limit {
            continue;
        }
        let state = solve_state(wp.lift_height, material, &trajectory.solver)?;
        let one = verify_state(&state, material, links)?;
        report = Some(match report {
            Some(acc) => acc.fold(one),
            None => one,
        });
    }
    Ok(report.unwrap_or_else(|| VerificationReport {
        samples_checked: 0,
        ..VerificationReport::zero()
    }))
}
