//! Planner for lifting a flexible strip or sheet off a surface by one edge
//! without letting the part still lying down slide.
//!
//! The airborne part of an inextensible, perfectly flexible strip hangs as a
//! catenary. Balancing that curve against the friction limit of the lying
//! part pins the equilibrium at every lift height, which in turn fixes the
//! grasp pose (position plus pitch) a gripper must hold so that nothing
//! slips. [`generate_trajectory`] sweeps the lift height and emits
//! robot-ready waypoints with quaternion orientations, [`shape_at`]
//! reconstructs where the whole strip is at any height, and the [`chain`]
//! module re-derives every state as a discrete chain of rigid links so the
//! closed form can be checked against something that does not share its
//! math.
//!
//! All numerics are generic over the scalar type through [`Real`]
//! (`f32`, `f64`, anything `num_traits::Float`). The aliases at the crate
//! root fix `f64`, which is what the bundled CLI uses:
//!
//! ```
//! let material = edgelift::MaterialSpec::new(1.0, 1.0, 0.2)
//!     .unwrap()
//!     .with_label("demo strip");
//! let request = edgelift::TrajectoryRequest::new(material, 0.01).unwrap();
//! let plan = edgelift::generate_trajectory(&request).unwrap();
//! let end = plan.waypoints.last().unwrap();
//! assert_eq!((end.x, end.z), (0.0, 1.0)); // strip hangs fully vertical
//! ```

// `!(x > 0)` is used instead of `x <= 0` throughout: the negated form also
// routes NaN into the error path.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod chain;
pub mod error;
pub mod model;
pub mod scalar;
pub mod shape;
pub mod solver;
pub mod trajectory;

pub use error::{Error, Result};
pub use model::{
    catenary_height, hanging_arc_length, quaternion_from_pitch, tangent_angle,
    tension_from_friction, waypoint_coordinates, LiftMode,
};
pub use scalar::Real;
pub use solver::{
    max_liftable_height, reduced_rise, solve_shape_ratio, solve_state, solve_states_monotone,
};
pub use trajectory::{generate_trajectory, resample_by_path_length, slip_distance_naive};
pub use {chain::chain_hang, chain::verify_state, chain::verify_trajectory};
pub use {shape::shape_at, shape::sweep_friction};

/// `f64` concrete forms of the generic types. Use the module paths
/// (`model::MaterialSpec<f32>`, ...) to pick another scalar.
pub type MaterialSpec = model::MaterialSpec<f64>;
pub type CatenaryState = model::CatenaryState<f64>;
pub type Quaternion = model::Quaternion<f64>;
pub type Waypoint = model::Waypoint<f64>;
pub type Trajectory = model::Trajectory<f64>;
pub type SolverConfig = solver::SolverConfig<f64>;
pub type TrajectoryRequest = trajectory::TrajectoryRequest<f64>;
pub type ChainEquilibrium = chain::ChainEquilibrium<f64>;
pub type VerificationReport = chain::VerificationReport<f64>;
pub type MaterialShape = shape::MaterialShape<f64>;
pub type SweepCell = shape::SweepCell<f64>;
pub type HeightEnvelope = shape::HeightEnvelope<f64>;
pub type SweepTable = shape::SweepTable<f64>;
