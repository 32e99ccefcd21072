//! Equilibrium solve per lift height.
//!
//! Eliminating tension from the grasp-height relation against the slip limit
//! of the lying segment reduces the whole equilibrium to one scalar equation
//! in the shape ratio `u`:
//!
//! ```text
//! g(u) = (cosh u - 1) / (1 + k sinh u) = z1 / (L k)
//! ```
//!
//! `g` is strictly increasing on u >= 0 and tends to `1/k`, so for every
//! height below the strip length there is exactly one root. We find it by
//! bracket growth plus bisection, which cannot diverge; everything else
//! (scale, span, hanging length, tension, grasp angle) follows in closed
//! form. Batch solves walk the heights in order and reuse the previous root
//! as the lower bracket.

use crate::error::{Error, Result};
use crate::model::{CatenaryState, MaterialSpec};
use crate::scalar::{lit, Real};

/// Root-finder knobs. Defaults are tuned for `f64` and a unit-length strip;
/// [`SolverConfig::for_length`] scales the residual gate to other strips, and
/// both tolerances are clamped to the scalar's epsilon so `f32` works too.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SolverConfig<T> {
    /// Bisection stops once the bracket on u is narrower than this.
    pub tol_shape_ratio: T,
    /// Largest allowed residual, in metres, of the grasp-height and
    /// tension-balance relations of the returned state.
    pub tol_residual: T,
    /// Hard cap on bisection iterations.
    pub max_iterations: usize,
    /// First upper bracket tried for u; grown by doubling as needed.
    pub initial_bracket: T,
}

impl<T: Real> SolverConfig<T> {
    /// Defaults with the residual gate scaled to a strip of `length` metres.
    pub fn for_length(length: T) -> Self {
        let eps = T::epsilon();
        Self {
            tol_shape_ratio: lit::<T>(1e-12).max(eps * lit::<T>(8.0)),
            tol_residual: lit::<T>(1e-10).max(eps * lit::<T>(32.0)) * length,
            max_iterations: 200,
            initial_bracket: T::one(),
        }
    }

    fn validate(&self) -> Result<()> {
        let ok = self.tol_shape_ratio > T::zero()
            && self.tol_shape_ratio.is_finite()
            && self.tol_residual > T::zero()
            && self.tol_residual.is_finite()
            && self.initial_bracket > T::zero()
            && self.initial_bracket.is_finite()
            && self.max_iterations >= 1;
        if ok {
            Ok(())
        } else {
            Err(Error::InvalidSolverConfig {
                reason: format!("{self:?}"),
            })
        }
    }
}

impl<T: Real> Default for SolverConfig<T> {
    fn default() -> Self {
        Self::for_length(T::one())
    }
}

/// Highest lift height the solver accepts. Anything within one part in 1e9
/// of the strip length is treated as fully lifted: tension goes to zero
/// there and the shape ratio diverges, so callers append the exact vertical
/// pose analytically instead of solving for it.
pub fn max_liftable_height<T: Real>(length: T) -> T {
    length * lit::<T>(1.0 - 1e-9)
}

/// Dimensionless grasp height `g(u) = (cosh u - 1) / (1 + k sinh u)` of the
/// reduced equilibrium, evaluated cancellation-free as
/// `2 sinh^2(u/2) / (1 + k sinh u)`. Strictly increasing for u >= 0, k > 0,
/// with supremum 1/k.
pub fn reduced_rise<T: Real>(u: T, covering_friction: T) -> T {
    let two = lit::<T>(2.0);
    let rise = two * (u / two).sinh().powi(2);
    rise / (T::one() + covering_friction * u.sinh())
}

fn check_material<T: Real>(material: &MaterialSpec<T>) -> Result<()> {
    let ok = material.length > T::zero()
        && material.length.is_finite()
        && material.weight_per_length > T::zero()
        && material.weight_per_length.is_finite()
        && material.covering_friction > T::zero()
        && material.covering_friction.is_finite();
    if ok {
        Ok(())
    } else {
        Err(Error::InvalidMaterial {
            reason: "length, weight and covering friction must be positive".into(),
        })
    }
}

/// Root of `g(u) = target` for a strictly increasing `g`, given a valid
/// lower bracket `lo` (`g(lo) <= target`). The upper bracket starts `width`
/// above `lo` and doubles until it clears the target.
fn bisect_increasing<T: Real>(
    g: impl Fn(T) -> T,
    lo0: T,
    width0: T,
    target: T,
    cfg: &SolverConfig<T>,
) -> Result<T> {
    // sinh overflows past ln(max); a bracket that far out means no root
    let u_cap = T::max_value().ln();
    let mut lo = lo0;
    let mut width = width0;
    let mut hi = lo + width;
    while g(hi) < target {
        if hi > u_cap {
            return Err(Error::BracketFailed {
                limit: u_cap.to_f64().unwrap_or(f64::NAN),
                target: target.to_f64().unwrap_or(f64::NAN),
            });
        }
        lo = hi;
        width = width + width;
        hi = lo + width;
    }
    let two = lit::<T>(2.0);
    let mut iterations = 0usize;
    while hi - lo > cfg.tol_shape_ratio {
        iterations += 1;
        if iterations > cfg.max_iterations {
            return Err(Error::NoConvergence {
                iterations: cfg.max_iterations,
            });
        }
        let mid = (lo + hi) / two;
        if mid <= lo || mid >= hi {
            break; // bracket no longer splittable at this precision
        }
        if g(mid) < target {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok((lo + hi) / two)
}

/// Shape ratio u of the hanging segment at lift height `lift_height`.
pub fn solve_shape_ratio<T: Real>(
    lift_height: T,
    material: &MaterialSpec<T>,
    cfg: &SolverConfig<T>,
) -> Result<T> {
    check_material(material)?;
    cfg.validate()?;
    let limit = max_liftable_height(material.length);
    if lift_height < T::zero() || lift_height >= limit || !lift_height.is_finite() {
        return Err(Error::HeightOutOfRange {
            height: lift_height.to_f64().unwrap_or(f64::NAN),
            limit: limit.to_f64().unwrap_or(f64::NAN),
        });
    }
    if lift_height == T::zero() {
        return Ok(T::zero());
    }
    let k = material.covering_friction;
    let target = lift_height / (material.length * k);
    bisect_increasing(
        |u| reduced_rise(u, k),
        T::zero(),
        cfg.initial_bracket,
        target,
        cfg,
    )
}

fn state_from_shape_ratio<T: Real>(
    u: T,
    lift_height: T,
    material: &MaterialSpec<T>,
    cfg: &SolverConfig<T>,
) -> Result<CatenaryState<T>> {
    if u == T::zero() {
        return Ok(CatenaryState::flat(material));
    }
    let k = material.covering_friction;
    let sinh_u = u.sinh();
    let scale = material.length * k / (T::one() + k * sinh_u);
    let state = CatenaryState {
        lift_height,
        shape_ratio: u,
        scale,
        span: scale * u,
        hang_length: scale * sinh_u,
        tension: material.weight_per_length * scale,
        grasp_angle: sinh_u.atan(),
    };
    let (height_res, balance_res) = state.residuals(material);
    let worst = height_res.max(balance_res);
    if worst > cfg.tol_residual {
        return Err(Error::ResidualExceeded {
            residual: worst.to_f64().unwrap_or(f64::NAN),
            tolerance: cfg.tol_residual.to_f64().unwrap_or(f64::NAN),
        });
    }
    Ok(state)
}

/// Full equilibrium state at one lift height. The returned state has passed
/// the residual gate of `cfg`.
pub fn solve_state<T: Real>(
    lift_height: T,
    material: &MaterialSpec<T>,
    cfg: &SolverConfig<T>,
) -> Result<CatenaryState<T>> {
    let u = solve_shape_ratio(lift_height, material, cfg)?;
    state_from_shape_ratio(u, lift_height, material, cfg)
}

/// States for a strictly increasing sequence of lift heights. Each solve
/// starts its bracket at the previous root, which is valid because the shape
/// ratio grows with height; results match per-height solves to bisection
/// tolerance.
pub fn solve_states_monotone<T: Real>(
    heights: &[T],
    material: &MaterialSpec<T>,
    cfg: &SolverConfig<T>,
) -> Result<Vec<CatenaryState<T>>> {
    check_material(material)?;
    cfg.validate()?;
    for pair in heights.windows(2) {
        if !(pair[1] > pair[0]) {
            return Err(Error::HeightsNotIncreasing);
        }
    }
    let limit = max_liftable_height(material.length);
    let k = material.covering_friction;
    let mut states = Vec::with_capacity(heights.len());
    let mut prev_u = T::zero();
    for &z1 in heights {
        if z1 < T::zero() || z1 >= limit || !z1.is_finite() {
            return Err(Error::HeightOutOfRange {
                height: z1.to_f64().unwrap_or(f64::NAN),
                limit: limit.to_f64().unwrap_or(f64::NAN),
            });
        }
        let u = if z1 == T::zero() {
            T::zero()
        } else {
            let target = z1 / (material.length * k);
            bisect_increasing(
                |u| reduced_rise(u, k),
                prev_u,
                cfg.initial_bracket,
                target,
                cfg,
            )?
        };
        states.push(state_from_shape_ratio(u, z1, material, cfg)?);
        prev_u = u;
    }
    Ok(states)
}
