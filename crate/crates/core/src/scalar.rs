//! Scalar abstraction: every quantity in this crate is generic over [`Real`],
//! so the same code runs at `f32` or `f64` (or any other IEEE-ish float that
//! implements `num_traits::Float`). The crate root exports `f64` aliases for
//! the common case.

use num_traits::Float;

/// Floating-point scalar the planner math is written against.
///
/// Blanket-implemented for anything that is `num_traits::Float` plus the
/// usual utility bounds, i.e. `f32` and `f64` out of the box.
pub trait Real: Float + core::fmt::Debug + Send + Sync + 'static {}

impl<T> Real for T where T: Float + core::fmt::Debug + Send + Sync + 'static {}

/// Shorthand for pulling an `f64` literal into the working scalar type.
///
/// Panics only if `T` cannot represent the constant at all, which cannot
/// happen for the literals used in this crate with `f32`/`f64`.
#[inline]
pub(crate) fn lit<T: Real>(x: f64) -> T {
    T::from(x).expect("literal not representable in scalar type")
}
