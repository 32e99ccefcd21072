//! Domain types and the closed-form relations of the hanging-strip model.
//!
//! Conventions, used everywhere in the crate:
//!
//! * The lift happens in the x-z plane, gravity along -z. The strip starts
//!   lying on the table along the x axis from `0` to its length `L` and is
//!   grasped at the edge that begins at `x = L`.
//! * The airborne part of the strip hangs as a catenary. Measured from the
//!   curve's lowest point, `z(x) = a (cosh(x/a) - 1)` where the scale
//!   `a = H / q` is horizontal tension over weight per unit length.
//! * `u = l1 / a` is the dimensionless shape ratio of the hanging segment,
//!   `l1` its horizontal span, `L1` its arc length, `z1` the grasp height.
//! * Pitch angles are radians from the table plane; the strip tangent at the
//!   grasped edge makes angle `alpha = atan(sinh u)` with +x.
//! * Orientations are scalar-first unit quaternions about the lift-plane
//!   normal (+y): pitching by `alpha` maps the unit +x direction to
//!   `(cos alpha, 0, -sin alpha)`.

use crate::error::{Error, Result};
use crate::scalar::{lit, Real};
use crate::solver::SolverConfig;

/// Strip of deformable material, assumed inextensible and perfectly flexible.
#[derive(Clone, Debug, PartialEq)]
pub struct MaterialSpec<T> {
    /// Strip length L [m].
    pub length: T,
    /// Weight per unit length q [N/m].
    pub weight_per_length: T,
    /// Friction coefficient k between strip and table covering.
    pub covering_friction: T,
    /// Friction coefficient f between strip and gripper jaws. Not used by the
    /// equilibrium itself; carried for grasp-force sizing downstream.
    pub gripper_friction: T,
    /// Free-form description.
    pub label: String,
}

impl<T: Real> MaterialSpec<T> {
    pub fn new(length: T, weight_per_length: T, covering_friction: T) -> Result<Self> {
        fn check<U: Real>(value: U, what: &str) -> Result<()> {
            if !(value > U::zero()) || !value.is_finite() {
                return Err(Error::InvalidMaterial {
                    reason: format!("{what} must be positive and finite, got {value:?}"),
                });
            }
            Ok(())
        }
        check(length, "length")?;
        check(weight_per_length, "weight per length")?;
        check(covering_friction, "covering friction")?;
        Ok(Self {
            length,
            weight_per_length,
            covering_friction,
            gripper_friction: T::zero(),
            label: String::new(),
        })
    }

    pub fn with_gripper_friction(mut self, f: T) -> Result<Self> {
        if f < T::zero() || !f.is_finite() {
            return Err(Error::InvalidMaterial {
                reason: format!("gripper friction must be non-negative and finite, got {f:?}"),
            });
        }
        self.gripper_friction = f;
        Ok(self)
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = label.into();
        self
    }
}

/// Equilibrium of the hanging segment at one lift height.
///
/// Field relations when the state comes out of the solver: `span = scale *
/// shape_ratio`, `hang_length = scale * sinh(shape_ratio)`, `tension =
/// weight_per_length * scale`, and both residuals of [`Self::residuals`] sit
/// below the solver's residual tolerance.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct CatenaryState<T> {
    /// Grasp height z1 above the table [m].
    pub lift_height: T,
    /// u = span / scale, dimensionless.
    pub shape_ratio: T,
    /// Catenary scale a = tension / weight [m].
    pub scale: T,
    /// Horizontal extent l1 of the hanging segment [m].
    pub span: T,
    /// Arc length L1 of the hanging segment [m].
    pub hang_length: T,
    /// Horizontal tension H at the lowest point [N].
    pub tension: T,
    /// Strip tangent angle at the grasped edge [rad].
    pub grasp_angle: T,
}

impl<T: Real> CatenaryState<T> {
    /// State before any lifting: the whole strip lies on the table and the
    /// admissible tension is the friction limit of the full strip.
    pub fn flat(material: &MaterialSpec<T>) -> Self {
        let scale = material.length * material.covering_friction;
        Self {
            lift_height: T::zero(),
            shape_ratio: T::zero(),
            scale,
            span: T::zero(),
            hang_length: T::zero(),
            tension: material.weight_per_length * scale,
            grasp_angle: T::zero(),
        }
    }

    /// Residuals of the two defining balances, both in metres:
    /// grasp height `|a (cosh u - 1) - z1|` and slip limit
    /// `|a (1 + k sinh u) - L k|`.
    pub fn residuals(&self, material: &MaterialSpec<T>) -> (T, T) {
        let two = lit::<T>(2.0);
        // cosh u - 1 == 2 sinh^2(u/2), exact near u = 0
        let rise = two * self.scale * (self.shape_ratio / two).sinh().powi(2);
        let height = (rise - self.lift_height).abs();
        let k = material.covering_friction;
        let balance =
            (self.scale * (T::one() + k * self.shape_ratio.sinh()) - material.length * k).abs();
        (height, balance)
    }
}

/// How the grasped edge travels while the strip comes off the table.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LiftMode {
    /// Follow the equilibrium: the grasp point moves inward and pitches with
    /// the strip tangent so the lying segment never slides.
    Dexterous,
    /// Straight-up pull at fixed x = L with the gripper pitched vertical.
    /// The lying segment is dragged toward the grasp; use for comparison.
    VerticalNaive,
}

impl LiftMode {
    pub fn as_str(self) -> &'static str {
        match self {
            LiftMode::Dexterous => "dexterous",
            LiftMode::VerticalNaive => "vertical-naive",
        }
    }
}

impl core::fmt::Display for LiftMode {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.write_str(self.as_str())
    }
}

impl core::str::FromStr for LiftMode {
    type Err = String;

    fn from_str(s: &str) -> core::result::Result<Self, String> {
        match s {
            "dexterous" => Ok(LiftMode::Dexterous),
            "vertical-naive" => Ok(LiftMode::VerticalNaive),
            other => Err(format!(
                "unknown mode {other:?}, expected \"dexterous\" or \"vertical-naive\""
            )),
        }
    }
}

/// Scalar-first quaternion (w, x, y, z).
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Quaternion<T> {
    pub w: T,
    pub x: T,
    pub y: T,
    pub z: T,
}

impl<T: Real> Quaternion<T> {
    pub fn new(w: T, x: T, y: T, z: T) -> Self {
        Self { w, x, y, z }
    }

    pub fn identity() -> Self {
        Self::new(T::one(), T::zero(), T::zero(), T::zero())
    }

    pub fn norm(self) -> T {
        self.dot(self).sqrt()
    }

    pub fn dot(self, rhs: Self) -> T {
        self.w * rhs.w + self.x * rhs.x + self.y * rhs.y + self.z * rhs.z
    }

    pub fn normalized(self) -> Self {
        let n = self.norm();
        Self::new(self.w / n, self.x / n, self.y / n, self.z / n)
    }

    /// Same rotation, sign chosen so w >= 0. Keeps neighbouring waypoint
    /// quaternions on one hemisphere so consumers can lerp safely.
    pub fn into_positive_hemisphere(self) -> Self {
        if self.w < T::zero() {
            -self
        } else {
            self
        }
    }

    /// Spherical interpolation along the shorter arc, t in [0, 1].
    pub fn slerp(self, rhs: Self, t: T) -> Self {
        let mut rhs = rhs;
        let mut cos = self.dot(rhs);
        if cos < T::zero() {
            rhs = -rhs;
            cos = -cos;
        }
        if cos > lit::<T>(1.0 - 1e-9) {
            // endpoints nearly coincide: plain lerp keeps full precision
            let blend = |a: T, b: T| a + (b - a) * t;
            return Self::new(
                blend(self.w, rhs.w),
                blend(self.x, rhs.x),
                blend(self.y, rhs.y),
                blend(self.z, rhs.z),
            )
            .normalized();
        }
        let theta = cos.min(T::one()).acos();
        let sin = theta.sin();
        let wa = ((T::one() - t) * theta).sin() / sin;
        let wb = (t * theta).sin() / sin;
        Self::new(
            self.w * wa + rhs.w * wb,
            self.x * wa + rhs.x * wb,
            self.y * wa + rhs.y * wb,
            self.z * wa + rhs.z * wb,
        )
    }

    /// Apply the rotation to a vector (expects a unit quaternion).
    pub fn rotate(self, v: [T; 3]) -> [T; 3] {
        let two = lit::<T>(2.0);
        // v' = v + 2 w (q x v) + 2 q x (q x v)
        let qv = [self.x, self.y, self.z];
        let c1 = cross(qv, v);
        let c2 = cross(qv, c1);
        [
            v[0] + two * (self.w * c1[0] + c2[0]),
            v[1] + two * (self.w * c1[1] + c2[1]),
            v[2] + two * (self.w * c1[2] + c2[2]),
        ]
    }
}

impl<T: Real> core::ops::Neg for Quaternion<T> {
    type Output = Self;

    fn neg(self) -> Self {
        Self::new(-self.w, -self.x, -self.y, -self.z)
    }
}

fn cross<T: Real>(a: [T; 3], b: [T; 3]) -> [T; 3] {
    [
        a[1] * b[2] - a[2] * b[1],
        a[2] * b[0] - a[0] * b[2],
        a[0] * b[1] - a[1] * b[0],
    ]
}

/// One gripper pose sample along a lift.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Waypoint<T> {
    /// Lift height the pose was solved for [m].
    pub lift_height: T,
    /// Grasp x coordinate [m].
    pub x: T,
    /// Grasp z coordinate [m].
    pub z: T,
    /// Strip tangent angle at the grasp [rad]. In dexterous mode this is also
    /// the commanded gripper pitch; in vertical-naive mode the commanded
    /// orientation stays vertical and this field just reports the strip.
    pub pitch: T,
    /// Commanded gripper orientation.
    pub orientation: Quaternion<T>,
}

/// Full lift plan: ordered waypoints plus the request they were built from.
#[derive(Clone, Debug, PartialEq)]
pub struct Trajectory<T> {
    pub material: MaterialSpec<T>,
    pub mode: LiftMode,
    /// Height increment between grid waypoints [m].
    pub step: T,
    pub solver: SolverConfig<T>,
    /// Whether the exact fully-lifted pose was appended after the grid.
    pub terminal_appended: bool,
    pub waypoints: Vec<Waypoint<T>>,
}

impl<T: Real> Trajectory<T> {
    /// Chord length of the waypoint polyline in the lift plane. Same
    /// arithmetic as the resampler, so totals agree bit for bit.
    pub fn path_length(&self) -> T {
        let mut total = T::zero();
        for pair in self.waypoints.windows(2) {
            total = total + (pair[1].x - pair[0].x).hypot(pair[1].z - pair[0].z);
        }
        total
    }

    /// Largest pitch change between consecutive waypoints [rad].
    pub fn max_pitch_step(&self) -> T {
        let mut worst = T::zero();
        for pair in self.waypoints.windows(2) {
            worst = worst.max((pair[1].pitch - pair[0].pitch).abs());
        }
        worst
    }
}

/// Height of the catenary above its lowest point at horizontal offset `x`.
///
/// `z = a (cosh(x/a) - 1)`, evaluated as `2 a sinh^2(x / 2a)` so tiny offsets
/// don't cancel to zero.
pub fn catenary_height<T: Real>(x: T, scale: T) -> Result<T> {
    if !(scale > T::zero()) {
        return Err(Error::NonpositiveScale {
            value: scale.to_f64().unwrap_or(f64::NAN),
        });
    }
    let two = lit::<T>(2.0);
    Ok(two * scale * (x / (two * scale)).sinh().powi(2))
}

/// Arc length of the catenary from its lowest point out to horizontal span
/// `span`: `L1 = a sinh(span / a)`.
pub fn hanging_arc_length<T: Real>(span: T, scale: T) -> Result<T> {
    if !(scale > T::zero()) {
        return Err(Error::NonpositiveScale {
            value: scale.to_f64().unwrap_or(f64::NAN),
        });
    }
    if span < T::zero() {
        return Err(Error::NegativeSpan {
            value: span.to_f64().unwrap_or(f64::NAN),
        });
    }
    Ok(scale * (span / scale).sinh())
}

/// Largest horizontal tension the lying segment can anchor without sliding:
/// `H = q (L - L1) k`, the friction limit of what is still on the table.
pub fn tension_from_friction<T: Real>(material: &MaterialSpec<T>, hang_length: T) -> Result<T> {
    if hang_length < T::zero() || hang_length > material.length {
        return Err(Error::HangLengthOutOfRange {
            value: hang_length.to_f64().unwrap_or(f64::NAN),
            length: material.length.to_f64().unwrap_or(f64::NAN),
        });
    }
    Ok(material.weight_per_length * (material.length - hang_length) * material.covering_friction)
}

/// Strip tangent angle at the grasped edge: `alpha = atan(sinh u)`.
///
/// Goes to pi/2 as the shape ratio grows (fully vertical strip).
pub fn tangent_angle<T: Real>(shape_ratio: T) -> Result<T> {
    if shape_ratio < T::zero() {
        return Err(Error::NegativeShapeRatio {
            value: shape_ratio.to_f64().unwrap_or(f64::NAN),
        });
    }
    Ok(shape_ratio.sinh().atan())
}

/// Grasp-point coordinates for a slip-free lift.
///
/// The far end of the strip stays put, so the lying segment ends at
/// `x = L - L1` and the grasp sits at `x = L - L1 + l1`, `z = z1`.
/// Both are recomputed from tension and span, which requires `tension > 0`
/// whenever the hanging segment has any width.
pub fn waypoint_coordinates<T: Real>(
    state: &CatenaryState<T>,
    material: &MaterialSpec<T>,
) -> Result<(T, T)> {
    let length = material.length;
    if !(state.tension > T::zero()) {
        if state.span > T::zero() {
            return Err(Error::SingularState);
        }
        return Ok((length - state.hang_length, state.lift_height));
    }
    let scale = state.tension / material.weight_per_length;
    let x = length - hanging_arc_length(state.span, scale)? + state.span;
    let z = catenary_height(state.span, scale)?;
    Ok((x, z))
}

/// Orientation for a gripper pitched by `pitch` about the lift-plane normal:
/// `(cos(pitch/2), 0, sin(pitch/2), 0)` scalar-first.
pub fn quaternion_from_pitch<T: Real>(pitch: T) -> Quaternion<T> {
    let half = pitch / lit::<T>(2.0);
    Quaternion::new(half.cos(), T::zero(), half.sin(), T::zero())
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::{assert_abs_diff_eq, assert_relative_eq};
    use core::f64::consts::FRAC_PI_2;
    use proptest::prelude::*;

    // Demo strip throughout: L = 1 m, q = 1 N/m, k = 0.2.
    fn demo() -> MaterialSpec<f64> {
        MaterialSpec::new(1.0, 1.0, 0.2).unwrap()
    }

    // Solved equilibrium at z1 = 0.5 for the demo strip, frozen from a
    // high-precision bisection run.
    fn state_half() -> CatenaryState<f64> {
        CatenaryState {
            lift_height: 0.5,
            shape_ratio: 2.6233873356991237,
            scale: 0.08435340033749464,
            span: 0.2212916421685416,
            hang_length: 0.5782329983125268,
            tension: 0.08435340033749464,
            grasp_angle: 1.425936829187512,
        }
    }

    fn simpson_arc_length(span: f64, scale: f64, intervals: usize) -> f64 {
        // integral of sqrt(1 + sinh^2(x/a)) dx over [0, span]
        let f = |x: f64| (1.0 + (x / scale).sinh().powi(2)).sqrt();
        let n = intervals * 2;
        let h = span / n as f64;
        let mut acc = f(0.0) + f(span);
        for i in 1..n {
            let w = if i % 2 == 1 { 4.0 } else { 2.0 };
            acc += w * f(i as f64 * h);
        }
        acc * h / 3.0
    }

    #[test]
    fn material_rejects_nonpositive_fields() {
        assert!(MaterialSpec::new(0.0, 1.0, 0.2).is_err());
        assert!(MaterialSpec::new(1.0, -1.0, 0.2).is_err());
        assert!(MaterialSpec::new(1.0, 1.0, 0.0).is_err());
        assert!(MaterialSpec::new(f64::NAN, 1.0, 0.2).is_err());
        assert!(demo().with_gripper_friction(-0.1).is_err());
        assert!(demo().with_gripper_friction(0.5).is_ok());
    }

    #[test]
    fn flat_state_is_exact() {
        let flat = CatenaryState::flat(&demo());
        assert_eq!(flat.lift_height, 0.0);
        assert_eq!(flat.shape_ratio, 0.0);
        assert_eq!(flat.scale, 0.2);
        assert_eq!(flat.tension, 0.2);
        assert_eq!(flat.grasp_angle, 0.0);
        let (height, balance) = flat.residuals(&demo());
        assert_eq!(height, 0.0);
        assert_eq!(balance, 0.0);
    }

    #[test]
    fn height_matches_solved_state() {
        let s = state_half();
        let z = catenary_height(s.span, s.scale).unwrap();
        assert_abs_diff_eq!(z, 0.5, epsilon = 1e-10);
    }

    #[test]
    fn height_is_stable_near_apex() {
        // naive a(cosh(x/a)-1) rounds to 0 here; the sinh^2 form must not
        let z = catenary_height(1e-8, 1.0).unwrap();
        assert_relative_eq!(z, 0.5e-16, max_relative = 1e-6);
    }

    #[test]
    fn height_rejects_bad_scale() {
        assert_eq!(
            catenary_height(0.1, 0.0),
            Err(Error::NonpositiveScale { value: 0.0 })
        );
        assert!(catenary_height(0.1, -1.0).is_err());
    }

    #[test]
    fn arc_length_matches_quadrature() {
        let s = state_half();
        let closed = hanging_arc_length(s.span, s.scale).unwrap();
        let quad = simpson_arc_length(s.span, s.scale, 2000);
        assert_abs_diff_eq!(closed, quad, epsilon = 1e-10);
        assert_abs_diff_eq!(closed, 0.5782329983125268, epsilon = 1e-12);
    }

    #[test]
    fn arc_length_rejects_bad_input() {
        assert!(hanging_arc_length(0.1, 0.0).is_err());
        assert!(hanging_arc_length(-0.1, 1.0).is_err());
        assert_eq!(hanging_arc_length(0.0, 1.0), Ok(0.0));
    }

    #[test]
    fn tension_limit_matches_solved_state() {
        let h = tension_from_friction(&demo(), 0.5782329983125268).unwrap();
        assert_abs_diff_eq!(h, 0.08435340033749464, epsilon = 1e-15);
        assert_eq!(tension_from_friction(&demo(), 1.0), Ok(0.0));
        assert!(tension_from_friction(&demo(), -0.1).is_err());
        assert!(tension_from_friction(&demo(), 1.1).is_err());
    }

    #[test]
    fn tangent_angle_frozen_point() {
        // sinh(2.62) = 6.8314603611252445
        let alpha = tangent_angle(2.62).unwrap();
        assert_abs_diff_eq!(alpha, 1.4254470353798577, epsilon = 1e-15);
        assert_eq!(tangent_angle(0.0), Ok(0.0));
        assert!(tangent_angle(-1e-12).is_err());
    }

    #[test]
    fn tangent_angle_saturates_at_vertical() {
        let alpha = tangent_angle(800.0).unwrap(); // sinh overflows to inf
        assert_abs_diff_eq!(alpha, FRAC_PI_2, epsilon = 1e-15);
    }

    #[test]
    fn waypoint_matches_solved_state() {
        let (x, z) = waypoint_coordinates(&state_half(), &demo()).unwrap();
        assert_abs_diff_eq!(x, 0.6430586438560147, epsilon = 1e-12);
        assert_abs_diff_eq!(z, 0.5, epsilon = 1e-10);
    }

    #[test]
    fn waypoint_of_flat_state_is_table_edge() {
        let (x, z) = waypoint_coordinates(&CatenaryState::flat(&demo()), &demo()).unwrap();
        assert_eq!(x, 1.0);
        assert_eq!(z, 0.0);
    }

    #[test]
    fn waypoint_rejects_singular_state() {
        let mut s = state_half();
        s.tension = 0.0;
        assert_eq!(
            waypoint_coordinates(&s, &demo()),
            Err(Error::SingularState)
        );
    }

    #[test]
    fn vertical_pitch_quaternion() {
        let q = quaternion_from_pitch(FRAC_PI_2);
        let half = core::f64::consts::FRAC_1_SQRT_2;
        assert_abs_diff_eq!(q.w, half, epsilon = 1e-15);
        assert_abs_diff_eq!(q.y, half, epsilon = 1e-15);
        assert_eq!(q.x, 0.0);
        assert_eq!(q.z, 0.0);
    }

    #[test]
    fn slerp_hits_endpoints_and_midpoint() {
        let q0 = quaternion_from_pitch(0.2);
        let q1 = quaternion_from_pitch(1.0);
        let qm = quaternion_from_pitch(0.6);
        let s0 = q0.slerp(q1, 0.0);
        let s1 = q0.slerp(q1, 1.0);
        let sm = q0.slerp(q1, 0.5);
        for (got, want) in [(s0, q0), (s1, q1), (sm, qm)] {
            assert_abs_diff_eq!(got.w, want.w, epsilon = 1e-14);
            assert_abs_diff_eq!(got.y, want.y, epsilon = 1e-14);
        }
    }

    #[test]
    fn hemisphere_flip() {
        let q = Quaternion::new(-0.5f64, 0.1, 0.2, 0.3).into_positive_hemisphere();
        assert!(q.w > 0.0);
        let p = Quaternion::new(0.5f64, 0.1, 0.2, 0.3).into_positive_hemisphere();
        assert_eq!(p.w, 0.5);
    }

    #[test]
    fn mode_strings_round_trip() {
        for mode in [LiftMode::Dexterous, LiftMode::VerticalNaive] {
            assert_eq!(mode.as_str().parse::<LiftMode>(), Ok(mode));
        }
        assert!("upward".parse::<LiftMode>().is_err());
    }

    proptest! {
        #[test]
        fn height_is_even_in_offset(x in -5.0f64..5.0, a in 0.01f64..10.0) {
            let plus = catenary_height(x, a).unwrap();
            let minus = catenary_height(-x, a).unwrap();
            prop_assert!((plus - minus).abs() <= 1e-12 * plus.abs().max(1.0));
        }

        #[test]
        fn arc_is_at_least_span(l1 in 0.0f64..5.0, a in 0.01f64..10.0) {
            let arc = hanging_arc_length(l1, a).unwrap();
            prop_assert!(arc >= l1);
        }

        #[test]
        fn tangent_angle_is_strictly_increasing(u in 0.0f64..20.0, du in 1e-6f64..5.0) {
            let lo = tangent_angle(u).unwrap();
            let hi = tangent_angle(u + du).unwrap();
            prop_assert!(hi > lo);
        }

        #[test]
        fn pitch_quaternion_is_unit_and_rotates_x(alpha in 0.0f64..FRAC_PI_2) {
            let q = quaternion_from_pitch(alpha);
            prop_assert!((q.norm() - 1.0).abs() < 1e-12);
            let v = q.rotate([1.0, 0.0, 0.0]);
            prop_assert!((v[0] - alpha.cos()).abs() < 1e-12);
            prop_assert!(v[1].abs() < 1e-12);
            prop_assert!((v[2] + alpha.sin()).abs() < 1e-12);
        }

        #[test]
        fn slerp_stays_between_pitches(a in 0.0f64..1.5, b in 0.0f64..1.5, t in 0.0f64..1.0) {
            let (lo, hi) = if a <= b { (a, b) } else { (b, a) };
            let q = quaternion_from_pitch(a).slerp(quaternion_from_pitch(b), t);
            // recover the pitch: for (cos h, 0, sin h, 0) it is 2 atan2(y, w)
            let pitch = 2.0 * q.y.atan2(q.w);
            prop_assert!(pitch >= lo - 1e-12 && pitch <= hi + 1e-12);
        }
    }
}
