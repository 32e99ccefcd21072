//! Measured material presets for 50 mm test strips, plus a unit demo strip.
//!
//! The catalogue stores each fabric's areal weight as printed on the bolt
//! (grams per square centimetre) and converts it to weight per unit strip
//! length at load time, so the raw measurement stays visible in the listing.

use edgelift::MaterialSpec;

/// Standard gravity, m/s^2.
const GRAVITY: f64 = 9.80665;
/// Width of the test strips the friction values were measured on, m.
const STRIP_WIDTH: f64 = 0.05;
/// Length of the test strips, m.
const STRIP_LENGTH: f64 = 0.5;

/// One entry of the preset catalogue.
#[derive(Debug, Clone)]
pub struct Preset {
    /// Short name accepted by `--preset`.
    pub name: &'static str,
    /// Human-readable fabric description.
    pub label: &'static str,
    /// Areal weight as measured, g/cm^2. `None` for synthetic presets.
    pub raw_weight_g_cm2: Option<f64>,
    /// Fully resolved material parameters.
    pub material: MaterialSpec,
}

/// Converts an areal weight in g/cm^2 into strip weight per length in N/m.
///
/// g/cm^2 = 10 kg/m^2, and the strip is `STRIP_WIDTH` metres wide.
fn strip_weight(raw_g_cm2: f64) -> f64 {
    raw_g_cm2 * 10.0 * STRIP_WIDTH * GRAVITY
}

fn fabric(
    name: &'static str,
    label: &'static str,
    raw_g_cm2: f64,
    covering_friction: f64,
    gripper_friction: f64,
) -> Preset {
    let material = MaterialSpec::new(STRIP_LENGTH, strip_weight(raw_g_cm2), covering_friction)
        .and_then(|m| m.with_gripper_friction(gripper_friction))
        .expect("catalogue entries are valid by construction")
        .with_label(label);
    Preset { name, label, raw_weight_g_cm2: Some(raw_g_cm2), material }
}

/// The full preset catalogue, in listing order.
pub fn catalog() -> Vec<Preset> {
    let demo = Preset {
        name: "demo",
        label: "unit demo strip",
        raw_weight_g_cm2: None,
        material: MaterialSpec::new(1.0, 1.0, 0.2)
            .expect("catalogue entries are valid by construction")
            .with_label("unit demo strip"),
    };
    vec![
        demo,
        fabric("m1", "thin denim cotton", 0.014, 1.54, 0.50),
        fabric("m2", "600D cordura canvas", 0.031, 1.71, 0.57),
        fabric("m3", "heavy denim cotton", 0.036, 1.49, 0.35),
        fabric("m4", "natural coarse cotton", 0.031, 1.38, 0.44),
    ]
}

/// Looks up a preset by name (case-insensitive).
pub fn find(name: &str) -> Option<Preset> {
    catalog().into_iter().find(|p| p.name.eq_ignore_ascii_case(name))
}
