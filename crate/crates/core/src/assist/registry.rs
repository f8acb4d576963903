//! Registry of published gripper, manipulator and trial constants.
//!
//! Every entry's key ends in a unit suffix (`_n`, `_mm`, `_pct`, ...) that
//! declares its dimension; the `unit_matches_key` rule checks the stored unit
//! against it.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub mod keys {
    pub const PINCH_FORCE_SINGLE: &str = "gripper.pinch_force_single_tendon_n";
    pub const PINCH_FORCE_DOUBLE: &str = "gripper.pinch_force_double_tendon_n";
    pub const PINCH_FORCE_DOUBLE_MEASURED: &str = "gripper.pinch_force_double_tendon_measured_n";
    pub const PINCH_FORCE_MAX: &str = "gripper.pinch_force_max_n";
    pub const FINGERTIP_FORCE: &str = "gripper.fingertip_force_n";
    pub const GRIPPER_WEIGHT: &str = "gripper.weight_g";
    pub const CYLINDER_MIN_DIAMETER: &str = "grasp.cylinder_min_diameter_mm";
    pub const CYLINDER_MAX_DIAMETER: &str = "grasp.cylinder_max_diameter_mm";
    pub const ISO_THIGH_KNEE_LIMIT: &str = "safety.iso_thigh_knee_limit_n";
    pub const TOILET_WIDTH: &str = "space.toilet_width_mm";
    pub const SHOULDER_WIDTH: &str = "space.shoulder_width_mm";
    pub const SIDE_CLEARANCE: &str = "space.side_clearance_mm";
    pub const SECONDARY_DIAMETER: &str = "secondary_manipulator.outer_diameter_mm";
    pub const PRIMARY_DIAMETER: &str = "primary_manipulator.outer_diameter_mm";
    pub const SECONDARY_STROKE: &str = "secondary_manipulator.stroke_mm";
    pub const TROUSER_TRAVEL: &str = "task.trouser_travel_mm";
    pub const TROUSER_RAISE: &str = "task.trouser_raise_mm";
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RegistryEntry {
    pub key: String,
    pub value: f64,
    pub unit: String,
    pub source: String,
    pub quote: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RuleSpec {
    pub id: String,
    pub description: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ReferenceRegistry {
    pub entries: Vec<RegistryEntry>,
    pub rules: Vec<RuleSpec>,
}

/// Key suffix to unit, longest suffix first.
const UNIT_SUFFIXES: &[(&str, &str)] = &[
    ("_mm_per_kg", "mm/kg"),
    ("_rad_per_s", "rad/s"),
    ("_m_per_s", "m/s"),
    ("_count", "count"),
    ("_pct", "%"),
    ("_kgf", "kgf"),
    ("_nm", "N*m"),
    ("_mm", "mm"),
    ("_kg", "kg"),
    ("_n", "N"),
    ("_g", "g"),
    ("_m", "m"),
    ("_s", "s"),
    ("_v", "V"),
    ("_a", "A"),
];

/// Unit implied by a key's suffix.
pub fn declared_unit(key: &str) -> Option<&'static str> {
    UNIT_SUFFIXES
        .iter()
        .find(|(suffix, _)| key.ends_with(suffix))
        .map(|(_, unit)| *unit)
}

const SHIPPED_JSON: &str = include_str!("../../data/reference_registry.json");

fn entry(key: &str, value: f64, source: &str, quote: &str) -> RegistryEntry {
    RegistryEntry {
        key: key.to_owned(),
        value,
        unit: declared_unit(key).unwrap_or("?").to_owned(),
        source: source.to_owned(),
        quote: quote.to_owned(),
    }
}

fn rule(id: &str, description: &str) -> RuleSpec {
    RuleSpec {
        id: id.to_owned(),
        description: description.to_owned(),
    }
}

/// (row, task, trials, successes, rate, mean time if printed)
type TrialRow = (&'static str, &'static str, f64, f64, f64, Option<f64>);

fn trial_rows(out: &mut Vec<RegistryEntry>) {
    let rows: [TrialRow; 6] = [
        ("prior_study", "dressing", 10.0, 9.0, 90.0, None),
        ("prior_study", "undressing", 7.0, 0.0, 0.0, None),
        ("proposed_system", "dressing", 4.0, 4.0, 100.0, Some(3.0)),
        ("proposed_system", "undressing", 4.0, 4.0, 100.0, Some(3.1)),
        ("human_caregiver", "dressing", 4.0, 4.0, 100.0, Some(2.0)),
        ("human_caregiver", "undressing", 4.0, 4.0, 100.0, Some(2.0)),
    ];
    for (row, task, trials, successes, rate, time) in rows {
        let p = format!("trial.{row}.{task}");
        let label = format!("{row} / {task}");
        out.push(entry(
            &format!("{p}.trials_count"),
            trials,
            "Table 5",
            &format!("{label}: No. of trials"),
        ));
        out.push(entry(
            &format!("{p}.successes_count"),
            successes,
            "Table 5",
            &format!("{label}: No. of success"),
        ));
        out.push(entry(
            &format!("{p}.success_rate_pct"),
            rate,
            "Table 5",
            &format!("{label}: Success rate"),
        ));
        if let Some(t) = time {
            out.push(entry(
                &format!("{p}.mean_time_s"),
                t,
                "Table 5",
                &format!("{label}: time (s)"),
            ));
        }
    }
}

impl ReferenceRegistry {
    /// The registry as published, built in code. The shipped JSON file is this
    /// value serialised with [`ReferenceRegistry::to_json`].
    pub fn published() -> Self {
        let mut e = vec![
            entry(
                keys::PINCH_FORCE_SINGLE,
                7.8,
                "Table 2",
                "Pinch Force: Single Tendon",
            ),
            entry(
                keys::PINCH_FORCE_DOUBLE,
                11.8,
                "Table 2",
                "Pinch Force: Double Tendon",
            ),
            entry(
                keys::PINCH_FORCE_DOUBLE_MEASURED,
                11.1,
                "Sec. 4.2",
                "double tendon average pinch force",
            ),
            entry(
                keys::PINCH_FORCE_MAX,
                11.8,
                "Sec. 4.3",
                "maximum pinch force",
            ),
            entry(
                "gripper.tip_force_increase_pct",
                48.0,
                "Sec. 4.1",
                "tip force gain over a conventional tendon finger",
            ),
            entry(
                keys::CYLINDER_MIN_DIAMETER,
                30.0,
                "Sec. 4.3",
                "cylinder diameter lower bound, inclusive",
            ),
            entry(
                keys::CYLINDER_MAX_DIAMETER,
                145.0,
                "Sec. 4.3",
                "cylinder diameter upper bound, inclusive",
            ),
            entry(keys::GRIPPER_WEIGHT, 235.0, "Table 3", "Weight"),
            entry("gripper.width_mm", 60.0, "Table 3", "Dimensions (W)"),
            entry("gripper.length_mm", 71.0, "Table 3", "Dimensions (L)"),
            entry("gripper.height_mm", 177.0, "Table 3", "Dimensions (H)"),
            entry("gripper.dof_count", 2.0, "Table 3", "DoF"),
            entry("gripper.motor_torque_nm", 1.5, "Table 3", "Motor Torque"),
            entry(
                "gripper.motor_voltage_v",
                12.0,
                "Table 3",
                "Motor Torque (at 12 V)",
            ),
            entry(
                "gripper.motor_current_a",
                1.4,
                "Table 3",
                "Motor Torque (at 1.4 A)",
            ),
            entry(
                "gripper.max_no_load_velocity_rad_per_s",
                12.78,
                "Table 3",
                "Max No-load Velocity",
            ),
            entry(keys::FINGERTIP_FORCE, 7.8, "Table 3", "Fingertip Force"),
            entry(
                keys::ISO_THIGH_KNEE_LIMIT,
                220.0,
                "Sec. 5.1",
                "thigh/knee quasi-static limit, inclusive",
            ),
            entry(keys::TOILET_WIDTH, 800.0, "Sec. 5", "typical toilet width"),
            entry(
                keys::SHOULDER_WIDTH,
                460.0,
                "Sec. 5",
                "average shoulder width",
            ),
            entry(keys::SIDE_CLEARANCE, 170.0, "Sec. 5", "clearance per side"),
            entry(
                "space.prior_robot_width_mm",
                900.0,
                "Sec. 5",
                "prior robot body width",
            ),
            entry(
                "primary_manipulator.length_mm",
                844.0,
                "Sec. 5.1",
                "primary manipulator length",
            ),
            entry(
                keys::PRIMARY_DIAMETER,
                175.0,
                "Sec. 5.1",
                "primary manipulator outer diameter",
            ),
            entry(
                "primary_manipulator.dof_count",
                10.0,
                "Sec. 5.1",
                "primary manipulator DoF",
            ),
            entry(
                "primary_manipulator.weight_kg",
                4.0,
                "Table 4",
                "Weight (with Gripper): Primary",
            ),
            entry(
                "primary_manipulator.stroke_mm",
                171.0,
                "Table 4",
                "Max length extension and contraction: Primary",
            ),
            entry(
                "primary_manipulator.max_speed_m_per_s",
                0.038,
                "Table 4",
                "Max speed extension and contraction: Primary",
            ),
            entry(
                "primary_manipulator.tip_force_kgf",
                3.0,
                "Table 4",
                "Tip Force: Primary",
            ),
            entry(
                "primary_manipulator.tip_rigidity_mm_per_kg",
                6.67,
                "Table 4",
                "Tip Rigidity: Primary",
            ),
            entry(
                "primary_manipulator.tip_accuracy_mm",
                20.0,
                "Table 4",
                "Accuracy of tip position: Primary",
            ),
            entry(
                "secondary_manipulator.length_mm",
                334.0,
                "Sec. 5.1",
                "secondary manipulator length",
            ),
            entry(
                keys::SECONDARY_DIAMETER,
                75.0,
                "Sec. 5.1",
                "secondary manipulator outer diameter",
            ),
            entry(
                "secondary_manipulator.dof_count",
                9.0,
                "Sec. 5.1",
                "secondary manipulator DoF",
            ),
            entry(
                "secondary_manipulator.weight_kg",
                1.5,
                "Table 4",
                "Weight (with Gripper): Secondary",
            ),
            entry(
                keys::SECONDARY_STROKE,
                180.0,
                "Table 4",
                "Max length extension and contraction: Secondary",
            ),
            entry(
                "secondary_manipulator.max_speed_m_per_s",
                0.09,
                "Table 4",
                "Max speed extension and contraction: Secondary",
            ),
            entry(
                "secondary_manipulator.grasping_speed_m_per_s",
                0.06,
                "Table 4",
                "Speed while grasping: Secondary",
            ),
            entry(
                "secondary_manipulator.tip_force_kgf",
                1.5,
                "Table 4",
                "Tip Force: Secondary",
            ),
            entry(
                "secondary_manipulator.tip_rigidity_mm_per_kg",
                10.0,
                "Table 4",
                "Tip Rigidity: Secondary",
            ),
            entry(
                keys::TROUSER_TRAVEL,
                160.0,
                "Sec. 5.1",
                "required trouser movement",
            ),
            entry(
                keys::TROUSER_RAISE,
                170.0,
                "Sec. 6.2",
                "trouser lowered and raised",
            ),
            entry(
                "task.waistband_pinch_force_n",
                10.0,
                "Sec. 6.2",
                "waistband pinch force (approx.)",
            ),
            entry(
                "environment.toilet_room_width_m",
                1.5,
                "Sec. 6",
                "toilet room width",
            ),
            entry(
                "environment.toilet_room_length_m",
                1.85,
                "Sec. 6",
                "toilet room length",
            ),
            entry(
                "environment.entrance_gap_m",
                0.92,
                "Sec. 6",
                "toilet to wall, entrance",
            ),
            entry(
                "environment.right_gap_m",
                0.51,
                "Sec. 6",
                "toilet to wall, right side",
            ),
            entry(
                "environment.left_gap_m",
                0.61,
                "Sec. 6",
                "toilet to wall, left side",
            ),
            entry(
                "environment.paralyzed_side_gap_mm",
                500.0,
                "Sec. 6.1",
                "toilet to wall, paralysed side (approx.)",
            ),
        ];
        trial_rows(&mut e);
        Self {
            entries: e,
            rules: vec![
                rule(
                    "pinch_force_ordering",
                    "single-tendon pinch force is below double-tendon pinch force; compares the Table 2 values \
                     (7.8 N vs 11.8 N), not the 11.1 N measured average",
                ),
                rule(
                    "success_rate_readback",
                    "every trial success rate equals 100 * successes / trials",
                ),
                rule("gripper_weight", "gripper weight entry is 235 g"),
                rule("unit_matches_key", "every entry's unit matches the dimension declared by its key suffix"),
                rule(
                    "fingertip_force_matches_single_pinch",
                    "the deployed single-tendon gripper's fingertip force equals the single-tendon pinch force",
                ),
                rule(
                    "side_clearance_arithmetic",
                    "side clearance equals (toilet width - shoulder width) / 2",
                ),
            ],
        }
    }

    /// The registry file shipped with this crate, structurally validated.
    pub fn shipped() -> Self {
        Self::parse(SHIPPED_JSON).expect("shipped registry is well-formed")
    }

    /// Parses and structurally validates (unique keys, non-empty sources,
    /// finite values) without evaluating consistency rules.
    pub fn parse(json: &str) -> Result<Self> {
        let r: Self =
            serde_json::from_str(json).map_err(|e| Error::Config(format!("registry: {e}")))?;
        let mut seen = BTreeSet::new();
        for e in &r.entries {
            if !seen.insert(e.key.as_str()) {
                return Err(Error::Config(format!(
                    "registry: duplicate key `{}`",
                    e.key
                )));
            }
            if e.source.trim().is_empty() {
                return Err(Error::Config(format!(
                    "registry: entry `{}` has no source",
                    e.key
                )));
            }
            if !e.value.is_finite() {
                return Err(Error::Config(format!(
                    "registry: entry `{}` is not finite",
                    e.key
                )));
            }
        }
        Ok(r)
    }

    /// Parses and requires every consistency rule to pass.
    pub fn load(json: &str) -> Result<Self> {
        let r = Self::parse(json)?;
        registry_verify(&r)?;
        Ok(r)
    }

    /// Pretty JSON with a trailing newline; stable field and entry order.
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("registry serialises");
        s.push('\n');
        s
    }

    pub fn entry(&self, key: &str) -> Option<&RegistryEntry> {
        self.entries.iter().find(|e| e.key == key)
    }

    pub fn value(&self, key: &str) -> Result<f64> {
        self.entry(key)
            .map(|e| e.value)
            .ok_or_else(|| Error::Config(format!("registry has no entry `{key}`")))
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RuleOutcome {
    pub id: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RuleReport {
    pub outcomes: Vec<RuleOutcome>,
}

impl RuleReport {
    pub fn all_passed(&self) -> bool {
        self.outcomes.iter().all(|o| o.passed)
    }
}

fn check(registry: &ReferenceRegistry, id: &str) -> std::result::Result<String, String> {
    let get = |k: &str| registry.value(k).map_err(|e| e.to_string());
    match id {
        "pinch_force_ordering" => {
            let single = get(keys::PINCH_FORCE_SINGLE)?;
            let double = get(keys::PINCH_FORCE_DOUBLE)?;
            if single < double {
                Ok(format!("{single} N < {double} N"))
            } else {
                Err(format!(
                    "{} = {single} N is not below {} = {double} N",
                    keys::PINCH_FORCE_SINGLE,
                    keys::PINCH_FORCE_DOUBLE
                ))
            }
        }
        "success_rate_readback" => {
            let mut n = 0;
            for e in registry
                .entries
                .iter()
                .filter(|e| e.key.ends_with(".success_rate_pct"))
            {
                let stem = e.key.trim_end_matches(".success_rate_pct");
                let trials = get(&format!("{stem}.trials_count"))?;
                let successes = get(&format!("{stem}.successes_count"))?;
                if trials <= 0.0 {
                    return Err(format!("{stem}: no trials"));
                }
                let expect = 100.0 * successes / trials;
                if (expect - e.value).abs() > 1e-9 {
                    return Err(format!(
                        "{stem}: {successes}/{trials} = {expect}% but rate entry says {}%",
                        e.value
                    ));
                }
                n += 1;
            }
            if n == 0 {
                return Err("no success-rate entries".into());
            }
            Ok(format!("{n} rates match"))
        }
        "gripper_weight" => {
            let w = get(keys::GRIPPER_WEIGHT)?;
            if w == 235.0 {
                Ok("235 g".into())
            } else {
                Err(format!("{} = {w} g, expected 235 g", keys::GRIPPER_WEIGHT))
            }
        }
        "unit_matches_key" => {
            let bad: Vec<String> = registry
                .entries
                .iter()
                .filter(|e| declared_unit(&e.key) != Some(e.unit.as_str()))
                .map(|e| format!("{} [{}]", e.key, e.unit))
                .collect();
            if bad.is_empty() {
                Ok(format!("{} entries", registry.entries.len()))
            } else {
                Err(format!("unit mismatch: {}", bad.join(", ")))
            }
        }
        "fingertip_force_matches_single_pinch" => {
            let tip = get(keys::FINGERTIP_FORCE)?;
            let single = get(keys::PINCH_FORCE_SINGLE)?;
            if tip == single {
                Ok(format!("{tip} N"))
            } else {
                Err(format!(
                    "fingertip {tip} N differs from single pinch {single} N"
                ))
            }
        }
        "side_clearance_arithmetic" => {
            let space = get(keys::TOILET_WIDTH)?;
            let body = get(keys::SHOULDER_WIDTH)?;
            let side = get(keys::SIDE_CLEARANCE)?;
            let expect = (space - body) / 2.0;
            if (expect - side).abs() < 1e-9 {
                Ok(format!("({space} - {body}) / 2 = {side} mm"))
            } else {
                Err(format!(
                    "({space} - {body}) / 2 = {expect} mm, entry says {side} mm"
                ))
            }
        }
        other => Err(format!("unknown rule `{other}`")),
    }
}

/// Evaluates every rule listed in the registry.
pub fn evaluate_rules(registry: &ReferenceRegistry) -> RuleReport {
    RuleReport {
        outcomes: registry
            .rules
            .iter()
            .map(|r| {
                let (passed, detail) = match check(registry, &r.id) {
                    Ok(d) => (true, d),
                    Err(d) => (false, d),
                };
                RuleOutcome {
                    id: r.id.clone(),
                    passed,
                    detail,
                }
            })
            .collect(),
    }
}

/// Fails with the first violated rule.
pub fn registry_verify(registry: &ReferenceRegistry) -> Result<RuleReport> {
    let report = evaluate_rules(registry);
    if let Some(bad) = report.outcomes.iter().find(|o| !o.passed) {
        return Err(Error::RuleViolation {
            rule: bad.id.clone(),
            detail: bad.detail.clone(),
        });
    }
    Ok(report)
}
