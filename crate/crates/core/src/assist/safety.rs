//! Contact-force, clearance and stroke checks for the dressing task.

use serde::Serialize;

use super::registry::{keys, ReferenceRegistry};
use crate::error::{Error, Result};

/// Body regions with a registered quasi-static contact limit.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ContactRegion {
    ThighKnee,
}

impl ContactRegion {
    fn limit_key(self) -> &'static str {
        match self {
            ContactRegion::ThighKnee => keys::ISO_THIGH_KNEE_LIMIT,
        }
    }
}

impl std::str::FromStr for ContactRegion {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "thigh_knee" | "thigh-knee" => Ok(ContactRegion::ThighKnee),
            other => Err(Error::InvalidInput(format!(
                "unknown body region `{other}`"
            ))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SafetyVerdict {
    pub pass: bool,
    /// N.
    pub applied_limit: f64,
    /// N.
    pub measured: f64,
    /// `applied_limit / measured`; infinite for zero force.
    pub margin_ratio: f64,
}

/// `force` passes when it does not exceed the region limit.
pub fn iso_contact_check(
    force: f64,
    region: ContactRegion,
    registry: &ReferenceRegistry,
) -> Result<SafetyVerdict> {
    if !(force.is_finite() && force >= 0.0) {
        return Err(Error::InvalidInput(format!(
            "contact force must be non-negative, got {force}"
        )));
    }
    let limit = registry.value(region.limit_key())?;
    Ok(SafetyVerdict {
        pass: force <= limit,
        applied_limit: limit,
        measured: force,
        margin_ratio: if force == 0.0 {
            f64::INFINITY
        } else {
            limit / force
        },
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ClearanceResult {
    /// mm; negative when the body is wider than the space.
    pub per_side_clearance: f64,
    pub fits: bool,
}

pub fn clearance_check(
    space_width: f64,
    body_width: f64,
    device_width: f64,
) -> Result<ClearanceResult> {
    for (name, w) in [
        ("space width", space_width),
        ("body width", body_width),
        ("device width", device_width),
    ] {
        if !(w.is_finite() && w > 0.0) {
            return Err(Error::InvalidInput(format!(
                "{name} must be positive, got {w}"
            )));
        }
    }
    let per_side = (space_width - body_width) / 2.0;
    Ok(ClearanceResult {
        per_side_clearance: per_side,
        fits: device_width <= per_side,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct StrokeResult {
    pub pass: bool,
    /// `available - required` (mm).
    pub slack: f64,
}

pub fn stroke_check(required_travel: f64, available_extension: f64) -> Result<StrokeResult> {
    for (name, x) in [
        ("required travel", required_travel),
        ("available extension", available_extension),
    ] {
        if !(x.is_finite() && x >= 0.0) {
            return Err(Error::InvalidInput(format!(
                "{name} must be non-negative, got {x}"
            )));
        }
    }
    Ok(StrokeResult {
        pass: available_extension >= required_travel,
        slack: available_extension - required_travel,
    })
}
