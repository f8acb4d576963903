//! Grasp feasibility against the published grasp envelope.

use serde::Serialize;

use super::kinematics::FingerGeometry;
use super::tendon::{static_tip_force, TendonModel};
use crate::assist::registry::{keys, ReferenceRegistry};
use crate::error::{Error, Result};
use crate::linkage::LinkageGeometry;

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum GraspObject {
    Cylinder { diameter: f64 },
    Flat { thickness: f64 },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum GraspType {
    Pinch,
    Cylindrical,
    Infeasible,
}

/// Operating point used to predict the contact force.
#[derive(Debug, Clone, Copy)]
pub struct ForceContext<'a> {
    pub tendon: &'a TendonModel,
    pub geometry: &'a LinkageGeometry,
    pub finger: &'a FingerGeometry,
    pub theta1: f64,
    pub tension: f64,
}

impl ForceContext<'_> {
    fn predict(&self) -> Result<f64> {
        static_tip_force(
            self.tendon,
            self.geometry,
            self.finger,
            self.theta1,
            self.tension,
        )
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct GraspReport {
    pub grasp_type: GraspType,
    pub feasible: bool,
    /// N; zero whenever infeasible.
    pub predicted_force: f64,
    /// Cylinders: signed distance (mm) to the nearest diameter bound, positive
    /// inside the envelope. Flat objects: unused force headroom as a fraction
    /// of the published pinch maximum.
    pub margin: f64,
    pub notes: String,
}

pub fn grasp_assess(
    object: GraspObject,
    registry: &ReferenceRegistry,
    ctx: &ForceContext<'_>,
) -> Result<GraspReport> {
    let cap = registry.value(keys::PINCH_FORCE_MAX)?;
    match object {
        GraspObject::Cylinder { diameter } => {
            positive("cylinder diameter", diameter)?;
            let lo = registry.value(keys::CYLINDER_MIN_DIAMETER)?;
            let hi = registry.value(keys::CYLINDER_MAX_DIAMETER)?;
            let margin = (diameter - lo).min(hi - diameter);
            if lo <= diameter && diameter <= hi {
                Ok(GraspReport {
                    grasp_type: GraspType::Cylindrical,
                    feasible: true,
                    predicted_force: ctx.predict()?.min(cap),
                    margin,
                    notes: format!("diameter {diameter} mm inside [{lo}, {hi}] mm"),
                })
            } else {
                Ok(GraspReport {
                    grasp_type: GraspType::Infeasible,
                    feasible: false,
                    predicted_force: 0.0,
                    margin,
                    notes: format!("diameter {diameter} mm outside [{lo}, {hi}] mm"),
                })
            }
        }
        GraspObject::Flat { thickness } => {
            positive("flat object thickness", thickness)?;
            let force = ctx.predict()?.min(cap);
            if force > 0.0 {
                Ok(GraspReport {
                    grasp_type: GraspType::Pinch,
                    feasible: true,
                    predicted_force: force,
                    margin: 1.0 - force / cap,
                    notes: format!("pinch at {force:.3} N (cap {cap} N)"),
                })
            } else {
                Ok(GraspReport {
                    grasp_type: GraspType::Infeasible,
                    feasible: false,
                    predicted_force: 0.0,
                    margin: 1.0,
                    notes: "tendon tension does not overcome the return spring".into(),
                })
            }
        }
    }
}

fn positive(what: &str, x: f64) -> Result<()> {
    if x.is_finite() && x > 0.0 {
        Ok(())
    } else {
        Err(Error::InvalidInput(format!(
            "{what} must be positive, got {x}"
        )))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::config::FingerConfig;

    fn assess(object: GraspObject, tension: Option<f64>) -> GraspReport {
        let c = FingerConfig::default_config();
        let tendon = c.tendon().unwrap();
        let finger = c.finger().unwrap();
        let reg = ReferenceRegistry::published();
        let ctx = ForceContext {
            tendon: &tendon,
            geometry: &c.geometry,
            finger: &finger,
            theta1: c.geometry.theta1_range.hi,
            tension: tension.unwrap_or(tendon.max_tension),
        };
        grasp_assess(object, &reg, &ctx).unwrap()
    }

    #[test]
    fn cylinder_envelope_is_closed() {
        for (d, ok) in [
            (100.0, true),
            (30.0, true),
            (145.0, true),
            (29.9, false),
            (145.1, false),
        ] {
            let r = assess(GraspObject::Cylinder { diameter: d }, None);
            assert_eq!(r.feasible, ok, "diameter {d}");
            if ok {
                assert_eq!(r.grasp_type, GraspType::Cylindrical);
            } else {
                assert_eq!(r.grasp_type, GraspType::Infeasible);
                assert_eq!(r.predicted_force, 0.0);
            }
        }
        let r = assess(GraspObject::Cylinder { diameter: 100.0 }, None);
        assert!((r.margin - 45.0).abs() < 1e-12);
    }

    #[test]
    fn thin_sheet_is_a_capped_pinch() {
        let r = assess(GraspObject::Flat { thickness: 0.5 }, None);
        assert_eq!(r.grasp_type, GraspType::Pinch);
        assert!(r.feasible);
        assert!(r.predicted_force > 0.0 && r.predicted_force <= 11.8);
    }

    #[test]
    fn slack_tendon_cannot_pinch() {
        let r = assess(GraspObject::Flat { thickness: 0.5 }, Some(0.0));
        assert!(!r.feasible);
        assert_eq!(r.predicted_force, 0.0);
    }

    #[test]
    fn non_positive_dimensions_rejected() {
        let c = FingerConfig::default_config();
        let tendon = c.tendon().unwrap();
        let finger = c.finger().unwrap();
        let reg = ReferenceRegistry::published();
        let ctx = ForceContext {
            tendon: &tendon,
            geometry: &c.geometry,
            finger: &finger,
            theta1: 0.5,
            tension: 1.0,
        };
        assert!(grasp_assess(GraspObject::Cylinder { diameter: 0.0 }, &reg, &ctx).is_err());
        assert!(grasp_assess(GraspObject::Flat { thickness: -1.0 }, &reg, &ctx).is_err());
    }
}
