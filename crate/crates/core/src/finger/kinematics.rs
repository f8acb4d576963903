//! Fingertip forward kinematics, tip traces and workspace sweeps.

use nalgebra::{Rotation2, Vector2};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linkage::{
    solve_chain, solve_sweep, BranchPolicy, JointRates, JointState, LinkageGeometry,
};
use crate::units::Interval;

/// Phalanx chain driven by the anatomical joint angles.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FingerGeometry {
    /// Proximal, middle, distal (mm).
    pub phalanges: [f64; 3],
    /// MCP axis position in the gripper frame (mm).
    pub base_offset: Vector2<f64>,
    /// Admissible whole-finger orientation angles (rad).
    pub psi_range: Interval,
}

impl FingerGeometry {
    pub fn new(
        phalanges: [f64; 3],
        base_offset: Vector2<f64>,
        psi_range: Interval,
    ) -> Result<Self> {
        if phalanges.iter().any(|l| !(l.is_finite() && *l > 0.0)) {
            return Err(Error::InvalidInput(format!(
                "phalanx lengths {phalanges:?} must be finite and positive"
            )));
        }
        if !(base_offset.x.is_finite() && base_offset.y.is_finite()) {
            return Err(Error::InvalidInput("base offset is not finite".into()));
        }
        Interval::new(psi_range.lo, psi_range.hi)?;
        Ok(Self {
            phalanges,
            base_offset,
            psi_range,
        })
    }

    pub fn total_length(&self) -> f64 {
        self.phalanges.iter().sum()
    }

    pub fn scaled(&self, s: f64) -> Self {
        Self {
            phalanges: self.phalanges.map(|l| l * s),
            base_offset: self.base_offset * s,
            psi_range: self.psi_range,
        }
    }

    pub fn check_psi(&self, psi: f64) -> Result<()> {
        if self.psi_range.contains(psi) {
            Ok(())
        } else {
            Err(Error::OutOfRange {
                quantity: "psi (deg)",
                value: psi.to_degrees(),
                lo: self.psi_range.lo.to_degrees(),
                hi: self.psi_range.hi.to_degrees(),
            })
        }
    }

    fn cumulative_angles(state: &JointState) -> [f64; 3] {
        let a = state.theta_mcp;
        let b = a + state.theta_pip;
        [a, b, b + state.theta_dip]
    }

    /// Planar tip position in the finger plane (MCP axis at the origin).
    pub fn planar_tip(&self, state: &JointState) -> Vector2<f64> {
        Self::cumulative_angles(state)
            .iter()
            .zip(self.phalanges)
            .map(|(phi, l)| Vector2::new(l * phi.cos(), l * phi.sin()))
            .sum()
    }

    /// `d(planar tip)/d theta1`.
    pub fn tip_velocity(&self, state: &JointState, rates: &JointRates) -> Vector2<f64> {
        let [r_mcp, r_pip, r_dip] = rates.anatomical();
        let cumulative_rates = [r_mcp, r_mcp + r_pip, r_mcp + r_pip + r_dip];
        Self::cumulative_angles(state)
            .iter()
            .zip(self.phalanges)
            .zip(cumulative_rates)
            .map(|((phi, l), w)| Vector2::new(-l * phi.sin(), l * phi.cos()) * w)
            .sum()
    }

    /// Maps a finger-plane point to the gripper frame.
    pub fn to_gripper(&self, planar: Vector2<f64>, psi: f64) -> Vector2<f64> {
        self.base_offset + Rotation2::new(psi) * planar
    }
}

/// One fingertip sample.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TipSample {
    pub theta1: f64,
    pub psi: f64,
    /// Finger-plane coordinates (mm).
    pub tip: Vector2<f64>,
    /// Gripper-frame coordinates (mm).
    pub grip: Vector2<f64>,
}

pub fn tip_position(finger: &FingerGeometry, state: &JointState, psi: f64) -> TipSample {
    let tip = finger.planar_tip(state);
    TipSample {
        theta1: state.theta1,
        psi,
        tip,
        grip: finger.to_gripper(tip, psi),
    }
}

/// Uniform input sweep.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SweepSpec {
    pub range: Interval,
    pub count: usize,
}

impl SweepSpec {
    pub fn new(range: Interval, count: usize) -> Self {
        Self { range, count }
    }
}

/// Tip trace over a `theta1` sweep at fixed orientation, solved with branch
/// continuity.
pub fn tip_trace(
    geometry: &LinkageGeometry,
    finger: &FingerGeometry,
    sweep: &SweepSpec,
    psi: f64,
) -> Result<Vec<TipSample>> {
    finger.check_psi(psi)?;
    Ok(solve_sweep(geometry, sweep.range, sweep.count)?
        .iter()
        .map(|s| tip_position(finger, s, psi))
        .collect())
}

/// Polyline length of the finger-plane trace.
pub fn arc_length(samples: &[TipSample]) -> f64 {
    samples
        .windows(2)
        .map(|w| (w[1].tip - w[0].tip).norm())
        .sum()
}

/// Fixed thumb contact segment in the gripper frame.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ThumbLine {
    pub start: Vector2<f64>,
    pub end: Vector2<f64>,
}

impl ThumbLine {
    pub fn new(start: Vector2<f64>, end: Vector2<f64>) -> Self {
        Self { start, end }
    }

    /// Euclidean distance from `p` to the segment.
    pub fn distance(&self, p: Vector2<f64>) -> f64 {
        let d = self.end - self.start;
        let len2 = d.norm_squared();
        let t = if len2 == 0.0 {
            0.0
        } else {
            ((p - self.start).dot(&d) / len2).clamp(0.0, 1.0)
        };
        (p - (self.start + d * t)).norm()
    }

    pub fn scaled(&self, s: f64) -> Self {
        Self::new(self.start * s, self.end * s)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Workspace {
    /// Outer loop over `theta1`, inner over `psi`.
    pub points: Vec<TipSample>,
    pub max_opening_width: f64,
    /// Index into `points` of the widest opening.
    pub widest: usize,
}

/// Cartesian-product sweep of `theta1` and `psi` over their full ranges.
pub fn workspace(
    geometry: &LinkageGeometry,
    finger: &FingerGeometry,
    thumb: &ThumbLine,
    theta1_samples: usize,
    psi_samples: usize,
) -> Result<Workspace> {
    if theta1_samples < 2 || psi_samples < 2 {
        return Err(Error::InvalidInput(format!(
            "workspace needs at least 2x2 samples, got {theta1_samples}x{psi_samples}"
        )));
    }
    let states = solve_sweep(geometry, geometry.theta1_range, theta1_samples)?;
    let psis = finger.psi_range.linspace(psi_samples);
    let mut points = Vec::with_capacity(states.len() * psis.len());
    let mut best = (f64::NEG_INFINITY, 0);
    for state in &states {
        for &psi in &psis {
            let sample = tip_position(finger, state, psi);
            let w = thumb.distance(sample.grip);
            if w > best.0 {
                best = (w, points.len());
            }
            points.push(sample);
        }
    }
    Ok(Workspace {
        points,
        max_opening_width: best.0,
        widest: best.1,
    })
}

/// Single-point convenience: solve on the positive branch and place the tip.
pub fn tip_at(
    geometry: &LinkageGeometry,
    finger: &FingerGeometry,
    theta1: f64,
    psi: f64,
) -> Result<TipSample> {
    let state = solve_chain(geometry, theta1, &BranchPolicy::PositiveRoot)?;
    Ok(tip_position(finger, &state, psi))
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::FRAC_PI_2;

    fn state(mcp: f64, pip: f64, dip: f64) -> JointState {
        JointState {
            theta1: 0.0,
            theta2: 0.0,
            theta3: 0.0,
            theta5: 0.0,
            theta6: mcp,
            theta7: 0.0,
            theta_mcp: mcp,
            theta_pip: pip,
            theta_dip: dip,
        }
    }

    fn finger() -> FingerGeometry {
        FingerGeometry::new(
            [45.0, 25.0, 20.0],
            Vector2::zeros(),
            Interval::new(-1.0, 1.0).unwrap(),
        )
        .unwrap()
    }

    #[test]
    fn straight_finger() {
        let s = tip_position(&finger(), &state(0.0, 0.0, 0.0), 0.0);
        assert!((s.tip - Vector2::new(90.0, 0.0)).norm() < 1e-12);
        assert_eq!(s.tip, s.grip);
    }

    #[test]
    fn quarter_turn_at_mcp() {
        let s = tip_position(&finger(), &state(FRAC_PI_2, 0.0, 0.0), 0.0);
        assert!((s.tip - Vector2::new(0.0, 90.0)).norm() < 1e-12);
    }

    #[test]
    fn orientation_rotates_about_base() {
        let f = FingerGeometry {
            base_offset: Vector2::new(5.0, -3.0),
            ..finger()
        };
        let s = tip_position(&f, &state(0.0, 0.0, 0.0), FRAC_PI_2);
        assert!((s.grip - Vector2::new(5.0, 87.0)).norm() < 1e-12);
    }

    #[test]
    fn thumb_distance_clamps_to_segment() {
        let t = ThumbLine::new(Vector2::new(0.0, 0.0), Vector2::new(10.0, 0.0));
        assert_eq!(t.distance(Vector2::new(5.0, 3.0)), 3.0);
        assert_eq!(t.distance(Vector2::new(13.0, 4.0)), 5.0);
        assert_eq!(t.distance(Vector2::new(-3.0, -4.0)), 5.0);
        let p = ThumbLine::new(Vector2::new(1.0, 1.0), Vector2::new(1.0, 1.0));
        assert_eq!(p.distance(Vector2::new(4.0, 5.0)), 5.0);
    }

    #[test]
    fn invalid_finger_rejected() {
        let psi = Interval::new(0.0, 1.0).unwrap();
        assert!(FingerGeometry::new([1.0, 0.0, 1.0], Vector2::zeros(), psi).is_err());
        assert!(FingerGeometry::new([1.0, -2.0, 1.0], Vector2::zeros(), psi).is_err());
    }

    #[test]
    fn workspace_rejects_tiny_counts() {
        let g = crate::config::default_geometry();
        let t = ThumbLine::new(Vector2::zeros(), Vector2::new(1.0, 0.0));
        assert!(workspace(&g, &finger(), &t, 1, 5).is_err());
        assert!(workspace(&g, &finger(), &t, 5, 1).is_err());
    }
}
