//! The two four-bar loops in series: geometry, solved states and rates.

use std::f64::consts::FRAC_PI_2;

use serde::{Deserialize, Serialize};

use super::loops::{Branch, LoopCoefficients, LoopRoots};
use super::mobility::{compute_mobility, FINGER_JOINTS, FINGER_LINKS};
use crate::error::{Error, LoopId, Result};
use crate::units::{wrap_angle, Interval};

/// Link lengths and fixed angles of one finger mechanism. Angles in radians,
/// lengths in millimetres.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LinkageGeometry {
    /// `v1..v8`. Loop 1 uses `[v1, v2, v3, v4]`, loop 2 `[v5, v6, v7, v8]`,
    /// each ordered (input, output, coupler, fixed).
    pub lengths: [f64; 8],
    /// Offset between the loop-1 output and the loop-2 input.
    pub sigma: f64,
    /// Offset defining the distal joint angle.
    pub rho: f64,
    pub theta4: f64,
    pub theta8: f64,
    pub theta1_range: Interval,
}

impl LinkageGeometry {
    pub fn new(
        lengths: [f64; 8],
        sigma: f64,
        rho: f64,
        theta4: f64,
        theta8: f64,
        theta1_range: Interval,
    ) -> Result<Self> {
        let g = Self {
            lengths,
            sigma,
            rho,
            theta4,
            theta8,
            theta1_range,
        };
        g.validate()?;
        Ok(g)
    }

    /// Geometry with both fixed vectors at pi/2.
    pub fn with_right_angles(
        lengths: [f64; 8],
        sigma: f64,
        rho: f64,
        theta1_range: Interval,
    ) -> Result<Self> {
        Self::new(lengths, sigma, rho, FRAC_PI_2, FRAC_PI_2, theta1_range)
    }

    pub fn validate(&self) -> Result<()> {
        for (i, &v) in self.lengths.iter().enumerate() {
            if !(v.is_finite() && v > 0.0) {
                return Err(Error::InvalidInput(format!(
                    "link length v{} = {v} must be finite and positive",
                    i + 1
                )));
            }
        }
        for (name, x) in [
            ("sigma", self.sigma),
            ("rho", self.rho),
            ("theta4", self.theta4),
            ("theta8", self.theta8),
        ] {
            if !x.is_finite() {
                return Err(Error::InvalidInput(format!("{name} is not finite")));
            }
        }
        Interval::new(self.theta1_range.lo, self.theta1_range.hi)?;
        let m = compute_mobility(FINGER_LINKS, FINGER_JOINTS);
        if m != 1 {
            return Err(Error::InvalidInput(format!(
                "mechanism mobility is {m}, expected 1"
            )));
        }
        Ok(())
    }

    pub fn loop_lengths(&self, loop_id: LoopId) -> [f64; 4] {
        let v = &self.lengths;
        match loop_id {
            LoopId::First => [v[0], v[1], v[2], v[3]],
            LoopId::Second => [v[4], v[5], v[6], v[7]],
        }
    }

    /// Rotation of the solved output angle relative to the right-angle case.
    fn fixed_offset(&self, loop_id: LoopId) -> f64 {
        match loop_id {
            LoopId::First => self.theta4 - FRAC_PI_2,
            LoopId::Second => self.theta8 - FRAC_PI_2,
        }
    }

    /// Every length multiplied by `s`; angles untouched.
    pub fn scaled(&self, s: f64) -> Self {
        Self {
            lengths: self.lengths.map(|v| v * s),
            ..self.clone()
        }
    }

    /// Closure residuals of both loops at a solved state.
    pub fn loop_residuals(&self, state: &JointState) -> Result<[f64; 2]> {
        let k1 = loop_coefficients(self, LoopId::First)?;
        let k2 = loop_coefficients(self, LoopId::Second)?;
        Ok([
            k1.residual(
                state.theta1,
                state.theta2 - self.fixed_offset(LoopId::First),
            ),
            k2.residual(
                state.theta5,
                state.theta6 - self.fixed_offset(LoopId::Second),
            ),
        ])
    }

    /// Both candidate outputs of a loop at `theta_in`, including the fixed
    /// angle offset, wrapped into (-pi, pi].
    pub fn loop_roots(&self, loop_id: LoopId, theta_in: f64) -> Result<LoopRoots> {
        let off = self.fixed_offset(loop_id);
        let r = loop_coefficients(self, loop_id)?.roots(theta_in)?;
        Ok(LoopRoots {
            positive: wrap_angle(r.positive + off),
            negative: wrap_angle(r.negative + off),
        })
    }

    /// Loop residual with the fixed-angle offset applied to `theta_out`.
    pub fn loop_residual(&self, loop_id: LoopId, theta_in: f64, theta_out: f64) -> Result<f64> {
        Ok(loop_coefficients(self, loop_id)?
            .residual(theta_in, theta_out - self.fixed_offset(loop_id)))
    }

    pub fn check_theta1(&self, theta1: f64) -> Result<()> {
        if self.theta1_range.contains(theta1) {
            Ok(())
        } else {
            Err(Error::OutOfRange {
                quantity: "theta1 (deg)",
                value: theta1.to_degrees(),
                lo: self.theta1_range.lo.to_degrees(),
                hi: self.theta1_range.hi.to_degrees(),
            })
        }
    }
}

/// Ratios of one loop of `geometry`.
pub fn loop_coefficients(geometry: &LinkageGeometry, loop_id: LoopId) -> Result<LoopCoefficients> {
    LoopCoefficients::from_lengths(loop_id, geometry.loop_lengths(loop_id))
}

/// A fully solved configuration. All angles in radians.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct JointState {
    pub theta1: f64,
    pub theta2: f64,
    pub theta3: f64,
    pub theta5: f64,
    pub theta6: f64,
    pub theta7: f64,
    pub theta_mcp: f64,
    pub theta_pip: f64,
    pub theta_dip: f64,
}

impl JointState {
    /// Anatomical angles `[mcp, pip, dip]`.
    pub fn anatomical(&self) -> [f64; 3] {
        [self.theta_mcp, self.theta_pip, self.theta_dip]
    }
}

/// How each loop picks between its two assembly configurations.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum BranchPolicy {
    PositiveRoot,
    NegativeRoot,
    /// Follow the roots nearest to a previously solved state.
    Continuity(JointState),
}

impl BranchPolicy {
    pub fn branch(&self, loop_id: LoopId) -> Branch {
        match self {
            BranchPolicy::PositiveRoot => Branch::Positive,
            BranchPolicy::NegativeRoot => Branch::Negative,
            BranchPolicy::Continuity(prev) => Branch::Nearest(match loop_id {
                LoopId::First => prev.theta2,
                LoopId::Second => prev.theta6,
            }),
        }
    }
}

/// Direction of the coupler vector that closes a loop, from the X/Y closure
/// components.
fn coupler_angle(lengths: [f64; 4], theta_in: f64, theta_out: f64, theta_fixed: f64) -> f64 {
    let [a, b, _, d] = lengths;
    let y = a * (theta_in + theta_out).sin() + b * theta_out.sin() + d * theta_fixed.sin();
    let x = a * (theta_in + theta_out).cos() + b * theta_out.cos() + d * theta_fixed.cos();
    y.atan2(x)
}

/// Assembles a [`JointState`] from the two solved output angles.
pub(crate) fn assemble_state(
    geometry: &LinkageGeometry,
    theta1: f64,
    theta2: f64,
    theta6: f64,
) -> JointState {
    let theta5 = theta2 + geometry.sigma;
    JointState {
        theta1,
        theta2,
        theta3: coupler_angle(
            geometry.loop_lengths(LoopId::First),
            theta1,
            theta2,
            geometry.theta4,
        ),
        theta5,
        theta6,
        theta7: coupler_angle(
            geometry.loop_lengths(LoopId::Second),
            theta5,
            theta6,
            geometry.theta8,
        ),
        theta_mcp: theta6,
        theta_pip: theta5 - geometry.sigma,
        theta_dip: theta1 - geometry.rho,
    }
}

/// Closed-form solve of both loops at input `theta1`.
pub fn solve_chain(
    geometry: &LinkageGeometry,
    theta1: f64,
    policy: &BranchPolicy,
) -> Result<JointState> {
    geometry.check_theta1(theta1)?;
    let theta2 = geometry
        .loop_roots(LoopId::First, theta1)?
        .select(policy.branch(LoopId::First));
    let theta5 = theta2 + geometry.sigma;
    let theta6 = geometry
        .loop_roots(LoopId::Second, theta5)?
        .select(policy.branch(LoopId::Second));
    Ok(assemble_state(geometry, theta1, theta2, theta6))
}

/// Solves `count` evenly spaced inputs across `range` (which must lie inside
/// the geometry's admissible range). The first sample uses the positive
/// roots; every later one follows its predecessor.
pub fn solve_sweep(
    geometry: &LinkageGeometry,
    range: Interval,
    count: usize,
) -> Result<Vec<JointState>> {
    if count < 2 {
        return Err(Error::InvalidInput(format!(
            "sweep needs at least 2 samples, got {count}"
        )));
    }
    geometry.check_theta1(range.lo)?;
    geometry.check_theta1(range.hi)?;
    let mut out: Vec<JointState> = Vec::with_capacity(count);
    for theta1 in range.linspace(count) {
        let policy = match out.last() {
            Some(prev) => BranchPolicy::Continuity(*prev),
            None => BranchPolicy::PositiveRoot,
        };
        out.push(solve_chain(geometry, theta1, &policy)?);
    }
    Ok(out)
}

/// Derivatives of the joint angles with respect to `theta1`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct JointRates {
    pub theta2: f64,
    pub theta6: f64,
    pub theta_mcp: f64,
    pub theta_pip: f64,
    pub theta_dip: f64,
}

impl JointRates {
    pub fn anatomical(&self) -> [f64; 3] {
        [self.theta_mcp, self.theta_pip, self.theta_dip]
    }
}

/// Implicit differentiation of both closure residuals at a solved state.
pub fn joint_rates(geometry: &LinkageGeometry, state: &JointState) -> Result<JointRates> {
    let out_rate = |loop_id: LoopId, theta_in: f64, theta_out: f64| -> Result<f64> {
        let k = loop_coefficients(geometry, loop_id)?;
        let (d_in, d_out) =
            k.residual_partials(theta_in, theta_out - geometry.fixed_offset(loop_id));
        if d_out.abs() < 1e-12 {
            return Err(Error::DegenerateGeometry(format!(
                "{loop_id}: closure Jacobian is singular at input {:.6} deg",
                theta_in.to_degrees()
            )));
        }
        Ok(-d_in / d_out)
    };
    let d2 = out_rate(LoopId::First, state.theta1, state.theta2)?;
    let d6 = out_rate(LoopId::Second, state.theta5, state.theta6)? * d2;
    Ok(JointRates {
        theta2: d2,
        theta6: d6,
        theta_mcp: d6,
        theta_pip: d2,
        theta_dip: 1.0,
    })
}
