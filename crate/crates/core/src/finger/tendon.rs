//! Tendon excursion and virtual-work tip force.
//!
//! The tendon is idealised as running over a pulley of constant radius at each
//! anatomical joint, so its excursion is `sum(r_j * theta_j)` measured from the
//! start of the input range. In the single-tendon variant the finger reopens
//! through back springs, lumped here into one torsional spring about `theta1`.

use serde::{Deserialize, Serialize};

use super::kinematics::FingerGeometry;
use crate::error::{Error, Result};
use crate::linkage::{
    joint_rates, solve_chain, solve_sweep, BranchPolicy, JointState, LinkageGeometry,
};

/// Smallest tip speed (mm/rad) for which a force is reported.
pub const MIN_TIP_SPEED: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum TendonKind {
    /// Closing tendon only; springs reopen the finger.
    Single,
    /// Antagonistic closing and opening tendons, no springs.
    Double,
}

impl std::str::FromStr for TendonKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "single" => Ok(TendonKind::Single),
            "double" => Ok(TendonKind::Double),
            other => Err(Error::Config(format!("unknown tendon kind `{other}`"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TendonModel {
    pub kind: TendonKind,
    /// Pulley radii at MCP, PIP, DIP (mm).
    pub moment_arms: [f64; 3],
    /// Return stiffness about theta1 (N*mm/rad).
    pub spring_stiffness: f64,
    /// Return torque at the start of the input range (N*mm).
    pub spring_preload: f64,
    /// N.
    pub max_tension: f64,
}

impl TendonModel {
    pub fn new(
        kind: TendonKind,
        moment_arms: [f64; 3],
        spring_stiffness: f64,
        spring_preload: f64,
        max_tension: f64,
    ) -> Result<Self> {
        let t = Self {
            kind,
            moment_arms,
            spring_stiffness,
            spring_preload,
            max_tension,
        };
        t.validate()?;
        Ok(t)
    }

    pub fn validate(&self) -> Result<()> {
        if self
            .moment_arms
            .iter()
            .any(|r| !(r.is_finite() && *r >= 0.0))
        {
            return Err(Error::InvalidInput(format!(
                "moment arms {:?} must be finite and non-negative",
                self.moment_arms
            )));
        }
        if !(self.max_tension.is_finite() && self.max_tension > 0.0) {
            return Err(Error::InvalidInput(format!(
                "max tension {} must be positive",
                self.max_tension
            )));
        }
        match self.kind {
            TendonKind::Single => {
                if !(self.spring_stiffness.is_finite() && self.spring_stiffness > 0.0) {
                    return Err(Error::InvalidInput(
                        "single-tendon actuation needs a positive return-spring stiffness".into(),
                    ));
                }
                if !(self.spring_preload.is_finite() && self.spring_preload >= 0.0) {
                    return Err(Error::InvalidInput(
                        "spring preload must be non-negative".into(),
                    ));
                }
            }
            TendonKind::Double => {
                if self.spring_stiffness != 0.0 || self.spring_preload != 0.0 {
                    return Err(Error::InvalidInput(
                        "double-tendon actuation carries no return spring".into(),
                    ));
                }
            }
        }
        Ok(())
    }

    /// Same routing and tension limit with the springs removed.
    pub fn as_double(&self) -> Self {
        Self {
            kind: TendonKind::Double,
            spring_stiffness: 0.0,
            spring_preload: 0.0,
            ..self.clone()
        }
    }

    /// Scales the moment arms (lengths) and the spring torques (force x length)
    /// by `s`. Tension limits are unchanged.
    pub fn scaled(&self, s: f64) -> Self {
        Self {
            moment_arms: self.moment_arms.map(|r| r * s),
            spring_stiffness: self.spring_stiffness * s,
            spring_preload: self.spring_preload * s,
            ..self.clone()
        }
    }

    /// Spring return torque at `theta1`.
    pub fn spring_torque(&self, geometry: &LinkageGeometry, theta1: f64) -> f64 {
        self.spring_preload + self.spring_stiffness * (theta1 - geometry.theta1_range.lo)
    }

    fn check_tension(&self, tension: f64) -> Result<()> {
        if (0.0..=self.max_tension).contains(&tension) {
            Ok(())
        } else {
            Err(Error::OutOfRange {
                quantity: "tendon tension (N)",
                value: tension,
                lo: 0.0,
                hi: self.max_tension,
            })
        }
    }
}

/// Tendon length drawn since the range start and its rate per unit `theta1`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Excursion {
    /// mm.
    pub length: f64,
    /// mm/rad.
    pub rate: f64,
}

/// Configuration the excursion is measured from.
pub fn reference_state(geometry: &LinkageGeometry) -> Result<JointState> {
    solve_chain(
        geometry,
        geometry.theta1_range.lo,
        &BranchPolicy::PositiveRoot,
    )
}

pub fn tendon_excursion(
    tendon: &TendonModel,
    geometry: &LinkageGeometry,
    state: &JointState,
) -> Result<Excursion> {
    let start = reference_state(geometry)?;
    excursion_from(tendon, geometry, &start, state)
}

fn excursion_from(
    tendon: &TendonModel,
    geometry: &LinkageGeometry,
    start: &JointState,
    state: &JointState,
) -> Result<Excursion> {
    let rates = joint_rates(geometry, state)?;
    let now = state.anatomical();
    let then = start.anatomical();
    let arms = tendon.moment_arms;
    Ok(Excursion {
        length: (0..3).map(|j| arms[j] * (now[j] - then[j])).sum(),
        rate: (0..3).map(|j| arms[j] * rates.anatomical()[j]).sum(),
    })
}

/// Terms of the virtual-work balance at one configuration.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TipForce {
    pub theta1: f64,
    /// Contact-normal tip force (N), clamped at zero.
    pub force: f64,
    /// `dL/d theta1` (mm/rad).
    pub transmission: f64,
    /// `|d tip/d theta1|` (mm/rad).
    pub tip_speed: f64,
    /// Spring return torque (N*mm).
    pub spring_torque: f64,
}

/// Virtual-work tip force at a solved state.
pub fn tip_force_at(
    tendon: &TendonModel,
    geometry: &LinkageGeometry,
    finger: &FingerGeometry,
    state: &JointState,
    tension: f64,
) -> Result<TipForce> {
    tendon.check_tension(tension)?;
    let rates = joint_rates(geometry, state)?;
    let tip_speed = finger.tip_velocity(state, &rates).norm();
    if tip_speed < MIN_TIP_SPEED {
        return Err(Error::DegenerateGeometry(format!(
            "tip Jacobian vanishes at theta1 = {:.6} deg",
            state.theta1.to_degrees()
        )));
    }
    let transmission: f64 = tendon
        .moment_arms
        .iter()
        .zip(rates.anatomical())
        .map(|(r, w)| r * w)
        .sum();
    let spring_torque = tendon.spring_torque(geometry, state.theta1);
    Ok(TipForce {
        theta1: state.theta1,
        force: ((tension * transmission - spring_torque) / tip_speed).max(0.0),
        transmission,
        tip_speed,
        spring_torque,
    })
}

/// Tip force (N) at `theta1` on the positive-root branch.
pub fn static_tip_force(
    tendon: &TendonModel,
    geometry: &LinkageGeometry,
    finger: &FingerGeometry,
    theta1: f64,
    tension: f64,
) -> Result<f64> {
    let state = solve_chain(geometry, theta1, &BranchPolicy::PositiveRoot)?;
    Ok(tip_force_at(tendon, geometry, finger, &state, tension)?.force)
}

/// Tip force over `count` inputs spanning the admissible range.
pub fn force_curve(
    tendon: &TendonModel,
    geometry: &LinkageGeometry,
    finger: &FingerGeometry,
    tension: f64,
    count: usize,
) -> Result<Vec<TipForce>> {
    solve_sweep(geometry, geometry.theta1_range, count)?
        .iter()
        .map(|s| tip_force_at(tendon, geometry, finger, s, tension))
        .collect()
}

/// Largest force along a curve.
pub fn peak_force(curve: &[TipForce]) -> Option<TipForce> {
    curve
        .iter()
        .copied()
        .max_by(|a, b| a.force.total_cmp(&b.force))
}

/// Tension at which the spring-free variant peaks at `target` newtons over
/// the sampled range.
pub fn tension_for_peak_force(
    tendon: &TendonModel,
    geometry: &LinkageGeometry,
    finger: &FingerGeometry,
    target: f64,
    count: usize,
) -> Result<f64> {
    let double = tendon.as_double();
    let best_ratio = solve_sweep(geometry, geometry.theta1_range, count)?
        .iter()
        .map(|s| {
            tip_force_at(&double, geometry, finger, s, 0.0).map(|f| f.transmission / f.tip_speed)
        })
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .fold(f64::NEG_INFINITY, f64::max);
    if best_ratio.is_nan() || best_ratio <= 0.0 {
        return Err(Error::DegenerateGeometry(
            "tendon never pulls the tip toward contact over the range".into(),
        ));
    }
    Ok(target / best_ratio)
}

/// Spring preload for which the single-tendon variant peaks at `target`
/// newtons at `tension`, found by bisection (peak force falls monotonically
/// with preload).
pub fn preload_for_peak_force(
    tendon: &TendonModel,
    geometry: &LinkageGeometry,
    finger: &FingerGeometry,
    tension: f64,
    target: f64,
    count: usize,
) -> Result<f64> {
    let states = solve_sweep(geometry, geometry.theta1_range, count)?;
    let peak = |preload: f64| -> Result<f64> {
        let t = TendonModel {
            spring_preload: preload,
            ..tendon.clone()
        };
        let mut best = 0.0_f64;
        for s in &states {
            best = best.max(tip_force_at(&t, geometry, finger, s, tension)?.force);
        }
        Ok(best)
    };
    let (mut lo, mut hi) = (0.0, 1.0);
    if peak(lo)? < target {
        return Err(Error::InvalidInput(format!(
            "peak force {:.4} N at zero preload is already below {target} N",
            peak(lo)?
        )));
    }
    while peak(hi)? > target {
        hi *= 2.0;
        if hi > 1e12 {
            return Err(Error::InvalidInput("preload calibration diverged".into()));
        }
    }
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if peak(mid)? > target {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok(0.5 * (lo + hi))
}
