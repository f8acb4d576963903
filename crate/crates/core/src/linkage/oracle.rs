//! Bracketing-and-bisection solver for the loop residuals.
//!
//! Never touches the half-angle quadratic: roots are bracketed by a sign scan
//! of the raw residual over a full turn and refined by bisection. Branches are
//! told apart by crossing direction (upward crossings are the positive root).

use std::f64::consts::PI;

use super::chain::{assemble_state, JointState, LinkageGeometry};
use super::loops::Branch;
use crate::error::{Error, LoopId, Result};
use crate::units::{angle_diff, wrap_angle};

const SCAN_STEPS: usize = 2048;
const MAX_BISECTIONS: usize = 200;
/// Start of the scan window as a fraction of one step past -pi. Keeps grid
/// points off round multiples of pi, where closed-form roots like to sit.
const SCAN_PHASE: f64 = 0.371;

#[derive(Debug, Clone, Copy, PartialEq)]
struct Crossing {
    angle: f64,
    upward: bool,
}

fn bisect(f: &impl Fn(f64) -> f64, mut lo: f64, mut hi: f64) -> f64 {
    let mut f_lo = f(lo);
    for _ in 0..MAX_BISECTIONS {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        let f_mid = f(mid);
        if f_mid == 0.0 {
            return mid;
        }
        if (f_mid < 0.0) == (f_lo < 0.0) {
            lo = mid;
            f_lo = f_mid;
        } else {
            hi = mid;
        }
    }
    0.5 * (lo + hi)
}

fn crossings(f: impl Fn(f64) -> f64) -> Vec<Crossing> {
    let step = 2.0 * PI / SCAN_STEPS as f64;
    let mut found: Vec<Crossing> = Vec::new();
    let start = -PI + SCAN_PHASE * step;
    let mut a = start;
    let mut fa = f(a);
    for i in 1..=SCAN_STEPS {
        let b = if i == SCAN_STEPS {
            start + 2.0 * PI
        } else {
            start + step * i as f64
        };
        let fb = f(b);
        if (fa < 0.0) != (fb < 0.0) {
            let angle = wrap_angle(bisect(&f, a, b));
            let c = Crossing {
                angle,
                upward: fa < 0.0,
            };
            if !found
                .iter()
                .any(|x| angle_diff(x.angle, c.angle).abs() < 1e-9)
            {
                found.push(c);
            }
        }
        a = b;
        fa = fb;
    }
    found
}

/// Output angle of one loop of `geometry` at `theta_in`, by bisection.
pub fn solve_loop_numeric(
    geometry: &LinkageGeometry,
    loop_id: LoopId,
    theta_in: f64,
    branch: Branch,
) -> Result<f64> {
    // Residual evaluation only; the fixed-angle offset is folded into the
    // call so the scan covers the physical output angle directly.
    let residual = |out: f64| {
        geometry
            .loop_residual(loop_id, theta_in, out)
            .unwrap_or(f64::NAN)
    };
    geometry.loop_residual(loop_id, theta_in, 0.0)?;
    let found = crossings(residual);
    let pick = match branch {
        Branch::Positive => found.iter().find(|c| c.upward),
        Branch::Negative => found.iter().find(|c| !c.upward),
        Branch::Nearest(prev) => found.iter().min_by(|x, y| {
            angle_diff(x.angle, prev)
                .abs()
                .total_cmp(&angle_diff(y.angle, prev).abs())
        }),
    };
    pick.map(|c| c.angle).ok_or(Error::NoClosure {
        loop_id,
        theta_in_deg: theta_in.to_degrees(),
    })
}

/// Independent solve of both loops on the positive (upward-crossing) branch.
pub fn solve_chain_numeric(geometry: &LinkageGeometry, theta1: f64) -> Result<JointState> {
    solve_chain_numeric_with(geometry, theta1, Branch::Positive, Branch::Positive)
}

/// Independent solve with explicit per-loop branch choice.
pub fn solve_chain_numeric_with(
    geometry: &LinkageGeometry,
    theta1: f64,
    first: Branch,
    second: Branch,
) -> Result<JointState> {
    geometry.check_theta1(theta1)?;
    let theta2 = solve_loop_numeric(geometry, LoopId::First, theta1, first)?;
    let theta6 = solve_loop_numeric(geometry, LoopId::Second, theta2 + geometry.sigma, second)?;
    Ok(assemble_state(geometry, theta1, theta2, theta6))
}
