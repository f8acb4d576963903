//! Random geometry generators shared by the integration suites.
#![allow(dead_code)]

use finger_core::finger::{FingerGeometry, TendonKind, TendonModel};
use finger_core::linkage::{solve_chain, solve_sweep, BranchPolicy, LinkageGeometry};
use finger_core::units::Interval;
use nalgebra::Vector2;
use rand::rngs::StdRng;
use rand::Rng;

/// Width of the input range drawn around a random operating point.
pub const RANGE_WIDTH: f64 = 0.4;

/// Geometry with link lengths in [5, 100] mm, random offsets and fixed-link
/// directions, and an input range of width `RANGE_WIDTH`.
pub fn random_geometry(rng: &mut StdRng) -> LinkageGeometry {
    let lengths = std::array::from_fn(|_| rng.gen_range(5.0..=100.0));
    let lo = rng.gen_range(-std::f64::consts::PI..std::f64::consts::PI - RANGE_WIDTH);
    LinkageGeometry::new(
        lengths,
        rng.gen_range(-0.5..0.5),
        rng.gen_range(-0.5..0.5),
        rng.gen_range(1.0..2.2),
        rng.gen_range(1.0..2.2),
        Interval::new(lo, lo + RANGE_WIDTH).unwrap(),
    )
    .unwrap()
}

/// Random geometry plus an input in its range where both loops close.
pub fn random_closing(rng: &mut StdRng) -> (LinkageGeometry, f64) {
    loop {
        let g = random_geometry(rng);
        let t = rng.gen_range(g.theta1_range.lo..=g.theta1_range.hi);
        if solve_chain(&g, t, &BranchPolicy::PositiveRoot).is_ok() {
            return (g, t);
        }
    }
}

/// Random geometry that closes over its whole input range, with a sweep that
/// stays clear of the singular ends of each loop.
pub fn random_sweepable(rng: &mut StdRng) -> LinkageGeometry {
    loop {
        let g = random_geometry(rng);
        let Ok(states) = solve_sweep(&g, g.theta1_range, 41) else {
            continue;
        };
        let well_conditioned = states.iter().all(|s| {
            finger_core::linkage::joint_rates(&g, s)
                .map(|r| r.theta2.abs() < 20.0 && r.theta6.abs() < 20.0)
                .unwrap_or(false)
        });
        if well_conditioned {
            return g;
        }
    }
}

pub fn random_finger(rng: &mut StdRng) -> FingerGeometry {
    FingerGeometry::new(
        std::array::from_fn(|_| rng.gen_range(10.0..60.0)),
        Vector2::new(rng.gen_range(-20.0..20.0), rng.gen_range(-20.0..20.0)),
        Interval::new(rng.gen_range(-1.0..0.0), rng.gen_range(0.0..1.5)).unwrap(),
    )
    .unwrap()
}

pub fn random_tendon(rng: &mut StdRng) -> TendonModel {
    TendonModel::new(
        TendonKind::Single,
        std::array::from_fn(|_| rng.gen_range(1.0..10.0)),
        rng.gen_range(1.0..80.0),
        rng.gen_range(0.0..60.0),
        30.0,
    )
    .unwrap()
}
