use std::fmt::Write;

use crate::finger::{TipForce, TipSample};
use crate::linkage::JointState;

/// Significant digits of every number written to CSV.
pub const SIGNIFICANT_DIGITS: usize = 9;

/// Formats `x` in plain decimal notation rounded to nine significant digits.
pub fn format_sig(x: f64) -> String {
    if !x.is_finite() {
        return format!("{x}");
    }
    if x == 0.0 {
        return "0".to_owned();
    }
    // Scientific formatting does the rounding; the exponent then fixes the
    // number of decimals for the plain rendering.
    let sci = format!("{:.*e}", SIGNIFICANT_DIGITS - 1, x);
    let (_, exp) = sci.split_once('e').expect("scientific notation");
    let exp: i32 = exp.parse().expect("integer exponent");
    let rounded: f64 = sci.parse().expect("round trip");
    let decimals = (SIGNIFICANT_DIGITS as i32 - 1 - exp).max(0) as usize;
    let s = format!("{rounded:.decimals$}");
    if s.starts_with('-') && s[1..].chars().all(|c| c == '0' || c == '.') {
        s[1..].to_owned()
    } else {
        s
    }
}

fn header(out: &mut String, config_hash: &str, columns: &[&str]) {
    writeln!(out, "# config_sha256={config_hash}").unwrap();
    writeln!(out, "{}", columns.join(",")).unwrap();
}

fn row(out: &mut String, values: &[f64]) {
    let cells: Vec<String> = values.iter().map(|v| format_sig(*v)).collect();
    writeln!(out, "{}", cells.join(",")).unwrap();
}

pub fn joint_angle_csv(states: &[JointState], config_hash: &str) -> String {
    let mut out = String::new();
    header(
        &mut out,
        config_hash,
        &[
            "theta1_deg",
            "theta2_deg",
            "theta3_deg",
            "theta5_deg",
            "theta6_deg",
            "theta7_deg",
            "mcp_deg",
            "pip_deg",
            "dip_deg",
        ],
    );
    for s in states {
        row(
            &mut out,
            &[
                s.theta1,
                s.theta2,
                s.theta3,
                s.theta5,
                s.theta6,
                s.theta7,
                s.theta_mcp,
                s.theta_pip,
                s.theta_dip,
            ]
            .map(f64::to_degrees),
        );
    }
    out
}

pub fn tip_csv(samples: &[TipSample], config_hash: &str) -> String {
    let mut out = String::new();
    header(
        &mut out,
        config_hash,
        &[
            "theta1_deg",
            "psi_deg",
            "tip_x_mm",
            "tip_y_mm",
            "grip_x_mm",
            "grip_y_mm",
        ],
    );
    for s in samples {
        row(
            &mut out,
            &[
                s.theta1.to_degrees(),
                s.psi.to_degrees(),
                s.tip.x,
                s.tip.y,
                s.grip.x,
                s.grip.y,
            ],
        );
    }
    out
}

pub fn force_csv(curve: &[TipForce], config_hash: &str) -> String {
    let mut out = String::new();
    header(
        &mut out,
        config_hash,
        &[
            "theta1_deg",
            "force_n",
            "transmission_mm_per_rad",
            "tip_speed_mm_per_rad",
            "spring_torque_nmm",
        ],
    );
    for f in curve {
        row(
            &mut out,
            &[
                f.theta1.to_degrees(),
                f.force,
                f.transmission,
                f.tip_speed,
                f.spring_torque,
            ],
        );
    }
    out
}
