use finger_core::assist::ReferenceRegistry;
use finger_core::config::FingerConfig;
use finger_core::finger::{
    force_curve, grasp_assess, tip_trace, ForceContext, GraspObject, SweepSpec,
};
use finger_core::linkage::{solve_sweep, LinkageGeometry};
use finger_core::output::{force_plot, joint_angle_plot, tip_trace_plot};

/// Samples per plotted curve.
pub const SAMPLES: usize = 151;

pub fn default_config() -> FingerConfig {
    FingerConfig::default_config()
}

pub fn max_tension() -> f64 {
    default_config()
        .tendon()
        .map(|t| t.max_tension)
        .unwrap_or(0.0)
}

fn geometry(lengths: &[f64], sigma_deg: f64, rho_deg: f64) -> Result<LinkageGeometry, String> {
    let v: [f64; 8] = lengths
        .try_into()
        .map_err(|_| format!("need 8 link lengths, got {}", lengths.len()))?;
    let base = default_config().geometry;
    LinkageGeometry::new(
        v,
        sigma_deg.to_radians(),
        rho_deg.to_radians(),
        base.theta4,
        base.theta8,
        base.theta1_range,
    )
    .map_err(|e| e.to_string())
}

pub fn joint_angle_svg(lengths: &[f64], sigma_deg: f64, rho_deg: f64) -> Result<String, String> {
    let g = geometry(lengths, sigma_deg, rho_deg)?;
    let states = solve_sweep(&g, g.theta1_range, SAMPLES).map_err(|e| e.to_string())?;
    joint_angle_plot(&states).map_err(|e| e.to_string())
}

pub fn tip_trace_svg(
    lengths: &[f64],
    sigma_deg: f64,
    rho_deg: f64,
    psi_deg: f64,
) -> Result<String, String> {
    let g = geometry(lengths, sigma_deg, rho_deg)?;
    let finger = default_config().finger().map_err(|e| e.to_string())?;
    let trace = tip_trace(
        &g,
        &finger,
        &SweepSpec::new(g.theta1_range, SAMPLES),
        psi_deg.to_radians(),
    )
    .map_err(|e| e.to_string())?;
    tip_trace_plot(&trace).map_err(|e| e.to_string())
}

pub fn force_svg(tension_n: f64) -> Result<String, String> {
    let c = default_config();
    let finger = c.finger().map_err(|e| e.to_string())?;
    let single = c.tendon().map_err(|e| e.to_string())?;
    let double = single.as_double();
    let curve =
        |t| force_curve(t, &c.geometry, &finger, tension_n, SAMPLES).map_err(|e| e.to_string());
    let (a, b) = (curve(&single)?, curve(&double)?);
    force_plot(&[("single tendon", &a), ("double tendon", &b)]).map_err(|e| e.to_string())
}

pub fn grasp_summary(diameter_mm: f64, tension_n: f64) -> Result<String, String> {
    let c = default_config();
    let finger = c.finger().map_err(|e| e.to_string())?;
    let tendon = c.tendon().map_err(|e| e.to_string())?;
    let ctx = ForceContext {
        tendon: &tendon,
        geometry: &c.geometry,
        finger: &finger,
        theta1: c.geometry.theta1_range.hi,
        tension: tension_n,
    };
    let r = grasp_assess(
        GraspObject::Cylinder {
            diameter: diameter_mm,
        },
        &ReferenceRegistry::shipped(),
        &ctx,
    )
    .map_err(|e| e.to_string())?;
    Ok(format!(
        "{}: {} (force {:.2} N, margin {:.1} mm)",
        if r.feasible { "feasible" } else { "infeasible" },
        r.notes,
        r.predicted_force,
        r.margin
    ))
}
