//! Named output files for the sweep, workspace and force analyses.

use std::io;
use std::path::{Path, PathBuf};

use serde_json::json;

use super::csv::{force_csv, joint_angle_csv, tip_csv};
use super::svg::{render_svg, Axes, Series};
use crate::config::FingerConfig;
use crate::error::{Error, Result};
use crate::finger::{
    force_curve, tip_trace, workspace, SweepSpec, TendonKind, TendonModel, ThumbLine, TipForce,
    TipSample, Workspace,
};
use crate::linkage::{solve_sweep, JointState};

/// Most orientation rows drawn in a workspace plot.
const MAX_PLOTTED_ORIENTATIONS: usize = 6;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Csv,
    Json,
    Svg,
}

impl std::str::FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "csv" => Ok(Format::Csv),
            "json" => Ok(Format::Json),
            "svg" => Ok(Format::Svg),
            other => Err(Error::Config(format!("unknown output format `{other}`"))),
        }
    }
}

/// File name plus contents.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Artifact {
    pub name: String,
    pub contents: String,
}

impl Artifact {
    fn new(name: impl Into<String>, contents: String) -> Self {
        Self {
            name: name.into(),
            contents,
        }
    }
}

/// Writes every artifact into `dir` (created if missing), in order.
pub fn write_artifacts(dir: &Path, artifacts: &[Artifact]) -> io::Result<Vec<PathBuf>> {
    std::fs::create_dir_all(dir)?;
    artifacts
        .iter()
        .map(|a| {
            let path = dir.join(&a.name);
            std::fs::write(&path, &a.contents)?;
            Ok(path)
        })
        .collect()
}

fn json_text(value: serde_json::Value) -> String {
    let mut s = serde_json::to_string_pretty(&value).expect("json values serialize");
    s.push('\n');
    s
}

fn deg(x: f64) -> f64 {
    x.to_degrees()
}

fn tip_rows(samples: &[TipSample]) -> serde_json::Value {
    samples
        .iter()
        .map(|s| {
            json!({
                "theta1_deg": deg(s.theta1),
                "psi_deg": deg(s.psi),
                "tip_mm": [s.tip.x, s.tip.y],
                "grip_mm": [s.grip.x, s.grip.y],
            })
        })
        .collect()
}

fn joint_rows(states: &[JointState]) -> serde_json::Value {
    states
        .iter()
        .map(|s| {
            json!({
                "theta1_deg": deg(s.theta1),
                "theta2_deg": deg(s.theta2),
                "theta3_deg": deg(s.theta3),
                "theta5_deg": deg(s.theta5),
                "theta6_deg": deg(s.theta6),
                "theta7_deg": deg(s.theta7),
                "mcp_deg": deg(s.theta_mcp),
                "pip_deg": deg(s.theta_pip),
                "dip_deg": deg(s.theta_dip),
            })
        })
        .collect()
}

/// Linkage and anatomical angles against the input crank, in degrees.
pub fn joint_angle_plot(states: &[JointState]) -> Result<String> {
    let col = |f: fn(&JointState) -> f64| -> Vec<[f64; 2]> {
        states.iter().map(|s| [deg(s.theta1), deg(f(s))]).collect()
    };
    render_svg(
        &[
            Series::new("theta2 (PIP)", col(|s| s.theta2)),
            Series::new("theta6 (MCP)", col(|s| s.theta6)),
            Series::new("DIP", col(|s| s.theta_dip)),
            Series::new("theta3", col(|s| s.theta3)),
            Series::new("theta7", col(|s| s.theta7)),
        ],
        &Axes::new("Joint angles", "theta1 (deg)", "angle (deg)"),
    )
}

/// Fingertip path in the finger plane.
pub fn tip_trace_plot(samples: &[TipSample]) -> Result<String> {
    render_svg(
        &[Series::new(
            "fingertip",
            samples.iter().map(|s| [s.tip.x, s.tip.y]).collect(),
        )],
        &Axes::new("Fingertip trace", "x (mm)", "y (mm)").equal(),
    )
}

/// One tip-force curve per labelled tendon model.
pub fn force_plot(curves: &[(&str, &[TipForce])]) -> Result<String> {
    let series: Vec<Series> = curves
        .iter()
        .map(|(name, c)| Series::new(*name, c.iter().map(|f| [deg(f.theta1), f.force]).collect()))
        .collect();
    render_svg(
        &series,
        &Axes::new("Tip force", "theta1 (deg)", "force (N)"),
    )
}

/// Tip paths at a few orientations plus the thumb segment, gripper frame.
pub fn workspace_plot(ws: &Workspace, psi_samples: usize, thumb: &ThumbLine) -> Result<String> {
    if psi_samples == 0 || !ws.points.len().is_multiple_of(psi_samples) {
        return Err(Error::InvalidInput(
            "workspace grid does not match the orientation count".into(),
        ));
    }
    let rows = psi_samples.min(MAX_PLOTTED_ORIENTATIONS);
    let mut series: Vec<Series> = (0..rows)
        .map(|r| {
            let j = if rows == 1 {
                0
            } else {
                r * (psi_samples - 1) / (rows - 1)
            };
            let pts: Vec<[f64; 2]> = ws
                .points
                .iter()
                .skip(j)
                .step_by(psi_samples)
                .map(|s| [s.grip.x, s.grip.y])
                .collect();
            let psi = deg(ws.points[j].psi);
            Series::new(format!("psi {psi:.1} deg"), pts)
        })
        .collect();
    series.push(Series::new(
        "thumb",
        vec![[thumb.start.x, thumb.start.y], [thumb.end.x, thumb.end.y]],
    ));
    render_svg(&series, &Axes::new("Workspace", "x (mm)", "y (mm)").equal())
}

/// Joint angles and tip trace over the configured input range.
pub fn sweep_artifacts(
    cfg: &FingerConfig,
    samples: usize,
    psi: f64,
    format: Format,
) -> Result<Vec<Artifact>> {
    let g = &cfg.geometry;
    let finger = cfg.finger()?;
    let states = solve_sweep(g, g.theta1_range, samples)?;
    let trace = tip_trace(g, &finger, &SweepSpec::new(g.theta1_range, samples), psi)?;
    Ok(match format {
        Format::Csv => vec![
            Artifact::new("joint_angles.csv", joint_angle_csv(&states, &cfg.hash)),
            Artifact::new("tip_trace.csv", tip_csv(&trace, &cfg.hash)),
        ],
        Format::Json => vec![Artifact::new(
            "sweep.json",
            json_text(json!({
                "config_sha256": cfg.hash,
                "joint_angles": joint_rows(&states),
                "tip_trace": tip_rows(&trace),
            })),
        )],
        Format::Svg => vec![
            Artifact::new("joint_angles.svg", joint_angle_plot(&states)?),
            Artifact::new("tip_trace.svg", tip_trace_plot(&trace)?),
        ],
    })
}

/// Reachable tip cloud and the widest thumb opening.
pub fn workspace_artifacts(
    cfg: &FingerConfig,
    theta1_samples: usize,
    psi_samples: usize,
    format: Format,
) -> Result<(Workspace, Vec<Artifact>)> {
    let finger = cfg.finger()?;
    let thumb = cfg.thumb()?;
    let ws = workspace(&cfg.geometry, &finger, &thumb, theta1_samples, psi_samples)?;
    let files = match format {
        Format::Csv => vec![Artifact::new(
            "workspace.csv",
            tip_csv(&ws.points, &cfg.hash),
        )],
        Format::Json => vec![Artifact::new(
            "workspace.json",
            json_text(json!({
                "config_sha256": cfg.hash,
                "max_opening_width_mm": ws.max_opening_width,
                "widest": tip_rows(&ws.points[ws.widest..=ws.widest])[0],
                "points": tip_rows(&ws.points),
            })),
        )],
        Format::Svg => vec![Artifact::new(
            "workspace.svg",
            workspace_plot(&ws, psi_samples, &thumb)?,
        )],
    };
    Ok((ws, files))
}

/// The configured tendon, or its spring-free variant for `Double`.
pub fn tendon_of_kind(cfg: &FingerConfig, kind: Option<TendonKind>) -> Result<TendonModel> {
    let t = cfg.tendon()?;
    match (kind, t.kind) {
        (None, _) => Ok(t),
        (Some(TendonKind::Double), _) => Ok(t.as_double()),
        (Some(TendonKind::Single), TendonKind::Single) => Ok(t),
        (Some(TendonKind::Single), TendonKind::Double) => Err(Error::Config(
            "single-tendon model needs a return spring, config has none".into(),
        )),
    }
}

/// Tip force against `theta1` at a fixed tension.
pub fn force_artifacts(
    cfg: &FingerConfig,
    tendon: &TendonModel,
    tension: f64,
    samples: usize,
    format: Format,
) -> Result<Vec<Artifact>> {
    let curve = force_curve(tendon, &cfg.geometry, &cfg.finger()?, tension, samples)?;
    let label = match tendon.kind {
        TendonKind::Single => "single",
        TendonKind::Double => "double",
    };
    Ok(match format {
        Format::Csv => vec![Artifact::new(
            format!("force_{label}.csv"),
            force_csv(&curve, &cfg.hash),
        )],
        Format::Json => {
            let rows: Vec<_> = curve
                .iter()
                .map(|f| {
                    json!({
                        "theta1_deg": deg(f.theta1),
                        "force_n": f.force,
                        "transmission_mm_per_rad": f.transmission,
                        "tip_speed_mm_per_rad": f.tip_speed,
                        "spring_torque_nmm": f.spring_torque,
                    })
                })
                .collect();
            vec![Artifact::new(
                format!("force_{label}.json"),
                json_text(json!({
                    "config_sha256": cfg.hash,
                    "tendon": label,
                    "tension_n": tension,
                    "curve": rows,
                })),
            )]
        }
        Format::Svg => vec![Artifact::new(
            format!("force_{label}.svg"),
            force_plot(&[(label, &curve)])?,
        )],
    })
}
