use std::path::{Path, PathBuf};
use std::time::Instant;

use finger_core::assist::{
    clearance_check, evaluate_rules, iso_contact_check, registry::keys, registry_verify,
    stroke_check, ContactRegion, ReferenceRegistry,
};
use finger_core::config::{FingerConfig, DEFAULT_CONFIG_JSON};
use finger_core::finger::{
    force_curve, grasp_assess, peak_force, ForceContext, GraspObject, TendonKind,
};
use finger_core::linkage::{
    compute_mobility, count_loops, loop_coefficients, solve_chain, solve_chain_numeric,
    BranchPolicy, FINGER_JOINTS, FINGER_LINKS,
};
use finger_core::output::{
    force_artifacts, sweep_artifacts, tendon_of_kind, workspace_artifacts, write_artifacts,
    Artifact, Format,
};
use finger_core::{Error, LoopId};
use serde_json::json;

use crate::{Command, Common, FormatArg, TendonArg};

/// Oracle agreement required by `validate` (rad).
const VALIDATE_TOLERANCE: f64 = 1e-9;

#[derive(Debug)]
pub struct Failure {
    pub code: u8,
    pub message: String,
}

impl Failure {
    fn domain(message: impl Into<String>) -> Self {
        Self {
            code: 1,
            message: message.into(),
        }
    }

    fn config(message: impl Into<String>) -> Self {
        Self {
            code: 2,
            message: message.into(),
        }
    }

    fn io(path: &Path, e: std::io::Error) -> Self {
        Self::config(format!("{}: {e}", path.display()))
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        if e.is_domain() {
            Self::domain(e.to_string())
        } else {
            Self::config(e.to_string())
        }
    }
}

type Outcome = Result<(), Failure>;

fn load_config(path: Option<&PathBuf>) -> Result<FingerConfig, Failure> {
    let text = match path {
        Some(p) => std::fs::read_to_string(p).map_err(|e| Failure::io(p, e))?,
        None => DEFAULT_CONFIG_JSON.to_owned(),
    };
    // Every configuration problem is a config error, including geometry
    // values the linkage rejects.
    FingerConfig::from_json(&text).map_err(|e| Failure::config(e.to_string()))
}

fn load_registry(path: Option<&PathBuf>) -> Result<ReferenceRegistry, Failure> {
    match path {
        Some(p) => {
            let text = std::fs::read_to_string(p).map_err(|e| Failure::io(p, e))?;
            Ok(ReferenceRegistry::parse(&text)?)
        }
        None => Ok(ReferenceRegistry::shipped()),
    }
}

fn format_of(f: FormatArg) -> Format {
    match f {
        FormatArg::Csv => Format::Csv,
        FormatArg::Json => Format::Json,
        FormatArg::Svg => Format::Svg,
    }
}

fn tendon_kind(t: Option<TendonArg>) -> Option<TendonKind> {
    t.map(|t| match t {
        TendonArg::Single => TendonKind::Single,
        TendonArg::Double => TendonKind::Double,
    })
}

fn need_samples(samples: usize, what: &str) -> Outcome {
    if samples < 2 {
        return Err(Failure::config(format!(
            "{what}: --samples must be at least 2, got {samples}"
        )));
    }
    Ok(())
}

fn emit(dir: &Path, files: &[Artifact]) -> Outcome {
    for path in write_artifacts(dir, files).map_err(|e| Failure::io(dir, e))? {
        println!("wrote {}", path.display());
    }
    Ok(())
}

fn print_json(value: serde_json::Value) {
    println!(
        "{}",
        serde_json::to_string_pretty(&value).expect("json values serialize")
    );
}

pub fn run(common: &Common, command: &Command) -> Outcome {
    let json_out = common.format == FormatArg::Json;
    match command {
        Command::Analyze => {
            let cfg = load_config(common.config.as_ref())?;
            let m = compute_mobility(FINGER_LINKS, FINGER_JOINTS);
            let p = count_loops(FINGER_JOINTS, FINGER_LINKS);
            let loops = [LoopId::First, LoopId::Second]
                .into_iter()
                .map(|id| loop_coefficients(&cfg.geometry, id))
                .collect::<Result<Vec<_>, _>>()?;
            if json_out {
                print_json(json!({
                    "mobility": m,
                    "loops": p,
                    "kappa": loops.iter().map(|k| json!({
                        "loop": k.loop_id.index(),
                        "kappa1": k.fixed_over_output,
                        "kappa2": k.fixed_over_input,
                        "kappa3": k.constant,
                    })).collect::<Vec<_>>(),
                    "config_sha256": cfg.hash,
                }));
            } else {
                println!("M={m}, loops={p}");
                for k in &loops {
                    println!(
                        "{}: kappa1={:.9} kappa2={:.9} kappa3={:.9}",
                        k.loop_id, k.fixed_over_output, k.fixed_over_input, k.constant
                    );
                }
                println!("config_sha256={}", cfg.hash);
            }
            Ok(())
        }
        Command::Sweep { samples, psi_deg } => {
            need_samples(*samples, "sweep")?;
            let cfg = load_config(common.config.as_ref())?;
            let files = sweep_artifacts(
                &cfg,
                *samples,
                psi_deg.to_radians(),
                format_of(common.format),
            )?;
            emit(&common.out, &files)
        }
        Command::Workspace {
            samples,
            psi_samples,
        } => {
            need_samples(*samples, "workspace")?;
            need_samples(*psi_samples, "workspace orientations")?;
            let cfg = load_config(common.config.as_ref())?;
            let (ws, files) =
                workspace_artifacts(&cfg, *samples, *psi_samples, format_of(common.format))?;
            emit(&common.out, &files)?;
            let w = &ws.points[ws.widest];
            println!(
                "max opening width {:.3} mm at theta1 {:.3} deg, psi {:.3} deg",
                ws.max_opening_width,
                w.theta1.to_degrees(),
                w.psi.to_degrees()
            );
            Ok(())
        }
        Command::Force {
            samples,
            tendon,
            tension_n,
        } => {
            need_samples(*samples, "force")?;
            let cfg = load_config(common.config.as_ref())?;
            let model = tendon_of_kind(&cfg, tendon_kind(*tendon))?;
            let tension = match tension_n {
                Some(t) => *t,
                None => cfg.nominal_tension()?,
            };
            let files = force_artifacts(&cfg, &model, tension, *samples, format_of(common.format))?;
            emit(&common.out, &files)?;
            let curve = force_curve(&model, &cfg.geometry, &cfg.finger()?, tension, *samples)?;
            if let Some(p) = peak_force(&curve) {
                println!(
                    "peak force {:.4} N at theta1 {:.3} deg",
                    p.force,
                    p.theta1.to_degrees()
                );
            }
            Ok(())
        }
        Command::Grasp {
            diameter_mm,
            thickness_mm,
            tendon,
            tension_n,
            theta1_deg,
        } => {
            let cfg = load_config(common.config.as_ref())?;
            let registry = load_registry(common.registry.as_ref())?;
            let model = tendon_of_kind(&cfg, tendon_kind(*tendon))?;
            let finger = cfg.finger()?;
            let tension = match tension_n {
                Some(t) => *t,
                None => cfg.nominal_tension()?,
            };
            let object = match (diameter_mm, thickness_mm) {
                (Some(d), _) => GraspObject::Cylinder { diameter: *d },
                (None, Some(t)) => GraspObject::Flat { thickness: *t },
                (None, None) => {
                    return Err(Failure::config(
                        "grasp needs --diameter-mm or --thickness-mm",
                    ))
                }
            };
            let ctx = ForceContext {
                tendon: &model,
                geometry: &cfg.geometry,
                finger: &finger,
                theta1: theta1_deg.map_or(cfg.geometry.theta1_range.hi, f64::to_radians),
                tension,
            };
            let report = grasp_assess(object, &registry, &ctx)?;
            if json_out {
                print_json(serde_json::to_value(&report).expect("report serializes"));
            } else {
                println!(
                    "{:?} feasible={} force={:.4} N margin={:.4}",
                    report.grasp_type, report.feasible, report.predicted_force, report.margin
                );
                println!("{}", report.notes);
            }
            Ok(())
        }
        Command::Safety {
            force_n,
            space_mm,
            body_mm,
            device_mm,
            required_mm,
            available_mm,
        } => {
            let registry = load_registry(common.registry.as_ref())?;
            let or_reg = |x: &Option<f64>, key: &str| -> Result<f64, Failure> {
                match x {
                    Some(v) => Ok(*v),
                    None => Ok(registry.value(key)?),
                }
            };
            let iso = iso_contact_check(
                or_reg(force_n, keys::FINGERTIP_FORCE)?,
                ContactRegion::ThighKnee,
                &registry,
            )?;
            let clearance = clearance_check(
                or_reg(space_mm, keys::TOILET_WIDTH)?,
                or_reg(body_mm, keys::SHOULDER_WIDTH)?,
                or_reg(device_mm, keys::SECONDARY_DIAMETER)?,
            )?;
            let stroke = stroke_check(
                or_reg(required_mm, keys::TROUSER_RAISE)?,
                or_reg(available_mm, keys::SECONDARY_STROKE)?,
            )?;
            if json_out {
                print_json(json!({ "iso": iso, "clearance": clearance, "stroke": stroke }));
            } else {
                println!(
                    "iso thigh/knee: pass={} force={} N limit={} N margin={:.2}",
                    iso.pass, iso.measured, iso.applied_limit, iso.margin_ratio
                );
                println!(
                    "clearance: per_side={} mm fits={}",
                    clearance.per_side_clearance, clearance.fits
                );
                println!("stroke: pass={} slack={} mm", stroke.pass, stroke.slack);
            }
            if iso.pass && clearance.fits && stroke.pass {
                Ok(())
            } else {
                Err(Failure::domain("one or more safety checks failed"))
            }
        }
        Command::Validate { samples } => {
            need_samples(*samples, "validate")?;
            let cfg = load_config(common.config.as_ref())?;
            let g = &cfg.geometry;
            let start = Instant::now();
            let mut worst: f64 = 0.0;
            for t in g.theta1_range.linspace(*samples) {
                let a = solve_chain(g, t, &BranchPolicy::PositiveRoot)?;
                let b = solve_chain_numeric(g, t)?;
                worst = worst
                    .max((a.theta2 - b.theta2).abs())
                    .max((a.theta6 - b.theta6).abs());
            }
            let ms = start.elapsed().as_secs_f64() * 1e3;
            println!("max deviation {worst:.3e} rad over {samples} samples ({ms:.0} ms)");
            if worst <= VALIDATE_TOLERANCE {
                Ok(())
            } else {
                Err(Failure::domain(format!(
                    "closed form and oracle disagree by {worst:.3e} rad (tolerance {VALIDATE_TOLERANCE:e})"
                )))
            }
        }
        Command::Registry { emit } => {
            let registry = load_registry(common.registry.as_ref())?;
            let report = evaluate_rules(&registry);
            if json_out {
                print_json(serde_json::to_value(&report).expect("report serializes"));
            } else {
                for o in &report.outcomes {
                    println!(
                        "{} {}: {}",
                        if o.passed { "PASS" } else { "FAIL" },
                        o.id,
                        o.detail
                    );
                }
            }
            if let Some(path) = emit {
                std::fs::write(path, ReferenceRegistry::published().to_json())
                    .map_err(|e| Failure::io(path, e))?;
                println!("wrote {}", path.display());
            }
            registry_verify(&registry)?;
            Ok(())
        }
    }
}
