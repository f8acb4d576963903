//! Browser demo bindings. Each export is a thin wrapper over a plain function
//! in [`demo`], which is what the native tests exercise.

use wasm_bindgen::prelude::*;

pub mod demo;

fn js(r: Result<String, String>) -> Result<String, JsError> {
    r.map_err(|e| JsError::new(&e))
}

/// Joint-angle plot for edited link lengths `v1..v8` (mm) and offsets (deg).
#[wasm_bindgen]
pub fn joint_angle_svg(lengths: Vec<f64>, sigma_deg: f64, rho_deg: f64) -> Result<String, JsError> {
    js(demo::joint_angle_svg(&lengths, sigma_deg, rho_deg))
}

/// Fingertip trace for edited link lengths at gripper orientation `psi_deg`.
#[wasm_bindgen]
pub fn tip_trace_svg(
    lengths: Vec<f64>,
    sigma_deg: f64,
    rho_deg: f64,
    psi_deg: f64,
) -> Result<String, JsError> {
    js(demo::tip_trace_svg(&lengths, sigma_deg, rho_deg, psi_deg))
}

/// Single- and double-tendon force curves at `tension_n`.
#[wasm_bindgen]
pub fn force_svg(tension_n: f64) -> Result<String, JsError> {
    js(demo::force_svg(tension_n))
}

/// One-line grasp verdict for a cylinder of `diameter_mm` at `tension_n`.
#[wasm_bindgen]
pub fn grasp_summary(diameter_mm: f64, tension_n: f64) -> Result<String, JsError> {
    js(demo::grasp_summary(diameter_mm, tension_n))
}

/// Link lengths of the built-in configuration, for form defaults.
#[wasm_bindgen]
pub fn default_lengths() -> Vec<f64> {
    demo::default_config().document.v.to_vec()
}

/// Tension limit of the built-in tendon (N).
#[wasm_bindgen]
pub fn max_tension() -> f64 {
    demo::max_tension()
}
