//! JSON configuration documents. Angles are degrees and lengths millimetres
//! on disk; everything is converted to radians on load.

use nalgebra::Vector2;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::error::{Error, Result};
use crate::finger::{FingerGeometry, TendonKind, TendonModel, ThumbLine};
use crate::linkage::LinkageGeometry;
use crate::units::Interval;

/// Shipped default finger document.
pub const DEFAULT_CONFIG_JSON: &str = include_str!("../data/default_finger.json");

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TendonDocument {
    pub kind: TendonKind,
    pub arms_mm: [f64; 3],
    pub spring_nmm_per_rad: f64,
    pub preload_nmm: f64,
    pub max_tension_n: f64,
    /// Default operating tension for force and grasp commands.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub nominal_tension_n: Option<f64>,
}

/// On-disk layout. Only the linkage keys are mandatory.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ConfigDocument {
    pub v: [f64; 8],
    pub sigma_deg: f64,
    pub rho_deg: f64,
    #[serde(default = "right_angle")]
    pub theta4_deg: f64,
    #[serde(default = "right_angle")]
    pub theta8_deg: f64,
    pub theta1_range_deg: [f64; 2],
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub phalanx_mm: Option<[f64; 3]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub psi_range_deg: Option<[f64; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub base_offset_mm: Option<[f64; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub tendon: Option<TendonDocument>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub thumb_line_mm: Option<[[f64; 2]; 2]>,
}

fn right_angle() -> f64 {
    90.0
}

fn deg_interval(what: &str, r: [f64; 2]) -> Result<Interval> {
    Interval::new(r[0].to_radians(), r[1].to_radians())
        .map_err(|e| Error::Config(format!("{what}: {e}")))
}

fn config_err(what: &str) -> impl Fn(Error) -> Error + '_ {
    move |e| Error::Config(format!("{what}: {e}"))
}

/// A validated configuration plus the hash of the bytes it was read from.
#[derive(Debug, Clone, PartialEq)]
pub struct FingerConfig {
    pub document: ConfigDocument,
    pub geometry: LinkageGeometry,
    /// Lower-case hex SHA-256 of the source text.
    pub hash: String,
}

impl FingerConfig {
    pub fn from_json(text: &str) -> Result<Self> {
        let document: ConfigDocument =
            serde_json::from_str(text).map_err(|e| Error::Config(e.to_string()))?;
        let geometry = LinkageGeometry::new(
            document.v,
            document.sigma_deg.to_radians(),
            document.rho_deg.to_radians(),
            document.theta4_deg.to_radians(),
            document.theta8_deg.to_radians(),
            deg_interval("theta1_range_deg", document.theta1_range_deg)?,
        )
        .map_err(config_err("linkage"))?;
        let cfg = Self {
            document,
            geometry,
            hash: content_hash(text),
        };
        // Surface malformed optional sections at load time.
        if cfg.document.phalanx_mm.is_some() || cfg.document.psi_range_deg.is_some() {
            cfg.finger()?;
        }
        if cfg.document.tendon.is_some() {
            cfg.tendon()?;
            cfg.nominal_tension()?;
        }
        Ok(cfg)
    }

    pub fn default_config() -> Self {
        Self::from_json(DEFAULT_CONFIG_JSON).expect("shipped default config is valid")
    }

    pub fn finger(&self) -> Result<FingerGeometry> {
        let d = &self.document;
        let phalanges = d
            .phalanx_mm
            .ok_or_else(|| Error::Config("missing `phalanx_mm`".into()))?;
        let psi = d
            .psi_range_deg
            .ok_or_else(|| Error::Config("missing `psi_range_deg`".into()))?;
        let base = d.base_offset_mm.unwrap_or([0.0, 0.0]);
        FingerGeometry::new(
            phalanges,
            Vector2::new(base[0], base[1]),
            deg_interval("psi_range_deg", psi)?,
        )
        .map_err(config_err("finger"))
    }

    pub fn tendon(&self) -> Result<TendonModel> {
        let t = self
            .document
            .tendon
            .as_ref()
            .ok_or_else(|| Error::Config("missing `tendon`".into()))?;
        TendonModel::new(
            t.kind,
            t.arms_mm,
            t.spring_nmm_per_rad,
            t.preload_nmm,
            t.max_tension_n,
        )
        .map_err(config_err("tendon"))
    }

    /// Configured operating tension, defaulting to the tension limit.
    pub fn nominal_tension(&self) -> Result<f64> {
        let t = self
            .document
            .tendon
            .as_ref()
            .ok_or_else(|| Error::Config("missing `tendon`".into()))?;
        let n = t.nominal_tension_n.unwrap_or(t.max_tension_n);
        if !(n.is_finite() && 0.0 <= n && n <= t.max_tension_n) {
            return Err(Error::Config(format!(
                "tendon: nominal tension {n} N outside [0, {}] N",
                t.max_tension_n
            )));
        }
        Ok(n)
    }

    pub fn thumb(&self) -> Result<ThumbLine> {
        let [a, b] = self
            .document
            .thumb_line_mm
            .ok_or_else(|| Error::Config("missing `thumb_line_mm`".into()))?;
        if a.iter().chain(b.iter()).any(|x| !x.is_finite()) {
            return Err(Error::Config("thumb_line_mm: not finite".into()));
        }
        Ok(ThumbLine::new(
            Vector2::new(a[0], a[1]),
            Vector2::new(b[0], b[1]),
        ))
    }
}

/// Hex SHA-256 of a document's text.
pub fn content_hash(text: &str) -> String {
    Sha256::digest(text.as_bytes())
        .iter()
        .map(|b| format!("{b:02x}"))
        .collect()
}

/// Linkage of the shipped default configuration.
pub fn default_geometry() -> LinkageGeometry {
    FingerConfig::default_config().geometry
}
