//! Deterministic text outputs: fixed-precision CSV tables, JSON documents and
//! SVG line plots.

mod csv;
mod report;
mod svg;

pub use csv::{force_csv, format_sig, joint_angle_csv, tip_csv, SIGNIFICANT_DIGITS};
pub use report::{
    force_artifacts, force_plot, joint_angle_plot, sweep_artifacts, tendon_of_kind, tip_trace_plot,
    workspace_artifacts, workspace_plot, write_artifacts, Artifact, Format,
};
pub use svg::{render_svg, Axes, Series};
