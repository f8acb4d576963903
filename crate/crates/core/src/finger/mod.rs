//! Fingertip kinematics, tendon actuation, tip force and grasp assessment.

mod grasp;
mod kinematics;
mod tendon;

pub use grasp::{grasp_assess, ForceContext, GraspObject, GraspReport, GraspType};
pub use kinematics::{
    arc_length, tip_at, tip_position, tip_trace, workspace, FingerGeometry, SweepSpec, ThumbLine,
    TipSample, Workspace,
};
pub use tendon::{
    force_curve, peak_force, preload_for_peak_force, reference_state, static_tip_force,
    tendon_excursion, tension_for_peak_force, tip_force_at, Excursion, TendonKind, TendonModel,
    TipForce, MIN_TIP_SPEED,
};
