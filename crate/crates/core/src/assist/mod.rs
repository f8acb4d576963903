//! Dressing-assistance constraints and the published-constant registry.

pub mod registry;
mod safety;

pub use registry::{
    declared_unit, evaluate_rules, registry_verify, ReferenceRegistry, RegistryEntry, RuleOutcome,
    RuleReport, RuleSpec,
};
pub use safety::{
    clearance_check, iso_contact_check, stroke_check, ClearanceResult, ContactRegion,
    SafetyVerdict, StrokeResult,
};
