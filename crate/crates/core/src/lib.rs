//! Kinematics, tendon statics and dressing-assist checks for a planar
//! two-loop linkage finger.

pub mod assist;
pub mod config;
mod error;
pub mod finger;
pub mod linkage;
pub mod output;
pub mod units;

pub use error::{Error, LoopId, Result};
