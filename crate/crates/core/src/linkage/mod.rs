//! Mobility analysis and two-loop vector-closure solving.

mod chain;
mod loops;
mod mobility;
mod oracle;

pub use chain::{
    joint_rates, loop_coefficients, solve_chain, solve_sweep, BranchPolicy, JointRates, JointState,
    LinkageGeometry,
};
pub use loops::{solve_loop, Branch, LoopCoefficients, LoopRoots, QuadraticCoefficients};
pub use mobility::{compute_mobility, count_loops, FINGER_JOINTS, FINGER_LINKS};
pub use oracle::{solve_chain_numeric, solve_chain_numeric_with, solve_loop_numeric};
