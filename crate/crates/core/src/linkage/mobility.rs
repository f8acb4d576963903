//! Planar mobility and independent-loop counting.

/// Link count of the two-loop finger mechanism (ground included).
pub const FINGER_LINKS: u32 = 6;
/// Lower-pair joint count of the two-loop finger mechanism.
pub const FINGER_JOINTS: u32 = 7;

/// Kutzbach criterion for a planar linkage: `M = 3(L - 1) - 2j`.
///
/// Every joint is assumed to be a one-DoF lower pair. A negative result means
/// an over-constrained structure.
pub fn compute_mobility(num_links: u32, num_joints: u32) -> i64 {
    debug_assert!(num_links >= 1);
    3 * (i64::from(num_links) - 1) - 2 * i64::from(num_joints)
}

/// Number of independent closure loops, `p = j - L + 1`.
pub fn count_loops(num_joints: u32, num_links: u32) -> i64 {
    i64::from(num_joints) - i64::from(num_links) + 1
}
