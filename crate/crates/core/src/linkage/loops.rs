//! Closed-form solution of a single four-bar vector loop.
//!
//! Each loop closes `a + b + d = c`, with `a` at angle `in + out`, `b` at
//! angle `out` and the fixed vector `d` perpendicular to the reference axis.
//! Squaring away the unknown direction of `c` and dividing by `2|a||b|` gives
//! the scalar closure residual
//!
//! ```text
//! r(in, out) = k_const + k_out sin(in + out) + k_in sin(out) + cos(in)
//! ```
//!
//! with `k_out = |d|/|b|`, `k_in = |d|/|a|` and
//! `k_const = (|a|^2 + |b|^2 - |c|^2 + |d|^2) / (2|a||b|)`. The tangent
//! half-angle substitution `t = tan(out / 2)` turns `r = 0` into the
//! quadratic `A t^2 + B t + C = 0`.

use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use crate::error::{Error, LoopId, Result};
use crate::units::{angle_diff, wrap_angle};

/// Dimensionless loop ratios. Homogeneous of degree zero in the link lengths.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct LoopCoefficients {
    pub loop_id: LoopId,
    /// Fixed link over output link (multiplies `sin(in + out)`).
    pub fixed_over_output: f64,
    /// Fixed link over input link (multiplies `sin(out)`).
    pub fixed_over_input: f64,
    /// Length-only constant term.
    pub constant: f64,
}

/// Coefficients of the half-angle quadratic at one input angle.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct QuadraticCoefficients {
    pub quadratic: f64,
    pub linear: f64,
    pub constant: f64,
}

impl QuadraticCoefficients {
    pub fn discriminant(&self) -> f64 {
        self.linear * self.linear - 4.0 * self.quadratic * self.constant
    }
}

/// Root selection for one loop.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Branch {
    /// The `+sqrt` root of the half-angle quadratic.
    Positive,
    /// The `-sqrt` root.
    Negative,
    /// Whichever root lies closest (on the circle) to the given angle.
    Nearest(f64),
}

/// Both assembly configurations of a loop at one input angle, in (-pi, pi].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LoopRoots {
    pub positive: f64,
    pub negative: f64,
}

impl LoopRoots {
    pub fn select(&self, branch: Branch) -> f64 {
        match branch {
            Branch::Positive => self.positive,
            Branch::Negative => self.negative,
            Branch::Nearest(prev) => {
                if angle_diff(self.negative, prev).abs() < angle_diff(self.positive, prev).abs() {
                    self.negative
                } else {
                    self.positive
                }
            }
        }
    }
}

impl LoopCoefficients {
    pub fn new(
        loop_id: LoopId,
        fixed_over_output: f64,
        fixed_over_input: f64,
        constant: f64,
    ) -> Self {
        Self {
            loop_id,
            fixed_over_output,
            fixed_over_input,
            constant,
        }
    }

    /// Ratios from the four link lengths `(input, output, coupler, fixed)`.
    pub fn from_lengths(loop_id: LoopId, lengths: [f64; 4]) -> Result<Self> {
        let [a, b, c, d] = lengths;
        if a == 0.0 || b == 0.0 {
            return Err(Error::DegenerateGeometry(format!(
                "{loop_id}: zero-length input or output link"
            )));
        }
        Ok(Self::new(
            loop_id,
            d / b,
            d / a,
            (a * a + b * b - c * c + d * d) / (2.0 * a * b),
        ))
    }

    /// Scalar closure residual; zero exactly when the loop is assembled.
    pub fn residual(&self, theta_in: f64, theta_out: f64) -> f64 {
        self.constant
            + self.fixed_over_output * (theta_in + theta_out).sin()
            + self.fixed_over_input * theta_out.sin()
            + theta_in.cos()
    }

    /// `(dr/d in, dr/d out)`.
    pub fn residual_partials(&self, theta_in: f64, theta_out: f64) -> (f64, f64) {
        let c = self.fixed_over_output * (theta_in + theta_out).cos();
        (
            c - theta_in.sin(),
            c + self.fixed_over_input * theta_out.cos(),
        )
    }

    pub fn quadratic(&self, theta_in: f64) -> QuadraticCoefficients {
        let (s, c) = theta_in.sin_cos();
        QuadraticCoefficients {
            quadratic: c - self.fixed_over_output * s + self.constant,
            linear: 2.0 * self.fixed_over_output * c + 2.0 * self.fixed_over_input,
            constant: c + self.fixed_over_output * s + self.constant,
        }
    }

    /// Both roots of the loop at `theta_in`.
    ///
    /// The positive root is always the one where the residual crosses zero
    /// upward (`dr/d out = +sqrt(disc)/2 > 0`).
    pub fn roots(&self, theta_in: f64) -> Result<LoopRoots> {
        if !theta_in.is_finite() {
            return Err(Error::InvalidInput(format!(
                "{}: input angle is not finite",
                self.loop_id
            )));
        }
        let q = self.quadratic(theta_in);
        let (a, b, c) = (q.quadratic, q.linear, q.constant);
        if a == 0.0 && b == 0.0 {
            return Err(Error::DegenerateGeometry(format!(
                "{}: quadratic and linear coefficients both vanish at input {:.6} deg",
                self.loop_id,
                theta_in.to_degrees()
            )));
        }
        let disc = q.discriminant();
        if disc < 0.0 || !disc.is_finite() {
            return Err(Error::NoClosure {
                loop_id: self.loop_id,
                theta_in_deg: theta_in.to_degrees(),
            });
        }
        if a == 0.0 {
            // One root escapes to t = inf, i.e. out = pi, where r(pi) = A = 0.
            let finite = 2.0 * (-c / b).atan();
            return Ok(if b > 0.0 {
                LoopRoots {
                    positive: wrap_angle(finite),
                    negative: PI,
                }
            } else {
                LoopRoots {
                    positive: PI,
                    negative: wrap_angle(finite),
                }
            });
        }
        // Cancellation-free quadratic roots.
        let sq = disc.sqrt();
        let (t_pos, t_neg) = if b >= 0.0 {
            let m = -(b + sq) / 2.0;
            (c / m, m / a)
        } else {
            let m = -(b - sq) / 2.0;
            (m / a, c / m)
        };
        Ok(LoopRoots {
            positive: wrap_angle(2.0 * t_pos.atan()),
            negative: wrap_angle(2.0 * t_neg.atan()),
        })
    }
}

/// Solves one loop for its output angle.
pub fn solve_loop(coeffs: &LoopCoefficients, theta_in: f64, branch: Branch) -> Result<f64> {
    coeffs.roots(theta_in).map(|r| r.select(branch))
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::FRAC_PI_2;

    #[test]
    fn unit_lengths_give_unit_ratios() {
        let k = LoopCoefficients::from_lengths(LoopId::First, [1.0; 4]).unwrap();
        assert_eq!(k.fixed_over_output, 1.0);
        assert_eq!(k.fixed_over_input, 1.0);
        assert_eq!(k.constant, 1.0);
    }

    #[test]
    fn ratios_for_sample_lengths() {
        // (625 + 1600 - 2025 + 100) / 2000 = 0.15
        let k = LoopCoefficients::from_lengths(LoopId::First, [25.0, 40.0, 45.0, 10.0]).unwrap();
        assert!((k.fixed_over_output - 0.25).abs() < 1e-15);
        assert!((k.fixed_over_input - 0.4).abs() < 1e-15);
        assert!((k.constant - 0.15).abs() < 1e-15);
    }

    #[test]
    fn ratios_are_scale_free() {
        let base = [25.0, 40.0, 45.0, 10.0];
        let k = LoopCoefficients::from_lengths(LoopId::Second, base).unwrap();
        let k3 = LoopCoefficients::from_lengths(LoopId::Second, base.map(|x| 3.0 * x)).unwrap();
        assert!((k.fixed_over_output - k3.fixed_over_output).abs() < 1e-15);
        assert!((k.fixed_over_input - k3.fixed_over_input).abs() < 1e-15);
        assert!((k.constant - k3.constant).abs() < 1e-15);
    }

    #[test]
    fn zero_length_link_is_degenerate() {
        let e = LoopCoefficients::from_lengths(LoopId::First, [0.0, 1.0, 1.0, 1.0]).unwrap_err();
        assert!(matches!(e, Error::DegenerateGeometry(_)));
    }

    #[test]
    fn linear_fallback_when_quadratic_term_vanishes() {
        let k = LoopCoefficients::new(LoopId::First, 1.0, 1.0, 1.0);
        let q = k.quadratic(FRAC_PI_2);
        assert!(q.quadratic.abs() < 1e-15);
        assert!((q.linear - 2.0).abs() < 1e-15);
        assert!((q.constant - 2.0).abs() < 1e-15);
        let out = solve_loop(&k, FRAC_PI_2, Branch::Positive).unwrap();
        assert!((out + FRAC_PI_2).abs() < 1e-12);
        assert!(k.residual(FRAC_PI_2, out).abs() < 1e-12);
        // The other assembly sits at out = pi.
        let other = solve_loop(&k, FRAC_PI_2, Branch::Negative).unwrap();
        assert!(k.residual(FRAC_PI_2, other).abs() < 1e-12);
    }

    #[test]
    fn exact_zero_quadratic_term_uses_linear_root() {
        // cos(0) - 0 + (-1) = 0 exactly.
        let k = LoopCoefficients::new(LoopId::First, 0.5, 0.5, -1.0);
        let q = k.quadratic(0.0);
        assert_eq!(q.quadratic, 0.0);
        let r = k.roots(0.0).unwrap();
        assert_eq!(r.positive, 2.0 * (-q.constant / q.linear).atan());
        assert_eq!(r.negative, PI);
        assert!(k.residual(0.0, r.positive).abs() < 1e-15);
        assert!(k.residual(0.0, r.negative).abs() < 1e-15);
    }

    #[test]
    fn unreachable_constant_has_no_closure() {
        let k = LoopCoefficients::new(LoopId::First, 0.0, 0.0, 2.0);
        assert_eq!(k.quadratic(0.0).discriminant(), -4.0 * 9.0);
        let e = solve_loop(&k, 0.0, Branch::Positive).unwrap_err();
        assert!(matches!(
            e,
            Error::NoClosure {
                loop_id: LoopId::First,
                ..
            }
        ));
    }

    #[test]
    fn vanishing_quadratic_and_linear_terms_are_degenerate() {
        // cos(pi) + 1 = 0 and 2*0*cos + 2*0 = 0.
        let k = LoopCoefficients::new(LoopId::Second, 0.0, 0.0, 1.0);
        let e = solve_loop(&k, PI, Branch::Positive).unwrap_err();
        assert!(matches!(e, Error::DegenerateGeometry(_)));
    }

    #[test]
    fn positive_root_crosses_upward() {
        let k = LoopCoefficients::from_lengths(LoopId::First, [30.0, 15.0, 55.0, 30.0]).unwrap();
        for deg in [0.0, 20.0, 45.0, 75.0_f64] {
            let t = deg.to_radians();
            let r = k.roots(t).unwrap();
            assert!(k.residual_partials(t, r.positive).1 > 0.0);
            assert!(k.residual_partials(t, r.negative).1 < 0.0);
            assert!(k.residual(t, r.positive).abs() < 1e-13);
            assert!(k.residual(t, r.negative).abs() < 1e-13);
        }
    }

    #[test]
    fn nearest_branch_tracks_previous_angle() {
        let roots = LoopRoots {
            positive: 0.1,
            negative: 3.0,
        };
        assert_eq!(roots.select(Branch::Nearest(0.0)), 0.1);
        assert_eq!(roots.select(Branch::Nearest(-3.1)), 3.0);
    }
}
