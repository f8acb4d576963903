use finger_core::config::FingerConfig;
use finger_core::finger::{
    arc_length, tendon_excursion, tip_position, tip_trace, workspace, SweepSpec, TipSample,
};
use finger_core::linkage::{solve_chain, solve_chain_numeric, solve_sweep, BranchPolicy};
use finger_core::units::Interval;
use finger_core::Error;

#[test]
fn continuity_sweep_has_no_branch_jumps() {
    let c = FingerConfig::default_config();
    let g = &c.geometry;
    let steps = (g.theta1_range.width().to_degrees() / 0.5).ceil() as usize + 1;
    let states = solve_sweep(g, g.theta1_range, steps).unwrap();
    for w in states.windows(2) {
        assert!((w[1].theta2 - w[0].theta2).abs().to_degrees() < 10.0);
        assert!((w[1].theta6 - w[0].theta6).abs().to_degrees() < 10.0);
    }
}

#[test]
fn two_point_trace_matches_endpoints() {
    let c = FingerConfig::default_config();
    let g = &c.geometry;
    let f = c.finger().unwrap();
    let trace = tip_trace(g, &f, &SweepSpec::new(g.theta1_range, 2), 0.3).unwrap();
    assert_eq!(trace.len(), 2);
    for (s, t) in trace.iter().zip([g.theta1_range.lo, g.theta1_range.hi]) {
        let state = solve_chain(g, t, &BranchPolicy::PositiveRoot).unwrap();
        assert_eq!(*s, tip_position(&f, &state, 0.3));
    }
}

#[test]
fn trace_outside_range_is_rejected() {
    let c = FingerConfig::default_config();
    let g = &c.geometry;
    let f = c.finger().unwrap();
    let wide = Interval::new(g.theta1_range.lo, g.theta1_range.hi + 0.1).unwrap();
    let err = tip_trace(g, &f, &SweepSpec::new(wide, 10), 0.0).unwrap_err();
    assert!(matches!(err, Error::OutOfRange { .. }));
}

#[test]
fn trace_arc_length_matches_oracle_trace() {
    let c = FingerConfig::default_config();
    let g = &c.geometry;
    let f = c.finger().unwrap();
    let trace = tip_trace(g, &f, &SweepSpec::new(g.theta1_range, 100), 0.0).unwrap();
    let oracle: Vec<TipSample> = g
        .theta1_range
        .linspace(100)
        .into_iter()
        .map(|t| tip_position(&f, &solve_chain_numeric(g, t).unwrap(), 0.0))
        .collect();
    let (a, b) = (arc_length(&trace), arc_length(&oracle));
    assert!((a - b).abs() <= 1e-3 * b, "{a} vs {b}");
}

#[test]
fn tiny_workspace_is_the_product_of_tip_positions() {
    let c = FingerConfig::default_config();
    let g = &c.geometry;
    let f = c.finger().unwrap();
    let ws = workspace(g, &f, &c.thumb().unwrap(), 2, 2).unwrap();
    assert_eq!(ws.points.len(), 4);
    let mut k = 0;
    for t in g.theta1_range.linspace(2) {
        let state = solve_chain(g, t, &BranchPolicy::PositiveRoot).unwrap();
        for psi in f.psi_range.linspace(2) {
            assert_eq!(ws.points[k], tip_position(&f, &state, psi));
            k += 1;
        }
    }
}

#[test]
fn opening_width_rechecked_with_transposed_loops() {
    let c = FingerConfig::default_config();
    let g = &c.geometry;
    let f = c.finger().unwrap();
    let thumb = c.thumb().unwrap();
    let ws = workspace(g, &f, &thumb, 200, 50).unwrap();
    let states = solve_sweep(g, g.theta1_range, 200).unwrap();
    let mut best: f64 = 0.0;
    for psi in f.psi_range.linspace(50) {
        for s in &states {
            best = best.max(thumb.distance(tip_position(&f, s, psi).grip));
        }
    }
    assert_eq!(ws.max_opening_width, best);
    assert!(best > 100.0 && best < 140.0, "{best}");
}

#[test]
fn excursion_rate_matches_finite_difference_at_twenty_degrees() {
    let c = FingerConfig::default_config();
    let g = &c.geometry;
    let t = c.tendon().unwrap();
    let h = 1e-5;
    let at = |x: f64| {
        let s = solve_chain(g, x, &BranchPolicy::PositiveRoot).unwrap();
        tendon_excursion(&t, g, &s).unwrap()
    };
    let x = 20f64.to_radians();
    let fd = (at(x + h).length - at(x - h).length) / (2.0 * h);
    let rate = at(x).rate;
    assert!((rate - fd).abs() <= 1e-6 * rate.abs(), "{rate} vs {fd}");
}
