//! End-to-end acceptance run. Prints one PASS/FAIL line per criterion and
//! exits non-zero if any fails.

mod common;

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use finger_core::assist::{
    clearance_check, iso_contact_check, registry_verify, stroke_check, ContactRegion,
    ReferenceRegistry,
};
use finger_core::config::FingerConfig;
use finger_core::finger::{
    force_curve, grasp_assess, tendon_excursion, tip_force_at, tip_position, workspace,
    ForceContext, GraspObject, ThumbLine,
};
use finger_core::linkage::{
    compute_mobility, count_loops, joint_rates, solve_chain, solve_chain_numeric, solve_sweep,
    BranchPolicy, JointState, FINGER_JOINTS, FINGER_LINKS,
};
use finger_core::output::{sweep_artifacts, write_artifacts, Format};
use nalgebra::Vector2;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn check(ok: bool, msg: impl Into<String>) -> Outcome {
    let msg = msg.into();
    if ok {
        Ok(msg)
    } else {
        Err(msg)
    }
}

fn c1_mobility() -> Outcome {
    let m = compute_mobility(FINGER_LINKS, FINGER_JOINTS);
    let p = count_loops(FINGER_JOINTS, FINGER_LINKS);
    check(
        m == 1 && p == 2 && compute_mobility(6, 7) == 1 && count_loops(7, 6) == 2,
        format!("M={m}, loops={p}"),
    )
}

fn c2_oracle() -> Outcome {
    let g = finger_core::config::default_geometry();
    let start = Instant::now();
    let mut worst: f64 = 0.0;
    for t in g.theta1_range.linspace(1000) {
        let a = solve_chain(&g, t, &BranchPolicy::PositiveRoot).map_err(|e| e.to_string())?;
        let b = solve_chain_numeric(&g, t).map_err(|e| e.to_string())?;
        worst = worst
            .max((a.theta2 - b.theta2).abs())
            .max((a.theta6 - b.theta6).abs());
    }
    let took = start.elapsed();
    check(
        worst <= 1e-9 && took < Duration::from_secs(1),
        format!(
            "max deviation {worst:.3e} rad over 1000 samples in {:.0} ms",
            took.as_secs_f64() * 1e3
        ),
    )
}

fn c3_residuals() -> Outcome {
    let mut rng = StdRng::seed_from_u64(3);
    let mut worst: f64 = 0.0;
    for _ in 0..10_000 {
        let (g, t) = common::random_closing(&mut rng);
        let s = solve_chain(&g, t, &BranchPolicy::PositiveRoot).map_err(|e| e.to_string())?;
        let r = g.loop_residuals(&s).map_err(|e| e.to_string())?;
        worst = worst.max(r[0].abs()).max(r[1].abs());
    }
    check(
        worst <= 1e-10,
        format!("10000 geometries, worst residual {worst:.3e}"),
    )
}

fn angles(s: &JointState) -> [f64; 9] {
    [
        s.theta1,
        s.theta2,
        s.theta3,
        s.theta5,
        s.theta6,
        s.theta7,
        s.theta_mcp,
        s.theta_pip,
        s.theta_dip,
    ]
}

fn c4_scaling() -> Outcome {
    let mut rng = StdRng::seed_from_u64(4);
    let (mut worst_angle, mut worst_point): (f64, f64) = (0.0, 0.0);
    for _ in 0..100 {
        let g = common::random_sweepable(&mut rng);
        let finger = common::random_finger(&mut rng);
        let thumb = ThumbLine::new(Vector2::new(0.0, -30.0), Vector2::new(60.0, -30.0));
        let base = solve_sweep(&g, g.theta1_range, 21).map_err(|e| e.to_string())?;
        let ws = workspace(&g, &finger, &thumb, 11, 5).map_err(|e| e.to_string())?;
        for s in [0.1, 3.0, 10.0] {
            let gs = g.scaled(s);
            let scaled = solve_sweep(&gs, gs.theta1_range, 21).map_err(|e| e.to_string())?;
            for (a, b) in base.iter().zip(&scaled) {
                for (x, y) in angles(a).iter().zip(angles(b)) {
                    worst_angle = worst_angle.max((x - y).abs());
                }
            }
            let wss = workspace(&gs, &finger.scaled(s), &thumb.scaled(s), 11, 5)
                .map_err(|e| e.to_string())?;
            for (p, q) in ws.points.iter().zip(&wss.points) {
                let expect = p.grip * s;
                worst_point = worst_point.max((q.grip - expect).norm() / expect.norm());
            }
        }
    }
    check(
        worst_angle <= 1e-12 && worst_point <= 1e-9,
        format!("100 geometries x 3 scales, angle drift {worst_angle:.3e} rad, point drift {worst_point:.3e} rel"),
    )
}

fn c5_derivatives() -> Outcome {
    let mut rng = StdRng::seed_from_u64(5);
    let h = 1e-6;
    let (mut worst_exc, mut worst_tip): (f64, f64) = (0.0, 0.0);
    for _ in 0..500 {
        let g = common::random_sweepable(&mut rng);
        let finger = common::random_finger(&mut rng);
        let tendon = common::random_tendon(&mut rng);
        let t = rng.gen_range(g.theta1_range.lo + 1e-3..g.theta1_range.hi - 1e-3);
        let state = solve_chain(&g, t, &BranchPolicy::PositiveRoot).map_err(|e| e.to_string())?;
        let near = BranchPolicy::Continuity(state);
        let plus = solve_chain(&g, t + h, &near).map_err(|e| e.to_string())?;
        let minus = solve_chain(&g, t - h, &near).map_err(|e| e.to_string())?;

        let ex = |s: &JointState| tendon_excursion(&tendon, &g, s).map_err(|e| e.to_string());
        let analytic = ex(&state)?.rate;
        let fd = (ex(&plus)?.length - ex(&minus)?.length) / (2.0 * h);
        // Relative to the size of the summed per-joint terms, so cancellation
        // between joints does not inflate the ratio.
        let rates = joint_rates(&g, &state).map_err(|e| e.to_string())?;
        let scale: f64 = tendon
            .moment_arms
            .iter()
            .zip(rates.anatomical())
            .map(|(r, w)| (r * w).abs())
            .sum();
        worst_exc = worst_exc.max((analytic - fd).abs() / scale);

        let v = finger.tip_velocity(&state, &rates);
        let fd_v = (tip_position(&finger, &plus, 0.0).tip - tip_position(&finger, &minus, 0.0).tip)
            / (2.0 * h);
        worst_tip = worst_tip.max((v - fd_v).norm() / v.norm());
        let speed = tip_force_at(&tendon, &g, &finger, &state, 0.0)
            .map_err(|e| e.to_string())?
            .tip_speed;
        worst_tip = worst_tip.max((speed - fd_v.norm()).abs() / speed);
    }
    check(
        worst_exc <= 1e-6 && worst_tip <= 1e-6,
        format!("500 configurations, excursion {worst_exc:.3e} rel, tip speed {worst_tip:.3e} rel"),
    )
}

fn c6_identities() -> Outcome {
    let ok = |g: &finger_core::linkage::LinkageGeometry, s: &JointState| {
        s.theta_mcp == s.theta6
            && s.theta_pip == s.theta5 - g.sigma
            && s.theta_dip == s.theta1 - g.rho
    };
    let g = finger_core::config::default_geometry();
    let mut count = 0;
    for s in solve_sweep(&g, g.theta1_range, 1000).map_err(|e| e.to_string())? {
        if !ok(&g, &s) {
            return Err(format!("identity broken at theta1 = {}", s.theta1));
        }
        count += 1;
    }
    let mut rng = StdRng::seed_from_u64(6);
    for _ in 0..5000 {
        let (g, t) = common::random_closing(&mut rng);
        let s = solve_chain(&g, t, &BranchPolicy::PositiveRoot).map_err(|e| e.to_string())?;
        let n = solve_chain_numeric(&g, t).map_err(|e| e.to_string())?;
        if !ok(&g, &s) || !ok(&g, &n) {
            return Err(format!("identity broken at theta1 = {t}"));
        }
        count += 2;
    }
    check(true, format!("{count} solves, all bit-exact"))
}

fn c7_grasp() -> Outcome {
    let c = FingerConfig::default_config();
    let tendon = c.tendon().map_err(|e| e.to_string())?;
    let finger = c.finger().map_err(|e| e.to_string())?;
    let reg = ReferenceRegistry::shipped();
    let ctx = ForceContext {
        tendon: &tendon,
        geometry: &c.geometry,
        finger: &finger,
        theta1: c.geometry.theta1_range.hi,
        tension: c.nominal_tension().map_err(|e| e.to_string())?,
    };
    let mut mismatches = Vec::new();
    let mut feasible = 0;
    for i in 200..=1600 {
        let d = i as f64 / 10.0;
        let r = grasp_assess(GraspObject::Cylinder { diameter: d }, &reg, &ctx)
            .map_err(|e| e.to_string())?;
        if r.feasible != (30.0..=145.0).contains(&d) {
            mismatches.push(d);
        }
        feasible += r.feasible as usize;
    }
    check(
        mismatches.is_empty() && feasible == 1151,
        format!("1401 diameters, {feasible} feasible, mismatches {mismatches:?}"),
    )
}

fn c8_force_ordering() -> Outcome {
    let c = FingerConfig::default_config();
    let g = &c.geometry;
    let finger = c.finger().map_err(|e| e.to_string())?;
    let single = c.tendon().map_err(|e| e.to_string())?;
    let double = single.as_double();
    let tension = c.nominal_tension().map_err(|e| e.to_string())?;
    let a = force_curve(&single, g, &finger, tension, 1001).map_err(|e| e.to_string())?;
    let b = force_curve(&double, g, &finger, tension, 1001).map_err(|e| e.to_string())?;
    let bad = a.iter().zip(&b).filter(|(s, d)| s.force >= d.force).count();
    let peak = |v: &[finger_core::finger::TipForce]| v.iter().map(|f| f.force).fold(0.0, f64::max);
    check(
        bad == 0,
        format!(
            "1001 inputs at {tension} N, violations {bad}, peaks single {:.3} N < double {:.3} N",
            peak(&a),
            peak(&b)
        ),
    )
}

fn c9_safety() -> Outcome {
    let c = FingerConfig::default_config();
    let g = &c.geometry;
    let finger = c.finger().map_err(|e| e.to_string())?;
    let single = c.tendon().map_err(|e| e.to_string())?;
    let reg = ReferenceRegistry::shipped();
    let mut max_force: f64 = 0.0;
    let mut min_margin = f64::INFINITY;
    let mut all_pass = true;
    for tendon in [single.clone(), single.as_double()] {
        let states = solve_sweep(g, g.theta1_range, 501).map_err(|e| e.to_string())?;
        for k in 0..=50 {
            let tension = tendon.max_tension * k as f64 / 50.0;
            for s in &states {
                let f = tip_force_at(&tendon, g, &finger, s, tension)
                    .map_err(|e| e.to_string())?
                    .force;
                let v = iso_contact_check(f, ContactRegion::ThighKnee, &reg)
                    .map_err(|e| e.to_string())?;
                all_pass &= v.pass;
                max_force = max_force.max(f);
                min_margin = min_margin.min(v.margin_ratio);
            }
        }
    }
    let cl = clearance_check(800.0, 460.0, 75.0).map_err(|e| e.to_string())?;
    let st = stroke_check(170.0, 180.0).map_err(|e| e.to_string())?;
    check(
        all_pass && min_margin >= 18.0 && cl.per_side_clearance == 170.0 && cl.fits && st.pass,
        format!(
            "max force {max_force:.3} N, min margin {min_margin:.2}, clearance {} mm fits={}, stroke slack {} mm",
            cl.per_side_clearance, cl.fits, st.slack
        ),
    )
}

fn c10_registry() -> Outcome {
    let reg = ReferenceRegistry::shipped();
    let report = registry_verify(&reg).map_err(|e| e.to_string())?;
    let v = |k: &str| reg.value(k).map_err(|e| e.to_string());
    let rows = [
        ("prior_study.dressing", 9.0, 10.0, 90.0),
        ("proposed_system.dressing", 4.0, 4.0, 100.0),
        ("prior_study.undressing", 0.0, 7.0, 0.0),
        ("proposed_system.undressing", 4.0, 4.0, 100.0),
    ];
    for (row, succ, trials, pct) in rows {
        let got = (
            v(&format!("trial.{row}.successes_count"))?,
            v(&format!("trial.{row}.trials_count"))?,
            v(&format!("trial.{row}.success_rate_pct"))?,
        );
        if got != (succ, trials, pct) {
            return Err(format!("{row}: read back {got:?}"));
        }
    }
    check(
        report.all_passed(),
        format!(
            "{} rules passed, trial readback 9/10, 4/4, 0/7, 4/4",
            report.outcomes.len()
        ),
    )
}

fn c11_determinism() -> Outcome {
    let c = FingerConfig::default_config();
    let dirs = [
        tempfile::tempdir().map_err(|e| e.to_string())?,
        tempfile::tempdir().map_err(|e| e.to_string())?,
    ];
    let mut contents: Vec<Vec<Vec<u8>>> = Vec::new();
    for dir in &dirs {
        let mut run = Vec::new();
        for format in [Format::Csv, Format::Svg] {
            let files = sweep_artifacts(&c, 200, 0.0, format).map_err(|e| e.to_string())?;
            for path in write_artifacts(dir.path(), &files).map_err(|e| e.to_string())? {
                run.push(std::fs::read(path).map_err(|e| e.to_string())?);
            }
        }
        contents.push(run);
    }
    check(
        contents[0] == contents[1] && contents[0].len() == 4,
        format!("{} files compared byte for byte", contents[0].len()),
    )
}

fn main() -> ExitCode {
    let criteria: [Criterion; 11] = [
        ("mobility and loop count", c1_mobility),
        ("closed form vs oracle", c2_oracle),
        ("randomized loop residuals", c3_residuals),
        ("scaling invariance", c4_scaling),
        ("derivative checks", c5_derivatives),
        ("anatomical identities", c6_identities),
        ("grasp envelope scan", c7_grasp),
        ("single below double tendon force", c8_force_ordering),
        ("safety and feasibility constants", c9_safety),
        ("registry verification", c10_registry),
        ("sweep determinism", c11_determinism),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let outcome =
            catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|_| Err("panicked".into()));
        match outcome {
            Ok(msg) => println!("criterion {:>2} PASS  {name}: {msg}", i + 1),
            Err(msg) => {
                failed += 1;
                println!("criterion {:>2} FAIL  {name}: {msg}", i + 1);
            }
        }
    }
    println!(
        "{} of {} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
