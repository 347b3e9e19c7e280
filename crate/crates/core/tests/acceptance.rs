//! Acceptance suite: one PASS/FAIL line per criterion.
//!
//! Runs as a report so the rest of the workspace tests still run after a
//! failing criterion. Set `ACCEPTANCE_STRICT=1` to exit nonzero on any FAIL.

mod common;

use std::time::{Duration, Instant};

use common::{random_element, random_hyperbolic, random_nonconjugate_pair, rng, w};
use goldman_core::geometry::NumAxis;
use goldman_core::*;

/// Absolute tolerance for floating point identities, relative above 1.
const TOL: f64 = 1e-9;
/// Distance band around the axis of `xy` for quasi-geodesic midpoints.
const BAND: f64 = 5.0;

fn close(a: f64, b: f64) -> bool {
    (a - b).abs() <= TOL * b.abs().max(1.0)
}

type Outcome = std::result::Result<String, String>;

fn check(cond: bool, msg: impl Into<String>, failures: &mut Vec<String>) {
    if !cond {
        failures.push(msg.into());
    }
}

fn finish(failures: Vec<String>, ok: impl Into<String>) -> Outcome {
    if failures.is_empty() {
        Ok(ok.into())
    } else {
        Err(failures.join("; "))
    }
}

fn criterion_1() -> Outcome {
    let pool = rayon::ThreadPoolBuilder::new().num_threads(1).build().unwrap();
    pool.install(|| {
        let full = SubgroupSpec::Full;
        let (x, y) = (w("TSTT"), w("TTTSTTT"));
        let mut f = Vec::new();
        let cosets = crossing_double_cosets(&x, &y, &full).map_err(|e| e.to_string())?;
        check(cosets.len() == 4, format!("|I(x,y)| = {}", cosets.len()), &mut f);

        let gs: Vec<_> = [-4, -3, 2, 3].into_iter().map(ProjectiveMatrix::translation).collect();
        let ax = fixed_points(&x).unwrap();
        for g in &gs {
            let cross = crossing_sign(&ax, &fixed_points(&y.conjugate_by(g)).unwrap());
            check(cross != 0, format!("{g} does not give a crossing"), &mut f);
        }
        for i in 0..gs.len() {
            for j in i + 1..gs.len() {
                let same = same_double_coset(&gs[i], &gs[j], &x, &y).unwrap();
                check(same.is_none(), format!("{} and {} share a double coset", gs[i], gs[j]), &mut f);
            }
        }
        for c in &cosets {
            let hits = gs.iter().filter(|g| same_double_coset(g, &c.rep, &x, &y).unwrap().is_some()).count();
            check(hits == 1, format!("coset {} matched {hits} of the translations", c.rep), &mut f);
        }

        let b = bracket(&x, &y, &full).unwrap();
        check(b.is_zero(), format!("[x,y] = {b}"), &mut f);
        check(b.pre_grouping.len() == 4, format!("{} pre-grouping terms", b.pre_grouping.len()), &mut f);
        for target in ["ST^6", "STTST^7"] {
            let t = w(target);
            let hits: Vec<_> =
                b.pre_grouping.iter().filter(|term| are_conjugate(&term.rep, &t, &full).unwrap().is_some()).collect();
            check(hits.len() == 2, format!("{} terms conjugate to {target}", hits.len()), &mut f);
            if hits.len() == 2 {
                check(hits[0].sign == -hits[1].sign, format!("terms conjugate to {target} have equal signs"), &mut f);
            }
        }
        finish(f, "4 cosets, two cancelling pairs ~ ST^6, STTST^7")
    })
}

fn criterion_2() -> Outcome {
    let full = SubgroupSpec::Full;
    let (x, y) = (w("TSTT"), w("TTTSTTT"));
    let mut f = Vec::new();
    let mut notes = Vec::new();

    let s = bracket_of_powers(&x, &y, 1, 3, &full).unwrap();
    check(manhattan_norm(&s) == 12, format!("M[x,y^3] = {}", manhattan_norm(&s)), &mut f);
    let r = intersection_number(&x, &y, &full).unwrap();
    check(r.value == 4 && r.agreed, format!("i(x,y) = {} agreed={}", r.value, r.agreed), &mut f);
    notes.push(format!("i(x,y)={} at p={}", r.value, r.p_used));

    let sq = bracket_of_powers(&x, &x, 1, 2, &full).unwrap();
    check(sq.is_zero(), format!("[x,x^2] = {sq}"), &mut f);
    let cube = bracket_of_powers(&x, &x, 1, 3, &full).unwrap();
    check(cube.pre_grouping.len() == 24, format!("[x,x^3] has {} terms, expected 24", cube.pre_grouping.len()), &mut f);
    match self_intersection_number(&x, &full) {
        Ok(r) => {
            check(r.value == 4 && r.agreed, format!("si(x) = {} (oracle {}), expected 4", r.value, r.oracle), &mut f);
            notes.push(format!("si(x)={}", r.value));
        }
        Err(e) => f.push(format!("si(x): {e}")),
    }
    finish(f, notes.join(", "))
}

fn criterion_3() -> Outcome {
    let full = SubgroupSpec::Full;
    let mut r = rng(3);
    let mut pairs = vec![("TSTT".to_string(), w("TSTT"), "TTTSTTT".to_string(), w("TTTSTTT"))];
    for _ in 0..10 {
        pairs.push(random_nonconjugate_pair(&mut r, 6, &full));
    }
    let mut f = Vec::new();
    let mut values = Vec::new();
    for (a, x, b, y) in &pairs {
        let oracle = geometric_intersection_oracle(x, y, &full).unwrap();
        match intersection_number(x, y, &full) {
            Ok(rep) => {
                check(rep.value == oracle && rep.agreed, format!("{a},{b}: bracket {} oracle {oracle}", rep.value), &mut f);
                values.push(rep.value.to_string());
            }
            Err(e) => f.push(format!("{a},{b}: {e}")),
        }
    }
    finish(f, format!("11 pairs, values {}", values.join(" ")))
}

fn criterion_4() -> Outcome {
    let full = SubgroupSpec::Full;
    let mut r = rng(4);
    let mut f = Vec::new();
    for _ in 0..30 {
        let (a, x) = random_hyperbolic(&mut r, 8);
        let (b, y) = random_hyperbolic(&mut r, 8);
        let xy = bracket(&x, &y, &full).unwrap();
        let yx = bracket(&y, &x, &full).unwrap();
        check(xy == yx.negated(), format!("antisymmetry fails for {a},{b}"), &mut f);
    }
    for _ in 0..50 {
        let (a, x) = random_hyperbolic(&mut r, 8);
        let (b, y) = random_hyperbolic(&mut r, 8);
        let (c, z) = random_hyperbolic(&mut r, 8);
        let d = jacobi_defect(&x, &y, &z, &full).unwrap();
        check(d.is_zero(), format!("jacobi defect {d} for {a},{b},{c}"), &mut f);
    }
    for _ in 0..20 {
        let (a, x) = random_hyperbolic(&mut r, 8);
        let (b, y) = random_hyperbolic(&mut r, 8);
        let (_, g) = random_element(&mut r, 8);
        let (_, h) = random_element(&mut r, 8);
        let lhs = bracket(&x, &y, &full).unwrap();
        let rhs = bracket(&x.conjugate_by(&g), &y.conjugate_by(&h), &full).unwrap();
        check(lhs == rhs, format!("conjugation invariance fails for {a},{b}"), &mut f);
    }
    finish(f, "30 antisymmetry, 50 Jacobi, 20 conjugation checks")
}

fn criterion_5() -> Outcome {
    let full = SubgroupSpec::Full;
    let mut r = rng(5);
    let mut f = Vec::new();
    for _ in 0..10 {
        let (a, x) = random_hyperbolic(&mut r, 6);
        let (b, y) = random_hyperbolic(&mut r, 6);
        for p in 1..=2u32 {
            for q in 1..=2u32 {
                let collated = bracket_of_powers(&x, &y, p, q, &full).unwrap();
                let direct = bracket(&x.power(p as i64), &y.power(q as i64), &full).unwrap();
                check(collated == direct, format!("{a},{b} p={p} q={q}"), &mut f);
                check(
                    collated.pre_grouping.len() == direct.pre_grouping.len(),
                    format!("{a},{b} p={p} q={q}: term counts differ"),
                    &mut f,
                );
            }
        }
    }
    finish(f, "10 pairs x 4 exponent pairs")
}

/// Random pairs with crossing axes: the second element is moved onto a
/// crossing translate.
fn crossing_pairs(seed: u64, n: usize, max_len: usize) -> Vec<(ProjectiveMatrix, ProjectiveMatrix)> {
    let mut r = rng(seed);
    let mut out = Vec::new();
    while out.len() < n {
        let (_, x) = random_hyperbolic(&mut r, max_len);
        let (_, y) = random_hyperbolic(&mut r, max_len);
        let cosets = crossing_double_cosets(&x, &y, &SubgroupSpec::Full).unwrap();
        if let Some(c) = cosets.iter().find(|c| c.sign != 0) {
            out.push((x, y.conjugate_by(&c.rep)));
        }
    }
    out
}

fn criterion_6() -> Outcome {
    let mut f = Vec::new();
    let mut worst = 0f64;
    for (x, y) in crossing_pairs(6, 20, 8) {
        let (rp, qp) = product_axis_witnesses(&x, &y).unwrap();
        let xy = x.compose(&y);
        let axis = fixed_points(&xy).unwrap().numeric();
        let tau = translation_length(&xy).unwrap();
        let d = 2.0 * hyperbolic_distance(rp, qp);
        worst = worst.max((tau - d).abs()).max(axis.distance_to(rp)).max(axis.distance_to(qp));
        check(close(d, tau), format!("{x},{y}: 2d(R,Q) = {d}, tau = {tau}"), &mut f);
        check(axis.distance_to(rp) <= TOL, format!("{x},{y}: R off axis"), &mut f);
        check(axis.distance_to(qp) <= TOL, format!("{x},{y}: Q off axis"), &mut f);
    }
    finish(f, format!("20 pairs, worst deviation {worst:.1e}"))
}

fn criterion_7() -> Outcome {
    let full = SubgroupSpec::Full;
    let mut r = rng(7);
    let mut f = Vec::new();
    for _ in 0..100 {
        let (a, m) = random_hyperbolic(&mut r, 10);
        let (word, h) = rl_normal_form(&m).unwrap();
        check(m.conjugate_by(&h) == word.evaluate(), format!("round trip fails for {a}"), &mut f);
    }
    let mut conjugate_pairs = 0;
    for i in 0..100 {
        let (a, x) = random_hyperbolic(&mut r, 6);
        let (b, y) = if i % 2 == 0 {
            // A conjugate pair whose conjugator lies inside the search ball.
            loop {
                let (g, gm) = random_element(&mut r, 4);
                if displacement_radius(&gm) <= 6.0 {
                    break (format!("({g}){a}({g})^-1"), x.conjugate_by(&gm));
                }
            }
        } else {
            random_hyperbolic(&mut r, 6)
        };
        let engine = are_conjugate(&x, &y, &full).unwrap();
        let brute = brute_force_conjugacy_oracle(&x, &y, &full, 6.0).unwrap();
        if let Some(g) = &engine {
            check(x.conjugate_by(g) == y, format!("bad witness for {a},{b}"), &mut f);
            conjugate_pairs += 1;
        }
        check(engine.is_some() == brute.is_some(), format!("engine and brute force disagree on {a},{b}"), &mut f);
    }
    check(are_conjugate(&w("TSTT"), &w("TTTSTTT"), &full).unwrap().is_none(), "TSTT ~ TTTSTTT", &mut f);
    finish(f, format!("100 round trips, 100 oracle pairs ({conjugate_pairs} conjugate)"))
}

fn criterion_8() -> Outcome {
    let mut r = rng(8);
    let mut f = Vec::new();
    for _ in 0..100 {
        let (a, m) = random_element(&mut r, 10);
        let d = hyperbolic_distance(PlanePoint::I, PlanePoint::I.moved_by(&m));
        check(close(displacement_radius(&m), d), format!("{a}: {} vs {d}", displacement_radius(&m)), &mut f);
    }
    for _ in 0..100 {
        let (a, x) = random_hyperbolic(&mut r, 10);
        let t = translation_length(&x).unwrap();
        for n in 1..=6i64 {
            let tn = translation_length(&x.power(n)).unwrap();
            check(close(tn, n as f64 * t), format!("{a}^{n}: {tn} vs {}", n as f64 * t), &mut f);
        }
    }
    finish(f, "100 elements, 100 x 6 powers")
}

fn criterion_9() -> Outcome {
    let mut f = Vec::new();
    let (x0, y0) = (w("TSTT"), w("TTTSTTT"));
    // The axes of the pair itself are disjoint; use a crossing translate of y.
    let b = crossing_double_cosets(&x0, &y0, &SubgroupSpec::Full).unwrap()[0].rep.clone();
    let mut pairs = vec![(x0, y0.conjugate_by(&b))];
    pairs.extend(crossing_pairs(9, 10, 6));
    let mut worst_band = 0f64;
    for (idx, (x, y)) in pairs.iter().enumerate() {
        for (p, q) in [(1u32, 1u32), (2, 1), (1, 3), (3, 2)] {
            let path = quasigeodesic(x, y, p, q, 2).unwrap();
            let g = &path.period;
            let base = path.base;
            // Distances are measured after pulling back by the exact vertex
            // transform, which is an isometry.
            for j in 0..path.vertices.len() - 2 {
                let back = path.transforms[j + 2].inverse().compose(g).compose(&path.transforms[j]);
                check(
                    hyperbolic_distance(base.moved_by(&back), base) <= TOL,
                    format!("{x},{y} p={p} q={q}: vertex {j} not equivariant"),
                    &mut f,
                );
            }
            for (j, owner) in path.segment_owners.iter().enumerate() {
                for h in [&path.transforms[j], &path.transforms[j + 1]] {
                    let axis: NumAxis = fixed_points(&owner.conjugate_by(&h.inverse())).unwrap().numeric();
                    check(axis.distance_to(base) <= TOL, format!("{x},{y} p={p} q={q}: vertex off segment axis {j}"), &mut f);
                }
            }
            if idx == 0 && p == 1 && q == 1 {
                let xy = x.compose(y);
                for j in 0..path.segment_owners.len() {
                    let h = &path.transforms[j];
                    let hinv = h.inverse();
                    let far = base.moved_by(&hinv.compose(&path.transforms[j + 1]));
                    let mid = geometry::geodesic_midpoint(base, far);
                    let axis = fixed_points(&xy.conjugate_by(&hinv)).unwrap().numeric();
                    let d = axis.distance_to(mid);
                    worst_band = worst_band.max(d);
                    check(d <= BAND, format!("midpoint {j} at distance {d} from axis(xy)"), &mut f);
                }
            }
        }
    }
    finish(f, format!("11 pairs x 4 exponents, band {worst_band:.3}"))
}

fn criterion_10() -> Outcome {
    let spec = SubgroupSpec::Gamma0(2);
    let mut r = rng(10);
    let mut f = Vec::new();
    let (a, x, b, y) = random_nonconjugate_pair(&mut r, 6, &spec);
    let oracle = geometric_intersection_oracle(&x, &y, &spec).unwrap();
    let note = match intersection_number(&x, &y, &spec) {
        Ok(rep) => {
            check(rep.value == oracle && rep.agreed, format!("{a},{b}: bracket {} oracle {oracle}", rep.value), &mut f);
            format!("{a},{b}: value {} oracle {oracle}", rep.value)
        }
        Err(e) => {
            f.push(format!("{a},{b}: {e}"));
            String::new()
        }
    };
    finish(f, note)
}

fn main() {
    type Criterion = (u32, Duration, fn() -> Outcome);
    let criteria: [Criterion; 10] = [
        (1, Duration::from_secs(10), criterion_1),
        (2, Duration::from_secs(60), criterion_2),
        (3, Duration::from_secs(600), criterion_3),
        (4, Duration::from_secs(600), criterion_4),
        (5, Duration::from_secs(600), criterion_5),
        (6, Duration::from_secs(600), criterion_6),
        (7, Duration::from_secs(600), criterion_7),
        (8, Duration::from_secs(600), criterion_8),
        (9, Duration::from_secs(600), criterion_9),
        (10, Duration::from_secs(600), criterion_10),
    ];
    let mut failed = 0;
    for (n, budget, run) in criteria {
        let start = Instant::now();
        let outcome = std::panic::catch_unwind(run).unwrap_or_else(|_| Err("panicked".into()));
        let elapsed = start.elapsed();
        let outcome = match outcome {
            Ok(_) if elapsed > budget => Err(format!("took {:.1}s, budget {}s", elapsed.as_secs_f64(), budget.as_secs())),
            other => other,
        };
        match outcome {
            Ok(detail) => println!("criterion {n:>2}: PASS  {detail} [{:.2}s]", elapsed.as_secs_f64()),
            Err(detail) => {
                failed += 1;
                println!("criterion {n:>2}: FAIL  {detail} [{:.2}s]", elapsed.as_secs_f64());
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", 10 - failed);
    if failed > 0 && std::env::var("ACCEPTANCE_STRICT").is_ok_and(|v| v == "1") {
        std::process::exit(1);
    }
}
