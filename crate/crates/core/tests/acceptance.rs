//! Acceptance suite. Runs every exit criterion at its stated tolerance and
//! prints one PASS/FAIL line per criterion; exits nonzero if any fails.

use std::time::{Duration, Instant};

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use slice_ss::coeff::check_realization_injection;
use slice_ss::engine::{e_infinity, run_linalg, run_matching, survives_forever, SsResult};
use slice_ss::monomial::{e1_dim, monomials_at};
use slice_ss::verify::relations::{product_identity_holds, truncation_identity_holds, vij_rep, EInfClass};
use slice_ss::verify::{check_einf_relations, compare_suslin, presentation_dim, CheckStatus, Relation, SuslinStatus};
use slice_ss::{Monomial, SpectrumSpec, Window};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn specs() -> [SpectrumSpec; 4] {
    [
        SpectrumSpec::Bp,
        SpectrumSpec::Truncated(1),
        SpectrumSpec::Truncated(2),
        SpectrumSpec::Truncated(3),
    ]
}

fn relation_window() -> Window {
    Window::new(-16, 24, 10, -12, 4).unwrap()
}

fn within(elapsed: Duration, limit_secs: u64) -> Outcome {
    if elapsed <= Duration::from_secs(limit_secs) {
        Ok(format!("{:.2}s ≤ {limit_secs}s", elapsed.as_secs_f64()))
    } else {
        Err(format!("took {:.2}s, limit {limit_secs}s", elapsed.as_secs_f64()))
    }
}

fn weight_zero_stems(res: &SsResult, p_max: i64) -> Vec<usize> {
    let report = e_infinity(res);
    (0..=p_max).map(|p| report.stem_dim(p, 0)).collect()
}

fn criterion_1() -> Outcome {
    let start = Instant::now();
    let expected = vec![1, 1, 2, 1, 1, 0, 0, 0, 1, 1, 2, 1, 1, 0, 0, 0];
    let win = Window::new(0, 15, 12, 0, 0).unwrap();
    let m = weight_zero_stems(&run_matching(SpectrumSpec::kgl2(), &win), 15);
    let l = weight_zero_stems(&run_linalg(SpectrumSpec::kgl2(), &win).map_err(|e| e.to_string())?, 15);
    if m != expected {
        return Err(format!("matching gave {m:?}"));
    }
    if l != expected {
        return Err(format!("linalg gave {l:?}"));
    }
    within(start.elapsed(), 5).map(|t| format!("stems 0..15 = {expected:?}; {t}"))
}

fn criterion_2() -> Outcome {
    let start = Instant::now();
    let d_max = 23;
    let win = Window::new(0, d_max, d_max, 0, 0).unwrap();
    let res = run_matching(SpectrumSpec::kgl2(), &win);
    let rows = compare_suslin(&res, d_max as u32).map_err(|e| e.to_string())?;
    for row in &rows {
        let want = match row.degree % 8 {
            0 | 1 | 3 | 4 => (SuslinStatus::Match, 2),
            2 => (SuslinStatus::ExtensionRequired, 4),
            _ => (SuslinStatus::Match, 1),
        };
        if (row.status, row.einf_order) != (want.0, want.1 as u64) {
            return Err(format!("degree {}: {:?}", row.degree, row));
        }
        if row.status == SuslinStatus::ExtensionRequired && row.classes.len() != 2 {
            return Err(format!("degree {}: expected two classes", row.degree));
        }
    }
    within(start.elapsed(), 10).map(|t| format!("{} degrees, zero mismatches; {t}", rows.len()))
}

fn criterion_3() -> Outcome {
    let start = Instant::now();
    let spec = SpectrumSpec::Bp;
    let res = run_matching(spec, &relation_window());
    let report = check_einf_relations(spec, &res);
    let tau2 = &report.checks[0];
    if tau2.relation != Relation::TauSquared || tau2.status != CheckStatus::Pass {
        return Err(format!("τ² check: {tau2:?}"));
    }
    let mut torsion_tested = 0;
    for c in &report.checks {
        if let Relation::RhoTorsion { i, .. } = c.relation {
            if i <= 3 {
                match c.status {
                    CheckStatus::Pass => torsion_tested += 1,
                    CheckStatus::Fail => return Err(format!("{c:?}")),
                    CheckStatus::Untested => {}
                }
            }
        }
    }
    // Every ρ-torsion instance with i ≤ 3 that lands in the window, found by
    // scanning the window directly.
    let mut in_window = 0;
    for i in 1..=3u32 {
        for j in 0..64u32 {
            let m = slice_ss::monomial::multiply(&Monomial::rho((1 << (i + 1)) - 1), &vij_rep(i, j));
            if relation_window().contains(m.tridegree()) {
                in_window += 1;
                if res.is_dead(&m) != Some(true) {
                    return Err(format!("ρ-torsion instance {m} survives"));
                }
            }
        }
    }
    if torsion_tested == 0 || in_window == 0 {
        return Err("no ρ-torsion instance fell in the window".into());
    }
    if !report.passed() {
        return Err("relation report has failures".into());
    }

    let mut rng = StdRng::seed_from_u64(0x5eed_0003);
    for _ in 0..200 {
        let i = rng.gen_range(1..=6u32);
        let k = rng.gen_range(i..=8u32);
        let (j, l) = (rng.gen_range(0..=40u32), rng.gen_range(0..=40u32));
        if !product_identity_holds(i, j, k, l) {
            return Err(format!("product identity fails at ({i},{j},{k},{l})"));
        }
        let n = rng.gen_range(1..=8u32);
        let ti = rng.gen_range(1..=n);
        let tj = (1 << (n - ti)) + rng.gen_range(0..=40u32);
        if !truncation_identity_holds(n, ti, tj) {
            return Err(format!("truncation identity fails at n={n} ({ti},{tj})"));
        }
    }
    within(start.elapsed(), 30).map(|t| {
        format!("τ² dead, {in_window} ρ-torsion instances dead, 200 identity tuples; {t}")
    })
}

fn random_window(rng: &mut StdRng) -> Window {
    let p_min = rng.gen_range(-12..=10);
    let p_max = p_min + rng.gen_range(0..=20);
    let q_max = rng.gen_range(0..=10);
    let w_min = rng.gen_range(-14..=4);
    let w_max = w_min + rng.gen_range(0..=10);
    Window::new(p_min, p_max, q_max, w_min, w_max).unwrap()
}

fn criterion_4() -> Outcome {
    let start = Instant::now();
    let mut rng = StdRng::seed_from_u64(0x5eed_0004);
    let mut compared = 0usize;
    for _ in 0..50 {
        let win = random_window(&mut rng);
        for spec in specs() {
            let m = run_matching(spec, &win);
            let l = run_linalg(spec, &win).map_err(|e| e.to_string())?;
            for (&t, cell) in &m.cells {
                if !cell.certified {
                    continue;
                }
                compared += 1;
                if cell.dim() != l.dim(t) {
                    return Err(format!("{spec} {win} at {t}: matching {} vs linalg {}", cell.dim(), l.dim(t)));
                }
            }
        }
    }
    within(start.elapsed(), 120).map(|t| format!("50 windows × 4 spectra, {compared} certified tridegrees agree; {t}"))
}

fn criterion_5() -> Outcome {
    let start = Instant::now();
    let win = relation_window();
    let mut compared = 0usize;
    for spec in specs() {
        let res = run_matching(spec, &win);
        for t in win.occupied() {
            if !res.certified(t) {
                return Err(format!("{spec} {t} not certified"));
            }
            let engine = res.dim(t) as u64;
            let oracle = presentation_dim(spec, t);
            if engine != oracle {
                return Err(format!("{spec} at {t}: engine {engine}, presentation {oracle}"));
            }
            compared += 1;
        }
    }
    Ok(format!(
        "{compared} tridegrees across bp2, bpn:1..3 agree; {:.2}s",
        start.elapsed().as_secs_f64()
    ))
}

fn criterion_6() -> Outcome {
    // 50 stems × 20 filtrations × 10 weights
    let win = Window::new(-10, 39, 19, -9, 0).unwrap();
    if win.cells() != 10_000 {
        return Err(format!("window has {} cells", win.cells()));
    }
    for spec in specs() {
        for p in win.p_min..=win.p_max {
            for q in 0..=win.q_max {
                for w in win.weights() {
                    let t = slice_ss::Tridegree::new(p, q, w);
                    let closed = e1_dim(spec, t);
                    let listed = monomials_at(spec, t).len() as u64;
                    if closed != listed {
                        return Err(format!("{spec} at {t}: closed form {closed}, enumeration {listed}"));
                    }
                }
            }
        }
    }
    Ok("10⁴ cells × 4 spectra".into())
}

fn criterion_7() -> Outcome {
    let win = relation_window();
    let mut verified = 0;
    for spec in specs() {
        let report = check_realization_injection(spec, &win);
        if !report.passed() {
            return Err(format!("{spec}: {:?}", report.violations.first()));
        }
        verified += report.verified.len();
    }
    Ok(format!("{verified} tridegrees, zero violations"))
}

fn criterion_8() -> Outcome {
    let bp = SpectrumSpec::Bp;
    let mut must_live: Vec<(SpectrumSpec, EInfClass)> = vec![(bp, EInfClass::rho()), (bp, EInfClass::tau())];
    for i in 1..=3 {
        must_live.push((bp, EInfClass::v(i, 0)));
    }
    for j in 0..=4 {
        must_live.push((bp, EInfClass::v(1, j)));
    }
    for n in 1..=3 {
        let spec = SpectrumSpec::Truncated(n);
        must_live.push((spec, EInfClass::t_next(n)));
        must_live.push((spec, EInfClass::rho()));
        must_live.push((spec, EInfClass::tau()));
        for i in 1..=n {
            must_live.push((spec, EInfClass::v(i, 0)));
        }
    }
    for (spec, class) in &must_live {
        if !survives_forever(*spec, &class.representative) {
            return Err(format!("{spec}: {:?} does not survive", class.kind));
        }
    }
    for k in 1..=3 {
        let m = Monomial::tau(1 << k);
        if survives_forever(bp, &m) {
            return Err(format!("bp2: {m} survives"));
        }
    }
    Ok(format!("{} permanent cycles, τ², τ⁴, τ⁸ die in bp2", must_live.len()))
}

fn main() {
    let criteria: [Criterion; 8] = [
        ("1 weight-zero kgl/2 table", criterion_1),
        ("2 Suslin consistency", criterion_2),
        ("3 E∞ relations for BP/2", criterion_3),
        ("4 backend equivalence", criterion_4),
        ("5 presentation oracle", criterion_5),
        ("6 E₁ closed form", criterion_6),
        ("7 realization injection", criterion_7),
        ("8 permanent cycles", criterion_8),
    ];
    let mut failed = 0;
    for (name, check) in criteria {
        match check() {
            Ok(detail) => println!("PASS  criterion {name}: {detail}"),
            Err(why) => {
                failed += 1;
                println!("FAIL  criterion {name}: {why}");
            }
        }
    }
    if failed > 0 {
        println!("{failed} criteria failed");
        std::process::exit(1);
    }
    println!("all 8 criteria passed");
}
