//! Acceptance criteria, one PASS/FAIL line each. Exits nonzero if any fails.

mod common;

use std::collections::BTreeSet;
use std::process::Command;
use std::time::{Duration, Instant};

use num_complex::Complex64;
use num_rational::Rational64;
use proptest::prelude::*;
use proptest::test_runner::{Config, RngAlgorithm, TestCaseError, TestRng, TestRunner};
use rand::{Rng, SeedableRng};

use common::*;
use quiverstab::heart::{
    c_action, chamber_of, cross_wall, exchange_graph, stab_metric, support_constant, Chamber, Heart, HnData,
    Intermediate, Norm, ProbeEntry, Wall,
};
use quiverstab::periods::{period, period_entry, period_with_nodes, PolynomialQuadDifferential};
use quiverstab::qp::{isomorphism, mutate, QuiverWithPotential};
use quiverstab::rep::{hn_filtration, hn_oracle, phase_of, CentralCharge};
use quiverstab::surface::{
    compare_exchange_graphs, decoration_count, enumerate_triangulations, flip_graph, flip_mutation_square,
    MarkedSurfaceData,
};

type Outcome = Result<String, String>;

macro_rules! ensure {
    ($cond:expr, $($fmt:tt)+) => {
        if !$cond {
            return Err(format!($($fmt)+));
        }
    };
}

fn within(elapsed: Duration, budget: Duration) -> Result<(), String> {
    if elapsed <= budget {
        Ok(())
    } else {
        Err(format!("took {elapsed:?}, budget {budget:?}"))
    }
}

fn mutation() -> Outcome {
    let a3 = QuiverWithPotential::linear_a(3);
    let _ = mutate(&a3, "2");
    let start = Instant::now();
    let m = mutate(&a3, "2").map_err(|e| e.to_string())?;
    let elapsed = start.elapsed();
    ensure!(isomorphism(&m, &QuiverWithPotential::three_cycle()).is_some(), "μ₂(A₃) is not the 3-cycle with W = abc");
    within(elapsed, Duration::from_millis(1))?;
    Ok(format!("{elapsed:?}"))
}

fn pentagon() -> Outcome {
    let start = Instant::now();
    let h0 = Heart::standard(QuiverWithPotential::linear_a(2));
    let g = exchange_graph(&h0, None, &Intermediate);
    let elapsed = start.elapsed();
    ensure!(g.vertices.len() == 5, "{} vertices", g.vertices.len());
    let label = |h: &Heart| (0..5u8).find(|&k| h.classes() == Chamber::heart_classes(k).unwrap().as_slice());
    let mut labels = Vec::new();
    for h in &g.vertices {
        labels.push(label(h).ok_or_else(|| format!("unexpected heart {:?}", h.classes()))?);
    }
    let forward: BTreeSet<(u8, u8, usize)> = g
        .forward_edges()
        .map(|e| (labels[e.source], labels[e.target.unwrap()], e.simple))
        .collect();
    let want: BTreeSet<(u8, u8, usize)> = [(0, 1, 0), (1, 2, 1), (2, 4, 0), (0, 3, 1), (3, 4, 0)].into();
    ensure!(g.forward_edges().count() == 5, "{} forward edges", g.forward_edges().count());
    ensure!(forward == want, "forward edges {forward:?}");
    within(elapsed, Duration::from_secs(1))?;
    Ok(format!("{elapsed:?}"))
}

fn surface_duality() -> Outcome {
    let start = Instant::now();
    let flips = flip_graph(5).map_err(|e| e.to_string())?;
    ensure!(flips.graph().describe() == "5-cycle", "flip graph is {}", flips.graph().describe());
    let a2 = QuiverWithPotential::linear_a(2);
    let mut squares = 0;
    for t in enumerate_triangulations(5).map_err(|e| e.to_string())? {
        ensure!(isomorphism(&t.quiver(), &a2).is_some(), "quiver of {t} is not A2");
        for &arc in t.arcs() {
            ensure!(flip_mutation_square(&t, arc).map_err(|e| e.to_string())?, "square fails at {t}, {arc:?}");
            squares += 1;
        }
    }
    ensure!(squares == 10, "{squares} squares");
    let report = compare_exchange_graphs(5).map_err(|e| e.to_string())?.report();
    ensure!(report == "isomorphic: 5-cycle", "{report}");
    let elapsed = start.elapsed();
    within(elapsed, Duration::from_secs(1))?;
    Ok(format!("{report}, {elapsed:?}"))
}

const POINTS: [(i64, i64); 8] = [(1, 1), (0, 1), (-1, 1), (-1, 0), (2, 1), (-2, 1), (1, 2), (-1, 2)];

fn exact(values: &[(i64, i64)]) -> CentralCharge<Rational64> {
    CentralCharge::new(values.iter().map(|&(x, y)| (Rational64::from(x), Rational64::from(y))).collect()).unwrap()
}

fn hn_equivalence() -> Outcome {
    let start = Instant::now();
    let mut charges2 = Vec::new();
    for a in POINTS {
        for b in POINTS {
            charges2.push(exact(&[a, b]));
        }
    }
    let mut charges3 = Vec::new();
    for a in &POINTS[..4] {
        for b in &POINTS[..4] {
            for c in &POINTS[..4] {
                charges3.push(exact(&[*a, *b, *c]));
            }
        }
    }
    let mut compared = 0;
    let sets = [
        (a2_reps(2), &charges2),
        (a2_reps(3), &charges2),
        (three_cycle_reps(2), &charges3),
        (three_cycle_reps(3), &charges3),
    ];
    for (reps, charges) in &sets {
        for v in reps {
            for z in charges.iter() {
                let fast = hn_filtration(v, z);
                let slow = hn_oracle(v, z);
                ensure!(fast == slow, "dims {:?}, Z = {:?}: {fast:?} vs {slow:?}", v.dims(), z.values());
                ensure!(fast.is_ok(), "dims {:?}: {:?}", v.dims(), fast);
                compared += 1;
            }
        }
    }
    let elapsed = start.elapsed();
    within(elapsed, Duration::from_secs(60))?;
    Ok(format!("{compared} comparisons, {} + {} charges, {elapsed:?}", charges2.len(), charges3.len()))
}

/// Phase of `z` lifted to the representative nearest `target`.
fn lift_near(z: Complex64, target: f64) -> f64 {
    let phi = phase_of(z.re, z.im);
    phi + 2.0 * ((target - phi) / 2.0).round()
}

fn metric_identity() -> Outcome {
    let start = Instant::now();
    let h0 = Heart::standard(QuiverWithPotential::linear_a(2));
    let sigma = float_sigma(&h0, &[(1.0, 0.62), (1.4, 0.27)]);
    // objects of the heart's own module category
    let objects: Vec<Vec<quiverstab::rep::HnFactor>> = reps_up_to_2x2(&a2_opposite(), 2)
        .iter()
        .map(|v| hn_filtration(v, sigma.charge()).map_err(|e| e.to_string()))
        .collect::<Result<_, _>>()?;
    let mut rng = rand::rngs::StdRng::seed_from_u64(0x5eed);
    let mut worst: f64 = 0.0;
    for _ in 0..100 {
        let lambda = loop {
            let l = Complex64::new(rng.gen_range(-3.0..3.0), rng.gen_range(-3.0..3.0));
            if l.norm() <= 3.0 {
                break l;
            }
        };
        let acted = c_action(&sigma, lambda).map_err(|e| e.to_string())?.sigma;
        let mut probe = Vec::new();
        for factors in &objects {
            let before = HnData::from_factors(factors, sigma.charge()).map_err(|e| e.to_string())?;
            // the same factors under λ.σ, read off the acted heart and charge
            let mut phases = Vec::new();
            let mut mass = 0.0;
            for f in factors {
                let cls: Vec<i64> = f.class.iter().map(|&x| x as i64).collect();
                let (re, im) = acted.charge_of(&cls).map_err(|e| e.to_string())?;
                let z = Complex64::new(re, im);
                let phi = lift_near(z, f.phase - lambda.re);
                let k = phi.ceil() as i64 - 1;
                let coords = acted.heart().coordinates(&cls).map_err(|e| e.to_string())?;
                let sign = if k.rem_euclid(2) == 0 { 1 } else { -1 };
                ensure!(
                    coords.iter().all(|&c| c * sign >= 0),
                    "λ = {lambda}: factor {cls:?} of phase {phi} is not in the acted heart shifted by {k}"
                );
                phases.push(phi);
                mass += z.norm();
            }
            let after = HnData {
                phi_plus: phases[0],
                phi_minus: phases[phases.len() - 1],
                mass,
            };
            for shift in -2..=2 {
                probe.push(ProbeEntry {
                    sigma1: before.shifted(shift),
                    sigma2: after.shifted(shift),
                });
            }
        }
        let d = stab_metric(&probe).map_err(|e| e.to_string())?;
        let want = lambda.re.abs().max(std::f64::consts::PI * lambda.im.abs());
        worst = worst.max((d - want).abs());
        ensure!((d - want).abs() <= 1e-9, "λ = {lambda}: d = {d}, expected {want}");
    }
    let elapsed = start.elapsed();
    within(elapsed, Duration::from_secs(1))?;
    Ok(format!("max deviation {worst:.1e}, {elapsed:?}"))
}

fn support() -> Outcome {
    let z = exact(&[(0, 1), (0, 1)]);
    let report = support_constant(&z, &[vec![1, 0], vec![0, 1], vec![1, 1]], Norm::Euclidean)
        .map_err(|e| e.to_string())?;
    ensure!(report.squared == Rational64::from(1), "squared constant {}", report.squared);
    ensure!(report.constant == 1.0, "constant {}", report.constant);
    Ok("c = 1".into())
}

/// `½ B(3/4, 3/2)`.
const HALF_BETA: f64 = 0.479_256_093_894_236_882_975_968_996_912;

fn periods() -> Outcome {
    let start = Instant::now();
    let quad = PolynomialQuadDifferential::parse("z^2 - 1").map_err(|e| e.to_string())?;
    let v = period(&quad, 0, 1).map_err(|e| e.to_string())?;
    ensure!((v.norm() - std::f64::consts::FRAC_PI_2).abs() <= 1e-10, "|period| = {}", v.norm());
    let cubic = PolynomialQuadDifferential::parse("z^3 - z").map_err(|e| e.to_string())?;
    // zeroes sorted as −1, 0, 1
    let w = period(&cubic, 1, 2).map_err(|e| e.to_string())?;
    ensure!((w.norm() - HALF_BETA).abs() <= 1e-8, "|period(0, 1)| = {}", w.norm());
    for (p, i, j) in [(&quad, 0, 1), (&cubic, 0, 1), (&cubic, 1, 2)] {
        let e = period_entry(p, i, j).map_err(|e| e.to_string())?;
        let finer = period_with_nodes(p, i, j, 2 * e.nodes + 1).map_err(|e| e.to_string())?;
        ensure!((finer - e.value).norm() <= 1e-10 * e.value.norm(), "node doubling moves ({i}, {j})");
    }
    let elapsed = start.elapsed();
    within(elapsed, Duration::from_secs(1))?;
    Ok(format!("{elapsed:?}"))
}

fn chamber_scan() -> Outcome {
    let start = Instant::now();
    const N: usize = 101;
    let im = |k: usize| -1.0 + 2.0 * k as f64 / (N - 1) as f64;
    let hearts: Vec<Heart> = (0..5u8)
        .map(|k| Heart::new(QuiverWithPotential::linear_a(2), Chamber::heart_classes(k).unwrap()).unwrap())
        .collect();
    let mut labels = vec![vec![Chamber::Wall(Wall::Multiple); N]; N];
    let mut seen = BTreeSet::new();
    for (x, row) in labels.iter_mut().enumerate() {
        for (y, slot) in row.iter_mut().enumerate() {
            let (i1, i2) = (im(x), im(y));
            let c = chamber_of(&(-1.0, i1), &(-1.0, i2), 1e-12).map_err(|e| e.to_string())?;
            *slot = c;
            if let Chamber::Heart(k) = c {
                seen.insert(k);
                // exactly one pentagon heart has all simples in the upper half-plane
                let up: Vec<usize> = (0..5)
                    .filter(|&h| hearts[h].classes().iter().all(|c| c[0] as f64 * i1 + c[1] as f64 * i2 > 0.0))
                    .collect();
                ensure!(up == vec![k as usize], "({i1}, {i2}) labelled H{k}, upper hearts {up:?}");
            }
        }
    }
    ensure!(seen.len() == 5, "regions {seen:?}");

    // off-wall neighbours agree
    for x in 0..N {
        for y in 0..N {
            for (u, v) in [(x + 1, y), (x, y + 1)] {
                if u < N && v < N {
                    if let (Chamber::Heart(a), Chamber::Heart(b)) = (labels[x][y], labels[u][v]) {
                        ensure!(a == b, "H{a} next to H{b} at ({x}, {y})");
                    }
                }
            }
        }
    }

    // crossing a wall is a backward tilt, up to the twist at the crossing simple
    let mut crossings = 0;
    for x in 1..N - 1 {
        for y in 1..N - 1 {
            let (a, b) = match labels[x][y] {
                Chamber::Wall(Wall::S2) => ((x, y - 1), (x, y + 1)),
                Chamber::Wall(Wall::S1) | Chamber::Wall(Wall::E) => ((x - 1, y), (x + 1, y)),
                _ => continue,
            };
            for (from, to) in [(a, b), (b, a)] {
                let (Chamber::Heart(hf), Chamber::Heart(ht)) = (labels[from.0][from.1], labels[to.0][to.1]) else {
                    continue;
                };
                let h = &hearts[hf as usize];
                let (i1, i2) = (im(to.0), im(to.1));
                let leaving: Vec<usize> = (0..2)
                    .filter(|&s| {
                        let c = &h.classes()[s];
                        c[0] as f64 * i1 + c[1] as f64 * i2 < 0.0
                    })
                    .collect();
                ensure!(leaving.len() == 1, "H{hf} → H{ht}: simples leaving {leaving:?}");
                let s = leaving[0];
                let crossed = cross_wall(h, s).map_err(|e| e.to_string())?;
                let twisted = crossed.twist_heart(s, &crossed).map_err(|e| e.to_string())?;
                let target = &hearts[ht as usize];
                ensure!(
                    target.same_classes(&crossed) || target.same_classes(&twisted),
                    "H{hf} → H{ht} across S{}: backward tilt gives {:?}",
                    s + 1,
                    crossed.classes()
                );
                crossings += 1;
            }
        }
    }
    ensure!(crossings > 0, "no crossings checked");
    let elapsed = start.elapsed();
    within(elapsed, Duration::from_secs(5))?;
    Ok(format!("{crossings} crossings, {elapsed:?}"))
}

fn compatibility() -> Outcome {
    ensure!(decoration_count(0, &[5], 1) == Some(3), "decoration count {:?}", decoration_count(0, &[5], 1));
    for r in 1..=5 {
        let ok = MarkedSurfaceData::new(0, vec![5], vec![1; r]).map_err(|e| e.to_string())?.check_compatibility();
        ensure!(ok == (r == 3), "r = {r} compatibility {ok}");
    }
    Ok("r = 3".into())
}

fn run_props<S: Strategy>(name: &str, strategy: S, check: impl Fn(S::Value) -> Check) -> Result<(), String> {
    let config = Config {
        cases: 64,
        failure_persistence: None,
        ..Config::default()
    };
    let mut runner = TestRunner::new_with_rng(config, TestRng::deterministic_rng(RngAlgorithm::ChaCha));
    runner
        .run(&strategy, |v| check(v).map_err(TestCaseError::fail))
        .map_err(|e| format!("{name}: {e}"))
}

fn cli_determinism() -> Result<(), String> {
    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    let seed = dir.path().join("seed.json");
    let heart = Heart::standard(QuiverWithPotential::three_cycle());
    std::fs::write(&seed, quiverstab::io::heart_to_json(&heart)).map_err(|e| e.to_string())?;
    let seed = seed.to_str().unwrap().to_string();
    let runs: [Vec<&str>; 3] = [
        vec!["exchange-graph", "--seed", &seed, "--depth", "4"],
        vec!["chambers", "--grid", "-2:2:31", "-2:2:31"],
        vec!["surface", "flip-graph", "--m", "7"],
    ];
    for args in &runs {
        let mut outputs = Vec::new();
        for threads in ["1", "4"] {
            let out = Command::new(env!("CARGO_BIN_EXE_quiverstab"))
                .args(args)
                .env("RAYON_NUM_THREADS", threads)
                .output()
                .map_err(|e| e.to_string())?;
            if !out.status.success() {
                return Err(format!("{args:?} failed: {}", String::from_utf8_lossy(&out.stderr)));
            }
            outputs.push(out.stdout);
        }
        if outputs[0] != outputs[1] {
            return Err(format!("{args:?} differs across thread counts"));
        }
    }
    Ok(())
}

fn property_suites() -> Outcome {
    let start = Instant::now();
    let steps = || prop::collection::vec((0usize..3, any::<bool>()), 0..7);
    run_props("tilt involution", (0usize..3, steps(), 0usize..3), |(s, p, i)| {
        tilt_involution(&walk(&seeds()[s], &p)?, i)
    })?;
    run_props("determinant", (0usize..3, steps()), |(s, p)| determinant_unit(&walk(&seeds()[s], &p)?))?;
    run_props(
        "Euler form",
        (0usize..3, steps(), prop::collection::vec(-3i64..=3, 3), prop::collection::vec(-3i64..=3, 3)),
        |(s, p, x, y)| {
            let h = walk(&seeds()[s], &p)?;
            euler_laws(&h, &x[..h.rank()], &y[..h.rank()])
        },
    )?;
    let reps = a2_reps(2);
    run_props(
        "see-saw",
        (0..reps.len(), prop::sample::select(POINTS.to_vec()), prop::sample::select(POINTS.to_vec())),
        |(k, a, b)| see_saw(&reps[k], &exact(&[a, b])),
    )?;
    run_props("flip involution", (4usize..=9, any::<usize>(), any::<usize>()), |(m, w, a)| {
        flip_involution(m, w, a)
    })?;
    let corpus = ginzburg_corpus();
    for qp in &corpus {
        d_squared_zero(qp).map_err(|e| format!("d∘d: {e}"))?;
    }
    run_props("d∘d after mutation", (0..corpus.len(), prop::collection::vec(0usize..4, 0..3)), |(k, m)| {
        d_squared_zero(&mutated(&corpus[k], &m))
    })?;
    cli_determinism()?;
    Ok(format!("{:?}", start.elapsed()))
}

fn main() {
    let criteria: [(&str, fn() -> Outcome); 10] = [
        ("mutation reproduction", mutation),
        ("pentagon", pentagon),
        ("surface duality", surface_duality),
        ("HN oracle equivalence", hn_equivalence),
        ("metric identity", metric_identity),
        ("support constant", support),
        ("periods", periods),
        ("chamber scan", chamber_scan),
        ("compatibility arithmetic", compatibility),
        ("property suites", property_suites),
    ];
    let mut failed = 0;
    for (k, (name, check)) in criteria.iter().enumerate() {
        match check() {
            Ok(detail) => println!("PASS {:>2} {name}: {detail}", k + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL {:>2} {name}: {why}", k + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
