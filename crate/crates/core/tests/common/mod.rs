//! Checks shared by the property suite and the acceptance harness. Each
//! returns `Err` with a description of the first violation.
#![allow(dead_code)]

use std::cmp::Ordering;

use num_complex::Complex64;
use num_rational::Rational64;

use quiverstab::heart::{c_action, stab_metric, Heart, HnData, ProbeEntry, StabilityCondition, TiltDirection};
use quiverstab::periods::{PeriodError, PeriodTable, PolynomialQuadDifferential};
use quiverstab::qp::{canonical_rotation, ginzburg_graded_quiver, mutate, Arrow, Quiver, QuiverWithPotential};
use quiverstab::rep::{
    all_representations, hn_filtration, hom_dimension, is_semistable, CentralCharge, Representation, SubrepLattice,
};
use quiverstab::surface::{enumerate_triangulations, DiscTriangulation};

pub type Check = Result<(), String>;

macro_rules! ensure {
    ($cond:expr, $($fmt:tt)+) => {
        if !$cond {
            return Err(format!($($fmt)+));
        }
    };
}

pub fn seeds() -> Vec<Heart> {
    vec![
        Heart::standard(QuiverWithPotential::linear_a(2)),
        Heart::standard(QuiverWithPotential::linear_a(3)),
        Heart::standard(QuiverWithPotential::three_cycle()),
    ]
}

/// Follows a sequence of `(simple, forward?)` tilts, indices taken mod rank.
pub fn walk(seed: &Heart, steps: &[(usize, bool)]) -> Result<Heart, String> {
    let mut h = seed.clone();
    for &(i, fwd) in steps {
        let dir = if fwd { TiltDirection::Forward } else { TiltDirection::Backward };
        h = h.simple_tilt(i % h.rank(), dir).map_err(|e| e.to_string())?;
    }
    Ok(h)
}

pub fn tilt_involution(h: &Heart, i: usize) -> Check {
    let i = i % h.rank();
    for (a, b) in [
        (TiltDirection::Forward, TiltDirection::Backward),
        (TiltDirection::Backward, TiltDirection::Forward),
    ] {
        let back = h
            .simple_tilt(i, a)
            .and_then(|t| t.simple_tilt(i, b))
            .map_err(|e| e.to_string())?;
        ensure!(back.classes() == h.classes(), "{a} then {b} at S{} moved {:?}", i + 1, h.classes());
        ensure!(back.key() == h.key(), "quiver changed after {a}/{b} at S{}", i + 1);
    }
    Ok(())
}

pub fn determinant_unit(h: &Heart) -> Check {
    ensure!(h.determinant().abs() == 1, "determinant {} for {:?}", h.determinant(), h.classes());
    Ok(())
}

pub fn euler_laws(h: &Heart, x: &[i64], y: &[i64]) -> Check {
    let e = |h: &Heart, a: &[i64], b: &[i64]| h.euler(a, b).map_err(|e| e.to_string());
    ensure!(e(h, x, y)? == -e(h, y, x)?, "χ not antisymmetric on {x:?}, {y:?}");
    for i in 0..h.rank() {
        let tx = h.sph_twist_class_action(i, x).map_err(|e| e.to_string())?;
        let ty = h.sph_twist_class_action(i, y).map_err(|e| e.to_string())?;
        ensure!(e(h, &tx, &ty)? == e(h, x, y)?, "twist at S{} changes χ({x:?}, {y:?})", i + 1);
        let back = h.sph_untwist_class_action(i, &tx).map_err(|e| e.to_string())?;
        ensure!(back == x, "untwist does not invert twist at S{}", i + 1);
    }
    Ok(())
}

pub fn flip_involution(m: usize, which: usize, arc: usize) -> Check {
    let all = enumerate_triangulations(m).map_err(|e| e.to_string())?;
    let t = &all[which % all.len()];
    let Some(&a) = t.arcs().iter().nth(arc % t.arcs().len().max(1)) else {
        return Ok(());
    };
    let (f, new) = t.flip(a).map_err(|e| e.to_string())?;
    ensure!(f != *t, "flip of {a:?} fixed {t}");
    let (back, old) = f.flip(new).map_err(|e| e.to_string())?;
    ensure!(back == *t && old == a, "flipping {a:?} twice in {t} gave {back}");
    Ok(())
}

/// Quivers with potential used for the Ginzburg checks.
pub fn ginzburg_corpus() -> Vec<QuiverWithPotential> {
    let mut out = vec![
        QuiverWithPotential::linear_a(2),
        QuiverWithPotential::linear_a(3),
        QuiverWithPotential::three_cycle(),
    ];
    for m in 4..=7 {
        out.extend(enumerate_triangulations(m).unwrap().iter().take(4).map(DiscTriangulation::quiver));
    }
    out
}

pub fn mutated(qp: &QuiverWithPotential, steps: &[usize]) -> QuiverWithPotential {
    let mut qp = qp.clone();
    for &k in steps {
        let v = qp.quiver().vertices()[k % qp.quiver().len()].clone();
        match mutate(&qp, &v) {
            Ok(next) => qp = next,
            Err(_) => break,
        }
    }
    qp
}

pub fn d_squared_zero(qp: &QuiverWithPotential) -> Check {
    let g = ginzburg_graded_quiver(qp, 3).map_err(|e| e.to_string())?;
    for a in g.arrows() {
        let d = g.differential(&a.id).ok_or_else(|| format!("no differential for {}", a.id))?;
        let dd = g.apply(d);
        ensure!(dd.is_zero(), "d(d {}) = {dd}", a.id);
    }
    Ok(())
}

pub fn canonical_rotation_law(word: &[String], k: usize) -> Check {
    let n = word.len().max(1);
    let rotated: Vec<String> = word[k % n..].iter().chain(&word[..k % n]).cloned().collect();
    let c = canonical_rotation(word);
    ensure!(canonical_rotation(&rotated) == c, "rotation by {k} changes canonical form of {word:?}");
    ensure!(canonical_rotation(&c) == c, "canonical form is not idempotent");
    Ok(())
}

/// Every representation of linear `A₂` with dimension vector at most `(2, 2)`.
pub fn a2_reps(p: u32) -> Vec<Representation> {
    reps_up_to_2x2(&QuiverWithPotential::linear_a(2), p)
}

/// `A₂` with its arrow reversed. Its module category is the one whose
/// Ext-quiver drives the class-level tilt rule of the standard A₂ heart.
pub fn a2_opposite() -> QuiverWithPotential {
    let q = Quiver::new(vec!["1".into(), "2".into()], vec![Arrow::new("a", "2", "1")]).unwrap();
    QuiverWithPotential::without_potential(q)
}

pub fn reps_up_to_2x2(qp: &QuiverWithPotential, p: u32) -> Vec<Representation> {
    let mut out = Vec::new();
    for d1 in 0..=2 {
        for d2 in 0..=2 {
            if d1 + d2 > 0 {
                out.extend(all_representations(qp, p, &[d1, d2]).unwrap());
            }
        }
    }
    out
}

/// Every representation of the 3-cycle with `W = abc` and dimension at most `(1, 1, 1)`.
pub fn three_cycle_reps(p: u32) -> Vec<Representation> {
    let qp = QuiverWithPotential::three_cycle();
    let mut out = Vec::new();
    for code in 1..8usize {
        let dims: Vec<usize> = (0..3).map(|k| (code >> k) & 1).collect();
        out.extend(all_representations(&qp, p, &dims).unwrap());
    }
    out
}

pub fn class(v: &Representation) -> Vec<i64> {
    v.dims().iter().map(|&d| d as i64).collect()
}

pub fn see_saw(v: &Representation, z: &CentralCharge<Rational64>) -> Check {
    let lattice = SubrepLattice::new(v).map_err(|e| e.to_string())?;
    let e = class(v);
    for s in lattice.subreps() {
        let a: Vec<i64> = s.dims().iter().map(|&d| d as i64).collect();
        if a.iter().all(|&x| x == 0) || a == e {
            continue;
        }
        let b: Vec<i64> = e.iter().zip(&a).map(|(x, y)| x - y).collect();
        let left = z.cmp_phase(&a, &e).map_err(|e| e.to_string())?;
        let right = z.cmp_phase(&e, &b).map_err(|e| e.to_string())?;
        ensure!(left == right, "see-saw fails for sub {a:?} of {e:?}: {left:?} vs {right:?}");
    }
    Ok(())
}

pub fn no_maps_downward(a: &Representation, b: &Representation, z: &CentralCharge<Rational64>) -> Check {
    let ss = |v: &Representation| is_semistable(v, z).map_err(|e| e.to_string());
    if !(ss(a)? && ss(b)?) {
        return Ok(());
    }
    if z.cmp_phase(&class(a), &class(b)).map_err(|e| e.to_string())? == Ordering::Greater {
        let h = hom_dimension(a, b).map_err(|e| e.to_string())?;
        ensure!(h == 0, "Hom({:?}, {:?}) = {h} against the phase order", a.dims(), b.dims());
    }
    Ok(())
}

pub fn scale_invariance(v: &Representation, z: &CentralCharge<Rational64>, t: Rational64) -> Check {
    let f = hn_filtration(v, z).map_err(|e| e.to_string())?;
    let g = hn_filtration(v, &z.scaled(&t)).map_err(|e| e.to_string())?;
    ensure!(f.len() == g.len(), "scaling by {t} changes the number of HN factors");
    for (x, y) in f.iter().zip(&g) {
        ensure!(x.class == y.class, "scaling by {t} changes HN classes");
        ensure!((x.phase - y.phase).abs() < 1e-12, "scaling by {t} changes phases");
    }
    Ok(())
}

/// `data[k] = (object under σ₁, σ₂, σ₃)`.
pub fn metric_axioms(data: &[[HnData; 3]]) -> Check {
    let probe = |i: usize, j: usize| -> Vec<ProbeEntry> {
        data.iter()
            .map(|d| ProbeEntry {
                sigma1: d[i],
                sigma2: d[j],
            })
            .collect()
    };
    let d = |i, j| stab_metric(&probe(i, j)).map_err(|e| e.to_string());
    ensure!(d(0, 1)? == d(1, 0)?, "metric is not symmetric");
    ensure!(d(0, 0)? == 0.0, "d(σ, σ) ≠ 0");
    ensure!(d(0, 2)? <= d(0, 1)? + d(1, 2)? + 1e-12, "triangle inequality fails");
    Ok(())
}

/// A float stability condition on the standard heart with charges `r e^{iπφ}`.
pub fn float_sigma(heart: &Heart, polar: &[(f64, f64)]) -> StabilityCondition<f64> {
    let values = polar
        .iter()
        .map(|&(r, phi)| {
            let z = Complex64::from_polar(r, std::f64::consts::PI * phi);
            (z.re, z.im)
        })
        .collect();
    StabilityCondition::new(heart.clone(), CentralCharge::new(values).unwrap()).unwrap()
}

pub fn c_action_inverse(sigma: &StabilityCondition<f64>, lambda: Complex64) -> Check {
    let there = c_action(sigma, lambda).map_err(|e| e.to_string())?;
    let back = c_action(&there.sigma, -lambda).map_err(|e| e.to_string())?;
    if there.flag.is_some() || back.flag.is_some() {
        return Ok(());
    }
    ensure!(
        back.sigma.heart().key() == sigma.heart().key(),
        "λ = {lambda} then −λ gives {:?}",
        back.sigma.heart().classes()
    );
    let z0 = sigma.standard_charge().map_err(|e| e.to_string())?;
    let z1 = back.sigma.standard_charge().map_err(|e| e.to_string())?;
    for (a, b) in z0.iter().zip(&z1) {
        ensure!((a.0 - b.0).hypot(a.1 - b.1) < 1e-9, "charges drift: {a:?} vs {b:?}");
    }
    Ok(())
}

/// Scaling and rotation laws of straight-segment periods; the rotation law
/// is checked up to the sheet sign.
pub fn period_laws(a: Complex64, b: Complex64, t: f64, theta: f64) -> Check {
    let p = match PolynomialQuadDifferential::a2(a, b) {
        Ok(p) => p,
        Err(PeriodError::Degenerate) => return Ok(()),
        Err(e) => return Err(e.to_string()),
    };
    let table = PeriodTable::new(&p).map_err(|e| e.to_string())?;
    let scaled = PeriodTable::new(&p.scaled(Complex64::new(t * t, 0.0)).map_err(|e| e.to_string())?)
        .map_err(|e| e.to_string())?;
    let rotated = PeriodTable::new(&p.scaled(Complex64::from_polar(1.0, 2.0 * theta)).map_err(|e| e.to_string())?)
        .map_err(|e| e.to_string())?;
    let u = Complex64::from_polar(1.0, theta);
    for e in &table.entries {
        let tol = 1e-9 * e.value.norm().max(1.0);
        if let Some(s) = scaled.get(e.i, e.j) {
            ensure!((s - e.value * t).norm() < tol * t.max(1.0), "scaling by t² = {} fails on ({}, {})", t * t, e.i, e.j);
        }
        if let Some(r) = rotated.get(e.i, e.j) {
            let want = e.value * u;
            ensure!(
                (r - want).norm() < tol || (r + want).norm() < tol,
                "rotation by {theta} fails on ({}, {})",
                e.i,
                e.j
            );
        }
    }
    Ok(())
}
