//! The complex plane acts on stability conditions. Acting by λ rotates the
//! charge by e^{-iπλ}, tilts the heart to match, and moves every object a
//! distance max(|Re λ|, π|Im λ|) in the generalized metric.

use num_complex::Complex64;
use quiverstab::heart::{c_action, stab_metric, Heart, HnData, ProbeEntry, StabilityCondition};
use quiverstab::qp::QuiverWithPotential;
use quiverstab::rep::CentralCharge;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let h0 = Heart::standard(QuiverWithPotential::linear_a(2));
    let polar = [(1.0f64, 0.62f64), (1.4, 0.27)];
    let z = polar
        .iter()
        .map(|&(r, phi)| {
            let w = Complex64::from_polar(r, std::f64::consts::PI * phi);
            (w.re, w.im)
        })
        .collect();
    let sigma = StabilityCondition::new(h0, CentralCharge::with_tolerance(z, 1e-9)?)?;

    // S2 and S1 with their phases and masses
    let objects = [
        HnData { phi_plus: 0.27, phi_minus: 0.27, mass: 1.4 },
        HnData { phi_plus: 0.62, phi_minus: 0.62, mass: 1.0 },
    ];

    for lambda in [
        Complex64::new(0.3, 0.0),
        Complex64::new(0.5, 0.0),
        Complex64::new(-1.2, 0.1),
        Complex64::new(0.0, 0.4),
    ] {
        let acted = c_action(&sigma, lambda)?;
        let probe: Vec<ProbeEntry> = objects
            .iter()
            .map(|d| ProbeEntry { sigma1: *d, sigma2: d.acted(lambda) })
            .collect();
        println!(
            "λ = {lambda:>9}: heart {:?}, distance {:.6}, expected {:.6}{}",
            acted.sigma.heart().classes(),
            stab_metric(&probe)?,
            lambda.re.abs().max(std::f64::consts::PI * lambda.im.abs()),
            if acted.flag.is_some() { " (on a wall)" } else { "" }
        );
    }
    Ok(())
}
