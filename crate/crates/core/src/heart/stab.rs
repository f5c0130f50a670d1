use num_complex::Complex64;
use num_traits::Zero;

use super::{Heart, HeartError, TiltDirection};
use crate::rep::{phase_of, CentralCharge, ChargeScalar, HnFactor, RepError};

/// A heart with a central charge on its simples.
#[derive(Clone, Debug, PartialEq)]
pub struct StabilityCondition<S: ChargeScalar> {
    heart: Heart,
    z: CentralCharge<S>,
}

impl<S: ChargeScalar> StabilityCondition<S> {
    pub fn new(heart: Heart, z: CentralCharge<S>) -> Result<Self, HeartError> {
        if z.len() != heart.rank() {
            return Err(HeartError::Shape(heart.rank()));
        }
        let z = CentralCharge::with_tolerance(z.values().to_vec(), z.tolerance())?;
        Ok(Self { heart, z })
    }

    pub fn heart(&self) -> &Heart {
        &self.heart
    }

    /// Values on the heart's simples.
    pub fn charge(&self) -> &CentralCharge<S> {
        &self.z
    }

    /// Values on the standard basis `e_j`.
    pub fn standard_charge(&self) -> Result<Vec<(S, S)>, HeartError> {
        let n = self.heart.rank();
        (0..n)
            .map(|j| {
                let e: Vec<i64> = (0..n).map(|k| i64::from(j == k)).collect();
                Ok(self.z.eval(&self.heart.coordinates(&e)?)?)
            })
            .collect()
    }

    /// `Z` of a standard-basis class.
    pub fn charge_of(&self, cls: &[i64]) -> Result<(S, S), HeartError> {
        Ok(self.z.eval(&self.heart.coordinates(cls)?)?)
    }

    /// `[n].(H, Z) = (H[n], (−1)ⁿ Z)`; values on the shifted simples are unchanged.
    pub fn shift(&self, n: i64) -> Self {
        Self {
            heart: self.heart.shift(n),
            z: self.z.clone(),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ActionFlag {
    /// Several simples reached the rotation threshold together; the heart was
    /// tilted at them one at a time.
    HigherCodimensionWall,
}

#[derive(Clone, Debug, PartialEq)]
pub struct CAction {
    pub sigma: StabilityCondition<f64>,
    pub flag: Option<ActionFlag>,
}

const MAX_TILTS: usize = 1000;
const PHASE_TOL: f64 = 1e-12;

/// Lifts the phase of `z` into `(t, t + 1]`.
fn lifted_phase(z: Complex64, t: f64) -> f64 {
    let mut phi = phase_of(z.re, z.im);
    while phi <= t - PHASE_TOL {
        phi += 2.0;
    }
    while phi > t + 2.0 - PHASE_TOL {
        phi -= 2.0;
    }
    phi
}

/// `λ.(H, Z) = (H', e^{−πiλ} Z)`. With `Re λ = n + f`, `0 ≤ f < 1`, the heart
/// is rotated by tilting forward at the simple of least phase while that
/// phase is at most `f`, then shifted by `n`. `Im λ` only rescales masses, so
/// the new heart depends on `Re λ` alone.
pub fn c_action(sigma: &StabilityCondition<f64>, lambda: Complex64) -> Result<CAction, HeartError> {
    let n = lambda.re.floor();
    let f = lambda.re - n;
    let zstd: Vec<Complex64> = sigma
        .standard_charge()?
        .into_iter()
        .map(|(x, y)| Complex64::new(x, y))
        .collect();
    let eval = |cls: &[i64]| -> Complex64 {
        cls.iter()
            .zip(&zstd)
            .fold(Complex64::zero(), |acc, (&c, z)| acc + z * c as f64)
    };

    let mut heart = sigma.heart.clone();
    let mut flag = None;
    let mut t = 0.0;
    for step in 0..=MAX_TILTS {
        let phases: Vec<f64> = heart.classes().iter().map(|c| lifted_phase(eval(c), t)).collect();
        let (i, &min) = phases
            .iter()
            .enumerate()
            .min_by(|a, b| a.1.total_cmp(b.1))
            .expect("nonempty heart");
        if min > f + PHASE_TOL {
            break;
        }
        if step == MAX_TILTS {
            return Err(HeartError::ActionDiverged(MAX_TILTS));
        }
        if phases.iter().filter(|&&p| (p - min).abs() <= PHASE_TOL).count() > 1 {
            flag = Some(ActionFlag::HigherCodimensionWall);
        }
        t = min;
        heart = heart.simple_tilt(i, TiltDirection::Forward)?;
    }
    let heart = heart.shift(n as i64);

    let rot = (-Complex64::i() * std::f64::consts::PI * lambda).exp();
    let values = heart
        .classes()
        .iter()
        .map(|c| {
            let z = rot * eval(c);
            (z.re, z.im)
        })
        .collect();
    let z = CentralCharge::with_tolerance(values, sigma.z.tolerance().max(1e-9))?;
    Ok(CAction {
        sigma: StabilityCondition { heart, z },
        flag,
    })
}

/// Phases of the first and last HN factors and the mass of an object.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct HnData {
    pub phi_plus: f64,
    pub phi_minus: f64,
    pub mass: f64,
}

impl HnData {
    pub fn from_factors<S: ChargeScalar>(factors: &[HnFactor], z: &CentralCharge<S>) -> Result<Self, HeartError> {
        if factors.is_empty() {
            return Err(HeartError::Metric("no HN factors".into()));
        }
        let mut mass = 0.0;
        for f in factors {
            let cls: Vec<i64> = f.class.iter().map(|&x| x as i64).collect();
            let (re, im) = z.eval(&cls)?;
            mass += re.to_f64().hypot(im.to_f64());
        }
        Ok(Self {
            phi_plus: factors[0].phase,
            phi_minus: factors[factors.len() - 1].phase,
            mass,
        })
    }

    /// Data of `E[k]`.
    pub fn shifted(&self, k: i64) -> Self {
        Self {
            phi_plus: self.phi_plus + k as f64,
            phi_minus: self.phi_minus + k as f64,
            mass: self.mass,
        }
    }

    /// Data of the same object for `λ.σ`.
    pub fn acted(&self, lambda: Complex64) -> Self {
        Self {
            phi_plus: self.phi_plus - lambda.re,
            phi_minus: self.phi_minus - lambda.re,
            mass: self.mass * (std::f64::consts::PI * lambda.im).exp(),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ProbeEntry {
    pub sigma1: HnData,
    pub sigma2: HnData,
}

/// `sup_E max{|φ⁺₂ − φ⁺₁|, |φ⁻₂ − φ⁻₁|, |log(m₂/m₁)|}` over the probe.
pub fn stab_metric(probe: &[ProbeEntry]) -> Result<f64, HeartError> {
    if probe.is_empty() {
        return Err(HeartError::Metric("empty probe".into()));
    }
    let mut d: f64 = 0.0;
    for e in probe {
        let (m1, m2) = (e.sigma1.mass, e.sigma2.mass);
        if !(m1 > 0.0 && m2 > 0.0 && m1.is_finite() && m2.is_finite()) {
            return Err(HeartError::Metric(format!("invalid masses {m1}, {m2}")));
        }
        d = d
            .max((e.sigma2.phi_plus - e.sigma1.phi_plus).abs())
            .max((e.sigma2.phi_minus - e.sigma1.phi_minus).abs())
            .max((m2.ln() - m1.ln()).abs());
    }
    Ok(d)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Norm {
    Euclidean,
    Sup,
}

#[derive(Clone, Debug, PartialEq)]
pub struct SupportReport<S> {
    /// `min |Z(γ)|² / ‖γ‖²`, exact on the rational backend.
    pub squared: S,
    pub constant: f64,
    /// `|Z(γ)| − c‖γ‖` per class; all non-negative.
    pub diagnostics: Vec<f64>,
}

/// Best constant `c` with `|Z(γ)| ≥ c‖γ‖` over the given classes.
pub fn support_constant<S: ChargeScalar>(
    z: &CentralCharge<S>,
    classes: &[Vec<i64>],
    norm: Norm,
) -> Result<SupportReport<S>, HeartError> {
    if classes.is_empty() {
        return Err(HeartError::Metric("empty class list".into()));
    }
    let norm_sq = |c: &[i64]| -> i64 {
        match norm {
            Norm::Euclidean => c.iter().map(|x| x * x).sum(),
            Norm::Sup => c.iter().map(|x| x * x).max().unwrap_or(0),
        }
    };
    let mut best: Option<S> = None;
    let mut abs_z = Vec::with_capacity(classes.len());
    for c in classes {
        let n2 = norm_sq(c);
        if n2 == 0 {
            return Err(RepError::ZeroClass.into());
        }
        let (re, im) = z.eval(c)?;
        let m2 = re.clone() * re + im.clone() * im;
        abs_z.push((m2.to_f64().sqrt(), (n2 as f64).sqrt()));
        let ratio = m2 / S::from_int(n2);
        if best.as_ref().is_none_or(|b| ratio < *b) {
            best = Some(ratio);
        }
    }
    let squared = best.expect("nonempty");
    let constant = squared.to_f64().sqrt();
    Ok(SupportReport {
        constant,
        diagnostics: abs_z.iter().map(|(m, n)| m - constant * n).collect(),
        squared,
    })
}
