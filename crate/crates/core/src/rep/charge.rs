use std::cmp::Ordering;
use std::fmt::Debug;

use num_rational::Rational64;
use num_traits::{Signed, ToPrimitive};

use super::RepError;

/// Default tolerance of the floating-point backend.
pub const FLOAT_TOLERANCE: f64 = 1e-12;

/// Scalars a central charge can be written in. `Rational64` is exact;
/// `f64` decides signs up to a relative tolerance.
pub trait ChargeScalar: Clone + Debug + PartialOrd + Send + Sync + num_traits::Num + Signed {
    fn from_int(n: i64) -> Self;
    fn to_f64(&self) -> f64;
    /// Sign of `x`, where `scale` is the magnitude `x` should be measured against.
    fn sign(x: &Self, scale: &Self, tol: f64) -> Ordering;
}

impl ChargeScalar for Rational64 {
    fn from_int(n: i64) -> Self {
        Rational64::from_integer(n)
    }

    fn to_f64(&self) -> f64 {
        ToPrimitive::to_f64(self).unwrap_or(f64::NAN)
    }

    fn sign(x: &Self, _scale: &Self, _tol: f64) -> Ordering {
        x.cmp(&Rational64::from_integer(0))
    }
}

impl ChargeScalar for f64 {
    fn from_int(n: i64) -> Self {
        n as f64
    }

    fn to_f64(&self) -> f64 {
        *self
    }

    fn sign(x: &Self, scale: &Self, tol: f64) -> Ordering {
        if x.abs() <= tol * scale.abs().max(1.0) {
            Ordering::Equal
        } else if *x > 0.0 {
            Ordering::Greater
        } else {
            Ordering::Less
        }
    }
}

/// Values `Z(S_i)` on the simples of a heart, each in the closed upper
/// half-plane `H̄ = {Im > 0} ∪ {Im = 0, Re < 0}`.
#[derive(Clone, Debug, PartialEq)]
pub struct CentralCharge<S: ChargeScalar> {
    values: Vec<(S, S)>,
    tol: f64,
}

impl<S: ChargeScalar> CentralCharge<S> {
    pub fn new(values: Vec<(S, S)>) -> Result<Self, RepError> {
        Self::with_tolerance(values, FLOAT_TOLERANCE)
    }

    pub fn with_tolerance(values: Vec<(S, S)>, tol: f64) -> Result<Self, RepError> {
        let z = Self { values, tol };
        for i in 0..z.values.len() {
            if !z.in_upper_half_plane(&z.values[i]) {
                return Err(RepError::NotInUpperHalfPlane(i));
            }
        }
        Ok(z)
    }

    /// Builds a charge without the `H̄` check, for values on classes outside
    /// the heart (rotated or shifted charges).
    pub fn unchecked(values: Vec<(S, S)>, tol: f64) -> Self {
        Self { values, tol }
    }

    fn in_upper_half_plane(&self, (re, im): &(S, S)) -> bool {
        let scale = re.abs() + im.abs();
        match S::sign(im, &scale, self.tol) {
            Ordering::Greater => true,
            Ordering::Equal => S::sign(re, &scale, self.tol) == Ordering::Less,
            Ordering::Less => false,
        }
    }

    pub fn values(&self) -> &[(S, S)] {
        &self.values
    }

    pub fn tolerance(&self) -> f64 {
        self.tol
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// `Z(cls) = Σ cls_i Z(S_i)`.
    pub fn eval(&self, cls: &[i64]) -> Result<(S, S), RepError> {
        if cls.len() != self.values.len() {
            return Err(RepError::Shape(format!(
                "class has {} entries, charge has {}",
                cls.len(),
                self.values.len()
            )));
        }
        let mut re = S::zero();
        let mut im = S::zero();
        for (c, (x, y)) in cls.iter().zip(&self.values) {
            let k = S::from_int(*c);
            re = re + k.clone() * x.clone();
            im = im + k * y.clone();
        }
        Ok((re, im))
    }

    fn heart_value(&self, cls: &[i64]) -> Result<(S, S), RepError> {
        if cls.iter().all(|&c| c == 0) {
            return Err(RepError::ZeroClass);
        }
        if cls.iter().any(|&c| c < 0) {
            return Err(RepError::MixedSigns(cls.to_vec()));
        }
        self.eval(cls)
    }

    /// Phase in `(0, 1]` of a nonzero non-negative class.
    pub fn phase(&self, cls: &[i64]) -> Result<f64, RepError> {
        let (re, im) = self.heart_value(cls)?;
        Ok(phase_of(re.to_f64(), im.to_f64()))
    }

    /// Compares phases of two heart classes through the sign of
    /// `Re₁·Im₂ − Im₁·Re₂`, exactly on the rational backend.
    pub fn cmp_phase(&self, a: &[i64], b: &[i64]) -> Result<Ordering, RepError> {
        let (r1, i1) = self.heart_value(a)?;
        let (r2, i2) = self.heart_value(b)?;
        let cross = r1.clone() * i2.clone() - i1.clone() * r2.clone();
        let scale = (r1.abs() + i1.abs()) * (r2.abs() + i2.abs());
        Ok(S::sign(&cross, &scale, self.tol).reverse())
    }

    /// True iff `Z(α)/Z(β)` is real.
    pub fn marginal_wall_check(&self, alpha: &[i64], beta: &[i64]) -> Result<bool, RepError> {
        if alpha.iter().all(|&c| c == 0) || beta.iter().all(|&c| c == 0) {
            return Err(RepError::ZeroClass);
        }
        let proportional = (0..alpha.len())
            .all(|i| (0..alpha.len()).all(|j| alpha[i] * beta[j] == alpha[j] * beta[i]));
        if proportional {
            return Err(RepError::Proportional);
        }
        let (r1, i1) = self.eval(alpha)?;
        let (r2, i2) = self.eval(beta)?;
        let scale2 = r2.abs() + i2.abs();
        if S::sign(&scale2, &S::one(), self.tol) == Ordering::Equal {
            return Err(RepError::ZeroCharge);
        }
        let cross = r1.clone() * i2 - i1 * r2;
        let scale = (r1.abs() + scale2.clone()) * scale2;
        Ok(S::sign(&cross, &scale, self.tol) == Ordering::Equal)
    }

    pub fn to_float(&self) -> CentralCharge<f64> {
        CentralCharge {
            values: self.values.iter().map(|(x, y)| (x.to_f64(), y.to_f64())).collect(),
            tol: self.tol,
        }
    }

    /// Multiplies every value by a positive scalar.
    pub fn scaled(&self, t: &S) -> Self {
        Self {
            values: self
                .values
                .iter()
                .map(|(x, y)| (x.clone() * t.clone(), y.clone() * t.clone()))
                .collect(),
            tol: self.tol,
        }
    }
}

/// `(1/π)·arg(re + i·im)`, with the negative real axis at phase 1.
pub fn phase_of(re: f64, im: f64) -> f64 {
    if im == 0.0 && re < 0.0 {
        1.0
    } else {
        im.atan2(re) / std::f64::consts::PI
    }
}

/// `Z(S_i) = −c(S_i) + i·r(S_i)`, the central charge of a slope function.
pub fn z_from_slope(c: &[i64], r: &[i64]) -> Result<CentralCharge<Rational64>, RepError> {
    if c.len() != r.len() {
        return Err(RepError::Shape("c and r have different lengths".into()));
    }
    if let Some(i) = r.iter().position(|&x| x <= 0) {
        return Err(RepError::NonPositiveRank(i));
    }
    CentralCharge::new(
        c.iter()
            .zip(r)
            .map(|(&ci, &ri)| (Rational64::from_integer(-ci), Rational64::from_integer(ri)))
            .collect(),
    )
}
