use std::cmp::Ordering;
use std::fmt;

use nalgebra::{DMatrix, Schur};
use num_complex::Complex64;
use num_traits::Zero;

use super::PeriodError;

/// Relative scale below which zeroes count as colliding.
const COLLISION_TOL: f64 = 1e-9;

/// The quadratic differential `p(z) dz⊗dz` on the sphere for a polynomial
/// `p` with simple zeroes summing to zero. Coefficients are stored in
/// increasing degree.
#[derive(Clone, Debug, PartialEq)]
pub struct PolynomialQuadDifferential {
    coeffs: Vec<Complex64>,
    zeroes: Vec<Complex64>,
}

impl PolynomialQuadDifferential {
    pub fn new(coeffs: Vec<Complex64>) -> Result<Self, PeriodError> {
        let mut coeffs = coeffs;
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        let n = coeffs.len().saturating_sub(1);
        if n < 2 {
            return Err(PeriodError::Degree(n));
        }
        let lead = coeffs[n];
        let scale = coeffs.iter().map(|c| c.norm()).fold(0.0, f64::max) / lead.norm();
        if (coeffs[n - 1] / lead).norm() > 1e-12 * scale.max(1.0) {
            return Err(PeriodError::NotCentered);
        }
        let zeroes = roots(&coeffs)?;
        let size = zeroes.iter().map(|z| z.norm()).fold(1.0, f64::max);
        for i in 0..zeroes.len() {
            for j in i + 1..zeroes.len() {
                if (zeroes[i] - zeroes[j]).norm() <= COLLISION_TOL * size {
                    return Err(PeriodError::Degenerate);
                }
            }
        }
        Ok(Self { coeffs, zeroes })
    }

    /// `z³ + a z + b`.
    pub fn a2(a: Complex64, b: Complex64) -> Result<Self, PeriodError> {
        Self::new(vec![b, a, Complex64::zero(), Complex64::new(1.0, 0.0)])
    }

    pub fn parse(s: &str) -> Result<Self, PeriodError> {
        Self::new(parse_polynomial(s)?)
    }

    pub fn coeffs(&self) -> &[Complex64] {
        &self.coeffs
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn leading(&self) -> Complex64 {
        self.coeffs[self.degree()]
    }

    /// Zeroes sorted by real part, then imaginary part.
    pub fn zeroes(&self) -> &[Complex64] {
        &self.zeroes
    }

    pub fn eval(&self, z: Complex64) -> Complex64 {
        self.coeffs.iter().rev().fold(Complex64::zero(), |acc, c| acc * z + c)
    }

    /// `lc^{2n−2} Π_{i<j} (z_i − z_j)²`; equals `−(4a³ + 27b²)` for `z³ + az + b`.
    pub fn discriminant(&self) -> Complex64 {
        let n = self.degree() as i32;
        let mut d = self.leading().powi(2 * n - 2);
        for i in 0..self.zeroes.len() {
            for j in i + 1..self.zeroes.len() {
                d *= (self.zeroes[i] - self.zeroes[j]).powi(2);
            }
        }
        d
    }

    /// `t·p` for a complex scalar `t`.
    pub fn scaled(&self, t: Complex64) -> Result<Self, PeriodError> {
        Self::new(self.coeffs.iter().map(|c| c * t).collect())
    }
}

impl fmt::Display for PolynomialQuadDifferential {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let (negative, coeff) = if c.im == 0.0 {
                let x = c.re.abs();
                (c.re < 0.0, if x == 1.0 && k > 0 { String::new() } else { format!("{x}") })
            } else {
                (false, format!("({}{:+}i)", c.re, c.im))
            };
            match (first, negative) {
                (true, true) => f.write_str("-")?,
                (true, false) => {}
                (false, true) => f.write_str(" - ")?,
                (false, false) => f.write_str(" + ")?,
            }
            first = false;
            match k {
                0 => f.write_str(&coeff)?,
                1 => write!(f, "{coeff}z")?,
                _ => write!(f, "{coeff}z^{k}")?,
            }
        }
        Ok(())
    }
}

pub(crate) fn cmp_points(a: &Complex64, b: &Complex64) -> Ordering {
    let scale = a.norm().max(b.norm()).max(1.0);
    if (a.re - b.re).abs() > 1e-9 * scale {
        a.re.total_cmp(&b.re)
    } else {
        a.im.total_cmp(&b.im)
    }
}

/// Eigenvalues of the companion matrix by a complex Schur decomposition,
/// then a few Newton steps on `p` itself.
fn roots(coeffs: &[Complex64]) -> Result<Vec<Complex64>, PeriodError> {
    let n = coeffs.len() - 1;
    let lead = coeffs[n];
    let companion = DMatrix::from_fn(n, n, |i, j| {
        if i == 0 {
            -coeffs[n - 1 - j] / lead
        } else if i == j + 1 {
            Complex64::new(1.0, 0.0)
        } else {
            Complex64::zero()
        }
    });
    // QR iterations stall on defective companion matrices, i.e. repeated roots
    let schur = Schur::try_new(companion, 1e-15, 10_000).ok_or(PeriodError::Degenerate)?;
    let (_, t) = schur.unpack();
    let mut zs: Vec<Complex64> = (0..n).map(|i| t[(i, i)]).collect();
    let dcoeffs: Vec<Complex64> = (1..=n).map(|k| coeffs[k] * k as f64).collect();
    let horner = |cs: &[Complex64], z: Complex64| cs.iter().rev().fold(Complex64::zero(), |acc, c| acc * z + c);
    for z in zs.iter_mut() {
        for _ in 0..8 {
            let d = horner(&dcoeffs, *z);
            if d.norm() == 0.0 {
                break;
            }
            let step = horner(coeffs, *z) / d;
            if !step.is_finite() {
                break;
            }
            *z -= step;
            if step.norm() <= 1e-16 * z.norm().max(1.0) {
                break;
            }
        }
    }
    zs.sort_by(cmp_points);
    Ok(zs)
}

/// Parses sums of terms `c`, `c*z`, `cz^k`, `z^k` with real, imaginary
/// (`2i`, `i`) or parenthesised complex (`(1-2i)`) coefficients.
pub fn parse_polynomial(s: &str) -> Result<Vec<Complex64>, PeriodError> {
    let src: Vec<char> = s.chars().filter(|c| !c.is_whitespace()).collect();
    if src.is_empty() {
        return Err(PeriodError::Parse("empty polynomial".into()));
    }
    let mut p = Parser { s: &src, pos: 0 };
    let mut coeffs: Vec<Complex64> = Vec::new();
    while p.pos < src.len() {
        let sign = match p.peek() {
            Some('+') => {
                p.pos += 1;
                1.0
            }
            Some('-') => {
                p.pos += 1;
                -1.0
            }
            _ if p.pos == 0 => 1.0,
            Some(c) => return Err(PeriodError::Parse(format!("unexpected `{c}` at {}", p.pos))),
            None => unreachable!(),
        };
        let (c, k) = p.term()?;
        if coeffs.len() <= k {
            coeffs.resize(k + 1, Complex64::zero());
        }
        coeffs[k] += c * sign;
    }
    Ok(coeffs)
}

struct Parser<'a> {
    s: &'a [char],
    pos: usize,
}

impl Parser<'_> {
    fn peek(&self) -> Option<char> {
        self.s.get(self.pos).copied()
    }

    fn err(&self, what: &str) -> PeriodError {
        PeriodError::Parse(format!("{what} at position {}", self.pos))
    }

    fn number(&mut self) -> Option<f64> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit() || c == '.') {
            self.pos += 1;
        }
        if self.peek().is_some_and(|c| c == 'e' || c == 'E') {
            let save = self.pos;
            self.pos += 1;
            if self.peek().is_some_and(|c| c == '+' || c == '-') {
                self.pos += 1;
            }
            if self.peek().is_some_and(|c| c.is_ascii_digit()) {
                while self.peek().is_some_and(|c| c.is_ascii_digit()) {
                    self.pos += 1;
                }
            } else {
                self.pos = save;
            }
        }
        if self.pos == start {
            return None;
        }
        self.s[start..self.pos].iter().collect::<String>().parse().ok()
    }

    /// A real or imaginary literal: `2`, `2i`, `i`.
    fn literal(&mut self) -> Option<Complex64> {
        let x = self.number();
        if self.peek() == Some('i') {
            self.pos += 1;
            return Some(Complex64::new(0.0, x.unwrap_or(1.0)));
        }
        x.map(|x| Complex64::new(x, 0.0))
    }

    fn coefficient(&mut self) -> Result<Option<Complex64>, PeriodError> {
        if self.peek() != Some('(') {
            return Ok(self.literal());
        }
        self.pos += 1;
        let mut total = Complex64::zero();
        let mut first = true;
        loop {
            let sign = match self.peek() {
                Some('+') => {
                    self.pos += 1;
                    1.0
                }
                Some('-') => {
                    self.pos += 1;
                    -1.0
                }
                Some(')') if !first => {
                    self.pos += 1;
                    return Ok(Some(total));
                }
                _ if first => 1.0,
                _ => return Err(self.err("expected `+`, `-` or `)`")),
            };
            first = false;
            let x = self.literal().ok_or_else(|| self.err("expected a number"))?;
            total += x * sign;
        }
    }

    fn term(&mut self) -> Result<(Complex64, usize), PeriodError> {
        let coeff = self.coefficient()?;
        if coeff.is_some() && self.peek() == Some('*') {
            self.pos += 1;
        }
        if self.peek() != Some('z') {
            return coeff.map(|c| (c, 0)).ok_or_else(|| self.err("expected a term"));
        }
        self.pos += 1;
        let mut k = 1;
        if self.peek() == Some('^') {
            self.pos += 1;
            let start = self.pos;
            while self.peek().is_some_and(|c| c.is_ascii_digit()) {
                self.pos += 1;
            }
            k = self.s[start..self.pos]
                .iter()
                .collect::<String>()
                .parse()
                .map_err(|_| self.err("expected an exponent"))?;
        }
        Ok((coeff.unwrap_or(Complex64::new(1.0, 0.0)), k))
    }
}
