use num_complex::Complex64;
use num_traits::Zero;

use super::{PeriodError, PolynomialQuadDifferential};

const FIRST_NODES: usize = 32;
pub const MAX_NODES: usize = 1 << 16;
/// Relative change between successive node doublings accepted as converged.
const CONVERGENCE: f64 = 1e-13;

/// A period between two zeroes together with the branch used for it.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct PeriodEntry {
    pub i: usize,
    pub j: usize,
    pub value: Complex64,
    /// Principal square root of `p(z)/((z−zᵢ)(z−zⱼ))` at the segment midpoint.
    pub branch: Complex64,
    pub nodes: usize,
}

/// Straight-segment periods for every pair `i < j` of zeroes; pairs whose
/// segment passes through a third zero are recorded as blocked.
#[derive(Clone, Debug)]
pub struct PeriodTable {
    pub zeroes: Vec<Complex64>,
    pub entries: Vec<PeriodEntry>,
    pub blocked: Vec<(usize, usize)>,
}

impl PeriodTable {
    pub fn new(p: &PolynomialQuadDifferential) -> Result<Self, PeriodError> {
        let n = p.zeroes().len();
        let mut entries = Vec::new();
        let mut blocked = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                match period_entry(p, i, j) {
                    Ok(e) => entries.push(e),
                    Err(PeriodError::Blocked { .. }) => blocked.push((i, j)),
                    Err(e) => return Err(e),
                }
            }
        }
        Ok(Self {
            zeroes: p.zeroes().to_vec(),
            entries,
            blocked,
        })
    }

    /// `∫` from zero `i` to zero `j`; negated for `i > j`.
    pub fn get(&self, i: usize, j: usize) -> Option<Complex64> {
        let (a, b, sign) = if i < j { (i, j, 1.0) } else { (j, i, -1.0) };
        self.entries.iter().find(|e| (e.i, e.j) == (a, b)).map(|e| e.value * sign)
    }
}

/// `∫ √p dz` along the straight segment from zero `i` to zero `j`.
pub fn period(p: &PolynomialQuadDifferential, i: usize, j: usize) -> Result<Complex64, PeriodError> {
    if i > j {
        return period(p, j, i).map(|v| -v);
    }
    period_entry(p, i, j).map(|e| e.value)
}

pub fn period_with_nodes(
    p: &PolynomialQuadDifferential,
    i: usize,
    j: usize,
    nodes: usize,
) -> Result<Complex64, PeriodError> {
    if i > j {
        return period_with_nodes(p, j, i, nodes).map(|v| -v);
    }
    let seg = Segment::new(p, i, j)?;
    Ok(seg.integrate(nodes))
}

pub fn period_entry(p: &PolynomialQuadDifferential, i: usize, j: usize) -> Result<PeriodEntry, PeriodError> {
    if i > j {
        let e = period_entry(p, j, i)?;
        return Ok(PeriodEntry {
            i,
            j,
            value: -e.value,
            ..e
        });
    }
    let seg = Segment::new(p, i, j)?;
    let mut nodes = FIRST_NODES;
    let mut prev = seg.integrate(nodes);
    loop {
        let next_nodes = 2 * nodes + 1;
        if next_nodes > MAX_NODES {
            return Err(PeriodError::NotConverged(i, j));
        }
        let next = seg.integrate(next_nodes);
        if (next - prev).norm() <= CONVERGENCE * next.norm().max(1.0) {
            return Ok(PeriodEntry {
                i,
                j,
                value: next,
                branch: seg.branch,
                nodes: next_nodes,
            });
        }
        prev = next;
        nodes = next_nodes;
    }
}

/// `z(t) = m + h t` from `zᵢ` (`t = −1`) to `zⱼ` (`t = 1`), with
/// `p = −h²(1 − t²)·r(z)` and `√r` continued from its midpoint value.
struct Segment {
    mid: Complex64,
    half: Complex64,
    branch: Complex64,
    others: Vec<Complex64>,
}

impl Segment {
    fn new(p: &PolynomialQuadDifferential, i: usize, j: usize) -> Result<Self, PeriodError> {
        let zs = p.zeroes();
        if i == j || j >= zs.len() {
            return Err(PeriodError::Index(i, j));
        }
        let (a, b) = (zs[i], zs[j]);
        let mid = (a + b) / 2.0;
        let half = (b - a) / 2.0;
        for k in (0..zs.len()).filter(|&k| k != i && k != j) {
            // third zero in segment coordinates
            let t = (zs[k] - mid) / half;
            if t.im.abs() <= 1e-9 && t.re.abs() < 1.0 {
                return Err(PeriodError::Blocked { i, j, k });
            }
        }
        let others: Vec<Complex64> = (0..zs.len()).filter(|&k| k != i && k != j).map(|k| zs[k]).collect();
        let r_mid = others.iter().fold(p.leading(), |acc, z| acc * (mid - z));
        Ok(Self {
            mid,
            half,
            branch: r_mid.sqrt(),
            others,
        })
    }

    fn sqrt_r(&self, t: f64) -> Complex64 {
        let z = self.mid + self.half * t;
        self.others
            .iter()
            .fold(self.branch, |acc, zk| acc * ((z - zk) / (self.mid - zk)).sqrt())
    }

    /// Gauss–Chebyshev rule of the second kind with `n` nodes.
    fn integrate(&self, n: usize) -> Complex64 {
        let step = std::f64::consts::PI / (n + 1) as f64;
        let sum = (1..=n).fold(Complex64::zero(), |acc, k| {
            let theta = k as f64 * step;
            acc + self.sqrt_r(theta.cos()) * theta.sin().powi(2)
        });
        Complex64::i() * self.half * self.half * sum * step
    }
}

/// True when no straight-segment period is real. Blocked pairs are skipped.
pub fn genericity_proxy(p: &PolynomialQuadDifferential) -> Result<bool, PeriodError> {
    let table = PeriodTable::new(p)?;
    Ok(table.entries.iter().all(|e| e.value.im.abs() > 1e-9 * e.value.norm()))
}
