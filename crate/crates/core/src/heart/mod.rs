//! Finite hearts encoded by an Ext-quiver with potential and the classes of
//! their simples in `K(D) ≅ ℤⁿ`, written in the basis of the standard heart.

mod chamber;
mod graph;
mod stab;

pub use chamber::{chamber_of, cross_wall, Chamber, Wall};
pub use graph::{exchange_graph, Edge, ExchangeGraph, HeartFilter, Intermediate, NoFilter};
pub use stab::{
    c_action, stab_metric, support_constant, ActionFlag, CAction, HnData, Norm, ProbeEntry, StabilityCondition,
    SupportReport,
};

use std::fmt;

use num_rational::Rational64;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::qp::{mutate, QpError, QuiverWithPotential};
use crate::rep::RepError;

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum HeartError {
    #[error(transparent)]
    Qp(#[from] QpError),
    #[error(transparent)]
    Rep(#[from] RepError),
    #[error("class matrix must be {0}x{0}")]
    Shape(usize),
    #[error("class matrix has determinant {0}, expected ±1")]
    Determinant(String),
    #[error("no simple with index {0}")]
    Index(usize),
    #[error("central charge vanishes on S{0}")]
    ZeroCharge(usize),
    #[error("{0}")]
    Metric(String),
    #[error("ℂ-action did not settle after {0} tilts")]
    ActionDiverged(usize),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum TiltDirection {
    Forward,
    Backward,
}

impl fmt::Display for TiltDirection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            TiltDirection::Forward => "forward",
            TiltDirection::Backward => "backward",
        })
    }
}

/// A finite heart: the quiver with potential of its simples and the matrix
/// whose row `i` is `[S_i]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Heart {
    qp: QuiverWithPotential,
    classes: Vec<Vec<i64>>,
}

/// Deduplication key: class rows sorted, arrow counts permuted to match.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct HeartKey {
    pub classes: Vec<Vec<i64>>,
    pub adjacency: Vec<Vec<usize>>,
}

impl Heart {
    pub fn new(qp: QuiverWithPotential, classes: Vec<Vec<i64>>) -> Result<Self, HeartError> {
        let n = qp.quiver().len();
        if classes.len() != n || classes.iter().any(|r| r.len() != n) {
            return Err(HeartError::Shape(n));
        }
        let det = determinant(&classes);
        if det.abs() != Rational64::one() {
            return Err(HeartError::Determinant(det.to_string()));
        }
        Ok(Self { qp, classes })
    }

    /// The standard heart `H₀`: simples are the vertex simples.
    pub fn standard(qp: QuiverWithPotential) -> Self {
        let n = qp.quiver().len();
        let classes = (0..n)
            .map(|i| (0..n).map(|j| i64::from(i == j)).collect())
            .collect();
        Self { qp, classes }
    }

    pub fn qp(&self) -> &QuiverWithPotential {
        &self.qp
    }

    pub fn classes(&self) -> &[Vec<i64>] {
        &self.classes
    }

    pub fn rank(&self) -> usize {
        self.classes.len()
    }

    pub fn class(&self, i: usize) -> Result<&[i64], HeartError> {
        self.classes.get(i).map(Vec::as_slice).ok_or(HeartError::Index(i))
    }

    pub fn determinant(&self) -> i64 {
        *determinant(&self.classes).numer()
    }

    /// Simple tilt at `S_i`. Forward: `[S_i] ↦ −[S_i]`,
    /// `[S_j] ↦ [S_j] + q_ij [S_i]`; backward uses `q_ji`. The quiver is
    /// mutated at the vertex of `S_i`.
    pub fn simple_tilt(&self, i: usize, dir: TiltDirection) -> Result<Heart, HeartError> {
        let n = self.rank();
        if i >= n {
            return Err(HeartError::Index(i));
        }
        let q = self.qp.quiver().adjacency();
        let si = self.classes[i].clone();
        let mut classes = self.classes.clone();
        for (j, row) in classes.iter_mut().enumerate() {
            if j == i {
                row.iter_mut().for_each(|x| *x = -*x);
                continue;
            }
            let k = match dir {
                TiltDirection::Forward => q[i][j],
                TiltDirection::Backward => q[j][i],
            } as i64;
            for (x, s) in row.iter_mut().zip(&si) {
                *x += k * s;
            }
        }
        let qp = mutate(&self.qp, &self.qp.quiver().vertices()[i])?;
        Ok(Heart { qp, classes })
    }

    /// `H[n]`: classes times `(−1)ⁿ`.
    pub fn shift(&self, n: i64) -> Heart {
        let sign = if n.rem_euclid(2) == 0 { 1 } else { -1 };
        Heart {
            qp: self.qp.clone(),
            classes: self
                .classes
                .iter()
                .map(|r| r.iter().map(|x| sign * x).collect())
                .collect(),
        }
    }

    /// Every class row is componentwise `≥ 0` or componentwise `≤ 0`.
    pub fn is_intermediate(&self) -> bool {
        self.classes
            .iter()
            .all(|r| r.iter().all(|&x| x >= 0) || r.iter().all(|&x| x <= 0))
    }

    /// Euler form on the heart's own simples, `χ(S_i, S_j) = q_ji − q_ij`.
    pub fn euler_simple(&self, i: usize, j: usize) -> i64 {
        let q = self.qp.quiver().adjacency();
        q[j][i] as i64 - q[i][j] as i64
    }

    /// Coordinates of a standard-basis class in the basis of simples.
    pub fn coordinates(&self, cls: &[i64]) -> Result<Vec<i64>, HeartError> {
        let n = self.rank();
        if cls.len() != n {
            return Err(HeartError::Shape(n));
        }
        let inv = inverse(&self.classes);
        // cls = c · B, so c = cls · B⁻¹
        Ok((0..n)
            .map(|k| (0..n).map(|j| cls[j] * inv[j][k]).sum())
            .collect())
    }

    /// Euler form extended bilinearly to standard-basis classes.
    pub fn euler(&self, x: &[i64], y: &[i64]) -> Result<i64, HeartError> {
        let cx = self.coordinates(x)?;
        let cy = self.coordinates(y)?;
        let n = self.rank();
        let mut total = 0;
        for i in 0..n {
            for j in 0..n {
                total += cx[i] * cy[j] * self.euler_simple(i, j);
            }
        }
        Ok(total)
    }

    /// K-theory shadow of the spherical twist at `S_i`: `x ↦ x − χ(S_i, x)[S_i]`.
    pub fn sph_twist_class_action(&self, i: usize, cls: &[i64]) -> Result<Vec<i64>, HeartError> {
        let si = self.class(i)?.to_vec();
        let k = self.euler(&si, cls)?;
        Ok(cls.iter().zip(&si).map(|(x, s)| x - k * s).collect())
    }

    /// Inverse twist: `x ↦ x + χ(S_i, x)[S_i]`.
    pub fn sph_untwist_class_action(&self, i: usize, cls: &[i64]) -> Result<Vec<i64>, HeartError> {
        let si = self.class(i)?.to_vec();
        let k = self.euler(&si, cls)?;
        Ok(cls.iter().zip(&si).map(|(x, s)| x + k * s).collect())
    }

    /// Applies the twist at `S_i` of `self` to every simple class of `other`.
    pub fn twist_heart(&self, i: usize, other: &Heart) -> Result<Heart, HeartError> {
        let classes = other
            .classes
            .iter()
            .map(|c| self.sph_twist_class_action(i, c))
            .collect::<Result<Vec<_>, _>>()?;
        Heart::new(other.qp.clone(), classes)
    }

    pub fn key(&self) -> HeartKey {
        let n = self.rank();
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by(|&a, &b| self.classes[a].cmp(&self.classes[b]));
        let q = self.qp.quiver().adjacency();
        HeartKey {
            classes: order.iter().map(|&i| self.classes[i].clone()).collect(),
            adjacency: order
                .iter()
                .map(|&i| order.iter().map(|&j| q[i][j]).collect())
                .collect(),
        }
    }

    /// Same heart at class level: equal class sets.
    pub fn same_classes(&self, other: &Heart) -> bool {
        self.key().classes == other.key().classes
    }
}

fn to_rational(m: &[Vec<i64>]) -> Vec<Vec<Rational64>> {
    m.iter()
        .map(|r| r.iter().map(|&x| Rational64::from_integer(x)).collect())
        .collect()
}

fn determinant(m: &[Vec<i64>]) -> Rational64 {
    let mut a = to_rational(m);
    let n = a.len();
    let mut det = Rational64::one();
    for c in 0..n {
        let Some(p) = (c..n).find(|&r| !a[r][c].is_zero()) else {
            return Rational64::zero();
        };
        if p != c {
            a.swap(p, c);
            det = -det;
        }
        det *= a[c][c];
        for r in c + 1..n {
            let f = a[r][c] / a[c][c];
            for k in c..n {
                let v = a[c][k];
                a[r][k] -= f * v;
            }
        }
    }
    det
}

/// Inverse of a unimodular integer matrix.
fn inverse(m: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let n = m.len();
    let mut a = to_rational(m);
    for (i, row) in a.iter_mut().enumerate() {
        row.extend((0..n).map(|j| Rational64::from_integer(i64::from(i == j))));
    }
    for c in 0..n {
        let p = (c..n).find(|&r| !a[r][c].is_zero()).expect("unimodular");
        a.swap(p, c);
        let piv = a[c][c];
        a[c].iter_mut().for_each(|x| *x /= piv);
        for r in 0..n {
            if r != c && !a[r][c].is_zero() {
                let f = a[r][c];
                for k in 0..2 * n {
                    let v = a[c][k];
                    a[r][k] -= f * v;
                }
            }
        }
    }
    a.into_iter()
        .map(|r| r[n..].iter().map(|x| x.to_integer()).collect())
        .collect()
}
