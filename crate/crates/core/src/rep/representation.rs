use std::collections::BTreeMap;

use super::field::{inv_mod, is_prime, Matrix};
use super::RepError;
use crate::qp::{Path, PathSum, QuiverWithPotential};

/// A finite-dimensional representation of the Jacobian algebra of a quiver
/// with potential over `F_p`. The matrix of an arrow `s → t` has shape
/// `dim t × dim s` and acts on column vectors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Representation {
    qp: QuiverWithPotential,
    p: u32,
    dims: Vec<usize>,
    mats: BTreeMap<String, Matrix>,
}

impl Representation {
    pub fn new(
        qp: QuiverWithPotential,
        p: u32,
        dims: Vec<usize>,
        mats: BTreeMap<String, Matrix>,
    ) -> Result<Self, RepError> {
        if !is_prime(p) {
            return Err(RepError::NotPrime(p));
        }
        let q = qp.quiver();
        if dims.len() != q.len() {
            return Err(RepError::Shape(format!(
                "dimension vector has {} entries for {} vertices",
                dims.len(),
                q.len()
            )));
        }
        for id in mats.keys() {
            if q.arrow(id).is_none() {
                return Err(RepError::UnknownArrow(id.clone()));
            }
        }
        let mut full = BTreeMap::new();
        for a in q.arrows() {
            let s = dims[q.vertex_index(&a.src).expect("validated")];
            let t = dims[q.vertex_index(&a.tgt).expect("validated")];
            let m = mats.get(&a.id).cloned().unwrap_or_else(|| Matrix::zeros(t, s));
            if m.rows() != t || m.cols() != s {
                return Err(RepError::Shape(format!(
                    "arrow `{}` needs a {t}x{s} matrix, got {}x{}",
                    a.id,
                    m.rows(),
                    m.cols()
                )));
            }
            full.insert(a.id.clone(), m);
        }
        let rep = Self {
            qp,
            p,
            dims,
            mats: full,
        };
        for (arrow, rel) in rep.qp.jacobian_relations() {
            if !rep.evaluate(&rel)?.is_zero() {
                return Err(RepError::RelationViolated(format!("∂_{arrow} W = {rel}")));
            }
        }
        Ok(rep)
    }

    /// Builds a representation from row-major integer entries.
    pub fn from_entries(
        qp: QuiverWithPotential,
        p: u32,
        dims: Vec<usize>,
        entries: BTreeMap<String, Vec<Vec<u32>>>,
    ) -> Result<Self, RepError> {
        let q = qp.quiver();
        let mut mats = BTreeMap::new();
        for (id, rows) in entries {
            let a = q.arrow(&id).ok_or_else(|| RepError::UnknownArrow(id.clone()))?;
            let s = dims.get(q.vertex_index(&a.src).expect("validated")).copied().unwrap_or(0);
            let t = dims.get(q.vertex_index(&a.tgt).expect("validated")).copied().unwrap_or(0);
            // a t×0 matrix has no way to spell its row count in nested lists
            let rows = if s == 0 && rows.is_empty() { vec![Vec::new(); t] } else { rows };
            mats.insert(id, Matrix::from_rows(t, s, rows, p)?);
        }
        Self::new(qp, p, dims, mats)
    }

    /// The simple representation at the vertex with the given index.
    pub fn simple(qp: QuiverWithPotential, p: u32, index: usize) -> Result<Self, RepError> {
        let mut dims = vec![0; qp.quiver().len()];
        *dims
            .get_mut(index)
            .ok_or_else(|| RepError::Shape(format!("no vertex with index {index}")))? = 1;
        Self::new(qp, p, dims, BTreeMap::new())
    }

    pub fn qp(&self) -> &QuiverWithPotential {
        &self.qp
    }

    pub fn characteristic(&self) -> u32 {
        self.p
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn total_dim(&self) -> usize {
        self.dims.iter().sum()
    }

    pub fn matrix(&self, arrow: &str) -> Option<&Matrix> {
        self.mats.get(arrow)
    }

    pub fn matrices(&self) -> &BTreeMap<String, Matrix> {
        &self.mats
    }

    pub fn is_zero(&self) -> bool {
        self.total_dim() == 0
    }

    /// Matrix of a path: composition of arrow maps, first arrow applied first.
    pub fn path_matrix(&self, path: &Path) -> Matrix {
        let q = self.qp.quiver();
        let start = self.dims[q.vertex_index(&path.start).expect("path starts at a vertex")];
        let mut m = Matrix::identity(start);
        for a in &path.arrows {
            m = self.mats[a].mul(&m, self.p);
        }
        m
    }

    /// Evaluates a combination of parallel paths.
    pub fn evaluate(&self, sum: &PathSum) -> Result<Matrix, RepError> {
        let mut acc: Option<Matrix> = None;
        for (path, c) in sum.terms() {
            let m = self.path_matrix(path);
            let k = self.reduce_coeff(*c)?;
            match acc.as_mut() {
                Some(total) => total.add_scaled(&m, k, self.p),
                None => {
                    let mut z = Matrix::zeros(m.rows(), m.cols());
                    z.add_scaled(&m, k, self.p);
                    acc = Some(z);
                }
            }
        }
        Ok(acc.unwrap_or_else(|| Matrix::zeros(0, 0)))
    }

    fn reduce_coeff(&self, c: crate::qp::Coeff) -> Result<u32, RepError> {
        let p = self.p as i64;
        let num = c.numer().rem_euclid(p) as u32;
        let den = inv_mod(c.denom().rem_euclid(p) as u32, self.p)
            .ok_or_else(|| RepError::Coefficient(c.to_string(), self.p))?;
        Ok(num * den % self.p)
    }
}

/// Every representation with the given dimension vector, in a fixed order
/// (arrows in quiver order, matrix entries counted in base `p`).
pub fn all_representations(
    qp: &QuiverWithPotential,
    p: u32,
    dims: &[usize],
) -> Result<Vec<Representation>, RepError> {
    let q = qp.quiver();
    let shapes: Vec<(String, usize, usize)> = q
        .arrows()
        .iter()
        .map(|a| {
            let s = dims[q.vertex_index(&a.src).expect("validated")];
            let t = dims[q.vertex_index(&a.tgt).expect("validated")];
            (a.id.clone(), t, s)
        })
        .collect();
    let slots: usize = shapes.iter().map(|(_, t, s)| t * s).sum();
    if slots > 16 {
        return Err(RepError::TooLarge(format!("{slots} matrix entries")));
    }
    let total = (p as usize).pow(slots as u32);
    let mut out = Vec::new();
    for code in 0..total {
        let mut x = code;
        let mut mats = BTreeMap::new();
        for (id, t, s) in &shapes {
            let mut m = Matrix::zeros(*t, *s);
            for r in 0..*t {
                for c in 0..*s {
                    m.set(r, c, (x % p as usize) as u32);
                    x /= p as usize;
                }
            }
            mats.insert(id.clone(), m);
        }
        match Representation::new(qp.clone(), p, dims.to_vec(), mats) {
            Ok(rep) => out.push(rep),
            Err(RepError::RelationViolated(_)) => {}
            Err(e) => return Err(e),
        }
    }
    Ok(out)
}
