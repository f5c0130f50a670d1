use std::collections::{BTreeMap, BTreeSet};

use num_traits::One;

use super::path::{Path, PathSum};
use super::quiver::fresh_id;
use super::{Coeff, QpError, QuiverWithPotential};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ArrowKind {
    /// An arrow of the original quiver, degree 0.
    Original,
    /// The opposite `a*` of an original arrow, degree `-(N-2)`.
    Opposite(String),
    /// The loop `e_i` at a vertex, degree `-(N-1)`.
    Loop(String),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedArrow {
    pub id: String,
    pub src: String,
    pub tgt: String,
    pub degree: i32,
    pub kind: ArrowKind,
}

/// The graded quiver `Q̄` of the Ginzburg dg algebra `Γ_N(Q, W)` together
/// with the differential on generators.
#[derive(Clone, Debug)]
pub struct GradedQuiver {
    cy_dimension: u32,
    vertices: Vec<String>,
    arrows: Vec<GradedArrow>,
    differential: BTreeMap<String, PathSum>,
}

impl GradedQuiver {
    pub fn cy_dimension(&self) -> u32 {
        self.cy_dimension
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn arrows(&self) -> &[GradedArrow] {
        &self.arrows
    }

    pub fn arrow(&self, id: &str) -> Option<&GradedArrow> {
        self.arrows.iter().find(|a| a.id == id)
    }

    /// Differential of a generator.
    pub fn differential(&self, id: &str) -> Option<&PathSum> {
        self.differential.get(id)
    }

    pub fn path_degree(&self, path: &Path) -> i32 {
        path.arrows
            .iter()
            .map(|a| self.arrow(a).map_or(0, |g| g.degree))
            .sum()
    }

    /// Extends the differential to paths by the graded Leibniz rule
    /// `d(xy) = d(x)y + (-1)^{|x|} x d(y)`.
    pub fn apply(&self, sum: &PathSum) -> PathSum {
        let mut out = PathSum::zero();
        for (path, coeff) in sum.terms() {
            let mut sign_degree = 0;
            for (k, id) in path.arrows.iter().enumerate() {
                let dx = &self.differential[id];
                let sign = if sign_degree % 2 == 0 { *coeff } else { -*coeff };
                let prefix = Path::new(path.start.clone(), path.arrows[..k].to_vec());
                let suffix = path.arrows[k + 1..].to_vec();
                for (inner, c) in dx.terms() {
                    let mut arrows = prefix.arrows.clone();
                    arrows.extend(inner.arrows.iter().cloned());
                    arrows.extend(suffix.iter().cloned());
                    out.add_term(Path::new(path.start.clone(), arrows), sign * *c);
                }
                sign_degree += self.arrow(id).map_or(0, |g| g.degree);
            }
        }
        out
    }
}

/// Builds `Γ_N(Q, W)`: arrows `a` in degree 0, opposites `a*` in degree
/// `-(N-2)`, loops `e_i` in degree `-(N-1)`, with `d a = 0`,
/// `d a* = ∂_a W` and `d e_i = Σ_a e_i (a a* - a* a) e_i`.
pub fn ginzburg_graded_quiver(qp: &QuiverWithPotential, n: u32) -> Result<GradedQuiver, QpError> {
    if n < 3 {
        return Err(QpError::CalabiYauDimension(n));
    }
    let q = qp.quiver();
    if n > 3 && !q.is_acyclic() {
        return Err(QpError::CyclicForHigherN);
    }
    let opposite_degree = -(n as i32 - 2);
    let loop_degree = -(n as i32 - 1);

    let mut taken: BTreeSet<String> = q.arrows().iter().map(|a| a.id.clone()).collect();
    let mut arrows = Vec::new();
    let mut differential = BTreeMap::new();
    let mut opposite_of = BTreeMap::new();
    for a in q.arrows() {
        arrows.push(GradedArrow {
            id: a.id.clone(),
            src: a.src.clone(),
            tgt: a.tgt.clone(),
            degree: 0,
            kind: ArrowKind::Original,
        });
        differential.insert(a.id.clone(), PathSum::zero());
    }
    for a in q.arrows() {
        let id = fresh_id(format!("{}*", a.id), &taken);
        taken.insert(id.clone());
        opposite_of.insert(a.id.clone(), id.clone());
        arrows.push(GradedArrow {
            id: id.clone(),
            src: a.tgt.clone(),
            tgt: a.src.clone(),
            degree: opposite_degree,
            kind: ArrowKind::Opposite(a.id.clone()),
        });
        differential.insert(id, qp.cyclic_derivative(&a.id)?);
    }
    for v in q.vertices() {
        let id = fresh_id(format!("e{v}"), &taken);
        taken.insert(id.clone());
        let mut d = PathSum::zero();
        for a in q.arrows() {
            let star = opposite_of[&a.id].clone();
            if a.src == *v {
                d.add_term(Path::new(v.clone(), vec![a.id.clone(), star.clone()]), Coeff::one());
            }
            if a.tgt == *v {
                d.add_term(Path::new(v.clone(), vec![star, a.id.clone()]), -Coeff::one());
            }
        }
        arrows.push(GradedArrow {
            id: id.clone(),
            src: v.clone(),
            tgt: v.clone(),
            degree: loop_degree,
            kind: ArrowKind::Loop(v.clone()),
        });
        differential.insert(id, d);
    }
    Ok(GradedQuiver {
        cy_dimension: n,
        vertices: q.vertices().to_vec(),
        arrows,
        differential,
    })
}

/// Euler form of the CY3 category on simples, `χ(S_i, S_j) = q_ji − q_ij`.
pub fn euler_form_cy3(qp: &QuiverWithPotential, i: &str, j: &str) -> Result<i64, QpError> {
    let q = qp.quiver();
    for v in [i, j] {
        if !q.has_vertex(v) {
            return Err(QpError::UnknownVertex(v.to_string()));
        }
    }
    Ok(q.arrow_count(j, i) as i64 - q.arrow_count(i, j) as i64)
}
