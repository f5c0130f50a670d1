//! Quivers with potential.
//!
//! Paths compose left to right: `αβ` means `α` followed by `β`, so a cycle
//! `α₁⋯αₘ` satisfies `t(αₖ) = s(αₖ₊₁)` cyclically.

mod ginzburg;
mod iso;
mod mutation;
mod path;
mod potential;
mod quiver;

pub use ginzburg::{euler_form_cy3, ginzburg_graded_quiver, ArrowKind, GradedArrow, GradedQuiver};
pub use iso::{isomorphism, QpIsomorphism};
pub use mutation::{is_nondegenerate_to_depth, mutate, MAX_REDUCTION_ROUNDS};
pub use path::{Path, PathSum};
pub use potential::{canonical_rotation, Potential};
pub use quiver::{Arrow, Quiver};

use num_rational::Rational64;
use thiserror::Error;

/// Exact coefficient type for potentials and path sums.
pub type Coeff = Rational64;

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum QpError {
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),
    #[error("unknown arrow `{0}`")]
    UnknownArrow(String),
    #[error("duplicate vertex `{0}`")]
    DuplicateVertex(String),
    #[error("duplicate arrow `{0}`")]
    DuplicateArrow(String),
    #[error("arrow `{0}` is a loop")]
    Loop(String),
    #[error("arrows `{0}` and `{1}` form a 2-cycle")]
    TwoCycle(String, String),
    #[error("word `{0}` is not a cycle")]
    NotACycle(String),
    #[error("potential term `{0}` is shorter than 3")]
    ShortTerm(String),
    #[error("non-reducible: {0}")]
    NonReducible(String),
    #[error("Ginzburg quiver needs N >= 3, got {0}")]
    CalabiYauDimension(u32),
    #[error("Ginzburg quiver with N > 3 needs an acyclic quiver")]
    CyclicForHigherN,
}

/// A quiver without loops or 2-cycles, together with a finite potential on it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuiverWithPotential {
    quiver: Quiver,
    potential: Potential,
}

impl QuiverWithPotential {
    pub fn new(quiver: Quiver, potential: Potential) -> Result<Self, QpError> {
        for id in potential.arrows_used() {
            if quiver.arrow(id).is_none() {
                return Err(QpError::UnknownArrow(id.clone()));
            }
        }
        Ok(Self { quiver, potential })
    }

    pub fn without_potential(quiver: Quiver) -> Self {
        Self {
            quiver,
            potential: Potential::zero(),
        }
    }

    /// Linear `A_n` with zero potential.
    pub fn linear_a(n: usize) -> Self {
        Self::without_potential(Quiver::linear_a(n))
    }

    /// The oriented 3-cycle `α: 1→2, β: 2→3, γ: 3→1` with `W = αβγ`.
    pub fn three_cycle() -> Self {
        let vertices = ["1", "2", "3"].map(String::from).to_vec();
        let quiver = Quiver::new(
            vertices,
            vec![
                Arrow::new("α", "1", "2"),
                Arrow::new("β", "2", "3"),
                Arrow::new("γ", "3", "1"),
            ],
        )
        .expect("3-cycle is valid");
        let w = Potential::new(
            &quiver,
            [(Coeff::from_integer(1), ["α", "β", "γ"].map(String::from).to_vec())],
        )
        .expect("αβγ is a cycle");
        Self::new(quiver, w).expect("potential uses quiver arrows")
    }

    pub fn quiver(&self) -> &Quiver {
        &self.quiver
    }

    pub fn potential(&self) -> &Potential {
        &self.potential
    }

    pub fn cyclic_derivative(&self, a: &str) -> Result<PathSum, QpError> {
        self.potential.cyclic_derivative(&self.quiver, a)
    }

    /// Nonzero `∂_a W` for every arrow `a`, in arrow order.
    pub fn jacobian_relations(&self) -> Vec<(String, PathSum)> {
        self.quiver
            .arrows()
            .iter()
            .filter_map(|a| {
                let d = self
                    .cyclic_derivative(&a.id)
                    .expect("arrow belongs to the quiver");
                (!d.is_zero()).then(|| (a.id.clone(), d))
            })
            .collect()
    }

    pub fn mutate(&self, vertex: &str) -> Result<Self, QpError> {
        mutate(self, vertex)
    }
}

/// Free-function form of [`QuiverWithPotential::jacobian_relations`].
pub fn jacobian_relations(qp: &QuiverWithPotential) -> Vec<(String, PathSum)> {
    qp.jacobian_relations()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn jacobian_relations_of_three_cycle() {
        let qp = QuiverWithPotential::three_cycle();
        let rels: Vec<String> = qp
            .jacobian_relations()
            .iter()
            .map(|(_, r)| r.to_string())
            .collect();
        assert_eq!(rels, vec!["βγ", "γα", "αβ"]);
    }

    #[test]
    fn jacobian_relations_of_a2_are_empty() {
        assert!(QuiverWithPotential::linear_a(2).jacobian_relations().is_empty());
    }

    #[test]
    fn doubled_potential_doubles_relations() {
        let base = QuiverWithPotential::three_cycle();
        let w = Potential::new(
            base.quiver(),
            [(Coeff::from_integer(2), ["α", "β", "γ"].map(String::from).to_vec())],
        )
        .unwrap();
        let qp = QuiverWithPotential::new(base.quiver().clone(), w).unwrap();
        let rels: Vec<String> = qp
            .jacobian_relations()
            .iter()
            .map(|(_, r)| r.to_string())
            .collect();
        assert_eq!(rels, vec!["2βγ", "2γα", "2αβ"]);
    }

    #[test]
    fn potential_must_use_quiver_arrows() {
        let q3 = QuiverWithPotential::three_cycle();
        let err = QuiverWithPotential::new(Quiver::linear_a(3), q3.potential().clone()).unwrap_err();
        assert!(matches!(err, QpError::UnknownArrow(_)));
    }
}
