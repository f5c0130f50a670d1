use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};

use super::Coeff;

/// A path read left to right: `arrows[0]` first. A lazy path has no arrows
/// and sits at `start`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Path {
    pub start: String,
    pub arrows: Vec<String>,
}

impl Path {
    pub fn lazy(vertex: impl Into<String>) -> Self {
        Self {
            start: vertex.into(),
            arrows: Vec::new(),
        }
    }

    pub fn new(start: impl Into<String>, arrows: Vec<String>) -> Self {
        Self {
            start: start.into(),
            arrows,
        }
    }

    pub fn len(&self) -> usize {
        self.arrows.len()
    }

    pub fn is_lazy(&self) -> bool {
        self.arrows.is_empty()
    }

    /// Concatenation `self` then `other`; endpoint agreement is the caller's job.
    pub fn concat(&self, other: &Path) -> Path {
        let mut arrows = self.arrows.clone();
        arrows.extend(other.arrows.iter().cloned());
        Path {
            start: self.start.clone(),
            arrows,
        }
    }
}

impl fmt::Display for Path {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.arrows.is_empty() {
            return write!(f, "e_{}", self.start);
        }
        let short = self.arrows.iter().all(|a| a.chars().count() == 1);
        let sep = if short { "" } else { "·" };
        write!(f, "{}", self.arrows.join(sep))
    }
}

/// Finite linear combination of paths with rational coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct PathSum {
    terms: BTreeMap<Path, Coeff>,
}

impl PathSum {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn single(path: Path, coeff: Coeff) -> Self {
        let mut s = Self::zero();
        s.add_term(path, coeff);
        s
    }

    pub fn add_term(&mut self, path: Path, coeff: Coeff) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(path) {
            Entry::Vacant(v) => {
                v.insert(coeff);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += coeff;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn add(&mut self, other: &PathSum) {
        for (p, c) in &other.terms {
            self.add_term(p.clone(), *c);
        }
    }

    pub fn scaled(&self, k: Coeff) -> PathSum {
        let mut out = PathSum::zero();
        for (p, c) in &self.terms {
            out.add_term(p.clone(), *c * k);
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Path, &Coeff)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, path: &Path) -> Coeff {
        self.terms.get(path).copied().unwrap_or_else(Coeff::zero)
    }
}

impl fmt::Display for PathSum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (p, c)) in self.terms.iter().enumerate() {
            let neg = *c < Coeff::zero();
            let abs = if neg { -*c } else { *c };
            match (k, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            if !abs.is_one() {
                write!(f, "{abs}")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}
