use std::collections::BTreeMap;

use num_traits::Zero;

use super::path::{Path, PathSum};
use super::quiver::Quiver;
use super::{Coeff, QpError};

/// A finite potential: rational combination of cycles, each stored in its
/// lexicographically minimal rotation.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Potential {
    terms: BTreeMap<Vec<String>, Coeff>,
}

impl Potential {
    pub fn zero() -> Self {
        Self::default()
    }

    /// Validates that every word is a cycle of `quiver` of length at least 3,
    /// canonicalises rotations and merges like terms.
    pub fn new<I>(quiver: &Quiver, terms: I) -> Result<Self, QpError>
    where
        I: IntoIterator<Item = (Coeff, Vec<String>)>,
    {
        let mut map: BTreeMap<Vec<String>, Coeff> = BTreeMap::new();
        for (coeff, word) in terms {
            check_cycle(quiver, &word)?;
            if word.len() < 3 {
                return Err(QpError::ShortTerm(word.join(" ")));
            }
            *map.entry(canonical_rotation(&word)).or_insert_with(Coeff::zero) += coeff;
        }
        map.retain(|_, c| !c.is_zero());
        Ok(Self { terms: map })
    }

    pub(crate) fn from_canonical_map(terms: BTreeMap<Vec<String>, Coeff>) -> Self {
        Self { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in canonical order.
    pub fn terms(&self) -> impl Iterator<Item = (&Vec<String>, &Coeff)> {
        self.terms.iter()
    }

    pub fn arrows_used(&self) -> impl Iterator<Item = &String> {
        self.terms.keys().flatten()
    }

    /// `∂_a W`: every occurrence `u a v` of `a` in a cycle contributes `v u`.
    pub fn cyclic_derivative(&self, quiver: &Quiver, a: &str) -> Result<PathSum, QpError> {
        let arrow = quiver
            .arrow(a)
            .ok_or_else(|| QpError::UnknownArrow(a.to_string()))?;
        let mut out = PathSum::zero();
        for (word, coeff) in &self.terms {
            for (pos, x) in word.iter().enumerate() {
                if x != a {
                    continue;
                }
                let rest: Vec<String> = word[pos + 1..]
                    .iter()
                    .chain(word[..pos].iter())
                    .cloned()
                    .collect();
                out.add_term(Path::new(arrow.tgt.clone(), rest), *coeff);
            }
        }
        Ok(out)
    }
}

/// Lexicographically minimal rotation of a cyclic word.
pub fn canonical_rotation(word: &[String]) -> Vec<String> {
    let n = word.len();
    (0..n.max(1))
        .map(|r| {
            word[r.min(n)..]
                .iter()
                .chain(word[..r.min(n)].iter())
                .cloned()
                .collect::<Vec<_>>()
        })
        .min()
        .unwrap_or_default()
}

pub(crate) fn check_cycle(quiver: &Quiver, word: &[String]) -> Result<(), QpError> {
    if word.is_empty() {
        return Err(QpError::NotACycle(String::new()));
    }
    let arrows = word
        .iter()
        .map(|id| quiver.arrow(id).ok_or_else(|| QpError::UnknownArrow(id.clone())))
        .collect::<Result<Vec<_>, _>>()?;
    for k in 0..arrows.len() {
        let next = arrows[(k + 1) % arrows.len()];
        if arrows[k].tgt != next.src {
            return Err(QpError::NotACycle(word.join(" ")));
        }
    }
    Ok(())
}
