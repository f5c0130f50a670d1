use std::collections::BTreeSet;
use std::fmt;

use num_rational::Rational64;

use super::SurfaceError;
use crate::qp::{Arrow, Potential, Quiver, QuiverWithPotential};

/// A triangulation of the convex `m`-gon with corners `0..m` labelled
/// clockwise. Arcs are stored as `(i, j)` with `i < j`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DiscTriangulation {
    m: usize,
    arcs: BTreeSet<(usize, usize)>,
}

pub const MAX_POLYGON: usize = 12;

fn normalized((a, b): (usize, usize)) -> (usize, usize) {
    (a.min(b), a.max(b))
}

fn crosses((a, b): (usize, usize), (c, d): (usize, usize)) -> bool {
    (a < c && c < b && b < d) || (c < a && a < d && d < b)
}

impl DiscTriangulation {
    pub fn new(m: usize, arcs: impl IntoIterator<Item = (usize, usize)>) -> Result<Self, SurfaceError> {
        if !(3..=MAX_POLYGON).contains(&m) {
            return Err(SurfaceError::PolygonSize(m));
        }
        let mut set = BTreeSet::new();
        for arc in arcs {
            let (a, b) = normalized(arc);
            if b >= m || b - a < 2 || (a == 0 && b == m - 1) {
                return Err(SurfaceError::NotAnArc(a, b));
            }
            if !set.insert((a, b)) {
                return Err(SurfaceError::NotAnArc(a, b));
            }
        }
        for &x in &set {
            for &y in &set {
                if crosses(x, y) {
                    return Err(SurfaceError::Crossing(x, y));
                }
            }
        }
        if set.len() != m - 3 {
            return Err(SurfaceError::NotMaximal(set.len(), m - 3));
        }
        Ok(Self { m, arcs: set })
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn arcs(&self) -> &BTreeSet<(usize, usize)> {
        &self.arcs
    }

    fn is_edge(&self, a: usize, b: usize) -> bool {
        let (a, b) = normalized((a, b));
        b - a == 1 || (a == 0 && b == self.m - 1) || self.arcs.contains(&(a, b))
    }

    /// Triangles `a < b < c`, read clockwise as `a → b → c`.
    pub fn faces(&self) -> Vec<(usize, usize, usize)> {
        let mut out = Vec::with_capacity(self.m - 2);
        for a in 0..self.m {
            for b in a + 1..self.m {
                if !self.is_edge(a, b) {
                    continue;
                }
                for c in b + 1..self.m {
                    if self.is_edge(b, c) && self.is_edge(a, c) {
                        out.push((a, b, c));
                    }
                }
            }
        }
        out
    }

    /// Replaces `arc` by the other diagonal of the quadrilateral around it.
    pub fn flip(&self, arc: (usize, usize)) -> Result<(DiscTriangulation, (usize, usize)), SurfaceError> {
        let arc = normalized(arc);
        if !self.arcs.contains(&arc) {
            return Err(SurfaceError::NotInTriangulation(arc.0, arc.1));
        }
        let apexes: Vec<usize> = (0..self.m)
            .filter(|&v| v != arc.0 && v != arc.1 && self.is_edge(v, arc.0) && self.is_edge(v, arc.1))
            .collect();
        let [c, d] = apexes[..] else {
            unreachable!("an inner arc borders exactly two triangles");
        };
        let new = normalized((c, d));
        let mut arcs = self.arcs.clone();
        arcs.remove(&arc);
        arcs.insert(new);
        Ok((DiscTriangulation { m: self.m, arcs }, new))
    }

    pub fn vertex_id(arc: (usize, usize)) -> String {
        let (a, b) = normalized(arc);
        format!("{a}-{b}")
    }

    /// One vertex per arc; inside each triangle an arrow from an arc to the
    /// clockwise-next side when that side is also an arc. Triangles bounded
    /// by three arcs contribute their 3-cycle to the potential.
    pub fn quiver(&self) -> QuiverWithPotential {
        let vertices: Vec<String> = self.arcs.iter().map(|&a| Self::vertex_id(a)).collect();
        let mut arrows = Vec::new();
        let mut cycles = Vec::new();
        for (a, b, c) in self.faces() {
            let sides = [(a, b), (b, c), (a, c)];
            let mut ids = Vec::new();
            for k in 0..3 {
                let (x, y) = (sides[k], sides[(k + 1) % 3]);
                if self.arcs.contains(&x) && self.arcs.contains(&y) {
                    let id = format!("x{}", arrows.len() + 1);
                    arrows.push(Arrow::new(id.clone(), Self::vertex_id(x), Self::vertex_id(y)));
                    ids.push(id);
                }
            }
            if ids.len() == 3 {
                cycles.push((Rational64::from_integer(1), ids));
            }
        }
        let quiver = Quiver::new(vertices, arrows).expect("disc quivers have no loops or 2-cycles");
        let potential = Potential::new(&quiver, cycles).expect("triangle cycles are cycles");
        QuiverWithPotential::new(quiver, potential).expect("arrows exist")
    }
}

impl fmt::Display for DiscTriangulation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let arcs: Vec<String> = self.arcs.iter().map(|&(a, b)| format!("{a}{b}")).collect();
        write!(f, "{{{}}}", arcs.join(","))
    }
}

/// All triangulations of the convex `m`-gon, sorted.
pub fn enumerate_triangulations(m: usize) -> Result<Vec<DiscTriangulation>, SurfaceError> {
    if !(3..=MAX_POLYGON).contains(&m) {
        return Err(SurfaceError::PolygonSize(m));
    }
    let corners: Vec<usize> = (0..m).collect();
    let mut out: Vec<DiscTriangulation> = triangulate(&corners)
        .into_iter()
        .map(|arcs| DiscTriangulation {
            m,
            arcs: arcs.into_iter().collect(),
        })
        .collect();
    out.sort();
    Ok(out)
}

/// Arc sets triangulating the convex polygon on `corners` (in cyclic order);
/// the side `first–last` lies in a triangle with apex `corners[k]`.
fn triangulate(corners: &[usize]) -> Vec<Vec<(usize, usize)>> {
    let n = corners.len();
    if n < 3 {
        return vec![Vec::new()];
    }
    let (first, last) = (corners[0], corners[n - 1]);
    let mut out = Vec::new();
    for k in 1..n - 1 {
        let apex = corners[k];
        let left = triangulate(&corners[..=k]);
        let right = triangulate(&corners[k..]);
        for l in &left {
            for r in &right {
                let mut arcs = l.clone();
                arcs.extend(r.iter().copied());
                if k > 1 {
                    arcs.push(normalized((first, apex)));
                }
                if k < n - 2 {
                    arcs.push(normalized((apex, last)));
                }
                out.push(arcs);
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qp::{isomorphism, mutate};

    fn catalan(k: usize) -> usize {
        let mut c = vec![1usize; k + 1];
        for n in 1..=k {
            c[n] = (0..n).map(|i| c[i] * c[n - 1 - i]).sum();
        }
        c[k]
    }

    #[test]
    fn catalan_counts() {
        for m in 3..=MAX_POLYGON {
            assert_eq!(enumerate_triangulations(m).unwrap().len(), catalan(m - 2), "m={m}");
        }
        assert!(enumerate_triangulations(2).is_err());
        assert!(enumerate_triangulations(13).is_err());
    }

    #[test]
    fn flips() {
        let t = DiscTriangulation::new(5, [(0, 2), (0, 3)]).unwrap();
        let (f, new) = t.flip((0, 3)).unwrap();
        assert_eq!(f, DiscTriangulation::new(5, [(0, 2), (2, 4)]).unwrap());
        assert_eq!(f.flip(new).unwrap().0, t);
        let sq = DiscTriangulation::new(4, [(0, 2)]).unwrap();
        assert_eq!(sq.flip((0, 2)).unwrap().0.arcs().iter().copied().collect::<Vec<_>>(), vec![(1, 3)]);
        assert!(t.flip((1, 3)).is_err());
    }

    #[test]
    fn validation() {
        assert!(matches!(DiscTriangulation::new(5, [(0, 2)]), Err(SurfaceError::NotMaximal(1, 2))));
        assert!(matches!(DiscTriangulation::new(5, [(0, 2), (1, 3)]), Err(SurfaceError::Crossing(..))));
        assert!(matches!(DiscTriangulation::new(5, [(0, 1), (0, 2)]), Err(SurfaceError::NotAnArc(0, 1))));
        assert!(matches!(DiscTriangulation::new(5, [(0, 4), (0, 2)]), Err(SurfaceError::NotAnArc(0, 4))));
    }

    #[test]
    fn quivers() {
        for t in enumerate_triangulations(5).unwrap() {
            let qp = t.quiver();
            assert!(isomorphism(&qp, &QuiverWithPotential::linear_a(2)).is_some(), "{t}");
        }
        let sq = DiscTriangulation::new(4, [(0, 2)]).unwrap().quiver();
        assert_eq!((sq.quiver().len(), sq.quiver().arrows().len()), (1, 0));
        let hex = DiscTriangulation::new(6, [(0, 2), (2, 4), (0, 4)]).unwrap().quiver();
        assert!(isomorphism(&hex, &QuiverWithPotential::three_cycle()).is_some());
    }

    #[test]
    fn flips_match_mutations() {
        for m in 4..=7 {
            for t in enumerate_triangulations(m).unwrap() {
                for &arc in t.arcs() {
                    let flipped = t.flip(arc).unwrap().0.quiver();
                    let mutated = mutate(&t.quiver(), &DiscTriangulation::vertex_id(arc)).unwrap();
                    assert!(isomorphism(&flipped, &mutated).is_some(), "{t} at {arc:?}");
                }
            }
        }
    }
}
