use std::collections::BTreeSet;

use super::QpError;

/// A labelled arrow `id: src -> tgt`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Arrow {
    pub id: String,
    pub src: String,
    pub tgt: String,
}

impl Arrow {
    pub fn new(id: impl Into<String>, src: impl Into<String>, tgt: impl Into<String>) -> Self {
        Self {
            id: id.into(),
            src: src.into(),
            tgt: tgt.into(),
        }
    }
}

/// A finite quiver without loops or 2-cycles.
///
/// Vertex order is significant: it fixes the indexing of simples, dimension
/// vectors and class matrices everywhere else in the crate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Quiver {
    vertices: Vec<String>,
    arrows: Vec<Arrow>,
}

impl Quiver {
    pub fn new(vertices: Vec<String>, arrows: Vec<Arrow>) -> Result<Self, QpError> {
        let quiver = Self::new_unchecked(vertices, arrows)?;
        for a in &quiver.arrows {
            if a.src == a.tgt {
                return Err(QpError::Loop(a.id.clone()));
            }
        }
        for a in &quiver.arrows {
            if let Some(b) = quiver
                .arrows
                .iter()
                .find(|b| b.src == a.tgt && b.tgt == a.src)
            {
                return Err(QpError::TwoCycle(a.id.clone(), b.id.clone()));
            }
        }
        Ok(quiver)
    }

    /// Checks ids and endpoints only; loops and 2-cycles are allowed.
    pub(crate) fn new_unchecked(vertices: Vec<String>, arrows: Vec<Arrow>) -> Result<Self, QpError> {
        let mut seen = BTreeSet::new();
        for v in &vertices {
            if !seen.insert(v.as_str()) {
                return Err(QpError::DuplicateVertex(v.clone()));
            }
        }
        let mut ids = BTreeSet::new();
        for a in &arrows {
            if !ids.insert(a.id.as_str()) {
                return Err(QpError::DuplicateArrow(a.id.clone()));
            }
            for end in [&a.src, &a.tgt] {
                if !seen.contains(end.as_str()) {
                    return Err(QpError::UnknownVertex(end.clone()));
                }
            }
        }
        Ok(Self { vertices, arrows })
    }

    /// Linear quiver `1 -> 2 -> ... -> n` with arrows `a1, a2, ...`.
    pub fn linear_a(n: usize) -> Self {
        let vertices = (1..=n).map(|i| i.to_string()).collect();
        let arrows = (1..n)
            .map(|i| Arrow::new(format!("a{i}"), i.to_string(), (i + 1).to_string()))
            .collect();
        Self::new(vertices, arrows).expect("linear quiver is valid")
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn vertex_index(&self, v: &str) -> Option<usize> {
        self.vertices.iter().position(|x| x == v)
    }

    pub fn arrow(&self, id: &str) -> Option<&Arrow> {
        self.arrows.iter().find(|a| a.id == id)
    }

    pub fn has_vertex(&self, v: &str) -> bool {
        self.vertex_index(v).is_some()
    }

    /// Number of arrows `i -> j`, addressed by vertex id.
    pub fn arrow_count(&self, i: &str, j: &str) -> usize {
        self.arrows.iter().filter(|a| a.src == i && a.tgt == j).count()
    }

    /// `q[i][j]` = number of arrows from the i-th to the j-th vertex.
    pub fn adjacency(&self) -> Vec<Vec<usize>> {
        let n = self.vertices.len();
        let mut q = vec![vec![0; n]; n];
        for a in &self.arrows {
            let s = self.vertex_index(&a.src).expect("validated endpoint");
            let t = self.vertex_index(&a.tgt).expect("validated endpoint");
            q[s][t] += 1;
        }
        q
    }

    pub fn is_acyclic(&self) -> bool {
        // Kahn's algorithm on the adjacency counts.
        let q = self.adjacency();
        let n = q.len();
        let mut indeg: Vec<usize> = (0..n).map(|j| (0..n).map(|i| q[i][j]).sum()).collect();
        let mut stack: Vec<usize> = (0..n).filter(|&j| indeg[j] == 0).collect();
        let mut removed = 0;
        while let Some(v) = stack.pop() {
            removed += 1;
            for w in 0..n {
                if q[v][w] > 0 {
                    indeg[w] -= q[v][w];
                    if indeg[w] == 0 {
                        stack.push(w);
                    }
                }
            }
        }
        removed == n
    }
}

/// Returns `base` if unused, otherwise `base` with primes appended.
pub(crate) fn fresh_id(base: String, taken: &BTreeSet<String>) -> String {
    let mut id = base;
    while taken.contains(&id) {
        id.push('\'');
    }
    id
}
