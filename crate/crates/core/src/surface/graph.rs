use std::collections::BTreeMap;
use std::fmt::Write as _;

use super::triangulation::{enumerate_triangulations, DiscTriangulation};
use super::SurfaceError;
use crate::heart::{exchange_graph, Heart, Intermediate};
use crate::qp::{isomorphism, mutate};

pub const MAX_FLIP_GRAPH: usize = 10;
const MAX_COMPARE: usize = 8;

/// Undirected graph without loops or multiple edges; edges stored `(a, b)`, `a < b`, sorted.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimpleGraph {
    pub n: usize,
    pub edges: Vec<(usize, usize)>,
}

impl SimpleGraph {
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Self {
        let mut edges: Vec<(usize, usize)> = edges
            .into_iter()
            .filter(|(a, b)| a != b)
            .map(|(a, b)| (a.min(b), a.max(b)))
            .collect();
        edges.sort_unstable();
        edges.dedup();
        Self { n, edges }
    }

    pub fn adjacency(&self) -> Vec<Vec<bool>> {
        let mut adj = vec![vec![false; self.n]; self.n];
        for &(a, b) in &self.edges {
            adj[a][b] = true;
            adj[b][a] = true;
        }
        adj
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut d = vec![0; self.n];
        for &(a, b) in &self.edges {
            d[a] += 1;
            d[b] += 1;
        }
        d
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        let adj = self.adjacency();
        let mut seen = vec![false; self.n];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(v) = stack.pop() {
            for w in 0..self.n {
                if adj[v][w] && !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }

    /// Short human description: "single vertex", "single edge", "5-cycle", ….
    pub fn describe(&self) -> String {
        let degrees = self.degrees();
        match (self.n, self.edges.len()) {
            (1, 0) => "single vertex".into(),
            (2, 1) => "single edge".into(),
            (n, e) if n >= 3 && e == n && self.is_connected() && degrees.iter().all(|&d| d == 2) => {
                format!("{n}-cycle")
            }
            (n, e) => format!("{n} vertices, {e} edges"),
        }
    }
}

/// A vertex bijection `a → b` preserving adjacency, by backtracking with
/// degree pruning.
pub fn graph_isomorphism(a: &SimpleGraph, b: &SimpleGraph) -> Option<Vec<usize>> {
    if a.n != b.n || a.edges.len() != b.edges.len() {
        return None;
    }
    let (da, db) = (a.degrees(), b.degrees());
    let mut sa = da.clone();
    let mut sb = db.clone();
    sa.sort_unstable();
    sb.sort_unstable();
    if sa != sb {
        return None;
    }
    let (aa, ab) = (a.adjacency(), b.adjacency());
    let mut map = vec![usize::MAX; a.n];
    let mut used = vec![false; a.n];

    fn go(
        i: usize,
        aa: &[Vec<bool>],
        ab: &[Vec<bool>],
        da: &[usize],
        db: &[usize],
        map: &mut Vec<usize>,
        used: &mut Vec<bool>,
    ) -> bool {
        if i == aa.len() {
            return true;
        }
        for j in 0..aa.len() {
            if used[j] || da[i] != db[j] || !(0..i).all(|k| aa[i][k] == ab[j][map[k]]) {
                continue;
            }
            map[i] = j;
            used[j] = true;
            if go(i + 1, aa, ab, da, db, map, used) {
                return true;
            }
            used[j] = false;
        }
        false
    }
    go(0, &aa, &ab, &da, &db, &mut map, &mut used).then_some(map)
}

/// Triangulations of the `m`-gon joined by flips.
#[derive(Clone, Debug)]
pub struct FlipGraph {
    pub triangulations: Vec<DiscTriangulation>,
    pub edges: Vec<(usize, usize)>,
}

impl FlipGraph {
    pub fn graph(&self) -> SimpleGraph {
        SimpleGraph::new(self.triangulations.len(), self.edges.iter().copied())
    }

    pub fn to_dot(&self) -> String {
        let mut s = String::from("graph flips {\n");
        for (k, t) in self.triangulations.iter().enumerate() {
            let _ = writeln!(s, "  t{k} [label=\"{t}\"];");
        }
        for (a, b) in &self.edges {
            let _ = writeln!(s, "  t{a} -- t{b};");
        }
        s.push_str("}\n");
        s
    }
}

pub fn flip_graph(m: usize) -> Result<FlipGraph, SurfaceError> {
    if !(3..=MAX_FLIP_GRAPH).contains(&m) {
        return Err(SurfaceError::PolygonSize(m));
    }
    let triangulations = enumerate_triangulations(m)?;
    let index: BTreeMap<&DiscTriangulation, usize> =
        triangulations.iter().enumerate().map(|(k, t)| (t, k)).collect();
    let mut edges = Vec::new();
    for (k, t) in triangulations.iter().enumerate() {
        for &arc in t.arcs() {
            let j = index[&t.flip(arc)?.0];
            if k < j {
                edges.push((k, j));
            }
        }
    }
    edges.sort_unstable();
    Ok(FlipGraph { triangulations, edges })
}

/// Does flipping `arc` match mutating the quiver at the arc's vertex?
pub fn flip_mutation_square(t: &DiscTriangulation, arc: (usize, usize)) -> Result<bool, SurfaceError> {
    let flipped = t.flip(arc)?.0.quiver();
    let mutated = mutate(&t.quiver(), &DiscTriangulation::vertex_id(arc))?;
    Ok(isomorphism(&flipped, &mutated).is_some())
}

#[derive(Clone, Debug)]
pub struct Comparison {
    pub flips: SimpleGraph,
    pub hearts: SimpleGraph,
    /// Flip-graph vertex `k` corresponds to heart `mapping[k]`.
    pub mapping: Option<Vec<usize>>,
}

impl Comparison {
    pub fn is_isomorphic(&self) -> bool {
        self.mapping.is_some()
    }

    pub fn report(&self) -> String {
        if self.is_isomorphic() {
            format!("isomorphic: {}", self.flips.describe())
        } else {
            format!(
                "not isomorphic: flip graph is {}, heart graph is {}",
                self.flips.describe(),
                self.hearts.describe()
            )
        }
    }
}

/// Compares the flip graph of the `m`-gon with the unoriented graph of
/// intermediate hearts seeded at the quiver of its first triangulation.
pub fn compare_exchange_graphs(m: usize) -> Result<Comparison, SurfaceError> {
    if !(3..=MAX_COMPARE).contains(&m) {
        return Err(SurfaceError::PolygonSize(m));
    }
    let flips = flip_graph(m)?;
    let seed = Heart::standard(flips.triangulations[0].quiver());
    let hearts = exchange_graph(&seed, None, &Intermediate);
    let hearts = SimpleGraph::new(hearts.vertices.len(), hearts.undirected_edges());
    let flips = flips.graph();
    let mapping = graph_isomorphism(&flips, &hearts);
    Ok(Comparison {
        flips,
        hearts,
        mapping,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_flip_graphs() {
        assert_eq!(flip_graph(5).unwrap().graph().describe(), "5-cycle");
        assert_eq!(flip_graph(4).unwrap().graph().describe(), "single edge");
        assert_eq!(flip_graph(3).unwrap().graph().describe(), "single vertex");
        let six = flip_graph(6).unwrap().graph();
        assert_eq!((six.n, six.edges.len()), (14, 21));
        assert!(six.degrees().iter().all(|&d| d == 3));
    }

    #[test]
    fn comparisons() {
        assert_eq!(compare_exchange_graphs(5).unwrap().report(), "isomorphic: 5-cycle");
        assert_eq!(compare_exchange_graphs(4).unwrap().report(), "isomorphic: single edge");
        assert_eq!(compare_exchange_graphs(3).unwrap().report(), "isomorphic: single vertex");
        assert!(compare_exchange_graphs(6).unwrap().is_isomorphic());
    }

    #[test]
    fn non_isomorphic_graphs() {
        let path = SimpleGraph::new(3, [(0, 1), (1, 2)]);
        let tri = SimpleGraph::new(3, [(0, 1), (1, 2), (0, 2)]);
        assert!(graph_isomorphism(&path, &tri).is_none());
        assert_eq!(tri.describe(), "3-cycle");
        assert_eq!(graph_isomorphism(&path, &path).unwrap(), vec![0, 1, 2]);
    }

    #[test]
    fn pentagon_squares_commute() {
        let mut count = 0;
        for t in enumerate_triangulations(5).unwrap() {
            for &arc in t.arcs() {
                assert!(flip_mutation_square(&t, arc).unwrap());
                count += 1;
            }
        }
        assert_eq!(count, 10);
    }
}
