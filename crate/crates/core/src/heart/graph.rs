use std::collections::BTreeMap;
use std::fmt::Write as _;

use rayon::prelude::*;

use super::{Heart, HeartKey, TiltDirection};

/// Decides which tilts a traversal may follow.
pub trait HeartFilter: Sync {
    fn admits(&self, from: &Heart, i: usize, dir: TiltDirection, to: &Heart) -> bool;
}

/// Follows every tilt.
pub struct NoFilter;

impl HeartFilter for NoFilter {
    fn admits(&self, _: &Heart, _: usize, _: TiltDirection, _: &Heart) -> bool {
        true
    }
}

/// Intermediate hearts between `H₀` and `H₀[1]`. The row-sign test alone lets
/// `H₀` tilt backwards at a simple whose class is positive, leaving the
/// fundamental domain; so forward tilts are taken only at simples of `H₀`
/// (non-negative rows) and backward tilts only at simples of `H₀[1]`.
pub struct Intermediate;

impl HeartFilter for Intermediate {
    fn admits(&self, from: &Heart, i: usize, dir: TiltDirection, to: &Heart) -> bool {
        let row = &from.classes()[i];
        let side = match dir {
            TiltDirection::Forward => row.iter().all(|&x| x >= 0),
            TiltDirection::Backward => row.iter().all(|&x| x <= 0),
        };
        side && to.is_intermediate()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Edge {
    pub source: usize,
    /// `None` when the tilt failed.
    pub target: Option<usize>,
    pub simple: usize,
    pub direction: TiltDirection,
    pub error: Option<String>,
}

/// A finite slice of the exchange graph of hearts.
#[derive(Clone, Debug, Default)]
pub struct ExchangeGraph {
    pub vertices: Vec<Heart>,
    pub depth: Vec<usize>,
    pub boundary: Vec<bool>,
    pub edges: Vec<Edge>,
}

impl ExchangeGraph {
    pub fn forward_edges(&self) -> impl Iterator<Item = &Edge> {
        self.edges
            .iter()
            .filter(|e| e.direction == TiltDirection::Forward && e.target.is_some())
    }

    /// Unoriented simple graph: each tilt pair contributes one edge.
    pub fn undirected_edges(&self) -> Vec<(usize, usize)> {
        let mut out: Vec<(usize, usize)> = self
            .edges
            .iter()
            .filter_map(|e| e.target.map(|t| (e.source.min(t), e.source.max(t))))
            .filter(|(a, b)| a != b)
            .collect();
        out.sort_unstable();
        out.dedup();
        out
    }

    pub fn to_dot(&self) -> String {
        let mut s = String::from("digraph exchange {\n");
        for (k, h) in self.vertices.iter().enumerate() {
            let label = h
                .classes()
                .iter()
                .map(|r| format!("({})", r.iter().map(i64::to_string).collect::<Vec<_>>().join(",")))
                .collect::<Vec<_>>()
                .join(" ");
            let extra = if self.boundary[k] { ", style=dashed" } else { "" };
            let _ = writeln!(s, "  h{k} [label=\"{label}\"{extra}];");
        }
        for e in &self.edges {
            match e.target {
                Some(t) => {
                    let _ = writeln!(
                        s,
                        "  h{} -> h{t} [label=\"S{} {}\"];",
                        e.source,
                        e.simple + 1,
                        e.direction
                    );
                }
                None => {
                    let _ = writeln!(
                        s,
                        "  // h{} S{} {} failed: {}",
                        e.source,
                        e.simple + 1,
                        e.direction,
                        e.error.as_deref().unwrap_or("")
                    );
                }
            }
        }
        s.push_str("}\n");
        s
    }
}

type Expansion = Vec<(usize, TiltDirection, Result<Heart, String>)>;

/// Breadth-first closure of `seed` under simple tilts. Frontiers are expanded
/// in parallel and merged in frontier order, so numbering does not depend on
/// the number of threads. `max_depth = None` runs until the frontier empties.
pub fn exchange_graph(seed: &Heart, max_depth: Option<usize>, filter: &dyn HeartFilter) -> ExchangeGraph {
    let mut g = ExchangeGraph::default();
    let mut index: BTreeMap<HeartKey, usize> = BTreeMap::new();
    index.insert(seed.key(), 0);
    g.vertices.push(seed.clone());
    g.depth.push(0);
    g.boundary.push(false);

    let mut frontier = vec![0usize];
    let mut level = 0;
    while !frontier.is_empty() && max_depth.is_none_or(|d| level < d) {
        let expansions: Vec<Expansion> = frontier
            .par_iter()
            .map(|&v| {
                let h = &g.vertices[v];
                let mut out = Vec::new();
                for i in 0..h.rank() {
                    for dir in [TiltDirection::Forward, TiltDirection::Backward] {
                        match h.simple_tilt(i, dir) {
                            Ok(t) if filter.admits(h, i, dir, &t) => out.push((i, dir, Ok(t))),
                            Ok(_) => {}
                            Err(e) => out.push((i, dir, Err(e.to_string()))),
                        }
                    }
                }
                out
            })
            .collect();

        let mut next = Vec::new();
        for (&v, expansion) in frontier.iter().zip(expansions) {
            for (simple, direction, result) in expansion {
                match result {
                    Ok(h) => {
                        let key = h.key();
                        let target = match index.get(&key) {
                            Some(&t) => t,
                            None => {
                                let t = g.vertices.len();
                                index.insert(key, t);
                                g.vertices.push(h);
                                g.depth.push(level + 1);
                                g.boundary.push(false);
                                next.push(t);
                                t
                            }
                        };
                        g.edges.push(Edge {
                            source: v,
                            target: Some(target),
                            simple,
                            direction,
                            error: None,
                        });
                    }
                    Err(e) => {
                        g.boundary[v] = true;
                        g.edges.push(Edge {
                            source: v,
                            target: None,
                            simple,
                            direction,
                            error: Some(e),
                        });
                    }
                }
            }
        }
        frontier = next;
        level += 1;
    }
    g
}
