//! Marked-surface bookkeeping and triangulations of the disc, their flips,
//! quivers, flip graphs, and the comparison with heart exchange graphs.

mod graph;
mod triangulation;

pub use graph::{
    compare_exchange_graphs, flip_graph, flip_mutation_square, graph_isomorphism, Comparison, FlipGraph,
    SimpleGraph, MAX_FLIP_GRAPH,
};
pub use triangulation::{enumerate_triangulations, DiscTriangulation, MAX_POLYGON};

use thiserror::Error;

use crate::qp::QpError;

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum SurfaceError {
    #[error("polygon size {0} is out of range")]
    PolygonSize(usize),
    #[error("({0},{1}) is not a diagonal")]
    NotAnArc(usize, usize),
    #[error("arcs {0:?} and {1:?} cross")]
    Crossing((usize, usize), (usize, usize)),
    #[error("{0} arcs given, a triangulation has {1}")]
    NotMaximal(usize, usize),
    #[error("arc ({0},{1}) is not in the triangulation")]
    NotInTriangulation(usize, usize),
    #[error("invalid surface data: {0}")]
    SurfaceData(String),
    #[error(transparent)]
    Qp(#[from] QpError),
}

/// Genus, marked points per boundary component and decoration weights of a
/// weighted decorated marked surface.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MarkedSurfaceData {
    pub genus: u32,
    pub boundary: Vec<u32>,
    pub weights: Vec<u32>,
}

impl MarkedSurfaceData {
    pub fn new(genus: u32, boundary: Vec<u32>, weights: Vec<u32>) -> Result<Self, SurfaceError> {
        if boundary.is_empty() {
            return Err(SurfaceError::SurfaceData("at least one boundary component".into()));
        }
        if boundary.iter().chain(&weights).any(|&x| x == 0) {
            return Err(SurfaceError::SurfaceData("counts and weights must be positive".into()));
        }
        Ok(Self {
            genus,
            boundary,
            weights,
        })
    }

    /// `Σ w_i − Σ (M_j + 2) = 4g − 4`.
    pub fn check_compatibility(&self) -> bool {
        let w: i64 = self.weights.iter().map(|&x| x as i64).sum();
        let m: i64 = self.boundary.iter().map(|&x| x as i64 + 2).sum();
        w - m == 4 * self.genus as i64 - 4
    }
}

/// Number of decorations of equal weight `w` a surface must carry, if any.
pub fn decoration_count(genus: u32, boundary: &[u32], w: u32) -> Option<usize> {
    let m: i64 = boundary.iter().map(|&x| x as i64 + 2).sum();
    let total = 4 * genus as i64 - 4 + m;
    (w > 0 && total > 0 && total % w as i64 == 0).then(|| (total / w as i64) as usize)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn compatibility() {
        assert!(MarkedSurfaceData::new(0, vec![5], vec![1, 1, 1]).unwrap().check_compatibility());
        assert!(!MarkedSurfaceData::new(0, vec![5], vec![1, 1]).unwrap().check_compatibility());
        assert!(MarkedSurfaceData::new(1, vec![3, 3], vec![5, 5]).unwrap().check_compatibility());
        assert!(MarkedSurfaceData::new(0, vec![], vec![1]).is_err());
        assert!(MarkedSurfaceData::new(0, vec![5], vec![0]).is_err());
    }

    #[test]
    fn pentagon_needs_three_simple_decorations() {
        assert_eq!(decoration_count(0, &[5], 1), Some(3));
        assert_eq!(decoration_count(0, &[5], 2), None);
    }
}
