//! Polynomial quadratic differentials on the sphere: zeroes, straight-segment
//! periods, a genericity proxy and the A2 chamber scan.

mod period;
mod poly;
mod scan;

pub use period::{genericity_proxy, period, period_entry, period_with_nodes, PeriodEntry, PeriodTable, MAX_NODES};
pub use poly::{parse_polynomial, PolynomialQuadDifferential};
pub use scan::{a2_chamber_scan, write_csv, Axis, CellLabel, Scan, ScanCell, ScanSpec};

use thiserror::Error;

#[derive(Debug, Clone, Error, PartialEq)]
pub enum PeriodError {
    #[error("cannot parse polynomial: {0}")]
    Parse(String),
    #[error("degree {0} is too small, need at least 2")]
    Degree(usize),
    #[error("polynomial is not centered (zeroes must sum to zero)")]
    NotCentered,
    #[error("degenerate differential: zeroes collide")]
    Degenerate,
    #[error("no zero pair ({0}, {1})")]
    Index(usize, usize),
    #[error("segment from zero {i} to zero {j} passes through zero {k}; use a detour path")]
    Blocked { i: usize, j: usize, k: usize },
    #[error("quadrature for pair ({0}, {1}) exceeded the node budget")]
    NotConverged(usize, usize),
    #[error("invalid grid: {0}")]
    Grid(String),
    #[error("no usable base cell in the grid")]
    NoBaseCell,
    #[error("csv output failed: {0}")]
    Csv(String),
}
