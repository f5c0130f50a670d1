use std::collections::VecDeque;
use std::fmt;
use std::io::Write;
use std::str::FromStr;

use num_complex::Complex64;
use rayon::prelude::*;
use serde::Serialize;

use super::{period_entry, PeriodError, PeriodTable, PolynomialQuadDifferential};
use crate::heart::{chamber_of, Chamber};

/// Evenly spaced samples `min, …, max` (`n ≥ 1`); written `min:max:n`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Axis {
    pub min: f64,
    pub max: f64,
    pub n: usize,
}

impl Axis {
    pub fn new(min: f64, max: f64, n: usize) -> Result<Self, PeriodError> {
        if n == 0 || !min.is_finite() || !max.is_finite() || min > max || (n == 1 && min != max) {
            return Err(PeriodError::Grid(format!("{min}:{max}:{n}")));
        }
        Ok(Self { min, max, n })
    }

    pub fn value(&self, k: usize) -> f64 {
        if self.n == 1 {
            self.min
        } else {
            self.min + (self.max - self.min) * k as f64 / (self.n - 1) as f64
        }
    }
}

impl FromStr for Axis {
    type Err = PeriodError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || PeriodError::Grid(s.to_string());
        let parts: Vec<&str> = s.split(':').collect();
        let [lo, hi, n] = parts[..] else { return Err(bad()) };
        Axis::new(
            lo.trim().parse().map_err(|_| bad())?,
            hi.trim().parse().map_err(|_| bad())?,
            n.trim().parse().map_err(|_| bad())?,
        )
    }
}

/// The slice `z³ + a z + b` with `a` fixed and `b = x + iy` on a grid.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ScanSpec {
    pub a: Complex64,
    pub re: Axis,
    pub im: Axis,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CellLabel {
    Chamber(Chamber),
    /// Colliding zeroes.
    Degenerate,
    /// A tracked basis segment runs through the third zero.
    Blocked,
    /// Not connected to the base cell through usable cells.
    Unreached,
}

impl fmt::Display for CellLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CellLabel::Chamber(c) => c.fmt(f),
            CellLabel::Degenerate => f.write_str("degenerate"),
            CellLabel::Blocked => f.write_str("blocked"),
            CellLabel::Unreached => f.write_str("unreached"),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct ScanCell {
    pub ix: usize,
    pub iy: usize,
    pub a: Complex64,
    pub b: Complex64,
    /// `|4a³ + 27b²|`.
    pub discriminant: f64,
    /// `(Z(S₁), Z(S₂))` tracked from the base cell.
    pub z: Option<(Complex64, Complex64)>,
    pub label: CellLabel,
    pub generic: Option<bool>,
}

#[derive(Clone, Debug)]
pub struct Scan {
    pub cells: Vec<ScanCell>,
    /// Index of the base cell in `cells`.
    pub base: usize,
}

struct Raw {
    p: Option<PolynomialQuadDifferential>,
    generic: Option<bool>,
}

/// Periods of the slice, with zero labels and signs carried by continuity
/// from the usable cell nearest the grid centre, where the basis is
/// `(∫_{z₀}^{z₁}, ∫_{z₁}^{z₂})` with signs making both imaginary parts positive.
/// Cells are returned in grid order (`iy` major).
pub fn a2_chamber_scan(spec: &ScanSpec) -> Result<Scan, PeriodError> {
    let (nx, ny) = (spec.re.n, spec.im.n);
    let b_at = |k: usize| Complex64::new(spec.re.value(k % nx), spec.im.value(k / nx));
    let raw: Vec<Raw> = (0..nx * ny)
        .into_par_iter()
        .map(|k| {
            let p = PolynomialQuadDifferential::a2(spec.a, b_at(k)).ok();
            let generic = p.as_ref().and_then(|p| {
                let table = PeriodTable::new(p).ok()?;
                Some(table.entries.iter().all(|e| e.value.im.abs() > 1e-9 * e.value.norm()))
            });
            Raw { p, generic }
        })
        .collect();

    let mut cells: Vec<ScanCell> = (0..nx * ny)
        .map(|k| {
            let (a, b) = (spec.a, b_at(k));
            ScanCell {
                ix: k % nx,
                iy: k / nx,
                a,
                b,
                discriminant: (a * a * a * 4.0 + b * b * 27.0).norm(),
                z: None,
                label: if raw[k].p.is_some() { CellLabel::Unreached } else { CellLabel::Degenerate },
                generic: raw[k].generic,
            }
        })
        .collect();

    // tracked zeroes per reached cell
    let mut tracked: Vec<Option<[Complex64; 3]>> = vec![None; nx * ny];
    let (cx, cy) = ((nx - 1) as f64 / 2.0, (ny - 1) as f64 / 2.0);
    let mut order: Vec<usize> = (0..nx * ny).collect();
    order.sort_by(|&k, &l| {
        let d = |k: usize| ((k % nx) as f64 - cx).powi(2) + ((k / nx) as f64 - cy).powi(2);
        d(k).total_cmp(&d(l)).then(k.cmp(&l))
    });
    let base = order
        .into_iter()
        .find_map(|k| {
            let p = raw[k].p.as_ref()?;
            let zs: [Complex64; 3] = p.zeroes().try_into().ok()?;
            let (z1, z2) = basis(p, &zs)?;
            if z1.im.abs() <= 1e-9 * z1.norm() || z2.im.abs() <= 1e-9 * z2.norm() {
                return None;
            }
            let up = |z: Complex64| if z.im < 0.0 { -z } else { z };
            Some((k, zs, (up(z1), up(z2))))
        })
        .ok_or(PeriodError::NoBaseCell)?;

    let mut queue = VecDeque::new();
    settle(&mut cells[base.0], &mut tracked[base.0], base.1, base.2)?;
    queue.push_back(base.0);
    while let Some(k) = queue.pop_front() {
        let (x, y) = (k % nx, k / nx);
        let parent_zs = tracked[k].expect("queued cells are tracked");
        let parent_z = cells[k].z.expect("queued cells carry charges");
        let mut next = Vec::with_capacity(4);
        if x > 0 {
            next.push(k - 1);
        }
        if x + 1 < nx {
            next.push(k + 1);
        }
        if y > 0 {
            next.push(k - nx);
        }
        if y + 1 < ny {
            next.push(k + nx);
        }
        for l in next {
            if cells[l].label != CellLabel::Unreached {
                continue;
            }
            let p = raw[l].p.as_ref().expect("unreached cells are nondegenerate");
            let zs = match_zeroes(&parent_zs, p.zeroes());
            match basis(p, &zs) {
                Some((z1, z2)) => {
                    let near = |z: Complex64, prev: Complex64| if (z - prev).norm() <= (z + prev).norm() { z } else { -z };
                    settle(&mut cells[l], &mut tracked[l], zs, (near(z1, parent_z.0), near(z2, parent_z.1)))?;
                    queue.push_back(l);
                }
                None => cells[l].label = CellLabel::Blocked,
            }
        }
    }
    Ok(Scan { cells, base: base.0 })
}

fn settle(
    cell: &mut ScanCell,
    tracked: &mut Option<[Complex64; 3]>,
    zs: [Complex64; 3],
    z: (Complex64, Complex64),
) -> Result<(), PeriodError> {
    let chamber = chamber_of(&(z.0.re, z.0.im), &(z.1.re, z.1.im), 1e-9).map_err(|_| PeriodError::Degenerate)?;
    cell.z = Some(z);
    cell.label = CellLabel::Chamber(chamber);
    *tracked = Some(zs);
    Ok(())
}

/// Periods along `z₀z₁` and `z₁z₂` for zeroes listed in tracked order.
fn basis(p: &PolynomialQuadDifferential, zs: &[Complex64; 3]) -> Option<(Complex64, Complex64)> {
    let idx = |z: Complex64| p.zeroes().iter().position(|w| *w == z);
    let (i0, i1, i2) = (idx(zs[0])?, idx(zs[1])?, idx(zs[2])?);
    let z1 = period_entry(p, i0, i1).ok()?.value;
    let z2 = period_entry(p, i1, i2).ok()?.value;
    Some((z1, z2))
}

/// Reorders `new` to follow `old` as closely as possible.
fn match_zeroes(old: &[Complex64; 3], new: &[Complex64]) -> [Complex64; 3] {
    const PERMS: [[usize; 3]; 6] = [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];
    let cost = |p: &[usize; 3]| (0..3).map(|k| (new[p[k]] - old[k]).norm_sqr()).sum::<f64>();
    let best = PERMS
        .iter()
        .min_by(|a, b| cost(a).total_cmp(&cost(b)))
        .expect("six permutations");
    [new[best[0]], new[best[1]], new[best[2]]]
}

#[derive(Serialize)]
struct Row {
    a_re: f64,
    a_im: f64,
    b_re: f64,
    b_im: f64,
    discriminant: f64,
    #[serde(rename = "Z1_re")]
    z1_re: Option<f64>,
    #[serde(rename = "Z1_im")]
    z1_im: Option<f64>,
    #[serde(rename = "Z2_re")]
    z2_re: Option<f64>,
    #[serde(rename = "Z2_im")]
    z2_im: Option<f64>,
    label: String,
    generic_flag: &'static str,
}

/// Writes the scan as CSV; the genericity column is the straight-segment proxy.
pub fn write_csv<W: Write>(cells: &[ScanCell], out: W) -> Result<(), PeriodError> {
    let err = |e: csv::Error| PeriodError::Csv(e.to_string());
    let mut w = csv::Writer::from_writer(out);
    for c in cells {
        w.serialize(Row {
            a_re: c.a.re,
            a_im: c.a.im,
            b_re: c.b.re,
            b_im: c.b.im,
            discriminant: c.discriminant,
            z1_re: c.z.map(|z| z.0.re),
            z1_im: c.z.map(|z| z.0.im),
            z2_re: c.z.map(|z| z.1.re),
            z2_im: c.z.map(|z| z.1.im),
            label: c.label.to_string(),
            generic_flag: match c.generic {
                Some(true) => "proxy-generic",
                Some(false) => "proxy-nongeneric",
                None => "",
            },
        })
        .map_err(err)?;
    }
    w.flush().map_err(|e| PeriodError::Csv(e.to_string()))
}
