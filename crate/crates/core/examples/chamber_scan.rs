//! Scans b over a grid for z³ + az + b, tracks the two periods that play the
//! role of Z(S1) and Z(S2), and labels each cell by its A2 chamber.

use std::collections::BTreeMap;

use num_complex::Complex64;
use quiverstab::periods::{a2_chamber_scan, write_csv, Axis, ScanSpec};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let spec = ScanSpec {
        a: Complex64::new(-1.0, 0.0),
        re: "-1.5:1.5:41".parse::<Axis>()?,
        im: "-1.5:1.5:41".parse::<Axis>()?,
    };
    let scan = a2_chamber_scan(&spec)?;
    let mut counts = BTreeMap::new();
    for cell in &scan.cells {
        *counts.entry(cell.label.to_string()).or_insert(0usize) += 1;
    }
    println!("base cell {}", scan.base);
    for (label, n) in counts {
        println!("  {label:<12} {n}");
    }

    // one row above the real axis as CSV
    let row: Vec<_> = scan.cells.iter().filter(|c| c.iy == 26).cloned().collect();
    write_csv(&row, std::io::stdout())?;
    Ok(())
}
