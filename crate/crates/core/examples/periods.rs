//! Zeroes and straight-segment periods of polynomial quadratic
//! differentials p(z) dz².

use quiverstab::periods::{genericity_proxy, PeriodTable, PolynomialQuadDifferential};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for text in ["z^2 - 1", "z^3 - z", "z^3 - 1", "z^4 - 2*z^2 + (0.5+0.5i)"] {
        let p = PolynomialQuadDifferential::parse(text)?;
        let table = PeriodTable::new(&p)?;
        println!("p(z) = {p}");
        for (k, z) in table.zeroes.iter().enumerate() {
            println!("  z{k} = {z:.6}");
        }
        for e in &table.entries {
            println!("  Z({}, {}) = {:.12}  [{} nodes]", e.i, e.j, e.value, e.nodes);
        }
        for (i, j) in &table.blocked {
            println!("  segment ({i}, {j}) passes through another zero");
        }
        println!("  generic (proxy): {}", genericity_proxy(&p)?);
    }
    Ok(())
}
