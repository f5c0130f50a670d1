//! The Ginzburg graded quiver of the 3-cycle, with the differential on each
//! generator and a check that d squares to zero.

use quiverstab::qp::{ginzburg_graded_quiver, QuiverWithPotential};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let g = ginzburg_graded_quiver(&QuiverWithPotential::three_cycle(), 3)?;
    println!("CY-{} Ginzburg quiver on {} vertices", g.cy_dimension(), g.vertices().len());
    for a in g.arrows() {
        let d = g.differential(&a.id).expect("every generator has a differential");
        println!(
            "  {:<6} {} -> {}  deg {:>2}  d = {:<14} d^2 = 0: {}",
            a.id,
            a.src,
            a.tgt,
            a.degree,
            d.to_string(),
            g.apply(d).is_zero()
        );
    }
    Ok(())
}
