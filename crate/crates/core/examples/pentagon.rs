//! The exchange graph of intermediate hearts of A2 is a pentagon. Sampling
//! central charges shows which heart supports each chamber.

use quiverstab::heart::{chamber_of, exchange_graph, Heart, Intermediate};
use quiverstab::qp::QuiverWithPotential;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let h0 = Heart::standard(QuiverWithPotential::linear_a(2));
    let g = exchange_graph(&h0, None, &Intermediate);
    println!("{} hearts", g.vertices.len());
    for (k, h) in g.vertices.iter().enumerate() {
        println!("  {k}: {:?}", h.classes());
    }
    for e in g.forward_edges() {
        println!("  {} -> {} tilting S{}", e.source, e.target.unwrap(), e.simple + 1);
    }
    println!("{}", g.to_dot());

    // Re Z(S1) = Re Z(S2) = -1, varying the imaginary parts
    for (y1, y2) in [(1.0, 1.0), (-1.0, 1.0), (-1.0, 3.0), (1.0, -1.0), (-1.0, -1.0), (0.0, 1.0)] {
        let c = chamber_of(&(-1.0, y1), &(-1.0, y2), 1e-12)?;
        println!("Im Z = ({y1:>4}, {y2:>4}): {c}");
    }
    Ok(())
}
