//! Triangulations of a polygon and their flips match quivers with potential
//! and mutations. The flip graph of the m-gon is compared with the heart
//! exchange graph of the quiver of one of its triangulations.

use quiverstab::surface::{compare_exchange_graphs, enumerate_triangulations, flip_graph, flip_mutation_square};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let pentagon = enumerate_triangulations(5)?;
    for t in &pentagon {
        let q = t.quiver();
        let arrows: Vec<String> = q.quiver().arrows().iter().map(|a| format!("{}->{}", a.src, a.tgt)).collect();
        println!("{t}: quiver {}", arrows.join(", "));
        for &arc in t.arcs() {
            assert!(flip_mutation_square(t, arc)?);
        }
    }

    for m in 4..=7 {
        let flips = flip_graph(m)?;
        println!(
            "m = {m}: {} triangulations, flip graph {}, {}",
            flips.graph().degrees().len(),
            flips.graph().describe(),
            compare_exchange_graphs(m)?.report()
        );
    }
    Ok(())
}
