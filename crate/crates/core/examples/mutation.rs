//! Mutating linear A3 at its middle vertex gives the oriented 3-cycle with
//! the potential abc. Mutating back recovers A3.

use quiverstab::qp::{isomorphism, mutate, QuiverWithPotential};

fn show(label: &str, qp: &QuiverWithPotential) {
    println!("{label}");
    for a in qp.quiver().arrows() {
        println!("  {}: {} -> {}", a.id, a.src, a.tgt);
    }
    for (cycle, c) in qp.potential().terms() {
        println!("  W += {c} * {}", cycle.join(""));
    }
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let a3 = QuiverWithPotential::linear_a(3);
    show("A3", &a3);

    let mu = mutate(&a3, "2")?;
    show("mu_2(A3)", &mu);
    println!("isomorphic to the 3-cycle: {}", isomorphism(&mu, &QuiverWithPotential::three_cycle()).is_some());

    println!("cyclic derivatives:");
    for (a, rel) in mu.jacobian_relations() {
        println!("  d_{a} W = {rel}");
    }

    let back = mutate(&mu, "2")?;
    println!("mu_2 twice is A3 again: {}", isomorphism(&back, &a3).is_some());
    Ok(())
}
