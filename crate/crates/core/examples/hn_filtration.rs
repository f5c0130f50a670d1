//! Harder-Narasimhan filtrations of the nonsplit extension E of A2 under two
//! central charges, computed exactly and cross-checked by brute force.

use num_rational::Rational64;
use quiverstab::qp::QuiverWithPotential;
use quiverstab::rep::{all_representations, hn_filtration, hn_oracle, CentralCharge, Representation};

fn charge(values: [(i64, i64); 2]) -> CentralCharge<Rational64> {
    CentralCharge::new(values.iter().map(|&(x, y)| (Rational64::from(x), Rational64::from(y))).collect()).unwrap()
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let qp = QuiverWithPotential::linear_a(2);
    // the representation k -> k with a nonzero map
    let e: Representation = all_representations(&qp, 2, &[1, 1])?
        .into_iter()
        .find(|v| v.matrices().values().any(|m| !m.is_zero()))
        .expect("a nonsplit extension exists");

    for (label, z) in [
        ("phase(S1) > phase(S2)", charge([(-1, 1), (1, 1)])),
        ("phase(S1) < phase(S2)", charge([(1, 1), (-1, 1)])),
    ] {
        let factors = hn_filtration(&e, &z)?;
        assert_eq!(factors, hn_oracle(&e, &z)?);
        println!("{label}:");
        for f in factors {
            println!("  class {:?}  phase {:.4}", f.class, f.phase);
        }
    }
    Ok(())
}
