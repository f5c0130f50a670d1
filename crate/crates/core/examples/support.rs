//! The support property constant of an A2 central charge, and the weight
//! bookkeeping of decorated marked surfaces.

use num_rational::Rational64;
use quiverstab::heart::{support_constant, Norm};
use quiverstab::rep::CentralCharge;
use quiverstab::surface::{decoration_count, MarkedSurfaceData};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let z = CentralCharge::new(vec![
        (Rational64::from(-1), Rational64::from(1)),
        (Rational64::from(1), Rational64::from(1)),
    ])?;
    let classes = vec![vec![1, 0], vec![0, 1], vec![1, 1]];
    for norm in [Norm::Euclidean, Norm::Sup] {
        let r = support_constant(&z, &classes, norm)?;
        println!("{norm:?}: c² = {}, c = {:.6}", r.squared, r.constant);
    }

    // a disc with 5 marked points carries 3 decorations of weight 1
    let w = decoration_count(0, &[5], 1).expect("weights fit");
    let surface = MarkedSurfaceData::new(0, vec![5], vec![1; w])?;
    println!("disc with 5 marked points: {w} decorations, compatible: {}", surface.check_compatibility());
    for (g, b, w) in [(0, vec![3], 1), (1, vec![1], 3), (0, vec![2, 2], 2)] {
        println!("g = {g}, boundary {b:?}, weight {w}: {:?}", decoration_count(g, &b, w));
    }
    Ok(())
}
