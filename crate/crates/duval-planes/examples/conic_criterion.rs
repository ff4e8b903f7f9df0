//! The conic criterion for irregularity: six distinguished points on a
//! common conic make the surface irregular with p_g = q = 1; the dimension
//! of the space of conics through given rational points is computed by
//! exact fraction-free elimination.
//!
//! ```sh
//! cargo run --example conic_criterion
//! ```

use duval_planes::conic::{conic_space_dim, PlanePoint};
use duval_planes::duval::{irregularity, ConicEvidence, DuValConfig};

fn points(raw: &[[i64; 3]]) -> duval_planes::Result<Vec<PlanePoint>> {
    raw.iter()
        .map(|&[x, y, z]| PlanePoint::from_integers(x, y, z))
        .collect()
}

fn main() -> duval_planes::Result<()> {
    let on_circle = [
        [1, 0, 1],
        [0, 1, 1],
        [-1, 0, 1],
        [0, -1, 1],
        [3, 4, 5],
        [5, 12, 13],
    ];
    let generic = [
        [1, 0, 0],
        [0, 1, 0],
        [0, 0, 1],
        [1, 1, 1],
        [1, 2, 3],
        [2, 3, 1],
    ];

    println!("dim of conics through no points: {}", conic_space_dim(&[])?);
    println!(
        "dim through five generic points:  {}",
        conic_space_dim(&points(&generic[..5])?)?
    );
    println!(
        "dim through six generic points:   {}",
        conic_space_dim(&points(&generic)?)?
    );
    println!(
        "dim through six points of x²+y²=z²: {}",
        conic_space_dim(&points(&on_circle)?)?
    );

    // The same evidence drives p_g and q of the six-line configuration.
    for (label, raw) in [("on a conic", on_circle), ("generic", generic)] {
        let config = DuValConfig::TypeDn {
            n: 6,
            delta1: 0,
            delta2: 0,
            gamma_infinitely_near: false,
            points_on_conic: ConicEvidence::Coordinates(points(&raw)?),
        };
        let (pg, q) = irregularity(&config)?;
        println!("six-line configuration, [5,5]-points {label}: p_g = {pg}, q = {q}");
    }
    Ok(())
}
