//! The elimination certificates for the two conceivable ruled shapes that
//! carry no surface: a genus-0 pencil class D meets the transformed branch
//! in fewer than ξ points, contradicting the minimality of ξ.
//!
//! ```sh
//! cargo run --example elimination
//! ```

use duval_planes::ruled::{
    elimination_certificate, shape_admissible, EliminatedShape, RuledBranchShape, ShapeVerdict,
};

fn main() -> duval_planes::Result<()> {
    // The shape classifier flags the two candidates.
    for (shape, label) in [
        (
            RuledBranchShape::new(12, 14, 1, vec![(7, 3)], vec![])?,
            "(ξ, ζ) = (12, 14), three [7,7]",
        ),
        (
            RuledBranchShape::new(16, 18, 1, vec![(9, 3)], vec![8])?,
            "(ξ, ζ) = (16, 18), three [9,9] + 8-tuple",
        ),
    ] {
        let verdict = shape_admissible(&shape);
        println!("{label}: {verdict:?}");
        let ShapeVerdict::Eliminated(case) = verdict else {
            continue;
        };
        let cert = elimination_certificate(case)?;
        println!(
            "  D² = {}, D·K = {}, D·E0* = {}, D·B = {} < ξ = {}  (contradiction: {})",
            cert.d_squared,
            cert.d_dot_canonical,
            cert.d_dot_center,
            cert.d_dot_branch,
            cert.xi,
            cert.contradicts_minimality
        );
        for assumption in &cert.assumptions {
            println!("  assuming: {assumption}");
        }
    }

    // The admissible shapes, for contrast.
    let first = RuledBranchShape::new(8, 6, 1, vec![], vec![])?;
    println!("(ξ, ζ) = (8, 6): {:?}", shape_admissible(&first));
    let second = RuledBranchShape::new(8, 12, 1, vec![(5, 3)], vec![])?;
    println!(
        "(ξ, ζ) = (8, 12), three [5,5]: {:?}",
        shape_admissible(&second)
    );
    assert_eq!(
        shape_admissible(&RuledBranchShape::new(16, 18, 1, vec![(9, 3)], vec![8])?),
        ShapeVerdict::Eliminated(EliminatedShape::NineNineTriple)
    );
    Ok(())
}
