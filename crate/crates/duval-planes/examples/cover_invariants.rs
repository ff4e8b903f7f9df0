//! Invariants of double covers: chi, K² of the resolution, the
//! Riemann-Roch value of 2K + Delta on the quotient, and fixed points of
//! the covering involution.
//!
//! ```sh
//! cargo run --example cover_invariants
//! ```

use duval_planes::invariants::{
    bicanonical_factorization_test, chi_of_cover, fixed_point_counts, h0_two_k_plus_delta,
    ksq_of_resolution, pencil_genus,
};
use duval_planes::lattice::SurfaceModel;
use duval_planes::resolution::{resolve, BranchModel};

fn main() -> duval_planes::Result<()> {
    // Smooth plane branches of degree 8 and 10: chi = 4 and 7.
    for degree in [8i64, 10] {
        let plane = SurfaceModel::projective_plane();
        let class = plane.class(vec![degree])?;
        let cover = resolve(&BranchModel::new(plane, class, vec![])?)?;
        let chi = chi_of_cover(&cover, 1)?;
        let ksq = ksq_of_resolution(&cover)?;
        let h0 = h0_two_k_plus_delta(&cover, 1)?;
        println!(
            "plane branch of degree {degree}: chi = {chi}, K² = {ksq}, h0(2K+Δ) = {h0}, \
             bicanonical map factors: {}",
            bicanonical_factorization_test(&cover)?
        );
    }

    // A ruled branch with B·Γ = 8 carries a genus-3 pencil; B·Γ = 6 would
    // be the excluded genus-2 case.
    let f1 = SurfaceModel::hirzebruch(1)?;
    let class = f1.class(vec![8, 10])?;
    let cover = resolve(&BranchModel::new(f1, class, vec![])?)?;
    let fibre = cover.model().fibre()?;
    println!(
        "ruled branch 8C0+10Γ: fibre pencil genus = {}",
        pencil_genus(&cover, &fibre)?
    );

    // Isolated fixed points of the involution from the minimal-model data:
    // K² = 8, chi = 5, rational quotient, h0 = 0 gives k = 4.
    let (k, kr) = fixed_point_counts(8, 5, 1, 0);
    println!("fixed points from (K², chi, chi_quotient, h0) = (8, 5, 1, 0): k = {k}, K·R = {kr}");
    Ok(())
}
