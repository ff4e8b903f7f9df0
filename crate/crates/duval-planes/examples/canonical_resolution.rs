//! Canonical resolution of a singular branch curve: the per-center
//! subtraction ledger, the parity rule at `[r,r]`-points, and the smooth
//! branch class.
//!
//! ```sh
//! cargo run --example canonical_resolution
//! ```

use duval_planes::lattice::{CenterId, SurfaceModel};
use duval_planes::resolution::{resolve, BranchModel, SingularityAssignment};

fn main() -> duval_planes::Result<()> {
    // A degree-14 plane curve with a 6-tuple point and two [5,5]-points:
    // the branch of the two-line double plane.
    let plane = SurfaceModel::projective_plane();
    let class = plane.class(vec![14])?;
    let branch = BranchModel::new(
        plane,
        class,
        vec![
            SingularityAssignment::mtuple(CenterId(0), 6),
            SingularityAssignment::rr_point(CenterId(1), CenterId(3), 5),
            SingularityAssignment::rr_point(CenterId(2), CenterId(4), 5),
        ],
    )?;

    let cover = resolve(&branch)?;
    println!("resolving B0 = {}:", branch.class());
    println!(
        "{:>8} {:>14} {:>13} {:>22}",
        "center", "multiplicity", "subtraction", "exceptional in branch"
    );
    for step in cover.steps() {
        println!(
            "{:>8} {:>14} {:>13} {:>22}",
            step.center.to_string(),
            step.multiplicity,
            2 * step.subtraction,
            step.exceptional_in_branch
        );
    }
    println!("smooth branch  B_s = {}", cover.smooth_class());
    println!("half class     Δ_s = {}", cover.half_class());

    // B_s·E_i* recovers each subtraction.
    for step in cover.steps() {
        let exc = cover.model().exceptional(step.center)?;
        assert_eq!(cover.smooth_class().intersect(&exc)?, 2 * step.subtraction);
    }
    println!("checked: B_s·E_i* = 2⌊m_i/2⌋ at every center");
    Ok(())
}
