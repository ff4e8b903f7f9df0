//! Birational moves between branch models: elementary transformations on
//! Hirzebruch surfaces, contraction of the negative section down to the
//! plane, and the quadratic transformation turning a two-cusp plane branch
//! into a line configuration.
//!
//! ```sh
//! cargo run --example ruled_to_plane
//! ```

use duval_planes::duval::{build_branch, convert_d0_to_d1, DuValConfig};
use duval_planes::invariants::chi_of_cover;
use duval_planes::resolution::resolve;
use duval_planes::ruled::{
    contract_negative_section, elementary_transform, BranchSingularity, ElmCenter, RuledBranch,
    RuledSingularity,
};

fn main() -> duval_planes::Result<()> {
    // Start on F_2 with B = 8C0 + 18Γ and two [5,5]-points, each on a fibre
    // contained in the branch: one elementary transformation off the
    // section lands on F_1.
    let n = 2i64;
    let start = RuledBranch::new(
        2,
        8,
        14 + 2 * n,
        vec![RuledSingularity::new(BranchSingularity::Rr(5), true); n as usize],
    )?;
    println!(
        "on F_{}: B = {}C0 + {}Γ, B·C0 = {}",
        start.e(),
        start.class_coeffs().0,
        start.class_coeffs().1,
        start.dot_negative_section()
    );
    let moved = elementary_transform(
        &start,
        &ElmCenter::Singularity {
            index: 0,
            on_negative_section: false,
        },
    )?;
    println!(
        "after elm off the section: F_{}, B' = {}C0 + {}Γ, B'·C0' = {}",
        moved.branch.e(),
        moved.branch.class_coeffs().0,
        moved.branch.class_coeffs().1,
        moved.branch.dot_negative_section()
    );

    // Contract the (-1)-section: the image is the degree-(10+2n) Du Val
    // branch with a (2n+2)-tuple point where the section landed.
    let (plane_branch, step) = contract_negative_section(&moved.branch, false)?;
    assert!(step.is_isometry());
    println!(
        "after contracting C0: plane branch {} with singularities {:?}",
        plane_branch.class(),
        plane_branch
            .singularities()
            .iter()
            .map(|s| format!("{s:?}"))
            .collect::<Vec<_>>()
    );
    let direct = build_branch(&DuValConfig::dn(n as u32, 0, 0))?;
    let via_ruling = resolve(&plane_branch)?;
    let direct_cover = resolve(&direct)?;
    println!(
        "chi via the ruling: {}, chi of the direct configuration: {}",
        chi_of_cover(&via_ruling, 1)?,
        chi_of_cover(&direct_cover, 1)?
    );

    // The quadratic transformation: a degree-10 branch with six
    // [3,3]-points becomes the one-line configuration with a 4-tuple point
    // and four [3,3]-points.
    let d0 = DuValConfig::dn(0, 6, 0);
    let d1 = convert_d0_to_d1(&d0, true)?;
    println!("quadratic move: {d0:?} -> {d1:?}");
    Ok(())
}
