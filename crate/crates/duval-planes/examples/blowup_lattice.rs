//! Divisor classes on blown-up surfaces: build models, blow up points
//! (also infinitely near ones), and compute intersection numbers in the
//! total-transform basis.
//!
//! ```sh
//! cargo run --example blowup_lattice
//! ```

use duval_planes::lattice::{Parent, SurfaceModel};

fn main() -> duval_planes::Result<()> {
    // The projective plane: one basis class L with L·L = 1, K = -3L.
    let plane = SurfaceModel::projective_plane();
    let line = plane.line()?;
    println!("plane: L·L = {}", line.intersect(&line)?);
    println!(
        "plane: K = {}, K² = {}",
        plane.canonical_class(),
        plane.canonical_class().self_intersection()?
    );

    // Blow up a point, then a point on the first exceptional curve.
    let (once, p) = plane.blow_up(Parent::SurfacePoint)?;
    let (twice, q) = once.blow_up(Parent::InfinitelyNear(p))?;
    let e_p = twice.exceptional(p)?;
    let e_q = twice.exceptional(q)?;
    println!("after two nested blow-ups:");
    println!("  E_p*·E_p* = {}", e_p.intersect(&e_p)?);
    println!(
        "  E_p*·E_q* = {}  (total transforms are orthogonal)",
        e_p.intersect(&e_q)?
    );
    let strict = e_p.checked_sub(&e_q)?;
    println!(
        "  strict transform (E_p* - E_q*)² = {}",
        strict.self_intersection()?
    );
    println!("  K² = {}", twice.canonical_class().self_intersection()?);

    // A Hirzebruch surface: C0² = -e, Γ² = 0, C0·Γ = 1, K² = 8.
    let f2 = SurfaceModel::hirzebruch(2)?;
    let c0 = f2.negative_section()?;
    let fibre = f2.fibre()?;
    println!(
        "F_2: C0² = {}, Γ² = {}, C0·Γ = {}",
        c0.self_intersection()?,
        fibre.self_intersection()?,
        c0.intersect(&fibre)?
    );

    // The pairing that feeds the elimination certificates, on F_1.
    let f1 = SurfaceModel::hirzebruch(1)?;
    let a = f1.class(vec![4, 5])?;
    let b = f1.class(vec![12, 20])?;
    println!("F_1: (4C0+5Γ)·(12C0+20Γ) = {}", a.intersect(&b)?);
    Ok(())
}
