//! Closed-form invariants of the double cover attached to a resolved branch:
//! `χ(O)`, `K²` of the smooth cover, `χ(2K + Δ)` on the quotient, the
//! isolated-fixed-point count of the covering involution, and pencil genera.
//!
//! Division by 2 and by 8 runs in exact rational arithmetic with a final
//! integrality assertion; a non-integral value signals inconsistent branch
//! data, not a rounding concern.

use num::rational::Ratio;
use num::Zero;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::lattice::DivisorClass;
use crate::resolution::ResolvedCover;

type Rat = Ratio<i64>;

fn as_integer(x: Rat, what: &str) -> Result<i64> {
    if x.is_integer() {
        Ok(x.to_integer())
    } else {
        Err(Error::InconsistentBranch(format!(
            "{what} is not an integer: {x}"
        )))
    }
}

/// Numeric invariants of the double cover and the involution it carries.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CoverInvariants {
    /// `χ(O)` of the smooth cover.
    pub chi: i64,
    /// `K²` of the resolved (not yet minimal) cover.
    pub ksq_resolution: i64,
    /// `p_g - q = χ - 1`.
    pub pg_minus_q: i64,
    /// `h⁰(2K + Δ)` on the resolved quotient.
    pub h0_2k_delta: i64,
    /// Isolated fixed points of the covering involution on the minimal model.
    pub k_isolated: i64,
    /// `K·R` against the divisorial fixed locus.
    pub kr: i64,
}

impl CoverInvariants {
    /// Assemble all invariants.  `chi_base` is `χ(O)` of the base surface
    /// (1 for the plane and for Hirzebruch surfaces); `ksq_minimal` is `K²`
    /// of the minimal model, supplied by whoever knows which curves
    /// contract.
    pub fn compute(cover: &ResolvedCover, chi_base: i64, ksq_minimal: i64) -> Result<Self> {
        let chi = chi_of_cover(cover, chi_base)?;
        let h0 = h0_two_k_plus_delta(cover, chi_base)?;
        let (k_isolated, kr) = fixed_point_counts(ksq_minimal, chi, chi_base, h0);
        Ok(CoverInvariants {
            chi,
            ksq_resolution: ksq_of_resolution(cover)?,
            pg_minus_q: chi - 1,
            h0_2k_delta: h0,
            k_isolated,
            kr,
        })
    }
}

/// `χ(O)` of the cover:
/// `½(K + Δ)·Δ + 2·chi_base - ½ Σ ⌊m/2⌋(⌊m/2⌋ - 1)`,
/// with `Δ` the half class of the branch on the unblown base and the sum
/// running over the resolution ledger.
pub fn chi_of_cover(cover: &ResolvedCover, chi_base: i64) -> Result<i64> {
    let base = cover.base();
    let delta = base.class().half()?;
    let k = base.ambient().canonical_class();
    let kd = k.checked_add(&delta)?.intersect(&delta)?;
    let mut chi = Rat::new(kd, 2) + Rat::from_integer(2 * chi_base);
    for step in cover.steps() {
        let d = step.subtraction;
        chi -= Rat::new(d * (d - 1), 2);
    }
    as_integer(chi, "chi of the cover")
}

/// `K²` of the resolved cover:
/// `2(K + Δ)² - 2 Σ (⌊m/2⌋ - 1)²` on the unblown base.
pub fn ksq_of_resolution(cover: &ResolvedCover) -> Result<i64> {
    let base = cover.base();
    let delta = base.class().half()?;
    let k_plus_delta = base.ambient().canonical_class().checked_add(&delta)?;
    let mut ksq = 2 * k_plus_delta.self_intersection()?;
    for step in cover.steps() {
        let d = step.subtraction - 1;
        ksq -= 2 * d * d;
    }
    Ok(ksq)
}

/// `χ(2K + Δ)` on the resolved model, by Riemann-Roch:
/// `chi_base + ½(2K_s + Δ_s)·(K_s + Δ_s)`.
///
/// The caller asserts the vanishing hypotheses under which this equals
/// `h⁰(2K + Δ)`; the effective multiplicities (parity correction included)
/// enter through `Δ_s`.
pub fn h0_two_k_plus_delta(cover: &ResolvedCover, chi_base: i64) -> Result<i64> {
    let k = cover.model().canonical_class();
    let delta = cover.half_class();
    let two_k_delta = k.scaled(2)?.checked_add(delta)?;
    let k_delta = k.checked_add(delta)?;
    let chi = Rat::from_integer(chi_base) + Rat::new(two_k_delta.intersect(&k_delta)?, 2);
    as_integer(chi, "chi(2K + Delta)")
}

/// Isolated fixed points of the involution and `K·R` of its divisorial
/// fixed locus, from the invariants of the minimal surface and its
/// quotient:
///
/// ```text
/// k  = K² - 2χ(O_S) + 6χ(O_Σ) - 2h⁰(2K_Σ + Δ)
/// k  = K·R - 4χ(O_S) + 8χ(O_Σ)        (solved here for K·R)
/// ```
pub fn fixed_point_counts(ksq_min: i64, chi_s: i64, chi_sigma: i64, h0: i64) -> (i64, i64) {
    let k = ksq_min - 2 * chi_s + 6 * chi_sigma - 2 * h0;
    let kr = k + 4 * chi_s - 8 * chi_sigma;
    (k, kr)
}

/// Genus of the pencil cut by a fibre class: `½(fibre·B_s - 2)`.
pub fn pencil_genus(cover: &ResolvedCover, fibre: &DivisorClass) -> Result<i64> {
    if fibre.owner() != cover.model() {
        return Err(Error::LatticeMismatch);
    }
    if !fibre.self_intersection()?.is_zero() {
        return Err(Error::NotAPencil);
    }
    let t = fibre.intersect(cover.smooth_class())?;
    if (t - 2) % 2 != 0 {
        return Err(Error::OddBranchIntersection);
    }
    Ok((t - 2) / 2)
}

/// Whether the bicanonical map factors through the covering involution:
/// true exactly when `h⁰(2K + Δ) = 0` on the (rational) quotient.
pub fn bicanonical_factorization_test(cover: &ResolvedCover) -> Result<bool> {
    Ok(h0_two_k_plus_delta(cover, 1)? == 0)
}
