//! Du Val double-plane configurations: admissibility, branch construction,
//! invariants of the minimal model, the conic criterion for irregularity,
//! and enumeration of the classification tables.
//!
//! A configuration is one of
//!
//! * type B — the double cover of `F_2` branched along `C0 + G'` with
//!   `G' ≡ 7C0 + 14Γ` smooth away from non-essential points,
//! * type D — the double plane branched along a smooth curve of degree 8,
//! * type D_n (0 ≤ n ≤ 6) — the double plane branched along a curve of
//!   degree `10 + 2n` made of a component `G'` of degree `10 + n` and `n`
//!   lines through a point `γ`, with a `(2n+2)`-tuple point at `γ`, a
//!   `[5,5]`-point on each line, `delta1` `[3,3]`-points and `delta2` 4-tuple
//!   points.
//!
//! For `n = 1` the 4-tuple point `γ` may be infinitely near the second
//! point of the `[5,5]`-pair; when it is not, the surface behaves like the
//! `n ≥ 2` case, and the flag `gamma_infinitely_near` keys that dichotomy.

use serde::Serialize;

use crate::conic::{conic_space_dim, PlanePoint};
use crate::error::{Error, Result};
use crate::invariants::{
    chi_of_cover, fixed_point_counts, h0_two_k_plus_delta, ksq_of_resolution, pencil_genus,
};
use crate::lattice::{CenterId, DivisorClass, Parent, SurfaceModel};
use crate::resolution::{resolve, BranchModel, ResolvedCover, SingularityAssignment};
use crate::ruled::{cremona_quadratic, BranchSingularity, CremonaCenter, PlaneCurveData};

/// How the caller knows whether the distinguished points lie on a conic.
/// Only meaningful when `n + delta1 + delta2 = 6`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ConicEvidence {
    /// Asserted not on a common conic.
    Generic,
    /// Asserted on a common conic.
    OnConic,
    /// Exact coordinates for the six distinguished points (after the
    /// infinitely-near substitution, when one of them sits over `γ`).
    Coordinates(Vec<PlanePoint>),
}

/// A Du Val double-plane configuration.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DuValConfig {
    TypeB,
    TypeD,
    TypeDn {
        n: u32,
        delta1: u32,
        delta2: u32,
        gamma_infinitely_near: bool,
        points_on_conic: ConicEvidence,
    },
}

impl DuValConfig {
    /// A type-D_n configuration in general position.
    pub fn dn(n: u32, delta1: u32, delta2: u32) -> Self {
        DuValConfig::TypeDn {
            n,
            delta1,
            delta2,
            gamma_infinitely_near: false,
            points_on_conic: ConicEvidence::Generic,
        }
    }

    pub fn dn_on_conic(n: u32, delta1: u32, delta2: u32) -> Self {
        DuValConfig::TypeDn {
            n,
            delta1,
            delta2,
            gamma_infinitely_near: false,
            points_on_conic: ConicEvidence::OnConic,
        }
    }
}

/// Outcome of the admissibility rules, with the reasons for a failure
/// (including the genus-2 pencil witnesses that exclude extra 4-tuple
/// points at small `n`).
#[derive(Clone, Debug, Serialize)]
pub struct AdmissibilityReport {
    pub passed: bool,
    pub reasons: Vec<String>,
}

/// Fixed center ids of a D_n branch: `γ` is 0, the `[5,5]`-pairs are
/// `(i, n+i)`, the 4-tuple points follow, then the `[3,3]`-pairs.
#[derive(Clone, Debug)]
pub struct DnLayout {
    pub gamma: Option<CenterId>,
    pub five_pairs: Vec<(CenterId, CenterId)>,
    pub four_points: Vec<CenterId>,
    pub three_pairs: Vec<(CenterId, CenterId)>,
}

pub fn dn_layout(n: u32, delta1: u32, delta2: u32) -> DnLayout {
    DnLayout {
        gamma: (n >= 1).then_some(CenterId(0)),
        five_pairs: (1..=n).map(|i| (CenterId(i), CenterId(n + i))).collect(),
        four_points: (1..=delta2).map(|j| CenterId(2 * n + j)).collect(),
        three_pairs: (1..=delta1)
            .map(|j| {
                (
                    CenterId(2 * n + delta2 + j),
                    CenterId(2 * n + delta2 + delta1 + j),
                )
            })
            .collect(),
    }
}

fn dn_branch_unchecked(
    n: u32,
    delta1: u32,
    delta2: u32,
    gamma_infinitely_near: bool,
) -> Result<BranchModel> {
    let layout = dn_layout(n, delta1, delta2);
    let plane = SurfaceModel::projective_plane();
    let class = plane.class(vec![10 + 2 * i64::from(n)])?;
    let mut sings = Vec::new();
    if let Some(gamma) = layout.gamma {
        let parent = if gamma_infinitely_near {
            Parent::InfinitelyNear(layout.five_pairs[0].1)
        } else {
            Parent::SurfacePoint
        };
        sings.push(SingularityAssignment::mtuple_at(
            gamma,
            2 * i64::from(n) + 2,
            parent,
        ));
    }
    for &(p, pp) in &layout.five_pairs {
        sings.push(SingularityAssignment::rr_point(p, pp, 5));
    }
    for &(q, qp) in &layout.three_pairs {
        sings.push(SingularityAssignment::rr_point(q, qp, 3));
    }
    for &r in &layout.four_points {
        sings.push(SingularityAssignment::mtuple(r, 4));
    }
    BranchModel::new(plane, class, sings)
}

/// Genus of the pencil witnessing that a 4-tuple point is too much for
/// `n = 0`: lines through the 4-tuple point of a degree-10 branch.
fn line_pencil_witness_genus() -> Result<i64> {
    let plane = SurfaceModel::projective_plane();
    let class = plane.class(vec![10])?;
    let branch = BranchModel::new(
        plane,
        class,
        vec![SingularityAssignment::mtuple(CenterId(0), 4)],
    )?;
    let cover = resolve(&branch)?;
    let fibre = cover
        .model()
        .pullback(&cover.base().ambient().line()?)?
        .checked_sub(&cover.model().exceptional(CenterId(0))?)?;
    pencil_genus(&cover, &fibre)
}

/// Genus of the pencil witnessing that two 4-tuple points are too much for
/// `n = 1`: conics through both of them and through the `[5,5]`-pair.
fn conic_pencil_witness_genus() -> Result<i64> {
    let branch = dn_branch_unchecked(1, 0, 2, false)?;
    let cover = resolve(&branch)?;
    let layout = dn_layout(1, 0, 2);
    let model = cover.model();
    let mut fibre = model.pullback(&cover.base().ambient().line()?.scaled(2)?)?;
    let (p, pp) = layout.five_pairs[0];
    for id in [p, pp, layout.four_points[0], layout.four_points[1]] {
        fibre = fibre.checked_sub(&model.exceptional(id)?)?;
    }
    pencil_genus(&cover, &fibre)
}

/// Admissibility of a configuration: `n ≤ 6`, `n + delta1 + delta2 ≤ 6`
/// (so that `χ ≥ 1`), and `delta2 ≤ n` when `n ≤ 1`, the latter witnessed
/// by an explicit pencil of genus-2 curves.
pub fn check_admissible(config: &DuValConfig) -> AdmissibilityReport {
    let mut reasons = Vec::new();
    if let DuValConfig::TypeDn {
        n,
        delta1,
        delta2,
        gamma_infinitely_near,
        ..
    } = config
    {
        let (n, d1, d2) = (*n as i64, *delta1 as i64, *delta2 as i64);
        if n > 6 {
            reasons.push(format!("n = {n} exceeds 6"));
        }
        if n + d1 + d2 > 6 {
            reasons.push(format!(
                "n + delta1 + delta2 = {} exceeds 6, so chi = {} would drop below 1",
                n + d1 + d2,
                7 - n - d1 - d2
            ));
        }
        if *gamma_infinitely_near && n != 1 {
            reasons.push(format!(
                "gamma is a (2n+2)-tuple point; it can be infinitely near the [5,5]-pair only when n = 1, not n = {n}"
            ));
        }
        if n == 0 && d2 > 0 {
            let genus =
                line_pencil_witness_genus().map_or_else(|e| e.to_string(), |g| g.to_string());
            reasons.push(format!(
                "a 4-tuple point with n = 0 is excluded: the pull-back of the lines through it is a pencil of genus {genus} curves"
            ));
        }
        if n == 1 && d2 > 1 {
            let genus =
                conic_pencil_witness_genus().map_or_else(|e| e.to_string(), |g| g.to_string());
            reasons.push(format!(
                "two 4-tuple points with n = 1 are excluded: the pull-back of the conics through them and the [5,5]-pair is a pencil of genus {genus} curves"
            ));
        }
    }
    AdmissibilityReport {
        passed: reasons.is_empty(),
        reasons,
    }
}

fn require_admissible(config: &DuValConfig) -> Result<()> {
    let report = check_admissible(config);
    if report.passed {
        Ok(())
    } else {
        Err(Error::Inadmissible(report.reasons.join("; ")))
    }
}

/// Build the branch divisor of a configuration.
///
/// Type B is `8C0 + 14Γ` on `F_2` (the section plus a `7C0 + 14Γ` curve)
/// with no essential singularities; type D is the smooth `8L`; type D_n is
/// `(10+2n)L` with the full singularity list.  For `n = 0` there are no
/// lines and no `γ` record.
pub fn build_branch(config: &DuValConfig) -> Result<BranchModel> {
    require_admissible(config)?;
    match config {
        DuValConfig::TypeB => {
            let f2 = SurfaceModel::hirzebruch(2)?;
            let class = f2.class(vec![8, 14])?;
            BranchModel::new(f2, class, vec![])
        }
        DuValConfig::TypeD => {
            let plane = SurfaceModel::projective_plane();
            let class = plane.class(vec![8])?;
            BranchModel::new(plane, class, vec![])
        }
        DuValConfig::TypeDn {
            n,
            delta1,
            delta2,
            gamma_infinitely_near,
            ..
        } => dn_branch_unchecked(*n, *delta1, *delta2, *gamma_infinitely_near),
    }
}

/// Strict-transform candidates for the (-2)-curves contained in the smooth
/// branch: the lines of the configuration, and the first exceptional curve
/// of every `[r,r]`-pair.  Candidates that fail the containment test (the
/// exceptional curves over 4-tuple points, over `γ`, and the line when `γ`
/// is infinitely near) are included so the filter can reject them.
pub fn minus_two_candidates(
    config: &DuValConfig,
    cover: &ResolvedCover,
) -> Result<Vec<DivisorClass>> {
    let model = cover.model();
    let mut out = Vec::new();
    match config {
        DuValConfig::TypeB => out.push(model.negative_section()?),
        DuValConfig::TypeD => {}
        DuValConfig::TypeDn {
            n,
            delta1,
            delta2,
            gamma_infinitely_near,
            ..
        } => {
            let layout = dn_layout(*n, *delta1, *delta2);
            let line = model.pullback(&cover.base().ambient().line()?)?;
            for &(p, pp) in &layout.five_pairs {
                let mut strict = line
                    .checked_sub(&model.exceptional(p)?)?
                    .checked_sub(&model.exceptional(pp)?)?;
                if !gamma_infinitely_near {
                    // γ is an honest plane point on the line.
                    strict = strict.checked_sub(&model.exceptional(layout.gamma.unwrap())?)?;
                }
                out.push(strict);
                out.push(model.exceptional(p)?.checked_sub(&model.exceptional(pp)?)?);
                if *gamma_infinitely_near {
                    // γ sits on the second exceptional curve.
                    out.push(
                        model
                            .exceptional(pp)?
                            .checked_sub(&model.exceptional(layout.gamma.unwrap())?)?,
                    );
                }
            }
            for &(q, qp) in &layout.three_pairs {
                out.push(model.exceptional(q)?.checked_sub(&model.exceptional(qp)?)?);
            }
            for &r in &layout.four_points {
                out.push(model.exceptional(r)?);
            }
            if let Some(gamma) = layout.gamma {
                if !gamma_infinitely_near {
                    out.push(model.exceptional(gamma)?);
                }
            }
        }
    }
    Ok(out)
}

/// Data of the genus-3 pencil carried by the minimal model.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PencilReport {
    pub genus: i64,
    pub hyperelliptic: bool,
    pub base_points: i64,
    pub double_fibres: i64,
    /// Intersection constants of the pencil class upstairs.
    pub h_squared: i64,
    pub h_dot_canonical: i64,
    pub h_dot_fixed_curve: i64,
}

/// Invariants of the minimal surface attached to a configuration.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SurfaceReport {
    pub pg: i64,
    pub q: i64,
    #[serde(rename = "ksq")]
    pub ksq_minimal: i64,
    pub ksq_resolution: i64,
    pub chi: i64,
    pub k_isolated: i64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub pencil: Option<PencilReport>,
    pub torsion_rank_lower: i64,
    pub bicanonical_degree: i64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub ample_canonical: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub bicanonical_image_degree: Option<i64>,
}

/// The three formula regimes for the minimal model.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
enum Regime {
    /// Type D, and type D_0 with smooth branch: nothing contracts.
    Smooth,
    /// n ≥ 2, or n = 1 with γ an honest point of the line: the lines and
    /// the odd exceptional curves contract.
    ContractedLines,
    /// n = 0 with singular branch, n = 1 with γ infinitely near, type B:
    /// the pencil keeps one base point.
    BasePoint,
}

fn regime(config: &DuValConfig) -> Regime {
    match config {
        DuValConfig::TypeD => Regime::Smooth,
        DuValConfig::TypeB => Regime::BasePoint,
        DuValConfig::TypeDn {
            n,
            delta1,
            delta2,
            gamma_infinitely_near,
            ..
        } => {
            if *n >= 2 || (*n == 1 && !gamma_infinitely_near) {
                Regime::ContractedLines
            } else if *n == 0 && *delta1 == 0 && *delta2 == 0 {
                Regime::Smooth
            } else {
                Regime::BasePoint
            }
        }
    }
}

/// `K²` of the minimal model: `8 - delta1 - 2·delta2` in the
/// contracted-lines regime and `8 - n - delta1 - 2·delta2` otherwise
/// (2 for type D, 9 for type B).
fn minimal_ksq(config: &DuValConfig) -> i64 {
    match config {
        DuValConfig::TypeD => 2,
        DuValConfig::TypeB => 9,
        DuValConfig::TypeDn {
            n, delta1, delta2, ..
        } => {
            let (n, d1, d2) = (i64::from(*n), i64::from(*delta1), i64::from(*delta2));
            match regime(config) {
                Regime::ContractedLines => 8 - d1 - 2 * d2,
                _ => 8 - n - d1 - 2 * d2,
            }
        }
    }
}

fn conic_condition_holds(evidence: &ConicEvidence) -> Result<bool> {
    match evidence {
        ConicEvidence::Generic => Ok(false),
        ConicEvidence::OnConic => Ok(true),
        ConicEvidence::Coordinates(points) => {
            if points.len() != 6 {
                return Err(Error::BadEvidence(format!(
                    "the conic criterion needs exactly 6 points, got {}",
                    points.len()
                )));
            }
            Ok(conic_space_dim(points)? >= 1)
        }
    }
}

fn irregularity_given_chi(config: &DuValConfig, chi: i64) -> Result<(i64, i64)> {
    if let DuValConfig::TypeDn {
        n,
        delta1,
        delta2,
        points_on_conic,
        ..
    } = config
    {
        if n + delta1 + delta2 == 6 && conic_condition_holds(points_on_conic)? {
            return Ok((1, 1));
        }
    }
    Ok((chi - 1, 0))
}

/// Geometric genus and irregularity: `q = 0` and `p_g = χ - 1` unless the
/// six distinguished points of a `n + delta1 + delta2 = 6` configuration
/// lie on a conic, in which case `p_g = q = 1`.
pub fn irregularity(config: &DuValConfig) -> Result<(i64, i64)> {
    require_admissible(config)?;
    let cover = resolve(&build_branch(config)?)?;
    irregularity_given_chi(config, chi_of_cover(&cover, 1)?)
}

/// The pencil class upstairs: a general member of the fibre family on the
/// resolved model, pulled back to the double cover.
fn pencil_class(config: &DuValConfig, cover: &ResolvedCover) -> Result<Option<DivisorClass>> {
    let model = cover.model();
    match config {
        DuValConfig::TypeD => Ok(None),
        DuValConfig::TypeB => Ok(Some(model.fibre()?)),
        DuValConfig::TypeDn {
            n,
            delta1,
            delta2,
            gamma_infinitely_near,
            ..
        } => {
            let line = model.pullback(&cover.base().ambient().line()?)?;
            let layout = dn_layout(*n, *delta1, *delta2);
            // Lines through γ when it is an honest plane point; through the
            // [5,5]-point when γ is infinitely near; through the first
            // [3,3]-point for n = 0; none for a smooth branch.
            let through = if *n >= 1 && !gamma_infinitely_near {
                layout.gamma.unwrap()
            } else if *n >= 1 {
                layout.five_pairs[0].0
            } else if *delta1 >= 1 {
                layout.three_pairs[0].0
            } else {
                return Ok(None);
            };
            Ok(Some(line.checked_sub(&model.exceptional(through)?)?))
        }
    }
}

/// Full invariant report for an admissible configuration.
pub fn surface_report(config: &DuValConfig) -> Result<SurfaceReport> {
    require_admissible(config)?;
    let branch = build_branch(config)?;
    let cover = resolve(&branch)?;
    let chi = chi_of_cover(&cover, 1)?;
    let ksq_resolution = ksq_of_resolution(&cover)?;
    let h0 = h0_two_k_plus_delta(&cover, 1)?;
    let ksq_minimal = minimal_ksq(config);
    let (k_isolated, _) = fixed_point_counts(ksq_minimal, chi, 1, h0);
    let (pg, q) = irregularity_given_chi(config, chi)?;

    let pencil = match pencil_class(config, &cover)? {
        None => None,
        Some(fibre) => {
            let genus = pencil_genus(&cover, &fibre)?;
            let half = cover.half_class();
            let k_s = cover.model().canonical_class().checked_add(half)?;
            let double_fibres = match config {
                DuValConfig::TypeDn { n, .. } => i64::from(*n),
                _ => 0,
            };
            Some(PencilReport {
                genus,
                hyperelliptic: true,
                base_points: if regime(config) == Regime::ContractedLines {
                    0
                } else {
                    1
                },
                double_fibres,
                // Upstairs the double cover doubles every pairing.
                h_squared: 2 * fibre.self_intersection()?,
                h_dot_canonical: 2 * fibre.intersect(&k_s)?,
                h_dot_fixed_curve: 2 * fibre.intersect(half)?,
            })
        }
    };

    let torsion_rank_lower = match config {
        DuValConfig::TypeDn { n, .. } if *n >= 2 => i64::from(*n) - 1,
        _ => 0,
    };
    let (bicanonical_degree, bicanonical_image_degree) = if (pg, q, ksq_minimal) == (1, 0, 2) {
        // (2K)² = 8 distributes as degree 4 onto a quadric.
        (4, Some(2))
    } else {
        (2, None)
    };
    let ample_canonical = match regime(config) {
        Regime::Smooth => Some(true),
        _ => None,
    };

    Ok(SurfaceReport {
        pg,
        q,
        ksq_minimal,
        ksq_resolution,
        chi,
        k_isolated,
        pencil,
        torsion_rank_lower,
        bicanonical_degree,
        ample_canonical,
        bicanonical_image_degree,
    })
}

/// Exhaustively enumerate the admissible type-D_n configurations with
/// `χ - 1 = pg - q` (both `γ` positions for `n = 1`), filtered by the
/// irregularity condition implied by `(pg, q)` and optionally by `K²` of
/// the minimal model.  Returns an empty list for unreachable `(pg, q)`.
pub fn enumerate_classification(
    pg: i64,
    q: i64,
    ksq: Option<i64>,
) -> Result<Vec<(DuValConfig, SurfaceReport)>> {
    if pg < 0 || q < 0 || (q > 0 && (pg, q) != (1, 1)) {
        return Ok(Vec::new());
    }
    let chi = 1 + pg - q;
    let sum = 7 - chi;
    if !(0..=6).contains(&sum) {
        return Ok(Vec::new());
    }
    let sum = sum as u32;
    let mut out = Vec::new();
    for n in 0..=sum.min(6) {
        let max_d2 = if n <= 1 { n.min(sum - n) } else { sum - n };
        for delta2 in 0..=max_d2 {
            let delta1 = sum - n - delta2;
            let flags: &[bool] = if n == 1 { &[false, true] } else { &[false] };
            for &gamma_infinitely_near in flags {
                let points_on_conic = if q == 1 {
                    ConicEvidence::OnConic
                } else {
                    ConicEvidence::Generic
                };
                let config = DuValConfig::TypeDn {
                    n,
                    delta1,
                    delta2,
                    gamma_infinitely_near,
                    points_on_conic,
                };
                let report = surface_report(&config)?;
                if (report.pg, report.q) != (pg, q) {
                    continue;
                }
                if let Some(k) = ksq {
                    if report.ksq_minimal != k {
                        continue;
                    }
                }
                out.push((config, report));
            }
        }
    }
    out.sort_by_key(|(config, report)| {
        let (n, d1, d2, flag) = match config {
            DuValConfig::TypeDn {
                n,
                delta1,
                delta2,
                gamma_infinitely_near,
                ..
            } => (*n, *delta1, *delta2, *gamma_infinitely_near),
            _ => unreachable!("enumeration emits only type D_n"),
        };
        (report.ksq_minimal, n, d1, d2, flag)
    });
    Ok(out)
}

/// All admissible `(n, delta1, delta2)` triples, in lexicographic order.
pub fn admissible_dn_triples() -> Vec<(u32, u32, u32)> {
    let mut out = Vec::new();
    for n in 0..=6u32 {
        for delta1 in 0..=6 - n {
            let rest = 6 - n - delta1;
            let max_d2 = if n <= 1 { n.min(rest) } else { rest };
            for delta2 in 0..=max_d2 {
                out.push((n, delta1, delta2));
            }
        }
    }
    out
}

/// Convert a type-D_0 configuration with two `[3,3]`-points of distinct
/// tangent lines into the equivalent type-D_1 configuration with one
/// 4-tuple point and two fewer `[3,3]`-points, by a quadratic transformation
/// centered at the first pair and at the first point of the second pair.
pub fn convert_d0_to_d1(config: &DuValConfig, tangent_lines_distinct: bool) -> Result<DuValConfig> {
    let DuValConfig::TypeDn {
        n: 0,
        delta1,
        delta2: 0,
        ..
    } = config
    else {
        return Err(Error::Inadmissible(
            "only a type-D_0 configuration (no lines, no 4-tuple points) converts".into(),
        ));
    };
    require_admissible(config)?;
    if *delta1 < 2 {
        return Err(Error::Inadmissible(format!(
            "the conversion consumes two [3,3]-points, delta1 = {delta1} is not enough"
        )));
    }
    if !tangent_lines_distinct {
        return Err(Error::NotConvertible(
            "the two [3,3]-points must have distinct tangent lines".into(),
        ));
    }

    let curve = PlaneCurveData {
        degree: 10,
        singularities: vec![BranchSingularity::Rr(3); *delta1 as usize],
    };
    let image = cremona_quadratic(
        &curve,
        &[
            CremonaCenter::AtSingularity { index: 0 },
            CremonaCenter::AtRrSecond { index: 0 },
            CremonaCenter::AtSingularity { index: 1 },
        ],
    )?;
    if image.degree != 11
        || image.fundamental_multiplicities != [4, 4, 4]
        || image.branch_line_count != 1
    {
        return Err(Error::InconsistentBranch(format!(
            "unexpected quadratic image: degree {}, multiplicities {:?}, {} branch lines",
            image.degree, image.fundamental_multiplicities, image.branch_line_count
        )));
    }

    let result = DuValConfig::TypeDn {
        n: 1,
        delta1: delta1 - 2,
        delta2: 1,
        gamma_infinitely_near: false,
        points_on_conic: ConicEvidence::Generic,
    };
    // The double cover is unchanged, so chi and K² of the resolution must
    // agree between the two presentations.
    let before = resolve(&build_branch(config)?)?;
    let after = resolve(&build_branch(&result)?)?;
    if chi_of_cover(&before, 1)? != chi_of_cover(&after, 1)?
        || ksq_of_resolution(&before)? != ksq_of_resolution(&after)?
    {
        return Err(Error::InconsistentBranch(
            "conversion changed the cover invariants".into(),
        ));
    }
    Ok(result)
}
