//! Branch models on ruled surfaces: the admissible-shape classification,
//! the two elimination certificates, elementary transformations, contraction
//! of the negative section, and the quadratic plane transformation.
//!
//! A branch on `F_e` is written `B ≡ ξ·C0 + (½ξe + ζ)Γ`; the invariant
//! `ξ = B·Γ` is the number of branch points on a fibre, so `ξ ≥ 8` (a
//! smaller value yields a pencil of genus at most 2, which is excluded).
//! Elementary transformations are blow-up/contraction composites; their
//! induced basis substitutions are verified to be lattice isometries.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::lattice::{CenterId, Parent, SurfaceModel};
use crate::resolution::{BranchModel, SingularityAssignment};

/// A branch singularity with no location data: an ordinary `m`-tuple point
/// or an `[r,r]`-point.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Serialize)]
pub enum BranchSingularity {
    Tuple(i64),
    Rr(i64),
}

impl BranchSingularity {
    /// Ordering key under the convention that an `[r,r]`-point is a single
    /// singularity of multiplicity strictly between `r` and `r+1`.
    pub fn order_key(self) -> i64 {
        match self {
            BranchSingularity::Tuple(m) => 2 * m,
            BranchSingularity::Rr(r) => 2 * r + 1,
        }
    }
}

/// The numerical shape of a branch on a ruled surface.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RuledBranchShape {
    pub xi: i64,
    pub zeta: i64,
    pub e: i64,
    /// `[r,r]`-points as (r, how many).
    pub rr_points: Vec<(i64, usize)>,
    /// Ordinary tuple points (multiplicities).
    pub extra_tuples: Vec<i64>,
}

impl RuledBranchShape {
    pub fn new(
        xi: i64,
        zeta: i64,
        e: i64,
        rr_points: Vec<(i64, usize)>,
        extra_tuples: Vec<i64>,
    ) -> Result<Self> {
        if xi < 8 {
            return Err(Error::InvalidParameter(format!(
                "xi = {xi} < 8 falls into the excluded low-genus pencil range"
            )));
        }
        if e < 0 {
            return Err(Error::InvalidParameter(format!(
                "e = {e} must be non-negative"
            )));
        }
        if (xi * e) % 2 != 0 {
            return Err(Error::InvalidParameter(
                "xi*e must be even so the fibre coefficient (xi*e)/2 + zeta is an integer".into(),
            ));
        }
        if rr_points.iter().any(|&(r, c)| r < 2 || c == 0) {
            return Err(Error::InvalidParameter(
                "[r,r]-points need r >= 2 and count >= 1".into(),
            ));
        }
        if extra_tuples.iter().any(|&m| m < 2) {
            return Err(Error::InvalidParameter(
                "tuple points need multiplicity >= 2".into(),
            ));
        }
        Ok(RuledBranchShape {
            xi,
            zeta,
            e,
            rr_points,
            extra_tuples,
        })
    }

    fn rr_count(&self, r: i64) -> usize {
        self.rr_points
            .iter()
            .filter(|&&(s, _)| s == r)
            .map(|&(_, c)| c)
            .sum()
    }

    fn only_rr_in(&self, allowed: &[i64]) -> bool {
        self.rr_points.iter().all(|&(r, _)| allowed.contains(&r))
    }
}

/// The two candidate shapes that the elimination certificates rule out.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Serialize)]
pub enum EliminatedShape {
    /// ξ = 12, ζ = 14, three `[7,7]`-points.
    SevenSevenTriple,
    /// ξ = 16, ζ = 18, three `[9,9]`-points and an 8-tuple point.
    NineNineTriple,
}

/// Verdict of the shape classification.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum ShapeVerdict {
    /// ξ = 8, ζ = 6.
    FirstKind,
    /// ξ = 8, ζ = 8 + 2i with 1 ≤ i ≤ 5 and exactly i+1 `[5,5]`-points
    /// (plus possibly 4-tuple and `[3,3]`-points); needs 4e ≤ 7 + i.
    SecondKind {
        i: i64,
    },
    /// Arithmetically conceivable but excluded; see
    /// [`elimination_certificate`].
    Eliminated(EliminatedShape),
    NotInList,
}

/// Classify a ruled branch shape against the admissible list.
pub fn shape_admissible(shape: &RuledBranchShape) -> ShapeVerdict {
    let non_essential_extras = shape.extra_tuples.iter().all(|&m| m <= 3);
    match (shape.xi, shape.zeta) {
        (8, 6) => ShapeVerdict::FirstKind,
        (8, z) if (10..=18).contains(&z) && z % 2 == 0 => {
            let i = (z - 8) / 2;
            let fives = shape.rr_count(5);
            let clean = shape.only_rr_in(&[3, 5])
                && shape.extra_tuples.iter().all(|&m| m <= 4)
                && fives == (i + 1) as usize
                && 4 * shape.e <= 7 + i;
            if clean {
                ShapeVerdict::SecondKind { i }
            } else {
                ShapeVerdict::NotInList
            }
        }
        (12, 14) if shape.rr_count(7) == 3 && shape.only_rr_in(&[7]) && non_essential_extras => {
            ShapeVerdict::Eliminated(EliminatedShape::SevenSevenTriple)
        }
        (16, 18)
            if shape.rr_count(9) == 3
                && shape.only_rr_in(&[9])
                && shape.extra_tuples.iter().filter(|&&m| m == 8).count() == 1
                && shape.extra_tuples.iter().all(|&m| m == 8 || m <= 3) =>
        {
            ShapeVerdict::Eliminated(EliminatedShape::NineNineTriple)
        }
        _ => ShapeVerdict::NotInList,
    }
}

/// The certificate that rules out an [`EliminatedShape`]: on the plane
/// blown up at a point `p0` and at three `[r,r]`-pairs there is a genus-0
/// pencil class `D = π*(5L) - E0* - Σ 2E_i*` with `D² = 0`, `D·K = -2` and
/// `D·E0* = 1`, and `D` meets the transformed branch in fewer than `ξ`
/// points, contradicting the minimality of `ξ`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EliminationCertificate {
    pub shape: EliminatedShape,
    pub d_squared: i64,
    pub d_dot_canonical: i64,
    pub d_dot_center: i64,
    pub d_dot_branch: i64,
    pub xi: i64,
    pub contradicts_minimality: bool,
    /// Position constraints assumed of the centers (not derivable from the
    /// lattice; they hold for the configurations in question).
    pub assumptions: Vec<String>,
}

/// Build the elimination certificate for one of the two excluded shapes.
/// The intersection numbers are computed twice, in the plane-based lattice
/// and in the ruled-surface lattice, and must agree.
pub fn elimination_certificate(shape: EliminatedShape) -> Result<EliminationCertificate> {
    let (xi, fibre_coeff, r) = match shape {
        EliminatedShape::SevenSevenTriple => (12, 20, 7),
        EliminatedShape::NineNineTriple => (16, 26, 9),
    };
    let (sub_first, sub_second) = (r - 1, r + 1);

    // Plane route: blow up p0, then p_1..p_3 and the infinitely near
    // p_1'..p_3'.
    let mut w = SurfaceModel::projective_plane();
    for id in 0..=3u32 {
        w = w.blow_up_as(CenterId(id), Parent::SurfacePoint)?;
    }
    for id in 1..=3u32 {
        w = w.blow_up_as(CenterId(id + 3), Parent::InfinitelyNear(CenterId(id)))?;
    }
    let line = |k: i64| w.class(vec![k, 0, 0, 0, 0, 0, 0, 0]);
    let mut d = line(5)?.checked_sub(&w.exceptional(CenterId(0))?)?;
    for id in 1..=6u32 {
        d = d.checked_sub(&w.exceptional(CenterId(id))?.scaled(2)?)?;
    }
    // The branch pushed to this model: the section C0 of F_1 contracts to
    // p0, so the plane image has degree `fibre_coeff` and multiplicity
    // `fibre_coeff - xi` at p0.
    let mut branch =
        line(fibre_coeff)?.checked_sub(&w.exceptional(CenterId(0))?.scaled(fibre_coeff - xi)?)?;
    for id in 1..=3u32 {
        branch = branch.checked_sub(&w.exceptional(CenterId(id))?.scaled(sub_first)?)?;
        branch = branch.checked_sub(&w.exceptional(CenterId(id + 3))?.scaled(sub_second)?)?;
    }

    let d_squared = d.self_intersection()?;
    let d_dot_canonical = d.intersect(&w.canonical_class())?;
    let d_dot_center = d.intersect(&w.exceptional(CenterId(0))?)?;
    let d_dot_branch = d.intersect(&branch)?;

    // Ruled route: the same numbers over F_1 without the p0 center, with
    // D = π*(4C0 + 5Γ) - Σ 2E_i*.
    let mut f1 = SurfaceModel::hirzebruch(1)?;
    for id in 1..=3u32 {
        f1 = f1.blow_up_as(CenterId(id), Parent::SurfacePoint)?;
    }
    for id in 1..=3u32 {
        f1 = f1.blow_up_as(CenterId(id + 3), Parent::InfinitelyNear(CenterId(id)))?;
    }
    let ruled = |a: i64, b: i64| f1.class(vec![a, b, 0, 0, 0, 0, 0, 0]);
    let mut d_ruled = ruled(4, 5)?;
    let mut branch_ruled = ruled(xi, fibre_coeff)?;
    for id in 1..=6u32 {
        d_ruled = d_ruled.checked_sub(&f1.exceptional(CenterId(id))?.scaled(2)?)?;
    }
    for id in 1..=3u32 {
        branch_ruled =
            branch_ruled.checked_sub(&f1.exceptional(CenterId(id))?.scaled(sub_first)?)?;
        branch_ruled =
            branch_ruled.checked_sub(&f1.exceptional(CenterId(id + 3))?.scaled(sub_second)?)?;
    }
    assert_eq!(
        d_squared,
        d_ruled.self_intersection()?,
        "route disagreement on D^2"
    );
    assert_eq!(
        d_dot_canonical,
        d_ruled.intersect(&f1.canonical_class())?,
        "route disagreement on D.K"
    );
    assert_eq!(
        d_dot_branch,
        d_ruled.intersect(&branch_ruled)?,
        "route disagreement on D.B"
    );

    Ok(EliminationCertificate {
        shape,
        d_squared,
        d_dot_canonical,
        d_dot_center,
        d_dot_branch,
        xi,
        contradicts_minimality: d_dot_branch < xi,
        assumptions: vec![
            "the three [r,r]-first-points are not collinear and avoid the contracted section"
                .into(),
            "no curve in |C0 + fibre| passes through all three [r,r]-first-points".into(),
        ],
    })
}

/// Basis substitution induced by a birational step, with the Gram matrices
/// of source and target basis.  `matrix` maps old coefficients to new ones
/// (columns are images of the old basis vectors).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TransformStep {
    pub kind: TransformKind,
    pub matrix: Vec<Vec<i64>>,
    pub source_gram: Vec<Vec<i64>>,
    pub target_gram: Vec<Vec<i64>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum TransformKind {
    ElementaryTransform {
        on_negative_section: bool,
        e_before: i64,
    },
    ContractNegativeSection,
    QuadraticTransform,
}

impl TransformStep {
    /// Whether the substitution preserves the intersection pairing:
    /// `Mᵀ·G_target·M = G_source`.
    pub fn is_isometry(&self) -> bool {
        let n = self.matrix.len();
        if n == 0 || self.source_gram.len() != n {
            return false;
        }
        let m = &self.matrix;
        let g = &self.target_gram;
        for i in 0..n {
            for j in 0..n {
                let mut acc = 0i64;
                for a in 0..n {
                    for b in 0..n {
                        acc += m[a][i] * g[a][b] * m[b][j];
                    }
                }
                if acc != self.source_gram[i][j] {
                    return false;
                }
            }
        }
        true
    }

    pub fn apply(&self, coeffs: &[i64]) -> Vec<i64> {
        let n = self.matrix.len();
        assert_eq!(coeffs.len(), n, "coefficient vector length mismatch");
        (0..n)
            .map(|i| (0..n).map(|j| self.matrix[i][j] * coeffs[j]).sum())
            .collect()
    }
}

fn blown_ruled_gram(e: i64) -> Vec<Vec<i64>> {
    vec![vec![-e, 1, 0], vec![1, 0, 0], vec![0, 0, -1]]
}

fn elm_step(e: i64, on_negative_section: bool) -> TransformStep {
    // Columns: images of (C0, Γ, E) in the basis (C0', Γ', E') of the
    // blown-up target.  The fibre through the center becomes the new
    // exceptional curve and vice versa.
    let matrix = if on_negative_section {
        vec![vec![1, 0, 0], vec![1, 1, 1], vec![-1, 0, -1]]
    } else {
        vec![vec![1, 0, 0], vec![0, 1, 1], vec![-1, 0, -1]]
    };
    let e_after = if on_negative_section { e + 1 } else { e - 1 };
    let step = TransformStep {
        kind: TransformKind::ElementaryTransform {
            on_negative_section,
            e_before: e,
        },
        matrix,
        source_gram: blown_ruled_gram(e),
        target_gram: blown_ruled_gram(e_after),
    };
    assert!(
        step.is_isometry(),
        "elementary transformation must be an isometry"
    );
    step
}

/// A singularity of a branch on a ruled surface, with the location facts
/// the lattice needs: whether the fibre through its (first) point is a
/// component of the branch, and an optional marker grouping singularities
/// that share one fibre.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RuledSingularity {
    pub kind: BranchSingularity,
    pub fibre_in_branch: bool,
    fibre_group: Option<u32>,
}

impl RuledSingularity {
    pub fn new(kind: BranchSingularity, fibre_in_branch: bool) -> Self {
        RuledSingularity {
            kind,
            fibre_in_branch,
            fibre_group: None,
        }
    }
}

/// A branch divisor `ξ·C0 + b·Γ` on `F_e` with its singularity list.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RuledBranch {
    e: i64,
    section_coeff: i64,
    fibre_coeff: i64,
    singularities: Vec<RuledSingularity>,
    next_group: u32,
}

impl RuledBranch {
    pub fn new(
        e: i64,
        section_coeff: i64,
        fibre_coeff: i64,
        singularities: Vec<RuledSingularity>,
    ) -> Result<Self> {
        if e < 0 {
            return Err(Error::InvalidParameter(format!(
                "e = {e} must be non-negative"
            )));
        }
        Ok(RuledBranch {
            e,
            section_coeff,
            fibre_coeff,
            singularities,
            next_group: 0,
        })
    }

    pub fn e(&self) -> i64 {
        self.e
    }

    /// `ξ = B·Γ`.
    pub fn xi(&self) -> i64 {
        self.section_coeff
    }

    pub fn class_coeffs(&self) -> (i64, i64) {
        (self.section_coeff, self.fibre_coeff)
    }

    /// `B·C0 = -e·ξ + b`.
    pub fn dot_negative_section(&self) -> i64 {
        -self.e * self.section_coeff + self.fibre_coeff
    }

    pub fn singularities(&self) -> &[RuledSingularity] {
        &self.singularities
    }
}

/// Where the elementary transformation is centered.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ElmCenter {
    /// At the (first) point of a listed singularity.
    Singularity {
        index: usize,
        on_negative_section: bool,
    },
    /// At an unlisted point of the given branch multiplicity.
    Free {
        multiplicity: i64,
        fibre_in_branch: bool,
        on_negative_section: bool,
    },
}

#[derive(Clone, Debug)]
pub struct ElmOutcome {
    pub branch: RuledBranch,
    pub step: TransformStep,
}

/// Elementary transformation: blow up the center, contract the strict
/// transform of the fibre through it.  `e` changes by +1 when the center is
/// on the negative section and by -1 otherwise; the branch class follows
/// the two-step composition.
///
/// The contracted fibre concentrates everything it carries at one image
/// point, whose total multiplicity is `ξ - 2⌊m/2⌋` plus one if the fibre is
/// a branch component; singularities sharing that fibre merge into it and
/// their finer structure is not modelled.
pub fn elementary_transform(branch: &RuledBranch, center: &ElmCenter) -> Result<ElmOutcome> {
    let (kind, fibre_in_branch, on_neg, consumed) = match center {
        ElmCenter::Singularity {
            index,
            on_negative_section,
        } => {
            let sing = branch.singularities.get(*index).ok_or_else(|| {
                Error::InvalidParameter(format!("no singularity with index {index}"))
            })?;
            let mut consumed = vec![*index];
            if let Some(group) = sing.fibre_group {
                for (j, other) in branch.singularities.iter().enumerate() {
                    if j != *index && other.fibre_group == Some(group) {
                        consumed.push(j);
                    }
                }
            }
            (
                sing.kind,
                sing.fibre_in_branch,
                *on_negative_section,
                consumed,
            )
        }
        ElmCenter::Free {
            multiplicity,
            fibre_in_branch,
            on_negative_section,
        } => {
            if *multiplicity < 0 {
                return Err(Error::InvalidParameter("negative multiplicity".into()));
            }
            (
                BranchSingularity::Tuple(*multiplicity),
                *fibre_in_branch,
                *on_negative_section,
                vec![],
            )
        }
    };

    let e_after = if on_neg { branch.e + 1 } else { branch.e - 1 };
    if e_after < 0 {
        return Err(Error::InvalidTransform(
            "an off-section center on F_0 would give e < 0; every point of F_0 lies on a minimal section".into(),
        ));
    }

    let m = match kind {
        BranchSingularity::Tuple(m) => m,
        BranchSingularity::Rr(r) => r,
    };
    let subtraction = 2 * (m / 2);
    let xi = branch.section_coeff;
    let new_fibre_coeff = if on_neg {
        branch.section_coeff + branch.fibre_coeff - subtraction
    } else {
        branch.fibre_coeff - subtraction
    };
    // Image multiplicity at the crushed fibre: its intersection with the
    // transformed branch, plus one if the fibre was a branch component.
    let image_mult = xi - subtraction + i64::from(fibre_in_branch);
    // The new fibre through the image point is the old exceptional curve,
    // a branch component exactly when m is odd.
    let image_fibre_in_branch = m % 2 != 0;

    let mut next_group = branch.next_group;
    let mut outputs: Vec<RuledSingularity> = Vec::new();
    match kind {
        BranchSingularity::Rr(r) if fibre_in_branch => {
            // The second point of the [r,r]-point lies on the contracted
            // fibre, so the pair survives as an [r,r]-point only at the
            // maximal multiplicity r = ξ/2 + 1.
            if image_mult != r {
                return Err(Error::InvalidTransform(format!(
                    "an [r,r]-point on a branch fibre transports only when r = xi/2 + 1 (r = {r}, xi = {xi})"
                )));
            }
            outputs.push(RuledSingularity {
                kind: BranchSingularity::Rr(r),
                fibre_in_branch: image_fibre_in_branch,
                fibre_group: None,
            });
        }
        BranchSingularity::Rr(r) => {
            // Fibre not in the branch: the pair splits.  The second point
            // becomes an honest point of multiplicity r + (r mod 2) on the
            // new fibre, next to the crushed image point.
            let group = next_group;
            next_group += 1;
            if image_mult >= 2 {
                outputs.push(RuledSingularity {
                    kind: BranchSingularity::Tuple(image_mult),
                    fibre_in_branch: image_fibre_in_branch,
                    fibre_group: Some(group),
                });
            }
            outputs.push(RuledSingularity {
                kind: BranchSingularity::Tuple(r + r % 2),
                fibre_in_branch: image_fibre_in_branch,
                fibre_group: Some(group),
            });
        }
        BranchSingularity::Tuple(_) => {
            if image_mult >= 2 {
                outputs.push(RuledSingularity {
                    kind: BranchSingularity::Tuple(image_mult),
                    fibre_in_branch: image_fibre_in_branch,
                    fibre_group: None,
                });
            }
        }
    }

    let mut singularities: Vec<RuledSingularity> = branch
        .singularities
        .iter()
        .enumerate()
        .filter(|(j, _)| !consumed.contains(j))
        .map(|(_, s)| s.clone())
        .collect();
    singularities.extend(outputs);

    Ok(ElmOutcome {
        branch: RuledBranch {
            e: e_after,
            section_coeff: branch.section_coeff,
            fibre_coeff: new_fibre_coeff,
            singularities,
            next_group,
        },
        step: elm_step(branch.e, on_neg),
    })
}

/// Contract the negative section of a branch on `F_1` down to the plane.
/// The section maps to a point `γ` at which the image branch has
/// multiplicity `B·C0`, plus one if the section is a branch component;
/// fibres map to lines through `γ`.
///
/// Returns the plane branch model (fresh center ids, the `γ` record first
/// when its multiplicity is at least 2) and the basis substitution
/// `C0 ↦ E*, Γ ↦ L - E*`.
pub fn contract_negative_section(
    branch: &RuledBranch,
    section_in_branch: bool,
) -> Result<(BranchModel, TransformStep)> {
    if branch.e != 1 {
        return Err(Error::InvalidTransform(format!(
            "only the (-1)-section of F_1 contracts to a smooth point, got e = {}",
            branch.e
        )));
    }
    let degree = branch.fibre_coeff;
    let gamma_mult = branch.dot_negative_section() + i64::from(section_in_branch);

    let plane = SurfaceModel::projective_plane();
    let class = plane.class(vec![degree])?;
    let mut next_id = 0u32;
    let mut fresh = || {
        let id = CenterId(next_id);
        next_id += 1;
        id
    };
    let mut singularities = Vec::new();
    if gamma_mult >= 2 {
        singularities.push(SingularityAssignment::mtuple(fresh(), gamma_mult));
    }
    for sing in &branch.singularities {
        match sing.kind {
            BranchSingularity::Tuple(m) => {
                singularities.push(SingularityAssignment::mtuple(fresh(), m));
            }
            BranchSingularity::Rr(r) => {
                let first = fresh();
                let second = fresh();
                singularities.push(SingularityAssignment::rr_point(first, second, r));
            }
        }
    }
    let model = BranchModel::new(plane, class, singularities)?;

    let step = TransformStep {
        kind: TransformKind::ContractNegativeSection,
        matrix: vec![vec![0, 1], vec![1, -1]],
        source_gram: vec![vec![-1, 1], vec![1, 0]],
        target_gram: vec![vec![1, 0], vec![0, -1]],
    };
    assert!(step.is_isometry(), "contraction must be an isometry");
    Ok((model, step))
}

/// Plane curve data for the quadratic transformation: a degree and the
/// singularities of the curve itself (not of a branch with extra lines).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PlaneCurveData {
    pub degree: i64,
    pub singularities: Vec<BranchSingularity>,
}

/// One center of a quadratic transformation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CremonaCenter {
    /// The (first) point of a listed singularity.
    AtSingularity { index: usize },
    /// The infinitely near second point of the `[r,r]`-point consumed by
    /// the first center; allowed only in the middle position.
    AtRrSecond { index: usize },
    /// An unlisted point of the given multiplicity.
    Free { multiplicity: i64 },
}

/// Image data of a quadratic transformation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CremonaImage {
    /// Degree of the proper transform of the curve: `2d - m1 - m2 - m3`.
    pub degree: i64,
    /// Multiplicities of the proper transform at the three new fundamental
    /// points: `d - m_j - m_k`.
    pub fundamental_multiplicities: [i64; 3],
    /// How many exceptional curves land in the branch as lines (odd
    /// effective multiplicity at a childless center).
    pub branch_line_count: usize,
    /// Singularities untouched by the transformation, plus the orphaned
    /// second point of a consumed `[r,r]`-point.
    pub carried_singularities: Vec<BranchSingularity>,
    /// Geometric side conditions assumed of the centers.
    pub assumptions: Vec<String>,
    pub step: TransformStep,
}

fn quadratic_step() -> TransformStep {
    // L ↦ 2L - E1 - E2 - E3, E_i ↦ L - E_j - E_k; an involution.  The same
    // substitution serves the infinitely-near case: total-transform
    // coordinates make the formulas uniform.
    let matrix = vec![
        vec![2, 1, 1, 1],
        vec![-1, 0, -1, -1],
        vec![-1, -1, 0, -1],
        vec![-1, -1, -1, 0],
    ];
    let gram = vec![
        vec![1, 0, 0, 0],
        vec![0, -1, 0, 0],
        vec![0, 0, -1, 0],
        vec![0, 0, 0, -1],
    ];
    let step = TransformStep {
        kind: TransformKind::QuadraticTransform,
        matrix,
        source_gram: gram.clone(),
        target_gram: gram,
    };
    assert!(
        step.is_isometry(),
        "quadratic substitution must be an isometry"
    );
    step
}

/// Quadratic transformation of the plane centered at three points, the
/// middle one possibly infinitely near the first.  Degree and multiplicity
/// arithmetic is exact; tangent-line distinctness and general position are
/// caller assertions carried in the output.
pub fn cremona_quadratic(
    curve: &PlaneCurveData,
    centers: &[CremonaCenter],
) -> Result<CremonaImage> {
    if centers.len() != 3 {
        return Err(Error::InvalidTransform(format!(
            "a quadratic transformation needs exactly 3 centers, got {}",
            centers.len()
        )));
    }
    for (pos, c) in centers.iter().enumerate() {
        match c {
            CremonaCenter::AtRrSecond { index } => {
                let first_matches = pos == 1
                    && matches!(centers[0], CremonaCenter::AtSingularity { index: i } if i == *index);
                if !first_matches {
                    return Err(Error::InvalidTransform(
                        "an infinitely near center is allowed only in the middle position, over the first center".into(),
                    ));
                }
                match curve.singularities.get(*index) {
                    Some(BranchSingularity::Rr(_)) => {}
                    _ => {
                        return Err(Error::InvalidTransform(
                            "the infinitely near center must be the second point of an [r,r]-point"
                                .into(),
                        ))
                    }
                }
            }
            CremonaCenter::AtSingularity { index } => {
                if curve.singularities.get(*index).is_none() {
                    return Err(Error::InvalidParameter(format!(
                        "no singularity with index {index}"
                    )));
                }
                let dup = centers.iter().enumerate().any(|(q, other)| {
                    q != pos
                        && matches!(other, CremonaCenter::AtSingularity { index: i } if i == index)
                });
                if dup {
                    return Err(Error::InvalidTransform("centers must be distinct".into()));
                }
            }
            CremonaCenter::Free { multiplicity } => {
                if *multiplicity < 0 {
                    return Err(Error::InvalidParameter("negative multiplicity".into()));
                }
            }
        }
    }

    let d = curve.degree;
    let raw = |c: &CremonaCenter| -> i64 {
        match c {
            CremonaCenter::AtSingularity { index } => match curve.singularities[*index] {
                BranchSingularity::Tuple(m) => m,
                BranchSingularity::Rr(r) => r,
            },
            CremonaCenter::AtRrSecond { index } => match curve.singularities[*index] {
                BranchSingularity::Rr(r) => r,
                BranchSingularity::Tuple(m) => m,
            },
            CremonaCenter::Free { multiplicity } => *multiplicity,
        }
    };
    let m: Vec<i64> = centers.iter().map(raw).collect();
    let degree = 2 * d - m[0] - m[1] - m[2];
    let fundamental_multiplicities = [d - m[1] - m[2], d - m[0] - m[2], d - m[0] - m[1]];

    // A center's exceptional curve maps to a line unless a later center is
    // infinitely near it; the line joins the branch when the effective
    // multiplicity (parity correction included) is odd.
    let second_present = matches!(centers[1], CremonaCenter::AtRrSecond { .. });
    let mut branch_line_count = 0usize;
    for (pos, c) in centers.iter().enumerate() {
        let childless = !(pos == 0 && second_present);
        let effective = match c {
            CremonaCenter::AtRrSecond { .. } => m[pos] + m[pos] % 2,
            _ => m[pos],
        };
        if childless && effective % 2 != 0 {
            branch_line_count += 1;
        }
    }

    let consumed: Vec<usize> = centers
        .iter()
        .filter_map(|c| match c {
            CremonaCenter::AtSingularity { index } => Some(*index),
            _ => None,
        })
        .collect();
    let mut carried = Vec::new();
    for (j, sing) in curve.singularities.iter().enumerate() {
        if !consumed.contains(&j) {
            carried.push(*sing);
            continue;
        }
        // A consumed [r,r]-point whose second point is not itself a center
        // leaves that second point behind, with the parity correction.
        if let BranchSingularity::Rr(r) = sing {
            let second_consumed =
                matches!(centers[1], CremonaCenter::AtRrSecond { index } if index == j);
            if !second_consumed {
                carried.push(BranchSingularity::Tuple(r + r % 2));
            }
        }
    }

    let assumptions = if second_present {
        vec!["the tangent directions at the infinitely near pair and the third center are in general position".into()]
    } else {
        vec!["the three centers are not collinear".into()]
    };

    Ok(CremonaImage {
        degree,
        fundamental_multiplicities,
        branch_line_count,
        carried_singularities: carried,
        assumptions,
        step: quadratic_step(),
    })
}
