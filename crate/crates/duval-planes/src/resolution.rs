//! Canonical resolution of a branch curve at lattice level.
//!
//! A double cover branched along a reduced curve `B0` is resolved by blowing
//! up singular points of the transformed branch; each blow-up at a point of
//! multiplicity `m` replaces the branch by `ω*(B) - 2⌊m/2⌋E`.  When `m` is
//! odd the exceptional curve joins the branch, so the second point of an
//! `[r,r]`-point carries effective multiplicity `r + (r mod 2)`.
//!
//! Singularities are input data, not computed: the module works at the
//! numerical level of assigned multiplicities, and geometric realizability
//! is the caller's assertion.

use crate::error::{Error, Result};
use crate::lattice::{CenterId, DivisorClass, Parent, SurfaceModel};

/// A singularity of the branch, assigned to named centers.
///
/// `Mtuple` is an ordinary point of multiplicity `m ≥ 2`.  `RrPoint` is an
/// `[r,r]`-point: multiplicity `r ≥ 2` at `first`, resolving to multiplicity
/// `r` at `second`, which is infinitely near `first`.  The optional parent
/// places the (first) point itself infinitely near an earlier center;
/// ordinary points of the base surface use [`Parent::SurfacePoint`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SingularityAssignment {
    Mtuple {
        center: CenterId,
        multiplicity: i64,
        parent: Parent,
    },
    RrPoint {
        first: CenterId,
        second: CenterId,
        multiplicity: i64,
        parent: Parent,
    },
}

impl SingularityAssignment {
    pub fn mtuple(center: CenterId, multiplicity: i64) -> Self {
        SingularityAssignment::Mtuple {
            center,
            multiplicity,
            parent: Parent::SurfacePoint,
        }
    }

    pub fn mtuple_at(center: CenterId, multiplicity: i64, parent: Parent) -> Self {
        SingularityAssignment::Mtuple {
            center,
            multiplicity,
            parent,
        }
    }

    pub fn rr_point(first: CenterId, second: CenterId, multiplicity: i64) -> Self {
        SingularityAssignment::RrPoint {
            first,
            second,
            multiplicity,
            parent: Parent::SurfacePoint,
        }
    }

    /// Sort key under the convention that an `[r,r]`-point counts as a
    /// single singularity of multiplicity strictly between `r` and `r+1`.
    fn order_key(&self) -> i64 {
        match self {
            SingularityAssignment::Mtuple { multiplicity, .. } => 2 * multiplicity,
            SingularityAssignment::RrPoint { multiplicity, .. } => 2 * multiplicity + 1,
        }
    }

    fn ids(&self) -> Vec<CenterId> {
        match self {
            SingularityAssignment::Mtuple { center, .. } => vec![*center],
            SingularityAssignment::RrPoint { first, second, .. } => vec![*first, *second],
        }
    }
}

/// A branch divisor on an unblown base surface, with its assigned
/// singularities.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BranchModel {
    ambient: SurfaceModel,
    class: DivisorClass,
    singularities: Vec<SingularityAssignment>,
}

impl BranchModel {
    pub fn new(
        ambient: SurfaceModel,
        class: DivisorClass,
        singularities: Vec<SingularityAssignment>,
    ) -> Result<Self> {
        if !ambient.centers().is_empty() {
            return Err(Error::InvalidParameter(
                "branch ambient must be an unblown base surface".into(),
            ));
        }
        if class.owner() != &ambient {
            return Err(Error::LatticeMismatch);
        }
        Ok(BranchModel {
            ambient,
            class,
            singularities,
        })
    }

    pub fn ambient(&self) -> &SurfaceModel {
        &self.ambient
    }

    pub fn class(&self) -> &DivisorClass {
        &self.class
    }

    pub fn singularities(&self) -> &[SingularityAssignment] {
        &self.singularities
    }
}

/// One blow-up of the resolution ledger.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ResolutionStep {
    pub center: CenterId,
    /// Effective multiplicity at blow-up time (parity correction included).
    pub multiplicity: i64,
    /// `⌊multiplicity/2⌋`; the branch loses `2·subtraction` along `E*`.
    pub subtraction: i64,
    /// Whether the exceptional curve joins the branch (odd multiplicity).
    pub exceptional_in_branch: bool,
}

/// The result of running the canonical resolution: the blown-up model, the
/// smooth branch class, its half class, and the per-step ledger.
#[derive(Clone, Debug)]
pub struct ResolvedCover {
    base: BranchModel,
    model: SurfaceModel,
    smooth_class: DivisorClass,
    half_class: DivisorClass,
    steps: Vec<ResolutionStep>,
}

impl ResolvedCover {
    pub fn base(&self) -> &BranchModel {
        &self.base
    }

    /// The fully blown-up model `W_s`.
    pub fn model(&self) -> &SurfaceModel {
        &self.model
    }

    /// The smooth branch class `B_s = ω*(B0) - Σ 2⌊m_i/2⌋ E_i*`.
    pub fn smooth_class(&self) -> &DivisorClass {
        &self.smooth_class
    }

    /// The half class, with `2·half = B_s` exactly.
    pub fn half_class(&self) -> &DivisorClass {
        &self.half_class
    }

    pub fn steps(&self) -> &[ResolutionStep] {
        &self.steps
    }

    pub fn step_for(&self, id: CenterId) -> Option<&ResolutionStep> {
        self.steps.iter().find(|s| s.center == id)
    }
}

/// Effective multiplicities contributed by one singularity, in blow-up
/// order.  The `+1` at the second point of an odd `[r,r]`-point is the
/// exceptional curve joining the branch.
fn effective_points(sing: &SingularityAssignment) -> Vec<(CenterId, Parent, i64)> {
    match sing {
        SingularityAssignment::Mtuple {
            center,
            multiplicity,
            parent,
        } => {
            vec![(*center, *parent, *multiplicity)]
        }
        SingularityAssignment::RrPoint {
            first,
            second,
            multiplicity,
            parent,
        } => vec![
            (*first, *parent, *multiplicity),
            (
                *second,
                Parent::InfinitelyNear(*first),
                multiplicity + multiplicity % 2,
            ),
        ],
    }
}

/// Run the canonical resolution.  Centers are processed in order of
/// decreasing assigned multiplicity, ties broken by input order; the lattice
/// result does not depend on this order (coefficients are per-center), so
/// the order only shapes the step ledger.
pub fn resolve(branch: &BranchModel) -> Result<ResolvedCover> {
    let mut seen = std::collections::HashSet::new();
    for sing in &branch.singularities {
        let (min, label) = match sing {
            SingularityAssignment::Mtuple { multiplicity, .. } => (*multiplicity, "m-tuple point"),
            SingularityAssignment::RrPoint { multiplicity, .. } => (*multiplicity, "[r,r]-point"),
        };
        if min < 2 {
            return Err(Error::InvalidParameter(format!(
                "{label} needs multiplicity at least 2, got {min}"
            )));
        }
        for id in sing.ids() {
            if !seen.insert(id) {
                return Err(Error::InvalidCenter(format!("duplicate center id {id}")));
            }
        }
    }

    let mut order: Vec<&SingularityAssignment> = branch.singularities.iter().collect();
    order.sort_by_key(|s| std::cmp::Reverse(s.order_key()));

    let mut pending: Vec<(CenterId, Parent, i64)> =
        order.into_iter().flat_map(effective_points).collect();

    let mut model = branch.ambient.clone();
    let mut steps = Vec::with_capacity(pending.len());
    // Multiplicity order first, deferring any center whose parent has not
    // been blown up yet.
    while !pending.is_empty() {
        let pos = pending
            .iter()
            .position(|(_, parent, _)| match parent {
                Parent::SurfacePoint => true,
                Parent::InfinitelyNear(p) => model.has_center(*p),
            })
            .ok_or_else(|| {
                Error::InvalidCenter("infinitely-near parents do not form a forest".into())
            })?;
        let (id, parent, multiplicity) = pending.remove(pos);
        model = model.blow_up_as(id, parent)?;
        steps.push(ResolutionStep {
            center: id,
            multiplicity,
            subtraction: multiplicity / 2,
            exceptional_in_branch: multiplicity % 2 != 0,
        });
    }

    let mut smooth_class = model.pullback(&branch.class)?;
    for step in &steps {
        let exc = model.exceptional(step.center)?;
        smooth_class = smooth_class.checked_sub(&exc.scaled(2 * step.subtraction)?)?;
    }
    let half_class = smooth_class.half()?;

    Ok(ResolvedCover {
        base: branch.clone(),
        model,
        smooth_class,
        half_class,
        steps,
    })
}

/// The half class of a resolved cover (`B_s = 2Δ_s`).
pub fn half_class(cover: &ResolvedCover) -> DivisorClass {
    cover.half_class.clone()
}

/// Filter candidate classes down to the (-2)-curves contained in the smooth
/// branch.  A candidate `C` (a strict transform supplied by the caller)
/// qualifies exactly when `C·C = -2` and `C·B_s = -2`: a component of a
/// smooth branch meets the rest of it in nothing, so `C·B_s = C·C`.
pub fn minus_two_components(
    cover: &ResolvedCover,
    candidates: &[DivisorClass],
) -> Result<Vec<DivisorClass>> {
    let mut out = Vec::new();
    for c in candidates {
        if c.owner() != &cover.model {
            return Err(Error::LatticeMismatch);
        }
        if c.self_intersection()? == -2 && c.intersect(&cover.smooth_class)? == -2 {
            out.push(c.clone());
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::SurfaceKind;

    fn plane_branch(degree: i64, sings: Vec<SingularityAssignment>) -> BranchModel {
        let plane = SurfaceModel::projective_plane();
        let class = plane.class(vec![degree]).unwrap();
        BranchModel::new(plane, class, sings).unwrap()
    }

    #[test]
    fn five_five_point_subtractions() {
        let branch = plane_branch(
            14,
            vec![SingularityAssignment::rr_point(CenterId(0), CenterId(1), 5)],
        );
        let cover = resolve(&branch).unwrap();
        let first = cover.step_for(CenterId(0)).unwrap();
        let second = cover.step_for(CenterId(1)).unwrap();
        assert_eq!((first.multiplicity, 2 * first.subtraction), (5, 4));
        assert_eq!((second.multiplicity, 2 * second.subtraction), (6, 6));
        assert!(first.exceptional_in_branch);
        assert!(!second.exceptional_in_branch);
        assert_eq!(
            cover.smooth_class().exceptional_coeff(CenterId(0)).unwrap(),
            -4
        );
        assert_eq!(
            cover.smooth_class().exceptional_coeff(CenterId(1)).unwrap(),
            -6
        );
    }

    #[test]
    fn three_three_point_subtractions() {
        // Parity rule with r = 3 gives effective multiplicity 4 at the
        // second point, hence subtractions (2, 4).
        let branch = plane_branch(
            10,
            vec![SingularityAssignment::rr_point(CenterId(0), CenterId(1), 3)],
        );
        let cover = resolve(&branch).unwrap();
        assert_eq!(cover.step_for(CenterId(0)).unwrap().subtraction * 2, 2);
        assert_eq!(cover.step_for(CenterId(1)).unwrap().subtraction * 2, 4);
    }

    #[test]
    fn seven_seven_point_subtractions() {
        let branch = plane_branch(
            20,
            vec![SingularityAssignment::rr_point(CenterId(0), CenterId(1), 7)],
        );
        let cover = resolve(&branch).unwrap();
        assert_eq!(cover.step_for(CenterId(0)).unwrap().subtraction * 2, 6);
        assert_eq!(cover.step_for(CenterId(1)).unwrap().subtraction * 2, 8);
    }

    #[test]
    fn smooth_branch_resolves_trivially() {
        let branch = plane_branch(8, vec![]);
        let cover = resolve(&branch).unwrap();
        assert!(cover.steps().is_empty());
        assert_eq!(cover.smooth_class().coeffs(), &[8]);
        assert_eq!(cover.half_class().coeffs(), &[4]);
    }

    #[test]
    fn half_class_on_f2() {
        let f2 = SurfaceModel::hirzebruch(2).unwrap();
        let class = f2.class(vec![8, 14]).unwrap();
        let branch = BranchModel::new(f2, class, vec![]).unwrap();
        let cover = resolve(&branch).unwrap();
        assert_eq!(cover.half_class().coeffs(), &[4, 7]);
        let half = half_class(&cover);
        assert_eq!(half.scaled(2).unwrap(), *cover.smooth_class());
    }

    #[test]
    fn odd_branch_class_is_rejected() {
        let branch = plane_branch(9, vec![]);
        assert!(matches!(resolve(&branch), Err(Error::OddBranchClass(_))));
    }

    #[test]
    fn smooth_class_meets_exceptionals_in_the_subtractions() {
        let branch = plane_branch(
            14,
            vec![
                SingularityAssignment::mtuple(CenterId(0), 6),
                SingularityAssignment::rr_point(CenterId(1), CenterId(2), 5),
                SingularityAssignment::mtuple(CenterId(3), 4),
            ],
        );
        let cover = resolve(&branch).unwrap();
        for step in cover.steps() {
            let exc = cover.model().exceptional(step.center).unwrap();
            assert_eq!(
                cover.smooth_class().intersect(&exc).unwrap(),
                2 * step.subtraction
            );
        }
    }

    #[test]
    fn processing_order_is_by_decreasing_multiplicity() {
        let branch = plane_branch(
            14,
            vec![
                SingularityAssignment::rr_point(CenterId(3), CenterId(4), 3),
                SingularityAssignment::mtuple(CenterId(0), 6),
                SingularityAssignment::mtuple(CenterId(5), 4),
                SingularityAssignment::rr_point(CenterId(1), CenterId(2), 5),
            ],
        );
        let cover = resolve(&branch).unwrap();
        let order: Vec<CenterId> = cover.steps().iter().map(|s| s.center).collect();
        // 6-tuple, [5,5] pair, 4-tuple, [3,3] pair.
        assert_eq!(
            order,
            vec![
                CenterId(0),
                CenterId(1),
                CenterId(2),
                CenterId(5),
                CenterId(3),
                CenterId(4)
            ]
        );
    }

    #[test]
    fn result_is_order_independent() {
        let a = plane_branch(
            14,
            vec![
                SingularityAssignment::rr_point(CenterId(0), CenterId(1), 5),
                SingularityAssignment::rr_point(CenterId(2), CenterId(3), 5),
            ],
        );
        let b = plane_branch(
            14,
            vec![
                SingularityAssignment::rr_point(CenterId(2), CenterId(3), 5),
                SingularityAssignment::rr_point(CenterId(0), CenterId(1), 5),
            ],
        );
        let ca = resolve(&a).unwrap();
        let cb = resolve(&b).unwrap();
        for id in [CenterId(0), CenterId(1), CenterId(2), CenterId(3)] {
            assert_eq!(
                ca.smooth_class().exceptional_coeff(id).unwrap(),
                cb.smooth_class().exceptional_coeff(id).unwrap()
            );
        }
    }

    #[test]
    fn gamma_may_sit_on_a_later_exceptional() {
        // A 4-tuple point infinitely near the second point of a [5,5]-point:
        // the [5,5] outranks it, so the parent exists when it is blown up.
        let branch = plane_branch(
            12,
            vec![
                SingularityAssignment::mtuple_at(
                    CenterId(0),
                    4,
                    Parent::InfinitelyNear(CenterId(2)),
                ),
                SingularityAssignment::rr_point(CenterId(1), CenterId(2), 5),
            ],
        );
        let cover = resolve(&branch).unwrap();
        let order: Vec<CenterId> = cover.steps().iter().map(|s| s.center).collect();
        assert_eq!(order, vec![CenterId(1), CenterId(2), CenterId(0)]);
        assert!(matches!(cover.model().kind(), SurfaceKind::ProjectivePlane));
    }

    #[test]
    fn dangling_singularity_parent_is_rejected() {
        let branch = plane_branch(
            12,
            vec![SingularityAssignment::mtuple_at(
                CenterId(0),
                4,
                Parent::InfinitelyNear(CenterId(9)),
            )],
        );
        assert!(matches!(resolve(&branch), Err(Error::InvalidCenter(_))));
    }

    #[test]
    fn duplicate_ids_are_rejected() {
        let branch = plane_branch(
            12,
            vec![
                SingularityAssignment::mtuple(CenterId(0), 4),
                SingularityAssignment::mtuple(CenterId(0), 6),
            ],
        );
        assert!(matches!(resolve(&branch), Err(Error::InvalidCenter(_))));
    }

    #[test]
    fn minus_two_filter_on_a_line_pencil_branch() {
        // Branch of a two-line configuration: degree 14, 6-tuple at the
        // meeting point, one [5,5]-point on each line.
        let gamma = CenterId(0);
        let (p1, p1p) = (CenterId(1), CenterId(3));
        let (p2, p2p) = (CenterId(2), CenterId(4));
        let branch = plane_branch(
            14,
            vec![
                SingularityAssignment::mtuple(gamma, 6),
                SingularityAssignment::rr_point(p1, p1p, 5),
                SingularityAssignment::rr_point(p2, p2p, 5),
            ],
        );
        let cover = resolve(&branch).unwrap();
        let model = cover.model().clone();
        let l = model
            .pullback(&cover.base().ambient().line().unwrap())
            .unwrap();

        let strict_line = |p: CenterId, pp: CenterId| {
            &(&l - &model.exceptional(gamma).unwrap())
                - &(&model.exceptional(p).unwrap() + &model.exceptional(pp).unwrap())
        };
        let strict_exc = |p: CenterId, pp: CenterId| {
            &model.exceptional(p).unwrap() - &model.exceptional(pp).unwrap()
        };

        let c1 = strict_line(p1, p1p);
        assert_eq!(c1.self_intersection().unwrap(), -2);
        let c3 = strict_exc(p1, p1p);
        assert_eq!(c3.self_intersection().unwrap(), -2);

        let candidates = vec![
            c1.clone(),
            strict_line(p2, p2p),
            c3.clone(),
            strict_exc(p2, p2p),
            l.clone(),                         // a general line: L^2 = 1
            model.exceptional(gamma).unwrap(), // even multiplicity: not in branch
        ];
        let found = minus_two_components(&cover, &candidates).unwrap();
        assert_eq!(found.len(), 4);
        assert!(found.contains(&c1) && found.contains(&c3));
        assert!(!found.contains(&l));
    }

    #[test]
    fn candidates_from_a_foreign_model_are_rejected() {
        let branch = plane_branch(8, vec![]);
        let cover = resolve(&branch).unwrap();
        let foreign = SurfaceModel::projective_plane()
            .blow_up(Parent::SurfacePoint)
            .unwrap()
            .0;
        let cand = foreign.canonical_class();
        assert_eq!(
            minus_two_components(&cover, &[cand]),
            Err(Error::LatticeMismatch)
        );
    }

    #[test]
    fn line_meets_branch_residue_on_the_base() {
        // For the n-line configuration of total degree 10+2n each line meets
        // the rest of the branch in 2n+9 points, computed on the base plane.
        for n in 1..=6 {
            let plane = SurfaceModel::projective_plane();
            let g = plane.class(vec![10 + 2 * n]).unwrap();
            let line = plane.line().unwrap();
            let residue = g.checked_sub(&line).unwrap();
            assert_eq!(line.intersect(&residue).unwrap(), 2 * n + 9);
        }
    }
}
