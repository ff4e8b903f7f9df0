//! Divisor-class lattices on the projective plane, on Hirzebruch surfaces,
//! and on their iterated blow-ups at possibly infinitely near points.
//!
//! Classes are stored in the *total-transform* basis: the plane contributes
//! the line class `L` (a Hirzebruch surface contributes the negative section
//! `C0` and a fibre `Γ`), and every blow-up center `y_i` contributes the
//! total transform `E_i* = ω*(y_i)` of its exceptional curve.  In this basis
//! the intersection form is block diagonal,
//!
//! ```text
//!   L·L = 1            C0·C0 = -e   C0·Γ = 1   Γ·Γ = 0
//!   E_j*·E_h* = -δ_jh  (and E_j* pairs to 0 with the base classes)
//! ```
//!
//! Strict transforms are derived values.  Points carry no coordinates; only
//! the infinitely-near forest of centers matters for lattice arithmetic.
//!
//! All arithmetic is checked `i64`; an overflow reports [`Error::Overflow`].

use std::fmt;
use std::ops::{Add, Neg, Sub};
use std::sync::Arc;

use crate::error::{Error, Result};

/// The unblown base surface.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub enum SurfaceKind {
    ProjectivePlane,
    /// The Hirzebruch surface `F_e`; the negative section has
    /// self-intersection `-e`.
    Hirzebruch {
        e: i64,
    },
}

impl SurfaceKind {
    /// Rank of the Picard lattice of the unblown surface.
    pub fn base_rank(self) -> usize {
        match self {
            SurfaceKind::ProjectivePlane => 1,
            SurfaceKind::Hirzebruch { .. } => 2,
        }
    }
}

/// Opaque identifier of a blow-up center, unique within a model.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CenterId(pub u32);

impl fmt::Display for CenterId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "y{}", self.0)
    }
}

/// Where a blow-up center sits: at an honest point of the base surface, or
/// infinitely near an earlier center (on its exceptional curve).
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub enum Parent {
    SurfacePoint,
    InfinitelyNear(CenterId),
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub struct BlowUpCenter {
    pub id: CenterId,
    pub parent: Parent,
}

#[derive(Debug, PartialEq, Eq)]
struct ModelData {
    kind: SurfaceKind,
    centers: Vec<BlowUpCenter>,
}

/// A rational base surface together with an ordered forest of blow-up
/// centers.  Immutable; blowing up returns a new model.
///
/// Two models are the same lattice iff they have the same kind and the same
/// center list; cloning is cheap (shared storage).
#[derive(Clone, Debug)]
pub struct SurfaceModel {
    data: Arc<ModelData>,
}

impl PartialEq for SurfaceModel {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.data, &other.data) || self.data == other.data
    }
}

impl Eq for SurfaceModel {}

impl SurfaceModel {
    /// A model with an empty center list.  Rejects `Hirzebruch { e }` with
    /// negative `e`.
    pub fn new(kind: SurfaceKind) -> Result<Self> {
        if let SurfaceKind::Hirzebruch { e } = kind {
            if e < 0 {
                return Err(Error::InvalidParameter(format!(
                    "Hirzebruch parameter e must be non-negative, got {e}"
                )));
            }
        }
        Ok(SurfaceModel {
            data: Arc::new(ModelData {
                kind,
                centers: Vec::new(),
            }),
        })
    }

    pub fn projective_plane() -> Self {
        Self::new(SurfaceKind::ProjectivePlane).expect("plane is always valid")
    }

    pub fn hirzebruch(e: i64) -> Result<Self> {
        Self::new(SurfaceKind::Hirzebruch { e })
    }

    pub fn kind(&self) -> SurfaceKind {
        self.data.kind
    }

    pub fn centers(&self) -> &[BlowUpCenter] {
        &self.data.centers
    }

    /// Size of the total-transform basis.
    pub fn rank(&self) -> usize {
        self.data.kind.base_rank() + self.data.centers.len()
    }

    pub fn center_index(&self, id: CenterId) -> Option<usize> {
        self.data.centers.iter().position(|c| c.id == id)
    }

    pub fn has_center(&self, id: CenterId) -> bool {
        self.center_index(id).is_some()
    }

    /// Blow up a point, auto-assigning the next free numeric id.
    pub fn blow_up(&self, parent: Parent) -> Result<(SurfaceModel, CenterId)> {
        let next = self
            .data
            .centers
            .iter()
            .map(|c| c.id.0 + 1)
            .max()
            .unwrap_or(0);
        let id = CenterId(next);
        Ok((self.blow_up_as(id, parent)?, id))
    }

    /// Blow up a point, installing the caller's id for the new center.
    pub fn blow_up_as(&self, id: CenterId, parent: Parent) -> Result<SurfaceModel> {
        if self.has_center(id) {
            return Err(Error::InvalidCenter(format!("duplicate center id {id}")));
        }
        if let Parent::InfinitelyNear(p) = parent {
            if !self.has_center(p) {
                return Err(Error::InvalidCenter(format!(
                    "parent {p} does not exist in the model"
                )));
            }
        }
        let mut centers = self.data.centers.clone();
        centers.push(BlowUpCenter { id, parent });
        Ok(SurfaceModel {
            data: Arc::new(ModelData {
                kind: self.data.kind,
                centers,
            }),
        })
    }

    /// Build a class from raw coefficients in this model's basis.
    pub fn class(&self, coeffs: Vec<i64>) -> Result<DivisorClass> {
        if coeffs.len() != self.rank() {
            return Err(Error::InvalidParameter(format!(
                "coefficient vector has length {}, basis has size {}",
                coeffs.len(),
                self.rank()
            )));
        }
        Ok(DivisorClass {
            owner: self.clone(),
            coeffs,
        })
    }

    pub fn zero_class(&self) -> DivisorClass {
        DivisorClass {
            owner: self.clone(),
            coeffs: vec![0; self.rank()],
        }
    }

    fn base_class(&self, plane: &[i64], ruled: &[i64]) -> DivisorClass {
        let mut coeffs = vec![0; self.rank()];
        match self.data.kind {
            SurfaceKind::ProjectivePlane => coeffs[..1].copy_from_slice(plane),
            SurfaceKind::Hirzebruch { .. } => coeffs[..2].copy_from_slice(ruled),
        }
        DivisorClass {
            owner: self.clone(),
            coeffs,
        }
    }

    /// The line class `L` on a plane model.
    pub fn line(&self) -> Result<DivisorClass> {
        match self.data.kind {
            SurfaceKind::ProjectivePlane => Ok(self.base_class(&[1], &[])),
            _ => Err(Error::InvalidParameter(
                "line class needs a plane base".into(),
            )),
        }
    }

    /// The negative section `C0` on a Hirzebruch model.
    pub fn negative_section(&self) -> Result<DivisorClass> {
        match self.data.kind {
            SurfaceKind::Hirzebruch { .. } => Ok(self.base_class(&[], &[1, 0])),
            _ => Err(Error::InvalidParameter(
                "section class needs a ruled base".into(),
            )),
        }
    }

    /// The fibre class `Γ` on a Hirzebruch model.
    pub fn fibre(&self) -> Result<DivisorClass> {
        match self.data.kind {
            SurfaceKind::Hirzebruch { .. } => Ok(self.base_class(&[], &[0, 1])),
            _ => Err(Error::InvalidParameter(
                "fibre class needs a ruled base".into(),
            )),
        }
    }

    /// The total transform `E_i*` of the exceptional curve over a center.
    pub fn exceptional(&self, id: CenterId) -> Result<DivisorClass> {
        let idx = self
            .center_index(id)
            .ok_or_else(|| Error::InvalidCenter(format!("no center {id} in the model")))?;
        let mut coeffs = vec![0; self.rank()];
        coeffs[self.data.kind.base_rank() + idx] = 1;
        Ok(DivisorClass {
            owner: self.clone(),
            coeffs,
        })
    }

    /// Canonical class: `-3L + Σ E_i*` on the plane,
    /// `-2C0 - (e+2)Γ + Σ E_i*` on a Hirzebruch surface.
    pub fn canonical_class(&self) -> DivisorClass {
        let mut coeffs = vec![1; self.rank()];
        match self.data.kind {
            SurfaceKind::ProjectivePlane => coeffs[0] = -3,
            SurfaceKind::Hirzebruch { e } => {
                coeffs[0] = -2;
                coeffs[1] = -(e + 2);
            }
        }
        DivisorClass {
            owner: self.clone(),
            coeffs,
        }
    }

    /// Total transform of a class from a smaller model obtained by
    /// forgetting trailing centers: coefficients carry over, new exceptional
    /// coordinates are zero.
    pub fn pullback(&self, class: &DivisorClass) -> Result<DivisorClass> {
        let src = &class.owner;
        if src.data.kind != self.data.kind
            || src.data.centers.len() > self.data.centers.len()
            || src.data.centers[..] != self.data.centers[..src.data.centers.len()]
        {
            return Err(Error::LatticeMismatch);
        }
        let mut coeffs = class.coeffs.clone();
        coeffs.resize(self.rank(), 0);
        Ok(DivisorClass {
            owner: self.clone(),
            coeffs,
        })
    }
}

fn mul(a: i64, b: i64) -> Result<i64> {
    a.checked_mul(b).ok_or(Error::Overflow)
}

fn add(a: i64, b: i64) -> Result<i64> {
    a.checked_add(b).ok_or(Error::Overflow)
}

fn sub(a: i64, b: i64) -> Result<i64> {
    a.checked_sub(b).ok_or(Error::Overflow)
}

/// An integer divisor class on a [`SurfaceModel`], in the total-transform
/// basis of its owner.  Classes from different owners never combine.
#[derive(Clone, Debug)]
pub struct DivisorClass {
    owner: SurfaceModel,
    coeffs: Vec<i64>,
}

impl PartialEq for DivisorClass {
    fn eq(&self, other: &Self) -> bool {
        self.owner == other.owner && self.coeffs == other.coeffs
    }
}

impl Eq for DivisorClass {}

impl DivisorClass {
    pub fn owner(&self) -> &SurfaceModel {
        &self.owner
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    /// Coefficient of the total transform `E_i*` over the given center.
    pub fn exceptional_coeff(&self, id: CenterId) -> Result<i64> {
        let idx = self
            .owner
            .center_index(id)
            .ok_or_else(|| Error::InvalidCenter(format!("no center {id} in the model")))?;
        Ok(self.coeffs[self.owner.kind().base_rank() + idx])
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    fn same_lattice(&self, other: &DivisorClass) -> Result<()> {
        if self.owner == other.owner {
            Ok(())
        } else {
            Err(Error::LatticeMismatch)
        }
    }

    /// The intersection pairing.  Bilinear and symmetric; exceptional
    /// classes satisfy `E_j*·E_h* = -δ_jh`.
    pub fn intersect(&self, other: &DivisorClass) -> Result<i64> {
        self.same_lattice(other)?;
        let a = &self.coeffs;
        let b = &other.coeffs;
        let mut acc: i64;
        let base = match self.owner.kind() {
            SurfaceKind::ProjectivePlane => {
                acc = mul(a[0], b[0])?;
                1
            }
            SurfaceKind::Hirzebruch { e } => {
                acc = sub(0, mul(e, mul(a[0], b[0])?)?)?;
                acc = add(acc, mul(a[0], b[1])?)?;
                acc = add(acc, mul(a[1], b[0])?)?;
                2
            }
        };
        for i in base..a.len() {
            acc = sub(acc, mul(a[i], b[i])?)?;
        }
        Ok(acc)
    }

    pub fn self_intersection(&self) -> Result<i64> {
        self.intersect(self)
    }

    pub fn checked_add(&self, other: &DivisorClass) -> Result<DivisorClass> {
        self.same_lattice(other)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(&x, &y)| add(x, y))
            .collect::<Result<_>>()?;
        Ok(DivisorClass {
            owner: self.owner.clone(),
            coeffs,
        })
    }

    pub fn checked_sub(&self, other: &DivisorClass) -> Result<DivisorClass> {
        self.same_lattice(other)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(&x, &y)| sub(x, y))
            .collect::<Result<_>>()?;
        Ok(DivisorClass {
            owner: self.owner.clone(),
            coeffs,
        })
    }

    pub fn scaled(&self, k: i64) -> Result<DivisorClass> {
        let coeffs = self
            .coeffs
            .iter()
            .map(|&x| mul(x, k))
            .collect::<Result<_>>()?;
        Ok(DivisorClass {
            owner: self.owner.clone(),
            coeffs,
        })
    }

    /// Exact halving; fails with [`Error::OddBranchClass`] on the first odd
    /// coefficient.
    pub fn half(&self) -> Result<DivisorClass> {
        for (i, &c) in self.coeffs.iter().enumerate() {
            if c % 2 != 0 {
                return Err(Error::OddBranchClass(format!(
                    "coefficient {c} at basis index {i}"
                )));
            }
        }
        Ok(DivisorClass {
            owner: self.owner.clone(),
            coeffs: self.coeffs.iter().map(|&c| c / 2).collect(),
        })
    }
}

impl fmt::Display for DivisorClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<String> = match self.owner.kind() {
            SurfaceKind::ProjectivePlane => vec!["L".into()],
            SurfaceKind::Hirzebruch { .. } => vec!["C0".into(), "G".into()],
        }
        .into_iter()
        .chain(
            self.owner
                .centers()
                .iter()
                .map(|c| format!("E[{}]", c.id.0)),
        )
        .collect();
        let mut wrote = false;
        for (c, name) in self.coeffs.iter().zip(&names) {
            if *c == 0 {
                continue;
            }
            if wrote {
                write!(f, " {} ", if *c > 0 { "+" } else { "-" })?;
                write!(
                    f,
                    "{}{name}",
                    if c.abs() == 1 {
                        String::new()
                    } else {
                        c.abs().to_string()
                    }
                )?;
            } else {
                let sign = if *c < 0 { "-" } else { "" };
                write!(
                    f,
                    "{sign}{}{name}",
                    if c.abs() == 1 {
                        String::new()
                    } else {
                        c.abs().to_string()
                    }
                )?;
                wrote = true;
            }
        }
        if !wrote {
            write!(f, "0")?;
        }
        Ok(())
    }
}

// Operator forms panic on lattice mismatch or overflow; use the checked
// methods when the owners are not statically known to agree.

impl Add for &DivisorClass {
    type Output = DivisorClass;
    fn add(self, rhs: &DivisorClass) -> DivisorClass {
        self.checked_add(rhs).expect("divisor class addition")
    }
}

impl Sub for &DivisorClass {
    type Output = DivisorClass;
    fn sub(self, rhs: &DivisorClass) -> DivisorClass {
        self.checked_sub(rhs).expect("divisor class subtraction")
    }
}

impl Neg for &DivisorClass {
    type Output = DivisorClass;
    fn neg(self) -> DivisorClass {
        self.scaled(-1).expect("divisor class negation")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Independent evaluation of the pairing: assemble the Gram matrix of
    /// the basis from first principles and contract it with both coefficient
    /// vectors.  Kept free of `intersect` so the two routes stay separate.
    #[allow(clippy::needless_range_loop)]
    fn gram_pairing(model: &SurfaceModel, a: &[i64], b: &[i64]) -> i64 {
        let n = model.rank();
        let mut gram = vec![vec![0i64; n]; n];
        match model.kind() {
            SurfaceKind::ProjectivePlane => gram[0][0] = 1,
            SurfaceKind::Hirzebruch { e } => {
                gram[0][0] = -e;
                gram[0][1] = 1;
                gram[1][0] = 1;
            }
        }
        for i in model.kind().base_rank()..n {
            gram[i][i] = -1;
        }
        let mut acc = 0i64;
        for i in 0..n {
            for j in 0..n {
                acc += a[i] * gram[i][j] * b[j];
            }
        }
        acc
    }

    #[test]
    fn plane_basics() {
        let plane = SurfaceModel::projective_plane();
        let l = plane.line().unwrap();
        assert_eq!(l.intersect(&l).unwrap(), 1);
        let k = plane.canonical_class();
        assert_eq!(k, l.scaled(-3).unwrap());
        assert_eq!(k.self_intersection().unwrap(), 9);
    }

    #[test]
    fn hirzebruch_basics() {
        let f2 = SurfaceModel::hirzebruch(2).unwrap();
        let c0 = f2.negative_section().unwrap();
        let g = f2.fibre().unwrap();
        assert_eq!(c0.self_intersection().unwrap(), -2);
        assert_eq!(g.self_intersection().unwrap(), 0);
        assert_eq!(c0.intersect(&g).unwrap(), 1);

        let f0 = SurfaceModel::hirzebruch(0).unwrap();
        assert_eq!(
            f0.negative_section().unwrap().self_intersection().unwrap(),
            0
        );

        // K^2 = 8 on every F_e.
        for e in 0..5 {
            let fe = SurfaceModel::hirzebruch(e).unwrap();
            assert_eq!(fe.canonical_class().self_intersection().unwrap(), 8);
        }

        assert!(matches!(
            SurfaceModel::hirzebruch(-1),
            Err(Error::InvalidParameter(_))
        ));
    }

    #[test]
    fn blow_up_exceptional_relations() {
        let plane = SurfaceModel::projective_plane();
        let (m1, e1) = plane.blow_up(Parent::SurfacePoint).unwrap();
        let exc1 = m1.exceptional(e1).unwrap();
        assert_eq!(exc1.self_intersection().unwrap(), -1);

        let l = m1.pullback(&plane.line().unwrap()).unwrap();
        assert_eq!(l.intersect(&exc1).unwrap(), 0);

        // Nested centers: E1*·E2* = 0 in the total-transform basis.
        let (m2, e2) = m1.blow_up(Parent::InfinitelyNear(e1)).unwrap();
        let exc1 = m2.exceptional(e1).unwrap();
        let exc2 = m2.exceptional(e2).unwrap();
        assert_eq!(exc1.intersect(&exc2).unwrap(), 0);
        assert_eq!(exc2.self_intersection().unwrap(), -1);
    }

    #[test]
    fn dangling_parent_rejected() {
        let plane = SurfaceModel::projective_plane();
        assert!(matches!(
            plane.blow_up(Parent::InfinitelyNear(CenterId(7))),
            Err(Error::InvalidCenter(_))
        ));
        let (m1, e1) = plane.blow_up(Parent::SurfacePoint).unwrap();
        assert!(matches!(
            m1.blow_up_as(e1, Parent::SurfacePoint),
            Err(Error::InvalidCenter(_))
        ));
    }

    #[test]
    fn canonical_after_seven_blow_ups() {
        let mut model = SurfaceModel::projective_plane();
        for _ in 0..7 {
            model = model.blow_up(Parent::SurfacePoint).unwrap().0;
        }
        assert_eq!(model.canonical_class().self_intersection().unwrap(), 2);
    }

    #[test]
    fn canonical_class_blow_up_rule() {
        let f1 = SurfaceModel::hirzebruch(1).unwrap();
        let (m, id) = f1.blow_up(Parent::SurfacePoint).unwrap();
        let lhs = m.canonical_class();
        let rhs = &m.pullback(&f1.canonical_class()).unwrap() + &m.exceptional(id).unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn pairing_on_f1_matches_gram_oracle() {
        // First factor of the elimination computation: value frozen from the
        // Gram-matrix oracle below, 92.
        let f1 = SurfaceModel::hirzebruch(1).unwrap();
        let a = f1.class(vec![4, 5]).unwrap();
        let b = f1.class(vec![12, 20]).unwrap();
        assert_eq!(gram_pairing(&f1, a.coeffs(), b.coeffs()), 92);
        assert_eq!(a.intersect(&b).unwrap(), 92);
    }

    #[test]
    fn pairing_on_f2_section_against_branch() {
        let f2 = SurfaceModel::hirzebruch(2).unwrap();
        let c0 = f2.negative_section().unwrap();
        let b = f2.class(vec![8, 14]).unwrap();
        assert_eq!(gram_pairing(&f2, c0.coeffs(), b.coeffs()), -2);
        assert_eq!(c0.intersect(&b).unwrap(), -2);
    }

    #[test]
    fn owner_mismatch_is_an_error() {
        let plane = SurfaceModel::projective_plane();
        let f1 = SurfaceModel::hirzebruch(1).unwrap();
        let l = plane.line().unwrap();
        let c0 = f1.negative_section().unwrap();
        assert_eq!(l.intersect(&c0), Err(Error::LatticeMismatch));
        assert_eq!(l.checked_add(&c0), Err(Error::LatticeMismatch));

        // Same shape built twice is the same lattice.
        let plane2 = SurfaceModel::projective_plane();
        let l2 = plane2.line().unwrap();
        assert_eq!(l.intersect(&l2).unwrap(), 1);
    }

    #[test]
    fn pullback_is_an_isometry_sample() {
        let f2 = SurfaceModel::hirzebruch(2).unwrap();
        let (m, _) = f2.blow_up(Parent::SurfacePoint).unwrap();
        let a = f2.class(vec![3, -4]).unwrap();
        let b = f2.class(vec![-1, 6]).unwrap();
        assert_eq!(
            m.pullback(&a)
                .unwrap()
                .intersect(&m.pullback(&b).unwrap())
                .unwrap(),
            a.intersect(&b).unwrap()
        );
    }

    #[test]
    fn overflow_is_reported() {
        let plane = SurfaceModel::projective_plane();
        let big = plane.class(vec![i64::MAX]).unwrap();
        assert_eq!(big.intersect(&big), Err(Error::Overflow));
        assert_eq!(big.scaled(2), Err(Error::Overflow));
    }

    #[test]
    fn half_requires_even_coefficients() {
        let plane = SurfaceModel::projective_plane();
        let b = plane.class(vec![8]).unwrap();
        assert_eq!(b.half().unwrap(), plane.class(vec![4]).unwrap());
        let odd = plane.class(vec![7]).unwrap();
        assert!(matches!(odd.half(), Err(Error::OddBranchClass(_))));
    }
}
