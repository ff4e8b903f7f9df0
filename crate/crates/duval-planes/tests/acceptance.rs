//! Acceptance suite: one test per criterion, each printing a PASS line once
//! its assertions (all exact, tolerance zero) have gone through.
//!
//! Run with `cargo test --test acceptance -- --nocapture` to see the lines.

use proptest::prelude::*;
use proptest::test_runner::{Config, TestRunner};

use duval_planes::conic::{conic_space_dim, PlanePoint};
use duval_planes::duval::{
    admissible_dn_triples, build_branch, minus_two_candidates, surface_report, DuValConfig,
};
use duval_planes::invariants::{chi_of_cover, h0_two_k_plus_delta, ksq_of_resolution};
use duval_planes::lattice::{CenterId, Parent, SurfaceKind, SurfaceModel};
use duval_planes::resolution::{minus_two_components, resolve, BranchModel, SingularityAssignment};
use duval_planes::ruled::{
    cremona_quadratic, elementary_transform, elimination_certificate, CremonaCenter,
    EliminatedShape, ElmCenter, PlaneCurveData, RuledBranch,
};
use duval_planes::tables;

fn pass(criterion: u32, what: &str) {
    println!("acceptance {criterion}: PASS — {what}");
}

#[test]
fn criterion_01_smooth_plane_branches() {
    let d = surface_report(&DuValConfig::TypeD).unwrap();
    assert_eq!((d.pg, d.q, d.ksq_minimal), (3, 0, 2));
    let d0 = surface_report(&DuValConfig::dn(0, 0, 0)).unwrap();
    assert_eq!((d0.pg, d0.q, d0.ksq_minimal), (6, 0, 8));
    pass(
        1,
        "smooth plane branches of degree 8 and 10 give (3,0,2) and (6,0,8)",
    );
}

#[test]
fn criterion_02_invariant_sweep() {
    let triples = admissible_dn_triples();
    assert_eq!(triples.len(), 53);
    for (n, d1, d2) in triples {
        let cover = resolve(&build_branch(&DuValConfig::dn(n, d1, d2)).unwrap()).unwrap();
        let (n, d1, d2) = (i64::from(n), i64::from(d1), i64::from(d2));
        assert_eq!(
            chi_of_cover(&cover, 1).unwrap(),
            7 - n - d1 - d2,
            "chi at ({n},{d1},{d2})"
        );
        assert_eq!(
            ksq_of_resolution(&cover).unwrap(),
            8 - 2 * n - 2 * d1 - 2 * d2,
            "K² at ({n},{d1},{d2})"
        );
    }
    pass(
        2,
        "chi = 7-n-d1-d2 and K² = 8-2n-2d1-2d2 across all 53 admissible triples",
    );
}

#[test]
fn criterion_03_minimal_model_ksq() {
    for (n, d1, d2) in admissible_dn_triples() {
        let (ni, d1i, d2i) = (i64::from(n), i64::from(d1), i64::from(d2));
        if n >= 2 {
            let config = DuValConfig::dn(n, d1, d2);
            let report = surface_report(&config).unwrap();
            assert_eq!(report.ksq_minimal, 8 - d1i - 2 * d2i);
            let cover = resolve(&build_branch(&config).unwrap()).unwrap();
            let count =
                minus_two_components(&cover, &minus_two_candidates(&config, &cover).unwrap())
                    .unwrap()
                    .len() as i64;
            assert_eq!(count, 2 * ni + d1i);
            assert_eq!(report.ksq_minimal - report.ksq_resolution, count);
        } else {
            // The 4-tuple point away from the infinitely-near position
            // follows the contracted-lines formula for n = 1.
            if n == 1 {
                let honest = surface_report(&DuValConfig::dn(1, d1, d2)).unwrap();
                assert_eq!(honest.ksq_minimal, 8 - d1i - 2 * d2i);
            }
            let near = DuValConfig::TypeDn {
                n,
                delta1: d1,
                delta2: d2,
                gamma_infinitely_near: n == 1,
                points_on_conic: duval_planes::duval::ConicEvidence::Generic,
            };
            let report = surface_report(&near).unwrap();
            assert_eq!(report.ksq_minimal, 8 - ni - d1i - 2 * d2i);
        }
    }
    pass(
        3,
        "K² of the minimal model follows both regimes, and the gap counts the (-2)-curves",
    );
}

#[test]
fn criterion_04_riemann_roch_zero() {
    for n in 2..=6i64 {
        // The displayed quadratic identity, cleared of denominators (×8).
        assert_eq!(4 * (n * n + n - 2) - (4 * n * n + 4 * n) + 8, 0);
        let cover = resolve(&build_branch(&DuValConfig::dn(n as u32, 0, 0)).unwrap()).unwrap();
        assert_eq!(h0_two_k_plus_delta(&cover, 1).unwrap(), 0);
    }
    pass(
        4,
        "h0(2K+Delta) = 0 via (n²+n-2)/2 - (4n²+4n)/8 + 1 = 0 for n = 2..6",
    );
}

#[test]
fn criterion_05_fixed_point_consistency() {
    for (n, d1, d2) in admissible_dn_triples() {
        if n < 2 {
            continue;
        }
        let report = surface_report(&DuValConfig::dn(n, d1, d2)).unwrap();
        assert_eq!(report.k_isolated, 2 * i64::from(n) + i64::from(d1));
    }
    pass(
        5,
        "k from the fixed-point formula equals 2n + delta1 across the sweep",
    );
}

#[test]
fn criterion_06_elimination_certificates() {
    let c = elimination_certificate(EliminatedShape::SevenSevenTriple).unwrap();
    assert_eq!((c.d_squared, c.d_dot_canonical, c.d_dot_branch), (0, -2, 8));
    assert!(c.d_dot_branch < c.xi);
    let c = elimination_certificate(EliminatedShape::NineNineTriple).unwrap();
    assert_eq!(
        (c.d_squared, c.d_dot_canonical, c.d_dot_branch, c.xi),
        (0, -2, 12, 16)
    );
    assert!(c.contradicts_minimality);
    pass(
        6,
        "elimination certificates: D² = 0, D·K = -2, D·B = 8 < 12 and 12 < 16",
    );
}

#[test]
fn criterion_07_classification_tables() {
    let mut warnings = Vec::new();
    for (ksq, ns) in tables::PG0_TABLE {
        let rows = duval_planes::duval::enumerate_classification(0, 0, Some(*ksq)).unwrap();
        for &n in *ns {
            assert!(
                rows.iter()
                    .any(|(c, _)| matches!(c, DuValConfig::TypeDn { n: m, .. } if *m == n)),
                "p_g = 0 cell (K² = {ksq}, n = {n}) not realized"
            );
        }
    }
    for (ksq, ns) in tables::PG1_REGULAR_TABLE {
        let rows = duval_planes::duval::enumerate_classification(1, 0, Some(*ksq)).unwrap();
        for &n in *ns {
            assert!(
                rows.iter()
                    .any(|(c, _)| matches!(c, DuValConfig::TypeDn { n: m, .. } if *m == n)),
                "p_g = 1 cell (K² = {ksq}, n = {n}) not realized"
            );
        }
    }
    for (ksq, (n, d1, d2)) in tables::IRREGULAR_TABLE {
        let rows = duval_planes::duval::enumerate_classification(1, 1, Some(*ksq)).unwrap();
        assert!(
            rows.iter().any(|(c, _)| matches!(
                c,
                DuValConfig::TypeDn { n: m, delta1, delta2, .. }
                    if m == n && delta1 == d1 && delta2 == d2
            )),
            "irregular row K² = {ksq} not realized"
        );
    }
    for (pg, q) in [(0, 0), (1, 0), (1, 1)] {
        for cell in duval_planes::verify::classification_extras(pg, q).unwrap() {
            warnings.push(format!("(p_g, q) = ({pg}, {q}): extra cell {cell:?}"));
        }
    }
    for w in &warnings {
        println!("acceptance 7: WARNING — {w}");
    }
    pass(
        7,
        "every table cell is realized by the enumerator (extras are warnings above)",
    );
}

#[test]
fn criterion_08_quadric_cone() {
    let report = surface_report(&DuValConfig::dn(2, 0, 3)).unwrap();
    assert_eq!((report.pg, report.q, report.ksq_minimal), (1, 0, 2));
    assert_eq!(report.bicanonical_degree, 4);
    assert_eq!(report.bicanonical_image_degree, Some(2));
    pass(
        8,
        "the (1,0,2) configuration has bicanonical degree 4 onto a degree-2 image",
    );
}

#[test]
fn criterion_09_conic_oracle() {
    let pts = |raw: &[[i64; 3]]| -> Vec<PlanePoint> {
        raw.iter()
            .map(|&[x, y, z]| PlanePoint::from_integers(x, y, z).unwrap())
            .collect()
    };
    let circle = [
        [1, 0, 1],
        [0, 1, 1],
        [-1, 0, 1],
        [0, -1, 1],
        [3, 4, 5],
        [5, 12, 13],
    ];
    for [x, y, z] in circle {
        assert_eq!(x * x + y * y - z * z, 0);
    }
    assert_eq!(conic_space_dim(&pts(&circle)).unwrap(), 1);
    let generic = [
        [1, 0, 0],
        [0, 1, 0],
        [0, 0, 1],
        [1, 1, 1],
        [1, 2, 3],
        [2, 3, 1],
    ];
    assert_eq!(conic_space_dim(&pts(&generic)).unwrap(), 0);
    assert_eq!(conic_space_dim(&pts(&generic[..5])).unwrap(), 1);
    pass(
        9,
        "conic dimensions: six on x²+y²=z² give 1, six generic give 0, five generic give 1",
    );
}

// ---------------------------------------------------------------------------
// Criterion 10: the property suites, each over at least 128 generated
// instances.
// ---------------------------------------------------------------------------

fn runner() -> TestRunner {
    TestRunner::new(Config {
        cases: 128,
        ..Config::default()
    })
}

/// A random surface model: the plane or a Hirzebruch surface with up to six
/// centers whose parents form a forest.
fn arb_model() -> impl Strategy<Value = SurfaceModel> {
    let kind = prop_oneof![
        Just(SurfaceKind::ProjectivePlane),
        (0i64..4).prop_map(|e| SurfaceKind::Hirzebruch { e }),
    ];
    (kind, prop::collection::vec(0usize..6, 0..6)).prop_map(|(kind, parents)| {
        let mut model = SurfaceModel::new(kind).unwrap();
        for (i, p) in parents.iter().enumerate() {
            let parent = if *p < i {
                Parent::InfinitelyNear(model.centers()[*p].id)
            } else {
                Parent::SurfacePoint
            };
            model = model.blow_up(parent).unwrap().0;
        }
        model
    })
}

fn arb_coeffs(rank: usize) -> impl Strategy<Value = Vec<i64>> {
    prop::collection::vec(-9i64..=9, rank)
}

#[test]
fn criterion_10a_bilinear_symmetric_pairing() {
    runner()
        .run(
            &arb_model().prop_flat_map(|model| {
                let rank = model.rank();
                (
                    Just(model),
                    arb_coeffs(rank),
                    arb_coeffs(rank),
                    arb_coeffs(rank),
                    -5i64..=5,
                    -5i64..=5,
                )
            }),
            |(model, a, b, c, m, n)| {
                let a = model.class(a).unwrap();
                let b = model.class(b).unwrap();
                let c = model.class(c).unwrap();
                prop_assert_eq!(a.intersect(&b).unwrap(), b.intersect(&a).unwrap());
                let combo = a
                    .scaled(m)
                    .unwrap()
                    .checked_add(&b.scaled(n).unwrap())
                    .unwrap();
                prop_assert_eq!(
                    combo.intersect(&c).unwrap(),
                    m * a.intersect(&c).unwrap() + n * b.intersect(&c).unwrap()
                );
                Ok(())
            },
        )
        .unwrap();
    pass(
        10,
        "intersection pairing is symmetric and bilinear (128 random instances)",
    );
}

#[test]
fn criterion_10b_pullback_isometry() {
    runner()
        .run(
            &arb_model().prop_flat_map(|model| {
                let rank = model.rank();
                (
                    Just(model),
                    arb_coeffs(rank),
                    arb_coeffs(rank),
                    any::<bool>(),
                )
            }),
            |(model, a, b, near)| {
                let parent = if near && !model.centers().is_empty() {
                    Parent::InfinitelyNear(model.centers()[0].id)
                } else {
                    Parent::SurfacePoint
                };
                let (bigger, _) = model.blow_up(parent).unwrap();
                let a = model.class(a).unwrap();
                let b = model.class(b).unwrap();
                prop_assert_eq!(
                    bigger
                        .pullback(&a)
                        .unwrap()
                        .intersect(&bigger.pullback(&b).unwrap())
                        .unwrap(),
                    a.intersect(&b).unwrap()
                );
                Ok(())
            },
        )
        .unwrap();
    pass(
        10,
        "pullback along a blow-up is an isometry (128 random instances)",
    );
}

#[test]
fn criterion_10c_canonical_blow_up_rule() {
    runner()
        .run(&(arb_model(), any::<bool>()), |(model, near)| {
            let parent = if near && !model.centers().is_empty() {
                Parent::InfinitelyNear(model.centers()[0].id)
            } else {
                Parent::SurfacePoint
            };
            let (bigger, id) = model.blow_up(parent).unwrap();
            let lhs = bigger.canonical_class();
            let rhs = bigger
                .pullback(&model.canonical_class())
                .unwrap()
                .checked_add(&bigger.exceptional(id).unwrap())
                .unwrap();
            prop_assert_eq!(lhs, rhs);
            Ok(())
        })
        .unwrap();
    pass(
        10,
        "canonical class after a blow-up is the pullback plus the exceptional class",
    );
}

#[test]
fn criterion_10d_transform_step_isometries() {
    runner()
        .run(
            &(
                0i64..4,
                any::<bool>(),
                0i64..9,
                any::<bool>(),
                8i64..20,
                0i64..30,
            ),
            |(e, on_section, mult, fibre_in_branch, xi, b)| {
                let on_section = on_section || e == 0;
                let branch = RuledBranch::new(e, xi, b, vec![]).unwrap();
                let out = elementary_transform(
                    &branch,
                    &ElmCenter::Free {
                        multiplicity: mult,
                        fibre_in_branch,
                        on_negative_section: on_section,
                    },
                )
                .unwrap();
                prop_assert!(out.step.is_isometry());
                prop_assert_eq!(out.branch.e(), e + if on_section { 1 } else { -1 });
                prop_assert_eq!(out.branch.xi(), xi);
                Ok(())
            },
        )
        .unwrap();
    let branch = RuledBranch::new(1, 8, 10, vec![]).unwrap();
    let (_, step) = duval_planes::ruled::contract_negative_section(&branch, false).unwrap();
    assert!(step.is_isometry());
    pass(
        10,
        "elementary transformations and contraction are isometries, e moves by ±1, ξ is kept",
    );
}

#[test]
fn criterion_10e_cremona_involution() {
    runner()
        .run(
            &(
                1i64..30,
                0i64..8,
                0i64..8,
                0i64..8,
                prop::collection::vec(-7i64..=7, 4),
            ),
            |(d, m1, m2, m3, v)| {
                let curve = PlaneCurveData {
                    degree: d,
                    singularities: vec![],
                };
                let image = cremona_quadratic(
                    &curve,
                    &[
                        CremonaCenter::Free { multiplicity: m1 },
                        CremonaCenter::Free { multiplicity: m2 },
                        CremonaCenter::Free { multiplicity: m3 },
                    ],
                )
                .unwrap();
                prop_assert!(image.step.is_isometry());
                prop_assert_eq!(image.step.apply(&image.step.apply(&v)), v.clone());
                // Degree/multiplicity arithmetic is involutive too.
                let d1 = image.degree;
                let [n1, n2, n3] = image.fundamental_multiplicities;
                prop_assert_eq!(2 * d1 - n1 - n2 - n3, d);
                prop_assert_eq!([d1 - n2 - n3, d1 - n1 - n3, d1 - n1 - n2], [m1, m2, m3]);
                Ok(())
            },
        )
        .unwrap();
    pass(
        10,
        "the quadratic substitution is an involutive isometry (128 random instances)",
    );
}

/// Random singularity lists over the plane, heavy enough to stay inside a
/// degree-40 branch.
fn arb_singularities() -> impl Strategy<Value = Vec<SingularityAssignment>> {
    prop::collection::vec(
        prop_oneof![
            (2i64..8).prop_map(|m| (0, m)),
            (2i64..6).prop_map(|r| (1, r)),
        ],
        0..5,
    )
    .prop_map(|raw| {
        let mut next = 0u32;
        raw.into_iter()
            .map(|(kind, m)| {
                if kind == 0 {
                    let id = CenterId(next);
                    next += 1;
                    SingularityAssignment::mtuple(id, m)
                } else {
                    let first = CenterId(next);
                    let second = CenterId(next + 1);
                    next += 2;
                    SingularityAssignment::rr_point(first, second, m)
                }
            })
            .collect()
    })
}

#[test]
fn criterion_10f_resolution_order_invariance() {
    runner()
        .run(
            &arb_singularities().prop_flat_map(|sings| {
                let len = sings.len();
                (Just(sings), prop::collection::vec(0usize..len.max(1), 0..8))
            }),
            |(sings, swaps)| {
                let plane = SurfaceModel::projective_plane();
                let branch =
                    BranchModel::new(plane.clone(), plane.class(vec![40]).unwrap(), sings.clone())
                        .unwrap();
                let mut shuffled = sings;
                let len = shuffled.len();
                for (i, s) in swaps.iter().enumerate() {
                    if len > 1 {
                        shuffled.swap(*s % len, (*s + i) % len);
                    }
                }
                let permuted =
                    BranchModel::new(plane.clone(), plane.class(vec![40]).unwrap(), shuffled)
                        .unwrap();
                let a = resolve(&branch).unwrap();
                let b = resolve(&permuted).unwrap();
                prop_assert_eq!(a.steps().len(), b.steps().len());
                for step in a.steps() {
                    prop_assert_eq!(
                        a.smooth_class().exceptional_coeff(step.center).unwrap(),
                        b.smooth_class().exceptional_coeff(step.center).unwrap()
                    );
                }
                Ok(())
            },
        )
        .unwrap();
    pass(
        10,
        "the resolved branch class does not depend on the input order (128 random instances)",
    );
}

#[test]
fn criterion_10g_non_essential_neutrality() {
    runner()
        .run(&(arb_singularities(), 2i64..=3), |(sings, m)| {
            let plane = SurfaceModel::projective_plane();
            let plain =
                BranchModel::new(plane.clone(), plane.class(vec![40]).unwrap(), sings.clone())
                    .unwrap();
            let mut dotted_sings = sings;
            dotted_sings.push(SingularityAssignment::mtuple(CenterId(999), m));
            let dotted =
                BranchModel::new(plane.clone(), plane.class(vec![40]).unwrap(), dotted_sings)
                    .unwrap();
            let a = resolve(&plain).unwrap();
            let b = resolve(&dotted).unwrap();
            prop_assert_eq!(chi_of_cover(&a, 1).unwrap(), chi_of_cover(&b, 1).unwrap());
            prop_assert_eq!(
                ksq_of_resolution(&a).unwrap(),
                ksq_of_resolution(&b).unwrap()
            );
            Ok(())
        })
        .unwrap();
    pass(
        10,
        "double and ordinary triple points change neither chi nor K² (128 random instances)",
    );
}
