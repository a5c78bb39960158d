mod common;

use common::*;
use curve_zeta::classify::{is_maximal, kind_of, maximal_points, Kind};
use curve_zeta::ell::EllTable;
use curve_zeta::oracle::{
    attains, ell_from_algebra, epsilon_by_unit_action, epsilon_from_algebra, value_vectors_exhaustive, AlgebraDoc,
    AlgebraOracle, BranchAlgebra, MembershipMethod, ValueVector,
};
use curve_zeta::zeta::epsilon;
use curve_zeta::{Error, LatticeBox};
use num_rational::Ratio;

fn node_algebra(p: u32) -> BranchAlgebra {
    BranchAlgebra::new(p, pt([4, 4]), vec![vec![vec![0, 1], vec![0]], vec![vec![0], vec![0, 1]], vec![vec![1], vec![1]]])
        .unwrap()
}

#[test]
fn documented_dimensions() {
    assert_eq!(node_algebra(2).dim(), 7);
    let tac = BranchAlgebra::new(
        3,
        pt([7, 7]),
        vec![vec![vec![0, 1], vec![0, 1]], vec![vec![0, 0, 0, 1], vec![0]], vec![vec![0], vec![0, 0, 0, 1]], vec![vec![1], vec![1]]],
    )
    .unwrap();
    assert_eq!(tac.dim(), 11);
    let cusp = BranchAlgebra::new(2, pt([6]), vec![vec![vec![0, 0, 1]], vec![vec![0, 0, 0, 1]], vec![vec![1]]]).unwrap();
    assert_eq!(cusp.dim(), 5);
}

#[test]
fn documented_value_vectors() {
    let a = node_algebra(2);
    let z = a.element(&[vec![0, 1, 1], vec![0, 1]]);
    assert_eq!(a.value_vector(&z), ValueVector::Regular(pt([1, 1])));
    let z = a.element(&[vec![0, 1], vec![0]]);
    assert_eq!(a.value_vector(&z), ValueVector::NonRegular);
    let cusp = oracle("cusp_algebra.json");
    let z = cusp.algebra().element(&[vec![0, 0, 1, 1]]);
    assert_eq!(cusp.algebra().value_vector(&z), ValueVector::Regular(pt([2])));
}

#[test]
fn semigroups_read_off_algebras() {
    assert_eq!(oracle("node_algebra.json").semigroup(), &node());
    assert_eq!(oracle("tacnode_algebra.json").semigroup(), &tacnode());
    assert_eq!(oracle("cusp_algebra.json").semigroup(), &semigroup("cusp.json"));
    assert_eq!(oracle("three_four_five_algebra.json").semigroup(), &semigroup("three_four_five.json"));
    for name in ALL_ALGEBRAS {
        assert!(oracle(name).semigroup().validate_axioms().passed(), "{name}");
    }
}

#[test]
fn documented_ell_values() {
    let node = oracle("node_algebra.json");
    assert_eq!(node.ell(&pt([1, 1])).unwrap(), 1);
    assert_eq!(node.ell(&pt([2, 2])).unwrap(), 3);
    assert_eq!(oracle("tacnode_algebra.json").ell(&pt([2, 2])).unwrap(), 2);
}

#[test]
fn documented_epsilon_values() {
    let p2 = oracle("node_algebra.json");
    assert_eq!(p2.epsilon(&pt([0, 0])).unwrap(), 1);
    assert_eq!(p2.epsilon(&pt([1, 1])).unwrap(), 1);
    assert_eq!(oracle("node_algebra_p3.json").epsilon(&pt([1, 1])).unwrap(), 2);
    assert_eq!(p2.epsilon(&pt([1, 0])).unwrap(), 0);
}

#[test]
fn documented_principal_ideal_counts() {
    let p2 = oracle("node_algebra.json").principal_ideals_by_codim(2).unwrap();
    assert_eq!((p2[&0], p2[&1], p2[&2]), (1, 0, 1));
    let p3 = oracle("node_algebra_p3.json").principal_ideals_by_codim(2).unwrap();
    assert_eq!(p3[&2], 2);
}

#[test]
fn exhaustive_and_linear_membership_agree_when_p_at_least_r() {
    for name in ["node_algebra.json", "node_algebra_p3.json", "tacnode_algebra.json", "triple_point_algebra.json"] {
        let o = oracle(name);
        let a = o.algebra();
        for n in LatticeBox::up_to(o.conductor().shift(1)).iter() {
            let e = attains(a, &n, MembershipMethod::Exhaustive).unwrap();
            let l = attains(a, &n, MembershipMethod::Linear).unwrap();
            assert_eq!(e, l, "{name} {n}");
        }
    }
}

#[test]
fn leading_coefficient_membership_matches_full_enumeration() {
    let mut checked = 0;
    for name in COUNTABLE_ALGEBRAS {
        let o = oracle(name);
        let a = o.algebra();
        let Ok(values) = value_vectors_exhaustive(a, 1 << 18) else { continue };
        for n in LatticeBox::up_to(o.conductor().shift(1)).iter() {
            assert_eq!(values.contains(&n), attains(a, &n, MembershipMethod::Exhaustive).unwrap(), "{name} {n}");
        }
        checked += 1;
    }
    assert!(checked >= 3, "only {checked} algebras fit the budget");
}

#[test]
fn small_field_warns_and_breaks_the_axioms() {
    let mut doc: AlgebraDoc = algebra_doc("triple_point_algebra.json");
    assert_eq!(doc.p, 3);
    assert!(doc.warnings().is_empty());
    assert!(oracle("triple_point_algebra.json").semigroup().contains(&pt([1, 1, 1])));
    doc.p = 2;
    assert_eq!(doc.warnings().len(), 1);
    assert!(doc.warnings()[0].contains("p = 2"));
    // Over F_2 no combination of x and y has three nonzero leading
    // coefficients, so the infimum (1,1,1) of (1,1,2) and (1,2,1) is missing.
    let a = BranchAlgebra::from_doc(&doc).unwrap();
    assert!(!attains(&a, &pt([1, 1, 1]), MembershipMethod::Exhaustive).unwrap());
    assert!(matches!(attains(&a, &pt([1, 1, 1]), MembershipMethod::Linear), Err(Error::MalformedInput(_))));
    match AlgebraOracle::from_doc(&doc) {
        Err(Error::AxiomViolation(r)) => {
            assert!(r.violations.iter().any(|v| v.witnesses.contains(&pt([1, 1, 1]))));
        }
        other => panic!("expected an axiom violation, got {other:?}"),
    }
}

#[test]
fn small_field_with_coordinate_axes_still_builds() {
    let axes = AlgebraDoc {
        p: 2,
        branches: 3,
        truncation: vec![6, 6, 6],
        generators: vec![
            vec![vec![1], vec![1], vec![1]],
            vec![vec![0, 1], vec![0], vec![0]],
            vec![vec![0], vec![0, 1], vec![0]],
            vec![vec![0], vec![0], vec![0, 1]],
        ],
    };
    let o = AlgebraOracle::from_doc(&axes).unwrap();
    assert_eq!(o.warnings(), axes.warnings());
    assert_eq!(o.warnings().len(), 1);
    assert_eq!(o.conductor(), &pt([1, 1, 1]));
}

#[test]
fn four_lines_semigroup_and_ell() {
    let o = oracle("four_lines_algebra.json");
    let s = o.semigroup();
    assert_eq!(s.branches(), 4);
    assert!(s.validate_axioms().passed());
    assert!(s.contains(&pt([1, 1, 1, 1])));
    assert!(is_maximal(s, &pt([1, 1, 1, 1])));
    let table = EllTable::build(s, &o.conductor().shift(1)).unwrap();
    for (n, ell) in table.iter() {
        assert_eq!(ell_from_algebra(o.algebra(), &n).unwrap(), ell, "{n}");
    }
    let kinds: Vec<Kind> = maximal_points(s).iter().map(|n| kind_of(s, n).unwrap()).collect();
    assert!(kinds.contains(&Kind::Uniform(vec![0, 1])), "{kinds:?}");
}

#[test]
fn orbit_count_matches_literal_unit_action() {
    let mut checked = 0;
    for name in ["node_algebra.json", "node_algebra_p3.json", "cusp_algebra.json", "tacnode_algebra.json"] {
        let o = oracle(name);
        let c = o.conductor();
        for n in LatticeBox::up_to(c.shift(1)).iter() {
            let a = o.algebra().with_truncation(n.add(c).shift(1).sup(o.algebra().truncation())).unwrap();
            let a = a.truncate(&n.add(c).shift(1)).unwrap();
            let Ok(literal) = epsilon_by_unit_action(&a, c, &n, 1 << 18) else { continue };
            assert_eq!(epsilon_from_algebra(&a, c, &n, o.work_limit()).unwrap(), literal, "{name} {n}");
            checked += 1;
        }
    }
    assert!(checked >= 20, "only {checked} points fit the budget");
}

#[test]
fn oracle_epsilon_matches_core_on_small_algebras() {
    for name in ["cusp_algebra.json", "three_four_five_algebra.json", "triple_point_algebra.json"] {
        let o = oracle(name);
        let s = o.semigroup();
        for n in LatticeBox::up_to(s.conductor().shift(1)).iter() {
            let core = epsilon(s, &n).unwrap().eval(o.algebra().p() as i64);
            let brute = o.epsilon(&n).unwrap();
            assert_eq!(core, Ratio::from_integer(brute as i128), "{name} {n}");
        }
    }
}

#[test]
fn diagonal_algebra_has_no_conductor() {
    let a = BranchAlgebra::new(2, pt([3, 3]), vec![vec![vec![0, 1], vec![0, 1]], vec![vec![1], vec![1]]]).unwrap();
    match AlgebraOracle::new(a, MembershipMethod::Exhaustive) {
        Err(Error::ConductorNotCertified(_)) => {}
        other => panic!("expected ConductorNotCertified, got {other:?}"),
    }
}

#[test]
fn construction_errors() {
    let one = || vec![vec![1], vec![1]];
    assert!(matches!(BranchAlgebra::new(4, pt([2, 2]), vec![one()]), Err(Error::NotPrime(4))));
    assert!(matches!(
        BranchAlgebra::new(2, pt([3, 3]), vec![vec![vec![0, 1], vec![0]]]),
        Err(Error::NonUnital)
    ));
    assert!(matches!(
        BranchAlgebra::new(2, pt([3, 3]), vec![one(), vec![vec![1], vec![0]]]),
        Err(Error::NonLocal(_))
    ));
}

#[test]
fn work_limit_is_enforced() {
    let o = oracle("tacnode_algebra.json").with_work_limit(10);
    assert!(matches!(o.epsilon(&pt([2, 2])), Err(Error::WorkLimitExceeded { limit: 10, .. })));
}

#[test]
fn stability_under_raised_truncation() {
    let report = oracle("node_algebra.json").truncation_stability().unwrap();
    assert!(report.stable(), "{report:?}");
    assert!(report.epsilon_points > 0 && report.ell_points > 0);
}

#[test]
fn lattice_points_only_need_truncation_margin() {
    let o = oracle("node_algebra.json");
    let z = o.algebra().element(&[vec![0, 1], vec![0, 1]]);
    assert!(o.algebra().value_vector_with_margin(&z, &pt([1, 1])).is_ok());
    let deep = o.algebra().element(&[vec![0, 0, 0, 1], vec![0, 0, 0, 1]]);
    assert!(matches!(
        o.algebra().value_vector_with_margin(&deep, &pt([1, 1])),
        Err(Error::TruncationUnsafe(_))
    ));
}
