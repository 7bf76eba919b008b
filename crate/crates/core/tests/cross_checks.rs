//! Cross-module batteries: the two charpoly routes against each other and
//! against point determinants, modular against rational nullity, integer
//! builds against type builds, and the poset view against the direct
//! graph construction.

use divgraph_core::arith::{self, FactorizationType};
use divgraph_core::divgraph::{self, DivGraph};
use divgraph_core::exactla::{
    self, charpoly_berkowitz, charpoly_crt, AdjShift, IntMatrix, NullityMode,
};
use divgraph_core::poset::FinitePoset;
use divgraph_core::spectra::{self, SpectrumOptions, SPECIAL_LAMBDAS};
use num_bigint::BigInt;

#[test]
fn integer_builds_are_isomorphic_to_type_builds_up_to_2000() {
    for n in 1u64..=2000 {
        let gi = DivGraph::build_from_integer(n).unwrap();
        let gt = DivGraph::build(&arith::factorization_type(n).unwrap()).unwrap();
        let perm = gi.canonical_permutation();
        let v = gi.vertex_count();
        assert_eq!(v, gt.vertex_count(), "n = {n}");
        for i in 0..v {
            for j in (i + 1)..v {
                assert_eq!(
                    gi.adj().has_edge(i, j),
                    gt.adj().has_edge(perm[i], perm[j]),
                    "n = {n}, pair ({i},{j})"
                );
            }
        }
    }
}

#[test]
fn divisor_poset_comparability_matches_graph_build() {
    for t in divgraph::enumerate_types(64) {
        let via_poset = FinitePoset::divisor_poset(&t)
            .unwrap()
            .comparability_graph();
        let direct = DivGraph::build(&t).unwrap();
        assert_eq!(&via_poset, direct.adj(), "type {t}");
    }
}

#[test]
fn charpoly_routes_agree_on_graph_battery() {
    for t in divgraph::enumerate_types(48) {
        let g = DivGraph::build(&t).unwrap();
        let m = IntMatrix::from_adjacency(g.adj());
        assert_eq!(charpoly_berkowitz(&m), charpoly_crt(&m), "type {t}");
    }
}

#[test]
fn charpoly_matches_point_determinants() {
    for t in divgraph::enumerate_types(32) {
        let g = DivGraph::build(&t).unwrap();
        let m = IntMatrix::from_adjacency(g.adj());
        let cp = exactla::charpoly(&m).unwrap();
        for x in [-2i64, 0, 3] {
            let det = exactla::determinant(&m.shifted(x)).unwrap();
            let expect = if g.vertex_count() % 2 == 0 { det } else { -det };
            assert_eq!(cp.eval(&BigInt::from(x)), expect, "type {t}, x = {x}");
        }
    }
}

#[test]
fn modular_and_rational_nullity_agree_up_to_256() {
    // modular nullity can only overestimate; the certificate pins equality
    let types: Vec<FactorizationType> = divgraph::enumerate_types(256)
        .into_iter()
        .filter(|t| t.vertex_count().unwrap() >= 96)
        .step_by(7)
        .chain(std::iter::once(FactorizationType::new(vec![1, 1]).unwrap()))
        .collect();
    for t in types {
        let g = DivGraph::build(&t).unwrap();
        for lambda in [-1i64, 0] {
            let shift = AdjShift {
                adj: g.adj(),
                lambda,
            };
            let rational = exactla::nullity_of(&shift, NullityMode::RationalExact)
                .unwrap()
                .nullity;
            let modular = exactla::nullity_of(&shift, NullityMode::Modular { seed: 5 })
                .unwrap()
                .nullity;
            assert!(modular >= rational, "type {t}, λ = {lambda}");
            assert_eq!(modular, rational, "type {t}, λ = {lambda}");
        }
    }
}

#[test]
fn oeis_patterns_hold_through_omega_8() {
    let rows = spectra::squarefree_table(8, &SPECIAL_LAMBDAS, 3).unwrap();
    let report = spectra::oeis_pattern_checks(&rows);
    assert!(report.all_hold, "{:#?}", report.observations);
    // the observations must actually include the deeper sequence values:
    // 2, 10, 42 for λ=−2 and the Catalan prefixes 2, 5, 14 / 1, 2, 5, 14
    let get = |omega: u32, lambda: i64| {
        rows.iter()
            .find(|r| r.omega == omega && r.lambda == lambda)
            .unwrap()
            .multiplicity
    };
    assert_eq!([get(3, -2), get(5, -2), get(7, -2)], [2, 10, 42]);
    assert_eq!([get(3, 1), get(5, 1), get(7, 1)], [2, 5, 14]);
    assert_eq!([get(2, 0), get(4, 0), get(6, 0), get(8, 0)], [1, 2, 5, 14]);
}

#[test]
fn spectrum_reports_agree_across_seeds() {
    let t = FactorizationType::squarefree(7); // 128 vertices: modular path
    let a = spectra::special_multiplicities(
        &t,
        &SPECIAL_LAMBDAS,
        &SpectrumOptions {
            seed: 1,
            ..Default::default()
        },
    )
    .unwrap();
    let b = spectra::special_multiplicities(
        &t,
        &SPECIAL_LAMBDAS,
        &SpectrumOptions {
            seed: 424242,
            ..Default::default()
        },
    )
    .unwrap();
    assert_eq!(a.multiplicities, b.multiplicities);
    assert_eq!(a.det, b.det);
    assert_ne!(
        a.certificates
            .iter()
            .map(|c| c.primes.clone())
            .collect::<Vec<_>>(),
        b.certificates
            .iter()
            .map(|c| c.primes.clone())
            .collect::<Vec<_>>(),
        "different seeds should draw different primes"
    );
}
