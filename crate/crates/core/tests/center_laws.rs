mod common;

use common::{random_graphs, subsets};
use lpa_core::center::{
    brute_force_center, center_basis, center_dimension_predicted, cycle_generator, embed, idempotent, oracle_bound,
    same_span,
};
use lpa_core::hereditary::{center_structure, finitary_boolean_subalgebra, is_finitary, is_hereditary, perp};
use lpa_core::{fixtures, Algebra, CenterError, Field, Graph, VertexSet};

fn corpus() -> Vec<Graph> {
    let mut graphs: Vec<Graph> = fixtures::all().into_iter().map(|(_, g)| g).collect();
    graphs.extend(random_graphs(21, 100, 5, 7));
    graphs
}

#[test]
fn idempotents_of_finitary_sets() {
    for g in corpus() {
        let alg = Algebra::new(g.clone(), Field::Rational);
        for w in subsets(&g) {
            if !is_hereditary(&g, &w).unwrap() {
                assert!(idempotent(&alg, &w).is_err());
                continue;
            }
            match idempotent(&alg, &w) {
                Ok(e) => {
                    assert!(is_finitary(&g, &w).unwrap());
                    assert_eq!(&e * &e, e);
                    assert!(e.is_central());
                    assert_eq!(e.involution(), e);
                    assert_eq!(e.degrees(), if e.is_zero() { vec![] } else { vec![0] });
                }
                Err(CenterError::NotFinitary { witness }) => {
                    assert!(!is_finitary(&g, &w).unwrap());
                    assert!(witness.vertex_set().is_disjoint(&w));
                }
                Err(other) => panic!("{other}"),
            }
        }
    }
}

#[test]
fn boolean_homomorphism() {
    for g in corpus() {
        let alg = Algebra::new(g.clone(), Field::Rational);
        let sets = finitary_boolean_subalgebra(&g).unwrap();
        let images: Vec<_> = sets.iter().map(|w| idempotent(&alg, w).unwrap()).collect();
        for (w1, e1) in sets.iter().zip(&images) {
            let complement = idempotent(&alg, &perp(&g, w1).unwrap()).unwrap();
            assert_eq!(&complement + e1, alg.one());
            for (w2, e2) in sets.iter().zip(&images) {
                assert_eq!(&(e1 * e2), &idempotent(&alg, &w1.intersection(w2)).unwrap());
                assert_eq!(w1 == w2, e1 == e2);
            }
        }
        assert_eq!(images.len(), 1 << center_structure(&g).unwrap().classes.len());
    }
}

#[test]
fn sums_of_support_idempotents() {
    for g in corpus() {
        let alg = Algebra::new(g.clone(), Field::Rational);
        let basis = center_basis(&alg, 0).unwrap().elements;
        let m = basis.len();
        for mask in 0u32..(1 << m) {
            let e = (0..m).filter(|i| mask & (1 << i) != 0).fold(alg.zero(), |acc, i| &acc + &basis[i]);
            assert_eq!(&e * &e, e);
            assert!(e.is_central());
        }
        assert_eq!(basis.iter().fold(alg.zero(), |acc, e| &acc + e), alg.one());
    }
}

#[test]
fn cycle_generators_are_unitary_on_their_cycle() {
    for g in corpus() {
        let alg = Algebra::new(g.clone(), Field::Rational);
        for c in g.simple_cycles().unwrap() {
            let Ok(z) = cycle_generator(&alg, &c) else {
                assert!(!g.is_ne_cycle(&c).unwrap());
                continue;
            };
            let unit = c.vertex_set().iter().fold(alg.zero(), |acc, v| &acc + &alg.vertex(v));
            assert_eq!(&z * &z.involution(), unit);
            assert_eq!(&z.involution() * &z, unit);
            if is_finitary(&g, &c.vertex_set()).unwrap() {
                let image = embed(&alg, &c.vertex_set(), &z).unwrap();
                assert!(image.is_central());
            }
        }
    }
}

#[test]
fn basis_is_central_and_independent() {
    for g in corpus() {
        let alg = Algebra::new(g.clone(), Field::Rational);
        for d in -4..=4 {
            let basis = center_basis(&alg, d).unwrap();
            assert_eq!(basis.elements.len(), center_dimension_predicted(&g, d).unwrap());
            assert_eq!(lpa_core::center::span_rank(&alg, &basis.elements), basis.elements.len());
            for x in &basis.elements {
                assert!(x.is_central());
                assert_eq!(x.degrees(), vec![d]);
            }
        }
    }
}

#[test]
fn oracle_agrees_on_fixtures() {
    for (name, g) in fixtures::all() {
        for field in [Field::Rational, Field::prime(2).unwrap()] {
            let alg = Algebra::new(g.clone(), field);
            for d in -4..=4 {
                let bound = oracle_bound(&g, d).unwrap();
                let oracle = brute_force_center(&alg, d, bound).unwrap();
                let basis = center_basis(&alg, d).unwrap().elements;
                assert!(same_span(&alg, &oracle, &basis), "{name} {field} degree {d}");
                assert!(oracle.iter().all(|x| x.is_central()));
            }
        }
    }
}

#[test]
fn embedding_is_multiplicative_on_diagonal_elements() {
    let g = fixtures::g3_example();
    let alg = Algebra::new(g.clone(), Field::Rational);
    let c = &g.simple_cycles().unwrap()[0];
    let w: VertexSet = c.vertex_set();
    let z = cycle_generator(&alg, c).unwrap();
    let zz = &z * &z;
    let lhs = embed(&alg, &w, &zz).unwrap();
    let rhs = &embed(&alg, &w, &z).unwrap() * &embed(&alg, &w, &z).unwrap();
    assert_eq!(lhs, rhs);
    let unit = w.iter().fold(alg.zero(), |acc, v| &acc + &alg.vertex(v));
    assert_eq!(embed(&alg, &w, &unit).unwrap(), idempotent(&alg, &w).unwrap());
}
