mod common;

use common::*;
use lpa_core::hereditary::{
    annihilator_boolean_algebra, arrival_paths, center_structure, double_perp, equivalence_classes,
    finitary_boolean_subalgebra, is_finitary, is_hereditary, minimal_hereditary_sets, perp, points_to,
};
use lpa_core::{fixtures, ArrSet, Graph, VertexSet};

fn corpus() -> Vec<Graph> {
    let mut graphs: Vec<Graph> = fixtures::all().into_iter().map(|(_, g)| g).collect();
    graphs.extend(random_graphs(3, 150, 5, 7));
    graphs
}

fn hereditary_sets(g: &Graph) -> Vec<VertexSet> {
    subsets(g).into_iter().filter(|w| is_hereditary(g, w).unwrap()).collect()
}

#[test]
fn small_graphs_match_brute_force() {
    for g in all_small_graphs(3, 4) {
        assert_eq!(minimal_hereditary_sets(&g), brute_minimal_sets(&g));
        for w in subsets(&g) {
            assert_eq!(is_hereditary(&g, &w).unwrap(), brute_is_hereditary(&g, &w));
            assert_eq!(perp(&g, &w).unwrap(), brute_perp(&g, &w));
            if brute_is_hereditary(&g, &w) {
                assert_eq!(is_finitary(&g, &w).unwrap(), brute_is_finitary(&g, &w));
            }
        }
    }
}

#[test]
fn perp_is_antitone_and_a_closure() {
    for g in corpus() {
        let all = subsets(&g);
        for w1 in &all {
            let p1 = perp(&g, w1).unwrap();
            assert!(is_hereditary(&g, &p1).unwrap());
            assert!(p1.is_disjoint(w1));
            if is_hereditary(&g, w1).unwrap() {
                assert!(w1.is_subset(&double_perp(&g, w1).unwrap()));
                assert_eq!(p1, perp(&g, &double_perp(&g, w1).unwrap()).unwrap());
            }
            for w2 in all.iter().filter(|w2| w1.is_subset(w2)) {
                assert!(perp(&g, w2).unwrap().is_subset(&p1));
            }
        }
    }
}

#[test]
fn de_morgan_for_annihilator_sets() {
    for g in corpus() {
        let ann = annihilator_boolean_algebra(&g).unwrap();
        for w1 in &ann {
            for w2 in &ann {
                let joined = perp(&g, w1).unwrap().union(&perp(&g, w2).unwrap());
                assert_eq!(w1.intersection(w2), perp(&g, &joined).unwrap());
            }
        }
    }
}

#[test]
fn arrival_paths_of_an_intersection() {
    for g in corpus() {
        let finite: Vec<(VertexSet, Vec<_>)> = hereditary_sets(&g)
            .into_iter()
            .filter_map(|w| match arrival_paths(&g, &w).unwrap() {
                ArrSet::Finite(paths) => Some((w, paths)),
                ArrSet::Infinite { .. } => None,
            })
            .collect();
        for (w1, a1) in &finite {
            for (w2, a2) in &finite {
                if let ArrSet::Finite(a12) = arrival_paths(&g, &w1.intersection(w2)).unwrap() {
                    assert!(a12.iter().all(|p| a1.contains(p) || a2.contains(p)));
                }
            }
        }
    }
}

#[test]
fn finitary_sets_have_no_pointing_cycle() {
    for g in all_small_graphs(3, 4) {
        let cycles = g.simple_cycles().unwrap();
        for w in hereditary_sets(&g) {
            let pointed = cycles.iter().any(|c| points_to(&g, c, &w).unwrap());
            // One cycle vertex reaching W means all of them do.
            assert_eq!(is_finitary(&g, &w).unwrap(), !pointed);
        }
    }
}

#[test]
fn supports_are_disjoint_finitary_and_cover() {
    for g in corpus() {
        let report = center_structure(&g).unwrap();
        for (i, u) in report.supports.iter().enumerate() {
            assert!(is_hereditary(&g, u).unwrap());
            assert!(is_finitary(&g, u).unwrap());
            for v in &report.supports[i + 1..] {
                assert!(u.is_disjoint(v));
            }
        }
        let bottom = report.minimal_sets.iter().fold(VertexSet::new(), |a, w| a.union(w));
        for v in g.vertices() {
            assert!(!g.descendants(v).unwrap().is_disjoint(&bottom));
        }
        let mut indices: Vec<usize> = report.classes.concat();
        indices.sort_unstable();
        assert_eq!(indices, (0..report.minimal_sets.len()).collect::<Vec<_>>());
    }
}

/// The classes from the transitive closure over every simple cycle.
#[test]
fn classes_match_cycle_closure() {
    for g in corpus() {
        let minimal = minimal_hereditary_sets(&g);
        let k = minimal.len();
        let mut related = vec![vec![false; k]; k];
        for (i, row) in related.iter_mut().enumerate() {
            row[i] = true;
        }
        for c in g.simple_cycles().unwrap() {
            let targets: Vec<usize> = (0..k).filter(|&i| points_to(&g, &c, &minimal[i]).unwrap()).collect();
            for &i in &targets {
                for &j in &targets {
                    related[i][j] = true;
                }
            }
        }
        for m in 0..k {
            for i in 0..k {
                for j in 0..k {
                    if related[i][m] && related[m][j] {
                        related[i][j] = true;
                    }
                }
            }
        }
        let mut expected: Vec<Vec<usize>> = Vec::new();
        for (i, row) in related.iter().enumerate() {
            if !expected.iter().any(|c| c.contains(&i)) {
                expected.push((0..k).filter(|&j| row[j]).collect());
            }
        }
        assert_eq!(equivalence_classes(&g), expected);
    }
}

#[test]
fn boolean_algebras() {
    for g in corpus() {
        let k = minimal_hereditary_sets(&g).len();
        let ann = annihilator_boolean_algebra(&g).unwrap();
        assert_eq!(ann.len(), 1 << k);
        for w in &ann {
            let p = perp(&g, w).unwrap();
            assert!(w.intersection(&p).is_empty());
            assert_eq!(&perp(&g, &p).unwrap(), w);
            assert!(ann.contains(&p));
        }
        // Every finitary annihilator set appears among the joins of supports.
        let m = center_structure(&g).unwrap().classes.len();
        let fin = finitary_boolean_subalgebra(&g).unwrap();
        let mut dedup = fin.clone();
        dedup.dedup();
        assert_eq!(dedup.len(), 1 << m);
        let expected: Vec<VertexSet> = ann.iter().filter(|w| is_finitary(&g, w).unwrap()).cloned().collect();
        assert_eq!(fin, expected);
    }
}
