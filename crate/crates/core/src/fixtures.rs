//! Small reference graphs used throughout the tests and documentation.
//!
//! | name | vertices | edges |
//! |------|----------|-------|
//! | `loop` | v1 | c: v1→v1 |
//! | `loop-exit` | v1, v2 | c: v1→v1, f: v1→v2 |
//! | `example3` | v1…v5 | a: v1→v2, b2: v2→v3, b3: v3→v4, b4: v4→v2, d: v1→v5 |
//! | `fork` | u, w1, w2 | e: u→w1, f: u→w2 |
//! | `edge` | v1, v2 | e: v1→v2 |
//! | `dipper` | v0, w1, w2 | c0: v0→v0, g1: v0→w1, g2: v0→w2 |

use alloc::vec::Vec;

use crate::graph::Graph;

fn build(vertices: &[&str], edges: &[(&str, &str, &str)]) -> Graph {
    let mut b = Graph::builder();
    for v in vertices {
        b.vertex(v).expect("fixture vertex");
    }
    for (e, s, r) in edges {
        b.edge(e, s, r).expect("fixture edge");
    }
    b.build()
}

pub fn g1_loop() -> Graph {
    build(&["v1"], &[("c", "v1", "v1")])
}

pub fn g2_loop_exit() -> Graph {
    build(&["v1", "v2"], &[("c", "v1", "v1"), ("f", "v1", "v2")])
}

pub fn g3_example() -> Graph {
    build(
        &["v1", "v2", "v3", "v4", "v5"],
        &[("a", "v1", "v2"), ("b2", "v2", "v3"), ("b3", "v3", "v4"), ("b4", "v4", "v2"), ("d", "v1", "v5")],
    )
}

pub fn g4_fork() -> Graph {
    build(&["u", "w1", "w2"], &[("e", "u", "w1"), ("f", "u", "w2")])
}

pub fn g5_edge() -> Graph {
    build(&["v1", "v2"], &[("e", "v1", "v2")])
}

pub fn g6_dipper() -> Graph {
    build(&["v0", "w1", "w2"], &[("c0", "v0", "v0"), ("g1", "v0", "w1"), ("g2", "v0", "w2")])
}

/// `(name, graph)` for G1 through G6, in order.
pub fn all() -> Vec<(&'static str, Graph)> {
    alloc::vec![
        ("G1", g1_loop()),
        ("G2", g2_loop_exit()),
        ("G3", g3_example()),
        ("G4", g4_fork()),
        ("G5", g5_edge()),
        ("G6", g6_dipper()),
    ]
}
