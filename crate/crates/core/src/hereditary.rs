//! Hereditary vertex sets and the Boolean algebras built from them.
//!
//! A set `W` is hereditary when it contains every descendant of its members.
//! `W^⊥` is the set of vertices with no path into `W`; the sets of the form
//! `W^⊥` (annihilator sets) form a Boolean algebra under intersection and
//! `⊥`. A hereditary set is finitary when only finitely many paths arrive in
//! it, which for a finite graph happens exactly when no cycle outside `W`
//! reaches `W`.
//!
//! The minimal nonempty hereditary sets are the terminal strongly connected
//! components. Two of them are linked when a common cycle points to both;
//! the double annihilators of the unions of the resulting classes are the
//! supports `U_i` of the summands of the center.

use alloc::collections::VecDeque;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use thiserror::Error;

use crate::graph::{Cycle, EdgeId, Graph, GraphError, Path, VertexId};
use crate::vertex_set::VertexSet;

/// Largest number of generators for which the `2^k` Boolean algebras are
/// enumerated.
pub const MAX_BOOLEAN_GENERATORS: usize = 20;

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum HereditaryError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("vertex #{0} does not belong to the graph")]
    UnknownVertex(usize),
    #[error("vertex set is not hereditary")]
    NotHereditary,
    #[error("index set is not an equivalence class")]
    NotAClass,
    #[error("Boolean algebra on {0} generators is too large to enumerate")]
    TooLarge(usize),
    #[error("expected {expected} annihilator sets, found {found}")]
    Inconsistent { expected: usize, found: usize },
}

fn check_subset(g: &Graph, w: &VertexSet) -> Result<(), HereditaryError> {
    match w.iter().find(|&v| !g.contains_vertex(v)) {
        Some(v) => Err(HereditaryError::UnknownVertex(v.index())),
        None => Ok(()),
    }
}

fn require_hereditary(g: &Graph, w: &VertexSet) -> Result<(), HereditaryError> {
    if is_hereditary(g, w)? {
        Ok(())
    } else {
        Err(HereditaryError::NotHereditary)
    }
}

pub fn is_hereditary(g: &Graph, w: &VertexSet) -> Result<bool, HereditaryError> {
    check_subset(g, w)?;
    Ok(w.iter().all(|v| g.out_edges(v).iter().all(|&e| w.contains(g.range(e)))))
}

/// `W^⊥`: the vertices with no path of length >= 0 into `W`.
pub fn perp(g: &Graph, w: &VertexSet) -> Result<VertexSet, HereditaryError> {
    check_subset(g, w)?;
    let reaching = g.reach(w.iter(), false);
    Ok(VertexSet::full(g).difference(&reaching))
}

/// `(W^⊥)^⊥`.
pub fn double_perp(g: &Graph, w: &VertexSet) -> Result<VertexSet, HereditaryError> {
    perp(g, &perp(g, w)?)
}

/// The arrival paths of a hereditary set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ArrSet {
    /// Every arrival path, sorted by length and then by edge sequence.
    Finite(Vec<Path>),
    /// `witness` avoids `W` and `connector` runs from one of its vertices
    /// into `W`, so `witness^k · connector` arrive for every `k`.
    Infinite { witness: Cycle, connector: Path },
}

impl ArrSet {
    pub fn is_finite(&self) -> bool {
        matches!(self, ArrSet::Finite(_))
    }

    pub fn paths(&self) -> Option<&[Path]> {
        match self {
            ArrSet::Finite(paths) => Some(paths),
            ArrSet::Infinite { .. } => None,
        }
    }
}

/// Strongly connected components in Tarjan order (sinks of the condensation
/// first), each sorted.
fn components(g: &Graph) -> Vec<Vec<VertexId>> {
    struct Tarjan<'g> {
        g: &'g Graph,
        next: usize,
        index: Vec<Option<usize>>,
        low: Vec<usize>,
        stack: Vec<VertexId>,
        on_stack: Vec<bool>,
        out: Vec<Vec<VertexId>>,
    }

    impl Tarjan<'_> {
        fn connect(&mut self, v: VertexId) {
            let i = v.index();
            self.index[i] = Some(self.next);
            self.low[i] = self.next;
            self.next += 1;
            self.stack.push(v);
            self.on_stack[i] = true;
            for &e in self.g.out_edges(v) {
                let w = self.g.range(e);
                match self.index[w.index()] {
                    None => {
                        self.connect(w);
                        self.low[i] = self.low[i].min(self.low[w.index()]);
                    }
                    Some(wi) if self.on_stack[w.index()] => self.low[i] = self.low[i].min(wi),
                    Some(_) => {}
                }
            }
            if Some(self.low[i]) == self.index[i] {
                let mut comp = Vec::new();
                loop {
                    let w = self.stack.pop().expect("tarjan stack");
                    self.on_stack[w.index()] = false;
                    comp.push(w);
                    if w == v {
                        break;
                    }
                }
                comp.sort();
                self.out.push(comp);
            }
        }
    }

    let n = g.vertex_count();
    let mut t = Tarjan {
        g,
        next: 0,
        index: vec![None; n],
        low: vec![0; n],
        stack: Vec::new(),
        on_stack: vec![false; n],
        out: Vec::new(),
    };
    for v in g.vertices() {
        if t.index[v.index()].is_none() {
            t.connect(v);
        }
    }
    t.out
}

/// A component carries a cycle iff it has two vertices or a loop.
fn is_cyclic(g: &Graph, comp: &[VertexId]) -> bool {
    comp.len() > 1 || g.out_edges(comp[0]).iter().any(|&e| g.range(e) == comp[0])
}

fn is_terminal(g: &Graph, comp: &[VertexId]) -> bool {
    comp.iter().all(|&v| g.out_edges(v).iter().all(|&e| comp.binary_search(&g.range(e)).is_ok()))
}

/// Shortest closed path through `start` inside `comp`, rotated canonically.
fn cycle_in_component(g: &Graph, comp: &[VertexId], start: VertexId) -> Cycle {
    let mut via: Vec<Option<EdgeId>> = vec![None; g.vertex_count()];
    let mut queue = VecDeque::from([start]);
    let mut closing = None;
    'search: while let Some(u) = queue.pop_front() {
        for &e in g.out_edges(u) {
            let w = g.range(e);
            if comp.binary_search(&w).is_err() {
                continue;
            }
            if w == start {
                closing = Some(e);
                break 'search;
            }
            if via[w.index()].is_none() {
                via[w.index()] = Some(e);
                queue.push_back(w);
            }
        }
    }
    let mut e = closing.expect("cyclic component closes through every vertex");
    let mut edges = vec![e];
    while g.source(e) != start {
        e = via[g.source(e).index()].expect("bfs tree");
        edges.push(e);
    }
    edges.reverse();
    Cycle::new(g, &edges).expect("shortest closed walk is a cycle")
}

/// Shortest path from any vertex of `from` into `target`.
fn shortest_path_into(g: &Graph, from: &VertexSet, target: &VertexSet) -> Option<Path> {
    let mut via: Vec<Option<Option<EdgeId>>> = vec![None; g.vertex_count()];
    let mut queue = VecDeque::new();
    for v in from.iter() {
        via[v.index()] = Some(None);
        queue.push_back(v);
    }
    while let Some(u) = queue.pop_front() {
        if target.contains(u) {
            let mut edges = Vec::new();
            let mut at = u;
            while let Some(Some(e)) = via[at.index()] {
                edges.push(e);
                at = g.source(e);
            }
            edges.reverse();
            return Some(if edges.is_empty() {
                Path::vertex(u)
            } else {
                Path::from_edges(g, &edges).expect("bfs path")
            });
        }
        for &e in g.out_edges(u) {
            let w = g.range(e);
            if via[w.index()].is_none() {
                via[w.index()] = Some(Some(e));
                queue.push_back(w);
            }
        }
    }
    None
}

/// The first cyclic component (in least-vertex order) that avoids `W` but
/// reaches it.
fn infinite_witness(g: &Graph, w: &VertexSet) -> Option<(Cycle, Path)> {
    if w.is_empty() {
        return None;
    }
    let reaching = g.reach(w.iter(), false);
    let mut comps = components(g);
    comps.sort_by_key(|c| c[0]);
    comps.iter().find(|c| is_cyclic(g, c) && !w.contains(c[0]) && reaching.contains(c[0])).map(|comp| {
        let cycle = cycle_in_component(g, comp, comp[0]);
        let connector = shortest_path_into(g, &cycle.vertex_set(), w).expect("component reaches W");
        (cycle, connector)
    })
}

/// `Arr(W)`, or a witness that it is infinite.
pub fn arrival_paths(g: &Graph, w: &VertexSet) -> Result<ArrSet, HereditaryError> {
    require_hereditary(g, w)?;
    if let Some((witness, connector)) = infinite_witness(g, w) {
        return Ok(ArrSet::Infinite { witness, connector });
    }
    // Grow arrival paths backwards from W; without a cycle outside W
    // reaching W this terminates.
    let mut done = Vec::new();
    let mut frontier: Vec<Path> = w.iter().map(Path::vertex).collect();
    while let Some(p) = frontier.pop() {
        for &e in g.in_edges(p.source()) {
            if !w.contains(g.source(e)) {
                frontier.push(Path::edge(g, e).concat(&p).expect("composable"));
            }
        }
        done.push(p);
    }
    done.sort();
    Ok(ArrSet::Finite(done))
}

/// Whether `W` is hereditary with finitely many arrival paths.
pub fn is_finitary(g: &Graph, w: &VertexSet) -> Result<bool, HereditaryError> {
    require_hereditary(g, w)?;
    Ok(infinite_witness(g, w).is_none())
}

/// `C ⇒ W`: the cycle avoids `W` and each of its vertices reaches `W`.
pub fn points_to(g: &Graph, c: &Cycle, w: &VertexSet) -> Result<bool, HereditaryError> {
    g.cycle_exits(c)?;
    require_hereditary(g, w)?;
    let cycle_vertices = c.vertex_set();
    if !cycle_vertices.is_disjoint(w) {
        return Ok(false);
    }
    let reaching = g.reach(w.iter(), false);
    Ok(cycle_vertices.is_subset(&reaching))
}

/// The minimal nonempty hereditary sets, i.e. the terminal strongly
/// connected components, sorted by least vertex.
pub fn minimal_hereditary_sets(g: &Graph) -> Vec<VertexSet> {
    let mut sets: Vec<VertexSet> =
        components(g).into_iter().filter(|c| is_terminal(g, c)).map(|c| c.into_iter().collect()).collect();
    sets.sort_by_key(|s: &VertexSet| s.first());
    sets
}

/// The classes of minimal-set indices (0-based) under the transitive
/// closure of "some cycle points to both", sorted by least member.
pub fn equivalence_classes(g: &Graph) -> Vec<Vec<usize>> {
    classes_of(g, &minimal_hereditary_sets(g))
}

fn classes_of(g: &Graph, minimal: &[VertexSet]) -> Vec<Vec<usize>> {
    let k = minimal.len();
    let mut parent: Vec<usize> = (0..k).collect();
    fn find(parent: &mut [usize], i: usize) -> usize {
        let mut root = i;
        while parent[root] != root {
            root = parent[root];
        }
        parent[i] = root;
        root
    }

    // Every cycle lies in one component; it points to W_i exactly when that
    // component is not W_i itself and reaches it.
    for comp in components(g) {
        if !is_cyclic(g, &comp) || is_terminal(g, &comp) {
            continue;
        }
        let below = g.reach(comp.iter().copied(), true);
        let targets: Vec<usize> = (0..k).filter(|&i| minimal[i].is_subset(&below)).collect();
        for pair in targets.windows(2) {
            let (a, b) = (find(&mut parent, pair[0]), find(&mut parent, pair[1]));
            parent[a.max(b)] = a.min(b);
        }
    }
    let roots: Vec<usize> = (0..k).map(|i| find(&mut parent, i)).collect();
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for i in 0..k {
        match classes.iter_mut().find(|c| roots[c[0]] == roots[i]) {
            Some(class) => class.push(i),
            None => classes.push(vec![i]),
        }
    }
    classes
}

fn union_of(minimal: &[VertexSet], indices: impl IntoIterator<Item = usize>) -> VertexSet {
    indices.into_iter().fold(VertexSet::new(), |acc, i| acc.union(&minimal[i]))
}

/// `U_I = ((∪_{j∈I} W_j)^⊥)^⊥` for one of the computed classes.
pub fn class_support(g: &Graph, class: &[usize]) -> Result<VertexSet, HereditaryError> {
    let minimal = minimal_hereditary_sets(g);
    let mut sorted = class.to_vec();
    sorted.sort_unstable();
    if !classes_of(g, &minimal).contains(&sorted) {
        return Err(HereditaryError::NotAClass);
    }
    double_perp(g, &union_of(&minimal, sorted))
}

/// All `2^k` annihilator sets `((W_{i1} ∪ … ∪ W_{is})^⊥)^⊥`, sorted.
pub fn annihilator_boolean_algebra(g: &Graph) -> Result<Vec<VertexSet>, HereditaryError> {
    let minimal = minimal_hereditary_sets(g);
    let k = minimal.len();
    if k > MAX_BOOLEAN_GENERATORS {
        return Err(HereditaryError::TooLarge(k));
    }
    let mut sets = Vec::with_capacity(1 << k);
    for mask in 0u32..(1 << k) {
        let chosen = (0..k).filter(|i| mask & (1 << i) != 0);
        sets.push(double_perp(g, &union_of(&minimal, chosen))?);
    }
    sets.sort();
    sets.dedup();
    if sets.len() != 1 << k {
        return Err(HereditaryError::Inconsistent { expected: 1 << k, found: sets.len() });
    }
    Ok(sets)
}

/// The `2^m` joins `((U_{i1} ∪ … ∪ U_{ir})^⊥)^⊥` of class supports; these
/// are exactly the finitary annihilator sets. The plain union can miss
/// vertices that reach several supports (`v1` in `example3`).
pub fn finitary_boolean_subalgebra(g: &Graph) -> Result<Vec<VertexSet>, HereditaryError> {
    let supports = center_structure(g)?.supports;
    let m = supports.len();
    if m > MAX_BOOLEAN_GENERATORS {
        return Err(HereditaryError::TooLarge(m));
    }
    let mut sets = Vec::with_capacity(1 << m);
    for mask in 0u32..(1 << m) {
        let union = union_of(&supports, (0..m).filter(|i| mask & (1 << i) != 0));
        sets.push(double_perp(g, &union)?);
    }
    sets.sort();
    Ok(sets)
}

/// The kind of summand a class contributes to the center.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SummandKind {
    /// `F[t^-1, t]`, generated in degree `cycle.len()`.
    Laurent { cycle: Cycle },
    /// `F`.
    Field,
}

impl SummandKind {
    pub fn period(&self) -> Option<usize> {
        match self {
            SummandKind::Laurent { cycle } => Some(cycle.len()),
            SummandKind::Field => None,
        }
    }
}

/// The decomposition of the center into Laurent and field summands.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CenterReport {
    pub minimal_sets: Vec<VertexSet>,
    /// 0-based indices into `minimal_sets`.
    pub classes: Vec<Vec<usize>>,
    pub supports: Vec<VertexSet>,
    pub kinds: Vec<SummandKind>,
}

impl CenterReport {
    pub fn laurent_count(&self) -> usize {
        self.kinds.iter().filter(|k| k.period().is_some()).count()
    }

    /// E.g. `F[t^-1,t] (+) F`; Laurent summands first. The center of the
    /// algebra of an empty graph is `0`.
    pub fn isomorphism(&self) -> String {
        let s = self.laurent_count();
        let parts: Vec<&str> =
            core::iter::repeat_n("F[t^-1,t]", s).chain(core::iter::repeat_n("F", self.kinds.len() - s)).collect();
        if parts.is_empty() {
            String::from("0")
        } else {
            parts.join(" (+) ")
        }
    }
}

/// Minimal sets, classes, supports and the summand kind of every class.
pub fn center_structure(g: &Graph) -> Result<CenterReport, HereditaryError> {
    let minimal_sets = minimal_hereditary_sets(g);
    let classes = classes_of(g, &minimal_sets);
    let mut supports = Vec::with_capacity(classes.len());
    let mut kinds = Vec::with_capacity(classes.len());
    for class in &classes {
        supports.push(double_perp(g, &union_of(&minimal_sets, class.iter().copied()))?);
        kinds.push(
            laurent_cycle(g, class, &minimal_sets)?.map_or(SummandKind::Field, |cycle| SummandKind::Laurent { cycle }),
        );
    }
    Ok(CenterReport { minimal_sets, classes, supports, kinds })
}

/// A singleton class `{j}` whose `W_j` is the vertex set of a finitary
/// cycle without exits.
fn laurent_cycle(g: &Graph, class: &[usize], minimal: &[VertexSet]) -> Result<Option<Cycle>, HereditaryError> {
    let [j] = class else { return Ok(None) };
    let w = &minimal[*j];
    let comp: Vec<VertexId> = w.to_vec();
    if !is_cyclic(g, &comp) {
        return Ok(None);
    }
    let cycle = cycle_in_component(g, &comp, comp[0]);
    if cycle.vertex_set() != *w || !g.is_ne_cycle(&cycle)? || !is_finitary(g, w)? {
        return Ok(None);
    }
    Ok(Some(cycle))
}
