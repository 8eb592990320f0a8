//! Finite directed multigraphs, paths, cycles and specializations.
//!
//! Vertices and edges are identified by dense indices assigned in declaration
//! order, so every ordering derived from ids (cycle rotations, sorted path
//! lists, normal-form monomials) follows the order in which the graph was
//! declared.

use alloc::collections::{BTreeMap, VecDeque};
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use thiserror::Error;

use crate::vertex_set::VertexSet;

/// Default bound on the number of simple cycles [`Graph::simple_cycles`] will
/// enumerate before giving up.
pub const DEFAULT_CYCLE_CAP: usize = 1_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexId(u32);

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct EdgeId(u32);

impl VertexId {
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

impl EdgeId {
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("duplicate id `{0}`")]
    DuplicateId(String),
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),
    #[error("unknown edge `{0}`")]
    UnknownEdge(String),
    #[error("invalid identifier `{0}`")]
    InvalidId(String),
    #[error("edges `{0}` and `{1}` are not composable")]
    NotComposable(String, String),
    #[error("path is not a cycle of this graph")]
    NotACycle,
    #[error("more than {0} simple cycles; raise the enumeration cap")]
    CycleCapExceeded(usize),
}

/// Returns true if `id` matches `[A-Za-z_][A-Za-z0-9_]*`.
pub fn is_valid_id(id: &str) -> bool {
    let mut chars = id.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() || c == '_' => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

/// A finite directed multigraph `(V, E, s, r)`.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Graph {
    vertex_names: Vec<String>,
    edge_names: Vec<String>,
    sources: Vec<VertexId>,
    ranges: Vec<VertexId>,
    out_edges: Vec<Vec<EdgeId>>,
    in_edges: Vec<Vec<EdgeId>>,
    vertex_lookup: BTreeMap<String, VertexId>,
    edge_lookup: BTreeMap<String, EdgeId>,
}

/// Incremental, validating constructor for [`Graph`].
#[derive(Clone, Debug, Default)]
pub struct GraphBuilder {
    graph: Graph,
}

impl GraphBuilder {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn vertex(&mut self, name: &str) -> Result<VertexId, GraphError> {
        let g = &mut self.graph;
        if !is_valid_id(name) {
            return Err(GraphError::InvalidId(name.to_string()));
        }
        if g.vertex_lookup.contains_key(name) {
            return Err(GraphError::DuplicateId(name.to_string()));
        }
        let id = VertexId(g.vertex_names.len() as u32);
        g.vertex_names.push(name.to_string());
        g.vertex_lookup.insert(name.to_string(), id);
        g.out_edges.push(Vec::new());
        g.in_edges.push(Vec::new());
        Ok(id)
    }

    pub fn edge(&mut self, name: &str, source: &str, range: &str) -> Result<EdgeId, GraphError> {
        let g = &mut self.graph;
        if !is_valid_id(name) {
            return Err(GraphError::InvalidId(name.to_string()));
        }
        if g.edge_lookup.contains_key(name) {
            return Err(GraphError::DuplicateId(name.to_string()));
        }
        let s = g.vertex_id(source)?;
        let r = g.vertex_id(range)?;
        let id = EdgeId(g.edge_names.len() as u32);
        g.edge_names.push(name.to_string());
        g.edge_lookup.insert(name.to_string(), id);
        g.sources.push(s);
        g.ranges.push(r);
        g.out_edges[s.index()].push(id);
        g.in_edges[r.index()].push(id);
        Ok(id)
    }

    pub fn build(self) -> Graph {
        self.graph
    }
}

impl Graph {
    pub fn builder() -> GraphBuilder {
        GraphBuilder::new()
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_names.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertex_names.is_empty()
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexId> + '_ {
        (0..self.vertex_names.len() as u32).map(VertexId)
    }

    pub fn edges(&self) -> impl Iterator<Item = EdgeId> + '_ {
        (0..self.edge_names.len() as u32).map(EdgeId)
    }

    pub fn vertex_name(&self, v: VertexId) -> &str {
        &self.vertex_names[v.index()]
    }

    pub fn edge_name(&self, e: EdgeId) -> &str {
        &self.edge_names[e.index()]
    }

    pub fn vertex_id(&self, name: &str) -> Result<VertexId, GraphError> {
        self.vertex_lookup.get(name).copied().ok_or_else(|| GraphError::UnknownVertex(name.to_string()))
    }

    pub fn edge_id(&self, name: &str) -> Result<EdgeId, GraphError> {
        self.edge_lookup.get(name).copied().ok_or_else(|| GraphError::UnknownEdge(name.to_string()))
    }

    pub fn contains_vertex(&self, v: VertexId) -> bool {
        v.index() < self.vertex_names.len()
    }

    pub fn contains_edge(&self, e: EdgeId) -> bool {
        e.index() < self.edge_names.len()
    }

    pub fn source(&self, e: EdgeId) -> VertexId {
        self.sources[e.index()]
    }

    pub fn range(&self, e: EdgeId) -> VertexId {
        self.ranges[e.index()]
    }

    /// Outgoing edges of `v` in declaration order.
    pub fn out_edges(&self, v: VertexId) -> &[EdgeId] {
        &self.out_edges[v.index()]
    }

    /// Incoming edges of `v` in declaration order.
    pub fn in_edges(&self, v: VertexId) -> &[EdgeId] {
        &self.in_edges[v.index()]
    }

    pub fn is_sink(&self, v: VertexId) -> bool {
        self.out_edges[v.index()].is_empty()
    }

    /// All vertices reachable from `v` by a path of length >= 0.
    pub fn descendants(&self, v: VertexId) -> Result<VertexSet, GraphError> {
        self.check_vertex(v)?;
        Ok(self.reach(core::iter::once(v), true))
    }

    pub(crate) fn check_vertex(&self, v: VertexId) -> Result<(), GraphError> {
        if self.contains_vertex(v) {
            Ok(())
        } else {
            Err(GraphError::UnknownVertex(alloc::format!("#{}", v.index())))
        }
    }

    /// Vertices reachable from (`forward`) or reaching (`!forward`) some
    /// vertex of `start`, including `start` itself.
    pub(crate) fn reach(&self, start: impl IntoIterator<Item = VertexId>, forward: bool) -> VertexSet {
        let mut seen = vec![false; self.vertex_count()];
        let mut queue = VecDeque::new();
        for v in start {
            if !seen[v.index()] {
                seen[v.index()] = true;
                queue.push_back(v);
            }
        }
        while let Some(u) = queue.pop_front() {
            let step = if forward { self.out_edges(u) } else { self.in_edges(u) };
            for &e in step {
                let w = if forward { self.range(e) } else { self.source(e) };
                if !seen[w.index()] {
                    seen[w.index()] = true;
                    queue.push_back(w);
                }
            }
        }
        self.vertices().filter(|v| seen[v.index()]).collect()
    }

    /// All simple cycles, bounded by [`DEFAULT_CYCLE_CAP`].
    pub fn simple_cycles(&self) -> Result<Vec<Cycle>, GraphError> {
        self.simple_cycles_capped(DEFAULT_CYCLE_CAP)
    }

    /// All simple cycles in canonical rotation, sorted by length and then by
    /// edge sequence. Fails once more than `cap` cycles have been found.
    pub fn simple_cycles_capped(&self, cap: usize) -> Result<Vec<Cycle>, GraphError> {
        struct Search<'g> {
            g: &'g Graph,
            start: VertexId,
            on_path: Vec<bool>,
            edges: Vec<EdgeId>,
            found: Vec<Cycle>,
            cap: usize,
        }

        impl Search<'_> {
            fn visit(&mut self, u: VertexId) -> Result<(), GraphError> {
                for &e in self.g.out_edges(u) {
                    let w = self.g.range(e);
                    if w == self.start {
                        if self.found.len() == self.cap {
                            return Err(GraphError::CycleCapExceeded(self.cap));
                        }
                        let mut edges = self.edges.clone();
                        edges.push(e);
                        let path = Path { source: self.start, range: self.start, edges };
                        self.found.push(Cycle::from_rotated(self.g, path));
                    } else if w > self.start && !self.on_path[w.index()] {
                        self.on_path[w.index()] = true;
                        self.edges.push(e);
                        self.visit(w)?;
                        self.edges.pop();
                        self.on_path[w.index()] = false;
                    }
                }
                Ok(())
            }
        }

        let mut search = Search {
            g: self,
            start: VertexId(0),
            on_path: vec![false; self.vertex_count()],
            edges: Vec::new(),
            found: Vec::new(),
            cap,
        };
        // The search from `start` only visits larger vertices, so each cycle
        // is found once, already rotated to its least vertex.
        for s in self.vertices() {
            search.start = s;
            search.on_path[s.index()] = true;
            search.visit(s)?;
            search.on_path[s.index()] = false;
        }
        let mut cycles = search.found;
        cycles.sort();
        Ok(cycles)
    }

    /// Exits of `c` in edge-declaration order.
    pub fn cycle_exits(&self, c: &Cycle) -> Result<Vec<EdgeId>, GraphError> {
        self.check_cycle(c)?;
        let on_cycle = c.vertex_set();
        Ok(self.edges().filter(|&e| on_cycle.contains(self.source(e)) && !c.edges().contains(&e)).collect())
    }

    pub fn is_ne_cycle(&self, c: &Cycle) -> Result<bool, GraphError> {
        Ok(self.cycle_exits(c)?.is_empty())
    }

    fn check_cycle(&self, c: &Cycle) -> Result<(), GraphError> {
        if !c.edges().iter().all(|&e| self.contains_edge(e)) {
            return Err(GraphError::NotACycle);
        }
        match Cycle::new(self, c.edges()) {
            Ok(ref same) if same == c => Ok(()),
            _ => Err(GraphError::NotACycle),
        }
    }

    /// The specialization choosing, at each non-sink, its first declared
    /// outgoing edge.
    pub fn canonical_specialization(&self) -> Specialization {
        Specialization { choice: self.vertices().map(|v| self.out_edges(v).first().copied()).collect() }
    }
}

/// A path: a vertex (length 0) or a composable sequence of edges.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Path {
    source: VertexId,
    range: VertexId,
    edges: Vec<EdgeId>,
}

impl Path {
    pub fn vertex(v: VertexId) -> Self {
        Path { source: v, range: v, edges: Vec::new() }
    }

    pub fn edge(g: &Graph, e: EdgeId) -> Self {
        Path { source: g.source(e), range: g.range(e), edges: vec![e] }
    }

    /// Builds a path from a nonempty edge sequence, checking composability.
    pub fn from_edges(g: &Graph, edges: &[EdgeId]) -> Result<Self, GraphError> {
        let (&first, rest) = edges.split_first().ok_or(GraphError::NotACycle)?;
        let mut path = Path::edge(g, first);
        for &e in rest {
            if g.source(e) != path.range {
                let last = *path.edges.last().expect("nonempty");
                return Err(GraphError::NotComposable(g.edge_name(last).to_string(), g.edge_name(e).to_string()));
            }
            path.push(g, e);
        }
        Ok(path)
    }

    pub fn source(&self) -> VertexId {
        self.source
    }

    pub fn range(&self) -> VertexId {
        self.range
    }

    pub fn edges(&self) -> &[EdgeId] {
        &self.edges
    }

    /// `l(p)`; vertices have length 0, so there is no `is_empty`.
    #[allow(clippy::len_without_is_empty)]
    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_vertex(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn last_edge(&self) -> Option<EdgeId> {
        self.edges.last().copied()
    }

    /// Appends `e`; the caller guarantees `s(e) = r(self)`.
    pub fn push(&mut self, g: &Graph, e: EdgeId) {
        debug_assert_eq!(g.source(e), self.range);
        self.edges.push(e);
        self.range = g.range(e);
    }

    /// Removes the last edge; `new_range` is its source.
    pub(crate) fn pop_to(&mut self, new_range: VertexId) -> Option<EdgeId> {
        let e = self.edges.pop()?;
        self.range = new_range;
        Some(e)
    }

    pub(crate) fn with_edge(&self, g: &Graph, e: EdgeId) -> Path {
        let mut p = self.clone();
        p.push(g, e);
        p
    }

    /// `self` followed by `other`, if `r(self) = s(other)`.
    pub fn concat(&self, other: &Path) -> Option<Path> {
        if self.range != other.source {
            return None;
        }
        let mut edges = self.edges.clone();
        edges.extend_from_slice(&other.edges);
        Some(Path { source: self.source, range: other.range, edges })
    }

    /// The path `w` with `self = prefix · w`, if `prefix` is a beginning of
    /// `self`.
    pub fn strip_prefix(&self, prefix: &Path) -> Option<Path> {
        if self.source != prefix.source || !self.edges.starts_with(&prefix.edges) {
            return None;
        }
        Some(Path { source: prefix.range, range: self.range, edges: self.edges[prefix.len()..].to_vec() })
    }

    pub fn is_closed(&self) -> bool {
        self.source == self.range
    }

    /// Vertices visited before each edge, i.e. `s(e_1), …, s(e_n)`.
    pub fn edge_sources<'a>(&'a self, g: &'a Graph) -> impl Iterator<Item = VertexId> + 'a {
        self.edges.iter().map(move |&e| g.source(e))
    }

    /// `[e1 e2 …]` or `[@v]`.
    pub fn display<'a>(&'a self, g: &'a Graph) -> DisplayPath<'a> {
        DisplayPath { path: self, graph: g }
    }
}

impl Ord for Path {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| self.edges.cmp(&other.edges))
            .then_with(|| self.source.cmp(&other.source))
    }
}

impl PartialOrd for Path {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

pub struct DisplayPath<'a> {
    path: &'a Path,
    graph: &'a Graph,
}

impl fmt::Display for DisplayPath<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.path.is_vertex() {
            return write!(f, "[@{}]", self.graph.vertex_name(self.path.source));
        }
        f.write_str("[")?;
        for (i, &e) in self.path.edges.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            f.write_str(self.graph.edge_name(e))?;
        }
        f.write_str("]")
    }
}

/// A closed path whose edge sources are pairwise distinct, stored rotated so
/// that it starts at its least vertex.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Cycle {
    path: Path,
    vertices: Vec<VertexId>,
}

impl Cycle {
    /// Validates `edges` as a cycle of `g` and rotates it into canonical form.
    pub fn new(g: &Graph, edges: &[EdgeId]) -> Result<Self, GraphError> {
        if edges.is_empty() || !edges.iter().all(|&e| g.contains_edge(e)) {
            return Err(GraphError::NotACycle);
        }
        let path = Path::from_edges(g, edges)?;
        if !path.is_closed() {
            return Err(GraphError::NotACycle);
        }
        let sources: Vec<VertexId> = path.edge_sources(g).collect();
        let distinct: VertexSet = sources.iter().copied().collect();
        if distinct.len() != sources.len() {
            return Err(GraphError::NotACycle);
        }
        let (start, _) = sources.iter().enumerate().min_by_key(|&(_, v)| *v).expect("nonempty");
        let mut rotated = edges[start..].to_vec();
        rotated.extend_from_slice(&edges[..start]);
        Ok(Cycle::from_rotated(g, Path::from_edges(g, &rotated)?))
    }

    fn from_rotated(g: &Graph, path: Path) -> Self {
        let vertices = path.edge_sources(g).collect();
        Cycle { path, vertices }
    }

    pub fn path(&self) -> &Path {
        &self.path
    }

    pub fn edges(&self) -> &[EdgeId] {
        self.path.edges()
    }

    #[allow(clippy::len_without_is_empty)]
    pub fn len(&self) -> usize {
        self.path.len()
    }

    pub fn start(&self) -> VertexId {
        self.path.source()
    }

    /// `V(C)`: the sources of the cycle's edges.
    pub fn vertex_set(&self) -> VertexSet {
        self.vertices.iter().copied().collect()
    }

    /// `s(e_1), …, s(e_n)` in cycle order.
    pub fn vertices(&self) -> &[VertexId] {
        &self.vertices
    }

    /// The cycle read from the `i`-th edge onward.
    pub fn rotation(&self, g: &Graph, i: usize) -> Path {
        let edges = self.edges();
        let mut rotated = edges[i..].to_vec();
        rotated.extend_from_slice(&edges[..i]);
        Path::from_edges(g, &rotated).expect("rotation of a cycle is a path")
    }

    pub fn display<'a>(&'a self, g: &'a Graph) -> DisplayPath<'a> {
        self.path.display(g)
    }
}

/// A choice of one outgoing edge at every non-sink vertex. Chosen edges are
/// called special.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Specialization {
    choice: Vec<Option<EdgeId>>,
}

impl Specialization {
    /// Builds a specialization from explicit choices, checking that exactly
    /// the non-sinks are covered and each edge leaves its vertex.
    pub fn from_choices(g: &Graph, choices: &[(VertexId, EdgeId)]) -> Result<Self, GraphError> {
        let mut choice = vec![None; g.vertex_count()];
        for &(v, e) in choices {
            if !g.contains_vertex(v) || !g.contains_edge(e) || g.source(e) != v {
                return Err(GraphError::UnknownEdge(String::from("specialization edge")));
            }
            choice[v.index()] = Some(e);
        }
        if g.vertices().any(|v| g.is_sink(v) == choice[v.index()].is_some()) {
            return Err(GraphError::UnknownEdge(String::from("specialization domain")));
        }
        Ok(Specialization { choice })
    }

    /// `γ(v)`, or `None` for a sink.
    pub fn get(&self, v: VertexId) -> Option<EdgeId> {
        self.choice.get(v.index()).copied().flatten()
    }

    pub fn is_special(&self, g: &Graph, e: EdgeId) -> bool {
        self.get(g.source(e)) == Some(e)
    }

    /// `(v, γ(v))` for every non-sink `v`.
    pub fn iter(&self) -> impl Iterator<Item = (VertexId, EdgeId)> + '_ {
        self.choice.iter().enumerate().filter_map(|(i, e)| e.map(|e| (VertexId(i as u32), e)))
    }
}
