//! Exact arithmetic in the Leavitt path algebra `L(Γ)`.
//!
//! Elements are finite combinations of monomials `p q*` with `r(p) = r(q)`.
//! Every element is kept in the basis `B(γ)` of a fixed specialization `γ`:
//! a monomial is basic unless `p` and `q` end in the same special edge. A
//! non-basic monomial `p₁e (q₁e)*` is rewritten with the relation
//! `s(e) = Σ_{s(f)=s(e)} f f*`:
//!
//! ```text
//! p₁e e* q₁* = p₁q₁* − Σ_{f ≠ e, s(f) = s(e)} (p₁f)(q₁f)*
//! ```
//!
//! The subtracted monomials end in non-special edges and are basic; the first
//! one is two edges shorter, so rewriting terminates.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use thiserror::Error;

use crate::graph::{EdgeId, Graph, GraphError, Path, Specialization, VertexId};
use crate::scalar::{Field, Scalar, ScalarError};

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Scalar(#[from] ScalarError),
    #[error("elements belong to different algebras")]
    MixedAlgebras,
    #[error("p and q of a monomial must end at the same vertex")]
    RangeMismatch,
    #[error("path does not belong to the graph")]
    ForeignPath,
    #[error("scalar does not belong to the algebra's field")]
    FieldMismatch,
}

/// A monomial `p q*` with `r(p) = r(q)`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial {
    p: Path,
    q: Path,
}

impl Monomial {
    pub fn new(p: Path, q: Path) -> Result<Self, AlgebraError> {
        if p.range() != q.range() {
            return Err(AlgebraError::RangeMismatch);
        }
        Ok(Monomial { p, q })
    }

    pub fn vertex(v: VertexId) -> Self {
        Monomial { p: Path::vertex(v), q: Path::vertex(v) }
    }

    pub fn p(&self) -> &Path {
        &self.p
    }

    pub fn q(&self) -> &Path {
        &self.q
    }

    /// `l(p) - l(q)`.
    pub fn degree(&self) -> i64 {
        self.p.len() as i64 - self.q.len() as i64
    }

    /// `l(p) + l(q)`.
    pub fn total_len(&self) -> usize {
        self.p.len() + self.q.len()
    }

    pub fn is_basic(&self, g: &Graph, spec: &Specialization) -> bool {
        match (self.p.last_edge(), self.q.last_edge()) {
            (Some(e), Some(f)) => e != f || !spec.is_special(g, e),
            _ => true,
        }
    }

    /// `q p*`.
    pub fn adjoint(&self) -> Monomial {
        Monomial { p: self.q.clone(), q: self.p.clone() }
    }

    /// `(p q*)(p' q'*)` before normalization, or `None` when `q* p' = 0`.
    pub fn product(&self, rhs: &Monomial) -> Option<Monomial> {
        if let Some(w) = rhs.p.strip_prefix(&self.q) {
            let p = self.p.concat(&w).expect("r(p) = r(q) = s(w)");
            return Some(Monomial { p, q: rhs.q.clone() });
        }
        if let Some(u) = self.q.strip_prefix(&rhs.p) {
            let q = rhs.q.concat(&u).expect("r(q') = r(p') = s(u)");
            return Some(Monomial { p: self.p.clone(), q });
        }
        None
    }

    pub fn display<'a>(&'a self, g: &'a Graph) -> DisplayMonomial<'a> {
        DisplayMonomial { m: self, graph: g }
    }
}

pub struct DisplayMonomial<'a> {
    m: &'a Monomial,
    graph: &'a Graph,
}

impl fmt::Display for DisplayMonomial<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let Monomial { p, q } = self.m;
        if p.is_vertex() && q.is_vertex() {
            f.write_str(self.graph.vertex_name(p.source()))
        } else {
            write!(f, "{}{}", p.display(self.graph), q.display(self.graph))
        }
    }
}

/// `L(Γ)` over a field, with the specialization that fixes its basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Algebra {
    graph: Graph,
    spec: Specialization,
    field: Field,
}

type Terms = BTreeMap<Monomial, Scalar>;

fn add_term(terms: &mut Terms, m: Monomial, c: Scalar) {
    use alloc::collections::btree_map::Entry;
    match terms.entry(m) {
        Entry::Vacant(slot) => {
            if !c.is_zero() {
                slot.insert(c);
            }
        }
        Entry::Occupied(mut slot) => {
            *slot.get_mut() += &c;
            if slot.get().is_zero() {
                slot.remove();
            }
        }
    }
}

impl Algebra {
    /// The algebra over `field` with the least-edge-id specialization.
    pub fn new(graph: Graph, field: Field) -> Arc<Self> {
        let spec = graph.canonical_specialization();
        Arc::new(Algebra { graph, spec, field })
    }

    pub fn with_specialization(graph: Graph, spec: Specialization, field: Field) -> Result<Arc<Self>, AlgebraError> {
        let choices: Vec<(VertexId, EdgeId)> = spec.iter().collect();
        let checked = Specialization::from_choices(&graph, &choices)?;
        Ok(Arc::new(Algebra { graph, spec: checked, field }))
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn specialization(&self) -> &Specialization {
        &self.spec
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn zero(self: &Arc<Self>) -> Element {
        Element { alg: Arc::clone(self), terms: Terms::new() }
    }

    /// `1 = Σ_v v`.
    pub fn one(self: &Arc<Self>) -> Element {
        let terms = self.graph.vertices().map(|v| (Monomial::vertex(v), self.field.one())).collect();
        Element { alg: Arc::clone(self), terms }
    }

    pub fn vertex(self: &Arc<Self>, v: VertexId) -> Element {
        self.basic_unit(Monomial::vertex(v))
    }

    pub fn edge(self: &Arc<Self>, e: EdgeId) -> Element {
        let g = &self.graph;
        self.basic_unit(Monomial { p: Path::edge(g, e), q: Path::vertex(g.range(e)) })
    }

    /// `e*`.
    pub fn ghost(self: &Arc<Self>, e: EdgeId) -> Element {
        let g = &self.graph;
        self.basic_unit(Monomial { p: Path::vertex(g.range(e)), q: Path::edge(g, e) })
    }

    /// The path `p` as the element `p r(p)*`.
    pub fn path(self: &Arc<Self>, p: &Path) -> Result<Element, AlgebraError> {
        self.monomial(p.clone(), Path::vertex(p.range()))
    }

    /// `p q*` in normal form.
    pub fn monomial(self: &Arc<Self>, p: Path, q: Path) -> Result<Element, AlgebraError> {
        self.normal_form([(p, q, self.field.one())])
    }

    fn basic_unit(self: &Arc<Self>, m: Monomial) -> Element {
        let mut terms = Terms::new();
        terms.insert(m, self.field.one());
        Element { alg: Arc::clone(self), terms }
    }

    /// Every vertex, then every edge, then every ghost edge.
    pub fn generators(self: &Arc<Self>) -> Vec<Element> {
        let g = &self.graph;
        g.vertices()
            .map(|v| self.vertex(v))
            .chain(g.edges().map(|e| self.edge(e)))
            .chain(g.edges().map(|e| self.ghost(e)))
            .collect()
    }

    fn check_path(&self, p: &Path) -> Result<(), AlgebraError> {
        let g = &self.graph;
        let edges_ok = p.edges().iter().all(|&e| g.contains_edge(e));
        if !g.contains_vertex(p.source()) || !edges_ok {
            return Err(AlgebraError::ForeignPath);
        }
        if !p.is_vertex() && Path::from_edges(g, p.edges())? != *p {
            return Err(AlgebraError::ForeignPath);
        }
        Ok(())
    }

    /// Expands a formal combination of monomials `p q*` in the basis `B(γ)`.
    pub fn normal_form(
        self: &Arc<Self>,
        raw: impl IntoIterator<Item = (Path, Path, Scalar)>,
    ) -> Result<Element, AlgebraError> {
        let mut terms = Terms::new();
        for (p, q, c) in raw {
            self.check_path(&p)?;
            self.check_path(&q)?;
            if c.field() != self.field {
                return Err(AlgebraError::FieldMismatch);
            }
            let m = Monomial::new(p, q)?;
            self.reduce_into(&mut terms, m, c);
        }
        Ok(Element { alg: Arc::clone(self), terms })
    }

    /// Adds `c · m` to `terms`, rewriting `m` into basic monomials.
    fn reduce_into(&self, terms: &mut Terms, m: Monomial, c: Scalar) {
        let g = &self.graph;
        let Monomial { mut p, mut q } = m;
        while let (Some(e), Some(f)) = (p.last_edge(), q.last_edge()) {
            if e != f || !self.spec.is_special(g, e) {
                break;
            }
            let v = g.source(e);
            p.pop_to(v);
            q.pop_to(v);
            let minus_c = -&c;
            for &other in g.out_edges(v).iter().filter(|&&o| o != e) {
                let m = Monomial { p: p.with_edge(g, other), q: q.with_edge(g, other) };
                add_term(terms, m, minus_c.clone());
            }
        }
        add_term(terms, Monomial { p, q }, c);
    }

    fn product_terms(&self, lhs: &Terms, rhs: &Terms) -> Terms {
        let mut out = Terms::new();
        for (a, x) in lhs {
            for (b, y) in rhs {
                if let Some(m) = a.product(b) {
                    self.reduce_into(&mut out, m, x * y);
                }
            }
        }
        out
    }
}

/// An element of `L(Γ)` in the basis `B(γ)`.
#[derive(Clone)]
pub struct Element {
    alg: Arc<Algebra>,
    terms: Terms,
}

impl Element {
    pub fn algebra(&self) -> &Arc<Algebra> {
        &self.alg
    }

    pub fn graph(&self) -> &Graph {
        &self.alg.graph
    }

    /// Basic monomials with their nonzero coefficients, in canonical order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Scalar)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &Monomial) -> Option<&Scalar> {
        self.terms.get(m)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Number of basic monomials with a nonzero coefficient.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    /// Same as [`Element::is_zero`].
    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    fn compatible(&self, other: &Element) -> Result<(), AlgebraError> {
        if Arc::ptr_eq(&self.alg, &other.alg) || self.alg == other.alg {
            Ok(())
        } else {
            Err(AlgebraError::MixedAlgebras)
        }
    }

    fn with_terms(&self, terms: Terms) -> Element {
        Element { alg: Arc::clone(&self.alg), terms }
    }

    pub fn checked_add(&self, other: &Element) -> Result<Element, AlgebraError> {
        self.compatible(other)?;
        let mut terms = self.terms.clone();
        for (m, c) in &other.terms {
            add_term(&mut terms, m.clone(), c.clone());
        }
        Ok(self.with_terms(terms))
    }

    pub fn checked_sub(&self, other: &Element) -> Result<Element, AlgebraError> {
        self.checked_add(&-other)
    }

    pub fn checked_mul(&self, other: &Element) -> Result<Element, AlgebraError> {
        self.compatible(other)?;
        Ok(self.with_terms(self.alg.product_terms(&self.terms, &other.terms)))
    }

    pub fn scale(&self, c: &Scalar) -> Element {
        if c.is_zero() {
            return self.alg.zero();
        }
        self.with_terms(self.terms.iter().map(|(m, x)| (m.clone(), x * c)).collect())
    }

    /// `Σ α p q* ↦ Σ α q p*`. Swapping preserves basicness.
    pub fn involution(&self) -> Element {
        self.with_terms(self.terms.iter().map(|(m, c)| (m.adjoint(), c.clone())).collect())
    }

    /// The homogeneous component of degree `d`.
    pub fn degree_component(&self, d: i64) -> Element {
        self.with_terms(
            self.terms.iter().filter(|(m, _)| m.degree() == d).map(|(m, c)| (m.clone(), c.clone())).collect(),
        )
    }

    /// The degrees with a nonzero component, ascending.
    pub fn degrees(&self) -> Vec<i64> {
        let mut ds: Vec<i64> = self.terms.keys().map(Monomial::degree).collect();
        ds.sort_unstable();
        ds.dedup();
        ds
    }

    /// `a b - b a`.
    pub fn commutator(&self, other: &Element) -> Result<Element, AlgebraError> {
        self.checked_mul(other)?.checked_sub(&other.checked_mul(self)?)
    }

    /// Whether the element commutes with every vertex, edge and ghost edge.
    pub fn is_central(&self) -> bool {
        self.alg.generators().iter().all(|x| self.commutator(x).expect("same algebra").is_zero())
    }

    /// The element in the text syntax `coeff * [p][q] + …`, with `v` for the
    /// vertex monomial `[@v][@v]`.
    pub fn to_text(&self) -> String {
        alloc::format!("{self}")
    }
}

impl PartialEq for Element {
    fn eq(&self, other: &Self) -> bool {
        self.compatible(other).is_ok() && self.terms == other.terms
    }
}

impl Eq for Element {}

impl fmt::Debug for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Element({self})")
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let g = &self.alg.graph;
        for (i, (m, c)) in self.terms.iter().enumerate() {
            let negative = c.is_negative();
            let magnitude = if negative { -c } else { c.clone() };
            match (i, negative) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            if !magnitude.is_one() {
                write!(f, "{magnitude} * ")?;
            }
            write!(f, "{}", m.display(g))?;
        }
        Ok(())
    }
}

impl Add for &Element {
    type Output = Element;
    fn add(self, rhs: &Element) -> Element {
        self.checked_add(rhs).expect("elements of different algebras")
    }
}

impl Sub for &Element {
    type Output = Element;
    fn sub(self, rhs: &Element) -> Element {
        self.checked_sub(rhs).expect("elements of different algebras")
    }
}

impl Mul for &Element {
    type Output = Element;
    fn mul(self, rhs: &Element) -> Element {
        self.checked_mul(rhs).expect("elements of different algebras")
    }
}

impl Neg for &Element {
    type Output = Element;
    fn neg(self) -> Element {
        self.with_terms(self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect())
    }
}
