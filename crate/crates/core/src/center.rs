//! Central elements of `L(Γ)`.
//!
//! For a finitary hereditary set `W` the diagonal embedding
//! `φ_W(a) = Σ_{p ∈ Arr(W)} p a p*` carries central elements of `L(W)` to
//! central elements of `L(Γ)`; in particular `e(W) = φ_W(Σ_{w∈W} w)` is a
//! central idempotent. The center is spanned by the idempotents `e(U_i)` of
//! the class supports together with `φ(z(C)^j)` and their adjoints for every
//! finitary cycle `C` without exits that forms a class on its own, where
//! `z(C)` is the sum of the rotations of `C`.
//!
//! [`brute_force_center`] recomputes a graded component of the center as the
//! exact solution space of the commutator equations, without using any of
//! the structure above.

use alloc::sync::Arc;
use alloc::vec::Vec;

use thiserror::Error;

use crate::algebra::{Algebra, AlgebraError, Element, Monomial};
use crate::graph::{Cycle, EdgeId, Graph, Path};
use crate::hereditary::{self, ArrSet, HereditaryError, SummandKind};
use crate::linalg::{self, Echelon, SparseVec};
use crate::vertex_set::VertexSet;

/// Default bound on the number of unknowns [`brute_force_center`] accepts.
pub const DEFAULT_ORACLE_CAP: usize = 250_000;

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum CenterError {
    #[error(transparent)]
    Hereditary(#[from] HereditaryError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error("vertex set is not finitary: a cycle outside it reaches it")]
    NotFinitary { witness: Cycle },
    #[error("cycle has an exit")]
    HasExit(EdgeId),
    #[error("element is not diagonal (some monomial has s(p) != s(q))")]
    NotDiagonal,
    #[error("element is not supported inside the vertex set")]
    OutsideSupport,
    #[error("oracle needs {unknowns} unknowns, above the cap of {cap}")]
    OracleTooLarge { unknowns: usize, cap: usize },
}

fn finite_arrivals(g: &Graph, w: &VertexSet) -> Result<Vec<Path>, CenterError> {
    match hereditary::arrival_paths(g, w)? {
        ArrSet::Finite(paths) => Ok(paths),
        ArrSet::Infinite { witness, .. } => Err(CenterError::NotFinitary { witness }),
    }
}

/// `e(W) = Σ_{p ∈ Arr(W)} p p*` for a finitary hereditary `W`.
pub fn idempotent(alg: &Arc<Algebra>, w: &VertexSet) -> Result<Element, CenterError> {
    let paths = finite_arrivals(alg.graph(), w)?;
    let one = alg.field().one();
    Ok(alg.normal_form(paths.into_iter().map(|p| (p.clone(), p, one.clone())))?)
}

/// `z(C) = Σ` of the rotations of a cycle without exits.
pub fn cycle_generator(alg: &Arc<Algebra>, c: &Cycle) -> Result<Element, CenterError> {
    let g = alg.graph();
    if let Some(&exit) = g.cycle_exits(c).map_err(HereditaryError::from)?.first() {
        return Err(CenterError::HasExit(exit));
    }
    let one = alg.field().one();
    let rotations = (0..c.len()).map(|i| {
        let p = c.rotation(g, i);
        let v = Path::vertex(p.range());
        (p, v, one.clone())
    });
    Ok(alg.normal_form(rotations)?)
}

/// `φ_W(a) = Σ_{p ∈ Arr(W)} p a p*` for a diagonal element `a` of `L(W)`.
pub fn embed(alg: &Arc<Algebra>, w: &VertexSet, a: &Element) -> Result<Element, CenterError> {
    if a.algebra() != alg {
        return Err(AlgebraError::MixedAlgebras.into());
    }
    let g = alg.graph();
    for (m, _) in a.terms() {
        if m.p().source() != m.q().source() {
            return Err(CenterError::NotDiagonal);
        }
        // W is hereditary, so both paths stay in W once they start there.
        if !w.contains(m.p().source()) {
            return Err(CenterError::OutsideSupport);
        }
    }
    let mut image = alg.zero();
    for p in finite_arrivals(g, w)? {
        let left = alg.path(&p)?;
        image = &image + &(&(&left * a) * &left.involution());
    }
    Ok(image)
}

/// Where a central basis element comes from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Provenance {
    /// `e(U_class)`.
    Idempotent { class: usize },
    /// `φ(z(C)^power)` for the cycle of a Laurent class; negative powers
    /// stand for `(z(C)*)^{-power}`.
    CyclePower { class: usize, power: i64 },
}

/// A basis of the degree-`degree` component of the center.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CentralBasis {
    pub degree: i64,
    pub elements: Vec<Element>,
    pub provenance: Vec<Provenance>,
}

/// The basis of `Z(L(Γ))_d` built from the class structure.
pub fn center_basis(alg: &Arc<Algebra>, d: i64) -> Result<CentralBasis, CenterError> {
    let g = alg.graph();
    let report = hereditary::center_structure(g)?;
    let mut elements = Vec::new();
    let mut provenance = Vec::new();
    if d == 0 {
        for (class, support) in report.supports.iter().enumerate() {
            elements.push(idempotent(alg, support)?);
            provenance.push(Provenance::Idempotent { class });
        }
    } else {
        for (class, kind) in report.kinds.iter().enumerate() {
            let SummandKind::Laurent { cycle } = kind else { continue };
            let n = cycle.len() as i64;
            if d % n != 0 {
                continue;
            }
            let power = d.abs() / n;
            let z = cycle_generator(alg, cycle)?;
            let mut z_power = z.clone();
            for _ in 1..power {
                z_power = &z_power * &z;
            }
            // The image of z^power in Z(L(U_i)) is φ^{U_i}_{V(C)}(z^power),
            // and φ_{U_i} ∘ φ^{U_i}_{V(C)} = φ_{V(C)}.
            let central = embed(alg, &cycle.vertex_set(), &z_power)?;
            elements.push(if d > 0 { central } else { central.involution() });
            provenance.push(Provenance::CyclePower { class, power: d / n });
        }
    }
    Ok(CentralBasis { degree: d, elements, provenance })
}

/// `dim Z(L(Γ))_d` as predicted by the class structure.
pub fn center_dimension_predicted(g: &Graph, d: i64) -> Result<usize, CenterError> {
    let report = hereditary::center_structure(g)?;
    Ok(if d == 0 {
        report.kinds.len()
    } else {
        report
            .kinds
            .iter()
            .filter_map(SummandKind::period)
            .filter(|&n| d.unsigned_abs().is_multiple_of(n as u64))
            .count()
    })
}

/// The longest arrival path into a class support or into the cycle of a
/// Laurent class.
pub fn max_arrival_len(g: &Graph) -> Result<usize, CenterError> {
    let report = hereditary::center_structure(g)?;
    let cycle_sets = report.kinds.iter().filter_map(|k| match k {
        SummandKind::Laurent { cycle } => Some(cycle.vertex_set()),
        SummandKind::Field => None,
    });
    let mut longest = 0;
    for w in report.supports.iter().cloned().chain(cycle_sets) {
        let paths = finite_arrivals(g, &w)?;
        longest = longest.max(paths.iter().map(Path::len).max().unwrap_or(0));
    }
    Ok(longest)
}

/// The length bound `N* = 2·maxArr + |d| + 2` at which the oracle's
/// solution space contains every element of [`center_basis`].
pub fn oracle_bound(g: &Graph, d: i64) -> Result<usize, CenterError> {
    Ok(2 * max_arrival_len(g)? + d.unsigned_abs() as usize + 2)
}

/// Paths of each length `0..=max_len`, starting at each vertex.
fn paths_by_source(g: &Graph, max_len: usize) -> Vec<Vec<Vec<Path>>> {
    g.vertices()
        .map(|v| {
            let mut layers = alloc::vec![alloc::vec![Path::vertex(v)]];
            for _ in 0..max_len {
                let next: Vec<Path> = layers
                    .last()
                    .expect("nonempty")
                    .iter()
                    .flat_map(|p| g.out_edges(p.range()).iter().map(move |&e| p.with_edge(g, e)))
                    .collect();
                layers.push(next);
            }
            layers
        })
        .collect()
}

/// The basic monomials `p q*` of degree `d` with `l(p) + l(q) <= max_len`
/// and `s(p) = s(q)`.
///
/// A central element commutes with every vertex, which forces
/// `z = Σ_v v z v`; the off-diagonal monomials are therefore left out.
pub fn oracle_unknowns(alg: &Algebra, d: i64, max_len: usize) -> Vec<Monomial> {
    let g = alg.graph();
    let spec = alg.specialization();
    let layers = paths_by_source(g, max_len);
    let mut unknowns = Vec::new();
    for by_len in &layers {
        for lq in 0..=max_len {
            let lp = lq as i64 + d;
            if lp < 0 || lp as usize + lq > max_len {
                continue;
            }
            for p in &by_len[lp as usize] {
                for q in &by_len[lq] {
                    if p.range() != q.range() {
                        continue;
                    }
                    let m = Monomial::new(p.clone(), q.clone()).expect("same range");
                    if m.is_basic(g, spec) {
                        unknowns.push(m);
                    }
                }
            }
        }
    }
    unknowns.sort();
    unknowns
}

/// A basis of the central elements of degree `d` spanned by basic monomials
/// with `l(p) + l(q) <= max_len`, computed as the exact null space of the
/// commutators with all generators.
pub fn brute_force_center(alg: &Arc<Algebra>, d: i64, max_len: usize) -> Result<Vec<Element>, CenterError> {
    brute_force_center_capped(alg, d, max_len, DEFAULT_ORACLE_CAP)
}

pub fn brute_force_center_capped(
    alg: &Arc<Algebra>,
    d: i64,
    max_len: usize,
    cap: usize,
) -> Result<Vec<Element>, CenterError> {
    let unknowns = oracle_unknowns(alg, d, max_len);
    if unknowns.len() > cap {
        return Err(CenterError::OracleTooLarge { unknowns: unknowns.len(), cap });
    }
    let generators = alg.generators();
    let one = alg.field().one();
    let columns = unknowns.iter().map(|m| {
        let x = alg.normal_form([(m.p().clone(), m.q().clone(), one.clone())]).expect("valid monomial");
        let mut column: SparseVec<(usize, Monomial)> = SparseVec::new();
        for (i, gen) in generators.iter().enumerate() {
            let comm = x.commutator(gen).expect("same algebra");
            column.extend(comm.terms().map(|(m, c)| ((i, m.clone()), c.clone())));
        }
        column
    });
    let kernel = linalg::nullspace(alg.field(), columns);
    let basis = kernel
        .into_iter()
        .map(|combo| {
            let raw = combo.into_iter().map(|(j, c)| (unknowns[j].p().clone(), unknowns[j].q().clone(), c));
            alg.normal_form(raw).expect("valid monomials")
        })
        .collect();
    Ok(basis)
}

fn as_vector(x: &Element) -> SparseVec<Monomial> {
    x.terms().map(|(m, c)| (m.clone(), c.clone())).collect()
}

/// `dim span(elements)`.
pub fn span_rank(alg: &Algebra, elements: &[Element]) -> usize {
    linalg::rank(alg.field(), elements.iter().map(as_vector))
}

/// Whether the two families span the same subspace.
pub fn same_span(alg: &Algebra, a: &[Element], b: &[Element]) -> bool {
    let mut echelon = Echelon::new(alg.field());
    for (i, x) in a.iter().enumerate() {
        echelon.insert(as_vector(x), i);
    }
    let rank_a = echelon.rank();
    b.iter().all(|y| echelon.contains(&as_vector(y))) && span_rank(alg, b) == rank_a
}
