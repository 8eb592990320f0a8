//! The four commands and their reports.
//!
//! Every report renders either as aligned text or as JSON with a top-level
//! `format_version`. Both renderings are deterministic.

use std::fmt::Write as _;
use std::sync::Arc;

use lpa_core::center::{self, brute_force_center, center_basis, center_dimension_predicted, idempotent, oracle_bound};
use lpa_core::hereditary::{self, annihilator_boolean_algebra, center_structure, finitary_boolean_subalgebra};
use lpa_core::{Algebra, CenterError, Field, Graph, HereditaryError, Provenance, SummandKind, VertexSet};
use serde::Serialize;
use thiserror::Error;

pub const FORMAT_VERSION: &str = "1";

#[derive(Debug, Error)]
pub enum CommandError {
    #[error(transparent)]
    Hereditary(#[from] HereditaryError),
    #[error(transparent)]
    Center(#[from] CenterError),
    #[error("Boolean law violated: {0}")]
    Inconsistent(String),
}

/// Parses `rat` or `fp:<prime>`.
pub fn parse_field(s: &str) -> Result<Field, String> {
    match s {
        "rat" => Ok(Field::Rational),
        _ => {
            let p = s
                .strip_prefix("fp:")
                .and_then(|p| p.parse::<u64>().ok())
                .ok_or_else(|| format!("expected `rat` or `fp:<prime>`, found `{s}`"))?;
            Field::prime(p).map_err(|e| e.to_string())
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GraphSummary {
    pub vertices: usize,
    pub edges: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClassEntry {
    /// 1-based indices of the minimal sets in the class.
    pub members: Vec<usize>,
    pub support: Vec<String>,
    pub kind: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub cycle: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub period: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Analysis {
    pub k: usize,
    pub m: usize,
    pub minimal_sets: Vec<Vec<String>>,
    pub classes: Vec<ClassEntry>,
    pub isomorphism: String,
    pub annihilator_size: usize,
    pub finitary_size: usize,
    pub finitary_sets: Vec<Vec<String>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CentralElement {
    pub element: String,
    pub class: usize,
    pub kind: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub power: Option<i64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CenterListing {
    pub degree: i64,
    pub field: String,
    pub predicted_dimension: usize,
    pub elements: Vec<CentralElement>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DegreeCheck {
    pub degree: i64,
    pub bound: usize,
    pub oracle_dimension: usize,
    pub predicted_dimension: usize,
    pub status: &'static str,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Verification {
    pub max_degree: u32,
    pub field: String,
    pub degrees: Vec<DegreeCheck>,
    pub all_ok: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IdempotentRow {
    pub set: Vec<String>,
    pub element: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Idempotents {
    pub field: String,
    pub rows: Vec<IdempotentRow>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum Payload {
    Analyze(Analysis),
    Center(CenterListing),
    Verify(Verification),
    Idempotents(Idempotents),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Report {
    pub format_version: &'static str,
    pub command: &'static str,
    pub graph: GraphSummary,
    pub payload: Payload,
}

fn names(g: &Graph, set: &VertexSet) -> Vec<String> {
    set.iter().map(|v| g.vertex_name(v).to_string()).collect()
}

fn report(g: &Graph, command: &'static str, payload: Payload) -> Report {
    Report {
        format_version: FORMAT_VERSION,
        command,
        graph: GraphSummary { vertices: g.vertex_count(), edges: g.edge_count() },
        payload,
    }
}

pub fn analyze(g: &Graph) -> Result<Report, CommandError> {
    let structure = center_structure(g)?;
    let classes = structure
        .classes
        .iter()
        .zip(&structure.supports)
        .zip(&structure.kinds)
        .map(|((class, support), kind)| {
            let cycle = match kind {
                SummandKind::Laurent { cycle } => Some(cycle),
                SummandKind::Field => None,
            };
            ClassEntry {
                members: class.iter().map(|i| i + 1).collect(),
                support: names(g, support),
                kind: if cycle.is_some() { "laurent" } else { "field" },
                cycle: cycle.map(|c| c.display(g).to_string()),
                period: kind.period(),
            }
        })
        .collect();
    let finitary = finitary_boolean_subalgebra(g)?;
    let analysis = Analysis {
        k: structure.minimal_sets.len(),
        m: structure.classes.len(),
        minimal_sets: structure.minimal_sets.iter().map(|w| names(g, w)).collect(),
        classes,
        isomorphism: structure.isomorphism(),
        annihilator_size: annihilator_boolean_algebra(g)?.len(),
        finitary_size: finitary.len(),
        finitary_sets: finitary.iter().map(|w| names(g, w)).collect(),
    };
    Ok(report(g, "analyze", Payload::Analyze(analysis)))
}

pub fn center(g: &Graph, field: Field, degree: i64) -> Result<Report, CommandError> {
    let alg = Algebra::new(g.clone(), field);
    let basis = center_basis(&alg, degree)?;
    let elements = basis
        .elements
        .iter()
        .zip(&basis.provenance)
        .map(|(x, source)| {
            let (class, kind, power) = match *source {
                Provenance::Idempotent { class } => (class, "idempotent", None),
                Provenance::CyclePower { class, power } => (class, "cycle_power", Some(power)),
            };
            CentralElement { element: x.to_text(), class: class + 1, kind, power }
        })
        .collect();
    let listing = CenterListing {
        degree,
        field: field.to_string(),
        predicted_dimension: center_dimension_predicted(g, degree)?,
        elements,
    };
    Ok(report(g, "center", Payload::Center(listing)))
}

/// Compares the oracle with the structural basis in every degree
/// `|d| <= max_degree`, at `max_len` or at the per-degree bound `N*`.
pub fn verify(g: &Graph, field: Field, max_degree: u32, max_len: Option<usize>) -> Result<Report, CommandError> {
    let alg = Algebra::new(g.clone(), field);
    let d_max = i64::from(max_degree);
    let mut degrees = Vec::new();
    for degree in -d_max..=d_max {
        let bound = match max_len {
            Some(n) => n,
            None => oracle_bound(g, degree)?,
        };
        let oracle = brute_force_center(&alg, degree, bound)?;
        let basis = center_basis(&alg, degree)?.elements;
        let predicted = center_dimension_predicted(g, degree)?;
        let ok = oracle.len() == predicted && center::same_span(&alg, &oracle, &basis);
        degrees.push(DegreeCheck {
            degree,
            bound,
            oracle_dimension: oracle.len(),
            predicted_dimension: predicted,
            status: if ok { "OK" } else { "FAIL" },
        });
    }
    let all_ok = degrees.iter().all(|d| d.status == "OK");
    let verification = Verification { max_degree, field: field.to_string(), degrees, all_ok };
    Ok(report(g, "verify", Payload::Verify(verification)))
}

pub fn idempotents(g: &Graph, field: Field) -> Result<Report, CommandError> {
    let alg = Algebra::new(g.clone(), field);
    let sets = finitary_boolean_subalgebra(g)?;
    let images = sets.iter().map(|w| idempotent(&alg, w)).collect::<Result<Vec<_>, _>>()?;
    check_boolean_laws(g, &alg, &sets, &images)?;
    let rows =
        sets.iter().zip(&images).map(|(w, e)| IdempotentRow { set: names(g, w), element: e.to_text() }).collect();
    Ok(report(g, "idempotents", Payload::Idempotents(Idempotents { field: field.to_string(), rows })))
}

fn check_boolean_laws(
    g: &Graph,
    alg: &Arc<Algebra>,
    sets: &[VertexSet],
    images: &[lpa_core::Element],
) -> Result<(), CommandError> {
    let fail = |what: String| Err(CommandError::Inconsistent(what));
    for (w1, e1) in sets.iter().zip(images) {
        let complement = hereditary::perp(g, w1)?;
        if &idempotent(alg, &complement)? + e1 != alg.one() {
            return fail(format!("e(W) + e(W^perp) != 1 for W = {}", w1.display(g)));
        }
        for (w2, e2) in sets.iter().zip(images) {
            if idempotent(alg, &w1.intersection(w2))? != (e1 * e2) {
                return fail(format!("e({}) e({}) != e of the meet", w1.display(g), w2.display(g)));
            }
            if w1 != w2 && e1 == e2 {
                return fail(format!("e({}) = e({})", w1.display(g), w2.display(g)));
            }
        }
    }
    Ok(())
}

fn set_text(set: &[String]) -> String {
    format!("{{{}}}", set.join(", "))
}

impl Report {
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    /// Whether the command succeeded; only `verify` can report failure.
    pub fn is_ok(&self) -> bool {
        match &self.payload {
            Payload::Verify(v) => v.all_ok,
            _ => true,
        }
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let GraphSummary { vertices, edges } = self.graph;
        writeln!(out, "graph: {vertices} vertices, {edges} edges").unwrap();
        match &self.payload {
            Payload::Analyze(a) => {
                writeln!(out, "minimal hereditary sets (k = {}):", a.k).unwrap();
                for (i, w) in a.minimal_sets.iter().enumerate() {
                    writeln!(out, "  W{} = {}", i + 1, set_text(w)).unwrap();
                }
                writeln!(out, "classes (m = {}):", a.m).unwrap();
                for (i, c) in a.classes.iter().enumerate() {
                    let members: Vec<String> = c.members.iter().map(|j| format!("W{j}")).collect();
                    let kind = match (&c.cycle, c.period) {
                        (Some(cycle), Some(n)) => format!("F[t^-1,t] via {cycle}, n = {n}"),
                        _ => "F".to_string(),
                    };
                    writeln!(
                        out,
                        "  I{0} = {{{1}}}  U{0} = {2}  {3}",
                        i + 1,
                        members.join(", "),
                        set_text(&c.support),
                        kind
                    )
                    .unwrap();
                }
                writeln!(out, "annihilator hereditary sets: {}", a.annihilator_size).unwrap();
                writeln!(out, "finitary annihilator hereditary sets: {}", a.finitary_size).unwrap();
                for w in &a.finitary_sets {
                    writeln!(out, "  {}", set_text(w)).unwrap();
                }
                writeln!(out, "center: {}", a.isomorphism).unwrap();
            }
            Payload::Center(c) => {
                writeln!(out, "degree {} over {}: dimension {}", c.degree, c.field, c.predicted_dimension).unwrap();
                for x in &c.elements {
                    let source = match x.power {
                        Some(p) => format!("z^{p} on U{}", x.class),
                        None => format!("e(U{})", x.class),
                    };
                    writeln!(out, "  {}    # {source}", x.element).unwrap();
                }
            }
            Payload::Verify(v) => {
                writeln!(out, "oracle over {} for |d| <= {}:", v.field, v.max_degree).unwrap();
                writeln!(out, "  degree  bound  oracle  predicted  status").unwrap();
                for d in &v.degrees {
                    writeln!(
                        out,
                        "  {:>6}  {:>5}  {:>6}  {:>9}  {}",
                        d.degree, d.bound, d.oracle_dimension, d.predicted_dimension, d.status
                    )
                    .unwrap();
                }
                let failed = v.degrees.iter().filter(|d| d.status != "OK").count();
                if failed == 0 {
                    writeln!(out, "all degrees OK").unwrap();
                } else {
                    writeln!(out, "FAIL in {failed} degree(s)").unwrap();
                }
            }
            Payload::Idempotents(r) => {
                writeln!(out, "finitary annihilator hereditary sets and e(W) over {}:", r.field).unwrap();
                for row in &r.rows {
                    writeln!(out, "  {} -> {}", set_text(&row.set), row.element).unwrap();
                }
            }
        }
        out
    }
}
