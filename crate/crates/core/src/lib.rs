//! Centers of Leavitt path algebras of finite graphs.
//!
//! The crate computes, for a finite directed multigraph `Γ`, the Boolean
//! algebra of finitary annihilator hereditary vertex sets, the central
//! idempotents `e(W)` attached to them, and a basis of every graded component
//! of the center `Z(L(Γ))`. Arithmetic in `L(Γ)` is exact and carried out in
//! the monomial basis `B(γ)` determined by a specialization `γ`; an
//! independent brute-force solver cross-checks the structural results.
//!
//! The crate is `no_std` and only needs `alloc`.
#![no_std]

extern crate alloc;

pub mod algebra;
pub mod center;
pub mod fixtures;
pub mod graph;
pub mod hereditary;
pub mod linalg;
pub mod scalar;
pub mod vertex_set;

pub use algebra::{Algebra, AlgebraError, Element, Monomial};
pub use center::{CenterError, CentralBasis, Provenance};

pub use graph::{Cycle, EdgeId, Graph, GraphBuilder, GraphError, Path, Specialization, VertexId};
pub use hereditary::{ArrSet, CenterReport, HereditaryError, SummandKind};
pub use scalar::{Field, Scalar, ScalarError};
pub use vertex_set::VertexSet;
