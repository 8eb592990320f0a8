//! Exact sparse linear algebra over a [`Field`].
//!
//! Vectors are sparse maps from an ordered key to a nonzero scalar. An
//! [`Echelon`] keeps reduced vectors indexed by their least key, so inserting
//! a vector reduces it against the existing pivots in increasing key order.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use crate::scalar::{Field, Scalar};

pub type SparseVec<K> = BTreeMap<K, Scalar>;

/// `acc += c · v`, dropping cancelled entries.
pub fn axpy<K: Ord + Clone>(acc: &mut SparseVec<K>, c: &Scalar, v: &SparseVec<K>) {
    for (k, x) in v {
        let delta = c * x;
        match acc.get_mut(k) {
            Some(slot) => {
                *slot += &delta;
                if slot.is_zero() {
                    acc.remove(k);
                }
            }
            None => {
                if !delta.is_zero() {
                    acc.insert(k.clone(), delta);
                }
            }
        }
    }
}

struct Pivot<K> {
    /// Leading entry (the least key) is 1.
    row: SparseVec<K>,
    combo: SparseVec<usize>,
}

/// A row-echelon basis that also records, for every stored vector, the
/// combination of inserted vectors it came from.
pub struct Echelon<K> {
    field: Field,
    pivots: BTreeMap<K, Pivot<K>>,
}

impl<K: Ord + Clone> Echelon<K> {
    pub fn new(field: Field) -> Self {
        Echelon { field, pivots: BTreeMap::new() }
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    fn reduce(&self, mut v: SparseVec<K>, mut combo: SparseVec<usize>) -> (SparseVec<K>, SparseVec<usize>) {
        // Stop at the first lead without a pivot: every combination of pivot
        // rows leads with a pivot key.
        while let Some((k, x)) = v.iter().next() {
            let Some(p) = self.pivots.get(k) else { break };
            let c = -x;
            axpy(&mut v, &c, &p.row);
            axpy(&mut combo, &c, &p.combo);
        }
        (v, combo)
    }

    /// Whether `v` lies in the span of the inserted vectors.
    pub fn contains(&self, v: &SparseVec<K>) -> bool {
        self.reduce(v.clone(), SparseVec::new()).0.is_empty()
    }

    /// Inserts `v` as the vector with index `tag`. Returns `None` if it was
    /// independent, or the dependency `Σ c_i v_i = 0` (with `c_tag = 1`) it
    /// closes.
    pub fn insert(&mut self, v: SparseVec<K>, tag: usize) -> Option<SparseVec<usize>> {
        let mut combo = SparseVec::new();
        combo.insert(tag, self.field.one());
        let (mut v, mut combo) = self.reduce(v, combo);
        let Some((lead, x)) = v.iter().next() else {
            return Some(combo);
        };
        let lead = lead.clone();
        let inv = x.inv().expect("nonzero lead");
        for c in v.values_mut() {
            *c = &*c * &inv;
        }
        for c in combo.values_mut() {
            *c = &*c * &inv;
        }
        self.pivots.insert(lead, Pivot { row: v, combo });
        None
    }
}

/// A basis of `{x : Σ_j x_j · columns[j] = 0}`, each vector keyed by column
/// index.
pub fn nullspace<R: Ord + Clone>(
    field: Field,
    columns: impl IntoIterator<Item = SparseVec<R>>,
) -> Vec<SparseVec<usize>> {
    let mut echelon = Echelon::new(field);
    columns.into_iter().enumerate().filter_map(|(j, col)| echelon.insert(col, j)).collect()
}

pub fn rank<K: Ord + Clone>(field: Field, vectors: impl IntoIterator<Item = SparseVec<K>>) -> usize {
    let mut echelon = Echelon::new(field);
    for (j, v) in vectors.into_iter().enumerate() {
        echelon.insert(v, j);
    }
    echelon.rank()
}
