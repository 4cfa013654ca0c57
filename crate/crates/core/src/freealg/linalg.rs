//! Sparse exact Gaussian elimination over the scalar field.

use std::collections::BTreeMap;

use crate::scalars::Scalar;

pub type SparseVec<K> = BTreeMap<K, Scalar>;

#[derive(Clone, Debug)]
struct Row<K> {
    v: SparseVec<K>,
    combo: SparseVec<usize>,
}

/// Row echelon form keyed by pivot. Each row's pivot is its largest key
/// and carries coefficient one.
#[derive(Clone, Debug)]
pub struct Echelon<K: Ord + Clone> {
    rows: BTreeMap<K, Row<K>>,
}

impl<K: Ord + Clone> Default for Echelon<K> {
    fn default() -> Self {
        Echelon { rows: BTreeMap::new() }
    }
}

fn axpy<K: Ord + Clone>(y: &mut SparseVec<K>, a: &Scalar, x: &SparseVec<K>) {
    for (k, c) in x {
        let t = a * c;
        match y.get_mut(k) {
            Some(v) => {
                *v += &t;
                if v.is_zero() {
                    y.remove(k);
                }
            }
            None => {
                if !t.is_zero() {
                    y.insert(k.clone(), t);
                }
            }
        }
    }
}

impl<K: Ord + Clone> Echelon<K> {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    fn reduce(&self, v: &mut SparseVec<K>, combo: &mut SparseVec<usize>) {
        let mut bound: Option<K> = None;
        loop {
            let next = match &bound {
                None => v.keys().rev().find(|k| self.rows.contains_key(*k)).cloned(),
                Some(b) => v
                    .range(..=b.clone())
                    .rev()
                    .map(|(k, _)| k)
                    .find(|k| self.rows.contains_key(*k))
                    .cloned(),
            };
            let Some(k) = next else { return };
            let c = -&v[&k];
            let row = &self.rows[&k];
            axpy(v, &c, &row.v);
            axpy(combo, &c, &row.combo);
            bound = Some(k);
        }
    }

    /// Adds `v`; returns whether it was independent of the rows so far.
    pub fn insert(&mut self, v: SparseVec<K>) -> bool {
        self.insert_tracked(v, usize::MAX).is_none()
    }

    /// Adds `v` labelled `idx`. A dependent vector yields the combination of
    /// labels that vanishes.
    pub fn insert_tracked(&mut self, mut v: SparseVec<K>, idx: usize) -> Option<SparseVec<usize>> {
        let mut combo = SparseVec::new();
        combo.insert(idx, Scalar::one());
        self.reduce(&mut v, &mut combo);
        let Some((k, lead)) = v.iter().next_back().map(|(k, c)| (k.clone(), c.clone())) else {
            return Some(combo);
        };
        let inv = lead.inv().expect("nonzero pivot");
        for c in v.values_mut() {
            *c *= &inv;
        }
        for c in combo.values_mut() {
            *c *= &inv;
        }
        self.rows.insert(k, Row { v, combo });
        None
    }

    pub fn contains(&self, v: &SparseVec<K>) -> bool {
        let mut v = v.clone();
        let mut combo = SparseVec::new();
        self.reduce(&mut v, &mut combo);
        v.is_empty()
    }

    /// Remainder of `v` modulo the span.
    pub fn remainder(&self, v: &SparseVec<K>) -> SparseVec<K> {
        let mut v = v.clone();
        let mut combo = SparseVec::new();
        self.reduce(&mut v, &mut combo);
        v
    }
}

/// Basis of `{c : Σ c_j cols[j] = 0}` as sparse coefficient vectors.
pub fn kernel<K: Ord + Clone>(cols: &[SparseVec<K>]) -> Vec<SparseVec<usize>> {
    let mut ech = Echelon::new();
    cols.iter()
        .enumerate()
        .filter_map(|(j, c)| ech.insert_tracked(c.clone(), j))
        .collect()
}
