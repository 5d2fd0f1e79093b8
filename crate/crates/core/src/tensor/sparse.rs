//! Sparse exact vectors and incremental row reduction.

use std::collections::HashMap;

use crate::scalar::Scalar;

/// Sorted list of `(index, value)` pairs with no zero values.
pub type SparseVec = Vec<(usize, Scalar)>;

/// Accumulates `(index, value)` contributions and returns a canonical
/// sparse vector.
#[derive(Default, Clone)]
pub struct Accumulator {
    map: HashMap<usize, Scalar>,
}

impl Accumulator {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add(&mut self, index: usize, value: Scalar) {
        if value.is_zero() {
            return;
        }
        match self.map.entry(index) {
            std::collections::hash_map::Entry::Occupied(mut e) => {
                let v = e.get() + &value;
                *e.get_mut() = v;
            }
            std::collections::hash_map::Entry::Vacant(e) => {
                e.insert(value);
            }
        }
    }

    pub fn add_scaled(&mut self, v: &[(usize, Scalar)], c: &Scalar) {
        if c.is_zero() {
            return;
        }
        for (i, x) in v {
            self.add(*i, if c.is_one() { x.clone() } else { x * c });
        }
    }

    pub fn finish(self) -> SparseVec {
        let mut out: SparseVec = self.map.into_iter().filter(|(_, v)| !v.is_zero()).collect();
        out.sort_unstable_by_key(|(i, _)| *i);
        out
    }
}

/// `a + c·b` for sorted sparse vectors.
pub fn axpy(a: &[(usize, Scalar)], c: &Scalar, b: &[(usize, Scalar)]) -> SparseVec {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        if j >= b.len() || (i < a.len() && a[i].0 < b[j].0) {
            out.push(a[i].clone());
            i += 1;
        } else if i >= a.len() || b[j].0 < a[i].0 {
            out.push((b[j].0, &b[j].1 * c));
            j += 1;
        } else {
            let v = &a[i].1 + &(&b[j].1 * c);
            if !v.is_zero() {
                out.push((a[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

/// Incrementally maintained echelon basis of a subspace, keyed by pivot.
#[derive(Default, Clone)]
pub struct Echelon {
    rows: HashMap<usize, SparseVec>,
}

impl Echelon {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Reduces `v` against the basis; returns the (possibly zero) remainder.
    pub fn reduce(&self, mut v: SparseVec) -> SparseVec {
        let mut start = 0;
        while start < v.len() {
            let (lead, ref coeff) = v[start];
            match self.rows.get(&lead) {
                Some(row) => {
                    let c = -coeff;
                    v = axpy(&v, &c, row);
                    // entries before `lead` are untouched, and `lead` vanished
                    start = v.partition_point(|(i, _)| *i < lead);
                }
                None => start += 1,
            }
        }
        v
    }

    /// Adds `v` to the spanning set; returns true if the rank grew.
    pub fn insert(&mut self, v: SparseVec) -> bool {
        let r = self.reduce(v);
        if r.is_empty() {
            return false;
        }
        // the remainder has no pivot at any of its positions' leads; normalize on its first entry
        let lead = r[0].0;
        let inv = r[0].1.inv().expect("nonzero lead");
        let r: SparseVec = r.into_iter().map(|(i, x)| (i, &x * &inv)).collect();
        self.rows.insert(lead, r);
        true
    }

    pub fn basis(&self) -> Vec<SparseVec> {
        let mut keys: Vec<_> = self.rows.keys().copied().collect();
        keys.sort_unstable();
        keys.into_iter().map(|k| self.rows[&k].clone()).collect()
    }
}

/// Solves the linear system `Σ_j rows[e][j]·x_j = rhs[e]` exactly.
///
/// Returns `None` when inconsistent; otherwise a solution (free variables set
/// to zero) and whether it is unique.
pub fn solve(equations: Vec<(SparseVec, Scalar)>, nvars: usize) -> Option<(Vec<Scalar>, bool)> {
    let rhs_index = nvars;
    let mut ech = Echelon::new();
    for (mut row, b) in equations {
        if !b.is_zero() {
            row.push((rhs_index, b));
        }
        let r = ech.reduce(row);
        match r.first() {
            None => {}
            Some((i, _)) if *i == rhs_index => return None,
            Some(_) => {
                ech.insert(r);
            }
        }
    }
    let unique = ech.rank() == nvars;
    let mut x = vec![Scalar::zero(); nvars];
    let mut pivots: Vec<usize> = ech.rows.keys().copied().collect();
    pivots.sort_unstable_by(|a, b| b.cmp(a));
    for p in pivots {
        let row = &ech.rows[&p];
        let mut val = Scalar::zero();
        for (j, c) in row.iter().skip(1) {
            if *j == rhs_index {
                val = &val + c;
            } else if !x[*j].is_zero() {
                val = &val - &(c * &x[*j]);
            }
        }
        x[p] = val;
    }
    Some((x, unique))
}
