//! The Φ recursion on End(B1⊗B2⊗B1⊗B2) and its stabilization order.

use std::collections::HashMap;

use rayon::prelude::*;
use serde::Serialize;

use super::{check_hopf_datum, HopfDatum};
use crate::error::{Error, Result};
use crate::scalar::Scalar;
use crate::tensor::sparse::{Accumulator, Echelon, SparseVec};
use crate::tensor::{id, mp, total_dim, Diagram, LinMap, Piece, SpaceLabel};

/// The two halves of the Φ diagram around the central box.
///
/// `pre: V → L⊗V⊗R` splits the input and `post: L⊗V⊗R → V` merges the
/// result, so that `Φ(f) = post ∘ (id_L ⊗ f ⊗ id_R) ∘ pre`.
#[derive(Clone)]
pub struct PhiEngine {
    v: Vec<SpaceLabel>,
    l: Vec<SpaceLabel>,
    r: Vec<SpaceLabel>,
    pre_layers: Vec<Vec<Piece>>,
    post_layers: Vec<Vec<Piece>>,
}

impl PhiEngine {
    pub fn new(d: &HopfDatum) -> Result<Self> {
        d.check_shapes()?;
        let (s1, s2) = (d.s1().clone(), d.s2().clone());
        let x = d.crossings()?;
        let (b1, b2) = (&d.b1, &d.b2);
        let (m1, m2, d1, d2) = (&b1.m, &b2.m, &b1.delta, &b2.delta);
        let (mu_l, nu_l, mu_r, nu_r) = (&d.mu_l, &d.nu_l, &d.mu_r, &d.nu_r);
        let v = vec![s1.clone(), s2.clone(), s1.clone(), s2.clone()];
        let pre_layers = vec![
            vec![id(1), mp(d2), mp(d1), id(1)],
            vec![id(1), mp(d2), mp(&x.b21), mp(d1), id(1)],
            vec![id(1), mp(nu_r), mp(&x.b21), mp(&x.b21), mp(nu_l), id(1)],
            vec![mp(d1), id(1), mp(&x.b11), id(2), mp(&x.b22), id(1), mp(d2)],
            vec![id(1), mp(nu_l), mp(mu_l), id(4), mp(mu_r), mp(nu_r), id(1)],
            vec![id(2), mp(&x.b11), id(4), mp(&x.b22), id(2)],
        ];
        let post_layers = vec![
            vec![id(1), mp(mu_l), mp(nu_l), id(4), mp(nu_r), mp(mu_r), id(1)],
            vec![mp(m1), id(1), mp(&x.b11), id(2), mp(&x.b22), id(1), mp(m2)],
            vec![id(1), mp(mu_r), mp(&x.b12), mp(&x.b12), mp(mu_l), id(1)],
            vec![id(1), mp(m2), mp(&x.b12), mp(m1), id(1)],
            vec![id(1), mp(m2), mp(m1), id(1)],
        ];
        Ok(PhiEngine {
            v,
            l: vec![s1.clone(), s2.clone(), s1.clone(), s1.clone()],
            r: vec![s2.clone(), s2.clone(), s1, s2],
            pre_layers,
            post_layers,
        })
    }

    /// The four strands `B1⊗B2⊗B1⊗B2`.
    pub fn strands(&self) -> &[SpaceLabel] {
        &self.v
    }

    fn pre(&self) -> Result<Diagram> {
        let mut d = Diagram::new(&self.v);
        for l in &self.pre_layers {
            d = d.then(l.clone())?;
        }
        Ok(d)
    }

    fn post(&self) -> Result<Diagram> {
        let mut input = self.l.clone();
        input.extend(self.v.iter().cloned());
        input.extend(self.r.iter().cloned());
        let mut d = Diagram::new(&input);
        for l in &self.post_layers {
            d = d.then(l.clone())?;
        }
        Ok(d)
    }

    /// Φ(f) for an endomorphism `f` of the four strands.
    pub fn apply(&self, f: &LinMap) -> Result<LinMap> {
        if f.dom() != self.v.as_slice() || f.cod() != self.v.as_slice() {
            return Err(Error::shape(
                crate::tensor::describe(&self.v),
                format!(
                    "{} → {}",
                    crate::tensor::describe(f.dom()),
                    crate::tensor::describe(f.cod())
                ),
            ));
        }
        let mut d = self.pre()?;
        d = d.then(vec![id(self.l.len()), mp(f), id(self.r.len())])?;
        for l in &self.post_layers {
            d = d.then(l.clone())?;
        }
        Ok(d.eval())
    }
}

/// The two sides of the bialgebra compatibility on `B = B1⊗B2` as
/// endomorphisms of `B⊗B`: `f1 = Δ_B∘m_B` and
/// `f2 = (m_B⊗m_B)∘(id⊗Ψ_{B,B}⊗id)∘(Δ_B⊗Δ_B)`. Both are fixed by Φ.
pub fn compatibility_sides(d: &HopfDatum) -> Result<(LinMap, LinMap)> {
    let ind = super::induced_structures_unchecked(d)?;
    let b = [d.s1().clone(), d.s2().clone()];
    let bb = [b[0].clone(), b[1].clone(), b[0].clone(), b[1].clone()];
    let psi = d.braiding.braid(&b, &b)?;
    let f1 = crate::tensor::compose(&ind.delta, &ind.m)?;
    let f2 = crate::tensor::chain(
        &bb,
        vec![
            vec![mp(&ind.delta), mp(&ind.delta)],
            vec![id(2), mp(&psi), id(2)],
            vec![mp(&ind.m), mp(&ind.m)],
        ],
    )?;
    Ok((f1, f2))
}

/// Φ(f) evaluated as a diagram with `f` in the central box.
pub fn phi_apply(d: &HopfDatum, f: &LinMap) -> Result<LinMap> {
    PhiEngine::new(d)?.apply(f)
}

/// Φ and `P: f ↦ π∘f∘π` as exact matrices on End(V), `V = B1⊗B2⊗B1⊗B2`.
///
/// An endomorphism `g` is flattened row-major: entry `g[i][c]` sits at index
/// `i·D + c`, so column `k·D + k'` of the superoperator is the image of the
/// matrix unit `E_{k,k'}`.
pub struct PhiSuperoperator {
    dim_v: usize,
    t: Vec<SparseVec>,
    pi: LinMap,
    pi_rows: Vec<SparseVec>,
}

/// `π = η1ε1 ⊗ id ⊗ id ⊗ η2ε2`.
pub fn projector(d: &HopfDatum) -> Result<LinMap> {
    let e1 = crate::tensor::compose(&d.b1.eta, &d.b1.eps)?;
    let e2 = crate::tensor::compose(&d.b2.eta, &d.b2.eps)?;
    Ok(crate::tensor::tensor_all(&[
        &e1,
        &d.b2.identity(),
        &d.b1.identity(),
        &e2,
    ]))
}

impl PhiSuperoperator {
    pub fn build(d: &HopfDatum) -> Result<Self> {
        let engine = PhiEngine::new(d)?;
        let dv = total_dim(&engine.v);
        let rd = total_dim(&engine.r);
        let pre = engine.pre()?;
        let post = engine.post()?;
        let pre_cols: Vec<SparseVec> = (0..dv)
            .into_par_iter()
            .map(|c| pre.apply_basis(c))
            .collect();
        // index the splitting by the middle basis vector fed into f
        let mut by_mid: Vec<Vec<(usize, usize, usize, Scalar)>> = vec![Vec::new(); dv];
        let mut keys = Vec::new();
        for (c, col) in pre_cols.into_iter().enumerate() {
            for (key, coeff) in col {
                let (l, m, r) = (key / (dv * rd), (key / rd) % dv, key % rd);
                by_mid[m].push((c, l, r, coeff));
                keys.push((l, r));
            }
        }
        keys.sort_unstable();
        keys.dedup();
        let cache: HashMap<(usize, usize), Vec<SparseVec>> = keys
            .into_par_iter()
            .map(|(l, r)| {
                let outs = (0..dv)
                    .map(|k| post.apply_basis((l * dv + k) * rd + r))
                    .collect();
                ((l, r), outs)
            })
            .collect();
        let t: Vec<SparseVec> = (0..dv * dv)
            .into_par_iter()
            .map(|col| {
                let (k, k2) = (col / dv, col % dv);
                let mut acc = Accumulator::new();
                for (c, l, r, coeff) in &by_mid[k2] {
                    for (i, x) in &cache[&(*l, *r)][k] {
                        acc.add(i * dv + c, coeff * x);
                    }
                }
                acc.finish()
            })
            .collect();
        let pi = projector(d)?;
        let pi_rows = pi.transpose().columns().to_vec();
        Ok(PhiSuperoperator {
            dim_v: dv,
            t,
            pi,
            pi_rows,
        })
    }

    /// Dimension D of V; the superoperator acts on a space of dimension D².
    pub fn dim_v(&self) -> usize {
        self.dim_v
    }

    pub fn column(&self, j: usize) -> &[(usize, Scalar)] {
        &self.t[j]
    }

    pub fn projector(&self) -> &LinMap {
        &self.pi
    }

    /// Φ as a matrix on a space labeled `End` of dimension D².
    pub fn as_linmap(&self) -> LinMap {
        let e = SpaceLabel::new("End", self.dim_v * self.dim_v);
        LinMap::from_columns(vec![e.clone()], vec![e], self.t.clone()).expect("valid columns")
    }

    pub fn flatten(&self, g: &LinMap) -> SparseVec {
        let mut out = Vec::new();
        for (c, col) in g.columns().iter().enumerate() {
            for (i, x) in col {
                out.push((i * self.dim_v + c, x.clone()));
            }
        }
        out.sort_unstable_by_key(|e| e.0);
        out
    }

    pub fn unflatten(&self, v: &[(usize, Scalar)], strands: &[SpaceLabel]) -> LinMap {
        let mut cols = vec![Vec::new(); self.dim_v];
        for (j, x) in v {
            cols[j % self.dim_v].push((j / self.dim_v, x.clone()));
        }
        LinMap::from_columns(strands.to_vec(), strands.to_vec(), cols).expect("valid columns")
    }

    pub fn apply(&self, v: &[(usize, Scalar)]) -> SparseVec {
        let mut acc = Accumulator::new();
        for (j, x) in v {
            acc.add_scaled(&self.t[*j], x);
        }
        acc.finish()
    }

    /// Column `k·D + k'` of P, i.e. `π E_{k,k'} π`.
    pub fn p_column(&self, j: usize) -> SparseVec {
        let (k, k2) = (j / self.dim_v, j % self.dim_v);
        let mut acc = Accumulator::new();
        for (i, a) in self.pi.column(k) {
            for (c, b) in &self.pi_rows[k2] {
                acc.add(i * self.dim_v + c, a * b);
            }
        }
        acc.finish()
    }

    pub fn project(&self, v: &[(usize, Scalar)]) -> SparseVec {
        let mut acc = Accumulator::new();
        for (j, x) in v {
            acc.add_scaled(&self.p_column(*j), x);
        }
        acc.finish()
    }

    /// `P² = P` checked column by column.
    pub fn projector_idempotent(&self) -> bool {
        (0..self.dim_v * self.dim_v).into_par_iter().all(|j| {
            let p = self.p_column(j);
            self.project(&p) == p
        })
    }

    /// `P∘Φ = P`, i.e. `π∘Φ(f)∘π = π∘f∘π` for every f.
    pub fn projection_invariant(&self) -> bool {
        (0..self.dim_v * self.dim_v)
            .into_par_iter()
            .all(|j| self.project(&self.t[j]) == self.p_column(j))
    }

    fn span_images(&self, basis: &[SparseVec]) -> Echelon {
        let images: Vec<SparseVec> = basis.par_iter().map(|v| self.apply(v)).collect();
        let mut e = Echelon::new();
        for v in images {
            e.insert(v);
        }
        e
    }

    /// Dimensions of `Φ^j(ker P)` for `j = 1, 2, …` until it vanishes or
    /// `n_max` is reached.
    fn kernel_orbit(&self, n_max: usize) -> Vec<usize> {
        let n = self.dim_v * self.dim_v;
        let first: Vec<SparseVec> = (0..n)
            .into_par_iter()
            .map(|j| {
                let mut acc = Accumulator::new();
                acc.add_scaled(&self.t[j], &Scalar::one());
                for (a, x) in self.p_column(j) {
                    acc.add_scaled(&self.t[a], &-&x);
                }
                acc.finish()
            })
            .collect();
        let mut e = Echelon::new();
        for v in first {
            e.insert(v);
        }
        let mut dims = vec![e.rank()];
        while e.rank() > 0 && dims.len() < n_max {
            e = self.span_images(&e.basis());
            dims.push(e.rank());
        }
        dims
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum RecursionOrder {
    Order(usize),
    NotRecursiveUpTo(usize),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OrderReport {
    pub result: RecursionOrder,
    /// `dim Φ^j(ker P)` for `j = 1, 2, …`.
    pub orbit_dims: Vec<usize>,
    pub projector_idempotent: bool,
    pub projection_invariant: bool,
    /// `Φ^{n+1} = Φ^n` at the computed order.
    pub stabilizes: Option<bool>,
}

impl OrderReport {
    pub fn order(&self) -> Option<usize> {
        match self.result {
            RecursionOrder::Order(n) => Some(n),
            RecursionOrder::NotRecursiveUpTo(_) => None,
        }
    }
}

/// Least `n ≤ n_max` with `Φ^n∘(Id − P) = 0`.
pub fn recursion_order(d: &HopfDatum, n_max: usize) -> Result<OrderReport> {
    let report = check_hopf_datum(d)?;
    if !report.passed() {
        return Err(Error::Precondition(format!(
            "not a Hopf datum: {}",
            report.failure_summary()
        )));
    }
    let sup = PhiSuperoperator::build(d)?;
    Ok(order_of(&sup, n_max))
}

pub fn order_of(sup: &PhiSuperoperator, n_max: usize) -> OrderReport {
    let projector_idempotent = sup.projector_idempotent();
    let projection_invariant = sup.projection_invariant();
    let n = sup.dim_v * sup.dim_v;
    let trivial = sup.pi == LinMap::identity(sup.pi.dom());
    let (result, orbit_dims) = if trivial {
        (RecursionOrder::Order(0), vec![])
    } else {
        let dims = sup.kernel_orbit(n_max);
        match dims.iter().position(|&r| r == 0) {
            Some(p) => (RecursionOrder::Order(p + 1), dims),
            None => (RecursionOrder::NotRecursiveUpTo(n_max), dims),
        }
    };
    let stabilizes = match result {
        RecursionOrder::Order(k) => {
            // Φ^k already kills ker P; compare Φ^{k+1} and Φ^k on a basis of im P
            let mut e = Echelon::new();
            for j in 0..n {
                e.insert(sup.p_column(j));
            }
            let ok = e.basis().par_iter().all(|y| {
                let mut cur = y.clone();
                for _ in 0..k {
                    cur = sup.apply(&cur);
                }
                sup.apply(&cur) == cur
            });
            Some(ok)
        }
        RecursionOrder::NotRecursiveUpTo(_) => None,
    };
    OrderReport {
        result,
        orbit_dims,
        projector_idempotent,
        projection_invariant,
        stabilizes,
    }
}
