//! Algebras given by a monomial basis whose products are scalar multiples
//! of basis monomials, with Hopf structure determined on generators.

use crate::error::{Error, Result};
use crate::scalar::Scalar;
use crate::structures::{BiunitalPair, HopfAlgebraData};
use crate::tensor::sparse::{Accumulator, SparseVec};
use crate::tensor::{LinMap, SpaceLabel};

/// Multiplication table `basis_i · basis_j = c · basis_k` (or zero).
pub(crate) struct MonomialAlgebra {
    pub dim: usize,
    pub unit: usize,
    table: Vec<Option<(usize, Scalar)>>,
}

/// A generator with its image under Δ (in `A⊗A`, index `i·dim + j`), ε
/// and S.
pub(crate) struct Generator {
    pub element: SparseVec,
    pub delta: SparseVec,
    pub eps: Scalar,
    pub antipode: SparseVec,
}

impl MonomialAlgebra {
    pub fn new(
        dim: usize,
        unit: usize,
        mut product: impl FnMut(usize, usize) -> Option<(usize, Scalar)>,
    ) -> Self {
        let mut table = Vec::with_capacity(dim * dim);
        for i in 0..dim {
            for j in 0..dim {
                table.push(product(i, j).filter(|(_, c)| !c.is_zero()));
            }
        }
        MonomialAlgebra { dim, unit, table }
    }

    pub fn basis(&self, i: usize) -> SparseVec {
        vec![(i, Scalar::one())]
    }

    pub fn mul(&self, a: &[(usize, Scalar)], b: &[(usize, Scalar)]) -> SparseVec {
        let mut acc = Accumulator::new();
        for (i, x) in a {
            for (j, y) in b {
                if let Some((k, c)) = &self.table[i * self.dim + j] {
                    acc.add(*k, &(x * y) * c);
                }
            }
        }
        acc.finish()
    }

    /// Product in the tensor square with the flip braiding.
    pub fn mul2(&self, a: &[(usize, Scalar)], b: &[(usize, Scalar)]) -> SparseVec {
        let d = self.dim;
        let mut acc = Accumulator::new();
        for (i, x) in a {
            for (j, y) in b {
                let (i1, i2, j1, j2) = (i / d, i % d, j / d, j % d);
                if let (Some((k1, c1)), Some((k2, c2))) =
                    (&self.table[i1 * d + j1], &self.table[i2 * d + j2])
                {
                    acc.add(k1 * d + k2, &(&(x * y) * c1) * c2);
                }
            }
        }
        acc.finish()
    }

    pub fn m_map(&self, s: &SpaceLabel) -> LinMap {
        let d = self.dim;
        let cols = (0..d * d)
            .map(|ij| match &self.table[ij] {
                Some((k, c)) => vec![(*k, c.clone())],
                None => vec![],
            })
            .collect();
        LinMap::from_columns(vec![s.clone(), s.clone()], vec![s.clone()], cols)
            .expect("table entries in range")
    }

    /// Hopf structure from generator data; `words[b]` expresses basis
    /// element `b` as a product of generators, which is verified.
    pub fn hopf(
        &self,
        s: &SpaceLabel,
        words: &[Vec<usize>],
        gens: &[Generator],
    ) -> Result<HopfAlgebraData> {
        let d = self.dim;
        let one = self.basis(self.unit);
        let one2 = vec![(self.unit * d + self.unit, Scalar::one())];
        let mut delta_cols = Vec::with_capacity(d);
        let mut eps_cols = Vec::with_capacity(d);
        let mut s_cols = Vec::with_capacity(d);
        for (b, word) in words.iter().enumerate() {
            let mut e = one.clone();
            let mut dl = one2.clone();
            let mut ep = Scalar::one();
            let mut an = one.clone();
            for &g in word {
                let gen = &gens[g];
                e = self.mul(&e, &gen.element);
                dl = self.mul2(&dl, &gen.delta);
                ep = &ep * &gen.eps;
                an = self.mul(&gen.antipode, &an);
            }
            if e != self.basis(b) {
                return Err(Error::InternalConsistency(format!(
                    "word for basis element {b} does not reproduce it"
                )));
            }
            delta_cols.push(dl);
            eps_cols.push(if ep.is_zero() { vec![] } else { vec![(0, ep)] });
            s_cols.push(an);
        }
        let ss = vec![s.clone()];
        let bi = BiunitalPair::new(
            s.clone(),
            self.m_map(s),
            LinMap::from_columns(vec![], ss.clone(), vec![one])?,
            LinMap::from_columns(ss.clone(), vec![s.clone(), s.clone()], delta_cols)?,
            LinMap::from_columns(ss.clone(), vec![], eps_cols)?,
        )?;
        HopfAlgebraData::new(bi, LinMap::from_columns(ss.clone(), ss, s_cols)?)
    }
}

/// `Σ c_ij e_i ⊗ e_j` as an element of `A⊗A`.
pub(crate) fn tensor_elem(d: usize, terms: &[(usize, usize, Scalar)]) -> SparseVec {
    let mut acc = Accumulator::new();
    for (i, j, c) in terms {
        acc.add(i * d + j, c.clone());
    }
    acc.finish()
}
