//! Layered string diagrams evaluated on sparse tensors.
//!
//! A diagram starts from a list of input strands. Each layer is a row of
//! pieces read left to right; a piece either passes strands through
//! unchanged or applies a map to the consecutive strands it consumes. Only
//! the support of the propagated vectors is ever touched, so composites of
//! wide tensor powers stay cheap.

use std::collections::HashMap;

use rayon::prelude::*;

use super::linmap::LinMap;
use super::space::{describe, total_dim, SpaceLabel};
use super::sparse::SparseVec;
use crate::error::{Error, Result};
use crate::scalar::Scalar;

#[derive(Clone)]
pub enum Piece {
    /// Identity on the given number of strands.
    Id(usize),
    Map(LinMap),
}

pub fn id(n: usize) -> Piece {
    Piece::Id(n)
}

pub fn mp(m: &LinMap) -> Piece {
    Piece::Map(m.clone())
}

#[derive(Clone)]
struct Slot {
    /// Size of the consumed block and of the produced block.
    size_in: u64,
    size_out: u64,
    map: Option<LinMap>,
}

#[derive(Clone)]
struct Layer {
    slots: Vec<Slot>,
    /// Per slot: product of the input sizes to its right.
    in_strides: Vec<u64>,
    out_strides: Vec<u64>,
}

#[derive(Clone)]
pub struct Diagram {
    input: Vec<SpaceLabel>,
    strands: Vec<SpaceLabel>,
    layers: Vec<Layer>,
}

fn checked_dim(spaces: &[SpaceLabel]) -> Result<u64> {
    spaces.iter().try_fold(1u64, |acc, s| {
        acc.checked_mul(s.dim as u64)
            .ok_or_else(|| Error::Domain("diagram layer too wide to index".into()))
    })
}

impl Diagram {
    pub fn new(input: &[SpaceLabel]) -> Self {
        Diagram {
            input: input.to_vec(),
            strands: input.to_vec(),
            layers: Vec::new(),
        }
    }

    pub fn input(&self) -> &[SpaceLabel] {
        &self.input
    }

    pub fn output(&self) -> &[SpaceLabel] {
        &self.strands
    }

    /// Appends a layer; the pieces must consume exactly the current strands.
    pub fn then(mut self, pieces: Vec<Piece>) -> Result<Self> {
        let mut pos = 0;
        let mut slots = Vec::new();
        let mut next = Vec::new();
        for piece in pieces {
            match piece {
                Piece::Id(0) => {}
                Piece::Id(n) => {
                    let block = self.strands.get(pos..pos + n).ok_or_else(|| {
                        Error::shape(
                            format!("{n} more strands"),
                            describe(&self.strands[pos.min(self.strands.len())..]),
                        )
                    })?;
                    let size = checked_dim(block)?;
                    next.extend(block.iter().cloned());
                    slots.push(Slot {
                        size_in: size,
                        size_out: size,
                        map: None,
                    });
                    pos += n;
                }
                Piece::Map(m) => {
                    let w = m.dom().len();
                    let block = self.strands.get(pos..pos + w);
                    if block != Some(m.dom()) {
                        return Err(Error::shape(
                            format!("strands {} at position {pos}", describe(m.dom())),
                            describe(&self.strands[pos.min(self.strands.len())..]),
                        ));
                    }
                    next.extend(m.cod().iter().cloned());
                    slots.push(Slot {
                        size_in: total_dim(m.dom()) as u64,
                        size_out: total_dim(m.cod()) as u64,
                        map: Some(m),
                    });
                    pos += w;
                }
            }
        }
        if pos != self.strands.len() {
            return Err(Error::shape(
                format!("layer consuming all of {}", describe(&self.strands)),
                format!("{pos} strands consumed"),
            ));
        }
        checked_dim(&next)?;
        let mut in_strides = vec![1u64; slots.len()];
        let mut out_strides = vec![1u64; slots.len()];
        for k in (0..slots.len().saturating_sub(1)).rev() {
            in_strides[k] = in_strides[k + 1] * slots[k + 1].size_in;
            out_strides[k] = out_strides[k + 1] * slots[k + 1].size_out;
        }
        self.layers.push(Layer {
            slots,
            in_strides,
            out_strides,
        });
        self.strands = next;
        Ok(self)
    }

    /// Appends a single map applied to all current strands.
    pub fn then_map(self, m: &LinMap) -> Result<Self> {
        self.then(vec![mp(m)])
    }

    fn apply_layer(layer: &Layer, v: HashMap<u64, Scalar>) -> HashMap<u64, Scalar> {
        let mut out: HashMap<u64, Scalar> = HashMap::with_capacity(v.len());
        let mut cur: Vec<(u64, Scalar)> = Vec::new();
        let mut nxt: Vec<(u64, Scalar)> = Vec::new();
        for (key, coeff) in v {
            cur.clear();
            cur.push((0, coeff));
            for (k, slot) in layer.slots.iter().enumerate() {
                let sub = (key / layer.in_strides[k]) % slot.size_in;
                let stride = layer.out_strides[k];
                match &slot.map {
                    None => {
                        for e in cur.iter_mut() {
                            e.0 += sub * stride;
                        }
                    }
                    Some(m) => {
                        let col = m.column(sub as usize);
                        if col.is_empty() {
                            cur.clear();
                            break;
                        }
                        nxt.clear();
                        for (base, c) in &cur {
                            for (row, x) in col {
                                let val = if x.is_one() { c.clone() } else { c * x };
                                nxt.push((base + *row as u64 * stride, val));
                            }
                        }
                        std::mem::swap(&mut cur, &mut nxt);
                    }
                }
            }
            for (k, c) in cur.drain(..) {
                match out.entry(k) {
                    std::collections::hash_map::Entry::Occupied(mut e) => {
                        let s = e.get() + &c;
                        *e.get_mut() = s;
                    }
                    std::collections::hash_map::Entry::Vacant(e) => {
                        e.insert(c);
                    }
                }
            }
        }
        out.retain(|_, c| !c.is_zero());
        out
    }

    /// Evaluates the diagram on a sparse input vector.
    pub fn apply(&self, v: &[(usize, Scalar)]) -> SparseVec {
        let mut cur: HashMap<u64, Scalar> = v.iter().map(|(i, x)| (*i as u64, x.clone())).collect();
        for layer in &self.layers {
            if cur.is_empty() {
                break;
            }
            cur = Self::apply_layer(layer, cur);
        }
        let mut out: SparseVec = cur.into_iter().map(|(k, x)| (k as usize, x)).collect();
        out.sort_unstable_by_key(|e| e.0);
        out
    }

    pub fn apply_basis(&self, j: usize) -> SparseVec {
        self.apply(&[(j, Scalar::one())])
    }

    /// Evaluates the whole diagram as a linear map.
    pub fn eval(&self) -> LinMap {
        let n = total_dim(&self.input);
        let cols: Vec<SparseVec> = (0..n)
            .into_par_iter()
            .map(|j| self.apply_basis(j))
            .collect();
        LinMap::from_columns_unchecked(self.input.clone(), self.strands.clone(), cols)
    }
}

/// Evaluates a diagram given by its input strands and layers.
pub fn chain(input: &[SpaceLabel], layers: Vec<Vec<Piece>>) -> Result<LinMap> {
    let mut d = Diagram::new(input);
    for l in layers {
        d = d.then(l)?;
    }
    Ok(d.eval())
}
