use std::fmt;

use serde::de::{self, Deserializer};
use serde::ser::{SerializeStruct, Serializer};
use serde::{Deserialize, Serialize};

use super::space::{describe, split_index, total_dim, SpaceLabel};
use super::sparse::{Accumulator, SparseVec};
use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Exact linear map between tensor products of labeled spaces.
///
/// The matrix has `total_dim(cod)` rows and `total_dim(dom)` columns. Basis
/// vectors of a tensor product are ordered lexicographically with the
/// leftmost factor most significant. Storage is by sparse columns; the
/// dense row-major view is available through [`LinMap::rows`].
#[derive(Clone, PartialEq, Eq)]
pub struct LinMap {
    dom: Vec<SpaceLabel>,
    cod: Vec<SpaceLabel>,
    cols: Vec<SparseVec>,
}

/// First entry where two maps with the same boundary differ.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mismatch {
    pub row: usize,
    pub col: usize,
    pub left: Scalar,
    pub right: Scalar,
}

impl LinMap {
    /// Builds a map from sparse columns; entries must be in range.
    pub fn from_columns(
        dom: Vec<SpaceLabel>,
        cod: Vec<SpaceLabel>,
        cols: Vec<SparseVec>,
    ) -> Result<Self> {
        let (r, c) = (total_dim(&cod), total_dim(&dom));
        if cols.len() != c {
            return Err(Error::shape(
                format!("{c} columns"),
                format!("{} columns", cols.len()),
            ));
        }
        let mut clean = Vec::with_capacity(c);
        for col in cols {
            let mut acc = Accumulator::new();
            for (i, x) in col {
                if i >= r {
                    return Err(Error::shape(format!("row index < {r}"), i));
                }
                acc.add(i, x);
            }
            clean.push(acc.finish());
        }
        Ok(LinMap {
            dom,
            cod,
            cols: clean,
        })
    }

    pub(crate) fn from_columns_unchecked(
        dom: Vec<SpaceLabel>,
        cod: Vec<SpaceLabel>,
        cols: Vec<SparseVec>,
    ) -> Self {
        debug_assert_eq!(cols.len(), total_dim(&dom));
        LinMap { dom, cod, cols }
    }

    /// Builds a map from a dense row-major matrix.
    pub fn from_rows(
        dom: Vec<SpaceLabel>,
        cod: Vec<SpaceLabel>,
        rows: Vec<Vec<Scalar>>,
    ) -> Result<Self> {
        let (r, c) = (total_dim(&cod), total_dim(&dom));
        if rows.len() != r || rows.iter().any(|row| row.len() != c) {
            return Err(Error::shape(
                format!(
                    "{r}x{c} matrix for {} -> {}",
                    describe(&dom),
                    describe(&cod)
                ),
                format!("{}x{}", rows.len(), rows.first().map_or(0, Vec::len)),
            ));
        }
        let mut cols = vec![Vec::new(); c];
        for (i, row) in rows.into_iter().enumerate() {
            for (j, x) in row.into_iter().enumerate() {
                if !x.is_zero() {
                    cols[j].push((i, x));
                }
            }
        }
        Ok(LinMap { dom, cod, cols })
    }

    /// Builds a map entrywise from `f(row, col)`.
    pub fn from_fn(
        dom: Vec<SpaceLabel>,
        cod: Vec<SpaceLabel>,
        mut f: impl FnMut(usize, usize) -> Scalar,
    ) -> Self {
        let (r, c) = (total_dim(&cod), total_dim(&dom));
        let cols = (0..c)
            .map(|j| {
                (0..r)
                    .filter_map(|i| {
                        let x = f(i, j);
                        (!x.is_zero()).then_some((i, x))
                    })
                    .collect()
            })
            .collect();
        LinMap { dom, cod, cols }
    }

    /// Builds a map by giving the image of every basis vector of the domain
    /// as a list of `(row, value)` contributions.
    pub fn from_images(
        dom: Vec<SpaceLabel>,
        cod: Vec<SpaceLabel>,
        mut image: impl FnMut(usize) -> Vec<(usize, Scalar)>,
    ) -> Result<Self> {
        let c = total_dim(&dom);
        let cols = (0..c).map(&mut image).collect();
        LinMap::from_columns(dom, cod, cols)
    }

    pub fn identity(spaces: &[SpaceLabel]) -> Self {
        let n = total_dim(spaces);
        LinMap {
            dom: spaces.to_vec(),
            cod: spaces.to_vec(),
            cols: (0..n).map(|i| vec![(i, Scalar::one())]).collect(),
        }
    }

    pub fn zero(dom: &[SpaceLabel], cod: &[SpaceLabel]) -> Self {
        LinMap {
            dom: dom.to_vec(),
            cod: cod.to_vec(),
            cols: vec![Vec::new(); total_dim(dom)],
        }
    }

    /// The scalar `c` as a map k → k.
    pub fn scalar(c: Scalar) -> Self {
        let col = if c.is_zero() { vec![] } else { vec![(0, c)] };
        LinMap {
            dom: vec![],
            cod: vec![],
            cols: vec![col],
        }
    }

    pub fn dom(&self) -> &[SpaceLabel] {
        &self.dom
    }

    pub fn cod(&self) -> &[SpaceLabel] {
        &self.cod
    }

    pub fn nrows(&self) -> usize {
        total_dim(&self.cod)
    }

    pub fn ncols(&self) -> usize {
        self.cols.len()
    }

    pub fn column(&self, j: usize) -> &[(usize, Scalar)] {
        &self.cols[j]
    }

    pub fn columns(&self) -> &[SparseVec] {
        &self.cols
    }

    pub fn entry(&self, i: usize, j: usize) -> Scalar {
        self.cols[j]
            .binary_search_by_key(&i, |(r, _)| *r)
            .map(|k| self.cols[j][k].1.clone())
            .unwrap_or_else(|_| Scalar::zero())
    }

    /// Dense row-major matrix.
    pub fn rows(&self) -> Vec<Vec<Scalar>> {
        let mut rows = vec![vec![Scalar::zero(); self.ncols()]; self.nrows()];
        for (j, col) in self.cols.iter().enumerate() {
            for (i, x) in col {
                rows[*i][j] = x.clone();
            }
        }
        rows
    }

    pub fn nnz(&self) -> usize {
        self.cols.iter().map(Vec::len).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.cols.iter().all(Vec::is_empty)
    }

    /// Same matrix with new boundary labels of equal total dimension.
    pub fn relabel(&self, dom: Vec<SpaceLabel>, cod: Vec<SpaceLabel>) -> Result<Self> {
        if total_dim(&dom) != total_dim(&self.dom) || total_dim(&cod) != total_dim(&self.cod) {
            return Err(Error::shape(
                format!("{} -> {}", describe(&self.dom), describe(&self.cod)),
                format!("{} -> {}", describe(&dom), describe(&cod)),
            ));
        }
        Ok(LinMap {
            dom,
            cod,
            cols: self.cols.clone(),
        })
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        if c.is_zero() {
            return LinMap::zero(&self.dom, &self.cod);
        }
        LinMap {
            dom: self.dom.clone(),
            cod: self.cod.clone(),
            cols: self
                .cols
                .iter()
                .map(|col| col.iter().map(|(i, x)| (*i, x * c)).collect())
                .collect(),
        }
    }

    fn same_boundary(&self, other: &LinMap) -> Result<()> {
        if self.dom != other.dom || self.cod != other.cod {
            return Err(Error::shape(
                format!("{} -> {}", describe(&self.dom), describe(&self.cod)),
                format!("{} -> {}", describe(&other.dom), describe(&other.cod)),
            ));
        }
        Ok(())
    }

    pub fn add(&self, other: &LinMap) -> Result<Self> {
        self.same_boundary(other)?;
        Ok(LinMap {
            dom: self.dom.clone(),
            cod: self.cod.clone(),
            cols: self
                .cols
                .iter()
                .zip(&other.cols)
                .map(|(a, b)| super::sparse::axpy(a, &Scalar::one(), b))
                .collect(),
        })
    }

    pub fn sub(&self, other: &LinMap) -> Result<Self> {
        self.add(&other.scale(&Scalar::int(-1)))
    }

    /// First differing entry in column-major scan order, or `None` if equal.
    pub fn first_mismatch(&self, other: &LinMap) -> Result<Option<Mismatch>> {
        self.same_boundary(other)?;
        for (j, (a, b)) in self.cols.iter().zip(&other.cols).enumerate() {
            if a == b {
                continue;
            }
            let (mut p, mut q) = (0, 0);
            loop {
                let ia = a.get(p).map(|e| e.0);
                let ib = b.get(q).map(|e| e.0);
                match (ia, ib) {
                    (Some(x), Some(y)) if x == y => {
                        if a[p].1 != b[q].1 {
                            return Ok(Some(Mismatch {
                                row: x,
                                col: j,
                                left: a[p].1.clone(),
                                right: b[q].1.clone(),
                            }));
                        }
                        p += 1;
                        q += 1;
                    }
                    (Some(x), y) if y.is_none_or(|y| x < y) => {
                        return Ok(Some(Mismatch {
                            row: x,
                            col: j,
                            left: a[p].1.clone(),
                            right: Scalar::zero(),
                        }));
                    }
                    (_, Some(y)) => {
                        return Ok(Some(Mismatch {
                            row: y,
                            col: j,
                            left: Scalar::zero(),
                            right: b[q].1.clone(),
                        }));
                    }
                    _ => break,
                }
            }
        }
        Ok(None)
    }

    /// Applies the map to a sparse vector of the domain.
    pub fn apply(&self, v: &[(usize, Scalar)]) -> SparseVec {
        let mut acc = Accumulator::new();
        for (j, x) in v {
            acc.add_scaled(&self.cols[*j], x);
        }
        acc.finish()
    }

    /// Transposed matrix with domain and codomain exchanged.
    pub fn transpose(&self) -> Self {
        let mut cols = vec![Vec::new(); self.nrows()];
        for (j, col) in self.cols.iter().enumerate() {
            for (i, x) in col {
                cols[*i].push((j, x.clone()));
            }
        }
        LinMap {
            dom: self.cod.clone(),
            cod: self.dom.clone(),
            cols,
        }
    }

    /// Splits a column index into per-factor basis digits of the domain.
    pub fn dom_digits(&self, j: usize) -> Vec<usize> {
        split_index(&self.dom, j)
    }

    pub fn cod_digits(&self, i: usize) -> Vec<usize> {
        split_index(&self.cod, i)
    }
}

/// `g ∘ f`; requires `f.cod == g.dom`.
pub fn compose(g: &LinMap, f: &LinMap) -> Result<LinMap> {
    if f.cod != g.dom {
        return Err(Error::shape(
            format!("inner codomain {} to match", describe(&f.cod)),
            format!("outer domain {}", describe(&g.dom)),
        ));
    }
    let cols = f.cols.iter().map(|col| g.apply(col)).collect();
    Ok(LinMap::from_columns_unchecked(
        f.dom.clone(),
        g.cod.clone(),
        cols,
    ))
}

/// Kronecker product `f ⊗ g`.
pub fn tensor(f: &LinMap, g: &LinMap) -> LinMap {
    let gr = g.nrows();
    let mut cols = Vec::with_capacity(f.ncols() * g.ncols());
    for fc in &f.cols {
        for gc in &g.cols {
            let mut col = Vec::with_capacity(fc.len() * gc.len());
            for (i, a) in fc {
                for (k, b) in gc {
                    col.push((i * gr + k, a * b));
                }
            }
            cols.push(col);
        }
    }
    let mut dom = f.dom.clone();
    dom.extend(g.dom.iter().cloned());
    let mut cod = f.cod.clone();
    cod.extend(g.cod.iter().cloned());
    LinMap::from_columns_unchecked(dom, cod, cols)
}

/// Tensor product of a list of maps, left to right.
pub fn tensor_all(maps: &[&LinMap]) -> LinMap {
    maps.iter()
        .fold(LinMap::scalar(Scalar::one()), |acc, m| tensor(&acc, m))
}

/// Basis permutation sending `x_0 ⊗ … ⊗ x_{n−1}` to
/// `x_{perm[0]} ⊗ … ⊗ x_{perm[n−1]}`.
pub fn permutation(spaces: &[SpaceLabel], perm: &[usize]) -> Result<LinMap> {
    let n = spaces.len();
    let mut seen = vec![false; n];
    if perm.len() != n
        || perm
            .iter()
            .any(|&p| p >= n || std::mem::replace(&mut seen[p], true))
    {
        return Err(Error::Domain(format!(
            "{perm:?} is not a permutation of {n} positions"
        )));
    }
    let cod: Vec<SpaceLabel> = perm.iter().map(|&p| spaces[p].clone()).collect();
    let cols = (0..total_dim(spaces))
        .map(|j| {
            let d = split_index(spaces, j);
            let out: Vec<usize> = perm.iter().map(|&p| d[p]).collect();
            vec![(super::space::join_index(&cod, &out), Scalar::one())]
        })
        .collect();
    Ok(LinMap::from_columns_unchecked(spaces.to_vec(), cod, cols))
}

/// The symmetric flip `X ⊗ Y → Y ⊗ X` of two groups of factors.
pub fn flip(xs: &[SpaceLabel], ys: &[SpaceLabel]) -> LinMap {
    let mut spaces = xs.to_vec();
    spaces.extend(ys.iter().cloned());
    let (a, b) = (xs.len(), ys.len());
    let perm: Vec<usize> = (a..a + b).chain(0..a).collect();
    permutation(&spaces, &perm).expect("valid block permutation")
}

/// Exact two-sided inverse by Gauss–Jordan elimination.
pub fn invert(f: &LinMap) -> Result<LinMap> {
    let n = f.nrows();
    if n != f.ncols() {
        return Err(Error::shape(
            "square matrix",
            format!("{}x{}", n, f.ncols()),
        ));
    }
    let mut a = f.rows();
    let mut inv: Vec<Vec<Scalar>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    if i == j {
                        Scalar::one()
                    } else {
                        Scalar::zero()
                    }
                })
                .collect()
        })
        .collect();
    let mut rank = 0;
    for col in 0..n {
        let Some(piv) = (rank..n).find(|&r| !a[r][col].is_zero()) else {
            continue;
        };
        a.swap(rank, piv);
        inv.swap(rank, piv);
        let p = a[rank][col].inv().expect("nonzero pivot");
        for x in a[rank].iter_mut().chain(inv[rank].iter_mut()) {
            if !x.is_zero() {
                *x = &*x * &p;
            }
        }
        for r in 0..n {
            if r == rank || a[r][col].is_zero() {
                continue;
            }
            let c = a[r][col].clone();
            for k in 0..n {
                if !a[rank][k].is_zero() {
                    let t = &a[rank][k] * &c;
                    a[r][k] = &a[r][k] - &t;
                }
                if !inv[rank][k].is_zero() {
                    let t = &inv[rank][k] * &c;
                    inv[r][k] = &inv[r][k] - &t;
                }
            }
        }
        rank += 1;
    }
    if rank < n {
        return Err(Error::NonInvertible { rank, size: n });
    }
    LinMap::from_rows(f.cod.clone(), f.dom.clone(), inv)
}

/// Rank of the matrix.
pub fn rank(f: &LinMap) -> usize {
    let mut e = super::sparse::Echelon::new();
    for c in f.columns() {
        e.insert(c.clone());
    }
    e.rank()
}

impl fmt::Debug for LinMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "LinMap {} -> {}",
            describe(&self.dom),
            describe(&self.cod)
        )?;
        for row in self.rows() {
            let cells: Vec<String> = row.iter().map(|x| x.to_string()).collect();
            writeln!(f, "  [{}]", cells.join(", "))?;
        }
        Ok(())
    }
}

fn label_names(spaces: &[SpaceLabel]) -> Vec<String> {
    spaces.iter().map(|s| s.name.clone()).collect()
}

impl Serialize for LinMap {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("LinMap", 3)?;
        st.serialize_field("cod", &label_names(&self.cod))?;
        st.serialize_field("dom", &label_names(&self.dom))?;
        st.serialize_field("matrix", &self.rows())?;
        st.end()
    }
}

/// JSON form of a map whose labels are resolved against a space table.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct LinMapWire {
    pub dom: Vec<String>,
    pub cod: Vec<String>,
    pub matrix: Vec<Vec<Scalar>>,
}

impl From<&LinMap> for LinMapWire {
    fn from(m: &LinMap) -> Self {
        LinMapWire {
            dom: label_names(&m.dom),
            cod: label_names(&m.cod),
            matrix: m.rows(),
        }
    }
}

impl LinMapWire {
    pub fn resolve(self, lookup: impl Fn(&str) -> Option<SpaceLabel>) -> Result<LinMap> {
        let find = |names: &[String]| -> Result<Vec<SpaceLabel>> {
            names
                .iter()
                .map(|n| {
                    lookup(n).ok_or_else(|| Error::Configuration(format!("unknown space `{n}`")))
                })
                .collect()
        };
        let dom = find(&self.dom)?;
        let cod = find(&self.cod)?;
        LinMap::from_rows(dom, cod, self.matrix)
    }
}

impl<'de> Deserialize<'de> for LinMap {
    /// Standalone decoding accepts labels of the form `name[dim]` or
    /// infers a single unnamed dimension from the matrix shape.
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let wire = LinMapWire::deserialize(d)?;
        let parse = |s: &str| -> Option<SpaceLabel> {
            let (name, rest) = s.split_once('[')?;
            let dim = rest.strip_suffix(']')?.parse().ok()?;
            Some(SpaceLabel::new(name, dim))
        };
        wire.resolve(parse).map_err(de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sp(name: &str, d: usize) -> SpaceLabel {
        SpaceLabel::new(name, d)
    }

    fn int_map(dom: Vec<SpaceLabel>, cod: Vec<SpaceLabel>, rows: &[&[i64]]) -> LinMap {
        LinMap::from_rows(
            dom,
            cod,
            rows.iter()
                .map(|r| r.iter().map(|&x| Scalar::int(x)).collect())
                .collect(),
        )
        .unwrap()
    }

    #[test]
    fn compose_identity_and_mismatch() {
        let x = sp("X", 2);
        let y = sp("Y", 3);
        let f = int_map(
            vec![x.clone()],
            vec![y.clone()],
            &[&[1, 2], &[0, 1], &[3, 0]],
        );
        assert_eq!(
            compose(&LinMap::identity(std::slice::from_ref(&y)), &f).unwrap(),
            f
        );
        let g = LinMap::identity(std::slice::from_ref(&x));
        assert!(matches!(compose(&g, &f), Err(Error::Shape { .. })));
    }

    #[test]
    fn flip_is_involution() {
        let x = sp("X", 2);
        let y = sp("Y", 3);
        let a = flip(std::slice::from_ref(&x), std::slice::from_ref(&y));
        let b = flip(std::slice::from_ref(&y), std::slice::from_ref(&x));
        assert_eq!(compose(&b, &a).unwrap(), LinMap::identity(&[x, y]));
    }

    #[test]
    fn tensor_shapes_and_interchange() {
        let x = sp("X", 2);
        let y = sp("Y", 3);
        let a = LinMap::identity(std::slice::from_ref(&x));
        let b = LinMap::identity(std::slice::from_ref(&y));
        assert_eq!(tensor(&a, &b), LinMap::identity(&[x.clone(), y.clone()]));
        let f = int_map(vec![x.clone()], vec![x.clone()], &[&[1, 2], &[3, 4]]);
        let g = int_map(
            vec![y.clone()],
            vec![y.clone()],
            &[&[1, 0, 2], &[0, 1, 0], &[5, 0, 1]],
        );
        let fg = tensor(&f, &g);
        assert_eq!((fg.nrows(), fg.ncols()), (6, 6));
        let l = compose(&tensor(&f, &b), &tensor(&a, &g)).unwrap();
        let r = compose(&tensor(&a, &g), &tensor(&f, &b)).unwrap();
        assert_eq!(l, fg);
        assert_eq!(r, fg);
    }

    #[test]
    fn permutations() {
        let s = vec![sp("A", 2), sp("B", 3), sp("C", 2)];
        assert_eq!(permutation(&s, &[0, 1, 2]).unwrap(), LinMap::identity(&s));
        let swap = permutation(&s[..2], &[1, 0]).unwrap();
        assert_eq!(swap, flip(&s[..1], &s[1..2]));
        let c1 = permutation(&s, &[1, 2, 0]).unwrap();
        let c2 = permutation(c1.cod(), &[1, 2, 0]).unwrap();
        let c3 = permutation(c2.cod(), &[1, 2, 0]).unwrap();
        let all = compose(&c3, &compose(&c2, &c1).unwrap()).unwrap();
        assert_eq!(all, LinMap::identity(&s));
        assert!(permutation(&s, &[0, 0, 1]).is_err());
    }

    #[test]
    fn inversion() {
        let x = sp("X", 2);
        let id = LinMap::identity(&[x.clone(), x.clone()]);
        assert_eq!(invert(&id).unwrap(), id);
        let fl = flip(std::slice::from_ref(&x), std::slice::from_ref(&x));
        assert_eq!(invert(&fl).unwrap(), fl);
        let z = LinMap::zero(std::slice::from_ref(&x), std::slice::from_ref(&x));
        assert_eq!(invert(&z), Err(Error::NonInvertible { rank: 0, size: 2 }));
        let f = int_map(vec![x.clone()], vec![x.clone()], &[&[2, 1], &[1, 1]]);
        let fi = invert(&f).unwrap();
        assert_eq!(compose(&fi, &f).unwrap(), LinMap::identity(&[x]));
    }

    #[test]
    fn mismatch_reporting() {
        let x = sp("X", 2);
        let f = int_map(vec![x.clone()], vec![x.clone()], &[&[1, 0], &[0, 1]]);
        let g = int_map(vec![x.clone()], vec![x.clone()], &[&[1, 0], &[0, 2]]);
        let m = f.first_mismatch(&g).unwrap().unwrap();
        assert_eq!((m.row, m.col), (1, 1));
        assert_eq!(m.left, Scalar::one());
        assert!(f.first_mismatch(&f).unwrap().is_none());
    }

    #[test]
    fn json_round_trip() {
        let x = sp("X", 2);
        let f = int_map(vec![x.clone()], vec![], &[&[1, -1]]);
        let s = serde_json::to_string(&f).unwrap();
        assert_eq!(s, r#"{"cod":[],"dom":["X"],"matrix":[["1","-1"]]}"#);
        let wire: LinMapWire = serde_json::from_str(&s).unwrap();
        let back = wire.resolve(|n| (n == "X").then(|| x.clone())).unwrap();
        assert_eq!(back, f);
    }
}
