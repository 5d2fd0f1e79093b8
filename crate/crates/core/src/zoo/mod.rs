//! Concrete structures: group algebras and their duals, truncated
//! polynomial factors, Radford's four-parameter Hopf algebras, the
//! finite Ore-type Hopf algebras, and the small examples built from them.

mod normal_form;
mod pairs;

pub use pairs::*;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::cross::ProjectionSystem;
use crate::datum::HopfDatum;
use crate::error::{Error, Result};
use crate::scalar::{q_binomial, zeta_power, Scalar};
use crate::structures::{BiunitalPair, HopfAlgebraData};
use crate::tensor::{BraidingProvider, LinMap, SpaceLabel};
use normal_form::{tensor_elem, Generator, MonomialAlgebra};

/// A Hopf algebra together with a projection system splitting it and the
/// Hopf datum of that splitting.
#[derive(Clone, Debug)]
pub struct SplitHopf {
    pub h: HopfAlgebraData,
    pub system: ProjectionSystem,
    pub datum: HopfDatum,
}

fn one() -> Scalar {
    Scalar::one()
}

fn unit_vec(i: usize) -> Vec<(usize, Scalar)> {
    vec![(i, one())]
}

/// Label of the group algebra of `C_N`.
pub fn group_label(n: usize) -> SpaceLabel {
    SpaceLabel::new(format!("kC{n}"), n)
}

/// The group Hopf algebra `kC_N` with basis `g^0, …, g^{N−1}`.
pub fn group_algebra(n: usize) -> Result<HopfAlgebraData> {
    if n == 0 {
        return Err(Error::Parameter("group order must be positive".into()));
    }
    let s = group_label(n);
    let alg = MonomialAlgebra::new(n, 0, |a, b| Some(((a + b) % n, one())));
    let g = 1 % n;
    let gen = Generator {
        element: unit_vec(g),
        delta: tensor_elem(n, &[(g, g, one())]),
        eps: one(),
        antipode: unit_vec((n - g) % n),
    };
    let words: Vec<Vec<usize>> = (0..n).map(|l| vec![0; l]).collect();
    alg.hopf(&s, &words, &[gen])
}

/// Functions on `C_N` with basis of point indicators `e_0, …, e_{N−1}`,
/// pointwise product and `Δ(e_a) = Σ_b e_b ⊗ e_{a−b}`.
pub fn dual_group_algebra(n: usize) -> Result<HopfAlgebraData> {
    if n == 0 {
        return Err(Error::Parameter("group order must be positive".into()));
    }
    let s = SpaceLabel::new(format!("k^C{n}"), n);
    let ss = vec![s.clone()];
    let s2 = vec![s.clone(), s.clone()];
    let m = LinMap::from_images(s2.clone(), ss.clone(), |ab| {
        let (a, b) = (ab / n, ab % n);
        if a == b {
            unit_vec(a)
        } else {
            vec![]
        }
    })?;
    let eta = LinMap::from_columns(
        vec![],
        ss.clone(),
        vec![(0..n).map(|a| (a, one())).collect()],
    )?;
    let delta = LinMap::from_images(ss.clone(), s2, |a| {
        (0..n).map(|b| (b * n + (a + n - b) % n, one())).collect()
    })?;
    let eps = LinMap::from_images(ss.clone(), vec![], |a| {
        if a == 0 {
            unit_vec(0)
        } else {
            vec![]
        }
    })?;
    let antipode = LinMap::from_images(ss.clone(), ss, |a| unit_vec((n - a) % n))?;
    HopfAlgebraData::new(BiunitalPair::new(s, m, eta, delta, eps)?, antipode)
}

/// The truncated polynomial algebra `k⟨x⟩/(x^r)` with
/// `Δ(x^m) = Σ_l (m choose l)_p x^l ⊗ x^{m−l}` and `ε(x^m) = δ_{m,0}`.
pub fn taft_factor(r: usize, p: &Scalar) -> Result<BiunitalPair> {
    if r == 0 {
        return Err(Error::Parameter(
            "truncation degree must be positive".into(),
        ));
    }
    if p.multiplicative_order(r as u64) != Some(r as u64) {
        return Err(Error::Parameter(format!(
            "{p} is not a primitive {r}-th root of unity"
        )));
    }
    let s = SpaceLabel::new(format!("X{r}"), r);
    let ss = vec![s.clone()];
    let s2 = vec![s.clone(), s.clone()];
    let m = LinMap::from_images(s2.clone(), ss.clone(), |ab| {
        let (a, b) = (ab / r, ab % r);
        if a + b < r {
            unit_vec(a + b)
        } else {
            vec![]
        }
    })?;
    let eta = LinMap::from_columns(vec![], ss.clone(), vec![unit_vec(0)])?;
    let mut cols = Vec::with_capacity(r);
    for mm in 0..r {
        let mut col = Vec::new();
        for l in 0..=mm {
            col.push((l * r + (mm - l), q_binomial(mm, l, p)?));
        }
        cols.push(col);
    }
    let delta = LinMap::from_columns(ss.clone(), s2, cols)?;
    let eps = LinMap::from_images(ss, vec![], |a| if a == 0 { unit_vec(0) } else { vec![] })?;
    BiunitalPair::new(s, m, eta, delta, eps)
}

/// Parameters of Radford's Hopf algebra `H_{n,q,N,ν}` with `q = ζ_n^{q_exponent}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RadfordParams {
    pub n: u32,
    pub q_exponent: i64,
    #[serde(rename = "N")]
    pub big_n: u32,
    pub nu: u32,
}

impl RadfordParams {
    pub fn new(n: u32, q_exponent: i64, big_n: u32, nu: u32) -> Self {
        RadfordParams {
            n,
            q_exponent,
            big_n,
            nu,
        }
    }

    pub fn validate(&self) -> Result<()> {
        let RadfordParams {
            n,
            q_exponent,
            big_n,
            nu,
        } = *self;
        if n == 0 || big_n == 0 || nu == 0 {
            return Err(Error::Parameter("n, N and ν must be positive".into()));
        }
        if big_n % n != 0 {
            return Err(Error::Parameter(format!(
                "n = {n} does not divide N = {big_n}"
            )));
        }
        if nu >= n {
            return Err(Error::Parameter(format!(
                "ν = {nu} must be smaller than n = {n}"
            )));
        }
        if q_exponent.rem_euclid(n as i64).gcd(&(n as i64)) != 1 {
            return Err(Error::Parameter(format!(
                "q exponent {q_exponent} is not coprime to n = {n}"
            )));
        }
        Ok(())
    }

    /// Nilpotency degree `r = n / gcd(n, ν)`, the order of `q^ν`.
    pub fn r(&self) -> usize {
        (self.n / self.n.gcd(&self.nu)) as usize
    }

    pub fn q(&self) -> Result<Scalar> {
        zeta_power(self.n, self.q_exponent)
    }
}

/// `H_{n,q,N,ν}` generated by `g, x` with `g^N = 1`, `x^r = 0`,
/// `x·g = q g·x`, `Δ(g) = g⊗g`, `Δ(x) = x⊗1 + g^{−ν}⊗x`. The basis is
/// `x^m g^l` at index `m·N + l`. `B1 = k⟨x⟩/(x^r)`, `B2 = kC_N`.
pub fn radford(params: RadfordParams) -> Result<SplitHopf> {
    params.validate()?;
    let r = params.r();
    let nn = params.big_n as usize;
    let nu = params.nu as i64;
    let q = params.q()?;
    let d = r * nn;
    let idx = |m: usize, l: i64| m * nn + l.rem_euclid(nn as i64) as usize;
    // (x^a g^b)(x^c g^d) = q^{−bc} x^{a+c} g^{b+d}
    let alg = MonomialAlgebra::new(d, 0, |i, j| {
        let (a, b, c, dd) = (i / nn, i % nn, j / nn, j % nn);
        (a + c < r).then(|| (idx(a + c, (b + dd) as i64), q.pow(-((b * c) as i64))))
    });
    let x = Generator {
        element: unit_vec(idx(1, 0)),
        delta: tensor_elem(
            d,
            &[
                (idx(1, 0), idx(0, 0), one()),
                (idx(0, -nu), idx(1, 0), one()),
            ],
        ),
        eps: Scalar::zero(),
        // S(x) = −g^ν x = −q^{−ν} x g^ν
        antipode: vec![(idx(1, nu), -q.pow(-nu))],
    };
    let g = Generator {
        element: unit_vec(idx(0, 1)),
        delta: tensor_elem(d, &[(idx(0, 1), idx(0, 1), one())]),
        eps: one(),
        antipode: unit_vec(idx(0, -1)),
    };
    let words: Vec<Vec<usize>> = (0..d)
        .map(|b| {
            let (m, l) = (b / nn, b % nn);
            let mut w = vec![0; m];
            w.extend(std::iter::repeat_n(1, l));
            w
        })
        .collect();
    let h = alg.hopf(&SpaceLabel::new("H", d), &words, &[x, g])?;

    let qnu = q.pow(nu);
    let b1 = taft_factor(r, &qnu)?;
    let b2 = group_algebra(nn)?.bialgebra;
    let (s1, s2, sh) = (b1.space.clone(), b2.space.clone(), h.space().clone());
    let i1 = LinMap::from_images(vec![s1.clone()], vec![sh.clone()], |m| unit_vec(idx(m, 0)))?;
    let i2 = LinMap::from_images(vec![s2.clone()], vec![sh.clone()], |l| {
        unit_vec(idx(0, l as i64))
    })?;
    let p1 = LinMap::from_images(vec![sh.clone()], vec![s1.clone()], |b| unit_vec(b / nn))?;
    let p2 = LinMap::from_images(vec![sh.clone()], vec![s2.clone()], |b| {
        if b / nn == 0 {
            unit_vec(b % nn)
        } else {
            vec![]
        }
    })?;
    let system = ProjectionSystem {
        a: h.bialgebra.clone(),
        i1,
        i2,
        p1,
        p2,
    };

    // μ_l(g^l⊗x^m) = q^{−ml} x^m, ν_l(x^m) = g^{−νm}⊗x^m
    let mu_l = LinMap::from_images(vec![s2.clone(), s1.clone()], vec![s1.clone()], |lm| {
        let (l, m) = (lm / r, lm % r);
        vec![(m, q.pow(-((m * l) as i64)))]
    })?;
    let nu_l = LinMap::from_images(vec![s1.clone()], vec![s2.clone(), s1.clone()], |m| {
        let l = (-(nu * m as i64)).rem_euclid(nn as i64) as usize;
        unit_vec(l * r + m)
    })?;
    let trivial = HopfDatum::trivial(b1, b2, BraidingProvider::VectFlip)?;
    let datum = HopfDatum {
        mu_l,
        nu_l,
        ..trivial
    };
    Ok(SplitHopf { h, system, datum })
}

/// Parameters of the finite Ore-type Hopf algebra `H(C, t, g, g*)`.
///
/// `C = C_{orders[0]} × …`; group elements are exponent vectors, and the
/// character `g*_j` sends the i-th generator of `C` to
/// `ζ_{orders[i]}^{g_star[j][i]}`. The number of x-generators is `g.len()`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OreParams {
    pub orders: Vec<u32>,
    pub g: Vec<Vec<i64>>,
    pub g_star: Vec<Vec<i64>>,
}

struct AbelianGroup {
    orders: Vec<u32>,
    conductor: u32,
}

impl AbelianGroup {
    fn size(&self) -> usize {
        self.orders.iter().map(|&o| o as usize).product()
    }

    fn index(&self, e: &[i64]) -> usize {
        self.orders.iter().zip(e).fold(0, |acc, (&o, &x)| {
            acc * o as usize + x.rem_euclid(o as i64) as usize
        })
    }

    fn element(&self, mut i: usize) -> Vec<i64> {
        let mut e = vec![0; self.orders.len()];
        for (k, &o) in self.orders.iter().enumerate().rev() {
            e[k] = (i % o as usize) as i64;
            i /= o as usize;
        }
        e
    }

    fn add(&self, a: &[i64], b: &[i64]) -> Vec<i64> {
        a.iter()
            .zip(b)
            .zip(&self.orders)
            .map(|((x, y), &o)| (x + y).rem_euclid(o as i64))
            .collect()
    }

    fn neg(&self, a: &[i64]) -> Vec<i64> {
        a.iter()
            .zip(&self.orders)
            .map(|(x, &o)| (-x).rem_euclid(o as i64))
            .collect()
    }

    /// `χ(c)` for the character with exponent vector `chi`.
    fn character(&self, chi: &[i64], c: &[i64]) -> Scalar {
        let e: i64 = chi
            .iter()
            .zip(c)
            .zip(&self.orders)
            .map(|((k, x), &o)| k * x * (self.conductor / o) as i64)
            .sum();
        zeta_power(self.conductor, e).expect("positive conductor")
    }
}

impl OreParams {
    pub fn t(&self) -> usize {
        self.g.len()
    }

    fn group(&self) -> AbelianGroup {
        let conductor = self.orders.iter().fold(1u32, |a, &o| a.lcm(&o));
        AbelianGroup {
            orders: self.orders.clone(),
            conductor,
        }
    }

    /// `g_{jk} = g*_j(g_k)`.
    pub fn g_matrix(&self) -> Result<Vec<Vec<Scalar>>> {
        self.check_shape()?;
        let grp = self.group();
        Ok((0..self.t())
            .map(|j| {
                (0..self.t())
                    .map(|k| grp.character(&self.g_star[j], &self.g[k]))
                    .collect()
            })
            .collect())
    }

    fn check_shape(&self) -> Result<()> {
        let rank = self.orders.len();
        if rank == 0 || self.orders.contains(&0) {
            return Err(Error::Parameter(
                "the group needs at least one cyclic factor of positive order".into(),
            ));
        }
        if self.g.len() != self.g_star.len() || self.g.is_empty() {
            return Err(Error::Parameter(
                "g and g* must list the same positive number of entries".into(),
            ));
        }
        if self.g.iter().chain(&self.g_star).any(|v| v.len() != rank) {
            return Err(Error::Parameter(format!(
                "group elements and characters need {rank} exponents"
            )));
        }
        Ok(())
    }

    pub fn validate(&self) -> Result<()> {
        let gm = self.g_matrix()?;
        let t = self.t();
        for j in 0..t {
            for k in 0..t {
                if !(&gm[j][k] * &gm[k][j]).is_one() {
                    return Err(Error::Parameter(format!("g_{j}{k}·g_{k}{j} ≠ 1")));
                }
            }
            if gm[j][j] != Scalar::int(-1) {
                return Err(Error::Unsupported(format!(
                    "g_{j}{j} = {} ≠ −1: the algebra is finite-dimensional only for finite C and g_jj = −1",
                    gm[j][j]
                )));
            }
        }
        let grp = self.group();
        if self.g.iter().all(|e| grp.index(e) == 0) {
            return Err(Error::Parameter(
                "at least one g_j must be nontrivial".into(),
            ));
        }
        if self
            .g_star
            .iter()
            .all(|chi| (0..grp.size()).all(|c| grp.character(chi, &grp.element(c)).is_one()))
        {
            return Err(Error::Parameter(
                "at least one character g*_j must be nontrivial".into(),
            ));
        }
        Ok(())
    }
}

/// `H(C, t, g, g*)` with `x_j·c = g*_j(c) c·x_j`, `x_j x_k = g_{jk} x_k x_j`
/// and `x_j² = 0`. The basis is `c·x_S` for subsets `S` listed in
/// increasing order, at index `index(c)·2^t + mask(S)`. `B1 = kC`, `B2` is
/// spanned by the `x_S`.
pub fn ore_finite(params: &OreParams) -> Result<SplitHopf> {
    params.validate()?;
    let grp = params.group();
    let gm = params.g_matrix()?;
    let t = params.t();
    let nc = grp.size();
    let nx = 1usize << t;
    let d = nc * nx;
    let alg = MonomialAlgebra::new(d, 0, |i, j| {
        let (c, s, dd, tt) = (i / nx, i % nx, j / nx, j % nx);
        if s & tt != 0 {
            return None;
        }
        let (ce, de) = (grp.element(c), grp.element(dd));
        let mut coeff = one();
        for jj in 0..t {
            if s >> jj & 1 == 1 {
                coeff = &coeff * &grp.character(&params.g_star[jj], &de);
                for k in 0..jj {
                    if tt >> k & 1 == 1 {
                        coeff = &coeff * &gm[jj][k];
                    }
                }
            }
        }
        Some((grp.index(&grp.add(&ce, &de)) * nx + (s | tt), coeff))
    });
    let rank = params.orders.len();
    let mut gens = Vec::new();
    for i in 0..rank {
        let mut e = vec![0; rank];
        e[i] = 1;
        let c = grp.index(&e) * nx;
        let ci = grp.index(&grp.neg(&e)) * nx;
        gens.push(Generator {
            element: unit_vec(c),
            delta: tensor_elem(d, &[(c, c, one())]),
            eps: one(),
            antipode: unit_vec(ci),
        });
    }
    for j in 0..t {
        let xj = 1usize << j;
        let gj = grp.index(&params.g[j]) * nx;
        let gj_inv = grp.index(&grp.neg(&params.g[j])) * nx;
        let s = alg.mul(&unit_vec(xj), &unit_vec(gj_inv));
        gens.push(Generator {
            element: unit_vec(xj),
            delta: tensor_elem(d, &[(xj, gj, one()), (0, xj, one())]),
            eps: Scalar::zero(),
            antipode: s.into_iter().map(|(k, v)| (k, -v)).collect(),
        });
    }
    let words: Vec<Vec<usize>> = (0..d)
        .map(|b| {
            let (c, s) = (b / nx, b % nx);
            let mut w = Vec::new();
            for (i, &x) in grp.element(c).iter().enumerate() {
                w.extend(std::iter::repeat_n(i, x as usize));
            }
            w.extend((0..t).filter(|j| s >> j & 1 == 1).map(|j| rank + j));
            w
        })
        .collect();
    let h = alg.hopf(&SpaceLabel::new("H", d), &words, &gens)?;

    let s1 = SpaceLabel::new(
        format!(
            "kC{}",
            params
                .orders
                .iter()
                .map(u32::to_string)
                .collect::<Vec<_>>()
                .join("x")
        ),
        nc,
    );
    let s2 = SpaceLabel::new(format!("X{t}"), nx);
    let sh = h.space().clone();
    let eps_x = |s: usize| if s == 0 { one() } else { Scalar::zero() };
    let i1 = LinMap::from_images(vec![s1.clone()], vec![sh.clone()], |c| unit_vec(c * nx))?;
    let i2 = LinMap::from_images(vec![s2.clone()], vec![sh.clone()], unit_vec)?;
    let p1 = LinMap::from_images(vec![sh.clone()], vec![s1.clone()], |b| {
        let e = eps_x(b % nx);
        if e.is_zero() {
            vec![]
        } else {
            vec![(b / nx, e)]
        }
    })?;
    let p2 = LinMap::from_images(vec![sh.clone()], vec![s2.clone()], |b| unit_vec(b % nx))?;
    let system = ProjectionSystem {
        a: h.bialgebra.clone(),
        i1,
        i2,
        p1,
        p2,
    };
    let (b1, b2) = system.factors()?;
    let a = &h.bialgebra;
    use crate::tensor::{compose, tensor};
    // μ_r = p2∘m∘(i2⊗i1), ν_r = (p2⊗p1)∘Δ∘i2
    let mu_r = compose(&system.p2, &compose(&a.m, &tensor(&system.i2, &system.i1))?)?;
    let nu_r = compose(
        &tensor(&system.p2, &system.p1),
        &compose(&a.delta, &system.i2)?,
    )?;
    let trivial = HopfDatum::trivial(b1, b2, BraidingProvider::VectFlip)?;
    let datum = HopfDatum {
        mu_r,
        nu_r,
        ..trivial
    };
    Ok(SplitHopf { h, system, datum })
}
