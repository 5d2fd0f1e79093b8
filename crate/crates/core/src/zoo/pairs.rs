//! Matched pairs, bicross products, cocycles and crossed modules assembled
//! from the basic structures.

use std::collections::{BTreeMap, HashMap};

use super::{
    group_algebra, group_label, one, ore_finite, radford, unit_vec, OreParams, RadfordParams,
};
use crate::cross::{Bat, ProjectionSystem};
use crate::datum::{check_hopf_datum, HopfDatum};
use crate::error::{Error, Result};
use crate::scalar::{zeta_power, Scalar};
use crate::structures::{check_hopf, convolution_inverse_raw, BiunitalPair, HopfAlgebraData};
use crate::tensor::{tensor, BraidingProvider, LinMap, SpaceLabel, YdModule};
use crate::twisting::{
    matched_pair_from_pairing, DoubleBiproductInput, DualPairing, MatchedPair, TwoCocycle,
};

/// Replaces every occurrence of the space `from` by `to` in the signature.
pub(crate) fn rename_space(m: &LinMap, from: &SpaceLabel, to: &SpaceLabel) -> Result<LinMap> {
    let f = |v: &[SpaceLabel]| {
        v.iter()
            .map(|s| if s == from { to.clone() } else { s.clone() })
            .collect()
    };
    m.relabel(f(m.dom()), f(m.cod()))
}

/// Group algebra of `C_{n_1} × … × C_{n_r}`; the element with exponents
/// `(e_1, …, e_r)` sits at the mixed-radix index with `e_1` most
/// significant.
pub fn abelian_group_algebra(orders: &[u32]) -> Result<HopfAlgebraData> {
    if orders.is_empty() || orders.contains(&0) {
        return Err(Error::Parameter(
            "group orders must be positive and nonempty".into(),
        ));
    }
    let name = format!(
        "kC{}",
        orders
            .iter()
            .map(u32::to_string)
            .collect::<Vec<_>>()
            .join("x")
    );
    let elements = mixed_radix(orders);
    let index: HashMap<Vec<u32>, usize> = elements
        .iter()
        .cloned()
        .enumerate()
        .map(|(i, e)| (e, i))
        .collect();
    let mul = |a: &[u32], b: &[u32]| -> Vec<u32> {
        a.iter()
            .zip(b)
            .zip(orders)
            .map(|((x, y), o)| (x + y) % o)
            .collect()
    };
    let inv = |a: &[u32]| -> Vec<u32> { a.iter().zip(orders).map(|(x, o)| (o - x) % o).collect() };
    finite_group_algebra(
        &name,
        elements.len(),
        |i, j| index[&mul(&elements[i], &elements[j])],
        |i| index[&inv(&elements[i])],
    )
}

fn mixed_radix(orders: &[u32]) -> Vec<Vec<u32>> {
    let mut out = vec![vec![]];
    for &o in orders {
        out = out
            .into_iter()
            .flat_map(|p| {
                (0..o).map(move |x| {
                    let mut q = p.clone();
                    q.push(x);
                    q
                })
            })
            .collect();
    }
    out
}

/// Group algebra from a multiplication table; element 0 must be the
/// identity.
fn finite_group_algebra(
    name: &str,
    n: usize,
    mul: impl Fn(usize, usize) -> usize,
    inv: impl Fn(usize) -> usize,
) -> Result<HopfAlgebraData> {
    let s = SpaceLabel::new(name, n);
    let ss = vec![s.clone()];
    let s2 = vec![s.clone(), s.clone()];
    let m = LinMap::from_images(s2.clone(), ss.clone(), |ij| unit_vec(mul(ij / n, ij % n)))?;
    let eta = LinMap::from_columns(vec![], ss.clone(), vec![unit_vec(0)])?;
    let delta = LinMap::from_images(ss.clone(), s2, |i| unit_vec(i * n + i))?;
    let eps = LinMap::from_images(ss.clone(), vec![], |_| unit_vec(0))?;
    let antipode = LinMap::from_images(ss.clone(), ss, |i| unit_vec(inv(i)))?;
    HopfAlgebraData::new(BiunitalPair::new(s, m, eta, delta, eps)?, antipode)
}

/// Functions on a finite group with pointwise product and
/// `Δ(e_z) = Σ_{xy=z} e_x ⊗ e_y`.
fn function_algebra(
    name: &str,
    n: usize,
    mul: impl Fn(usize, usize) -> usize,
    inv: impl Fn(usize) -> usize,
) -> Result<HopfAlgebraData> {
    let s = SpaceLabel::new(name, n);
    let ss = vec![s.clone()];
    let s2 = vec![s.clone(), s.clone()];
    let m = LinMap::from_images(s2.clone(), ss.clone(), |ij| {
        if ij / n == ij % n {
            unit_vec(ij / n)
        } else {
            vec![]
        }
    })?;
    let eta = LinMap::from_columns(
        vec![],
        ss.clone(),
        vec![(0..n).map(|i| (i, one())).collect()],
    )?;
    let mut cols = vec![Vec::new(); n];
    for x in 0..n {
        for y in 0..n {
            cols[mul(x, y)].push((x * n + y, one()));
        }
    }
    for c in &mut cols {
        c.sort_by_key(|e| e.0);
    }
    let delta = LinMap::from_columns(ss.clone(), s2, cols)?;
    let eps = LinMap::from_images(ss.clone(), vec![], |i| {
        if i == 0 {
            unit_vec(0)
        } else {
            vec![]
        }
    })?;
    let antipode = LinMap::from_images(ss.clone(), ss, |i| unit_vec(inv(i)))?;
    HopfAlgebraData::new(BiunitalPair::new(s, m, eta, delta, eps)?, antipode)
}

/// The bicharacter `χ(g^a h^b ⊗ g^c h^d) = ζ_N^{b·c}` on `k(C_N × C_N)`.
pub fn bicharacter_cocycle(n: u32) -> Result<(HopfAlgebraData, TwoCocycle)> {
    let h = abelian_group_algebra(&[n, n])?;
    let nn = n as usize;
    let s = h.space().clone();
    let chi = LinMap::from_fn(vec![s.clone(), s], vec![], |_, col| {
        let (x, y) = (col / (nn * nn), col % (nn * nn));
        let (b, c) = (x % nn, y / nn);
        zeta_power(n, (b * c) as i64).expect("positive order")
    });
    let c = TwoCocycle::new(h.bialgebra.clone(), chi)?;
    Ok((h, c))
}

/// The dual of a finite-dimensional Hopf algebra `H` with the conventions
/// of a pairing: `⟨h, aa'⟩ = ⟨h_(1), a'⟩⟨h_(2), a⟩` and
/// `⟨hh', a⟩ = ⟨h, a_(1)⟩⟨h', a_(2)⟩`, paired by evaluation on dual
/// bases.
pub fn paired_dual(h: &HopfAlgebraData) -> Result<(HopfAlgebraData, DualPairing)> {
    let d = h.dim();
    let hs = h.space().clone();
    let s = SpaceLabel::new(format!("{}*", hs.name), d);
    let ss = vec![s.clone()];
    let s2 = vec![s.clone(), s.clone()];
    let m = LinMap::from_fn(s2.clone(), ss.clone(), |i, jk| {
        h.delta.entry((jk % d) * d + jk / d, i)
    });
    let delta = LinMap::from_fn(ss.clone(), s2, |ab, j| h.m.entry(j, ab));
    let eta = LinMap::from_fn(vec![], ss.clone(), |i, _| h.eps.entry(0, i));
    let eps = LinMap::from_fn(ss.clone(), vec![], |_, j| h.eta.entry(j, 0));
    let bi = BiunitalPair::new(s.clone(), m, eta, delta, eps)?;
    let antipode = convolution_inverse_raw(&bi.identity(), &bi.delta, &bi.eps, &bi.m, &bi.eta)?;
    let a = HopfAlgebraData::new(bi, antipode)?;
    let report = check_hopf(&a)?;
    if !report.passed() {
        return Err(Error::InternalConsistency(format!(
            "dual of {hs} fails: {}",
            report.failure_summary()
        )));
    }
    let form = LinMap::from_fn(vec![hs, s], vec![], |_, ij| {
        if ij / d == ij % d {
            one()
        } else {
            Scalar::zero()
        }
    });
    let p = DualPairing::new(h.bialgebra.clone(), a.bialgebra.clone(), form)?;
    Ok((a, p))
}

/// `kC_N` paired with the functions on `C_N` by `⟨g^a, e_b⟩ = δ_{a,b}`.
pub fn group_pairing(n: usize) -> Result<(HopfAlgebraData, HopfAlgebraData, DualPairing)> {
    let h = group_algebra(n)?;
    let a = super::dual_group_algebra(n)?;
    let form = LinMap::from_fn(
        vec![h.space().clone(), a.space().clone()],
        vec![],
        |_, ij| {
            if ij / n == ij % n {
                one()
            } else {
                Scalar::zero()
            }
        },
    );
    let p = DualPairing::new(h.bialgebra.clone(), a.bialgebra.clone(), form)?;
    Ok((h, a, p))
}

/// A matched pair obtained from a pairing, with its Hopf datum.
#[derive(Clone, Debug)]
pub struct PairedDouble {
    pub pairing: DualPairing,
    pub braiding: BraidingProvider,
    pub matched: MatchedPair,
    pub datum: HopfDatum,
}

fn paired_double(pairing: DualPairing, braiding: BraidingProvider) -> Result<PairedDouble> {
    let matched = matched_pair_from_pairing(&pairing, &braiding)?;
    let datum = matched.datum(&pairing, &braiding)?;
    Ok(PairedDouble {
        pairing,
        braiding,
        matched,
        datum,
    })
}

/// The matched pair of `kC_N` and its dual under the flip.
pub fn group_double(n: usize) -> Result<PairedDouble> {
    let (_, _, p) = group_pairing(n)?;
    paired_double(p, BraidingProvider::VectFlip)
}

/// The matched pair of Sweedler's algebra and its dual under the flip; the
/// actions are the coadjoint ones and both are nontrivial.
pub fn sweedler_double() -> Result<PairedDouble> {
    let h = radford(RadfordParams::new(2, 1, 2, 1))?.h;
    let (_, p) = paired_dual(&h)?;
    paired_double(p, BraidingProvider::VectFlip)
}

/// Truncated polynomial algebra `k[z]/z^3` registered over `kC_3` with
/// `z◁g = ζ_3^{a} z` and `z ↦ z ⊗ g^{c}`.
fn c3_graded_line(
    name: &str,
    a: i64,
    c: i64,
    host: &HopfAlgebraData,
) -> Result<(BiunitalPair, YdModule)> {
    let q = zeta_power(3, 1)?;
    let x = super::taft_factor(3, &q)?.renamed(name);
    let s = x.space.clone();
    let hs = host.space().clone();
    let action = LinMap::from_images(vec![s.clone(), hs.clone()], vec![s.clone()], |ml| {
        let (m, l) = ((ml / 3) as i64, (ml % 3) as i64);
        vec![(m as usize, zeta_power(3, a * m * l).expect("conductor 3"))]
    })?;
    let coaction = LinMap::from_images(vec![s.clone()], vec![s.clone(), hs], |m| {
        unit_vec(m * 3 + (c * m as i64).rem_euclid(3) as usize)
    })?;
    Ok((
        x,
        YdModule {
            space: s,
            action,
            coaction,
        },
    ))
}

/// Two truncated polynomial bialgebras in right Yetter–Drinfel'd modules
/// over `kC_3` whose mutual braiding is not involutive:
/// `H = k[x]/x^3` with `x◁g = ζ_3 x`, `x ↦ x⊗g` and `A = k[y]/y^3` with
/// `y◁g = ζ_3^{−1} y`, `y ↦ y⊗g^{−1}`, paired by `ε_H⊗ε_A`.
///
/// Both self-braidings are multiplication by `ζ_3` on the generators; a
/// pairing with `⟨x, y⟩ ≠ 0` would need `ζ(1+ζ) = 1+ζ` for that scalar
/// `ζ`, so the counit pairing is the only one available.
pub fn yd_c3_pairing() -> Result<(DualPairing, BraidingProvider)> {
    let host = group_algebra(3)?;
    let mut bp = BraidingProvider::yetter_drinfeld(host.clone());
    let (h, mh) = c3_graded_line("Hx", 1, 1, &host)?;
    let (a, ma) = c3_graded_line("Ay", -1, -1, &host)?;
    bp.register(mh)?;
    bp.register(ma)?;
    let form = tensor(&h.eps, &a.eps);
    Ok((DualPairing::new(h, a, form)?, bp))
}

/// The matched pair built from [`yd_c3_pairing`].
pub fn yd_c3_double() -> Result<PairedDouble> {
    let (p, bp) = yd_c3_pairing()?;
    paired_double(p, bp)
}

/// A finite group given by permutations, with the identity first.
#[derive(Clone, Debug)]
pub struct PermutationGroup {
    pub elements: Vec<Vec<usize>>,
    index: BTreeMap<Vec<usize>, usize>,
}

fn compose_perm(a: &[usize], b: &[usize]) -> Vec<usize> {
    // (a∘b)(i) = a(b(i))
    b.iter().map(|&i| a[i]).collect()
}

impl PermutationGroup {
    /// Closure of the generators under composition.
    pub fn generated_by(degree: usize, gens: &[Vec<usize>]) -> Self {
        let e: Vec<usize> = (0..degree).collect();
        let mut elements = vec![e.clone()];
        let mut index = BTreeMap::from([(e, 0)]);
        let mut frontier = 0;
        while frontier < elements.len() {
            let x = elements[frontier].clone();
            for g in gens {
                let y = compose_perm(&x, g);
                if !index.contains_key(&y) {
                    index.insert(y.clone(), elements.len());
                    elements.push(y);
                }
            }
            frontier += 1;
        }
        PermutationGroup { elements, index }
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.index[&compose_perm(&self.elements[a], &self.elements[b])]
    }

    pub fn inv(&self, a: usize) -> usize {
        let p = &self.elements[a];
        let mut q = vec![0; p.len()];
        for (i, &j) in p.iter().enumerate() {
            q[j] = i;
        }
        self.index[&q]
    }

    pub fn position(&self, perm: &[usize]) -> Option<usize> {
        self.index.get(perm).copied()
    }

    /// Elements of the subgroup generated by the given elements, identity
    /// first.
    pub fn subgroup(&self, gens: &[usize]) -> Vec<usize> {
        let mut out = vec![0];
        let mut frontier = 0;
        while frontier < out.len() {
            for &g in gens {
                let y = self.mul(out[frontier], g);
                if !out.contains(&y) {
                    out.push(y);
                }
            }
            frontier += 1;
        }
        out
    }
}

/// An exact factorization `G = M·K`: every element is uniquely `m·k`.
/// Rewriting `k·m = (k▷m)(k◁m)` gives the mutual actions.
#[derive(Clone, Debug)]
pub struct GroupFactorization {
    pub group: PermutationGroup,
    pub m: Vec<usize>,
    pub k: Vec<usize>,
    /// `lact[ki][mi]` = position in `m` of `k▷m`.
    pub lact: Vec<Vec<usize>>,
    /// `ract[ki][mi]` = position in `k` of `k◁m`.
    pub ract: Vec<Vec<usize>>,
}

impl GroupFactorization {
    pub fn new(group: PermutationGroup, m: Vec<usize>, k: Vec<usize>) -> Result<Self> {
        if m.len() * k.len() != group.order() {
            return Err(Error::Parameter(format!(
                "|M|·|K| = {} differs from |G| = {}",
                m.len() * k.len(),
                group.order()
            )));
        }
        let mut split = HashMap::new();
        for (mi, &mm) in m.iter().enumerate() {
            for (ki, &kk) in k.iter().enumerate() {
                if split.insert(group.mul(mm, kk), (mi, ki)).is_some() {
                    return Err(Error::Parameter("M·K does not factor uniquely".into()));
                }
            }
        }
        let mut lact = vec![vec![0; m.len()]; k.len()];
        let mut ract = vec![vec![0; m.len()]; k.len()];
        for (ki, &kk) in k.iter().enumerate() {
            for (mi, &mm) in m.iter().enumerate() {
                let (a, b) = split[&group.mul(kk, mm)];
                lact[ki][mi] = a;
                ract[ki][mi] = b;
            }
        }
        Ok(GroupFactorization {
            group,
            m,
            k,
            lact,
            ract,
        })
    }

    pub fn left_action_trivial(&self) -> bool {
        self.lact
            .iter()
            .all(|row| row.iter().enumerate().all(|(i, &j)| i == j))
    }

    pub fn right_action_trivial(&self) -> bool {
        self.ract
            .iter()
            .enumerate()
            .all(|(ki, row)| row.iter().all(|&j| j == ki))
    }
}

/// `S_3 = C_3·C_2` with `M` the rotations and `K` a reflection.
pub fn s3_factorization() -> Result<GroupFactorization> {
    let g = PermutationGroup::generated_by(3, &[vec![1, 2, 0], vec![1, 0, 2]]);
    let r = g.position(&[1, 2, 0]).expect("generator");
    let s = g.position(&[1, 0, 2]).expect("generator");
    let (m, k) = (g.subgroup(&[r]), g.subgroup(&[s]));
    GroupFactorization::new(g, m, k)
}

/// `S_4 = S_3·C_4` with `M` the stabilizer of a point and `K` generated by
/// a 4-cycle; neither factor is normal.
pub fn s4_factorization() -> Result<GroupFactorization> {
    let g = PermutationGroup::generated_by(4, &[vec![1, 2, 3, 0], vec![1, 0, 2, 3]]);
    let c4 = g.position(&[1, 2, 3, 0]).expect("generator");
    let r3 = g.position(&[1, 2, 0, 3]).expect("element");
    let t = g.position(&[1, 0, 2, 3]).expect("generator");
    let (m, k) = (g.subgroup(&[r3, t]), g.subgroup(&[c4]));
    GroupFactorization::new(g, m, k)
}

/// The bicross product datum of a factorization: `B1 = kK`, `B2 = k^M`,
/// `ν_l(k) = Σ_m e_m ⊗ (k◁m)` and `(f◁k)(m) = f(k▷m)`; `μ_l` and `ν_r` are
/// trivial.
pub fn bicross_datum(f: &GroupFactorization) -> Result<HopfDatum> {
    let (nm, nk) = (f.m.len(), f.k.len());
    let g = &f.group;
    let pos_m: HashMap<usize, usize> = f.m.iter().enumerate().map(|(i, &x)| (x, i)).collect();
    let pos_k: HashMap<usize, usize> = f.k.iter().enumerate().map(|(i, &x)| (x, i)).collect();
    let b1 = finite_group_algebra(
        &format!("kK{nk}"),
        nk,
        |a, b| pos_k[&g.mul(f.k[a], f.k[b])],
        |a| pos_k[&g.inv(f.k[a])],
    )?;
    let b2 = function_algebra(
        &format!("k^M{nm}"),
        nm,
        |a, b| pos_m[&g.mul(f.m[a], f.m[b])],
        |a| pos_m[&g.inv(f.m[a])],
    )?;
    let (s1, s2) = (b1.space().clone(), b2.space().clone());
    let mut d = HopfDatum::trivial(
        b1.bialgebra.clone(),
        b2.bialgebra.clone(),
        BraidingProvider::VectFlip,
    )?;
    d.nu_l = LinMap::from_images(vec![s1.clone()], vec![s2.clone(), s1.clone()], |ki| {
        let mut v: Vec<_> = (0..nm)
            .map(|mi| (mi * nk + f.ract[ki][mi], one()))
            .collect();
        v.sort_by_key(|e| e.0);
        v
    })?;
    // e_{m0}◁k is the indicator of {m : k▷m = m0}
    d.mu_r = LinMap::from_fn(vec![s2.clone(), s1], vec![s2], |mi, col| {
        let (m0, ki) = (col / nk, col % nk);
        if f.lact[ki][mi] == m0 {
            one()
        } else {
            Scalar::zero()
        }
    });
    Ok(d)
}

/// Coactions `k ↦ k⊗1 + D(k)⊗x` of a two-dimensional group algebra on
/// `k[x]/x^2`, one for each nonzero `D` with entries in `{−1, 0, 1}`;
/// `group_first` puts the group factor on the left of the output.
fn perturbed_coactions(
    group: &SpaceLabel,
    line: &SpaceLabel,
    group_first: bool,
) -> Result<Vec<LinMap>> {
    let vals = [-1i64, 0, 1];
    let mut out = Vec::new();
    for code in 0..81usize {
        let dm: Vec<i64> = (0..4).map(|k| vals[(code / 3usize.pow(k)) % 3]).collect();
        if dm.iter().all(|&c| c == 0) {
            continue;
        }
        let (dom, cod) = if group_first {
            (vec![group.clone()], vec![group.clone(), line.clone()])
        } else {
            (vec![group.clone()], vec![line.clone(), group.clone()])
        };
        let idx = |g: usize, x: usize| if group_first { g * 2 + x } else { x * 2 + g };
        out.push(LinMap::from_images(dom, cod, |l| {
            let mut v = vec![(idx(l, 0), one())];
            for row in 0..2 {
                let c = dm[row * 2 + l];
                if c != 0 {
                    v.push((idx(row, 1), Scalar::from(c)));
                }
            }
            v.sort_by_key(|e| e.0);
            v
        })?);
    }
    Ok(out)
}

/// Searches for a Hopf datum with pattern 1101 on `k[x]/x^2` and `kC_2`:
/// first the Sweedler biproduct datum with an added right coaction
/// `ν_r(g^l) = g^l⊗1 + D(g^l)⊗x`, then its mirror (the Ore-type datum) with
/// an added left coaction, over every nonzero `D` with entries in
/// `{−1, 0, 1}`.
pub fn search_sweedler_1101() -> Result<Option<HopfDatum>> {
    let base = radford(RadfordParams::new(2, 1, 2, 1))?.datum;
    for nu_r in perturbed_coactions(base.s2(), base.s1(), true)? {
        let mut d = base.clone();
        d.nu_r = nu_r;
        if check_hopf_datum(&d)?.passed() {
            return Ok(Some(d));
        }
    }
    let mirror = ore_finite(&OreParams {
        orders: vec![2],
        g: vec![vec![1]],
        g_star: vec![vec![1]],
    })?
    .datum;
    for nu_l in perturbed_coactions(mirror.s1(), mirror.s2(), false)? {
        let mut d = mirror.clone();
        d.nu_l = nu_l;
        if check_hopf_datum(&d)?.passed() {
            return Ok(Some(d));
        }
    }
    Ok(None)
}

/// The tensor product datum of two group algebras: every (co)action
/// trivial.
pub fn group_tensor_datum(n1: usize, n2: usize) -> Result<HopfDatum> {
    let b1 = group_algebra(n1)?.bialgebra;
    let b2 = group_algebra(n2)?.bialgebra.renamed(&format!("kC{n2}'"));
    HopfDatum::trivial(b1, b2, BraidingProvider::VectFlip)
}

/// The Sweedler factor `k[x]/x^2` as a left crossed module over `kC_2`
/// (from Radford's algebra at `(2, 1, 2, 1)`) and as a right crossed module
/// (from the Ore-type algebra with `C = C_2`, `t = 1`): `g▷x = −x`,
/// `x ↦ g⊗x` and `x◁g = −x`, `x ↦ x⊗g`.
pub fn sweedler_crossed_modules() -> Result<DoubleBiproductInput> {
    let h = group_algebra(2)?;
    let hs = group_label(2);
    let left = radford(RadfordParams::new(2, 1, 2, 1))?.datum;
    let right = ore_finite(&OreParams {
        orders: vec![2],
        g: vec![vec![1]],
        g_star: vec![vec![1]],
    })?
    .datum;
    if left.b2 != h.bialgebra || right.b1 != h.bialgebra {
        return Err(Error::InternalConsistency(
            "Sweedler factors are not over kC2".into(),
        ));
    }
    let c = left.b1.renamed("C");
    let b = right.b2.renamed("B");
    let c_action = rename_space(&left.mu_l, left.s1(), &c.space)?;
    let c_coaction = rename_space(&left.nu_l, left.s1(), &c.space)?;
    let b_action = rename_space(&right.mu_r, right.s2(), &b.space)?;
    let b_coaction = rename_space(&right.nu_r, right.s2(), &b.space)?;
    debug_assert_eq!(c_action.dom(), &[hs.clone(), c.space.clone()]);
    debug_assert_eq!(b_coaction.cod(), &[b.space.clone(), hs]);
    Ok(DoubleBiproductInput {
        h,
        b,
        b_action,
        b_coaction,
        c,
        c_action,
        c_coaction,
        rho: None,
    })
}

/// `ρ: B⊗C → k` with `ρ(1⊗1) = 1`, `ρ(x⊗x) = α` and zero on the other basis
/// pairs.
pub fn sweedler_rho(input: &DoubleBiproductInput, alpha: &Scalar) -> Result<LinMap> {
    LinMap::from_columns(
        vec![input.b.space.clone(), input.c.space.clone()],
        vec![],
        vec![
            vec![(0, one())],
            vec![],
            vec![],
            if alpha.is_zero() {
                vec![]
            } else {
                vec![(0, alpha.clone())]
            },
        ],
    )
}

/// Every Hopf datum the zoo produces with the flip braiding, by name.
pub fn zoo_data() -> Result<Vec<(String, HopfDatum)>> {
    let mut out = Vec::new();
    for (n, q, big_n, nu) in [(2, 1, 2, 1), (3, 1, 3, 1), (2, 1, 4, 1)] {
        out.push((
            format!("radford({n},{q},{big_n},{nu})"),
            radford(RadfordParams::new(n, q, big_n, nu))?.datum,
        ));
    }
    let ore = OreParams {
        orders: vec![2],
        g: vec![vec![1]],
        g_star: vec![vec![1]],
    };
    out.push(("ore(C2,t=1)".into(), ore_finite(&ore)?.datum));
    out.push(("tensor(kC2,kC3)".into(), group_tensor_datum(2, 3)?));
    out.push(("group double kC3".into(), group_double(3)?.datum));
    out.push(("sweedler double".into(), sweedler_double()?.datum));
    out.push((
        "bicross S3=C3·C2".into(),
        bicross_datum(&s3_factorization()?)?,
    ));
    Ok(out)
}

/// Projection system of a bialgebra built from a datum: `i1 = id⊗η2`,
/// `i2 = η1⊗id`, `p1 = id⊗ε2`, `p2 = ε1⊗id`.
pub fn canonical_system(d: &HopfDatum, a: &BiunitalPair) -> Result<ProjectionSystem> {
    let (b1, b2) = (&d.b1, &d.b2);
    let s = vec![a.space.clone()];
    let i1 = tensor(&b1.identity(), &b2.eta).relabel(vec![b1.space.clone()], s.clone())?;
    let i2 = tensor(&b1.eta, &b2.identity()).relabel(vec![b2.space.clone()], s.clone())?;
    let p1 = tensor(&b1.identity(), &b2.eps).relabel(s.clone(), vec![b1.space.clone()])?;
    let p2 = tensor(&b1.eps, &b2.identity()).relabel(s, vec![b2.space.clone()])?;
    Ok(ProjectionSystem {
        a: a.clone(),
        i1,
        i2,
        p1,
        p2,
    })
}

/// The cross product bialgebra of a datum, checked as a bialgebra with the
/// datum's braiding on the fused space.
pub fn cross_product_of(d: &HopfDatum) -> Result<BiunitalPair> {
    let t: Bat = crate::cross::hopf_datum_to_bat(d)?;
    crate::cross::build_cross_product(&t)
}
