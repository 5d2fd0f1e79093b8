//! Structure-constant bundles for (co)algebras, bialgebras and Hopf
//! algebras, (co)actions and crossed modules, with exhaustive exact axiom
//! checks.

use std::fmt;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scalar::Scalar;
use crate::tensor::sparse::{solve, Accumulator};
use crate::tensor::{
    chain, compose, id, mp, total_dim, BraidingProvider, LinMap, LinMapWire, SpaceLabel,
};

/// A counital algebra and unital coalgebra on one space. Only `ε∘η = id`
/// is taken for granted; everything else is checked on demand.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BiunitalPair {
    pub space: SpaceLabel,
    pub m: LinMap,
    pub eta: LinMap,
    pub delta: LinMap,
    pub eps: LinMap,
}

pub type BialgebraData = BiunitalPair;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HopfAlgebraData {
    pub bialgebra: BialgebraData,
    pub antipode: LinMap,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum StructureKind {
    Algebra,
    Coalgebra,
    Bialgebra,
    Hopf,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ActionKind {
    ModuleL,
    ModuleR,
    ComoduleL,
    ComoduleR,
}

/// A (co)action of a biunital pair on a carrier space.
#[derive(Clone, Debug)]
pub struct ActionData {
    pub carrier: SpaceLabel,
    pub actor: BiunitalPair,
    pub map: LinMap,
    pub kind: ActionKind,
}

/// Witness of a failed axiom: the first differing matrix entry.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub input: Vec<usize>,
    pub output: Vec<usize>,
    pub lhs: Scalar,
    pub rhs: Scalar,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AxiomVerdict {
    pub axiom: String,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<Counterexample>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct CheckReport {
    pub entries: Vec<AxiomVerdict>,
}

impl CheckReport {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn passed(&self) -> bool {
        self.entries.iter().all(|e| e.passed)
    }

    /// Records whether two maps agree, keeping the first mismatch.
    pub fn push_equal(
        &mut self,
        axiom: impl Into<String>,
        lhs: &LinMap,
        rhs: &LinMap,
    ) -> Result<()> {
        let mismatch = lhs.first_mismatch(rhs)?;
        self.entries.push(AxiomVerdict {
            axiom: axiom.into(),
            passed: mismatch.is_none(),
            counterexample: mismatch.map(|m| Counterexample {
                input: lhs.dom_digits(m.col),
                output: lhs.cod_digits(m.row),
                lhs: m.left,
                rhs: m.right,
            }),
        });
        Ok(())
    }

    pub fn push_flag(&mut self, axiom: impl Into<String>, passed: bool) {
        self.entries.push(AxiomVerdict {
            axiom: axiom.into(),
            passed,
            counterexample: None,
        });
    }

    /// Appends another report with its axiom names prefixed.
    pub fn extend_prefixed(&mut self, prefix: &str, other: CheckReport) {
        for mut e in other.entries {
            e.axiom = format!("{prefix}{}", e.axiom);
            self.entries.push(e);
        }
    }

    pub fn verdict(&self, axiom: &str) -> Option<bool> {
        self.entries
            .iter()
            .find(|e| e.axiom == axiom)
            .map(|e| e.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &AxiomVerdict> {
        self.entries.iter().filter(|e| !e.passed)
    }

    pub fn failure_summary(&self) -> String {
        let names: Vec<_> = self.failures().map(|e| e.axiom.as_str()).collect();
        if names.is_empty() {
            "none".into()
        } else {
            names.join(", ")
        }
    }
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for e in &self.entries {
            write!(
                f,
                "{:<40} {}",
                e.axiom,
                if e.passed { "pass" } else { "FAIL" }
            )?;
            if let Some(c) = &e.counterexample {
                write!(
                    f,
                    "  at input {:?} output {:?}: {} vs {}",
                    c.input, c.output, c.lhs, c.rhs
                )?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

fn expect_shape(what: &str, m: &LinMap, dom: &[SpaceLabel], cod: &[SpaceLabel]) -> Result<()> {
    if m.dom() != dom || m.cod() != cod {
        return Err(Error::shape(
            format!(
                "{what}: {} → {}",
                crate::tensor::describe(dom),
                crate::tensor::describe(cod)
            ),
            format!(
                "{} → {}",
                crate::tensor::describe(m.dom()),
                crate::tensor::describe(m.cod())
            ),
        ));
    }
    Ok(())
}

impl BiunitalPair {
    pub fn new(
        space: SpaceLabel,
        m: LinMap,
        eta: LinMap,
        delta: LinMap,
        eps: LinMap,
    ) -> Result<Self> {
        let s = BiunitalPair {
            space,
            m,
            eta,
            delta,
            eps,
        };
        s.check_shapes()?;
        Ok(s)
    }

    /// The one-dimensional structure on the ground field.
    pub fn trivial(name: &str) -> Self {
        let k = SpaceLabel::new(name, 1);
        let one = |dom: Vec<SpaceLabel>, cod: Vec<SpaceLabel>| {
            LinMap::from_fn(dom, cod, |_, _| Scalar::one())
        };
        BiunitalPair {
            m: one(vec![k.clone(), k.clone()], vec![k.clone()]),
            eta: one(vec![], vec![k.clone()]),
            delta: one(vec![k.clone()], vec![k.clone(), k.clone()]),
            eps: one(vec![k.clone()], vec![]),
            space: k,
        }
    }

    pub fn check_shapes(&self) -> Result<()> {
        let b = std::slice::from_ref(&self.space);
        let bb = [self.space.clone(), self.space.clone()];
        expect_shape("m", &self.m, &bb, b)?;
        expect_shape("η", &self.eta, &[], b)?;
        expect_shape("Δ", &self.delta, b, &bb)?;
        expect_shape("ε", &self.eps, b, &[])
    }

    pub fn dim(&self) -> usize {
        self.space.dim
    }

    pub fn identity(&self) -> LinMap {
        LinMap::identity(std::slice::from_ref(&self.space))
    }

    /// `η∘ε`, the unit of the convolution algebra End(B).
    pub fn unit_counit(&self) -> LinMap {
        compose(&self.eta, &self.eps).expect("shapes checked")
    }

    /// The same structure on a space with another name.
    pub fn renamed(&self, name: &str) -> Self {
        let s = SpaceLabel::new(name, self.space.dim);
        let r = |m: &LinMap| {
            let f = |v: &[SpaceLabel]| vec![s.clone(); v.len()];
            m.relabel(f(m.dom()), f(m.cod())).expect("same dimensions")
        };
        BiunitalPair {
            m: r(&self.m),
            eta: r(&self.eta),
            delta: r(&self.delta),
            eps: r(&self.eps),
            space: s,
        }
    }

    /// Transports the structure along an invertible map `t: B → B`.
    pub fn conjugate(&self, t: &LinMap, t_inv: &LinMap) -> Result<Self> {
        let tt = crate::tensor::tensor(t, t);
        let ti = crate::tensor::tensor(t_inv, t_inv);
        Ok(BiunitalPair {
            space: self.space.clone(),
            m: compose(t, &compose(&self.m, &ti)?)?,
            eta: compose(t, &self.eta)?,
            delta: compose(&tt, &compose(&self.delta, t_inv)?)?,
            eps: compose(&self.eps, t_inv)?,
        })
    }
}

impl HopfAlgebraData {
    pub fn new(bialgebra: BialgebraData, antipode: LinMap) -> Result<Self> {
        bialgebra.check_shapes()?;
        let b = std::slice::from_ref(&bialgebra.space);
        expect_shape("S", &antipode, b, b)?;
        Ok(HopfAlgebraData {
            bialgebra,
            antipode,
        })
    }

    pub fn space(&self) -> &SpaceLabel {
        &self.bialgebra.space
    }

    pub fn dim(&self) -> usize {
        self.bialgebra.space.dim
    }

    pub fn renamed(&self, name: &str) -> Self {
        let b = self.bialgebra.renamed(name);
        let s = vec![b.space.clone()];
        let antipode = self
            .antipode
            .relabel(s.clone(), s)
            .expect("same dimensions");
        HopfAlgebraData {
            bialgebra: b,
            antipode,
        }
    }
}

impl std::ops::Deref for HopfAlgebraData {
    type Target = BialgebraData;
    fn deref(&self) -> &BialgebraData {
        &self.bialgebra
    }
}

/// JSON bundle `{"space", "m", "eta", "delta", "eps", "S"?}`.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct StructureBundle {
    pub space: SpaceLabel,
    pub m: LinMapWire,
    pub eta: LinMapWire,
    pub delta: LinMapWire,
    pub eps: LinMapWire,
    #[serde(rename = "S", default, skip_serializing_if = "Option::is_none")]
    pub antipode: Option<LinMapWire>,
}

impl StructureBundle {
    pub fn from_pair(s: &BiunitalPair, antipode: Option<&LinMap>) -> Self {
        StructureBundle {
            space: s.space.clone(),
            m: LinMapWire::from(&s.m),
            eta: LinMapWire::from(&s.eta),
            delta: LinMapWire::from(&s.delta),
            eps: LinMapWire::from(&s.eps),
            antipode: antipode.map(LinMapWire::from),
        }
    }

    pub fn resolve(self) -> Result<(BiunitalPair, Option<LinMap>)> {
        let space = self.space.clone();
        let look = |n: &str| (n == space.name).then(|| space.clone());
        let pair = BiunitalPair::new(
            self.space.clone(),
            self.m.resolve(look)?,
            self.eta.resolve(look)?,
            self.delta.resolve(look)?,
            self.eps.resolve(look)?,
        )?;
        let s = self.antipode.map(|w| w.resolve(look)).transpose()?;
        if let Some(s) = &s {
            let b = std::slice::from_ref(&space);
            expect_shape("S", s, b, b)?;
        }
        Ok((pair, s))
    }
}

fn check_algebra(s: &BiunitalPair, r: &mut CheckReport) -> Result<()> {
    let b = std::slice::from_ref(&s.space);
    let bbb = [s.space.clone(), s.space.clone(), s.space.clone()];
    let l = chain(&bbb, vec![vec![mp(&s.m), id(1)], vec![mp(&s.m)]])?;
    let rr = chain(&bbb, vec![vec![id(1), mp(&s.m)], vec![mp(&s.m)]])?;
    r.push_equal("associativity", &l, &rr)?;
    let idb = s.identity();
    r.push_equal(
        "left unit",
        &chain(b, vec![vec![mp(&s.eta), id(1)], vec![mp(&s.m)]])?,
        &idb,
    )?;
    r.push_equal(
        "right unit",
        &chain(b, vec![vec![id(1), mp(&s.eta)], vec![mp(&s.m)]])?,
        &idb,
    )
}

fn check_coalgebra(s: &BiunitalPair, r: &mut CheckReport) -> Result<()> {
    let b = std::slice::from_ref(&s.space);
    let l = chain(b, vec![vec![mp(&s.delta)], vec![mp(&s.delta), id(1)]])?;
    let rr = chain(b, vec![vec![mp(&s.delta)], vec![id(1), mp(&s.delta)]])?;
    r.push_equal("coassociativity", &l, &rr)?;
    let idb = s.identity();
    r.push_equal(
        "left counit",
        &chain(b, vec![vec![mp(&s.delta)], vec![mp(&s.eps), id(1)]])?,
        &idb,
    )?;
    r.push_equal(
        "right counit",
        &chain(b, vec![vec![mp(&s.delta)], vec![id(1), mp(&s.eps)]])?,
        &idb,
    )
}

fn check_compatibility(s: &BiunitalPair, psi: &LinMap, r: &mut CheckReport) -> Result<()> {
    let bb = [s.space.clone(), s.space.clone()];
    let l = chain(&bb, vec![vec![mp(&s.m)], vec![mp(&s.delta)]])?;
    let rr = chain(
        &bb,
        vec![
            vec![mp(&s.delta), mp(&s.delta)],
            vec![id(1), mp(psi), id(1)],
            vec![mp(&s.m), mp(&s.m)],
        ],
    )?;
    r.push_equal("Δ∘m = (m⊗m)(id⊗Ψ⊗id)(Δ⊗Δ)", &l, &rr)?;
    let eta2 = chain(&[], vec![vec![mp(&s.eta), mp(&s.eta)]])?;
    r.push_equal("Δ∘η = η⊗η", &compose(&s.delta, &s.eta)?, &eta2)?;
    let eps2 = chain(&bb, vec![vec![mp(&s.eps), mp(&s.eps)]])?;
    r.push_equal("ε∘m = ε⊗ε", &compose(&s.eps, &s.m)?, &eps2)
}

/// `m∘(S⊗id)∘Δ` and `m∘(id⊗S)∘Δ` against `η∘ε`.
fn check_antipode(s: &BiunitalPair, antipode: &LinMap, r: &mut CheckReport) -> Result<()> {
    let b = std::slice::from_ref(&s.space);
    expect_shape("S", antipode, b, b)?;
    let ue = s.unit_counit();
    let l = chain(
        b,
        vec![
            vec![mp(&s.delta)],
            vec![mp(antipode), id(1)],
            vec![mp(&s.m)],
        ],
    )?;
    r.push_equal("m(S⊗id)Δ = ηε", &l, &ue)?;
    let rr = chain(
        b,
        vec![
            vec![mp(&s.delta)],
            vec![id(1), mp(antipode)],
            vec![mp(&s.m)],
        ],
    )?;
    r.push_equal("m(id⊗S)Δ = ηε", &rr, &ue)
}

/// Checks the axioms of the requested kind, each as an exact equality of
/// linear maps. `ε∘η = id` is always included.
pub fn check_axioms(
    s: &BiunitalPair,
    antipode: Option<&LinMap>,
    kind: StructureKind,
    bp: &BraidingProvider,
) -> Result<CheckReport> {
    s.check_shapes()?;
    let psi = match kind {
        StructureKind::Bialgebra | StructureKind::Hopf => {
            let b = std::slice::from_ref(&s.space);
            bp.braid(b, b)?
        }
        _ => LinMap::identity(&[]),
    };
    check_axioms_with_braiding(s, antipode, kind, &psi)
}

/// As [`check_axioms`] with an explicit `Ψ_{B,B}`, for objects whose
/// braiding is assembled from several strands.
pub fn check_axioms_with_braiding(
    s: &BiunitalPair,
    antipode: Option<&LinMap>,
    kind: StructureKind,
    psi: &LinMap,
) -> Result<CheckReport> {
    s.check_shapes()?;
    let mut r = CheckReport::new();
    r.push_equal(
        "ε∘η = id",
        &compose(&s.eps, &s.eta)?,
        &LinMap::identity(&[]),
    )?;
    match kind {
        StructureKind::Algebra => check_algebra(s, &mut r)?,
        StructureKind::Coalgebra => check_coalgebra(s, &mut r)?,
        StructureKind::Bialgebra | StructureKind::Hopf => {
            check_algebra(s, &mut r)?;
            check_coalgebra(s, &mut r)?;
            check_compatibility(s, psi, &mut r)?;
        }
    }
    if kind == StructureKind::Hopf {
        let a =
            antipode.ok_or_else(|| Error::Precondition("a Hopf check needs an antipode".into()))?;
        check_antipode(s, a, &mut r)?;
    }
    Ok(r)
}

/// Full Hopf algebra check with the flip braiding.
pub fn check_hopf(h: &HopfAlgebraData) -> Result<CheckReport> {
    check_axioms(
        &h.bialgebra,
        Some(&h.antipode),
        StructureKind::Hopf,
        &BraidingProvider::VectFlip,
    )
}

fn action_shape(a: &ActionData) -> (Vec<SpaceLabel>, Vec<SpaceLabel>) {
    let (m, h) = (a.carrier.clone(), a.actor.space.clone());
    match a.kind {
        ActionKind::ModuleL => (vec![h, m.clone()], vec![m]),
        ActionKind::ModuleR => (vec![m.clone(), h], vec![m]),
        ActionKind::ComoduleL => (vec![m.clone()], vec![h, m]),
        ActionKind::ComoduleR => (vec![m.clone()], vec![m, h]),
    }
}

/// (Co)associativity and (co)unitality of a (co)action, without checking
/// the actor first.
pub fn action_axioms(a: &ActionData) -> Result<CheckReport> {
    let (dom, cod) = action_shape(a);
    expect_shape("action", &a.map, &dom, &cod)?;
    let (m, h) = (a.carrier.clone(), a.actor.space.clone());
    let x = &a.actor;
    let mu = &a.map;
    let idm = LinMap::identity(std::slice::from_ref(&m));
    let mut r = CheckReport::new();
    match a.kind {
        ActionKind::ModuleL => {
            let hhm = [h.clone(), h.clone(), m.clone()];
            let l = chain(&hhm, vec![vec![mp(&x.m), id(1)], vec![mp(mu)]])?;
            let rr = chain(&hhm, vec![vec![id(1), mp(mu)], vec![mp(mu)]])?;
            r.push_equal("action associativity", &l, &rr)?;
            let u = chain(&[m], vec![vec![mp(&x.eta), id(1)], vec![mp(mu)]])?;
            r.push_equal("action unit", &u, &idm)?;
        }
        ActionKind::ModuleR => {
            let mhh = [m.clone(), h.clone(), h.clone()];
            let l = chain(&mhh, vec![vec![mp(mu), id(1)], vec![mp(mu)]])?;
            let rr = chain(&mhh, vec![vec![id(1), mp(&x.m)], vec![mp(mu)]])?;
            r.push_equal("action associativity", &l, &rr)?;
            let u = chain(&[m], vec![vec![id(1), mp(&x.eta)], vec![mp(mu)]])?;
            r.push_equal("action unit", &u, &idm)?;
        }
        ActionKind::ComoduleL => {
            let ms = [m.clone()];
            let l = chain(&ms, vec![vec![mp(mu)], vec![mp(&x.delta), id(1)]])?;
            let rr = chain(&ms, vec![vec![mp(mu)], vec![id(1), mp(mu)]])?;
            r.push_equal("coaction coassociativity", &l, &rr)?;
            let u = chain(&ms, vec![vec![mp(mu)], vec![mp(&x.eps), id(1)]])?;
            r.push_equal("coaction counit", &u, &idm)?;
        }
        ActionKind::ComoduleR => {
            let ms = [m.clone()];
            let l = chain(&ms, vec![vec![mp(mu)], vec![mp(mu), id(1)]])?;
            let rr = chain(&ms, vec![vec![mp(mu)], vec![id(1), mp(&x.delta)]])?;
            r.push_equal("coaction coassociativity", &l, &rr)?;
            let u = chain(&ms, vec![vec![mp(mu)], vec![id(1), mp(&x.eps)]])?;
            r.push_equal("coaction counit", &u, &idm)?;
        }
    }
    Ok(r)
}

/// Checks a (co)action; the actor must first pass its algebra (for
/// modules) or coalgebra (for comodules) axioms.
pub fn check_action(a: &ActionData) -> Result<CheckReport> {
    let kind = match a.kind {
        ActionKind::ModuleL | ActionKind::ModuleR => StructureKind::Algebra,
        ActionKind::ComoduleL | ActionKind::ComoduleR => StructureKind::Coalgebra,
    };
    let pre = check_axioms(&a.actor, None, kind, &BraidingProvider::VectFlip)?;
    if !pre.passed() {
        return Err(Error::Precondition(format!(
            "actor {} fails: {}",
            a.actor.space,
            pre.failure_summary()
        )));
    }
    action_axioms(a)
}

/// The right crossed-module identity
/// `m_(0)◁h_(1) ⊗ m_(1)h_(2) = (m◁h_(2))_(0) ⊗ h_(1)(m◁h_(2))_(1)`.
pub(crate) fn crossed_module_identity(
    space: &SpaceLabel,
    action: &LinMap,
    coaction: &LinMap,
    h: &BiunitalPair,
) -> Result<(LinMap, LinMap)> {
    let (m, hs) = (space.clone(), h.space.clone());
    let mh = [m.clone(), hs.clone()];
    let lhs = chain(
        &mh,
        vec![
            vec![mp(coaction), mp(&h.delta)],
            vec![
                id(1),
                mp(&crate::tensor::flip(
                    std::slice::from_ref(&hs),
                    std::slice::from_ref(&hs),
                )),
                id(1),
            ],
            vec![mp(action), mp(&h.m)],
        ],
    )?;
    let rhs = chain(
        &mh,
        vec![
            vec![id(1), mp(&h.delta)],
            vec![
                mp(&crate::tensor::flip(
                    std::slice::from_ref(&m),
                    std::slice::from_ref(&hs),
                )),
                id(1),
            ],
            vec![id(1), mp(action)],
            vec![id(1), mp(coaction)],
            vec![
                mp(&crate::tensor::flip(
                    std::slice::from_ref(&hs),
                    std::slice::from_ref(&m),
                )),
                id(1),
            ],
            vec![id(1), mp(&h.m)],
        ],
    )?;
    Ok((lhs, rhs))
}

/// Checks that `(M, action, coaction)` is a right crossed module over `h`.
/// The module and comodule axioms are preconditions.
pub fn check_crossed_module(
    space: &SpaceLabel,
    action: &LinMap,
    coaction: &LinMap,
    h: &HopfAlgebraData,
) -> Result<CheckReport> {
    for (map, kind) in [
        (action, ActionKind::ModuleR),
        (coaction, ActionKind::ComoduleR),
    ] {
        let r = check_action(&ActionData {
            carrier: space.clone(),
            actor: h.bialgebra.clone(),
            map: map.clone(),
            kind,
        })?;
        if !r.passed() {
            return Err(Error::Precondition(format!(
                "{kind:?} axioms fail: {}",
                r.failure_summary()
            )));
        }
    }
    let (lhs, rhs) = crossed_module_identity(space, action, coaction, &h.bialgebra)?;
    let mut r = CheckReport::new();
    r.push_equal("crossed module compatibility", &lhs, &rhs)?;
    Ok(r)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct MorphismClass {
    pub is_algebra_morphism: bool,
    pub is_coalgebra_morphism: bool,
}

/// Per-equation report for `f: src → dst`.
pub fn morphism_report(f: &LinMap, src: &BiunitalPair, dst: &BiunitalPair) -> Result<CheckReport> {
    expect_shape(
        "morphism",
        f,
        std::slice::from_ref(&src.space),
        std::slice::from_ref(&dst.space),
    )?;
    let ss = [src.space.clone(), src.space.clone()];
    let mut r = CheckReport::new();
    let ff = crate::tensor::tensor(f, f);
    r.push_equal(
        "f∘m = m∘(f⊗f)",
        &compose(f, &src.m)?,
        &chain(&ss, vec![vec![mp(f), mp(f)], vec![mp(&dst.m)]])?,
    )?;
    r.push_equal("f∘η = η", &compose(f, &src.eta)?, &dst.eta)?;
    r.push_equal(
        "(f⊗f)∘Δ = Δ∘f",
        &compose(&ff, &src.delta)?,
        &compose(&dst.delta, f)?,
    )?;
    r.push_equal("ε∘f = ε", &compose(&dst.eps, f)?, &src.eps)?;
    Ok(r)
}

pub fn classify_morphism(
    f: &LinMap,
    src: &BiunitalPair,
    dst: &BiunitalPair,
) -> Result<MorphismClass> {
    let r = morphism_report(f, src, dst)?;
    Ok(MorphismClass {
        is_algebra_morphism: r.entries[0].passed && r.entries[1].passed,
        is_coalgebra_morphism: r.entries[2].passed && r.entries[3].passed,
    })
}

/// `f * g = m_A∘(f⊗g)∘Δ_C` for maps between possibly multi-strand spaces.
pub fn convolve(f: &LinMap, g: &LinMap, delta_c: &LinMap, m_a: &LinMap) -> Result<LinMap> {
    chain(
        f.dom(),
        vec![vec![mp(delta_c)], vec![mp(f), mp(g)], vec![mp(m_a)]],
    )
}

/// Solves `f*g = η_A ε_C = g*f` for `g` in Hom(C, A) given raw structure
/// maps; C and A may be tensor products of several strands.
pub fn convolution_inverse_raw(
    f: &LinMap,
    delta_c: &LinMap,
    eps_c: &LinMap,
    m_a: &LinMap,
    eta_a: &LinMap,
) -> Result<LinMap> {
    let dc = total_dim(f.dom());
    let da = total_dim(f.cod());
    let var = |a: usize, c: usize| c * da + a;
    let unit = compose(eta_a, eps_c)?;
    // one equation per (output a, input c) for each side
    let mut left: Vec<Accumulator> = (0..dc * da).map(|_| Accumulator::new()).collect();
    let mut right: Vec<Accumulator> = (0..dc * da).map(|_| Accumulator::new()).collect();
    for c in 0..dc {
        for (r, coeff) in delta_c.column(c) {
            let (c1, c2) = (r / dc, r % dc);
            for (a, fa) in f.column(c1) {
                let k = coeff * fa;
                for a2 in 0..da {
                    for (out, mv) in m_a.column(a * da + a2) {
                        left[out * dc + c].add(var(a2, c2), &k * mv);
                    }
                }
            }
            for (a, fa) in f.column(c2) {
                let k = coeff * fa;
                for a1 in 0..da {
                    for (out, mv) in m_a.column(a1 * da + a) {
                        right[out * dc + c].add(var(a1, c1), &k * mv);
                    }
                }
            }
        }
    }
    let mut eqs = Vec::with_capacity(2 * dc * da);
    for (k, acc) in left.into_iter().chain(right).enumerate() {
        let k = k % (dc * da);
        let (out, c) = (k / dc, k % dc);
        eqs.push((acc.finish(), unit.entry(out, c)));
    }
    let (x, _) = solve(eqs, dc * da).ok_or(Error::NotConvolutionInvertible)?;
    let cols = (0..dc)
        .map(|c| {
            (0..da)
                .filter_map(|a| {
                    let v = &x[var(a, c)];
                    (!v.is_zero()).then(|| (a, v.clone()))
                })
                .collect()
        })
        .collect();
    let g = LinMap::from_columns(f.dom().to_vec(), f.cod().to_vec(), cols)?;
    if convolve(f, &g, delta_c, m_a)? != unit || convolve(&g, f, delta_c, m_a)? != unit {
        return Err(Error::InternalConsistency(
            "convolution inverse failed verification".into(),
        ));
    }
    Ok(g)
}

/// Convolution inverse of `f: C → A`; C must be a coalgebra and A an
/// algebra.
pub fn convolution_inverse(f: &LinMap, c: &BiunitalPair, a: &BiunitalPair) -> Result<LinMap> {
    expect_shape(
        "f",
        f,
        std::slice::from_ref(&c.space),
        std::slice::from_ref(&a.space),
    )?;
    let flip = BraidingProvider::VectFlip;
    let pc = check_axioms(c, None, StructureKind::Coalgebra, &flip)?;
    let pa = check_axioms(a, None, StructureKind::Algebra, &flip)?;
    if !pc.passed() || !pa.passed() {
        return Err(Error::Precondition(format!(
            "coalgebra: {}; algebra: {}",
            pc.failure_summary(),
            pa.failure_summary()
        )));
    }
    convolution_inverse_raw(f, &c.delta, &c.eps, &a.m, &a.eta)
}

/// Comultiplication of `X⊗Y` as a tensor product coalgebra:
/// `(id⊗Ψ_{X,Y}⊗id)∘(Δ_X⊗Δ_Y)`.
pub fn tensor_coproduct(
    xs: &[SpaceLabel],
    delta_x: &LinMap,
    ys: &[SpaceLabel],
    delta_y: &LinMap,
    psi: &LinMap,
) -> Result<LinMap> {
    let mut input = xs.to_vec();
    input.extend(ys.iter().cloned());
    chain(
        &input,
        vec![
            vec![mp(delta_x), mp(delta_y)],
            vec![id(xs.len()), mp(psi), id(ys.len())],
        ],
    )
}

/// Multiplication of `X⊗Y` as a tensor product algebra:
/// `(m_X⊗m_Y)∘(id⊗Ψ_{Y,X}⊗id)`.
pub fn tensor_product_mult(
    xs: &[SpaceLabel],
    m_x: &LinMap,
    ys: &[SpaceLabel],
    m_y: &LinMap,
    psi: &LinMap,
) -> Result<LinMap> {
    let mut input = xs.to_vec();
    input.extend(ys.iter().cloned());
    input.extend(xs.iter().cloned());
    input.extend(ys.iter().cloned());
    chain(
        &input,
        vec![
            vec![id(xs.len()), mp(psi), id(ys.len())],
            vec![mp(m_x), mp(m_y)],
        ],
    )
}

/// `S∘m = m∘(S⊗S)∘Ψ` and `Δ∘S = (S⊗S)∘Ψ∘Δ` with the flip.
pub fn antipode_anti_morphism(h: &HopfAlgebraData) -> Result<CheckReport> {
    let b = std::slice::from_ref(h.space());
    let bb = [h.space().clone(), h.space().clone()];
    let s = &h.antipode;
    let fl = crate::tensor::flip(b, b);
    let mut r = CheckReport::new();
    let l = compose(s, &h.m)?;
    let rr = chain(&bb, vec![vec![mp(&fl)], vec![mp(s), mp(s)], vec![mp(&h.m)]])?;
    r.push_equal("S∘m = m∘(S⊗S)∘flip", &l, &rr)?;
    let l = compose(&h.delta, s)?;
    let rr = chain(
        b,
        vec![vec![mp(&h.delta)], vec![mp(&fl)], vec![mp(s), mp(s)]],
    )?;
    r.push_equal("Δ∘S = (S⊗S)∘flip∘Δ", &l, &rr)?;
    Ok(r)
}

/// Evaluates several independent checks concurrently and concatenates the
/// reports in the given order.
pub fn run_checks<F>(checks: Vec<(&str, F)>) -> Result<CheckReport>
where
    F: Fn() -> Result<CheckReport> + Send + Sync,
{
    let parts: Vec<Result<CheckReport>> = checks.par_iter().map(|(_, f)| f()).collect();
    let mut out = CheckReport::new();
    for ((prefix, _), p) in checks.iter().zip(parts) {
        out.extend_prefixed(prefix, p?);
    }
    Ok(out)
}
