//! Hopf data: two algebra-coalgebra objects with four interrelated
//! (co)actions, the induced structures on their tensor product, the Φ
//! recursion and trivalence classification.

mod classify;
mod phi;

pub use classify::{
    build_bialgebra, canonical_maps, classify, classify_pattern, trivalence, CanonicalMaps,
    Classification, Family, Trivalence, TrivalencePattern,
};
pub use phi::{
    compatibility_sides, order_of, phi_apply, projector, recursion_order, OrderReport, PhiEngine,
    PhiSuperoperator, RecursionOrder,
};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::structures::{
    action_axioms, check_axioms, ActionData, ActionKind, BiunitalPair, CheckReport, StructureKind,
};
use crate::tensor::{chain, compose, id, mp, BraidingProvider, LinMap, Piece, SpaceLabel};

#[derive(Clone, Debug)]
pub struct HopfDatum {
    pub b1: BiunitalPair,
    pub b2: BiunitalPair,
    /// `B2 ⊗ B1 → B1`
    pub mu_l: LinMap,
    /// `B1 → B2 ⊗ B1`
    pub nu_l: LinMap,
    /// `B2 ⊗ B1 → B2`
    pub mu_r: LinMap,
    /// `B2 → B2 ⊗ B1`
    pub nu_r: LinMap,
    pub braiding: BraidingProvider,
}

/// The four crossings between the two factors.
#[derive(Clone, Debug)]
pub(crate) struct Crossings {
    pub b11: LinMap,
    pub b12: LinMap,
    pub b21: LinMap,
    pub b22: LinMap,
}

/// Algebra and coalgebra structure induced on `B1 ⊗ B2`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InducedStructures {
    /// `B1 ⊗ B2 → B2 ⊗ B1`
    pub phi12: LinMap,
    /// `B2 ⊗ B1 → B1 ⊗ B2`
    pub phi21: LinMap,
    pub m: LinMap,
    pub eta: LinMap,
    pub delta: LinMap,
    pub eps: LinMap,
}

impl HopfDatum {
    pub fn s1(&self) -> &SpaceLabel {
        &self.b1.space
    }

    pub fn s2(&self) -> &SpaceLabel {
        &self.b2.space
    }

    /// The strands `B1 ⊗ B2`.
    pub fn strands(&self) -> Vec<SpaceLabel> {
        vec![self.s1().clone(), self.s2().clone()]
    }

    /// The datum with all four (co)actions trivial.
    pub fn trivial(b1: BiunitalPair, b2: BiunitalPair, braiding: BraidingProvider) -> Result<Self> {
        let mu_l = crate::tensor::tensor(&b2.eps, &b1.identity());
        let mu_r = crate::tensor::tensor(&b2.identity(), &b1.eps);
        let nu_l = crate::tensor::tensor(&b2.eta, &b1.identity());
        let nu_r = crate::tensor::tensor(&b2.identity(), &b1.eta);
        let d = HopfDatum {
            b1,
            b2,
            mu_l,
            nu_l,
            mu_r,
            nu_r,
            braiding,
        };
        d.check_shapes()?;
        Ok(d)
    }

    pub fn check_shapes(&self) -> Result<()> {
        self.b1.check_shapes()?;
        self.b2.check_shapes()?;
        let (s1, s2) = (self.s1().clone(), self.s2().clone());
        let want = |name: &str, m: &LinMap, dom: Vec<SpaceLabel>, cod: Vec<SpaceLabel>| {
            if m.dom() != dom.as_slice() || m.cod() != cod.as_slice() {
                return Err(Error::shape(
                    format!(
                        "{name}: {} → {}",
                        crate::tensor::describe(&dom),
                        crate::tensor::describe(&cod)
                    ),
                    format!(
                        "{} → {}",
                        crate::tensor::describe(m.dom()),
                        crate::tensor::describe(m.cod())
                    ),
                ));
            }
            Ok(())
        };
        want(
            "μ_l",
            &self.mu_l,
            vec![s2.clone(), s1.clone()],
            vec![s1.clone()],
        )?;
        want(
            "ν_l",
            &self.nu_l,
            vec![s1.clone()],
            vec![s2.clone(), s1.clone()],
        )?;
        want(
            "μ_r",
            &self.mu_r,
            vec![s2.clone(), s1.clone()],
            vec![s2.clone()],
        )?;
        want(
            "ν_r",
            &self.nu_r,
            vec![s2.clone()],
            vec![s2.clone(), s1.clone()],
        )
    }

    pub(crate) fn crossings(&self) -> Result<Crossings> {
        let (s1, s2) = (self.s1(), self.s2());
        let bp = &self.braiding;
        Ok(Crossings {
            b11: crate::tensor::braiding(bp, s1, s1)?,
            b12: crate::tensor::braiding(bp, s1, s2)?,
            b21: crate::tensor::braiding(bp, s2, s1)?,
            b22: crate::tensor::braiding(bp, s2, s2)?,
        })
    }

    /// Which (co)actions coincide literally with the trivial ones.
    pub fn trivial_flags(&self) -> (bool, bool, bool, bool) {
        let (b1, b2) = (&self.b1, &self.b2);
        let t_mu_l = crate::tensor::tensor(&b2.eps, &b1.identity());
        let t_mu_r = crate::tensor::tensor(&b2.identity(), &b1.eps);
        let t_nu_l = crate::tensor::tensor(&b2.eta, &b1.identity());
        let t_nu_r = crate::tensor::tensor(&b2.identity(), &b1.eta);
        (
            self.nu_l == t_nu_l,
            self.nu_r == t_nu_r,
            self.mu_l == t_mu_l,
            self.mu_r == t_mu_r,
        )
    }
}

fn push(
    r: &mut CheckReport,
    name: &str,
    input: &[SpaceLabel],
    lhs: Vec<Vec<Piece>>,
    rhs: Vec<Vec<Piece>>,
) -> Result<()> {
    let l = chain(input, lhs)?;
    let rr = chain(input, rhs)?;
    r.push_equal(name, &l, &rr)
}

/// Verifies every defining identity of a Hopf datum exactly.
pub fn check_hopf_datum(d: &HopfDatum) -> Result<CheckReport> {
    d.check_shapes()?;
    let (b1, b2) = (&d.b1, &d.b2);
    let (s1, s2) = (d.s1().clone(), d.s2().clone());
    let x = d.crossings()?;
    let flip = BraidingProvider::VectFlip;
    let mut r = CheckReport::new();
    for (prefix, b) in [("B1 ", b1), ("B2 ", b2)] {
        let alg = check_axioms(b, None, StructureKind::Algebra, &flip)?;
        let mut coalg = check_axioms(b, None, StructureKind::Coalgebra, &flip)?;
        coalg.entries.remove(0);
        r.extend_prefixed(prefix, alg);
        r.extend_prefixed(prefix, coalg);
    }
    let (mu_l, nu_l, mu_r, nu_r) = (&d.mu_l, &d.nu_l, &d.mu_r, &d.nu_r);
    let (m1, m2, d1, d2) = (&b1.m, &b2.m, &b1.delta, &b2.delta);
    let (e1, e2, u1, u2) = (&b1.eps, &b2.eps, &b1.eta, &b2.eta);
    let one1 = [s1.clone()];
    let one2 = [s2.clone()];
    let s21 = [s2.clone(), s1.clone()];

    // (co)unit interactions
    let u2e1 = compose(u2, e1)?;
    let u1e2 = compose(u1, e2)?;
    r.push_equal(
        "μ_r(η2⊗id) = η2ε1",
        &chain(&one1, vec![vec![mp(u2), id(1)], vec![mp(mu_r)]])?,
        &u2e1,
    )?;
    r.push_equal(
        "(id⊗ε1)ν_l = η2ε1",
        &chain(&one1, vec![vec![mp(nu_l)], vec![id(1), mp(e1)]])?,
        &u2e1,
    )?;
    let e2e1 = crate::tensor::tensor(e2, e1);
    r.push_equal("ε2∘μ_r = ε2⊗ε1", &compose(e2, mu_r)?, &e2e1)?;
    r.push_equal("ε1∘μ_l = ε2⊗ε1", &compose(e1, mu_l)?, &e2e1)?;
    r.push_equal(
        "μ_l(id⊗η1) = η1ε2",
        &chain(&one2, vec![vec![id(1), mp(u1)], vec![mp(mu_l)]])?,
        &u1e2,
    )?;
    r.push_equal(
        "(ε2⊗id)ν_r = η1ε2",
        &chain(&one2, vec![vec![mp(nu_r)], vec![mp(e2), id(1)]])?,
        &u1e2,
    )?;
    let u2u1 = crate::tensor::tensor(u2, u1);
    r.push_equal("ν_r∘η2 = η2⊗η1", &compose(nu_r, u2)?, &u2u1)?;
    r.push_equal("ν_l∘η1 = η2⊗η1", &compose(nu_l, u1)?, &u2u1)?;

    // algebra-coalgebra compatibility
    let s11 = [s1.clone(), s1.clone()];
    let s22 = [s2.clone(), s2.clone()];
    push(
        &mut r,
        "algebra-coalgebra compatibility of B1",
        &s11,
        vec![vec![mp(m1)], vec![mp(d1)]],
        vec![
            vec![mp(d1), mp(d1)],
            vec![id(1), mp(nu_l), id(2)],
            vec![id(2), mp(&x.b11), id(1)],
            vec![id(1), mp(mu_l), id(2)],
            vec![mp(m1), mp(m1)],
        ],
    )?;
    push(
        &mut r,
        "algebra-coalgebra compatibility of B2",
        &s22,
        vec![vec![mp(m2)], vec![mp(d2)]],
        vec![
            vec![mp(d2), mp(d2)],
            vec![id(2), mp(nu_r), id(1)],
            vec![id(1), mp(&x.b22), id(2)],
            vec![id(2), mp(mu_r), id(1)],
            vec![mp(m2), mp(m2)],
        ],
    )?;

    // module-comodule compatibility
    push(
        &mut r,
        "module-comodule compatibility",
        &s21,
        vec![
            vec![mp(d2), mp(d1)],
            vec![id(1), mp(&x.b21), id(1)],
            vec![mp(mu_l), mp(mu_r)],
            vec![mp(nu_l), mp(nu_r)],
            vec![id(1), mp(&x.b12), id(1)],
            vec![mp(m2), mp(m1)],
        ],
        vec![
            vec![mp(d2), mp(d1)],
            vec![mp(nu_r), mp(&x.b21), mp(nu_l)],
            vec![id(1), mp(&x.b11), mp(&x.b22), id(1)],
            vec![mp(mu_r), mp(&x.b12), mp(mu_l)],
            vec![mp(m2), mp(m1)],
        ],
    )?;

    // module-algebra compatibility
    let s221 = [s2.clone(), s2.clone(), s1.clone()];
    push(
        &mut r,
        "module-algebra compatibility of μ_r",
        &s221,
        vec![vec![mp(m2), id(1)], vec![mp(mu_r)]],
        vec![
            vec![id(1), mp(d2), mp(d1)],
            vec![id(2), mp(&x.b21), id(1)],
            vec![id(1), mp(mu_l), mp(mu_r)],
            vec![mp(mu_r), id(1)],
            vec![mp(m2)],
        ],
    )?;
    let s211 = [s2.clone(), s1.clone(), s1.clone()];
    push(
        &mut r,
        "module-algebra compatibility of μ_l",
        &s211,
        vec![vec![id(1), mp(m1)], vec![mp(mu_l)]],
        vec![
            vec![mp(d2), mp(d1), id(1)],
            vec![id(1), mp(&x.b21), id(2)],
            vec![mp(mu_l), mp(mu_r), id(1)],
            vec![id(1), mp(mu_l)],
            vec![mp(m1)],
        ],
    )?;

    // comodule-coalgebra compatibility
    push(
        &mut r,
        "comodule-coalgebra compatibility of ν_r",
        &one2,
        vec![vec![mp(nu_r)], vec![mp(d2), id(1)]],
        vec![
            vec![mp(d2)],
            vec![mp(nu_r), id(1)],
            vec![id(1), mp(nu_l), mp(nu_r)],
            vec![id(2), mp(&x.b12), id(1)],
            vec![id(1), mp(m2), mp(m1)],
        ],
    )?;
    push(
        &mut r,
        "comodule-coalgebra compatibility of ν_l",
        &one1,
        vec![vec![mp(nu_l)], vec![id(1), mp(d1)]],
        vec![
            vec![mp(d1)],
            vec![id(1), mp(nu_l)],
            vec![mp(nu_l), mp(nu_r), id(1)],
            vec![id(1), mp(&x.b12), id(2)],
            vec![mp(m2), mp(m1), id(1)],
        ],
    )?;

    // module-coalgebra compatibility
    push(
        &mut r,
        "module-coalgebra compatibility of μ_r",
        &s21,
        vec![vec![mp(mu_r)], vec![mp(d2)]],
        vec![
            vec![mp(d2), mp(d1)],
            vec![id(1), mp(&x.b21), mp(nu_l)],
            vec![mp(mu_r), mp(&x.b22), id(1)],
            vec![mp(m2), mp(mu_r)],
        ],
    )?;
    push(
        &mut r,
        "module-coalgebra compatibility of μ_l",
        &s21,
        vec![vec![mp(mu_l)], vec![mp(d1)]],
        vec![
            vec![mp(d2), mp(d1)],
            vec![mp(nu_r), mp(&x.b21), id(1)],
            vec![id(1), mp(&x.b11), mp(mu_l)],
            vec![mp(mu_l), mp(m1)],
        ],
    )?;

    // comodule-algebra compatibility
    push(
        &mut r,
        "comodule-algebra compatibility of ν_r",
        &s22,
        vec![vec![mp(m2)], vec![mp(nu_r)]],
        vec![
            vec![mp(d2), mp(nu_r)],
            vec![mp(nu_r), mp(&x.b22), id(1)],
            vec![id(1), mp(&x.b12), mp(mu_l)],
            vec![mp(m2), mp(m1)],
        ],
    )?;
    push(
        &mut r,
        "comodule-algebra compatibility of ν_l",
        &s11,
        vec![vec![mp(m1)], vec![mp(nu_l)]],
        vec![
            vec![mp(nu_l), mp(d1)],
            vec![id(1), mp(&x.b11), mp(nu_l)],
            vec![mp(mu_r), mp(&x.b12), id(1)],
            vec![mp(m2), mp(m1)],
        ],
    )?;

    // underlying (co)module structures
    let actions = [
        ("μ_l ", s1.clone(), b2, mu_l, ActionKind::ModuleL),
        ("ν_l ", s1.clone(), b2, nu_l, ActionKind::ComoduleL),
        ("μ_r ", s2.clone(), b1, mu_r, ActionKind::ModuleR),
        ("ν_r ", s2.clone(), b1, nu_r, ActionKind::ComoduleR),
    ];
    for (prefix, carrier, actor, map, kind) in actions {
        let a = ActionData {
            carrier,
            actor: actor.clone(),
            map: map.clone(),
            kind,
        };
        r.extend_prefixed(prefix, action_axioms(&a)?);
    }
    Ok(r)
}

/// φ's and the induced (co)multiplication, without validating the datum.
pub fn induced_structures_unchecked(d: &HopfDatum) -> Result<InducedStructures> {
    d.check_shapes()?;
    let (b1, b2) = (&d.b1, &d.b2);
    let (s1, s2) = (d.s1().clone(), d.s2().clone());
    let x = d.crossings()?;
    let phi12 = chain(
        &[s1.clone(), s2.clone()],
        vec![
            vec![mp(&d.nu_l), mp(&d.nu_r)],
            vec![id(1), mp(&x.b12), id(1)],
            vec![mp(&b2.m), mp(&b1.m)],
        ],
    )?;
    let phi21 = chain(
        &[s2.clone(), s1.clone()],
        vec![
            vec![mp(&b2.delta), mp(&b1.delta)],
            vec![id(1), mp(&x.b21), id(1)],
            vec![mp(&d.mu_l), mp(&d.mu_r)],
        ],
    )?;
    let b = [s1.clone(), s2.clone()];
    let bb = [s1.clone(), s2.clone(), s1.clone(), s2.clone()];
    let m = chain(
        &bb,
        vec![vec![id(1), mp(&phi21), id(1)], vec![mp(&b1.m), mp(&b2.m)]],
    )?;
    let delta = chain(
        &b,
        vec![
            vec![mp(&b1.delta), mp(&b2.delta)],
            vec![id(1), mp(&phi12), id(1)],
        ],
    )?;
    Ok(InducedStructures {
        phi12,
        phi21,
        m,
        eta: crate::tensor::tensor(&b1.eta, &b2.eta),
        delta,
        eps: crate::tensor::tensor(&b1.eps, &b2.eps),
    })
}

/// φ's and the induced algebra and coalgebra on `B1 ⊗ B2`, refusing
/// invalid data and verifying the (co)algebra axioms of the result.
pub fn induced_structures(d: &HopfDatum) -> Result<InducedStructures> {
    let report = check_hopf_datum(d)?;
    if !report.passed() {
        return Err(Error::Precondition(format!(
            "not a Hopf datum: {}",
            report.failure_summary()
        )));
    }
    let ind = induced_structures_unchecked(d)?;
    let flat = ind.flatten(d)?;
    let flip = BraidingProvider::VectFlip;
    let alg = check_axioms(&flat, None, StructureKind::Algebra, &flip)?;
    let coalg = check_axioms(&flat, None, StructureKind::Coalgebra, &flip)?;
    if !alg.passed() || !coalg.passed() {
        return Err(Error::InternalConsistency(format!(
            "induced structures fail: {}; {}",
            alg.failure_summary(),
            coalg.failure_summary()
        )));
    }
    Ok(ind)
}

/// Name of the single space standing for `B1 ⊗ B2`.
pub fn product_label(s1: &SpaceLabel, s2: &SpaceLabel) -> SpaceLabel {
    SpaceLabel::new(format!("{}⊗{}", s1.name, s2.name), s1.dim * s2.dim)
}

impl InducedStructures {
    /// The same structure with `B1 ⊗ B2` fused into one space.
    pub fn flatten(&self, d: &HopfDatum) -> Result<BiunitalPair> {
        let b = product_label(d.s1(), d.s2());
        let f = |m: &LinMap| {
            let k = |n: usize| vec![b.clone(); n / 2];
            m.relabel(k(m.dom().len()), k(m.cod().len()))
        };
        BiunitalPair::new(
            b.clone(),
            f(&self.m)?,
            f(&self.eta)?,
            f(&self.delta)?,
            f(&self.eps)?,
        )
    }
}
