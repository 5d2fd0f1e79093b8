//! Pairings `⟨.,.⟩: H⊗A → k` between bialgebras and the actions they
//! induce.

use serde::Serialize;

use super::field_mult;
use crate::datum::HopfDatum;
use crate::error::{Error, Result};
use crate::structures::{
    action_axioms, check_axioms, convolution_inverse_raw, tensor_coproduct, ActionData, ActionKind,
    BialgebraData, BiunitalPair, CheckReport, StructureKind,
};
use crate::tensor::{chain, compose, id, invert, mp, tensor, BraidingProvider, LinMap, SpaceLabel};

pub const PAIRING_MULT_H: &str = "⟨.,.⟩∘(m_H⊗id) = ⟨.,.⟩∘(id⊗⟨.,.⟩⊗id)∘(id⊗id⊗Ψ∘Δ_A)";
pub const PAIRING_MULT_A: &str = "⟨.,.⟩∘(id⊗m_A) = ⟨.,.⟩∘(id⊗⟨.,.⟩⊗id)∘(Δ_H⊗id⊗id)";
pub const PAIRING_UNIT_H: &str = "⟨.,.⟩∘(η_H⊗id) = ε_A";
pub const PAIRING_UNIT_A: &str = "⟨.,.⟩∘(id⊗η_A) = ε_H";

#[derive(Clone, Debug)]
pub struct DualPairing {
    pub h: BialgebraData,
    pub a: BialgebraData,
    /// `H ⊗ A → k`
    pub form: LinMap,
}

impl DualPairing {
    pub fn new(h: BialgebraData, a: BialgebraData, form: LinMap) -> Result<Self> {
        let dom = vec![h.space.clone(), a.space.clone()];
        if form.dom() != dom.as_slice() || !form.cod().is_empty() {
            return Err(Error::shape(
                format!("⟨.,.⟩: {} → k", crate::tensor::describe(&dom)),
                format!(
                    "{} → {}",
                    crate::tensor::describe(form.dom()),
                    crate::tensor::describe(form.cod())
                ),
            ));
        }
        Ok(DualPairing { h, a, form })
    }

    fn hs(&self) -> SpaceLabel {
        self.h.space.clone()
    }

    fn as_(&self) -> SpaceLabel {
        self.a.space.clone()
    }

    /// Comultiplication and counit of the tensor coalgebra `H⊗A`.
    pub fn coalgebra(&self, bp: &BraidingProvider) -> Result<(LinMap, LinMap)> {
        let (h, a) = ([self.hs()], [self.as_()]);
        let psi = bp.braid(&h, &a)?;
        let delta = tensor_coproduct(&h, &self.h.delta, &a, &self.a.delta, &psi)?;
        Ok((delta, tensor(&self.h.eps, &self.a.eps)))
    }

    /// `⟨.,.⟩⁻` in Hom(H⊗A, k), solved exactly.
    pub fn inverse(&self, bp: &BraidingProvider) -> Result<LinMap> {
        let (delta, eps) = self.coalgebra(bp)?;
        convolution_inverse_raw(&self.form, &delta, &eps, &field_mult(), &field_mult())
    }
}

/// The four defining identities of a pairing.
pub fn validate_pairing(p: &DualPairing, bp: &BraidingProvider) -> Result<CheckReport> {
    let (h, a) = (p.hs(), p.as_());
    let ev = &p.form;
    let mut r = CheckReport::new();
    let hha = [h.clone(), h.clone(), a.clone()];
    let lhs = chain(&hha, vec![vec![mp(&p.h.m), id(1)], vec![mp(ev)]])?;
    let psi_aa = bp.braid(std::slice::from_ref(&a), std::slice::from_ref(&a))?;
    let rhs = chain(
        &hha,
        vec![
            vec![id(2), mp(&p.a.delta)],
            vec![id(2), mp(&psi_aa)],
            vec![id(1), mp(ev), id(1)],
            vec![mp(ev)],
        ],
    )?;
    r.push_equal(PAIRING_MULT_H, &lhs, &rhs)?;
    let haa = [h.clone(), a.clone(), a.clone()];
    let lhs = chain(&haa, vec![vec![id(1), mp(&p.a.m)], vec![mp(ev)]])?;
    let rhs = chain(
        &haa,
        vec![
            vec![mp(&p.h.delta), id(2)],
            vec![id(1), mp(ev), id(1)],
            vec![mp(ev)],
        ],
    )?;
    r.push_equal(PAIRING_MULT_A, &lhs, &rhs)?;
    r.push_equal(
        PAIRING_UNIT_H,
        &chain(&[a], vec![vec![mp(&p.h.eta), id(1)], vec![mp(ev)]])?,
        &p.a.eps,
    )?;
    r.push_equal(
        PAIRING_UNIT_A,
        &chain(&[h], vec![vec![id(1), mp(&p.a.eta)], vec![mp(ev)]])?,
        &p.h.eps,
    )?;
    Ok(r)
}

/// Compares the solved convolution inverse of the pairing with
/// `⟨.,.⟩∘(S_H⊗id)` and `⟨.,.⟩∘(id⊗S_A⁻¹)`.
pub fn pairing_inverse_report(
    p: &DualPairing,
    s_h: &LinMap,
    s_a: &LinMap,
    bp: &BraidingProvider,
) -> Result<CheckReport> {
    let solved = p.inverse(bp)?;
    let s_a_inv = invert(s_a)?;
    let via_h = compose(&p.form, &tensor(s_h, &p.a.identity()))?;
    let via_a = compose(&p.form, &tensor(&p.h.identity(), &s_a_inv))?;
    let mut r = CheckReport::new();
    r.push_equal("⟨.,.⟩⁻ = ⟨.,.⟩∘(S_H⊗id)", &solved, &via_h)?;
    r.push_equal("⟨.,.⟩⁻ = ⟨.,.⟩∘(id⊗S_A⁻¹)", &solved, &via_a)?;
    r.push_equal("⟨.,.⟩∘(S_H⊗id) = ⟨.,.⟩∘(id⊗S_A⁻¹)", &via_h, &via_a)?;
    Ok(r)
}

/// The actions induced by an invertible pairing and the verdicts on them.
#[derive(Clone, Debug, Serialize)]
pub struct MatchedPair {
    /// `⊲: H⊗A → H`
    pub lhd: LinMap,
    /// `⊳: H⊗A → A`
    pub rhd: LinMap,
    pub is_matched_pair: bool,
    pub braiding_involutive: bool,
    /// Module axioms of both actions followed by the matched-pair relations.
    pub report: CheckReport,
}

impl MatchedPair {
    /// The Hopf datum with `B1 = A`, `B2 = H`, `μ_l = ⊳`, `μ_r = ⊲` and
    /// trivial coactions.
    pub fn datum(&self, p: &DualPairing, bp: &BraidingProvider) -> Result<HopfDatum> {
        let mut d = HopfDatum::trivial(p.a.clone(), p.h.clone(), bp.clone())?;
        d.mu_l = self.rhd.clone();
        d.mu_r = self.lhd.clone();
        Ok(d)
    }
}

fn module_coalgebra(
    r: &mut CheckReport,
    name: &str,
    action: &LinMap,
    carrier: &BiunitalPair,
    b2: &BiunitalPair,
    b1: &BiunitalPair,
    psi21: &LinMap,
) -> Result<()> {
    let dom = [b2.space.clone(), b1.space.clone()];
    let lhs = compose(&carrier.delta, action)?;
    let rhs = chain(
        &dom,
        vec![
            vec![mp(&b2.delta), mp(&b1.delta)],
            vec![id(1), mp(psi21), id(1)],
            vec![mp(action), mp(action)],
        ],
    )?;
    r.push_equal(
        format!("{name} module coalgebra: Δ∘μ = (μ⊗μ)∘(id⊗Ψ⊗id)∘(Δ⊗Δ)"),
        &lhs,
        &rhs,
    )?;
    r.push_equal(
        format!("{name} module coalgebra: ε∘μ = ε⊗ε"),
        &compose(&carrier.eps, action)?,
        &tensor(&b2.eps, &b1.eps),
    )
}

/// All defining relations of a matched pair `(B1, B2, μ_l, μ_r)` with
/// `μ_l: B2⊗B1 → B1` and `μ_r: B2⊗B1 → B2`.
pub fn matched_pair_relations(
    b1: &BiunitalPair,
    b2: &BiunitalPair,
    mu_l: &LinMap,
    mu_r: &LinMap,
    bp: &BraidingProvider,
) -> Result<CheckReport> {
    let (s1, s2) = (b1.space.clone(), b2.space.clone());
    let mut r = CheckReport::new();
    for (name, b) in [("B1", b1), ("B2", b2)] {
        r.extend_prefixed(
            &format!("{name}: "),
            check_axioms(b, None, StructureKind::Bialgebra, bp)?,
        );
    }
    let left = ActionData {
        carrier: s1.clone(),
        actor: b2.clone(),
        map: mu_l.clone(),
        kind: ActionKind::ModuleL,
    };
    let right = ActionData {
        carrier: s2.clone(),
        actor: b1.clone(),
        map: mu_r.clone(),
        kind: ActionKind::ModuleR,
    };
    r.extend_prefixed("μ_l: ", action_axioms(&left)?);
    r.extend_prefixed("μ_r: ", action_axioms(&right)?);
    let psi21 = bp.braid(std::slice::from_ref(&s2), std::slice::from_ref(&s1))?;
    let psi12 = bp.braid(std::slice::from_ref(&s1), std::slice::from_ref(&s2))?;
    module_coalgebra(&mut r, "B1 left", mu_l, b1, b2, b1, &psi21)?;
    module_coalgebra(&mut r, "B2 right", mu_r, b2, b2, b1, &psi21)?;

    let d221 = [s2.clone(), s2.clone(), s1.clone()];
    let lhs = chain(&d221, vec![vec![mp(&b2.m), id(1)], vec![mp(mu_r)]])?;
    let rhs = chain(
        &d221,
        vec![
            vec![id(1), mp(&b2.delta), mp(&b1.delta)],
            vec![id(2), mp(&psi21), id(1)],
            vec![id(1), mp(mu_l), mp(mu_r)],
            vec![mp(mu_r), id(1)],
            vec![mp(&b2.m)],
        ],
    )?;
    r.push_equal(
        "μ_r∘(m2⊗id) = m2∘(μ_r⊗id)∘(id⊗μ_l⊗μ_r)∘(id⊗id⊗Ψ⊗id)∘(id⊗Δ2⊗Δ1)",
        &lhs,
        &rhs,
    )?;
    let lhs = chain(
        std::slice::from_ref(&s1),
        vec![vec![mp(&b2.eta), id(1)], vec![mp(mu_r)]],
    )?;
    r.push_equal("μ_r∘(η2⊗id) = η2∘ε1", &lhs, &compose(&b2.eta, &b1.eps)?)?;

    let d211 = [s2.clone(), s1.clone(), s1.clone()];
    let lhs = chain(&d211, vec![vec![id(1), mp(&b1.m)], vec![mp(mu_l)]])?;
    let rhs = chain(
        &d211,
        vec![
            vec![mp(&b2.delta), mp(&b1.delta), id(1)],
            vec![id(1), mp(&psi21), id(2)],
            vec![mp(mu_l), mp(mu_r), id(1)],
            vec![id(1), mp(mu_l)],
            vec![mp(&b1.m)],
        ],
    )?;
    r.push_equal(
        "μ_l∘(id⊗m1) = m1∘(id⊗μ_l)∘(μ_l⊗μ_r⊗id)∘(id⊗Ψ⊗id⊗id)∘(Δ2⊗Δ1⊗id)",
        &lhs,
        &rhs,
    )?;
    let lhs = chain(
        std::slice::from_ref(&s2),
        vec![vec![id(1), mp(&b1.eta)], vec![mp(mu_l)]],
    )?;
    r.push_equal("μ_l∘(id⊗η1) = η1∘ε2", &lhs, &compose(&b1.eta, &b2.eps)?)?;

    let d21 = [s2, s1];
    let split = vec![
        vec![mp(&b2.delta), mp(&b1.delta)],
        vec![id(1), mp(&psi21), id(1)],
    ];
    let mut l = split.clone();
    l.push(vec![mp(mu_r), mp(mu_l)]);
    let mut rr = split;
    rr.push(vec![mp(mu_l), mp(mu_r)]);
    rr.push(vec![mp(&psi12)]);
    r.push_equal(
        "(μ_r⊗μ_l)∘(id⊗Ψ⊗id)∘(Δ2⊗Δ1) = Ψ∘(μ_l⊗μ_r)∘(id⊗Ψ⊗id)∘(Δ2⊗Δ1)",
        &chain(&d21, l)?,
        &chain(&d21, rr)?,
    )?;
    Ok(r)
}

/// Builds `⊲` and `⊳` from the pairing and its convolution inverse, checks
/// both module structures and the matched-pair relations, and separately
/// whether `Ψ_{H,A}∘Ψ_{A,H} = id`.
pub fn matched_pair_from_pairing(p: &DualPairing, bp: &BraidingProvider) -> Result<MatchedPair> {
    let valid = validate_pairing(p, bp)?;
    if !valid.passed() {
        return Err(Error::Precondition(format!(
            "not a pairing: {}",
            valid.failure_summary()
        )));
    }
    let inv = p.inverse(bp)?;
    let (h, a) = (p.hs(), p.as_());
    let ha = [h.clone(), a.clone()];
    let psi_hh_a = bp.braid(&[h.clone(), h.clone()], std::slice::from_ref(&a))?;
    let lhd = chain(
        &ha,
        vec![
            vec![mp(&p.h.delta), mp(&p.a.delta)],
            vec![mp(&p.h.delta), id(3)],
            vec![id(1), mp(&psi_hh_a), id(1)],
            vec![mp(&inv), id(1), mp(&p.form)],
        ],
    )?;
    let psi_h_aa = bp.braid(std::slice::from_ref(&h), &[a.clone(), a.clone()])?;
    let rhd = chain(
        &ha,
        vec![
            vec![mp(&p.h.delta), mp(&p.a.delta)],
            vec![id(2), mp(&p.a.delta), id(1)],
            vec![id(1), mp(&psi_h_aa), id(1)],
            vec![mp(&inv), id(1), mp(&p.form)],
        ],
    )?;
    let report = matched_pair_relations(&p.a, &p.h, &rhd, &lhd, bp)?;
    let double = compose(
        &bp.braid(std::slice::from_ref(&h), std::slice::from_ref(&a))?,
        &bp.braid(std::slice::from_ref(&a), std::slice::from_ref(&h))?,
    )?;
    let braiding_involutive = double == LinMap::identity(&[a, h]);
    Ok(MatchedPair {
        lhd,
        rhd,
        is_matched_pair: report.passed(),
        braiding_involutive,
        report,
    })
}
