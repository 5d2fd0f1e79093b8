//! The double biproduct `C⊗H⊗B` of a left crossed module bialgebra `C` and
//! a right crossed module bialgebra `B` over a Hopf algebra `H`, and its
//! twist by a pairing `ρ: B⊗C → k`.
//!
//! Leg ordering: every map acts on the strands `C, H, B` in this order.
//! The untwisted product is
//! `(c⊗h⊗b)(c'⊗h'⊗b') = c(h_(1)▷c') ⊗ h_(2)h'_(1) ⊗ (b◁h'_(2))b'`
//! and the coproduct is
//! `Δ(c⊗h⊗b) = c_(1) ⊗ c_(2)(−1)h_(1) ⊗ b_(1)(0) ⊗ c_(2)(0) ⊗ h_(2)b_(1)(1) ⊗ b_(2)`,
//! with the flip wherever two strands cross.

use super::{twist, validate_cocycle, TwoCocycle};
use crate::error::{Error, Result};
use crate::structures::{
    check_axioms, check_axioms_with_braiding, check_crossed_module, classify_morphism,
    convolution_inverse_raw, tensor_coproduct, tensor_product_mult, ActionData, ActionKind,
    BialgebraData, BiunitalPair, CheckReport, HopfAlgebraData, StructureKind,
};
use crate::tensor::{
    chain, compose, flip, id, mp, rank, tensor, tensor_all, BraidingProvider, LinMap, SpaceLabel,
};

/// Input data; `ρ` may be omitted when only the untwisted structure is
/// wanted.
#[derive(Clone, Debug)]
pub struct DoubleBiproductInput {
    pub h: HopfAlgebraData,
    pub b: BialgebraData,
    /// `B ⊗ H → B`
    pub b_action: LinMap,
    /// `B → B ⊗ H`
    pub b_coaction: LinMap,
    pub c: BialgebraData,
    /// `H ⊗ C → C`
    pub c_action: LinMap,
    /// `C → H ⊗ C`
    pub c_coaction: LinMap,
    /// `B ⊗ C → k`
    pub rho: Option<LinMap>,
}

#[derive(Clone, Debug)]
pub struct DoubleBiproduct {
    pub z: BialgebraData,
    pub rho_hat: TwoCocycle,
    pub z_twisted: BialgebraData,
    /// The twisted multiplication evaluated from the closed formula.
    pub direct_multiplication: LinMap,
    pub report: CheckReport,
}

fn flip1(x: &SpaceLabel, y: &SpaceLabel) -> LinMap {
    flip(std::slice::from_ref(x), std::slice::from_ref(y))
}

/// The left crossed-module identity
/// `h_(1)c_(−1) ⊗ h_(2)▷c_(0) = (h_(1)▷c)_(−1)h_(2) ⊗ (h_(1)▷c)_(0)`,
/// after the module and comodule axioms.
pub fn check_left_crossed_module(
    space: &SpaceLabel,
    action: &LinMap,
    coaction: &LinMap,
    h: &HopfAlgebraData,
) -> Result<CheckReport> {
    let mut r = CheckReport::new();
    for (map, kind) in [
        (action, ActionKind::ModuleL),
        (coaction, ActionKind::ComoduleL),
    ] {
        let part = crate::structures::check_action(&ActionData {
            carrier: space.clone(),
            actor: h.bialgebra.clone(),
            map: map.clone(),
            kind,
        })?;
        r.extend_prefixed(&format!("{kind:?}: "), part);
    }
    let (c, hs) = (space.clone(), h.space().clone());
    let hc = [hs.clone(), c.clone()];
    let lhs = chain(
        &hc,
        vec![
            vec![mp(&h.delta), mp(coaction)],
            vec![id(1), mp(&flip1(&hs, &hs)), id(1)],
            vec![mp(&h.m), mp(action)],
        ],
    )?;
    let rhs = chain(
        &hc,
        vec![
            vec![mp(&h.delta), id(1)],
            vec![id(1), mp(&flip1(&hs, &c))],
            vec![mp(action), id(1)],
            vec![mp(coaction), id(1)],
            vec![id(1), mp(&flip1(&c, &hs))],
            vec![mp(&h.m), id(1)],
        ],
    )?;
    r.push_equal("left crossed module compatibility", &lhs, &rhs)?;
    Ok(r)
}

/// The structure maps of `X` are `H`-linear and `H`-colinear, for an action
/// `X⊗H → X` and a coaction `X → X⊗H` (left structures are passed in
/// flipped form).
fn equivariance(
    x: &BiunitalPair,
    action: &LinMap,
    coaction: &LinMap,
    h: &HopfAlgebraData,
) -> Result<CheckReport> {
    let (s, hs) = (x.space.clone(), h.space().clone());
    let mut r = CheckReport::new();
    let xxh = [s.clone(), s.clone(), hs.clone()];
    let lhs = chain(&xxh, vec![vec![mp(&x.m), id(1)], vec![mp(action)]])?;
    let rhs = chain(
        &xxh,
        vec![
            vec![id(2), mp(&h.delta)],
            vec![id(1), mp(&flip1(&s, &hs)), id(1)],
            vec![mp(action), mp(action)],
            vec![mp(&x.m)],
        ],
    )?;
    r.push_equal("multiplication is H-linear", &lhs, &rhs)?;
    let lhs = chain(
        std::slice::from_ref(&hs),
        vec![vec![mp(&x.eta), id(1)], vec![mp(action)]],
    )?;
    r.push_equal("unit is H-linear", &lhs, &compose(&x.eta, &h.eps)?)?;
    let xh = [s.clone(), hs.clone()];
    let lhs = chain(&xh, vec![vec![mp(action)], vec![mp(&x.delta)]])?;
    let rhs = chain(
        &xh,
        vec![
            vec![mp(&x.delta), mp(&h.delta)],
            vec![id(1), mp(&flip1(&s, &hs)), id(1)],
            vec![mp(action), mp(action)],
        ],
    )?;
    r.push_equal("comultiplication is H-linear", &lhs, &rhs)?;
    r.push_equal(
        "counit is H-linear",
        &compose(&x.eps, action)?,
        &tensor(&x.eps, &h.eps),
    )?;
    let xx = [s.clone(), s.clone()];
    let lhs = chain(&xx, vec![vec![mp(&x.m)], vec![mp(coaction)]])?;
    let rhs = chain(
        &xx,
        vec![
            vec![mp(coaction), mp(coaction)],
            vec![id(1), mp(&flip1(&hs, &s)), id(1)],
            vec![mp(&x.m), mp(&h.m)],
        ],
    )?;
    r.push_equal("multiplication is H-colinear", &lhs, &rhs)?;
    r.push_equal(
        "unit is H-colinear",
        &compose(coaction, &x.eta)?,
        &tensor(&x.eta, &h.eta),
    )?;
    let ss = [s.clone()];
    let lhs = chain(&ss, vec![vec![mp(coaction)], vec![mp(&x.delta), id(1)]])?;
    let rhs = chain(
        &ss,
        vec![
            vec![mp(&x.delta)],
            vec![mp(coaction), mp(coaction)],
            vec![id(1), mp(&flip1(&hs, &s)), id(1)],
            vec![id(2), mp(&h.m)],
        ],
    )?;
    r.push_equal("comultiplication is H-colinear", &lhs, &rhs)?;
    let lhs = chain(&ss, vec![vec![mp(coaction)], vec![mp(&x.eps), id(1)]])?;
    r.push_equal("counit is H-colinear", &lhs, &compose(&h.eta, &x.eps)?)?;
    Ok(r)
}

struct Parts {
    cs: SpaceLabel,
    hs: SpaceLabel,
    bs: SpaceLabel,
    /// Braiding of `B` in right crossed modules: `x⊗y ↦ y_(0) ⊗ x◁y_(1)`.
    psi_b: LinMap,
    /// Braiding of `C` in left crossed modules: `x⊗y ↦ x_(−1)▷y ⊗ x_(0)`.
    psi_c: LinMap,
}

fn parts(input: &DoubleBiproductInput) -> Result<Parts> {
    let (cs, hs, bs) = (
        input.c.space.clone(),
        input.h.space().clone(),
        input.b.space.clone(),
    );
    let psi_b = chain(
        &[bs.clone(), bs.clone()],
        vec![
            vec![id(1), mp(&input.b_coaction)],
            vec![mp(&flip1(&bs, &bs)), id(1)],
            vec![id(1), mp(&input.b_action)],
        ],
    )?;
    let psi_c = chain(
        &[cs.clone(), cs.clone()],
        vec![
            vec![mp(&input.c_coaction), id(1)],
            vec![id(1), mp(&flip1(&cs, &cs))],
            vec![mp(&input.c_action), id(1)],
        ],
    )?;
    Ok(Parts {
        cs,
        hs,
        bs,
        psi_b,
        psi_c,
    })
}

fn rho_of(input: &DoubleBiproductInput) -> Result<LinMap> {
    input
        .rho
        .clone()
        .ok_or_else(|| Error::Precondition("no pairing ρ: B⊗C → k supplied".into()))
}

/// `ρ^{(2)} = ρ∘(id_B⊗ρ⊗id_C)` on `B⊗B⊗C⊗C`.
fn rho2(rho: &LinMap, p: &Parts) -> Result<LinMap> {
    chain(
        &[p.bs.clone(), p.bs.clone(), p.cs.clone(), p.cs.clone()],
        vec![vec![id(1), mp(rho), id(1)], vec![mp(rho)]],
    )
}

/// Every precondition of the construction, named by what it asserts.
pub fn double_biproduct_preconditions(input: &DoubleBiproductInput) -> Result<CheckReport> {
    let p = parts(input)?;
    let mut r = CheckReport::new();
    let hopf = crate::structures::check_hopf(&input.h)?;
    r.extend_prefixed("H: ", hopf);
    r.extend_prefixed(
        "B right crossed module: ",
        check_crossed_module(&p.bs, &input.b_action, &input.b_coaction, &input.h)?,
    );
    r.extend_prefixed(
        "C left crossed module: ",
        check_left_crossed_module(&p.cs, &input.c_action, &input.c_coaction, &input.h)?,
    );
    r.extend_prefixed(
        "B: ",
        equivariance(&input.b, &input.b_action, &input.b_coaction, &input.h)?,
    );
    let c_action_r = compose(&input.c_action, &flip1(&p.cs, &p.hs))?;
    let c_coaction_r = compose(&flip1(&p.hs, &p.cs), &input.c_coaction)?;
    r.extend_prefixed(
        "C: ",
        equivariance(&input.c, &c_action_r, &c_coaction_r, &input.h)?,
    );
    r.extend_prefixed(
        "B bialgebra in right crossed modules: ",
        check_axioms_with_braiding(&input.b, None, StructureKind::Bialgebra, &p.psi_b)?,
    );
    r.extend_prefixed(
        "C bialgebra in left crossed modules: ",
        check_axioms_with_braiding(&input.c, None, StructureKind::Bialgebra, &p.psi_c)?,
    );

    let bc = [p.bs.clone(), p.cs.clone()];
    let lhs = compose(&flip1(&p.cs, &p.bs), &flip1(&p.bs, &p.cs))?;
    let rhs = chain(
        &bc,
        vec![
            vec![mp(&input.b_coaction), mp(&input.c_coaction)],
            vec![id(1), mp(&flip1(&p.hs, &p.hs)), id(1)],
            vec![mp(&input.b_action), mp(&input.c_action)],
        ],
    )?;
    r.push_equal(
        "Ψ_{C,B}∘Ψ_{B,C} = (μ_r⊗μ_l)∘(id⊗Ψ_{H,H}⊗id)∘(ν_r⊗ν_l)",
        &lhs,
        &rhs,
    )?;

    if let Some(rho) = &input.rho {
        let want = [p.bs.clone(), p.cs.clone()];
        if rho.dom() != want.as_slice() || !rho.cod().is_empty() {
            return Err(Error::shape(
                "ρ: B⊗C → k",
                crate::tensor::describe(rho.dom()),
            ));
        }
        let r2 = rho2(rho, &p)?;
        let bhc = [p.bs.clone(), p.hs.clone(), p.cs.clone()];
        let lhs = chain(&bhc, vec![vec![mp(&input.b_action), id(1)], vec![mp(rho)]])?;
        let rhs = chain(&bhc, vec![vec![id(1), mp(&input.c_action)], vec![mp(rho)]])?;
        r.push_equal("ρ∘(μ_r⊗id_C) = ρ∘(id_B⊗μ_l)", &lhs, &rhs)?;
        let bcc = [p.bs.clone(), p.cs.clone(), p.cs.clone()];
        let lhs = chain(&bcc, vec![vec![id(1), mp(&input.c.m)], vec![mp(rho)]])?;
        let rhs = chain(
            &bcc,
            vec![
                vec![mp(&input.b.delta), id(2)],
                vec![mp(&flip1(&p.bs, &p.bs)), id(2)],
                vec![mp(&r2)],
            ],
        )?;
        r.push_equal("ρ∘(id⊗m_C) = ρ^(2)∘(Ψ⁻¹_{B,B}∘Δ_B⊗id⊗id)", &lhs, &rhs)?;
        let bbc = [p.bs.clone(), p.bs.clone(), p.cs.clone()];
        let lhs = chain(&bbc, vec![vec![mp(&input.b.m), id(1)], vec![mp(rho)]])?;
        let rhs = chain(
            &bbc,
            vec![
                vec![mp(&p.psi_b), mp(&input.c.delta)],
                vec![id(2), mp(&flip1(&p.cs, &p.cs))],
                vec![mp(&r2)],
            ],
        )?;
        r.push_equal(
            "ρ∘(m_B⊗id) = ρ^(2)∘(Ψ^{YD}_{B,B}⊗Ψ⁻¹_{C,C}∘Δ_C)",
            &lhs,
            &rhs,
        )?;
    }
    Ok(r)
}

fn fuse(m: &LinMap, k: usize, z: &SpaceLabel) -> Result<LinMap> {
    m.relabel(
        vec![z.clone(); m.dom().len() / k],
        vec![z.clone(); m.cod().len() / k],
    )
}

fn fused(
    label: SpaceLabel,
    k: usize,
    m: &LinMap,
    eta: &LinMap,
    delta: &LinMap,
    eps: &LinMap,
) -> Result<BiunitalPair> {
    BiunitalPair::new(
        label.clone(),
        fuse(m, k, &label)?,
        fuse(eta, k, &label)?,
        fuse(delta, k, &label)?,
        fuse(eps, k, &label)?,
    )
}

/// `C⊗H⊗B` with the untwisted product and coproduct, on separate strands.
fn z_maps(input: &DoubleBiproductInput, p: &Parts) -> Result<[LinMap; 4]> {
    let (c, h, b) = (&input.c, &input.h, &input.b);
    let (cs, hs, bs) = (&p.cs, &p.hs, &p.bs);
    let six = [
        cs.clone(),
        hs.clone(),
        bs.clone(),
        cs.clone(),
        hs.clone(),
        bs.clone(),
    ];
    let m = chain(
        &six,
        vec![
            vec![id(1), mp(&h.delta), mp(&flip1(bs, cs)), mp(&h.delta), id(1)],
            vec![id(2), mp(&flip1(hs, cs)), mp(&flip1(bs, hs)), id(2)],
            vec![
                id(1),
                mp(&input.c_action),
                mp(&h.m),
                mp(&input.b_action),
                id(1),
            ],
            vec![mp(&c.m), id(1), mp(&b.m)],
        ],
    )?;
    let three = [cs.clone(), hs.clone(), bs.clone()];
    let delta = chain(
        &three,
        vec![
            vec![mp(&c.delta), id(1), mp(&b.delta)],
            vec![
                id(1),
                mp(&input.c_coaction),
                mp(&h.delta),
                mp(&input.b_coaction),
                id(1),
            ],
            vec![id(2), mp(&flip1(cs, hs)), mp(&flip1(hs, bs)), id(2)],
            vec![id(1), mp(&h.m), mp(&flip1(cs, bs)), mp(&h.m), id(1)],
        ],
    )?;
    let eta = tensor_all(&[&c.eta, &h.eta, &b.eta]);
    let eps = tensor_all(&[&c.eps, &h.eps, &b.eps]);
    Ok([m, eta, delta, eps])
}

/// `C⋊H` with `(c⊗h)(c'⊗h') = c(h_(1)▷c') ⊗ h_(2)h'` and
/// `Δ(c⊗h) = c_(1) ⊗ c_(2)(−1)h_(1) ⊗ c_(2)(0) ⊗ h_(2)`.
fn smash_c(input: &DoubleBiproductInput, p: &Parts) -> Result<BiunitalPair> {
    let (c, h) = (&input.c, &input.h);
    let (cs, hs) = (&p.cs, &p.hs);
    let four = [cs.clone(), hs.clone(), cs.clone(), hs.clone()];
    let m = chain(
        &four,
        vec![
            vec![id(1), mp(&h.delta), id(2)],
            vec![id(2), mp(&flip1(hs, cs)), id(1)],
            vec![id(1), mp(&input.c_action), mp(&h.m)],
            vec![mp(&c.m), id(1)],
        ],
    )?;
    let delta = chain(
        &[cs.clone(), hs.clone()],
        vec![
            vec![mp(&c.delta), mp(&h.delta)],
            vec![id(1), mp(&input.c_coaction), id(2)],
            vec![id(2), mp(&flip1(cs, hs)), id(1)],
            vec![id(1), mp(&h.m), id(2)],
        ],
    )?;
    let label = SpaceLabel::new(format!("{}⋊{}", cs.name, hs.name), cs.dim * hs.dim);
    fused(
        label,
        2,
        &m,
        &tensor(&c.eta, &h.eta),
        &delta,
        &tensor(&c.eps, &h.eps),
    )
}

/// `H⋉B` with `(h⊗b)(h'⊗b') = hh'_(1) ⊗ (b◁h'_(2))b'` and
/// `Δ(h⊗b) = h_(1) ⊗ b_(1)(0) ⊗ h_(2)b_(1)(1) ⊗ b_(2)`.
fn smash_b(input: &DoubleBiproductInput, p: &Parts) -> Result<BiunitalPair> {
    let (b, h) = (&input.b, &input.h);
    let (bs, hs) = (&p.bs, &p.hs);
    let four = [hs.clone(), bs.clone(), hs.clone(), bs.clone()];
    let m = chain(
        &four,
        vec![
            vec![id(2), mp(&h.delta), id(1)],
            vec![id(1), mp(&flip1(bs, hs)), id(2)],
            vec![mp(&h.m), mp(&input.b_action), id(1)],
            vec![id(1), mp(&b.m)],
        ],
    )?;
    let delta = chain(
        &[hs.clone(), bs.clone()],
        vec![
            vec![mp(&h.delta), mp(&b.delta)],
            vec![id(2), mp(&input.b_coaction), id(1)],
            vec![id(1), mp(&flip1(hs, bs)), id(2)],
            vec![id(2), mp(&h.m), id(1)],
        ],
    )?;
    let label = SpaceLabel::new(format!("{}⋉{}", hs.name, bs.name), hs.dim * bs.dim);
    fused(
        label,
        2,
        &m,
        &tensor(&h.eta, &b.eta),
        &delta,
        &tensor(&h.eps, &b.eps),
    )
}

/// `C⊗B` with the tensor product algebra and coalgebra structures.
fn plain_cb(input: &DoubleBiproductInput, p: &Parts) -> Result<BiunitalPair> {
    let (c, b) = (&input.c, &input.b);
    let (cs, bs) = ([p.cs.clone()], [p.bs.clone()]);
    let m = tensor_product_mult(&cs, &c.m, &bs, &b.m, &flip(&bs, &cs))?;
    let delta = tensor_coproduct(&cs, &c.delta, &bs, &b.delta, &flip(&cs, &bs))?;
    let label = SpaceLabel::new(format!("{}⊗{}", p.cs.name, p.bs.name), p.cs.dim * p.bs.dim);
    fused(
        label,
        2,
        &m,
        &tensor(&c.eta, &b.eta),
        &delta,
        &tensor(&c.eps, &b.eps),
    )
}

fn record_morphism(
    r: &mut CheckReport,
    name: &str,
    f: &LinMap,
    src: &BiunitalPair,
    dst: &BiunitalPair,
    algebra: bool,
    coalgebra: bool,
    mono: bool,
) -> Result<()> {
    let class = classify_morphism(f, src, dst)?;
    if algebra {
        r.push_flag(
            format!("{name} is an algebra morphism"),
            class.is_algebra_morphism,
        );
    }
    if coalgebra {
        r.push_flag(
            format!("{name} is a coalgebra morphism"),
            class.is_coalgebra_morphism,
        );
    }
    let full = if mono { src.dim() } else { dst.dim() };
    let kind = if mono { "injective" } else { "surjective" };
    r.push_flag(format!("{name} is {kind}"), rank(f) == full);
    Ok(())
}

/// The direct formula for the twisted product of `C⊗H⊗B`, with `ρ` and
/// `ρ⁻` inserted between the two factors.
fn direct_twisted_product(
    input: &DoubleBiproductInput,
    p: &Parts,
    rho: &LinMap,
    rho_inv: &LinMap,
) -> Result<LinMap> {
    let (c, h, b) = (&input.c, &input.h, &input.b);
    let (cs, hs, bs) = (&p.cs, &p.hs, &p.bs);
    let six = [
        cs.clone(),
        hs.clone(),
        bs.clone(),
        cs.clone(),
        hs.clone(),
        bs.clone(),
    ];
    chain(
        &six,
        vec![
            // C, H1, H2, B1, B2, C1, C2, H'1, H'2, B'
            vec![
                id(1),
                mp(&h.delta),
                mp(&b.delta),
                mp(&c.delta),
                mp(&h.delta),
                id(1),
            ],
            // B2 crosses C1
            vec![id(4), mp(&flip1(bs, cs)), id(4)],
            // B1 → B⊗H, C1 → C⊗C, B2 → B⊗B, C2 → H⊗C
            vec![
                id(3),
                mp(&input.b_coaction),
                mp(&c.delta),
                mp(&b.delta),
                mp(&input.c_coaction),
                id(3),
            ],
            vec![id(4), mp(&flip1(hs, cs)), id(2), mp(&flip1(bs, hs)), id(4)],
            vec![
                id(3),
                mp(rho),
                mp(&h.delta),
                id(2),
                mp(&h.delta),
                mp(rho_inv),
                id(3),
            ],
            vec![id(4), mp(&flip1(hs, cs)), mp(&flip1(bs, hs)), id(4)],
            vec![
                id(3),
                mp(&input.c_action),
                mp(&h.m),
                mp(&input.b_action),
                id(3),
            ],
            vec![id(2), mp(&flip1(hs, cs)), id(1), mp(&flip1(bs, hs)), id(2)],
            vec![
                id(1),
                mp(&input.c_action),
                mp(&h.m),
                id(1),
                mp(&input.b_action),
                id(1),
            ],
            vec![mp(&c.m), mp(&h.m), mp(&b.m)],
        ],
    )
}

/// Builds `Z = C⊗H⊗B`, verifies it and its canonical maps, twists it by
/// `ρ̂ = ε⊗ε⊗ρ⊗ε⊗ε` and compares the result with the closed formula.
pub fn double_biproduct(input: &DoubleBiproductInput) -> Result<DoubleBiproduct> {
    let rho = rho_of(input)?;
    let pre = double_biproduct_preconditions(input)?;
    if let Some(f) = pre.failures().next() {
        return Err(Error::Precondition(format!(
            "double biproduct input: `{}` fails",
            f.axiom
        )));
    }
    let p = parts(input)?;
    let (cs, hs, bs) = (p.cs.clone(), p.hs.clone(), p.bs.clone());
    let zl = SpaceLabel::new(
        format!("{}⊗{}⊗{}", cs.name, hs.name, bs.name),
        cs.dim * hs.dim * bs.dim,
    );
    let [m, eta, delta, eps] = z_maps(input, &p)?;
    let z = fused(zl.clone(), 3, &m, &eta, &delta, &eps)?;
    let flat = BraidingProvider::VectFlip;
    let mut report = CheckReport::new();
    report.extend_prefixed(
        "Z: ",
        check_axioms(&z, None, StructureKind::Bialgebra, &flat)?,
    );

    let y = smash_c(input, &p)?;
    let x = smash_b(input, &p)?;
    let cb = plain_cb(input, &p)?;
    report.extend_prefixed(
        "C⋊H: ",
        check_axioms(&y, None, StructureKind::Bialgebra, &flat)?,
    );
    report.extend_prefixed(
        "H⋉B: ",
        check_axioms(&x, None, StructureKind::Bialgebra, &flat)?,
    );
    let to_z = |f: LinMap, src: &SpaceLabel| f.relabel(vec![src.clone()], vec![zl.clone()]);
    let from_z = |f: LinMap, dst: &SpaceLabel| f.relabel(vec![zl.clone()], vec![dst.clone()]);
    let (ic, ih, ib) = (input.c.identity(), input.h.identity(), input.b.identity());
    let j_y = to_z(tensor_all(&[&ic, &ih, &input.b.eta]), &y.space)?;
    let j_x = to_z(tensor_all(&[&input.c.eta, &ih, &ib]), &x.space)?;
    let p_y = from_z(tensor_all(&[&ic, &ih, &input.b.eps]), &y.space)?;
    let p_x = from_z(tensor_all(&[&input.c.eps, &ih, &ib]), &x.space)?;
    let j_cb = to_z(tensor_all(&[&ic, &input.h.eta, &ib]), &cb.space)?;
    let p_cb = from_z(tensor_all(&[&ic, &input.h.eps, &ib]), &cb.space)?;
    record_morphism(
        &mut report,
        "id⊗id⊗η_B: C⋊H → Z",
        &j_y,
        &y,
        &z,
        true,
        true,
        true,
    )?;
    record_morphism(
        &mut report,
        "η_C⊗id⊗id: H⋉B → Z",
        &j_x,
        &x,
        &z,
        true,
        true,
        true,
    )?;
    record_morphism(
        &mut report,
        "id⊗id⊗ε_B: Z → C⋊H",
        &p_y,
        &z,
        &y,
        true,
        true,
        false,
    )?;
    record_morphism(
        &mut report,
        "ε_C⊗id⊗id: Z → H⋉B",
        &p_x,
        &z,
        &x,
        true,
        true,
        false,
    )?;
    record_morphism(
        &mut report,
        "id⊗η_H⊗id: C⊗B → Z",
        &j_cb,
        &cb,
        &z,
        true,
        false,
        true,
    )?;
    record_morphism(
        &mut report,
        "id⊗ε_H⊗id: Z → C⊗B",
        &p_cb,
        &z,
        &cb,
        false,
        true,
        false,
    )?;
    if let Some(f) = report.failures().next() {
        return Err(Error::InternalConsistency(format!(
            "double biproduct: `{}` fails",
            f.axiom
        )));
    }

    let bc = [bs.clone(), cs.clone()];
    let bc_delta = tensor_coproduct(
        std::slice::from_ref(&bs),
        &input.b.delta,
        std::slice::from_ref(&cs),
        &input.c.delta,
        &flip1(&bs, &cs),
    )?;
    let bc_eps = tensor(&input.b.eps, &input.c.eps);
    let k = super::field_mult();
    let rho_inv = convolution_inverse_raw(&rho, &bc_delta, &bc_eps, &k, &k)?;
    debug_assert_eq!(rho_inv.dom(), &bc);
    let hat = |r: &LinMap| {
        tensor_all(&[&input.c.eps, &input.h.eps, r, &input.h.eps, &input.b.eps])
            .relabel(vec![zl.clone(); 2], vec![])
    };
    let rho_hat_map = hat(&rho)?;
    let rho_hat = TwoCocycle::new(z.clone(), rho_hat_map)?;
    let cocycle = validate_cocycle(&rho_hat)?;
    report.extend_prefixed("ρ̂: ", cocycle);
    let hat_inv = rho_hat.inverse()?;
    report.push_equal("ρ̂⁻ = ε⊗ε⊗ρ⁻⊗ε⊗ε", &hat_inv, &hat(&rho_inv)?)?;
    let z_twisted = twist(&z, &rho_hat)?;
    let direct = fuse(&direct_twisted_product(input, &p, &rho, &rho_inv)?, 3, &zl)?;
    report.push_equal(
        "twisted product agrees with the closed formula",
        &z_twisted.m,
        &direct,
    )?;
    Ok(DoubleBiproduct {
        z,
        rho_hat: TwoCocycle {
            chi_inv: Some(hat_inv),
            ..rho_hat
        },
        z_twisted,
        direct_multiplication: direct,
        report,
    })
}
