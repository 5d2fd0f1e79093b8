mod common;

use common::space;
use crossbial::scalar::{zeta_power, Scalar};
use crossbial::structures::{
    antipode_anti_morphism, check_action, check_axioms, check_crossed_module, check_hopf,
    classify_morphism, convolution_inverse, ActionData, ActionKind, BiunitalPair, HopfAlgebraData,
    StructureKind,
};
use crossbial::tensor::{compose, invert, tensor, BraidingProvider, LinMap};
use crossbial::zoo::{
    abelian_group_algebra, dual_group_algebra, group_algebra, group_pairing, radford,
    sweedler_double, RadfordParams,
};
use crossbial::Error;
use proptest::prelude::*;

fn flip() -> BraidingProvider {
    BraidingProvider::VectFlip
}

fn one() -> Scalar {
    Scalar::one()
}

#[test]
fn group_algebra_c2_passes_hopf_axioms() {
    let h = group_algebra(2).unwrap();
    assert!(check_hopf(&h).unwrap().passed());
    assert_eq!(h.antipode, h.identity());
}

#[test]
fn corrupted_coproduct_breaks_counit_only() {
    let h = group_algebra(2).unwrap();
    let mut b = h.bialgebra.clone();
    // Δ(g) = g⊗1
    b.delta = LinMap::from_columns(
        vec![b.space.clone()],
        vec![b.space.clone(), b.space.clone()],
        vec![vec![(0, one())], vec![(2, one())]],
    )
    .unwrap();
    let r = check_axioms(&b, None, StructureKind::Coalgebra, &flip()).unwrap();
    assert_eq!(r.verdict("coassociativity"), Some(true));
    assert_eq!(r.verdict("left counit"), Some(false));
    assert!(!r.passed());
}

#[test]
fn trivial_structure_passes() {
    let k = BiunitalPair::trivial("k");
    let h = HopfAlgebraData::new(k.clone(), k.identity()).unwrap();
    assert!(check_hopf(&h).unwrap().passed());
}

#[test]
fn shape_mismatch_is_reported_before_checking() {
    let h = group_algebra(2).unwrap();
    let mut b = h.bialgebra.clone();
    b.eps = LinMap::identity(&[b.space.clone()]);
    assert!(matches!(
        check_axioms(&b, None, StructureKind::Algebra, &flip()),
        Err(Error::Shape { .. })
    ));
}

#[test]
fn trivial_action_passes() {
    let h = group_algebra(3).unwrap();
    let m = space("M", 2);
    let map = tensor(&h.eps, &LinMap::identity(std::slice::from_ref(&m)));
    let a = ActionData {
        carrier: m,
        actor: h.bialgebra.clone(),
        map,
        kind: ActionKind::ModuleL,
    };
    assert!(check_action(&a).unwrap().passed());
}

#[test]
fn radford_left_action_passes() {
    let s = radford(RadfordParams::new(3, 1, 3, 1)).unwrap();
    let a = ActionData {
        carrier: s.datum.b1.space.clone(),
        actor: s.datum.b2.clone(),
        map: s.datum.mu_l.clone(),
        kind: ActionKind::ModuleL,
    };
    assert!(check_action(&a).unwrap().passed());
}

#[test]
fn squared_root_still_gives_an_action() {
    // q ↦ q² on x^m over kC_4 with n = 4: q² = −1 and (−1)^4 = 1, so the
    // twisted map remains an action
    let s = radford(RadfordParams::new(4, 1, 4, 1)).unwrap();
    let d = &s.datum;
    let mu = LinMap::from_fn(d.mu_l.dom().to_vec(), d.mu_l.cod().to_vec(), |i, col| {
        let (l, m) = (col / 4, col % 4);
        if i == m {
            zeta_power(4, -2 * (m * l) as i64).unwrap()
        } else {
            Scalar::zero()
        }
    });
    let a = ActionData {
        carrier: d.b1.space.clone(),
        actor: d.b2.clone(),
        map: mu,
        kind: ActionKind::ModuleL,
    };
    assert!(check_action(&a).unwrap().passed());
}

#[test]
fn character_of_wrong_order_fails_associativity() {
    // g^l ⊗ x ↦ ζ_4^{−l} x over kC_2: g·(g·x) = −x but g² = 1
    let h = group_algebra(2).unwrap();
    let m = space("X", 2);
    let map = LinMap::from_fn(
        vec![h.space().clone(), m.clone()],
        vec![m.clone()],
        |i, col| {
            let (l, j) = (col / 2, col % 2);
            match (i == j, j) {
                (false, _) => Scalar::zero(),
                (true, 0) => one(),
                (true, _) => zeta_power(4, -(l as i64)).unwrap(),
            }
        },
    );
    let a = ActionData {
        carrier: m,
        actor: h.bialgebra.clone(),
        map,
        kind: ActionKind::ModuleL,
    };
    let r = check_action(&a).unwrap();
    assert_eq!(r.verdict("action associativity"), Some(false));
}

#[test]
fn action_over_non_algebra_is_a_precondition_error() {
    let h = group_algebra(2).unwrap();
    let mut b = h.bialgebra.clone();
    b.m = LinMap::zero(b.m.dom(), b.m.cod());
    let m = space("M", 1);
    let map = tensor(&h.eps, &LinMap::identity(std::slice::from_ref(&m)));
    let a = ActionData {
        carrier: m,
        actor: b,
        map,
        kind: ActionKind::ModuleL,
    };
    assert!(matches!(check_action(&a), Err(Error::Precondition(_))));
}

/// `span(1, x)` over kC_2 with `x◁g = sign·x` and `x ↦ x⊗g^deg`.
fn sweedler_module(
    sign: i64,
    deg: usize,
) -> (
    crossbial::tensor::SpaceLabel,
    LinMap,
    LinMap,
    HopfAlgebraData,
) {
    let h = group_algebra(2).unwrap();
    let m = space("M", 2);
    let hs = h.space().clone();
    let action = LinMap::from_fn(vec![m.clone(), hs.clone()], vec![m.clone()], |i, col| {
        let (j, l) = (col / 2, col % 2);
        if i != j {
            Scalar::zero()
        } else if j == 1 && l == 1 {
            Scalar::from(sign)
        } else {
            one()
        }
    });
    let coaction = LinMap::from_columns(
        vec![m.clone()],
        vec![m.clone(), hs],
        vec![vec![(0, one())], vec![(2 + deg, one())]],
    )
    .unwrap();
    (m, action, coaction, h)
}

#[test]
fn trivial_crossed_module_passes() {
    let h = group_algebra(3).unwrap();
    let m = space("M", 2);
    let action = tensor(&LinMap::identity(std::slice::from_ref(&m)), &h.eps);
    let coaction = tensor(&LinMap::identity(std::slice::from_ref(&m)), &h.eta);
    assert!(check_crossed_module(&m, &action, &coaction, &h)
        .unwrap()
        .passed());
}

#[test]
fn sweedler_crossed_module_passes() {
    let (m, action, coaction, h) = sweedler_module(-1, 1);
    assert!(check_crossed_module(&m, &action, &coaction, &h)
        .unwrap()
        .passed());
}

#[test]
fn trivially_graded_sweedler_module_also_passes() {
    // over a commutative and cocommutative Hopf algebra a trivial coaction
    // is compatible with every action
    let (m, action, coaction, h) = sweedler_module(-1, 0);
    assert!(check_crossed_module(&m, &action, &coaction, &h)
        .unwrap()
        .passed());
}

#[test]
fn grading_breaking_action_fails_crossed_module() {
    // u of degree 1, v of degree g, g swaps them
    let h = group_algebra(2).unwrap();
    let m = space("M", 2);
    let hs = h.space().clone();
    let action = LinMap::from_fn(vec![m.clone(), hs.clone()], vec![m.clone()], |i, col| {
        let (j, l) = (col / 2, col % 2);
        if (l == 0 && i == j) || (l == 1 && i != j) {
            one()
        } else {
            Scalar::zero()
        }
    });
    let coaction = LinMap::from_columns(
        vec![m.clone()],
        vec![m.clone(), hs],
        vec![vec![(0, one())], vec![(3, one())]],
    )
    .unwrap();
    let r = check_crossed_module(&m, &action, &coaction, &h).unwrap();
    assert!(!r.passed());
    assert!(r.entries[0].counterexample.is_some());
}

#[test]
fn identity_is_a_morphism() {
    let h = radford(RadfordParams::new(2, 1, 2, 1)).unwrap().h;
    let c = classify_morphism(&h.identity(), &h.bialgebra, &h.bialgebra).unwrap();
    assert!(c.is_algebra_morphism && c.is_coalgebra_morphism);
}

#[test]
fn radford_projections() {
    let s = radford(RadfordParams::new(2, 1, 2, 1)).unwrap();
    let (b1, b2) = s.system.factors().unwrap();
    let p2 = classify_morphism(&s.system.p2, &s.h.bialgebra, &b2).unwrap();
    assert!(p2.is_algebra_morphism && p2.is_coalgebra_morphism);
    let p1 = classify_morphism(&s.system.p1, &s.h.bialgebra, &b1).unwrap();
    assert!(!p1.is_algebra_morphism && p1.is_coalgebra_morphism);
}

#[test]
fn convolution_inverse_of_identity_is_antipode() {
    for h in [
        radford(RadfordParams::new(3, 1, 3, 1)).unwrap().h,
        group_algebra(4).unwrap(),
        dual_group_algebra(3).unwrap(),
    ] {
        assert_eq!(
            convolution_inverse(&h.identity(), &h.bialgebra, &h.bialgebra).unwrap(),
            h.antipode
        );
    }
}

#[test]
fn convolution_unit_is_its_own_inverse() {
    let h = radford(RadfordParams::new(2, 1, 2, 1)).unwrap().h;
    let u = h.unit_counit();
    assert_eq!(
        convolution_inverse(&u, &h.bialgebra, &h.bialgebra).unwrap(),
        u
    );
}

#[test]
fn zero_map_is_not_convolution_invertible() {
    let h = group_algebra(2).unwrap();
    let z = LinMap::zero(&[h.space().clone()], &[h.space().clone()]);
    assert!(matches!(
        convolution_inverse(&z, &h.bialgebra, &h.bialgebra),
        Err(Error::NotConvolutionInvertible)
    ));
}

#[test]
fn pairing_inverse_is_form_after_antipode() {
    let (h, _, p) = group_pairing(4).unwrap();
    let inv = p.inverse(&flip()).unwrap();
    let expect = compose(&p.form, &tensor(&h.antipode, &p.a.identity())).unwrap();
    assert_eq!(inv, expect);
}

#[test]
fn antipodes_are_anti_morphisms() {
    let mut all = vec![
        group_algebra(3).unwrap(),
        dual_group_algebra(4).unwrap(),
        abelian_group_algebra(&[2, 2]).unwrap(),
    ];
    for p in [
        RadfordParams::new(2, 1, 2, 1),
        RadfordParams::new(3, 1, 3, 1),
        RadfordParams::new(2, 1, 4, 1),
    ] {
        all.push(radford(p).unwrap().h);
    }
    all.push(
        sweedler_double()
            .unwrap()
            .pairing
            .a
            .clone()
            .into_hopf_or_skip(),
    );
    for h in all.iter().filter(|h| h.dim() > 0) {
        let r = antipode_anti_morphism(h).unwrap();
        assert!(r.passed(), "{}: {}", h.space(), r.failure_summary());
    }
}

trait IntoHopf {
    fn into_hopf_or_skip(self) -> HopfAlgebraData;
}

impl IntoHopf for BiunitalPair {
    fn into_hopf_or_skip(self) -> HopfAlgebraData {
        let s = convolution_inverse(&self.identity(), &self, &self).unwrap();
        HopfAlgebraData::new(self, s).unwrap()
    }
}

#[test]
fn convolution_inverse_is_unique() {
    let h = radford(RadfordParams::new(2, 1, 4, 1)).unwrap().h;
    let a = convolution_inverse(&h.identity(), &h.bialgebra, &h.bialgebra).unwrap();
    let b = convolution_inverse(&h.identity(), &h.bialgebra, &h.bialgebra).unwrap();
    assert_eq!(a, b);
}

fn verdicts(b: &BiunitalPair) -> Vec<(String, bool)> {
    check_axioms(b, None, StructureKind::Bialgebra, &flip())
        .unwrap()
        .entries
        .into_iter()
        .map(|e| (e.axiom, e.passed))
        .collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn verdicts_are_invariant_under_conjugation(seed in any::<u64>(), corrupt in any::<bool>()) {
        let mut rng = common::rng(seed);
        let h = radford(RadfordParams::new(2, 1, 2, 1)).unwrap().h;
        let mut b = h.bialgebra.clone();
        if corrupt {
            b.delta = LinMap::from_columns(b.delta.dom().to_vec(), b.delta.cod().to_vec(), (0..4).map(|j| vec![(j * 4, one())]).collect()).unwrap();
        }
        let s = [b.space.clone()];
        let t = common::map(&mut rng, &s, &s, 0.6, 1);
        prop_assume!(invert(&t).is_ok());
        let t_inv = invert(&t).unwrap();
        let c = b.conjugate(&t, &t_inv).unwrap();
        prop_assert_eq!(verdicts(&b), verdicts(&c));
    }
}
