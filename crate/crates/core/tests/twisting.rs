mod common;

use crossbial::scalar::{zeta_power, Scalar};
use crossbial::structures::{check_hopf, BiunitalPair};
use crossbial::tensor::{chain, compose, id, mp, tensor, BraidingProvider, LinMap};
use crossbial::twisting::{
    conv_dot, double_biproduct, double_biproduct_preconditions, matched_pair_from_pairing,
    pairing_inverse_report, twist, twist_hopf, validate_cocycle, validate_pairing, DualPairing,
    Side, TwoCocycle, COCYCLE_IDENTITY, COCYCLE_LEFT_UNIT, COCYCLE_RIGHT_UNIT, COCYCLE_UNITS_AGREE,
    PAIRING_UNIT_A, PAIRING_UNIT_H,
};
use crossbial::zoo::{
    abelian_group_algebra, bicharacter_cocycle, group_double, group_pairing, paired_dual, radford,
    sweedler_crossed_modules, sweedler_rho, yd_c3_double, RadfordParams,
};
use crossbial::Error;
use proptest::prelude::*;

fn flip() -> BraidingProvider {
    BraidingProvider::VectFlip
}

/// `χ(g^a h^b ⊗ g^c h^d) = ζ_n^{k·b·c}` on `k[C_n × C_n]`.
fn bicharacter(n: u32, k: i64) -> TwoCocycle {
    let h = abelian_group_algebra(&[n, n]).unwrap();
    let nn = n as usize;
    let s = h.space().clone();
    let chi = LinMap::from_fn(vec![s.clone(), s], vec![], |_, col| {
        let (x, y) = (col / (nn * nn), col % (nn * nn));
        zeta_power(n, k * ((x % nn) * (y / nn)) as i64).unwrap()
    });
    TwoCocycle::new(h.bialgebra.clone(), chi).unwrap()
}

#[test]
fn counit_dot_is_neutral() {
    let h = radford(RadfordParams::new(3, 1, 3, 1)).unwrap().h;
    for side in [Side::Left, Side::Right] {
        assert_eq!(
            conv_dot(&h.eps, &h.antipode, &h.delta, side).unwrap(),
            h.antipode
        );
    }
}

#[test]
fn dot_with_unit_counit() {
    // χ.(η∘ε) = η∘χ
    let h = radford(RadfordParams::new(2, 1, 2, 1)).unwrap().h;
    let chi = LinMap::from_fn(vec![h.space().clone()], vec![], |_, j| {
        Scalar::from(j as i64 + 1)
    });
    let got = conv_dot(&chi, &h.unit_counit(), &h.delta, Side::Left).unwrap();
    assert_eq!(got, compose(&h.eta, &chi).unwrap());
}

#[test]
fn dot_shape_mismatch() {
    let h = radford(RadfordParams::new(2, 1, 2, 1)).unwrap().h;
    assert!(matches!(
        conv_dot(&h.identity(), &h.identity(), &h.delta, Side::Left),
        Err(Error::Shape { .. })
    ));
}

#[test]
fn trivial_cocycle_passes_and_changes_nothing() {
    let h = radford(RadfordParams::new(3, 1, 3, 1)).unwrap().h;
    let c = TwoCocycle::trivial(h.bialgebra.clone());
    assert!(validate_cocycle(&c).unwrap().passed());
    assert_eq!(twist_hopf(&h, &c).unwrap(), h);
}

#[test]
fn bicharacter_matches_closed_formula() {
    for n in [2u32, 3] {
        let (_, c) = bicharacter_cocycle(n).unwrap();
        assert_eq!(c.chi, bicharacter(n, 1).chi);
    }
}

#[test]
fn bicharacter_satisfies_cocycle_identity_on_group_elements() {
    // group-likes: χ(y, z) χ(x, yz) = χ(x, y) χ(xy, z)
    let n = 3usize;
    let c = bicharacter(3, 1);
    let mul = |x: usize, y: usize| ((x / n + y / n) % n) * n + (x % n + y % n) % n;
    let chi = |x: usize, y: usize| c.chi.entry(0, x * n * n + y);
    for x in 0..9 {
        for y in 0..9 {
            for z in 0..9 {
                assert_eq!(
                    &chi(y, z) * &chi(x, mul(y, z)),
                    &chi(x, y) * &chi(mul(x, y), z)
                );
            }
        }
    }
    let r = validate_cocycle(&c).unwrap();
    assert!(r.passed(), "{}", r.failure_summary());
    assert_eq!(r.verdict(COCYCLE_UNITS_AGREE), Some(true));
}

#[test]
fn bicharacter_twist_passes_all_axioms() {
    for n in [2, 3] {
        let (h, c) = bicharacter_cocycle(n).unwrap();
        let t = twist_hopf(&h, &c).unwrap();
        assert!(check_hopf(&t).unwrap().passed());
        // group-likes: m^χ(x⊗y) = χ(x, y) xy χ⁻(x, y) = xy
        assert_eq!(t.m, h.m);
    }
}

#[test]
fn twisting_back_restores_multiplication() {
    let (h, c) = bicharacter_cocycle(3).unwrap();
    let t = twist(&h.bialgebra, &c).unwrap();
    let back = c.inverse_on(t.clone()).unwrap();
    assert_eq!(twist(&t, &back).unwrap().m, h.m);
}

#[test]
fn wrong_unit_cocycle_fails() {
    let h = abelian_group_algebra(&[2]).unwrap();
    let s = h.space().clone();
    let chi = LinMap::from_fn(vec![s.clone(), s], vec![], |_, col| {
        Scalar::from(if col == 1 { 3 } else { 1 })
    });
    let c = TwoCocycle::new(h.bialgebra.clone(), chi).unwrap();
    let r = validate_cocycle(&c).unwrap();
    assert_eq!(r.verdict(COCYCLE_LEFT_UNIT), Some(false));
    assert!(r.verdict(COCYCLE_IDENTITY).is_some());
    assert!(r.verdict(COCYCLE_RIGHT_UNIT).is_some());
}

#[test]
fn zero_cocycle_is_not_invertible() {
    let h = abelian_group_algebra(&[2]).unwrap();
    let s = h.space().clone();
    let c = TwoCocycle::new(h.bialgebra.clone(), LinMap::zero(&[s.clone(), s], &[])).unwrap();
    assert!(twist(&h.bialgebra, &c).is_err());
}

#[test]
fn group_pairing_is_kronecker_and_valid() {
    let (h, a, p) = group_pairing(4).unwrap();
    for i in 0..4 {
        for j in 0..4 {
            let want = if i == j {
                Scalar::one()
            } else {
                Scalar::zero()
            };
            assert_eq!(p.form.entry(0, i * 4 + j), want);
        }
    }
    assert!(validate_pairing(&p, &flip()).unwrap().passed());
    assert_eq!(
        compose(&p.form, &tensor(&h.eta, &a.identity())).unwrap(),
        a.eps
    );
}

#[test]
fn zero_form_fails_unit_conditions() {
    let (_, _, mut p) = group_pairing(3).unwrap();
    p.form = LinMap::zero(p.form.dom(), &[]);
    let r = validate_pairing(&p, &flip()).unwrap();
    assert_eq!(r.verdict(PAIRING_UNIT_H), Some(false));
    assert_eq!(r.verdict(PAIRING_UNIT_A), Some(false));
}

#[test]
fn pairing_inverses_agree() {
    let (h, a, p) = group_pairing(3).unwrap();
    assert!(
        pairing_inverse_report(&p, &h.antipode, &a.antipode, &flip())
            .unwrap()
            .passed()
    );
    let hs = radford(RadfordParams::new(3, 1, 3, 1)).unwrap().h;
    let (dual, p) = paired_dual(&hs).unwrap();
    assert!(
        pairing_inverse_report(&p, &hs.antipode, &dual.antipode, &flip())
            .unwrap()
            .passed()
    );
}

#[test]
fn flip_group_pairing_is_matched_and_involutive() {
    let d = group_double(4).unwrap();
    assert!(d.matched.is_matched_pair && d.matched.braiding_involutive);
}

#[test]
fn non_involutive_braiding_is_not_matched() {
    let d = yd_c3_double().unwrap();
    assert!(!d.matched.braiding_involutive);
    assert!(!d.matched.is_matched_pair);
}

#[test]
fn trivial_pairing_is_matched() {
    let (h, a) = (BiunitalPair::trivial("H"), BiunitalPair::trivial("A"));
    let form = LinMap::from_fn(vec![h.space.clone(), a.space.clone()], vec![], |_, _| {
        Scalar::one()
    });
    let p = DualPairing::new(h, a, form).unwrap();
    let m = matched_pair_from_pairing(&p, &flip()).unwrap();
    assert!(m.is_matched_pair && m.braiding_involutive);
}

#[test]
fn invalid_pairing_is_refused() {
    let (_, _, mut p) = group_pairing(2).unwrap();
    p.form = LinMap::zero(p.form.dom(), &[]);
    assert!(matches!(
        matched_pair_from_pairing(&p, &flip()),
        Err(Error::Precondition(_))
    ));
}

#[test]
fn sweedler_crossed_modules_pass_preconditions() {
    let input = sweedler_crossed_modules().unwrap();
    let r = double_biproduct_preconditions(&input).unwrap();
    assert!(r.passed(), "{}", r.failure_summary());
    assert_eq!(
        r.verdict("Ψ_{C,B}∘Ψ_{B,C} = (μ_r⊗μ_l)∘(id⊗Ψ_{H,H}⊗id)∘(ν_r⊗ν_l)"),
        Some(true)
    );
}

#[test]
fn double_braiding_condition_on_x_tensor_x() {
    // (μ_r⊗μ_l)∘(id⊗Ψ⊗id)∘(ν_r⊗ν_l) sends x⊗x to x⊗x
    let input = sweedler_crossed_modules().unwrap();
    let (bs, cs, hs) = (
        input.b.space.clone(),
        input.c.space.clone(),
        input.h.space().clone(),
    );
    let f = chain(
        &[bs, cs],
        vec![
            vec![mp(&input.b_coaction), mp(&input.c_coaction)],
            vec![
                id(1),
                mp(&crossbial::tensor::flip(&[hs.clone()], &[hs])),
                id(1),
            ],
            vec![mp(&input.b_action), mp(&input.c_action)],
        ],
    )
    .unwrap();
    assert_eq!(f.column(3), &[(3, Scalar::one())][..]);
}

#[test]
fn sweedler_double_biproduct_cocycles() {
    let input = sweedler_crossed_modules().unwrap();
    for alpha in [0i64, 1, 2, -1] {
        let mut inp = input.clone();
        inp.rho = Some(sweedler_rho(&inp, &Scalar::from(alpha)).unwrap());
        let out = double_biproduct(&inp).unwrap();
        assert_eq!(out.z.dim(), 8);
        assert!(
            out.report.passed(),
            "α = {alpha}: {}",
            out.report.failure_summary()
        );
        assert!(validate_cocycle(&out.rho_hat).unwrap().passed());
        assert_eq!(out.z_twisted.m, out.direct_multiplication);
        assert_eq!(out.z_twisted.delta, out.z.delta);
        assert_eq!(out.z_twisted.eta, out.z.eta);
        assert_eq!(out.z_twisted.eps, out.z.eps);
    }
}

#[test]
fn counit_rho_leaves_z_unchanged() {
    let mut input = sweedler_crossed_modules().unwrap();
    input.rho = Some(tensor(&input.b.eps, &input.c.eps));
    let out = double_biproduct(&input).unwrap();
    assert_eq!(out.z_twisted, out.z);
}

#[test]
fn rho_with_wrong_unit_is_refused() {
    let mut input = sweedler_crossed_modules().unwrap();
    input.rho = Some(
        sweedler_rho(&input, &Scalar::one())
            .unwrap()
            .scale(&Scalar::from(2)),
    );
    assert!(double_biproduct(&input).is_err());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn dot_products_associate(seed in any::<u64>()) {
        let h = radford(RadfordParams::new(3, 1, 3, 1)).unwrap().h;
        let mut rng = common::rng(seed);
        let s = [h.space().clone()];
        let chi = common::map(&mut rng, &s, &[], 0.7, 3);
        let psi = common::map(&mut rng, &s, &[], 0.7, 3);
        let f = common::map(&mut rng, &s, &s, 0.3, 3);
        let left = conv_dot(&psi, &conv_dot(&chi, &f, &h.delta, Side::Left).unwrap(), &h.delta, Side::Right).unwrap();
        let right = conv_dot(&chi, &conv_dot(&psi, &f, &h.delta, Side::Right).unwrap(), &h.delta, Side::Left).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn twisting_preserves_unit_counit_and_coproduct(n in 2u32..=3, k in 0i64..3) {
        let c = bicharacter(n, k);
        prop_assert!(validate_cocycle(&c).unwrap().passed());
        let t = twist(&c.host, &c).unwrap();
        prop_assert_eq!(&t.delta, &c.host.delta);
        prop_assert_eq!(&t.eta, &c.host.eta);
        prop_assert_eq!(&t.eps, &c.host.eps);
    }
}
