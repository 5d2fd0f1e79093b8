use crossbial::cross::{bat_to_hopf_datum, decompose, System};
use crossbial::datum::check_hopf_datum;
use crossbial::scalar::{q_binomial, root_of_unity, Scalar};
use crossbial::structures::{
    check_axioms, check_crossed_module, check_hopf, classify_morphism, StructureKind,
};
use crossbial::tensor::{self, compose, BraidingProvider, LinMap, SpaceLabel, YdModule};
use crossbial::twisting::{check_left_crossed_module, validate_pairing};
use crossbial::zoo::{
    dual_group_algebra, group_algebra, group_pairing, ore_finite, radford,
    sweedler_crossed_modules, taft_factor, OreParams, RadfordParams,
};
use crossbial::Error;
use proptest::prelude::*;

fn flip() -> BraidingProvider {
    BraidingProvider::VectFlip
}

/// The right crossed module obtained by flipping the legs of a left one.
fn right_module(x: &SpaceLabel, h: &SpaceLabel, action: &LinMap, coaction: &LinMap) -> YdModule {
    let (xs, hs) = ([x.clone()], [h.clone()]);
    YdModule {
        space: x.clone(),
        action: compose(action, &tensor::flip(&xs, &hs)).unwrap(),
        coaction: compose(&tensor::flip(&hs, &xs), coaction).unwrap(),
    }
}

#[test]
fn group_algebra_examples() {
    assert_eq!(group_algebra(1).unwrap().dim(), 1);
    let c2 = group_algebra(2).unwrap();
    assert_eq!(c2.antipode, c2.identity());
    assert_eq!(c2.delta.column(1), &[(3, Scalar::one())][..]);
    for n in 1..=6 {
        assert!(check_hopf(&group_algebra(n).unwrap()).unwrap().passed());
    }
}

#[test]
fn dual_group_algebra_examples() {
    assert_eq!(dual_group_algebra(1).unwrap().dim(), 1);
    let d = dual_group_algebra(2).unwrap();
    assert_eq!(
        d.eta.column(0),
        &[(0, Scalar::one()), (1, Scalar::one())][..]
    );
    for n in 1..=5 {
        assert!(check_hopf(&dual_group_algebra(n).unwrap())
            .unwrap()
            .passed());
        let (_, _, p) = group_pairing(n).unwrap();
        assert!(validate_pairing(&p, &flip()).unwrap().passed());
    }
}

#[test]
fn taft_factor_examples() {
    assert_eq!(taft_factor(1, &Scalar::one()).unwrap().dim(), 1);
    let t = taft_factor(2, &Scalar::from(-1)).unwrap();
    assert_eq!(
        t.delta.column(1),
        &[(1, Scalar::one()), (2, Scalar::one())][..]
    );
    for r in 2..=4 {
        let t = taft_factor(r, &root_of_unity(r as u32, 1).unwrap()).unwrap();
        assert!(check_axioms(&t, None, StructureKind::Coalgebra, &flip())
            .unwrap()
            .passed());
        assert!(check_axioms(&t, None, StructureKind::Algebra, &flip())
            .unwrap()
            .passed());
        assert!(!check_axioms(&t, None, StructureKind::Bialgebra, &flip())
            .unwrap()
            .passed());
    }
    assert!(matches!(
        taft_factor(3, &Scalar::from(-1)),
        Err(Error::Parameter(_))
    ));
}

#[test]
fn taft_factor_is_bialgebra_among_graded_modules() {
    // with the grading x ↦ g⊗x over kC_r the braided compatibility holds
    let r = 3;
    let p = root_of_unity(r as u32, 1).unwrap();
    let t = taft_factor(r, &p).unwrap();
    let d = radford(RadfordParams::new(3, 1, 3, 1)).unwrap().datum;
    let mut bp = BraidingProvider::yetter_drinfeld(group_algebra(3).unwrap());
    bp.register(right_module(&t.space, &d.b2.space, &d.mu_l, &d.nu_l))
        .unwrap();
    assert!(check_axioms(&t, None, StructureKind::Bialgebra, &bp)
        .unwrap()
        .passed());
}

#[test]
fn sweedler_examples() {
    let s = radford(RadfordParams::new(2, 1, 2, 1)).unwrap();
    assert_eq!(s.h.dim(), 4);
    // S(x) = −g^ν x = −q^{−ν} x g = x g, basis x^m g^l at 2m + l
    assert_eq!(s.h.antipode.column(2), &[(3, Scalar::one())][..]);
}

#[test]
fn cubic_radford_examples() {
    let p = RadfordParams::new(3, 1, 3, 1);
    let s = radford(p).unwrap();
    assert_eq!(s.h.dim(), 9);
    assert!(check_hopf(&s.h).unwrap().passed());
    let dec = decompose(&System::Projection(s.system.clone())).unwrap();
    let q = p.q().unwrap();
    // φ21(g⊗x) = q^{−1} x⊗g
    assert_eq!(dec.bat.phi21.column(3 + 1), &[(3 + 1, q.pow(-1))][..]);
}

#[test]
fn radford_coproduct_expands_by_q_binomials() {
    // Δ(x^m) = Σ_j (m choose j)_{q^ν} x^j g^{−ν(m−j)} ⊗ x^{m−j}
    let p = RadfordParams::new(4, 1, 4, 1);
    let s = radford(p).unwrap();
    let (r, nn) = (p.r(), p.big_n as usize);
    let d = r * nn;
    let q = p.q().unwrap();
    for m in 0..r {
        let mut want: Vec<(usize, Scalar)> = (0..=m)
            .map(|j| {
                let l = (-((m - j) as i64)).rem_euclid(nn as i64) as usize;
                (
                    (j * nn + l) * d + (m - j) * nn,
                    q_binomial(m, j, &q).unwrap(),
                )
            })
            .collect();
        want.sort_by_key(|e| e.0);
        assert_eq!(s.h.delta.column(m * nn), want.as_slice());
    }
}

#[test]
fn radford_morphism_classes() {
    let s = radford(RadfordParams::new(2, 1, 2, 1)).unwrap();
    let (b1, _) = s.system.factors().unwrap();
    let a = &s.h.bialgebra;
    let i1 = classify_morphism(&s.system.i1, &b1, a).unwrap();
    let p1 = classify_morphism(&s.system.p1, a, &b1).unwrap();
    assert!(i1.is_algebra_morphism && !i1.is_coalgebra_morphism);
    assert!(!p1.is_algebra_morphism && p1.is_coalgebra_morphism);
}

#[test]
fn radford_rejects_bad_parameters() {
    for p in [
        RadfordParams::new(2, 1, 3, 1),
        RadfordParams::new(3, 1, 3, 3),
        RadfordParams::new(4, 2, 4, 1),
    ] {
        assert!(matches!(radford(p), Err(Error::Parameter(_))), "{p:?}");
    }
}

fn ore_c2() -> OreParams {
    OreParams {
        orders: vec![2],
        g: vec![vec![1]],
        g_star: vec![vec![1]],
    }
}

#[test]
fn ore_mirror_sweedler_examples() {
    let s = ore_finite(&ore_c2()).unwrap();
    assert_eq!(s.h.dim(), 4);
    assert!(check_hopf(&s.h).unwrap().passed());
    let (_, b2) = s.system.factors().unwrap();
    let p2 = classify_morphism(&s.system.p2, &s.h.bialgebra, &b2).unwrap();
    assert!(p2.is_coalgebra_morphism);
    assert!(!p2.is_algebra_morphism);
    assert_eq!(s.datum.trivial_flags(), (true, false, true, false));
}

#[test]
fn ore_rejects_non_nilpotent_generators() {
    let p = OreParams {
        orders: vec![2, 2],
        g: vec![vec![1, 0]],
        g_star: vec![vec![0, 1]],
    };
    assert!(matches!(ore_finite(&p), Err(Error::Unsupported(_))));
}

#[test]
fn sweedler_crossed_module_examples() {
    let input = sweedler_crossed_modules().unwrap();
    assert!(
        check_crossed_module(&input.b.space, &input.b_action, &input.b_coaction, &input.h)
            .unwrap()
            .passed()
    );
    assert!(check_left_crossed_module(
        &input.c.space,
        &input.c_action,
        &input.c_coaction,
        &input.h
    )
    .unwrap()
    .passed());
    let mut bp = BraidingProvider::yetter_drinfeld(input.h.clone());
    bp.register(right_module(
        &input.c.space,
        input.h.space(),
        &input.c_action,
        &input.c_coaction,
    ))
    .unwrap();
    let s = [input.c.space.clone()];
    let psi = bp.braid(&s, &s).unwrap();
    assert_eq!(psi.column(3), &[(3, Scalar::from(-1))][..]);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn radford_decomposition_reproduces_datum(n in 2u32..=4, q in 1i64..4, mult in 1u32..=2, nu in 1u32..4) {
        let p = RadfordParams::new(n, q, n * mult, nu);
        prop_assume!(p.validate().is_ok());
        let s = radford(p).unwrap();
        prop_assert!(check_hopf_datum(&s.datum).unwrap().passed());
        let dec = decompose(&System::Projection(s.system.clone())).unwrap();
        let d = bat_to_hopf_datum(&dec.bat).unwrap();
        prop_assert_eq!(d.mu_l, s.datum.mu_l);
        prop_assert_eq!(d.nu_l, s.datum.nu_l);
        prop_assert_eq!(d.mu_r, s.datum.mu_r);
        prop_assert_eq!(d.nu_r, s.datum.nu_r);
    }
}
