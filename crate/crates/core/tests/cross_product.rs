use crossbial::cross::{
    bat_to_hopf_datum, build_cross_product, decompose, hopf_datum_to_bat, split_idempotent,
    trivalent_verdicts, verify_trivalent_equivalences, Bat, IdempotentSystem, ProjectionSystem,
    System, VERDICT_AGREE, VERDICT_DATUM, VERDICT_IDEMPOTENT, VERDICT_MORPHISM,
};
use crossbial::datum::{
    check_hopf_datum, classify_pattern, induced_structures, Family, TrivalencePattern,
};
use crossbial::scalar::Scalar;
use crossbial::structures::{check_axioms, BiunitalPair, StructureKind};
use crossbial::tensor::{compose, flip, tensor, BraidingProvider, LinMap};
use crossbial::zoo::{
    canonical_system, cross_product_of, group_algebra, group_tensor_datum, radford, zoo_data,
    RadfordParams,
};
use crossbial::Error;

fn flip_bat(n1: usize, n2: usize) -> Bat {
    let (b1, b2) = (
        group_algebra(n1).unwrap().bialgebra,
        group_algebra(n2).unwrap().bialgebra,
    );
    let (s1, s2) = ([b1.space.clone()], [b2.space.clone()]);
    Bat {
        phi12: flip(&s1, &s2),
        phi21: flip(&s2, &s1),
        b1,
        b2,
        braiding: BraidingProvider::VectFlip,
    }
}

fn radford_bat(p: RadfordParams) -> Bat {
    hopf_datum_to_bat(&radford(p).unwrap().datum).unwrap()
}

#[test]
fn flip_bat_builds_tensor_product() {
    let b = build_cross_product(&flip_bat(2, 3)).unwrap();
    assert_eq!(b.dim(), 6);
}

#[test]
fn radford_bat_builds_with_dimension_r_times_n() {
    for p in [
        RadfordParams::new(2, 1, 2, 1),
        RadfordParams::new(3, 1, 6, 1),
        RadfordParams::new(4, 1, 4, 1),
    ] {
        let b = build_cross_product(&radford_bat(p)).unwrap();
        assert_eq!(b.dim(), p.r() * p.big_n as usize);
    }
}

#[test]
fn phi21_unit_violation_is_not_a_bat() {
    // φ21(1⊗g) = g⊗g instead of g⊗1
    let mut t = flip_bat(2, 2);
    let mut cols: Vec<Vec<(usize, Scalar)>> = (0..4).map(|j| t.phi21.column(j).to_vec()).collect();
    cols[1] = vec![(3, Scalar::one())];
    t.phi21 = LinMap::from_columns(t.phi21.dom().to_vec(), t.phi21.cod().to_vec(), cols).unwrap();
    assert!(matches!(
        build_cross_product(&t),
        Err(Error::NotABat { .. })
    ));
    let r = check_axioms(
        &t.assemble().unwrap(),
        None,
        StructureKind::Algebra,
        &BraidingProvider::VectFlip,
    )
    .unwrap();
    assert_eq!(r.verdict("left unit"), Some(false));
}

#[test]
fn cross_product_rejects_bad_unit_counit() {
    let mut t = flip_bat(2, 2);
    t.b1.eps = t.b1.eps.scale(&Scalar::from(2));
    assert!(build_cross_product(&t).is_err());
}

#[test]
fn flip_bat_gives_trivial_datum() {
    let d = bat_to_hopf_datum(&flip_bat(2, 3)).unwrap();
    assert_eq!(d.trivial_flags(), (true, true, true, true));
}

#[test]
fn radford_bat_actions() {
    let p = RadfordParams::new(3, 1, 3, 1);
    let (r, nn, q) = (p.r(), p.big_n as usize, p.q().unwrap());
    let d = bat_to_hopf_datum(&radford_bat(p)).unwrap();
    for l in 0..nn {
        for m in 0..r {
            // μ_l(g^l⊗x^m) = q^{−ml} x^m
            assert_eq!(
                d.mu_l.column(l * r + m),
                &[(m, q.pow(-((m * l) as i64)))][..]
            );
        }
    }
    for m in 0..r {
        // ν_l(x^m) = g^{−νm}⊗x^m
        let l = (-(m as i64)).rem_euclid(nn as i64) as usize;
        assert_eq!(d.nu_l.column(m), &[(l * r + m, Scalar::one())][..]);
    }
    let (_, _, mu_l, _) = d.trivial_flags();
    assert_eq!(d.trivial_flags(), (false, true, mu_l, true));
    assert!(!mu_l);
}

#[test]
fn bat_round_trip_reproduces_phis() {
    for (name, d) in zoo_data().unwrap() {
        let t = hopf_datum_to_bat(&d).unwrap();
        let back = induced_structures(&bat_to_hopf_datum(&t).unwrap()).unwrap();
        assert_eq!(back.phi12, t.phi12, "{name}");
        assert_eq!(back.phi21, t.phi21, "{name}");
    }
}

#[test]
fn phis_satisfy_unit_and_counit_conditions() {
    for (name, d) in zoo_data().unwrap() {
        let t = hopf_datum_to_bat(&d).unwrap();
        let (b1, b2) = (&t.b1, &t.b2);
        let (i1, i2) = (b1.identity(), b2.identity());
        assert_eq!(
            compose(&t.phi21, &tensor(&b2.eta, &i1)).unwrap(),
            tensor(&i1, &b2.eta),
            "{name}"
        );
        assert_eq!(
            compose(&t.phi21, &tensor(&i2, &b1.eta)).unwrap(),
            tensor(&b1.eta, &i2),
            "{name}"
        );
        assert_eq!(
            compose(&tensor(&b2.eps, &i1), &t.phi12).unwrap(),
            tensor(&i1, &b2.eps),
            "{name}"
        );
        assert_eq!(
            compose(&tensor(&i2, &b1.eps), &t.phi12).unwrap(),
            tensor(&b1.eps, &i2),
            "{name}"
        );
    }
}

#[test]
fn trivial_second_factor_decomposition() {
    let a = group_algebra(3).unwrap().bialgebra;
    let k = BiunitalPair::trivial("k");
    let s = [a.space.clone()];
    let sys = ProjectionSystem {
        i1: a.identity(),
        p1: a.identity(),
        i2: a.eta.relabel(vec![k.space.clone()], s.to_vec()).unwrap(),
        p2: a.eps.relabel(s.to_vec(), vec![k.space.clone()]).unwrap(),
        a,
    };
    let dec = decompose(&System::Projection(sys)).unwrap();
    assert_eq!(dec.bat.b2.dim(), 1);
    assert_eq!(dec.bat.b1.dim(), 3);
}

#[test]
fn sweedler_decomposition_reproduces_radford_phis() {
    let s = radford(RadfordParams::new(2, 1, 2, 1)).unwrap();
    let dec = decompose(&System::Projection(s.system.clone())).unwrap();
    let expected = hopf_datum_to_bat(&s.datum).unwrap();
    assert_eq!(dec.bat.phi12, expected.phi12);
    assert_eq!(dec.bat.phi21, expected.phi21);
    assert_eq!(
        dec.iso.columns(),
        LinMap::identity(&[s.h.space().clone()]).columns()
    );
}

#[test]
fn idempotent_system_splits() {
    let s = radford(RadfordParams::new(3, 1, 3, 1)).unwrap();
    let (pi1, pi2) = s.system.idempotents().unwrap();
    let dec = decompose(&System::Idempotent(IdempotentSystem {
        a: s.h.bialgebra.clone(),
        pi1,
        pi2,
    }))
    .unwrap();
    assert_eq!((dec.bat.b1.dim(), dec.bat.b2.dim()), (3, 3));
    let d = bat_to_hopf_datum(&dec.bat).unwrap();
    assert!(check_hopf_datum(&d).unwrap().passed());
}

#[test]
fn unit_counit_idempotents_do_not_split() {
    let a = group_algebra(2).unwrap();
    let u = a.unit_counit();
    let sys = IdempotentSystem {
        a: a.bialgebra.clone(),
        pi1: u.clone(),
        pi2: u,
    };
    assert!(matches!(
        decompose(&System::Idempotent(sys)),
        Err(Error::NotASplitting(_))
    ));
}

#[test]
fn non_idempotent_is_invalid() {
    let a = group_algebra(2).unwrap();
    let twice = a.identity().scale(&Scalar::from(2));
    assert!(matches!(
        split_idempotent(&twice, "B"),
        Err(Error::InvalidSystem(_))
    ));
    let sys = IdempotentSystem {
        a: a.bialgebra.clone(),
        pi1: twice,
        pi2: a.unit_counit(),
    };
    assert!(matches!(
        decompose(&System::Idempotent(sys)),
        Err(Error::InvalidSystem(_))
    ));
}

#[test]
fn split_idempotent_factors() {
    let s = radford(RadfordParams::new(2, 1, 2, 1)).unwrap();
    let (pi1, _) = s.system.idempotents().unwrap();
    let (inj, proj) = split_idempotent(&pi1, "B").unwrap();
    assert_eq!(compose(&inj, &proj).unwrap(), pi1);
    assert_eq!(compose(&proj, &inj).unwrap(), LinMap::identity(inj.dom()));
}

#[test]
fn canonical_systems_decompose_to_themselves() {
    for (name, d) in zoo_data().unwrap() {
        let a = cross_product_of(&d).unwrap();
        let sys = canonical_system(&d, &a).unwrap();
        let dec = decompose(&System::Projection(sys)).unwrap();
        assert_eq!(dec.iso.columns(), a.identity().columns(), "{name}");
        let t = hopf_datum_to_bat(&d).unwrap();
        assert_eq!(dec.bat.phi12, t.phi12, "{name}");
        assert_eq!(dec.bat.phi21, t.phi21, "{name}");
    }
}

#[test]
fn sweedler_trivalent_verdicts() {
    let s = radford(RadfordParams::new(2, 1, 2, 1)).unwrap();
    let r = verify_trivalent_equivalences(&s.system).unwrap();
    for v in [
        VERDICT_DATUM,
        VERDICT_MORPHISM,
        VERDICT_IDEMPOTENT,
        VERDICT_AGREE,
    ] {
        assert_eq!(r.verdict(v), Some(true), "{v}");
    }
}

#[test]
fn flip_tensor_verdicts() {
    let d = group_tensor_datum(2, 3).unwrap();
    let a = cross_product_of(&d).unwrap();
    let r = verify_trivalent_equivalences(&canonical_system(&d, &a).unwrap()).unwrap();
    assert!(r.passed());
}

#[test]
fn verdicts_agree_on_every_zoo_system() {
    for (name, d) in zoo_data().unwrap() {
        let a = cross_product_of(&d).unwrap();
        let v = trivalent_verdicts(&canonical_system(&d, &a).unwrap()).unwrap();
        assert!(v.agree(), "{name}: {v:?}");
    }
}

#[test]
fn mutated_non_trivalent_tuple_is_refused() {
    // give the Sweedler datum a nontrivial right action and coaction:
    // μ_r(g^l⊗x) = g^l and ν_r(g^l) = g^l⊗1 + g^l⊗x
    let mut d = radford(RadfordParams::new(2, 1, 2, 1)).unwrap().datum;
    let one = Scalar::one;
    d.mu_r = LinMap::from_images(d.mu_r.dom().to_vec(), d.mu_r.cod().to_vec(), |c| {
        vec![(c / 2, one())]
    })
    .unwrap();
    d.nu_r = LinMap::from_images(d.nu_r.dom().to_vec(), d.nu_r.cod().to_vec(), |l| {
        vec![(l * 2, one()), (l * 2 + 1, one())]
    })
    .unwrap();
    assert_eq!(d.trivial_flags(), (false, false, false, false));
    let pattern = TrivalencePattern::from_code("1111").unwrap();
    assert_eq!(classify_pattern(&pattern).family, Family::NonTrivalent);
    assert!(!check_hopf_datum(&d).unwrap().passed());
    assert!(hopf_datum_to_bat(&d).is_err());
}
