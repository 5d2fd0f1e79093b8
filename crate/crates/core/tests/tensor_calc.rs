mod common;

use common::space;
use crossbial::scalar::{zeta_power, Scalar};
use crossbial::tensor::{
    braiding, compose, flip, invert, permutation, tensor, BraidingProvider, LinMap, SpaceLabel,
    YdModule,
};
use crossbial::zoo::group_algebra;
use crossbial::Error;
use proptest::prelude::*;

/// `span(1, x)` over `kC_n` with `x◁g = ζ_n^a x` and `x ↦ x⊗g`.
fn graded_line(name: &str, n: usize, a: i64) -> YdModule {
    let h = group_algebra(n).unwrap();
    let s = space(name, 2);
    let hs = h.space().clone();
    let action = LinMap::from_fn(vec![s.clone(), hs.clone()], vec![s.clone()], |i, col| {
        let (m, l) = (col / n, (col % n) as i64);
        if i != m {
            Scalar::zero()
        } else if m == 0 {
            Scalar::one()
        } else {
            zeta_power(n as u32, a * l).unwrap()
        }
    });
    let coaction = LinMap::from_columns(
        vec![s.clone()],
        vec![s.clone(), hs],
        vec![vec![(0, Scalar::one())], vec![(n + 1, Scalar::one())]],
    )
    .unwrap();
    YdModule {
        space: s,
        action,
        coaction,
    }
}

fn yd(n: usize, modules: Vec<YdModule>) -> BraidingProvider {
    let mut bp = BraidingProvider::yetter_drinfeld(group_algebra(n).unwrap());
    for m in modules {
        bp.register(m).unwrap();
    }
    bp
}

#[test]
fn compose_with_identity() {
    let mut rng = common::rng(1);
    let (x, y) = (space("X", 2), space("Y", 3));
    let f = common::map(&mut rng, &[x], &[y.clone()], 0.6, 1);
    assert_eq!(compose(&LinMap::identity(&[y]), &f).unwrap(), f);
}

#[test]
fn flip_is_an_involution() {
    let (x, y) = (space("X", 2), space("Y", 3));
    let a = flip(&[x.clone()], &[y.clone()]);
    let b = flip(&[y.clone()], &[x.clone()]);
    assert_eq!(compose(&a, &b).unwrap(), LinMap::identity(&[y, x]));
}

#[test]
fn compose_rejects_mismatched_boundary() {
    let f = LinMap::identity(&[space("Y", 2)]);
    let g = LinMap::identity(&[space("Z", 2)]);
    let err = compose(&g, &f).unwrap_err();
    match err {
        Error::Shape { expected, found } => {
            assert!(expected.contains('Z') || found.contains('Z'));
            assert!(expected.contains('Y') || found.contains('Y'));
        }
        other => panic!("unexpected {other:?}"),
    }
}

#[test]
fn tensor_of_identities() {
    let (x, y) = (space("X", 2), space("Y", 3));
    assert_eq!(
        tensor(
            &LinMap::identity(&[x.clone()]),
            &LinMap::identity(&[y.clone()])
        ),
        LinMap::identity(&[x, y])
    );
}

#[test]
fn tensor_shape() {
    let mut rng = common::rng(2);
    let (x, y) = (space("X", 2), space("Y", 3));
    let f = common::map(&mut rng, &[x.clone()], &[x.clone()], 0.7, 1);
    let g = common::map(&mut rng, &[y.clone()], &[y.clone()], 0.7, 1);
    let t = tensor(&f, &g);
    assert_eq!((t.nrows(), t.ncols()), (6, 6));
    // leftmost factor most significant
    for i in 0..6 {
        for j in 0..6 {
            assert_eq!(
                t.entry(i, j),
                &f.entry(i / 3, j / 3) * &g.entry(i % 3, j % 3)
            );
        }
    }
}

#[test]
fn interchange_law() {
    let mut rng = common::rng(3);
    let (x, y, z, w) = (space("X", 2), space("Y", 3), space("Z", 2), space("W", 2));
    let f = common::map(&mut rng, &[x.clone()], &[y.clone()], 0.6, 1);
    let g = common::map(&mut rng, &[z.clone()], &[w.clone()], 0.6, 1);
    let a = compose(
        &tensor(&f, &LinMap::identity(&[w.clone()])),
        &tensor(&LinMap::identity(&[x.clone()]), &g),
    )
    .unwrap();
    let b = compose(
        &tensor(&LinMap::identity(&[y]), &g),
        &tensor(&f, &LinMap::identity(&[z])),
    )
    .unwrap();
    assert_eq!(a, tensor(&f, &g));
    assert_eq!(b, tensor(&f, &g));
}

#[test]
fn flip_braiding_is_involutive() {
    let (x, y) = (space("X", 2), space("Y", 3));
    let bp = BraidingProvider::VectFlip;
    let a = braiding(&bp, &x, &y).unwrap();
    let b = braiding(&bp, &y, &x).unwrap();
    assert_eq!(compose(&b, &a).unwrap(), LinMap::identity(&[x, y]));
}

#[test]
fn sweedler_yd_braiding_negates_x_tensor_x() {
    let bp = yd(2, vec![graded_line("X", 2, 1)]);
    let x = space("X", 2);
    let psi = braiding(&bp, &x, &x).unwrap();
    // x⊗x has index 3
    assert_eq!(psi.column(3), &[(3, Scalar::from(-1))]);
    assert_eq!(psi.column(0), &[(0, Scalar::one())]);
}

#[test]
fn cubic_yd_braiding_is_not_involutive() {
    let bp = yd(3, vec![graded_line("X", 3, 1), graded_line("Y", 3, 1)]);
    let (x, y) = (space("X", 2), space("Y", 2));
    let dd = bp.double_braid(&[x.clone()], &[y.clone()]).unwrap();
    let q = zeta_power(3, 1).unwrap();
    assert_eq!(dd.column(3), &[(3, &q * &q)]);
    assert_ne!(dd, LinMap::identity(&[x, y]));
}

#[test]
fn unregistered_space_is_a_configuration_error() {
    let bp = yd(2, vec![graded_line("X", 2, 1)]);
    let err = braiding(&bp, &space("X", 2), &space("Q", 2)).unwrap_err();
    assert!(matches!(err, Error::Configuration(_)));
}

#[test]
fn invert_identity_and_flip() {
    let (x, y) = (space("X", 2), space("Y", 3));
    let i = LinMap::identity(&[x.clone(), y.clone()]);
    assert_eq!(invert(&i).unwrap(), i);
    let f = flip(&[x.clone()], &[y.clone()]);
    assert_eq!(invert(&f).unwrap(), flip(&[y], &[x]));
}

#[test]
fn invert_zero_reports_rank() {
    let x = space("X", 3);
    assert!(matches!(
        invert(&LinMap::zero(&[x.clone()], &[x])),
        Err(Error::NonInvertible { rank: 0, size: 3 })
    ));
}

#[test]
fn permutation_cases() {
    let (x, y) = (space("X", 2), space("Y", 3));
    assert_eq!(
        permutation(&[x.clone(), y.clone()], &[0, 1]).unwrap(),
        LinMap::identity(&[x.clone(), y.clone()])
    );
    assert_eq!(
        permutation(&[x.clone(), y.clone()], &[1, 0]).unwrap(),
        braiding(&BraidingProvider::VectFlip, &x, &y).unwrap()
    );
    let xs = [x.clone(), x.clone(), x.clone()];
    let c = permutation(&xs, &[1, 2, 0]).unwrap();
    let c3 = compose(&c, &compose(&c, &c).unwrap()).unwrap();
    assert_eq!(c3, LinMap::identity(&xs));
    assert!(matches!(
        permutation(&xs, &[0, 0, 1]),
        Err(Error::Domain(_))
    ));
}

fn hexagon(bp: &BraidingProvider, x: &SpaceLabel, y: &SpaceLabel, z: &SpaceLabel) {
    let whole = bp.braid(&[x.clone()], &[y.clone(), z.clone()]).unwrap();
    let first = tensor(
        &braiding(bp, x, y).unwrap(),
        &LinMap::identity(&[z.clone()]),
    );
    let second = tensor(
        &LinMap::identity(&[y.clone()]),
        &braiding(bp, x, z).unwrap(),
    );
    assert_eq!(whole, compose(&second, &first).unwrap());
    let whole = bp.braid(&[x.clone(), y.clone()], &[z.clone()]).unwrap();
    let first = tensor(
        &LinMap::identity(&[x.clone()]),
        &braiding(bp, y, z).unwrap(),
    );
    let second = tensor(
        &braiding(bp, x, z).unwrap(),
        &LinMap::identity(&[y.clone()]),
    );
    assert_eq!(whole, compose(&second, &first).unwrap());
}

#[test]
fn hexagons_hold() {
    let (x, y, z) = (space("X", 2), space("Y", 2), space("Z", 2));
    hexagon(&BraidingProvider::VectFlip, &x, &y, &z);
    let bp = yd(
        3,
        vec![
            graded_line("X", 3, 1),
            graded_line("Y", 3, 2),
            graded_line("Z", 3, 1),
        ],
    );
    hexagon(&bp, &x, &y, &z);
    let inv = bp.braid_inv(&[x.clone()], &[y.clone()]).unwrap();
    assert_eq!(
        compose(&inv, &braiding(&bp, &x, &y).unwrap()).unwrap(),
        LinMap::identity(&[x, y])
    );
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn flip_is_natural(seed in any::<u64>()) {
        let mut rng = common::rng(seed);
        let (x, y, z, w) = (space("X", 2), space("Y", 3), space("Z", 2), space("W", 3));
        let f = common::map(&mut rng, &[x.clone()], &[z.clone()], 0.5, 4);
        let g = common::map(&mut rng, &[y.clone()], &[w.clone()], 0.5, 4);
        let lhs = compose(&flip(&[z], &[w]), &tensor(&f, &g)).unwrap();
        let rhs = compose(&tensor(&g, &f), &flip(&[x], &[y])).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn inverse_is_two_sided(seed in any::<u64>()) {
        let mut rng = common::rng(seed);
        let x = space("X", 4);
        let f = common::map(&mut rng, &[x.clone()], &[x.clone()], 0.6, 3);
        if let Ok(g) = invert(&f) {
            prop_assert_eq!(compose(&g, &f).unwrap(), LinMap::identity(&[x.clone()]));
            prop_assert_eq!(compose(&f, &g).unwrap(), LinMap::identity(&[x]));
        }
    }
}
