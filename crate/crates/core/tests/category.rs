use proptest::prelude::*;

use qcoset::coset::{
    canonical_kappa, canonical_window, enumerate_cosets, lambda_mu_theta, render_diagram, CosetJson,
};
use qcoset::verify::random::{coset, trial_rng, window};
use qcoset::{BlockLayout, Cell, Coset, Error, Gf, LinRel, Mat, Object, Window};

fn obj(lo: i64, hi: i64) -> Object {
    Object::new(lo, hi).unwrap()
}

#[test]
fn swap_padding_matrix() {
    let f = Gf::prime(2).unwrap();
    let j = BlockLayout::new(vec![1, 1, 1, 1, 1], vec![1, 1, 1, 1, 1])
        .with(0, 1, Cell::Identity)
        .with(1, 0, Cell::Identity)
        .with(2, 2, Cell::Identity)
        .with(3, 4, Cell::Identity)
        .with(4, 3, Cell::Identity)
        .assemble(&f)
        .unwrap();
    let expect = Mat::from_ints(
        &f,
        &[
            &[0, 1, 0, 0, 0],
            &[1, 0, 0, 0, 0],
            &[0, 0, 1, 0, 0],
            &[0, 0, 0, 0, 1],
            &[0, 0, 0, 1, 0],
        ],
    );
    assert_eq!(j, expect);
    assert_eq!(j.mul(&j).unwrap(), Mat::identity(&f, 5));
}

#[test]
fn window_examples() {
    let f = Gf::prime(3).unwrap();
    let a = obj(0, 2);
    assert_eq!(Window::identity(&f, a, a).coset(), Coset::unit(&f, a));
    for k in 0..3 {
        let z = Window::zeta(&f, a, k).coset();
        assert_eq!(z.chi(), &LinRel::identity(&f, 2));
        assert_eq!(z.eta(), k);
    }
    let z = Window::zeta(&f, a, 1)
        .star(&Window::zeta(&f, a, 2))
        .unwrap();
    assert_eq!(z.coset(), Coset::zeta(&f, a, 3));
    let w = Window::zeta(&f, a, 2);
    assert_eq!(w.pad(0, 0), w);
    assert_eq!(w.pad(1, 2).pad(2, 0), w.pad(3, 2));
    assert_eq!(w.pad(1, 2).coset(), w.coset());
}

#[test]
fn enumeration_counts() {
    let f = Gf::prime(2).unwrap();
    assert_eq!(
        enumerate_cosets(&f, obj(0, 0), obj(0, 0), 2).unwrap().len(),
        3
    );
    let a = obj(0, 1);
    for c in enumerate_cosets(&f, a, a, 0).unwrap() {
        assert!(c.chi().ker().dim() <= c.chi().indef().dim());
    }
    let zero = LinRel::zero(&f, 1, 1);
    assert!(matches!(
        Coset::new(a, obj(1, 2), zero.clone(), 0),
        Err(Error::InvariantViolation(_))
    ));
    assert!(Coset::new(a, obj(1, 2), zero, 1).is_ok());
}

#[test]
fn weights() {
    let f = Gf::prime(2).unwrap();
    let a = obj(0, 3);
    assert_eq!(Coset::unit(&f, a).measure_weight(), 0);
    assert_eq!(Coset::zeta(&f, a, 2).measure_weight(), -2);
}

#[test]
fn ordered_pairs() {
    let f = Gf::prime(2).unwrap();
    let (a, b, g) = (obj(-1, 2), obj(0, 2), obj(1, 2));
    let (l, m, t) = lambda_mu_theta(&f, a, a).unwrap();
    assert!(l == Coset::unit(&f, a) && m == l && t == l);
    let (lab, mab, tab) = lambda_mu_theta(&f, a, b).unwrap();
    assert_eq!(mab.star(&lab).unwrap(), Coset::unit(&f, b));
    assert_eq!(lab.star(&mab).unwrap(), tab);
    assert_eq!(tab.star(&tab).unwrap(), tab);
    let (lbg, _, _) = lambda_mu_theta(&f, b, g).unwrap();
    let (lag, _, _) = lambda_mu_theta(&f, a, g).unwrap();
    assert_eq!(lab.star(&lbg).unwrap(), lag);
    assert!(matches!(
        lambda_mu_theta(&f, g, a),
        Err(Error::NotComparable(..))
    ));
}

#[test]
fn canonical_forms_round_trip() {
    let f = Gf::prime(2).unwrap();
    let objs = [obj(0, 0), obj(0, 1), obj(1, 2), obj(0, 2)];
    for &a in &objs {
        for &b in &objs {
            for c in enumerate_cosets(&f, b, a, 2).unwrap() {
                let k = canonical_kappa(&c).unwrap();
                assert!(k.is_consistent());
                assert_eq!(k.k[1][1], c.chi().rank());
                let w = canonical_window(&c).unwrap();
                assert_eq!(w.coset(), c);
                let d = c.involute();
                assert_eq!(d.eta() as i64, c.adjoint_eta());
                assert_eq!(canonical_kappa(&d).unwrap().k[2][0], d.eta());
            }
        }
    }
}

#[test]
fn diagrams() {
    let f = Gf::prime(2).unwrap();
    let a = obj(0, 1);
    assert_eq!(render_diagram(&Coset::unit(&f, a)).unwrap(), "○\n│\n○\n");
    assert_eq!(
        render_diagram(&Coset::zeta(&f, a, 1)).unwrap(),
        "○\n│ ⊘\n○\n"
    );
    let zero = Coset::new(a, a, LinRel::zero(&f, 1, 1), 0).unwrap();
    assert_eq!(render_diagram(&zero).unwrap(), "○\n\n○\n");
}

#[test]
fn json_round_trip() {
    let f = Gf::of_order(4).unwrap();
    let mut rng = trial_rng(11, 0);
    for _ in 0..50 {
        let c = coset(&mut rng, &f, obj(0, 2), obj(-1, 1), 2);
        let text = serde_json::to_string(&c.to_json()).unwrap();
        let back: CosetJson = serde_json::from_str(&text).unwrap();
        assert_eq!(Coset::from_json(&back).unwrap(), c);
    }
}

#[test]
fn window_text_round_trip() {
    let f = Gf::of_order(4).unwrap();
    let mut rng = trial_rng(12, 0);
    for _ in 0..50 {
        let w = window(&mut rng, &f, obj(0, 1), obj(-1, 1), 2);
        assert_eq!(Window::parse_text(&f, &w.to_text()).unwrap(), w);
    }
}

fn seeds() -> impl Strategy<Value = (u64, u32)> {
    (any::<u64>(), prop::sample::select(vec![2u32, 3, 4]))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn matrix_and_invariant_paths_agree((seed, q) in seeds()) {
        let f = Gf::of_order(q).unwrap();
        let mut rng = trial_rng(seed, 0);
        let (a, b, g) = (obj(0, 1), obj(-1, 1), obj(1, 2));
        let x = window(&mut rng, &f, a, b, 1);
        let y = window(&mut rng, &f, b, g, 1);
        prop_assert_eq!(x.star(&y).unwrap().coset(), x.coset().star(&y.coset()).unwrap());
    }

    #[test]
    fn involution_reverses_products((seed, q) in seeds()) {
        let f = Gf::of_order(q).unwrap();
        let mut rng = trial_rng(seed, 1);
        let (a, b, g) = (obj(0, 2), obj(0, 1), obj(-1, 1));
        let x = coset(&mut rng, &f, a, b, 2);
        let y = coset(&mut rng, &f, b, g, 2);
        prop_assert_eq!(x.star(&y).unwrap().involute(), y.involute().star(&x.involute()).unwrap());
        prop_assert_eq!(x.involute().involute(), x.clone());
        prop_assert!(x.adjoint_eta() >= 0);
    }

    #[test]
    fn zeta_is_central((seed, k) in (any::<u64>(), 0usize..3)) {
        let f = Gf::prime(2).unwrap();
        let mut rng = trial_rng(seed, 2);
        let (a, b) = (obj(0, 1), obj(1, 2));
        let x = coset(&mut rng, &f, a, b, 1);
        prop_assert_eq!(Coset::zeta(&f, a, k).star(&x).unwrap(), x.star(&Coset::zeta(&f, b, k)).unwrap());
    }
}
