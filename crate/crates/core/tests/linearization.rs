// SPDX-License-Identifier: Apache-2.0

use diffext::extension::{make_alpha, DerivationCocycle};
use diffext::groups::{elem_upper, sample_sl2};
use diffext::linearization::{
    as_p_t, key_identity_check, l_action, l_dual_action, make_p_g, make_p_t, membership_check,
    pairing, LinElement, Section, UVector, WVector,
};
use diffext::{DerivationQ, Error, GroupElementQ, MatrixQ, Rat, RatFuncQ, Representation};
use num_traits::{One, Zero};

fn q(s: &str) -> RatFuncQ {
    s.parse().unwrap()
}

fn m2(a: &str, b: &str, c: &str, d: &str) -> MatrixQ {
    MatrixQ::from_rows(vec![vec![q(a), q(b)], vec![q(c), q(d)]]).unwrap()
}

fn cocycles() -> (DerivationCocycle<Rat>, DerivationCocycle<Rat>) {
    (
        DerivationCocycle::new(DerivationQ::partial(0, 2).unwrap(), Representation::Natural),
        DerivationCocycle::new(DerivationQ::partial(1, 2).unwrap(), Representation::Natural),
    )
}

fn nu(s: &str) -> GroupElementQ {
    Representation::Natural.torus_image(&q(s)).unwrap()
}

#[test]
fn actions_on_spot_values() {
    let (c1, _) = cocycles();
    let u = UVector::new(MatrixQ::zeros(2, 2), RatFuncQ::one());
    let got = l_action(&c1, &nu("t1"), &u).unwrap();
    assert_eq!(
        got,
        UVector::new(m2("1/t1", "0", "0", "-1/t1"), RatFuncQ::one())
    );

    let id = UVector::new(MatrixQ::identity(2), RatFuncQ::zero());
    assert_eq!(pairing(&id, &id).unwrap(), q("2"));
    let a = UVector::new(m2("0", "1", "0", "0"), q("1"));
    let b = UVector::new(m2("0", "0", "1", "0"), q("t1"));
    assert_eq!(pairing(&a, &b).unwrap(), q("1 + t1"));

    // <l_c(g)(0, 1), l'_c(g)(B, 0)> = 0
    let b = UVector::new(m2("t1", "t2^2", "1/(t1+t2)", "3"), RatFuncQ::zero());
    for g in sample_sl2::<Rat>(5, 6, 2, 2) {
        let lhs = pairing(
            &l_action(&c1, &g, &u).unwrap(),
            &l_dual_action(&c1, &g, &b).unwrap(),
        )
        .unwrap();
        assert!(lhs.is_zero(), "{g}");
    }
}

#[test]
fn p_g_read_off_componentwise() {
    let (c1, c2) = cocycles();
    let a = m2("t1", "1", "t2", "-t1*t2");
    for g in sample_sl2::<Rat>(11, 4, 2, 2) {
        let p = make_p_g(&c1, &c2, &g).unwrap();
        let e_a = WVector::new(RatFuncQ::zero(), MatrixQ::zeros(2, 2), RatFuncQ::one());
        let got = WVector::from_coords(2, &p.apply(&e_a.to_coords()).unwrap()).unwrap();
        assert_eq!(
            got,
            WVector::new(RatFuncQ::zero(), c1.at(&g).unwrap(), RatFuncQ::one())
        );

        let w = WVector::new(RatFuncQ::zero(), a.clone(), RatFuncQ::zero());
        let got = WVector::from_coords(2, &p.apply(&w.to_coords()).unwrap()).unwrap();
        let b = c2
            .at(&g.inverse())
            .unwrap()
            .mul(&a)
            .unwrap()
            .trace()
            .unwrap();
        let conj = g.matrix().mul(&a).unwrap().mul(g.inverse_matrix()).unwrap();
        assert_eq!(got, WVector::new(b, conj, RatFuncQ::zero()));
    }
    assert!(make_p_g(&c1, &c2, &GroupElementQ::identity(2))
        .unwrap()
        .is_identity());
}

#[test]
fn kernel_elements() {
    let (c1, c2) = cocycles();
    let e = GroupElementQ::identity(2);
    let t = q("t2/(t1 + 1)");
    let pt = make_p_t(2, &t);
    assert!(membership_check(&LinElement::new(e.clone(), pt.clone()), &c1, &c2).unwrap());
    assert_eq!(as_p_t(2, &pt), Some(t));
    let g = elem_upper(q("t1"));
    let pg = make_p_g(&c1, &c2, &g).unwrap();
    assert!(!membership_check(&LinElement::new(e.clone(), pg.clone()), &c1, &c2).unwrap());
    assert_eq!(as_p_t(2, &pg), None);
    let mut off = MatrixQ::identity(6);
    off.set(0, 2, q("1"));
    assert!(!membership_check(&LinElement::new(e.clone(), off), &c1, &c2).unwrap());
    let mut bad = MatrixQ::identity(6);
    bad.set(5, 0, q("1"));
    assert_eq!(
        membership_check(&LinElement::new(e, bad), &c1, &c2),
        Err(Error::NotInP)
    );
}

#[test]
fn torus_pair_key_identity() {
    let (c1, c2) = cocycles();
    let (h, g) = (nu("t1"), nu("t2"));
    let alpha = make_alpha(c1.derivation(), c2.derivation(), Representation::Natural).unwrap();
    assert_eq!(alpha.eval(&h, &g).unwrap(), q("2/(t1*t2)"));

    // the literal section gives t = tr(c1(g) c2(h^-1)) = 0 here, which is
    // alpha(h, g) minus the coboundary of phi(g) = -tr(c1(g) c2(g))
    let raw = key_identity_check(&c1, &c2, &g, &h, Section::Raw).unwrap();
    assert!(raw.holds);
    assert!(raw.t.is_zero());
    assert!(!raw.matches_alpha);
    assert_eq!(raw.coboundary, q("2/(t1*t2)"));
    assert!(raw.cohomologous());

    let norm = key_identity_check(&c1, &c2, &g, &h, Section::Normalized).unwrap();
    assert!(norm.holds && norm.matches_alpha);
    assert_eq!(norm.t, q("2/(t1*t2)"));

    let e = GroupElementQ::identity(2);
    let triv = key_identity_check(&c1, &c2, &e, &e, Section::Raw).unwrap();
    assert!(triv.holds && triv.t.is_zero() && triv.matches_alpha);
}
