// SPDX-License-Identifier: Apache-2.0

use std::sync::Arc;

use diffext::cohomology::{differential, is_cocycle, Cochain, CoeffModule, ModuleValue};
use diffext::extension::{
    commutator_closed_form, make_alpha, nonsplit_witness, torus_alpha_closed_form,
    torus_commutator, DerivationCocycle, ExtElement,
};
use diffext::groups::sample_sl2;
use diffext::{DerivationQ, GroupElementQ, Rat, RatFuncQ, Representation};
use num_traits::Zero;
use proptest::prelude::*;

fn partials() -> (DerivationQ, DerivationQ) {
    (
        DerivationQ::partial(0, 2).unwrap(),
        DerivationQ::partial(1, 2).unwrap(),
    )
}

fn elements(seed: u64, count: usize, rep: Representation) -> Vec<GroupElementQ> {
    sample_sl2::<Rat>(seed, count, 2, 2)
        .iter()
        .map(|g| rep.apply(g).unwrap())
        .collect()
}

fn rep_strategy() -> impl Strategy<Value = Representation> {
    prop_oneof![Just(Representation::Natural), Just(Representation::Adjoint)]
}

fn q(s: &str) -> RatFuncQ {
    s.parse().unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn dd_vanishes_on_arbitrary_two_cochains(seed in any::<u64>()) {
        let f = Cochain::new(2, CoeffModule::ScalarTrivial, |gs: &[GroupElementQ]| {
            Ok(ModuleValue::Scalar(gs[0].matrix().get(0, 1) * gs[1].matrix().get(1, 1)))
        });
        let gs = elements(seed, 4, Representation::Natural);
        let v = differential(&differential(&f)).evaluate(&gs).unwrap();
        prop_assert!(v.is_zero());
    }

    #[test]
    fn derivation_cocycle_identity(seed in any::<u64>(), rep in rep_strategy()) {
        let (d1, _) = partials();
        let c = DerivationCocycle::new(d1, rep);
        let gs = elements(seed, 2, rep);
        let (g, h) = (&gs[0], &gs[1]);
        let lhs = c.at(&g.mul(h).unwrap()).unwrap();
        let rhs = c.at(g).unwrap().add(&g.conjugate(&c.at(h).unwrap()).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
        // c(g^-1) = -g^-1 c(g) g
        let inv = c.at_inverse(g).unwrap();
        prop_assert_eq!(inv, g.inverse().conjugate(&c.at(g).unwrap()).unwrap().neg());
    }

    #[test]
    fn alpha_forms_agree_and_close(seed in any::<u64>()) {
        let (d1, d2) = partials();
        let alpha = make_alpha(&d1, &d2, Representation::Natural).unwrap();
        let gs = elements(seed, 3, Representation::Natural);
        prop_assert_eq!(alpha.eval(&gs[0], &gs[1]).unwrap(), alpha.eval_inverse_form(&gs[0], &gs[1]).unwrap());
        let check = is_cocycle(&alpha.cochain(), std::slice::from_ref(&gs)).unwrap();
        prop_assert!(check.holds, "{:?}", check.witness);
    }

    #[test]
    fn extension_group_axioms(seed in any::<u64>()) {
        let (d1, d2) = partials();
        let alpha = Arc::new(make_alpha(&d1, &d2, Representation::Natural).unwrap());
        let gs = elements(seed, 3, Representation::Natural);
        let xs = [q("t1"), q("1/(t2+1)"), q("-3")];
        let es: Vec<_> = gs.iter().zip(xs).map(|(g, x)| ExtElement::new(g.clone(), x, Arc::clone(&alpha)).unwrap()).collect();
        let (a, b, c) = (&es[0], &es[1], &es[2]);
        prop_assert_eq!(a.mul(b).unwrap().mul(c).unwrap(), a.mul(&b.mul(c).unwrap()).unwrap());
        prop_assert!(a.mul(&a.inverse().unwrap()).unwrap().is_identity());
        let z = ExtElement::central(q("t1*t2"), Arc::clone(&alpha));
        prop_assert_eq!(a.mul(&z).unwrap(), z.mul(a).unwrap());
    }
}

#[test]
fn torus_values() {
    let (d1, d2) = partials();
    let (t1, t2) = (q("t1"), q("t2"));
    for (rep, want) in [
        (Representation::Natural, "2/(t1*t2)"),
        (Representation::Adjoint, "8/(t1*t2)"),
    ] {
        let alpha = make_alpha(&d1, &d2, rep).unwrap();
        let direct = alpha
            .eval(
                &rep.torus_image(&t1).unwrap(),
                &rep.torus_image(&t2).unwrap(),
            )
            .unwrap();
        assert_eq!(direct, q(want));
        assert_eq!(
            torus_alpha_closed_form(&t1, &t2, rep, &d1, &d2).unwrap(),
            q(want)
        );
        let c = torus_commutator(&t1, &t2, &Arc::new(alpha)).unwrap();
        assert!(c.group_part().is_identity());
        assert_eq!(c.scalar_part(), &q(want));
    }
}

#[test]
fn dependent_derivations_split() {
    let (d1, _) = partials();
    let d2 = d1.scaled(&q("t1^2 + t2")).unwrap();
    let alpha = Arc::new(make_alpha(&d1, &d2, Representation::Natural).unwrap());
    for (s, t) in [("t1", "t2"), ("t1 + t2", "t1*t2"), ("1/(t1 - 1)", "t2^3")] {
        let c = torus_commutator(&q(s), &q(t), &alpha).unwrap();
        assert!(c.is_identity(), "{s}, {t}: {c}");
        assert!(
            commutator_closed_form(&q(s), &q(t), Representation::Natural, &d1, &d2)
                .unwrap()
                .is_zero()
        );
    }
    assert_eq!(
        nonsplit_witness(Representation::Natural, &d1, &d2).unwrap(),
        None
    );
    let (_, p2) = partials();
    let w = nonsplit_witness(Representation::Natural, &d1, &p2)
        .unwrap()
        .unwrap();
    assert_eq!((w.s, w.t, w.value), (q("t1"), q("t2"), q("2/(t1*t2)")));
}
