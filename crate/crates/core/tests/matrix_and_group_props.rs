// SPDX-License-Identifier: Apache-2.0

use diffext::field::random::{random_ratfunc, RandomShape};
use diffext::groups::sample_sl2;
use diffext::rng::rng_from_seed;
use diffext::{GroupElementQ, MatrixQ, Rat, RatFuncQ, Representation};
use num_traits::One;
use proptest::prelude::*;

fn matrix(seed: u64, n: usize) -> MatrixQ {
    let mut rng = rng_from_seed(seed);
    let shape = RandomShape::new(2, 2, 2);
    MatrixQ::from_fn(n, n, |_, _| random_ratfunc(&mut rng, &shape))
}

fn pair(seed: u64) -> (GroupElementQ, GroupElementQ) {
    let gs = sample_sl2::<Rat>(seed, 2, 2, 2);
    (gs[0].clone(), gs[1].clone())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn trace_is_cyclic(a in any::<u64>(), b in any::<u64>(), n in 1usize..4) {
        let (x, y) = (matrix(a, n), matrix(b, n));
        prop_assert_eq!(x.mul(&y).unwrap().trace().unwrap(), y.mul(&x).unwrap().trace().unwrap());
        prop_assert_eq!(x.trace_product(&y).unwrap(), x.mul(&y).unwrap().trace().unwrap());
    }

    #[test]
    fn determinant_is_multiplicative(a in any::<u64>(), b in any::<u64>(), n in 1usize..4) {
        let (x, y) = (matrix(a, n), matrix(b, n));
        let lhs = x.mul(&y).unwrap().determinant().unwrap();
        prop_assert_eq!(lhs, &x.determinant().unwrap() * &y.determinant().unwrap());
    }

    #[test]
    fn inverse_when_determinant_nonzero(a in any::<u64>(), n in 1usize..4) {
        let x = matrix(a, n);
        let det = x.determinant().unwrap();
        match x.inverse().unwrap() {
            Some(inv) => {
                prop_assert!(x.mul(&inv).unwrap().is_identity());
                prop_assert_eq!(inv.determinant().unwrap(), det.try_inv().unwrap());
            }
            None => prop_assert!(num_traits::Zero::is_zero(&det)),
        }
    }

    #[test]
    fn sampled_elements_lie_in_sl2(seed in any::<u64>()) {
        let (g, h) = pair(seed);
        prop_assert!(g.det().is_one());
        prop_assert!(g.mul(&g.inverse()).unwrap().is_identity());
        prop_assert!(g.mul(&h).unwrap().det().is_one());
    }

    #[test]
    fn adjoint_is_a_representation(seed in any::<u64>()) {
        let (g, h) = pair(seed);
        let ad = Representation::Adjoint;
        let lhs = ad.apply(&g.mul(&h).unwrap()).unwrap();
        let rhs = ad.apply(&g).unwrap().mul(&ad.apply(&h).unwrap()).unwrap();
        prop_assert_eq!(lhs.matrix(), rhs.matrix());
        prop_assert!(lhs.det().is_one());
    }
}

#[test]
fn torus_weights() {
    let u: RatFuncQ = "t1".parse().unwrap();
    let nat = Representation::Natural.torus_image(&u).unwrap();
    assert_eq!(
        nat.matrix(),
        &MatrixQ::diagonal(vec![u.clone(), u.try_inv().unwrap()])
    );
    let ad = Representation::Adjoint.torus_image(&u).unwrap();
    let want = Representation::Adjoint.apply(&nat).unwrap();
    assert_eq!(ad.matrix(), want.matrix());
    assert_eq!(Representation::Natural.weight_square_sum(), 2);
    assert_eq!(Representation::Adjoint.weight_square_sum(), 8);
}
