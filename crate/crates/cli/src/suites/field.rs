// SPDX-License-Identifier: Apache-2.0

//! Differential field arithmetic over `Q(t1, t2)` and `F2(t)`.

use diffext::field::random::{random_nonzero_poly, random_ratfunc, RandomShape};
use diffext::{Coefficient, DerivationF2, Rat, RatFuncF2, RatFuncQ};
use num_traits::One;

use super::{sampled, Ctx};
use crate::config::NVARS;
use crate::report::Case;

fn is_canonical(f: &RatFuncQ) -> bool {
    Rat::poly_gcd(f.numer(), f.denom()).is_one() && f.denom().leading_coefficient().is_one()
}

pub(crate) fn cases(ctx: &Ctx) -> Vec<Case> {
    let n = 4 * ctx.samples;
    let shape = RandomShape::new(NVARS, ctx.cap, 3);
    let mut out = Vec::new();

    for (label, d) in [("d1", &ctx.d1), ("d2", &ctx.d2)] {
        let mut rng = ctx.rng(&format!("leibniz {label}"));
        out.push(sampled(format!("leibniz: {label} ({n} pairs)"), n, |_| {
            let f: RatFuncQ = random_ratfunc(&mut rng, &shape);
            let g: RatFuncQ = random_ratfunc(&mut rng, &shape);
            let lhs = d.apply(&(&f * &g))?;
            let rhs = &(&d.apply(&f)? * &g) + &(&f * &d.apply(&g)?);
            Ok((lhs != rhs).then(|| format!("f = {f}, g = {g}")))
        }));
    }

    let mut rng = ctx.rng("partial commutation");
    out.push(sampled(
        format!("partial commutation ({n} cases)"),
        n,
        |_| {
            let f: RatFuncQ = random_ratfunc(&mut rng, &shape);
            let ok = f.partial(0).partial(1) == f.partial(1).partial(0);
            Ok((!ok).then(|| format!("f = {f}")))
        },
    ));

    let mut rng = ctx.rng("canonical form");
    out.push(sampled(format!("canonical form ({n} cases)"), n, |_| {
        let f: RatFuncQ = random_ratfunc(&mut rng, &shape);
        let h = random_nonzero_poly::<Rat, _>(&mut rng, &shape);
        let scaled = RatFuncQ::new(f.numer() * &h, f.denom() * &h)?;
        let reparsed: RatFuncQ = f.to_string().parse()?;
        let ok = is_canonical(&f) && scaled == f && is_canonical(&scaled) && reparsed == f;
        Ok((!ok).then(|| format!("f = {f}, common factor {h}")))
    }));

    let mut rng = ctx.rng("field axioms");
    out.push(sampled(format!("field axioms ({n} triples)"), n, |_| {
        let f: RatFuncQ = random_ratfunc(&mut rng, &shape);
        let g: RatFuncQ = random_ratfunc(&mut rng, &shape);
        let h: RatFuncQ = random_ratfunc(&mut rng, &shape);
        let mut ok = &(&f + &g) * &h == &(&f * &h) + &(&g * &h)
            && &f * &g == &g * &f
            && &(&f * &g) * &h == &f * &(&g * &h)
            && &(&f - &g) + &g == f;
        if let Ok(inv) = f.try_inv() {
            ok &= (&f * &inv).is_one();
        }
        Ok((!ok).then(|| format!("f = {f}, g = {g}, h = {h}")))
    }));

    let shape2 = RandomShape::new(1, ctx.cap, 3);
    let d = DerivationF2::partial(0, 1).expect("one variable");
    let mut rng = ctx.rng("leibniz char2");
    out.push(sampled(
        format!("leibniz: d/dt over F2(t) ({n} pairs)"),
        n,
        |_| {
            let f: RatFuncF2 = random_ratfunc(&mut rng, &shape2);
            let g: RatFuncF2 = random_ratfunc(&mut rng, &shape2);
            let lhs = d.apply(&(&f * &g))?;
            let rhs = &(&d.apply(&f)? * &g) + &(&f * &d.apply(&g)?);
            Ok((lhs != rhs).then(|| format!("f = {f}, g = {g}")))
        },
    ));

    out
}
