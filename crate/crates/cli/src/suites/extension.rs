// SPDX-License-Identifier: Apache-2.0

//! Group axioms of `G x K` twisted by `alpha`.

use std::sync::Arc;

use diffext::extension::{make_alpha, ExtElement};
use diffext::field::random::{random_ratfunc, RandomShape};
use diffext::{Rat, RatFuncQ};

use super::{sampled, Ctx};
use crate::config::NVARS;
use crate::report::Case;

type Ext = ExtElement<Rat>;

pub(crate) fn cases(ctx: &Ctx) -> Vec<Case> {
    let n = ctx.samples;
    let alpha = match make_alpha(&ctx.d1, &ctx.d2, ctx.rep) {
        Ok(a) => Arc::new(a),
        Err(e) => return vec![Case::fail("alpha", e.to_string())],
    };
    let shape = RandomShape::new(NVARS, ctx.cap, 2);
    let elements = |label: &str, count: usize| -> Vec<Ext> {
        let mut rng = ctx.rng(&format!("{label} scalars"));
        ctx.sl2_in(label, count, ctx.rep)
            .into_iter()
            .map(|g| {
                let x: RatFuncQ = random_ratfunc(&mut rng, &shape);
                Ext::new(g, x, Arc::clone(&alpha)).expect("matching dimension")
            })
            .collect()
    };
    let mut out = Vec::new();

    let es = elements("associativity", 3 * n);
    out.push(sampled(format!("associativity ({n} triples)"), n, |i| {
        let (a, b, c) = (&es[3 * i], &es[3 * i + 1], &es[3 * i + 2]);
        let lhs = a.mul(b)?.mul(c)?;
        let rhs = a.mul(&b.mul(c)?)?;
        Ok((lhs != rhs).then(|| format!("{lhs} != {rhs}")))
    }));

    let es = elements("identity and inverse", n);
    let e = Ext::identity(Arc::clone(&alpha));
    out.push(sampled(format!("identity law ({n} elements)"), n, |i| {
        let a = &es[i];
        let ok = &a.mul(&e)? == a && &e.mul(a)? == a;
        Ok((!ok).then(|| a.to_string()))
    }));
    out.push(sampled(format!("inverse law ({n} elements)"), n, |i| {
        let a = &es[i];
        let inv = a.inverse()?;
        let ok = a.mul(&inv)?.is_identity() && inv.mul(a)?.is_identity();
        Ok((!ok).then(|| a.to_string()))
    }));

    let es = elements("centrality", n);
    let mut rng = ctx.rng("central scalars");
    out.push(sampled(format!("centrality ({n} elements)"), n, |i| {
        let a = &es[i];
        let x: RatFuncQ = random_ratfunc(&mut rng, &shape);
        let z = Ext::central(x, Arc::clone(&alpha));
        let ok = a.mul(&z)? == z.mul(a)?;
        Ok((!ok).then(|| format!("{a} and {z}")))
    }));

    out
}
