// SPDX-License-Identifier: Apache-2.0

//! The trace-paired 2-cocycle `alpha(g, h) = tr(c1(g) g c2(h) g^-1)`.

use diffext::cohomology::{cup, is_cocycle, Pairing};
use diffext::extension::{make_alpha, torus_alpha_closed_form};
use diffext::field::random::{random_nonzero_ratfunc, RandomShape};
use diffext::{DerivationQ, RatFuncQ, Representation};

use super::{sampled, single, Ctx};
use crate::config::NVARS;
use crate::report::Case;

pub(crate) fn cases(ctx: &Ctx) -> Vec<Case> {
    let n = ctx.samples;
    let rep = ctx.rep;
    let mut out = Vec::new();
    let alpha = match make_alpha(&ctx.d1, &ctx.d2, rep) {
        Ok(a) => a,
        Err(e) => return vec![Case::fail("alpha", e.to_string())],
    };

    let m = 2 * n;
    let gs = ctx.sl2_in("double form", 2 * m, rep);
    out.push(sampled(format!("double form ({m} pairs)"), m, |i| {
        let (g, h) = (&gs[2 * i], &gs[2 * i + 1]);
        let a = alpha.eval(g, h)?;
        let b = alpha.eval_inverse_form(g, h)?;
        Ok((a != b).then(|| format!("{a} != {b}")))
    }));

    let shape = RandomShape::new(NVARS, ctx.cap, 2);
    let mut rng = ctx.rng("torus closed form");
    out.push(sampled(format!("torus closed form ({n} pairs)"), n, |_| {
        let s: RatFuncQ = random_nonzero_ratfunc(&mut rng, &shape);
        let t: RatFuncQ = random_nonzero_ratfunc(&mut rng, &shape);
        let got = alpha.eval(&rep.torus_image(&s)?, &rep.torus_image(&t)?)?;
        let want = torus_alpha_closed_form(&s, &t, rep, &ctx.d1, &ctx.d2)?;
        Ok((got != want).then(|| format!("s = {s}, t = {t}: {got} != {want}")))
    }));

    // fixed values for the formal partials
    let (p1, p2) = (
        DerivationQ::partial(0, NVARS).expect("p1"),
        DerivationQ::partial(1, NVARS).expect("p2"),
    );
    for (r, want) in [
        (Representation::Natural, "2/(t1*t2)"),
        (Representation::Adjoint, "8/(t1*t2)"),
    ] {
        out.push(single(
            format!("alpha(nu(t1), nu(t2)) = {want}: {r}, formal partials"),
            || {
                let a = make_alpha(&p1, &p2, r)?;
                let got = a.eval(
                    &r.torus_image(&RatFuncQ::var(0))?,
                    &r.torus_image(&RatFuncQ::var(1))?,
                )?;
                let want: RatFuncQ = want.parse()?;
                Ok((got != want).then(|| got.to_string()))
            },
        ));
    }

    let triples = ctx.sl2_in("2-cocycle", 3 * n, rep);
    let tuples: Vec<_> = triples.chunks(3).map(|c| c.to_vec()).collect();
    out.push(single(format!("2-cocycle ({n} triples)"), || {
        let check = is_cocycle(&alpha.cochain(), &tuples)?;
        Ok(check
            .witness
            .map(|(i, v)| format!("triple {i}: d alpha = {v}")))
    }));

    let pairs = ctx.sl2_in("cup product", 2 * n, rep);
    out.push(single(
        format!("cup product of c1 and c2 ({n} pairs)"),
        || {
            let c = cup(&alpha.c1().cochain(), &alpha.c2().cochain(), Pairing::Trace)?;
            for (i, p) in pairs.chunks(2).enumerate() {
                let got = c.evaluate(p)?;
                let want = alpha.eval(&p[0], &p[1])?;
                if got.as_scalar() != Some(&want) {
                    return Ok(Some(format!("pair {i}: {got} != {want}")));
                }
            }
            Ok(None)
        },
    ));

    out
}
