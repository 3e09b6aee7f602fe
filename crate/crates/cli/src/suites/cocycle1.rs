// SPDX-License-Identifier: Apache-2.0

//! The derivation 1-cocycle `c(A) = d(A) A^-1` under both representations.

use diffext::extension::DerivationCocycle;
use diffext::{GroupElementQ, Representation};

use super::{sampled, single, Ctx};
use crate::report::Case;

pub(crate) fn cases(ctx: &Ctx) -> Vec<Case> {
    let n = 2 * ctx.samples;
    let mut out = Vec::new();
    for rep in [Representation::Natural, Representation::Adjoint] {
        for (label, d) in [("d1", &ctx.d1), ("d2", &ctx.d2)] {
            let c = DerivationCocycle::new(d.clone(), rep);
            let name = format!("cocycle identity: {rep}, {label}");
            let gs = ctx.sl2_in(&name, 2 * n, rep);
            out.push(sampled(format!("{name} ({n} pairs)"), n, |i| {
                let (g, h) = (&gs[2 * i], &gs[2 * i + 1]);
                let lhs = c.at(&g.mul(h)?)?;
                let rhs = c.at(g)?.add(&g.conjugate(&c.at(h)?)?)?;
                Ok((lhs != rhs).then(|| format!("g = {g}, h = {h}")))
            }));
            out.push(single(format!("c(e) = 0: {rep}, {label}"), || {
                let v = c.at(&GroupElementQ::identity(rep.dim()))?;
                Ok((!v.is_zero()).then(|| v.to_string()))
            }));
        }
    }
    out
}
