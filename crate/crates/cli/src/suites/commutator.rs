// SPDX-License-Identifier: Apache-2.0

//! Commutators of torus lifts, and whether the extension splits.

use std::sync::Arc;

use diffext::extension::{commutator_closed_form, make_alpha, nonsplit_witness, torus_commutator};
use diffext::field::derivations_independent;
use diffext::field::random::{random_nonzero_ratfunc, RandomShape};
use diffext::RatFuncQ;

use super::{sampled, single, Ctx};
use crate::config::NVARS;
use crate::report::Case;

pub(crate) fn cases(ctx: &Ctx) -> Vec<Case> {
    let n = ctx.samples;
    let rep = ctx.rep;
    let alpha = match make_alpha(&ctx.d1, &ctx.d2, rep) {
        Ok(a) => Arc::new(a),
        Err(e) => return vec![Case::fail("alpha", e.to_string())],
    };
    let shape = RandomShape::new(NVARS, ctx.cap, 2);
    let mut out = Vec::new();

    let mut rng = ctx.rng("torus commutator closed form");
    out.push(sampled(
        format!("torus commutator closed form ({n} pairs)"),
        n,
        |_| {
            let s: RatFuncQ = random_nonzero_ratfunc(&mut rng, &shape);
            let t: RatFuncQ = random_nonzero_ratfunc(&mut rng, &shape);
            let c = torus_commutator(&s, &t, &alpha)?;
            let want = commutator_closed_form(&s, &t, rep, &ctx.d1, &ctx.d2)?;
            let ok = c.group_part().is_identity() && c.scalar_part() == &want;
            Ok((!ok).then(|| format!("s = {s}, t = {t}: {c}")))
        },
    ));

    let independent = derivations_independent(&ctx.d1, &ctx.d2) && rep.weight_square_sum() != 0;
    if independent {
        out.push(single("nonsplit_witness: present", || {
            Ok(match nonsplit_witness(rep, &ctx.d1, &ctx.d2)? {
                None => Some("no witness found".into()),
                Some(w) => {
                    let want = commutator_closed_form(&w.s, &w.t, rep, &ctx.d1, &ctx.d2)?;
                    (w.value != want)
                        .then(|| format!("s = {}, t = {}: {} != {want}", w.s, w.t, w.value))
                }
            })
        }));
    } else {
        let mut rng = ctx.rng("degenerate");
        out.push(sampled(
            "degenerate derivations: commutators vanish",
            n,
            |_| {
                let s: RatFuncQ = random_nonzero_ratfunc(&mut rng, &shape);
                let t: RatFuncQ = random_nonzero_ratfunc(&mut rng, &shape);
                let c = torus_commutator(&s, &t, &alpha)?;
                Ok((!c.is_identity()).then(|| format!("s = {s}, t = {t}: {c}")))
            },
        ));
        out.push(single("nonsplit_witness: absent", || {
            Ok(nonsplit_witness(rep, &ctx.d1, &ctx.d2)?
                .map(|w| format!("s = {}, t = {}: {}", w.s, w.t, w.value)))
        }));
    }

    out
}
