// SPDX-License-Identifier: Apache-2.0

//! The four-dimensional representation of `SL2(F2(t))`.

use diffext::char2::{
    central_unipotent_check, homomorphism_check_with, is_unipotent, rho, rho_homomorphism_check,
    rho_mutated, unipotent_part, F2t,
};
use diffext::field::random::{random_nonzero_ratfunc, RandomShape};
use diffext::MatrixF2;

use super::{sampled, single, Ctx};
use crate::report::Case;

pub(crate) fn cases(ctx: &Ctx) -> Vec<Case> {
    let pairs = 2 * ctx.samples;
    let units = (2 * ctx.samples).div_ceil(5);
    let shape = RandomShape::new(1, ctx.cap, 3);
    let mut out = Vec::new();

    out.push(single(
        format!("rho multiplicativity ({pairs} pairs)"),
        || {
            let check = rho_homomorphism_check(ctx.seed_for("rho"), pairs, ctx.cap);
            Ok(check.witness.map(|(_, w)| w))
        },
    ));
    out.push(single("mutated rho is caught", || {
        let check = homomorphism_check_with(rho_mutated, ctx.seed_for("rho"), pairs, ctx.cap);
        Ok(check
            .holds
            .then(|| "mutation passed the homomorphism check".to_string()))
    }));

    let mut rng = ctx.rng("unipotent parts");
    let seed = ctx.seed_for("unipotent images");
    out.push(sampled(
        format!("unipotent parts centralize the image ({units} units x {units} images)"),
        units,
        |_| {
            let u: F2t = random_nonzero_ratfunc(&mut rng, &shape);
            let check = central_unipotent_check(&u, seed, units, ctx.cap)?;
            Ok((!check.holds()).then(|| format!("u = {u}")))
        },
    ));

    let mut rng = ctx.rng("square classes");
    out.push(sampled(
        format!("v(u w^2) = v(u) ({units} pairs)"),
        units,
        |_| {
            let u: F2t = random_nonzero_ratfunc(&mut rng, &shape);
            let w: F2t = random_nonzero_ratfunc(&mut rng, &shape);
            let uw2 = &u * &(&w * &w);
            Ok((unipotent_part(&uw2)? != unipotent_part(&u)?).then(|| format!("u = {u}, w = {w}")))
        },
    ));

    let mut rng = ctx.rng("involutions");
    out.push(sampled(
        format!("v(u)^2 = I and v(u) unipotent ({units} units)"),
        units,
        |_| {
            let u: F2t = random_nonzero_ratfunc(&mut rng, &shape);
            let v = unipotent_part(&u)?;
            let ok = v.mul(&v)?.is_identity() && is_unipotent(&v);
            Ok((!ok).then(|| format!("u = {u}")))
        },
    ));

    out.push(single("v(t) is nontrivial", || {
        let v: MatrixF2 = unipotent_part(&F2t::var(0))?;
        Ok(v.is_identity().then(|| "v(t) = I".to_string()))
    }));
    out.push(single("rho(identity) = I", || {
        let r = rho(&diffext::char2::SL2F2tElement::identity());
        Ok((!r.is_identity()).then(|| r.to_string()))
    }));

    out
}
