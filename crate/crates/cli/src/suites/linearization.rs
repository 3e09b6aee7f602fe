// SPDX-License-Identifier: Apache-2.0

//! The matrix realization of the extension inside `G x GL(W)`.

use diffext::extension::DerivationCocycle;
use diffext::field::random::{random_ratfunc, RandomShape};
use diffext::linearization::{
    embedding_invertible, key_identity_check, l_action, l_dual_action, l_matrix, make_p_g,
    make_p_t, membership_check, pairing, LinElement, Section, UVector,
};
use diffext::{MatrixQ, RatFuncQ};
use rand_chacha::ChaCha8Rng;

use super::{sampled, Ctx};
use crate::config::NVARS;
use crate::report::Case;

fn random_u(rng: &mut ChaCha8Rng, dim: usize, shape: &RandomShape) -> UVector<diffext::Rat> {
    let mat = MatrixQ::from_fn(dim, dim, |_, _| random_ratfunc(rng, shape));
    UVector::new(mat, random_ratfunc(rng, shape))
}

pub(crate) fn cases(ctx: &Ctx) -> Vec<Case> {
    let n = ctx.samples;
    let rep = ctx.rep;
    let dim = rep.dim();
    let c1 = DerivationCocycle::new(ctx.d1.clone(), rep);
    let c2 = DerivationCocycle::new(ctx.d2.clone(), rep);
    let shape = RandomShape::new(NVARS, 2, 2);
    let mut out = Vec::new();

    let gs = ctx.sl2_in("duality", n, rep);
    let mut rng = ctx.rng("duality vectors");
    out.push(sampled(
        format!("duality pairing invariance ({n} triples)"),
        n,
        |i| {
            let g = &gs[i];
            let (u, v) = (
                random_u(&mut rng, dim, &shape),
                random_u(&mut rng, dim, &shape),
            );
            let lhs = pairing(&l_action(&c1, g, &u)?, &l_dual_action(&c1, g, &v)?)?;
            let rhs = pairing(&u, &v)?;
            Ok((lhs != rhs).then(|| format!("g = {g}: {lhs} != {rhs}")))
        },
    ));

    let gs = ctx.sl2_in("l homomorphism", 2 * n, rep);
    out.push(sampled(format!("l_c homomorphism ({n} pairs)"), n, |i| {
        let (g, h) = (&gs[2 * i], &gs[2 * i + 1]);
        let ok = l_matrix(&c1, &g.mul(h)?)? == l_matrix(&c1, g)?.mul(&l_matrix(&c1, h)?)?;
        Ok((!ok).then(|| format!("g = {g}, h = {h}")))
    }));

    let gs = ctx.sl2_in("membership", n, rep);
    let mut rng = ctx.rng("membership scalars");
    let mut central = true;
    let mut invertible = true;
    out.push(sampled(
        format!("membership of (g, p_g) and (g, p_g p_t) ({n} elements)"),
        n,
        |i| {
            let g = &gs[i];
            let p = make_p_g(&c1, &c2, g)?;
            let t: RatFuncQ = random_ratfunc(&mut rng, &shape);
            let pt = make_p_t(dim, &t);
            central &= p.mul(&pt)? == pt.mul(&p)?;
            invertible &= embedding_invertible(g, &p)?;
            let plain = membership_check(&LinElement::new(g.clone(), p.clone()), &c1, &c2)?;
            let twisted = membership_check(&LinElement::new(g.clone(), p.mul(&pt)?), &c1, &c2)?;
            Ok((!(plain && twisted)).then(|| format!("g = {g}, t = {t}")))
        },
    ));
    out.push(if central {
        Case::pass(format!("p_t central against p_g ({n} elements)"))
    } else {
        Case::fail(
            format!("p_t central against p_g ({n} elements)"),
            "p_t p_g != p_g p_t",
        )
    });
    out.push(if invertible {
        Case::pass(format!("diag(g, p_g) invertible ({n} elements)"))
    } else {
        Case::fail(
            format!("diag(g, p_g) invertible ({n} elements)"),
            "zero determinant",
        )
    });

    let mut rng = ctx.rng("p_t family");
    out.push(sampled(format!("p_s p_t = p_(s+t) ({n} pairs)"), n, |_| {
        let s: RatFuncQ = random_ratfunc(&mut rng, &shape);
        let t: RatFuncQ = random_ratfunc(&mut rng, &shape);
        let ok = make_p_t(dim, &s).mul(&make_p_t(dim, &t))? == make_p_t(dim, &(&s + &t));
        Ok((!ok).then(|| format!("s = {s}, t = {t}")))
    }));

    // The literal section p_g yields t = alpha(h, g) - dphi(h, g) with
    // phi(g) = -tr(c1(g) c2(g)); the corrected section p_g p_phi(g) yields
    // alpha(h, g) on the nose.
    let gs = ctx.sl2_in("key identity", 2 * n, rep);
    let mut cohomologous = true;
    out.push(sampled(
        format!("key identity p_h p_g = p_hg p_t ({n} pairs)"),
        n,
        |i| {
            let (g, h) = (&gs[2 * i], &gs[2 * i + 1]);
            let k = key_identity_check(&c1, &c2, g, h, Section::Raw)?;
            cohomologous &= k.cohomologous();
            Ok((!k.holds).then(|| format!("g = {g}, h = {h}")))
        },
    ));
    let name = format!("key identity t = alpha(h, g) - dphi(h, g) ({n} pairs)");
    out.push(if cohomologous {
        Case::pass(name)
    } else {
        Case::fail(name, "t + dphi != alpha on a sampled pair")
    });
    out.push(sampled(
        format!("normalized section t = alpha(h, g) ({n} pairs)"),
        n,
        |i| {
            let (g, h) = (&gs[2 * i], &gs[2 * i + 1]);
            let k = key_identity_check(&c1, &c2, g, h, Section::Normalized)?;
            let ok = k.holds && k.matches_alpha;
            Ok((!ok).then(|| format!("g = {g}, h = {h}: t = {}, alpha = {}", k.t, k.alpha)))
        },
    ));

    out
}
