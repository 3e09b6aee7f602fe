// SPDX-License-Identifier: Apache-2.0

//! The bar complex: `d o d = 0` in low degrees and the cocycle condition on
//! 1-cochains.

use diffext::cohomology::{differential, Cochain, CoeffModule, ModuleValue};
use diffext::extension::DerivationCocycle;
use diffext::field::random::{random_ratfunc, RandomShape};
use diffext::{GroupElementQ, MatrixQ, RatFuncQ};

use super::{sampled, Ctx};
use crate::config::NVARS;
use crate::report::Case;

/// Checks `d(d f) = 0` on `count` sampled tuples of the right length.
fn dd_vanishes(ctx: &Ctx, label: &str, f: &Cochain<diffext::Rat>, count: usize) -> Case {
    let ddf = differential(&differential(f));
    let k = ddf.arity();
    let gs = ctx.sl2_in(label, k * count, ctx.rep);
    sampled(format!("{label} ({count} tuples)"), count, |i| {
        let v = ddf.evaluate(&gs[k * i..k * (i + 1)])?;
        Ok((!v.is_zero()).then(|| v.to_string()))
    })
}

/// `f(gh) = f(g) + g.f(h)` agrees with `df(g, h) = 0` on every sampled pair.
fn z1_characterization(
    ctx: &Ctx,
    label: &str,
    f: &Cochain<diffext::Rat>,
    count: usize,
) -> (Case, bool) {
    let df = differential(f);
    let gs = ctx.sl2_in(label, 2 * count, ctx.rep);
    let mut all_cocycle = true;
    let case = sampled(format!("{label} ({count} pairs)"), count, |i| {
        let (g, h) = (&gs[2 * i], &gs[2 * i + 1]);
        let closed = df.evaluate(&[g.clone(), h.clone()])?.is_zero();
        let lhs = f.evaluate(&[g.mul(h)?])?;
        let rhs = f
            .evaluate(std::slice::from_ref(g))?
            .add(&f.evaluate(std::slice::from_ref(h))?.act(g)?)?;
        all_cocycle &= closed;
        Ok((closed != (lhs == rhs))
            .then(|| format!("df = 0 is {closed} but the twisted law is {}", lhs == rhs)))
    });
    (case, all_cocycle)
}

pub(crate) fn cases(ctx: &Ctx) -> Vec<Case> {
    let n = ctx.samples;
    let dim = ctx.rep.dim();
    let end = CoeffModule::EndConj(dim);
    let shape = RandomShape::new(NVARS, 2, 2);
    let mut rng = ctx.rng("cochain data");
    let x: RatFuncQ = random_ratfunc(&mut rng, &shape);
    let m = MatrixQ::from_fn(dim, dim, |_, _| random_ratfunc(&mut rng, &shape));
    let mut out = Vec::new();

    let f0 = Cochain::constant(ModuleValue::Scalar(x.clone()));
    out.push(dd_vanishes(
        ctx,
        "d(d f) = 0: n = 0, trivial action",
        &f0,
        n,
    ));
    let f0 = Cochain::constant(ModuleValue::End(m.clone()));
    out.push(dd_vanishes(
        ctx,
        "d(d f) = 0: n = 0, conjugation action",
        &f0,
        n,
    ));

    // arbitrary non-cocycles built from matrix entries
    let xs = x.clone();
    let f1 = Cochain::new(
        1,
        CoeffModule::ScalarTrivial,
        move |gs: &[GroupElementQ]| {
            let g = gs[0].matrix();
            Ok(ModuleValue::Scalar(
                &(g.get(0, 0) * &xs) + &(g.get(0, 1) * g.get(1, 0)),
            ))
        },
    );
    out.push(dd_vanishes(
        ctx,
        "d(d f) = 0: n = 1, trivial action",
        &f1,
        n,
    ));
    let ms = m.clone();
    let f1 = Cochain::new(1, end, move |gs: &[GroupElementQ]| {
        Ok(ModuleValue::End(
            gs[0].matrix().mul(&ms)?.add(gs[0].inverse_matrix())?,
        ))
    });
    out.push(dd_vanishes(
        ctx,
        "d(d f) = 0: n = 1, conjugation action",
        &f1,
        n,
    ));

    let c = DerivationCocycle::new(ctx.d1.clone(), ctx.rep).cochain();
    let (case, closed) = z1_characterization(ctx, "Z1 characterization: derivation cocycle", &c, n);
    out.push(case);
    out.push(if closed {
        Case::pass("derivation cocycle is closed")
    } else {
        Case::fail("derivation cocycle is closed", "df != 0 on a sampled pair")
    });
    let (case, _) = z1_characterization(ctx, "Z1 characterization: non-cocycle", &f1, n);
    out.push(case);

    out
}
