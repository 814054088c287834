//! The quadratic non-dual-bent generator
//! `F(x, y1, y2) = Tr(x^2) + (y1 + Tr(alpha x^2))(y2 + Tr(beta x^2))`
//! and its character-sum criterion.

use std::sync::Arc;

use super::families::{cor1_family, PowerMap};
use crate::cyclo::CycInt;
use crate::error::{Error, Result};
use crate::field::{FieldCtx, FieldElement};
use crate::pfunc::{Domain, PFunction};

#[derive(Clone, Debug)]
pub struct NdCorSpec {
    ctx: Arc<FieldCtx>,
    alpha: FieldElement,
    beta: FieldElement,
}

impl NdCorSpec {
    /// Requires `{1, alpha, beta}` to be linearly independent over F_p.
    pub fn new(ctx: Arc<FieldCtx>, alpha: FieldElement, beta: FieldElement) -> Result<Self> {
        if !ctx.linearly_independent(&[ctx.one(), alpha, beta]) {
            return Err(Error::LinearlyDependent);
        }
        Ok(NdCorSpec { ctx, alpha, beta })
    }

    pub fn ctx(&self) -> &Arc<FieldCtx> {
        &self.ctx
    }

    pub fn alpha(&self) -> FieldElement {
        self.alpha
    }

    pub fn beta(&self) -> FieldElement {
        self.beta
    }
}

/// `y1 y2` on F_p^2, with y1 the low digit.
pub fn product_form(p: u32) -> PFunction {
    let d = Domain::vector(p, 2).expect("p is an odd prime");
    PFunction::from_fn(d, |i| {
        ((i % p as usize) * (i / p as usize) % p as usize) as u32
    })
}

/// `S = sum_{y1, y2} eta(1 + y1 alpha + y2 beta) e^{-y1 y2}`.
///
/// When `|S|^2 != p^2` the dual of [`ndcor_function`] is not bent. The
/// converse fails, so equality is inconclusive.
pub fn ndcor_condition_sum(spec: &NdCorSpec) -> CycInt {
    let ctx = &spec.ctx;
    let p = ctx.p();
    let mut counts = vec![0i64; p as usize];
    for y1 in 0..p {
        for y2 in 0..p {
            let lam = ctx.add(
                ctx.one(),
                ctx.add(ctx.scale(y1, spec.alpha), ctx.scale(y2, spec.beta)),
            );
            let eta = ctx.eta(lam).expect("nonzero by independence");
            let e = (p - (y1 * y2) % p) % p;
            counts[e as usize] += eta as i64;
        }
    }
    CycInt::from_group_ring(p, &counts)
}

/// The bent function on `F_{p^m} x F_p^2`.
pub fn ndcor_function(spec: &NdCorSpec) -> Result<PFunction> {
    let ctx = &spec.ctx;
    let out = cor1_family(
        ctx,
        PowerMap::Monomial { k: 0 },
        &[ctx.one(), spec.alpha, spec.beta],
        &product_form(ctx.p()),
    )?;
    Ok(out.function)
}
