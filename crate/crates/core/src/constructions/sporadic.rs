//! Three sporadic ternary bent functions with non-bent duals:
//!
//! - `g1(x) = Tr(xi^7 x^98)` on F_{3^6}
//! - `g2(x) = Tr(a0 x^22 + x^4)` on F_{3^4}, `a0` in `{+-xi^10, +-xi^30}`
//! - `g3(x) = Tr(xi^7 x^14 + xi^35 x^70)` on F_{3^6}
//!
//! `xi` is a primitive element; unless given, it is the field's default
//! (smallest-index) primitive element.

use std::sync::Arc;

use rayon::prelude::*;
use serde::Serialize;

use crate::bent::{classify, ClassReport, Regularity};
use crate::error::{Error, Result};
use crate::field::{FieldCtx, FieldElement};
use crate::pfunc::PFunction;

/// Choice of `a0` for g2. `Zero` is the degenerate `Tr(x^4)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum G2Coeff {
    PlusXi10,
    MinusXi10,
    PlusXi30,
    MinusXi30,
    Zero,
}

impl G2Coeff {
    pub const VARIANTS: [G2Coeff; 4] = [
        G2Coeff::PlusXi10,
        G2Coeff::MinusXi10,
        G2Coeff::PlusXi30,
        G2Coeff::MinusXi30,
    ];

    pub fn label(self) -> &'static str {
        match self {
            G2Coeff::PlusXi10 => "+xi^10",
            G2Coeff::MinusXi10 => "-xi^10",
            G2Coeff::PlusXi30 => "+xi^30",
            G2Coeff::MinusXi30 => "-xi^30",
            G2Coeff::Zero => "0",
        }
    }

    fn value(self, ctx: &FieldCtx, xi: FieldElement) -> FieldElement {
        match self {
            G2Coeff::PlusXi10 => ctx.pow(xi, 10),
            G2Coeff::MinusXi10 => ctx.neg(ctx.pow(xi, 10)),
            G2Coeff::PlusXi30 => ctx.pow(xi, 30),
            G2Coeff::MinusXi30 => ctx.neg(ctx.pow(xi, 30)),
            G2Coeff::Zero => ctx.zero(),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Sporadic {
    G1,
    G2(G2Coeff),
    G3,
}

impl Sporadic {
    /// Required `(p, m)`.
    pub fn shape(self) -> (u32, u32) {
        match self {
            Sporadic::G1 | Sporadic::G3 => (3, 6),
            Sporadic::G2(_) => (3, 4),
        }
    }

    pub fn name(self) -> String {
        match self {
            Sporadic::G1 => "g1".into(),
            Sporadic::G2(c) => format!("g2[a0={}]", c.label()),
            Sporadic::G3 => "g3".into(),
        }
    }

    /// The same function as a DSL string, with `g` standing for `xi`.
    pub fn expr(self) -> String {
        match self {
            Sporadic::G1 => "Tr(g^7 x^98)".into(),
            Sporadic::G2(c) => {
                let a0 = match c {
                    G2Coeff::PlusXi10 => "g^10",
                    G2Coeff::MinusXi10 => "-g^10",
                    G2Coeff::PlusXi30 => "g^30",
                    G2Coeff::MinusXi30 => "-g^30",
                    G2Coeff::Zero => "0",
                };
                format!("Tr({a0} x^22 + x^4)")
            }
            Sporadic::G3 => "Tr(g^7 x^14 + g^35 x^70)".into(),
        }
    }
}

fn trace_poly(ctx: &Arc<FieldCtx>, terms: &[(FieldElement, u64)]) -> PFunction {
    PFunction::from_field_fn(ctx.clone(), |x| {
        let v = terms.iter().fold(ctx.zero(), |acc, &(c, e)| {
            ctx.add(acc, ctx.mul(c, ctx.pow(x, e)))
        });
        ctx.trace(v)
    })
}

/// Truth table for `which` with primitive element `xi`, or the field's
/// default primitive element when `xi` is `None`.
pub fn sporadic(
    which: Sporadic,
    ctx: &Arc<FieldCtx>,
    xi: Option<FieldElement>,
) -> Result<PFunction> {
    let (p, m) = which.shape();
    if ctx.p() != p || ctx.m() != m {
        return Err(Error::DomainMismatch(format!(
            "{} needs F_{{{p}^{m}}}, got F_{{{}^{}}}",
            which.name(),
            ctx.p(),
            ctx.m()
        )));
    }
    let xi = xi.unwrap_or_else(|| ctx.primitive());
    if !ctx.is_primitive(xi) {
        return Err(Error::NotPrimitive(xi.index()));
    }
    let f = match which {
        Sporadic::G1 => trace_poly(ctx, &[(ctx.pow(xi, 7), 98)]),
        Sporadic::G2(c) => trace_poly(ctx, &[(c.value(ctx, xi), 22), (ctx.one(), 4)]),
        Sporadic::G3 => trace_poly(ctx, &[(ctx.pow(xi, 7), 14), (ctx.pow(xi, 35), 70)]),
    };
    Ok(f)
}

/// Bent, non-weakly regular, dual not bent.
pub fn claim_holds(r: &ClassReport) -> bool {
    r.is_bent && r.regularity == Regularity::NonWeaklyRegular && r.is_non_dual_bent()
}

/// Every primitive element for which the claim holds, in index order.
pub fn scan_primitive(which: Sporadic, ctx: &Arc<FieldCtx>) -> Result<Vec<FieldElement>> {
    let prims = ctx.primitive_elements();
    let hits: Result<Vec<Option<FieldElement>>> = prims
        .par_iter()
        .map(|&xi| {
            let r = classify(&sporadic(which, ctx, Some(xi))?)?;
            Ok(claim_holds(&r).then_some(xi))
        })
        .collect();
    Ok(hits?.into_iter().flatten().collect())
}
