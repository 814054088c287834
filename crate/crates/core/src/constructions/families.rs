//! Quadratic monomial and Coulter-Matthews bent families, and the
//! vectorial-bent instance of the semi-direct sum built from them.

use std::sync::Arc;

use crate::bent::{classify, Zeta};
use crate::error::{Error, Result};
use crate::field::poly::pow_mod;
use crate::field::{FieldCtx, FieldElement};
use crate::pfunc::{Domain, PFunction};

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// The power map G(x) = x^e behind a family.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PowerMap {
    /// x^{p^k + 1}, valid when m / gcd(m, k) is odd and 0 <= k <= m.
    Monomial { k: u32 },
    /// x^{(3^k + 1)/2} over characteristic 3, valid when gcd(2m, k) = 1.
    CoulterMatthews { k: u32 },
}

impl PowerMap {
    pub fn validate(&self, ctx: &FieldCtx) -> Result<()> {
        let m = ctx.m() as u64;
        match *self {
            PowerMap::Monomial { k } => {
                if k as u64 > m {
                    return Err(Error::Precondition(format!("k = {k} exceeds m = {m}")));
                }
                if (m / gcd(m, k as u64)).is_multiple_of(2) {
                    return Err(Error::Precondition(format!(
                        "m / gcd(m, k) = {} is even",
                        m / gcd(m, k as u64)
                    )));
                }
            }
            PowerMap::CoulterMatthews { k } => {
                if ctx.p() != 3 {
                    return Err(Error::Precondition(
                        "Coulter-Matthews exponents need p = 3".into(),
                    ));
                }
                if k == 0 || gcd(2 * m, k as u64) != 1 {
                    return Err(Error::Precondition(format!(
                        "gcd(2m, k) = gcd({}, {k}) is not 1",
                        2 * m
                    )));
                }
            }
        }
        Ok(())
    }

    /// An exponent in `[1, q-1]` inducing the same map on the field.
    pub fn reduced_exponent(&self, ctx: &FieldCtx) -> u64 {
        let order = ctx.size() as u64 - 1;
        let p = ctx.p() as u64;
        match *self {
            PowerMap::Monomial { k } => pow_mod(p, k as u64, order) + 1,
            PowerMap::CoulterMatthews { k } => {
                // 3^k is odd, so its residue mod 2(q-1) is odd as well
                pow_mod(3, k as u64, 2 * order).div_ceil(2)
            }
        }
    }

    /// Unit of the Walsh transform of `Tr(alpha G(x))`:
    /// `eta(alpha) (-1)^{m-1}`, times `i^m` when p = 3 mod 4.
    pub fn predicted_unit(&self, ctx: &FieldCtx, alpha: FieldElement) -> Result<Zeta> {
        let m = ctx.m();
        let sign = ctx.eta(alpha)? * if m % 2 == 1 { 1 } else { -1 };
        let base = if sign > 0 { Zeta::One } else { Zeta::MinusOne };
        Ok(if ctx.p() % 4 == 3 {
            base * Zeta::i_pow(m)
        } else {
            base
        })
    }
}

/// `x -> Tr(alpha x^e)`.
pub fn trace_monomial(ctx: &Arc<FieldCtx>, alpha: FieldElement, e: u64) -> PFunction {
    PFunction::from_field_fn(ctx.clone(), |x| ctx.trace(ctx.mul(alpha, ctx.pow(x, e))))
}

fn family_member(ctx: &Arc<FieldCtx>, alpha: FieldElement, map: PowerMap) -> Result<PFunction> {
    map.validate(ctx)?;
    if alpha.is_zero() {
        return Err(Error::Precondition("alpha must be nonzero".into()));
    }
    Ok(trace_monomial(ctx, alpha, map.reduced_exponent(ctx)))
}

/// `Tr(alpha x^{p^k+1})`.
pub fn monomial_bent(ctx: &Arc<FieldCtx>, alpha: FieldElement, k: u32) -> Result<PFunction> {
    family_member(ctx, alpha, PowerMap::Monomial { k })
}

/// `Tr(alpha x^{(3^k+1)/2})`.
pub fn cm_bent(ctx: &Arc<FieldCtx>, alpha: FieldElement, k: u32) -> Result<PFunction> {
    family_member(ctx, alpha, PowerMap::CoulterMatthews { k })
}

#[derive(Clone, Debug)]
pub struct FamilyOutput {
    pub function: PFunction,
    /// Number of `Lambda = alpha_0 + sum lambda_j alpha_j` that are squares.
    pub squares: usize,
    pub non_squares: usize,
}

impl FamilyOutput {
    /// Both quadratic characters occur among the Lambda, which is what makes
    /// the output non-weakly regular in general.
    pub fn mixed_characters(&self) -> bool {
        self.squares > 0 && self.non_squares > 0
    }
}

/// `F(x, y) = f_{a_0}(x) + g(y_1 + f_{a_1}(x), ..., y_n + f_{a_n}(x))` with
/// `f_a(x) = Tr(a G(x))`, on `F_{p^m} x F_p^n`.
pub fn cor1_family(
    ctx: &Arc<FieldCtx>,
    map: PowerMap,
    alphas: &[FieldElement],
    g: &PFunction,
) -> Result<FamilyOutput> {
    map.validate(ctx)?;
    let n = match g.domain().components() {
        [crate::pfunc::Component::Vector(n)] => *n as usize,
        _ => return Err(Error::DomainMismatch("g must live on F_p^n".into())),
    };
    if g.p() != ctx.p() {
        return Err(Error::MixedCharacteristic(ctx.p(), g.p()));
    }
    if alphas.len() != n + 1 {
        return Err(Error::DomainMismatch(format!(
            "g has {n} variables, so {} alphas are needed, got {}",
            n + 1,
            alphas.len()
        )));
    }
    if !ctx.linearly_independent(alphas) {
        return Err(Error::LinearlyDependent);
    }
    if !classify(g)?.is_bent {
        return Err(Error::Precondition("g is not bent".into()));
    }

    let e = map.reduced_exponent(ctx);
    let parts: Vec<PFunction> = alphas.iter().map(|&a| trace_monomial(ctx, a, e)).collect();
    let shifted = g.shift_compose(&parts[1..])?;
    let function = parts[0].extend_by(g.domain())?.add(&shifted)?;

    let lambdas = Domain::vector(ctx.p(), n as u32)?;
    let (mut squares, mut non_squares) = (0, 0);
    for idx in 0..lambdas.size() {
        let lam = lambdas.digits(idx);
        let big = lam
            .iter()
            .zip(&alphas[1..])
            .fold(alphas[0], |acc, (&l, &a)| ctx.add(acc, ctx.scale(l, a)));
        match ctx.eta(big)? {
            1 => squares += 1,
            _ => non_squares += 1,
        }
    }
    Ok(FamilyOutput {
        function,
        squares,
        non_squares,
    })
}
