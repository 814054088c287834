//! Direct and semi-direct sums.

use crate::bent::{extract_dual, is_bent};
use crate::error::{Error, Result};
use crate::pfunc::{Component, PFunction};
use crate::walsh::walsh;

/// `F(x, y) = f(x) + g(y)` on `dom(f) x dom(g)`.
pub fn direct_sum(f: &PFunction, g: &PFunction) -> Result<PFunction> {
    if f.p() != g.p() {
        return Err(Error::MixedCharacteristic(f.p(), g.p()));
    }
    f.extend_by(g.domain())?.add(&g.extend_under(f.domain())?)
}

/// Inputs to `F(x, y) = f(x) + g(y + h(x))`.
#[derive(Clone, Debug)]
pub struct SdsSpec {
    pub f: PFunction,
    pub g: PFunction,
    pub h: Vec<PFunction>,
}

impl SdsSpec {
    pub fn new(f: PFunction, g: PFunction, h: Vec<PFunction>) -> Result<Self> {
        let n = match g.domain().components() {
            [Component::Vector(n)] => *n as usize,
            _ => return Err(Error::DomainMismatch("g must live on F_p^n".into())),
        };
        if f.p() != g.p() {
            return Err(Error::MixedCharacteristic(f.p(), g.p()));
        }
        if h.len() != n {
            return Err(Error::DomainMismatch(format!(
                "g has {n} variables but h has {} components",
                h.len()
            )));
        }
        if h.iter().any(|hj| hj.domain() != f.domain()) {
            return Err(Error::DomainMismatch("h must share the domain of f".into()));
        }
        Ok(SdsSpec { f, g, h })
    }

    pub fn n(&self) -> usize {
        self.h.len()
    }

    /// `G_b(x) = f(x) + <b, h(x)>` for `b` given as an index into F_p^n.
    pub fn g_b(&self, b: usize) -> PFunction {
        let p = self.f.p();
        let digits = self.g.domain().digits(b);
        let mut out = self.f.clone();
        for (&bj, hj) in digits.iter().zip(&self.h) {
            if bj != 0 {
                out = out.add(&hj.scale(bj)).expect("aligned by construction");
            }
        }
        debug_assert_eq!(out.p(), p);
        out
    }
}

/// Builds `F(x, y) = f(x) + g(y + h(x))`; `g` must be bent.
pub fn semi_direct_sum(spec: &SdsSpec) -> Result<PFunction> {
    if !is_bent(&walsh(&spec.g)) {
        return Err(Error::Precondition("g is not bent".into()));
    }
    spec.f
        .extend_by(spec.g.domain())?
        .add(&spec.g.shift_compose(&spec.h)?)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SdsCondition {
    pub holds: bool,
    /// Smallest b (index into F_p^n) with `G_b` not bent.
    pub witness: Option<usize>,
}

/// Checks that every `G_b` is bent.
pub fn sds_is_bent_condition(spec: &SdsSpec) -> SdsCondition {
    let witness = (0..spec.g.domain().size()).find(|&b| !is_bent(&walsh(&spec.g_b(b))));
    SdsCondition {
        holds: witness.is_none(),
        witness,
    }
}

/// `W_F(a, b) = W_{G_b}(a) W_g(b)` at every (a, b).
pub fn sds_walsh_factorization(spec: &SdsSpec) -> Result<bool> {
    let big = spec
        .f
        .extend_by(spec.g.domain())?
        .add(&spec.g.shift_compose(&spec.h)?)?;
    let wf = walsh(&big);
    let wg = walsh(&spec.g);
    let m = spec.f.domain().size();
    for b in 0..spec.g.domain().size() {
        let wgb = walsh(&spec.g_b(b));
        for a in 0..m {
            if wf.value(a + m * b) != &(wgb.value(a) * wg.value(b)) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// `F*(x, y) = G_y*(x) + g*(y)`, assembled from the duals of the parts.
pub fn sds_dual_formula(spec: &SdsSpec) -> Result<PFunction> {
    let wg = walsh(&spec.g);
    if !is_bent(&wg) {
        return Err(Error::Precondition("g is not bent".into()));
    }
    let (g_dual, _) = extract_dual(&wg)?;
    let mut g_b_duals = Vec::with_capacity(spec.g.domain().size());
    for b in 0..spec.g.domain().size() {
        let w = walsh(&spec.g_b(b));
        if !is_bent(&w) {
            return Err(Error::Precondition(format!("G_b is not bent at b = {b}")));
        }
        g_b_duals.push(extract_dual(&w)?.0);
    }
    let domain = spec.f.domain().product(spec.g.domain())?;
    let m = spec.f.domain().size();
    let p = spec.f.p();
    Ok(PFunction::from_fn(domain, |i| {
        let (x, y) = (i % m, i / m);
        (g_b_duals[y].eval(x) + g_dual.eval(y)) % p
    }))
}
