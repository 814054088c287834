//! Stitching p functions `f_0..f_{p-1}` on a common domain D into
//! `F(x, t, y) = f_y(x) + t y` on `D x F_p^2`.
//!
//! Point order on the output: `x + |D| (t + p y)`.

use crate::bent::{extract_dual, is_bent};
use crate::cyclo::CycInt;
use crate::error::{Error, Result};
use crate::pfunc::{Component, Domain, PFunction};
use crate::walsh::walsh;

fn check_list(fs: &[PFunction]) -> Result<(&Domain, u32)> {
    let first = fs
        .first()
        .ok_or_else(|| Error::DomainMismatch("empty function list".into()))?;
    let p = first.p();
    if fs.len() != p as usize {
        return Err(Error::DomainMismatch(format!(
            "need exactly p = {p} functions, got {}",
            fs.len()
        )));
    }
    if fs.iter().any(|f| f.domain() != first.domain()) {
        return Err(Error::DomainMismatch(
            "functions live on different domains".into(),
        ));
    }
    Ok((first.domain(), p))
}

fn output_domain(d: &Domain, p: u32) -> Result<Domain> {
    let mut comps = d.components().to_vec();
    comps.push(Component::Vector(2));
    Domain::new(p, comps)
}

pub fn agw_combine(fs: &[PFunction]) -> Result<PFunction> {
    let (d, p) = check_list(fs)?;
    let out = output_domain(d, p)?;
    let (m, pu) = (d.size(), p as usize);
    Ok(PFunction::from_fn(out, |i| {
        let (x, ty) = (i % m, i / m);
        let (t, y) = (ty % pu, ty / pu);
        ((fs[y].eval(x) as usize + t * y) % pu) as u32
    }))
}

/// `W_F(a, b, c) = p e^{-bc} W_{f_b}(a)` at every point, for any inputs.
pub fn agw_walsh_identity_check(fs: &[PFunction]) -> Result<bool> {
    let (d, p) = check_list(fs)?;
    let wf = walsh(&agw_combine(fs)?);
    let parts: Vec<_> = fs.iter().map(walsh).collect();
    let (m, pu) = (d.size(), p as usize);
    Ok((0..wf.values().len()).all(|i| {
        let (a, bc) = (i % m, i / m);
        let (b, c) = (bc % pu, bc / pu);
        let rhs = parts[b]
            .value(a)
            .mul_root(-((b * c) as i64))
            .scale(p as i64);
        wf.value(i) == &rhs
    }))
}

/// `F*(x, t, y) = f_t*(x) - t y`; every `f_j` must be bent.
pub fn agw_dual_formula(fs: &[PFunction]) -> Result<PFunction> {
    let (d, p) = check_list(fs)?;
    let mut duals = Vec::with_capacity(fs.len());
    for (j, f) in fs.iter().enumerate() {
        let w = walsh(f);
        if !is_bent(&w) {
            return Err(Error::Precondition(format!("f_{j} is not bent")));
        }
        duals.push(extract_dual(&w)?.0);
    }
    let out = output_domain(d, p)?;
    let (m, pu) = (d.size(), p as usize);
    Ok(PFunction::from_fn(out, |i| {
        let (x, ty) = (i % m, i / m);
        let (t, y) = (ty % pu, ty / pu);
        ((duals[t].eval(x) as usize + pu * pu - t * y) % pu) as u32
    }))
}

/// Exact `p` as a ring element; the spectrum scale gained by the two extra
/// coordinates.
pub fn agw_gain(p: u32) -> CycInt {
    CycInt::from_int(p, p as i64)
}
