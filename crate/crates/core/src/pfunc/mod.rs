//! Functions from a product domain to F_p, stored as dense truth tables.

mod domain;
pub mod expr;
pub mod io;

use std::sync::Arc;

pub use domain::{Component, ComponentDesc, Domain};

use crate::error::{Error, Result};
use crate::field::{FieldCtx, FieldElement};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PFunction {
    domain: Domain,
    table: Vec<u32>,
}

impl PFunction {
    pub fn new(domain: Domain, table: Vec<u32>) -> Result<Self> {
        if table.len() != domain.size() {
            return Err(Error::TruthTable(format!(
                "expected {} entries, got {}",
                domain.size(),
                table.len()
            )));
        }
        if let Some(&d) = table.iter().find(|&&d| d >= domain.p()) {
            return Err(Error::TruthTable(format!(
                "digit {d} is not reduced mod {}",
                domain.p()
            )));
        }
        Ok(PFunction { domain, table })
    }

    pub fn from_fn(domain: Domain, mut f: impl FnMut(usize) -> u32) -> Self {
        let p = domain.p();
        let table = (0..domain.size()).map(|i| f(i) % p).collect();
        PFunction { domain, table }
    }

    /// Tabulates a function on a single field.
    pub fn from_field_fn(ctx: Arc<FieldCtx>, mut f: impl FnMut(FieldElement) -> u32) -> Self {
        let domain = Domain::field(ctx.clone());
        Self::from_fn(domain, |i| f(ctx.elem(i as u32)))
    }

    pub fn zero(domain: Domain) -> Self {
        let table = vec![0; domain.size()];
        PFunction { domain, table }
    }

    pub fn domain(&self) -> &Domain {
        &self.domain
    }

    pub fn p(&self) -> u32 {
        self.domain.p()
    }

    pub fn table(&self) -> &[u32] {
        &self.table
    }

    pub fn eval(&self, idx: usize) -> u32 {
        self.table[idx]
    }

    fn check_aligned(&self, other: &PFunction) -> Result<()> {
        if self.domain != other.domain {
            return Err(Error::DomainMismatch(format!(
                "{} vs {}",
                self.domain, other.domain
            )));
        }
        Ok(())
    }

    pub fn add(&self, other: &PFunction) -> Result<PFunction> {
        self.check_aligned(other)?;
        let p = self.p();
        Ok(self.map_indexed(|i, v| (v + other.table[i]) % p))
    }

    pub fn sub(&self, other: &PFunction) -> Result<PFunction> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> PFunction {
        let p = self.p();
        self.map_indexed(|_, v| (p - v) % p)
    }

    pub fn scale(&self, c: u32) -> PFunction {
        let p = self.p() as u64;
        self.map_indexed(|_, v| ((v as u64 * c as u64) % p) as u32)
    }

    fn map_indexed(&self, mut f: impl FnMut(usize, u32) -> u32) -> PFunction {
        PFunction {
            domain: self.domain.clone(),
            table: self
                .table
                .iter()
                .enumerate()
                .map(|(i, &v)| f(i, v))
                .collect(),
        }
    }

    /// `x -> f(x + a)`.
    pub fn translate(&self, a: usize) -> PFunction {
        PFunction::from_fn(self.domain.clone(), |x| self.table[self.domain.add(x, a)])
    }

    /// `x -> f(-x)`.
    pub fn reflect(&self) -> PFunction {
        PFunction::from_fn(self.domain.clone(), |x| self.table[self.domain.neg(x)])
    }

    /// Adds a linear form: `x -> f(x) + <b, x>`.
    pub fn add_linear(&self, b: usize) -> PFunction {
        let p = self.p();
        self.map_indexed(|x, v| (v + self.domain.inner_product(b, x)) % p)
    }

    /// `(x, y) -> f(x)` on `self.domain x other`.
    pub fn extend_by(&self, other: &Domain) -> Result<PFunction> {
        let domain = self.domain.product(other)?;
        let n = self.domain.size();
        Ok(PFunction::from_fn(domain, |i| self.table[i % n]))
    }

    /// `(x, y) -> g(y)` on `other x g.domain`.
    pub fn extend_under(&self, other: &Domain) -> Result<PFunction> {
        let domain = other.product(&self.domain)?;
        let n = other.size();
        Ok(PFunction::from_fn(domain, |i| self.table[i / n]))
    }

    /// `(x, y) -> g(y + h(x))` on `D x F_p^n`, where `self = g` lives on
    /// F_p^n and `h` is n functions on a common domain D.
    pub fn shift_compose(&self, h: &[PFunction]) -> Result<PFunction> {
        let n = match self.domain.components() {
            [Component::Vector(n)] => *n as usize,
            _ => {
                return Err(Error::DomainMismatch(
                    "shift_compose needs g on a single vector component".into(),
                ))
            }
        };
        if h.len() != n {
            return Err(Error::DomainMismatch(format!(
                "g has {n} variables but {} shift functions were given",
                h.len()
            )));
        }
        let inner = h[0].domain.clone();
        for hj in h {
            if hj.domain != inner {
                return Err(Error::DomainMismatch(
                    "shift functions on different domains".into(),
                ));
            }
            if hj.p() != self.p() {
                return Err(Error::MixedCharacteristic(self.p(), hj.p()));
            }
        }
        let domain = inner.product(&self.domain)?;
        let inner_size = inner.size();
        let p = self.p();
        Ok(PFunction::from_fn(domain, |i| {
            let (x, y) = (i % inner_size, i / inner_size);
            let mut ydig = self.domain.digits(y);
            for (d, hj) in ydig.iter_mut().zip(h) {
                *d = (*d + hj.table[x]) % p;
            }
            self.table[self.domain.compose(&ydig)]
        }))
    }
}
