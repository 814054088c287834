use std::fmt;
use std::sync::Arc;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::field::{FieldCtx, MAX_SIZE};

/// One factor of a product domain.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Component {
    /// F_{p^m} with inner product Tr(b x).
    Field(Arc<FieldCtx>),
    /// F_p^n with the dot product.
    Vector(u32),
}

impl Component {
    pub fn dim(&self) -> u32 {
        match self {
            Component::Field(ctx) => ctx.m(),
            Component::Vector(n) => *n,
        }
    }
}

/// A product of field and vector components over F_p.
///
/// Points are indexed in mixed radix with the first component least
/// significant; since every component is itself indexed by base-p digits, a
/// point index is simply the base-p number formed by all `dim()` digits.
#[derive(Clone, Debug)]
pub struct Domain {
    p: u32,
    components: Vec<Component>,
    dim: u32,
    size: usize,
    pow_p: Vec<usize>,
    offsets: Vec<u32>,
}

impl PartialEq for Domain {
    fn eq(&self, other: &Self) -> bool {
        self.p == other.p && self.components == other.components
    }
}

impl Eq for Domain {}

/// JSON description of one component.
#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum ComponentDesc {
    Field {
        m: u32,
        modulus: Vec<u32>,
        primitive: u32,
    },
    Vector {
        n: u32,
    },
}

impl Domain {
    pub fn new(p: u32, components: Vec<Component>) -> Result<Self> {
        if components.is_empty() {
            return Err(Error::DomainMismatch(
                "a domain needs at least one component".into(),
            ));
        }
        for c in &components {
            match c {
                Component::Field(ctx) if ctx.p() != p => {
                    return Err(Error::MixedCharacteristic(p, ctx.p()))
                }
                Component::Vector(0) => {
                    return Err(Error::DomainMismatch(
                        "vector component of dimension 0".into(),
                    ))
                }
                _ => {}
            }
        }
        if p < 3 || !crate::field::is_prime(p as u64) {
            return Err(Error::NotOddPrime(p as u64));
        }
        let dim: u32 = components.iter().map(Component::dim).sum();
        let mut size: u64 = 1;
        for _ in 0..dim {
            size *= p as u64;
            if size > MAX_SIZE {
                return Err(Error::TooLarge { p, dim });
            }
        }
        let pow_p = (0..=dim).map(|i| (p as usize).pow(i)).collect();
        let mut offsets = Vec::with_capacity(components.len());
        let mut acc = 0;
        for c in &components {
            offsets.push(acc);
            acc += c.dim();
        }
        Ok(Domain {
            p,
            components,
            dim,
            size: size as usize,
            pow_p,
            offsets,
        })
    }

    pub fn field(ctx: Arc<FieldCtx>) -> Self {
        Self::new(ctx.p(), vec![Component::Field(ctx)]).expect("field sizes are already bounded")
    }

    pub fn vector(p: u32, n: u32) -> Result<Self> {
        Self::new(p, vec![Component::Vector(n)])
    }

    /// `self x other`, with `other`'s digits more significant.
    pub fn product(&self, other: &Domain) -> Result<Domain> {
        if self.p != other.p {
            return Err(Error::MixedCharacteristic(self.p, other.p));
        }
        let mut comps = self.components.clone();
        comps.extend(other.components.iter().cloned());
        Domain::new(self.p, comps)
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    /// Total dimension over F_p.
    pub fn dim(&self) -> u32 {
        self.dim
    }

    /// Number of points, p^dim.
    pub fn size(&self) -> usize {
        self.size
    }

    pub fn components(&self) -> &[Component] {
        &self.components
    }

    /// True when the domain is a single vector component.
    pub fn is_plain_vector(&self) -> bool {
        matches!(self.components.as_slice(), [Component::Vector(_)])
    }

    pub fn digits(&self, mut idx: usize) -> Vec<u32> {
        let p = self.p as usize;
        (0..self.dim)
            .map(|_| {
                let d = idx % p;
                idx /= p;
                d as u32
            })
            .collect()
    }

    pub fn compose(&self, digits: &[u32]) -> usize {
        debug_assert_eq!(digits.len(), self.dim as usize);
        digits
            .iter()
            .enumerate()
            .map(|(i, &d)| d as usize * self.pow_p[i])
            .sum()
    }

    /// Per-component indices of a point.
    pub fn split(&self, idx: usize) -> Vec<u32> {
        self.components
            .iter()
            .zip(&self.offsets)
            .map(|(c, &off)| {
                ((idx / self.pow_p[off as usize]) % self.pow_p[c.dim() as usize]) as u32
            })
            .collect()
    }

    pub fn join(&self, parts: &[u32]) -> usize {
        parts
            .iter()
            .zip(&self.offsets)
            .map(|(&part, &off)| part as usize * self.pow_p[off as usize])
            .sum()
    }

    /// `<b, x>`: Tr(b x) on field components, the dot product on vector
    /// components, summed.
    pub fn inner_product(&self, b: usize, x: usize) -> u32 {
        let p = self.p as u64;
        let bs = self.split(b);
        let xs = self.split(x);
        let mut acc = 0u64;
        for ((c, &bi), &xi) in self.components.iter().zip(&bs).zip(&xs) {
            match c {
                Component::Field(ctx) => {
                    acc += ctx.trace(ctx.mul(ctx.elem(bi), ctx.elem(xi))) as u64;
                }
                Component::Vector(n) => {
                    let (mut bb, mut xx) = (bi as u64, xi as u64);
                    for _ in 0..*n {
                        acc += (bb % p) * (xx % p);
                        bb /= p;
                        xx /= p;
                    }
                }
            }
        }
        (acc % p) as u32
    }

    /// Image of `b` under the trace-form matrices, so that
    /// `<b, x> = dot(dot_form(b), x)` on digit vectors.
    pub fn dot_form(&self, b: usize) -> usize {
        let p = self.p as u64;
        let digits = self.digits(b);
        let mut out = digits.clone();
        for (c, &off) in self.components.iter().zip(&self.offsets) {
            if let Component::Field(ctx) = c {
                let m = ctx.m() as usize;
                let off = off as usize;
                let form = ctx.trace_form();
                for j in 0..m {
                    let v: u64 = (0..m)
                        .map(|i| form[j][i] as u64 * digits[off + i] as u64)
                        .sum();
                    out[off + j] = (v % p) as u32;
                }
            }
        }
        self.compose(&out)
    }

    pub fn neg(&self, idx: usize) -> usize {
        let p = self.p;
        let digits: Vec<u32> = self.digits(idx).iter().map(|&d| (p - d) % p).collect();
        self.compose(&digits)
    }

    pub fn add(&self, a: usize, b: usize) -> usize {
        let p = self.p;
        let digits: Vec<u32> = self
            .digits(a)
            .iter()
            .zip(self.digits(b))
            .map(|(&x, y)| (x + y) % p)
            .collect();
        self.compose(&digits)
    }

    pub fn describe(&self) -> Vec<ComponentDesc> {
        self.components
            .iter()
            .map(|c| match c {
                Component::Field(ctx) => ComponentDesc::Field {
                    m: ctx.m(),
                    modulus: ctx.modulus().to_vec(),
                    primitive: ctx.primitive().index(),
                },
                Component::Vector(n) => ComponentDesc::Vector { n: *n },
            })
            .collect()
    }
}

impl fmt::Display for Domain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .components
            .iter()
            .map(|c| match c {
                Component::Field(ctx) => format!("F_{{{}^{}}}", ctx.p(), ctx.m()),
                Component::Vector(n) => format!("F_{}^{}", self.p, n),
            })
            .collect();
        write!(f, "{}", parts.join(" x "))
    }
}
