//! Exact Walsh transforms `W(b) = sum_x e^{f(x) - <b,x>}` over Z[e_p].
//!
//! The fast path works in the group ring Z[C_p] (p coefficients per value,
//! multiplication by a root of unity is a rotation) and runs one radix-p DFT
//! pass per digit axis. Field components are handled by re-indexing through
//! the trace-form matrix, which turns `Tr(b x)` into a dot product.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::Serialize;

use crate::cyclo::CycInt;
use crate::pfunc::{ComponentDesc, Domain, PFunction};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WalshSpectrum {
    domain: Domain,
    values: Vec<CycInt>,
}

#[derive(Clone, Debug, Serialize)]
pub struct HistogramEntry {
    pub abs_sq: CycInt,
    pub approx: f64,
    pub count: usize,
}

#[derive(Serialize)]
struct SpectrumJson<'a> {
    p: u32,
    domain: Vec<ComponentDesc>,
    values: &'a [CycInt],
    histogram: Vec<HistogramEntry>,
}

impl WalshSpectrum {
    pub fn new(domain: Domain, values: Vec<CycInt>) -> Self {
        assert_eq!(values.len(), domain.size());
        WalshSpectrum { domain, values }
    }

    pub fn domain(&self) -> &Domain {
        &self.domain
    }

    pub fn p(&self) -> u32 {
        self.domain.p()
    }

    pub fn values(&self) -> &[CycInt] {
        &self.values
    }

    pub fn value(&self, b: usize) -> &CycInt {
        &self.values[b]
    }

    /// `sum_b |W(b)|^2 == p^{2n}`, accumulated in 128-bit integers.
    pub fn parseval_holds(&self) -> bool {
        let p = self.p();
        let mut acc = vec![0i128; p as usize - 1];
        for v in &self.values {
            for (a, &c) in acc.iter_mut().zip(v.abs_sq().coeffs()) {
                *a += c as i128;
            }
        }
        let target = (p as i128).pow(2 * self.domain.dim());
        acc[0] == target && acc[1..].iter().all(|&c| c == 0)
    }

    /// Counts of each distinct `|W(b)|^2`.
    pub fn histogram(&self) -> Vec<HistogramEntry> {
        let mut counts: BTreeMap<CycInt, usize> = BTreeMap::new();
        for v in &self.values {
            *counts.entry(v.abs_sq()).or_default() += 1;
        }
        counts
            .into_iter()
            .map(|(abs_sq, count)| HistogramEntry {
                approx: abs_sq.to_complex().re,
                abs_sq,
                count,
            })
            .collect()
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(SpectrumJson {
            p: self.p(),
            domain: self.domain.describe(),
            values: &self.values,
            histogram: self.histogram(),
        })
        .expect("spectrum serializes")
    }
}

/// Reference transform by the defining double sum.
pub fn walsh_naive(f: &PFunction) -> WalshSpectrum {
    let d = f.domain();
    let p = d.p() as usize;
    let values = (0..d.size())
        .into_par_iter()
        .map(|b| {
            let mut counts = vec![0i64; p];
            for x in 0..d.size() {
                let e = (f.eval(x) as usize + p - d.inner_product(b, x) as usize) % p;
                counts[e] += 1;
            }
            CycInt::from_group_ring(p as u32, &counts)
        })
        .collect();
    WalshSpectrum::new(d.clone(), values)
}

/// One radix-p pass along the digit axis with the given stride:
/// `out[.., d, ..] = sum_x e^{sign * d * x} src[.., x, ..]`.
fn dft_axis(src: &[i64], p: usize, stride: usize, sign: i64) -> Vec<i64> {
    let mut out = vec![0i64; src.len()];
    out.par_chunks_mut(p).enumerate().for_each(|(idx, slot)| {
        let d = (idx / stride) % p;
        let base = idx - d * stride;
        for xk in 0..p {
            let s = &src[(base + xk * stride) * p..][..p];
            let shift = (sign * (d * xk) as i64).rem_euclid(p as i64) as usize;
            for (j, &c) in s.iter().enumerate() {
                slot[(j + shift) % p] += c;
            }
        }
    });
    out
}

/// Full multidimensional DFT over group-ring values laid out as
/// `buf[point * p + j]`.
fn dft(mut buf: Vec<i64>, p: usize, dim: u32, sign: i64) -> Vec<i64> {
    let mut stride = 1;
    for _ in 0..dim {
        buf = dft_axis(&buf, p, stride, sign);
        stride *= p;
    }
    buf
}

/// Fast transform, identical in output to [`walsh_naive`].
pub fn walsh_fast(f: &PFunction) -> WalshSpectrum {
    let d = f.domain();
    let p = d.p() as usize;
    let n = d.size();
    let mut buf = vec![0i64; n * p];
    for (x, &v) in f.table().iter().enumerate() {
        buf[x * p + v as usize] = 1;
    }
    let buf = dft(buf, p, d.dim(), -1);
    let values = (0..n)
        .into_par_iter()
        .map(|b| {
            let v = d.dot_form(b);
            CycInt::from_group_ring(p as u32, &buf[v * p..][..p])
        })
        .collect();
    WalshSpectrum::new(d.clone(), values)
}

pub fn walsh(f: &PFunction) -> WalshSpectrum {
    walsh_fast(f)
}

/// Inversion identity `sum_b e^{<b,y>} W(b) = p^n e^{f(y)}` at every y,
/// evaluated with the fast kernel.
pub fn poisson_check(f: &PFunction, w: &WalshSpectrum) -> bool {
    let d = f.domain();
    if w.domain() != d {
        return false;
    }
    let p = d.p() as usize;
    let n = d.size();
    let mut buf = vec![0i64; n * p];
    for b in 0..n {
        let v = d.dot_form(b);
        buf[v * p..][..p].copy_from_slice(&w.value(b).to_group_ring());
    }
    let buf = dft(buf, p, d.dim(), 1);
    let scale = (p as i64).pow(d.dim());
    (0..n).into_par_iter().all(|y| {
        let lhs = CycInt::from_group_ring(p as u32, &buf[y * p..][..p]);
        lhs == CycInt::root_power(p as u32, f.eval(y) as i64).scale(scale)
    })
}

/// Same identity by direct summation; quadratic in the domain size.
pub fn poisson_check_naive(f: &PFunction, w: &WalshSpectrum) -> bool {
    let d = f.domain();
    if w.domain() != d {
        return false;
    }
    let p = d.p();
    let scale = (p as i64).pow(d.dim());
    (0..d.size()).into_par_iter().all(|y| {
        let mut acc = CycInt::zero(p);
        for b in 0..d.size() {
            acc = &acc + &w.value(b).mul_root(d.inner_product(b, y) as i64);
        }
        acc == CycInt::root_power(p, f.eval(y) as i64).scale(scale)
    })
}
