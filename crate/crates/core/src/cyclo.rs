//! Exact arithmetic in Z[e], e = exp(2*pi*i/p), p an odd prime.
//!
//! Elements are kept in the canonical basis 1, e, ..., e^{p-2}; the relation
//! 1 + e + ... + e^{p-1} = 0 eliminates e^{p-1}. Canonical form is unique, so
//! ring equality is coefficient equality.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex64;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CycInt {
    p: u32,
    coeffs: Vec<i64>,
}

fn checked(v: Option<i64>) -> i64 {
    v.expect("cyclotomic coefficient overflow")
}

impl CycInt {
    pub fn zero(p: u32) -> Self {
        assert!(
            p >= 3 && p % 2 == 1,
            "cyclotomic order must be an odd prime"
        );
        CycInt {
            p,
            coeffs: vec![0; p as usize - 1],
        }
    }

    pub fn from_int(p: u32, n: i64) -> Self {
        let mut out = Self::zero(p);
        out.coeffs[0] = n;
        out
    }

    pub fn one(p: u32) -> Self {
        Self::from_int(p, 1)
    }

    /// Builds an element from canonical coefficients.
    pub fn from_coeffs(p: u32, coeffs: Vec<i64>) -> Self {
        assert_eq!(coeffs.len(), p as usize - 1, "expected p - 1 coefficients");
        CycInt { p, coeffs }
    }

    /// Reduces `sum c_j e^j` over j in 0..p (the group ring Z[C_p]) to
    /// canonical form.
    pub fn from_group_ring(p: u32, ring: &[i64]) -> Self {
        assert_eq!(ring.len(), p as usize);
        let top = ring[p as usize - 1];
        CycInt {
            p,
            coeffs: ring[..p as usize - 1]
                .iter()
                .map(|&c| checked(c.checked_sub(top)))
                .collect(),
        }
    }

    /// The p coefficients of this element in the group ring, with the
    /// coefficient of e^{p-1} set to zero.
    pub fn to_group_ring(&self) -> Vec<i64> {
        let mut out = self.coeffs.clone();
        out.push(0);
        out
    }

    /// e^e in canonical form; `e` is reduced mod p.
    pub fn root_power(p: u32, e: i64) -> Self {
        let mut ring = vec![0i64; p as usize];
        ring[e.rem_euclid(p as i64) as usize] = 1;
        Self::from_group_ring(p, &ring)
    }

    /// Quadratic Gauss sum `sum_{t=1}^{p-1} (t/p) e^t`, equal to sqrt(p) when
    /// p = 1 mod 4 and i*sqrt(p) when p = 3 mod 4.
    pub fn gauss_sum(p: u32) -> Self {
        let mut ring = vec![0i64; p as usize];
        let half = (p as u64 - 1) / 2;
        for t in 1..p as u64 {
            let chi = if crate::field::poly::pow_mod(t, half, p as u64) == 1 {
                1
            } else {
                -1
            };
            ring[t as usize] = chi;
        }
        Self::from_group_ring(p, &ring)
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    /// The integer this element equals, if it is rational.
    pub fn as_integer(&self) -> Option<i64> {
        self.coeffs[1..]
            .iter()
            .all(|&c| c == 0)
            .then_some(self.coeffs[0])
    }

    fn check_same(&self, other: &Self) -> Result<()> {
        if self.p != other.p {
            return Err(Error::MixedCharacteristic(self.p, other.p));
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        Ok(CycInt {
            p: self.p,
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(&a, &b)| checked(a.checked_add(b)))
                .collect(),
        })
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        Ok(CycInt {
            p: self.p,
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(&a, &b)| checked(a.checked_sub(b)))
                .collect(),
        })
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        let p = self.p as usize;
        let mut ring = vec![0i64; p];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                let k = (i + j) % p;
                ring[k] = checked(ring[k].checked_add(checked(a.checked_mul(b))));
            }
        }
        Ok(Self::from_group_ring(self.p, &ring))
    }

    pub fn scale(&self, k: i64) -> Self {
        CycInt {
            p: self.p,
            coeffs: self
                .coeffs
                .iter()
                .map(|&c| checked(c.checked_mul(k)))
                .collect(),
        }
    }

    /// Multiplication by e^s.
    pub fn mul_root(&self, s: i64) -> Self {
        let p = self.p as usize;
        let shift = s.rem_euclid(p as i64) as usize;
        let mut ring = vec![0i64; p];
        for (j, &c) in self.coeffs.iter().enumerate() {
            ring[(j + shift) % p] = c;
        }
        Self::from_group_ring(self.p, &ring)
    }

    /// Complex conjugation, e -> e^{-1}.
    pub fn conj(&self) -> Self {
        let p = self.p as usize;
        let mut ring = vec![0i64; p];
        for (j, &c) in self.coeffs.iter().enumerate() {
            ring[(p - j) % p] = c;
        }
        Self::from_group_ring(self.p, &ring)
    }

    /// `a * conj(a)`, the squared absolute value as a ring element.
    pub fn abs_sq(&self) -> Self {
        self * &self.conj()
    }

    /// Floating-point evaluation at exp(2*pi*i/p). Display only.
    pub fn to_complex(&self) -> Complex64 {
        let theta = 2.0 * std::f64::consts::PI / self.p as f64;
        self.coeffs
            .iter()
            .enumerate()
            .map(|(j, &c)| Complex64::from_polar(c as f64, theta * j as f64))
            .sum()
    }
}

impl Add for &CycInt {
    type Output = CycInt;
    fn add(self, rhs: &CycInt) -> CycInt {
        self.try_add(rhs).expect("mixed cyclotomic orders")
    }
}

impl Sub for &CycInt {
    type Output = CycInt;
    fn sub(self, rhs: &CycInt) -> CycInt {
        self.try_sub(rhs).expect("mixed cyclotomic orders")
    }
}

impl Mul for &CycInt {
    type Output = CycInt;
    fn mul(self, rhs: &CycInt) -> CycInt {
        self.try_mul(rhs).expect("mixed cyclotomic orders")
    }
}

impl Neg for &CycInt {
    type Output = CycInt;
    fn neg(self) -> CycInt {
        self.scale(-1)
    }
}

impl fmt::Display for CycInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (j, &c) in self.coeffs.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let mono = match j {
                0 => String::new(),
                1 => "e".to_string(),
                _ => format!("e^{j}"),
            };
            let mag = c.unsigned_abs();
            let body = match (mag, j) {
                (_, 0) => mag.to_string(),
                (1, _) => mono,
                _ => format!("{mag}·{mono}"),
            };
            match (first, c < 0) {
                (true, true) => write!(f, "-{body}")?,
                (true, false) => write!(f, "{body}")?,
                (false, true) => write!(f, " - {body}")?,
                (false, false) => write!(f, " + {body}")?,
            }
            first = false;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

impl fmt::Debug for CycInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let z = self.to_complex();
        write!(f, "{self} (≈ {:.6}{:+.6}i)", z.re, z.im)
    }
}

impl Serialize for CycInt {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.coeffs.serialize(s)
    }
}
