//! Exact arithmetic in F_p and F_{p^m}.
//!
//! Elements are stored in the polynomial basis 1, w, ..., w^{m-1}, where w is
//! a root of the context's modulus. An element is identified with its index
//! `sum coeffs[i] * p^i`, which is the layout every truth table in the crate
//! uses.

pub(crate) mod poly;

use std::fmt;
use std::sync::OnceLock;

use crate::error::{Error, Result};

/// Upper bound on `p^m` (and on every truth-table domain).
pub const MAX_SIZE: u64 = 1 << 20;

/// An element of a [`FieldCtx`], identified by its polynomial-basis index.
///
/// The element does not carry its context; all arithmetic goes through the
/// owning [`FieldCtx`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FieldElement(u32);

impl FieldElement {
    pub fn index(self) -> u32 {
        self.0
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

/// Irreducible moduli shipped for the fields the worked examples live in.
pub fn builtin_modulus(p: u32, m: u32) -> Option<Vec<u32>> {
    match (p, m) {
        (_, 1) => Some(vec![0, 1]),
        // x^3 + x^2 + 2
        (3, 3) => Some(vec![2, 0, 1, 1]),
        // x^4 + x^3 + 2
        (3, 4) => Some(vec![2, 0, 0, 1, 1]),
        // x^3 + x + 1
        (5, 3) => Some(vec![1, 1, 0, 1]),
        _ => None,
    }
}

/// Smallest monic irreducible polynomial of degree `m`, ordered by the index
/// of its lower coefficients.
pub fn find_irreducible(p: u32, m: u32) -> Result<Vec<u32>> {
    check_prime(p)?;
    check_size(p, m)?;
    let count = (p as u64).pow(m);
    for idx in 0..count {
        let mut f = digits_of(idx, p, m as usize);
        f.push(1);
        if poly::is_irreducible(&f, p) {
            return Ok(f);
        }
    }
    unreachable!("irreducible polynomials exist in every degree")
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

fn check_prime(p: u32) -> Result<()> {
    if p < 3 || !is_prime(p as u64) {
        return Err(Error::NotOddPrime(p as u64));
    }
    Ok(())
}

fn check_size(p: u32, m: u32) -> Result<u32> {
    let mut size: u64 = 1;
    for _ in 0..m {
        size = size.saturating_mul(p as u64);
        if size > MAX_SIZE {
            return Err(Error::TooLarge { p, dim: m });
        }
    }
    Ok(size as u32)
}

fn digits_of(mut idx: u64, p: u32, len: usize) -> Vec<u32> {
    let mut out = Vec::with_capacity(len);
    for _ in 0..len {
        out.push((idx % p as u64) as u32);
        idx /= p as u64;
    }
    out
}

fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Formats a polynomial given lowest degree first, e.g. `x^3 + x^2 + 2`.
pub fn format_poly(coeffs: &[u32], var: &str) -> String {
    let mut terms = Vec::new();
    for (i, &c) in coeffs.iter().enumerate().rev() {
        if c == 0 {
            continue;
        }
        let mono = match i {
            0 => String::new(),
            1 => var.to_string(),
            _ => format!("{var}^{i}"),
        };
        terms.push(match (c, i) {
            (_, 0) => c.to_string(),
            (1, _) => mono,
            _ => format!("{c}{mono}"),
        });
    }
    if terms.is_empty() {
        "0".to_string()
    } else {
        terms.join(" + ")
    }
}

/// A validated finite field F_{p^m} with log/exp tables over a fixed
/// primitive element.
///
/// Immutable once built; share it behind an `Arc`.
pub struct FieldCtx {
    p: u32,
    m: u32,
    q: u32,
    modulus: Vec<u32>,
    primitive: FieldElement,
    pow_p: Vec<u32>,
    exp: Vec<u32>,
    log: Vec<u32>,
    trace_table: Vec<u32>,
    trace_form: Vec<Vec<u32>>,
    eta: OnceLock<Vec<i8>>,
}

impl fmt::Debug for FieldCtx {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FieldCtx")
            .field("p", &self.p)
            .field("m", &self.m)
            .field("modulus", &self.modulus)
            .field("primitive", &self.primitive.0)
            .finish()
    }
}

impl PartialEq for FieldCtx {
    fn eq(&self, other: &Self) -> bool {
        self.p == other.p
            && self.m == other.m
            && self.modulus == other.modulus
            && self.primitive == other.primitive
    }
}

impl Eq for FieldCtx {}

impl FieldCtx {
    /// Builds F_{p^m} from a monic modulus given lowest degree first.
    ///
    /// When `primitive` is `None` the primitive element of smallest index is
    /// used.
    pub fn new(p: u32, m: u32, modulus: &[u32], primitive: Option<u32>) -> Result<Self> {
        check_prime(p)?;
        if m == 0 {
            return Err(Error::BadModulus {
                degree: m,
                reason: "degree must be at least 1".into(),
            });
        }
        let q = check_size(p, m)?;
        if modulus.len() != m as usize + 1 {
            return Err(Error::BadModulus {
                degree: m,
                reason: format!("expected {} digits, got {}", m + 1, modulus.len()),
            });
        }
        if modulus[m as usize] != 1 {
            return Err(Error::BadModulus {
                degree: m,
                reason: "leading coefficient must be 1".into(),
            });
        }
        if let Some(&d) = modulus.iter().find(|&&d| d >= p) {
            return Err(Error::BadModulus {
                degree: m,
                reason: format!("digit {d} is not reduced mod {p}"),
            });
        }
        if !poly::is_irreducible(modulus, p) {
            return Err(Error::ReducibleModulus(format_poly(modulus, "x")));
        }

        let pow_p: Vec<u32> = (0..=m).map(|i| p.pow(i)).collect();
        let order = q as u64 - 1;
        let factors = prime_factors(order);
        let is_primitive_slow = |idx: u32| -> bool {
            if idx == 0 {
                return false;
            }
            let x = digits_of(idx as u64, p, m as usize);
            factors
                .iter()
                .all(|&r| poly::pow_poly_mod(&x, order / r, modulus, p) != [1])
        };
        let primitive = match primitive {
            Some(idx) => {
                if idx >= q || !is_primitive_slow(idx) {
                    return Err(Error::NotPrimitive(idx));
                }
                idx
            }
            None => (1..q)
                .find(|&i| is_primitive_slow(i))
                .expect("a finite field has a primitive element"),
        };

        let to_index =
            |c: &[u32]| -> u32 { c.iter().enumerate().map(|(i, &d)| d * pow_p[i]).sum() };
        let prim_poly = digits_of(primitive as u64, p, m as usize);
        let mut exp = Vec::with_capacity(order as usize);
        let mut log = vec![0u32; q as usize];
        let mut cur = vec![1u32];
        for i in 0..order as u32 {
            let idx = to_index(&cur);
            exp.push(idx);
            log[idx as usize] = i;
            cur = poly::mul_mod(&cur, &prim_poly, modulus, p);
        }

        let mut ctx = FieldCtx {
            p,
            m,
            q,
            modulus: modulus.to_vec(),
            primitive: FieldElement(primitive),
            pow_p,
            exp,
            log,
            trace_table: Vec::new(),
            trace_form: Vec::new(),
            eta: OnceLock::new(),
        };

        let basis_trace: Vec<u32> = (0..m as usize)
            .map(|i| ctx.trace_by_frobenius(ctx.basis(i)))
            .collect();
        ctx.trace_table = (0..q)
            .map(|idx| {
                let mut t = 0u64;
                let mut rest = idx;
                for &bt in &basis_trace {
                    t += (rest % p) as u64 * bt as u64;
                    rest /= p;
                }
                (t % p as u64) as u32
            })
            .collect();
        ctx.trace_form = (0..m as usize)
            .map(|i| {
                (0..m as usize)
                    .map(|j| ctx.trace(ctx.mul(ctx.basis(i), ctx.basis(j))))
                    .collect()
            })
            .collect();
        Ok(ctx)
    }

    /// F_{p^m} over the shipped modulus, if there is one.
    pub fn builtin(p: u32, m: u32) -> Result<Self> {
        let modulus = builtin_modulus(p, m).ok_or_else(|| Error::BadModulus {
            degree: m,
            reason: format!("no built-in modulus for {p}^{m}; supply one explicitly"),
        })?;
        Self::new(p, m, &modulus, None)
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    /// Number of elements, p^m.
    pub fn size(&self) -> u32 {
        self.q
    }

    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }

    pub fn primitive(&self) -> FieldElement {
        self.primitive
    }

    /// Matrix of the trace bilinear form, `C[i][j] = Tr(w^i w^j)`.
    pub fn trace_form(&self) -> &[Vec<u32>] {
        &self.trace_form
    }

    pub fn zero(&self) -> FieldElement {
        FieldElement(0)
    }

    pub fn one(&self) -> FieldElement {
        FieldElement(1)
    }

    /// The basis element w^i for i < m.
    pub fn basis(&self, i: usize) -> FieldElement {
        assert!(i < self.m as usize);
        FieldElement(self.pow_p[i])
    }

    /// The root w of the modulus.
    pub fn w(&self) -> FieldElement {
        if self.m == 1 {
            // x + c has root -c
            self.from_int(self.p as i64 - self.modulus[0] as i64)
        } else {
            FieldElement(self.p)
        }
    }

    pub fn elem(&self, index: u32) -> FieldElement {
        assert!(
            index < self.q,
            "index {index} out of range for field of size {}",
            self.q
        );
        FieldElement(index)
    }

    pub fn try_elem(&self, index: u32) -> Result<FieldElement> {
        if index < self.q {
            Ok(FieldElement(index))
        } else {
            Err(Error::OutOfRange(format!(
                "element index {index} >= {}",
                self.q
            )))
        }
    }

    /// Embeds an integer through the prime field.
    pub fn from_int(&self, n: i64) -> FieldElement {
        FieldElement(n.rem_euclid(self.p as i64) as u32)
    }

    /// Element with the given polynomial-basis coefficients (reduced mod p).
    pub fn from_coeffs(&self, coeffs: &[u32]) -> FieldElement {
        assert!(coeffs.len() <= self.m as usize);
        FieldElement(
            coeffs
                .iter()
                .enumerate()
                .map(|(i, &c)| (c % self.p) * self.pow_p[i])
                .sum(),
        )
    }

    /// Evaluates an integer polynomial in w of any degree.
    pub fn from_w_poly(&self, coeffs: &[i64]) -> FieldElement {
        let w = self.w();
        coeffs.iter().enumerate().fold(self.zero(), |acc, (i, &c)| {
            self.add(acc, self.mul(self.from_int(c), self.pow(w, i as u64)))
        })
    }

    pub fn coeffs(&self, x: FieldElement) -> Vec<u32> {
        digits_of(x.0 as u64, self.p, self.m as usize)
    }

    pub fn elements(&self) -> impl Iterator<Item = FieldElement> {
        (0..self.q).map(FieldElement)
    }

    pub fn add(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        let (mut x, mut y, mut out) = (a.0, b.0, 0);
        for i in 0..self.m as usize {
            out += ((x % self.p + y % self.p) % self.p) * self.pow_p[i];
            x /= self.p;
            y /= self.p;
        }
        FieldElement(out)
    }

    pub fn neg(&self, a: FieldElement) -> FieldElement {
        let (mut x, mut out) = (a.0, 0);
        for i in 0..self.m as usize {
            out += ((self.p - x % self.p) % self.p) * self.pow_p[i];
            x /= self.p;
        }
        FieldElement(out)
    }

    pub fn sub(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        if a.0 == 0 || b.0 == 0 {
            return FieldElement(0);
        }
        let e =
            (self.log[a.0 as usize] as u64 + self.log[b.0 as usize] as u64) % (self.q as u64 - 1);
        FieldElement(self.exp[e as usize])
    }

    /// Multiplication by an element of the prime field.
    pub fn scale(&self, c: u32, a: FieldElement) -> FieldElement {
        self.mul(self.from_int(c as i64), a)
    }

    pub fn inv(&self, a: FieldElement) -> Result<FieldElement> {
        if a.0 == 0 {
            return Err(Error::ZeroInverse);
        }
        let order = self.q - 1;
        let e = (order - self.log[a.0 as usize]) % order;
        Ok(FieldElement(self.exp[e as usize]))
    }

    /// Square-and-multiply exponentiation; `pow(0, 0) = 1`.
    pub fn pow(&self, a: FieldElement, mut e: u64) -> FieldElement {
        let mut acc = self.one();
        let mut base = a;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            e >>= 1;
            if e > 0 {
                base = self.mul(base, base);
            }
        }
        acc
    }

    /// Discrete logarithm to the context's primitive element.
    pub fn log(&self, a: FieldElement) -> Option<u32> {
        (a.0 != 0).then(|| self.log[a.0 as usize])
    }

    pub fn frobenius(&self, a: FieldElement) -> FieldElement {
        self.pow(a, self.p as u64)
    }

    /// Absolute trace to F_p, returned as a digit in `[0, p)`.
    pub fn trace(&self, a: FieldElement) -> u32 {
        self.trace_table[a.0 as usize]
    }

    /// `x + x^p + ... + x^{p^{m-1}}` computed by repeated Frobenius.
    pub fn trace_by_frobenius(&self, a: FieldElement) -> u32 {
        let mut acc = self.zero();
        let mut conj = a;
        for _ in 0..self.m {
            acc = self.add(acc, conj);
            conj = self.frobenius(conj);
        }
        assert!(acc.0 < self.p, "trace left the prime field");
        acc.0
    }

    /// Quadratic character of a nonzero element.
    pub fn eta(&self, a: FieldElement) -> Result<i8> {
        if a.0 == 0 {
            return Err(Error::ZeroCharacter);
        }
        let table = self.eta.get_or_init(|| {
            let half = (self.q as u64 - 1) / 2;
            let minus_one = self.neg(self.one());
            (0..self.q)
                .map(|i| {
                    if i == 0 {
                        return 0;
                    }
                    let r = self.pow(FieldElement(i), half);
                    if r == self.one() {
                        1
                    } else {
                        assert_eq!(r, minus_one, "Euler criterion produced a non-unit");
                        -1
                    }
                })
                .collect()
        });
        Ok(table[a.0 as usize])
    }

    /// Multiplicative order check against every prime divisor of p^m - 1.
    pub fn is_primitive(&self, a: FieldElement) -> bool {
        if a.0 == 0 {
            return false;
        }
        let order = self.q as u64 - 1;
        prime_factors(order)
            .into_iter()
            .all(|r| self.pow(a, order / r) != self.one())
    }

    /// All primitive elements in index order.
    pub fn primitive_elements(&self) -> Vec<FieldElement> {
        self.elements().filter(|&a| self.is_primitive(a)).collect()
    }

    /// Rank over F_p of the coefficient vectors of `elems`.
    pub fn rank(&self, elems: &[FieldElement]) -> usize {
        let p = self.p as u64;
        let mut rows: Vec<Vec<u32>> = elems.iter().map(|&e| self.coeffs(e)).collect();
        let cols = self.m as usize;
        let mut rank = 0;
        for col in 0..cols {
            let Some(pivot) = (rank..rows.len()).find(|&r| rows[r][col] != 0) else {
                continue;
            };
            rows.swap(rank, pivot);
            let inv = poly::inv_mod(rows[rank][col], self.p) as u64;
            for c in rows[rank].iter_mut() {
                *c = (*c as u64 * inv % p) as u32;
            }
            let pivot_row = rows[rank].clone();
            for (r, row) in rows.iter_mut().enumerate() {
                if r != rank && row[col] != 0 {
                    let factor = row[col] as u64;
                    for (x, &y) in row.iter_mut().zip(&pivot_row) {
                        let sub = factor * y as u64 % p;
                        *x = ((*x as u64 + p - sub) % p) as u32;
                    }
                }
            }
            rank += 1;
        }
        rank
    }

    pub fn linearly_independent(&self, elems: &[FieldElement]) -> bool {
        self.rank(elems) == elems.len()
    }

    /// Polynomial in w, e.g. `w^2 + 2w + 1`.
    pub fn format(&self, a: FieldElement) -> String {
        format_poly(&self.coeffs(a), "w")
    }

    pub fn describe(&self) -> String {
        format!(
            "F_{}^{} mod {} (primitive {})",
            self.p,
            self.m,
            format_poly(&self.modulus, "x"),
            self.format(self.primitive)
        )
    }
}
