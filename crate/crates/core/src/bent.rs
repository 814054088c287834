//! Bentness, regularity classes and exact duals.
//!
//! Every bent Walsh value has the form `u * P_n * e^c` with `u = +-1` and
//! `c` in `[0, p)`, where `P_n = p^{n/2}` for even n and
//! `P_n = p^{(n-1)/2} * g_p` for odd n, `g_p` the quadratic Gauss sum. Since
//! `g_p = sqrt(p)` for p = 1 mod 4 and `i * sqrt(p)` for p = 3 mod 4, the
//! complex unit in front of `p^{n/2} e^c` is `u` or `u * i`, recovered from
//! `u` and the parity of n alone. Nothing here leaves the ring Z[e_p].

use num_complex::Complex64;
use serde::Serialize;

use crate::cyclo::CycInt;
use crate::error::{Error, Result};
use crate::pfunc::{ComponentDesc, Domain, PFunction};
use crate::walsh::{walsh, HistogramEntry, WalshSpectrum};

/// A fourth root of unity.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Zeta {
    #[serde(rename = "1")]
    One,
    #[serde(rename = "-1")]
    MinusOne,
    #[serde(rename = "i")]
    I,
    #[serde(rename = "-i")]
    MinusI,
}

impl Zeta {
    /// The unit of `u * P_n` relative to the positive real `p^{n/2}`.
    pub fn from_sign(p: u32, n: u32, sign: i8) -> Zeta {
        let imaginary = n % 2 == 1 && p % 4 == 3;
        match (imaginary, sign > 0) {
            (false, true) => Zeta::One,
            (false, false) => Zeta::MinusOne,
            (true, true) => Zeta::I,
            (true, false) => Zeta::MinusI,
        }
    }

    /// `i^k`.
    pub fn i_pow(k: u32) -> Zeta {
        [Zeta::One, Zeta::I, Zeta::MinusOne, Zeta::MinusI][(k % 4) as usize]
    }

    fn exponent(self) -> u32 {
        match self {
            Zeta::One => 0,
            Zeta::I => 1,
            Zeta::MinusOne => 2,
            Zeta::MinusI => 3,
        }
    }

    pub fn negate(self) -> Zeta {
        self * Zeta::MinusOne
    }

    pub fn to_complex(self) -> Complex64 {
        match self {
            Zeta::One => Complex64::new(1.0, 0.0),
            Zeta::MinusOne => Complex64::new(-1.0, 0.0),
            Zeta::I => Complex64::new(0.0, 1.0),
            Zeta::MinusI => Complex64::new(0.0, -1.0),
        }
    }
}

impl std::ops::Mul for Zeta {
    type Output = Zeta;

    // units are powers of i, so multiplying adds exponents
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn mul(self, other: Zeta) -> Zeta {
        Zeta::i_pow(self.exponent() + other.exponent())
    }
}

/// The ring element `P_n` standing in for `p^{n/2}`.
pub fn bent_scale(p: u32, n: u32) -> CycInt {
    let half = (p as i64).pow(n / 2);
    if n.is_multiple_of(2) {
        CycInt::from_int(p, half)
    } else {
        CycInt::gauss_sum(p).scale(half)
    }
}

/// The 2p values `u * P_n * e^c`, checked to be pairwise distinct.
#[derive(Clone, Debug)]
pub struct UnitCandidates {
    p: u32,
    n: u32,
    candidates: Vec<(UnitEntry, CycInt)>,
}

impl UnitCandidates {
    pub fn new(p: u32, n: u32) -> Result<Self> {
        let scale = bent_scale(p, n);
        let mut candidates = Vec::with_capacity(2 * p as usize);
        for sign in [1i8, -1] {
            for c in 0..p {
                let v = scale.mul_root(c as i64).scale(sign as i64);
                candidates.push((UnitEntry { sign, exponent: c }, v));
            }
        }
        for i in 0..candidates.len() {
            for j in i + 1..candidates.len() {
                if candidates[i].1 == candidates[j].1 {
                    return Err(Error::AmbiguousUnits { p, n });
                }
            }
        }
        Ok(UnitCandidates { p, n, candidates })
    }

    pub fn matches(&self, v: &CycInt) -> Vec<UnitEntry> {
        self.candidates
            .iter()
            .filter(|(_, c)| c == v)
            .map(|(u, _)| *u)
            .collect()
    }

    pub fn value(&self, u: UnitEntry) -> CycInt {
        let offset = if u.sign > 0 { 0 } else { self.p as usize };
        self.candidates[offset + u.exponent as usize].1.clone()
    }

    pub fn n(&self) -> u32 {
        self.n
    }
}

/// Sign and root exponent of one bent Walsh value.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct UnitEntry {
    pub sign: i8,
    pub exponent: u32,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Regularity {
    Regular,
    WeaklyRegularNotRegular,
    NonWeaklyRegular,
    NotBent,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum WitnessKind {
    /// `|W(b)|^2 != p^n` at this b.
    NonFlatSpectrum,
    /// The unit at this b differs from the unit at b = 0.
    UnitChange,
    /// The unit is constant but not 1; reported at b = 0.
    NonTrivialUnit,
    /// `|W_{f*}(b)|^2 != p^n` at this b.
    NonFlatDualSpectrum,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub kind: WitnessKind,
    pub index: usize,
}

/// Smallest b with `|W(b)|^2 != p^n`.
pub fn first_non_flat(w: &WalshSpectrum) -> Option<usize> {
    let p = w.p();
    let target = CycInt::from_int(p, (p as i64).pow(w.domain().dim()));
    w.values().iter().position(|v| v.abs_sq() != target)
}

pub fn is_bent(w: &WalshSpectrum) -> bool {
    first_non_flat(w).is_none()
}

/// Reads `f*` and the per-b units off a bent spectrum.
pub fn extract_dual(w: &WalshSpectrum) -> Result<(PFunction, Vec<UnitEntry>)> {
    let d = w.domain();
    let cands = UnitCandidates::new(d.p(), d.dim())?;
    let mut units = Vec::with_capacity(d.size());
    for (b, v) in w.values().iter().enumerate() {
        let m = cands.matches(v);
        if m.len() != 1 {
            return Err(Error::DualExtraction {
                index: b,
                matches: m.len(),
            });
        }
        units.push(m[0]);
    }
    let dual = PFunction::new(d.clone(), units.iter().map(|u| u.exponent).collect())?;
    Ok((dual, units))
}

/// Rebuilds the spectrum `u(b) * P_n * e^{f*(b)}`.
pub fn synthesize(domain: &Domain, units: &[UnitEntry]) -> Result<WalshSpectrum> {
    let cands = UnitCandidates::new(domain.p(), domain.dim())?;
    Ok(WalshSpectrum::new(
        domain.clone(),
        units.iter().map(|&u| cands.value(u)).collect(),
    ))
}

#[derive(Clone, Debug)]
pub struct ClassReport {
    pub domain: Domain,
    pub is_bent: bool,
    pub regularity: Regularity,
    pub unit_map: Vec<UnitEntry>,
    pub constant_unit: Option<Zeta>,
    pub dual: Option<PFunction>,
    pub dual_is_bent: Option<bool>,
    pub witnesses: Vec<Witness>,
    pub histogram: Vec<HistogramEntry>,
}

#[derive(Serialize)]
struct ReportJson<'a> {
    p: u32,
    domain: Vec<ComponentDesc>,
    bent: bool,
    regularity: Regularity,
    #[serde(skip_serializing_if = "Option::is_none")]
    constant_unit: Option<Zeta>,
    #[serde(skip_serializing_if = "Option::is_none")]
    dual_bent: Option<bool>,
    witnesses: &'a [Witness],
    spectrum_histogram: &'a [HistogramEntry],
}

impl ClassReport {
    pub fn p(&self) -> u32 {
        self.domain.p()
    }

    pub fn is_weakly_regular(&self) -> bool {
        matches!(
            self.regularity,
            Regularity::Regular | Regularity::WeaklyRegularNotRegular
        )
    }

    pub fn is_non_dual_bent(&self) -> bool {
        self.dual_is_bent == Some(false)
    }

    /// The complex unit at b.
    pub fn zeta_at(&self, b: usize) -> Option<Zeta> {
        self.unit_map
            .get(b)
            .map(|u| Zeta::from_sign(self.p(), self.domain.dim(), u.sign))
    }

    pub fn witness(&self, kind: WitnessKind) -> Option<usize> {
        self.witnesses
            .iter()
            .find(|w| w.kind == kind)
            .map(|w| w.index)
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(ReportJson {
            p: self.p(),
            domain: self.domain.describe(),
            bent: self.is_bent,
            regularity: self.regularity,
            constant_unit: self.constant_unit,
            dual_bent: self.dual_is_bent,
            witnesses: &self.witnesses,
            spectrum_histogram: &self.histogram,
        })
        .expect("report serializes")
    }
}

/// Bentness, regularity class, dual and dual-bentness of `f`.
pub fn classify(f: &PFunction) -> Result<ClassReport> {
    classify_spectrum(&walsh(f))
}

pub fn classify_spectrum(w: &WalshSpectrum) -> Result<ClassReport> {
    let domain = w.domain().clone();
    let (p, n) = (domain.p(), domain.dim());
    let histogram = w.histogram();
    if let Some(b) = first_non_flat(w) {
        return Ok(ClassReport {
            domain,
            is_bent: false,
            regularity: Regularity::NotBent,
            unit_map: Vec::new(),
            constant_unit: None,
            dual: None,
            dual_is_bent: None,
            witnesses: vec![Witness {
                kind: WitnessKind::NonFlatSpectrum,
                index: b,
            }],
            histogram,
        });
    }

    let (dual, unit_map) = extract_dual(w)?;
    let mut witnesses = Vec::new();
    let first = unit_map[0].sign;
    let (regularity, constant_unit) = match unit_map.iter().position(|u| u.sign != first) {
        Some(b) => {
            witnesses.push(Witness {
                kind: WitnessKind::UnitChange,
                index: b,
            });
            (Regularity::NonWeaklyRegular, None)
        }
        None => {
            let z = Zeta::from_sign(p, n, first);
            if z == Zeta::One {
                (Regularity::Regular, Some(z))
            } else {
                witnesses.push(Witness {
                    kind: WitnessKind::NonTrivialUnit,
                    index: 0,
                });
                (Regularity::WeaklyRegularNotRegular, Some(z))
            }
        }
    };

    let dual_spec = walsh(&dual);
    let dual_bad = first_non_flat(&dual_spec);
    if let Some(b) = dual_bad {
        witnesses.push(Witness {
            kind: WitnessKind::NonFlatDualSpectrum,
            index: b,
        });
    }

    Ok(ClassReport {
        domain,
        is_bent: true,
        regularity,
        unit_map,
        constant_unit,
        dual: Some(dual),
        dual_is_bent: Some(dual_bad.is_none()),
        witnesses,
        histogram,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DualRelation {
    pub holds: bool,
    /// Smallest y where either identity fails.
    pub witness: Option<usize>,
}

/// For weakly regular f with constant sign u, checks
/// `P_n * W_{f*}(-y) = u * p^n * e^{f(y)}` at every y (the dual transform
/// with the unit inverted, cleared of the `P_n` denominator) and
/// `f**(y) = f(-y)` as tables.
pub fn weak_regular_dual_relation(f: &PFunction, report: &ClassReport) -> Result<DualRelation> {
    if !report.is_weakly_regular() {
        return Err(Error::Precondition(
            "dual relation needs a weakly regular bent function".into(),
        ));
    }
    if report.domain != *f.domain() {
        return Err(Error::DomainMismatch(
            "report belongs to another function".into(),
        ));
    }
    let d = f.domain();
    let (p, n) = (d.p(), d.dim());
    let dual = report.dual.as_ref().expect("bent reports carry a dual");
    let sign = report.unit_map[0].sign as i64;
    let scale = bent_scale(p, n);
    let pn = (p as i64).pow(n);

    let wd = walsh(dual);
    let transform_fail = (0..d.size()).find(|&y| {
        let lhs = &scale * wd.value(d.neg(y));
        lhs != CycInt::root_power(p, f.eval(y) as i64).scale(sign * pn)
    });

    let (double_dual, _) = extract_dual(&wd)?;
    let reflected = f.reflect();
    let table_fail = (0..d.size()).find(|&y| double_dual.eval(y) != reflected.eval(y));

    let witness = match (transform_fail, table_fail) {
        (Some(a), Some(b)) => Some(a.min(b)),
        (a, b) => a.or(b),
    };
    Ok(DualRelation {
        holds: witness.is_none(),
        witness,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::FieldCtx;
    use crate::pfunc::Component;
    use std::sync::Arc;

    fn f27() -> Arc<FieldCtx> {
        Arc::new(FieldCtx::builtin(3, 3).unwrap())
    }

    fn xy_on_f3_squared() -> PFunction {
        PFunction::from_fn(Domain::vector(3, 2).unwrap(), |i| {
            ((i % 3) * (i / 3)) as u32
        })
    }

    #[test]
    fn xy_is_bent_by_naive_transform() {
        let w = crate::walsh::walsh_naive(&xy_on_f3_squared());
        assert!(is_bent(&w));
        let r = classify(&xy_on_f3_squared()).unwrap();
        assert_eq!(r.regularity, Regularity::Regular);
        // dual of y1 y2 is -y1 y2
        let expected = xy_on_f3_squared().neg();
        assert_eq!(r.dual.as_ref().unwrap(), &expected);
    }

    #[test]
    fn zero_function_is_not_bent() {
        let r = classify(&PFunction::zero(Domain::vector(3, 2).unwrap())).unwrap();
        assert!(!r.is_bent);
        assert_eq!(r.regularity, Regularity::NotBent);
        assert!(r.dual.is_none() && r.dual_is_bent.is_none());
        assert_eq!(r.witness(WitnessKind::NonFlatSpectrum), Some(0));
    }

    #[test]
    fn candidates_are_distinct() {
        for p in [3, 5, 7, 11] {
            for n in 1..=6 {
                UnitCandidates::new(p, n).unwrap();
            }
        }
    }

    #[test]
    fn ring_units_match_float_evaluation() {
        // p^{-n/2} W(b) must equal zeta * e^{f*(b)} numerically
        let fns = [
            PFunction::from_expr(f27(), "Tr(x^2)").unwrap(),
            PFunction::from_expr(f27(), "Tr(w x^2)").unwrap(),
            PFunction::from_expr(Arc::new(FieldCtx::builtin(5, 3).unwrap()), "Tr(w x^2)").unwrap(),
            PFunction::from_expr(Arc::new(FieldCtx::builtin(3, 4).unwrap()), "Tr(g x^2)").unwrap(),
            xy_on_f3_squared(),
        ];
        for f in fns {
            let w = walsh(&f);
            let r = classify_spectrum(&w).unwrap();
            let (p, n) = (f.p(), f.domain().dim());
            let norm = (p as f64).powf(n as f64 / 2.0);
            for b in 0..f.domain().size() {
                let z = w.value(b).to_complex() / norm;
                let root = Complex64::from_polar(
                    1.0,
                    2.0 * std::f64::consts::PI * r.dual.as_ref().unwrap().eval(b) as f64 / p as f64,
                );
                let expected = r.zeta_at(b).unwrap().to_complex() * root;
                assert!((z - expected).norm() < 1e-9, "b = {b}");
            }
        }
    }

    #[test]
    fn odd_dimension_regular_rearrangement() {
        // for odd n and sign +1: W(b) g_p = eta(-1) p^{(n+1)/2} e^{f*(b)}
        let ctx = Arc::new(FieldCtx::builtin(5, 3).unwrap());
        let f = PFunction::from_expr(ctx, "Tr(x^2)").unwrap();
        let w = walsh(&f);
        let r = classify_spectrum(&w).unwrap();
        let g = CycInt::gauss_sum(5);
        let dual = r.dual.as_ref().unwrap();
        for b in 0..w.values().len() {
            let sign = r.unit_map[b].sign as i64;
            let lhs = w.value(b) * &g;
            let rhs = CycInt::root_power(5, dual.eval(b) as i64).scale(sign * 25);
            assert_eq!(lhs, rhs);
        }
        // p = 5, n = 3, Tr(x^2): eta(1) (-1)^{m-1} = +1, so regular
        assert_eq!(r.regularity, Regularity::Regular);
    }

    #[test]
    fn synthesis_reproduces_spectrum() {
        let ctx = f27();
        let f = PFunction::from_expr(ctx.clone(), "Tr(w x^2)").unwrap();
        let g = xy_on_f3_squared()
            .shift_compose(&[
                PFunction::from_expr(ctx.clone(), "Tr(w x^2)").unwrap(),
                PFunction::from_expr(ctx.clone(), "Tr(w^2 x^2)").unwrap(),
            ])
            .unwrap();
        for h in [f, g] {
            let w = walsh(&h);
            if !is_bent(&w) {
                continue;
            }
            let (_, units) = extract_dual(&w).unwrap();
            assert_eq!(synthesize(w.domain(), &units).unwrap(), w);
        }
    }

    #[test]
    fn quadratic_dual_formula() {
        // f(x) = Tr(x^2): f*(u) = -Tr(u^2 / 4)
        let ctx = f27();
        let f = PFunction::from_expr(ctx.clone(), "Tr(x^2)").unwrap();
        let r = classify(&f).unwrap();
        let inv4 = ctx.inv(ctx.from_int(4)).unwrap();
        let expected = PFunction::from_field_fn(ctx.clone(), |u| {
            (3 - ctx.trace(ctx.mul(inv4, ctx.mul(u, u)))) % 3
        });
        assert_eq!(r.dual.as_ref().unwrap(), &expected);
        // eta(1) (-1)^{m-1} i^m = i^3 = -i
        assert_eq!(r.constant_unit, Some(Zeta::MinusI));
        assert_eq!(r.regularity, Regularity::WeaklyRegularNotRegular);
        assert_eq!(r.dual_is_bent, Some(true));
        let rel = weak_regular_dual_relation(&f, &r).unwrap();
        assert!(rel.holds);
    }

    #[test]
    fn dual_relation_rejects_non_weakly_regular() {
        let ctx = f27();
        let h1 = PFunction::from_expr(ctx.clone(), "Tr(w x^2)").unwrap();
        let h2 = PFunction::from_expr(ctx.clone(), "Tr(w^2+1 x^2)").unwrap();
        let base = PFunction::from_expr(ctx.clone(), "Tr(x^2)").unwrap();
        let g = xy_on_f3_squared().shift_compose(&[h1, h2]).unwrap();
        let f = base
            .extend_by(&Domain::vector(3, 2).unwrap())
            .unwrap()
            .add(&g)
            .unwrap();
        let r = classify(&f).unwrap();
        assert_eq!(r.regularity, Regularity::NonWeaklyRegular);
        assert!(r.witness(WitnessKind::UnitChange).is_some());
        assert!(matches!(
            weak_regular_dual_relation(&f, &r),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn direct_sum_of_weakly_regular_is_weakly_regular() {
        let ctx = f27();
        let f = PFunction::from_expr(ctx.clone(), "Tr(x^2)").unwrap();
        let d2 = f.domain().product(f.domain()).unwrap();
        let n = f.domain().size();
        let ff = PFunction::from_fn(d2, |i| (f.eval(i % n) + f.eval(i / n)) % 3);
        let r = classify(&ff).unwrap();
        assert!(r.is_weakly_regular());
        // (-i)^2 = -1
        assert_eq!(r.constant_unit, Some(Zeta::MinusOne));
    }

    #[test]
    fn regularity_is_translation_invariant() {
        let ctx = f27();
        let d = Domain::new(3, vec![Component::Field(ctx.clone()), Component::Vector(2)]).unwrap();
        let h1 = PFunction::from_expr(ctx.clone(), "Tr(w x^2)").unwrap();
        let h2 = PFunction::from_expr(ctx.clone(), "Tr(w^2 x^2)").unwrap();
        let base = PFunction::from_expr(ctx.clone(), "Tr(x^2)").unwrap();
        let f = base
            .extend_by(&Domain::vector(3, 2).unwrap())
            .unwrap()
            .add(&xy_on_f3_squared().shift_compose(&[h1, h2]).unwrap())
            .unwrap();
        assert_eq!(f.domain(), &d);
        let r = classify(&f).unwrap();
        for a in [1usize, 40, 200] {
            let rt = classify(&f.translate(a)).unwrap();
            assert_eq!(rt.regularity, r.regularity);
            assert_eq!(rt.is_bent, r.is_bent);
        }
    }

    #[test]
    fn json_schema() {
        let r = classify(&xy_on_f3_squared()).unwrap();
        let j = r.to_json();
        for key in [
            "p",
            "domain",
            "bent",
            "regularity",
            "constant_unit",
            "dual_bent",
            "witnesses",
            "spectrum_histogram",
        ] {
            assert!(j.get(key).is_some(), "{key}");
        }
        assert_eq!(j["regularity"], "regular");
        assert_eq!(j["constant_unit"], "1");
        let z = classify(&PFunction::zero(Domain::vector(3, 1).unwrap()))
            .unwrap()
            .to_json();
        assert!(z.get("dual_bent").is_none());
        assert_eq!(z["witnesses"][0]["kind"], "non_flat_spectrum");
    }

    #[test]
    fn zeta_algebra() {
        assert_eq!(Zeta::I * Zeta::I, Zeta::MinusOne);
        assert_eq!(Zeta::i_pow(3), Zeta::MinusI);
        assert_eq!(Zeta::MinusI.negate(), Zeta::I);
        assert_eq!(Zeta::from_sign(3, 3, -1), Zeta::MinusI);
        assert_eq!(Zeta::from_sign(5, 3, -1), Zeta::MinusOne);
        assert_eq!(Zeta::from_sign(3, 4, 1), Zeta::One);
    }
}
