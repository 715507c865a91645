//! Intersection arithmetic on rational normal scrolls `S_{m_1 … m_d}`.
//!
//! The Chow ring is `ℤ[H, F] / (F², H^{d+1}, H^d F, H^d − e H^{d−1} F)` with
//! `e = Σ m_i`, so every class of codimension `c` is `x H^c + y H^{c−1} F`
//! and top-degree classes are integers via `H^d = e`, `H^{d−1} F = 1`.
//!
//! Besides the ring itself this module evaluates the closed formulas for a
//! complete intersection curve `X = D_1 ⋯ D_{d−1}`, `D_i = a_i H + b_i F`:
//!
//! * `ℓ = X·F = Π a_i`;
//! * `deg X = e Π a_i + Σ_i b_i Π_{j≠i} a_j`;
//! * `2p_a − 2 = deg X (a − d) + ℓ (b + e − 2)` with `a = Σ a_i`, `b = Σ b_i`,
//!   checked against the Koszul form `D_1 ⋯ D_{d−1} (Σ D_i − c_1(T_S))`;
//!
//! and section counts `h⁰(O_S(aH + bF))`, both closed-form and by summing
//! over the splitting `Sym^a(⊕ O(m_i)) ⊗ O(b)` on `ℙ¹`.
//!
//! All arithmetic is exact except the real root in
//! [`canonical_scroll_constraints`], which is the only `f64` in the module.

use num_rational::Rational64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Scroll {
    m: Vec<u32>,
}

impl Scroll {
    pub fn new(m: &[u32]) -> Result<Self> {
        if m.is_empty() {
            return Err(Error::EmptyScroll);
        }
        let mut m = m.to_vec();
        m.sort_unstable();
        Ok(Scroll { m })
    }

    pub fn scroll_type(&self) -> &[u32] {
        &self.m
    }

    pub fn dim(&self) -> u32 {
        self.m.len() as u32
    }

    /// Degree `e = Σ m_i`.
    pub fn degree(&self) -> u32 {
        self.m.iter().sum()
    }

    /// Ambient dimension `N = e + d − 1`.
    pub fn ambient_dim(&self) -> u32 {
        self.degree() + self.dim() - 1
    }

    pub fn is_smooth(&self) -> bool {
        self.m[0] >= 1
    }

    pub fn m1(&self) -> u32 {
        self.m[0]
    }
}

/// `a H + b F`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct DivisorClass {
    pub a: i64,
    pub b: i64,
}

impl DivisorClass {
    pub const H: DivisorClass = DivisorClass { a: 1, b: 0 };
    pub const F: DivisorClass = DivisorClass { a: 0, b: 1 };

    pub fn new(a: i64, b: i64) -> Self {
        DivisorClass { a, b }
    }
}

impl std::ops::Add for DivisorClass {
    type Output = DivisorClass;
    fn add(self, o: DivisorClass) -> DivisorClass {
        DivisorClass { a: self.a + o.a, b: self.b + o.b }
    }
}

impl std::ops::Sub for DivisorClass {
    type Output = DivisorClass;
    fn sub(self, o: DivisorClass) -> DivisorClass {
        DivisorClass { a: self.a - o.a, b: self.b - o.b }
    }
}

/// `h H^c + hf H^{c−1} F`. At codimension 0 only `h` is meaningful.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChowClass {
    pub codim: u32,
    pub h: i64,
    pub hf: i64,
}

impl ChowClass {
    pub fn one() -> Self {
        ChowClass { codim: 0, h: 1, hf: 0 }
    }

    pub fn h_power(c: u32) -> Self {
        ChowClass { codim: c, h: 1, hf: 0 }
    }

    /// `H^{c−1} F`; `c ≥ 1`.
    pub fn h_power_f(c: u32) -> Self {
        assert!(c >= 1);
        ChowClass { codim: c, h: 0, hf: 1 }
    }

    pub fn new(codim: u32, h: i64, hf: i64) -> Self {
        ChowClass { codim, h, hf: if codim == 0 { 0 } else { hf } }
    }

    fn mul(self, o: ChowClass) -> ChowClass {
        // F² = 0 kills the hf·hf term.
        ChowClass { codim: self.codim + o.codim, h: self.h * o.h, hf: self.h * o.hf + self.hf * o.h }
    }
}

impl From<DivisorClass> for ChowClass {
    fn from(d: DivisorClass) -> Self {
        ChowClass { codim: 1, h: d.a, hf: d.b }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum ChowProduct {
    /// Total codimension below `d`.
    Class(ChowClass),
    /// Total codimension exactly `d`.
    Degree(i64),
    /// Total codimension above `d`.
    Zero,
}

impl ChowProduct {
    pub fn degree(self) -> Option<i64> {
        match self {
            ChowProduct::Degree(n) => Some(n),
            _ => None,
        }
    }
}

pub fn chow_product(s: &Scroll, classes: &[ChowClass]) -> ChowProduct {
    let d = s.dim();
    let total = classes.iter().fold(ChowClass::one(), |acc, &c| acc.mul(c));
    match total.codim.cmp(&d) {
        std::cmp::Ordering::Less => ChowProduct::Class(total),
        std::cmp::Ordering::Equal => ChowProduct::Degree(total.h * s.degree() as i64 + total.hf),
        std::cmp::Ordering::Greater => ChowProduct::Zero,
    }
}

/// `K_S = −d H + (e − 2) F`.
pub fn canonical_class(s: &Scroll) -> DivisorClass {
    DivisorClass::new(-(s.dim() as i64), s.degree() as i64 - 2)
}

/// `c_1(T_S) = d H + (2 − e) F`.
pub fn first_chern_class(s: &Scroll) -> DivisorClass {
    DivisorClass::new(0, 0) - canonical_class(s)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CiInvariants {
    pub ell: i64,
    pub degree: i64,
    pub genus_closed: i64,
    pub genus_koszul: i64,
    /// Every `D_i` has a nonzero section.
    pub effective: bool,
}

pub fn ci_invariants(s: &Scroll, classes: &[DivisorClass]) -> Result<CiInvariants> {
    let d = s.dim() as usize;
    if classes.len() + 1 != d {
        return Err(Error::ClassCount { expected: d - 1, got: classes.len() });
    }
    let e = s.degree() as i64;
    let ell: i64 = classes.iter().map(|c| c.a).product();
    let mixed: i64 = (0..classes.len())
        .map(|i| classes.iter().enumerate().map(|(j, c)| if i == j { c.b } else { c.a }).product::<i64>())
        .sum();
    let degree = ell * e + mixed;
    let sum = classes.iter().fold(DivisorClass::new(0, 0), |acc, &c| acc + c);
    let twice_closed = degree * (sum.a - d as i64) + ell * (sum.b + e - 2);

    let mut factors: Vec<ChowClass> = classes.iter().map(|&c| c.into()).collect();
    factors.push((sum - first_chern_class(s)).into());
    let twice_koszul = chow_product(s, &factors).degree().expect("codimension d");

    let effective = classes.iter().all(|c| h0_enum(s, c.a, c.b) > 0);
    Ok(CiInvariants {
        ell,
        degree,
        genus_closed: half_plus_one(twice_closed)?,
        genus_koszul: half_plus_one(twice_koszul)?,
        effective,
    })
}

// p from 2p − 2.
fn half_plus_one(twice_minus_two: i64) -> Result<i64> {
    if twice_minus_two % 2 != 0 {
        return Err(Error::OddGenus(twice_minus_two));
    }
    Ok(twice_minus_two / 2 + 1)
}

fn binomial(n: i64, k: i64) -> i64 {
    if k < 0 || n < 0 || k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1i64, |acc, i| acc * (n - i) / (i + 1))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct H0Closed {
    pub value: i64,
    /// `a ≥ 0` and `b ≥ −a m_1`; outside it the value is reported as 0.
    pub in_regime: bool,
}

/// `(b + 1) C(a+d−1, d−1) + e C(a+d−1, d)` in the regime `a ≥ 0, b ≥ −a m_1`.
pub fn h0_closed(s: &Scroll, a: i64, b: i64) -> H0Closed {
    let in_regime = a >= 0 && b >= -a * s.m1() as i64;
    if !in_regime {
        return H0Closed { value: 0, in_regime };
    }
    let d = s.dim() as i64;
    let e = s.degree() as i64;
    H0Closed { value: (b + 1) * binomial(a + d - 1, d - 1) + e * binomial(a + d - 1, d), in_regime }
}

// Calls `f(Σ α_i m_i)` for every composition α of `a` into `m.len()` parts.
fn for_each_weight(m: &[u32], a: i64, f: &mut impl FnMut(i64)) {
    fn rec(m: &[u32], left: i64, acc: i64, f: &mut impl FnMut(i64)) {
        match m {
            [] => {}
            [last] => f(acc + left * *last as i64),
            [first, rest @ ..] => {
                for k in 0..=left {
                    rec(rest, left - k, acc + k * *first as i64, f);
                }
            }
        }
    }
    rec(m, a, 0, f)
}

/// `Σ_α max(0, b + Σ α_i m_i + 1)` over compositions of `a` into `d` parts.
pub fn h0_enum(s: &Scroll, a: i64, b: i64) -> i64 {
    if a < 0 {
        return 0;
    }
    let mut total = 0;
    for_each_weight(&s.m, a, &mut |w| total += (b + w + 1).max(0));
    total
}

/// First cohomology of the same splitting: `Σ_α max(0, −(b + Σ α_i m_i) − 1)`.
pub fn h1_enum(s: &Scroll, a: i64, b: i64) -> i64 {
    if a < 0 {
        return 0;
    }
    let mut total = 0;
    for_each_weight(&s.m, a, &mut |w| total += (-(b + w) - 1).max(0));
    total
}

/// Vanishing regime for higher cohomology: `i ≥ 1, a ≥ 0, b ≥ −(a m_1 + 1)`.
pub fn hi_vanishes(s: &Scroll, i: u32, a: i64, b: i64) -> bool {
    i >= 1 && a >= 0 && b >= -(a * s.m1() as i64 + 1)
}

/// Invariants of a canonical model sitting on a `d`-fold scroll as an `(a, b)`
/// complete intersection.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CanonicalScrollInput {
    pub g: i64,
    pub eta: i64,
    pub mu: i64,
    pub d: i64,
    pub ell: i64,
    pub a: i64,
    pub b: i64,
    pub g_prime: i64,
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub enum EllFromFormula {
    Value(Rational64),
    /// `b = d + 2 − g`: the relation degenerates to `η + 2μ = (d + 1 − a)(2g − 2 − η)`.
    DegenerateDenominator { gorenstein_branch_residual: i64 },
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub enum M1Lower {
    /// `a = d + 1`: `(g − d − 1)/(d + 1)`.
    Exact(Rational64),
    /// General case, contains the real root `ℓ^{1/(d−1)}`.
    Approx(f64),
}

impl M1Lower {
    pub fn as_f64(self) -> f64 {
        match self {
            M1Lower::Exact(q) => *q.numer() as f64 / *q.denom() as f64,
            M1Lower::Approx(x) => x,
        }
    }
}

/// Absolute tolerance for comparisons against [`M1Lower::Approx`].
pub const M1_LOWER_TOLERANCE: f64 = 1e-9;

#[derive(Clone, Debug, PartialEq)]
pub struct CanonicalScrollConstraints {
    /// `(a−d−1)(2g−2−η) + η + 2μ − ℓ(d+2−b−g)`; zero when consistent.
    pub pacan_residual: i64,
    pub ell_from_formula: EllFromFormula,
    /// `ℓ + g − g′`.
    pub gonality_upper: i64,
    /// `(2g − 2 − η)/ℓ`.
    pub md_upper: Rational64,
    pub m1_lower: M1Lower,
    /// `(τ, b)` pairs for `ℓ = d` (τ ∈ −1..=d−3) or `ℓ = d+1` (τ ∈ 0..=d−2).
    pub b_candidates: Vec<(i64, Rational64)>,
}

pub fn canonical_scroll_constraints(inp: &CanonicalScrollInput) -> CanonicalScrollConstraints {
    let CanonicalScrollInput { g, eta, mu, d, ell, a, b, g_prime } = *inp;
    let canon_deg = 2 * g - 2 - eta;
    let numerator = (a - d - 1) * canon_deg + eta + 2 * mu;
    let denominator = d + 2 - b - g;
    let pacan_residual = numerator - ell * denominator;
    let ell_from_formula = if denominator == 0 {
        EllFromFormula::DegenerateDenominator {
            gorenstein_branch_residual: eta + 2 * mu - (d + 1 - a) * canon_deg,
        }
    } else {
        EllFromFormula::Value(Rational64::new(numerator, denominator))
    };
    let m1_lower = if a == d + 1 {
        M1Lower::Exact(Rational64::new(g - d - 1, d + 1))
    } else {
        let nu = (d - 1) as f64 * (ell as f64).powf(1.0 / (d - 1) as f64) - d as f64 - 1.0;
        let first = (g - d - 1) as f64 / (ell + d - 2) as f64;
        let second = (nu * (g - 1) as f64 + 3.0 - ell as f64) / (ell * (d + ell - 2)) as f64;
        M1Lower::Approx(first + second)
    };
    let tau_range = if ell == d {
        Some((-1..=d - 3, d))
    } else if ell == d + 1 {
        Some((0..=d - 2, d + 1))
    } else {
        None
    };
    let b_candidates = tau_range
        .map(|(taus, div)| {
            taus.map(|tau| {
                let b = Rational64::from_integer(-(g - (d + 2)))
                    - Rational64::new(eta + 2 * mu + tau * canon_deg, div);
                (tau, b)
            })
            .collect()
        })
        .unwrap_or_default();
    CanonicalScrollConstraints {
        pacan_residual,
        ell_from_formula,
        gonality_upper: ell + g - g_prime,
        md_upper: Rational64::new(canon_deg, ell),
        m1_lower,
        b_candidates,
    }
}

/// `2g′` for a canonical model of degree `d′` on a surface scroll with fiber degree `ℓ`:
/// `−(g−2)ℓ² + (2d′+g−4)ℓ − 2(d′−1)`.
pub fn surface_scroll_genus_poly(g: i64, d_prime: i64, ell: i64) -> i64 {
    -(g - 2) * ell * ell + (2 * d_prime + g - 4) * ell - 2 * (d_prime - 1)
}

/// `d ≤ ℓ ≤ d + 1`, the window allowed for a nearly Gorenstein curve whose
/// scroll fibers cut out a complete pencil.
pub fn nearly_gorenstein_ell_range_ok(d: i64, ell: i64) -> bool {
    d <= ell && ell <= d + 1
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PencilScrollStats {
    /// `deg − (h⁰ − 1)`.
    pub scroll_dim: i64,
    /// `d − 2h⁰ + 1 + deg_intersection/2`, a strict upper bound on `dim Sing(S)`.
    pub sing_dim_strict_bound: Rational64,
}

pub fn pencil_scroll_stats(deg: i64, h0: i64, deg_intersection: i64, d: i64) -> PencilScrollStats {
    PencilScrollStats {
        scroll_dim: deg - (h0 - 1),
        sing_dim_strict_bound: Rational64::from_integer(d - 2 * h0 + 1) + Rational64::new(deg_intersection, 2),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn scroll(m: &[u32]) -> Scroll {
        Scroll::new(m).unwrap()
    }

    #[test]
    fn chow_relations_on_s13() {
        let s = scroll(&[1, 3]);
        let h = ChowClass::from(DivisorClass::H);
        let f = ChowClass::from(DivisorClass::F);
        assert_eq!(chow_product(&s, &[h, h]), ChowProduct::Degree(4));
        assert_eq!(chow_product(&s, &[h, f]), ChowProduct::Degree(1));
        assert_eq!(chow_product(&s, &[f, f]), ChowProduct::Degree(0));
        assert_eq!(chow_product(&s, &[h, h, h]), ChowProduct::Zero);
        assert_eq!(chow_product(&s, &[h]), ChowProduct::Class(h));
    }

    #[test]
    fn scroll_numerics() {
        let s = scroll(&[3, 2]);
        assert_eq!(s.scroll_type(), &[2, 3]);
        assert_eq!((s.dim(), s.degree(), s.ambient_dim()), (2, 5, 6));
        assert!(s.is_smooth());
        assert!(!scroll(&[0, 2]).is_smooth());
        assert_eq!(Scroll::new(&[]), Err(Error::EmptyScroll));
    }

    #[test]
    fn canonical_classes() {
        assert_eq!(canonical_class(&scroll(&[1, 3])), DivisorClass::new(-2, 2));
        assert_eq!(canonical_class(&scroll(&[1, 1, 3])), DivisorClass::new(-3, 3));
        assert_eq!(canonical_class(&scroll(&[1])), DivisorClass::new(-1, -1));
    }

    #[test]
    fn ci_examples() {
        let inv = ci_invariants(&scroll(&[1, 3]), &[DivisorClass::new(3, -2)]).unwrap();
        assert_eq!((inv.ell, inv.degree, inv.genus_closed, inv.genus_koszul), (3, 10, 6, 6));
        let inv = ci_invariants(&scroll(&[1, 1, 1]), &[DivisorClass::new(1, 2), DivisorClass::new(2, -2)]).unwrap();
        assert_eq!((inv.ell, inv.degree, inv.genus_closed, inv.genus_koszul), (2, 8, 2, 2));
        let s = scroll(&[1, 2, 4]);
        let inv = ci_invariants(&s, &[DivisorClass::H, DivisorClass::H]).unwrap();
        assert_eq!((inv.ell, inv.degree, inv.genus_closed), (1, 7, 0));
        assert_eq!(
            ci_invariants(&s, &[DivisorClass::H]),
            Err(Error::ClassCount { expected: 2, got: 1 })
        );
    }

    #[test]
    fn section_counts() {
        assert_eq!(h0_closed(&scroll(&[2, 3]), 1, 0).value, 7);
        assert_eq!(h0_closed(&scroll(&[1, 3]), 1, 0).value, 6);
        assert_eq!(h0_enum(&scroll(&[1, 3]), 1, 0), 6);
        let out = h0_closed(&scroll(&[1, 3]), 1, -2);
        assert!(!out.in_regime);
        assert_eq!(out.value, 0);
        assert_eq!(h0_enum(&scroll(&[1, 3]), 1, -2), 2);
        assert_eq!(h0_enum(&scroll(&[1, 3]), -1, 5), 0);
    }

    #[test]
    fn vanishing_regime() {
        let s = scroll(&[1, 3]);
        assert!(hi_vanishes(&s, 1, 2, -3));
        assert!(!hi_vanishes(&s, 1, 2, -4));
        assert!(!hi_vanishes(&s, 0, 2, 0));
        assert_eq!(h1_enum(&s, 2, -3), 0);
        assert!(h1_enum(&s, 2, -4) > 0);
    }

    #[test]
    fn constraints_on_nearly_gorenstein_row() {
        let inp = CanonicalScrollInput { g: 8, eta: 2, mu: 1, d: 3, ell: 4, a: 4, b: -4, g_prime: 5 };
        let out = canonical_scroll_constraints(&inp);
        assert_eq!(out.pacan_residual, 0);
        assert_eq!(out.ell_from_formula, EllFromFormula::Value(Rational64::from_integer(4)));
        assert_eq!(out.md_upper, Rational64::from_integer(3));
        assert_eq!(out.gonality_upper, 7);
        // a = d + 1
        assert_eq!(out.m1_lower, M1Lower::Exact(Rational64::new(4, 4)));
        assert_eq!(out.b_candidates.len(), 2);
    }

    #[test]
    fn constraints_degenerate_denominator() {
        let inp = CanonicalScrollInput { g: 8, eta: 0, mu: 0, d: 2, ell: 3, a: 3, b: -4, g_prime: 8 };
        let out = canonical_scroll_constraints(&inp);
        assert!(matches!(out.ell_from_formula, EllFromFormula::DegenerateDenominator { .. }));
    }

    #[test]
    fn gonality_upper_for_kunz_row() {
        let inp = CanonicalScrollInput { g: 8, eta: 1, mu: 1, d: 3, ell: 4, a: 4, b: 0, g_prime: 6 };
        assert_eq!(canonical_scroll_constraints(&inp).gonality_upper, 6);
    }

    #[test]
    fn small_helpers() {
        assert_eq!(surface_scroll_genus_poly(6, 10, 3), 12);
        assert!(nearly_gorenstein_ell_range_ok(3, 4));
        assert!(!nearly_gorenstein_ell_range_ok(3, 1));
        let st = pencil_scroll_stats(3, 2, 0, 3);
        assert_eq!(st.scroll_dim, 2);
        assert_eq!(st.sing_dim_strict_bound, Rational64::from_integer(0));
        assert_eq!(binomial(5, 2), 10);
        assert_eq!(binomial(3, 5), 0);
    }
}
