//! Rational monomial curves `(1 : t^{a_1} : … : t^{a_n})`.
//!
//! Such a curve is smooth away from `P = (1:0:…:0)` and `Q = (0:…:0:1)`.
//! The local ring at `P` has value semigroup `S_P = ⟨a_1, …, a_n⟩`; at `Q`,
//! with local parameter `t^{-1}`, it is `S_Q = ⟨a_n - a_i⟩ ∪ ⟨a_n⟩`.
//! Everything here is computed from those two semigroups.

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::intset::IntSet;
use crate::semigroup::{NumericalSemigroup, Shift};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonomialCurve {
    exponents: Vec<u32>,
    sp: NumericalSemigroup,
    sq: NumericalSemigroup,
}

/// Exponent set `A` of the canonical model; always contains 0, `#A = genus`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct CanonicalExponents(pub Vec<u32>);

impl CanonicalExponents {
    pub fn as_slice(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn gcd(&self) -> u32 {
        self.0.iter().fold(0, |acc, x| acc.gcd(x))
    }

    /// Monomial curve traced out by `A / gcd(A)`.
    pub fn reparametrized_curve(&self) -> Result<MonomialCurve> {
        let g = self.gcd();
        if g == 0 {
            // A = {0}: a point.
            return Err(Error::GenusTooSmall(1));
        }
        let exps: Vec<u32> = self.0.iter().filter(|&&a| a > 0).map(|a| a / g).collect();
        MonomialCurve::new(&exps)
    }
}

/// Value-set computation of `deg(V) = 2g - 2` for `V = O⟨t^a : a ∈ A⟩`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegreeOracle {
    pub dim_p: u32,
    pub dim_q: u32,
    pub h0: u32,
    /// Whether `∪_{a∈A}(a + S_P)` equals the canonical ideal `K_P`.
    pub p_values_match_canonical_ideal: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Classification {
    pub gorenstein_p: bool,
    pub gorenstein_q: bool,
    pub gorenstein: bool,
    pub eta_p: u32,
    pub eta_q: u32,
    pub mu_p: u32,
    pub mu_q: u32,
    pub eta: u32,
    pub mu: u32,
    pub kunz: bool,
    pub almost_gorenstein: bool,
    pub nearly_gorenstein: bool,
    pub nearly_normal: bool,
    pub g_prime: u32,
}

impl MonomialCurve {
    /// `exponents` are `a_1 < … < a_n`; the leading 0 is implicit.
    pub fn new(exponents: &[u32]) -> Result<Self> {
        if exponents.is_empty() {
            return Err(Error::Empty);
        }
        if exponents[0] == 0 {
            return Err(Error::ZeroEntry);
        }
        if exponents.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::NotIncreasing(exponents.to_vec()));
        }
        let sp = NumericalSemigroup::from_generators(exponents)?;
        let top = *exponents.last().unwrap();
        let at_q: Vec<u32> = exponents.iter().map(|a| top - a).filter(|&x| x > 0).chain([top]).collect();
        let sq = NumericalSemigroup::from_generators(&at_q)?;
        Ok(MonomialCurve { exponents: exponents.to_vec(), sp, sq })
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exponents
    }

    pub fn degree(&self) -> u32 {
        *self.exponents.last().unwrap()
    }

    pub fn semigroup_p(&self) -> &NumericalSemigroup {
        &self.sp
    }

    pub fn semigroup_q(&self) -> &NumericalSemigroup {
        &self.sq
    }

    pub fn genus(&self) -> u32 {
        self.sp.delta() + self.sq.delta()
    }

    /// `A = (γ_P − G_P) ∪ (γ_P + G_Q)`, without the genus check.
    pub fn canonical_exponent_set(&self) -> Vec<u32> {
        let f = self.sp.frobenius();
        let mut a: Vec<u32> = self
            .sp
            .gaps()
            .iter()
            .map(|&l| (f - l as i64) as u32)
            .chain(self.sq.gaps().iter().map(|&l| (f + l as i64) as u32))
            .collect();
        a.sort_unstable();
        a
    }

    pub fn canonical_model(&self) -> Result<CanonicalExponents> {
        let g = self.genus();
        if g <= 1 {
            return Err(Error::GenusTooSmall(g));
        }
        Ok(CanonicalExponents(self.canonical_exponent_set()))
    }

    /// Computes the local contributions to `deg(O⟨t^a : a ∈ A⟩)` directly from value sets.
    pub fn canonical_degree_oracle(&self) -> Result<DegreeOracle> {
        let a = self.canonical_model()?;
        let sp = self.sp.as_intset();
        let sq = self.sq.as_intset();
        let vp = a
            .as_slice()
            .iter()
            .map(|&x| sp.shifted(x as i64))
            .reduce(|acc, s| acc.union(&s))
            .unwrap();
        let vq = a
            .as_slice()
            .iter()
            .map(|&x| sq.shifted(-(x as i64)))
            .reduce(|acc, s| acc.union(&s))
            .unwrap();
        Ok(DegreeOracle {
            dim_p: vp.count_minus(&sp) as u32,
            dim_q: vq.count_minus(&sq) as u32,
            h0: a.len() as u32,
            p_values_match_canonical_ideal: vp == self.sp.canonical_ideal(),
        })
    }

    pub fn classify(&self) -> Classification {
        let (eta_p, mu_p) = (self.sp.eta(), self.sp.mu());
        let (eta_q, mu_q) = (self.sq.eta(), self.sq.mu());
        let gorenstein_p = self.sp.is_symmetric();
        let gorenstein_q = self.sq.is_symmetric();
        let points = [(&self.sp, eta_p, mu_p), (&self.sq, eta_q, mu_q)];
        let non_gorenstein = points.iter().filter(|(s, _, _)| !s.is_symmetric());
        let kunz = non_gorenstein.clone().all(|&(_, eta, _)| eta == 1);
        let almost_gorenstein = non_gorenstein.clone().all(|&(_, _, mu)| mu == 1);
        let nearly_normal = points
            .iter()
            .filter(|(s, _, _)| s.delta() > 0)
            .map(|(s, _, _)| s.conductor() - s.delta())
            .sum::<u32>()
            == 1;
        let eta = eta_p + eta_q;
        let mu = mu_p + mu_q;
        Classification {
            gorenstein_p,
            gorenstein_q,
            gorenstein: gorenstein_p && gorenstein_q,
            eta_p,
            eta_q,
            mu_p,
            mu_q,
            eta,
            mu,
            kunz,
            almost_gorenstein,
            nearly_gorenstein: mu == 1,
            nearly_normal,
            g_prime: self.canonical_genus(),
        }
    }

    /// Genus of the canonical model, read off the reparametrized curve `A / gcd(A)`.
    ///
    /// Below genus 2 there is no canonical map; those curves are Gorenstein
    /// and the genus itself is returned.
    pub fn canonical_genus(&self) -> u32 {
        match self.canonical_model() {
            Ok(a) => a.reparametrized_curve().map_or(0, |c| c.genus()),
            Err(_) => self.genus(),
        }
    }

    /// Degree of the pencil `O⟨1, t^r⟩`.
    pub fn pencil_degree(&self, r: u32) -> u32 {
        self.sp.shift_degree(r, Shift::Up) + self.sq.shift_degree(r, Shift::Down)
    }

    /// Upper end of the pencil search range, `γ_P + γ_Q + 2` (at least 1).
    pub fn pencil_search_bound(&self) -> u32 {
        (self.sp.frobenius() + self.sq.frobenius() + 2).max(1) as u32
    }

    /// `(r, pencil_degree(r))` for every `r` in the search range.
    pub fn pencil_degrees(&self) -> Vec<(u32, u32)> {
        (1..=self.pencil_search_bound()).map(|r| (r, self.pencil_degree(r))).collect()
    }

    /// Least pencil degree over the search range and every `r` attaining it.
    pub fn min_pencil_degree(&self) -> (u32, Vec<u32>) {
        let table = self.pencil_degrees();
        let min = table.iter().map(|&(_, d)| d).min().unwrap();
        (min, table.iter().filter(|&&(_, d)| d == min).map(|&(r, _)| r).collect())
    }

    /// Exponents of `H⁰(O_C(mQ))`: the members of `S_P` up to `m`. Needs `Q` smooth.
    pub fn sections_with_pole_at_infinity(&self, m: u32) -> Result<Vec<u32>> {
        if self.sq.delta() > 0 {
            return Err(Error::SingularAtInfinity(self.sq.delta()));
        }
        Ok((0..=m).filter(|&s| self.sp.contains(s as i64)).collect())
    }

    /// `h⁰(O_C(H)) − h⁰(O_C(H − rQ))` with `H = a_n Q`.
    pub fn scroll_dim_via_pencil(&self, r: u32) -> Result<i64> {
        let top = self.degree();
        let full = self.sections_with_pole_at_infinity(top)?.len() as i64;
        let reduced = match top.checked_sub(r) {
            Some(m) => self.sections_with_pole_at_infinity(m)?.len() as i64,
            None => 0,
        };
        Ok(full - reduced)
    }
}

/// `true` when `vp` is a relative ideal of `s`; used by the oracle tests.
pub fn is_relative_ideal(values: &IntSet, s: &NumericalSemigroup) -> bool {
    values.is_stable_under(&s.as_intset())
}
