//! Numerical semigroups and their relative ideals.
//!
//! A numerical semigroup `S ⊆ ℕ` is a cofinite additive submonoid. The
//! invariants used throughout the crate are:
//!
//! * gaps `G = ℕ \ S`, `delta = #G`;
//! * Frobenius number `frobenius = max G` (`-1` for `S = ℕ`);
//! * conductor `conductor = frobenius + 1`;
//! * multiplicity, the least nonzero member.
//!
//! On top of these sit the canonical ideal `K = {a ∈ ℤ : frobenius - a ∉ S}`,
//! the blowup value set `∪_{n ≥ 1} nK`, and the two local measures
//! `eta = #(K \ S)` and `mu = #(blowup \ K)`.

use num_integer::Integer;

use crate::error::{Error, Result};
use crate::intset::IntSet;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct NumericalSemigroup {
    generators: Vec<u32>,
    /// Members in `[0, conductor)`.
    small: Vec<u32>,
    conductor: u32,
}

/// Direction of the shift in [`NumericalSemigroup::shift_degree`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Shift {
    /// `#((S + r) \ S)`
    Up,
    /// `#((S - r) \ S)`, negative members included.
    Down,
}

impl NumericalSemigroup {
    /// The semigroup `ℕ`.
    pub fn naturals() -> Self {
        NumericalSemigroup { generators: vec![1], small: Vec::new(), conductor: 0 }
    }

    /// Additive closure of `gens`. Redundant generators are accepted and dropped.
    pub fn from_generators(gens: &[u32]) -> Result<Self> {
        if gens.is_empty() {
            return Err(Error::Empty);
        }
        if gens.contains(&0) {
            return Err(Error::ZeroEntry);
        }
        let g = gens.iter().fold(0u32, |acc, &x| acc.gcd(&x));
        if g != 1 {
            let mut sorted = gens.to_vec();
            sorted.sort_unstable();
            sorted.dedup();
            return Err(Error::GcdNotOne(sorted, g));
        }
        let m = *gens.iter().min().unwrap() as usize;
        // Reachability sweep; m consecutive members force every later integer in.
        let mut member: Vec<bool> = vec![true];
        let mut run = 1usize;
        let mut n = 0usize;
        while run < m {
            n += 1;
            let hit = gens.iter().any(|&g| (g as usize) <= n && member[n - g as usize]);
            member.push(hit);
            run = if hit { run + 1 } else { 0 };
        }
        // The trailing run of length m starts at n + 1 - m; walk back to its true start.
        let mut conductor = n + 1 - m;
        while conductor > 0 && member[conductor - 1] {
            conductor -= 1;
        }
        Ok(Self::from_membership(&member[..conductor.min(member.len())], conductor as u32))
    }

    /// The semigroup `ℕ \ gaps`. Fails unless the complement is closed under addition.
    pub fn from_gaps(gaps: &[u32]) -> Option<Self> {
        let conductor = gaps.iter().max().map_or(0, |&f| f + 1);
        let member: Vec<bool> = (0..conductor).map(|x| !gaps.contains(&x)).collect();
        if gaps.contains(&0) {
            return None;
        }
        for x in 1..conductor as usize {
            if !member[x] {
                continue;
            }
            for y in x..conductor as usize - x {
                if member[y] && !member[x + y] {
                    return None;
                }
            }
        }
        Some(Self::from_membership(&member, conductor))
    }

    // `member[x]` for x < conductor; everything from the conductor on is in.
    fn from_membership(member: &[bool], conductor: u32) -> Self {
        let small: Vec<u32> = (0..conductor).filter(|&x| member[x as usize]).collect();
        let mut s = NumericalSemigroup { generators: Vec::new(), small, conductor };
        s.generators = s.minimal_generators();
        s
    }

    fn minimal_generators(&self) -> Vec<u32> {
        if self.conductor == 0 {
            return vec![1];
        }
        let m = self.multiplicity();
        // Every minimal generator is below conductor + multiplicity.
        (1..self.conductor + m)
            .filter(|&x| self.contains(x as i64))
            .filter(|&x| {
                !(1..=x / 2).any(|y| self.contains(y as i64) && self.contains((x - y) as i64))
            })
            .collect()
    }

    /// Minimal generating set, ascending.
    pub fn generators(&self) -> &[u32] {
        &self.generators
    }

    /// Members below the conductor, ascending (always starts with 0 unless `S = ℕ`).
    pub fn small_elements(&self) -> &[u32] {
        &self.small
    }

    pub fn conductor(&self) -> u32 {
        self.conductor
    }

    pub fn frobenius(&self) -> i64 {
        self.conductor as i64 - 1
    }

    pub fn multiplicity(&self) -> u32 {
        if self.conductor == 0 {
            1
        } else {
            self.small.get(1).copied().unwrap_or(self.conductor)
        }
    }

    pub fn gaps(&self) -> Vec<u32> {
        (0..self.conductor).filter(|x| self.small.binary_search(x).is_err()).collect()
    }

    /// Number of gaps (the genus of the semigroup).
    pub fn delta(&self) -> u32 {
        self.conductor - self.small.len() as u32
    }

    pub fn contains(&self, x: i64) -> bool {
        x >= self.conductor as i64 || (x >= 0 && self.small.binary_search(&(x as u32)).is_ok())
    }

    pub fn is_naturals(&self) -> bool {
        self.conductor == 0
    }

    /// `a ∈ G ⇔ frobenius - a ∈ S`; equivalent to `conductor = 2 delta`.
    pub fn is_symmetric(&self) -> bool {
        self.conductor == 2 * self.delta()
    }

    pub fn as_intset(&self) -> IntSet {
        IntSet::new(self.small.iter().map(|&x| x as i64), self.conductor as i64)
    }

    /// `K = {a ∈ ℤ : frobenius - a ∉ S}`.
    pub fn canonical_ideal(&self) -> IntSet {
        let f = self.frobenius();
        IntSet::new((0..=f).filter(|&a| !self.contains(f - a)), f + 1)
    }

    /// `#(K \ S)`, the number of gaps `a` with `frobenius - a` also a gap.
    pub fn eta(&self) -> u32 {
        self.canonical_ideal().count_minus(&self.as_intset()) as u32
    }

    /// Stable union of the sumset iterates `K ⊆ 2K ⊆ 3K ⊆ …`.
    pub fn blowup_values(&self) -> IntSet {
        let k = self.canonical_ideal();
        let mut acc = k.clone();
        // Strictly increasing chain inside ℕ with a fixed tail: at most `conductor` steps.
        for _ in 0..=self.conductor {
            let next = acc.sumset(&k);
            if next == acc {
                break;
            }
            acc = next;
        }
        acc
    }

    /// `#(blowup \ K)`.
    pub fn mu(&self) -> u32 {
        self.blowup_values().count_minus(&self.canonical_ideal()) as u32
    }

    pub fn shift_degree(&self, r: u32, direction: Shift) -> u32 {
        let s = self.as_intset();
        let shifted = match direction {
            Shift::Up => s.shifted(r as i64),
            Shift::Down => s.shifted(-(r as i64)),
        };
        shifted.count_minus(&s) as u32
    }

    /// `dim(O/C) = #(S ∩ [0, conductor))`.
    pub fn small_count(&self) -> u32 {
        self.small.len() as u32
    }
}

impl std::fmt::Debug for NumericalSemigroup {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "⟨")?;
        for (i, g) in self.generators.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{g}")?;
        }
        write!(f, "⟩")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sg(gens: &[u32]) -> NumericalSemigroup {
        NumericalSemigroup::from_generators(gens).unwrap()
    }

    #[test]
    fn three_seven() {
        let s = sg(&[3, 7]);
        assert_eq!(s.gaps(), vec![1, 2, 4, 5, 8, 11]);
        assert_eq!(s.delta(), 6);
        assert_eq!(s.frobenius(), 11);
        assert_eq!(s.conductor(), 12);
        assert_eq!(s.multiplicity(), 3);
        assert!(s.is_symmetric());
        assert_eq!(s.canonical_ideal(), s.as_intset());
        assert_eq!(s.eta(), 0);
        assert_eq!(s.mu(), 0);
    }

    #[test]
    fn naturals_conventions() {
        let s = sg(&[1]);
        assert!(s.gaps().is_empty());
        assert_eq!(s.delta(), 0);
        assert_eq!(s.frobenius(), -1);
        assert_eq!(s.conductor(), 0);
        assert_eq!(s, NumericalSemigroup::naturals());
        assert_eq!(s.eta(), 0);
        assert_eq!(s.mu(), 0);
        assert_eq!(s.shift_degree(3, Shift::Down), 3);
        assert_eq!(s.shift_degree(3, Shift::Up), 0);
    }

    #[test]
    fn four_nine_eleven() {
        let s = sg(&[4, 9, 11]);
        assert_eq!(s.delta(), 8);
        assert_eq!(s.frobenius(), 14);
        assert_eq!(s.conductor(), 15);
        assert_eq!(s.eta(), 1);
        assert_eq!(s.mu(), 1);
    }

    #[test]
    fn eta_two_and_mu_two() {
        assert_eq!(sg(&[4, 10, 11, 17]).eta(), 2);
        assert_eq!(sg(&[4, 10, 13, 14, 15]).mu(), 2);
    }

    #[test]
    fn redundant_generators_are_dropped() {
        let s = sg(&[6, 3, 9, 10, 12, 13, 14]);
        assert_eq!(s.generators(), &[3, 10, 14]);
        assert_eq!(s.gaps(), vec![1, 2, 4, 5, 7, 8, 11]);
    }

    #[test]
    fn rejects_bad_input() {
        assert!(matches!(NumericalSemigroup::from_generators(&[4, 6]), Err(Error::GcdNotOne(_, 2))));
        assert_eq!(NumericalSemigroup::from_generators(&[]), Err(Error::Empty));
        assert_eq!(NumericalSemigroup::from_generators(&[0, 1]), Err(Error::ZeroEntry));
    }

    #[test]
    fn shift_degrees() {
        let s = sg(&[3, 10, 14]);
        assert_eq!(s.shift_degree(3, Shift::Up), 0);
        assert_eq!(s.shift_degree(1, Shift::Up), 4);
    }

    #[test]
    fn from_gaps_roundtrip_and_rejection() {
        let s = NumericalSemigroup::from_gaps(&[1, 2, 4, 5, 8, 11]).unwrap();
        assert_eq!(s, sg(&[3, 7]));
        assert!(NumericalSemigroup::from_gaps(&[1, 3]).is_some());
        assert!(NumericalSemigroup::from_gaps(&[2]).is_none());
        assert!(NumericalSemigroup::from_gaps(&[1, 2, 4, 6]).is_none());
    }
}
