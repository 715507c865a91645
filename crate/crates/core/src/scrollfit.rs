//! Partitions of a monomial exponent set into arithmetic progressions.
//!
//! A monomial curve with exponent set `A` lies on the scroll
//! `S_{m_1 … m_d}` exactly when `A` splits into `d` progressions with a
//! common difference `r` and `m_i + 1` terms each. For a fixed `r` the
//! partition with fewest parts is forced: cut `A` into maximal `r`-chains
//! `{x, x+r, …, x+kr}`. Any difference-`r` progression inside `A` sits in a
//! single maximal chain, so no partition uses fewer parts than there are
//! chains, and the chains themselves attain that count. The number of
//! parts is therefore the number of chain heads `#{x ∈ A : x − r ∉ A}`.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::curve::MonomialCurve;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct APFit {
    pub r: u32,
    /// Maximal chains, ordered by their first element.
    pub parts: Vec<Vec<u32>>,
    /// `m_1 ≤ … ≤ m_d` with `m_i = len(part) − 1`.
    pub scroll_type: Vec<u32>,
    /// No part is a singleton.
    pub smooth: bool,
}

impl APFit {
    pub fn dimension(&self) -> usize {
        self.parts.len()
    }
}

pub fn fit_with_difference(a: &[u32], r: u32) -> Result<APFit> {
    if a.is_empty() {
        return Err(Error::Empty);
    }
    if r == 0 {
        return Err(Error::ZeroDifference);
    }
    let set: BTreeSet<u32> = a.iter().copied().collect();
    let mut parts = Vec::new();
    for &x in &set {
        if x >= r && set.contains(&(x - r)) {
            continue;
        }
        let mut chain = vec![x];
        let mut next = x + r;
        while set.contains(&next) {
            chain.push(next);
            next += r;
        }
        parts.push(chain);
    }
    let mut scroll_type: Vec<u32> = parts.iter().map(|p: &Vec<u32>| p.len() as u32 - 1).collect();
    scroll_type.sort_unstable();
    let smooth = scroll_type.iter().all(|&m| m >= 1);
    Ok(APFit { r, parts, scroll_type, smooth })
}

/// Number of maximal `r`-chains, without building them.
pub fn part_count(a: &[u32], r: u32) -> usize {
    let set: BTreeSet<u32> = a.iter().copied().collect();
    set.iter().filter(|&&x| x < r || !set.contains(&(x - r))).count()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BestFit {
    /// Fit at the smallest minimizing difference.
    pub fit: APFit,
    /// Every `r ∈ [1, max A]` attaining the minimum, ascending.
    pub minimizers: Vec<u32>,
    /// Minimizers whose fit is smooth.
    pub smooth_minimizers: Vec<u32>,
    pub gonality: u32,
}

/// Fewest-parts fit over `r ∈ [1, max A]`. Differences beyond `max A` give
/// all-singleton partitions, so the range is exhaustive.
pub fn best_fit(a: &[u32]) -> Result<BestFit> {
    if a.is_empty() {
        return Err(Error::Empty);
    }
    let top = *a.iter().max().unwrap();
    let counts: Vec<(u32, usize)> = (1..=top.max(1)).map(|r| (r, part_count(a, r))).collect();
    let min = counts.iter().map(|&(_, c)| c).min().unwrap();
    let minimizers: Vec<u32> = counts.iter().filter(|&&(_, c)| c == min).map(|&(r, _)| r).collect();
    let fit = fit_with_difference(a, minimizers[0])?;
    let smooth_minimizers = minimizers
        .iter()
        .copied()
        .filter(|&r| fit_with_difference(a, r).is_ok_and(|f| f.smooth))
        .collect();
    Ok(BestFit { fit, minimizers, smooth_minimizers, gonality: min as u32 + 1 })
}

pub fn gonality_of_exponents(a: &[u32]) -> Result<u32> {
    best_fit(a).map(|b| b.gonality)
}

/// Gonality of a monomial curve, with the fitted scroll of its canonical model.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CurveGonality {
    pub gonality: u32,
    /// `None` below genus 2, where no canonical model exists.
    pub best: Option<BestFit>,
}

/// Genus 0 has gonality 1 and genus 1 gonality 2; from genus 2 on the
/// answer comes from the fewest-parts partition of the canonical exponents.
pub fn curve_gonality(c: &MonomialCurve) -> CurveGonality {
    match c.genus() {
        0 => CurveGonality { gonality: 1, best: None },
        1 => CurveGonality { gonality: 2, best: None },
        _ => {
            let a = c.canonical_model().expect("genus >= 2");
            let best = best_fit(a.as_slice()).expect("nonempty");
            CurveGonality { gonality: best.gonality, best: Some(best) }
        }
    }
}

/// Two-row determinantal layout of a fitted scroll: one block per chain,
/// one column `(x + ir, x + (i+1)r)` per consecutive pair in the chain.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScrollMatrix {
    pub blocks: Vec<Vec<(u32, u32)>>,
}

impl ScrollMatrix {
    pub fn columns(&self) -> usize {
        self.blocks.iter().map(Vec::len).sum()
    }
}

pub fn scroll_matrix(a: &[u32], r: u32) -> Result<ScrollMatrix> {
    let fit = fit_with_difference(a, r)?;
    let blocks = fit
        .parts
        .iter()
        .filter(|p| p.len() > 1)
        .map(|p| p.windows(2).map(|w| (w[0], w[1])).collect())
        .collect();
    Ok(ScrollMatrix { blocks })
}

impl fmt::Display for ScrollMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cell = |x: u32| format!("t^{x}");
        let width = self
            .blocks
            .iter()
            .flatten()
            .map(|&(x, y)| cell(x).len().max(cell(y).len()))
            .max()
            .unwrap_or(0);
        for row in 0..2 {
            let line: Vec<String> = self
                .blocks
                .iter()
                .map(|b| {
                    b.iter()
                        .map(|&(x, y)| format!("{:>width$}", cell(if row == 0 { x } else { y })))
                        .collect::<Vec<_>>()
                        .join(" ")
                })
                .collect();
            writeln!(f, "( {} )", line.join(" | "))?;
        }
        Ok(())
    }
}
