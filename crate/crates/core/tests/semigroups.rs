use std::collections::BTreeSet;

use monoscroll::catalog::enumerate_semigroups;
use monoscroll::{NumericalSemigroup, Shift};
use proptest::prelude::*;

/// Membership of every `x ≤ bound` by breadth-first closure of the generators.
fn members_up_to(gens: &[u32], bound: u32) -> BTreeSet<u32> {
    let mut seen = BTreeSet::from([0u32]);
    let mut frontier = vec![0u32];
    while let Some(x) = frontier.pop() {
        for &g in gens {
            let y = x + g;
            if y <= bound && seen.insert(y) {
                frontier.push(y);
            }
        }
    }
    seen
}

fn generators() -> impl Strategy<Value = Vec<u32>> {
    prop::collection::vec(2u32..=20, 1..=4)
        .prop_filter("gcd 1", |g| g.iter().fold(0, |a, &b| num_gcd(a, b)) == 1)
}

fn num_gcd(a: u32, b: u32) -> u32 {
    if b == 0 {
        a
    } else {
        num_gcd(b, a % b)
    }
}

// Window wide enough to contain every gap and the sums that matter.
fn window(s: &NumericalSemigroup) -> i64 {
    3 * s.conductor() as i64 + 10
}

proptest! {
    #[test]
    fn matches_closure_oracle(gens in generators()) {
        let s = NumericalSemigroup::from_generators(&gens).unwrap();
        let bound = window(&s) as u32;
        let oracle = members_up_to(&gens, bound);
        for x in 0..=bound {
            prop_assert_eq!(s.contains(x as i64), oracle.contains(&x), "x = {}", x);
        }
        let gaps: Vec<u32> = (0..=bound).filter(|x| !oracle.contains(x)).collect();
        prop_assert_eq!(s.gaps(), gaps.clone());
        prop_assert_eq!(s.delta() as usize, gaps.len());
        prop_assert_eq!(s.frobenius(), gaps.last().map_or(-1, |&f| f as i64));
        prop_assert_eq!(NumericalSemigroup::from_gaps(&gaps).unwrap(), s.clone());
        // Minimal generators regenerate the same semigroup and none is redundant.
        let again = NumericalSemigroup::from_generators(s.generators()).unwrap();
        prop_assert_eq!(&again, &s);
        for &g in s.generators() {
            let others: Vec<u32> = s.generators().iter().copied().filter(|&h| h != g).collect();
            prop_assert!(!members_up_to(&others, g).contains(&g));
        }
    }

    #[test]
    fn canonical_ideal_and_eta(gens in generators()) {
        let s = NumericalSemigroup::from_generators(&gens).unwrap();
        let f = s.frobenius();
        let k = s.canonical_ideal();
        let w = window(&s);
        for a in -w..=w {
            prop_assert_eq!(k.contains(a), !s.contains(f - a));
        }
        let eta = (0..=f).filter(|&a| !s.contains(a) && !s.contains(f - a)).count() as u32;
        prop_assert_eq!(s.eta(), eta);
        prop_assert_eq!(s.eta() as i64, 2 * s.delta() as i64 - s.conductor() as i64);
        prop_assert_eq!(s.is_symmetric(), s.eta() == 0);
        prop_assert_eq!(s.is_symmetric(), k == s.as_intset());
        prop_assert!(s.as_intset().is_subset(&k));
    }

    #[test]
    fn blowup_matches_windowed_sumsets(gens in generators()) {
        let s = NumericalSemigroup::from_generators(&gens).unwrap();
        let k = s.canonical_ideal();
        let w = window(&s);
        // Every member of nK is at least 0, so sums up to w only use members up to w.
        let base: BTreeSet<i64> = (0..=w).filter(|&a| k.contains(a)).collect();
        let mut acc = base.clone();
        loop {
            let next: BTreeSet<i64> = acc
                .iter()
                .flat_map(|&x| base.iter().map(move |&y| x + y))
                .filter(|&z| z <= w)
                .chain(acc.iter().copied())
                .collect();
            if next == acc {
                break;
            }
            acc = next;
        }
        let blowup = s.blowup_values();
        for a in 0..=w {
            prop_assert_eq!(blowup.contains(a), acc.contains(&a), "a = {}", a);
        }
        let mu = (0..=w).filter(|a| acc.contains(a) && !base.contains(a)).count() as u32;
        prop_assert_eq!(s.mu(), mu);
        prop_assert!(k.is_subset(&blowup));
        prop_assert_eq!(s.is_symmetric(), s.mu() == 0 && s.eta() == 0);
    }

    #[test]
    fn shift_degrees_count_missing_values(gens in generators(), r in 1u32..30) {
        let s = NumericalSemigroup::from_generators(&gens).unwrap();
        let w = window(&s) + r as i64;
        let up = (0..=w).filter(|&x| s.contains(x - r as i64) && !s.contains(x)).count() as u32;
        let down = (-(r as i64)..=w).filter(|&x| s.contains(x + r as i64) && !s.contains(x)).count() as u32;
        prop_assert_eq!(s.shift_degree(r, Shift::Up), up);
        prop_assert_eq!(s.shift_degree(r, Shift::Down), down);
    }
}

/// Gap sets of size `g` inside `[1, 2g − 1]` whose complement is closed under addition.
fn brute_force(g: u32) -> Vec<Vec<u32>> {
    if g == 0 {
        return vec![vec![]];
    }
    let top = 2 * g - 1;
    let mut out = Vec::new();
    for mask in 0u32..(1 << top) {
        if mask.count_ones() != g {
            continue;
        }
        let gaps: Vec<u32> = (1..=top).filter(|x| mask & (1 << (x - 1)) != 0).collect();
        let gap = |x: u32| gaps.contains(&x);
        let closed = (1..=top).all(|x| gap(x) || (x..=top - x).all(|y| gap(y) || !gap(x + y)));
        if closed {
            out.push(gaps);
        }
    }
    out.sort();
    out
}

#[test]
fn enumeration_matches_brute_force() {
    let mut counts = Vec::new();
    for g in 0..=8 {
        let tree: Vec<Vec<u32>> = enumerate_semigroups(g).unwrap().iter().map(|s| s.gaps()).collect();
        assert_eq!(tree, brute_force(g), "genus {g}");
        counts.push(tree.len());
    }
    assert_eq!(counts, vec![1, 1, 2, 4, 7, 12, 23, 39, 67]);
}

#[test]
fn enumeration_is_sorted_and_distinct() {
    let list = enumerate_semigroups(10).unwrap();
    assert_eq!(list.len(), 204);
    let gaps: Vec<Vec<u32>> = list.iter().map(|s| s.gaps()).collect();
    assert!(gaps.windows(2).all(|w| w[0] < w[1]));
    assert!(list.iter().all(|s| s.delta() == 10));
}
