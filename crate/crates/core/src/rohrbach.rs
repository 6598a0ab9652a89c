//! The Rohrbach problem for additive 2-bases.
//!
//! For a finite set `A` of nonnegative integers, `n(A)` is the least integer
//! missing from `A + A` (−1 when `0 ∉ A`). [`rohrbach_max`] finds
//! `n̄(r) = max { n(A) : |A| = r }` exactly by depth-first branch and bound.

use std::sync::atomic::{AtomicBool, AtomicI64, AtomicU64, Ordering};

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};

/// Default node budget for [`rohrbach_max`].
pub const DEFAULT_BUDGET: u64 = 100_000_000;

const KNOWN: [i64; 25] = [
    1, 3, 5, 9, 13, 17, 21, 27, 33, 41, 47, 55, 65, 73, 81, 93, 105, 117, 129, 141, 153, 165, 181,
    197, 213,
];

/// Tabulated `n̄(r)` for `1 <= r <= 25`.
pub fn known_table(r: usize) -> Result<i64> {
    if (1..=KNOWN.len()).contains(&r) {
        Ok(KNOWN[r - 1])
    } else {
        Err(Error::OutOfTable(r))
    }
}

/// `n(A)`: the first integer not in `A + A`, or −1 if `0 ∉ A`.
pub fn n_of_set(a: &[u64]) -> i64 {
    if !a.contains(&0) {
        return -1;
    }
    let mut sums: Vec<u64> = a
        .iter()
        .enumerate()
        .flat_map(|(i, &x)| a[i..].iter().map(move |&y| x + y))
        .collect();
    sums.sort_unstable();
    sums.dedup();
    sums.iter()
        .enumerate()
        .take_while(|&(i, &s)| i as u64 == s)
        .count() as i64
}

/// A finite set of nonnegative integers with its reach `n(A)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RohrbachSet {
    elements: Vec<u64>,
    reach: i64,
}

impl RohrbachSet {
    pub fn new(mut elements: Vec<u64>) -> Self {
        elements.sort_unstable();
        elements.dedup();
        let reach = n_of_set(&elements);
        RohrbachSet { elements, reach }
    }

    pub fn elements(&self) -> &[u64] {
        &self.elements
    }

    pub fn reach(&self) -> i64 {
        self.reach
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RohrbachSolution {
    pub value: i64,
    pub witness: RohrbachSet,
    pub nodes: u64,
}

/// Sum-set bitset for the search; sums stay below `r(r+1)`.
#[derive(Clone)]
struct SumSet {
    words: Vec<u64>,
}

impl SumSet {
    fn new(bits: usize) -> Self {
        SumSet {
            words: vec![0; bits.div_ceil(64)],
        }
    }

    #[inline]
    fn insert(&mut self, s: usize) {
        self.words[s >> 6] |= 1 << (s & 63);
    }

    /// Length of the initial run of set bits.
    fn reach(&self) -> i64 {
        let mut n = 0;
        for &w in &self.words {
            let ones = w.trailing_ones() as i64;
            n += ones;
            if ones < 64 {
                break;
            }
        }
        n
    }

    fn count(&self) -> i64 {
        self.words.iter().map(|w| w.count_ones() as i64).sum()
    }

    fn with(&self, elements: &[u64], x: u64) -> SumSet {
        let mut next = self.clone();
        for &a in elements {
            next.insert((a + x) as usize);
        }
        next.insert((2 * x) as usize);
        next
    }
}

struct Shared {
    budget: u64,
    nodes: AtomicU64,
    best: AtomicI64,
    exhausted: AtomicBool,
}

struct Branch<'a> {
    r: usize,
    shared: &'a Shared,
    best: i64,
    witness: Vec<u64>,
    local_nodes: u64,
}

impl Branch<'_> {
    /// Upper bound on the final reach from a prefix with `k` elements, sum-set
    /// size `count` and reach `n`. Each further element at most maps `n` to
    /// `2n + 1`, and the final reach never exceeds the number of sums.
    fn upper_bound(&self, k: usize, count: i64, n: i64) -> i64 {
        let j = (self.r - k) as i64;
        let doubling = if j >= 62 {
            i64::MAX
        } else {
            (n + 1).saturating_mul(1 << j) - 1
        };
        let sums = count + j * k as i64 + j * (j + 1) / 2;
        doubling.min(sums)
    }

    fn tick(&mut self) -> bool {
        self.local_nodes += 1;
        if self.local_nodes.is_multiple_of(4096) {
            let total = self.shared.nodes.fetch_add(4096, Ordering::Relaxed) + 4096;
            if total > self.shared.budget {
                self.shared.exhausted.store(true, Ordering::Relaxed);
            }
        }
        !self.shared.exhausted.load(Ordering::Relaxed)
    }

    fn dfs(&mut self, elements: &mut Vec<u64>, sums: &SumSet) {
        if !self.tick() {
            return;
        }
        let n = sums.reach();
        let k = elements.len();
        if k == self.r {
            if n > self.best {
                self.best = n;
                self.witness = elements.clone();
                self.shared.best.fetch_max(n, Ordering::Relaxed);
            }
            return;
        }
        let ub = self.upper_bound(k, sums.count(), n);
        if ub <= self.best || ub < self.shared.best.load(Ordering::Relaxed) {
            return;
        }
        let last = *elements.last().expect("prefix contains 0");
        // an element beyond the current reach leaves n uncovered for good
        for x in last + 1..=n as u64 {
            let next = sums.with(elements, x);
            elements.push(x);
            self.dfs(elements, &next);
            elements.pop();
        }
    }
}

/// Prefixes `0 = a_1 < ... < a_k` obeying the reach constraint, in
/// lexicographic order.
fn prefixes(depth: usize, bits: usize) -> Vec<(Vec<u64>, SumSet)> {
    let mut root = SumSet::new(bits);
    root.insert(0);
    let mut level = vec![(vec![0u64], root)];
    for _ in 1..depth {
        let mut next = Vec::new();
        for (elements, sums) in &level {
            let n = sums.reach() as u64;
            for x in elements.last().unwrap() + 1..=n {
                let mut e = elements.clone();
                e.push(x);
                next.push((e, sums.with(elements, x)));
            }
        }
        level = next;
    }
    level
}

/// Exact `n̄(r)` with the lexicographically smallest witness.
///
/// Fails with [`Error::BudgetExceeded`] when more than `budget` search nodes
/// would be visited; the error carries the best set found so far as a lower
/// bound.
pub fn rohrbach_max(r: usize, budget: u64) -> Result<RohrbachSolution> {
    if r == 0 {
        return Err(Error::BadParameters("r must be at least 1".into()));
    }
    if r > 60 {
        return Err(Error::InputTooLarge(format!("r = {r}")));
    }
    let bits = r * (r + 1) + 2;
    let shared = Shared {
        budget,
        nodes: AtomicU64::new(0),
        best: AtomicI64::new(-1),
        exhausted: AtomicBool::new(false),
    };
    let jobs = prefixes(r.min(5), bits);
    let results: Vec<(i64, Vec<u64>, u64)> = jobs
        .into_par_iter()
        .map(|(mut elements, sums)| {
            let mut branch = Branch {
                r,
                shared: &shared,
                best: -1,
                witness: Vec::new(),
                local_nodes: 0,
            };
            branch.dfs(&mut elements, &sums);
            (branch.best, branch.witness, branch.local_nodes)
        })
        .collect();

    let nodes: u64 = results.iter().map(|r| r.2).sum();
    // jobs are in lexicographic order, so the first maximum is the smallest
    let (value, witness) = results
        .into_iter()
        .fold((-1, Vec::new()), |acc, (v, w, _)| if v > acc.0 { (v, w) } else { acc });

    if shared.exhausted.load(Ordering::Relaxed) || nodes > budget {
        return Err(Error::BudgetExceeded {
            budget,
            lower_bound: value,
            witness: witness.into_iter().map(|x| x as i64).collect(),
        });
    }
    Ok(RohrbachSolution {
        value,
        witness: RohrbachSet::new(witness),
        nodes,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    /// Exhaustive maximum over all r-subsets of `{0, .., limit - 1}`.
    fn brute_max(r: usize, limit: u64) -> (i64, Vec<u64>) {
        fn rec(start: u64, limit: u64, left: usize, cur: &mut Vec<u64>, best: &mut (i64, Vec<u64>)) {
            if left == 0 {
                let n = n_of_set(cur);
                if n > best.0 {
                    *best = (n, cur.clone());
                }
                return;
            }
            for x in start..limit {
                cur.push(x);
                rec(x + 1, limit, left - 1, cur, best);
                cur.pop();
            }
        }
        let mut best = (-1, Vec::new());
        rec(0, limit, r, &mut Vec::new(), &mut best);
        best
    }

    #[test]
    fn n_of_set_examples() {
        assert_eq!(n_of_set(&[0]), 1);
        assert_eq!(n_of_set(&[1, 2]), -1);
        assert_eq!(n_of_set(&[0, 1]), 3);
        assert_eq!(n_of_set(&[0, 1, 3, 4]), 9);
    }

    #[test]
    fn table_examples() {
        assert_eq!(known_table(5), Ok(13));
        assert_eq!(known_table(13), Ok(65));
        assert_eq!(known_table(25), Ok(213));
        assert_eq!(known_table(0), Err(Error::OutOfTable(0)));
        assert_eq!(known_table(26), Err(Error::OutOfTable(26)));
    }

    #[test]
    fn small_exact_values() {
        let s = rohrbach_max(1, DEFAULT_BUDGET).unwrap();
        assert_eq!(s.value, 1);
        assert_eq!(s.witness.elements(), &[0]);
        assert_eq!(rohrbach_max(4, DEFAULT_BUDGET).unwrap().value, 9);
        let s = rohrbach_max(6, DEFAULT_BUDGET).unwrap();
        assert_eq!(s.value, 17);
        assert_eq!(s.witness.reach(), 17);
    }

    #[test]
    fn matches_exhaustive_search() {
        // subsets of {0..=2r^2} cover every candidate, since n(A) <= r(r+1)/2
        for r in 1..=4 {
            let limit = (r * (r + 1) / 2) as u64 + 1;
            let (v, w) = brute_max(r, limit);
            let s = rohrbach_max(r, DEFAULT_BUDGET).unwrap();
            assert_eq!(s.value, v, "r = {r}");
            assert_eq!(s.witness.elements(), w.as_slice(), "lex-smallest witness, r = {r}");
        }
    }

    #[test]
    fn agrees_with_table_and_is_increasing() {
        let mut prev = 0;
        for r in 1..=6 {
            let s = rohrbach_max(r, DEFAULT_BUDGET).unwrap();
            assert_eq!(s.value, known_table(r).unwrap());
            assert!(s.value > prev);
            prev = s.value;
            let w = s.witness.elements();
            assert_eq!(w.len(), r);
            assert_eq!(n_of_set(w), s.value);
            assert!(w.iter().all(|&x| (x as i64) < s.value));
        }
    }

    #[test]
    fn budget_exhaustion_reports_lower_bound() {
        match rohrbach_max(12, 1_000) {
            Err(Error::BudgetExceeded { lower_bound, witness, .. }) => {
                if lower_bound >= 0 {
                    let w: Vec<u64> = witness.iter().map(|&x| x as u64).collect();
                    assert_eq!(n_of_set(&w), lower_bound);
                }
                assert!(lower_bound <= 55);
            }
            other => panic!("expected budget error, got {other:?}"),
        }
        assert!(rohrbach_max(0, 10).is_err());
    }

    proptest! {
        #[test]
        fn adding_elements_never_shrinks_reach(
            mut a in prop::collection::vec(0u64..30, 1..6),
            x in 0u64..40,
        ) {
            a.push(0);
            let before = n_of_set(&a);
            a.push(x);
            prop_assert!(n_of_set(&a) >= before);
        }
    }
}
