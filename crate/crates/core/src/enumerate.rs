//! Exhaustive enumeration of numerical semigroups.
//!
//! The genus tree has the full monoid at its root; the children of `H` are
//! `H \ {x}` for each minimal generator `x > F(H)`. Every numerical semigroup
//! of genus `g` appears exactly once at depth `g`.
//!
//! Nodes carry membership as a `u128` mask (bit `z` set iff `z ∈ H`, with all
//! bits above the Frobenius number set). Genus at most 40 keeps every minimal
//! generator below 128.

use rayon::prelude::*;
use serde::Serialize;

use crate::classify::{classify, is_far_flung, FfgRoute, SemigroupReport};
use crate::error::{Error, Result};
use crate::semigroup::NumericalSemigroup;

/// Largest genus accepted by the enumerators.
pub const DEFAULT_CEILING: u32 = 40;

/// Genus below which the tree is expanded sequentially before the subtrees
/// are handed to the thread pool.
const SPLIT_GENUS: u32 = 10;

/// A node of the genus tree.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TreeNode {
    members: u128,
    frobenius: i32,
    multiplicity: i32,
    genus: u32,
}

impl TreeNode {
    pub fn root() -> Self {
        TreeNode {
            members: u128::MAX,
            frobenius: -1,
            multiplicity: 1,
            genus: 0,
        }
    }

    #[inline]
    pub fn contains(&self, z: i32) -> bool {
        z >= 0 && (z > self.frobenius || self.members >> z & 1 == 1)
    }

    pub fn frobenius(&self) -> i64 {
        self.frobenius as i64
    }

    pub fn multiplicity(&self) -> i64 {
        self.multiplicity as i64
    }

    pub fn genus(&self) -> u32 {
        self.genus
    }

    /// Number of pseudo-Frobenius numbers: gaps `x` with `x + (H \ {0}) ⊆ H`.
    pub fn ty(&self) -> usize {
        if self.frobenius < 0 {
            return 1;
        }
        let nonzero = self.members & !1;
        (1..=self.frobenius)
            .filter(|&x| !self.contains(x) && (nonzero << x) & !self.members == 0)
            .count()
    }

    fn is_minimal_generator(&self, y: i32) -> bool {
        let e = self.multiplicity;
        !(e..=y / 2).any(|a| self.contains(a) && self.contains(y - a))
    }

    /// Children in ascending order of the removed generator.
    pub fn children(&self) -> Vec<TreeNode> {
        let lo = (self.frobenius + 1).max(1);
        let hi = self.frobenius + self.multiplicity + 1;
        (lo..=hi)
            .filter(|&y| self.is_minimal_generator(y))
            .map(|y| {
                let members = self.members & !(1u128 << y);
                let multiplicity = if y == self.multiplicity {
                    // next member above the old multiplicity
                    (y + 1..).find(|&z| members >> z & 1 == 1).unwrap()
                } else {
                    self.multiplicity
                };
                TreeNode {
                    members,
                    frobenius: y,
                    multiplicity,
                    genus: self.genus + 1,
                }
            })
            .collect()
    }

    pub fn to_semigroup(&self) -> NumericalSemigroup {
        let node = *self;
        NumericalSemigroup::from_member_fn(self.frobenius(), move |z| node.contains(z as i32))
            .expect("tree nodes are numerical semigroups")
    }
}

fn check_ceiling(max_genus: u32) -> Result<()> {
    if max_genus > DEFAULT_CEILING {
        Err(Error::CeilingExceeded {
            requested: max_genus,
            ceiling: DEFAULT_CEILING,
        })
    } else {
        Ok(())
    }
}

/// Depth-first stream over the genus tree, children in ascending order of
/// the removed generator.
pub struct GenusIter {
    stack: Vec<TreeNode>,
    max_genus: u32,
}

impl Iterator for GenusIter {
    type Item = NumericalSemigroup;

    fn next(&mut self) -> Option<Self::Item> {
        let node = self.stack.pop()?;
        if node.genus < self.max_genus {
            self.stack.extend(node.children().into_iter().rev());
        }
        Some(node.to_semigroup())
    }
}

/// Every numerical semigroup of genus at most `max_genus`, each exactly once.
pub fn enumerate_by_genus(max_genus: u32) -> Result<GenusIter> {
    check_ceiling(max_genus)?;
    Ok(GenusIter {
        stack: vec![TreeNode::root()],
        max_genus,
    })
}

/// Visits the genus tree in parallel.
///
/// `descend(node)` decides whether the subtree below `node` is explored (it
/// must be monotone: once false, false for all descendants); `visit(node)` is
/// applied to every reached node. The result order is deterministic.
pub fn par_visit<T, D, V>(max_genus: u32, descend: D, visit: V) -> Result<Vec<T>>
where
    T: Send,
    D: Fn(&TreeNode) -> bool + Sync,
    V: Fn(&TreeNode) -> Option<T> + Sync,
{
    check_ceiling(max_genus)?;
    let split = max_genus.min(SPLIT_GENUS);
    let mut out = Vec::new();
    let mut frontier = Vec::new();
    let mut stack = vec![TreeNode::root()];
    while let Some(node) = stack.pop() {
        if node.genus == split {
            frontier.push(node);
            continue;
        }
        out.extend(visit(&node));
        if descend(&node) {
            stack.extend(node.children().into_iter().rev());
        }
    }
    let rest: Vec<Vec<T>> = frontier
        .par_iter()
        .map(|&top| {
            let mut acc = Vec::new();
            let mut stack = vec![top];
            while let Some(node) = stack.pop() {
                acc.extend(visit(&node));
                if node.genus < max_genus && descend(&node) {
                    stack.extend(node.children().into_iter().rev());
                }
            }
            acc
        })
        .collect();
    out.extend(rest.into_iter().flatten());
    Ok(out)
}

/// Number of semigroups of each genus `0..=max_genus`.
pub fn count_by_genus(max_genus: u32) -> Result<Vec<u64>> {
    let genera = par_visit(max_genus, |_| true, |n| Some(n.genus))?;
    let mut counts = vec![0u64; max_genus as usize + 1];
    for g in genera {
        counts[g as usize] += 1;
    }
    Ok(counts)
}

/// All semigroups of genus at most `max_genus`, sorted canonically.
pub fn corpus(max_genus: u32) -> Result<Vec<NumericalSemigroup>> {
    let mut all = par_visit(max_genus, |_| true, |n| Some(n.to_semigroup()))?;
    all.par_sort();
    Ok(all)
}

/// Semigroups of multiplicity `m` with Frobenius number at most
/// `max_frobenius`, enumerated through their Apéry sets.
///
/// A vector `w_1, .., w_{m-1}` with `w_i ≡ i (mod m)` and `w_i > 0` is the
/// Apéry set of a semigroup of multiplicity `m` exactly when
/// `w_i + w_j >= w_{(i+j) mod m}` for all `i + j ≢ 0`.
pub fn enumerate_by_multiplicity(m: i64, max_frobenius: i64) -> Result<Vec<NumericalSemigroup>> {
    if m < 1 {
        return Err(Error::BadParameters(format!("multiplicity {m}")));
    }
    if m == 1 {
        return Ok(vec![NumericalSemigroup::from_generators(&[1])?]);
    }
    if m > 64 || max_frobenius > 4096 {
        return Err(Error::InputTooLarge(format!(
            "multiplicity {m} with Frobenius cap {max_frobenius}"
        )));
    }
    let top = max_frobenius + m;
    let mut w = vec![0i64; m as usize];
    let mut out = Vec::new();
    fn rec(i: usize, m: i64, top: i64, w: &mut Vec<i64>, out: &mut Vec<NumericalSemigroup>) {
        if i == m as usize {
            let mut gens = w.clone();
            gens[0] = m;
            out.push(NumericalSemigroup::from_generators(&gens).expect("valid Apéry set"));
            return;
        }
        let mut cand = i as i64 + m;
        while cand <= top {
            w[i] = cand;
            // Kunz inequalities whose indices are all assigned and involve i
            let mu = m as usize;
            let ok = (1..=i).all(|a| {
                (a..=i).all(|b| {
                    let t = (a + b) % mu;
                    t == 0 || t > i || (a != i && b != i && t != i) || w[a] + w[b] >= w[t]
                })
            });
            if ok {
                rec(i + 1, m, top, w, out);
            }
            cand += m;
        }
    }
    rec(1, m, top, &mut w, &mut out);
    out.sort();
    Ok(out)
}

/// One conjunct of an [`EnumerationQuery`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case", tag = "filter", content = "value")]
pub enum Filter {
    Type(usize),
    Multiplicity(i64),
    Ffg(bool),
    NearlyGorenstein(bool),
    MinimalMultiplicity(bool),
    FrobeniusAtMost(i64),
}

impl Filter {
    /// Whether the filter can be decided on a tree node alone.
    fn on_node(&self, n: &TreeNode) -> Option<bool> {
        match *self {
            Filter::Type(k) => Some(n.ty() == k),
            Filter::Multiplicity(m) => Some(n.multiplicity() == m),
            Filter::FrobeniusAtMost(b) => Some(n.frobenius() <= b),
            _ => None,
        }
    }

    fn on_report(&self, r: &SemigroupReport) -> bool {
        match *self {
            Filter::Type(k) => r.semigroup.ty() == k,
            Filter::Multiplicity(m) => r.semigroup.multiplicity() == m,
            Filter::FrobeniusAtMost(b) => r.semigroup.frobenius() <= b,
            Filter::Ffg(b) => r.flags.ffg == b,
            Filter::NearlyGorenstein(b) => r.flags.nearly_gorenstein == b,
            Filter::MinimalMultiplicity(b) => r.flags.minimal_multiplicity == b,
        }
    }

    /// Multiplicity and Frobenius number never decrease down the tree.
    fn allows_descent(&self, n: &TreeNode) -> bool {
        match *self {
            Filter::Multiplicity(m) => n.multiplicity() <= m,
            Filter::FrobeniusAtMost(b) => n.frobenius() <= b,
            _ => true,
        }
    }
}

/// A genus-bounded corpus with a conjunction of filters.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EnumerationQuery {
    pub max_genus: u32,
    pub filters: Vec<Filter>,
}

impl EnumerationQuery {
    pub fn new(max_genus: u32) -> Self {
        EnumerationQuery {
            max_genus,
            filters: Vec::new(),
        }
    }

    pub fn with(mut self, f: Filter) -> Self {
        self.filters.push(f);
        self
    }

    /// Reports of all matching semigroups, sorted canonically.
    pub fn run(&self) -> Result<Vec<SemigroupReport>> {
        let filters = &self.filters;
        let mut out = par_visit(
            self.max_genus,
            |n| filters.iter().all(|f| f.allows_descent(n)),
            |n| {
                if filters.iter().any(|f| f.on_node(n) == Some(false)) {
                    return None;
                }
                let report = classify(&n.to_semigroup());
                filters.iter().all(|f| f.on_report(&report)).then_some(report)
            },
        )?;
        out.sort_by(|a, b| a.semigroup.cmp(&b.semigroup));
        Ok(out)
    }
}

/// Multiplicities attained by far-flung Gorenstein semigroups of type
/// `type_r` and genus at most `max_genus`, each with its canonically
/// smallest witness. Empirical data only.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MultiplicityWitness {
    pub multiplicity: i64,
    pub count: u64,
    pub witness: Vec<i64>,
}

pub fn multiplicity_range(type_r: usize, max_genus: u32) -> Result<Vec<MultiplicityWitness>> {
    let found = par_visit(
        max_genus,
        |_| true,
        |n| {
            if n.genus() == 0 || n.ty() != type_r {
                return None;
            }
            let h = n.to_semigroup();
            is_far_flung(&h, FfgRoute::Definition).then_some(h)
        },
    )?;
    let mut by_e: std::collections::BTreeMap<i64, (u64, NumericalSemigroup)> = Default::default();
    for h in found {
        let entry = by_e.entry(h.multiplicity()).or_insert((0, h.clone()));
        entry.0 += 1;
        if h < entry.1 {
            entry.1 = h;
        }
    }
    Ok(by_e
        .into_iter()
        .map(|(multiplicity, (count, w))| MultiplicityWitness {
            multiplicity,
            count,
            witness: w.min_gens().to_vec(),
        })
        .collect())
}
