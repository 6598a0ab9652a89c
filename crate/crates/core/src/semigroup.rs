//! Numerical semigroups and their first-order invariants.
//!
//! A [`NumericalSemigroup`] is built once and never mutated. Membership for
//! the window `[0, F(H) + 1]` is stored as a bitset; every integer above the
//! Frobenius number is a member.

use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::Arc;

use crate::bits::Bits;
use crate::error::{Error, Result};

/// Largest generator accepted by [`NumericalSemigroup::from_generators`].
pub const MAX_GENERATOR: i64 = 1 << 20;

/// Largest Frobenius number for which the membership window is materialized.
pub const MAX_FROBENIUS: i64 = 1 << 22;

const UNREACHED: i64 = i64::MAX;

pub(crate) fn gcd(mut a: i64, mut b: i64) -> i64 {
    a = a.abs();
    b = b.abs();
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

#[derive(PartialEq, Eq)]
struct Inner {
    min_gens: Vec<i64>,
    frobenius: i64,
    gaps: Vec<i64>,
    pf: Vec<i64>,
    /// Apéry set with respect to the multiplicity, indexed by residue.
    apery: Vec<i64>,
    window: Bits,
}

/// A cofinite submonoid of the nonnegative integers.
///
/// Cloning is cheap: the cached data sits behind an `Arc`.
#[derive(Clone)]
pub struct NumericalSemigroup(Arc<Inner>);

impl NumericalSemigroup {
    /// Builds the semigroup generated by `gens`, reduced to its minimal
    /// generating set.
    ///
    /// Generators are scanned in ascending order and kept only when they are
    /// not representable by the ones already kept. Representability is read
    /// off the Apéry table of the kept generators, which is updated with the
    /// round-robin rule each time a generator is kept.
    pub fn from_generators(gens: &[i64]) -> Result<Self> {
        if gens.is_empty() {
            return Err(Error::EmptyGenerators);
        }
        if let Some(&g) = gens.iter().find(|&&g| g < 1) {
            return Err(Error::NonPositiveGenerator(g));
        }
        if let Some(&g) = gens.iter().find(|&&g| g > MAX_GENERATOR) {
            return Err(Error::InputTooLarge(format!(
                "generator {g} exceeds {MAX_GENERATOR}"
            )));
        }
        let d = gens.iter().fold(0, |acc, &g| gcd(acc, g));
        if d != 1 {
            return Err(Error::GcdNotOne(d));
        }

        let mut sorted = gens.to_vec();
        sorted.sort_unstable();
        sorted.dedup();

        let e = sorted[0];
        let mut apery = vec![UNREACHED; e as usize];
        apery[0] = 0;
        let mut min_gens = vec![e];
        for &g in &sorted[1..] {
            if g >= apery[(g % e) as usize] {
                continue;
            }
            round_robin_insert(&mut apery, g);
            min_gens.push(g);
        }
        debug_assert!(apery.iter().all(|&w| w != UNREACHED));

        let frobenius = apery.iter().copied().max().unwrap_or(0) - e;
        if frobenius > MAX_FROBENIUS {
            return Err(Error::InputTooLarge(format!(
                "Frobenius number {frobenius} exceeds {MAX_FROBENIUS}"
            )));
        }

        let window_len = (frobenius + 2) as usize;
        let mut window = Bits::new(window_len);
        let mut gaps = Vec::new();
        for z in 0..window_len as i64 {
            if z >= apery[(z % e) as usize] {
                window.set(z as usize);
            } else {
                gaps.push(z);
            }
        }

        let contains = |z: i64| z > frobenius || (z >= 0 && window.get(z as usize));
        // w in Ap(H, e) is maximal for <=_H iff w + g is not in Ap for every
        // minimal generator g, i.e. w + g - e lies in H.
        let mut pf: Vec<i64> = apery
            .iter()
            .copied()
            .filter(|&w| min_gens.iter().all(|&g| contains(w + g - e)))
            .map(|w| w - e)
            .collect();
        pf.sort_unstable();

        Ok(NumericalSemigroup(Arc::new(Inner {
            min_gens,
            frobenius,
            gaps,
            pf,
            apery,
            window,
        })))
    }

    /// Builds the semigroup whose complement is `gaps`.
    ///
    /// Fails with [`Error::NotASemigroup`] when the complement is not closed
    /// under addition.
    pub fn from_gaps(gaps: &[i64]) -> Result<Self> {
        let mut gaps = gaps.to_vec();
        gaps.sort_unstable();
        gaps.dedup();
        if let Some(&z) = gaps.iter().find(|&&z| z < 1) {
            return Err(Error::NotASemigroup(format!("{z} cannot be a gap")));
        }
        let frobenius = gaps.last().copied().unwrap_or(-1);
        if frobenius > MAX_FROBENIUS {
            return Err(Error::InputTooLarge(format!(
                "Frobenius number {frobenius} exceeds {MAX_FROBENIUS}"
            )));
        }
        let len = (frobenius + 2) as usize;
        let mut member = vec![true; len];
        for &z in &gaps {
            member[z as usize] = false;
        }
        let members: Vec<usize> = (1..len).filter(|&z| member[z]).collect();
        for (i, &a) in members.iter().enumerate() {
            for &b in &members[i..] {
                if a + b >= len {
                    break;
                }
                if !member[a + b] {
                    return Err(Error::NotASemigroup(format!(
                        "{a} and {b} are members but {} is a gap",
                        a + b
                    )));
                }
            }
        }
        Self::from_member_fn(frobenius, |z| z > frobenius || member[z as usize])
    }

    /// Builds a semigroup from a membership predicate that is known to
    /// describe a numerical semigroup with the given Frobenius number.
    pub(crate) fn from_member_fn(frobenius: i64, contains: impl Fn(i64) -> bool) -> Result<Self> {
        let e = (1..=frobenius.max(0) + 1)
            .find(|&z| contains(z))
            .expect("frobenius + 1 is always a member");
        let mut apery = vec![UNREACHED; e as usize];
        let mut missing = e;
        let mut z = 0;
        while missing > 0 {
            let r = (z % e) as usize;
            if apery[r] == UNREACHED && contains(z) {
                apery[r] = z;
                missing -= 1;
            }
            z += 1;
        }
        let mut gens = vec![e];
        gens.extend(apery.iter().copied().filter(|&w| w != 0));
        Self::from_generators(&gens)
    }

    pub fn min_gens(&self) -> &[i64] {
        &self.0.min_gens
    }

    /// F(H); −1 for the full monoid.
    pub fn frobenius(&self) -> i64 {
        self.0.frobenius
    }

    pub fn gaps(&self) -> &[i64] {
        &self.0.gaps
    }

    /// Pseudo-Frobenius numbers, ascending. `{-1}` for the full monoid.
    pub fn pseudo_frobenius(&self) -> &[i64] {
        &self.0.pf
    }

    /// e(H), the smallest nonzero member.
    pub fn multiplicity(&self) -> i64 {
        self.0.min_gens[0]
    }

    /// v(H), the number of minimal generators.
    pub fn embedding_dimension(&self) -> usize {
        self.0.min_gens.len()
    }

    /// r(H) = |PF(H)|.
    pub fn ty(&self) -> usize {
        self.0.pf.len()
    }

    pub fn genus(&self) -> usize {
        self.0.gaps.len()
    }

    pub fn is_full(&self) -> bool {
        self.0.frobenius == -1
    }

    /// Conductor F(H) + 1: every integer from here on is a member.
    pub fn conductor(&self) -> i64 {
        self.0.frobenius + 1
    }

    #[inline]
    pub fn contains(&self, z: i64) -> bool {
        if z > self.0.frobenius {
            true
        } else if z < 0 {
            false
        } else {
            self.0.window.get(z as usize)
        }
    }

    /// Least member of each residue class modulo `n`, indexed by residue.
    pub fn apery(&self, n: i64) -> Result<Vec<i64>> {
        if n <= 0 || !self.contains(n) {
            return Err(Error::NotAMember(n));
        }
        if n == self.multiplicity() {
            return Ok(self.0.apery.clone());
        }
        if n > MAX_GENERATOR.max(self.conductor()) {
            return Err(Error::InputTooLarge(format!("Apéry modulus {n}")));
        }
        Ok((0..n)
            .map(|r| {
                let mut z = r;
                while !self.contains(z) {
                    z += n;
                }
                z
            })
            .collect())
    }

    /// Gorenstein (symmetric) semigroups are exactly those of type 1.
    pub fn is_symmetric(&self) -> bool {
        self.ty() == 1
    }

    /// Embedding dimension equals multiplicity.
    pub fn is_minimal_multiplicity(&self) -> bool {
        self.embedding_dimension() as i64 == self.multiplicity()
    }

    /// Gaps that are maximal for the order `x <=_H y  <=>  y - x in H`.
    ///
    /// Agrees with [`Self::pseudo_frobenius`] whenever the semigroup is not the
    /// full monoid; kept as an independent route for cross-checking.
    pub fn maximal_gaps(&self) -> Vec<i64> {
        let gaps = self.gaps();
        gaps.iter()
            .copied()
            .filter(|&x| gaps.iter().all(|&y| y == x || !self.contains(y - x)))
            .collect()
    }

    pub(crate) fn same_as(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0.min_gens == other.0.min_gens
    }
}

/// Adds generator `g` to an Apéry table modulo `table.len()`.
fn round_robin_insert(table: &mut [i64], g: i64) {
    let e = table.len() as i64;
    let d = gcd(e, g);
    let cycle_len = e / d;
    for start in 0..d {
        // locate the cheapest residue on this cycle of +g steps
        let mut r = start;
        let mut best = start;
        for _ in 0..cycle_len {
            if table[r as usize] < table[best as usize] {
                best = r;
            }
            r = (r + g) % e;
        }
        if table[best as usize] == UNREACHED {
            continue;
        }
        let mut r = best;
        let mut cur = table[r as usize];
        for _ in 1..cycle_len {
            r = (r + g) % e;
            cur = cur.saturating_add(g).min(table[r as usize]);
            table[r as usize] = cur;
        }
    }
}

impl PartialEq for NumericalSemigroup {
    fn eq(&self, other: &Self) -> bool {
        self.same_as(other)
    }
}

impl Eq for NumericalSemigroup {}

impl Hash for NumericalSemigroup {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.0.min_gens.hash(state);
    }
}

impl PartialOrd for NumericalSemigroup {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Canonical order: lexicographic on the minimal generators.
impl Ord for NumericalSemigroup {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0.min_gens.cmp(&other.0.min_gens)
    }
}

impl fmt::Display for NumericalSemigroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<")?;
        for (i, g) in self.0.min_gens.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{g}")?;
        }
        write!(f, ">")
    }
}

impl fmt::Debug for NumericalSemigroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "NumericalSemigroup{self}")
    }
}
