//! Relative (monomial fractional) ideals of a numerical semigroup.
//!
//! An ideal is stored as its normalized generator list `G` over an owner `H`;
//! its member set is `G + H`. Exponents may be negative. Every integer at or
//! above the stability bound `min(G) + F(H) + 1` is a member, and membership
//! below it is cached in a bitset.

use std::fmt;

use crate::bits::Bits;
use crate::error::{Error, Result};
use crate::semigroup::NumericalSemigroup;

/// Bound on the absolute value of user-supplied ideal generators.
pub const MAX_IDEAL_GENERATOR: i64 = 1 << 40;

#[derive(Clone)]
pub struct RelativeIdeal {
    owner: NumericalSemigroup,
    gens: Vec<i64>,
    /// membership on `[min(gens), stability_bound)`
    window: Bits,
}

impl RelativeIdeal {
    /// Ideal generated by `gens`, with redundant generators removed.
    pub fn from_gens(owner: &NumericalSemigroup, gens: &[i64]) -> Result<Self> {
        if gens.is_empty() {
            return Err(Error::EmptyGenerators);
        }
        if let Some(&g) = gens.iter().find(|g| g.abs() > MAX_IDEAL_GENERATOR) {
            return Err(Error::InputTooLarge(format!("ideal generator {g}")));
        }
        Ok(Self::normalized(owner, gens.to_vec()))
    }

    /// The principal ideal `z + H`.
    pub fn principal(owner: &NumericalSemigroup, z: i64) -> Self {
        Self::normalized(owner, vec![z])
    }

    /// `H` itself, viewed as an ideal.
    pub fn unit(owner: &NumericalSemigroup) -> Self {
        Self::principal(owner, 0)
    }

    /// Sorts candidates ascending and keeps `g` iff `g - g'` is not in `H`
    /// for every previously kept `g'`.
    fn normalized(owner: &NumericalSemigroup, mut candidates: Vec<i64>) -> Self {
        candidates.sort_unstable();
        candidates.dedup();
        let mut gens: Vec<i64> = Vec::new();
        for g in candidates {
            if gens.iter().all(|&k| !owner.contains(g - k)) {
                gens.push(g);
            }
        }
        let min = gens[0];
        let len = (owner.conductor()) as usize;
        let mut window = Bits::new(len);
        for &g in &gens {
            for z in g..min + len as i64 {
                if owner.contains(z - g) {
                    window.set((z - min) as usize);
                }
            }
        }
        RelativeIdeal {
            owner: owner.clone(),
            gens,
            window,
        }
    }

    /// Builds the ideal whose member set is given by `pred`, given that no
    /// member lies below `lo` and every integer from `full_from` on is one.
    fn from_predicate(
        owner: &NumericalSemigroup,
        lo: i64,
        full_from: i64,
        pred: impl Fn(i64) -> bool,
    ) -> Self {
        // any z > full_from + F lies in full_from + H
        let hi = full_from.max(lo) + owner.conductor();
        let candidates: Vec<i64> = (lo..=hi).filter(|&z| z >= full_from || pred(z)).collect();
        Self::normalized(owner, candidates)
    }

    /// The canonical ideal, generated by `F(H) - α` over the pseudo-Frobenius
    /// numbers `α`.
    pub fn canonical(owner: &NumericalSemigroup) -> Self {
        let f = owner.frobenius();
        let gens = owner.pseudo_frobenius().iter().map(|&a| f - a).collect();
        Self::normalized(owner, gens)
    }

    /// `{z : z >= F(H) + 1}`, the monomial conductor `R : R̄`.
    pub fn conductor(owner: &NumericalSemigroup) -> Self {
        let c = owner.conductor();
        Self::from_predicate(owner, c, c, |_| true)
    }

    /// All nonnegative integers, the monomial integral closure `R̄`.
    pub fn normalization(owner: &NumericalSemigroup) -> Self {
        Self::from_predicate(owner, 0, 0, |_| true)
    }

    pub fn owner(&self) -> &NumericalSemigroup {
        &self.owner
    }

    pub fn gens(&self) -> &[i64] {
        &self.gens
    }

    pub fn min(&self) -> i64 {
        self.gens[0]
    }

    /// `min(G) + F(H) + 1`; every integer from here on is a member.
    pub fn stability_bound(&self) -> i64 {
        self.min() + self.owner.conductor()
    }

    #[inline]
    pub fn contains(&self, z: i64) -> bool {
        let min = self.min();
        if z < min {
            false
        } else if z >= self.stability_bound() {
            true
        } else {
            self.window.get((z - min) as usize)
        }
    }

    /// Membership straight from the definition `G + H`.
    pub fn contains_by_gens(&self, z: i64) -> bool {
        self.gens.iter().any(|&g| self.owner.contains(z - g))
    }

    fn check_owner(&self, other: &Self) -> Result<()> {
        if self.owner.same_as(&other.owner) {
            Ok(())
        } else {
            Err(Error::OwnerMismatch)
        }
    }

    /// `E + F`, generated by pairwise sums of generators.
    pub fn product(&self, other: &Self) -> Result<Self> {
        self.check_owner(other)?;
        let sums = self
            .gens
            .iter()
            .flat_map(|&a| other.gens.iter().map(move |&b| a + b))
            .collect();
        Ok(Self::normalized(&self.owner, sums))
    }

    /// `E : F = {z : z + F ⊆ E}`.
    pub fn colon(&self, other: &Self) -> Result<Self> {
        self.check_owner(other)?;
        // z + min(F) must reach min(E); once z + min(F) clears the stability
        // bound of E, every z + f does.
        let lo = self.min() - other.min();
        let full_from = self.stability_bound() - other.min();
        Ok(Self::from_predicate(&self.owner, lo, full_from, |z| {
            other.gens.iter().all(|&f| self.contains(z + f))
        }))
    }

    /// Equality of normalized generators; the member sets are compared too in
    /// debug builds.
    pub fn equals(&self, other: &Self) -> Result<bool> {
        self.check_owner(other)?;
        let eq = self.gens == other.gens;
        debug_assert_eq!(eq, self.same_members(other));
        Ok(eq)
    }

    /// Compares member sets, also across different owners.
    pub fn same_members(&self, other: &Self) -> bool {
        if self.min() != other.min() {
            return false;
        }
        let hi = self.stability_bound().max(other.stability_bound());
        (self.min()..hi).all(|z| self.contains(z) == other.contains(z))
    }

    /// Member-set inclusion `self ⊆ other`.
    pub fn is_subset(&self, other: &Self) -> bool {
        let hi = self.stability_bound().max(other.stability_bound());
        (self.min()..hi).all(|z| !self.contains(z) || other.contains(z))
    }

    /// True iff the member set is `{z : z >= min}`.
    pub fn is_tail(&self) -> bool {
        self.window.all()
    }

    /// The ideal translated by `k`.
    pub fn shift(&self, k: i64) -> Self {
        Self::normalized(&self.owner, self.gens.iter().map(|g| g + k).collect())
    }

    /// `H - (H - E) = E`, the rank-one meaning of reflexivity.
    pub fn is_reflexive(&self) -> bool {
        let unit = Self::unit(&self.owner);
        let dual = unit.colon(self).expect("same owner");
        let bidual = unit.colon(&dual).expect("same owner");
        bidual.gens == self.gens
    }

    /// `C - (C - E) = E` for the canonical ideal `C`. Holds for every relative
    /// ideal; exposed as a self-test surface.
    pub fn canonical_bidual_check(&self) -> bool {
        let c = Self::canonical(&self.owner);
        let dual = c.colon(self).expect("same owner");
        let bidual = c.colon(&dual).expect("same owner");
        bidual.gens == self.gens
    }

    /// Members in `[min, stability_bound)`, for previews.
    pub fn members_below_bound(&self) -> Vec<i64> {
        (self.min()..self.stability_bound())
            .filter(|&z| self.contains(z))
            .collect()
    }
}

impl PartialEq for RelativeIdeal {
    fn eq(&self, other: &Self) -> bool {
        self.owner.same_as(&other.owner) && self.gens == other.gens
    }
}

impl Eq for RelativeIdeal {}

impl fmt::Debug for RelativeIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RelativeIdeal({:?} + {})", self.gens, self.owner)
    }
}
