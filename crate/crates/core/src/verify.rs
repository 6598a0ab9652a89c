//! Exhaustive verification campaigns over enumerated corpora.
//!
//! Every campaign returns a [`Verification`] whose counterexamples are sorted
//! canonically and truncated, so the outcome does not depend on scheduling.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::classify::{
    canonical_colon_is_tail, classify, is_far_flung, max_interval_parameter, type2_parameter,
    type3_family_of, verify_endomorphism_inheritance, FamilySpec, FfgRoute, SemigroupReport,
};
use crate::enumerate::{corpus, enumerate_by_multiplicity, par_visit};
use crate::error::Result;
use crate::ideal::RelativeIdeal;
use crate::rohrbach;
use crate::semigroup::NumericalSemigroup;

/// Counterexamples kept in a [`Verification`].
pub const MAX_COUNTEREXAMPLES: usize = 10;

#[derive(Debug, Clone, Serialize)]
pub struct Counterexample {
    pub reason: String,
    pub report: SemigroupReport,
}

#[derive(Debug, Clone, Serialize)]
pub struct Verification {
    pub campaign: String,
    pub pass: bool,
    /// semigroups in the enumerated corpus
    pub corpus_size: u64,
    /// items on which the campaign's property was evaluated
    pub checked: u64,
    pub counterexamples: Vec<Counterexample>,
    pub truncated: bool,
}

impl Verification {
    fn new(campaign: &str, corpus_size: u64, checked: u64, failures: Vec<(NumericalSemigroup, String)>) -> Self {
        let mut failures = failures;
        failures.sort_by(|a, b| a.0.cmp(&b.0).then_with(|| a.1.cmp(&b.1)));
        let truncated = failures.len() > MAX_COUNTEREXAMPLES;
        let counterexamples = failures
            .into_iter()
            .take(MAX_COUNTEREXAMPLES)
            .map(|(h, reason)| Counterexample {
                reason,
                report: classify(&h),
            })
            .collect::<Vec<_>>();
        Verification {
            campaign: campaign.to_string(),
            pass: counterexamples.is_empty(),
            corpus_size,
            checked,
            counterexamples,
            truncated,
        }
    }
}

enum Outcome {
    Skipped,
    Checked,
    Failed(NumericalSemigroup, String),
}

/// Runs `check` over the genus tree and folds the outcomes.
fn tree_campaign<F>(campaign: &str, max_genus: u32, check: F) -> Result<Verification>
where
    F: Fn(&crate::enumerate::TreeNode) -> Outcome + Sync,
{
    let outcomes = par_visit(max_genus, |_| true, |n| Some(check(n)))?;
    let corpus_size = outcomes.len() as u64;
    let mut checked = 0;
    let mut failures = Vec::new();
    for o in outcomes {
        match o {
            Outcome::Skipped => {}
            Outcome::Checked => checked += 1,
            Outcome::Failed(h, why) => {
                checked += 1;
                failures.push((h, why));
            }
        }
    }
    Ok(Verification::new(campaign, corpus_size, checked, failures))
}

fn fail_if(h: NumericalSemigroup, bad: Option<String>) -> Outcome {
    match bad {
        Some(why) => Outcome::Failed(h, why),
        None => Outcome::Checked,
    }
}

/// The three far-flung Gorenstein routes agree on every semigroup.
pub fn verify_route_agreement(max_genus: u32) -> Result<Verification> {
    tree_campaign("routes", max_genus, |n| {
        let h = n.to_semigroup();
        let v: Vec<bool> = FfgRoute::ALL.iter().map(|&r| is_far_flung(&h, r)).collect();
        let bad = v
            .iter()
            .any(|&x| x != v[0])
            .then(|| format!("definition/square/sumset = {v:?}"));
        fail_if(h, bad)
    })
}

/// `r + 1 <= e` with equality exactly at minimal multiplicity; for far-flung
/// Gorenstein members also `e <= C(r+1, 2)` and `e <= n̄(r)`.
pub fn verify_bounds(max_genus: u32) -> Result<Verification> {
    tree_campaign("bounds", max_genus, |n| {
        if n.genus() == 0 {
            return Outcome::Skipped;
        }
        let h = n.to_semigroup();
        let (r, e) = (h.ty() as i64, h.multiplicity());
        let mut why = Vec::new();
        if r + 1 > e {
            why.push(format!("r + 1 = {} > e = {e}", r + 1));
        }
        if (r + 1 == e) != h.is_minimal_multiplicity() {
            why.push("r + 1 = e does not match minimal multiplicity".to_string());
        }
        if is_far_flung(&h, FfgRoute::Definition) {
            if e > r * (r + 1) / 2 {
                why.push(format!("e = {e} > C(r+1, 2) = {}", r * (r + 1) / 2));
            }
            match rohrbach::known_table(r as usize) {
                Ok(nbar) if e > nbar => why.push(format!("e = {e} > n̄({r}) = {nbar}")),
                Ok(_) => {}
                Err(_) => why.push(format!("n̄({r}) is not tabulated")),
            }
        }
        fail_if(h, (!why.is_empty()).then(|| why.join("; ")))
    })
}

/// Type 2 and far-flung Gorenstein exactly for `<3, 3n+1, 3n+2>`.
pub fn verify_type2_classification(max_genus: u32) -> Result<Verification> {
    tree_campaign("type2", max_genus, |n| {
        if n.genus() == 0 {
            return Outcome::Skipped;
        }
        let ty = n.ty();
        // family members have multiplicity 3
        if ty != 2 && n.multiplicity() != 3 {
            return Outcome::Checked;
        }
        let h = n.to_semigroup();
        let lhs = ty == 2 && is_far_flung(&h, FfgRoute::Definition);
        let rhs = type2_parameter(&h).is_some();
        let bad = (lhs != rhs).then(|| format!("type 2 and FFG = {lhs}, in family = {rhs}"));
        fail_if(h, bad)
    })
}

/// Largest Frobenius number among the four type-3 families at parameter `m`.
pub fn type3_frobenius_cap(max_m: i64) -> Result<i64> {
    (0..4)
        .map(|v| FamilySpec::type3(v, max_m).build().map(|h| h.frobenius()))
        .try_fold(i64::MIN, |acc, f| f.map(|f| acc.max(f)))
}

/// Among semigroups with Frobenius number at most the family cap at `max_m`:
/// type 3, not of minimal multiplicity and far-flung Gorenstein exactly for
/// the four type-3 families, all of multiplicity 5. Multiplicities 3 to 7
/// are enumerated.
pub fn verify_type3_classification(max_m: i64) -> Result<Verification> {
    let cap = type3_frobenius_cap(max_m)?;
    let mut failures = Vec::new();
    let mut corpus_size = 0u64;
    let mut checked = 0u64;
    for e in 3..=7 {
        let all = enumerate_by_multiplicity(e, cap)?;
        corpus_size += all.len() as u64;
        use rayon::prelude::*;
        let bad: Vec<(NumericalSemigroup, String)> = all
            .par_iter()
            .filter_map(|h| {
                let lhs = h.ty() == 3
                    && !h.is_minimal_multiplicity()
                    && is_far_flung(h, FfgRoute::Definition);
                let rhs = type3_family_of(h).is_some();
                if lhs != rhs {
                    Some((h.clone(), format!("type 3, not minimal multiplicity, FFG = {lhs}, in family = {rhs}")))
                } else if lhs && h.multiplicity() != 5 {
                    Some((h.clone(), format!("multiplicity {} instead of 5", h.multiplicity())))
                } else {
                    None
                }
            })
            .collect();
        checked += all.len() as u64;
        failures.extend(bad);
    }
    for m in 1..=max_m {
        for v in 0..4 {
            let fam = FamilySpec::type3(v, m);
            let h = fam.build()?;
            checked += 1;
            let ok = h.multiplicity() == 5
                && h.ty() == 3
                && !h.is_minimal_multiplicity()
                && h.frobenius() <= cap
                && is_far_flung(&h, FfgRoute::Definition);
            if !ok {
                failures.push((h, format!("family member {fam:?} fails its description")));
            }
        }
    }
    Ok(Verification::new("type3", corpus_size, checked, failures))
}

/// Far-flung Gorenstein and nearly Gorenstein exactly for `<n, .., 2n-1>`
/// with `n != 2`, and `m ⊆ conductor` exactly for `<n, .., 2n-1>`.
///
/// `<2, 3>` has the maximal ideal inside the conductor but is Gorenstein and
/// not the full monoid, so it is not far-flung Gorenstein.
pub fn verify_interval_characterization(max_genus: u32) -> Result<Verification> {
    tree_campaign("interval", max_genus, |n| {
        let h = n.to_semigroup();
        let r = classify(&h);
        let interval = max_interval_parameter(&h);
        let lhs = r.flags.ffg && r.flags.nearly_gorenstein;
        let rhs = interval.is_some_and(|n| n != 2);
        let max_ideal_in_conductor = h.frobenius() < h.multiplicity();
        let mut why = Vec::new();
        if lhs != rhs {
            why.push(format!("FFG and NG = {lhs}, interval (n != 2) = {rhs}"));
        }
        if max_ideal_in_conductor != interval.is_some() {
            why.push(format!(
                "m inside conductor = {max_ideal_in_conductor}, interval = {}",
                interval.is_some()
            ));
        }
        fail_if(h, (!why.is_empty()).then(|| why.join("; ")))
    })
}

/// `B = H ∪ PF(H)` inherits the property and its trace is the shifted trace.
pub fn verify_endomorphism(max_genus: u32) -> Result<Verification> {
    tree_campaign("endo", max_genus, |n| {
        if n.genus() == 0 {
            return Outcome::Skipped;
        }
        let h = n.to_semigroup();
        if !is_far_flung(&h, FfgRoute::Sumset) {
            return Outcome::Skipped;
        }
        match verify_endomorphism_inheritance(&h) {
            Ok(r) if r.b_is_ffg && r.trace_shift_ok => Outcome::Checked,
            Ok(r) => Outcome::Failed(h, format!("{r:?}")),
            Err(e) => Outcome::Failed(h, e.to_string()),
        }
    })
}

/// Every far-flung Gorenstein member of type at least 2 has valuations
/// starting `0, 1`.
pub fn verify_valuations(max_genus: u32) -> Result<Verification> {
    tree_campaign("valuations", max_genus, |n| {
        if n.ty() < 2 {
            return Outcome::Skipped;
        }
        let h = n.to_semigroup();
        if !is_far_flung(&h, FfgRoute::Definition) {
            return Outcome::Skipped;
        }
        let f = h.frobenius();
        let vals: Vec<i64> = h.pseudo_frobenius().iter().map(|a| f - a).collect();
        let bad = !(vals.contains(&0) && vals.contains(&1));
        fail_if(h, bad.then(|| format!("valuations {vals:?}")))
    })
}

/// A random relative ideal over `h` with generators in a window around the
/// conductor.
pub fn random_ideal(h: &NumericalSemigroup, rng: &mut impl Rng) -> RelativeIdeal {
    let span = h.conductor() + 2;
    let k = rng.gen_range(1..=4);
    let gens: Vec<i64> = (0..k).map(|_| rng.gen_range(-span..=2 * span)).collect();
    RelativeIdeal::from_gens(h, &gens).expect("nonempty and small")
}

/// For sampled far-flung Gorenstein semigroups and random reflexive ideals
/// `E`, the colon `E - C` is a tail `{z >= c}`.
pub fn verify_canonical_colon_tail(
    max_genus: u32,
    sample: usize,
    ideals_per: usize,
    seed: u64,
) -> Result<Verification> {
    let all: Vec<NumericalSemigroup> = corpus(max_genus)?
        .into_iter()
        .filter(|h| is_far_flung(h, FfgRoute::Sumset))
        .collect();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let chosen: Vec<NumericalSemigroup> = all.choose_multiple(&mut rng, sample).cloned().collect();
    let mut failures = Vec::new();
    let mut checked = 0;
    for h in &chosen {
        let unit = RelativeIdeal::unit(h);
        for _ in 0..ideals_per {
            let e0 = random_ideal(h, &mut rng);
            // H - (H - E0) is always reflexive
            let e = unit.colon(&unit.colon(&e0)?)?;
            checked += 1;
            match canonical_colon_is_tail(h, &e) {
                Ok(true) => {}
                Ok(false) => failures.push((h.clone(), format!("E - C not a tail for E = {:?}", e.gens()))),
                Err(err) => failures.push((h.clone(), format!("{err} for E = {:?}", e.gens()))),
            }
        }
    }
    Ok(Verification::new("thm41", all.len() as u64, checked, failures))
}

/// `C - (C - E) = E` for random ideals over random corpus members.
pub fn verify_canonical_bidual(
    max_genus: u32,
    semigroups: usize,
    ideals: usize,
    seed: u64,
) -> Result<Verification> {
    let all = corpus(max_genus)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let chosen: Vec<NumericalSemigroup> = all.choose_multiple(&mut rng, semigroups).cloned().collect();
    let mut failures = Vec::new();
    for i in 0..ideals {
        let h = &chosen[i % chosen.len()];
        let e = random_ideal(h, &mut rng);
        if !e.canonical_bidual_check() {
            failures.push((h.clone(), format!("C - (C - E) != E for E = {:?}", e.gens())));
        }
    }
    Ok(Verification::new("bidual", all.len() as u64, ideals as u64, failures))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_campaigns_pass() {
        for v in [
            verify_route_agreement(8).unwrap(),
            verify_bounds(8).unwrap(),
            verify_type2_classification(10).unwrap(),
            verify_interval_characterization(8).unwrap(),
            verify_endomorphism(8).unwrap(),
            verify_valuations(8).unwrap(),
            verify_type3_classification(1).unwrap(),
            verify_canonical_colon_tail(6, 10, 5, 1).unwrap(),
            verify_canonical_bidual(6, 5, 50, 2).unwrap(),
        ] {
            assert!(v.pass, "{}: {:?}", v.campaign, v.counterexamples);
            assert!(v.checked > 0, "{}", v.campaign);
        }
    }

    #[test]
    fn type2_vacuous_at_genus_zero() {
        let v = verify_type2_classification(0).unwrap();
        assert!(v.pass);
        assert_eq!(v.corpus_size, 1);
        assert_eq!(v.checked, 0);
    }

    #[test]
    fn type3_cap_is_computed() {
        // (1-1) at m has Frobenius 10m + 3
        assert_eq!(type3_frobenius_cap(1).unwrap(), 13);
        assert_eq!(type3_frobenius_cap(5).unwrap(), 53);
    }

    #[test]
    fn counterexamples_are_sorted_and_truncated() {
        let h: Vec<NumericalSemigroup> = (3..20)
            .rev()
            .map(|e| NumericalSemigroup::from_generators(&[e, e + 1]).unwrap())
            .collect();
        let failures = h.into_iter().map(|h| (h, "x".to_string())).collect();
        let v = Verification::new("t", 17, 17, failures);
        assert!(!v.pass && v.truncated);
        assert_eq!(v.counterexamples.len(), MAX_COUNTEREXAMPLES);
        assert_eq!(v.counterexamples[0].report.semigroup.min_gens(), &[3, 4]);
    }
}
