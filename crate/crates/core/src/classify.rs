//! Far-flung Gorenstein, nearly Gorenstein and Gorenstein classification.

use serde::ser::SerializeStruct;
use serde::{Deserialize, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::ideal::RelativeIdeal;
use crate::rohrbach;
use crate::semigroup::{gcd, NumericalSemigroup, MAX_GENERATOR};

/// The three equivalent ways of deciding the far-flung Gorenstein property.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum FfgRoute {
    /// trace ideal equals the conductor
    Definition,
    /// `C * C` is all of the nonnegative integers
    Square,
    /// `{0, .., e - 1} ⊆ {2F - α - β : α, β ∈ PF}`
    Sumset,
}

impl FfgRoute {
    pub const ALL: [FfgRoute; 3] = [FfgRoute::Definition, FfgRoute::Square, FfgRoute::Sumset];
}

/// Trace of the canonical module: `(H - C) + C`.
pub fn trace_ideal(h: &NumericalSemigroup) -> RelativeIdeal {
    let c = RelativeIdeal::canonical(h);
    let dual = RelativeIdeal::unit(h).colon(&c).expect("same owner");
    dual.product(&c).expect("same owner")
}

pub fn is_far_flung(h: &NumericalSemigroup, route: FfgRoute) -> bool {
    match route {
        FfgRoute::Definition => trace_ideal(h) == RelativeIdeal::conductor(h),
        FfgRoute::Square => {
            let c = RelativeIdeal::canonical(h);
            c.product(&c).expect("same owner") == RelativeIdeal::normalization(h)
        }
        FfgRoute::Sumset => {
            let e = h.multiplicity();
            let two_f = 2 * h.frobenius();
            let pf = h.pseudo_frobenius();
            let mut hit = vec![false; e as usize];
            for (i, &a) in pf.iter().enumerate() {
                for &b in &pf[i..] {
                    let v = two_f - a - b;
                    if (0..e).contains(&v) {
                        hit[v as usize] = true;
                    }
                }
            }
            hit.iter().all(|&x| x)
        }
    }
}

pub fn is_gorenstein(h: &NumericalSemigroup) -> bool {
    h.is_symmetric()
}

/// The trace ideal contains every nonzero member of `H`.
pub fn is_nearly_gorenstein(h: &NumericalSemigroup) -> bool {
    let tr = trace_ideal(h);
    is_nearly_gorenstein_with(h, &tr)
}

fn is_nearly_gorenstein_with(h: &NumericalSemigroup, tr: &RelativeIdeal) -> bool {
    let e = h.multiplicity();
    (e..=h.frobenius() + e)
        .filter(|&z| h.contains(z))
        .all(|z| tr.contains(z))
}

/// `H ∪ PF(H)`, the monomial model of `m : m`.
pub fn endomorphism_semigroup(h: &NumericalSemigroup) -> NumericalSemigroup {
    if h.is_full() {
        return h.clone();
    }
    let pf = h.pseudo_frobenius();
    let f = h.frobenius();
    // F(H) is a pseudo-Frobenius number, so the new Frobenius number is the
    // largest gap of H outside PF(H).
    let new_f = h
        .gaps()
        .iter()
        .rev()
        .copied()
        .find(|z| pf.binary_search(z).is_err())
        .unwrap_or(-1);
    debug_assert!(new_f < f);
    NumericalSemigroup::from_member_fn(new_f, |z| {
        h.contains(z) || pf.binary_search(&z).is_ok()
    })
    .expect("union with PF is a numerical semigroup")
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct EndomorphismInheritance {
    pub b_is_ffg: bool,
    pub trace_shift_ok: bool,
}

/// For far-flung Gorenstein `H`, checks that `B = H ∪ PF(H)` is again
/// far-flung Gorenstein and that its trace ideal is the trace of `H`
/// translated by `-e(H)`.
pub fn verify_endomorphism_inheritance(h: &NumericalSemigroup) -> Result<EndomorphismInheritance> {
    if h.is_full() {
        return Err(Error::FullMonoid);
    }
    if !is_far_flung(h, FfgRoute::Definition) {
        return Err(Error::NotFfg);
    }
    let b = endomorphism_semigroup(h);
    let shifted = trace_ideal(h).shift(-h.multiplicity());
    Ok(EndomorphismInheritance {
        b_is_ffg: is_far_flung(&b, FfgRoute::Definition),
        trace_shift_ok: trace_ideal(&b).same_members(&shifted),
    })
}

/// Outcome of a single inequality check.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum BoundCheck {
    Holds,
    Violated,
    NotApplicable,
    Unknown,
}

impl BoundCheck {
    fn from_bool(b: bool) -> Self {
        if b {
            BoundCheck::Holds
        } else {
            BoundCheck::Violated
        }
    }

    pub fn is_violated(self) -> bool {
        self == BoundCheck::Violated
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Bounds {
    /// `r + 1 <= e`, for every semigroup other than the full monoid.
    pub type_plus_one_le_e: BoundCheck,
    /// `r + 1 == e` exactly at minimal multiplicity.
    pub equality_iff_minimal_multiplicity: BoundCheck,
    /// `e <= C(r + 1, 2)`, evaluated for far-flung Gorenstein semigroups.
    pub e_le_binom: BoundCheck,
    /// `e <= n̄(r)`, evaluated for far-flung Gorenstein semigroups.
    pub e_le_rohrbach: BoundCheck,
    pub rohrbach_value: Option<i64>,
}

pub fn bounds_report(h: &NumericalSemigroup) -> Bounds {
    bounds_with(h, is_far_flung(h, FfgRoute::Sumset))
}

fn bounds_with(h: &NumericalSemigroup, ffg: bool) -> Bounds {
    let r = h.ty() as i64;
    let e = h.multiplicity();
    let (lower, equality) = if h.is_full() {
        (BoundCheck::NotApplicable, BoundCheck::NotApplicable)
    } else {
        (
            BoundCheck::from_bool(r < e),
            BoundCheck::from_bool((r + 1 == e) == h.is_minimal_multiplicity()),
        )
    };
    let rohrbach_value = rohrbach::known_table(r as usize).ok();
    let (binom, rohr) = if ffg {
        (
            BoundCheck::from_bool(e <= r * (r + 1) / 2),
            match rohrbach_value {
                Some(n) => BoundCheck::from_bool(e <= n),
                None => BoundCheck::Unknown,
            },
        )
    } else {
        (BoundCheck::NotApplicable, BoundCheck::NotApplicable)
    };
    Bounds {
        type_plus_one_le_e: lower,
        equality_iff_minimal_multiplicity: equality,
        e_le_binom: binom,
        e_le_rohrbach: rohr,
        rohrbach_value,
    }
}

/// Parametric families with known classification behaviour.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "snake_case")]
pub enum FamilySpec {
    /// `<3, 3n+1, 3n+2>`
    Type2 { n: i64 },
    /// `<5, 5m+4, 10m+6, 10m+7>`
    Type3_1_1 { m: i64 },
    /// `<5, 5m+1, 10m+3, 10m+4>`
    Type3_1_2 { m: i64 },
    /// `<5, 5m+2, 10m+1, 10m+3>`
    Type3_2_1 { m: i64 },
    /// `<5, 5m+3, 10m+4, 10m+7>`
    Type3_2_2 { m: i64 },
    /// `<a, a+d, ..., a+(a-1)d>`
    Arithmetic { a: i64, d: i64 },
    /// `<n, n+1, ..., 2n-1>`
    MaxInterval { n: i64 },
}

impl FamilySpec {
    pub fn type3(variant: usize, m: i64) -> FamilySpec {
        match variant {
            0 => FamilySpec::Type3_1_1 { m },
            1 => FamilySpec::Type3_1_2 { m },
            2 => FamilySpec::Type3_2_1 { m },
            _ => FamilySpec::Type3_2_2 { m },
        }
    }

    pub fn generators(&self) -> Result<Vec<i64>> {
        let positive = |name: &str, v: i64| {
            if (1..=MAX_GENERATOR).contains(&v) {
                Ok(())
            } else {
                Err(Error::BadParameters(format!("{name} = {v} must lie in 1..={MAX_GENERATOR}")))
            }
        };
        Ok(match *self {
            FamilySpec::Type2 { n } => {
                positive("n", n)?;
                vec![3, 3 * n + 1, 3 * n + 2]
            }
            FamilySpec::Type3_1_1 { m } => {
                positive("m", m)?;
                vec![5, 5 * m + 4, 10 * m + 6, 10 * m + 7]
            }
            FamilySpec::Type3_1_2 { m } => {
                positive("m", m)?;
                vec![5, 5 * m + 1, 10 * m + 3, 10 * m + 4]
            }
            FamilySpec::Type3_2_1 { m } => {
                positive("m", m)?;
                vec![5, 5 * m + 2, 10 * m + 1, 10 * m + 3]
            }
            FamilySpec::Type3_2_2 { m } => {
                positive("m", m)?;
                vec![5, 5 * m + 3, 10 * m + 4, 10 * m + 7]
            }
            FamilySpec::Arithmetic { a, d } => {
                if a < 3 || d < 0 {
                    return Err(Error::BadParameters(format!(
                        "need a >= 3 and d >= 0, got a = {a}, d = {d}"
                    )));
                }
                if gcd(a, d) != 1 {
                    return Err(Error::BadParameters(format!("gcd({a}, {d}) != 1")));
                }
                positive("a + (a-1)d", a.saturating_add((a - 1).saturating_mul(d)))?;
                (0..a).map(|i| a + i * d).collect()
            }
            FamilySpec::MaxInterval { n } => {
                positive("n", n)?;
                (n..=(2 * n - 1).max(n)).collect()
            }
        })
    }

    /// Builds the family member.
    pub fn build(&self) -> Result<NumericalSemigroup> {
        NumericalSemigroup::from_generators(&self.generators()?)
    }
}

pub fn family(fam: FamilySpec) -> Result<NumericalSemigroup> {
    fam.build()
}

/// `Some(n)` iff `h = <3, 3n+1, 3n+2>` with `n >= 1`.
pub fn type2_parameter(h: &NumericalSemigroup) -> Option<i64> {
    match *h.min_gens() {
        [3, b, c] if b % 3 == 1 && c == b + 1 && b >= 4 => Some((b - 1) / 3),
        _ => None,
    }
}

/// The type-3 family containing `h`, if any.
pub fn type3_family_of(h: &NumericalSemigroup) -> Option<FamilySpec> {
    let [5, b, _, _] = *h.min_gens() else {
        return None;
    };
    for (variant, offset) in [4, 1, 2, 3].into_iter().enumerate() {
        if b > 5 && (b - offset) % 5 == 0 {
            let fam = FamilySpec::type3(variant, (b - offset) / 5);
            if fam.generators().ok().as_deref() == Some(h.min_gens()) {
                return Some(fam);
            }
        }
    }
    None
}

/// `Some(n)` iff `h = <n, n+1, ..., 2n-1>`.
pub fn max_interval_parameter(h: &NumericalSemigroup) -> Option<i64> {
    let g = h.min_gens();
    let n = g[0];
    (g.len() as i64 == n && g.iter().enumerate().all(|(i, &x)| x == n + i as i64)).then_some(n)
}

/// Far-flung Gorenstein test for minimal-multiplicity semigroups, read off
/// the generators: `{2a_v - a_1 + 1, .., 2a_v} ⊆ {a_i + a_j : i, j >= 2}`.
pub fn is_ffg_minimal_mult(h: &NumericalSemigroup) -> Result<bool> {
    if !h.is_minimal_multiplicity() {
        return Err(Error::NotMinimalMultiplicity);
    }
    let g = h.min_gens();
    let (a1, av) = (g[0], *g.last().unwrap());
    if g.len() == 1 {
        // full monoid, far-flung Gorenstein by convention
        return Ok(true);
    }
    let rest = &g[1..];
    let lo = 2 * av - a1 + 1;
    Ok((lo..=2 * av).all(|t| {
        rest.iter().any(|&x| rest.binary_search(&(t - x)).is_ok())
    }))
}

/// For far-flung Gorenstein `H` and a reflexive ideal `E`, checks that
/// `E - C` is a tail `{z : z >= c}`.
pub fn canonical_colon_is_tail(h: &NumericalSemigroup, e: &RelativeIdeal) -> Result<bool> {
    if *e.owner() != *h {
        return Err(Error::OwnerMismatch);
    }
    if !is_far_flung(h, FfgRoute::Definition) {
        return Err(Error::NotFfg);
    }
    if !e.is_reflexive() {
        return Err(Error::NotReflexive);
    }
    let c = RelativeIdeal::canonical(h);
    Ok(e.colon(&c)?.is_tail())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Flags {
    pub ffg: bool,
    pub nearly_gorenstein: bool,
    pub gorenstein: bool,
    pub minimal_multiplicity: bool,
}

/// Invariants, trace ideal, flags and bounds for one semigroup.
#[derive(Debug, Clone, Serialize)]
pub struct SemigroupReport {
    pub semigroup: NumericalSemigroup,
    pub trace: RelativeIdeal,
    pub flags: Flags,
    pub bounds: Bounds,
    /// `{F - α : α ∈ PF}`, ascending.
    pub valuations: Vec<i64>,
}

pub fn classify(h: &NumericalSemigroup) -> SemigroupReport {
    let trace = trace_ideal(h);
    let ffg = trace == RelativeIdeal::conductor(h);
    let flags = Flags {
        ffg,
        nearly_gorenstein: is_nearly_gorenstein_with(h, &trace),
        gorenstein: is_gorenstein(h),
        minimal_multiplicity: h.is_minimal_multiplicity(),
    };
    let f = h.frobenius();
    let mut valuations: Vec<i64> = h.pseudo_frobenius().iter().map(|a| f - a).collect();
    valuations.sort_unstable();
    SemigroupReport {
        semigroup: h.clone(),
        bounds: bounds_with(h, ffg),
        trace,
        flags,
        valuations,
    }
}

impl Serialize for NumericalSemigroup {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("NumericalSemigroup", 8)?;
        st.serialize_field("min_gens", self.min_gens())?;
        st.serialize_field("multiplicity", &self.multiplicity())?;
        st.serialize_field("embedding_dimension", &self.embedding_dimension())?;
        st.serialize_field("type", &self.ty())?;
        st.serialize_field("genus", &self.genus())?;
        st.serialize_field("frobenius", &self.frobenius())?;
        st.serialize_field("pseudo_frobenius", self.pseudo_frobenius())?;
        st.serialize_field("gap_count", &self.gaps().len())?;
        st.end()
    }
}

impl Serialize for RelativeIdeal {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("RelativeIdeal", 4)?;
        st.serialize_field("generators", self.gens())?;
        st.serialize_field("min", &self.min())?;
        st.serialize_field("stability_bound", &self.stability_bound())?;
        st.serialize_field("is_tail", &self.is_tail())?;
        st.end()
    }
}
