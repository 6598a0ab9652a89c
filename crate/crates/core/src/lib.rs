//! Numerical semigroups, their relative ideals and the far-flung Gorenstein
//! property, together with an exact solver for the Rohrbach problem and
//! exhaustive verification campaigns over the genus tree.

mod bits;
pub mod classify;
pub mod cli;
pub mod enumerate;
pub mod error;
pub mod ideal;
pub mod rohrbach;
pub mod semigroup;
pub mod verify;

pub use classify::{
    bounds_report, canonical_colon_is_tail, classify, endomorphism_semigroup, family,
    is_far_flung, is_ffg_minimal_mult, is_nearly_gorenstein, trace_ideal,
    verify_endomorphism_inheritance, BoundCheck, Bounds, FamilySpec, FfgRoute, SemigroupReport,
};
pub use enumerate::{enumerate_by_genus, EnumerationQuery, Filter};
pub use error::{Error, Result};
pub use ideal::RelativeIdeal;
pub use rohrbach::{known_table, n_of_set, rohrbach_max, RohrbachSet, RohrbachSolution};
pub use semigroup::NumericalSemigroup;
