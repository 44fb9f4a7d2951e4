//! Normalized right transversals of subgroups in finite groups.
//!
//! Given a finite group `G` and a subgroup `H`, this crate enumerates the
//! normalized right transversals of `H`, computes the right loop and
//! c-groupoid each one induces, decides both-sidedness, the right inverse
//! property, right conjugacy closure and the `A_r` property, and checks that
//! normality of `H` is equivalent to each "all transversals have property X"
//! statement across catalogs of small groups.

pub mod error;
pub mod group;
pub mod induced_loop;
pub mod loop_iso;
pub mod perm;
pub mod transversal;
pub mod verifier;

pub use error::{Error, Result};
pub use group::{builtin_catalog, named_group, CosetDecomposition, CosetSpace, Group, GroupId, Side, Subgroup};
pub use induced_loop::{both_sided_criteria, c_groupoid, induced_loop, BothSidedCriteria, CGroupoid, RightLoop};
pub use loop_iso::{all_isomorphic, are_isomorphic, classify, fingerprint, IsoClassification, LoopFingerprint};
pub use perm::Perm;
pub use transversal::{enumerate_nrts, non_left_transversal_witness, nrt_at, nrt_count, Transversal};
pub use verifier::{analyze, sweep, AnalysisReport, SweepOptions};
