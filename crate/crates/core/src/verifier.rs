//! Per-pair analysis reports and catalog sweeps.
//!
//! For a pair `(G, H)` every normalized right transversal is visited once.
//! The report counts how many are both-sided, have the right inverse
//! property, are right conjugacy closed and are `A_r`-transversals, and how
//! many isomorphism classes their induced loops fall into. The checks then
//! confirm that normality of `H` agrees with each "all transversals have
//! property X" flag, and that the per-transversal identities held throughout.

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::group::{CosetSpace, Group, Subgroup, DEFAULT_SUBGROUP_SWEEP_CAP};
use crate::induced_loop::{c_groupoid, induced_loop, BothSidedCriteria, CGroupoidViolation, RightLoop};
use crate::loop_iso::{are_isomorphic, Classifier};
use crate::transversal::{enumerate_nrts, non_left_transversal_witness, TransversalRecord, DEFAULT_NRT_CAP};

#[derive(Clone, Copy, Debug)]
pub struct AnalyzeOptions {
    pub nrt_cap: u64,
    /// Stop once every "all transversals" flag is known to be false. Counts
    /// are then partial and the report is marked non-exhaustive.
    pub early_exit: bool,
}

impl Default for AnalyzeOptions {
    fn default() -> Self {
        AnalyzeOptions { nrt_cap: DEFAULT_NRT_CAP, early_exit: false }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GroupInfo {
    pub name: String,
    pub order: usize,
}

impl GroupInfo {
    pub fn of(g: &Group) -> Self {
        GroupInfo { name: g.label(), order: g.order() }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SubgroupInfo {
    pub elems: Vec<usize>,
    pub order: usize,
}

impl SubgroupInfo {
    pub fn of(h: &Subgroup) -> Self {
        SubgroupInfo { elems: h.elems().to_vec(), order: h.order() }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct PropertyCounts {
    pub both_sided: u64,
    pub rip: u64,
    pub rcc: u64,
    pub ar: u64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct AllFlags {
    pub both_sided: bool,
    pub isomorphic: bool,
    pub rip: bool,
    pub rcc: bool,
    pub ar: bool,
}

/// A per-transversal identity that failed during analysis.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "camelCase")]
pub enum ViolationKind {
    LoopAxioms { reason: String },
    CGroupoid { detail: CGroupoidViolation },
    BothSidedCriteria { criteria: BothSidedCriteria },
    RipWithoutBothSided,
    RccWithoutBothSided,
    ArWithNontrivialSigma { x: usize },
    IsomorphicButBothSidedDiffers { class_representative: u64 },
    NotIsomorphicToQuotient,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Violation {
    /// Odometer index of the offending transversal.
    pub nrt: u64,
    #[serde(flatten)]
    pub kind: ViolationKind,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct AnalysisReport {
    pub group: GroupInfo,
    pub subgroup: SubgroupInfo,
    pub index: usize,
    pub is_normal: bool,
    pub nrt_count: u64,
    pub counts: PropertyCounts,
    pub all_flags: AllFlags,
    pub iso_class_count: usize,
    pub iso_class_sizes: Vec<usize>,
    /// False when early exit cut the enumeration short.
    pub exhaustive: bool,
    pub witness: Option<TransversalRecord>,
    /// Whether the witness really fails to be a left transversal.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness_is_left: Option<bool>,
    pub violations: Vec<Violation>,
}

/// Enumerate every NRT of `space` once and fill in an [`AnalysisReport`].
pub fn analyze(space: &CosetSpace<'_>, opts: &AnalyzeOptions) -> Result<AnalysisReport> {
    let nrts = enumerate_nrts(space, opts.nrt_cap)?;
    let nrt_count = nrts.total();
    let mut counts = PropertyCounts::default();
    let mut classifier = Classifier::new();
    let mut class_info: Vec<(bool, u64)> = Vec::new();
    let mut violations = Vec::new();
    let mut visited = 0u64;

    for (k, s) in nrts.enumerate() {
        let k = k as u64;
        visited += 1;
        let lp = induced_loop(&s);
        if let Err(e) = lp.check_axioms() {
            violations.push(Violation { nrt: k, kind: ViolationKind::LoopAxioms { reason: e.to_string() } });
        }
        let cg = c_groupoid(&s);
        if let Err(detail) = cg.verify(&s) {
            violations.push(Violation { nrt: k, kind: ViolationKind::CGroupoid { detail } });
        }
        let criteria = BothSidedCriteria {
            sigma_surjective: cg.sigma_surjective_all(),
            unit_solvable: lp.solves_unit_equation(),
            both_sided: s.is_left_transversal(),
        };
        if !criteria.agree() {
            violations.push(Violation { nrt: k, kind: ViolationKind::BothSidedCriteria { criteria } });
        }
        let both = criteria.both_sided;
        let rip = lp.has_rip().is_some();
        let rcc = lp.is_rcc();
        let ar = s.is_ar_transversal();
        if rip && !both {
            violations.push(Violation { nrt: k, kind: ViolationKind::RipWithoutBothSided });
        }
        if rcc && !both {
            violations.push(Violation { nrt: k, kind: ViolationKind::RccWithoutBothSided });
        }
        if ar {
            if let Some(x) = (0..s.len()).find(|&x| !cg.sigma_is_identity(x)) {
                violations.push(Violation { nrt: k, kind: ViolationKind::ArWithNontrivialSigma { x } });
            }
        }
        counts.both_sided += u64::from(both);
        counts.rip += u64::from(rip);
        counts.rcc += u64::from(rcc);
        counts.ar += u64::from(ar);

        let class = classifier.push(lp);
        if class == class_info.len() {
            class_info.push((both, k));
        } else if class_info[class].0 != both {
            violations.push(Violation {
                nrt: k,
                kind: ViolationKind::IsomorphicButBothSidedDiffers { class_representative: class_info[class].1 },
            });
        }

        if opts.early_exit
            && counts.both_sided < visited
            && counts.rip < visited
            && counts.rcc < visited
            && counts.ar < visited
            && classifier.class_count() > 1
        {
            break;
        }
    }

    let is_normal = space.is_normal();
    let (witness, witness_is_left) = if is_normal {
        (None, None)
    } else {
        let w = non_left_transversal_witness(space)?;
        (Some(w.record()), Some(w.is_left_transversal()))
    };
    let classes = classifier.finish();
    Ok(AnalysisReport {
        group: GroupInfo::of(space.group()),
        subgroup: SubgroupInfo::of(space.subgroup()),
        index: space.index(),
        is_normal,
        nrt_count,
        counts,
        all_flags: AllFlags {
            both_sided: counts.both_sided == visited,
            isomorphic: classes.class_count == 1,
            rip: counts.rip == visited,
            rcc: counts.rcc == visited,
            ar: counts.ar == visited,
        },
        iso_class_count: classes.class_count,
        iso_class_sizes: classes.sizes,
        exhaustive: visited == nrt_count,
        witness,
        witness_is_left,
        violations,
    })
}

/// Normality agrees with all four "every transversal is ..." flags.
/// The `A_r` flag is not part of this equivalence.
pub fn check_normality_equivalence(r: &AnalysisReport) -> bool {
    let f = &r.all_flags;
    [f.both_sided, f.isomorphic, f.rip, f.rcc].iter().all(|&b| b == r.is_normal)
}

/// All transversals isomorphic implies normal.
pub fn check_isomorphism_implies_normal(r: &AnalysisReport) -> bool {
    !r.all_flags.isomorphic || r.is_normal
}

/// All transversals `A_r` implies normal. The converse may fail.
pub fn check_ar_implies_normal(r: &AnalysisReport) -> bool {
    !r.all_flags.ar || r.is_normal
}

/// Normal but some transversal is not `A_r`: a counterexample to the converse
/// of [`check_ar_implies_normal`].
pub fn is_ar_converse_counterexample(r: &AnalysisReport) -> bool {
    r.is_normal && !r.all_flags.ar
}

/// Witness present and failing to be a left transversal exactly when the
/// subgroup is not normal.
pub fn check_witness(r: &AnalysisReport) -> bool {
    if r.is_normal {
        r.witness.is_none()
    } else {
        r.witness.is_some() && r.witness_is_left == Some(false)
    }
}

/// Multiplication table of the quotient group on right cosets.
pub fn quotient_loop(space: &CosetSpace<'_>) -> Result<RightLoop> {
    if !space.is_normal() {
        return Err(Error::SubgroupNotNormal);
    }
    let g = space.group();
    let right = space.right();
    let reps: Vec<usize> = right.cosets().iter().map(|c| c[0]).collect();
    let rows = reps.iter().map(|&a| reps.iter().map(|&b| right.coset_of(g.mul(a, b))).collect()).collect();
    RightLoop::from_table(rows)
}

/// Odometer indices of the NRTs whose induced loop is not isomorphic to the
/// quotient group. Empty means every induced loop is.
pub fn quotient_mismatches(space: &CosetSpace<'_>, nrt_cap: u64) -> Result<Vec<u64>> {
    let quotient = quotient_loop(space)?;
    Ok(enumerate_nrts(space, nrt_cap)?
        .enumerate()
        .filter(|(_, s)| are_isomorphic(&quotient, &induced_loop(s)).is_none())
        .map(|(k, _)| k as u64)
        .collect())
}

pub fn quotient_iso_check(space: &CosetSpace<'_>, nrt_cap: u64) -> Result<bool> {
    Ok(quotient_mismatches(space, nrt_cap)?.is_empty())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct Checks {
    pub normality_equivalence: bool,
    pub isomorphism_implies_normal: bool,
    pub ar_implies_normal: bool,
    pub witness: bool,
    /// Only evaluated for normal subgroups.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub quotient: Option<bool>,
    pub per_transversal: bool,
}

impl Checks {
    pub fn all_pass(&self) -> bool {
        self.normality_equivalence
            && self.isomorphism_implies_normal
            && self.ar_implies_normal
            && self.witness
            && self.quotient != Some(false)
            && self.per_transversal
    }
}

/// An analyzed pair with its check results.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct PairResult {
    #[serde(flatten)]
    pub report: AnalysisReport,
    pub checks: Checks,
    pub checks_passed: bool,
}

/// Analyze a pair and run every check on it.
pub fn verify_pair(space: &CosetSpace<'_>, opts: &AnalyzeOptions) -> Result<PairResult> {
    let mut report = analyze(space, opts)?;
    let quotient = if report.is_normal {
        let bad = quotient_mismatches(space, opts.nrt_cap)?;
        report
            .violations
            .extend(bad.iter().map(|&nrt| Violation { nrt, kind: ViolationKind::NotIsomorphicToQuotient }));
        Some(bad.is_empty())
    } else {
        None
    };
    let checks = Checks {
        normality_equivalence: check_normality_equivalence(&report),
        isomorphism_implies_normal: check_isomorphism_implies_normal(&report),
        ar_implies_normal: check_ar_implies_normal(&report),
        witness: check_witness(&report),
        quotient,
        per_transversal: report.violations.is_empty(),
    };
    Ok(PairResult { checks_passed: checks.all_pass(), report, checks })
}

#[derive(Clone, Copy, Debug)]
pub struct SweepOptions {
    pub max_order: usize,
    pub nrt_cap: u64,
    pub subgroup_order_cap: usize,
    pub early_exit: bool,
    /// Spread pairs over the rayon thread pool. Output order is unaffected.
    pub parallel: bool,
}

impl Default for SweepOptions {
    fn default() -> Self {
        SweepOptions {
            max_order: 24,
            nrt_cap: DEFAULT_NRT_CAP,
            subgroup_order_cap: DEFAULT_SUBGROUP_SWEEP_CAP,
            early_exit: false,
            parallel: true,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Skip {
    pub group: GroupInfo,
    pub subgroup: Option<SubgroupInfo>,
    pub skipped: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum SweepEntry {
    Pair(PairResult),
    Skipped(Skip),
}

/// Where a sweep failed: the pair, the failed checks, and the first offending
/// transversal when one is known.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Failure {
    pub group: String,
    pub subgroup: Vec<usize>,
    pub checks: Checks,
    pub nrt: Option<u64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct SweepSummary {
    pub groups: usize,
    pub pairs_checked: usize,
    pub pairs_skipped: usize,
    pub nrts_visited: u64,
    pub ar_converse_counterexamples: usize,
    pub failures: Vec<Failure>,
    pub passed: bool,
}

#[derive(Clone, Debug)]
pub struct SweepOutcome {
    pub entries: Vec<SweepEntry>,
    pub summary: SweepSummary,
}

/// Analyze every subgroup of every catalog group of order at most
/// `max_order`. Pairs over the transversal cap and groups over the subgroup
/// cap are recorded as skips. Entries follow catalog order, then subgroup
/// order.
pub fn sweep(catalog: &[Group], opts: &SweepOptions) -> SweepOutcome {
    let groups: Vec<&Group> = catalog.iter().filter(|g| g.order() <= opts.max_order).collect();
    let mut tasks: Vec<(&Group, Option<Subgroup>, Option<String>)> = Vec::new();
    for g in &groups {
        match Subgroup::all(g, opts.subgroup_order_cap) {
            Ok(subs) => tasks.extend(subs.into_iter().map(|h| (*g, Some(h), None))),
            Err(e) => tasks.push((*g, None, Some(e.to_string()))),
        }
    }
    let analyze_opts = AnalyzeOptions { nrt_cap: opts.nrt_cap, early_exit: opts.early_exit };
    let run = |(g, h, err): &(&Group, Option<Subgroup>, Option<String>)| -> SweepEntry {
        let Some(h) = h else {
            return SweepEntry::Skipped(Skip {
                group: GroupInfo::of(g),
                subgroup: None,
                skipped: err.clone().unwrap_or_default(),
            });
        };
        let space = CosetSpace::new(g, h.clone());
        match verify_pair(&space, &analyze_opts) {
            Ok(r) => SweepEntry::Pair(r),
            Err(e) => SweepEntry::Skipped(Skip {
                group: GroupInfo::of(g),
                subgroup: Some(SubgroupInfo::of(h)),
                skipped: e.to_string(),
            }),
        }
    };
    let entries: Vec<SweepEntry> =
        if opts.parallel { tasks.par_iter().map(run).collect() } else { tasks.iter().map(run).collect() };
    let summary = summarize(groups.len(), &entries);
    SweepOutcome { entries, summary }
}

fn summarize(groups: usize, entries: &[SweepEntry]) -> SweepSummary {
    let mut s = SweepSummary {
        groups,
        pairs_checked: 0,
        pairs_skipped: 0,
        nrts_visited: 0,
        ar_converse_counterexamples: 0,
        failures: Vec::new(),
        passed: true,
    };
    for e in entries {
        match e {
            SweepEntry::Skipped(_) => s.pairs_skipped += 1,
            SweepEntry::Pair(p) => {
                s.pairs_checked += 1;
                s.nrts_visited += p.report.nrt_count;
                if is_ar_converse_counterexample(&p.report) {
                    s.ar_converse_counterexamples += 1;
                }
                if !p.checks_passed {
                    s.failures.push(Failure {
                        group: p.report.group.name.clone(),
                        subgroup: p.report.subgroup.elems.clone(),
                        checks: p.checks,
                        nrt: p.report.violations.first().map(|v| v.nrt),
                    });
                }
            }
        }
    }
    s.passed = s.failures.is_empty();
    s
}
