//! Extension semantics over finite frameworks.
//!
//! Everything here is computed by plain subset enumeration over the
//! conflict-free sets with a per-semantics filter. That baseline is the
//! correctness oracle for the whole crate; the bulk-search modules layer
//! memoization on top of it rather than replacing it.

use alloc::collections::BTreeMap;
use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use crate::af::Af;
use crate::equivalence::{enumerate_afs, standard_arg_names};
use crate::error::Error;
use crate::set::{subsets_of, subsets_of_universe, ArgSet, ExtensionSet};

/// The supported extension semantics.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum SemanticsKind {
    ConflictFree,
    Naive,
    Stable,
    Admissible,
    Preferred,
    Complete,
    Grounded,
    SemiStable,
    Stage,
    Ideal,
    Eager,
    StronglyAdmissible,
    /// Conflict-free sets whose range and anti-range jointly cover all
    /// arguments, with subset-maximal range. Sits between stable and stage.
    Stagle,
}

impl SemanticsKind {
    pub const ALL: [SemanticsKind; 13] = [
        SemanticsKind::ConflictFree,
        SemanticsKind::Naive,
        SemanticsKind::Stable,
        SemanticsKind::Admissible,
        SemanticsKind::Preferred,
        SemanticsKind::Complete,
        SemanticsKind::Grounded,
        SemanticsKind::SemiStable,
        SemanticsKind::Stage,
        SemanticsKind::Ideal,
        SemanticsKind::Eager,
        SemanticsKind::StronglyAdmissible,
        SemanticsKind::Stagle,
    ];

    pub fn tag(self) -> &'static str {
        match self {
            SemanticsKind::ConflictFree => "cf",
            SemanticsKind::Naive => "na",
            SemanticsKind::Stable => "stb",
            SemanticsKind::Admissible => "ad",
            SemanticsKind::Preferred => "pr",
            SemanticsKind::Complete => "co",
            SemanticsKind::Grounded => "gr",
            SemanticsKind::SemiStable => "ss",
            SemanticsKind::Stage => "stg",
            SemanticsKind::Ideal => "id",
            SemanticsKind::Eager => "eg",
            SemanticsKind::StronglyAdmissible => "sad",
            SemanticsKind::Stagle => "sta",
        }
    }

    pub fn from_tag(tag: &str) -> Option<SemanticsKind> {
        SemanticsKind::ALL.into_iter().find(|k| k.tag() == tag)
    }
}

impl core::fmt::Display for SemanticsKind {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.write_str(self.tag())
    }
}

/// One conflict-free set together with its range and anti-range.
struct CfRow {
    set: ArgSet,
    plus: ArgSet,
    minus: ArgSet,
}

fn cf_rows(af: &Af) -> Vec<CfRow> {
    subsets_of_universe(af.arg_count())
        .filter(|s| af.cf_unchecked(s))
        .map(|set| CfRow {
            plus: af.range_unchecked(&set),
            minus: af.anti_range_unchecked(&set),
            set,
        })
        .collect()
}

fn admissible(row: &CfRow) -> bool {
    // Attackers not struck back: anti-range minus range.
    row.minus.difference(&row.plus).is_empty()
}

/// Keeps the sets not strictly contained in another of the same list.
fn subset_maximal(sets: Vec<ArgSet>) -> Vec<ArgSet> {
    sets.iter()
        .filter(|s| !sets.iter().any(|t| *s != t && s.is_subset(t)))
        .cloned()
        .collect()
}

/// Rows whose `key(row)` is subset-maximal among all rows of the pool.
fn range_maximal<'a>(pool: &[&'a CfRow]) -> Vec<&'a CfRow> {
    pool.iter()
        .filter(|r| !pool.iter().any(|t| r.plus != t.plus && r.plus.is_subset(&t.plus)))
        .copied()
        .collect()
}

/// The extensions of `af` under `kind`, canonically ordered.
pub fn extensions(af: &Af, kind: SemanticsKind) -> ExtensionSet {
    let rows = cf_rows(af);
    match kind {
        SemanticsKind::ConflictFree => rows.into_iter().map(|r| r.set).collect(),
        SemanticsKind::Naive => {
            subset_maximal(rows.into_iter().map(|r| r.set).collect()).into_iter().collect()
        }
        SemanticsKind::Stable => {
            let all = af.all_args();
            rows.into_iter().filter(|r| r.plus == all).map(|r| r.set).collect()
        }
        SemanticsKind::Admissible => {
            rows.into_iter().filter(admissible).map(|r| r.set).collect()
        }
        SemanticsKind::Preferred => {
            let ad: Vec<ArgSet> = rows.into_iter().filter(admissible).map(|r| r.set).collect();
            subset_maximal(ad).into_iter().collect()
        }
        SemanticsKind::Complete => rows
            .into_iter()
            .filter(|r| admissible(r) && af.characteristic_unchecked(&r.set).is_subset(&r.set))
            .map(|r| r.set)
            .collect(),
        SemanticsKind::Grounded => {
            [grounded_fixpoint(af)].into_iter().collect()
        }
        SemanticsKind::SemiStable => {
            let ad: Vec<&CfRow> = rows.iter().filter(|r| admissible(r)).collect();
            range_maximal(&ad).into_iter().map(|r| r.set.clone()).collect()
        }
        SemanticsKind::Stage => {
            let pool: Vec<&CfRow> = rows.iter().collect();
            range_maximal(&pool).into_iter().map(|r| r.set.clone()).collect()
        }
        SemanticsKind::Ideal => {
            let ad: Vec<ArgSet> = rows.iter().filter(|r| admissible(r)).map(|r| r.set.clone()).collect();
            let preferred: ExtensionSet = subset_maximal(ad.clone()).into_iter().collect();
            unique_maximal_inside(ad, &preferred)
        }
        SemanticsKind::Eager => {
            let ad: Vec<&CfRow> = rows.iter().filter(|r| admissible(r)).collect();
            let semi_stable: ExtensionSet =
                range_maximal(&ad).into_iter().map(|r| r.set.clone()).collect();
            let ad_sets: Vec<ArgSet> = ad.into_iter().map(|r| r.set.clone()).collect();
            unique_maximal_inside(ad_sets, &semi_stable)
        }
        SemanticsKind::StronglyAdmissible => strongly_admissible_sets(af),
        SemanticsKind::Stagle => {
            let all = af.all_args();
            let pool: Vec<&CfRow> = rows.iter().collect();
            let covering: Vec<&CfRow> =
                pool.iter().filter(|r| r.plus.union(&r.minus) == all).copied().collect();
            covering
                .into_iter()
                .filter(|r| !pool.iter().any(|t| r.plus != t.plus && r.plus.is_subset(&t.plus)))
                .map(|r| r.set.clone())
                .collect()
        }
    }
}

/// Largest admissible candidate contained in the intersection of `fence`.
/// Both the ideal and the eager extension are defined this way; the maximum
/// is unique because admissible subsets of the fence core are closed under
/// union.
fn unique_maximal_inside(candidates: Vec<ArgSet>, fence: &ExtensionSet) -> ExtensionSet {
    let core = fence.common_core().expect("preferred/semi-stable families are never empty");
    let inside: Vec<ArgSet> = candidates.into_iter().filter(|s| s.is_subset(&core)).collect();
    let maxima = subset_maximal(inside);
    assert!(maxima.len() == 1, "ideal/eager extension must be unique, got {maxima:?}");
    maxima.into_iter().collect()
}

/// Least fixed point of the characteristic function, starting from the
/// empty set. Always the single grounded extension.
pub fn grounded_fixpoint(af: &Af) -> ArgSet {
    let mut current = ArgSet::empty();
    loop {
        let next = af.characteristic_unchecked(&current);
        if next == current {
            return current;
        }
        current = next;
    }
}

/// All strongly admissible sets, built constructively: every subset of the
/// unattacked arguments is strongly admissible, and a strongly admissible
/// `b` extends by any non-empty block of newly defended arguments.
pub fn strongly_admissible_sets(af: &Af) -> ExtensionSet {
    let mut known: BTreeSet<ArgSet> = BTreeSet::new();
    let unattacked = af.characteristic_unchecked(&ArgSet::empty());
    for seed in subsets_of(&unattacked) {
        known.insert(seed);
    }
    let mut queue: Vec<ArgSet> = known.iter().cloned().collect();
    while let Some(base) = queue.pop() {
        let gained = af.characteristic_unchecked(&base).difference(&base);
        if gained.is_empty() {
            continue;
        }
        for block in subsets_of(&gained) {
            if block.is_empty() {
                continue;
            }
            let extended = base.union(&block);
            if known.insert(extended.clone()) {
                queue.push(extended);
            }
        }
    }
    known.into_iter().collect()
}

/// Direct recursive reading of strong admissibility: every member must be
/// defended by a strongly admissible strict subset avoiding it. Kept as an
/// independent oracle for [`strongly_admissible_sets`]; exponential, only
/// sized for small frameworks.
pub fn is_strongly_admissible_recursive(af: &Af, s: &ArgSet) -> Result<bool, Error> {
    match s.max_member() {
        Some(id) if id >= af.arg_count() => {
            Err(Error::ArgumentOutOfRange { id, arg_count: af.arg_count() })
        }
        _ => {
            let mut memo = BTreeMap::new();
            Ok(sad_rec(af, s, &mut memo))
        }
    }
}

fn sad_rec(af: &Af, s: &ArgSet, memo: &mut BTreeMap<ArgSet, bool>) -> bool {
    if let Some(&v) = memo.get(s) {
        return v;
    }
    let verdict = s.iter().all(|a| {
        let mut rest = s.clone();
        rest.remove(a);
        subsets_of(&rest).any(|sub| af.defends_unchecked(&sub, a) && sad_rec(af, &sub, memo))
    });
    memo.insert(s.clone(), verdict);
    verdict
}

/// Exhaustively checks that deleting attacks between distinct self-loopers
/// never changes the extensions, over every framework on `n` arguments.
/// Returns the first counterexample in enumeration order, if any.
pub fn check_rational(kind: SemanticsKind, n: usize) -> Result<Option<Af>, Error> {
    let names = standard_arg_names(n)?;
    for af in enumerate_afs(&names)? {
        if extensions(&af, kind) != extensions(&af.loop_reduct(), kind) {
            return Ok(Some(af));
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::af::build_af;

    fn set(af: &Af, members: &[&str]) -> ArgSet {
        members.iter().map(|n| af.table().id(n).unwrap()).collect()
    }

    fn family(af: &Af, fam: &[&[&str]]) -> ExtensionSet {
        fam.iter().map(|ns| set(af, ns)).collect()
    }

    #[test]
    fn naive_extensions_of_the_loop_and_chain_pair() {
        let f = build_af(&["a", "b", "c", "d"], &[("b", "b"), ("d", "c")]);
        assert_eq!(extensions(&f, SemanticsKind::Naive), family(&f, &[&["a", "c"], &["a", "d"]]));
        let g = build_af(&["a", "b", "c", "d"], &[("a", "b"), ("b", "b"), ("b", "c"), ("c", "d")]);
        assert_eq!(extensions(&g, SemanticsKind::Naive), family(&g, &[&["a", "c"], &["a", "d"]]));
    }

    #[test]
    fn complete_extensions_with_a_defended_bystander() {
        let f2 = build_af(&["a", "b", "c"], &[("b", "b"), ("b", "c"), ("c", "b")]);
        assert_eq!(extensions(&f2, SemanticsKind::Complete), family(&f2, &[&["a"], &["a", "c"]]));
    }

    #[test]
    fn stagle_sits_strictly_between_stable_and_stage() {
        let f = build_af(&["a", "b", "c"], &[("a", "a"), ("a", "b"), ("b", "c"), ("c", "b")]);
        assert_eq!(extensions(&f, SemanticsKind::Stable), ExtensionSet::none());
        assert_eq!(extensions(&f, SemanticsKind::Stagle), family(&f, &[&["b"]]));
        assert_eq!(extensions(&f, SemanticsKind::Stage), family(&f, &[&["b"], &["c"]]));
    }

    #[test]
    fn semi_stable_and_eager_with_an_isolated_loop() {
        let f7 = build_af(&["a", "b", "c"], &[("c", "c"), ("a", "b"), ("b", "a"), ("b", "c")]);
        assert_eq!(extensions(&f7, SemanticsKind::SemiStable), family(&f7, &[&["b"]]));
        assert_eq!(extensions(&f7, SemanticsKind::Eager), family(&f7, &[&["b"]]));
        let f7p = build_af(&["a", "b", "c"], &[("c", "c"), ("a", "b"), ("b", "a")]);
        assert_eq!(extensions(&f7p, SemanticsKind::SemiStable), family(&f7p, &[&["a"], &["b"]]));
        assert_eq!(extensions(&f7p, SemanticsKind::Eager), family(&f7p, &[&[]]));
    }

    #[test]
    fn every_semantics_yields_the_empty_extension_on_the_empty_framework() {
        let empty = build_af::<&str>(&[], &[]);
        for kind in SemanticsKind::ALL {
            let es = extensions(&empty, kind);
            assert_eq!(es.len(), 1, "{kind}");
            assert!(es.contains(&ArgSet::empty()), "{kind}");
        }
    }

    #[test]
    fn grounded_fixpoint_iterates_the_characteristic_function() {
        let af = build_af(
            &["a", "b", "c", "d", "e", "f"],
            &[("a", "b"), ("b", "c"), ("c", "e"), ("e", "e"), ("e", "f"), ("f", "e"), ("d", "e")],
        );
        assert_eq!(grounded_fixpoint(&af), [0, 2, 3, 5].into_iter().collect());

        let f1 = build_af(&["a", "b"], &[("b", "b"), ("b", "a")]);
        assert_eq!(grounded_fixpoint(&f1), ArgSet::empty());

        let f2p = build_af(&["a", "b", "c"], &[("b", "b"), ("a", "b"), ("c", "b"), ("b", "c")]);
        assert_eq!(grounded_fixpoint(&f2p), [0, 2].into_iter().collect());
    }

    #[test]
    fn strongly_admissible_family_of_the_six_argument_example() {
        let af = build_af(
            &["a", "b", "c", "d", "e", "f"],
            &[("a", "b"), ("b", "c"), ("c", "e"), ("e", "e"), ("e", "f"), ("f", "e"), ("d", "e")],
        );
        let want = family(
            &af,
            &[
                &[],
                &["a"],
                &["d"],
                &["a", "d"],
                &["a", "c"],
                &["d", "f"],
                &["a", "c", "d"],
                &["a", "d", "f"],
                &["a", "c", "d", "f"],
                &["a", "c", "f"],
            ],
        );
        assert_eq!(extensions(&af, SemanticsKind::StronglyAdmissible), want);
    }

    #[test]
    fn recursive_strong_admissibility_matches_named_cases() {
        let af = build_af(
            &["a", "b", "c", "d", "e", "f"],
            &[("a", "b"), ("b", "c"), ("c", "e"), ("e", "e"), ("e", "f"), ("f", "e"), ("d", "e")],
        );
        assert_eq!(is_strongly_admissible_recursive(&af, &ArgSet::empty()), Ok(true));
        let acf: ArgSet = [0, 2, 5].into_iter().collect();
        assert_eq!(is_strongly_admissible_recursive(&af, &acf), Ok(true));
        assert_eq!(is_strongly_admissible_recursive(&af, &ArgSet::singleton(2)), Ok(false));
    }

    #[test]
    fn strongly_admissible_seeds_without_unattacked_arguments() {
        let f1 = build_af(&["a", "b"], &[("b", "b"), ("b", "a")]);
        assert_eq!(extensions(&f1, SemanticsKind::StronglyAdmissible), family(&f1, &[&[]]));
        let f1p = build_af(&["a", "b"], &[("b", "b")]);
        assert_eq!(
            extensions(&f1p, SemanticsKind::StronglyAdmissible),
            family(&f1p, &[&[], &["a"]])
        );
    }

    #[test]
    fn rationality_holds_for_small_bounds() {
        assert!(check_rational(SemanticsKind::Complete, 2).unwrap().is_none());
        assert!(check_rational(SemanticsKind::StronglyAdmissible, 2).unwrap().is_none());
        assert!(check_rational(SemanticsKind::Stagle, 2).unwrap().is_none());
        assert!(check_rational(SemanticsKind::Stable, 9).is_err());
    }
}
