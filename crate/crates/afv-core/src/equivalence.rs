//! Standard and expansion (strong) equivalence.
//!
//! Expansion equivalence is decided syntactically through kernels. A bounded
//! brute-force oracle cross-checks the kernel verdicts: two frameworks are
//! distinguished if some expansion over their shared arguments plus a few
//! fresh ones separates their extensions. The oracle enumerates whole
//! framework spaces, groups them by behaviour under every expansion, and
//! compares that partition against kernel equality.

use alloc::collections::BTreeMap;
use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::sync::Arc;
use alloc::vec::Vec;

use crate::af::{build_af, Af, ArgumentTable};
use crate::error::Error;
use crate::kernels::{apply_kernel, kernel_for, kernels_equal, KernelKind};
use crate::semantics::{extensions, SemanticsKind};
use crate::set::ExtensionSet;

/// Hard ceiling for whole-space enumeration: `2^(n*n)` frameworks.
pub const MAX_ENUM_ARGS: usize = 5;
/// Ceiling for searches that also materialize per-framework classes or
/// extension families.
pub const MAX_CLASS_SEARCH_ARGS: usize = 4;
/// Fresh arguments allowed in expansion counterexample searches.
pub const MAX_FRESH_ARGS: usize = 2;
/// Ceiling for the kernel-versus-oracle sweeps, which enumerate a framework
/// space and, per frame, every expansion of a larger space.
pub const MAX_ORACLE_ARGS: usize = 3;

const LETTERS: [&str; MAX_ENUM_ARGS] = ["a", "b", "c", "d", "e"];

/// The fixed argument names used by all exhaustive searches.
pub fn standard_arg_names(n: usize) -> Result<Vec<&'static str>, Error> {
    if n > MAX_ENUM_ARGS {
        return Err(Error::BoundExceeded { requested: n, limit: MAX_ENUM_ARGS });
    }
    Ok(LETTERS[..n].to_vec())
}

/// All `2^(n*n)` frameworks over a fixed argument set, in ascending order of
/// the attack-relation bitmask (`attacks(i, j)` is bit `i*n + j`).
pub fn enumerate_afs<S: AsRef<str>>(names: &[S]) -> Result<AfEnumerator, Error> {
    let n = names.len();
    if n > MAX_ENUM_ARGS {
        return Err(Error::BoundExceeded { requested: n, limit: MAX_ENUM_ARGS });
    }
    let table = Arc::new(ArgumentTable::from_names(names.iter().map(AsRef::as_ref)));
    Ok(AfEnumerator { table, next: 0, count: 1u64 << (n * n) })
}

pub struct AfEnumerator {
    table: Arc<ArgumentTable>,
    next: u64,
    count: u64,
}

impl Iterator for AfEnumerator {
    type Item = Af;

    fn next(&mut self) -> Option<Af> {
        if self.next >= self.count {
            return None;
        }
        let af = af_from_mask(&self.table, self.next);
        self.next += 1;
        Some(af)
    }
}

impl ExactSizeIterator for AfEnumerator {
    fn len(&self) -> usize {
        (self.count - self.next) as usize
    }
}

pub(crate) fn af_from_mask(table: &Arc<ArgumentTable>, mask: u64) -> Af {
    let n = table.len();
    let pairs = (0..n * n).filter(|k| mask >> k & 1 == 1).map(|k| (k / n, k % n));
    Af::new(table.clone(), pairs).expect("mask positions are in range")
}

pub(crate) fn af_to_mask(af: &Af) -> u64 {
    let n = af.arg_count();
    debug_assert!(n * n <= 64);
    af.attack_pairs().fold(0u64, |m, (a, b)| m | 1 << (a * n + b))
}

/// Extensions as a family of name sets, so frameworks with different id
/// assignments compare correctly.
fn named_extensions(af: &Af, kind: SemanticsKind) -> BTreeSet<Vec<String>> {
    extensions(af, kind)
        .iter()
        .map(|s| {
            let mut names: Vec<String> =
                s.iter().map(|i| af.table().name(i).to_string()).collect();
            names.sort();
            names
        })
        .collect()
}

/// Same extensions under `kind`, compared by argument name.
pub fn standard_equivalent(f: &Af, g: &Af, kind: SemanticsKind) -> bool {
    named_extensions(f, kind) == named_extensions(g, kind)
}

#[derive(Clone, Debug)]
pub struct EquivalenceVerdict {
    pub equivalent: bool,
    /// A distinguishing expansion, when one was found.
    pub witness: Option<Af>,
    /// Set when the verdict rests on a bounded search rather than a kernel.
    pub bound_note: Option<String>,
}

/// Kernel decision procedure for expansion equivalence. Exact for every
/// semantics with a known kernel; no witness search is performed.
pub fn expansion_equivalent(f: &Af, g: &Af, kind: SemanticsKind) -> Result<EquivalenceVerdict, Error> {
    let kernel = kernel_for(kind)?;
    Ok(EquivalenceVerdict {
        equivalent: kernels_equal(f, g, kernel),
        witness: None,
        bound_note: None,
    })
}

/// Bounded oracle: searches expansions over the shared arguments plus up to
/// `fresh` new ones. A positive verdict is only "no counterexample at this
/// bound"; a negative one carries a re-checkable witness.
pub fn expansion_equivalent_bounded(
    f: &Af,
    g: &Af,
    kind: SemanticsKind,
    fresh: usize,
) -> Result<EquivalenceVerdict, Error> {
    for extra in 0..=fresh {
        if let Some(h) = find_expansion_counterexample(f, g, kind, extra)? {
            return Ok(EquivalenceVerdict {
                equivalent: false,
                witness: Some(h),
                bound_note: Some(format!("distinguished with {extra} fresh argument(s)")),
            });
        }
    }
    Ok(EquivalenceVerdict {
        equivalent: true,
        witness: None,
        bound_note: Some(format!(
            "no distinguishing expansion over the shared arguments plus up to {fresh} fresh"
        )),
    })
}

fn fresh_names(taken: &BTreeSet<String>, count: usize) -> Vec<String> {
    let mut out = Vec::new();
    let mut i = 0;
    while out.len() < count {
        let candidate = format!("_f{i}");
        if !taken.contains(&candidate) {
            out.push(candidate);
        }
        i += 1;
    }
    out
}

/// Least expansion `h` over the union of both argument sets plus exactly
/// `fresh` new arguments with different extensions of `f ∪ h` and `g ∪ h`.
pub fn find_expansion_counterexample(
    f: &Af,
    g: &Af,
    kind: SemanticsKind,
    fresh: usize,
) -> Result<Option<Af>, Error> {
    if fresh > MAX_FRESH_ARGS {
        return Err(Error::BoundExceeded { requested: fresh, limit: MAX_FRESH_ARGS });
    }
    let mut names: Vec<String> = f.table().names().map(str::to_string).collect();
    for name in g.table().names() {
        if f.table().id(name).is_none() {
            names.push(name.to_string());
        }
    }
    let taken: BTreeSet<String> = names.iter().cloned().collect();
    names.extend(fresh_names(&taken, fresh));
    if names.len() > MAX_ENUM_ARGS {
        return Err(Error::BoundExceeded { requested: names.len(), limit: MAX_ENUM_ARGS });
    }
    // Everything lives on one shared table, so the unions are plain mask
    // unions and extension families compare by id.
    let table = Arc::new(ArgumentTable::from_names(&names));
    let f_mask = mask_on(&table, f);
    let g_mask = mask_on(&table, g);
    let n = names.len();
    for h in 0..1u64 << (n * n) {
        let fu = extensions(&af_from_mask(&table, f_mask | h), kind);
        let gu = extensions(&af_from_mask(&table, g_mask | h), kind);
        if fu != gu {
            return Ok(Some(af_from_mask(&table, h)));
        }
    }
    Ok(None)
}

/// Attack mask of `af` relative to a (super-) table of argument names.
fn mask_on(table: &Arc<ArgumentTable>, af: &Af) -> u64 {
    let n = table.len();
    af.attack_pairs().fold(0u64, |m, (a, b)| {
        let src = table.id(af.table().name(a)).expect("table covers both frameworks");
        let dst = table.id(af.table().name(b)).expect("table covers both frameworks");
        m | 1 << (src * n + dst)
    })
}

/// Outcome of comparing kernel equality against the bounded expansion oracle
/// over a whole framework space.
#[derive(Clone, Debug)]
pub struct IntermediateReport {
    pub holds: bool,
    pub violation: Option<IntermediateViolation>,
}

#[derive(Clone, Debug)]
pub enum IntermediateViolation {
    /// Kernels equal, yet the expansion `h` separates the two frameworks.
    Distinguished { f: Af, g: Af, h: Af },
    /// Kernels differ, yet no expansion at the bound separates them.
    Indistinguishable { f: Af, g: Af },
}

/// Behavioural index of one framework space: for every framework over the
/// base arguments, its group under "same extensions for every expansion over
/// the base arguments, with and without one fresh argument".
struct OracleIndex {
    base_table: Arc<ArgumentTable>,
    fresh_table: Arc<ArgumentTable>,
    n: usize,
    /// Extension ids per base-space mask.
    ids0: Vec<u32>,
    /// Extension ids per fresh-space mask.
    ids1: Vec<u32>,
    /// Representative (least member) of each framework's oracle group.
    group_rep: Vec<u64>,
}

fn extension_ids(table: &Arc<ArgumentTable>, kind: SemanticsKind) -> Vec<u32> {
    let n = table.len();
    let count = 1u64 << (n * n);
    let mut interner: BTreeMap<ExtensionSet, u32> = BTreeMap::new();
    (0..count)
        .map(|mask| {
            let es = extensions(&af_from_mask(table, mask), kind);
            let next = interner.len() as u32;
            *interner.entry(es).or_insert(next)
        })
        .collect()
}

/// Remaps an `n`-argument attack mask into the `(n+1)`-argument bit layout.
fn embed_mask(mask: u64, n: usize) -> u64 {
    let mut out = 0u64;
    for i in 0..n {
        for j in 0..n {
            if mask >> (i * n + j) & 1 == 1 {
                out |= 1 << (i * (n + 1) + j);
            }
        }
    }
    out
}

fn build_oracle_index(kind: SemanticsKind, n: usize) -> Result<OracleIndex, Error> {
    if n + 1 > MAX_ENUM_ARGS {
        return Err(Error::BoundExceeded { requested: n, limit: MAX_ENUM_ARGS - 1 });
    }
    let base_names = standard_arg_names(n)?;
    let base_table = Arc::new(ArgumentTable::from_names(&base_names));
    let mut fresh_names: Vec<String> = base_names.iter().map(|s| s.to_string()).collect();
    fresh_names.push("_f0".to_string());
    let fresh_table = Arc::new(ArgumentTable::from_names(&fresh_names));

    let ids0 = extension_ids(&base_table, kind);
    let ids1 = extension_ids(&fresh_table, kind);

    let count = ids0.len() as u64;
    let embedded: Vec<u64> = (0..count).map(|m| embed_mask(m, n)).collect();

    // Partition refinement: split groups by the extension id of F ∪ H for
    // every expansion H, first without then with the fresh argument.
    let mut groups: Vec<Vec<u64>> = alloc::vec![(0..count).collect()];
    let split = |groups: &mut Vec<Vec<u64>>, key: &dyn Fn(u64) -> u32| {
        let mut next = Vec::with_capacity(groups.len());
        for group in groups.drain(..) {
            if group.len() == 1 {
                next.push(group);
                continue;
            }
            let mut keyed: Vec<(u32, u64)> = group.iter().map(|&m| (key(m), m)).collect();
            keyed.sort_unstable();
            let mut run_start = 0;
            for i in 1..=keyed.len() {
                if i == keyed.len() || keyed[i].0 != keyed[run_start].0 {
                    next.push(keyed[run_start..i].iter().map(|&(_, m)| m).collect());
                    run_start = i;
                }
            }
        }
        *groups = next;
    };
    for h in 0..count {
        split(&mut groups, &|m| ids0[(m | h) as usize]);
    }
    for h in 0..ids1.len() as u64 {
        split(&mut groups, &|m| ids1[(embedded[m as usize] | h) as usize]);
    }

    let mut group_rep = alloc::vec![0u64; count as usize];
    for group in &groups {
        let rep = *group.iter().min().unwrap();
        for &m in group {
            group_rep[m as usize] = rep;
        }
    }
    Ok(OracleIndex { base_table, fresh_table, n, ids0, ids1, group_rep })
}

/// First expansion separating two base-space masks, if any.
fn first_separating_expansion(idx: &OracleIndex, f: u64, g: u64) -> Option<Af> {
    for h in 0..idx.ids0.len() as u64 {
        if idx.ids0[(f | h) as usize] != idx.ids0[(g | h) as usize] {
            return Some(af_from_mask(&idx.base_table, h));
        }
    }
    let (fe, ge) = (embed_mask(f, idx.n), embed_mask(g, idx.n));
    for h in 0..idx.ids1.len() as u64 {
        if idx.ids1[(fe | h) as usize] != idx.ids1[(ge | h) as usize] {
            return Some(af_from_mask(&idx.fresh_table, h));
        }
    }
    None
}

fn kernel_label(table: &Arc<ArgumentTable>, mask: u64, kernel: KernelKind) -> u64 {
    af_to_mask(&apply_kernel(&af_from_mask(table, mask), kernel))
}

/// Checks, over every framework pair on `n` arguments, that kernel equality
/// coincides with the bounded expansion oracle.
///
/// Kernel-equal pairs must be indistinguishable under every expansion over
/// the shared arguments plus one fresh argument. Kernel-different pairs must
/// be separated by some such expansion, or — where one fresh argument is not
/// enough, which genuinely happens for the grounded-kernel semantics — by a
/// targeted search over expansions with two fresh arguments.
///
/// For the stable-stage intermediate (`sta`) the theorem is known to fail;
/// the report carries the standard three-argument witness against the stable
/// kernel.
pub fn check_intermediate_theorem(kind: SemanticsKind, n: usize) -> Result<IntermediateReport, Error> {
    if kind == SemanticsKind::Stagle {
        return Ok(stagle_incompatibility_witness());
    }
    if n > MAX_ORACLE_ARGS {
        return Err(Error::BoundExceeded { requested: n, limit: MAX_ORACLE_ARGS });
    }
    let kernel = kernel_for(kind)?;
    let idx = build_oracle_index(kind, n)?;
    let count = idx.ids0.len() as u64;
    let kernels: Vec<u64> =
        (0..count).map(|m| kernel_label(&idx.base_table, m, kernel)).collect();

    // Soundness: a kernel class must never be split by the oracle.
    let mut by_kernel: BTreeMap<u64, u64> = BTreeMap::new();
    for m in 0..count {
        if let Some(&other) = by_kernel.get(&kernels[m as usize]) {
            if idx.group_rep[other as usize] != idx.group_rep[m as usize] {
                let f = af_from_mask(&idx.base_table, other);
                let g = af_from_mask(&idx.base_table, m);
                let h = first_separating_expansion(&idx, other, m)
                    .expect("diverging oracle groups must have a separating expansion");
                return Ok(IntermediateReport {
                    holds: false,
                    violation: Some(IntermediateViolation::Distinguished { f, g, h }),
                });
            }
        } else {
            by_kernel.insert(kernels[m as usize], m);
        }
    }

    // Completeness: within an oracle group, every pair of kernel classes
    // needs a separating expansion; fall back to two fresh arguments for the
    // pairs the one-fresh sweep could not split.
    let mut class_reps: BTreeMap<u64, Vec<u64>> = BTreeMap::new();
    for m in 0..count {
        let entry = class_reps.entry(idx.group_rep[m as usize]).or_default();
        if !entry.iter().any(|&r| kernels[r as usize] == kernels[m as usize]) {
            entry.push(m);
        }
    }
    for reps in class_reps.values() {
        for (i, &f_mask) in reps.iter().enumerate() {
            for &g_mask in &reps[i + 1..] {
                let f = af_from_mask(&idx.base_table, f_mask);
                let g = af_from_mask(&idx.base_table, g_mask);
                if deep_counterexample(&f, &g, kind)?.is_none() {
                    return Ok(IntermediateReport {
                        holds: false,
                        violation: Some(IntermediateViolation::Indistinguishable { f, g }),
                    });
                }
            }
        }
    }
    Ok(IntermediateReport { holds: true, violation: None })
}

/// Expansion search over the shared arguments plus two fresh ones, walking
/// candidates in ascending attack-count order (then mask order). The known
/// separating constructions use only a handful of attacks, so this stays
/// cheap even though the full space is large.
fn deep_counterexample(f: &Af, g: &Af, kind: SemanticsKind) -> Result<Option<Af>, Error> {
    let mut names: Vec<String> = f.table().names().map(str::to_string).collect();
    for name in g.table().names() {
        if f.table().id(name).is_none() {
            names.push(name.to_string());
        }
    }
    let taken: BTreeSet<String> = names.iter().cloned().collect();
    names.extend(fresh_names(&taken, 2));
    if names.len() > MAX_ENUM_ARGS + 1 {
        return Err(Error::BoundExceeded { requested: names.len(), limit: MAX_ENUM_ARGS + 1 });
    }
    let table = Arc::new(ArgumentTable::from_names(&names));
    let f_mask = mask_on(&table, f);
    let g_mask = mask_on(&table, g);
    let bits = names.len() * names.len();
    for h in masks_by_popcount(bits) {
        let fu = extensions(&af_from_mask(&table, f_mask | h), kind);
        let gu = extensions(&af_from_mask(&table, g_mask | h), kind);
        if fu != gu {
            return Ok(Some(af_from_mask(&table, h)));
        }
    }
    Ok(None)
}

/// All masks over `bits` positions, ordered by population count then value.
fn masks_by_popcount(bits: usize) -> impl Iterator<Item = u64> {
    debug_assert!(bits < 64);
    (0..=bits as u32).flat_map(move |ones| {
        let mut next = if ones == 0 { Some(0u64) } else { Some((1u64 << ones) - 1) };
        core::iter::from_fn(move || {
            let current = next?;
            next = if current == 0 {
                None
            } else {
                // Gosper's hack: next value with the same number of bits.
                let low = current & current.wrapping_neg();
                let ripple = current + low;
                let after = Some((((current ^ ripple) >> 2) / low) | ripple);
                after.filter(|&v| v < 1u64 << bits)
            };
            Some(current)
        })
    })
}

/// One-sided check: kernel equality under `kernel` must imply oracle
/// equivalence for `kind`. Returns the first violating pair with its
/// separating expansion.
pub fn check_kernel_soundness(
    kind: SemanticsKind,
    kernel: KernelKind,
    n: usize,
) -> Result<Option<(Af, Af, Af)>, Error> {
    if n > MAX_ORACLE_ARGS {
        return Err(Error::BoundExceeded { requested: n, limit: MAX_ORACLE_ARGS });
    }
    let idx = build_oracle_index(kind, n)?;
    let count = idx.ids0.len() as u64;
    let mut by_kernel: BTreeMap<u64, u64> = BTreeMap::new();
    for m in 0..count {
        let k = kernel_label(&idx.base_table, m, kernel);
        if let Some(&other) = by_kernel.get(&k) {
            if idx.group_rep[other as usize] != idx.group_rep[m as usize] {
                let f = af_from_mask(&idx.base_table, other);
                let g = af_from_mask(&idx.base_table, m);
                let h = first_separating_expansion(&idx, other, m)
                    .expect("diverging oracle groups must have a separating expansion");
                return Ok(Some((f, g, h)));
            }
        } else {
            by_kernel.insert(k, m);
        }
    }
    Ok(None)
}

/// The three-argument framework whose stable kernel changes its stable-stage
/// intermediate extensions: a self-looping attacker feeding a mutual pair.
pub fn stagle_witness_af() -> Af {
    build_af(&["a", "b", "c"], &[("a", "a"), ("a", "b"), ("b", "c"), ("c", "b")])
}

fn stagle_incompatibility_witness() -> IntermediateReport {
    let f = stagle_witness_af();
    let g = apply_kernel(&f, KernelKind::Stable);
    debug_assert!(kernels_equal(&f, &g, KernelKind::Stable));
    debug_assert!(!standard_equivalent(&f, &g, SemanticsKind::Stagle));
    let h = build_af(&["a", "b", "c"], &[]);
    IntermediateReport {
        holds: false,
        violation: Some(IntermediateViolation::Distinguished { f, g, h }),
    }
}
