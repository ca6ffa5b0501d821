//! Verification classes: how much neighborhood information a semantics needs.
//!
//! A neighborhood function combines the range and anti-range of a
//! conflict-free set through basic set operations. Applying one to every
//! conflict-free set of a framework yields its verification class — an
//! information budget. The fifteen canonical functions form a lattice under
//! "more informative", hardcoded here and re-derivable by a brute-force
//! oracle; a criterion per semantics recomputes its extensions from the
//! matching class alone.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use crate::af::Af;
use crate::equivalence::{af_from_mask, standard_arg_names, MAX_CLASS_SEARCH_ARGS};
use crate::error::Error;
use crate::semantics::{extensions, SemanticsKind};
use crate::set::{subsets_of_universe, ArgSet, ExtensionSet};

/// The eight basic one-output set operations on (range, anti-range).
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum BasicFn {
    /// Constant empty set.
    Eps,
    /// First component (the range).
    Plus,
    /// Second component (the anti-range).
    Minus,
    /// Second minus first.
    Mp,
    /// First minus second.
    Pm,
    Cap,
    Cup,
    Delta,
}

impl BasicFn {
    pub const ALL: [BasicFn; 8] = [
        BasicFn::Eps,
        BasicFn::Plus,
        BasicFn::Minus,
        BasicFn::Mp,
        BasicFn::Pm,
        BasicFn::Cap,
        BasicFn::Cup,
        BasicFn::Delta,
    ];

    pub fn ascii_name(self) -> &'static str {
        match self {
            BasicFn::Eps => "eps",
            BasicFn::Plus => "p",
            BasicFn::Minus => "m",
            BasicFn::Mp => "mp",
            BasicFn::Pm => "pm",
            BasicFn::Cap => "cap",
            BasicFn::Cup => "cup",
            BasicFn::Delta => "delta",
        }
    }

    pub fn from_ascii(name: &str) -> Option<BasicFn> {
        BasicFn::ALL.into_iter().find(|b| b.ascii_name() == name)
    }
}

/// Applies one basic operation to a (range, anti-range) pair.
pub fn eval_basic(basic: BasicFn, plus: &ArgSet, minus: &ArgSet) -> ArgSet {
    match basic {
        BasicFn::Eps => ArgSet::empty(),
        BasicFn::Plus => plus.clone(),
        BasicFn::Minus => minus.clone(),
        BasicFn::Mp => minus.difference(plus),
        BasicFn::Pm => plus.difference(minus),
        BasicFn::Cap => plus.intersection(minus),
        BasicFn::Cup => plus.union(minus),
        BasicFn::Delta => plus.symmetric_difference(minus),
    }
}

/// The fifteen canonical neighborhood functions. Every combination of basic
/// operations collapses onto one of these without losing or gaining
/// information.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum NeighborhoodFn {
    Eps,
    Plus,
    Pm,
    Cap,
    Delta,
    Cup,
    Mp,
    Minus,
    PlusPm,
    PlusMp,
    PmMp,
    CapCup,
    MinusPm,
    MinusMp,
    PlusMinus,
}

use NeighborhoodFn as NF;

impl NeighborhoodFn {
    pub const ALL: [NF; 15] = [
        NF::Eps,
        NF::Plus,
        NF::Pm,
        NF::Cap,
        NF::Delta,
        NF::Cup,
        NF::Mp,
        NF::Minus,
        NF::PlusPm,
        NF::PlusMp,
        NF::PmMp,
        NF::CapCup,
        NF::MinusPm,
        NF::MinusMp,
        NF::PlusMinus,
    ];

    fn index(self) -> usize {
        NF::ALL.iter().position(|&x| x == self).unwrap()
    }

    /// The basic operations making up this function, in image order.
    pub fn components(self) -> &'static [BasicFn] {
        match self {
            NF::Eps => &[BasicFn::Eps],
            NF::Plus => &[BasicFn::Plus],
            NF::Pm => &[BasicFn::Pm],
            NF::Cap => &[BasicFn::Cap],
            NF::Delta => &[BasicFn::Delta],
            NF::Cup => &[BasicFn::Cup],
            NF::Mp => &[BasicFn::Mp],
            NF::Minus => &[BasicFn::Minus],
            NF::PlusPm => &[BasicFn::Plus, BasicFn::Pm],
            NF::PlusMp => &[BasicFn::Plus, BasicFn::Mp],
            NF::PmMp => &[BasicFn::Pm, BasicFn::Mp],
            NF::CapCup => &[BasicFn::Cap, BasicFn::Cup],
            NF::MinusPm => &[BasicFn::Minus, BasicFn::Pm],
            NF::MinusMp => &[BasicFn::Minus, BasicFn::Mp],
            NF::PlusMinus => &[BasicFn::Plus, BasicFn::Minus],
        }
    }

    pub fn arity(self) -> usize {
        self.components().len()
    }

    pub fn ascii_name(self) -> &'static str {
        match self {
            NF::Eps => "eps",
            NF::Plus => "+",
            NF::Pm => "pm",
            NF::Cap => "cap",
            NF::Delta => "delta",
            NF::Cup => "cup",
            NF::Mp => "mp",
            NF::Minus => "-",
            NF::PlusPm => "+pm",
            NF::PlusMp => "+mp",
            NF::PmMp => "pmmp",
            NF::CapCup => "capcup",
            NF::MinusPm => "-pm",
            NF::MinusMp => "-mp",
            NF::PlusMinus => "+-",
        }
    }

    /// Parses either a canonical name (`+-`, `capcup`) or a comma-separated
    /// list of basic operation names (`p,mp`), canonicalizing the latter.
    pub fn parse(text: &str) -> Option<NF> {
        if let Some(nf) = NF::ALL.into_iter().find(|nf| nf.ascii_name() == text) {
            return Some(nf);
        }
        let basics: Option<Vec<BasicFn>> =
            text.split(',').map(|t| BasicFn::from_ascii(t.trim())).collect();
        basics.map(|bs| canonicalize(&bs))
    }

    /// Bitmask over `ALL` of everything at least as informative as `self`.
    fn upset(self) -> u16 {
        // Index layout: 0 eps | 1..=7 the single operations | 8..=13 the
        // two-operation representatives | 14 the full pair.
        const UP: [u16; 15] = [
            0x7fff,                                    // eps: below everything
            1 << 1 | 1 << 8 | 1 << 9 | 1 << 14,        // +  -> +pm, +mp
            1 << 2 | 1 << 8 | 1 << 10 | 1 << 12 | 1 << 14, // pm -> +pm, pmmp, -pm
            1 << 3 | 1 << 8 | 1 << 11 | 1 << 13 | 1 << 14, // cap -> +pm, capcup, -mp
            1 << 4 | 1 << 10 | 1 << 11 | 1 << 14,      // delta -> pmmp, capcup
            1 << 5 | 1 << 9 | 1 << 11 | 1 << 12 | 1 << 14, // cup -> +mp, capcup, -pm
            1 << 6 | 1 << 9 | 1 << 10 | 1 << 13 | 1 << 14, // mp -> +mp, pmmp, -mp
            1 << 7 | 1 << 12 | 1 << 13 | 1 << 14,      // -  -> -pm, -mp
            1 << 8 | 1 << 14,
            1 << 9 | 1 << 14,
            1 << 10 | 1 << 14,
            1 << 11 | 1 << 14,
            1 << 12 | 1 << 14,
            1 << 13 | 1 << 14,
            1 << 14,
        ];
        UP[self.index()]
    }

    /// True iff everything `other` can tell about a framework is recoverable
    /// from `self`'s images (`self` is at least as informative).
    pub fn more_informative(self, other: NF) -> bool {
        other.upset() >> self.index() & 1 == 1
    }

    /// Least upper bound in the informativeness lattice.
    pub fn join(self, other: NF) -> NF {
        let both = self.upset() & other.upset();
        // Indices are ordered by lattice level, so the lowest set bit is the
        // unique minimal common upper bound.
        NF::ALL[both.trailing_zeros() as usize]
    }
}

impl core::fmt::Display for NeighborhoodFn {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.write_str(self.ascii_name())
    }
}

/// Collapses any set of basic operations onto its canonical representative:
/// duplicates and the empty operation are dropped, then pairs merge until a
/// single representative remains.
pub fn canonicalize(basics: &[BasicFn]) -> NeighborhoodFn {
    basics
        .iter()
        .filter(|&&b| b != BasicFn::Eps)
        .map(|&b| single(b))
        .fold(NF::Eps, NF::join)
}

fn single(b: BasicFn) -> NeighborhoodFn {
    match b {
        BasicFn::Eps => NF::Eps,
        BasicFn::Plus => NF::Plus,
        BasicFn::Minus => NF::Minus,
        BasicFn::Mp => NF::Mp,
        BasicFn::Pm => NF::Pm,
        BasicFn::Cap => NF::Cap,
        BasicFn::Cup => NF::Cup,
        BasicFn::Delta => NF::Delta,
    }
}

/// Pairwise merge table for the single operations. `join` must agree with
/// this on every pair; the tests enforce it.
#[cfg(test)]
fn merge_pair(a: BasicFn, b: BasicFn) -> NeighborhoodFn {
    use BasicFn::*;
    let key = if a <= b { (a, b) } else { (b, a) };
    match key {
        (Plus, Pm) | (Plus, Cap) | (Pm, Cap) => NF::PlusPm,
        (Plus, Mp) | (Plus, Cup) | (Mp, Cup) => NF::PlusMp,
        (Mp, Pm) | (Pm, Delta) | (Mp, Delta) => NF::PmMp,
        (Cap, Cup) | (Cap, Delta) | (Cup, Delta) => NF::CapCup,
        (Minus, Pm) | (Minus, Cup) | (Pm, Cup) => NF::MinusPm,
        (Minus, Mp) | (Minus, Cap) | (Mp, Cap) => NF::MinusMp,
        (Plus, Minus) | (Plus, Delta) | (Minus, Delta) => NF::PlusMinus,
        (x, y) if x == y => single(x),
        (Eps, x) | (x, Eps) => single(x),
        _ => unreachable!(),
    }
}

/// The cover relation of the informativeness lattice: every pair `(x, y)`
/// with `x` strictly below `y` and nothing in between, in index order.
pub fn cover_edges() -> Vec<(NeighborhoodFn, NeighborhoodFn)> {
    let mut edges = Vec::new();
    for x in NF::ALL {
        for y in NF::ALL {
            if x == y || !y.more_informative(x) {
                continue;
            }
            let covered = NF::ALL.iter().any(|&z| {
                z != x && z != y && z.more_informative(x) && y.more_informative(z)
            });
            if !covered {
                edges.push((x, y));
            }
        }
    }
    edges
}

/// Brute-force informativeness check: over a four-element universe realizing
/// every membership pattern, `x` is at least as informative as `y` iff the
/// `x`-images never collide on inputs where the `y`-images differ. The basic
/// operations act element-wise, so four elements decide the general case.
pub fn informativeness_oracle(x: NeighborhoodFn, y: NeighborhoodFn) -> bool {
    oracle_on_images(x.components(), y.components())
}

/// Re-derives the hardcoded lattice from the brute-force oracle: all 225
/// ordered representative pairs must agree.
pub fn lattice_agrees_with_oracle() -> bool {
    NF::ALL.iter().all(|&x| {
        NF::ALL.iter().all(|&y| x.more_informative(y) == informativeness_oracle(x, y))
    })
}

/// Checks every non-empty subset of the seven proper basic operations:
/// the merge fixpoint must not depend on fold order, and the oracle must
/// confirm that the subset and its representative carry the same
/// information. Exactly the fourteen non-trivial representatives (plus the
/// constant function for the empty set) may appear.
pub fn canonicalization_confluent() -> bool {
    let proper = [
        BasicFn::Plus,
        BasicFn::Minus,
        BasicFn::Mp,
        BasicFn::Pm,
        BasicFn::Cap,
        BasicFn::Cup,
        BasicFn::Delta,
    ];
    let mut seen: alloc::collections::BTreeSet<NeighborhoodFn> = alloc::collections::BTreeSet::new();
    for mask in 1u8..128 {
        let subset: Vec<BasicFn> =
            (0..7).filter(|i| mask >> i & 1 == 1).map(|i| proper[i]).collect();
        let rep = canonicalize(&subset);
        seen.insert(rep);
        // Any fold order must land on the same representative.
        let mut rotated = subset.clone();
        for _ in 0..subset.len() {
            rotated.rotate_left(1);
            if canonicalize(&rotated) != rep {
                return false;
            }
        }
        let mut reversed = subset.clone();
        reversed.reverse();
        if canonicalize(&reversed) != rep {
            return false;
        }
        // Mutual derivability between the raw subset and its representative.
        if !oracle_on_images(&subset, rep.components())
            || !oracle_on_images(rep.components(), &subset)
        {
            return false;
        }
    }
    // Every proper representative is hit; eps only by the empty set.
    seen.len() == 14 && !seen.contains(&NF::Eps) && canonicalize(&[]) == NF::Eps
}

pub(crate) fn oracle_on_images(x: &[BasicFn], y: &[BasicFn]) -> bool {
    let mut seen: BTreeMap<Vec<ArgSet>, Vec<ArgSet>> = BTreeMap::new();
    let subsets: Vec<ArgSet> = subsets_of_universe(4).collect();
    for s in &subsets {
        for t in &subsets {
            let key: Vec<ArgSet> = x.iter().map(|&b| eval_basic(b, s, t)).collect();
            let val: Vec<ArgSet> = y.iter().map(|&b| eval_basic(b, s, t)).collect();
            match seen.get(&key) {
                Some(prev) if *prev != val => return false,
                Some(_) => {}
                None => {
                    seen.insert(key, val);
                }
            }
        }
    }
    true
}

/// One entry of a verification class: a conflict-free set and its images.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct ClassTuple {
    pub set: ArgSet,
    pub images: Vec<ArgSet>,
}

/// All (conflict-free set, images) tuples of a framework under one
/// neighborhood function, canonically ordered by set.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct VerificationClass {
    function: NeighborhoodFn,
    tuples: Vec<ClassTuple>,
}

impl VerificationClass {
    pub fn function(&self) -> NeighborhoodFn {
        self.function
    }

    pub fn tuples(&self) -> &[ClassTuple] {
        &self.tuples
    }
}

pub fn verification_class(af: &Af, function: NeighborhoodFn) -> VerificationClass {
    let comps = function.components();
    let mut tuples: Vec<ClassTuple> = subsets_of_universe(af.arg_count())
        .filter(|s| af.cf_unchecked(s))
        .map(|set| {
            let plus = af.range_unchecked(&set);
            let minus = af.anti_range_unchecked(&set);
            let images = comps.iter().map(|&b| eval_basic(b, &plus, &minus)).collect();
            ClassTuple { set, images }
        })
        .collect();
    tuples.sort_by(|a, b| a.set.cmp(&b.set));
    VerificationClass { function, tuples }
}

/// The exact verification class of each semantics with a known criterion.
pub fn exact_class_for(kind: SemanticsKind) -> Option<NeighborhoodFn> {
    match kind {
        SemanticsKind::Naive => Some(NF::Eps),
        SemanticsKind::Stable | SemanticsKind::Stage => Some(NF::Plus),
        SemanticsKind::Admissible | SemanticsKind::Preferred | SemanticsKind::Ideal => {
            Some(NF::Mp)
        }
        SemanticsKind::SemiStable | SemanticsKind::Eager => Some(NF::PlusMp),
        SemanticsKind::Grounded | SemanticsKind::StronglyAdmissible => Some(NF::MinusPm),
        SemanticsKind::Complete => Some(NF::PlusMinus),
        SemanticsKind::ConflictFree | SemanticsKind::Stagle => None,
    }
}

/// Recomputes the extensions of a semantics from its verification class and
/// the argument set alone — no access to the framework.
///
/// The class must have been built with [`exact_class_for`]`(kind)`.
pub fn gamma(
    kind: SemanticsKind,
    class: &VerificationClass,
    all_args: &ArgSet,
) -> Result<ExtensionSet, Error> {
    let expected = exact_class_for(kind).ok_or(Error::UnsupportedSemantics {
        semantics: kind,
        reason: "no verification criterion is associated with this semantics",
    })?;
    if class.function != expected {
        return Err(Error::ClassMismatch { expected, found: class.function });
    }
    let t = &class.tuples;
    Ok(match kind {
        SemanticsKind::Naive => maximal_sets(t.iter().map(|u| u.set.clone()).collect()),
        SemanticsKind::Stable => {
            t.iter().filter(|u| u.images[0] == *all_args).map(|u| u.set.clone()).collect()
        }
        SemanticsKind::Stage => {
            let pool: Vec<&ClassTuple> = t.iter().collect();
            image_maximal(&pool, 0).into_iter().map(|u| u.set.clone()).collect()
        }
        SemanticsKind::Admissible => gamma_admissible(t, 0).into_iter().cloned().collect(),
        SemanticsKind::Preferred => {
            maximal_sets(gamma_admissible(t, 0).into_iter().cloned().collect())
        }
        SemanticsKind::Ideal => {
            let ad: Vec<ArgSet> = gamma_admissible(t, 0).into_iter().cloned().collect();
            let pr = maximal_sets(ad.clone());
            fenced_maximum(ad, &pr)
        }
        SemanticsKind::SemiStable => {
            let ad: Vec<&ClassTuple> = t.iter().filter(|u| u.images[1].is_empty()).collect();
            image_maximal(&ad, 0).into_iter().map(|u| u.set.clone()).collect()
        }
        SemanticsKind::Eager => {
            let ad: Vec<&ClassTuple> = t.iter().filter(|u| u.images[1].is_empty()).collect();
            let ss: ExtensionSet =
                image_maximal(&ad, 0).into_iter().map(|u| u.set.clone()).collect();
            fenced_maximum(ad.into_iter().map(|u| u.set.clone()).collect(), &ss)
        }
        SemanticsKind::StronglyAdmissible => gamma_strongly_admissible(t).into_iter().collect(),
        SemanticsKind::Grounded => {
            let sad = gamma_strongly_admissible(t);
            sad.iter()
                .filter(|s| {
                    let me = t.iter().find(|u| u.set == **s).unwrap();
                    !t.iter().any(|bigger| {
                        me.set != bigger.set
                            && me.set.is_subset(&bigger.set)
                            && chain_link(me, bigger)
                    })
                })
                .cloned()
                .collect()
        }
        SemanticsKind::Complete => t
            .iter()
            .filter(|u| u.images[1].difference(&u.images[0]).is_empty())
            .filter(|u| {
                !t.iter().any(|bigger| {
                    u.set != bigger.set
                        && u.set.is_subset(&bigger.set)
                        // Every attacker the bigger set has is already in the
                        // candidate's range, i.e. the candidate defends it.
                        && bigger.images[1].difference(&bigger.set).is_subset(&u.images[0])
                })
            })
            .map(|u| u.set.clone())
            .collect(),
        SemanticsKind::ConflictFree | SemanticsKind::Stagle => unreachable!(),
    })
}

fn maximal_sets(sets: Vec<ArgSet>) -> ExtensionSet {
    sets.iter()
        .filter(|s| !sets.iter().any(|u| *s != u && s.is_subset(u)))
        .cloned()
        .collect()
}

fn image_maximal<'a>(tuples: &[&'a ClassTuple], img: usize) -> Vec<&'a ClassTuple> {
    tuples
        .iter()
        .filter(|u| {
            !tuples
                .iter()
                .any(|v| u.images[img] != v.images[img] && u.images[img].is_subset(&v.images[img]))
        })
        .copied()
        .collect()
}

/// Tuples whose image at `img` is empty — the admissibility test when that
/// image is anti-range minus range.
fn gamma_admissible(tuples: &[ClassTuple], img: usize) -> Vec<&ArgSet> {
    tuples.iter().filter(|u| u.images[img].is_empty()).map(|u| &u.set).collect()
}

/// Largest candidate inside the intersection of the fence family.
fn fenced_maximum(candidates: Vec<ArgSet>, fence: &ExtensionSet) -> ExtensionSet {
    let core = fence.common_core().unwrap_or_default();
    maximal_sets(candidates.into_iter().filter(|s| s.is_subset(&core)).collect())
}

/// Chain step for strong admissibility on a (anti-range, range-minus-anti-range)
/// class: every attacker of `next` not already handled by `prev`'s anti-range
/// must lie in `prev`'s one-sided range.
fn chain_link(prev: &ClassTuple, next: &ClassTuple) -> bool {
    next.images[0]
        .difference(&next.set)
        .difference(&prev.images[0])
        .is_subset(&prev.images[1])
}

fn gamma_strongly_admissible(tuples: &[ClassTuple]) -> Vec<ArgSet> {
    // Tuples come sorted by cardinality, so a single pass suffices.
    let mut reachable: Vec<bool> = alloc::vec![false; tuples.len()];
    let mut out = Vec::new();
    for i in 0..tuples.len() {
        if tuples[i].set.is_empty() {
            reachable[i] = true;
        } else {
            reachable[i] = (0..tuples.len()).any(|j| {
                reachable[j]
                    && tuples[j].set != tuples[i].set
                    && tuples[j].set.is_subset(&tuples[i].set)
                    && chain_link(&tuples[j], &tuples[i])
            });
        }
        if reachable[i] {
            out.push(tuples[i].set.clone());
        }
    }
    out
}

/// Searches all frameworks over `n` named arguments for two with identical
/// verification classes under `x` but different extensions under `kind`.
/// Returns the least such pair in enumeration order, if any.
pub fn find_verifiability_counterexample(
    kind: SemanticsKind,
    x: NeighborhoodFn,
    n: usize,
) -> Result<Option<(Af, Af)>, Error> {
    if n > MAX_CLASS_SEARCH_ARGS {
        return Err(Error::BoundExceeded { requested: n, limit: MAX_CLASS_SEARCH_ARGS });
    }
    let names = standard_arg_names(n)?;
    let table = alloc::sync::Arc::new(crate::af::ArgumentTable::from_names(names));
    let count = 1u64 << (n * n);
    let exts: Vec<ExtensionSet> =
        (0..count).map(|m| extensions(&af_from_mask(&table, m), kind)).collect();
    Ok(collision_search(&table, x, &exts)
        .map(|(a, b)| (af_from_mask(&table, a), af_from_mask(&table, b))))
}

pub(crate) fn collision_search(
    table: &alloc::sync::Arc<crate::af::ArgumentTable>,
    x: NeighborhoodFn,
    exts: &[ExtensionSet],
) -> Option<(u64, u64)> {
    struct Group {
        first: u64,
        pair: Option<u64>,
    }
    let mut groups: BTreeMap<VerificationClass, Group> = BTreeMap::new();
    for mask in 0..exts.len() as u64 {
        let class = verification_class(&af_from_mask(table, mask), x);
        match groups.get_mut(&class) {
            None => {
                groups.insert(class, Group { first: mask, pair: None });
            }
            Some(g) => {
                if g.pair.is_none() && exts[g.first as usize] != exts[mask as usize] {
                    g.pair = Some(mask);
                }
            }
        }
    }
    groups
        .values()
        .filter_map(|g| g.pair.map(|b| (g.first, b)))
        .min()
}

/// The minimal verification classes under which `kind` has no counterexample
/// over `n` arguments. Absence of a counterexample at a bound is evidence of
/// verifiability, not a proof.
pub fn minimal_classes(kind: SemanticsKind, n: usize) -> Result<Vec<NeighborhoodFn>, Error> {
    if n > MAX_CLASS_SEARCH_ARGS {
        return Err(Error::BoundExceeded { requested: n, limit: MAX_CLASS_SEARCH_ARGS });
    }
    let names = standard_arg_names(n)?;
    let table = alloc::sync::Arc::new(crate::af::ArgumentTable::from_names(names));
    let count = 1u64 << (n * n);
    let exts: Vec<ExtensionSet> =
        (0..count).map(|m| extensions(&af_from_mask(&table, m), kind)).collect();
    let verifiable: Vec<NeighborhoodFn> = NF::ALL
        .into_iter()
        .filter(|&x| collision_search(&table, x, &exts).is_none())
        .collect();
    Ok(verifiable
        .iter()
        .filter(|&&x| !verifiable.iter().any(|&y| y != x && x.more_informative(y)))
        .copied()
        .collect())
}
