//! Finite argumentation frameworks: interned arguments, an attack relation,
//! and the primitive set-level queries everything else builds on.

use alloc::collections::BTreeMap;
use alloc::collections::BTreeSet;
use alloc::string::{String, ToString};
use alloc::sync::Arc;
use alloc::vec::Vec;
use core::fmt;

use crate::error::Error;
use crate::set::{subsets_of_universe, ArgSet, ExtensionSet};

/// Interning table mapping argument names to dense ids `0..n`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ArgumentTable {
    names: Vec<String>,
    index: BTreeMap<String, usize>,
}

impl ArgumentTable {
    /// Builds a table from names in order of first occurrence; duplicates
    /// collapse onto the earlier id.
    pub fn from_names<S: AsRef<str>>(names: impl IntoIterator<Item = S>) -> Self {
        let mut table = ArgumentTable { names: Vec::new(), index: BTreeMap::new() };
        for name in names {
            table.intern(name.as_ref());
        }
        table
    }

    pub fn intern(&mut self, name: &str) -> usize {
        if let Some(&id) = self.index.get(name) {
            return id;
        }
        let id = self.names.len();
        self.names.push(name.to_string());
        self.index.insert(name.to_string(), id);
        id
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn id(&self, name: &str) -> Option<usize> {
        self.index.get(name).copied()
    }

    pub fn name(&self, id: usize) -> &str {
        &self.names[id]
    }

    pub fn names(&self) -> impl Iterator<Item = &str> {
        self.names.iter().map(String::as_str)
    }
}

/// A finite argumentation framework: a directed attack graph over interned
/// argument names. Immutable once built; all queries are pure.
#[derive(Clone)]
pub struct Af {
    table: Arc<ArgumentTable>,
    /// `targets[i]` = arguments attacked by `i`.
    targets: Vec<ArgSet>,
    /// `attackers[i]` = arguments attacking `i`.
    attackers: Vec<ArgSet>,
}

/// Long-form alias for [`Af`].
pub type ArgumentationFramework = Af;

/// Total constructor: attack endpoints missing from `args` are added to the
/// argument set, and duplicate pairs collapse.
pub fn build_af<S: AsRef<str>>(args: &[S], attacks: &[(S, S)]) -> Af {
    let mut table = ArgumentTable::from_names(args.iter().map(AsRef::as_ref));
    let pairs: Vec<(usize, usize)> = attacks
        .iter()
        .map(|(a, b)| (table.intern(a.as_ref()), table.intern(b.as_ref())))
        .collect();
    Af::new(Arc::new(table), pairs).expect("interned endpoints are always in range")
}

/// Union of two frameworks, joining arguments by name.
pub fn union_af(f: &Af, g: &Af) -> Af {
    let mut table = ArgumentTable::from_names(f.table.names());
    for name in g.table.names() {
        table.intern(name);
    }
    let table = Arc::new(table);
    let mut pairs: Vec<(usize, usize)> = f
        .attack_pairs()
        .map(|(a, b)| {
            (table.id(f.table.name(a)).unwrap(), table.id(f.table.name(b)).unwrap())
        })
        .collect();
    pairs.extend(g.attack_pairs().map(|(a, b)| {
        (table.id(g.table.name(a)).unwrap(), table.id(g.table.name(b)).unwrap())
    }));
    Af::new(table, pairs).expect("union endpoints are always in range")
}

impl Af {
    pub fn new(
        table: Arc<ArgumentTable>,
        attacks: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Af, Error> {
        let n = table.len();
        let mut af = Af {
            table,
            targets: alloc::vec![ArgSet::empty(); n],
            attackers: alloc::vec![ArgSet::empty(); n],
        };
        for (src, dst) in attacks {
            if src >= n {
                return Err(Error::ArgumentOutOfRange { id: src, arg_count: n });
            }
            if dst >= n {
                return Err(Error::ArgumentOutOfRange { id: dst, arg_count: n });
            }
            af.targets[src].insert(dst);
            af.attackers[dst].insert(src);
        }
        Ok(af)
    }

    pub fn arg_count(&self) -> usize {
        self.table.len()
    }

    pub fn table(&self) -> &Arc<ArgumentTable> {
        &self.table
    }

    /// The set `{0, .., n-1}` of all argument ids.
    pub fn all_args(&self) -> ArgSet {
        ArgSet::full(self.arg_count())
    }

    pub fn attacks(&self, src: usize, dst: usize) -> bool {
        self.targets[src].contains(dst)
    }

    pub fn targets_of(&self, id: usize) -> &ArgSet {
        &self.targets[id]
    }

    pub fn attackers_of(&self, id: usize) -> &ArgSet {
        &self.attackers[id]
    }

    pub fn attack_pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.targets
            .iter()
            .enumerate()
            .flat_map(|(src, t)| t.iter().map(move |dst| (src, dst)))
    }

    pub fn attack_count(&self) -> usize {
        self.targets.iter().map(ArgSet::len).sum()
    }

    fn check_set(&self, s: &ArgSet) -> Result<(), Error> {
        match s.max_member() {
            Some(id) if id >= self.arg_count() => {
                Err(Error::ArgumentOutOfRange { id, arg_count: self.arg_count() })
            }
            _ => Ok(()),
        }
    }

    fn check_arg(&self, id: usize) -> Result<(), Error> {
        if id >= self.arg_count() {
            Err(Error::ArgumentOutOfRange { id, arg_count: self.arg_count() })
        } else {
            Ok(())
        }
    }

    /// True iff no member of `s` attacks a member of `s` (self-attacks count).
    pub fn is_conflict_free(&self, s: &ArgSet) -> Result<bool, Error> {
        self.check_set(s)?;
        Ok(self.cf_unchecked(s))
    }

    pub(crate) fn cf_unchecked(&self, s: &ArgSet) -> bool {
        s.iter().all(|i| self.targets[i].is_disjoint(s))
    }

    /// Every conflict-free subset, canonically ordered.
    pub fn conflict_free_sets(&self) -> ExtensionSet {
        subsets_of_universe(self.arg_count())
            .filter(|s| self.cf_unchecked(s))
            .collect()
    }

    /// Arguments attacked by at least one member of `s`.
    pub(crate) fn attacked_by_set(&self, s: &ArgSet) -> ArgSet {
        s.iter().fold(ArgSet::empty(), |acc, i| acc.union(&self.targets[i]))
    }

    /// Arguments attacking at least one member of `s`.
    pub(crate) fn attacking_set(&self, s: &ArgSet) -> ArgSet {
        s.iter().fold(ArgSet::empty(), |acc, i| acc.union(&self.attackers[i]))
    }

    /// `s` together with everything it attacks.
    pub fn range(&self, s: &ArgSet) -> Result<ArgSet, Error> {
        self.check_set(s)?;
        Ok(self.range_unchecked(s))
    }

    pub(crate) fn range_unchecked(&self, s: &ArgSet) -> ArgSet {
        s.union(&self.attacked_by_set(s))
    }

    /// `s` together with everything attacking it.
    pub fn anti_range(&self, s: &ArgSet) -> Result<ArgSet, Error> {
        self.check_set(s)?;
        Ok(self.anti_range_unchecked(s))
    }

    pub(crate) fn anti_range_unchecked(&self, s: &ArgSet) -> ArgSet {
        s.union(&self.attacking_set(s))
    }

    /// True iff every attacker of `a` is attacked by `s`.
    pub fn defends(&self, s: &ArgSet, a: usize) -> Result<bool, Error> {
        self.check_set(s)?;
        self.check_arg(a)?;
        Ok(self.defends_unchecked(s, a))
    }

    pub(crate) fn defends_unchecked(&self, s: &ArgSet, a: usize) -> bool {
        self.attackers[a].is_subset(&self.attacked_by_set(s))
    }

    /// The set of all arguments defended by `s` (the characteristic function).
    pub fn characteristic(&self, s: &ArgSet) -> Result<ArgSet, Error> {
        self.check_set(s)?;
        Ok(self.characteristic_unchecked(s))
    }

    pub(crate) fn characteristic_unchecked(&self, s: &ArgSet) -> ArgSet {
        let attacked = self.attacked_by_set(s);
        (0..self.arg_count())
            .filter(|&a| self.attackers[a].is_subset(&attacked))
            .collect()
    }

    /// All self-attacking arguments.
    pub fn self_loops(&self) -> ArgSet {
        (0..self.arg_count()).filter(|&i| self.attacks(i, i)).collect()
    }

    /// Drops every attack between two distinct self-attacking arguments.
    pub fn loop_reduct(&self) -> Af {
        let loops = self.self_loops();
        let pairs = self
            .attack_pairs()
            .filter(|&(a, b)| a == b || !(loops.contains(a) && loops.contains(b)));
        Af::new(self.table.clone(), pairs).expect("reduct keeps ids in range")
    }

    /// Name-level equality: same argument names, same attacks by name.
    /// Insensitive to id assignment, so frameworks read from different
    /// sources compare correctly.
    pub fn same_as(&self, other: &Af) -> bool {
        let mine: BTreeSet<&str> = self.table.names().collect();
        let theirs: BTreeSet<&str> = other.table.names().collect();
        if mine != theirs {
            return false;
        }
        let pairs = |af: &Af| -> BTreeSet<(String, String)> {
            af.attack_pairs()
                .map(|(a, b)| (af.table.name(a).to_string(), af.table.name(b).to_string()))
                .collect()
        };
        pairs(self) == pairs(other)
    }
}

impl fmt::Debug for Af {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Af(args: [")?;
        for (i, name) in self.table.names().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{name}")?;
        }
        write!(f, "], attacks: [")?;
        for (k, (a, b)) in self.attack_pairs().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "({},{})", self.table.name(a), self.table.name(b))?;
        }
        write!(f, "])")
    }
}
