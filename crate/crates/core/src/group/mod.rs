//! Finite groups given by multiplication tables, their subgroups and the
//! conjugation action on subgroups.

mod field;
pub mod naming;
mod perm;
mod spec;
mod subgroups;

use std::collections::HashMap;
use std::hash::Hash;

use crate::bitset::BitSet;
use crate::error::{Error, Result};

pub use field::GaloisField;
pub use perm::{parse_cycles, parse_perm_file, Permutation};
pub use spec::{build_group, BuildOptions, GroupSpec, DEFAULT_ORDER_CAP, RAISED_ORDER_CAP};
pub use subgroups::enumerate_subgroups;

/// A finite group as a full multiplication table over element indices `0..order`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteGroup {
    label: String,
    order: usize,
    mul: Vec<u32>,
    identity: usize,
    inv: Vec<u32>,
    generators: Vec<usize>,
}

impl FiniteGroup {
    /// Validates a table (associativity, unit, inverses) and builds the group.
    pub fn from_table(label: impl Into<String>, order: usize, mul: Vec<u32>, generators: Vec<usize>) -> Result<Self> {
        if order == 0 {
            return Err(Error::InvalidGroup("empty group".into()));
        }
        if mul.len() != order * order || mul.iter().any(|&x| x as usize >= order) {
            return Err(Error::InvalidGroup("table shape".into()));
        }
        let at = |a: usize, b: usize| mul[a * order + b] as usize;
        let identity = (0..order)
            .find(|&e| (0..order).all(|x| at(e, x) == x && at(x, e) == x))
            .ok_or_else(|| Error::InvalidGroup("no two-sided identity".into()))?;
        let mut inv = vec![0u32; order];
        for x in 0..order {
            let y = (0..order)
                .find(|&y| at(x, y) == identity && at(y, x) == identity)
                .ok_or_else(|| Error::InvalidGroup(format!("element {x} has no inverse")))?;
            inv[x] = y as u32;
        }
        for a in 0..order {
            for b in 0..order {
                let ab = at(a, b);
                for c in 0..order {
                    if at(ab, c) != at(a, at(b, c)) {
                        return Err(Error::InvalidGroup(format!("({a}*{b})*{c} != {a}*({b}*{c})")));
                    }
                }
            }
        }
        if generators.iter().any(|&g| g >= order) {
            return Err(Error::InvalidGroup("generator out of range".into()));
        }
        Ok(FiniteGroup {
            label: label.into(),
            order,
            mul,
            identity,
            inv,
            generators,
        })
    }

    /// Closes `gens` under `op`, indexing elements in breadth-first discovery
    /// order from `identity`. Fails once more than `cap` elements appear.
    pub fn from_generators<T, F>(label: impl Into<String>, identity: T, gens: &[T], op: F, cap: usize) -> Result<Self>
    where
        T: Clone + Eq + Hash,
        F: Fn(&T, &T) -> T,
    {
        let mut elems = vec![identity.clone()];
        let mut index: HashMap<T, usize> = HashMap::from([(identity, 0)]);
        let mut i = 0;
        while i < elems.len() {
            for g in gens {
                let next = op(&elems[i], g);
                if !index.contains_key(&next) {
                    if elems.len() == cap {
                        return Err(Error::OrderCap { order: cap + 1, cap });
                    }
                    index.insert(next.clone(), elems.len());
                    elems.push(next);
                }
            }
            i += 1;
        }
        let n = elems.len();
        let mut mul = vec![0u32; n * n];
        for (a, x) in elems.iter().enumerate() {
            for (b, y) in elems.iter().enumerate() {
                mul[a * n + b] = index[&op(x, y)] as u32;
            }
        }
        let mut generators: Vec<usize> = gens.iter().map(|g| index[g]).filter(|&g| g != 0).collect();
        generators.dedup();
        Self::from_table(label, n, mul, generators)
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    /// Generating elements recorded at construction.
    pub fn generators(&self) -> &[usize] {
        &self.generators
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.order + b] as usize
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inv[a] as usize
    }

    /// `x h x⁻¹`
    #[inline]
    pub fn conj(&self, x: usize, h: usize) -> usize {
        self.mul(self.mul(x, h), self.inv(x))
    }

    pub fn element_order(&self, x: usize) -> usize {
        let mut k = 1;
        let mut y = x;
        while y != self.identity {
            y = self.mul(y, x);
            k += 1;
        }
        k
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order).all(|a| (0..a).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    /// The subgroup generated by `gens`.
    pub fn generate(&self, gens: &[usize]) -> Subgroup {
        let mut members = BitSet::from_indices(self.order, [self.identity]);
        let mut queue = vec![self.identity];
        while let Some(x) = queue.pop() {
            for &g in gens {
                let y = self.mul(x, g);
                if members.insert(y) {
                    queue.push(y);
                }
            }
        }
        Subgroup { members }
    }

    pub fn trivial_subgroup(&self) -> Subgroup {
        Subgroup {
            members: BitSet::from_indices(self.order, [self.identity]),
        }
    }

    pub fn whole(&self) -> Subgroup {
        Subgroup {
            members: BitSet::full(self.order),
        }
    }

    /// Checks the subgroup axioms for an arbitrary element set.
    pub fn is_subgroup(&self, members: &BitSet) -> bool {
        members.capacity() == self.order
            && members.contains(self.identity)
            && members.iter().all(|a| {
                members.contains(self.inv(a)) && members.iter().all(|b| members.contains(self.mul(a, b)))
            })
    }

    /// `x H x⁻¹` as an element set.
    pub fn conjugate(&self, x: usize, h: &Subgroup) -> Subgroup {
        Subgroup {
            members: BitSet::from_indices(self.order, h.members.iter().map(|m| self.conj(x, m))),
        }
    }

    /// `N_G(H) = { x : x H x⁻¹ = H }`
    pub fn normalizer(&self, h: &Subgroup) -> Subgroup {
        let members = BitSet::from_indices(
            self.order,
            (0..self.order).filter(|&x| h.members.iter().all(|m| h.members.contains(self.conj(x, m)))),
        );
        Subgroup { members }
    }

    /// For every group element `x`, the permutation `H ↦ xHx⁻¹` of `subs`,
    /// together with the orbit partition (conjugacy classes of subgroups).
    pub fn conjugation_action(&self, subs: &[Subgroup]) -> ConjugationAction {
        let index: HashMap<&BitSet, usize> = subs.iter().enumerate().map(|(i, s)| (&s.members, i)).collect();
        let perms: Vec<Vec<usize>> = (0..self.order)
            .map(|x| {
                subs.iter()
                    .map(|s| {
                        let image = self.conjugate(x, s);
                        *index.get(&image.members).expect("subgroup list must be closed under conjugation")
                    })
                    .collect()
            })
            .collect();
        let mut class_of = vec![usize::MAX; subs.len()];
        let mut classes: Vec<Vec<usize>> = Vec::new();
        for i in 0..subs.len() {
            if class_of[i] != usize::MAX {
                continue;
            }
            let mut orbit: Vec<usize> = perms.iter().map(|p| p[i]).collect();
            orbit.sort_unstable();
            orbit.dedup();
            for &j in &orbit {
                class_of[j] = classes.len();
            }
            classes.push(orbit);
        }
        ConjugationAction { perms, classes, class_of }
    }

    /// True iff whenever `K ≤ H` and `xKx⁻¹ ≤ H`, the conjugate `xKx⁻¹` is
    /// already reached by some element of `N_G(H)`.
    pub fn is_lossless(&self) -> bool {
        let subs = enumerate_subgroups(self);
        let action = self.conjugation_action(&subs);
        for (hi, h) in subs.iter().enumerate() {
            let norm = self.normalizer(h);
            for (ki, k) in subs.iter().enumerate() {
                if ki == hi || !k.is_subgroup_of(h) {
                    continue;
                }
                let mut via_normalizer = BitSet::new(subs.len());
                for x in norm.members.iter() {
                    via_normalizer.insert(action.perms[x][ki]);
                }
                for x in 0..self.order {
                    let image = action.perms[x][ki];
                    if subs[image].is_subgroup_of(h) && !via_normalizer.contains(image) {
                        return false;
                    }
                }
            }
        }
        true
    }
}

/// A subgroup, stored as its member bitset over group-element indices.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Subgroup {
    members: BitSet,
}

impl Subgroup {
    /// Wraps a member set; callers are responsible for closure (see [`FiniteGroup::is_subgroup`]).
    pub fn from_members(members: BitSet) -> Self {
        Subgroup { members }
    }

    pub fn members(&self) -> &BitSet {
        &self.members
    }

    pub fn order(&self) -> usize {
        self.members.count()
    }

    pub fn contains(&self, x: usize) -> bool {
        self.members.contains(x)
    }

    pub fn is_subgroup_of(&self, other: &Subgroup) -> bool {
        self.members.is_subset(&other.members)
    }

    pub fn intersection(&self, other: &Subgroup) -> Subgroup {
        Subgroup {
            members: self.members.intersection(&other.members),
        }
    }
}

impl Ord for Subgroup {
    /// Canonical order: size ascending, then lexicographic member list.
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.order().cmp(&other.order()).then_with(|| self.members.cmp(&other.members))
    }
}

impl PartialOrd for Subgroup {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// Conjugation of a group on its subgroup list.
#[derive(Clone, Debug)]
pub struct ConjugationAction {
    /// `perms[x][i]` is the index of `x H_i x⁻¹`.
    pub perms: Vec<Vec<usize>>,
    /// Orbits, each sorted, ordered by smallest member.
    pub classes: Vec<Vec<usize>>,
    pub class_of: Vec<usize>,
}
