//! All transfer systems on a lattice, their inclusion Hasse diagram with
//! decorations, widths, complexity and path statistics.

mod audit;
pub mod cache;
mod hasse;
mod width;

use std::collections::{HashMap, HashSet, VecDeque};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lattice::{Lattice, LatticeAction};
use crate::transfer::{
    self, extend, is_connected, is_cosaturated, is_saturated, saturated_hull, LatticeId, TransferSystem,
};

pub use audit::{
    audit_bisaturated_paths, audit_lsp_two_component, restricted_count_bijection, BisaturatedAudit,
    LspAudit, LspCounterexample,
};
pub use hasse::{hasse_stats, DecorationCounts, HasseStats};
pub use width::{complexity, complexity_of, width, width_formula, width_of_spec, Complexity, WidthReport};

/// Default bound on lattice size for exhaustive enumeration.
pub const DEFAULT_ENUMERATION_CAP: usize = 20;
/// Bound for the subset-filtering oracle.
pub const ORACLE_CAP: usize = 6;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Decorations {
    pub saturated: bool,
    pub cosaturated: bool,
    pub lsp: bool,
    pub connected: bool,
}

impl Decorations {
    pub fn bisaturated(&self) -> bool {
        self.saturated && self.cosaturated
    }
}

/// Every transfer system on a lattice, ordered by (edge count, bytes), with
/// the covering relation of inclusion.
#[derive(Clone, Debug)]
pub struct TsLattice {
    lattice: LatticeId,
    systems: Vec<TransferSystem>,
    hasse_edges: Vec<(usize, usize)>,
    decorations: Vec<Decorations>,
    index: HashMap<TransferSystem, usize>,
}

impl TsLattice {
    /// Sorts `systems`, computes decorations and takes `covers` (or derives
    /// them by pairwise comparison when absent).
    pub(crate) fn assemble(
        l: &Lattice,
        a: &LatticeAction,
        mut systems: Vec<TransferSystem>,
        covers: Option<&dyn Fn(&[TransferSystem], &HashMap<TransferSystem, usize>) -> Vec<(usize, usize)>>,
    ) -> Self {
        systems.sort_by_cached_key(|t| (t.edge_count(), t.bytes()));
        let index: HashMap<TransferSystem, usize> =
            systems.iter().enumerate().map(|(i, t)| (t.clone(), i)).collect();
        let hasse_edges = match covers {
            Some(f) => f(&systems, &index),
            None => pairwise_covers(&systems),
        };
        let complete = TransferSystem::complete(l, a);
        let decorations = systems
            .iter()
            .map(|t| {
                let hull = saturated_hull(l, a, t);
                Decorations {
                    saturated: is_saturated(l, t),
                    cosaturated: is_cosaturated(l, a, t),
                    lsp: transfer::props_lsp(l, t, &hull, &complete, &systems)
                        .expect("the enumeration contains every hull"),
                    connected: is_connected(l, t),
                }
            })
            .collect();
        TsLattice {
            lattice: LatticeId::of(l, a),
            systems,
            hasse_edges,
            decorations,
            index,
        }
    }

    /// Rebuilds from stored parts without recomputing anything.
    pub(crate) fn from_parts(
        lattice: LatticeId,
        systems: Vec<TransferSystem>,
        hasse_edges: Vec<(usize, usize)>,
        decorations: Vec<Decorations>,
    ) -> Self {
        let index = systems.iter().enumerate().map(|(i, t)| (t.clone(), i)).collect();
        TsLattice {
            lattice,
            systems,
            hasse_edges,
            decorations,
            index,
        }
    }

    pub fn lattice_id(&self) -> LatticeId {
        self.lattice
    }

    pub fn len(&self) -> usize {
        self.systems.len()
    }

    pub fn is_empty(&self) -> bool {
        self.systems.is_empty()
    }

    pub fn systems(&self) -> &[TransferSystem] {
        &self.systems
    }

    pub fn system(&self, i: usize) -> &TransferSystem {
        &self.systems[i]
    }

    pub fn hasse_edges(&self) -> &[(usize, usize)] {
        &self.hasse_edges
    }

    pub fn decorations(&self) -> &[Decorations] {
        &self.decorations
    }

    pub fn decoration(&self, i: usize) -> Decorations {
        self.decorations[i]
    }

    pub fn trivial_index(&self) -> usize {
        0
    }

    pub fn complete_index(&self) -> usize {
        self.systems.len() - 1
    }

    pub fn index_of(&self, t: &TransferSystem) -> Option<usize> {
        self.index.get(t).copied()
    }

    /// LSP of an arbitrary system, checked against this enumeration.
    pub fn is_lsp(&self, l: &Lattice, a: &LatticeAction, t: &TransferSystem) -> Result<bool> {
        if t.lattice_id() != self.lattice {
            return Err(Error::LatticeMismatch);
        }
        transfer::is_lsp(l, a, t, &self.systems)
    }
}

/// `j` covers `i` iff `i ⊊ j` with nothing strictly between.
fn pairwise_covers(systems: &[TransferSystem]) -> Vec<(usize, usize)> {
    let m = systems.len();
    let below: Vec<Vec<bool>> = (0..m)
        .map(|i| (0..m).map(|j| i != j && systems[i].is_subset(&systems[j])).collect())
        .collect();
    let mut out = Vec::new();
    for i in 0..m {
        for j in 0..m {
            if below[i][j] && !(0..m).any(|k| below[i][k] && below[k][j]) {
                out.push((i, j));
            }
        }
    }
    out
}

/// Every cover of `T` is the closure of `T` with one more pair-orbit, so the
/// covers are the minimal such one-orbit extensions.
fn extension_covers(l: &Lattice, a: &LatticeAction, systems: &[TransferSystem], index: &HashMap<TransferSystem, usize>) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for (i, t) in systems.iter().enumerate() {
        let mut next: Vec<usize> = one_orbit_extensions(l, a, t)
            .map(|u| index[&u])
            .collect::<HashSet<_>>()
            .into_iter()
            .collect();
        next.sort_unstable();
        for &j in &next {
            if !next.iter().any(|&k| k != j && systems[k].is_subset(&systems[j])) {
                out.push((i, j));
            }
        }
    }
    out
}

fn one_orbit_extensions<'a>(l: &'a Lattice, a: &'a LatticeAction, t: &'a TransferSystem) -> impl Iterator<Item = TransferSystem> + 'a {
    a.pair_orbits().iter().filter_map(move |orbit| {
        let (k, h) = orbit[0];
        (!t.contains(k, h)).then(|| extend(l, a, t, &[(k, h)]))
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EnumerateOptions {
    pub max_lattice_size: usize,
}

impl Default for EnumerateOptions {
    fn default() -> Self {
        EnumerateOptions {
            max_lattice_size: DEFAULT_ENUMERATION_CAP,
        }
    }
}

/// Every transfer system on `(l, a)`, with the default size cap.
pub fn enumerate_all(l: &Lattice, a: &LatticeAction) -> Result<TsLattice> {
    enumerate_with(l, a, &EnumerateOptions::default())
}

/// Worklist over closed systems: each discovered system is extended by every
/// pair-orbit it lacks. Every system is reached, since it is the closure of
/// its orbits added one at a time.
pub fn enumerate_with(l: &Lattice, a: &LatticeAction, opts: &EnumerateOptions) -> Result<TsLattice> {
    if l.size() > opts.max_lattice_size {
        return Err(Error::EnumerationCap {
            size: l.size(),
            cap: opts.max_lattice_size,
        });
    }
    let trivial = TransferSystem::trivial(l, a);
    let mut seen: HashSet<TransferSystem> = HashSet::from([trivial.clone()]);
    let mut queue = VecDeque::from([trivial]);
    while let Some(t) = queue.pop_front() {
        for u in one_orbit_extensions(l, a, &t) {
            if seen.insert(u.clone()) {
                queue.push_back(u);
            }
        }
    }
    let covers = |s: &[TransferSystem], idx: &HashMap<TransferSystem, usize>| extension_covers(l, a, s, idx);
    Ok(TsLattice::assemble(l, a, seen.into_iter().collect(), Some(&covers)))
}

/// Independent enumeration for tiny lattices: test every reflexive relation
/// inside `≤` against the axioms.
pub fn brute_force_oracle(l: &Lattice, a: &LatticeAction) -> Result<TsLattice> {
    if l.size() > ORACLE_CAP {
        return Err(Error::EnumerationCap {
            size: l.size(),
            cap: ORACLE_CAP,
        });
    }
    let n = l.size();
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|k| (0..n).filter(move |&h| h != k).map(move |h| (k, h)))
        .filter(|&(k, h)| l.leq(k, h))
        .collect();
    let mut systems = Vec::new();
    for mask in 0u64..1 << pairs.len() {
        let mut rel = vec![vec![false; n]; n];
        for (x, row) in rel.iter_mut().enumerate() {
            row[x] = true;
        }
        for (i, &(k, h)) in pairs.iter().enumerate() {
            rel[k][h] = mask >> i & 1 == 1;
        }
        if transfer::validate(l, a, &rel)?.is_empty() {
            systems.push(TransferSystem::from_relation(l, a, &rel)?);
        }
    }
    Ok(TsLattice::assemble(l, a, systems, None))
}

#[cfg(test)]
mod tests;
