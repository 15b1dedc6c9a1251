//! Transfer systems on a lattice with an action: axiom validation, closure
//! from generating edges and minimal generating sets.
//!
//! A relation is stored row-wise: `rows[k]` is the set of `h` with `k → h`.
//! The five axioms checked and enforced are
//!
//! 1. subgroup: `k → h` implies `k ≤ h`;
//! 2. reflexivity: `x → x`;
//! 3. composition: `l → k → h` implies `l → h`;
//! 4. restriction: `k → h` and `l ≤ h` imply `k ∧ l → l`;
//! 5. conjugation: `k → h` implies `gk → gh` for every acting element `g`.

mod lift;
mod props;

use std::collections::hash_map::DefaultHasher;
use std::fmt;
use std::hash::{Hash, Hasher};

use crate::bitset::BitSet;
use crate::error::{Error, Result};
use crate::lattice::{Lattice, LatticeAction};

pub use lift::{lift_check, lift_relation};
pub use props::{compatible, is_connected, is_cosaturated, is_lsp, is_saturated, saturated_hull};
pub(crate) use props::lsp_with as props_lsp;

/// Identifies the (lattice, action) pair a transfer system lives on.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LatticeId(pub u64);

impl LatticeId {
    pub fn of(lattice: &Lattice, action: &LatticeAction) -> Self {
        let mut h = DefaultHasher::new();
        lattice.size().hash(&mut h);
        for a in 0..lattice.size() {
            lattice.up_set(a).words().hash(&mut h);
        }
        action.generators().hash(&mut h);
        LatticeId(h.finish())
    }
}

/// A transfer system: a reflexive, transitive relation refining `≤`,
/// closed under restriction and the action.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct TransferSystem {
    lattice: LatticeId,
    rows: Vec<BitSet>,
}

impl TransferSystem {
    /// Only the reflexive edges.
    pub fn trivial(lattice: &Lattice, action: &LatticeAction) -> Self {
        let n = lattice.size();
        TransferSystem {
            lattice: LatticeId::of(lattice, action),
            rows: (0..n).map(|k| BitSet::from_indices(n, [k])).collect(),
        }
    }

    /// Every pair `k ≤ h`.
    pub fn complete(lattice: &Lattice, action: &LatticeAction) -> Self {
        TransferSystem {
            lattice: LatticeId::of(lattice, action),
            rows: (0..lattice.size()).map(|k| lattice.up_set(k).clone()).collect(),
        }
    }

    /// Wraps a relation that is known to be closed. Checked in debug builds.
    pub(crate) fn from_closed_rows(lattice: LatticeId, rows: Vec<BitSet>) -> Self {
        TransferSystem { lattice, rows }
    }

    /// Accepts a relation only if it already satisfies every axiom.
    pub fn from_relation(lattice: &Lattice, action: &LatticeAction, rel: &[Vec<bool>]) -> Result<Self> {
        let violations = validate(lattice, action, rel)?;
        if let Some(v) = violations.first() {
            return Err(Error::Invalid(format!("not a transfer system: {v} ({} violations)", violations.len())));
        }
        Ok(TransferSystem {
            lattice: LatticeId::of(lattice, action),
            rows: rows_of(rel),
        })
    }

    pub fn lattice_id(&self) -> LatticeId {
        self.lattice
    }

    pub fn size(&self) -> usize {
        self.rows.len()
    }

    #[inline]
    pub fn contains(&self, k: usize, h: usize) -> bool {
        self.rows[k].contains(h)
    }

    /// Targets `h` with `k → h`.
    pub fn row(&self, k: usize) -> &BitSet {
        &self.rows[k]
    }

    /// Non-reflexive edges in (source, target) order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        self.rows
            .iter()
            .enumerate()
            .flat_map(|(k, row)| row.iter().filter(move |&h| h != k).map(move |h| (k, h)))
            .collect()
    }

    pub fn edge_count(&self) -> usize {
        self.rows.iter().map(BitSet::count).sum::<usize>() - self.rows.len()
    }

    pub fn is_subset(&self, other: &TransferSystem) -> bool {
        self.rows.iter().zip(&other.rows).all(|(a, b)| a.is_subset(b))
    }

    pub fn relation(&self) -> Vec<Vec<bool>> {
        let n = self.size();
        self.rows
            .iter()
            .map(|row| (0..n).map(|h| row.contains(h)).collect())
            .collect()
    }

    /// Canonical byte encoding of the relation, used for ordering and dedup.
    pub fn bytes(&self) -> Vec<u8> {
        self.rows
            .iter()
            .flat_map(|r| r.words().iter().flat_map(|w| w.to_le_bytes()))
            .collect()
    }

    /// `{ (g k, g h) : k → h }`
    pub fn permuted(&self, perm: &[usize]) -> TransferSystem {
        let n = self.size();
        let mut rows = vec![BitSet::new(n); n];
        for (k, row) in self.rows.iter().enumerate() {
            for h in row.iter() {
                rows[perm[k]].insert(perm[h]);
            }
        }
        TransferSystem {
            lattice: self.lattice,
            rows,
        }
    }
}

impl fmt::Debug for TransferSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("TransferSystem").field("edges", &self.edges()).finish()
    }
}

fn rows_of(rel: &[Vec<bool>]) -> Vec<BitSet> {
    let n = rel.len();
    rel.iter()
        .map(|row| BitSet::from_indices(n, (0..n).filter(|&h| row[h])))
        .collect()
}

/// A set of generating edges: strict pairs, sorted, without duplicates.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct EdgeSet(Vec<(usize, usize)>);

impl EdgeSet {
    /// Drops reflexive pairs and duplicates; order is canonical.
    pub fn new(edges: impl IntoIterator<Item = (usize, usize)>) -> Self {
        let mut v: Vec<(usize, usize)> = edges.into_iter().filter(|(k, h)| k != h).collect();
        v.sort_unstable();
        v.dedup();
        EdgeSet(v)
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn without(&self, i: usize) -> EdgeSet {
        let mut v = self.0.clone();
        v.remove(i);
        EdgeSet(v)
    }
}

impl FromIterator<(usize, usize)> for EdgeSet {
    fn from_iter<I: IntoIterator<Item = (usize, usize)>>(iter: I) -> Self {
        EdgeSet::new(iter)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Axiom {
    Subgroup = 1,
    Reflexivity = 2,
    Composition = 3,
    Restriction = 4,
    Conjugation = 5,
}

impl Axiom {
    pub fn id(self) -> u8 {
        self as u8
    }
}

/// A failed axiom with its witness:
///
/// * subgroup `(k, h, k)`: `k → h` but `k ≰ h`
/// * reflexivity `(x, x, x)`
/// * composition `(l, k, h)`: `l → k → h` but not `l → h`
/// * restriction `(k, h, l)`: `k → h`, `l ≤ h` but not `k ∧ l → l`
/// * conjugation `(k, h, g)`: `k → h` but not `g k → g h` for generator `g`
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Violation {
    pub axiom: Axiom,
    pub witness: (usize, usize, usize),
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (a, b, c) = self.witness;
        write!(f, "axiom {} ({:?}) fails at ({a}, {b}, {c})", self.axiom.id(), self.axiom)
    }
}

/// Every axiom violation of `rel`; empty iff it is a transfer system.
pub fn validate(lattice: &Lattice, action: &LatticeAction, rel: &[Vec<bool>]) -> Result<Vec<Violation>> {
    let n = lattice.size();
    if rel.len() != n || rel.iter().any(|r| r.len() != n) {
        return Err(Error::DimensionMismatch {
            expected: n,
            got: rel.len(),
        });
    }
    let mut out = Vec::new();
    let v = |axiom, witness| Violation { axiom, witness };
    for x in 0..n {
        if !rel[x][x] {
            out.push(v(Axiom::Reflexivity, (x, x, x)));
        }
    }
    for k in 0..n {
        for h in 0..n {
            if !rel[k][h] {
                continue;
            }
            if !lattice.leq(k, h) {
                out.push(v(Axiom::Subgroup, (k, h, k)));
            }
            for j in 0..n {
                if rel[h][j] && !rel[k][j] {
                    out.push(v(Axiom::Composition, (k, h, j)));
                }
            }
            for l in lattice.down_set(h).iter() {
                if !rel[lattice.meet(k, l)][l] {
                    out.push(v(Axiom::Restriction, (k, h, l)));
                }
            }
            for (gi, g) in action.generators().iter().enumerate() {
                if !rel[g[k]][g[h]] {
                    out.push(v(Axiom::Conjugation, (k, h, gi)));
                }
            }
        }
    }
    Ok(out)
}

/// Least transfer system containing `edges`.
pub fn generate(lattice: &Lattice, action: &LatticeAction, edges: &EdgeSet) -> Result<TransferSystem> {
    let n = lattice.size();
    let mut rows: Vec<BitSet> = (0..n).map(|k| BitSet::from_indices(n, [k])).collect();
    for &(k, h) in edges.edges() {
        if k >= n || h >= n || !lattice.leq(k, h) {
            return Err(Error::MalformedEdge { lower: k, upper: h });
        }
        rows[k].insert(h);
    }
    close(lattice, action, &mut rows);
    Ok(TransferSystem {
        lattice: LatticeId::of(lattice, action),
        rows,
    })
}

/// Closure of an already-closed system with extra edges added.
pub fn extend(lattice: &Lattice, action: &LatticeAction, ts: &TransferSystem, extra: &[(usize, usize)]) -> TransferSystem {
    let mut rows = ts.rows.clone();
    for &(k, h) in extra {
        rows[k].insert(h);
    }
    close(lattice, action, &mut rows);
    TransferSystem { lattice: ts.lattice, rows }
}

/// Conjugation, restriction and composition closure to a fixpoint.
pub(crate) fn close(lattice: &Lattice, action: &LatticeAction, rows: &mut [BitSet]) {
    let n = rows.len();
    let mut pending: Vec<(usize, usize)> = Vec::new();
    loop {
        let mut changed = false;

        for g in action.generators() {
            for k in 0..n {
                for h in rows[k].iter() {
                    pending.push((g[k], g[h]));
                }
            }
            for (k, h) in pending.drain(..) {
                changed |= rows[k].insert(h);
            }
        }

        for k in 0..n {
            for h in rows[k].iter() {
                if h == k {
                    continue;
                }
                for l in lattice.down_set(h).iter() {
                    pending.push((lattice.meet(k, l), l));
                }
            }
        }
        for (k, h) in pending.drain(..) {
            changed |= rows[k].insert(h);
        }

        // Warshall on bit rows
        for m in 0..n {
            let via = rows[m].clone();
            for row in rows.iter_mut() {
                if row.contains(m) {
                    changed |= row.union_with(&via);
                }
            }
        }

        if !changed {
            break;
        }
    }
}

/// Greedy minimal generating set: start from every non-reflexive edge and
/// drop each edge, in canonical order, whose removal still generates `ts`.
pub fn minimal_generating_set(lattice: &Lattice, action: &LatticeAction, ts: &TransferSystem) -> EdgeSet {
    let mut kept = ts.edges();
    let mut i = 0;
    while i < kept.len() {
        let (k, h) = kept[i];
        let rest = EdgeSet(kept.iter().enumerate().filter(|&(j, _)| j != i).map(|(_, &e)| e).collect());
        let regenerated = generate(lattice, action, &rest).expect("edges of a transfer system are well formed");
        if regenerated.contains(k, h) {
            kept.remove(i);
        } else {
            i += 1;
        }
    }
    EdgeSet(kept)
}

/// Greedy minimal generating set counted in pair-orbits: whole orbits are
/// dropped, in orbit order, while the rest still generates `ts`.
pub fn minimal_generating_orbits(lattice: &Lattice, action: &LatticeAction, ts: &TransferSystem) -> Vec<usize> {
    let orbits = action.pair_orbits();
    let mut kept: Vec<usize> = (0..orbits.len())
        .filter(|&o| {
            let (k, h) = orbits[o][0];
            ts.contains(k, h)
        })
        .collect();
    let mut i = 0;
    while i < kept.len() {
        let rest: EdgeSet = kept
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != i)
            .map(|(_, &o)| orbits[o][0])
            .collect();
        let (k, h) = orbits[kept[i]][0];
        if generate(lattice, action, &rest).expect("orbit representatives are well formed").contains(k, h) {
            kept.remove(i);
        } else {
            i += 1;
        }
    }
    kept
}
