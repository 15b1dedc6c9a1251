//! Finite lattices given by their order relation, with derived meet/join
//! tables, covering pairs, modularity and meet-irreducibles.

mod action;
mod json;
mod quotient;
mod subgroup;

use crate::bitset::BitSet;
use crate::error::{Error, Result};

pub use action::LatticeAction;
pub use json::LatticeJson;
pub use quotient::QuotientPoset;
pub use subgroup::{from_subgroups, SubgroupLattice};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Lattice {
    size: usize,
    /// `up[a] = { b : a ≤ b }`
    up: Vec<BitSet>,
    /// `down[b] = { a : a ≤ b }`
    down: Vec<BitSet>,
    meet: Vec<u32>,
    join: Vec<u32>,
    bottom: usize,
    top: usize,
    labels: Vec<String>,
}

impl Lattice {
    /// Builds a lattice from a boolean order table, deriving meet and join.
    pub fn from_leq(labels: Vec<String>, leq: &[Vec<bool>]) -> Result<Self> {
        let n = leq.len();
        if leq.iter().any(|row| row.len() != n) {
            return Err(Error::NotALattice("order table is not square".into()));
        }
        let up: Vec<BitSet> = leq
            .iter()
            .map(|row| BitSet::from_indices(n, (0..n).filter(|&b| row[b])))
            .collect();
        Self::from_up_sets(labels, up)
    }

    pub(crate) fn from_up_sets(labels: Vec<String>, up: Vec<BitSet>) -> Result<Self> {
        let n = up.len();
        if n == 0 {
            return Err(Error::NotALattice("empty poset".into()));
        }
        if labels.len() != n {
            return Err(Error::NotALattice(format!("{} labels for {n} elements", labels.len())));
        }
        let mut down = vec![BitSet::new(n); n];
        for (a, row) in up.iter().enumerate() {
            if !row.contains(a) {
                return Err(Error::NotALattice(format!("not reflexive at {a}")));
            }
            for b in row.iter() {
                down[b].insert(a);
            }
        }
        for a in 0..n {
            for b in up[a].iter() {
                if b != a && up[b].contains(a) {
                    return Err(Error::NotALattice(format!("{a} and {b} are not antisymmetric")));
                }
                if !up[b].is_subset(&up[a]) {
                    return Err(Error::NotALattice(format!("not transitive through {a} ≤ {b}")));
                }
            }
        }
        let bottoms: Vec<usize> = (0..n).filter(|&a| up[a].count() == n).collect();
        let tops: Vec<usize> = (0..n).filter(|&a| down[a].count() == n).collect();
        let (&[bottom], &[top]) = (bottoms.as_slice(), tops.as_slice()) else {
            return Err(Error::NotALattice("no unique bottom and top".into()));
        };
        let down_count: Vec<usize> = down.iter().map(BitSet::count).collect();
        let up_count: Vec<usize> = up.iter().map(BitSet::count).collect();
        let mut meet = vec![0u32; n * n];
        let mut join = vec![0u32; n * n];
        for a in 0..n {
            for b in a..n {
                let lower = down[a].intersection(&down[b]);
                let k = lower.count();
                let m = lower
                    .iter()
                    .find(|&x| down_count[x] == k)
                    .ok_or_else(|| Error::NotALattice(format!("no meet for {a}, {b}")))?;
                let upper = up[a].intersection(&up[b]);
                let k = upper.count();
                let j = upper
                    .iter()
                    .find(|&x| up_count[x] == k)
                    .ok_or_else(|| Error::NotALattice(format!("no join for {a}, {b}")))?;
                meet[a * n + b] = m as u32;
                meet[b * n + a] = m as u32;
                join[a * n + b] = j as u32;
                join[b * n + a] = j as u32;
            }
        }
        Ok(Lattice {
            size: n,
            up,
            down,
            meet,
            join,
            bottom,
            top,
            labels,
        })
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn bottom(&self) -> usize {
        self.bottom
    }

    pub fn top(&self) -> usize {
        self.top
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, a: usize) -> &str {
        &self.labels[a]
    }

    #[inline]
    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.up[a].contains(b)
    }

    #[inline]
    pub fn meet(&self, a: usize, b: usize) -> usize {
        self.meet[a * self.size + b] as usize
    }

    #[inline]
    pub fn join(&self, a: usize, b: usize) -> usize {
        self.join[a * self.size + b] as usize
    }

    pub fn up_set(&self, a: usize) -> &BitSet {
        &self.up[a]
    }

    pub fn down_set(&self, b: usize) -> &BitSet {
        &self.down[b]
    }

    /// The order table as nested booleans.
    pub fn leq_table(&self) -> Vec<Vec<bool>> {
        (0..self.size)
            .map(|a| (0..self.size).map(|b| self.leq(a, b)).collect())
            .collect()
    }

    /// Elements `b` covering `a`: `a < b` with nothing strictly between.
    pub fn upper_covers(&self, a: usize) -> Vec<usize> {
        let mut strict = self.up[a].clone();
        strict.remove(a);
        strict
            .iter()
            .filter(|&b| self.down[b].intersection(&strict).count() == 1)
            .collect()
    }

    /// All covering pairs `(lower, upper)`, sorted.
    pub fn covering_pairs(&self) -> Vec<(usize, usize)> {
        (0..self.size)
            .flat_map(|a| self.upper_covers(a).into_iter().map(move |b| (a, b)))
            .collect()
    }

    /// Elements other than top with exactly one upper cover.
    pub fn meet_irreducibles(&self) -> Vec<usize> {
        (0..self.size)
            .filter(|&x| x != self.top && self.upper_covers(x).len() == 1)
            .collect()
    }

    /// Elements other than top that are not the meet of two elements
    /// strictly above them. Agrees with [`Lattice::meet_irreducibles`].
    pub fn meet_irreducibles_by_meets(&self) -> Vec<usize> {
        (0..self.size)
            .filter(|&x| {
                x != self.top && {
                    let above: Vec<usize> = self.up[x].iter().filter(|&y| y != x).collect();
                    !above
                        .iter()
                        .enumerate()
                        .any(|(i, &a)| above[i + 1..].iter().any(|&b| self.meet(a, b) == x))
                }
            })
            .collect()
    }

    /// Modular law: `a ≤ b ⟹ a ∨ (c ∧ b) = (a ∨ c) ∧ b` for all `c`.
    pub fn is_modular(&self) -> bool {
        (0..self.size).all(|a| {
            self.up[a].iter().all(|b| {
                (0..self.size).all(|c| self.join(a, self.meet(c, b)) == self.meet(self.join(a, c), b))
            })
        })
    }

    /// Exhaustive check of the lattice laws and their agreement with the order.
    pub fn verify(&self) -> Result<()> {
        let n = self.size;
        for a in 0..n {
            if self.meet(a, a) != a || self.join(a, a) != a {
                return Err(Error::NotALattice(format!("not idempotent at {a}")));
            }
            for b in 0..n {
                let (m, j) = (self.meet(a, b), self.join(a, b));
                if m != self.meet(b, a) || j != self.join(b, a) {
                    return Err(Error::NotALattice(format!("not commutative at {a}, {b}")));
                }
                if self.join(a, m) != a || self.meet(a, j) != a {
                    return Err(Error::NotALattice(format!("absorption fails at {a}, {b}")));
                }
                if (m == a) != self.leq(a, b) || (j == b) != self.leq(a, b) {
                    return Err(Error::NotALattice(format!("meet/join disagree with order at {a}, {b}")));
                }
            }
        }
        Ok(())
    }

    /// The sub-poset of everything except the bottom element, which must
    /// have a unique minimum of its own.
    pub fn remove_bottom(&self) -> Result<Lattice> {
        if self.size < 2 {
            return Err(Error::NotALattice("cannot remove the only element".into()));
        }
        let keep: Vec<usize> = (0..self.size).filter(|&a| a != self.bottom).collect();
        self.restrict(&keep)
    }

    /// The induced sub-poset on `keep` (in that order), if it is a lattice.
    pub fn restrict(&self, keep: &[usize]) -> Result<Lattice> {
        let m = keep.len();
        let up = keep
            .iter()
            .map(|&a| BitSet::from_indices(m, (0..m).filter(|&j| self.leq(a, keep[j]))))
            .collect();
        let labels = keep.iter().map(|&a| self.labels[a].clone()).collect();
        Self::from_up_sets(labels, up)
    }

    /// A chain `0 < 1 < … < n-1`.
    pub fn chain(n: usize) -> Lattice {
        let up = (0..n).map(|a| BitSet::from_indices(n, a..n)).collect();
        Self::from_up_sets((0..n).map(|i| i.to_string()).collect(), up).expect("chains are lattices")
    }
}

/// Content hash of a lattice with its action (hex SHA-256 over the order
/// rows and generator permutations), stable across runs and platforms.
pub fn lattice_hash(lattice: &Lattice, action: &LatticeAction) -> String {
    use sha2::{Digest, Sha256};
    let mut h = Sha256::new();
    h.update((lattice.size() as u64).to_le_bytes());
    for a in 0..lattice.size() {
        for &w in lattice.up_set(a).words() {
            h.update(w.to_le_bytes());
        }
    }
    for g in action.generators() {
        h.update([0xff]);
        for &x in g {
            h.update((x as u64).to_le_bytes());
        }
    }
    h.finalize().iter().map(|b| format!("{b:02x}")).collect()
}

/// `Sub(G)/G`-style quotient of a lattice by an action.
pub fn quotient(lattice: &Lattice, action: &LatticeAction) -> QuotientPoset {
    QuotientPoset::new(lattice, action)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pentagon() -> Lattice {
        // 0 < 1 < 2 < 4, 0 < 3 < 4
        let rel = [(0, 1), (0, 2), (0, 3), (0, 4), (1, 2), (1, 4), (2, 4), (3, 4)];
        let mut leq = vec![vec![false; 5]; 5];
        for (i, row) in leq.iter_mut().enumerate() {
            row[i] = true;
        }
        for (a, b) in rel {
            leq[a][b] = true;
        }
        Lattice::from_leq((0..5).map(|i| i.to_string()).collect(), &leq).unwrap()
    }

    #[test]
    fn chain_basics() {
        let c = Lattice::chain(3);
        c.verify().unwrap();
        assert_eq!(c.covering_pairs(), vec![(0, 1), (1, 2)]);
        assert_eq!(c.meet_irreducibles(), vec![0, 1]);
        assert!(c.is_modular());
    }

    #[test]
    fn pentagon_is_not_modular() {
        let p = pentagon();
        p.verify().unwrap();
        assert!(!p.is_modular());
        assert_eq!(p.meet_irreducibles(), p.meet_irreducibles_by_meets());
    }

    #[test]
    fn rejects_non_lattices() {
        // two incomparable minimal elements
        let leq = vec![vec![true, false, true], vec![false, true, true], vec![false, false, true]];
        assert!(Lattice::from_leq(vec!["a".into(), "b".into(), "c".into()], &leq).is_err());
        // 2+2 bowtie has no joins
        let mut leq = vec![vec![false; 6]; 6];
        for (i, row) in leq.iter_mut().enumerate() {
            row[i] = true;
            row[5] = true;
        }
        leq[0] = vec![true; 6];
        for a in [1, 2] {
            for b in [3, 4] {
                leq[a][b] = true;
            }
        }
        assert!(Lattice::from_leq((0..6).map(|i| i.to_string()).collect(), &leq).is_err());
    }

    #[test]
    fn remove_bottom_of_chains() {
        assert_eq!(Lattice::chain(3).remove_bottom().unwrap().size(), 2);
        let one = Lattice::chain(2).remove_bottom().unwrap();
        assert_eq!(one.size(), 1);
        assert_eq!(one.bottom(), one.top());
        assert!(Lattice::chain(1).remove_bottom().is_err());
    }

    #[test]
    fn remove_bottom_requires_new_minimum() {
        let diamond = {
            let mut leq = vec![vec![false; 4]; 4];
            for (i, row) in leq.iter_mut().enumerate() {
                row[i] = true;
                row[3] = true;
            }
            leq[0] = vec![true; 4];
            Lattice::from_leq((0..4).map(|i| i.to_string()).collect(), &leq).unwrap()
        };
        assert!(matches!(diamond.remove_bottom(), Err(Error::NotALattice(_))));
    }
}
