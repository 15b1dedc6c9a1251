use std::collections::HashMap;

use super::Lattice;
use crate::error::{Error, Result};

/// A group acting on a lattice by order automorphisms, recorded through
/// generator permutations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LatticeAction {
    generators: Vec<Vec<usize>>,
    orbit_of: Vec<usize>,
    orbits: Vec<Vec<usize>>,
    pair_orbits: Vec<Vec<(usize, usize)>>,
}

impl LatticeAction {
    /// Validates that every generator is a bijection preserving `≤`.
    /// Identity and repeated generators are dropped.
    pub fn new(lattice: &Lattice, generators: Vec<Vec<usize>>) -> Result<Self> {
        let n = lattice.size();
        let mut gens: Vec<Vec<usize>> = Vec::new();
        for p in generators {
            if p.len() != n {
                return Err(Error::InvalidAction(format!("permutation of length {} on {n} elements", p.len())));
            }
            let mut hit = vec![false; n];
            for &x in &p {
                if x >= n || std::mem::replace(&mut hit[x], true) {
                    return Err(Error::InvalidAction("not a permutation".into()));
                }
            }
            for a in 0..n {
                for b in 0..n {
                    if lattice.leq(a, b) != lattice.leq(p[a], p[b]) {
                        return Err(Error::InvalidAction(format!("does not preserve order at ({a}, {b})")));
                    }
                }
            }
            if p.iter().enumerate().any(|(i, &x)| i != x) && !gens.contains(&p) {
                gens.push(p);
            }
        }

        let mut orbit_of = vec![usize::MAX; n];
        let mut orbits = Vec::new();
        for start in 0..n {
            if orbit_of[start] != usize::MAX {
                continue;
            }
            let id = orbits.len();
            orbit_of[start] = id;
            let mut orbit = vec![start];
            let mut i = 0;
            while i < orbit.len() {
                for g in &gens {
                    let y = g[orbit[i]];
                    if orbit_of[y] == usize::MAX {
                        orbit_of[y] = id;
                        orbit.push(y);
                    }
                }
                i += 1;
            }
            orbit.sort_unstable();
            orbits.push(orbit);
        }

        let mut pair_orbits = Vec::new();
        let mut seen: HashMap<(usize, usize), usize> = HashMap::new();
        for a in 0..n {
            for b in lattice.up_set(a).iter().filter(|&b| b != a) {
                if seen.contains_key(&(a, b)) {
                    continue;
                }
                let id = pair_orbits.len();
                seen.insert((a, b), id);
                let mut orbit = vec![(a, b)];
                let mut i = 0;
                while i < orbit.len() {
                    let (x, y) = orbit[i];
                    for g in &gens {
                        let img = (g[x], g[y]);
                        if !seen.contains_key(&img) {
                            seen.insert(img, id);
                            orbit.push(img);
                        }
                    }
                    i += 1;
                }
                orbit.sort_unstable();
                pair_orbits.push(orbit);
            }
        }

        Ok(LatticeAction {
            generators: gens,
            orbit_of,
            orbits,
            pair_orbits,
        })
    }

    /// The trivial action.
    pub fn trivial(lattice: &Lattice) -> Self {
        Self::new(lattice, Vec::new()).expect("trivial action is valid")
    }

    pub fn generators(&self) -> &[Vec<usize>] {
        &self.generators
    }

    pub fn is_trivial(&self) -> bool {
        self.generators.is_empty()
    }

    /// Element orbits, each sorted, ordered by smallest member.
    pub fn orbits(&self) -> &[Vec<usize>] {
        &self.orbits
    }

    pub fn orbit_of(&self, a: usize) -> usize {
        self.orbit_of[a]
    }

    /// Orbits of strict pairs `a < b` under the simultaneous action.
    pub fn pair_orbits(&self) -> &[Vec<(usize, usize)>] {
        &self.pair_orbits
    }

    /// The action on the induced sub-lattice on `keep`, which every
    /// generator must map onto itself.
    pub fn restrict(&self, sub: &Lattice, keep: &[usize]) -> Result<Self> {
        let pos: HashMap<usize, usize> = keep.iter().enumerate().map(|(i, &a)| (a, i)).collect();
        let gens = self
            .generators
            .iter()
            .map(|g| {
                keep.iter()
                    .map(|&a| {
                        pos.get(&g[a])
                            .copied()
                            .ok_or_else(|| Error::InvalidAction("action does not preserve the sub-lattice".into()))
                    })
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(sub, gens)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn diamond() -> Lattice {
        let mut leq = vec![vec![false; 4]; 4];
        for (i, row) in leq.iter_mut().enumerate() {
            row[i] = true;
            row[3] = true;
        }
        leq[0] = vec![true; 4];
        Lattice::from_leq((0..4).map(|i| i.to_string()).collect(), &leq).unwrap()
    }

    #[test]
    fn swap_action_orbits() {
        let l = diamond();
        let a = LatticeAction::new(&l, vec![vec![0, 2, 1, 3]]).unwrap();
        assert_eq!(a.orbits(), &[vec![0], vec![1, 2], vec![3]]);
        // (0,1)~(0,2), (0,3), (1,3)~(2,3)
        assert_eq!(a.pair_orbits().len(), 3);
    }

    #[test]
    fn rejects_order_breaking_permutation() {
        let l = diamond();
        assert!(LatticeAction::new(&l, vec![vec![1, 0, 2, 3]]).is_err());
        assert!(LatticeAction::new(&l, vec![vec![0, 0, 2, 3]]).is_err());
    }

    #[test]
    fn identity_generators_dropped() {
        let l = diamond();
        let a = LatticeAction::new(&l, vec![vec![0, 1, 2, 3]]).unwrap();
        assert!(a.is_trivial());
        assert_eq!(a.pair_orbits().len(), 5);
    }
}
