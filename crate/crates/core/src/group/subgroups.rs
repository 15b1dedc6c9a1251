use std::collections::HashMap;

use super::{FiniteGroup, Subgroup};
use crate::bitset::BitSet;

/// All subgroups of `g`, sorted by (order, member list).
///
/// Seeds with the cyclic subgroups, then joins every known subgroup with
/// every cyclic subgroup until no new subgroup appears.
pub fn enumerate_subgroups(g: &FiniteGroup) -> Vec<Subgroup> {
    let mut found: Vec<(Subgroup, Vec<usize>)> = Vec::new();
    let mut index: HashMap<BitSet, usize> = HashMap::new();
    let mut add = |s: Subgroup, gens: Vec<usize>, found: &mut Vec<(Subgroup, Vec<usize>)>| {
        if !index.contains_key(s.members()) {
            index.insert(s.members().clone(), found.len());
            found.push((s, gens));
        }
    };

    for x in 0..g.order() {
        let gens = if x == g.identity() { vec![] } else { vec![x] };
        add(g.generate(&gens), gens, &mut found);
    }
    let cyclic: Vec<usize> = found.iter().filter_map(|(_, gens)| gens.first().copied()).collect();

    let mut i = 0;
    while i < found.len() {
        for &c in &cyclic {
            if found[i].0.contains(c) {
                continue;
            }
            let mut gens = found[i].1.clone();
            gens.push(c);
            let joined = g.generate(&gens);
            add(joined, gens, &mut found);
        }
        i += 1;
    }

    let mut subs: Vec<Subgroup> = found.into_iter().map(|(s, _)| s).collect();
    subs.sort();
    subs
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{build_group, BuildOptions};

    fn subs(s: &str) -> Vec<Subgroup> {
        enumerate_subgroups(&build_group(&s.parse().unwrap(), &BuildOptions::default()).unwrap())
    }

    #[test]
    fn small_counts() {
        assert_eq!(subs("Q:8").len(), 6);
        assert_eq!(subs("C:7").len(), 2);
        assert_eq!(subs("C:1").len(), 1);
        assert_eq!(subs("D:3").len(), 6);
    }

    /// Oracle: the subgroup generated by every subset of elements.
    #[test]
    fn a4_matches_all_subsets_closure() {
        let g = build_group(&"A:4".parse().unwrap(), &BuildOptions::default()).unwrap();
        let mut brute: Vec<BitSet> = (0u32..1 << 12)
            .map(|mask| {
                // naive closure: repeatedly multiply all pairs
                let mut set = BitSet::from_indices(12, (0..12).filter(|&i| mask >> i & 1 == 1));
                set.insert(g.identity());
                loop {
                    let mut next = set.clone();
                    for a in set.iter() {
                        for b in set.iter() {
                            next.insert(g.mul(a, b));
                        }
                    }
                    if next == set {
                        break set;
                    }
                    set = next;
                }
            })
            .collect();
        brute.sort();
        brute.dedup();
        assert_eq!(brute.len(), 10);
        let mut ours: Vec<BitSet> = enumerate_subgroups(&g).iter().map(|s| s.members().clone()).collect();
        ours.sort();
        assert_eq!(ours, brute);
    }

    #[test]
    fn canonical_and_closed() {
        let g = build_group(&"Dic:6".parse().unwrap(), &BuildOptions::default()).unwrap();
        let list = enumerate_subgroups(&g);
        assert!(list.windows(2).all(|w| w[0] < w[1]));
        assert_eq!(list[0].order(), 1);
        assert_eq!(list.last().unwrap().order(), g.order());
        for s in &list {
            assert!(g.is_subgroup(s.members()));
            assert_eq!(g.order() % s.order(), 0);
        }
    }
}
