use super::{Lattice, LatticeAction};
use crate::bitset::BitSet;
use crate::group::{enumerate_subgroups, naming::structure_name, ConjugationAction, FiniteGroup, Subgroup};

/// `Sub(G)` together with the group data it came from.
#[derive(Clone, Debug)]
pub struct SubgroupLattice {
    pub group: FiniteGroup,
    pub subgroups: Vec<Subgroup>,
    pub conjugation: ConjugationAction,
    pub lattice: Lattice,
    pub action: LatticeAction,
}

impl SubgroupLattice {
    pub fn new(group: FiniteGroup) -> Self {
        let subgroups = enumerate_subgroups(&group);
        let conjugation = group.conjugation_action(&subgroups);
        let n = subgroups.len();
        let up = subgroups
            .iter()
            .map(|a| BitSet::from_indices(n, (0..n).filter(|&b| a.is_subgroup_of(&subgroups[b]))))
            .collect();
        let labels = subgroups
            .iter()
            .enumerate()
            .map(|(i, h)| {
                if i + 1 == n && n > 1 {
                    group.label().to_string()
                } else {
                    structure_name(&group, h).unwrap_or_else(|| format!("H{}#{i}", h.order()))
                }
            })
            .collect();
        let lattice = Lattice::from_up_sets(labels, up).expect("subgroup posets are lattices");
        let generators = group
            .generators()
            .iter()
            .map(|&x| conjugation.perms[x].clone())
            .collect();
        let action = LatticeAction::new(&lattice, generators).expect("conjugation preserves inclusion");
        SubgroupLattice {
            group,
            subgroups,
            conjugation,
            lattice,
            action,
        }
    }
}

/// `Sub(G)` with meet = intersection, join = generated subgroup, acted on by conjugation.
pub fn from_subgroups(g: &FiniteGroup) -> (Lattice, LatticeAction) {
    let s = SubgroupLattice::new(g.clone());
    (s.lattice, s.action)
}
