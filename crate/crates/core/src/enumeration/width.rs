use std::collections::BTreeMap;

use serde::Serialize;

use super::{enumerate_all, TsLattice};
use crate::error::{Error, Result};
use crate::group::{build_group, BuildOptions, FiniteGroup, GroupSpec};
use crate::lattice::{Lattice, LatticeAction, SubgroupLattice};
use crate::transfer::minimal_generating_orbits;

/// Width of `G`: one generating edge `[H] → G` per conjugacy class of
/// meet-irreducible subgroups.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WidthReport {
    pub group: String,
    pub width: usize,
    /// Smallest lattice index in each class.
    pub classes: Vec<usize>,
    pub class_labels: Vec<String>,
    pub generating_edges: Vec<(usize, usize)>,
    pub formula_value: Option<usize>,
}

impl WidthReport {
    pub fn from_lattice(sub: &SubgroupLattice) -> Self {
        let l = &sub.lattice;
        let mut classes: Vec<usize> = l
            .meet_irreducibles()
            .into_iter()
            .filter(|&x| sub.action.orbits()[sub.action.orbit_of(x)][0] == x)
            .collect();
        classes.sort_unstable();
        WidthReport {
            group: sub.group.label().to_string(),
            width: classes.len(),
            class_labels: classes.iter().map(|&x| l.label(x).to_string()).collect(),
            generating_edges: classes.iter().map(|&x| (x, l.top())).collect(),
            classes,
            formula_value: None,
        }
    }
}

pub fn width(g: &FiniteGroup) -> WidthReport {
    WidthReport::from_lattice(&SubgroupLattice::new(g.clone()))
}

/// Builds the group and attaches the closed-form value when the family has one.
pub fn width_of_spec(spec: &GroupSpec, opts: &BuildOptions) -> Result<WidthReport> {
    let mut report = width(&build_group(spec, opts)?);
    report.formula_value = width_formula(spec).ok();
    Ok(report)
}

/// `(m, Σ i)` for `n = 2^m · p_1^{i_1} ⋯ p_k^{i_k}`.
fn two_adic_split(mut n: usize) -> (usize, usize) {
    let mut m = 0;
    while n % 2 == 0 {
        n /= 2;
        m += 1;
    }
    let mut rest = 0;
    let mut p = 3;
    while n > 1 {
        while n % p == 0 {
            n /= p;
            rest += 1;
        }
        p += 2;
    }
    (m, rest)
}

/// Closed forms for dihedral, quaternion and dicyclic groups:
/// `w(D_n) = 2m + 1 + Σ i`, `w(Q_{2^{m+2}}) = 2m + 2`, `w(Dic_n) = 2m + 2 + Σ i`.
pub fn width_formula(spec: &GroupSpec) -> Result<usize> {
    match *spec {
        GroupSpec::Dihedral(n) if n >= 2 => {
            let (m, rest) = two_adic_split(n);
            Ok(2 * m + 1 + rest)
        }
        GroupSpec::Quaternion(order) if order >= 8 && order.is_power_of_two() => {
            let m = order.trailing_zeros() as usize - 2;
            Ok(2 * m + 2)
        }
        GroupSpec::Dicyclic(n) if n >= 2 => {
            let (m, rest) = two_adic_split(n);
            Ok(2 * m + 2 + rest)
        }
        _ => Err(Error::NoFormula(spec.to_string())),
    }
}

/// Largest orbit-granular minimal generating set over all systems.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Complexity {
    pub complexity: usize,
    /// generating-set size → number of systems
    pub distribution: BTreeMap<usize, usize>,
}

pub fn complexity(g: &FiniteGroup) -> Result<Complexity> {
    let sub = SubgroupLattice::new(g.clone());
    let tsl = enumerate_all(&sub.lattice, &sub.action)?;
    Ok(complexity_of(&sub.lattice, &sub.action, &tsl))
}

pub fn complexity_of(l: &Lattice, a: &LatticeAction, tsl: &TsLattice) -> Complexity {
    let mut distribution = BTreeMap::new();
    for t in tsl.systems() {
        *distribution.entry(minimal_generating_orbits(l, a, t).len()).or_insert(0) += 1;
    }
    Complexity {
        complexity: distribution.keys().next_back().copied().unwrap_or(0),
        distribution,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::transfer::{minimal_generating_set, TransferSystem};

    fn spec(s: &str) -> GroupSpec {
        s.parse().unwrap()
    }

    #[test]
    fn formula_examples() {
        assert_eq!(width_formula(&spec("D:36")).unwrap(), 7);
        assert_eq!(width_formula(&spec("Q:8")).unwrap(), 4);
        assert_eq!(width_formula(&spec("Dic:18")).unwrap(), 6);
        assert!(matches!(width_formula(&spec("A:4")), Err(Error::NoFormula(_))));
    }

    #[test]
    fn q8_and_f8() {
        let q8 = width_of_spec(&spec("Q:8"), &BuildOptions::default()).unwrap();
        assert_eq!(q8.width, 4);
        assert_eq!(q8.formula_value, Some(4));
        assert_eq!(width_of_spec(&spec("F:8"), &BuildOptions::default()).unwrap().width, 3);
    }

    #[test]
    fn width_matches_greedy_minimal_generating_set() {
        for s in ["D:6", "Dic:3", "Q:16", "A:4", "F:5", "C:12", "D:9"] {
            let sub = SubgroupLattice::new(build_group(&spec(s), &BuildOptions::default()).unwrap());
            let (l, a) = (&sub.lattice, &sub.action);
            let complete = TransferSystem::complete(l, a);
            let report = WidthReport::from_lattice(&sub);
            assert_eq!(minimal_generating_orbits(l, a, &complete).len(), report.width, "{s}");
            let greedy = minimal_generating_set(l, a, &complete);
            // one edge per orbit of generators
            let orbits: std::collections::BTreeSet<usize> =
                greedy.edges().iter().map(|&(k, _)| a.orbit_of(k)).collect();
            assert_eq!(orbits.len(), report.width, "{s}");
        }
    }

    #[test]
    fn complexity_of_small_cyclics() {
        let c5 = build_group(&spec("C:5"), &BuildOptions::default()).unwrap();
        assert_eq!(complexity(&c5).unwrap().complexity, 1);
        let c9 = build_group(&spec("C:9"), &BuildOptions::default()).unwrap();
        let c = complexity(&c9).unwrap();
        assert_eq!(c.complexity, 2);
        assert_eq!(c.distribution.values().sum::<usize>(), 5);
    }

    /// Exhaustive over all removal orders on the 3-chain: no minimal generating
    /// set of any of the 5 systems has more than 2 edges.
    #[test]
    fn cp2_complexity_over_all_removal_orders() {
        let sub = SubgroupLattice::new(build_group(&spec("C:9"), &BuildOptions::default()).unwrap());
        let (l, a) = (&sub.lattice, &sub.action);
        let tsl = enumerate_all(l, a).unwrap();
        let mut best = 0;
        for t in tsl.systems() {
            let edges = t.edges();
            // every subset that generates t and is irredundant
            for mask in 0u32..1 << edges.len() {
                let s: Vec<_> = (0..edges.len()).filter(|i| mask >> i & 1 == 1).map(|i| edges[i]).collect();
                let gen = |es: &[(usize, usize)]| crate::transfer::generate(l, a, &es.iter().copied().collect()).unwrap();
                if gen(&s) != *t {
                    continue;
                }
                let irredundant = (0..s.len()).all(|i| {
                    let mut r = s.clone();
                    r.remove(i);
                    gen(&r) != *t
                });
                if irredundant {
                    best = best.max(s.len());
                }
            }
        }
        assert_eq!(best, 2);
        assert_eq!(complexity_of(l, a, &tsl).complexity, best);
    }
}
