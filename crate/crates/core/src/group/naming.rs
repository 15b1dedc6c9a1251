//! Display names for subgroups, recognized from order and element orders.

use super::{FiniteGroup, Subgroup};

fn is_power_of_two(n: usize) -> bool {
    n.is_power_of_two()
}

/// `e`, `C_n`, `C_2^2`, `D_n`, `Q_n` or `Dic_n` when the structure is
/// recognizable, `None` otherwise.
pub fn structure_name(g: &FiniteGroup, h: &Subgroup) -> Option<String> {
    let n = h.order();
    if n == 1 {
        return Some("e".into());
    }
    let orders: Vec<(usize, usize)> = h.members().iter().map(|x| (x, g.element_order(x))).collect();
    if orders.iter().any(|&(_, o)| o == n) {
        return Some(format!("C_{n}"));
    }
    if n == 4 {
        return Some("C_2^2".into());
    }
    if n % 2 != 0 {
        return None;
    }
    // dihedral: index-2 cyclic subgroup, every other element an involution
    let half = n / 2;
    if let Some(&(r, _)) = orders.iter().find(|&&(_, o)| o == half) {
        let rot = g.generate(&[r]);
        if orders.iter().all(|&(x, o)| rot.contains(x) || o == 2) {
            return Some(format!("D_{half}"));
        }
        // dicyclic: index-2 cyclic subgroup, every other element of order 4
        if n % 4 == 0 && orders.iter().all(|&(x, o)| rot.contains(x) || o == 4) {
            let m = n / 4;
            return Some(if is_power_of_two(m) { format!("Q_{n}") } else { format!("Dic_{m}") });
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{build_group, enumerate_subgroups, BuildOptions};

    fn names(s: &str) -> Vec<String> {
        let g = build_group(&s.parse().unwrap(), &BuildOptions::default()).unwrap();
        enumerate_subgroups(&g)
            .iter()
            .map(|h| structure_name(&g, h).unwrap_or_else(|| "?".into()))
            .collect()
    }

    #[test]
    fn dihedral_names() {
        let n = names("D:9");
        assert_eq!(n.iter().filter(|s| *s == "C_2").count(), 9);
        assert_eq!(n.iter().filter(|s| *s == "D_3").count(), 3);
        assert_eq!(n.last().unwrap(), "D_9");
    }

    #[test]
    fn quaternion_and_dicyclic() {
        assert_eq!(names("Q:8").last().unwrap(), "Q_8");
        assert_eq!(names("Dic:3").last().unwrap(), "Dic_3");
        assert_eq!(names("Q:16").iter().filter(|s| *s == "Q_8").count(), 2);
    }

    #[test]
    fn klein_and_unknown() {
        let n = names("A:4");
        assert_eq!(n.iter().filter(|s| *s == "C_2^2").count(), 1);
        assert_eq!(n.last().unwrap(), "?");
    }
}
