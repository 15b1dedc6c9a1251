use super::*;
use crate::group::{build_group, BuildOptions};
use crate::lattice::SubgroupLattice;

fn sub(s: &str) -> SubgroupLattice {
    SubgroupLattice::new(build_group(&s.parse().unwrap(), &BuildOptions::default()).unwrap())
}

fn count(s: &str) -> usize {
    let s = sub(s);
    enumerate_all(&s.lattice, &s.action).unwrap().len()
}

#[test]
fn small_counts() {
    assert_eq!(count("C:1"), 1);
    assert_eq!(count("C:2"), 2);
    assert_eq!(count("C:9"), 5);
    assert_eq!(count("D:5"), 9);
    assert_eq!(count("D:3"), 9);
    assert_eq!(count("C:15"), 10);
}

#[test]
fn matches_the_oracle() {
    for g in ["C:1", "C:2", "C:4", "C:8", "C:6", "C:7", "Q:8", "D:3", "C:32"] {
        let s = sub(g);
        let (l, a) = (&s.lattice, &s.action);
        let fast = enumerate_all(l, a).unwrap();
        let slow = brute_force_oracle(l, a).unwrap();
        assert_eq!(fast.systems(), slow.systems(), "{g}");
        assert_eq!(fast.hasse_edges(), slow.hasse_edges(), "{g}");
        assert_eq!(fast.decorations(), slow.decorations(), "{g}");
    }
}

#[test]
fn covers_agree_with_pairwise_comparison() {
    for g in ["D:5", "A:4", "Dic:3", "D:9", "F:5"] {
        let s = sub(g);
        let t = enumerate_all(&s.lattice, &s.action).unwrap();
        assert_eq!(t.hasse_edges(), pairwise_covers(t.systems()), "{g}");
    }
}

#[test]
fn trivial_and_complete_are_extremes() {
    let s = sub("A:4");
    let (l, a) = (&s.lattice, &s.action);
    let t = enumerate_all(l, a).unwrap();
    assert_eq!(t.system(t.trivial_index()), &TransferSystem::trivial(l, a));
    assert_eq!(t.system(t.complete_index()), &TransferSystem::complete(l, a));
    for u in t.systems() {
        assert!(t.system(0).is_subset(u) && u.is_subset(t.system(t.complete_index())));
    }
}

#[test]
fn caps() {
    let s = sub("D:9");
    let opts = EnumerateOptions { max_lattice_size: 10 };
    assert!(matches!(
        enumerate_with(&s.lattice, &s.action, &opts),
        Err(Error::EnumerationCap { size: 16, cap: 10 })
    ));
    assert!(matches!(brute_force_oracle(&s.lattice, &s.action), Err(Error::EnumerationCap { .. })));
}

#[test]
fn path_lengths_on_small_cyclics() {
    let s = sub("C:9");
    let st = hasse_stats(&enumerate_all(&s.lattice, &s.action).unwrap());
    assert_eq!((st.count, st.hasse_edge_count, st.shortest_path_length, st.shortest_path_count), (5, 5, 2, 1));
    let s = sub("C:15");
    let st = hasse_stats(&enumerate_all(&s.lattice, &s.action).unwrap());
    assert_eq!((st.shortest_path_length, st.shortest_path_count), (4, 2));
}

#[test]
fn bisaturated_audit_degenerate_and_chain() {
    let s = sub("C:1");
    let audit = audit_bisaturated_paths(&enumerate_all(&s.lattice, &s.action).unwrap());
    assert_eq!(audit.shortest_path_length, 0);
    assert_eq!(audit.witness_all, vec![0]);

    // C_{p^2}: the only shortest path passes trivial, {C_p → G}, complete,
    // all bisaturated; the longer path through {e → C_p} gains nothing
    let s = sub("C:9");
    let audit = audit_bisaturated_paths(&enumerate_all(&s.lattice, &s.action).unwrap());
    assert_eq!(audit.max_over_shortest_paths, 3);
    assert_eq!(audit.max_over_all_paths, 3);
    assert!(audit.agree);
}

#[test]
fn lsp_audit() {
    let s = sub("C:9");
    let (l, a) = (&s.lattice, &s.action);
    let t = enumerate_all(l, a).unwrap();
    let audit = audit_lsp_two_component(&t, l, a).unwrap();
    assert!(audit.hypothesis_matches.contains(&t.trivial_index()));
    assert!(!audit.hypothesis_matches.contains(&t.complete_index()));
    assert!(audit.counterexamples.is_empty());

    let s = sub("D:5");
    let t = enumerate_all(&s.lattice, &s.action).unwrap();
    assert!(audit_lsp_two_component(&t, &s.lattice, &s.action).unwrap().counterexamples.is_empty());
}

#[test]
fn removing_the_bottom() {
    let s = sub("C:9");
    assert_eq!(restricted_count_bijection(&s.lattice, &s.action).unwrap(), (2, 2));
    let chain = Lattice::chain(2);
    assert_eq!(restricted_count_bijection(&chain, &LatticeAction::trivial(&chain)).unwrap(), (1, 1));
    let s = sub("Q:8");
    let (x, y) = restricted_count_bijection(&s.lattice, &s.action).unwrap();
    assert_eq!(x, y);
    let s = sub("D:3");
    assert!(restricted_count_bijection(&s.lattice, &s.action).is_err());
}

#[test]
fn cache_round_trip() {
    let dir = std::env::temp_dir().join(format!("translat-cache-test-{}", std::process::id()));
    let s = sub("D:5");
    let (l, a) = (&s.lattice, &s.action);
    assert!(cache::load(&dir, "D:5", l, a).unwrap_or(None).is_none());
    let fresh = cache::load_or_enumerate(Some(&dir), "D:5", l, a).unwrap();
    let cached = cache::load(&dir, "D:5", l, a).unwrap().unwrap();
    assert_eq!(fresh.systems(), cached.systems());
    assert_eq!(fresh.hasse_edges(), cached.hasse_edges());
    assert_eq!(fresh.decorations(), cached.decorations());

    // the same file cannot be read against another lattice
    let other = sub("C:15");
    let path = cache::path_for(&dir, "D:5");
    std::fs::copy(&path, cache::path_for(&dir, "C:15")).unwrap();
    assert!(matches!(cache::load(&dir, "C:15", &other.lattice, &other.action), Err(Error::Cache(_))));
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn lsp_through_the_enumeration() {
    let s = sub("C:9");
    let (l, a) = (&s.lattice, &s.action);
    let t = enumerate_all(l, a).unwrap();
    for i in 0..t.len() {
        assert_eq!(t.is_lsp(l, a, t.system(i)).unwrap(), t.decoration(i).lsp);
    }
    let other = sub("C:6");
    let foreign = TransferSystem::trivial(&other.lattice, &other.action);
    assert!(t.is_lsp(l, a, &foreign).is_err());
}
