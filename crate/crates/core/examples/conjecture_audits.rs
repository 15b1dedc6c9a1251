//! Both conjecture audits on a group, with every counterexample spelled out.
//!
//!     cargo run --release --example conjecture_audits -- D:9

use translat::enumeration::{audit_bisaturated_paths, audit_lsp_two_component, enumerate_all};
use translat::group::{build_group, BuildOptions};
use translat::lattice::SubgroupLattice;
use translat::transfer::{extend, minimal_generating_set};

fn main() -> translat::Result<()> {
    let spec = std::env::args().nth(1).unwrap_or_else(|| "A:4".into());
    let sub = SubgroupLattice::new(build_group(&spec.parse()?, &BuildOptions::default())?);
    let (l, a) = (&sub.lattice, &sub.action);
    let tsl = enumerate_all(l, a)?;
    let name = |edges: &[(usize, usize)]| -> String {
        edges.iter().map(|&(k, h)| format!("{}->{}", l.label(k), l.label(h))).collect::<Vec<_>>().join(", ")
    };

    let b = audit_bisaturated_paths(&tsl);
    println!(
        "shortest path {} ({} of them); bisaturated systems on a path: {} best, {} best among shortest",
        b.shortest_path_length, b.shortest_path_count, b.max_over_all_paths, b.max_over_shortest_paths
    );
    println!("  witness: {:?}", b.witness_shortest);

    let audit = audit_lsp_two_component(&tsl, l, a)?;
    println!("{} systems meet the two-component hypothesis", audit.hypothesis_matches.len());
    for c in &audit.counterexamples {
        let t = tsl.system(c.system);
        let u = extend(l, a, t, &[(l.bottom(), l.top())]);
        let missing: Vec<(usize, usize)> = (0..l.size())
            .flat_map(|x| (0..l.size()).map(move |y| (x, y)))
            .filter(|&(x, y)| x != y && l.leq(x, y) && !u.contains(x, y))
            .collect();
        println!("  [{}] lsp={} compatible={}", name(minimal_generating_set(l, a, t).edges()), c.is_lsp, c.compatible_with_connected);
        let mut lacks: Vec<String> = missing.iter().map(|&e| name(&[e])).collect();
        lacks.sort();
        lacks.dedup();
        println!("      T + e->G still lacks {}", lacks.join(", "));
    }
    Ok(())
}
