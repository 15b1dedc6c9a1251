//! Counts, shortest trivial→complete paths and decoration tallies for the
//! groups whose Hasse diagrams are drawn in the paper's figures.
//!
//!     cargo run --release --example hasse_statistics

use translat::enumeration::{audit_bisaturated_paths, audit_lsp_two_component, enumerate_all, hasse_stats};
use translat::group::{build_group, BuildOptions};
use translat::lattice::SubgroupLattice;

fn main() -> translat::Result<()> {
    println!("{:<6} {:>5} {:>5} {:>4}/{:<4} {:>5} {:>4} {:>4} {:>4} {:>4} {:>4}", "group", "subs", "ts", "path", "undir", "#min", "sat", "cos", "lsp", "con", "bis");
    for spec in ["C:9", "C:15", "D:5", "A:4", "D:9", "Dic:3", "F:5"] {
        let sub = SubgroupLattice::new(build_group(&spec.parse()?, &BuildOptions::default())?);
        let tsl = enumerate_all(&sub.lattice, &sub.action)?;
        let st = hasse_stats(&tsl);
        let d = st.decoration_counts;
        println!(
            "{:<6} {:>5} {:>5} {:>4}/{:<4} {:>5} {:>4} {:>4} {:>4} {:>4} {:>4}",
            spec,
            sub.lattice.size(),
            st.count,
            st.shortest_path_length,
            st.undirected_shortest_path_length,
            st.shortest_path_count,
            d.saturated,
            d.cosaturated,
            d.lsp,
            d.connected,
            st.bisaturated_count
        );
        let b = audit_bisaturated_paths(&tsl);
        let lsp = audit_lsp_two_component(&tsl, &sub.lattice, &sub.action)?;
        println!(
            "       bisaturated on a path: best {} overall, {} on shortest paths; two-component systems {} ({} counterexamples)",
            b.max_over_all_paths,
            b.max_over_shortest_paths,
            lsp.hypothesis_matches.len(),
            lsp.counterexamples.len()
        );
    }
    Ok(())
}
